from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from phm.fixtures import (_f1_parts, _f2_parts, c2_hopf, f1, f2, f3, f4, mutant_leibniz, mutant_noncolinear_phi,
                          mutant_zeroed_counit, r_algebra_ops, r_bracket_ops)
from phm.hopf import AlgebraFamily, build_group_algebra, GradedSpace, ShapeError, trivial_group
from phm.linalg import Matrix
from phm.poisson import (ComodulePoissonAlgebra, PoissonAlgebraFamily, certify_comodule_poisson_algebra, check_comodule,
                         check_phi, check_poisson_family, check_poisson_hopf_module, direct_sum, regular_module,
                         tensor_with_H, trivial_coaction, zero_module)
from phm.report import FLAG

X, Y, XY = (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)


def r_family(xy):
    g = trivial_group()
    alg = AlgebraFamily(GradedSpace(g, (4,)), (r_algebra_ops(),), ((1, 0, 0, 0),))
    return PoissonAlgebraFamily(alg, (r_bracket_ops(xy),))


def test_zero_bracket_is_poisson():
    assert check_poisson_family(f1().A.poisson).ok


def test_f2_bracket_is_poisson():
    fx = f2()
    assert check_poisson_family(fx.A.poisson).ok
    # {x, xy} = x{x, y} = x.xy = 0
    assert fx.A.poisson.bracket_of(0, X, XY) == (0, 0, 0, 0)
    assert fx.A.poisson.bracket_of(0, Y, X) == tuple(-c for c in XY)


def test_bracket_one_breaks_leibniz():
    fx = mutant_leibniz()
    rep = check_poisson_family(fx.A.poisson)
    assert rep.failed_laws(kind=None) == {"poisson.leibniz"}
    assert rep.failures()[0].witness["input"] == [1, 1, 2]
    # the triple (x, y, y) fails as well: {x, y.y} = 0 but 2y{x, y} = 2y
    P, alg = fx.A.poisson, fx.A.algebra
    lhs = P.bracket_of(0, X, alg.product(0, Y, Y))
    rhs = tuple(2 * c for c in alg.product(0, Y, P.bracket_of(0, X, Y)))
    assert lhs == (0, 0, 0, 0) and rhs == (0, 0, 2, 0)


@given(st.lists(st.integers(-2, 2).map(Fraction), min_size=4, max_size=4))
@settings(max_examples=40, deadline=None)
def test_leibniz_holds_exactly_for_multiples_of_xy(v):
    rep = check_poisson_family(r_family(v))
    assert rep.passed("poisson.antisymmetry") and rep.passed("poisson.jacobi")
    assert rep.passed("poisson.leibniz") == (v[0] == v[1] == v[2] == 0)


def test_regular_and_trivial_coactions_are_comodules():
    h = c2_hopf()
    assert check_comodule(dict(h.comult), h.dims, h, "H").ok
    assert check_comodule(trivial_coaction((3, 3), h), (3, 3), h, "N").ok


def test_zeroed_counit_coaction():
    fx = mutant_zeroed_counit()
    assert check_poisson_hopf_module(fx.M, fx.A, fx.H).failed_laws(kind=None) == {"coaction.counit"}


@pytest.mark.parametrize("build", [f1, f2, f3, f4])
def test_fixture_algebras_and_modules(build):
    fx = build()
    assert certify_comodule_poisson_algebra(fx.A, fx.H).ok
    assert check_poisson_hopf_module(fx.M, fx.A, fx.H).ok


def test_f2_with_trivial_coaction_satisfies_bracket_compatibility():
    fx = f2()
    assert certify_comodule_poisson_algebra(fx.A, fx.H).passed("coaction.bracket")


def test_f4_bracket_compatibility_is_not_vacuous():
    fx = f4()
    rep = certify_comodule_poisson_algebra(fx.A, fx.H)
    assert rep.ok
    assert any(not op.is_zero() for op in fx.A.bracket[0])
    assert all(rho.nrows == 16 and rho.ncols == 8 for rho in fx.A.coaction.values())


def test_zero_lie_action_breaks_2a_only():
    fx = f2()
    zero = tuple(tuple(Matrix.zeros(4, 4) for _ in range(4)) for _ in range(1))
    rep = check_poisson_hopf_module(replace(fx.M, lie=zero), fx.A, fx.H)
    assert rep.passed("lie_module.bracket")
    assert rep.failed_laws() == {"poisson_module.2a"}
    # first failing triple (a, b, m) = (x, y, 1): x <> (y.1) = 0 but {x, y}.1 = xy
    w = rep.failures()[0].witness
    assert w["input"] == [1, 2, 0] and w["rhs"] == list(XY)


def test_phi_identity_on_f1():
    fx = f1()
    rep = check_phi(fx.phi, fx.H, fx.A)
    assert rep.ok and rep.passed("phi.multiplicative")


def test_phi_on_f4_is_central_and_multiplicative():
    fx = f4()
    rep = check_phi(fx.phi, fx.H, fx.A)
    assert rep.ok and rep.passed("phi.multiplicative")


def test_noncolinear_phi():
    fx = mutant_noncolinear_phi()
    assert check_phi(fx.phi, fx.H, fx.A).failed_laws(kind=None) == {"phi.colinear"}


def test_phi_shape_is_checked():
    fx = f1()
    with pytest.raises(ShapeError):
        check_phi(replace(fx.phi, maps=(Matrix.identity(3),) * 2), fx.H, fx.A)


def test_non_multiplicative_phi_is_only_a_flag():
    # phi(x) = 2x on F1 is colinear, unital and central but phi(x)phi(x) = 4 != phi(1)
    fx = f1()
    scale = Matrix([[1, 0], [0, 2]])
    rep = check_phi(replace(fx.phi, maps=(scale, scale)), fx.H, fx.A)
    assert rep.ok
    assert rep.failed_laws(kind=FLAG) == {"phi.multiplicative"}


def test_tensor_with_H_on_f1_has_eight_dims_per_degree():
    fx = f1()
    NH = tensor_with_H(fx.M, fx.A, fx.H)
    assert NH.dims == (8, 8)
    assert check_poisson_hopf_module(NH, fx.A, fx.H, "NxH").ok


def test_tensor_with_one_dimensional_H():
    h = build_group_algebra(1)
    zero = ((Matrix.zeros(1, 1),),)
    A = ComodulePoissonAlgebra(PoissonAlgebraFamily(h.algebra, zero), dict(h.comult))
    N = regular_module(A)
    NH = tensor_with_H(N, A, h)
    assert NH.dims == N.dims == (1,)
    assert check_poisson_hopf_module(NH, A, h).ok


@given(st.sampled_from(["F1", "F2", "F3", "F4", "k3"]))
@settings(max_examples=10, deadline=None)
def test_tensor_with_H_always_certifies(name):
    if name == "k3":
        h, A, _ = _f1_parts(3)
        M = regular_module(A)
    else:
        fx = {"F1": f1, "F2": f2, "F3": f3, "F4": f4}[name]()
        h, A, M = fx.H, fx.A, fx.M
    assert check_poisson_hopf_module(tensor_with_H(M, A, h), A, h).ok


@given(st.integers(-3, 3).filter(bool), st.integers(1, 2))
@settings(max_examples=12, deadline=None)
def test_scaled_bracket_families_certify(c, copies):
    h, A, phi = _f2_parts((0, 0, 0, c))
    M = regular_module(A)
    for _ in range(copies - 1):
        M = direct_sum(M, regular_module(A), h)
    assert certify_comodule_poisson_algebra(A, h).ok
    assert check_poisson_hopf_module(M, A, h).ok
    assert check_phi(phi, h, A).ok


def test_zero_module_is_a_module():
    fx = f4()
    Z = zero_module(fx.A, fx.H)
    assert Z.dims == (0, 0)
    assert check_poisson_hopf_module(Z, fx.A, fx.H).ok


def test_wrong_bracket_shape_is_a_shape_error():
    P = r_family(XY)
    bad = replace(P, bracket=((Matrix.identity(4),),))
    with pytest.raises(ShapeError):
        check_poisson_family(bad)
