import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from phm.coinvariants import GradedSubspaceFamily
from phm.fixtures import f1, f2, f3
from phm.homspace import (A_LINEAR, B_LINEAR, COLINEAR, LIE_LINEAR, PA_HOM, TRANSFER, check_morphism, hom_space)
from phm.linalg import Matrix, span
from phm.poisson import check_poisson_hopf_module, regular_module
from phm.relative import (IllDefined, NotTrivialComodule, TrivialBModule, acoinvariant_module, base_as_module,
                          check_trivial_module, direct_sum_trivial, extract_transfer, induced_morphism,
                          relative_tensor, trivial_induction)

from conftest import built


def _sub_algebra_module(A, basis):
    """span(basis) acting on itself by multiplication, trivial coaction over the trivial group."""
    B = span(basis, A.dims[0])
    emb = B.embedding()
    coords = B.coordinate_map()
    act = tuple(coords @ A.algebra.left(0, b) @ emb for b in B.basis)
    return TrivialBModule((B.dim,), GradedSubspaceFamily((B,)), (act,), {(0, 0): Matrix.identity(B.dim)}, None)


def test_balanced_tensor_dimensions():
    for name, want in (("F1", (2, 2)), ("F2", (4,)), ("F3", (4, 4))):
        fx = built(name)
        T = relative_tensor(fx.A, acoinvariant_module(fx.M, fx.A, fx.H), fx.H)
        assert T.dims == want
        assert T.certificate.ok


def test_every_induced_structure_has_a_certificate(fx):
    T = relative_tensor(fx.A, acoinvariant_module(fx.M, fx.A, fx.H), fx.H)
    laws = {c.law for c in T.certificate.checks}
    assert laws == {"well_defined.action", "well_defined.lie", "well_defined.coaction"}
    assert check_poisson_hopf_module(T.module, fx.A, fx.H).ok


def test_non_central_subalgebra_is_refused():
    # span{1, x} is a subalgebra of F2's A, but {y, x} = -xy so it is not central
    fx = f2()
    N = _sub_algebra_module(fx.A, [(1, 0, 0, 0), (0, 1, 0, 0)])
    assert check_trivial_module(N, fx.A, fx.H).ok
    with pytest.raises(IllDefined, match="lie is not well defined") as info:
        relative_tensor(fx.A, N, fx.H)
    assert info.value.degree == "e" and any(info.value.witness)


def test_central_subalgebra_is_accepted():
    fx = f2()
    N = _sub_algebra_module(fx.A, [(1, 0, 0, 0), (0, 0, 0, 1)])
    T = relative_tensor(fx.A, N, fx.H)
    assert T.dims == (4,) and T.certificate.ok


def test_base_as_module_over_f1():
    fx = f1()
    N = base_as_module(fx.A, fx.H)
    assert N.dims == (1, 1)
    assert check_trivial_module(N, fx.A, fx.H).ok
    T = trivial_induction(N, fx.A, fx.H)
    assert T.dims == fx.A.dims
    assert check_poisson_hopf_module(T.module, fx.A, fx.H).ok


def test_two_copies_of_base_over_f1():
    fx = f1()
    N = base_as_module(fx.A, fx.H, copies=2)
    T = trivial_induction(N, fx.A, fx.H)
    assert T.dims == (4, 4)
    assert check_poisson_hopf_module(T.module, fx.A, fx.H).ok


def test_zero_module_induces_zero():
    fx = f1()
    B = base_as_module(fx.A, fx.H)
    Z = TrivialBModule((0, 0), B.base, tuple((Matrix.zeros(0, 0),) for _ in range(2)),
                       {k: Matrix.zeros(0, 0) for k in B.transfer}, None)
    assert trivial_induction(Z, fx.A, fx.H).dims == (0, 0)


def test_transfer_rejects_nontrivial_coaction():
    fx = f1()
    with pytest.raises(NotTrivialComodule):
        extract_transfer(fx.M.coaction, fx.M.dims, fx.H)


def test_trivial_induction_rejects_broken_module():
    fx = f1()
    N = base_as_module(fx.A, fx.H)
    act = tuple(tuple(op.scale(2) for op in ops) for ops in N.act)
    bad = TrivialBModule(N.dims, N.base, act, N.transfer, None)
    assert not check_trivial_module(bad, fx.A, fx.H).ok
    with pytest.raises(ValueError, match="b_module"):
        trivial_induction(bad, fx.A, fx.H)


def test_induced_identity_is_identity(fx):
    N = acoinvariant_module(fx.M, fx.A, fx.H)
    T = relative_tensor(fx.A, N, fx.H)
    ident = tuple(Matrix.identity(d) for d in N.dims)
    out = induced_morphism(ident, T, T, fx.H)
    assert all(m == Matrix.identity(d) for m, d in zip(out, T.dims))


# -- hom spaces ---------------------------------------------------------------------

def test_f1_endomorphisms_are_scalars():
    fx = f1()
    H = hom_space(fx.M, fx.M, (COLINEAR, A_LINEAR), fx.H)
    assert H.dim == 1
    ident = tuple(Matrix.identity(2) for _ in range(2))
    assert H.contains(ident)


def test_unconstrained_hom_space(fx):
    H = hom_space(fx.M, fx.M, (), fx.H)
    assert H.dim == sum(d * d for d in fx.M.dims)


def test_f2_lie_and_a_linear_maps_contain_identity():
    fx = f2()
    H = hom_space(fx.M, fx.M, (LIE_LINEAR, A_LINEAR), fx.H)
    assert H.dim >= 1 and H.contains((Matrix.identity(4),))


def test_hom_space_basis_vectors_pass_the_direct_check(fx):
    H = hom_space(fx.M, fx.M, PA_HOM, fx.H)
    for f in H.basis():
        assert check_morphism(f, fx.M, fx.M, PA_HOM, fx.H).ok


def test_trivial_module_hom_space():
    fx = f1()
    N = base_as_module(fx.A, fx.H)
    MA = acoinvariant_module(fx.M, fx.A, fx.H)
    assert hom_space(N, MA, (B_LINEAR, TRANSFER), fx.H).dim == 1


def test_unknown_kind_is_rejected():
    fx = f1()
    with pytest.raises(ValueError, match="unknown"):
        hom_space(fx.M, fx.M, ("sideways",), fx.H)


@given(st.sampled_from(["F1", "F2", "F3"]), st.integers(-3, 3))
@settings(max_examples=12, deadline=None)
def test_hom_spaces_are_closed_under_scaling(name, c):
    fx = built(name)
    H = hom_space(fx.M, fx.M, PA_HOM, fx.H)
    for f in H.basis():
        assert H.contains(tuple(m.scale(c) for m in f))


def test_non_morphism_gets_a_witness():
    fx = f1()
    # swapping 1 and x is multiplication by x: A-linear but not colinear
    swap = tuple(Matrix([[0, 1], [1, 0]]) for _ in range(2))
    rep = check_morphism(swap, fx.M, fx.M, (COLINEAR, A_LINEAR), fx.H)
    assert rep.failed_laws() == {"morphism.H-colinear"}
    assert rep.failures()[0].witness is not None


def test_direct_sum_of_trivial_modules_adds_dimensions():
    fx = f3()
    N = base_as_module(fx.A, fx.H)
    S = direct_sum_trivial([N, N, N])
    assert S.dims == (3, 3)
    assert check_trivial_module(S, fx.A, fx.H).ok


def test_regular_module_acoinvariants_are_base():
    fx = f2()
    N = acoinvariant_module(regular_module(fx.A), fx.A, fx.H)
    assert N.dims == (2,)
