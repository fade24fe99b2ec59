import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from phm import oracle
from phm.coinvariants import (acoinvariants, annihilator, base_algebra, check_substructures, coinvariants,
                              coinvariants_of, poisson_annihilator, poisson_center)
from phm.fixtures import FIXTURES, f1, f2, f4
from phm.linalg import Matrix, Subspace, intersect, span
from phm.poisson import regular_module, trivial_coaction

from conftest import built

# Dimensions recomputed by the dense oracle and frozen here.
FROZEN = {
    "F1": {"M_coH": [1, 1], "M_A": [2, 2], "M_AcoH": [1, 1], "A_coH": [1, 1], "A_A": [2, 2], "B": [1, 1],
           "tensor": [2, 2], "M": [2, 2]},
    "F2": {"M_coH": [4], "M_A": [2], "M_AcoH": [2], "A_coH": [4], "A_A": [2], "B": [2], "tensor": [4], "M": [4]},
    "F3": {"M_coH": [2, 2], "M_A": [4, 4], "M_AcoH": [2, 2], "A_coH": [1, 1], "A_A": [2, 2], "B": [1, 1],
           "tensor": [4, 4], "M": [4, 4]},
    "F4": {"M_coH": [4, 4], "M_A": [4, 4], "M_AcoH": [2, 2], "A_coH": [4, 4], "A_A": [4, 4], "B": [2, 2],
           "tensor": [8, 8], "M": [8, 8]},
}


def e(n, *idx):
    return tuple(1 if i in idx else 0 for i in range(n))


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_oracle_reproduces_frozen_table(name):
    fx = built(name)
    assert oracle.expected_dimensions(fx.A, fx.M, fx.H) == FROZEN[name]


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_fixture_expected_block_matches_frozen_table(name):
    exp = built(name).expected
    assert {k: exp[k] for k in FROZEN[name]} == FROZEN[name]


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_main_build_matches_frozen_table(name):
    fx = built(name)
    h, want = fx.H, FROZEN[name]
    assert list(coinvariants(fx.M, h).dims) == want["M_coH"]
    assert list(poisson_annihilator(fx.M).dims) == want["M_A"]
    assert list(acoinvariants(fx.M, h).dims) == want["M_AcoH"]
    assert list(coinvariants(fx.A, h).dims) == want["A_coH"]
    assert list(poisson_center(fx.A).dims) == want["A_A"]
    assert list(base_algebra(fx.A, h).dims) == want["B"]


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_sympy_agrees_on_coinvariant_family(name):
    sympy = pytest.importorskip("sympy")
    fx = built(name)
    rows, dims = oracle.coinvariant_rows(fx.M.coaction, fx.M.dims, fx.H)
    n = sum(dims)
    null = sympy.Matrix(rows).nullspace() if rows else [None] * n
    assert len(null) == coinvariants(fx.M, fx.H).family_space.dim


def test_f1_coinvariants_are_the_constant_one_family():
    fx = f1()
    c = coinvariants(fx.M, fx.H)
    assert c.family_space == span([(1, 0, 1, 0)], 4)
    assert all(s == span([e(2, 0)], 2) for s in c.per_degree)


def test_f1_intersection_of_coinvariants_and_annihilator():
    fx = f1()
    both = intersect(coinvariants(fx.M, fx.H)[0], poisson_annihilator(fx.M)[0])
    assert both == span([e(2, 0)], 2)


def test_f4_coinvariants_are_left_constant():
    fx = f4()
    want = span([e(8, i) for i in range(4)], 8)
    assert all(s == want for s in coinvariants(fx.M, fx.H).per_degree)


def test_f2_poisson_center_is_one_and_xy():
    assert poisson_center(f2().A)[0] == span([e(4, 0), e(4, 3)], 4)


def test_f4_poisson_center_and_base():
    fx = f4()
    # k[C2] (x) span{1, xy}
    assert poisson_center(fx.A)[0] == span([e(8, 0), e(8, 3), e(8, 4), e(8, 7)], 8)
    assert base_algebra(fx.A, fx.H)[0] == span([e(8, 0), e(8, 3)], 8)


def test_trivial_coaction_gives_everything():
    h = f1().H
    c = coinvariants_of(trivial_coaction((3, 3), h), (3, 3), h)
    assert all(s == Subspace.whole(3) for s in c.per_degree)


def test_zero_lie_action_annihilates_everything():
    assert annihilator([Matrix.zeros(3, 3)] * 2, 3) == Subspace.whole(3)


def test_substructures_on_fixtures(fx):
    rep = check_substructures(fx.M, fx.A, fx.H)
    assert rep.ok
    assert {c.law for c in rep.checks} >= {"substructure.base_product", "substructure.base_bracket",
                                          "substructure.center_product", "substructure.coinvariant_subcomodule"}


def test_base_is_contained_in_center_and_coinvariants(fx):
    h = fx.H
    for a in h.group.elements:
        B = base_algebra(fx.A, h)[a]
        assert poisson_center(fx.A)[a].contains_subspace(B)
        assert coinvariants(fx.A, h)[a].contains_subspace(B)
        assert B.contains(fx.A.unit(a))


@given(st.sampled_from(sorted(FIXTURES)), st.integers(1, 3))
@settings(max_examples=8, deadline=None)
def test_coinvariants_of_direct_sums_add(name, copies):
    from phm.poisson import direct_sum

    fx = built(name)
    M = fx.M
    for _ in range(copies - 1):
        M = direct_sum(M, fx.M, fx.H)
    single = coinvariants(fx.M, fx.H).dims
    assert coinvariants(M, fx.H).dims == tuple(copies * d for d in single)


@given(st.sampled_from(sorted(FIXTURES)))
@settings(max_examples=4, deadline=None)
def test_coinvariant_components_satisfy_the_defining_equation(name):
    fx = built(name)
    h, M = fx.H, fx.M
    c = coinvariants(M, h)
    for fam in c.family_space.basis:
        for a, b in h.group.pairs():
            m_ab, m_a = c.component(fam, h.group(a, b)), c.component(fam, a)
            lhs = M.coaction[a, b].apply(m_ab)
            rhs = tuple(x * y for x in m_a for y in h.unit(b))
            assert lhs == rhs


def test_regular_module_of_a_has_a_coinvariants(fx):
    assert coinvariants(regular_module(fx.A), fx.H).dims == coinvariants(fx.A, fx.H).dims
