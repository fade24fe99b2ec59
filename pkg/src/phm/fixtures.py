"""Canned inputs F1 to F4 and the broken variants used by the certification tests.

F1  C2, H the trivial C2-grading of k[C2], A = H with zero bracket, M = A, phi = id.
F2  trivial group, H = k, A = k[x,y]/(x^2, y^2) with {x,y} = xy, M = A.
F3  F1 with M = A (+) A.
F4  C2, A_a = k[C2] (x) R with R as in F2, coaction from Delta on the left factor.

Every fixture carries an ``expected`` table. The dimension entries come from
the brute-force oracle in :mod:`phm.oracle`; the boolean entries are the
known answers for these inputs and the test suite recomputes them.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable

from .hopf import (AlgebraFamily, GradedSpace, HopfGCoalgebra, build_group_algebra, build_trivial_hopf_g,
                   cyclic_group)
from .linalg import Matrix, flip, kron, unit_vector
from .oracle import expected_dimensions
from .poisson import (ColinearUnitMap, ComodulePoissonAlgebra, PoissonAlgebraFamily, PoissonHopfModule,
                      direct_sum, regular_module, trivial_coaction)


@dataclass(frozen=True)
class Fixture:
    name: str
    H: HopfGCoalgebra
    A: ComodulePoissonAlgebra | None = None
    M: PoissonHopfModule | None = None
    phi: ColinearUnitMap | None = None
    expected: dict = field(default_factory=dict)

    @property
    def group(self):
        return self.H.group


# -- building blocks ---------------------------------------------------------------

def c2_hopf() -> HopfGCoalgebra:
    return build_trivial_hopf_g(build_group_algebra(2), cyclic_group(2))


def _zero_bracket(dims) -> tuple:
    return tuple(tuple(Matrix.zeros(d, d) for _ in range(d)) for d in dims)


# R = k[x, y]/(x^2, y^2), basis 1, x, y, xy as exponent pairs
_R_BASIS = ((0, 0), (1, 0), (0, 1), (1, 1))


def _r_product(i: int, j: int):
    a, b = _R_BASIS[i], _R_BASIS[j]
    s = (a[0] + b[0], a[1] + b[1])
    if max(s) > 1:
        return (0,) * 4
    return unit_vector(4, _R_BASIS.index(s))


def r_algebra_ops() -> tuple[Matrix, ...]:
    return tuple(Matrix.from_function(4, 4, lambda j, i=i: _r_product(i, j)) for i in range(4))


def r_bracket_ops(xy: tuple = (0, 0, 0, 1)) -> tuple[Matrix, ...]:
    """ad_{e_i} for the bracket with {x, y} = xy (or the given vector) and every other basis pair 0."""
    table = {(1, 2): tuple(xy), (2, 1): tuple(-c for c in xy)}
    return tuple(Matrix.from_function(4, 4, lambda j, i=i: table.get((i, j), (0,) * 4)) for i in range(4))


def _phi_unit(A_dims, h: HopfGCoalgebra, images) -> ColinearUnitMap:
    return ColinearUnitMap(tuple(Matrix.from_columns(images(a), A_dims[a]) for a in h.group.elements))


# -- fixtures ----------------------------------------------------------------------

def _f1_parts(n: int = 2):
    h = build_trivial_hopf_g(build_group_algebra(n), cyclic_group(2))
    A = ComodulePoissonAlgebra(PoissonAlgebraFamily(h.algebra, _zero_bracket(h.dims)), dict(h.comult))
    phi = ColinearUnitMap(tuple(Matrix.identity(d) for d in h.dims))
    return h, A, phi


def f1() -> Fixture:
    h, A, phi = _f1_parts()
    return _finish("F1", h, A, regular_module(A), phi, diamond_trivial=True, hypotheses=True)


def _r_poisson(group, bracket_xy=(0, 0, 0, 1)):
    space = GradedSpace(group, (4,) * group.order)
    alg = AlgebraFamily(space, (r_algebra_ops(),) * group.order, (unit_vector(4, 0),) * group.order)
    return PoissonAlgebraFamily(alg, (r_bracket_ops(bracket_xy),) * group.order)


def _f2_parts(bracket_xy=(0, 0, 0, 1)):
    h = build_group_algebra(1)
    P = _r_poisson(h.group, bracket_xy)
    A = ComodulePoissonAlgebra(P, trivial_coaction(P.dims, h))
    phi = _phi_unit(A.dims, h, lambda a: [unit_vector(4, 0)])
    return h, A, phi


def f2() -> Fixture:
    h, A, phi = _f2_parts()
    return _finish("F2", h, A, regular_module(A), phi, diamond_trivial=False, hypotheses=False)


def f3() -> Fixture:
    h, A, phi = _f1_parts()
    M = direct_sum(regular_module(A), regular_module(A), h)
    return _finish("F3", h, A, M, phi, diamond_trivial=True, hypotheses=True)


def _f4_parts():
    h = c2_hopf()
    g = h.group
    n = h.dims[0]  # 2
    R_mult, R_br = r_algebra_ops(), r_bracket_ops()
    H_mult = h.algebra.mult[0]
    dims = (n * 4,) * g.order
    mult = tuple(u_op for u_op in (kron(H_mult[u], R_mult[p]) for u in range(n) for p in range(4)))
    bracket = tuple(kron(H_mult[u], R_br[p]) for u in range(n) for p in range(4))
    unit = kron_unit(h.unit(0), unit_vector(4, 0))
    alg = AlgebraFamily(GradedSpace(g, dims), (mult,) * g.order, (unit,) * g.order)
    P = PoissonAlgebraFamily(alg, (bracket,) * g.order)
    # (u (x) p) -> (u1 (x) p) (x) u2
    coaction = {(a, b): kron(Matrix.identity(h.dims[a]), flip(h.dims[b], 4)) @ kron(h.comult[a, b], Matrix.identity(4))
                for a, b in g.pairs()}
    A = ComodulePoissonAlgebra(P, coaction)
    phi = _phi_unit(dims, h, lambda a: [kron_unit(unit_vector(n, u), unit_vector(4, 0)) for u in range(n)])
    return h, A, phi


def kron_unit(u, v) -> tuple:
    return tuple(x * y for x in u for y in v)


def f4() -> Fixture:
    h, A, phi = _f4_parts()
    return _finish("F4", h, A, regular_module(A), phi, diamond_trivial=False, hypotheses=False)


def _finish(name, h, A, M, phi, diamond_trivial: bool, hypotheses: bool) -> Fixture:
    expected = expected_dimensions(A, M, h)
    expected.update({"diamond_prime_trivial": diamond_trivial, "hypotheses_hold": hypotheses,
                     "fundamental_iso": True, "certified": True})
    return Fixture(name, h, A, M, phi, expected)


FIXTURES: dict[str, Callable[[], Fixture]] = {"F1": f1, "F2": f2, "F3": f3, "F4": f4}


def fixture(name: str) -> Fixture:
    try:
        return FIXTURES[name.upper()]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}") from None


# -- broken variants -------------------------------------------------------------------

def mutant_wrong_antipode() -> Fixture:
    """F1 built on k[C3] with S = id.

    The identity is a bijective Hopf automorphism, so every derived antipode
    identity still holds and only the antipode axiom itself breaks.
    """
    h, A, phi = _f1_parts(3)
    h2 = replace(h, antipode=tuple(Matrix.identity(d) for d in h.dims))
    return Fixture("wrong-antipode", h2, A, regular_module(A), phi)


def mutant_antipode_to_one() -> Fixture:
    """F1 with S(x) = 1 on the non-unit group-like."""
    base = f1()
    h = base.H
    s = Matrix.from_columns([unit_vector(2, 0), unit_vector(2, 0)], 2)
    return Fixture("antipode-to-one", replace(h, antipode=(s,) * h.group.order), base.A, base.M, base.phi)


def mutant_broken_coassociativity() -> Fixture:
    """F4 with rho_{e,g} twisted by the Poisson automorphism x, y -> -x, -y of R."""
    base = f4()
    h, A = base.H, base.A
    g = h.group
    e, t = g.identity, 1
    theta_r = Matrix.from_sparse(4, 4, [(0, 0, 1), (1, 1, -1), (2, 2, -1), (3, 3, 1)])
    theta = kron(Matrix.identity(h.dims[e]), theta_r)
    twisted = dict(A.coaction)
    twisted[e, t] = kron(theta, Matrix.identity(h.dims[t])) @ A.coaction[e, t]
    A2 = replace(A, coaction=twisted)
    return Fixture("broken-coassociativity", h, A2, regular_module(A2), base.phi)


def mutant_leibniz() -> Fixture:
    """F2 with {x, y} = 1, which is antisymmetric and Jacobi but not a derivation."""
    h, A, phi = _f2_parts(bracket_xy=(1, 0, 0, 0))
    return Fixture("leibniz-break", h, A, None, phi)


def mutant_zeroed_counit() -> Fixture:
    """F3 with the coaction of the second summand set to zero."""
    base = f3()
    h, M = base.H, base.M
    half = base.A.dims
    coaction = {}
    for (a, b), rho in M.coaction.items():
        keep = [(i, j, x) for i, j, x in rho.nonzero() if j < half[h.group(a, b)]]
        coaction[a, b] = Matrix.from_sparse(rho.nrows, rho.ncols, keep)
    return Fixture("zeroed-counit", h, base.A, replace(M, coaction=coaction), base.phi)


def mutant_zeroed_comult() -> Fixture:
    """F1 with Delta_{e,e} = 0."""
    base = f1()
    h = base.H
    e = h.group.identity
    comult = dict(h.comult)
    comult[e, e] = Matrix.zeros(*comult[e, e].shape)
    return Fixture("zeroed-comult", replace(h, comult=comult), base.A, base.M, base.phi)


def mutant_noncolinear_phi() -> Fixture:
    """F1 with phi(x) = 1: still unital, central and multiplicative."""
    base = f1()
    h = base.H
    phi = ColinearUnitMap(tuple(Matrix.from_columns([unit_vector(2, 0)] * 2, 2) for _ in h.group.elements))
    return Fixture("noncolinear-phi", h, base.A, base.M, phi)


MUTANTS: dict[str, tuple[Callable[[], Fixture], str]] = {
    "wrong-antipode": (mutant_wrong_antipode, "antipode"),
    "broken-coassociativity": (mutant_broken_coassociativity, "coaction.coassociativity"),
    "leibniz-break": (mutant_leibniz, "poisson.leibniz"),
    "zeroed-counit": (mutant_zeroed_counit, "coaction.counit"),
    "noncolinear-phi": (mutant_noncolinear_phi, "phi.colinear"),
}


__all__ = ["Fixture", "FIXTURES", "MUTANTS", "fixture", "f1", "f2", "f3", "f4", "c2_hopf",
           "r_algebra_ops", "r_bracket_ops", "mutant_antipode_to_one", "mutant_zeroed_comult"]
