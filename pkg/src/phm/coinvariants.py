"""Coinvariants, Poisson annihilators and the base algebra B = A^{AcoH}.

A coinvariant family is a tuple (m_a) with rho_{a,b}(m_{ab}) = m_a (x) 1_b for
all a, b. Since G is finite the families live in the direct sum of the M_a,
and the per-degree coinvariants are the projections of that solution space.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .hopf import HopfGCoalgebra
from .linalg import Matrix, Subspace, Vector, intersect, kernel_of_rows
from .poisson import ComodulePoissonAlgebra, PoissonHopfModule, regular_module
from .report import Report


@dataclass(frozen=True)
class CoinvariantFamily:
    family_space: Subspace
    per_degree: tuple[Subspace, ...]
    offsets: tuple[int, ...]

    def component(self, family: Sequence, a: int) -> Vector:
        n = self.per_degree[a].ambient_dim
        return tuple(family[self.offsets[a]:self.offsets[a] + n])

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.per_degree)

    def __getitem__(self, a: int) -> Subspace:
        return self.per_degree[a]


@dataclass(frozen=True)
class GradedSubspaceFamily:
    per_degree: tuple[Subspace, ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.per_degree)

    def __getitem__(self, a: int) -> Subspace:
        return self.per_degree[a]


def _offsets(dims: Sequence[int]) -> tuple[tuple[int, ...], int]:
    offs, pos = [], 0
    for d in dims:
        offs.append(pos)
        pos += d
    return tuple(offs), pos


def coinvariant_rows(coaction, dims: Sequence[int], h: HopfGCoalgebra) -> tuple[list[dict], tuple[int, ...], int]:
    """Sparse rows of rho_{a,b}(x_{ab}) - x_a (x) 1_b = 0 over the direct sum."""
    g = h.group
    offs, total = _offsets(dims)
    rows = []
    for a, b in g.pairs():
        ab = g(a, b)
        rho = coaction[a, b]
        one = h.unit(b)
        db = h.dims[b]
        for r, row in enumerate(rho.rows):
            k, l = divmod(r, db)
            eq = {offs[ab] + i: x for i, x in enumerate(row) if x}
            if one[l]:
                j = offs[a] + k
                eq[j] = eq.get(j, 0) - one[l]
                if not eq[j]:
                    del eq[j]
            rows.append(eq)
    return rows, offs, total


def coinvariants_of(coaction, dims: Sequence[int], h: HopfGCoalgebra) -> CoinvariantFamily:
    rows, offs, total = coinvariant_rows(coaction, dims, h)
    fam = kernel_of_rows(rows, total)
    per = tuple(Subspace(dims[a], (v[offs[a]:offs[a] + dims[a]] for v in fam.basis)) for a in h.group.elements)
    return CoinvariantFamily(fam, per, offs)


def coinvariants(M: PoissonHopfModule | ComodulePoissonAlgebra, h: HopfGCoalgebra) -> CoinvariantFamily:
    return coinvariants_of(M.coaction, M.dims, h)


def annihilator(lie_ops: Sequence[Matrix], dim: int) -> Subspace:
    """{m : a . m = 0 for every basis a}."""
    rows = ({j: x for j, x in enumerate(r) if x} for op in lie_ops for r in op.rows)
    return kernel_of_rows(rows, dim)


def poisson_annihilator(M: PoissonHopfModule) -> GradedSubspaceFamily:
    return GradedSubspaceFamily(tuple(annihilator(M.lie[a], M.dims[a]) for a in M.group.elements))


def poisson_center(A: ComodulePoissonAlgebra) -> GradedSubspaceFamily:
    return poisson_annihilator(regular_module(A))


def acoinvariants(M: PoissonHopfModule, h: HopfGCoalgebra) -> GradedSubspaceFamily:
    coh = coinvariants(M, h)
    ann = poisson_annihilator(M)
    return GradedSubspaceFamily(tuple(intersect(c, n) for c, n in zip(coh.per_degree, ann.per_degree)))


def base_algebra(A: ComodulePoissonAlgebra, h: HopfGCoalgebra) -> GradedSubspaceFamily:
    """B = A^{AcoH}."""
    return acoinvariants(regular_module(A), h)


# -- closure checks ---------------------------------------------------------------

def in_tensor(left: Subspace, w: Sequence, right_dim: int) -> bool:
    """Is w in left (x) k^right_dim?  Every slice with a fixed right index must lie in left."""
    n = left.ambient_dim
    return all(left.contains([w[i * right_dim + l] for i in range(n)]) for l in range(right_dim))


def _closed_under_coaction(rep: Report, structure: str, law: str, coaction, fam: Sequence[Subspace],
                           h: HopfGCoalgebra) -> None:
    g = h.group
    for a, b in g.pairs():
        rho = coaction[a, b]
        witness = None
        for v in fam[g(a, b)].basis:
            w = rho.apply(v)
            if not in_tensor(fam[a], w, h.dims[b]):
                witness = {"input": list(v), "image": list(w)}
                break
        rep.record(structure, law, g.name(a, b), witness)


def _closed_under(rep: Report, structure: str, law: str, indices, ops_of, sub: Subspace, target: Subspace) -> None:
    """ops_of(u) is an operator; check ops_of(u) v in target for u in sub, v in target's source basis."""
    witness = None
    for u in sub.basis:
        op = ops_of(u)
        for v in target.basis:
            w = op.apply(v)
            if not target.contains(w):
                witness = {"input": [list(u), list(v)], "image": list(w)}
                break
        if witness:
            break
    rep.record(structure, law, indices, witness)


def check_substructures(M: PoissonHopfModule, A: ComodulePoissonAlgebra, h: HopfGCoalgebra,
                        structure: str = "M") -> Report:
    """Closure of M^A, A^A, B and M^{AcoH} under the structure maps they inherit."""
    g = h.group
    rep = Report()
    coh = coinvariants(M, h)
    _closed_under_coaction(rep, structure, "substructure.coinvariant_subcomodule", M.coaction, coh.per_degree, h)
    ann = poisson_annihilator(M)
    _closed_under_coaction(rep, structure, "substructure.annihilator_subcomodule", M.coaction, ann.per_degree, h)
    center = poisson_center(A)
    B = base_algebra(A, h)
    for a in g.elements:
        z = center[a]
        _closed_under(rep, "A", "substructure.center_product", g.name(a), lambda u: A.algebra.left(a, u), z, z)
        _closed_under(rep, "A", "substructure.center_bracket", g.name(a), lambda u: A.poisson.ad(a, u), z, z)
    _closed_under_coaction(rep, "A", "substructure.center_subcomodule", A.coaction, center.per_degree, h)
    for a in g.elements:
        rep.record("A", "substructure.base_in_center", g.name(a),
                   None if center[a].contains_subspace(B[a]) else {"base": [list(v) for v in B[a].basis]})
        _closed_under(rep, "A", "substructure.base_product", g.name(a), lambda u: A.algebra.left(a, u), B[a], B[a])
        _closed_under(rep, "A", "substructure.base_bracket", g.name(a), lambda u: A.poisson.ad(a, u), B[a], B[a])
    _closed_under_coaction(rep, "A", "substructure.base_subcomodule", A.coaction, B.per_degree, h)
    acoh = acoinvariants(M, h)
    for a in g.elements:
        if M.act is not None:
            _closed_under(rep, structure, "substructure.acoinvariant_base_action", g.name(a),
                          lambda u: M.act_op(a, u), B[a], acoh[a])
        _closed_under(rep, structure, "substructure.acoinvariant_base_lie", g.name(a),
                      lambda u: M.lie_op(a, u), B[a], acoh[a])
    return rep


__all__ = ["CoinvariantFamily", "GradedSubspaceFamily", "coinvariants", "coinvariants_of", "coinvariant_rows",
           "annihilator", "poisson_annihilator", "poisson_center", "acoinvariants", "base_algebra",
           "in_tensor", "check_substructures"]
