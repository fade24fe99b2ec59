"""Spaces of structure-preserving maps, found as kernels of linear constraints.

A family f = (f_a: D_a -> C_a) is flattened to one vector: the entries of
f_a row by row, degree after degree. Each law such as f o act_D(x) =
act_C(x) o f becomes a batch of sparse rows on that vector, and the
morphism space is the common kernel.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .hopf import HopfGCoalgebra
from .linalg import ZERO, Matrix, Subspace, kernel_of_rows, kron
from .report import Report

A_LINEAR = "A-linear"
LIE_LINEAR = "Lie-A-linear"
COLINEAR = "H-colinear"
B_LINEAR = "B-linear"
TRANSFER = "transfer-compatible"


@dataclass(frozen=True)
class Term:
    """coef * left @ (f_deg (x) I_t) @ right; None stands for an identity."""
    coef: object
    left: Matrix | None
    deg: int
    right: Matrix | None
    t: int = 1


class _Layout:
    def __init__(self, dom: Sequence[int], cod: Sequence[int]):
        self.dom, self.cod = tuple(dom), tuple(cod)
        self.offsets, pos = [], 0
        for r, c in zip(self.cod, self.dom):
            self.offsets.append(pos)
            pos += r * c
        self.size = pos

    def var(self, a: int, i: int, j: int) -> int:
        return self.offsets[a] + i * self.dom[a] + j

    def unflatten(self, v: Sequence) -> tuple[Matrix, ...]:
        out = []
        for a, (r, c) in enumerate(zip(self.cod, self.dom)):
            o = self.offsets[a]
            out.append(Matrix._raw(tuple(tuple(v[o + i * c:o + (i + 1) * c]) for i in range(r)), c))
        return tuple(out)

    def flatten(self, f: Sequence[Matrix]) -> tuple:
        return tuple(x for m in f for row in m.rows for x in row)


def _term_rows(lay: _Layout, term: Term, nrows: int, ncols: int, out: list[dict]) -> None:
    """Add the contribution of one term to the entry equations out[r * ncols + c]."""
    a, t = term.deg, term.t
    fr, fc = lay.cod[a], lay.dom[a]
    left_rows = ([{i: 1} for i in range(fr * t)] if term.left is None else
                 [{j: x for j, x in enumerate(row) if x} for row in term.left.rows])
    right_rows = ([{j: 1} for j in range(fc * t)] if term.right is None else
                  [{j: x for j, x in enumerate(row) if x} for row in term.right.rows])
    for r in range(nrows):
        for p, lv in left_rows[r].items():
            i, l = divmod(p, t)
            for j in range(fc):
                for c, rv in right_rows[j * t + l].items():
                    eq = out[r * ncols + c]
                    k = lay.var(a, i, j)
                    eq[k] = eq.get(k, ZERO) + term.coef * lv * rv


def equation_rows(lay: _Layout, terms: Sequence[Term], nrows: int, ncols: int) -> list[dict]:
    out: list[dict] = [{} for _ in range(nrows * ncols)]
    for term in terms:
        _term_rows(lay, term, nrows, ncols, out)
    return [{k: x for k, x in eq.items() if x} for eq in out]


@dataclass(frozen=True)
class MorphismSpace:
    dom_dims: tuple[int, ...]
    cod_dims: tuple[int, ...]
    kinds: tuple[str, ...]
    space: Subspace

    @property
    def _layout(self) -> _Layout:
        return _Layout(self.dom_dims, self.cod_dims)

    @property
    def dim(self) -> int:
        return self.space.dim

    def basis(self) -> list[tuple[Matrix, ...]]:
        lay = self._layout
        return [lay.unflatten(v) for v in self.space.basis]

    def coordinates(self, f: Sequence[Matrix]):
        return self.space.coordinates(self._layout.flatten(f))

    def contains(self, f: Sequence[Matrix]) -> bool:
        return self.coordinates(f) is not None


@dataclass(frozen=True)
class Side:
    """What a hom-space constraint needs to know about one end of the map.

    ``act``/``lie``: per degree, operators of the basis of A_a (or B_a);
    ``coaction``: {(a, b): rho_{a,b}}; ``transfer``: {(mu, a): T}.
    """
    dims: tuple[int, ...]
    act: tuple | None = None
    lie: tuple | None = None
    coaction: dict | None = None
    transfer: dict | None = None


def side_of(M) -> Side:
    """A Side for a PoissonHopfModule or a TrivialBModule."""
    if hasattr(M, "transfer"):
        return Side(M.dims, act=M.act, transfer=M.transfer)
    return Side(M.dims, act=M.act, lie=M.lie, coaction=M.coaction)


def constraint_rows(dom: Side, cod: Side, kinds: Iterable[str], h: HopfGCoalgebra) -> tuple[_Layout, list[dict]]:
    g = h.group
    lay = _Layout(dom.dims, cod.dims)
    rows: list[dict] = []
    kinds = tuple(kinds)
    for kind in kinds:
        if kind in (A_LINEAR, LIE_LINEAR, B_LINEAR):
            attr = "lie" if kind == LIE_LINEAR else "act"
            for a in g.elements:
                dops, cops = getattr(dom, attr)[a], getattr(cod, attr)[a]
                for dop, cop in zip(dops, cops):
                    rows += equation_rows(lay, [Term(1, None, a, dop), Term(-1, cop, a, None)],
                                          cod.dims[a], dom.dims[a])
        elif kind == COLINEAR:
            for a, b in g.pairs():
                ab = g(a, b)
                rows += equation_rows(lay, [Term(1, cod.coaction[a, b], ab, None),
                                            Term(-1, None, a, dom.coaction[a, b], h.dims[b])],
                                      cod.dims[a] * h.dims[b], dom.dims[ab])
        elif kind == TRANSFER:
            for (mu, a), td in dom.transfer.items():
                tc = cod.transfer[mu, a]
                rows += equation_rows(lay, [Term(1, tc, a, None), Term(-1, None, mu, td)],
                                      cod.dims[mu], dom.dims[a])
        else:
            raise ValueError(f"unknown constraint kind {kind!r}")
    return lay, rows


def hom_space(dom, cod, kinds: Iterable[str], h: HopfGCoalgebra) -> MorphismSpace:
    """All families f_a: dom_a -> cod_a obeying the chosen laws."""
    d, c = (x if isinstance(x, Side) else side_of(x) for x in (dom, cod))
    kinds = tuple(kinds)
    lay, rows = constraint_rows(d, c, kinds, h)
    return MorphismSpace(d.dims, c.dims, kinds, kernel_of_rows(rows, lay.size))


def check_morphism(f: Sequence[Matrix], dom, cod, kinds: Iterable[str], h: HopfGCoalgebra,
                   structure: str = "f") -> Report:
    """Direct matrix check of each law, with witnesses."""
    d, c = (x if isinstance(x, Side) else side_of(x) for x in (dom, cod))
    g = h.group
    rep = Report()
    for kind in kinds:
        if kind in (A_LINEAR, LIE_LINEAR, B_LINEAR):
            attr = "lie" if kind == LIE_LINEAR else "act"
            for a in g.elements:
                for i, (dop, cop) in enumerate(zip(getattr(d, attr)[a], getattr(c, attr)[a])):
                    rep.compare(structure, f"morphism.{kind}", g.name(a) + [i], f[a] @ dop, cop @ f[a])
        elif kind == COLINEAR:
            for a, b in g.pairs():
                lhs = c.coaction[a, b] @ f[g(a, b)]
                rhs = kron(f[a], Matrix.identity(h.dims[b])) @ d.coaction[a, b]
                rep.compare(structure, f"morphism.{kind}", g.name(a, b), lhs, rhs)
        elif kind == TRANSFER:
            for (mu, a), td in d.transfer.items():
                rep.compare(structure, f"morphism.{kind}", g.name(mu, a), c.transfer[mu, a] @ f[a], f[mu] @ td)
        else:
            raise ValueError(f"unknown constraint kind {kind!r}")
    return rep


PA_HOM = (A_LINEAR, LIE_LINEAR, COLINEAR)

__all__ = ["MorphismSpace", "Side", "side_of", "hom_space", "check_morphism", "constraint_rows",
           "A_LINEAR", "LIE_LINEAR", "COLINEAR", "B_LINEAR", "TRANSFER", "PA_HOM"]
