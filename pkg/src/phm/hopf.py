"""Finite abelian groups, graded algebra families and Hopf G-coalgebras.

Degrees are group-element indices. A bilinear map V x W -> U is stored as
its tuple of left operators: ``ops[i]`` is the U x W matrix of
``w -> b(e_i, w)``. For an algebra family this means ``mult[a][i]`` is left
multiplication by the i-th basis vector of H_a.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping, Sequence

from .linalg import (ONE, Matrix, Vector, hstack, inverse, kron, flip,
                     linear_combination, outer, row_matrix, unit_vector, vec)
from .report import CONSISTENCY, Report


class ShapeError(ValueError):
    pass


class NonInvertibleAntipode(ValueError):
    def __init__(self, degree: str):
        super().__init__(f"antipode S_{degree} is not invertible")
        self.degree = degree


@dataclass(frozen=True)
class GroupTable:
    names: tuple[str, ...]
    mul: tuple[tuple[int, ...], ...]
    identity: int = 0

    @property
    def order(self) -> int:
        return len(self.names)

    @property
    def elements(self) -> range:
        return range(self.order)

    def __call__(self, a: int, b: int) -> int:
        return self.mul[a][b]

    @cached_property
    def _inverses(self) -> tuple:
        return tuple(next((b for b in self.elements if self.mul[a][b] == self.identity), None)
                     for a in self.elements)

    def inv(self, a: int) -> int:
        b = self._inverses[a]
        if b is None:
            raise ValueError(f"{self.names[a]} has no inverse")
        return b

    def index(self, name: str) -> int:
        return self.names.index(name)

    def pairs(self) -> Iterator[tuple[int, int]]:
        for a in self.elements:
            for b in self.elements:
                yield a, b

    def triples(self) -> Iterator[tuple[int, int, int]]:
        for a in self.elements:
            for b in self.elements:
                for c in self.elements:
                    yield a, b, c

    def factorizations(self, a: int) -> list[tuple[int, int]]:
        """All (mu, nu) with mu nu = a, ordered by mu."""
        return [(m, n) for m in self.elements for n in self.elements if self.mul[m][n] == a]

    def name(self, *elems: int) -> list[str]:
        return [self.names[x] for x in elems]


def cyclic_group(n: int) -> GroupTable:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    names = ["e"] + (["g"] if n >= 2 else []) + [f"g{k}" for k in range(2, n)]
    return GroupTable(tuple(names), tuple(tuple((i + j) % n for j in range(n)) for i in range(n)), 0)


def trivial_group() -> GroupTable:
    return cyclic_group(1)


def check_group(g: GroupTable) -> Report:
    rep = Report()
    elems = g.elements
    n = g.order
    closed = all(len(row) == n and all(0 <= x < n for x in row) for row in g.mul) and len(g.mul) == n
    rep.record("G", "closure", (), None if closed else {"table": "entries out of range"})
    if not closed:
        return rep
    bad = next(((a, b, c) for a in elems for b in elems for c in elems
                if g(g(a, b), c) != g(a, g(b, c))), None)
    rep.record("G", "associativity", (), None if bad is None else {"input": g.name(*bad)})
    bad = next(((a, b) for a in elems for b in elems if g(a, b) != g(b, a)), None)
    rep.record("G", "commutativity", (), None if bad is None else {"input": g.name(*bad)})
    e = g.identity
    bad = next((a for a in elems if g(e, a) != a or g(a, e) != a), None)
    rep.record("G", "identity", (), None if bad is None else {"input": g.name(bad)})
    bad = next((a for a in elems if not any(g(a, b) == e and g(b, a) == e for b in elems)), None)
    rep.record("G", "inverses", (), None if bad is None else {"input": g.name(bad)})
    return rep


@dataclass(frozen=True)
class GradedSpace:
    group: GroupTable
    dims: tuple[int, ...]

    def __post_init__(self):
        if len(self.dims) != self.group.order or any(d < 0 for d in self.dims):
            raise ShapeError("one non-negative dimension per group element required")


def split_bilinear(m: Matrix, left_dim: int, right_dim: int) -> tuple[Matrix, ...]:
    """Left operators of the bilinear map whose (out x left*right) matrix is m."""
    if m.ncols != left_dim * right_dim:
        raise ShapeError(f"bilinear matrix has {m.ncols} columns, expected {left_dim * right_dim}")
    return tuple(m.column_block(i * right_dim, right_dim) for i in range(left_dim))


def join_bilinear(ops: Sequence[Matrix], out_dim: int, right_dim: int) -> Matrix:
    if not ops:
        return Matrix.zeros(out_dim, 0)
    return hstack(list(ops))


def combine(ops: Sequence[Matrix], coeffs: Sequence, nrows: int, ncols: int) -> Matrix:
    """The operator of sum_i coeffs[i] e_i."""
    return linear_combination(coeffs, ops, nrows, ncols)


@dataclass(frozen=True)
class AlgebraFamily:
    space: GradedSpace
    mult: tuple[tuple[Matrix, ...], ...]
    unit: tuple[Vector, ...]

    @property
    def group(self) -> GroupTable:
        return self.space.group

    @property
    def dims(self) -> tuple[int, ...]:
        return self.space.dims

    def left(self, a: int, u: Sequence) -> Matrix:
        d = self.dims[a]
        return combine(self.mult[a], u, d, d)

    def product(self, a: int, u: Sequence, v: Sequence) -> Vector:
        return self.left(a, u).apply(v)

    def mult_matrix(self, a: int) -> Matrix:
        """m_a : H_a (x) H_a -> H_a."""
        d = self.dims[a]
        return join_bilinear(self.mult[a], d, d)

    def is_commutative(self, a: int | None = None) -> bool:
        degrees = self.group.elements if a is None else [a]
        for x in degrees:
            ops = self.mult[x]
            d = self.dims[x]
            for i in range(d):
                for j in range(i + 1, d):
                    if ops[i].column(j) != ops[j].column(i):
                        return False
        return True

    @classmethod
    def from_products(cls, space: GradedSpace, product, unit: Sequence[Sequence]) -> "AlgebraFamily":
        """``product(a, i, j)`` gives e_i e_j in degree a as a coordinate vector."""
        mult = []
        for a in space.group.elements:
            d = space.dims[a]
            mult.append(tuple(Matrix.from_function(d, d, lambda j, i=i: product(a, i, j))
                              for i in range(d)))
        return cls(space, tuple(mult), tuple(vec(u) for u in unit))


def check_algebra_family(alg: AlgebraFamily, structure: str, commutative: bool = False) -> Report:
    rep = Report()
    g = alg.group
    laws = ["algebra.associativity", "algebra.unit"] + (["algebra.commutativity"] if commutative else [])
    for a in g.elements:
        d = alg.dims[a]
        ops = alg.mult[a]
        if len(ops) != d or any(op.shape != (d, d) for op in ops) or len(alg.unit[a]) != d:
            raise ShapeError(f"{structure}: multiplication in degree {g.names[a]} has the wrong shape")
        if d == 0:
            for law in laws:
                rep.record(structure, law, g.name(a))
            continue
        # (e_i e_j) e_k = e_i (e_j e_k)  <=>  L_{e_i e_j} = L_i L_j
        lhs = hstack([combine(ops, ops[i].column(j), d, d) for i in range(d) for j in range(d)])
        rhs = hstack([ops[i] @ ops[j] for i in range(d) for j in range(d)])
        inputs = [(i, j, k) for i in range(d) for j in range(d) for k in range(d)]
        rep.compare(structure, "algebra.associativity", g.name(a), lhs, rhs, inputs)
        one = alg.unit[a]
        right = Matrix.from_function(d, d, lambda i: ops[i].apply(one))
        rep.compare(structure, "algebra.unit", g.name(a), hstack([combine(ops, one, d, d), right]),
                    hstack([Matrix.identity(d)] * 2), [("1", j) for j in range(d)] + [(j, "1") for j in range(d)])
        if commutative:
            lhs = Matrix.from_function(d, d * d, lambda c: ops[c // d].column(c % d))
            rhs = Matrix.from_function(d, d * d, lambda c: ops[c % d].column(c // d))
            rep.compare(structure, "algebra.commutativity", g.name(a), lhs, rhs,
                        [(i, j) for i in range(d) for j in range(d)])
    return rep


@dataclass(frozen=True)
class HopfGCoalgebra:
    algebra: AlgebraFamily
    comult: Mapping[tuple[int, int], Matrix]
    counit: Matrix
    antipode: tuple[Matrix, ...]

    @property
    def group(self) -> GroupTable:
        return self.algebra.group

    @property
    def dims(self) -> tuple[int, ...]:
        return self.algebra.dims

    def unit(self, a: int) -> Vector:
        return self.algebra.unit[a]

    @cached_property
    def antipode_inverse(self) -> tuple[Matrix, ...]:
        return invert_antipode(self)

    def is_commutative(self) -> bool:
        return self.algebra.is_commutative()

    def check_shapes(self) -> None:
        g, d = self.group, self.dims
        for a, b in g.pairs():
            m = self.comult.get((a, b))
            if m is None or m.shape != (d[a] * d[b], d[g(a, b)]):
                raise ShapeError(f"comultiplication Delta_{g.names[a]},{g.names[b]} has the wrong shape")
        if self.counit.shape != (1, d[g.identity]):
            raise ShapeError("counit must be a row vector on H_e")
        for a in g.elements:
            if self.antipode[a].shape != (d[g.inv(a)], d[a]):
                raise ShapeError(f"antipode S_{g.names[a]} has the wrong shape")


def check_g_coalgebra(h: HopfGCoalgebra, structure: str = "H") -> Report:
    h.check_shapes()
    g, d, D = h.group, h.dims, h.comult
    eps = h.counit
    e = g.identity
    rep = Report()
    for a, b, c in g.triples():
        lhs = kron(D[a, b], Matrix.identity(d[c])) @ D[g(a, b), c]
        rhs = kron(Matrix.identity(d[a]), D[b, c]) @ D[a, g(b, c)]
        rep.compare(structure, "coassociativity", g.name(a, b, c), lhs, rhs)
    for a in g.elements:
        ident = Matrix.identity(d[a])
        rep.compare(structure, "counit", g.name(a) + ["right"], kron(ident, eps) @ D[a, e], ident)
        rep.compare(structure, "counit", g.name(a) + ["left"], kron(eps, ident) @ D[e, a], ident)
    return rep


def _coefficient_operator(coeffs: Vector, left_ops: Sequence[Matrix], right_ops: Sequence[Matrix]) -> Matrix:
    """sum_{k,l} c_{kl} (L_k (x) R_l) for c in the lexicographic basis of U (x) V."""
    nr = len(right_ops)
    rows = left_ops[0].nrows * right_ops[0].nrows if left_ops and right_ops else 0
    cols = left_ops[0].ncols * right_ops[0].ncols if left_ops and right_ops else 0
    acc = Matrix.zeros(rows, cols)
    for idx, c in enumerate(coeffs):
        if c:
            acc = acc + kron(left_ops[idx // nr], right_ops[idx % nr]).scale(c)
    return acc


def check_hopf_g_coalgebra(h: HopfGCoalgebra, structure: str = "H") -> Report:
    h.check_shapes()
    g, d, D, A = h.group, h.dims, h.comult, h.algebra
    e = g.identity
    eps = h.counit
    S = h.antipode
    rep = Report()
    for a, b in g.pairs():
        ab = g(a, b)
        n = d[ab]
        delta = D[a, b]
        lhs = [delta @ A.mult[ab][i] for i in range(n)]
        rhs = [_coefficient_operator(delta.column(i), A.mult[a], A.mult[b]) @ delta for i in range(n)]
        inputs = [(i, j) for i in range(n) for j in range(n)]
        if n:
            rep.compare(structure, "comult.multiplicative", g.name(a, b), hstack(lhs), hstack(rhs), inputs)
        else:
            rep.record(structure, "comult.multiplicative", g.name(a, b))
        got = delta.apply(h.unit(ab))
        want = tuple(x * y for x in h.unit(a) for y in h.unit(b))
        rep.record(structure, "comult.unital", g.name(a, b),
                   None if got == want else {"input": ["1"], "lhs": list(got), "rhs": list(want)})
    ne = d[e]
    eps_row = eps.rows[0]
    lhs = hstack([eps @ A.mult[e][i] for i in range(ne)]) if ne else eps
    rhs = hstack([eps.scale(eps_row[i]) for i in range(ne)]) if ne else eps
    rep.compare(structure, "counit.multiplicative", [], lhs, rhs, [(i, j) for i in range(ne) for j in range(ne)])
    got = eps.apply(h.unit(e))[0]
    rep.record(structure, "counit.unital", [], None if got == ONE else {"input": ["1_e"], "lhs": [got], "rhs": [ONE]})
    for a in g.elements:
        ai = g.inv(a)
        m_a = A.mult_matrix(a)
        target = outer(h.unit(a), eps_row)
        left = m_a @ kron(S[ai], Matrix.identity(d[a])) @ D[ai, a]
        right = m_a @ kron(Matrix.identity(d[a]), S[ai]) @ D[a, ai]
        rep.compare(structure, "antipode", g.name(a) + ["left"], left, target)
        rep.compare(structure, "antipode", g.name(a) + ["right"], right, target)
    for a in g.elements:
        ok = inverse(S[a]) is not None
        rep.record(structure, "antipode.bijective", g.name(a), None if ok else {"rank": S[a].rank()})
    rep.extend(check_antipode_identities(h, structure))
    return rep


def check_antipode_identities(h: HopfGCoalgebra, structure: str = "H") -> Report:
    """The identities every Hopf G-coalgebra antipode satisfies, as consistency checks."""
    g, d, D, A, S = h.group, h.dims, h.comult, h.algebra, h.antipode
    e = g.identity
    rep = Report()
    for a in g.elements:
        ai = g.inv(a)
        n = d[a]
        # S(e_i e_j) = S(e_j) S(e_i)
        lhs = [S[a] @ A.mult[a][i] for i in range(n)]
        rhs = [Matrix.from_function(d[ai], n, lambda j, i=i: A.product(ai, S[a].column(j), S[a].column(i)))
               for i in range(n)]
        if n:
            rep.compare(structure, "antipode.antimultiplicative", g.name(a), hstack(lhs), hstack(rhs),
                        [(i, j) for i in range(n) for j in range(n)], kind=CONSISTENCY)
        got = S[a].apply(h.unit(a))
        rep.record(structure, "antipode.unital", g.name(a),
                   None if got == h.unit(ai) else {"lhs": list(got), "rhs": list(h.unit(ai))}, kind=CONSISTENCY)
    for a, b in g.pairs():
        ai, bi = g.inv(a), g.inv(b)
        lhs = D[bi, ai] @ S[g(a, b)]
        rhs = flip(d[ai], d[bi]) @ kron(S[a], S[b]) @ D[a, b]
        rep.compare(structure, "antipode.comult", g.name(a, b), lhs, rhs, kind=CONSISTENCY)
    rep.compare(structure, "antipode.counit", [], h.counit @ S[e], h.counit, kind=CONSISTENCY)
    return rep


def invert_antipode(h: HopfGCoalgebra) -> tuple[Matrix, ...]:
    """Per degree a, the inverse of S_a as a map H_{a^-1} -> H_a."""
    out = []
    for a in h.group.elements:
        inv = inverse(h.antipode[a])
        if inv is None:
            raise NonInvertibleAntipode(h.group.names[a])
        out.append(inv)
    return tuple(out)


def certify_hopf(h: HopfGCoalgebra, structure: str = "H") -> Report:
    rep = check_group(h.group)
    rep.extend(check_algebra_family(h.algebra, structure))
    rep.extend(check_g_coalgebra(h, structure))
    rep.extend(check_hopf_g_coalgebra(h, structure))
    return rep


def build_group_algebra(n: int) -> HopfGCoalgebra:
    """k[C_n] as a Hopf algebra, i.e. a Hopf G-coalgebra over the trivial group."""
    if n < 1:
        raise ValueError("k[C_n] needs n >= 1")
    g = trivial_group()
    space = GradedSpace(g, (n,))
    alg = AlgebraFamily.from_products(space, lambda a, i, j: unit_vector(n, (i + j) % n), [unit_vector(n, 0)])
    comult = {(0, 0): Matrix.from_sparse(n * n, n, [(i * n + i, i, 1) for i in range(n)])}
    counit = row_matrix([1] * n)
    antipode = (Matrix.from_sparse(n, n, [((-i) % n, i, 1) for i in range(n)]),)
    return HopfGCoalgebra(alg, comult, counit, antipode)


def build_trivial_hopf_g(k_hopf: HopfGCoalgebra, g: GroupTable) -> HopfGCoalgebra:
    """The Hopf G-coalgebra with H_a = k_hopf in every degree and Delta, S copied."""
    if k_hopf.group.order != 1:
        raise ValueError("expected an ordinary Hopf algebra (trivial grading group)")
    rep = certify_hopf(k_hopf)
    if not rep.ok:
        bad = rep.failures()[0]
        raise ValueError(f"input Hopf algebra fails {bad.law}")
    invert_antipode(k_hopf)
    n = k_hopf.dims[0]
    space = GradedSpace(g, (n,) * g.order)
    alg = AlgebraFamily(space, (k_hopf.algebra.mult[0],) * g.order, (k_hopf.unit(0),) * g.order)
    comult = {(a, b): k_hopf.comult[0, 0] for a, b in g.pairs()}
    return HopfGCoalgebra(alg, comult, k_hopf.counit, (k_hopf.antipode[0],) * g.order)


__all__ = [
    "GroupTable", "GradedSpace", "AlgebraFamily", "HopfGCoalgebra", "ShapeError", "NonInvertibleAntipode",
    "cyclic_group", "trivial_group", "check_group", "check_algebra_family", "check_g_coalgebra",
    "check_hopf_g_coalgebra", "check_antipode_identities", "invert_antipode", "certify_hopf",
    "build_group_algebra", "build_trivial_hopf_g", "split_bilinear", "join_bilinear", "combine",
]
