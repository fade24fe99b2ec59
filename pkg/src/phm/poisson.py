"""Group Poisson algebras, comodules, Poisson (A,H)-Hopf modules and the map phi.

Coactions are dicts ``{(a, b): matrix of rho_{a,b} : M_{ab} -> M_a (x) H_b}``.
Module structures store left operators per degree, as everywhere else.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .hopf import (AlgebraFamily, GradedSpace, HopfGCoalgebra, ShapeError, _coefficient_operator,
                   check_algebra_family, combine)
from .linalg import Matrix, Vector, block_diag, hstack, kron, vstack
from .report import FLAG, Report

Coaction = Mapping[tuple[int, int], Matrix]


class CommutativityRequired(ValueError):
    pass


@dataclass(frozen=True)
class PoissonAlgebraFamily:
    algebra: AlgebraFamily
    bracket: tuple[tuple[Matrix, ...], ...]

    @property
    def group(self):
        return self.algebra.group

    @property
    def dims(self) -> tuple[int, ...]:
        return self.algebra.dims

    def ad(self, a: int, u: Sequence) -> Matrix:
        d = self.dims[a]
        return combine(self.bracket[a], u, d, d)

    def bracket_of(self, a: int, u: Sequence, v: Sequence) -> Vector:
        return self.ad(a, u).apply(v)


@dataclass(frozen=True)
class ComodulePoissonAlgebra:
    poisson: PoissonAlgebraFamily
    coaction: Coaction

    @property
    def algebra(self) -> AlgebraFamily:
        return self.poisson.algebra

    @property
    def group(self):
        return self.poisson.group

    @property
    def dims(self) -> tuple[int, ...]:
        return self.poisson.dims

    @property
    def mult(self):
        return self.algebra.mult

    @property
    def bracket(self):
        return self.poisson.bracket

    def unit(self, a: int) -> Vector:
        return self.algebra.unit[a]


@dataclass(frozen=True)
class PoissonHopfModule:
    """A graded space with an A-action, a Lie A-action and an H-coaction.

    ``act`` may be None for a bare (A-underline, H)-comodule.
    """
    space: GradedSpace
    act: tuple[tuple[Matrix, ...], ...] | None
    lie: tuple[tuple[Matrix, ...], ...]
    coaction: Coaction

    @property
    def group(self):
        return self.space.group

    @property
    def dims(self) -> tuple[int, ...]:
        return self.space.dims

    def act_op(self, a: int, u: Sequence) -> Matrix:
        d = self.dims[a]
        return combine(self.act[a], u, d, d)

    def lie_op(self, a: int, u: Sequence) -> Matrix:
        d = self.dims[a]
        return combine(self.lie[a], u, d, d)


@dataclass(frozen=True)
class ColinearUnitMap:
    maps: tuple[Matrix, ...]


def regular_module(A: ComodulePoissonAlgebra) -> PoissonHopfModule:
    """A as a Poisson (A,H)-Hopf module over itself."""
    return PoissonHopfModule(A.algebra.space, A.mult, A.bracket, A.coaction)


def _check_coaction_shapes(coaction: Coaction, dims: Sequence[int], h: HopfGCoalgebra, structure: str) -> None:
    g = h.group
    for a, b in g.pairs():
        m = coaction.get((a, b))
        if m is None or m.shape != (dims[a] * h.dims[b], dims[g(a, b)]):
            raise ShapeError(f"{structure}: coaction rho_{g.names[a]},{g.names[b]} has the wrong shape")


def check_poisson_family(A: PoissonAlgebraFamily, structure: str = "A") -> Report:
    rep = check_algebra_family(A.algebra, structure, commutative=True)
    g = A.group
    for a in g.elements:
        d = A.dims[a]
        ops = A.bracket[a]
        if len(ops) != d or any(op.shape != (d, d) for op in ops):
            raise ShapeError(f"{structure}: bracket in degree {g.names[a]} has the wrong shape")
        mult = A.algebra.mult[a]
        pairs = [(i, j) for i in range(d) for j in range(d)]
        triples = [(i, j, k) for i in range(d) for j in range(d) for k in range(d)]
        if d == 0:
            for law in ("poisson.antisymmetry", "poisson.jacobi", "poisson.leibniz"):
                rep.record(structure, law, g.name(a))
            continue
        lhs = Matrix.from_function(d, d * d, lambda c: ops[c // d].column(c % d))
        rhs = Matrix.from_function(d, d * d, lambda c: tuple(-x for x in ops[c % d].column(c // d)))
        rep.compare(structure, "poisson.antisymmetry", g.name(a), lhs, rhs, pairs)
        # ad_{e_i, e_j} = [ad_i, ad_j]
        lhs = hstack([combine(ops, ops[i].column(j), d, d) for i, j in pairs])
        rhs = hstack([ops[i] @ ops[j] - ops[j] @ ops[i] for i, j in pairs])
        rep.compare(structure, "poisson.jacobi", g.name(a), lhs, rhs, triples)
        # {e_i, e_j c} = {e_i, e_j} c + e_j {e_i, c}
        lhs = hstack([ops[i] @ mult[j] for i, j in pairs])
        rhs = hstack([combine(mult, ops[i].column(j), d, d) + mult[j] @ ops[i] for i, j in pairs])
        rep.compare(structure, "poisson.leibniz", g.name(a), lhs, rhs, triples)
    return rep


def check_comodule(coaction: Coaction, dims: Sequence[int], h: HopfGCoalgebra, structure: str) -> Report:
    _check_coaction_shapes(coaction, dims, h, structure)
    g, D = h.group, h.comult
    e = g.identity
    rep = Report()
    for a, b, c in g.triples():
        lhs = kron(Matrix.identity(dims[a]), D[b, c]) @ coaction[a, g(b, c)]
        rhs = kron(coaction[a, b], Matrix.identity(h.dims[c])) @ coaction[g(a, b), c]
        rep.compare(structure, "coaction.coassociativity", g.name(a, b, c), lhs, rhs)
    for a in g.elements:
        ident = Matrix.identity(dims[a])
        rep.compare(structure, "coaction.counit", g.name(a), kron(ident, h.counit) @ coaction[a, e], ident)
    return rep


def _twisted(coaction: Coaction, a: int, b: int, basis_ops: Sequence[Matrix], left_ops: Sequence[Matrix],
             right_ops: Sequence[Matrix], rho_src: Coaction | None = None) -> tuple[Matrix, Matrix, list]:
    """Both sides of rho(x . m) = x_(0) . m_(0) (x) x_(1) m_(1) for every basis x.

    ``basis_ops`` are the operators of x on the source degree, ``left_ops`` on
    the target degree, and ``rho_src`` is the coaction of the acting algebra.
    """
    rho = coaction[a, b]
    rho_x = rho_src[a, b] if rho_src is not None else rho
    n = rho.ncols
    lhs = [rho @ op for op in basis_ops]
    rhs = [_coefficient_operator(rho_x.column(i), left_ops, right_ops) @ rho for i in range(len(basis_ops))]
    inputs = [(i, j) for i in range(len(basis_ops)) for j in range(n)]
    if not lhs or not n:
        z = Matrix.zeros(rho.nrows, 0)
        return z, z, []
    return hstack(lhs), hstack(rhs), inputs


def check_comodule_poisson_algebra(A: ComodulePoissonAlgebra, h: HopfGCoalgebra, structure: str = "A") -> Report:
    _check_coaction_shapes(A.coaction, A.dims, h, structure)
    g = h.group
    H = h.algebra
    rep = Report()
    for a, b in g.pairs():
        ab = g(a, b)
        lhs, rhs, inputs = _twisted(A.coaction, a, b, A.mult[ab], A.mult[a], H.mult[b])
        rep.compare(structure, "coaction.multiplicative", g.name(a, b), lhs, rhs, inputs)
        got = A.coaction[a, b].apply(A.unit(ab))
        want = tuple(x * y for x in A.unit(a) for y in h.unit(b))
        rep.record(structure, "coaction.unital", g.name(a, b),
                   None if got == want else {"input": ["1"], "lhs": list(got), "rhs": list(want)})
        lhs, rhs, inputs = _twisted(A.coaction, a, b, A.bracket[ab], A.bracket[a], H.mult[b])
        rep.compare(structure, "coaction.bracket", g.name(a, b), lhs, rhs, inputs)
    return rep


def certify_comodule_poisson_algebra(A: ComodulePoissonAlgebra, h: HopfGCoalgebra, structure: str = "A") -> Report:
    rep = check_poisson_family(A.poisson, structure)
    rep.extend(check_comodule(A.coaction, A.dims, h, structure))
    rep.extend(check_comodule_poisson_algebra(A, h, structure))
    return rep


def check_poisson_hopf_module(M: PoissonHopfModule, A: ComodulePoissonAlgebra, h: HopfGCoalgebra,
                              structure: str = "M") -> Report:
    """Module, Lie-module, Poisson-module, comodule and Hopf-module compatibility laws.

    With ``M.act`` None only the (A-underline, H)-comodule laws are checked.
    """
    g = h.group
    rep = Report()
    for a in g.elements:
        n, d = M.dims[a], A.dims[a]
        lie = M.lie[a]
        act = M.act[a] if M.act is not None else None
        if len(lie) != d or any(op.shape != (n, n) for op in lie) or \
                (act is not None and (len(act) != d or any(op.shape != (n, n) for op in act))):
            raise ShapeError(f"{structure}: action in degree {g.names[a]} has the wrong shape")
        pairs = [(i, j) for i in range(d) for j in range(d)]
        inputs = [(i, j, k) for i, j in pairs for k in range(n)]
        br = A.bracket[a]
        mult = A.mult[a]
        zero = Matrix.zeros(n, 0)

        def both(lhs_list, rhs_list):
            if not lhs_list:
                return zero, zero
            return hstack(lhs_list), hstack(rhs_list)

        lhs, rhs = both([combine(lie, br[i].column(j), n, n) for i, j in pairs],
                        [lie[i] @ lie[j] - lie[j] @ lie[i] for i, j in pairs])
        rep.compare(structure, "lie_module.bracket", g.name(a), lhs, rhs, inputs)
        if act is None:
            continue
        lhs, rhs = both([combine(act, mult[i].column(j), n, n) for i, j in pairs],
                        [act[i] @ act[j] for i, j in pairs])
        rep.compare(structure, "module.associativity", g.name(a), lhs, rhs, inputs)
        rep.compare(structure, "module.unit", g.name(a), combine(act, A.unit(a), n, n), Matrix.identity(n),
                    [("1", k) for k in range(n)])
        lhs, rhs = both([lie[i] @ act[j] for i, j in pairs],
                        [combine(act, br[i].column(j), n, n) + act[j] @ lie[i] for i, j in pairs])
        rep.compare(structure, "poisson_module.2a", g.name(a), lhs, rhs, inputs)
        lhs, rhs = both([combine(lie, mult[i].column(j), n, n) for i, j in pairs],
                        [act[i] @ lie[j] + act[j] @ lie[i] for i, j in pairs])
        rep.compare(structure, "poisson_module.2b", g.name(a), lhs, rhs, inputs)
    rep.extend(check_comodule(M.coaction, M.dims, h, structure))
    H = h.algebra
    for a, b in g.pairs():
        ab = g(a, b)
        if M.act is not None:
            lhs, rhs, inputs = _twisted(M.coaction, a, b, M.act[ab], M.act[a], H.mult[b], A.coaction)
            rep.compare(structure, "hopf_module.action", g.name(a, b), lhs, rhs, inputs)
        lhs, rhs, inputs = _twisted(M.coaction, a, b, M.lie[ab], M.lie[a], H.mult[b], A.coaction)
        rep.compare(structure, "hopf_module.2d", g.name(a, b), lhs, rhs, inputs)
    return rep


def check_phi(phi: ColinearUnitMap, h: HopfGCoalgebra, A: ComodulePoissonAlgebra, structure: str = "phi") -> Report:
    g = h.group
    rep = Report()
    for a in g.elements:
        if phi.maps[a].shape != (A.dims[a], h.dims[a]):
            raise ShapeError(f"phi_{g.names[a]} has the wrong shape")
    for a, b in g.pairs():
        lhs = A.coaction[a, b] @ phi.maps[g(a, b)]
        rhs = kron(phi.maps[a], Matrix.identity(h.dims[b])) @ h.comult[a, b]
        rep.compare(structure, "phi.colinear", g.name(a, b), lhs, rhs)
    for a in g.elements:
        got = phi.maps[a].apply(h.unit(a))
        rep.record(structure, "phi.unital", g.name(a),
                   None if got == A.unit(a) else {"input": ["1"], "lhs": list(got), "rhs": list(A.unit(a))})
    for a in g.elements:
        d, n = A.dims[a], h.dims[a]
        ops = A.bracket[a]
        lhs = hstack([op @ phi.maps[a] for op in ops]) if d else Matrix.zeros(0, 0)
        rep.compare(structure, "phi.central", g.name(a), lhs, Matrix.zeros(lhs.nrows, lhs.ncols),
                    [(i, j) for i in range(d) for j in range(n)])
    for a in g.elements:
        n = h.dims[a]
        f = phi.maps[a]
        lhs = [f @ h.algebra.mult[a][i] for i in range(n)]
        rhs = [A.algebra.left(a, f.column(i)) @ f for i in range(n)]
        rep.compare(structure, "phi.multiplicative", g.name(a), hstack(lhs) if n else f, hstack(rhs) if n else f,
                    [(i, j) for i in range(n) for j in range(n)], kind=FLAG)
    return rep


# -- N (x) H ----------------------------------------------------------------

@dataclass(frozen=True)
class TensorLayout:
    """Summand bookkeeping for (N (x) H)_a = sum over mu nu = a of N_mu (x) H_nu."""
    summands: tuple[tuple[tuple[int, int], ...], ...]
    offsets: tuple[dict, ...]
    dims: tuple[int, ...]

    @classmethod
    def build(cls, n_dims: Sequence[int], h: HopfGCoalgebra) -> "TensorLayout":
        g = h.group
        summands, offsets, dims = [], [], []
        for a in g.elements:
            fac = tuple(g.factorizations(a))
            off, pos = {}, 0
            for mu, nu in fac:
                off[mu] = pos
                pos += n_dims[mu] * h.dims[nu]
            summands.append(fac)
            offsets.append(off)
            dims.append(pos)
        return cls(tuple(summands), tuple(offsets), tuple(dims))


def tensor_with_H(N: PoissonHopfModule, A: ComodulePoissonAlgebra, h: HopfGCoalgebra,
                  with_action: bool = True) -> PoissonHopfModule:
    """N (x) H with its coaction, Lie action and (for commutative H) action."""
    if with_action and not h.is_commutative():
        raise CommutativityRequired("N (x) H is a Poisson Hopf module only for commutative H")
    if with_action and N.act is None:
        raise ValueError("N has no A-action")
    g = h.group
    lay = TensorLayout.build(N.dims, h)
    H = h.algebra

    def induced(ops_of_N):
        out = []
        for a in g.elements:
            per_basis = []
            for i in range(A.dims[a]):
                blocks = []
                for mu, nu in lay.summands[a]:
                    c = A.coaction[mu, nu].column(i)
                    blocks.append(_coefficient_operator(c, ops_of_N[mu], H.mult[nu]))
                per_basis.append(block_diag(blocks))
            out.append(tuple(per_basis))
        return tuple(out)

    lie = induced(N.lie)
    act = induced(N.act) if with_action else None
    coaction = {}
    for a2, b2 in g.pairs():  # rho_{mu', nu'} on (N (x) H)_{mu' nu'}
        a = g(a2, b2)
        dh = h.dims[b2]
        entries = []
        for mu, nu in lay.summands[a]:
            h1 = g(g.inv(mu), a2)
            blk = kron(Matrix.identity(N.dims[mu]), h.comult[h1, b2])
            r0 = lay.offsets[a2][mu] * dh
            c0 = lay.offsets[a][mu]
            entries.extend((r0 + i, c0 + j, x) for i, j, x in blk.nonzero())
        coaction[a2, b2] = Matrix.from_sparse(lay.dims[a2] * dh, lay.dims[a], entries)
    return PoissonHopfModule(GradedSpace(g, lay.dims), act, lie, coaction)


def total_coaction(M: PoissonHopfModule, h: HopfGCoalgebra) -> tuple[Matrix, ...]:
    """rho^M_a : M_a -> (M (x) H)_a, the stacked rho_{mu,nu} over mu nu = a."""
    g = h.group
    return tuple(vstack([M.coaction[mu, nu] for mu, nu in g.factorizations(a)], M.dims[a])
                 for a in g.elements)


# -- small constructors ---------------------------------------------------------

def direct_sum(M1: PoissonHopfModule, M2: PoissonHopfModule, h: HopfGCoalgebra) -> PoissonHopfModule:
    g = h.group
    dims = tuple(x + y for x, y in zip(M1.dims, M2.dims))

    def ops(o1, o2):
        return tuple(tuple(block_diag([p, r]) for p, r in zip(o1[a], o2[a])) for a in g.elements)

    coaction = {}
    for a, b in g.pairs():
        ab = g(a, b)
        dh = h.dims[b]
        entries = list(M1.coaction[a, b].nonzero())
        shift = M1.dims[a] * dh
        entries += [(shift + i, M1.dims[ab] + j, x) for i, j, x in M2.coaction[a, b].nonzero()]
        coaction[a, b] = Matrix.from_sparse(dims[a] * dh, dims[ab], entries)
    act = ops(M1.act, M2.act) if M1.act is not None and M2.act is not None else None
    return PoissonHopfModule(GradedSpace(g, dims), act, ops(M1.lie, M2.lie), coaction)


def zero_module(A: ComodulePoissonAlgebra, h: HopfGCoalgebra) -> PoissonHopfModule:
    g = h.group
    ops = tuple(tuple(Matrix.zeros(0, 0) for _ in range(A.dims[a])) for a in g.elements)
    coaction = {(a, b): Matrix.zeros(0, 0) for a, b in g.pairs()}
    return PoissonHopfModule(GradedSpace(g, (0,) * g.order), ops, ops, coaction)


def trivial_coaction(dims: Sequence[int], h: HopfGCoalgebra) -> dict:
    """m -> m (x) 1 for a family of equal spaces identified across degrees."""
    g = h.group
    if len(set(dims)) > 1:
        raise ValueError("the trivial coaction needs the same dimension in every degree")
    return {(a, b): kron(Matrix.identity(dims[a]), Matrix.from_columns([h.unit(b)], h.dims[b]))
            for a, b in g.pairs()}
