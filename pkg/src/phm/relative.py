"""Balanced tensor products A (x)_B N over the base algebra.

N is a B-module whose H-coaction is trivial: rho_{mu,nu}(n) = T(n) (x) 1_nu
for a transfer map T: N_{mu nu} -> N_mu. Both constructions that need a
balanced tensor (the one on M^{AcoH} and induction from a trivial comodule)
go through :class:`TrivialBModule`.

Every structure map on the quotient is induced from a map on A_a (x) N_a and
comes with a kernel-containment certificate: the map must send the
balancing subspace into the balancing subspace of its target. A violation
raises :class:`IllDefined` naming the map and a witness.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coinvariants import GradedSubspaceFamily, acoinvariants, base_algebra
from .hopf import GradedSpace, HopfGCoalgebra
from .linalg import Matrix, Subspace, block_diag, flip, kron, quotient, span
from .poisson import ComodulePoissonAlgebra, PoissonHopfModule
from .report import Report


class IllDefined(ValueError):
    def __init__(self, what: str, degree: str, witness: list):
        super().__init__(f"{what} is not well defined on the balanced tensor in degree {degree}")
        self.what = what
        self.degree = degree
        self.witness = witness


class NotTrivialComodule(ValueError):
    def __init__(self, pair: tuple[str, str], witness: list):
        super().__init__(f"coaction rho_{pair[0]},{pair[1]} is not of the form n (x) 1")
        self.pair = pair
        self.witness = witness


@dataclass(frozen=True)
class TrivialBModule:
    """A left B-module with trivial H-coaction.

    ``act[a][j]`` is the operator of the j-th basis vector of B_a on N_a and
    ``transfer[(mu, a)]`` the map N_a -> N_mu with rho_{mu,nu}(n) = transfer(n) (x) 1.
    ``embedding`` optionally places N_a inside a bigger space (M^{AcoH} in M).
    """
    dims: tuple[int, ...]
    base: GradedSubspaceFamily
    act: tuple[tuple[Matrix, ...], ...]
    transfer: dict
    embedding: tuple[Matrix, ...] | None = None

    def coaction(self, h: HopfGCoalgebra) -> dict:
        g = h.group
        out = {}
        for mu, nu in g.pairs():
            one = Matrix.from_columns([h.unit(nu)], h.dims[nu])
            out[mu, nu] = kron(Matrix.identity(self.dims[mu]), one) @ self.transfer[mu, g(mu, nu)]
        return out


def extract_transfer(coaction, dims: Sequence[int], h: HopfGCoalgebra) -> dict:
    """Read T off rho_{mu,nu} = T (x) 1, rejecting anything that is not of that form."""
    g = h.group
    out = {}
    for mu, nu in g.pairs():
        a = g(mu, nu)
        rho = coaction[mu, nu]
        one = h.unit(nu)
        l = next(i for i, x in enumerate(one) if x)
        dh = h.dims[nu]
        t = Matrix.from_function(dims[mu], dims[a], lambda c: tuple(rho[k * dh + l, c] / one[l] for k in range(dims[mu])))
        back = kron(Matrix.identity(dims[mu]), Matrix.from_columns([one], dh)) @ t
        if back != rho:
            j = next(c for c in range(dims[a]) if back.column(c) != rho.column(c))
            raise NotTrivialComodule(tuple(g.name(mu, nu)), [j])
        out[mu, a] = t
    return out


def _sub_action(ops: Sequence[Matrix], dom: Subspace, cod: Subspace) -> Matrix:
    """The matrix of a map restricted to dom -> cod in their basis coordinates."""
    cols = []
    for v in dom.basis:
        w = ops.apply(v) if isinstance(ops, Matrix) else ops(v)
        c = cod.coordinates(w)
        if c is None:
            raise ValueError("restricted map leaves the target subspace")
        cols.append(c)
    return Matrix.from_columns(cols, cod.dim)


def acoinvariant_module(M: PoissonHopfModule, A: ComodulePoissonAlgebra, h: HopfGCoalgebra,
                        B: GradedSubspaceFamily | None = None) -> TrivialBModule:
    """M^{AcoH} as a B-module with trivial coaction, in the canonical basis of each M^{AcoH}_a."""
    g = h.group
    B = B if B is not None else base_algebra(A, h)
    N = acoinvariants(M, h)
    act = tuple(tuple(_sub_action(M.act_op(a, b), N[a], N[a]) for b in B[a].basis) for a in g.elements)
    transfer = {}
    for mu, nu in g.pairs():
        a = g(mu, nu)
        one = h.unit(nu)
        l = next(i for i, x in enumerate(one) if x)
        dh = h.dims[nu]
        rho = M.coaction[mu, nu]

        def component(v, rho=rho, l=l, dh=dh, one=one, mu=mu):
            w = rho.apply(v)
            return tuple(w[k * dh + l] / one[l] for k in range(M.dims[mu]))

        transfer[mu, a] = _sub_action(component, N[a], N[mu])
    emb = tuple(s.embedding() for s in N.per_degree)
    return TrivialBModule(N.dims, B, act, transfer, emb)


def base_as_module(A: ComodulePoissonAlgebra, h: HopfGCoalgebra, copies: int = 1) -> TrivialBModule:
    """B (or B^copies) over itself, with the coaction restricted from A."""
    from .poisson import regular_module

    N = acoinvariant_module(regular_module(A), A, h)
    if copies == 1:
        return N
    return direct_sum_trivial([N] * copies)


def direct_sum_trivial(mods: Sequence[TrivialBModule]) -> TrivialBModule:
    first = mods[0]
    n = len(first.dims)
    dims = tuple(sum(m.dims[a] for m in mods) for a in range(n))
    act = tuple(tuple(block_diag([m.act[a][j] for m in mods]) for j in range(len(first.act[a]))) for a in range(n))
    transfer = {k: block_diag([m.transfer[k] for m in mods]) for k in first.transfer}
    return TrivialBModule(dims, first.base, act, transfer, None)


def check_trivial_module(N: TrivialBModule, A: ComodulePoissonAlgebra, h: HopfGCoalgebra,
                         structure: str = "N") -> Report:
    """B-module laws on N and the comodule laws of its trivial coaction."""
    from .poisson import check_comodule

    g = h.group
    rep = Report()
    for a in g.elements:
        B = N.base[a]
        n = N.dims[a]
        witness = None
        for i, bi in enumerate(B.basis):
            for j, bj in enumerate(B.basis):
                prod = A.algebra.product(a, bi, bj)
                c = B.coordinates(prod)
                lhs = _combine(N.act[a], c, n)
                rhs = N.act[a][i] @ N.act[a][j]
                if lhs != rhs:
                    witness = {"input": [i, j]}
                    break
            if witness:
                break
        rep.record(structure, "b_module.associativity", g.name(a), witness)
        c = B.coordinates(A.unit(a))
        ok = c is not None and _combine(N.act[a], c, n) == Matrix.identity(n)
        rep.record(structure, "b_module.unit", g.name(a), None if ok else {"input": ["1"]})
    rep.extend(check_comodule(N.coaction(h), N.dims, h, structure))
    return rep


def _combine(ops, coeffs, n) -> Matrix:
    out = Matrix.zeros(n, n)
    for c, op in zip(coeffs, ops):
        if c:
            out = out + op.scale(c)
    return out


@dataclass(frozen=True)
class RelativeTensor:
    """A (x)_B N per degree: quotient data plus the induced Poisson Hopf module."""
    N: TrivialBModule
    a_dims: tuple[int, ...]
    relations: tuple[Subspace, ...]
    projector: tuple[Matrix, ...]
    section: tuple[Matrix, ...]
    module: PoissonHopfModule
    certificate: Report

    @property
    def dims(self) -> tuple[int, ...]:
        return self.module.dims


def _certify_induced(rep: Report, what: str, g, a: int, proj_out: Matrix, op: Matrix, rel: Subspace) -> None:
    """proj_out o op must kill the relation subspace of the source."""
    for v in rel.basis:
        w = proj_out.apply(op.apply(v))
        if any(w):
            rep.record("AxN", f"well_defined.{what}", g.name(a), {"input": list(v), "image": list(w)})
            raise IllDefined(what, g.names[a], list(v))
    rep.record("AxN", f"well_defined.{what}", g.name(a))


def relative_tensor(A: ComodulePoissonAlgebra, N: TrivialBModule, h: HopfGCoalgebra,
                    with_action: bool = True) -> RelativeTensor:
    """A (x)_B N with a'.(a (x) n) = a'a (x) n, a' <> (a (x) n) = {a', a} (x) n and the coaction
    a (x) n -> a_(0) (x) T(n) (x) a_(1)."""
    g = h.group
    rep = Report()
    rels, projs, secs, dims = [], [], [], []
    for a in g.elements:
        d, k = A.dims[a], N.dims[a]
        gens = []
        for j, b in enumerate(N.base[a].basis):
            op = kron(A.algebra.left(a, b), Matrix.identity(k)) - kron(Matrix.identity(d), N.act[a][j])
            gens.extend(op.columns())
        rel = span(gens, d * k)
        qd, p, s = quotient(d * k, rel)
        rels.append(rel)
        projs.append(p)
        secs.append(s)
        dims.append(qd)

    def induced(name, ops_of):
        out = []
        for a in g.elements:
            k = N.dims[a]
            per = []
            for i in range(A.dims[a]):
                op = kron(ops_of(a)[i], Matrix.identity(k))
                _certify_induced(rep, name, g, a, projs[a], op, rels[a])
                per.append(projs[a] @ op @ secs[a])
            out.append(tuple(per))
        return tuple(out)

    act = induced("action", lambda a: A.mult[a]) if with_action else None
    lie = induced("lie", lambda a: A.bracket[a])
    coaction = {}
    for mu, nu in g.pairs():
        a = g(mu, nu)
        dh = h.dims[nu]
        raw = kron(Matrix.identity(A.dims[mu]), flip(dh, N.dims[mu])) @ kron(A.coaction[mu, nu], N.transfer[mu, a])
        out_proj = kron(projs[mu], Matrix.identity(dh))
        _certify_induced(rep, "coaction", g, a, out_proj, raw, rels[a])
        coaction[mu, nu] = out_proj @ raw @ secs[a]
    module = PoissonHopfModule(GradedSpace(g, tuple(dims)), act, lie, coaction)
    return RelativeTensor(N, A.dims, tuple(rels), tuple(projs), tuple(secs), module, rep)


def trivial_induction(N: TrivialBModule, A: ComodulePoissonAlgebra, h: HopfGCoalgebra) -> RelativeTensor:
    """A (x)_B N for a B-module N with trivial coaction."""
    rep = check_trivial_module(N, A, h)
    if not rep.ok:
        bad = rep.failures()[0]
        raise ValueError(f"N fails {bad.law} at {bad.indices}")
    return relative_tensor(A, N, h)


def induced_morphism(f: Sequence[Matrix], src: RelativeTensor, dst: RelativeTensor, h: HopfGCoalgebra,
                     rep: Report | None = None) -> tuple[Matrix, ...]:
    """id_A (x)_B f between balanced tensors, certified well defined."""
    g = h.group
    rep = rep if rep is not None else Report()
    out = []
    for a in g.elements:
        op = kron(Matrix.identity(src.a_dims[a]), f[a])
        _certify_induced(rep, "induced_morphism", g, a, dst.projector[a], op, src.relations[a])
        out.append(dst.projector[a] @ op @ src.section[a])
    return tuple(out)


__all__ = ["TrivialBModule", "RelativeTensor", "IllDefined", "NotTrivialComodule", "extract_transfer",
           "acoinvariant_module", "base_as_module", "direct_sum_trivial", "check_trivial_module",
           "relative_tensor", "trivial_induction", "induced_morphism"]
