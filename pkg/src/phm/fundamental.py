"""The projections p^M, the induced action <>', the retraction lambda, the
comparison map Phi: A (x)_B M^{AcoH} -> M with its inverse, the gamma
isomorphism of hom spaces and the induction/coinvariants adjunction.

Maps are matrices in the fixed bases; every identity is checked exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coinvariants import acoinvariants, coinvariants
from .hopf import HopfGCoalgebra
from .homspace import (A_LINEAR, B_LINEAR, COLINEAR, LIE_LINEAR, PA_HOM, TRANSFER, check_morphism,
                       hom_space)
from .linalg import (Matrix, Subspace, flip, hstack, inverse, kernel, kron, solve, span, vstack)
from .poisson import (ColinearUnitMap, ComodulePoissonAlgebra, PoissonHopfModule, check_phi,
                      check_poisson_hopf_module, regular_module, tensor_with_H, total_coaction)
from .relative import (RelativeTensor, TrivialBModule, acoinvariant_module, induced_morphism, relative_tensor,
                       trivial_induction)
from .report import CONSISTENCY, FLAG, Report


def _bilinear(ops: Sequence[Matrix], nrows: int) -> Matrix:
    """(x, v) -> op(x) v as a matrix on X (x) V."""
    if not ops:
        return Matrix.zeros(nrows, 0)
    return hstack(list(ops), nrows)


# -- p^M -----------------------------------------------------------------------

def p_map(M: PoissonHopfModule, phi: ColinearUnitMap, h: HopfGCoalgebra, a: int) -> Matrix:
    """p^M_a: M_e -> M_a, m -> phi_a(S^-1_a(m_(1,a^-1))) . m_(0,a)."""
    g = h.group
    sinv = h.antipode_inverse[a]
    n, d = M.dims[a], len(M.act[a])
    rho = M.coaction[a, g.inv(a)]
    twist = kron(Matrix.identity(n), phi.maps[a] @ sinv)  # M_a (x) H_{a^-1} -> M_a (x) A_a
    return _bilinear(M.act[a], n) @ flip(n, d) @ twist @ rho


def p_maps(M: PoissonHopfModule, phi: ColinearUnitMap, h: HopfGCoalgebra) -> tuple[Matrix, ...]:
    return tuple(p_map(M, phi, h, a) for a in h.group.elements)


def check_p_image(M: PoissonHopfModule, phi: ColinearUnitMap, h: HopfGCoalgebra, structure: str = "M") -> Report:
    """The families (p_a(m))_a for m in M_e span exactly the coinvariant families."""
    g = h.group
    e = g.identity
    P = p_maps(M, phi, h)
    coh = coinvariants(M, h)
    stacked = vstack(list(P), M.dims[e])
    image = span(stacked.columns(), sum(M.dims))
    rep = Report()
    missing = next((v for v in coh.family_space.basis if not image.contains(v)), None)
    rep.record(structure, "projection.image_contains_coinvariants", [],
               None if missing is None else {"input": list(missing)})
    extra = next((v for v in image.basis if not coh.family_space.contains(v)), None)
    rep.record(structure, "projection.image_in_coinvariants", [],
               None if extra is None else {"input": list(extra)})
    return rep


# -- <>' ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiamondPrime:
    """a <>' on M^{coH}_a, one operator per basis vector of A_e, in the basis of M^{coH}_a."""
    coinvariants: tuple[Subspace, ...]
    ops: tuple[tuple[Matrix, ...], ...]
    certificate: Report

    def trivial(self) -> bool:
        return all(op.is_zero() for per in self.ops for op in per)


class DiamondPrimeIllDefined(ValueError):
    pass


def diamond_prime(M: PoissonHopfModule, A: ComodulePoissonAlgebra, phi: ColinearUnitMap,
                  h: HopfGCoalgebra, structure: str = "M") -> DiamondPrime:
    g = h.group
    e = g.identity
    rep = Report()
    P = p_maps(M, phi, h)
    coh = coinvariants(M, h)
    ops = []
    for a in g.elements:
        p = P[a]
        sub = coh.per_degree[a]
        ker = kernel(p)
        # section of p onto M^{coH}_a, then coordinates
        sec_cols = []
        for v in sub.basis:
            x = solve(p, v)
            if x is None:
                raise DiamondPrimeIllDefined(f"p_{g.names[a]} does not reach M^coH_{g.names[a]}")
            sec_cols.append(x)
        sec = Matrix.from_columns(sec_cols, M.dims[e])
        coords = sub.coordinate_map()
        per = []
        for i, lie in enumerate(M.lie[e]):
            pl = p @ lie
            bad = next((v for v in ker.basis if any(pl.apply(v))), None)
            rep.record(structure, "diamond_prime.well_defined", g.name(a) + [i],
                       None if bad is None else {"input": list(bad), "image": list(pl.apply(bad))})
            if bad is not None:
                raise DiamondPrimeIllDefined(f"kernel of p_{g.names[a]} is not stable under basis element {i}")
            per.append(coords @ pl @ sec)
        ops.append(tuple(per))
    return DiamondPrime(coh.per_degree, tuple(ops), rep)


def check_diamond_prime_laws(dp: DiamondPrime, M: PoissonHopfModule, A: ComodulePoissonAlgebra,
                             phi: ColinearUnitMap, h: HopfGCoalgebra, structure: str = "M") -> Report:
    """Lie law of <>' and colinearity of a <>' p_{ab}(m)."""
    g = h.group
    e = g.identity
    rep = Report()
    br = A.bracket[e]
    de = A.dims[e]
    for a in g.elements:
        ops = dp.ops[a]
        k = dp.coinvariants[a].dim
        for i in range(de):
            for j in range(de):
                c = br[i].column(j)
                lhs = Matrix.zeros(k, k)
                for x, op in zip(c, ops):
                    if x:
                        lhs = lhs + op.scale(x)
                rhs = ops[i] @ ops[j] - ops[j] @ ops[i]
                rep.compare(structure, "diamond_prime.lie", g.name(a) + [i, j], lhs, rhs)
    P = p_maps(M, phi, h)
    for a, b in g.pairs():
        one = Matrix.from_columns([h.unit(b)], h.dims[b])
        for i, lie in enumerate(M.lie[e]):
            lhs = M.coaction[a, b] @ P[g(a, b)] @ lie
            rhs = kron(P[a] @ lie, one)
            rep.compare(structure, "diamond_prime.colinear", g.name(a, b) + [i], lhs, rhs)
    return rep


# -- the projection identities -------------------------------------------------------------

def check_projection_identities(M: PoissonHopfModule, A: ComodulePoissonAlgebra, phi: ColinearUnitMap,
                                h: HopfGCoalgebra, structure: str = "M") -> Report:
    """The four identities relating p^M, p^A, <> and <>'.

    Identities (2) and (4) rely on phi being multiplicative and central; a
    failure there is annotated with the hypotheses that were missing.
    """
    g = h.group
    e = g.identity
    rep = Report()
    PM = p_maps(M, phi, h)
    PA = p_maps(regular_module(A), phi, h)
    phi_rep = check_phi(phi, h, A)
    missing = sorted({c.law for c in phi_rep.failures()} | {c.law for c in phi_rep.failures(FLAG)})
    ne, de = M.dims[e], A.dims[e]
    inputs_em = [(i, k) for i in range(de) for k in range(ne)]
    for a in g.elements:
        n = M.dims[a]
        # (1a) p(a.m) = p^A(a) . p(m)
        lhs = hstack([PM[a] @ M.act[e][i] for i in range(de)], n)
        rhs = hstack([M.act_op(a, PA[a].column(i)) @ PM[a] for i in range(de)], n)
        rep.compare(structure, "projection.multiplicative", g.name(a), lhs, rhs, inputs_em)
        # (1b) p(a <> p_e(m)) = p(a <> m)
        lhs = hstack([PM[a] @ M.lie[e][i] @ PM[e] for i in range(de)], n)
        rhs = hstack([PM[a] @ M.lie[e][i] for i in range(de)], n)
        rep.compare(structure, "projection.stable", g.name(a), lhs, rhs, inputs_em)
        # (2) a <> p_a(m) = phi_a(a_(1,a)) . p_a(a_(0,e) <> m), for a in A_a
        rho = A.coaction[e, a]
        dh = h.dims[a]
        lhs_cols, rhs_cols = [], []
        for i in range(A.dims[a]):
            lhs_cols.append(M.lie[a][i] @ PM[a])
            col = rho.column(i)
            acc = Matrix.zeros(n, ne)
            for r, x in enumerate(col):
                if x:
                    j, l = divmod(r, dh)
                    acc = acc + (M.act_op(a, phi.maps[a].column(l)) @ PM[a] @ M.lie[e][j]).scale(x)
            rhs_cols.append(acc)
        lhs = hstack(lhs_cols, n)
        rhs = hstack(rhs_cols, n)
        chk = rep.compare(structure, "projection.lie_factorization", g.name(a), lhs, rhs,
                          [(i, k) for i in range(A.dims[a]) for k in range(ne)])
        if not chk.passed and missing:
            rep.checks[-1] = type(chk)(chk.structure, chk.law, chk.indices, False,
                                       dict(chk.witness, missing_hypotheses=missing), chk.kind)
        # (4) phi_a(m_(1,a)) . p_a(m_(0,e)) = m, for m in M_a
        chk = rep.compare(structure, "projection.reconstruction", g.name(a), reconstruction(M, phi, h, a, PM[a]),
                          Matrix.identity(n))
        if not chk.passed and missing:
            rep.checks[-1] = type(chk)(chk.structure, chk.law, chk.indices, False,
                                       dict(chk.witness, missing_hypotheses=missing), chk.kind)
    dp = diamond_prime(M, A, phi, h, structure)
    rep.extend(dp.certificate)
    rep.extend(check_diamond_prime_laws(dp, M, A, phi, h, structure))
    return rep


def reconstruction(M: PoissonHopfModule, phi: ColinearUnitMap, h: HopfGCoalgebra, a: int,
                   p: Matrix | None = None) -> Matrix:
    """m -> phi_a(m_(1,a)) . p_a(m_(0,e)) on M_a."""
    g = h.group
    e = g.identity
    p = p if p is not None else p_map(M, phi, h, a)
    n = M.dims[a]
    inner = kron(phi.maps[a], p) @ flip(M.dims[e], h.dims[a]) @ M.coaction[e, a]  # M_a -> A_a (x) M_a
    return _bilinear(M.act[a], n) @ inner


def check_acoinvariant_implication(M: PoissonHopfModule, A: ComodulePoissonAlgebra, phi: ColinearUnitMap,
                                   h: HopfGCoalgebra, structure: str = "M") -> tuple[bool, Report]:
    """If <>' is trivial on M^{coH} then M^{AcoH} = M^{coH}.  Returns (flag, report)."""
    g = h.group
    dp = diamond_prime(M, A, phi, h, structure)
    flag = dp.trivial()
    rep = Report()
    rep.record(structure, "diamond_prime.trivial", [], None if flag else {"trivial": False}, kind=FLAG)
    if flag:
        coh = coinvariants(M, h)
        acoh = acoinvariants(M, h)
        for a in g.elements:
            same = coh.per_degree[a] == acoh[a]
            rep.record(structure, "diamond_prime.acoinvariants_equal", g.name(a),
                       None if same else {"coH": coh.per_degree[a].dim, "AcoH": acoh[a].dim}, kind=CONSISTENCY)
    return flag, rep


# -- lambda ----------------------------------------------------------------------------------

@dataclass(frozen=True)
class Retraction:
    maps: tuple[Matrix, ...]
    tensor: PoissonHopfModule
    route: str
    certificate: Report


def lambda_map(M: PoissonHopfModule, A: ComodulePoissonAlgebra, phi: ColinearUnitMap,
               h: HopfGCoalgebra, structure: str = "lambda") -> Retraction:
    """lambda_a(m_e (x) h) = phi_a(h S^-1_a(m_(1,a^-1))) . m_(0,a) on the (e, a) summand, zero elsewhere."""
    g = h.group
    e = g.identity
    sinv = h.antipode_inverse
    T = tensor_with_H(M, A, h, with_action=h.is_commutative())
    maps = []
    for a in g.elements:
        n, d, dh = M.dims[a], A.dims[a], h.dims[a]
        ne = M.dims[e]
        q = kron(Matrix.identity(n), sinv[a]) @ M.coaction[a, g.inv(a)]  # M_e -> M_a (x) H_a
        act = _bilinear(M.act[a], n) @ flip(n, d)
        blocks = []
        for l in range(dh):
            blocks.append(act @ kron(Matrix.identity(n), phi.maps[a] @ h.algebra.mult[a][l]) @ q)
        # column (k, l) of the (e, a) summand is blocks[l] e_k
        off = 0
        for mu, nu in g.factorizations(a):
            if mu == e:
                break
            off += M.dims[mu] * h.dims[nu]
        entries = []
        for k in range(ne):
            for l in range(dh):
                for r, x in enumerate(blocks[l].column(k)):
                    if x:
                        entries.append((r, off + k * dh + l, x))
        maps.append(Matrix.from_sparse(n, T.dims[a], entries))
    maps = tuple(maps)
    rep = Report()
    rho = total_coaction(M, h)
    for a in g.elements:
        rep.compare(structure, "lambda.retraction", g.name(a), maps[a] @ rho[a], Matrix.identity(M.dims[a]))
    rep.extend(check_morphism(maps, T, M, (COLINEAR,), h, structure))
    if h.is_commutative():
        route = "H commutative"
    elif check_phi(phi, h, A).passed("phi.multiplicative"):
        route = "phi multiplicative"
    else:
        route = "none"
    if route != "none":
        rep.extend(check_morphism(maps, T, M, (LIE_LINEAR,), h, structure))
    else:
        rep.record(structure, "lambda.lie_linear_not_certified", [], {"reason": "H noncommutative, phi not multiplicative"},
                   kind=FLAG)
    if T.act is not None:
        a_rep = check_morphism(maps, T, M, (A_LINEAR,), h, structure)
        rep.extend(c.__class__(c.structure, c.law, c.indices, c.passed, c.witness, FLAG) for c in a_rep.checks)
    return Retraction(maps, T, route, rep)


# -- Phi and Psi -----------------------------------------------------------------------------

@dataclass(frozen=True)
class IsoCertificate:
    forward: tuple[Matrix, ...]
    inverse: tuple[Matrix, ...] | None
    tensor: RelativeTensor
    route: str
    hypotheses: dict
    iso: bool
    report: Report

    @property
    def passed(self) -> bool:
        return self.iso and self.report.ok

    def summary(self) -> dict:
        return {
            "hypotheses": "satisfied" if all(self.hypotheses.values()) else "not satisfied",
            "hypothesis_flags": dict(self.hypotheses),
            "isomorphism": "verified" if self.iso else "failed",
            "inverse_route": self.route,
            "tensor_dims": list(self.tensor.dims),
        }


def phi_map(M: PoissonHopfModule, T: RelativeTensor, h: HopfGCoalgebra, rep: Report) -> tuple[Matrix, ...]:
    """Phi_a(a (x) m) = a . m, certified to vanish on the balancing relations."""
    g = h.group
    out = []
    for a in g.elements:
        n = M.dims[a]
        emb = T.N.embedding[a]
        raw = _bilinear(M.act[a], n) @ kron(Matrix.identity(T.a_dims[a]), emb)
        bad = next((v for v in T.relations[a].basis if any(raw.apply(v))), None)
        rep.record("Phi", "well_defined.Phi", g.name(a), None if bad is None else {"input": list(bad)})
        out.append(raw @ T.section[a])
    return tuple(out)


def fundamental_iso(M: PoissonHopfModule, A: ComodulePoissonAlgebra, phi: ColinearUnitMap,
                    h: HopfGCoalgebra) -> IsoCertificate:
    g = h.group
    rep = Report()
    N = acoinvariant_module(M, A, h)
    T = relative_tensor(A, N, h)
    rep.extend(T.certificate)
    rep.extend(check_poisson_hopf_module(T.module, A, h, "AxN"))
    Phi = phi_map(M, T, h, rep)
    rep.extend(check_morphism(Phi, T.module, M, PA_HOM, h, "Phi"))

    phi_rep = check_phi(phi, h, A)
    flag_m, rep_m = check_acoinvariant_implication(M, A, phi, h, "M")
    flag_a, rep_a = check_acoinvariant_implication(regular_module(A), A, phi, h, "A")
    rep.extend(rep_m).extend(rep_a)
    coh = coinvariants(M, h)
    same = all(coh.per_degree[a] == acoinvariants(M, h)[a] for a in g.elements)
    hypotheses = {
        "phi_algebra_map": phi_rep.passed("phi.multiplicative"),
        "phi_central": phi_rep.passed("phi.central"),
        "phi_colinear_unital": phi_rep.passed("phi.colinear") and phi_rep.passed("phi.unital"),
        "diamond_prime_trivial_on_M": flag_m,
        "diamond_prime_trivial_on_A": flag_a,
        "acoinvariants_equal_coinvariants": same,
    }
    for k, v in hypotheses.items():
        rep.record("Phi", f"hypothesis.{k}", [], None if v else {"holds": False}, kind=FLAG)

    # Psi through phi and p^M when p^M lands in M^{AcoH}, otherwise the matrix inverse
    P = p_maps(M, phi, h)
    acoh = acoinvariants(M, h)
    via_p = all(acoh[a].contains_subspace(span(P[a].columns(), M.dims[a])) for a in g.elements)
    e = g.identity
    Psi = []
    route = "projection" if via_p else "matrix-inverse"
    for a in g.elements:
        if via_p:
            coords = acoh[a].coordinate_map()
            raw = kron(phi.maps[a], coords @ P[a]) @ flip(M.dims[e], h.dims[a]) @ M.coaction[e, a]
            Psi.append(T.projector[a] @ raw)
        else:
            inv = inverse(Phi[a])
            if inv is None:
                Psi = None
                break
            Psi.append(inv)
    iso = Psi is not None
    if iso:
        Psi = tuple(Psi)
        for a in g.elements:
            c1 = rep.compare("Phi", "iso.psi_after_phi", g.name(a), Psi[a] @ Phi[a], Matrix.identity(T.dims[a]))
            c2 = rep.compare("Phi", "iso.phi_after_psi", g.name(a), Phi[a] @ Psi[a], Matrix.identity(M.dims[a]))
            iso = iso and c1.passed and c2.passed
    else:
        for a in g.elements:
            if Phi[a].nrows != Phi[a].ncols or inverse(Phi[a]) is None:
                rep.record("Phi", "iso.invertible", g.name(a),
                           {"shape": list(Phi[a].shape), "rank": Phi[a].rank()})
    return IsoCertificate(Phi, Psi, T, route, hypotheses, iso, rep)


# -- gamma ----------------------------------------------------------------------------------------

def gamma(f: Sequence[Matrix], M: PoissonHopfModule, N: PoissonHopfModule, h: HopfGCoalgebra) -> tuple[Matrix, ...]:
    """gamma(f)_a = (id (x) eps) o pi_{a,e} o f_a."""
    g = h.group
    e = g.identity
    out = []
    for a in g.elements:
        off = 0
        for mu, nu in g.factorizations(a):
            if mu == a:
                break
            off += N.dims[mu] * h.dims[nu]
        proj = kron(Matrix.identity(N.dims[a]), h.counit)
        block = f[a].row_block(off, N.dims[a] * h.dims[e])
        out.append(proj @ block)
    return tuple(out)


def gamma_prime(gm: Sequence[Matrix], M: PoissonHopfModule, h: HopfGCoalgebra) -> tuple[Matrix, ...]:
    """gamma'(g)_a = stacked (g_mu (x) id) o rho_{mu,nu} over mu nu = a."""
    g = h.group
    return tuple(vstack([kron(gm[mu], Matrix.identity(h.dims[nu])) @ M.coaction[mu, nu]
                         for mu, nu in g.factorizations(a)], M.dims[a]) for a in g.elements)


def check_gamma_iso(M: PoissonHopfModule, N: PoissonHopfModule, A: ComodulePoissonAlgebra, h: HopfGCoalgebra,
                    with_action: bool = False, structure: str = "gamma") -> Report:
    """gamma and gamma' are inverse between Hom^H(M, N (x) H) and Hom(M, N) (Lie-linear, optionally A-linear)."""
    kinds = (LIE_LINEAR, A_LINEAR) if with_action else (LIE_LINEAR,)
    NH = tensor_with_H(N, A, h, with_action=with_action)
    left = hom_space(M, NH, kinds + (COLINEAR,), h)
    right = hom_space(M, N, kinds, h)
    rep = Report()
    rep.record(structure, "gamma.dimensions", [], None if left.dim == right.dim else
               {"colinear": left.dim, "plain": right.dim})
    gmat, gpmat = [], []
    for i, f in enumerate(left.basis()):
        c = right.coordinates(gamma(f, M, N, h))
        rep.record(structure, "gamma.lands_in_hom", [i], None if c is not None else {"input": [i]})
        gmat.append(c)
    for i, gm in enumerate(right.basis()):
        c = left.coordinates(gamma_prime(gm, M, h))
        rep.record(structure, "gamma_prime.lands_in_hom", [i], None if c is not None else {"input": [i]})
        gpmat.append(c)
    if all(c is not None for c in gmat + gpmat):
        G = Matrix.from_columns(gmat, right.dim)
        Gp = Matrix.from_columns(gpmat, left.dim)
        rep.compare(structure, "gamma.after_gamma_prime", [], G @ Gp, Matrix.identity(right.dim))
        rep.compare(structure, "gamma_prime.after_gamma", [], Gp @ G, Matrix.identity(left.dim))
    return rep


# -- adjunction ------------------------------------------------------------------------------------

def _unit_map(T: RelativeTensor, A: ComodulePoissonAlgebra, a: int) -> Matrix:
    """n -> 1 (x) n in the quotient coordinates."""
    k = T.N.dims[a]
    one = Matrix.from_columns([A.unit(a)], A.dims[a])
    return T.projector[a] @ kron(one, Matrix.identity(k))


def check_adjunction(M: PoissonHopfModule, N: TrivialBModule, A: ComodulePoissonAlgebra, h: HopfGCoalgebra,
                     structure: str = "adjunction") -> Report:
    g = h.group
    rep = Report()
    T = trivial_induction(N, A, h)  # A (x)_B N
    rep.extend(T.certificate)
    MA = acoinvariant_module(M, A, h)  # M^{AcoH}
    left = hom_space(T.module, M, PA_HOM, h)
    right = hom_space(N, MA, (B_LINEAR, TRANSFER), h)
    rep.record(structure, "psi.dimensions", [], None if left.dim == right.dim else
               {"induced": left.dim, "coinvariant": right.dim})

    def psi(f):
        out = []
        for a in g.elements:
            img = f[a] @ _unit_map(T, A, a)
            cols = [MA_sub[a].coordinates(c) for c in img.columns()]
            if any(c is None for c in cols):
                return None
            out.append(Matrix.from_columns(cols, MA.dims[a]))
        return tuple(out)

    def psi_prime(gm):
        out = []
        for a in g.elements:
            raw = _bilinear(M.act[a], M.dims[a]) @ kron(Matrix.identity(A.dims[a]), MA.embedding[a] @ gm[a])
            bad = next((v for v in T.relations[a].basis if any(raw.apply(v))), None)
            rep.record(structure, "well_defined.psi_prime", g.name(a), None if bad is None else {"input": list(bad)})
            out.append(raw @ T.section[a])
        return tuple(out)

    MA_sub = acoinvariants(M, h)
    pm, ppm = [], []
    for i, f in enumerate(left.basis()):
        img = psi(f)
        c = right.coordinates(img) if img is not None else None
        rep.record(structure, "psi.lands_in_hom", [i], None if c is not None else {"input": [i]})
        pm.append(c)
    for i, gm in enumerate(right.basis()):
        c = left.coordinates(psi_prime(gm))
        rep.record(structure, "psi_prime.lands_in_hom", [i], None if c is not None else {"input": [i]})
        ppm.append(c)
    if all(c is not None for c in pm + ppm):
        P = Matrix.from_columns(pm, right.dim)
        Pp = Matrix.from_columns(ppm, left.dim)
        rep.compare(structure, "psi.after_psi_prime", [], P @ Pp, Matrix.identity(right.dim))
        rep.compare(structure, "psi_prime.after_psi", [], Pp @ P, Matrix.identity(left.dim))

    # unit eps_N: N -> (A (x)_B N)^{AcoH}
    TA = acoinvariant_module(T.module, A, h)
    TA_sub = acoinvariants(T.module, h)
    eps = []
    for a in g.elements:
        u = _unit_map(T, A, a)
        cols = [TA_sub[a].coordinates(c) for c in u.columns()]
        ok = all(c is not None for c in cols)
        rep.record(structure, "unit.lands_in_acoinvariants", g.name(a), None if ok else {"degree": g.names[a]})
        eps.append(Matrix.from_columns(cols, TA.dims[a]) if ok else None)
    eps_ok = all(x is not None for x in eps)
    if eps_ok:
        rep.extend(check_morphism(eps, N, TA, (B_LINEAR, TRANSFER), h, "unit"))

    # counit delta_M = Phi on A (x)_B M^{AcoH}
    TM = relative_tensor(A, MA, h)
    delta = phi_map(M, TM, h, rep)
    rep.extend(check_morphism(delta, TM.module, M, PA_HOM, h, "counit"))

    # triangle 1: delta_{A(x)N} o F2(eps_N) = id on A (x)_B N
    if eps_ok:
        TT = relative_tensor(A, TA, h)  # A (x)_B (A (x)_B N)^{AcoH}
        f2eps = induced_morphism(eps, T, TT, h, rep)
        delta_t = phi_map(T.module, TT, h, rep)
        for a in g.elements:
            rep.compare(structure, "triangle.induction", g.name(a), delta_t[a] @ f2eps[a], Matrix.identity(T.dims[a]))

    # triangle 2: F1(delta_M) o eps_{M^{AcoH}} = id on M^{AcoH}
    TM_sub = acoinvariants(TM.module, h)
    for a in g.elements:
        u = _unit_map(TM, A, a)  # M^{AcoH} -> A (x)_B M^{AcoH}
        ok = all(TM_sub[a].contains(c) for c in u.columns())
        back = delta[a] @ u  # into M
        cols = [MA_sub[a].coordinates(c) for c in back.columns()]
        if not ok or any(c is None for c in cols):
            rep.record(structure, "triangle.coinvariants", g.name(a), {"degree": g.names[a]})
            continue
        rep.compare(structure, "triangle.coinvariants", g.name(a), Matrix.from_columns(cols, MA.dims[a]),
                    Matrix.identity(MA.dims[a]))
    return rep


def check_morphism_restriction(f: Sequence[Matrix], M: PoissonHopfModule, N: PoissonHopfModule,
                               h: HopfGCoalgebra, structure: str = "f") -> Report:
    """A morphism of Poisson Hopf modules maps M^{AcoH} into N^{AcoH}."""
    g = h.group
    src, dst = acoinvariants(M, h), acoinvariants(N, h)
    rep = Report()
    for a in g.elements:
        bad = next((v for v in src[a].basis if not dst[a].contains(f[a].apply(v))), None)
        rep.record(structure, "morphism.restricts_to_acoinvariants", g.name(a),
                   None if bad is None else {"input": list(bad)})
    return rep


__all__ = ["p_map", "p_maps", "check_p_image", "DiamondPrime", "DiamondPrimeIllDefined", "diamond_prime",
           "check_diamond_prime_laws", "check_projection_identities", "reconstruction",
           "check_acoinvariant_implication", "Retraction", "lambda_map", "IsoCertificate", "phi_map",
           "fundamental_iso", "gamma", "gamma_prime", "check_gamma_iso", "check_adjunction",
           "check_morphism_restriction"]
