"""Brute-force dimension oracle.

Recomputes the coinvariant, annihilator and balanced-tensor dimensions of a
fixture by enumerating every scalar constraint explicitly and row reducing
with plain dense Gauss-Jordan. Nothing here goes through ``linalg``'s
subspace machinery, so the fixture ``expected`` tables it produces are an
independent check on the main code path.
"""
from __future__ import annotations

from fractions import Fraction


def _rref(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    m = [list(r) for r in rows if any(r)]
    out_row = 0
    for c in range(ncols):
        piv = next((r for r in range(out_row, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[out_row], m[piv] = m[piv], m[out_row]
        p = m[out_row][c]
        m[out_row] = [x / p for x in m[out_row]]
        for r in range(len(m)):
            if r != out_row and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[out_row])]
        out_row += 1
        if out_row == len(m):
            break
    return m[:out_row]


def rank(rows: list[list[Fraction]], ncols: int) -> int:
    return len(_rref(rows, ncols))


def nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    red = _rref(rows, ncols)
    pivots = [next(c for c in range(ncols) if r[c] != 0) for r in red]
    out = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in zip(red, pivots):
            v[p] = -r[f]
        out.append(v)
    return out


def _entry(m, i, j) -> Fraction:
    return m.rows[i][j]


def coinvariant_rows(coaction, dims, h) -> tuple[list[list[Fraction]], list[int]]:
    """rho_{a,b}(x_{ab}) - x_a (x) 1_b = 0, one row per (a, b, k, l)."""
    g = h.group
    offs, pos = [], 0
    for a in g.elements:
        offs.append(pos)
        pos += dims[a]
    rows = []
    for a in g.elements:
        for b in g.elements:
            ab = g.mul[a][b]
            rho = coaction[a, b]
            one = h.algebra.unit[b]
            for k in range(dims[a]):
                for l in range(h.dims[b]):
                    row = [Fraction(0)] * pos
                    for i in range(dims[ab]):
                        row[offs[ab] + i] += _entry(rho, k * h.dims[b] + l, i)
                    row[offs[a] + k] -= one[l]
                    rows.append(row)
    return rows, offs


def _projection_dim(base_rows, ncols, offs, dims, a, extra=()) -> int:
    rows = list(base_rows) + list(extra)
    killed = rows + [[Fraction(1) if c == offs[a] + k else Fraction(0) for c in range(ncols)]
                     for k in range(dims[a])]
    return (ncols - rank(rows, ncols)) - (ncols - rank(killed, ncols))


def annihilator_rows(lie_ops, dim_m: int, offset: int, ncols: int) -> list[list[Fraction]]:
    """a . m = 0 for every basis a, as rows on the coordinates of m."""
    rows = []
    for op in lie_ops:
        for r in range(dim_m):
            row = [Fraction(0)] * ncols
            for i in range(dim_m):
                row[offset + i] = op.rows[r][i]
            rows.append(row)
    return rows


def module_dimensions(M, h) -> dict:
    """Per degree: dim M^coH, dim M^A and dim M^AcoH, by rank counting."""
    g = h.group
    rows, offs = coinvariant_rows(M.coaction, M.dims, h)
    ncols = sum(M.dims)
    coh, ann, acoh = [], [], []
    for a in g.elements:
        coh.append(_projection_dim(rows, ncols, offs, M.dims, a))
        arows = annihilator_rows(M.lie[a], M.dims[a], offs[a], ncols)
        ann.append(M.dims[a] - rank(arows, ncols))
        acoh.append(_projection_dim(rows, ncols, offs, M.dims, a, arows))
    return {"coH": coh, "A": ann, "AcoH": acoh}


def acoinvariant_bases(M, h) -> list[list[list[Fraction]]]:
    """Bases of M^AcoH_a, as projections of solution families."""
    g = h.group
    rows, offs = coinvariant_rows(M.coaction, M.dims, h)
    ncols = sum(M.dims)
    out = []
    for a in g.elements:
        arows = annihilator_rows(M.lie[a], M.dims[a], offs[a], ncols)
        sols = nullspace(rows + arows, ncols)
        proj = [s[offs[a]:offs[a] + M.dims[a]] for s in sols]
        red = _rref(proj, M.dims[a])
        out.append(red)
    return out


def balanced_tensor_dims(A, M, h) -> list[int]:
    """dim A_a (x)_{B_a} M^AcoH_a = dim(A_a (x) N_a) - rank of the balancing relations."""
    from .poisson import regular_module

    g = h.group
    B = acoinvariant_bases(regular_module(A), h)
    N = acoinvariant_bases(M, h)
    out = []
    for a in g.elements:
        da, dn = A.dims[a], M.dims[a]
        nb = N[a]
        k = len(nb)
        rels = []
        for i in range(da):
            for b in B[a]:
                ab = _apply_bilinear(A.mult[a], _unit(da, i), b)
                for t, n in enumerate(nb):
                    bn = _apply_bilinear(M.act[a], b, n)
                    coords = _coords_in(nb, bn, dn)
                    row = [Fraction(0)] * (da * k)
                    for x in range(da):
                        row[x * k + t] += ab[x]
                    for s in range(k):
                        row[i * k + s] -= coords[s]
                    rels.append(row)
        out.append(da * k - rank(rels, da * k))
    return out


def _unit(n, i):
    return [Fraction(1) if j == i else Fraction(0) for j in range(n)]


def _apply_bilinear(ops, u, v):
    n = ops[0].nrows if ops else 0
    out = [Fraction(0)] * n
    for i, c in enumerate(u):
        if c:
            for r in range(n):
                out[r] += c * sum(ops[i].rows[r][j] * v[j] for j in range(len(v)))
    return out


def _coords_in(basis, v, n):
    """Coordinates of v in a reduced echelon basis (raises when v is outside)."""
    coords = []
    rest = list(v)
    for b in basis:
        p = next(c for c in range(n) if b[c] != 0)
        x = rest[p]
        coords.append(x)
        rest = [r - x * y for r, y in zip(rest, b)]
    if any(rest):
        raise ValueError("vector outside the span")
    return coords


def expected_dimensions(A, M, h) -> dict:
    """The table embedded in each fixture's ``expected`` block."""
    from .poisson import regular_module

    md = module_dimensions(M, h)
    ad = module_dimensions(regular_module(A), h)
    return {
        "M_coH": md["coH"],
        "M_A": md["A"],
        "M_AcoH": md["AcoH"],
        "A_coH": ad["coH"],
        "A_A": ad["A"],
        "B": ad["AcoH"],
        "tensor": balanced_tensor_dims(A, M, h),
        "M": list(M.dims),
    }
