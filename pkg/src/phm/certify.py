"""Whole-bundle pipelines shared by the CLI, the scripts and the tests."""
from __future__ import annotations

from .coinvariants import (acoinvariants, base_algebra, check_substructures, coinvariants, poisson_annihilator,
                           poisson_center)
from .fixtures import Fixture
from .fundamental import (IsoCertificate, check_acoinvariant_implication, check_adjunction, check_gamma_iso,
                          check_p_image, check_projection_identities, fundamental_iso, lambda_map)
from .hopf import certify_hopf
from .linalg import fmt
from .poisson import (certify_comodule_poisson_algebra, check_phi, check_poisson_hopf_module, regular_module,
                      tensor_with_H)
from .relative import base_as_module
from .report import Report


def validate(fx: Fixture) -> Report:
    """Every axiom checker that applies to the declared structures."""
    h = fx.H
    rep = certify_hopf(h)
    if fx.A is not None:
        rep.extend(certify_comodule_poisson_algebra(fx.A, h))
    if fx.M is not None:
        rep.extend(check_poisson_hopf_module(fx.M, fx.A, h))
    if fx.phi is not None:
        rep.extend(check_phi(fx.phi, h, fx.A))
    return rep


def _dims_and_bases(space) -> list[dict]:
    return [{"dim": s.dim, "basis": [[fmt(x) for x in v] for v in s.basis]} for s in space]


def coinvariant_table(fx: Fixture) -> dict:
    """Dimensions and canonical bases of M^coH, M^A, M^AcoH, A^coH, A^A and B."""
    h = fx.H
    out = {}
    if fx.M is not None:
        c = coinvariants(fx.M, h)
        out["M_coH_family_dim"] = c.family_space.dim
        out["M_coH"] = _dims_and_bases(c.per_degree)
        out["M_A"] = _dims_and_bases(poisson_annihilator(fx.M).per_degree)
        out["M_AcoH"] = _dims_and_bases(acoinvariants(fx.M, h).per_degree)
    if fx.A is not None:
        out["A_coH"] = _dims_and_bases(coinvariants(fx.A, h).per_degree)
        out["A_A"] = _dims_and_bases(poisson_center(fx.A).per_degree)
        out["B"] = _dims_and_bases(base_algebra(fx.A, h).per_degree)
    return out


def fundamental(fx: Fixture) -> IsoCertificate:
    return fundamental_iso(fx.M, fx.A, fx.phi, fx.H)


def lemma_suite(fx: Fixture) -> Report:
    """The structural results checked per instance on a certified bundle."""
    h, A, M, phi = fx.H, fx.A, fx.M, fx.phi
    rep = check_substructures(M, A, h)
    rep.extend(check_p_image(M, phi, h))
    rep.extend(check_projection_identities(M, A, phi, h))
    for mod, name in ((M, "M"), (regular_module(A), "A")):
        rep.extend(check_acoinvariant_implication(mod, A, phi, h, name)[1])
    rep.extend(lambda_map(M, A, phi, h).certificate)
    rep.extend(check_gamma_iso(M, M, A, h))
    rep.extend(check_poisson_hopf_module(tensor_with_H(M, A, h, with_action=h.is_commutative()), A, h, "MxH"))
    rep.extend(check_adjunction(M, base_as_module(A, h), A, h))
    return rep


def expected_report(fx: Fixture) -> Report:
    """Recompute every entry of the fixture's expected table and compare."""
    from .oracle import expected_dimensions

    rep = Report()
    if not fx.expected:
        return rep
    h = fx.H
    got = {
        "M_coH": list(coinvariants(fx.M, h).dims),
        "M_A": list(poisson_annihilator(fx.M).dims),
        "M_AcoH": list(acoinvariants(fx.M, h).dims),
        "A_coH": list(coinvariants(fx.A, h).dims),
        "A_A": list(poisson_center(fx.A).dims),
        "B": list(base_algebra(fx.A, h).dims),
        "M": list(fx.M.dims),
    }
    cert = fundamental(fx)
    got["tensor"] = list(cert.tensor.dims)
    got["diamond_prime_trivial"] = cert.hypotheses["diamond_prime_trivial_on_M"]
    got["hypotheses_hold"] = all(cert.hypotheses.values())
    got["fundamental_iso"] = cert.iso
    got["certified"] = validate(fx).ok
    oracle = expected_dimensions(fx.A, fx.M, h)
    for key in sorted(fx.expected):
        want = fx.expected[key]
        have = got.get(key)
        rep.record(fx.name, f"expected.{key}", [], None if have == want else {"expected": want, "computed": have})
        if key in oracle:
            rep.record(fx.name, f"oracle.{key}", [], None if oracle[key] == want else
                       {"expected": want, "oracle": oracle[key]})
    return rep


__all__ = ["validate", "coinvariant_table", "fundamental", "lemma_suite", "expected_report"]
