"""Certify the built-in fixtures and print one summary block per fixture."""
import argparse

from phm.certify import coinvariant_table, expected_report, fundamental, lemma_suite, validate
from phm.fixtures import FIXTURES, fixture
from phm.report import FLAG


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", default=sorted(FIXTURES))
    args = ap.parse_args()
    bad = 0
    for name in args.names:
        fx = fixture(name)
        reports = {"validate": validate(fx), "lemmas": lemma_suite(fx), "expected": expected_report(fx)}
        cert = fundamental(fx)
        reports["fundamental"] = cert.report
        dims = {k: [s["dim"] for s in v] for k, v in coinvariant_table(fx).items() if isinstance(v, list)}
        print(f"{name}: H dims {fx.H.dims}, A dims {fx.A.dims}, M dims {fx.M.dims}")
        for what, rep in reports.items():
            flags = sorted({c.law for c in rep.failures(kind=FLAG)})
            print(f"  {what:12s} {len(rep)} checks, {sum(c.kind != FLAG for c in rep.failures())} failed"
                  + (f", flags raised: {', '.join(flags)}" if flags else ""))
            bad += not rep.ok
        s = cert.summary()
        print(f"  hypotheses {s['hypotheses']}, isomorphism {s['isomorphism']}, route {s['inverse_route']}")
        print(f"  coinvariant dims {dims}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
