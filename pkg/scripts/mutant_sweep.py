"""Validate every mutant and show which law it breaks, with the first witness."""
import argparse
import json

from phm.certify import validate
from phm.fixtures import MUTANTS


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--all-witnesses", action="store_true", help="print every failing check")
    args = ap.parse_args()
    missed = 0
    for name, (build, law) in sorted(MUTANTS.items()):
        rep = validate(build())
        failed = rep.failed_laws(kind=None)
        hit = failed == {law}
        missed += not hit
        print(f"{name}: expected {law}, failed {sorted(failed)} {'ok' if hit else 'MISMATCH'}")
        for c in rep.failures(kind=None)[: None if args.all_witnesses else 1]:
            print(f"  {c.structure} {c.law} {list(c.indices)} witness {json.dumps(c.record()['witness'])}")
    return 1 if missed else 0


if __name__ == "__main__":
    raise SystemExit(main())
