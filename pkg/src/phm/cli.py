"""Command-line entry point.

    phm validate BUNDLE          axiom checks
    phm coinvariants BUNDLE      dimensions and bases of the coinvariant spaces
    phm fundamental BUNDLE       the A (x)_B M^AcoH -> M certificate
    phm lemmas BUNDLE            the per-instance structural checks
    phm fixtures export NAME     write a fixture bundle
    phm fixtures list

Reports go to stdout, one JSON record per line; a readable summary goes to
stderr. Exit status: 0 all certified, 1 a certification failed, 2 usage, 3
the bundle could not be parsed.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import certify
from .bundle import BundleError, dumps, parse_bundle
from .fixtures import FIXTURES, MUTANTS, fixture

OK, FAILED, USAGE, PARSE = 0, 1, 2, 3


def _emit(line: dict) -> None:
    sys.stdout.write(json.dumps(line, sort_keys=True, separators=(",", ":")) + "\n")


def _load(path: str):
    try:
        return parse_bundle(path)
    except BundleError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return None


def _validated(fx, need=("A", "M", "phi")) -> bool:
    rep = certify.validate(fx)
    if rep.ok:
        missing = [r for r in need if getattr(fx, r) is None]
        if missing:
            print(f"bundle lacks role(s) {', '.join(missing)}", file=sys.stderr)
            return False
        return True
    sys.stdout.write(rep.to_jsonl())
    print(rep.summary(), file=sys.stderr)
    print("validation failed; nothing further computed", file=sys.stderr)
    return False


def cmd_validate(args) -> int:
    fx = _load(args.bundle)
    if fx is None:
        return PARSE
    rep = certify.validate(fx)
    sys.stdout.write(rep.to_jsonl())
    print(rep.summary(), file=sys.stderr)
    print(f"{len(rep)} checks, {len(rep.failures())} failed", file=sys.stderr)
    return OK if rep.ok else FAILED


def cmd_coinvariants(args) -> int:
    fx = _load(args.bundle)
    if fx is None:
        return PARSE
    if not _validated(fx, need=("A",)):
        return FAILED
    table = certify.coinvariant_table(fx)
    names = fx.H.group.names
    for key, per in table.items():
        if isinstance(per, int):
            _emit({"space": key, "dim": per})
            continue
        for a, entry in enumerate(per):
            _emit({"space": key, "degree": names[a], **entry})
    for key, per in table.items():
        dims = per if isinstance(per, int) else [x["dim"] for x in per]
        print(f"{key:>18}  {dims}", file=sys.stderr)
    return OK


def cmd_fundamental(args) -> int:
    fx = _load(args.bundle)
    if fx is None:
        return PARSE
    if not _validated(fx):
        return FAILED
    cert = certify.fundamental(fx)
    sys.stdout.write(cert.report.to_jsonl())
    summary = cert.summary()
    note = f"hypotheses: {summary['hypotheses']}; isomorphism: {summary['isomorphism']}"
    _emit({"certificate": summary, "note": note, "status": "pass" if cert.passed else "fail"})
    print(f"{note} (inverse via {summary['inverse_route']})", file=sys.stderr)
    for k, v in summary["hypothesis_flags"].items():
        print(f"  {k}: {v}", file=sys.stderr)
    return OK if cert.passed else FAILED


def cmd_lemmas(args) -> int:
    fx = _load(args.bundle)
    if fx is None:
        return PARSE
    if not _validated(fx):
        return FAILED
    rep = certify.lemma_suite(fx)
    sys.stdout.write(rep.to_jsonl())
    print(rep.summary(), file=sys.stderr)
    return OK if rep.ok else FAILED


def cmd_export(args) -> int:
    try:
        fx = fixture(args.name)
    except KeyError:
        if args.name not in MUTANTS:
            print(f"unknown fixture {args.name!r}; choose from {', '.join(list(FIXTURES) + list(MUTANTS))}",
                  file=sys.stderr)
            return USAGE
        fx = MUTANTS[args.name][0]()
    text = dumps(fx)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return OK


def cmd_list(args) -> int:
    for name in FIXTURES:
        print(name)
    for name, (_, law) in MUTANTS.items():
        print(f"{name}  (breaks {law})")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="phm", description="Exact certification of Poisson Hopf module structures.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, fn, help_ in (("validate", cmd_validate, "run every applicable axiom checker"),
                            ("coinvariants", cmd_coinvariants, "print coinvariant dimensions and bases"),
                            ("fundamental", cmd_fundamental, "certify A (x)_B M^AcoH -> M"),
                            ("lemmas", cmd_lemmas, "run the structural per-instance checks")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("bundle")
        sp.set_defaults(func=fn)
    fx = sub.add_parser("fixtures", help="built-in fixtures")
    fsub = fx.add_subparsers(dest="action", required=True)
    ex = fsub.add_parser("export", help="write a fixture bundle")
    ex.add_argument("name")
    ex.add_argument("-o", "--output", help="file to write (default: stdout)")
    ex.set_defaults(func=cmd_export)
    ls = fsub.add_parser("list", help="list fixture and mutant names")
    ls.set_defaults(func=cmd_list)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
