"""Check records and reports.

A report is a flat, ordered list of checks, one per (law, index tuple).
``kind`` separates the axioms a structure must satisfy from derived
consistency identities and from informational flags (hypotheses that some
constructions need but that are not axioms of the structure itself).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .linalg import Matrix, first_difference, fmt

AXIOM = "axiom"
CONSISTENCY = "consistency"
FLAG = "flag"


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return fmt(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


@dataclass(frozen=True)
class Check:
    structure: str
    law: str
    indices: tuple = ()
    passed: bool = True
    witness: dict | None = None
    kind: str = AXIOM

    def record(self) -> dict:
        return {
            "structure": self.structure,
            "law": self.law,
            "indices": list(self.indices),
            "kind": self.kind,
            "status": "pass" if self.passed else "fail",
            "witness": _jsonable(self.witness),
        }


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "Report | Iterable[Check]") -> "Report":
        self.checks.extend(other.checks if isinstance(other, Report) else other)
        return self

    def record(self, structure: str, law: str, indices: Sequence = (), witness: dict | None = None,
               kind: str = AXIOM) -> Check:
        return self.add(Check(structure, law, tuple(indices), witness is None, witness, kind))

    def compare(self, structure: str, law: str, indices: Sequence, lhs: Matrix, rhs: Matrix,
                inputs: Sequence | None = None, kind: str = AXIOM) -> Check:
        """Record one check asserting lhs == rhs; the witness is the first differing column."""
        j = first_difference(lhs, rhs)
        witness = None
        if j is not None:
            witness = {"input": list(inputs[j]) if inputs is not None else [j],
                       "lhs": list(lhs.column(j)), "rhs": list(rhs.column(j))}
        return self.record(structure, law, indices, witness, kind)

    @property
    def ok(self) -> bool:
        """True when every axiom and consistency check passed (flags are informational)."""
        return all(c.passed for c in self.checks if c.kind != FLAG)

    def failures(self, kind: str | None = None) -> list[Check]:
        return [c for c in self.checks if not c.passed and (kind is None or c.kind == kind)]

    def failed_laws(self, kind: str | None = AXIOM) -> set[str]:
        return {c.law for c in self.failures(kind)}

    def passed(self, law: str) -> bool:
        hits = [c for c in self.checks if c.law == law]
        return bool(hits) and all(c.passed for c in hits)

    def lines(self) -> list[str]:
        return [json.dumps(c.record(), sort_keys=True, separators=(",", ":")) for c in self.checks]

    def to_jsonl(self) -> str:
        return "".join(line + "\n" for line in self.lines())

    def summary(self) -> str:
        by_law: dict[tuple[str, str], list[bool]] = {}
        for c in self.checks:
            by_law.setdefault((c.structure, c.law), []).append(c.passed)
        out = []
        for (s, law), results in by_law.items():
            bad = results.count(False)
            status = "ok" if not bad else f"FAIL ({bad}/{len(results)})"
            out.append(f"{s:>10}  {law:<40} {status}")
        return "\n".join(out)

    def __len__(self) -> int:
        return len(self.checks)
