"""Exact certification of Poisson Hopf modules over Hopf group-coalgebras."""
from .bundle import BundleError, IndexOutOfRange, MalformedRational, SchemaViolation, dumps, loads, parse_bundle
from .certify import coinvariant_table, expected_report, fundamental, lemma_suite, validate
from .fixtures import FIXTURES, MUTANTS, Fixture, fixture
from .fundamental import IsoCertificate, fundamental_iso
from .linalg import Matrix, Subspace
from .report import Report

__version__ = "0.1.0"

__all__ = ["BundleError", "IndexOutOfRange", "MalformedRational", "SchemaViolation", "dumps", "loads", "parse_bundle",
           "coinvariant_table", "expected_report", "fundamental", "lemma_suite", "validate", "FIXTURES", "MUTANTS",
           "Fixture", "fixture", "IsoCertificate", "fundamental_iso", "Matrix", "Subspace", "Report"]
