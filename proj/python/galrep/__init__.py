"""Exceptional primes of mod-ell Galois representations of elliptic curves.

The compiled core does the exact arithmetic; this wrapper turns its JSON
lines into dictionaries with Python integers where that is lossless.
"""

import json
from fractions import Fraction

from ._core import (  # noqa: F401
    CMCurveError,
    ResourceLimitError,
    ap,
    conductor,
    conductor_bound,
    is_cm_j,
    kodaira_symbol,
    qlist,
    report,
    report_batch,
    sturm_prime_bound,
    xns11_j,
)

__all__ = [
    "CMCurveError",
    "ResourceLimitError",
    "ap",
    "conductor",
    "conductor_bound",
    "exceptional_report",
    "exceptional_reports",
    "is_cm_j",
    "kodaira_symbol",
    "qlist",
    "report",
    "report_batch",
    "sturm_prime_bound",
    "xns11_j",
    "to_fraction",
]


def to_fraction(value):
    """Parse a 'num' or 'num/den' string into a Fraction."""
    return Fraction(value)


def exceptional_report(line, **options):
    """Report for one curve record, parsed into a dictionary."""
    return json.loads(report(line, **options))


def exceptional_reports(text, **options):
    """Reports for a whole input file, parsed into dictionaries."""
    return [json.loads(line) for line in report_batch(text, **options)]
