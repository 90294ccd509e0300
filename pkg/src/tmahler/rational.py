"""Exact reduced rationals and the classical (logarithmic) Mahler measure.

For p/q in lowest terms the Mahler measure is log max(|p|, q).  It vanishes
exactly on the torsion elements +-1, and is at least log 2 everywhere else.
All measure computations work with |p|: negating a rational multiplies by the
torsion element -1 and leaves every measure unchanged.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import DomainError

# Inputs are desk-scale; enumeration cost explodes long before 63 bits.
INT_CAP = 2**63 - 1

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(-?\d+))?$")


@dataclass(frozen=True, order=True)
class ReducedRational:
    """A nonzero rational in lowest terms with positive denominator."""

    numerator: int
    denominator: int

    def __post_init__(self):
        if self.numerator == 0:
            raise DomainError("numerator must be nonzero")
        if self.denominator < 1:
            raise DomainError("denominator must be positive")
        if math.gcd(abs(self.numerator), self.denominator) != 1:
            raise DomainError(
                f"{self.numerator}/{self.denominator} is not in lowest terms"
            )
        if abs(self.numerator) > INT_CAP or self.denominator > INT_CAP:
            raise DomainError("numerator or denominator exceeds 2**63 - 1")

    @property
    def is_unit(self) -> bool:
        """True for +-1, the torsion rationals with measure zero."""
        return self.denominator == 1 and abs(self.numerator) == 1

    def __str__(self) -> str:
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"


def reduce(p: int, q: int) -> ReducedRational:
    """Return p/q in lowest terms with positive denominator."""
    if p == 0:
        raise DomainError("numerator must be nonzero")
    if q == 0:
        raise DomainError("denominator must be nonzero")
    if q < 0:
        p, q = -p, -q
    g = math.gcd(abs(p), q)
    return ReducedRational(p // g, q // g)


def parse_rational(text: str) -> ReducedRational:
    """Parse 'p/q' or 'p' (optional leading '-'); rejects 0 and p/0."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise DomainError(f"cannot parse rational from {text!r}")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    return reduce(p, q)


def multiply(a: ReducedRational, b: ReducedRational) -> ReducedRational:
    return reduce(a.numerator * b.numerator, a.denominator * b.denominator)


def invert(a: ReducedRational) -> ReducedRational:
    return reduce(a.denominator, a.numerator)


def mahler_measure(alpha: ReducedRational) -> float:
    """log max(|numerator|, denominator); zero exactly on +-1."""
    m = max(abs(alpha.numerator), alpha.denominator)
    return 0.0 if m == 1 else math.log(m)
