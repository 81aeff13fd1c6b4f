"""Exponent bookkeeping and inequality report records.

Admissible exponent triples (p, q, r) in [1, 2]^3 satisfy
1/p1 + 1/q1 = 1/r in terms of the Hoelder conjugates.  Under that
constraint the Young-type convolution constant
C = sqrt(2)^((2/p - 1) + (2/q - 1) + (2/r - 1)) collapses to sqrt(2),
strictly below both the prior constant 4 and sqrt(2)^3.
"""

import math
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidExponent

ADMISSIBILITY_TOL = 1e-12

SQRT2 = math.sqrt(2.0)


def conjugate(p):
    """Hoelder conjugate: 1/p + 1/p1 = 1, with 1 and inf paired."""
    if p == math.inf:
        return 1.0
    if p < 1:
        raise InvalidExponent(f"exponent must be >= 1, got {p}")
    if p == 1:
        return math.inf
    return p / (p - 1.0)


def _reciprocal(p):
    return 0.0 if p == math.inf else 1.0 / p


@dataclass(frozen=True)
class ExponentTriple:
    """Exponents (p, q, r) for the Young-type convolution inequality."""

    p: float
    q: float
    r: float

    def __post_init__(self):
        for name, v in (("p", self.p), ("q", self.q), ("r", self.r)):
            if not 1.0 <= v <= 2.0:
                raise InvalidExponent(f"{name} must lie in [1, 2], got {v}")
        defect = abs(
            _reciprocal(self.p1) + _reciprocal(self.q1) - 1.0 / self.r
        )
        if defect > ADMISSIBILITY_TOL:
            raise InvalidExponent(
                f"triple ({self.p}, {self.q}, {self.r}) violates "
                f"1/p1 + 1/q1 = 1/r by {defect:.3e}"
            )

    @property
    def p1(self):
        return conjugate(self.p)

    @property
    def q1(self):
        return conjugate(self.q)

    @property
    def r1(self):
        return conjugate(self.r)


def hausdorff_young_constant(p):
    """sqrt(2)^(2/p - 1), the transform's L^p -> L^p1 operator bound."""
    if not 1.0 <= p <= 2.0:
        raise InvalidExponent(f"p must lie in [1, 2], got {p}")
    return SQRT2 ** (2.0 / p - 1.0)


def young_constant(triple):
    """Closed-form convolution constant for an admissible triple."""
    s = (2.0 / triple.p - 1.0) + (2.0 / triple.q - 1.0) + (2.0 / triple.r - 1.0)
    return SQRT2 ** s


@dataclass(frozen=True)
class InequalityReport:
    """One inequality trial: both sides, the bound constant, and the verdict."""

    lhs: float
    constant: float
    rhs: float
    ratio: float
    passed: bool
    p: float
    q: Optional[float] = None
    r: Optional[float] = None
    prior_ratio: Optional[float] = None
    witness_ids: tuple = ()
