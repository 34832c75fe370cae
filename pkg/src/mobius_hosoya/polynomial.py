"""Hosoya polynomial and the distance-based indices read off from it.

All arithmetic is exact: coefficients are Python ints and every index is a
``fractions.Fraction``. Nothing in this module touches floating point.

With ``H(x) = sum_k c_k x^k`` the four indices are

    W   = H'(1)                     = sum_k k c_k
    WW  = 1/2 (x H)''(1)            = 1/2 sum_k k(k+1) c_k
    Ha  = int_0^1 H(x)/x dx         = sum_k c_k / k
    TSZ = 1/6 (x^2 H)'''(1)         = 1/6 sum_k k(k+1)(k+2) c_k
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

RationalLike = Union[int, Fraction]


@dataclass(frozen=True)
class HosoyaPolynomial:
    """Coefficients ``c_1..c_D`` where ``c_k`` counts vertex pairs at distance k.

    ``coeffs[0]`` is ``c_1``; there is no constant term.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if not coeffs:
            raise ValueError("a Hosoya polynomial needs at least one coefficient")
        if any(c < 0 for c in coeffs):
            raise ValueError(f"negative coefficient in {coeffs}")
        if coeffs[-1] == 0:
            raise ValueError("leading coefficient (k = diameter) must be positive")

    @classmethod
    def of(cls, coeffs: Sequence[int]) -> "HosoyaPolynomial":
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def items(self):
        """Yield ``(k, c_k)`` for k = 1..degree."""
        return enumerate(self.coeffs, start=1)

    def pair_count(self) -> int:
        return sum(self.coeffs)

    def __str__(self) -> str:
        return format_polynomial(self)


def format_polynomial(p: HosoyaPolynomial, var: str = "x") -> str:
    terms = []
    for k, c in p.items():
        if c == 0:
            continue
        power = var if k == 1 else f"{var}^{k}"
        terms.append(f"{c}{power}")
    return "H = " + " + ".join(terms)


class IndexSource(enum.Enum):
    FROM_POLYNOMIAL = "polynomial"
    CLOSED_FORM = "closed"
    # direct summation over a distance matrix; the oracle for the relations above
    DIRECT_SUMMATION = "direct"


INDEX_NAMES = ("wiener", "hyper_wiener", "harary", "tsz")


@dataclass(frozen=True)
class IndexReport:
    wiener: Fraction
    hyper_wiener: Fraction
    harary: Fraction
    tsz: Fraction
    source: IndexSource
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        for name in INDEX_NAMES:
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.source is not IndexSource.CLOSED_FORM:
            # sum_k k c_k and friends are integers whenever they come from counts
            for name in ("wiener", "hyper_wiener", "tsz"):
                value = getattr(self, name)
                if value.denominator != 1:
                    raise ArithmeticError(f"{name} = {value} is not an integer")

    def values(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.wiener, self.hyper_wiener, self.harary, self.tsz)

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(INDEX_NAMES, self.values()))


def evaluate(p: HosoyaPolynomial, x: RationalLike) -> Fraction:
    x = Fraction(x)
    total = Fraction(0)
    power = Fraction(1)
    for c in p.coeffs:
        power *= x
        total += c * power
    return total


def wiener(p: HosoyaPolynomial) -> Fraction:
    return Fraction(sum(k * c for k, c in p.items()))


def hyper_wiener(p: HosoyaPolynomial) -> Fraction:
    return Fraction(sum(k * (k + 1) * c for k, c in p.items()), 2)


def harary(p: HosoyaPolynomial) -> Fraction:
    return sum((Fraction(c, k) for k, c in p.items()), Fraction(0))


def tsz(p: HosoyaPolynomial) -> Fraction:
    return Fraction(sum(k * (k + 1) * (k + 2) * c for k, c in p.items()), 6)


def indices_from_polynomial(p: HosoyaPolynomial) -> IndexReport:
    return IndexReport(
        wiener=wiener(p),
        hyper_wiener=hyper_wiener(p),
        harary=harary(p),
        tsz=tsz(p),
        source=IndexSource.FROM_POLYNOMIAL,
    )


def format_rational(x: Fraction) -> str:
    """``p/q`` in lowest terms, bare integer when q == 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
