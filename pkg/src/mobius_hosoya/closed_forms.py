"""Closed-form Hosoya coefficients and indices of M(m, 3), transcribed as published.

Nothing here is corrected. In particular the TSZ formulas are known not to
agree with the published coefficients; ``verify`` is where that shows up.

Reading choices for the printed Harary formulas:

* the summation bound (m - 2)/2 is taken as floor((m - 2)/2), which matters
  for odd m; an empty range (bound < 3) sums to zero;
* the doubled plus in the even formula is a single plus, and the stray
  closing parenthesis in the odd formula is dropped.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .ladder import ParameterRangeError
from .polynomial import HosoyaPolynomial, IndexReport, IndexSource

TSZ_AS_PRINTED_NOTE = "tsz: as-printed, fails verification"


class ParityCase(enum.Enum):
    EVEN_M = "even"
    ODD_M = "odd"
    SPECIAL_M4 = "m=4"
    SPECIAL_M5 = "m=5"


def parity_case(m: int) -> ParityCase:
    if m < 4:
        raise ParameterRangeError(f"closed forms need m >= 4, got m={m}")
    if m == 4:
        return ParityCase.SPECIAL_M4
    if m == 5:
        return ParityCase.SPECIAL_M5
    return ParityCase.EVEN_M if m % 2 == 0 else ParityCase.ODD_M


def hosoya_coeffs_closed(m: int) -> HosoyaPolynomial:
    case = parity_case(m)
    if case is ParityCase.SPECIAL_M4:
        return HosoyaPolynomial((15, 21))
    if case is ParityCase.SPECIAL_M5:
        return HosoyaPolynomial((20, 30, 16))
    if case is ParityCase.EVEN_M:
        top = m // 2
        middle = [9 * (m - 1)] * (top - 3)
        return HosoyaPolynomial((5 * (m - 1), 8 * (m - 1), *middle, 8 * (m - 1)))
    top = (m + 1) // 2
    middle = [9 * (m - 1)] * (top - 4)
    return HosoyaPolynomial(
        (5 * (m - 1), 8 * (m - 1), *middle, 17 * (m - 1) // 2, 4 * (m - 1))
    )


def _harmonic_tail(m: int) -> Fraction:
    """sum_{i=3}^{floor((m-2)/2)} 1/i"""
    return sum((Fraction(1, i) for i in range(3, (m - 2) // 2 + 1)), Fraction(0))


def _even_indices(m: int) -> tuple[Fraction, ...]:
    M = Fraction(m)
    w = (9 * M**3 + 5 * M**2 - 62 * M + 48) / 8
    ww = Fraction(3, 16) * M**4 + Fraction(13, 16) * M**3 + Fraction(1, 4) * M**2 - Fraction(33, 4) * M + 7
    ha = 9 * M + 7 - 16 / M + 9 * (M - 1) * _harmonic_tail(m)
    tsz = (
        Fraction(1, 16) * M**4
        + Fraction(43, 24) * M**2
        + Fraction(31, 48) * M**3
        + Fraction(19, 3)
        - Fraction(53, 6) * M
    )
    return w, ww, ha, tsz


def _odd_indices(m: int) -> tuple[Fraction, ...]:
    M = Fraction(m)
    w = (9 * M**3 + 5 * M**2 - 53 * M + 39) / 8
    ww = (
        Fraction(3, 16) * M**4
        + Fraction(13, 16) * M**3
        + Fraction(13, 16) * M**2
        - Fraction(125, 16) * M
        + 6
    )
    ha = M * (9 * M + 25) / (M + 1) + 9 * (M - 1) * _harmonic_tail(m)
    tsz = (
        Fraction(1, 16) * M**4
        + Fraction(31, 48) * M**3
        + Fraction(95, 48) * M**2
        - Fraction(133, 16) * M
        + Fraction(45, 8)
    )
    return w, ww, ha, tsz


def indices_closed(m: int) -> IndexReport:
    """Published W, WW, Ha, TSZ of M(m, 3); defined for even m >= 6 and odd m >= 7."""
    case = parity_case(m)
    if case in (ParityCase.SPECIAL_M4, ParityCase.SPECIAL_M5):
        raise ParameterRangeError("closed-form indices require m >= 6")
    w, ww, ha, tsz = _even_indices(m) if case is ParityCase.EVEN_M else _odd_indices(m)
    return IndexReport(
        wiener=w,
        hyper_wiener=ww,
        harary=ha,
        tsz=tsz,
        source=IndexSource.CLOSED_FORM,
        notes=(TSZ_AS_PRINTED_NOTE,),
    )


def pair_total(m: int) -> int:
    """C(3(m-1), 2) = 3(m-1)(3m-4)/2, the number of vertex pairs in M(m, 3)."""
    return 3 * (m - 1) * (3 * m - 4) // 2
