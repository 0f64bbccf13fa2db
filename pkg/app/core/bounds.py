"""Exact integer evaluation of the tolerance formula for double stars and the general upper bound.

All floors of expressions in sqrt(2) are taken through ``math.isqrt`` after
clearing the halves, so no value depends on floating point rounding.
"""

from math import isqrt
from typing import List

from app.core.errors import InvalidParameters, OutOfDomain
from app.schemas.bounds import BoundReport, Table1Cell, Table1Row, TauCase, TauResult
from app.schemas.forest import DoubleStarInstance, Forest


def _floor_sqrt2_times(n: int) -> int:
    """floor(n * sqrt(2)) for any integer n."""
    root = isqrt(2 * n * n)
    if n >= 0:
        return root
    # n*sqrt(2) is irrational for n != 0, so the ceiling is root + 1
    return -root - 1


def tau_zero(m: int) -> int:
    if m < 2:
        raise OutOfDomain(f"tau_0 is defined for m >= 2, got m={m}")
    x = 2 * m - 3
    return (x + _floor_sqrt2_times(x)) // 2 - 1


def tau_zero_alt(m: int) -> int:
    if m < 2:
        raise OutOfDomain(f"tau_0 is defined for m >= 2, got m={m}")
    return (2 * m - 5 + isqrt(8 * m * m - 24 * m + 17)) // 2


def _check_double_star(a: int, b: int):
    if a < 1 or a > b:
        raise InvalidParameters(f"double star needs 1 <= a <= b, got a={a}, b={b}")


def cap_index(a: int, b: int) -> int:
    _check_double_star(a, b)
    if a <= 2:
        return 1
    if a <= 6:
        return a - 1
    if a == 7 and b <= 21:
        return 5
    return 6


def tau_double_star(a: int, b: int) -> TauResult:
    i = cap_index(a, b)
    m = a + b + 1
    tau0 = tau_zero(m)
    tau_cap = 2 * m + i
    case = TauCase.TAU_0 if tau0 < tau_cap else TauCase.cap(i)
    return TauResult(value=min(tau0, tau_cap), attained_case=case, tau0=tau0, tau_cap=tau_cap)


def beta(g: Forest) -> int:
    degenerate = g.degenerate_components()
    if degenerate:
        raise OutOfDomain(f"components {degenerate} are isolated vertices or single edges")
    d = g.m - g.n
    h = 2 * g.m + 1
    # 2 * first term = (6d + h) + (4d + h) * sqrt(2)
    first = (6 * d + h + _floor_sqrt2_times(4 * d + h)) // 2
    second = 2 * g.m + 5 * (g.ell - g.t) + 1
    return min(first, second)


def lemma_upper_bounds(a: int, b: int) -> BoundReport:
    _check_double_star(a, b)
    m = a + b + 1
    upb2 = upb3 = None
    if a == 1:
        upb2 = 2 * m + 1
    elif a <= 6:
        upb3 = 2 * m + a - 1
    elif a == 7 and b <= 21:
        upb3 = 2 * m + 5
    base = DoubleStarInstance(a=a, b=b, c=0)
    return BoundReport(beta=beta(base.forest), lemma_upb2=upb2, lemma_upb3=upb3)


def table1_rows(m_lo: int = 3, m_hi: int = 29) -> List[Table1Row]:
    if m_lo < 3 or m_hi < m_lo:
        raise InvalidParameters(f"table rows need 3 <= m_lo <= m_hi, got {m_lo}..{m_hi}")
    rows = []
    for m in range(m_lo, m_hi + 1):
        cells = []
        for a in range(1, (m - 1) // 2 + 1):
            b = m - 1 - a
            result = tau_double_star(a, b)
            offset = result.value - 2 * m if result.value > 2 * m else None
            cells.append(
                Table1Cell(
                    a=a,
                    b=b,
                    value=result.value,
                    case=result.attained_case,
                    offset=offset,
                    starred=offset is not None and result.value == result.tau0,
                )
            )
        rows.append(Table1Row(m=m, tau0=tau_zero(m), cells=cells))
    return rows
