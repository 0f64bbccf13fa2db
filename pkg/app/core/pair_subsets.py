from functools import lru_cache
from typing import Iterable, NamedTuple, Optional, Tuple

from app.core.errors import InvalidParameters
from app.schemas.construction import PairFamily


def p_of(k: int) -> int:
    if k < 2:
        raise InvalidParameters(f"pair family needs k >= 2, got k={k}")
    return (2 * k + 1) // 5


class PairRun(NamedTuple):
    first: int
    alpha: range
    beta: range


def pair_runs(k: int) -> Tuple[PairRun, PairRun]:
    """The family as two runs: alpha falls by 1 and beta climbs by 2 inside each run."""
    p = p_of(k)
    half = p // 2
    parity = 1 if p % 2 == 0 else 0
    head = PairRun(1, range(p - 1, p - half - 1, -1), range(k - p + 2, k - p + 2 * half + 1, 2))
    tail = PairRun(
        half + 1,
        range(2 * p + parity - half - 1, p + parity - 1, -1),
        range(k - 2 * p - parity + 2 * half + 2, k - parity + 1, 2),
    )
    return head, tail


@lru_cache(maxsize=512)
def pair_family(k: int) -> PairFamily:
    head, tail = pair_runs(k)
    return PairFamily.model_construct(
        k=k,
        p=p_of(k),
        alpha=tuple(head.alpha) + tuple(tail.alpha),
        beta=tuple(head.beta) + tuple(tail.beta),
    )


def min_alpha_index(fam: PairFamily, c: int) -> int:
    if not 1 <= c <= fam.p:
        raise InvalidParameters(f"c must lie in [1, {fam.p}], got c={c}")
    return min(range(1, c + 1), key=lambda i: (fam.alpha[i - 1], i))


def find_st_subset(lo: int, hi: int, s: int, t: int) -> Optional[Tuple[int, ...]]:
    """An s-subset of [lo, hi] summing to t, or None when t is out of reach.

    Starts from the s smallest integers and raises the largest raisable element
    until the total reaches t.
    """
    if s < 0 or hi - lo + 1 < s:
        return None
    elems = list(range(lo, lo + s))
    smallest = sum(elems)
    largest = sum(range(hi - s + 1, hi + 1))
    if not smallest <= t <= largest:
        return None
    remaining = t - smallest
    for idx in range(s - 1, -1, -1):
        if remaining == 0:
            break
        ceiling = hi if idx == s - 1 else elems[idx + 1] - 1
        step = min(ceiling - elems[idx], remaining)
        elems[idx] += step
        remaining -= step
    return tuple(elems)


def slice_min(values: Iterable[int], n: int) -> Tuple[int, ...]:
    ordered = sorted(values)
    if not 0 <= n <= len(ordered):
        raise InvalidParameters(f"cannot take {n} elements from a set of size {len(ordered)}")
    return tuple(ordered[:n])


def slice_max(values: Iterable[int], n: int) -> Tuple[int, ...]:
    ordered = sorted(values)
    if not 0 <= n <= len(ordered):
        raise InvalidParameters(f"cannot take {n} elements from a set of size {len(ordered)}")
    return tuple(ordered[len(ordered) - n:])
