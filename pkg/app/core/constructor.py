"""Antimagic labelings of S_{a,b} + cP_3 for every c up to the tolerance.

Every builder returns the label sets of the groups E_1..E_c, E_I and E_A;
E_B always receives the labels nobody else took.
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from app.core.bounds import tau_double_star
from app.core.errors import InternalConsistencyError, OutOfRange
from app.core.forest import build_instance, describe, partition_to_labeling
from app.core.pair_subsets import find_st_subset, min_alpha_index, pair_family, slice_min
from app.core.verifier import is_antimagic
from app.schemas.construction import ConstructionCase, ConstructionOut, ConstructionTrace
from app.schemas.forest import DoubleStarInstance, LabelPartition

logger = logging.getLogger(__name__)

# c - 2m - 2 -> (a_lo, a_hi, how many of the large labels of X join W)
_HIGH_RULES: Dict[int, Tuple[Tuple[int, int, int], ...]] = {
    0: ((3, 4, 2), (5, 9, 1)),
    1: ((4, 7, 2), (8, 12, 1)),
    2: ((5, 11, 1),),
    3: ((6, 13, 1),),
    4: (),
}


def _partition(
    inst: DoubleStarInstance,
    p3_groups: Sequence[Iterable[int]],
    internal: Iterable[int],
    side_a: Iterable[int],
) -> LabelPartition:
    groups = [tuple(g) for g in p3_groups]
    internal, side_a = tuple(internal), tuple(side_a)
    taken = [label for group in groups for label in group] + list(internal) + list(side_a)
    if len(set(taken)) != len(taken):
        raise InternalConsistencyError(f"labels reused across groups for {inst.a},{inst.b},{inst.c}")
    side_b = sorted(set(range(1, inst.k + 1)) - set(taken))
    if len(side_b) != inst.b or len(side_a) != inst.a:
        raise InternalConsistencyError(
            f"group sizes |E_A|={len(side_a)}, |E_B|={len(side_b)} do not fit a={inst.a}, b={inst.b}"
        )
    return LabelPartition(p3_groups=tuple(groups), internal=internal, side_a=side_a, side_b=tuple(side_b))


def construct_c0(a: int, b: int) -> LabelPartition:
    inst = build_instance(a, b, 0)
    return _partition(inst, [], [inst.m], range(1, a + 1))


def construct_small(a: int, b: int, c: int) -> LabelPartition:
    inst = build_instance(a, b, c)
    k = inst.k
    if c == 1:
        return _partition(inst, [(1, k - 1)], [k], range(2, a + 2))
    if c == 2:
        return _partition(inst, [(1, k - 1), (3, k - 2)], [k], [2] + list(range(4, a + 3)))
    raise InternalConsistencyError(f"construct_small handles c in {{1, 2}}, got c={c}")


def _c3_5(inst: DoubleStarInstance) -> Tuple[LabelPartition, bool]:
    a, c, k = inst.a, inst.c, inst.k
    if c in (3, 4):
        pairs = [(1, k - 1), (3, k - 2), (5, k - 3), (7, k - 4)][:c]
        used = {label for pair in pairs for label in pair} | {k}
        if a == 1:
            side_a = [4]
        else:
            side_a = [label for label in range(1, k + 1) if label not in used][:a]
        return _partition(inst, pairs, [k], side_a), False

    pairs = [(1, 2), (4, k - 3), (7, k - 4), (6, k - 2), (5, k)]
    side_a, side_b = [k - 1], []
    for label in range(8, k - 4):
        if len(side_a) == a:
            break
        (side_a if (label - 8) % 2 == 0 else side_b).append(label)
    part = _partition(inst, pairs, [3], side_a)
    if 3 + sum(part.side_a) != 3 + sum(part.side_b):
        return part, False
    if a == 1 or 8 not in part.side_a or 9 not in part.side_b:
        raise InternalConsistencyError(f"cannot repair the c=5 labeling of S_{{{a},{inst.b}}}")
    swapped = [9 if label == 8 else label for label in part.side_a]
    logger.debug("c=5 sums collide for a=%s b=%s, exchanging 8 and 9", a, inst.b)
    return _partition(inst, pairs, [3], swapped), True


def construct_c3_5(a: int, b: int, c: int) -> LabelPartition:
    if c not in (3, 4, 5):
        raise InternalConsistencyError(f"construct_c3_5 handles c in {{3, 4, 5}}, got c={c}")
    return _c3_5(build_instance(a, b, c))[0]


def _pairs_except(fam, count: int, skip: Optional[int], replacement: Tuple[int, int]) -> List[Tuple[int, int]]:
    return [replacement if i == skip else fam.pair(i) for i in range(1, count + 1)]


def construct_mid(a: int, b: int, c: int) -> Tuple[LabelPartition, ConstructionTrace]:
    inst = build_instance(a, b, c)
    m, k = inst.m, inst.k
    if not 6 <= c <= 2 * m + 1:
        raise InternalConsistencyError(f"construct_mid needs 6 <= c <= 2m+1, got c={c}, m={m}")
    fam = pair_family(k)
    p = fam.p
    if p < c:
        raise InternalConsistencyError(f"only {p} pairs available for c={c}")

    if a == 1:
        i0 = min_alpha_index(fam, c)
        alpha0, beta0 = fam.pair(i0)
        groups = _pairs_except(fam, c, i0, (1, alpha0 - 1))
        trace = ConstructionTrace(case_tag=ConstructionCase.MID_A1, chosen_index=i0, proposition_applies=True)
        return _partition(inst, groups, [alpha0], [beta0]), trace

    if p >= c + 1:
        reserved = {label for pair in fam.pairs(c + 1) for label in pair}
        rest = [label for label in range(4, k + 1) if label not in reserved]
        groups = fam.pairs(c - 1) + [(1, 2)]
        side_a = list(fam.pair(c)) + list(slice_min(rest, a - 2))
        trace = ConstructionTrace(case_tag=ConstructionCase.MID_P_GE_C1)
        return _partition(inst, groups, [3], side_a), trace

    reserved = {label for pair in fam.pairs(c) for label in pair}
    rest = [label for label in range(4, k + 1) if label not in reserved]
    top = rest[-1]
    low_a2 = slice_min(rest, a - 2)
    low_a1 = slice_min(rest, a - 1)
    s1 = 3 + top + sum(low_a2)
    s2 = 3 + top + sum(low_a1)

    if s1 <= k:
        i1 = next((i for i in range(1, c + 1) if s1 in fam.pair(i)), None)
        if i1 is None:
            raise InternalConsistencyError(f"label {s1} is not covered by the first {c} pairs")
        partner = k + i1 - s1
        if partner not in fam.pair(i1):
            raise InternalConsistencyError(f"label {partner} is not the partner of {s1} in pair {i1}")
        groups = _pairs_except(fam, c, i1, (1, 2))
        trace = ConstructionTrace(case_tag=ConstructionCase.MID_COND1, chosen_index=i1, proposition_applies=True)
        return _partition(inst, groups, [3], [partner, top] + list(low_a2)), trace

    if s2 <= k + c:
        i2 = s2 - k
        groups = _pairs_except(fam, c, i2, (1, 2))
        trace = ConstructionTrace(case_tag=ConstructionCase.MID_COND2, chosen_index=i2, proposition_applies=True)
        return _partition(inst, groups, [3], [top] + list(low_a1)), trace

    groups = fam.pairs(c - 1) + [(1, 2)]
    trace = ConstructionTrace(case_tag=ConstructionCase.MID_COND3)
    return _partition(inst, groups, [3], [top] + list(low_a1)), trace


def choose_W(a: int, m: int, c: int) -> Tuple[int, ...]:
    """The (a+1)-set holding the internal label and E_A for 2m+2 <= c <= 2m+6."""
    j = c - 2 * m - 2
    if j not in _HIGH_RULES:
        raise InternalConsistencyError(f"choose_W needs 2m+2 <= c <= 2m+6, got c={c}, m={m}")
    k = m + 2 * c
    fam = pair_family(k)
    if fam.p != c - 1:
        raise InternalConsistencyError(f"expected {c - 1} pairs for k={k}, found {fam.p}")
    reserved = {label for pair in fam.pairs(c - 1) for label in pair}
    free = [label for label in range(1, k + 1) if label not in reserved]
    z_hi = 1
    while z_hi + 1 in free:
        z_hi += 1
    extras = [label for label in free if label > z_hi]
    target = k + c

    for a_lo, a_hi, used in _HIGH_RULES[j]:
        if a_lo <= a <= a_hi:
            if len(extras) < used:
                raise InternalConsistencyError(f"X={free} lacks {used} large labels")
            head = extras[:used]
            y = find_st_subset(3, z_hi, a + 1 - used, target - sum(head))
            if y is None:
                raise InternalConsistencyError(
                    f"no ({a + 1 - used}, {target - sum(head)})-set in [3, {z_hi}]"
                )
            return tuple(sorted(y + tuple(head)))

    y = find_st_subset(3, z_hi, a + 1, target)
    if y is not None:
        return y
    fallback = tuple(range(3, 3 + a + 1))
    if 3 + a > z_hi or sum(fallback) < target:
        raise InternalConsistencyError(f"no usable W for a={a}, m={m}, c={c}")
    return fallback


def construct_high(a: int, b: int, c: int) -> Tuple[LabelPartition, ConstructionTrace]:
    inst = build_instance(a, b, c)
    m, k = inst.m, inst.k
    W = choose_W(a, m, c)
    w0 = W[0]
    fam = pair_family(k)
    groups = fam.pairs(c - 1) + [(1, w0 - 1)]
    trace = ConstructionTrace(
        case_tag=ConstructionCase.HIGH_W,
        W=W,
        proposition_applies=sum(W) == k + c,
    )
    return _partition(inst, groups, [w0], W[1:]), trace


def construct(a: int, b: int, c: int) -> Tuple[LabelPartition, ConstructionTrace]:
    inst = build_instance(a, b, c)
    tau = tau_double_star(a, b)
    if c > tau.value:
        raise OutOfRange(
            f"c={c} exceeds tau(S_{{{a},{b}}}) = {tau.value} ({tau.attained_case.value})",
            bound_name=tau.attained_case.value,
            bound=tau.value,
        )
    m = inst.m
    if c == 0:
        result = construct_c0(a, b), ConstructionTrace(case_tag=ConstructionCase.C0)
    elif c <= 2:
        result = construct_small(a, b, c), ConstructionTrace(case_tag=ConstructionCase.C1_2)
    elif c <= 5:
        part, swapped = _c3_5(inst)
        result = part, ConstructionTrace(case_tag=ConstructionCase.C3_5, swap_applied=swapped)
    elif c <= 2 * m + 1:
        result = construct_mid(a, b, c)
    else:
        result = construct_high(a, b, c)
    logger.debug("S_{%s,%s} + %sP3 built with case %s", a, b, c, result[1].case_tag.value)
    return result


def construct_labeling(a: int, b: int, c: int) -> ConstructionOut:
    part, trace = construct(a, b, c)
    inst = build_instance(a, b, c)
    labeling = partition_to_labeling(inst, part)
    report = is_antimagic(inst.forest, labeling)
    if not report.antimagic:
        w = report.duplicate_witness
        raise InternalConsistencyError(
            f"case {trace.case_tag.value} gave vertices {w.u} and {w.v} the same sum {w.shared_sum}"
        )
    return ConstructionOut.from_parts(inst, part, labeling, trace, describe(inst.forest), True)
