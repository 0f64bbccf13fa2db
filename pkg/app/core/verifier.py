import logging
from typing import List, Optional, Tuple, Union

from pydantic import ValidationError

from app.core.bounds import tau_zero
from app.core.errors import InternalConsistencyError, InvalidLabeling
from app.core.forest import forest_code, forest_from_edges, parse_forest, vertex_sums
from app.schemas.forest import DoubleStarInstance, Forest, LabelPartition, Labeling, LabelingFile
from app.schemas.verification import DuplicateWitness, VerificationReport

logger = logging.getLogger(__name__)


def _progression(values: List[int]) -> Optional[Tuple[int, int]]:
    if len(values) < 2:
        return None
    d = values[1] - values[0]
    if d <= 0:
        return None
    if any(values[i + 1] - values[i] != d for i in range(len(values) - 1)):
        return None
    return values[0], d


def is_antimagic(g: Forest, f: Labeling) -> VerificationReport:
    sums = vertex_sums(g, f)
    # every label is counted once at each endpoint
    if sum(sums.values()) != g.m * (g.m + 1):
        raise InternalConsistencyError(f"vertex sums total {sum(sums.values())}, expected {g.m * (g.m + 1)}")
    ordered = sorted(sums.items(), key=lambda item: (item[1], item[0]))
    witness = None
    for (u, su), (v, sv) in zip(ordered, ordered[1:]):
        if su == sv:
            witness = DuplicateWitness(u=u, v=v, shared_sum=su)
            break
    values = [s for _, s in ordered]
    return VerificationReport(
        antimagic=witness is None,
        duplicate_witness=witness,
        sums=values,
        ad_progression=_progression(values) if witness is None else None,
    )


def detect_ad(g: Forest, f: Labeling) -> Optional[Tuple[int, int]]:
    return is_antimagic(g, f).ad_progression


def ad_feasible(n: int, m: int, a: int, d: int) -> bool:
    return 2 * a * n + n * (n - 1) * d == 2 * m * (m + 1)


def check_proposition_hypothesis(inst: DoubleStarInstance, part: LabelPartition) -> bool:
    """True when c <= tau_0(m) and the sums at u_1..u_{c+1} are f(E_I) together with [k+1, k+c]."""
    if inst.c > tau_zero(inst.m):
        return False
    centers = [sum(group) for group in part.p3_groups]
    centers.append(sum(part.internal) + sum(part.side_a))
    expected = list(part.internal) + list(range(inst.k + 1, inst.k + inst.c + 1))
    return sorted(centers) == sorted(expected)


def verify_labeling_file(payload: Union[dict, LabelingFile]) -> Tuple[Forest, VerificationReport]:
    if not isinstance(payload, LabelingFile):
        try:
            payload = LabelingFile.model_validate(payload)
        except ValidationError as e:
            raise InvalidLabeling(f"labeling file does not match the schema: {e.error_count()} errors")
    forest = forest_from_edges(payload.edges)
    labeling = Labeling(edges=tuple(payload.edges), labels=tuple(payload.labels))
    if payload.graph:
        declared = parse_forest(payload.graph)
        if forest_code(declared) != forest_code(forest):
            raise InvalidLabeling(f"edges do not form the declared graph {payload.graph}")
    report = is_antimagic(forest, labeling)
    logger.info("verified labeling with %s edges: antimagic=%s", forest.m, report.antimagic)
    return forest, report
