import json
import logging
from pathlib import Path
from typing import List

from app.core.verifier import verify_labeling_file
from app.schemas.forest import LabelingFile
from app.schemas.verification import FixtureResult

logger = logging.getLogger(__name__)

FIGURE2_DIR = Path(__file__).resolve().parent.parent / "fixtures" / "figure2"

FIGURE2_PANELS = [
    "s12_5p3",
    "p5_5p3",
    "s4_5p3",
    "2p4_4p3",
    "2s3_4p3",
    "p4_s3_4p3",
]


def load_figure2() -> List[LabelingFile]:
    fixtures = []
    for name in FIGURE2_PANELS:
        with open(FIGURE2_DIR / f"{name}.json", encoding="utf-8") as fh:
            fixtures.append(LabelingFile.model_validate(json.load(fh)))
    return fixtures


def verify_figure2() -> List[FixtureResult]:
    results = []
    for name, fixture in zip(FIGURE2_PANELS, load_figure2()):
        forest, report = verify_labeling_file(fixture)
        passed = report.antimagic and report.sums == list(range(1, forest.n + 1))
        results.append(
            FixtureResult(
                name=name,
                graph=fixture.graph,
                antimagic=report.antimagic,
                ad_progression=list(report.ad_progression or ()),
                passed=passed,
                discrepancies=(fixture.metadata or {}).get("printed_sum_discrepancies", []),
            )
        )
        logger.debug("figure 2 panel %s passed=%s", name, passed)
    return results
