from fastapi import APIRouter, Body
from fastapi.responses import JSONResponse

from app.core.errors import AntimagicError
from app.core.fixtures import verify_figure2
from app.core.forest import describe
from app.core.verifier import verify_labeling_file
from app.routers.common import http_error, unexpected
from app.schemas.forest import LabelingFile
from app.schemas.verification import VerifyRequest

router = APIRouter()


@router.post("/verify", response_class=JSONResponse)
async def verify_labeling(payload: VerifyRequest = Body(...)):
    try:
        labeling = LabelingFile(edges=payload.edges, labels=payload.labels, graph=payload.graph)
        forest, report = verify_labeling_file(labeling)
        detail = {"graph": describe(forest), **report.model_dump(mode="json")}
        if payload.expect_ad is not None:
            detail["expected_ad"] = list(payload.expect_ad)
            detail["matches_expected"] = report.ad_progression == tuple(payload.expect_ad)
        return JSONResponse(content={"detail": detail}, status_code=200)
    except AntimagicError as e:
        raise http_error(e)
    except Exception as e:
        raise unexpected("verificar el etiquetado", e)


@router.get("/figure2", response_class=JSONResponse)
async def read_figure2():
    try:
        detail = [result.model_dump() for result in verify_figure2()]
        return JSONResponse(content={"detail": detail}, status_code=200)
    except AntimagicError as e:
        raise http_error(e)
    except Exception as e:
        raise unexpected("verificar las figuras", e)
