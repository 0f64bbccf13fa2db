import anyio
from fastapi import APIRouter, Body
from fastapi.responses import JSONResponse

from app.core.errors import AntimagicError
from app.core.forest import parse_forest
from app.core.oracle import exhaustive_antimagic, search_11
from app.routers.common import http_error, unexpected
from app.schemas.search import SearchMode, SearchRequest

router = APIRouter()


@router.post("/search", response_class=JSONResponse)
async def run_search(payload: SearchRequest = Body(...)):
    try:
        forest = parse_forest(payload.graph)

        def sync_search():
            if payload.mode is SearchMode.ONE_ONE:
                return search_11(forest, budget_nodes=payload.budget_nodes)
            return exhaustive_antimagic(forest, budget_nodes=payload.budget_nodes)

        outcome = await anyio.to_thread.run_sync(sync_search)
        if outcome is None:
            detail = {"graph": payload.graph, "verdict": None, "screened_out": True}
        else:
            detail = {"graph": payload.graph, **outcome.model_dump(mode="json")}
        return JSONResponse(content={"detail": detail}, status_code=200)
    except AntimagicError as e:
        raise http_error(e)
    except Exception as e:
        raise unexpected("buscar un etiquetado", e)
