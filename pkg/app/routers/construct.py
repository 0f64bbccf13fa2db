import anyio
from fastapi import APIRouter, Query
from fastapi.responses import JSONResponse

from app.core.constructor import construct_labeling
from app.core.errors import AntimagicError
from app.routers.common import http_error, unexpected

router = APIRouter()


@router.get("/construct", response_class=JSONResponse)
async def read_construction(
    a: int = Query(..., ge=1),
    b: int = Query(..., ge=1),
    c: int = Query(..., ge=0),
):
    try:
        def sync_construct():
            return construct_labeling(a, b, c).model_dump(mode="json")

        detail = await anyio.to_thread.run_sync(sync_construct)
        return JSONResponse(content={"detail": detail}, status_code=200)
    except AntimagicError as e:
        raise http_error(e)
    except Exception as e:
        raise unexpected("construir el etiquetado", e)
