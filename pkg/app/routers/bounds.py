from fastapi import APIRouter, Query
from fastapi.responses import JSONResponse

from app.core.bounds import lemma_upper_bounds, table1_rows, tau_double_star
from app.core.errors import AntimagicError
from app.routers.common import http_error, unexpected

router = APIRouter()


@router.get("/tau", response_class=JSONResponse)
async def read_tau(a: int = Query(..., ge=1), b: int = Query(..., ge=1)):
    try:
        result = tau_double_star(a, b)
        bounds = lemma_upper_bounds(a, b)
        detail = {"a": a, "b": b, **result.model_dump(mode="json"), "bounds": bounds.model_dump()}
        return JSONResponse(content={"detail": detail}, status_code=200)
    except AntimagicError as e:
        raise http_error(e)
    except Exception as e:
        raise unexpected("calcular la tolerancia", e)


@router.get("/table1", response_class=JSONResponse)
async def read_table1(m_lo: int = Query(3, ge=3), m_hi: int = Query(29, ge=3, le=500)):
    try:
        detail = [row.model_dump(mode="json") for row in table1_rows(m_lo, m_hi)]
        return JSONResponse(content={"detail": detail}, status_code=200)
    except AntimagicError as e:
        raise http_error(e)
    except Exception as e:
        raise unexpected("generar la tabla", e)
