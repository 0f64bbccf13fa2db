import anyio
from fastapi import APIRouter, Query
from fastapi.responses import JSONResponse

from app.core.errors import AntimagicError
from app.core.forest import describe
from app.core.number_theory import census_shapes, pell_solutions, screen_density, screen_double_star_pell
from app.core.oracle import search_11
from app.routers.common import http_error, unexpected

router = APIRouter()


@router.get("/pell", response_class=JSONResponse)
async def read_pell(max_n: int = Query(..., ge=3), screen: bool = False):
    try:
        detail = []
        for sol in pell_solutions(max_n):
            row = {"n": sol.n, "m": sol.m, "density_ok": screen_density(sol.n, sol.m)}
            if screen:
                row["screen"] = screen_double_star_pell(sol).model_dump()
            detail.append(row)
        return JSONResponse(content={"detail": detail}, status_code=200)
    except AntimagicError as e:
        raise http_error(e)
    except Exception as e:
        raise unexpected("resolver la ecuación de Pell", e)


@router.get("/census", response_class=JSONResponse)
async def read_census(n: int = Query(..., ge=3), m: int = Query(..., ge=2), check_one_one: bool = False):
    try:
        def sync_census():
            rows = []
            for forest in census_shapes(n, m):
                row = {"graph": describe(forest), "n": forest.n, "m": forest.m}
                if check_one_one:
                    outcome = search_11(forest)
                    row["one_one"] = None if outcome is None else outcome.verdict.value
                rows.append(row)
            return rows

        detail = await anyio.to_thread.run_sync(sync_census)
        return JSONResponse(content={"detail": detail}, status_code=200)
    except AntimagicError as e:
        raise http_error(e)
    except Exception as e:
        raise unexpected("enumerar los bosques", e)
