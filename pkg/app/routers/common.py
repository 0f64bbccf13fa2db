import logging

from fastapi import HTTPException, status

from app.core.errors import (
    AntimagicError,
    InternalConsistencyError,
    OutOfRange,
    RefuseToRun,
    SearchExhausted,
)

logger = logging.getLogger(__name__)


def http_error(e: AntimagicError) -> HTTPException:
    if isinstance(e, InternalConsistencyError):
        logger.error("internal consistency failure: %s", e.message)
        code = status.HTTP_500_INTERNAL_SERVER_ERROR
    elif isinstance(e, (OutOfRange, RefuseToRun, SearchExhausted)):
        code = status.HTTP_422_UNPROCESSABLE_ENTITY
    else:
        code = status.HTTP_400_BAD_REQUEST
    return HTTPException(status_code=code, detail=f"{e.code}: {e.message}")


def unexpected(action: str, e: Exception) -> HTTPException:
    logger.exception("unexpected failure while %s", action)
    return HTTPException(status_code=500, detail=f"Error al {action}: {str(e)}")
