from typing import Optional


class AntimagicError(Exception):
    code = "error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class InvalidParameters(AntimagicError):
    code = "invalid-parameters"


class OutOfDomain(AntimagicError):
    code = "out-of-domain"


class OutOfScope(AntimagicError):
    code = "out-of-scope"


class OutOfRange(AntimagicError):
    code = "out-of-range"

    def __init__(self, message: str, bound_name: str, bound: int):
        super().__init__(message)
        self.bound_name = bound_name
        self.bound = bound


class MalformedPartition(AntimagicError):
    code = "malformed-partition"


class InvalidLabeling(AntimagicError):
    code = "invalid-labeling"


class ForestParseError(AntimagicError):
    code = "parse-error"

    def __init__(self, message: str, position: Optional[int] = None):
        super().__init__(message)
        self.position = position


class RefuseToRun(AntimagicError):
    code = "refuse-to-run"


class SearchExhausted(AntimagicError):
    code = "search-exhausted"


class InternalConsistencyError(AntimagicError):
    code = "internal-consistency"
