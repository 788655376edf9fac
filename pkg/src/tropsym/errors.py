"""Exception types. Every error carries a stable ``code`` used by the CLI."""


class TropError(Exception):
    code = "error"

    def to_json(self):
        return {"code": self.code, "message": str(self)}


class ParseError(TropError):
    code = "parse_error"

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
        self.position = position

    def to_json(self):
        out = super().to_json()
        if self.position is not None:
            out["position"] = self.position
        return out


class DimensionError(TropError, ValueError):
    code = "dimension_mismatch"


class DomainError(TropError, ValueError):
    code = "domain_error"


class ResourceError(TropError):
    code = "resource_limit"


class NotSymmetricError(TropError):
    """Raised when an input that must be (block-)symmetric is not.

    ``permutation`` is the offending permutation (of variables, or of rows for
    block symmetry) and ``point`` a rational point where the function and its
    permuted copy disagree.
    """

    code = "not_symmetric"

    def __init__(self, message, permutation=None, point=None):
        super().__init__(message)
        self.permutation = permutation
        self.point = point

    def to_json(self):
        from .semiring import format_scalar

        out = super().to_json()
        if self.permutation is not None:
            out["permutation"] = list(self.permutation)
        if self.point is not None:
            out["point"] = [format_scalar(v) for v in self.point]
        return out
