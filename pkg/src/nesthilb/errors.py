"""Exception types raised across the package."""


class NesthilbError(Exception):
    pass


class FieldMismatch(NesthilbError):
    pass


class ParseError(NesthilbError, ValueError):
    def __init__(self, message, *, position=None, field=None):
        self.position = position
        self.field = field
        where = []
        if field is not None:
            where.append(f"field {field}")
        if position is not None:
            where.append(f"position {position}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class InvariantViolation(NesthilbError):
    def __init__(self, invariant, detail=""):
        self.invariant = invariant
        super().__init__(f"{invariant}: {detail}" if detail else invariant)


class NotFiniteColength(NesthilbError):
    pass


class ResolutionUnstable(NesthilbError):
    """A syzygy computation did not stabilise within its working degree."""


class NotNested(NesthilbError):
    pass


class ZeroFunctional(NesthilbError):
    pass


class DegenerateParameters(NesthilbError):
    def __init__(self, index, reason):
        self.index = index
        self.reason = reason
        super().__init__(f"I_{index}: {reason}")
