class InvtabError(ValueError):
    """Base class for domain errors raised by this package."""


class InvalidCodeError(InvtabError):
    pass


class DimensionError(InvtabError):
    pass


class NoCoverError(InvtabError):
    pass


class InvalidDiagramError(InvtabError):
    pass


class NotGrassmannianError(InvtabError):
    pass


class ExpansionError(InvtabError):
    pass


class NoMoveError(InvtabError):
    pass


class ConsistencyError(RuntimeError):
    """An internal invariant failed; this signals a bug, not bad input."""
