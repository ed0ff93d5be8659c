"""Exception hierarchy shared by every graphburn module."""


class GraphBurnError(Exception):
    """Base class for all graphburn errors."""


class EmptyGraph(GraphBurnError, ValueError):
    pass


class InvalidEdge(GraphBurnError, ValueError):
    pass


class InvalidNode(GraphBurnError, ValueError):
    pass


class InvalidParameter(GraphBurnError, ValueError):
    pass


class InvalidEmbedding(GraphBurnError, ValueError):
    pass


class Disconnected(GraphBurnError, ValueError):
    pass


class InvalidSequence(GraphBurnError, ValueError):
    pass


class InvalidPartition(GraphBurnError, ValueError):
    pass


class InvalidCover(GraphBurnError, ValueError):
    pass


class ParseError(GraphBurnError, ValueError):
    pass


class LimitExceeded(GraphBurnError, RuntimeError):
    """Raised when an enumeration or instance-size cap is hit.

    ``partial`` carries whatever was collected before the cap, if anything.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
