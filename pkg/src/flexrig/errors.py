"""Exception hierarchy shared by all flexrig modules."""


class FlexRigError(Exception):
    """Base class for every error raised by flexrig."""


class DegenerateCoupling(FlexRigError, ValueError):
    pass


class DimensionMismatch(FlexRigError, ValueError):
    pass


class GraphError(FlexRigError, ValueError):
    """Malformed graph input."""


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class UnknownVertex(GraphError):
    pass


class OutOfRange(GraphError):
    pass


class TooLarge(FlexRigError, ValueError):
    pass


class UnknownName(FlexRigError, KeyError):
    pass


class UnknownEdge(FlexRigError, ValueError):
    pass


class Disconnected(FlexRigError, ValueError):
    pass


class BaseListTooShort(FlexRigError, ValueError):
    pass


class InvalidEmbedding(FlexRigError, ValueError):
    pass


class NotAnEdge(FlexRigError, ValueError):
    pass


class IrrationalLength(FlexRigError, ValueError):
    pass
