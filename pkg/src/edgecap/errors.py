"""Exception hierarchy shared by every module."""


class EdgecapError(Exception):
    pass


class GraphError(EdgecapError, ValueError):
    """A graph or weighted graph violates its structural invariants."""


class ParseError(EdgecapError, ValueError):
    pass


class MalformedHeaderError(ParseError):
    pass


class VertexRangeError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


class SelfLoopError(ParseError):
    pass


class WeightError(ParseError):
    pass


class MalformedEdgeError(ParseError):
    pass


class InvalidCoverError(EdgecapError, ValueError):
    pass


class GuardExceeded(EdgecapError, RuntimeError):
    """An enumeration would exceed its configured size guard."""


class FamilyError(EdgecapError, ValueError):
    pass


class EdgeNotInGraph(EdgecapError, ValueError):
    pass
