"""Exception types shared by the whole package."""


class SuccinctError(Exception):
    """Base class for errors raised by this package."""


class MalformedEncodingError(SuccinctError, ValueError):
    """A parenthesis or tree encoding is not well formed.

    ``position`` is the first offending index when one can be named.
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class InvalidNodeError(SuccinctError, ValueError):
    """A node handle does not refer to a node of the tree."""


class NotFoundError(SuccinctError, LookupError):
    """A rank or occurrence number has no corresponding position."""


class EmptyTreeError(SuccinctError, ValueError):
    """The operation needs at least one node."""


class QueryRangeError(SuccinctError, IndexError):
    """A query range is empty, inverted or outside the indexed array."""
