"""Exception and warning types shared across the package."""


class CstomoError(Exception):
    """Base class for all cstomo errors."""


class EmptyInputError(CstomoError):
    """Edge list (or other required input) was empty."""


class SelfLoopError(CstomoError):
    """An edge joins a node to itself."""


class DuplicateEdgeError(CstomoError):
    """The same unordered node pair appears more than once."""


class IsolatedNodeError(CstomoError):
    """A random walk was started from a degree-zero node."""


class InvalidCountError(CstomoError):
    """A count argument (walks, steps) is out of range."""


class EdgeIndexOutOfRangeError(CstomoError):
    """A walk references an edge index >= the declared edge count."""


class InvalidSparsityError(CstomoError):
    """Requested support size exceeds the number of links."""


class DimensionMismatchError(CstomoError):
    """Matrix/vector shapes do not conform."""


class NonFiniteInputError(CstomoError):
    """An input array contains NaN or infinity."""


class ZeroMaxBetweennessError(CstomoError):
    """Prior scaling is undefined when the maximum betweenness is zero."""


class SingularC11Error(CstomoError):
    """The support Gram block is singular; the plain irrepresentable
    condition is undefined for this draw."""


class ConfigError(CstomoError):
    """Experiment configuration file is malformed or inconsistent."""


class DisconnectedGraphWarning(UserWarning):
    """Betweenness was computed on a disconnected graph; node pairs in
    different components contribute zero."""


class SparsityWarning(UserWarning):
    """Requested congested-set size is large relative to the link count."""
