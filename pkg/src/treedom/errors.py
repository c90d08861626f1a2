"""Exception types shared across the package."""


class TreedomError(Exception):
    """Base class for all errors raised by treedom."""


class ParseError(TreedomError):
    """Input text is not valid in the requested format."""


class EmptyInputError(ParseError):
    """Input contained no usable data."""


class NotATreeError(TreedomError):
    """The described graph is not a tree (cycle, disconnected, loop, duplicate edge)."""


class VertexOutOfRangeError(TreedomError):
    """A vertex index does not exist in the tree."""


class UndefinedInvariantError(TreedomError):
    """The requested invariant or check is not defined for this input."""


class TooLargeError(TreedomError):
    """Input exceeds the configured size cap for this operation."""


class NotATcoiSetError(TreedomError):
    """The given set is not a total co-independent dominating set."""


class BadParameterError(TreedomError):
    """A generator parameter is out of its valid range."""


class BadSpecError(BadParameterError):
    """A composite generator specification is inconsistent."""


class PreconditionViolatedError(TreedomError):
    """An attachment operation's precondition fails at the given vertex."""


class InvalidStepError(TreedomError):
    """A certificate step cannot be applied.

    Carries the 0-based index of the offending step.
    """

    def __init__(self, step_index, reason):
        super().__init__(f"step {step_index}: {reason}")
        self.step_index = step_index
        self.reason = reason


class CertificateMismatchError(TreedomError):
    """Certificate replay finished but does not reproduce the target tree."""


class InternalError(TreedomError):
    """An internal consistency check failed; indicates a bug."""
