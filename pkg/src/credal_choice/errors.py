"""Exception types raised by the decision engine."""


class CredalChoiceError(Exception):
    """Base class for all errors raised by this package."""


class SpaceMismatch(CredalChoiceError):
    """Two objects live on different possibility spaces."""


class FNotInSet(CredalChoiceError):
    """The gamble to subtract is not an element of the option set."""


class MalformedProgram(CredalChoiceError):
    """A linear program has inconsistent dimensions or bad relations."""


class CriterionMismatch(CredalChoiceError):
    """The decision criterion cannot be applied to this kind of model."""


class PreconditionFailed(CredalChoiceError):
    """A documented precondition of an operation does not hold."""


class CapExceeded(CredalChoiceError):
    """A variable-level exact decision would exceed the codomain-size cap."""


class VertexFormRequired(CredalChoiceError):
    """The operation enumerates vertices but the credal set is in constraint form."""


class ModelError(CredalChoiceError):
    """Invalid model data (bad pmf, unknown atom, unparsable rational...)."""
