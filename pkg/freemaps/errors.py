"""Exceptions raised by freemaps."""


class FreeMapsError(Exception):
    """Base class of the errors a computation can raise."""


class ZeroPolynomial(FreeMapsError):
    """A nonzero polynomial was required."""


class EndpointIsRoot(FreeMapsError):
    """An interval endpoint is a root of the polynomial.

    Shrink or split the interval, or use the squarefree part.

    """

    def __init__(self, endpoint):
        super(EndpointIsRoot, self).__init__(
            f"The endpoint {endpoint} is a root."
        )
        self.endpoint = endpoint


class DimensionMismatch(FreeMapsError):
    """Sizes of weights, loops and derivative families disagree."""


class StructureError(FreeMapsError):
    """An ansatz or collar profile lacks the structure a check needs."""


class SpecValidationError(FreeMapsError):
    """A JSON document does not describe a valid input.

    `messages` holds one message per field-level problem.

    """

    def __init__(self, messages: list[str]):
        super(SpecValidationError, self).__init__("; ".join(messages))
        self.messages = messages
