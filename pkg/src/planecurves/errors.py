"""Exception hierarchy and CLI exit codes."""

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_RESOURCE = 2
EXIT_CONSISTENCY = 3


class PlaneCurveError(Exception):
    """Base class for every error raised by this package."""

    exit_code = EXIT_INPUT


class InputError(PlaneCurveError):
    exit_code = EXIT_INPUT


class ZeroPolynomial(InputError, ValueError):
    pass


class NotHomogeneous(InputError, ValueError):
    pass


class InexactDivision(PlaneCurveError, ArithmeticError):
    exit_code = EXIT_CONSISTENCY


class PolySyntaxError(InputError, SyntaxError):
    """Parse failure; ``position`` is the 0-based offset of the offending token."""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ValidationError(InputError, ValueError):
    pass


class ResourceLimit(PlaneCurveError):
    exit_code = EXIT_RESOURCE


class NonStabilizing(PlaneCurveError):
    """Hilbert function of S/I_f did not settle; usually a non-reduced input."""

    exit_code = EXIT_INPUT


class ParityError(PlaneCurveError, ValueError):
    exit_code = EXIT_CONSISTENCY


class NegativeMultiplicity(PlaneCurveError, ValueError):
    exit_code = EXIT_CONSISTENCY


class InconsistentTopology(PlaneCurveError):
    exit_code = EXIT_CONSISTENCY


class UnsupportedSingularity(InputError, ValueError):
    pass
