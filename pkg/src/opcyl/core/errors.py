from typing import List, Optional


class OperadError(ValueError):
    """Base class for errors raised by the operad engine"""


class ArityError(OperadError):
    """Slot out of range, or arities that do not fit together"""


class DegreeError(OperadError):
    """Homogeneous operands of different degrees"""


class UnknownGeneratorError(OperadError):
    """A label that the alphabet of a presentation cannot resolve"""

    def __init__(self, label: str, presentation: Optional[str] = None):
        self.label = label
        self.presentation = presentation
        where = f" in presentation '{presentation}'" if presentation else ""
        super().__init__(f"Unknown generator '{label}'{where}")


class StageError(OperadError):
    """A label above the stage an operation works at"""


class FiltrationError(OperadError):
    """The perturbation failed to lower the filtration degree"""


class NotLinearError(OperadError):
    """A linear-only construction was requested on a non-linear presentation"""


class PresentationError(OperadError):
    """Malformed presentation file or unknown built-in name"""


class ConfigurationError(OperadError):
    """Invalid value in the environment configuration"""


class ExpressionError(OperadError):
    """An element expression that failed to parse or evaluate"""

    def __init__(self, message: str, errors: Optional[List] = None):
        self.errors = list(errors or [])
        super().__init__(message)
