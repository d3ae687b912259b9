import time
from abc import ABC, abstractmethod
from typing import Optional

from pydantic import BaseModel

from ..config import EngineSettings


class VerificationOptions(BaseModel):
    """Options for a verification run"""
    presentation: Optional[str] = None
    suspended: bool = False
    max_arity: int = 4
    max_vertices: int = 3
    seed: int = 0
    samples: int = 200


class CheckReport(BaseModel):
    """Outcome of one suite"""
    suite: str
    success: bool
    checked: int = 0
    counterexample: Optional[str] = None
    message: str = ""
    time_ms: float = 0.0


class VerificationSuite(ABC):
    """Base class for verification suites"""

    name: str = ""
    description: str = ""
    default_presentation: Optional[str] = None

    def presentation_name(self, options: VerificationOptions) -> str:
        return options.presentation or self.default_presentation or ""

    @abstractmethod
    def run(self, options: VerificationOptions, settings: EngineSettings) -> CheckReport:
        """
        Run the suite

        Args:
            options: bounds, seed and the presentation to check
            settings: engine settings for the presentations the suite builds

        Returns:
            A report with the first counterexample when a check fails
        """
        pass

    def passed(self, checked: int, message: str = "") -> CheckReport:
        return CheckReport(suite=self.name, success=True, checked=checked, message=message)

    def failed(self, checked: int, counterexample: str, message: str) -> CheckReport:
        return CheckReport(suite=self.name, success=False, checked=checked,
                           counterexample=counterexample, message=message)

    def timed_run(self, options: VerificationOptions, settings: EngineSettings) -> CheckReport:
        """Run the suite and stamp the report with its wall-clock time in milliseconds"""
        start = time.perf_counter()
        report = self.run(options, settings)
        return report.model_copy(update={"time_ms": (time.perf_counter() - start) * 1000})
