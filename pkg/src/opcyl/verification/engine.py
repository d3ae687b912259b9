import logging
from typing import Any, Dict, List, Optional, Sequence

from pydantic import BaseModel

from ..config import EngineSettings, get_settings
from ..core.errors import OperadError
from .base import CheckReport, VerificationOptions, VerificationSuite

logger = logging.getLogger(__name__)


class VerificationResult(BaseModel):
    """Result of a verification run"""
    success: bool
    reports: List[CheckReport] = []
    stats: Dict[str, Any] = {}
    errors: List[str] = []


class VerificationEngine:
    """Runs named verification suites"""

    def __init__(self, suites: Dict[str, VerificationSuite], settings: Optional[EngineSettings] = None):
        self.suites = suites
        self.settings = settings or get_settings()

    def verify(self, names: Sequence[str], options: VerificationOptions) -> VerificationResult:
        """Run the suites in order; stops at the first suite that fails"""
        unknown = [name for name in names if name not in self.suites]
        if unknown:
            return VerificationResult(success=False, errors=[f"Unknown suite: {unknown[0]}"])

        reports: List[CheckReport] = []
        stats: Dict[str, Any] = {"total_checked": 0, "verification_time_ms": 0.0, "suites": {}}
        for name in names:
            suite = self.suites[name]
            logger.info("Running suite %s", name)
            try:
                report = suite.timed_run(options, self.settings)
            except OperadError:
                # refusals such as NotLinearError go to the caller
                raise
            except Exception as exc:
                logger.debug("Suite %s raised", name, exc_info=True)
                return VerificationResult(success=False, reports=reports, stats=stats,
                                          errors=[f"Error running suite {name}: {exc}"])
            reports.append(report)
            stats["suites"][name] = {"checked": report.checked, "time_ms": report.time_ms}
            stats["total_checked"] += report.checked
            stats["verification_time_ms"] += report.time_ms
            logger.debug("Suite %s: %s after %d checks", name, "pass" if report.success else "FAIL", report.checked)
            if not report.success:
                break

        return VerificationResult(success=all(r.success for r in reports), reports=reports, stats=stats)
