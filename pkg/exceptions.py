"""
Exception hierarchy for curvkit.

Every error carries an ``exit_code`` used by the command-line front end:
2 for usage and input problems, 3 for numeric failures.
"""

from typing import Optional, Sequence

from config import ERROR_MESSAGES

EXIT_OK = 0
EXIT_FINDINGS_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3


class CurvkitError(Exception):
    """Base class for all curvkit errors."""

    exit_code = EXIT_NUMERIC

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


# Numeric errors (exit code 3)

class JetShapeError(CurvkitError):
    """Operands of a jet operation disagree in dim or order."""


class DegenerateGermError(CurvkitError):
    """Reciprocal of a germ whose value is below the invertibility threshold."""


class FunctionDomainError(CurvkitError):
    """A library function was evaluated outside its smooth domain."""

    def __init__(self, message: str, function: Optional[str] = None):
        super().__init__(message)
        self.function = function


class JetBudgetError(CurvkitError):
    """Not enough jet order left for the requested derivative."""

    def __init__(self, detail: str):
        super().__init__(ERROR_MESSAGES["jet_budget"].format(detail=detail))
        self.detail = detail


class DegenerateMetricError(CurvkitError):
    """Metric value matrix is (numerically) singular at a point."""

    def __init__(self, point: Sequence[float], det: float):
        super().__init__(ERROR_MESSAGES["degenerate_metric"].format(
            point=_fmt_point(point), det=abs(det)))
        self.point = tuple(point)
        self.det = det


class TensorSymmetryError(CurvkitError):
    """Declared index symmetry of a tensor does not hold."""


class SamplingError(CurvkitError):
    """No usable sample point could be produced."""


# Input errors (exit code 2)

class UsageError(CurvkitError):
    """Bad command line or run configuration."""

    exit_code = EXIT_USAGE


class MetricParseError(CurvkitError):
    """Lexer or parser error in a metric file or expression."""

    exit_code = EXIT_USAGE

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(ERROR_MESSAGES["parse_error"].format(
            line=line, column=column, message=message))
        self.reason = message
        self.line = line
        self.column = column


class MetricSpecError(CurvkitError):
    """A parsed metric definition is inconsistent."""

    exit_code = EXIT_USAGE


class PointOutsideDomainError(CurvkitError):
    exit_code = EXIT_USAGE


class CatalogError(CurvkitError):
    """Invalid catalog construction or unknown catalog entry."""

    exit_code = EXIT_USAGE


def _fmt_point(point: Sequence[float]) -> str:
    return "(" + ", ".join(f"{float(x):.6g}" for x in point) + ")"
