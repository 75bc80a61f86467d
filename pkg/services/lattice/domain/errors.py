"""Domain errors.

All errors derive from ``LatticePathError``, itself a ``ValueError`` so the
handler's value-error path turns them into 400 responses.
"""

from typing import Any, Dict, List, Optional, Sequence


class LatticePathError(ValueError):
    """Base class for domain errors."""

    kind = "domain_error"

    def __init__(self, message: str, position: Optional[int] = None):
        super().__init__(message)
        self.message = message
        self.position = position

    def details(self) -> Dict[str, Any]:
        """Error details for response envelopes."""
        details: Dict[str, Any] = {"kind": self.kind}
        if self.position is not None:
            details["position"] = self.position
        return details


class PresentationFormatError(LatticePathError):
    """Text does not supply two words over {E, N}."""

    kind = "format"


class LengthMismatchError(LatticePathError):
    """Bounding words differ in length."""

    kind = "length_mismatch"


class EndpointMismatchError(LatticePathError):
    """Bounding words do not end at the same lattice point."""

    kind = "endpoint_mismatch"


class DominanceError(LatticePathError):
    """The lower word goes above the upper word."""

    kind = "dominance"


class LabelOutOfRangeError(LatticePathError):
    """A label is outside the ground set."""

    kind = "label_out_of_range"

    def __init__(self, label: int, first: int, last: int):
        super().__init__(
            f"label {label} outside ground set [{first}, {last}]", position=label
        )
        self.label = label
        self.first = first
        self.last = last


class WitnessStepError(LatticePathError):
    """A witness step could not be applied."""

    kind = "witness_step"

    def __init__(self, index: int, step: str, cause: LatticePathError):
        super().__init__(f"step {index} ({step}) failed: {cause.message}", position=index)
        self.index = index
        self.cause = cause


class SquareError(LatticePathError):
    """No usable square at the requested position."""

    kind = "square"


class GlueConditionError(LatticePathError):
    """One or more gluing conditions fail."""

    kind = "glue_condition"

    def __init__(self, violations: Sequence[str]):
        self.violations: List[str] = list(violations)
        super().__init__("gluing conditions violated: " + "; ".join(self.violations))

    def details(self) -> Dict[str, Any]:
        details = super().details()
        details["violations"] = self.violations
        return details


class PreconditionError(LatticePathError):
    """An operation precondition does not hold."""

    kind = "precondition"


class SizeLimitError(LatticePathError):
    """Input exceeds a configured search limit."""

    kind = "size_limit"

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what}: size {size} exceeds limit {limit}")
        self.size = size
        self.limit = limit


class InconsistentOrderError(LatticePathError):
    """A computed minor relation breaks transitivity or size monotonicity."""

    kind = "inconsistent_order"
