"""Exception types raised across the package."""


class SizeLimitError(ValueError):
    """An exhaustive enumeration was asked to exceed its size cap."""


class UnboundedSearchError(ValueError):
    """A tableau search has a box whose value is not bounded above."""

    def __init__(self, box):
        super().__init__(f"no upper bound can be derived for box {box}")
        self.box = box


class ParameterError(ValueError):
    """Deformation parameters violate a scenario precondition."""


class ConstraintCycleError(RuntimeError):
    """The ordering constraints on a P-filling are cyclic."""


class ReconstructionError(RuntimeError):
    """No skew diagram is consistent with a weight sequence."""


class NotCoinvariantTypeError(RuntimeError):
    """The determinant does not occur exactly once in a scenario module."""

    def __init__(self, scenario, det_mult):
        super().__init__(f"{scenario}: determinant multiplicity {det_mult}, expected 1")
        self.scenario = scenario
        self.det_mult = det_mult


class OracleError(RuntimeError):
    """The brute-force coinvariant computation produced an impossible value."""
