"""Validated energy levels as emitted by the spectrum tables."""

from dataclasses import dataclass, asdict

BOUND = "bound"
THRESHOLD = "threshold"
SPURIOUS = "spurious"
UNREAL = "unreal"
NEGATIVE_E2 = "negative_e2"

PARTICLE = "particle"
ANTIPARTICLE = "antiparticle"


@dataclass(frozen=True)
class EnergyLevel:
    """One candidate energy with its quantum numbers and validity status.

    `residual` is the unsquared quantization-condition mismatch in energy
    units; squaring artifacts show up as a large residual (status 'spurious').
    """

    n: int
    l: int
    branch: str
    energy: float
    status: str
    residual: float

    def to_dict(self) -> dict:
        return asdict(self)
