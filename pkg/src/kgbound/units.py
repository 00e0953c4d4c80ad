"""Unit system: everything is expressed through hbar*c and the rest energy."""

from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    """hbar*c (energy*length) and the rest energy m0*c^2 of the particle.

    Defaults give natural units (both equal to 1); the Compton-like
    wavelength hbar/(m0*c) is derived, never stored.
    """

    hbar_c: float = 1.0
    rest_energy: float = 1.0

    def __post_init__(self):
        if self.hbar_c <= 0 or self.rest_energy <= 0:
            raise ValueError("hbar_c and rest_energy must be strictly positive")

    @property
    def compton_length(self) -> float:
        return self.hbar_c / self.rest_energy


NATURAL = PhysicalConstants()
