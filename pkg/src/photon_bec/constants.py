"""CODATA-2018 constants used throughout the package.

All values are exact or CODATA-2018 recommended and fixed for the lifetime of
the process so that every number this package prints is reproducible.
"""
from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    hbar: float = 1.054571817e-34  # J s
    c: float = 2.99792458e8  # m/s
    k_B: float = 1.380649e-23  # J/K

    def __post_init__(self):
        for name in ("hbar", "c", "k_B"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")

    @property
    def hbar_c(self) -> float:
        """Product hbar*c in J m."""
        return self.hbar * self.c


CODATA2018 = PhysicalConstants()

HBAR = CODATA2018.hbar
C = CODATA2018.c
K_B = CODATA2018.k_B
HBAR_C = CODATA2018.hbar_c


def beta_from_temperature(T: float) -> float:
    """Inverse temperature 1/(k_B T) in 1/J."""
    if not T > 0:
        raise ValueError(f"temperature must be positive, got {T!r}")
    return 1.0 / (K_B * T)


def temperature_from_beta(beta: float) -> float:
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta!r}")
    return 1.0 / (K_B * beta)
