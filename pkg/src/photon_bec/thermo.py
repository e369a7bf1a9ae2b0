"""Thermodynamic-limit energy densities of the ideal photon gas.

Two independent variables fix the state: the inverse temperature ``beta`` (1/J)
and a target mean energy density, volumetric (J/m^3) for the bulk gas or areal
(J/m^2) for the surface gas.  The normalized chemical potential ``mu`` is
measured from the ground level and is never positive.
"""
import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from .constants import HBAR_C, K_B
from .errors import DomainError, NonConvergenceError
from .roots import bisect_increasing
from .special import polylog, zeta

# solver window for beta*mu; exp(-700) is still a normal double
BETA_MU_MIN = -700.0
BETA_MU_XTOL = 1e-13
RESIDUAL_RTOL = 1e-10


class Dimensionality(str, enum.Enum):
    BULK = "bulk3D"
    SURFACE = "surface2D"


class Regime(str, enum.Enum):
    NORMAL = "normal"
    CONDENSED = "condensed"


@dataclass(frozen=True)
class ThermoState:
    beta: float
    target_u: float
    dimensionality: Dimensionality = Dimensionality.BULK

    def __post_init__(self):
        if not self.beta > 0:
            raise DomainError(f"beta must be positive, got {self.beta!r}")
        if not self.target_u >= 0:
            raise DomainError(f"target energy density must be non-negative, got {self.target_u!r}")
        object.__setattr__(self, "dimensionality", Dimensionality(self.dimensionality))


@dataclass(frozen=True)
class MuSolution:
    mu: float
    condensate_density: float
    regime: Regime


class CriticalDensities(NamedTuple):
    bulk: float
    surface: float


class CriticalEnergies(NamedTuple):
    bulk_term: float
    surface_term: float
    total: float


def _check(beta, mu):
    if not beta > 0:
        raise DomainError(f"beta must be positive, got {beta!r}")
    if mu > 0:
        raise DomainError(f"normalized chemical potential must be <= 0, got {mu!r}")


def _fugacity(beta, mu):
    return math.exp(beta * mu) if mu > -math.inf else 0.0


def bulk_prefactor(beta):
    return 6.0 / (math.pi**2 * HBAR_C**3 * beta**4)


def surface_prefactor(beta):
    return 2.0 / (4.0 * math.pi * HBAR_C**2 * beta**3)


def u_bulk(beta: float, mu: float) -> float:
    """Bulk energy density 6 g_4(e^{beta mu}) / (pi^2 (hbar c)^3 beta^4), J/m^3."""
    _check(beta, mu)
    return bulk_prefactor(beta) * polylog(4, _fugacity(beta, mu))


def u_surface(beta: float, mu: float) -> float:
    """Surface energy density 2 g_3(e^{beta mu}) / (4 pi (hbar c)^2 beta^3), J/m^2."""
    _check(beta, mu)
    return surface_prefactor(beta) * polylog(3, _fugacity(beta, mu))


def critical_densities(beta: float) -> CriticalDensities:
    return CriticalDensities(u_bulk(beta, 0.0), u_surface(beta, 0.0))


def u_crit_finite(beta: float, V_R: float, A_R: float) -> float:
    """Two-term critical energy density of a finite cavity; negative when the surface dominates."""
    if not V_R > 0 or A_R < 0:
        raise DomainError("need V_R > 0 and A_R >= 0")
    crit = critical_densities(beta)
    return crit.bulk - A_R / V_R * crit.surface


def total_critical_energy(beta: float, V_R: float, A_R: float) -> CriticalEnergies:
    if not V_R > 0 or A_R < 0:
        raise DomainError("need V_R > 0 and A_R >= 0")
    crit = critical_densities(beta)
    bulk_term = V_R * crit.bulk
    surface_term = A_R * crit.surface
    return CriticalEnergies(bulk_term, surface_term, bulk_term - surface_term)


def bulk_number_density(beta: float, mu: float) -> float:
    """Photon number density 2 g_3(e^{beta mu}) / (pi^2 (hbar c)^3 beta^3), 1/m^3."""
    _check(beta, mu)
    return 2.0 * polylog(3, _fugacity(beta, mu)) / (math.pi**2 * HBAR_C**3 * beta**3)


def bulk_pressure(beta: float, mu: float) -> float:
    """Radiation pressure 2 g_4(e^{beta mu}) / (pi^2 (hbar c)^3 beta^4), J/m^3."""
    _check(beta, mu)
    return 2.0 * polylog(4, _fugacity(beta, mu)) / (math.pi**2 * HBAR_C**3 * beta**4)


def solve_mu(state: ThermoState) -> MuSolution:
    """Chemical potential and condensate density for a target energy density.

    Below or at the critical density the unique root of u(beta, mu) = target is
    returned with zero condensate.  Above it mu = 0 and the excess over the
    critical density sits in the ground mode.  A target of exactly zero maps to
    mu = BETA_MU_MIN / beta.
    """
    beta, target = state.beta, state.target_u
    if state.dimensionality is Dimensionality.BULK:
        order, prefactor = 4, bulk_prefactor(beta)
    else:
        order, prefactor = 3, surface_prefactor(beta)
    critical = prefactor * zeta(order)

    if target > critical:
        return MuSolution(0.0, target - critical, Regime.CONDENSED)
    if target == critical:
        return MuSolution(0.0, 0.0, Regime.NORMAL)
    if target == 0.0:
        return MuSolution(BETA_MU_MIN / beta, 0.0, Regime.NORMAL)

    def energy(t):
        return prefactor * polylog(order, math.exp(t))

    if target <= energy(BETA_MU_MIN):
        # g_p(z) = z to double precision this deep in the dilute limit
        t = math.log(target / prefactor)
    else:
        t, _ = bisect_increasing(lambda s: energy(s) - target, BETA_MU_MIN, 0.0, BETA_MU_XTOL)
    residual = abs(energy(t) - target) / target
    if residual > RESIDUAL_RTOL:
        raise NonConvergenceError(f"chemical potential residual {residual:.3g} above {RESIDUAL_RTOL}")
    return MuSolution(t / beta, 0.0, Regime.NORMAL)


def entropy_limit(beta: float, target_u: float) -> float:
    """Bulk entropy density in J/(K m^3) at fixed beta and energy density.

    In the condensed regime this is (4/3) k_B beta u_crit and does not depend
    on the target: the ground mode carries energy but no entropy.
    """
    sol = solve_mu(ThermoState(beta, target_u, Dimensionality.BULK))
    if sol.regime is Regime.CONDENSED:
        return 4.0 / 3.0 * K_B * beta * u_bulk(beta, 0.0)
    if target_u == 0.0:
        return 0.0
    mu = sol.mu
    return K_B * beta * (target_u - mu * bulk_number_density(beta, mu) + bulk_pressure(beta, mu))
