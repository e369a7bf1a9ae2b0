"""Bose-Einstein condensation of an ideal photon gas in bulk and surface geometries."""
from .cavity import (BoxCavity, MirrorMicrocavity, ModeSpectrum, count_modes, enumerate_modes,
                     geometry_measures, ground_energy, weyl_density_coefficients, weyl_integrated_density)
from .constants import CODATA2018, PhysicalConstants, beta_from_temperature
from .errors import DomainError, NonConvergenceError, PreconditionError, ResourceError
from .microcavity import (KLAERS_CAVITY, L0Convention, PowerPrediction, ReservoirModel, critical_power,
                          microcavity_report)
from .oracle import (FiniteGasResult, entropy_finite, entropy_forms, mu_scaling_exponent, solve_box,
                     solve_mu_finite, u_finite)
from .profile import ProfileRequest, half_width, profile_samples, profile_value
from .special import polylog, zeta
from .thermo import (CriticalDensities, Dimensionality, MuSolution, Regime, ThermoState, bulk_number_density,
                     bulk_pressure, critical_densities, entropy_limit, solve_mu, total_critical_energy, u_bulk,
                     u_crit_finite, u_surface)

__version__ = "0.1.0"
