"""Grand-canonical mode sums over an explicit finite-cavity spectrum.

Low-lying modes, where the discreteness of the spectrum matters, are summed
one by one with correctly rounded accumulation (``math.fsum``).  Modes above
the spectrum's cutoff can be represented by an integral over the two-term Weyl
density; at room temperature this is what keeps centimetre boxes tractable.
"""
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np
from scipy import integrate

from .cavity import BoxCavity, DEFAULT_MODE_CAP, ModeSpectrum, enumerate_modes, weyl_density_coefficients
from .constants import HBAR_C, K_B
from .errors import DomainError, NonConvergenceError, PreconditionError
from .roots import bisect_increasing
from .thermo import u_crit_finite

FULL_CUTOFF = 60.0  # beta*lambda beyond which the discrete tail is negligible
BETA_MU_MIN = -700.0
RESIDUAL_RTOL = 1e-9
MAX_BISECTIONS = 200
DEFAULT_ORACLE_MODES = 500_000


class FiniteEnergy(NamedTuple):
    u_R: float
    ground_term: float
    tail_estimate: float


@dataclass(frozen=True)
class FiniteGasResult:
    mu_R: float
    u_R: float
    ground_term: float
    entropy: float
    modes_used: int
    tail_estimate: float


class _Sums(NamedTuple):
    energy: float  # sum eps n
    excess_energy: float  # sum (eps - eps_1) n, formed without cancellation
    number: float  # sum n
    log_term: float  # sum log(1 + n), i.e. beta p V / 2
    entropy: float  # sum x n + log(1 + n)
    ground: float


def _check_mu(mu_R):
    if not mu_R < 0:
        raise DomainError(f"finite-cavity chemical potential must be strictly negative, got {mu_R!r}")


def _two_product(a, b):
    """Error-free product: a*b == p + e exactly (Dekker splitting)."""
    split = 134217729.0  # 2**27 + 1

    def halves(v):
        t = split * v
        hi = t - (t - v)
        return hi, v - hi

    p = a * b
    a_hi, a_lo = halves(a)
    b_hi, b_lo = halves(b)
    e = ((a_hi * b_hi - p) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo
    return p, e


def _occupancy(y):
    """Bose factor 1/(e^y - 1) for y > 0 without overflow."""
    return math.exp(-y) / -math.expm1(-y)


def _mode_sums(spectrum: ModeSpectrum, beta: float, mu_R: float) -> _Sums:
    x = beta * (spectrum.lambdas - mu_R)
    n = np.exp(-x) / -np.expm1(-x)
    eps = spectrum.lambdas + spectrum.epsilon_1
    log1p_n = -np.log(-np.expm1(-x))
    energy, energy_err = _two_product(eps, n)
    ground, ground_err = _two_product(np.full_like(n, spectrum.epsilon_1), n)
    return _Sums(
        energy=math.fsum(np.concatenate((energy, energy_err))),
        excess_energy=math.fsum(np.concatenate((energy, energy_err, -ground, -ground_err))),
        number=math.fsum(n),
        log_term=math.fsum(log1p_n),
        entropy=math.fsum(x * n + log1p_n),
        ground=float(energy[0]),
    )


class _Tail:
    """Integrals over the Weyl density for energies above the enumerated cutoff.

    The density (helicities included, per unit volume) is
    bulk*eps**2 - surface*eps, expressed in absolute photon energy eps.
    """

    def __init__(self, spectrum: ModeSpectrum, V_R: float, A_R: float, beta: float, mu_R: float):
        self.bulk, self.surface = weyl_density_coefficients(V_R, A_R)
        self.beta = beta
        self.mu_star = mu_R + spectrum.epsilon_1
        eps_c = spectrum.epsilon_1 + spectrum.cutoff
        if self.bulk * eps_c <= self.surface:
            needed = self.surface / self.bulk - spectrum.epsilon_1
            raise PreconditionError(
                f"spectrum cutoff {spectrum.cutoff:.6g} J leaves a negative Weyl density; "
                f"enumerate to at least lambda_max={needed:.6g} J")
        self.y0 = beta * (eps_c - self.mu_star)

    def _integral(self, f):
        b, mu = self.beta, self.mu_star

        def integrand(y):
            eps = mu + y / b
            return f(y, eps) * (self.bulk * eps * eps - self.surface * eps) / b

        pieces = [(self.y0, self.y0 + 1.0), (self.y0 + 1.0, self.y0 + 40.0), (self.y0 + 40.0, np.inf)]
        return math.fsum(integrate.quad(integrand, lo, hi, epsabs=0.0, epsrel=1e-12, limit=200)[0]
                         for lo, hi in pieces)

    def energy(self):
        return self._integral(lambda y, eps: eps * _occupancy(y))

    def number(self):
        return self._integral(lambda y, eps: _occupancy(y))

    def log_term(self):
        return self._integral(lambda y, eps: -math.log(-math.expm1(-y)))

    def entropy(self):
        return self._integral(lambda y, eps: y * _occupancy(y) - math.log(-math.expm1(-y)))


def _prepare(spectrum, V_R, beta, mu_R, A_R):
    _check_mu(mu_R)
    if not V_R > 0:
        raise DomainError("V_R must be positive")
    if not beta > 0:
        raise DomainError("beta must be positive")
    if A_R is None:
        if beta * spectrum.cutoff < FULL_CUTOFF:
            raise PreconditionError(
                f"spectrum cutoff too low without a Weyl tail: need lambda_max >= {FULL_CUTOFF / beta:.6g} J "
                f"(beta*lambda_max >= {FULL_CUTOFF:g}), got {spectrum.cutoff:.6g} J")
        return None
    return _Tail(spectrum, V_R, A_R, beta, mu_R)


def u_finite(spectrum: ModeSpectrum, V_R: float, beta: float, mu_R: float,
             A_R: Optional[float] = None) -> FiniteEnergy:
    """Mean energy density (2/V) sum_k eps_k / (exp(beta(lambda_k - mu_R)) - 1).

    Without ``A_R`` the spectrum must reach beta*lambda >= 60 and the tail is
    zero; with ``A_R`` the modes above the cutoff come from the Weyl integral.
    """
    tail = _prepare(spectrum, V_R, beta, mu_R, A_R)
    g = spectrum.helicity_degeneracy / V_R
    sums = _mode_sums(spectrum, beta, mu_R)
    tail_u = tail.energy() if tail is not None else 0.0
    return FiniteEnergy(g * sums.energy + tail_u, g * sums.ground, tail_u)


def entropy_forms(spectrum: ModeSpectrum, V_R: float, beta: float, mu_R: float,
                  A_R: Optional[float] = None):
    """Entropy density two ways: direct mode sum, and k_B beta (u - mu* rho + p).

    mu* = mu_R + eps_1 is the chemical potential measured from zero energy.
    In the condensed regime mu_R is far below the resolution of eps_1, so the
    combination is formed as (u - eps_1 rho) - mu_R rho + p with the first
    difference accumulated exactly; every remaining term is positive.
    """
    tail = _prepare(spectrum, V_R, beta, mu_R, A_R)
    g = spectrum.helicity_degeneracy / V_R
    sums = _mode_sums(spectrum, beta, mu_R)
    direct = g * sums.entropy
    excess, rho, log_term = g * sums.excess_energy, g * sums.number, g * sums.log_term
    if tail is not None:
        direct += tail.entropy()
        tail_rho = tail.number()
        excess += tail.energy() - spectrum.epsilon_1 * tail_rho
        rho += tail_rho
        log_term += tail.log_term()
    pressure = log_term / beta
    combined = K_B * beta * (excess - mu_R * rho + pressure)
    return K_B * direct, combined


def entropy_finite(spectrum: ModeSpectrum, V_R: float, beta: float, mu_R: float,
                   A_R: Optional[float] = None) -> float:
    """Entropy density in J/(K m^3) by direct summation over modes."""
    return entropy_forms(spectrum, V_R, beta, mu_R, A_R)[0]


def solve_mu_finite(spectrum: ModeSpectrum, V_R: float, beta: float, target_u: float,
                    A_R: Optional[float] = None) -> FiniteGasResult:
    """Solve u_R(beta, mu_R) = target_u for mu_R < 0.

    Bisection runs on log(-beta mu_R) because in the condensed regime mu_R
    approaches zero far faster than any fixed fraction of eps_1.
    """
    if not target_u > 0:
        raise DomainError(f"target energy density must be positive, got {target_u!r}")
    eps1 = spectrum.epsilon_1
    x_small = min(beta * eps1 * 1e-12, eps1 / (V_R * target_u))
    s_lo, s_hi = math.log(x_small), math.log(-BETA_MU_MIN)

    def mu_of(s):
        return -math.exp(s) / beta

    def excess(s):
        # increasing in s
        return target_u - u_finite(spectrum, V_R, beta, mu_of(s), A_R).u_R

    if excess(s_hi) < 0:
        raise DomainError("target energy density lies below the solver window beta*mu_R >= -700")
    while excess(s_lo) > 0:
        s_lo -= 50.0
        if s_lo < -700.0:
            raise NonConvergenceError("could not bracket the finite-cavity chemical potential")

    s, _ = bisect_increasing(excess, s_lo, s_hi, xtol=1e-15, max_iter=MAX_BISECTIONS,
                             stop=lambda _s, f: abs(f) <= 1e-12 * target_u)
    mu_R = mu_of(s)
    energy = u_finite(spectrum, V_R, beta, mu_R, A_R)
    if abs(energy.u_R - target_u) > RESIDUAL_RTOL * target_u:
        raise NonConvergenceError(
            f"finite-cavity residual {abs(energy.u_R - target_u) / target_u:.3g} exceeds {RESIDUAL_RTOL}")
    return FiniteGasResult(
        mu_R=mu_R,
        u_R=energy.u_R,
        ground_term=energy.ground_term,
        entropy=entropy_finite(spectrum, V_R, beta, mu_R, A_R),
        modes_used=len(spectrum),
        tail_estimate=energy.tail_estimate,
    )


def oracle_cutoff(box: BoxCavity, beta: float, max_modes: int = DEFAULT_ORACLE_MODES) -> float:
    """Normalized cutoff: beta*lambda = 60, or lower if that needs more than ``max_modes`` modes."""
    q1 = sum(1.0 / L**2 for L in box.edges)
    # octant volume overestimates the lattice count, so this stays under budget
    k_budget = (6.0 * max_modes / (math.pi * box.volume)) ** (1.0 / 3.0)
    lam_budget = HBAR_C * math.pi * max(k_budget - math.sqrt(q1), 0.0)
    return min(FULL_CUTOFF / beta, lam_budget)


def oracle_spectrum(box: BoxCavity, beta: float, max_modes: int = DEFAULT_ORACLE_MODES) -> ModeSpectrum:
    return enumerate_modes(box, oracle_cutoff(box, beta, max_modes), max_modes=max(max_modes, DEFAULT_MODE_CAP))


def solve_box(box: BoxCavity, beta: float, target_u: float,
              max_modes: int = DEFAULT_ORACLE_MODES) -> FiniteGasResult:
    """solve_mu_finite on an enumerated box spectrum with a Weyl tail above the budget."""
    spectrum = oracle_spectrum(box, beta, max_modes)
    return solve_mu_finite(spectrum, box.volume, beta, target_u, A_R=box.area)


class ScalingPoint(NamedTuple):
    scale: float
    R: float
    result: FiniteGasResult
    epsilon_1: float
    u_crit_finite: float


def scaling_study(base_box: BoxCavity, scales: Sequence[float], beta: float, supercritical_u: float,
                  max_modes: int = DEFAULT_ORACLE_MODES):
    """Solve the finite gas on uniformly dilated copies of ``base_box``."""
    scales = [float(s) for s in scales]
    if len(scales) < 3:
        raise DomainError("need at least three scales")
    if any(not s > 0 for s in scales):
        raise DomainError("scales must be positive")
    points = []
    for s in scales:
        box = base_box.scaled(s)
        crit = u_crit_finite(beta, box.volume, box.area)
        if not supercritical_u > crit:
            raise DomainError(
                f"energy density {supercritical_u:.6g} J/m^3 is not supercritical for scale {s:g} "
                f"(critical {crit:.6g} J/m^3)")
        spectrum = oracle_spectrum(box, beta, max_modes)
        result = solve_mu_finite(spectrum, box.volume, beta, supercritical_u, A_R=box.area)
        points.append(ScalingPoint(s, box.volume ** (1.0 / 3.0), result, spectrum.epsilon_1, crit))
    return points


def fit_log_slope(R, mu):
    """Least-squares slope of log|mu| against log R."""
    x = np.log(np.asarray(R, dtype=float))
    y = np.log(np.abs(np.asarray(mu, dtype=float)))
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def mu_scaling_exponent(base_box: BoxCavity, scales: Sequence[float], beta: float, supercritical_u: float,
                        max_modes: int = DEFAULT_ORACLE_MODES) -> float:
    """Fitted exponent of |mu_R| ~ R**slope in the condensed regime (about -4)."""
    points = scaling_study(base_box, scales, beta, supercritical_u, max_modes)
    return fit_log_slope([p.R for p in points], [p.result.mu_R for p in points])
