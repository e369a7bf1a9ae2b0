"""Resonator geometries, exact Dirichlet box modes and two-term Weyl asymptotics."""
import math
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .constants import HBAR_C
from .errors import DomainError, ResourceError

DEFAULT_MODE_CAP = 10**7
# relative slack on the squared wavenumber so that lattice points lying exactly
# on the cutoff sphere are counted despite rounding
_SPHERE_SLACK = 1e-12


@dataclass(frozen=True)
class BoxCavity:
    """Parallelepiped -L_i/2 <= x_i <= L_i/2 with Dirichlet walls (edges in m)."""

    L1: float
    L2: float
    L3: float

    def __post_init__(self):
        for name in ("L1", "L2", "L3"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"box edge {name} must be positive and finite, got {value!r}")

    @property
    def edges(self):
        return (self.L1, self.L2, self.L3)

    @property
    def volume(self) -> float:
        return self.L1 * self.L2 * self.L3

    @property
    def area(self) -> float:
        return 2.0 * (self.L1 * self.L2 + self.L2 * self.L3 + self.L1 * self.L3)

    def scaled(self, s: float) -> "BoxCavity":
        return BoxCavity(s * self.L1, s * self.L2, s * self.L3)


@dataclass(frozen=True)
class MirrorMicrocavity:
    """Two spherical mirrors with curvature radius R_curv and on-axis gap D0 (m)."""

    R_curv: float
    D0: float

    def __post_init__(self):
        if not (math.isfinite(self.R_curv) and math.isfinite(self.D0)):
            raise DomainError("mirror geometry must be finite")
        if not 0 < self.D0 < self.R_curv:
            raise DomainError(f"need 0 < D0 < R_curv, got D0={self.D0!r}, R_curv={self.R_curv!r}")

    @property
    def volume(self) -> float:
        return math.pi * self.D0**2 * (self.R_curv - self.D0 / 3.0)

    @property
    def area(self) -> float:
        return 2.0 * math.pi * self.R_curv * self.D0


Geometry = Union[BoxCavity, MirrorMicrocavity]


def geometry_measures(geometry: Geometry):
    """Return (volume m^3, surface area m^2) of a cavity."""
    if not isinstance(geometry, (BoxCavity, MirrorMicrocavity)):
        raise DomainError(f"unsupported geometry {type(geometry).__name__}")
    return geometry.volume, geometry.area


@dataclass(frozen=True)
class ModeSpectrum:
    """Sorted single-photon spectrum of a finite cavity.

    ``lambdas`` holds the normalized eigenvalues eps_k - eps_1 in J, one entry
    per lattice triple, ascending, with ``lambdas[0] == 0``.  Each entry carries
    ``helicity_degeneracy`` photon states.  ``cutoff`` is the largest normalized
    energy the enumeration was asked to cover; modes above it are absent.
    """

    epsilon_1: float
    lambdas: np.ndarray
    cutoff: float
    helicity_degeneracy: int = 2
    quantum_numbers: Optional[np.ndarray] = field(default=None, repr=False)

    def __post_init__(self):
        if not self.epsilon_1 > 0:
            raise DomainError("ground-state energy must be positive")
        lam = self.lambdas
        if lam.ndim != 1 or lam.size == 0:
            raise DomainError("spectrum must be a non-empty 1-d array")
        if lam[0] != 0.0:
            raise DomainError("normalized spectrum must start at 0")
        if lam.size > 1 and np.any(np.diff(lam) < 0):
            raise DomainError("normalized spectrum must be sorted ascending")

    def __len__(self):
        return self.lambdas.size

    @property
    def epsilons(self) -> np.ndarray:
        return self.lambdas + self.epsilon_1

    @classmethod
    def from_lambdas(cls, epsilon_1, lambdas, cutoff=None, helicity_degeneracy=2):
        lam = np.sort(np.asarray(lambdas, dtype=float))
        if cutoff is None:
            cutoff = float(lam[-1])
        return cls(float(epsilon_1), lam, float(cutoff), helicity_degeneracy)


def ground_energy(box: BoxCavity) -> float:
    """Lowest Dirichlet eigenvalue hbar c pi sqrt(sum 1/L_i^2) in J."""
    return HBAR_C * math.pi * math.sqrt(sum(1.0 / L**2 for L in box.edges))


def _lattice_inside(box: BoxCavity, k2: float, max_modes: int):
    """All integer triples n_i >= 1 with sum (n_i/L_i)^2 <= k2, unsorted."""
    L1, L2, L3 = box.edges
    # octant-volume estimate guards against huge allocations before any work
    estimate = math.pi / 6.0 * k2**1.5 * L1 * L2 * L3
    if estimate > 2 * max_modes + 1000:
        raise ResourceError(f"about {estimate:.3g} modes requested, cap is max_modes={max_modes}")
    limit = k2 * (1.0 + _SPHERE_SLACK)
    blocks = []
    count = 0
    n1_max = int(math.floor(L1 * math.sqrt(max(limit - 1 / L2**2 - 1 / L3**2, 0.0)))) + 1
    for n1 in range(1, n1_max + 1):
        r1 = limit - (n1 / L1) ** 2 - 1 / L3**2
        if r1 < 1 / L2**2:
            break
        n2 = np.arange(1, int(math.floor(L2 * math.sqrt(r1))) + 2)
        r2 = limit - (n1 / L1) ** 2 - (n2 / L2) ** 2
        n3_max = np.floor(L3 * np.sqrt(np.clip(r2, 0.0, None))).astype(np.int64) + 1
        # trim the +1 overshoot exactly
        q_top = (n1 / L1) ** 2 + (n2 / L2) ** 2 + (n3_max / L3) ** 2
        n3_max = np.where(q_top > limit, n3_max - 1, n3_max)
        keep = n3_max >= 1
        n2, n3_max = n2[keep], n3_max[keep]
        if n2.size == 0:
            continue
        total = int(n3_max.sum())
        count += total
        if count > max_modes:
            raise ResourceError(f"mode count exceeds cap max_modes={max_modes}")
        n2_rep = np.repeat(n2, n3_max)
        starts = np.cumsum(n3_max) - n3_max
        n3 = np.arange(total) - np.repeat(starts, n3_max) + 1
        n1_col = np.full(total, n1, dtype=np.int64)
        blocks.append(np.column_stack((n1_col, n2_rep, n3)))
    if not blocks:
        return np.empty((0, 3), dtype=np.int64)
    return np.concatenate(blocks)


def _squared_wavenumbers(box: BoxCavity, n: np.ndarray) -> np.ndarray:
    L1, L2, L3 = box.edges
    return (n[:, 0] / L1) ** 2 + (n[:, 1] / L2) ** 2 + (n[:, 2] / L3) ** 2


def enumerate_modes(box: BoxCavity, lambda_max: float, max_modes: int = DEFAULT_MODE_CAP) -> ModeSpectrum:
    """Every Dirichlet mode of ``box`` with eps - eps_1 <= lambda_max.

    Eigenvalues are hbar c pi sqrt(sum (n_i/L_i)^2), n_i >= 1.  Each lattice
    triple appears once; ties are ordered by (n1, n2, n3).
    """
    if not lambda_max >= 0:
        raise DomainError(f"lambda_max must be non-negative, got {lambda_max!r}")
    # same expression as for every other mode so the ground level gives exactly 0
    q1 = float(_squared_wavenumbers(box, np.ones((1, 3)))[0])
    k = math.sqrt(q1) + lambda_max / (HBAR_C * math.pi)
    n = _lattice_inside(box, k * k, max_modes)
    q = _squared_wavenumbers(box, n)
    # eps - eps_1 without cancellation
    lam = HBAR_C * math.pi * (q - q1) / (np.sqrt(q) + math.sqrt(q1))
    lam = np.clip(lam, 0.0, None)
    order = np.lexsort((n[:, 2], n[:, 1], n[:, 0], lam))
    return ModeSpectrum(
        epsilon_1=ground_energy(box),
        lambdas=lam[order],
        cutoff=float(lambda_max),
        quantum_numbers=n[order],
    )


def count_modes(box: BoxCavity, energy: float, max_modes: int = DEFAULT_MODE_CAP) -> int:
    """Number of lattice triples with eps <= energy (helicity not included)."""
    if energy < 0:
        raise DomainError("energy must be non-negative")
    k = energy / (HBAR_C * math.pi)
    return int(_lattice_inside(box, k * k, max_modes).shape[0])


def weyl_integrated_density(lam, V_R: float, A_R: float):
    """Two-term Weyl count per unit volume, helicities included, in 1/m^3."""
    lam_arr = np.asarray(lam, dtype=float)
    if np.any(lam_arr < 0):
        raise DomainError("lambda must be non-negative")
    if not V_R > 0 or A_R < 0:
        raise DomainError("need V_R > 0 and A_R >= 0")
    k = lam_arr / HBAR_C
    out = k**3 / (3.0 * math.pi**2) - A_R / (8.0 * math.pi * V_R) * k**2
    return float(out) if out.ndim == 0 else out


def weyl_density_coefficients(V_R: float, A_R: float):
    """Weights (bulk, surface) of the spectral density bulk*l^2 - surface*l."""
    if not V_R > 0 or A_R < 0:
        raise DomainError("need V_R > 0 and A_R >= 0")
    bulk = 1.0 / (math.pi**2 * HBAR_C**3)
    surface = A_R / (4.0 * math.pi * V_R * HBAR_C**2)
    return bulk, surface
