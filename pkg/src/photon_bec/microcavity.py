"""Critical energy and critical power of a dye-filled mirror microcavity."""
import enum
from dataclasses import dataclass, asdict
from typing import Optional

from .cavity import MirrorMicrocavity, geometry_measures
from .constants import C, beta_from_temperature
from .errors import DomainError
from .thermo import critical_densities, total_critical_energy

KLAERS_CAVITY = MirrorMicrocavity(R_curv=1.0, D0=1.46e-6)
KLAERS_TAU_EXC = 1e-9  # s, dye excitation lifetime
KLAERS_TAU_PH = 20e-12  # s, photon emission-absorption time


class L0Convention(str, enum.Enum):
    PAPER_D0 = "paper_D0"
    VOLUME_OVER_AREA = "volume_over_area"


@dataclass(frozen=True)
class ReservoirModel:
    """Ratio of dye excitations to cavity photons, N_exc / N_ph."""

    ratio: float = 50.0
    tau_exc: Optional[float] = None
    tau_ph: Optional[float] = None

    def __post_init__(self):
        if self.tau_exc is not None and self.tau_ph is not None:
            if not (self.tau_exc > 0 and self.tau_ph > 0):
                raise DomainError("lifetimes must be positive")
            object.__setattr__(self, "ratio", self.tau_exc / self.tau_ph)
        if not self.ratio >= 0:
            raise DomainError(f"reservoir ratio must be non-negative, got {self.ratio!r}")

    @classmethod
    def from_lifetimes(cls, tau_exc: float, tau_ph: float) -> "ReservoirModel":
        return cls(tau_exc=tau_exc, tau_ph=tau_ph)


@dataclass(frozen=True)
class PowerPrediction:
    u_crit_surf_total: float  # J
    l0: float  # m
    l0_convention: L0Convention
    power: float  # W


def characteristic_length(geometry: MirrorMicrocavity, convention=L0Convention.PAPER_D0) -> float:
    convention = L0Convention(convention)
    if convention is L0Convention.PAPER_D0:
        return geometry.D0
    V_R, A_R = geometry_measures(geometry)
    return V_R / A_R


def critical_power(geometry: MirrorMicrocavity, T: float, reservoir: ReservoirModel = ReservoirModel(),
                   convention=L0Convention.PAPER_D0) -> PowerPrediction:
    """Radiation power at threshold: (1 + ratio) * A_R u_crit_surface / (l0 / c)."""
    if not T > 0:
        raise DomainError(f"temperature must be positive, got {T!r}")
    convention = L0Convention(convention)
    _, A_R = geometry_measures(geometry)
    energy = A_R * critical_densities(beta_from_temperature(T)).surface
    l0 = characteristic_length(geometry, convention)
    power = (1.0 + reservoir.ratio) * energy * C / l0
    return PowerPrediction(energy, l0, convention, power)


@dataclass(frozen=True)
class MicrocavityReport:
    temperature: float
    ratio: float
    V_R: float
    A_R: float
    u_crit_bulk: float
    u_crit_surface: float
    U_bulk: float
    U_surface: float
    U_total: float
    surface_to_bulk: float
    l0_paper_D0: float
    l0_volume_over_area: float
    P_paper_D0: float
    P_volume_over_area: float

    def as_dict(self):
        return asdict(self)

    def rows(self):
        """(quantity, variant, value, unit) tuples in a fixed order."""
        return [
            ("T", "", self.temperature, "K"),
            ("N_exc/N_ph", "", self.ratio, "1"),
            ("V_R", "", self.V_R, "m^3"),
            ("A_R", "", self.A_R, "m^2"),
            ("u_crit", "bulk", self.u_crit_bulk, "J/m^3"),
            ("u_crit", "surface", self.u_crit_surface, "J/m^2"),
            ("U_crit", "bulk", self.U_bulk, "J"),
            ("U_crit", "surface", self.U_surface, "J"),
            ("U_crit", "total", self.U_total, "J"),
            ("surface/bulk", "", self.surface_to_bulk, "1"),
            ("l0", L0Convention.PAPER_D0.value, self.l0_paper_D0, "m"),
            ("l0", L0Convention.VOLUME_OVER_AREA.value, self.l0_volume_over_area, "m"),
            ("P_crit", L0Convention.PAPER_D0.value, self.P_paper_D0, "W"),
            ("P_crit", L0Convention.VOLUME_OVER_AREA.value, self.P_volume_over_area, "W"),
        ]


def microcavity_report(geometry: MirrorMicrocavity = KLAERS_CAVITY, T: float = 300.0,
                       reservoir: ReservoirModel = ReservoirModel()) -> MicrocavityReport:
    if not T > 0:
        raise DomainError(f"temperature must be positive, got {T!r}")
    beta = beta_from_temperature(T)
    V_R, A_R = geometry_measures(geometry)
    crit = critical_densities(beta)
    energies = total_critical_energy(beta, V_R, A_R)
    p_d0 = critical_power(geometry, T, reservoir, L0Convention.PAPER_D0)
    p_va = critical_power(geometry, T, reservoir, L0Convention.VOLUME_OVER_AREA)
    return MicrocavityReport(
        temperature=T,
        ratio=reservoir.ratio,
        V_R=V_R,
        A_R=A_R,
        u_crit_bulk=crit.bulk,
        u_crit_surface=crit.surface,
        U_bulk=energies.bulk_term,
        U_surface=energies.surface_term,
        U_total=energies.total,
        surface_to_bulk=energies.surface_term / energies.bulk_term,
        l0_paper_D0=p_d0.l0,
        l0_volume_over_area=p_va.l0,
        P_paper_D0=p_d0.power,
        P_volume_over_area=p_va.power,
    )
