"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that pytest prints in an
"acceptance criteria" section at the end of the run.
"""
import math
import time

import numpy as np
import pytest

from photon_bec.cavity import BoxCavity, MirrorMicrocavity, count_modes, geometry_measures, weyl_integrated_density
from photon_bec.constants import HBAR_C, K_B, beta_from_temperature
from photon_bec.microcavity import L0Convention, ReservoirModel, critical_power
from photon_bec.oracle import fit_log_slope, scaling_study
from photon_bec.profile import ProfileRequest, half_width, half_width_closed_form, profile_samples, profile_value
from photon_bec.special import zeta
from photon_bec.thermo import (Dimensionality, ThermoState, critical_densities, entropy_limit, solve_mu,
                               total_critical_energy, u_bulk, u_surface)

from conftest import brute_polylog, record_acceptance

T300 = 300.0
KLAERS = MirrorMicrocavity(1.0, 1.46e-6)


def rel(a, b):
    return abs(a - b) / abs(b)


@pytest.fixture(scope="module")
def scaling_run():
    beta = beta_from_temperature(T300)
    target = 2 * critical_densities(beta).bulk
    start = time.perf_counter()
    points = scaling_study(BoxCavity(0.02, 0.02, 0.02), [1, 2, 4, 8], beta, target)
    return beta, target, points, time.perf_counter() - start


def test_c01_critical_densities():
    start = time.perf_counter()
    crit = critical_densities(beta_from_temperature(T300))
    elapsed = time.perf_counter() - start
    ok = rel(crit.bulk, 6.1282e-6) <= 5e-4 and rel(crit.surface, 1.3601e-11) <= 5e-4 and elapsed < 1.0
    assert record_acceptance("C1 critical densities 300 K", ok,
                             f"bulk={crit.bulk:.6e} surface={crit.surface:.6e} ({elapsed * 1e3:.1f} ms)")


def test_c02_geometry():
    V, A = geometry_measures(KLAERS)
    ok = rel(V, 6.70e-12) <= 5e-3 and rel(A, 9.17e-6) <= 5e-3
    assert record_acceptance("C2 microcavity geometry", ok, f"V_R={V:.4e} m^3 A_R={A:.4e} m^2")


def test_c03_total_critical_energy():
    V, A = geometry_measures(KLAERS)
    e = total_critical_energy(beta_from_temperature(T300), V, A)
    ok = (rel(e.bulk_term, 4.11e-17) <= 5e-3 and rel(e.surface_term, 12.47e-17) <= 5e-3
          and rel(e.total, -8.36e-17) <= 5e-3)
    assert record_acceptance("C3 total critical energy", ok,
                             f"bulk={e.bulk_term:.4e} surface={e.surface_term:.4e} total={e.total:.4e} J")


def test_c04_critical_power():
    p = critical_power(KLAERS, T300, ReservoirModel(50.0), L0Convention.PAPER_D0).power
    assert record_acceptance("C4 critical power", rel(p, 1.31) <= 1e-2, f"P_crit={p:.4f} W")


def test_c05_zeta_anchors():
    z4, z3 = zeta(4), zeta(3)
    oracle3 = brute_polylog(3, 1.0)
    ok = rel(z4, math.pi**4 / 90) <= 1e-12 and rel(z3, oracle3) <= 1e-12 and f"{z3:.7f}" == "1.2020569"
    assert record_acceptance("C5 zeta anchors", ok,
                             f"zeta(4) err={rel(z4, math.pi**4 / 90):.1e} zeta(3)={z3:.13f} oracle err={rel(z3, oracle3):.1e}")


def test_c06_solver_round_trip():
    rng = np.random.default_rng(20240601)
    temps = 10 ** rng.uniform(0.5, 3.5, 20)
    fractions = 10 ** rng.uniform(-4.0, 0.0, 20)
    fractions[0], fractions[-1] = 1e-4, 1.0
    worst = 0.0
    start = time.perf_counter()
    for dim, u in ((Dimensionality.BULK, u_bulk), (Dimensionality.SURFACE, u_surface)):
        for T, frac in zip(temps, fractions):
            beta = beta_from_temperature(T)
            crit = critical_densities(beta)
            target = frac * (crit.bulk if dim is Dimensionality.BULK else crit.surface)
            sol = solve_mu(ThermoState(beta, target, dim))
            worst = max(worst, rel(u(beta, sol.mu), target))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-10 and elapsed < 1.0
    assert record_acceptance("C6 solver round trip", ok,
                             f"40 solves, worst rel residual {worst:.1e}, {elapsed:.3f} s")


def test_c07_condensation_regime():
    beta = beta_from_temperature(T300)
    crit = critical_densities(beta)
    worst, ok = 0.0, True
    for dim, uc in ((Dimensionality.BULK, crit.bulk), (Dimensionality.SURFACE, crit.surface)):
        for k in (1.01, 2.0, 10.0):
            sol = solve_mu(ThermoState(beta, k * uc, dim))
            err = rel(sol.condensate_density, (k - 1) * uc)
            worst = max(worst, err)
            ok &= sol.mu == 0.0 and err <= 1e-14
    assert record_acceptance("C7 condensed regime", ok, f"mu = 0, worst condensate rel err {worst:.1e}")


def test_c08_mu_scaling(scaling_run):
    beta, target, points, elapsed = scaling_run
    slope = fit_log_slope([p.R for p in points], [p.result.mu_R for p in points])
    last = points[-1]
    ground_err = rel(last.result.ground_term, target - last.u_crit_finite)
    ok = -4.5 <= slope <= -3.5 and ground_err <= 0.05 and elapsed < 600
    assert record_acceptance("C8 mu_R scaling", ok,
                             f"slope={slope:.4f}, ground-term rel err {ground_err:.1e} at L={last.R:.2f} m, "
                             f"{last.result.modes_used} modes/box, {elapsed:.1f} s")


def test_c09_weyl_convergence():
    unit = BoxCavity(1.0, 1.0, 1.0)
    ms = np.arange(5, 26)
    errors = []
    for m in ms:
        lam = m * math.pi * HBAR_C
        exact = 2 * count_modes(unit, lam) / unit.volume
        weyl = weyl_integrated_density(lam, unit.volume, unit.area)
        errors.append(abs(exact - weyl) / weyl)
    errors = np.array(errors)
    blocks = [errors[i:i + 7].mean() for i in (0, 7, 14)]
    slope = np.polyfit(np.log(ms), np.log(errors), 1)[0]
    rises = [int(m) for m, a, b in zip(ms[1:], errors[:-1], errors[1:]) if b > a]
    ok = blocks[0] > blocks[1] > blocks[2] and slope < 0 and errors[-1] < 0.03
    assert record_acceptance("C9 Weyl convergence", ok,
                             f"block means {blocks[0]:.2e} > {blocks[1]:.2e} > {blocks[2]:.2e}, log-log slope "
                             f"{slope:.2f}, err(m=25)={errors[-1]:.1e}; single-step rises at m={rises}")


def test_c10_entropy_plateau(scaling_run):
    beta, target, points, _ = scaling_run
    uc = critical_densities(beta).bulk
    plateau = 4 / 3 * K_B * beta * uc
    values = [entropy_limit(beta, k * uc) for k in (1.5, 3.0, 6.0)]
    spread = max(rel(v, values[0]) for v in values)
    finite_err = rel(points[-1].result.entropy, plateau)
    ok = spread <= 1e-12 and rel(values[0], plateau) <= 1e-12 and finite_err <= 0.05
    assert record_acceptance("C10 entropy plateau", ok,
                             f"spread {spread:.1e}, finite-box entropy rel err {finite_err:.1e}")


def test_c11_condensate_profile():
    unit = BoxCavity(1.0, 1.0, 1.0)
    centre = all(profile_value(unit, n, (0, 0, 0)) == 1.0 for n in (5, 100, 5000))
    curves = [profile_samples(ProfileRequest(unit, n, 1, 512)) for n in (5, 100, 5000)]
    x = curves[0][0]
    interior = (np.abs(x) > 0) & (np.abs(x) < 0.5)
    strict = bool(np.all(curves[0][1][interior] > curves[1][1][interior])
                  and np.all(curves[1][1][interior] > curves[2][1][interior]))
    walls = all(c[1][0] == 0.0 and c[1][-1] == 0.0 for c in curves)
    w100 = half_width(unit, 100)
    ratio = half_width(unit, 4000) / half_width(unit, 1000)
    ok = (centre and strict and walls and abs(w100 - 0.03748) <= 1e-4
          and rel(w100, half_width_closed_form(unit, 100)) <= 1e-12 and 0.49 <= ratio <= 0.51)
    assert record_acceptance("C11 condensate profile", ok,
                             f"f(0)=1: {centre}, strict decrease on {int(interior.sum())} interior samples: {strict}, "
                             f"half_width(100)={w100:.6f}, ratio={ratio:.4f}")


def test_c12_experimental_interval():
    p = critical_power(KLAERS, T300, ReservoirModel(50.0), L0Convention.PAPER_D0).power
    ok = 1.55 - 0.60 <= p <= 1.55 + 0.60
    assert record_acceptance("C12 prediction inside measured 1.55 +/- 0.60 W", ok, f"P_crit={p:.3f} W")
