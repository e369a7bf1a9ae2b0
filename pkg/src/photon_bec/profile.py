"""Spatial profile prod_i cos(pi x_i / L_i)**N1 of a box condensate.

The profile is the unnormalized pure-state product with the box centred at
the origin, so it equals 1 at the centre and 0 on the walls.  Evaluation
happens in the log domain; values below the smallest double come out as 0.
"""
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .cavity import BoxCavity
from .errors import DomainError


def _check_n1(N1):
    if isinstance(N1, bool) or int(N1) != N1 or N1 < 1:
        raise DomainError(f"condensate occupation N1 must be an integer >= 1, got {N1!r}")
    return int(N1)


def _check_axis(axis):
    if axis not in (1, 2, 3):
        raise DomainError(f"axis must be 1, 2 or 3, got {axis!r}")
    return axis


def _log_factor(x, L, N1):
    """N1 * log cos(pi x / L) with -inf on the walls."""
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore"):
        out = N1 * np.log(np.cos(np.pi * x / L))
    return np.where(np.abs(x) >= L / 2, -np.inf, out)


def profile_value(box: BoxCavity, N1: int, x) -> float:
    """Condensate profile at point ``x`` (two coordinates mean x3 = 0)."""
    N1 = _check_n1(N1)
    point = [float(v) for v in x]
    if len(point) == 2:
        point.append(0.0)
    if len(point) != 3:
        raise DomainError("point must have two or three coordinates")
    for xi, L in zip(point, box.edges):
        if not abs(xi) <= L / 2:
            raise DomainError(f"point {tuple(point)} lies outside the box")
    log_f = sum(float(_log_factor(xi, L, N1)) for xi, L in zip(point, box.edges))
    return math.exp(log_f)


@dataclass(frozen=True)
class ProfileRequest:
    box: BoxCavity
    N1: int
    axis: int = 1
    n_points: int = 512

    def __post_init__(self):
        _check_n1(self.N1)
        _check_axis(self.axis)
        if self.n_points < 2:
            raise DomainError("need at least two sample points")


def profile_samples(request: ProfileRequest):
    """Uniform samples across the box along one axis, other coordinates 0.

    Returns ``(x, f)`` arrays of length ``n_points`` covering [-L/2, L/2].
    """
    L = request.box.edges[request.axis - 1]
    x = np.linspace(-L / 2, L / 2, request.n_points)
    # exact mirror symmetry and exact walls regardless of linspace rounding
    x = 0.5 * (x - x[::-1])
    x[0], x[-1] = -L / 2, L / 2
    f = np.exp(_log_factor(x, L, request.N1))
    return x, f


def half_width(box: BoxCavity, N1: int, axis: int = 1) -> float:
    """Positive x at which cos(pi x / L)**N1 drops to 1/2, by root search."""
    N1 = _check_n1(N1)
    L = box.edges[_check_axis(axis) - 1]

    def h(x):
        return N1 * math.log(math.cos(math.pi * x / L)) + math.log(2.0)

    return brentq(h, 0.0, L / 2 * (1 - 1e-12), xtol=1e-300, rtol=4 * np.finfo(float).eps, maxiter=500)


def half_width_closed_form(box: BoxCavity, N1: int, axis: int = 1) -> float:
    """(L/pi) arccos(2**(-1/N1))."""
    N1 = _check_n1(N1)
    L = box.edges[_check_axis(axis) - 1]
    return L / math.pi * math.acos(2.0 ** (-1.0 / N1))
