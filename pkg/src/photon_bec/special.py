"""Bose polylogarithms g_p(z) = sum_{n>=1} z**n / n**p on 0 <= z <= 1.

Only the closed unit interval and integer orders p >= 2 are supported.  The
series is summed directly for the first ``MAX_TERMS`` terms; whatever remains
is estimated with an Euler-Maclaurin tail whose leading piece is the integral
of z**x / x**p from the cut onward, expressed through the generalized
exponential integral E_p.
"""
import math

import numpy as np
from scipy.special import expn

from .errors import DomainError

MAX_TERMS = 1000
# relative size of the last summed term below which the tail is dropped
_TAIL_NEGLIGIBLE = 1e-17


def _check_order(p):
    if isinstance(p, bool) or int(p) != p:
        raise DomainError(f"order p must be an integer, got {p!r}")
    p = int(p)
    if p < 2:
        raise DomainError(f"order p must be >= 2, got {p}")
    return p


def _rising(p, j):
    out = 1.0
    for i in range(j):
        out *= p + i
    return out


def _tail_derivative(k, a, p, x):
    """k-th derivative of exp(-a x) x**(-p) at x."""
    total = 0.0
    for j in range(k + 1):
        total += math.comb(k, j) * (-a) ** (k - j) * (-1) ** j * _rising(p, j) * x ** (-p - j)
    return math.exp(-a * x) * total


def _tail(p, a, N):
    """Euler-Maclaurin estimate of sum_{n > N} exp(-a n) n**(-p)."""
    integral = N ** (1 - p) * float(expn(p, a * N))
    f = math.exp(-a * N) * N ** (-p)
    return (integral - 0.5 * f
            - _tail_derivative(1, a, p, N) / 12.0
            + _tail_derivative(3, a, p, N) / 720.0)


def polylog(p: int, z: float) -> float:
    """Bose function g_p(z) for integer p >= 2 and real z in [0, 1].

    >>> round(polylog(3, 0.5), 6)
    0.537213
    """
    p = _check_order(p)
    z = float(z)
    if not 0.0 <= z <= 1.0:
        raise DomainError(f"z must lie in [0, 1], got {z!r}")
    if z == 0.0:
        return 0.0
    n = np.arange(1, MAX_TERMS + 1, dtype=float)
    a = -math.log(z)
    terms = np.exp(-a * n - p * np.log(n))
    partial = math.fsum(terms)
    if terms[-1] < _TAIL_NEGLIGIBLE * partial:
        return partial
    return partial + _tail(p, a, float(MAX_TERMS))


def zeta(p: int) -> float:
    """Riemann zeta at integer p >= 2, evaluated as g_p(1)."""
    return polylog(p, 1.0)
