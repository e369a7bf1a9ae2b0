"""Bracketing bisection for monotone scalar equations."""
from .errors import NonConvergenceError


def bisect_increasing(f, lo, hi, xtol, max_iter=200, stop=None):
    """Root of an increasing function ``f`` on [lo, hi] by plain bisection.

    Requires f(lo) <= 0 <= f(hi).  Iterates until the bracket is narrower than
    ``xtol`` or ``stop(x, f(x))`` returns true; returns the last midpoint and
    its function value.
    """
    if not lo < hi:
        raise ValueError("empty bracket")
    f_lo, f_hi = f(lo), f(hi)
    if f_lo > 0 or f_hi < 0:
        raise ValueError(f"root not bracketed: f({lo!r})={f_lo!r}, f({hi!r})={f_hi!r}")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0 or (stop is not None and stop(mid, f_mid)):
            return mid, f_mid
        if f_mid < 0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= xtol:
            mid = 0.5 * (lo + hi)
            return mid, f(mid)
    raise NonConvergenceError(f"bisection did not converge in {max_iter} steps")
