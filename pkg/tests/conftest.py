import math

import numpy as np
import pytest

from photon_bec.constants import beta_from_temperature


def brute_polylog(p, z, n_terms=10**7, chunk=10**6):
    """Plain partial sum of z**n/n**p plus a midpoint integral tail for z = 1."""
    total = 0.0
    for start in range(1, n_terms + 1, chunk):
        n = np.arange(start, min(start + chunk, n_terms + 1), dtype=float)
        terms = z**n / n**p
        total += math.fsum(terms)
        if terms[-1] == 0.0:
            break
    if z == 1.0:
        # sum_{n>N} n^-p ~ int_{N+1/2}^inf x^-p dx, error O(N^-(p+2))
        total += (n_terms + 0.5) ** (1 - p) / (p - 1)
    return total


@pytest.fixture(scope="session")
def beta300():
    return beta_from_temperature(300.0)


ACCEPTANCE_LINES = []


def record_acceptance(label, passed, detail):
    line = f"[{'PASS' if passed else 'FAIL'}] {label}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return passed


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
