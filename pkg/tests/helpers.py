"""Finite-difference radial operator shared by the eigen-equation tests."""

import numpy as np

from hoshift.root_system import rho


def radial_operator(fn, X, m, rs, h=1e-4):
    """(L(m) + <rho, rho>) fn at X with second-order central differences.

    L(m) = Laplacian + sum_{a > 0} m_a coth a(X) d_a, d_a the derivative along a.
    """
    X = np.asarray(X, dtype=float)
    n = len(X)
    f0 = fn(X)
    grad = np.zeros(n, dtype=complex)
    lap = 0j
    for i in range(n):
        e = np.zeros(n)
        e[i] = h
        fp, fm = fn(X + e), fn(X - e)
        grad[i] = (fp - fm) / (2 * h)
        lap += (fp - 2 * f0 + fm) / h**2
    drift = 0j
    for a in rs.positive_roots:
        a = np.asarray(a, dtype=float)
        ma = rs.mult_of(a, m)
        drift += ma / np.tanh(a @ X) * (a @ grad)
    r = rho(rs, m)
    return lap + drift + (r @ r) * f0, f0
