"""Hot loops: log-Gamma, Harish-Chandra recurrence, Frobenius coefficients, Horner.

Every function here is written in the numba-compatible subset of numpy so
that the same body serves as the pure-Python fallback when numba is disabled.
"""

import math

import numpy as np

from ._accel import maybe_njit

# Lanczos approximation, g = 7, 9 terms.
LANCZOS_G = 7.0
LANCZOS_COEFFS = np.array(
    [
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    ]
)

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)


@maybe_njit
def _loggamma_right(z):
    # principal branch for Re z >= 1/2
    zm = z - 1.0
    acc = LANCZOS_COEFFS[0] + 0j
    for i in range(1, LANCZOS_COEFFS.shape[0]):
        acc += LANCZOS_COEFFS[i] / (zm + i)
    t = zm + LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (zm + 0.5) * np.log(t) - t + np.log(acc)


@maybe_njit
def loggamma_scalar(z):
    """Principal log Gamma of one complex number (no pole check)."""
    if z.real >= 0.5:
        return _loggamma_right(z)
    if abs(z.imag) <= 100.0:
        # reflection with the branch correction of Hare (1997)
        sgn = 1.0 if z.imag >= 0.0 else -1.0
        corr = sgn * 2.0 * math.pi * math.floor(0.5 * z.real + 0.25)
        # sin(pi z) with the real part reduced mod 2 to keep pi*z accurate near poles
        zr = z - 2.0 * math.floor(0.5 * z.real + 0.5)
        return complex(_LOG_PI, corr) - np.log(np.sin(math.pi * zr)) - _loggamma_right(1.0 - z)
    # far from the real axis: shift upward, sin(pi z) would overflow
    n = int(math.ceil(0.5 - z.real))
    acc = 0j
    for k in range(n):
        acc += np.log(z + k)
    return _loggamma_right(z + n) - acc


@maybe_njit
def loggamma_array(zs):
    out = np.empty(zs.shape[0], dtype=np.complex128)
    for i in range(zs.shape[0]):
        out[i] = loggamma_scalar(zs[i])
    return out


@maybe_njit
def hc_gamma_kernel(points, mu_eps, index_flat, strides, pos_simple, pos_eps, pos_mult,
                    lam, rho, rel_tol):
    """Fill Gamma_mu bottom-up by height.

    points      (K, n) int64  simple-root coordinates, sorted by height
    mu_eps      (K, n) float  the same points in the epsilon basis
    index_flat  flat lookup coords -> row (-1 when beyond the truncation)
    strides     (n,) int64    mixed-radix strides for index_flat
    pos_simple  (R, n) int64  positive roots in simple coordinates
    pos_eps     (R, n) float  positive roots in the epsilon basis
    pos_mult    (R,) float    multiplicity of each positive root

    Returns (gammas, bad_row); bad_row >= 0 flags a resonant divisor.
    """
    K = points.shape[0]
    n = points.shape[1]
    R = pos_simple.shape[0]
    gammas = np.zeros(K, dtype=np.complex128)
    gammas[0] = 1.0
    nu = np.empty(n, dtype=np.int64)
    for row in range(1, K):
        mu = mu_eps[row]
        div = 0j
        musq = 0.0
        for i in range(n):
            div += mu[i] * (mu[i] - 2.0 * lam[i])
            musq += mu[i] * mu[i]
        if abs(div) < rel_tol * max(1.0, musq):
            return gammas, row
        acc = 0j
        for r in range(R):
            m_r = pos_mult[r]
            if m_r == 0.0:
                continue
            k = 1
            while True:
                ok = True
                flat = 0
                for i in range(n):
                    nu[i] = points[row, i] - 2 * k * pos_simple[r, i]
                    if nu[i] < 0:
                        ok = False
                        break
                    flat += nu[i] * strides[i]
                if not ok:
                    break
                j = index_flat[flat]
                if j >= 0:
                    ip = 0j
                    for i in range(n):
                        ip += (mu[i] + rho[i] - 2.0 * k * pos_eps[r, i] - lam[i]) * pos_eps[r, i]
                    acc += m_r * gammas[j] * ip
                k += 1
        gammas[row] = 2.0 * acc / div
    return gammas, -1


@maybe_njit
def hc_series_sum(gammas, mu_eps, heights, X, top):
    """Return (sum Gamma_mu e^{-mu(X)}, sum of |terms| with height >= top)."""
    K = gammas.shape[0]
    n = mu_eps.shape[1]
    total = 0j
    shell = 0.0
    for row in range(K):
        e = 0j
        for i in range(n):
            e += mu_eps[row, i] * X[i]
        term = gammas[row] * np.exp(-e)
        total += term
        if heights[row] >= top:
            shell += abs(term)
    return total, shell


@maybe_njit
def frobenius_coeffs(a, b, c, M):
    """c_{j+1} = c_j (j+a)(j+b) / ((j+1)(j+c)), c_0 = 1.

    Returns (coeffs, j) where j >= 0 marks a vanishing j + c.
    """
    out = np.zeros(M + 1, dtype=np.complex128)
    out[0] = 1.0
    for j in range(M):
        den = (j + 1.0) * (j + c)
        if abs(j + c) < 1e-12:
            return out, j
        out[j + 1] = out[j] * (j + a) * (j + b) / den
    return out, -1


@maybe_njit
def horner(coeffs, us):
    out = np.empty(us.shape[0], dtype=np.complex128)
    M = coeffs.shape[0] - 1
    for i in range(us.shape[0]):
        u = us[i]
        acc = coeffs[M] + 0j
        for j in range(M - 1, -1, -1):
            acc = acc * u + coeffs[j]
        out[i] = acc
    return out
