"""Independent BC_1 evaluator around the identity.

With alpha the short root (<alpha, alpha> = 1) and x = e^{2 alpha}, the
invariant variable is s = (x + 1/x) / 2, i.e. s = cosh t on A and s = cos t
on the torus, where t = 2 alpha. In u = (1 - s) / 2 the eigen-equation
L(m) F = (lambda^2 - rho^2) F reads

    u (1 - u) F'' + (c - (1 + rho) u) F' - (rho^2 - lambda^2) / 4 F = 0,

    rho = k1/2 + k2,  c = (1 + k1 + k2) / 2,

a Gauss equation with a = (rho + lambda)/2, b = (rho - lambda)/2. The
solution regular at u = 0 with value 1 there is the normalized
hypergeometric function, expanded here as a power series in u.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DomainError, IndicialCollisionError, ParameterPoleError

DISK_RADIUS = 0.95


def gauss_params(k1, k2, lam):
    rho = k1 / 2 + k2
    return (rho + lam) / 2, (rho - lam) / 2, (1 + k1 + k2) / 2


def u_of_s(s):
    return (1 - np.asarray(s, dtype=np.complex128)) / 2


def s_of_t(t, picture: str = "compact"):
    """Invariant variable for the angle/distance t = 2 alpha."""
    if picture == "compact":
        return np.cos(t)
    if picture == "noncompact":
        return np.cosh(t)
    raise ValueError(f"unknown picture {picture!r}")


@dataclass(frozen=True)
class USeries:
    """Truncated power series sum_j coeffs[j] u^j, u = (1 - s) / 2."""

    coeffs: np.ndarray

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class FrobeniusSeries(USeries):
    k1: float = 0.0
    k2: float = 0.0
    lam: complex = 0j


def frobenius_build(k1, k2, lam, M: int = 80) -> FrobeniusSeries:
    """Coefficients of the identity-normalized eigenfunction up to u^M.

    Refuses parameter sets where j + c vanishes for some j < M, since there
    the normalized analytic solution would need a logarithmic companion.
    """
    lam = complex(lam)
    a, b, c = gauss_params(k1, k2, lam)
    coeffs, bad = kernels.frobenius_coeffs(complex(a), complex(b), complex(c), int(M))
    if bad >= 0:
        raise IndicialCollisionError(
            f"(k1, k2) = ({k1}, {k2}): c = {c} makes the recurrence singular at j = {bad}")
    return FrobeniusSeries(coeffs, k1, k2, lam)


def series_eval_u(fs: USeries, u, radius: float = DISK_RADIUS):
    """Horner evaluation directly in u = (1 - s)/2."""
    uu = np.atleast_1d(np.asarray(u, dtype=np.complex128))
    if np.any(np.abs(uu) >= radius):
        raise DomainError(f"|1 - s|/2 must stay below {radius}; got max {np.abs(uu).max():.4g}")
    vals = kernels.horner(np.asarray(fs.coeffs, dtype=np.complex128), uu.ravel())
    diag = np.abs(fs.coeffs[-1]) * np.abs(uu.ravel()) ** fs.order
    if np.ndim(u) == 0:
        return complex(vals[0]), float(diag[0])
    return vals.reshape(np.shape(u)), diag.reshape(np.shape(u))


def series_eval(fs: USeries, s, radius: float = DISK_RADIUS):
    """Horner evaluation at s (scalar or array) plus |last term| diagnostic."""
    u = u_of_s(s)
    return series_eval_u(fs, u if np.ndim(s) else complex(u), radius)


frobenius_eval = series_eval


def order_for(lam, u_max: float, tol: float = 1e-17, cap: int = 4000) -> int:
    """Truncation order that pushes the tail below tol for |u| <= u_max."""
    amp = abs(complex(lam)) / 2 + 2
    # terms grow while (j/amp)^2 < u_max, then decay geometrically in u_max
    j_peak = int(amp * np.sqrt(u_max)) + 1
    tail = int(np.log(tol) / np.log(max(u_max, 1e-3))) + 1
    return int(min(cap, max(40, 2 * j_peak + tail + 20)))


def F_rank_one_u(lam, k1, k2, u, M: int | None = None):
    """Normalized BC_1 hypergeometric function at u = (1 - s)/2."""
    if M is None:
        M = order_for(lam, float(np.max(np.abs(u))))
    return series_eval_u(frobenius_build(k1, k2, lam, M), u)[0]


def F_rank_one(lam, k1, k2, s, M: int | None = None):
    """Normalized BC_1 hypergeometric function at s (values only)."""
    u = u_of_s(s)
    return F_rank_one_u(lam, k1, k2, u if np.ndim(s) else complex(u), M)


def F_rank_one_pfaff(lam, k1, k2, z, radius: float = 0.97) -> complex:
    """Normalized BC_1 function at z = alpha(X + iY) through Pfaff's transformation.

    2F1(a, b; c; u) = (1 - u)^{-a} 2F1(a, c - b; c; u/(u - 1)); with
    u = -sinh^2 z this reads cosh(z)^{-2a} 2F1(a, c - b; c; tanh^2 z), which
    converges well beyond the u-disk for |Im z| < pi/4.
    """
    z = complex(z)
    a, b, c = gauss_params(k1, k2, complex(lam))
    w = np.tanh(z) ** 2
    if abs(w) > radius:
        raise DomainError(f"|tanh z|^2 = {abs(w):.4g} exceeds {radius}")
    return complex(np.exp(-2 * a * np.log(np.cosh(z)))) * gauss_2f1(a, c - b, c, w, max_terms=200000, radius=radius)


def gauss_2f1(a, b, c, z, tol: float = 1e-17, max_terms: int = 100000,
              radius: float = 0.9) -> complex:
    """Power series of 2F1(a, b; c; z) for |z| <= radius (0.9 by default)."""
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    n = round(-c.real)
    if n >= 0 and abs(c + n) < 1e-12:
        raise ParameterPoleError(f"c = {c} is a nonpositive integer")
    if abs(z) > radius + 1e-12:
        raise DomainError(f"|z| = {abs(z):.4g} > {radius}")
    total = term = 1 + 0j
    for j in range(max_terms):
        ratio = (j + a) * (j + b) / ((j + 1) * (j + c)) * z
        term = term * ratio
        total += term
        if term == 0:
            break
        if abs(term) < tol * abs(total) and abs(ratio) < 1:
            break
    return total


def gauss_2f1_derivative(a, b, c, z, tol: float = 1e-17, max_terms: int = 100000) -> complex:
    """Term-by-term derivative of the 2F1 series."""
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    n = round(-c.real)
    if n >= 0 and abs(c + n) < 1e-12:
        raise ParameterPoleError(f"c = {c} is a nonpositive integer")
    # d/dz sum_j t_j z^j = sum_{j>=1} j t_j z^{j-1}
    t = 1 + 0j
    total = 0j
    for j in range(max_terms):
        t = t * (j + a) * (j + b) / ((j + 1) * (j + c))
        d = (j + 1) * t * z**j
        total += d
        if t == 0:
            break
        if abs(d) < tol * abs(total) and abs((j + 1 + a) * (j + 1 + b) / ((j + 2) * (j + 1 + c)) * z) < 1:
            break
    return total


def classical_shift_check(a, b, c, z):
    """Both sides of d/dz F(a, b, c; z) = (ab / c) F(a+1, b+1, c+1; z)."""
    lhs = gauss_2f1_derivative(a, b, c, z)
    rhs = a * b / c * gauss_2f1(a + 1, b + 1, c + 1, z)
    return complex(lhs), complex(rhs)
