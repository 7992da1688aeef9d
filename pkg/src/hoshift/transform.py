"""Rank-one chi-spherical Fourier transform and its exponential type.

For m = (2(q-1), 0, 1) the transform of an even bump f supported in
|t| < r is (up to a global constant, fixed to 1)

    Sf(lambda) = int f(s) eta_l^+(s) w_m(s) F(lambda + rho, m_+(l); s) ds

over s in [cos r, 1] (compact picture) or [1, cosh r] (noncompact).
Quadrature runs in u = (1 - s)/2 so that points near the identity keep
full relative precision.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import CubicSpline

from . import rankone, shiftops
from .errors import DegenerateFitError, DomainError, QuadratureWarning, VanishingFactorError
from .root_system import Multiplicity, mult_shift_data
from .spherical import PICTURES, eta_s, s_weight

QUAD_RTOL = 1e-9


@dataclass(frozen=True)
class BumpSection:
    """Even profile supported in |t| < r.

    Closed form amplitude * exp(-r^2 / (r^2 - t^2)), or a cubic spline
    through user samples (t_i, f_i) on [0, r] when samples is given.
    """

    r: float
    amplitude: float = 1.0
    samples: tuple | None = field(default=None, repr=False)

    def __post_init__(self):
        if not 0 < self.r < np.pi / 2:
            raise DomainError(f"bump radius must lie in (0, pi/2), got {self.r}")

    def __call__(self, t):
        t = np.abs(np.asarray(t, dtype=float))
        inside = t < self.r
        out = np.zeros_like(t)
        if self.samples is not None:
            ts, fs = self.samples
            spline = CubicSpline(ts, fs, bc_type="clamped")
            out[inside] = spline(t[inside])
        else:
            ti = t[inside]
            out[inside] = self.amplitude * np.exp(-self.r**2 / (self.r**2 - ti**2))
        return out

    def scaled(self, c: float) -> "BumpSection":
        if self.samples is not None:
            ts, fs = self.samples
            return BumpSection(self.r, self.amplitude * c, (ts, np.asarray(fs) * c))
        return BumpSection(self.r, self.amplitude * c)


def make_bump(r: float, amplitude: float = 1.0) -> BumpSection:
    return BumpSection(float(r), float(amplitude))


def _t_of_u(u, picture):
    # s = cos t gives u = sin^2(t/2); s = cosh t gives u = -sinh^2(t/2)
    if picture == "compact":
        return 2 * np.arcsin(np.sqrt(u))
    return 2 * np.arcsinh(np.sqrt(-u))


def _u_end(r, picture):
    return np.sin(r / 2) ** 2 if picture == "compact" else -np.sinh(r / 2) ** 2


def _mult(q):
    if int(q) != q or q < 1:
        raise DomainError(f"q must be an integer >= 1, got {q}")
    return Multiplicity(2 * (int(q) - 1), 0, 1)


def _spectral(lam):
    return complex(np.ravel(np.asarray(lam, dtype=np.complex128))[0])


def _quad(f: BumpSection, l, q, picture, nodes, kernel_series):
    """int over the support of f eta^+ w_m K ds with K given by a u-series."""
    m = _mult(q)
    u_end = _u_end(f.r, picture)
    x, wq = np.polynomial.legendre.leggauss(nodes)
    u = (x + 1) * (u_end / 2)
    s = 1 - 2 * u
    jac = abs(u_end)  # ds = -2 du; |du| = |u_end|/2 per unit x
    vals = f(_t_of_u(u, picture))
    dens = eta_s(l, 1, s) * s_weight(m, s, picture)
    K = rankone.series_eval_u(kernel_series, u)[0]
    return complex(np.sum(wq * vals * dens * K) * jac)


def _kernel_direct(lam, l, q, u_max):
    m = _mult(q)
    mp = mult_shift_data(m, l).m_plus
    Lam = _spectral(lam) + (m.ms / 2 + m.ml)
    M = rankone.order_for(Lam, u_max)
    return rankone.frobenius_build(mp.ms, mp.ml, Lam, M)


def _kernel_shifted(lam, l, q, u_max):
    m = _mult(q)
    data = mult_shift_data(m, l)
    L = abs(int(l))
    Lam = _spectral(lam) + (m.ms / 2 + m.ml)
    M = rankone.order_for(Lam, u_max) + L
    fs = rankone.frobenius_build(data.m_prime.ms, data.m_prime.ml, Lam, M)
    C = shiftops.chain_constant(data.m_prime, L)
    if C == 0:
        raise VanishingFactorError("the lowering chain constant vanishes")
    out = shiftops.apply_chain(data.m_prime, L, fs)
    return rankone.USeries(np.asarray(out.coeffs) / C)


def _with_check(f, lam, l, q, nodes, picture, builder):
    if picture not in PICTURES:
        raise ValueError(f"unknown picture {picture!r}")
    ks = builder(lam, l, q, abs(_u_end(f.r, picture)))
    v1 = _quad(f, l, q, picture, nodes, ks)
    v2 = _quad(f, l, q, picture, 2 * nodes, ks)
    if abs(v2 - v1) > QUAD_RTOL * max(abs(v2), 1e-300):
        warnings.warn(f"quadrature with {nodes} nodes differs from {2 * nodes} nodes by "
                      f"{abs(v2 - v1) / abs(v2):.2e} relative", QuadratureWarning, stacklevel=3)
    return v1


def transform_direct(f: BumpSection, lam, l: int, q: int, nodes: int = 200,
                     picture: str = "compact") -> complex:
    """Quadrature against eta^+ F(lambda + rho, m_+(l))."""
    return _with_check(f, lam, l, q, nodes, picture, _kernel_direct)


def transform_shifted(f: BumpSection, lam, l: int, q: int, nodes: int = 200,
                      picture: str = "compact") -> complex:
    """Same transform with the kernel produced by |l| lowering steps from m'.

    The chain output is divided by the product of the per-step constants.
    """
    return _with_check(f, lam, l, q, nodes, picture, _kernel_shifted)


@dataclass(frozen=True)
class GrowthReport:
    direction: complex
    xi_grid: np.ndarray
    log_abs: np.ndarray
    fitted_type: float
    r: float
    residual: float
    values: np.ndarray = field(repr=False, default=None)


def growth_estimate(f: BumpSection, lam0=1.0, l: int = 0, q: int = 1, xi_grid=None,
                    nodes: int = 200, picture: str = "noncompact") -> GrowthReport:
    """Least-squares slope of log|Sf(xi lam0)| against xi |Re lam0|, top half of the grid."""
    lam0 = _spectral(lam0)
    if abs(lam0.real) == 0:
        raise DomainError("direction needs a nonzero real part")
    lam0 = lam0 / abs(lam0.real)
    xi = np.linspace(2.0, 80.0, 40) if xi_grid is None else np.asarray(xi_grid, dtype=float)
    if np.any(np.diff(xi) <= 0):
        raise DomainError("xi_grid must be increasing")
    if xi[-1] > 100:
        raise DomainError("xi beyond 100 is outside the accurate range of the evaluator")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", QuadratureWarning)
        vals = np.array([transform_direct(f, x * lam0, l, q, nodes, picture) for x in xi])
    with np.errstate(divide="ignore"):
        la = np.log(np.abs(vals))
    good = np.isfinite(la)
    if good.sum() <= len(xi) / 2:
        raise DegenerateFitError("transform underflows on more than half of the grid")
    top = np.arange(len(xi)) >= len(xi) // 2
    sel = top & good
    if sel.sum() < 2:
        raise DegenerateFitError("fewer than two usable points in the upper half of the grid")
    A = np.vstack([xi[sel] * abs(lam0.real), np.ones(sel.sum())]).T
    coef, res, *_ = np.linalg.lstsq(A, la[sel], rcond=None)
    resid = float(np.sqrt(res[0] / sel.sum())) if len(res) else 0.0
    return GrowthReport(lam0, xi, la, float(coef[0]), f.r, resid, vals)
