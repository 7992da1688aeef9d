"""Heckman-Opdam hypergeometric function as a c-weighted Weyl sum."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import rankone
from .cfunction import _c_tilde_rho, _log_c
from .errors import DomainError, ResonanceError, SpectralPoleError
from .root_system import Multiplicity, RootSystemBC, build_bc, rho
from .series import CHAMBER_MARGIN, default_order, eval_phi, gamma_coefficients


@dataclass(frozen=True)
class FEvaluation:
    value: complex
    terms: tuple  # (WeylElement, c(w lambda), Phi(w lambda; X))
    truncation_diag: float

    @property
    def cancellation(self) -> float:
        """max |c Phi| / |F|; large values flag catastrophic cancellation."""
        big = max((abs(c * p) for _, c, p in self.terms), default=0.0)
        return float(big / abs(self.value)) if self.value != 0 else float("inf")


def eval_F(lam, m, rs: RootSystemBC, X, N: int | None = None,
           margin: float = CHAMBER_MARGIN) -> FEvaluation:
    """F(lambda, m; exp X) = sum_w c(w lambda, m) Phi(w lambda, m; exp X).

    X may be complex as long as its real part lies in the chamber.
    """
    m = Multiplicity.of(m)
    if N is None:
        N = default_order(rs)
    lam = np.asarray(lam, dtype=np.complex128).reshape(rs.rank)
    ct_rho = _c_tilde_rho(m, rs)
    terms = []
    total = 0j
    diag = 0.0
    for w in rs.weyl_group:
        wl = w.act(lam)
        try:
            lc = _log_c(wl, m, rs, ct_rho)
        except SpectralPoleError as exc:
            raise SpectralPoleError(str(exc), w=w) from None
        if lc is None:
            terms.append((w, 0j, 0j))
            continue
        try:
            tbl = gamma_coefficients(wl, m, rs, N)
        except ResonanceError as exc:
            raise ResonanceError(exc.mu, exc.divisor, w=w) from None
        phi, d = eval_phi(tbl, X, margin)
        c = complex(np.exp(lc))
        terms.append((w, c, phi))
        total += c * phi
        diag = max(diag, d * abs(c) * abs(np.exp(np.dot(tbl.lam - rho(rs, m), np.asarray(X)))))
    return FEvaluation(complex(total), tuple(terms), float(diag))


FROBENIUS_RADIUS = 0.8
PFAFF_RADIUS = 0.97
RANK_ONE_CHAMBER_ORDER = 80


def eval_rank_one(lam, m, z, N: int = RANK_ONE_CHAMBER_ORDER) -> complex:
    """Rank-one F at the complex point z = alpha(X + iY).

    Tries, in order: the Frobenius series when |u| = |sinh z|^2 <= 0.8, the
    Gauss series in tanh^2 z when that is <= 0.97, the Frobenius series again
    up to its disk radius (slower convergence), and the chamber assembly.
    """
    m = Multiplicity.of(m)
    lam = complex(np.ravel(np.asarray(lam, dtype=np.complex128))[0])
    z = complex(z)
    if z.real < 0:
        z = -z  # F is even in z
    u = -np.sinh(z) ** 2
    if abs(u) <= FROBENIUS_RADIUS:
        return rankone.F_rank_one_u(lam, m.ms, m.ml, u)
    if abs(np.tanh(z) ** 2) <= PFAFF_RADIUS:
        return rankone.F_rank_one_pfaff(lam, m.ms, m.ml, z, PFAFF_RADIUS)
    if abs(u) < rankone.DISK_RADIUS:
        return rankone.F_rank_one_u(lam, m.ms, m.ml, u)
    if z.real <= 0.3:
        raise DomainError(f"z = {z} is outside every rank-one evaluation domain")
    return eval_F([lam], m, build_bc(1), [z], N).value


def _opdam_rhs(lam, rs, X, Y):
    images = [w.act(lam) for w in rs.weyl_group]
    re_max = max(float(np.real(np.dot(wl, X))) for wl in images)
    im_min = min(float(np.imag(np.dot(wl, Y))) for wl in images)
    return float(np.exp(re_max - im_min))


def check_opdam_bound(lam, m, rs: RootSystemBC, X, Y, N: int | None = None) -> dict:
    """Both sides of |F(lambda, m; exp(X + iY))| <= C exp(max Re w lambda(X) - min Im w lambda(Y)).

    The strip condition |alpha(Y)| <= pi/2 is imposed on the imaginary
    direction Y.
    """
    m = Multiplicity.of(m)
    if not m.is_positive:
        raise DomainError(f"multiplicity {m.as_tuple()} is not nonnegative")
    lam = np.asarray(lam, dtype=np.complex128).reshape(rs.rank)
    X = np.asarray(X, dtype=float).reshape(rs.rank)
    Y = np.asarray(Y, dtype=float).reshape(rs.rank)
    for a in rs.positive_roots:
        if abs(np.dot(a, Y)) > np.pi / 2 + 1e-12:
            raise DomainError(f"|alpha(Y)| > pi/2 for alpha = {a}")
    if rs.rank == 1:
        val = eval_rank_one(lam, m, X[0] + 1j * Y[0], N or RANK_ONE_CHAMBER_ORDER)
    else:
        val = eval_F(lam, m, rs, X + 1j * Y, N).value
    lhs = abs(val)
    rhs = _opdam_rhs(lam, rs, X, Y)
    return {"lhs": lhs, "rhs": rhs, "ratio": lhs / rhs}


def product_eval_mm0(lam, m, rs: RootSystemBC, X) -> complex:
    """Product of rank-one values F(lambda_j, (m_s, 0, m_l); x_j)."""
    m = Multiplicity.of(m)
    if m.mm != 0:
        raise DomainError("product formula needs m_m = 0")
    lam = np.asarray(lam, dtype=np.complex128).reshape(rs.rank)
    X = np.asarray(X, dtype=np.complex128).reshape(rs.rank)
    out = 1 + 0j
    for lj, xj in zip(lam, X):
        out *= eval_rank_one(lj, m, xj)
    return complex(out)
