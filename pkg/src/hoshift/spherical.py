"""chi-spherical functions, weights delta and Delta, the factors eta and d.

Points are given by their epsilon-coordinates: Y on the torus (x = exp iY)
in the compact picture, X on A in the noncompact one. In rank one the angle
t = 2 alpha(Y) gives s = cos t (or s = cosh t with t = 2 alpha(X)).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, VanishingFactorError, WallSingularityError
from .hyperfun import eval_F, eval_rank_one
from .root_system import LONG, MEDIUM, SHORT, Multiplicity, build_bc, mult_shift_data
from .shiftops import weight_exponents

PICTURES = ("compact", "noncompact")


def _check_picture(picture):
    if picture not in PICTURES:
        raise ValueError(f"picture must be one of {PICTURES}, got {picture!r}")


def point_from_t(t) -> np.ndarray:
    """Rank-one epsilon-coordinate for the angle t = 2 alpha."""
    return np.array([t / 2.0])


def in_strip(Y, rs=None, bound: float = np.pi / 2) -> bool:
    """|alpha(Y)| <= bound for every root alpha."""
    Y = np.atleast_1d(np.asarray(Y, dtype=float))
    rs = rs or build_bc(len(Y))
    return all(abs(np.dot(a, Y)) <= bound for a in rs.positive_roots)


def _half_sum(Y, picture):
    # (e^a + e^-a)/2 at a short root: cos on the torus, cosh on A
    Y = np.atleast_1d(np.asarray(Y, dtype=np.complex128))
    return np.cos(Y) if picture == "compact" else np.cosh(Y)


def eta(l: int, sign: int, Y, picture: str = "compact") -> complex:
    """prod over short positive roots of ((e^a + e^-a)/2)^(+-|l|)."""
    _check_picture(picture)
    L = abs(int(l))
    if L == 0:
        return 1 + 0j
    h = _half_sum(Y, picture)
    if sign < 0 and np.any(np.abs(h) < 1e-300):
        raise VanishingFactorError(f"eta^- has a vanishing factor at {np.asarray(Y).tolist()}")
    return complex(np.prod(h ** (np.sign(sign) * L)))


def eta_s(l: int, sign: int, s) -> np.ndarray:
    """Rank one: ((1 + s)/2)^(+-|l|/2)."""
    s = np.asarray(s, dtype=np.complex128)
    if sign < 0 and np.any(np.abs(1 + s) == 0):
        raise VanishingFactorError("eta^- vanishes at s = -1")
    return ((1 + s) / 2) ** (np.sign(sign) * abs(int(l)) / 2)


@dataclass(frozen=True)
class WeightValue:
    delta: complex
    abs_delta: float
    components: tuple  # (Delta_s, Delta_m, Delta_l)


def delta_weight(m, Y, picture: str = "compact", rs=None) -> WeightValue:
    """delta(m) = prod over positive roots of (e^a - e^-a)^{m_a}."""
    _check_picture(picture)
    m = Multiplicity.of(m)
    Y = np.atleast_1d(np.asarray(Y, dtype=float))
    rs = rs or build_bc(len(Y))
    comps = {SHORT: 1.0, MEDIUM: 1.0, LONG: 1.0}
    log_delta = 0j
    log_abs = 0.0
    for a in rs.positive_roots:
        y = float(np.dot(a, Y))
        f = 2j * np.sin(y) if picture == "compact" else 2 * np.sinh(y) + 0j
        orbit = rs.orbit_of(a)
        comps[orbit] *= abs(f)
        ma = m.on_orbit(orbit)
        if ma == 0:
            continue
        if abs(f) == 0:
            if ma < 0:
                raise WallSingularityError(f"delta({m.as_tuple()}) is singular on the wall {a}")
            return WeightValue(0j, 0.0, (comps[SHORT], comps[MEDIUM], comps[LONG]))
        log_delta += ma * np.log(f)
        log_abs += ma * np.log(abs(f))
    return WeightValue(complex(np.exp(log_delta)), float(np.exp(log_abs)),
                       (comps[SHORT], comps[MEDIUM], comps[LONG]))


def d_factor(l: int, Y, picture: str = "compact") -> float:
    """(Delta_s/Delta_l)^{2|l|} = prod over short roots |e^a + e^-a|^{-2|l|}."""
    _check_picture(picture)
    h = np.abs(2 * _half_sum(Y, picture))
    if np.any(h == 0):
        raise WallSingularityError("d is singular where e^a + e^-a vanishes")
    return float(np.prod(h ** (-2.0 * abs(int(l)))))


def s_weight(m, s, picture: str = "compact") -> np.ndarray:
    """Rank-one density with |delta(m, x)| dx = s_weight(m, s) ds.

    2^rho |1 - s|^a (1 + s)^b, a = (k1 + k2 - 1)/2, b = (k2 - 1)/2.
    """
    _check_picture(picture)
    m = Multiplicity.of(m)
    a, b = weight_exponents(m)
    s = np.asarray(s, dtype=float)
    return 2.0 ** (m.ms / 2 + m.ml) * np.abs(1 - s) ** a * (1 + s) ** b


def chi_spherical(lam, l: int, m, point, sign: int = 1, picture: str = "compact",
                  rs=None, N: int | None = None) -> complex:
    """eta_l^{+-}(point) F(lambda, m_{+-}(l); point).

    Rank one accepts the angle t as a scalar; otherwise point is the
    epsilon-coordinate vector (chamber points only, noncompact picture).
    """
    _check_picture(picture)
    data = mult_shift_data(m, l)
    mm = data.m_plus if sign > 0 else data.m_minus
    if np.ndim(point) == 0 or (rs is not None and rs.rank == 1) or len(np.atleast_1d(point)) == 1:
        t = float(np.ravel(point)[0]) if np.ndim(point) else float(point)
        z = 1j * t / 2 if picture == "compact" else t / 2 + 0j
        Y = point_from_t(t)
        lam1 = complex(np.ravel(np.asarray(lam, dtype=np.complex128))[0])
        return eta(l, sign, Y, picture) * eval_rank_one(lam1, mm, z)
    if picture == "compact":
        raise DomainError("rank >= 2 evaluation is available on the chamber only")
    X = np.asarray(point, dtype=float)
    rs = rs or build_bc(len(X))
    return eta(l, sign, X, picture) * eval_F(lam, mm, rs, X, N).value
