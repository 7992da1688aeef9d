"""Harish-Chandra series on the positive chamber."""

from __future__ import annotations

import csv
import itertools
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import ChamberError, ResonanceError
from .root_system import Multiplicity, RootSystemBC, rho

RESONANCE_TOL = 1e-8
CHAMBER_MARGIN = 1e-6


def default_order(rs: RootSystemBC) -> int:
    return 30 if rs.rank == 1 else 12


def enumerate_lattice(rs: RootSystemBC, N: int) -> np.ndarray:
    """Points of Xi with height <= N, by height then lexicographically.

    Rows are coordinates on the simple roots.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    n = rs.rank
    pts = [p for p in itertools.product(range(N + 1), repeat=n) if sum(p) <= N]
    pts.sort(key=lambda p: (sum(p), p))
    return np.array(pts, dtype=np.int64).reshape(-1, n)


@dataclass(frozen=True)
class CoefficientTable:
    lam: np.ndarray
    mult: Multiplicity
    rs: RootSystemBC
    max_height: int
    points: np.ndarray
    gammas: np.ndarray
    mu_eps: np.ndarray = field(repr=False)
    heights: np.ndarray = field(repr=False)

    def __getitem__(self, mu) -> complex:
        mu = tuple(int(x) for x in mu)
        if sum(mu) > self.max_height or min(mu) < 0:
            raise KeyError(mu)
        for p, g in zip(self.points, self.gammas):
            if tuple(p) == mu:
                return complex(g)
        raise KeyError(mu)

    def rows(self):
        """(coords, height, Gamma) in export order."""
        for p, h, g in zip(self.points, self.heights, self.gammas):
            yield tuple(int(x) for x in p), int(h), complex(g)

    def to_csv(self, fh) -> None:
        n = self.rs.rank
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow([f"n{i + 1}" for i in range(n)] + ["height", "re_gamma", "im_gamma"])
        for p, h, g in self.rows():
            writer.writerow(list(p) + [h, repr(g.real), repr(g.imag)])


def _lookup(points: np.ndarray, N: int):
    n = points.shape[1]
    strides = np.array([(N + 1) ** i for i in range(n)], dtype=np.int64)
    index = -np.ones((N + 1) ** n, dtype=np.int64)
    index[points @ strides] = np.arange(points.shape[0])
    return index, strides


def gamma_coefficients(lam, m, rs: RootSystemBC, N: int | None = None,
                       resonance_tol: float = RESONANCE_TOL) -> CoefficientTable:
    """Solve the Gamma_mu recurrence up to height N.

    Raises ResonanceError when <mu, mu - 2 lambda> is within
    resonance_tol * max(1, |mu|^2) of zero for some stored mu.
    """
    m = Multiplicity.of(m)
    if N is None:
        N = default_order(rs)
    lam = np.asarray(lam, dtype=np.complex128).reshape(rs.rank)
    points = enumerate_lattice(rs, N)
    mu_eps = (rs._S @ points.T).T.astype(np.float64)
    index, strides = _lookup(points, N)
    pos_eps, pos_simple, pos_mult = rs.positive_arrays(m)
    r = rho(rs, m).astype(np.float64)
    gammas, bad = kernels.hc_gamma_kernel(points, mu_eps, index, strides, pos_simple, pos_eps,
                                          pos_mult, lam, r, resonance_tol)
    if bad >= 0:
        mu = mu_eps[bad]
        raise ResonanceError(points[bad], divisor=complex(mu @ (mu - 2 * lam)))
    return CoefficientTable(lam, m, rs, N, points, gammas, mu_eps, points.sum(axis=1))


def check_chamber(rs: RootSystemBC, X, margin: float = CHAMBER_MARGIN) -> None:
    Xr = np.real(np.asarray(X)).reshape(rs.rank)
    vals = [float(np.dot(a, Xr)) for a in rs.simple_roots]
    if min(vals) <= margin:
        raise ChamberError(f"point {Xr.tolist()} is not inside the positive chamber "
                           f"(min simple root value {min(vals):.3g} <= {margin:g})")


def eval_phi(tbl: CoefficientTable, X, margin: float = CHAMBER_MARGIN):
    """Phi(lambda, m; exp X) and a truncation diagnostic.

    The diagnostic is the summed magnitude of the terms in the two outermost
    height shells (relative to the leading term; two shells because in rank
    one only even heights are populated). X may be complex with real part in
    the chamber.
    """
    rs = tbl.rs
    check_chamber(rs, X, margin)
    X = np.asarray(X, dtype=np.complex128).reshape(rs.rank)
    r = rho(rs, tbl.mult)
    top = max(tbl.max_height - 1, 0)
    total, shell = kernels.hc_series_sum(tbl.gammas, tbl.mu_eps, tbl.heights, X, top)
    lead = np.exp(np.dot(tbl.lam - r, X))
    return complex(lead * total), float(shell)
