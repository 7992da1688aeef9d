"""BC_n root data, Weyl group, multiplicities and shift bookkeeping.

Roots are integer vectors in the orthonormal epsilon basis, so
<alpha, alpha> is 1 (short), 2 (medium) or 4 (long). Multiplicities follow
the (m_s, m_m, m_l) convention; Heckman-Opdam's k relates by k_{2a} = m_a / 2,
which is never applied implicitly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import factorial
from typing import NamedTuple

import numpy as np

SHORT, MEDIUM, LONG = "short", "medium", "long"
ORBITS = (SHORT, MEDIUM, LONG)


@dataclass(frozen=True)
class Multiplicity:
    """Value of a Weyl-invariant multiplicity on the short/medium/long orbits."""

    ms: float
    mm: float
    ml: float

    @classmethod
    def of(cls, value) -> "Multiplicity":
        if isinstance(value, Multiplicity):
            return value
        ms, mm, ml = value
        return cls(ms, mm, ml)

    def as_tuple(self) -> tuple:
        return (self.ms, self.mm, self.ml)

    def on_orbit(self, orbit: str) -> float:
        return {SHORT: self.ms, MEDIUM: self.mm, LONG: self.ml}[orbit]

    @property
    def is_positive(self) -> bool:
        return self.ms >= 0 and self.mm >= 0 and self.ml >= 0

    def __add__(self, other):
        o = Multiplicity.of(other)
        return Multiplicity(self.ms + o.ms, self.mm + o.mm, self.ml + o.ml)

    def __sub__(self, other):
        o = Multiplicity.of(other)
        return Multiplicity(self.ms - o.ms, self.mm - o.mm, self.ml - o.ml)

    def __mul__(self, c):
        return Multiplicity(c * self.ms, c * self.mm, c * self.ml)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __iter__(self):
        return iter(self.as_tuple())


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation: (w v)_i = signs[i] * v[perm[i]]."""

    perm: tuple
    signs: tuple

    def act(self, v):
        v = np.asarray(v)
        return np.asarray(self.signs) * v[list(self.perm)]

    @property
    def is_identity(self) -> bool:
        return self.perm == tuple(range(len(self.perm))) and all(s == 1 for s in self.signs)

    def __str__(self):
        body = ",".join(("-" if s < 0 else "") + str(p + 1) for p, s in zip(self.perm, self.signs))
        return f"w[{body}]"


class RootSystemBC:
    """Root system of type BC_n with the standard positive system."""

    def __init__(self, rank: int):
        if rank < 1:
            raise ValueError(f"rank must be >= 1, got {rank}")
        self.rank = n = rank
        pos = []
        orbit = {}

        def unit(i, c=1):
            v = [0] * n
            v[i] = c
            return tuple(v)

        for i in range(n):
            pos.append(unit(i))
            orbit[unit(i)] = SHORT
        for i in range(n):
            pos.append(unit(i, 2))
            orbit[unit(i, 2)] = LONG
        for j in range(n):
            for k in range(j + 1, n):
                for sgn in (-1, 1):
                    v = [0] * n
                    v[j], v[k] = 1, sgn
                    pos.append(tuple(v))
                    orbit[tuple(v)] = MEDIUM
        for v in list(orbit):
            orbit[tuple(-x for x in v)] = orbit[v]
        self.positive_roots = tuple(pos)
        self.roots = tuple(pos) + tuple(tuple(-x for x in v) for v in pos)
        self._orbit = orbit
        simple = []
        for i in range(n - 1):
            v = [0] * n
            v[i], v[i + 1] = 1, -1
            simple.append(tuple(v))
        simple.append(unit(n - 1))
        self.simple_roots = tuple(simple)
        # columns are the simple roots; coordinates c solve S c = v
        self._S = np.array(simple, dtype=np.int64).T
        self._S_inv = np.rint(np.linalg.inv(self._S)).astype(np.int64)

    def __repr__(self):
        return f"RootSystemBC({self.rank})"

    def orbit_of(self, root) -> str:
        return self._orbit[tuple(int(x) for x in root)]

    def is_root(self, v) -> bool:
        return tuple(int(x) for x in v) in self._orbit

    def mult_of(self, root, m: Multiplicity) -> float:
        """m_alpha, zero when alpha is not a root."""
        key = tuple(int(x) for x in root)
        if key not in self._orbit:
            return 0.0
        return Multiplicity.of(m).on_orbit(self._orbit[key])

    def half_mult(self, root, m: Multiplicity) -> float:
        """m_{alpha/2}; nonzero only for long roots."""
        r = np.asarray(root)
        if np.any(r % 2):
            return 0.0
        return self.mult_of(r // 2, m)

    def in_sigma_star(self, root) -> bool:
        return not self.is_root(2 * np.asarray(root))

    def in_sigma_i(self, root) -> bool:
        r = np.asarray(root)
        return bool(np.any(r % 2)) or not self.is_root(r // 2)

    def simple_coords(self, v) -> np.ndarray:
        """Coordinates of an integral vector on the simple roots."""
        return self._S_inv @ np.asarray(v, dtype=np.int64)

    def from_simple(self, c) -> np.ndarray:
        return self._S @ np.asarray(c, dtype=np.int64)

    @cached_property
    def weyl_group(self) -> tuple:
        n = self.rank
        els = []
        for perm in itertools.permutations(range(n)):
            for signs in itertools.product((1, -1), repeat=n):
                els.append(WeylElement(perm, signs))
        els.sort(key=lambda w: (not w.is_identity,))
        return tuple(els)

    @property
    def weyl_order(self) -> int:
        return 2**self.rank * factorial(self.rank)

    def positive_arrays(self, m: Multiplicity):
        """(roots_eps, roots_simple, mults) as numpy arrays for the kernels."""
        eps = np.array(self.positive_roots, dtype=np.float64)
        simple = np.array([self.simple_coords(r) for r in self.positive_roots], dtype=np.int64)
        mults = np.array([self.mult_of(r, m) for r in self.positive_roots], dtype=np.float64)
        return eps, simple, mults


def build_bc(n: int) -> RootSystemBC:
    return RootSystemBC(n)


def rho(rs: RootSystemBC, m) -> np.ndarray:
    """Half the multiplicity-weighted sum of positive roots."""
    m = Multiplicity.of(m)
    out = np.zeros(rs.rank)
    for r in rs.positive_roots:
        out += rs.mult_of(r, m) * np.asarray(r)
    return out / 2


def lambda_alpha(lam, alpha) -> complex:
    alpha = np.asarray(alpha, dtype=float)
    norm2 = float(alpha @ alpha)
    if norm2 == 0.0:
        raise ValueError("zero root")
    return complex(np.asarray(lam) @ alpha) / norm2


def in_weight_lattice(lam, rs: RootSystemBC, tol: float = 1e-12) -> bool:
    lam = np.asarray(lam)
    if np.iscomplexobj(lam) and np.any(np.abs(lam.imag) > tol):
        raise ValueError("weight lattice test needs a real parameter")
    lam = np.real(lam)
    for r in rs.positive_roots:
        v = lambda_alpha(lam, r).real
        if abs(v - round(v)) > tol:
            return False
    return True


def shift_basis(rs: RootSystemBC | None = None) -> tuple:
    """b_1, b_2, b_3: short/long pair shift (4, 0, -2), medium (0, 2, 0), long (0, 0, 2)."""
    return Multiplicity(4, 0, -2), Multiplicity(0, 2, 0), Multiplicity(0, 0, 2)


class ShiftData(NamedTuple):
    m_plus: Multiplicity
    m_minus: Multiplicity
    m_prime: Multiplicity
    k: Multiplicity


def mult_shift_data(m, l: int) -> ShiftData:
    """m_+(l), m_-(l), the positive lift m' and the shift k = |l| b_1."""
    m = Multiplicity.of(m)
    L = abs(int(l))
    m_plus = Multiplicity(m.ms - 2 * L, m.mm, m.ml + 2 * L)
    m_minus = Multiplicity(m.ms + 2 * L, m.mm, m.ml - 2 * L)
    m_prime = Multiplicity(m.ms + 2 * L, m.mm, m.ml)
    k = shift_basis()[0] * L
    return ShiftData(m_plus, m_minus, m_prime, k)


def weyl_orbit(lam, rs: RootSystemBC) -> list:
    return [(w, w.act(lam)) for w in rs.weyl_group]
