"""Harish-Chandra c-function, log-Gamma and the polar-set predicate."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import IndeterminateWarning, PolarMultiplicityError, PoleError, SpectralPoleError
from .root_system import Multiplicity, RootSystemBC, lambda_alpha, rho

POLE_TOL = 1e-10


def _pole_order(z: complex, tol: float = POLE_TOL):
    """Return n when z is within tol of -n (n >= 0), else None."""
    n = round(-z.real)
    if n >= 0 and abs(z + n) < tol:
        return int(n)
    return None


def log_gamma(z, pole_tol: float = POLE_TOL):
    """Principal branch of log Gamma(z); scalar or array input."""
    arr = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    for zz in arr.ravel():
        if _pole_order(complex(zz), pole_tol) is not None:
            raise PoleError(f"log_gamma: {complex(zz)} is a pole")
    out = kernels.loggamma_array(arr.ravel())
    if np.ndim(z) == 0:
        return complex(out[0])
    return out.reshape(np.shape(z))


@dataclass(frozen=True)
class CValue:
    """Value of c~ kept in log form plus degeneracy flags.

    order counts numerator poles minus denominator poles. indeterminate is
    set when some Gamma ratio is 0/0 at the point; a 0/0 inside one factor is
    resolved by the residue ratio, across factors log_value is nan.
    """

    log_value: complex
    is_pole: bool = False
    is_zero: bool = False
    indeterminate: bool = False
    order: int = 0

    @property
    def value(self) -> complex:
        if self.is_pole:
            return complex(math.inf)
        if self.is_zero:
            return 0j
        return complex(np.exp(self.log_value))

    @property
    def regular(self) -> bool:
        return not (self.is_pole or self.is_zero) and np.isfinite(self.log_value)


def _residue_log(n: int) -> complex:
    # log of Res_{z=-n} Gamma = (-1)^n / n!
    return complex(-math.lgamma(n + 1), math.pi if n % 2 else 0.0)


def c_tilde(lam, m, rs: RootSystemBC, pole_tol: float = POLE_TOL) -> CValue:
    """prod over positive roots of Gamma(l_a + m_{a/2}/4) / Gamma(l_a + m_{a/2}/4 + m_a/2)."""
    m = Multiplicity.of(m)
    lam = np.asarray(lam, dtype=np.complex128).reshape(rs.rank)
    total = 0j
    num_poles = den_poles = 0
    indeterminate = False
    num_args, den_args = [], []
    for a in rs.positive_roots:
        ma = rs.mult_of(a, m)
        zn = lambda_alpha(lam, a) + rs.half_mult(a, m) / 4
        zd = zn + ma / 2
        pn = _pole_order(zn, pole_tol)
        pd = _pole_order(zd, pole_tol)
        if pn is not None and pd is not None:
            # 0/0 inside one factor: both arguments move together in lambda
            indeterminate = True
            total += _residue_log(pn) - _residue_log(pd)
        elif ma == 0:
            continue
        elif pn is not None:
            num_poles += 1
            den_args.append(zd)
        elif pd is not None:
            den_poles += 1
            num_args.append(zn)
        else:
            num_args.append(zn)
            den_args.append(zd)
    if num_args:
        total += complex(np.sum(kernels.loggamma_array(np.array(num_args, dtype=np.complex128))))
    if den_args:
        total -= complex(np.sum(kernels.loggamma_array(np.array(den_args, dtype=np.complex128))))
    order = num_poles - den_poles
    if order > 0:
        return CValue(total, is_pole=True, indeterminate=indeterminate, order=order)
    if order < 0:
        return CValue(total, is_zero=True, indeterminate=indeterminate, order=order)
    if num_poles:
        # poles and zeros from different factors: the limit depends on the direction
        return CValue(complex(np.nan, np.nan), indeterminate=True, order=0)
    return CValue(total, indeterminate=indeterminate, order=0)


def _c_tilde_rho(m, rs):
    m = Multiplicity.of(m)
    ct = c_tilde(rho(rs, m), m, rs)
    if ct.is_zero or ct.is_pole or not np.isfinite(ct.log_value):
        raise PolarMultiplicityError(f"multiplicity {m.as_tuple()} is polar: c~(rho, m) is "
                                     f"{'zero' if ct.is_zero else 'singular or indeterminate'}")
    if ct.indeterminate:
        warnings.warn(f"c~(rho, m) is 0/0 at m={m.as_tuple()}; Gamma ratios resolved along lambda",
                      IndeterminateWarning, stacklevel=3)
    return ct


def _log_c(lam, m, rs, ct_rho):
    ct = c_tilde(lam, m, rs)
    if ct.is_pole or not np.isfinite(ct.log_value):
        raise SpectralPoleError(f"c~(lambda, m) has a pole at lambda={np.asarray(lam).tolist()}")
    if ct.is_zero:
        return None
    return ct.log_value - ct_rho.log_value


def c_norm(lam, m, rs: RootSystemBC) -> complex:
    """c(lambda, m) = c~(lambda, m) / c~(rho, m), in log space."""
    ct_rho = _c_tilde_rho(m, rs)
    lc = _log_c(lam, m, rs, ct_rho)
    return 0j if lc is None else complex(np.exp(lc))


def is_polar(m, rs: RootSystemBC) -> bool:
    """True iff c~(rho(m), m) vanishes."""
    m = Multiplicity.of(m)
    ct = c_tilde(rho(rs, m), m, rs)
    if ct.is_zero:
        return True
    if ct.indeterminate:
        warnings.warn(f"c~(rho, m) is indeterminate at m={m.as_tuple()}; reported as not polar",
                      IndeterminateWarning, stacklevel=2)
    return False


def gk_product(lam, m, rs: RootSystemBC) -> complex:
    """c(lambda, m) c(-lambda, m), Weyl invariant in lambda."""
    lam = np.asarray(lam, dtype=np.complex128)
    ct_rho = _c_tilde_rho(m, rs)
    a = _log_c(lam, m, rs, ct_rho)
    b = _log_c(-lam, m, rs, ct_rho)
    if a is None or b is None:
        return 0j
    return complex(np.exp(a + b))
