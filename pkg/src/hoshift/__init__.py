"""Heckman-Opdam hypergeometric functions for BC_n, shift operators and
the rank-one chi-spherical transform."""

from .root_system import Multiplicity, RootSystemBC, build_bc, rho
from .series import eval_phi, gamma_coefficients
from .cfunction import c_norm, c_tilde, gk_product, is_polar, log_gamma
from .hyperfun import eval_F, eval_rank_one

__all__ = [
    "Multiplicity", "RootSystemBC", "build_bc", "rho",
    "gamma_coefficients", "eval_phi",
    "c_tilde", "c_norm", "gk_product", "is_polar", "log_gamma",
    "eval_F", "eval_rank_one",
]
__version__ = "0.1.0"
