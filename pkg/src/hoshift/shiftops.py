"""Rank-one shift operators p(s) d/ds + q(s) acting on BC_1 eigenfunctions.

The lowering operator with shift -b_1 in the invariant variable s is

    E_-(m) = 2 (s - 1) d/ds + (k1 + k2 - 1),      k1 = m_s, k2 = m_l,

and maps F(lambda, m) to (k1 + k2 - 1) F(lambda, m - b_1). The raising
operator is the weighted transpose of E_- with respect to the measures
w_m(s) ds.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial as P

from .errors import RepresentationError, WeightSingularityError
from .rankone import USeries
from .root_system import Multiplicity, shift_basis

ONE = P([1.0])
S = P([0.0, 1.0])
_ROOT_TOL = 1e-10


def _strip(p: P) -> P:
    c = np.array(p.coef, dtype=np.complex128)
    nz = np.nonzero(np.abs(c) > 1e-14 * max(1.0, np.abs(c).max()))[0]
    c = c[: nz[-1] + 1] if len(nz) else c[:1] * 0
    if np.all(c.imag == 0):
        c = c.real
    return P(c)


def _cancel(num: P, den: P):
    """Remove common linear factors (s - 1), (s + 1) from num/den."""
    num, den = _strip(num), _strip(den)
    changed = True
    while changed:
        changed = False
        for r in (1.0, -1.0):
            if den.degree() >= 1 and num.degree() >= 1 and abs(den(r)) < _ROOT_TOL and abs(num(r)) < _ROOT_TOL:
                lin = P([-r, 1.0])
                num, _ = divmod(num, lin)
                den, _ = divmod(den, lin)
                changed = True
    lead = den.coef[-1]
    return _strip(num / lead), _strip(den / lead)


@dataclass(frozen=True)
class RankOneOperator:
    """p(s) d/ds + q(s) with p = p_num/p_den and q = q_num/q_den."""

    p_num: P
    p_den: P
    q_num: P
    q_den: P
    interval: tuple = (-1.0, 1.0)
    label: str = ""

    def __post_init__(self):
        lo, hi = self.interval
        for den in (self.p_den, self.q_den):
            for r in den.roots():
                if abs(r.imag) < 1e-12 and lo < r.real < hi:
                    raise ValueError(f"{self.label}: coefficient pole at s={r.real} inside {self.interval}")

    @property
    def is_polynomial(self) -> bool:
        return self.p_den.degree() == 0 and self.q_den.degree() == 0

    def p(self, s):
        return self.p_num(s) / self.p_den(s)

    def q(self, s):
        return self.q_num(s) / self.q_den(s)

    def __call__(self, f, df, s):
        """Apply to a function given by its values f and derivatives df at s."""
        return self.p(s) * df + self.q(s) * f

    def polys(self):
        """(p, q) as polynomials; RepresentationError if either is rational."""
        if not self.is_polynomial:
            raise RepresentationError(f"{self.label}: coefficients are not polynomial in s")
        return self.p_num / self.p_den.coef[0], self.q_num / self.q_den.coef[0]

    def __str__(self):
        def fmt(n, d):
            ns = " + ".join(f"{c:g} s^{i}" for i, c in enumerate(np.real_if_close(n.coef)) if c != 0) or "0"
            if d.degree() == 0:
                return f"({ns})" if d.coef[0] == 1 else f"({ns})/{d.coef[0]:g}"
            ds = " + ".join(f"{c:g} s^{i}" for i, c in enumerate(np.real_if_close(d.coef)) if c != 0)
            return f"({ns})/({ds})"
        return f"{fmt(self.p_num, self.p_den)} d/ds + {fmt(self.q_num, self.q_den)}"


def _k(m):
    m = Multiplicity.of(m)
    return m.ms, m.ml


def e_minus_constant(m) -> float:
    k1, k2 = _k(m)
    return k1 + k2 - 1


def e_minus(m) -> RankOneOperator:
    """Lowering operator with shift -b_1 at the current multiplicity m."""
    C = e_minus_constant(m)
    return RankOneOperator(2 * (S - 1), ONE, P([C]), ONE, label=f"E-({Multiplicity.of(m).as_tuple()})")


def e_minus_literal(m) -> RankOneOperator:
    """(s - 1) d/ds + (k1 + k2 - 1) with the derivative term as printed; not a shift operator."""
    C = e_minus_constant(m)
    return RankOneOperator(S - 1, ONE, P([C]), ONE, label="E-literal")


def transpose(op: RankOneOperator) -> RankOneOperator:
    """Formal transpose w.r.t. ds: (p D + q)^* = -p D + (q - p')."""
    pn, pd = op.p_num, op.p_den
    dp_num = pn.deriv() * pd - pn * pd.deriv()
    dp_den = pd * pd
    qn, qd = _cancel(op.q_num * dp_den - dp_num * op.q_den, op.q_den * dp_den)
    pn2, pd2 = _cancel(-pn, pd)
    return RankOneOperator(pn2, pd2, qn, qd, op.interval, f"({op.label})^T")


def weight_exponents(m) -> tuple:
    """(a, b) with w_m(s) proportional to |1 - s|^a (1 + s)^b."""
    k1, k2 = _k(m)
    return (k1 + k2 - 1) / 2, (k2 - 1) / 2


def g_plus(m, k=None, lowering=e_minus) -> RankOneOperator:
    """Raising operator with shift k = b_1 from multiplicity m to m + k.

    G_+ H = w_{m+k}^{-1} L^T (w_m H) where L is the lowering operator at
    m + k. Only logarithmic derivatives of the weights enter, and the weight
    ratio w_m / w_{m+k} = (1 + s)/(1 - s) is rational.
    """
    m = Multiplicity.of(m)
    b1 = shift_basis()[0]
    if k is None:
        k = b1
    if Multiplicity.of(k) != b1:
        raise ValueError("only the shift b_1 is constructed explicitly")
    upper = m + b1
    L = lowering(upper)
    a_lo, b_lo = weight_exponents(m)
    a_up, b_up = weight_exponents(upper)
    da, db = a_lo - a_up, b_lo - b_up
    if da != int(da) or db != int(db):
        raise WeightSingularityError("weight ratio is not rational")
    # ratio = (1 - s)^da (1 + s)^db as num/den
    rn, rd = ONE, ONE
    for base, e in ((1 - S, int(da)), (1 + S, int(db))):
        if e > 0:
            rn = rn * base**e
        elif e < 0:
            rd = rd * base ** (-e)
    T = transpose(L)
    # (log w_m)' = -a/(1 - s) + b/(1 + s) = (-a (1 + s) + b (1 - s)) / (1 - s^2)
    lw_num = -a_lo * (1 + S) + b_lo * (1 - S)
    lw_den = (1 - S) * (1 + S)
    # q_G = (q_T + p_T (log w_m)') * ratio, p_G = p_T * ratio
    qn = T.q_num * lw_den * T.p_den + T.p_num * lw_num * T.q_den
    qd = T.q_den * lw_den * T.p_den
    qn, qd = _cancel(qn * rn, qd * rd)
    pn, pd = _cancel(T.p_num * rn, T.p_den * rd)
    for den in (pd, qd):
        for r in (-1.0, 1.0):
            if den.degree() >= 1 and abs(den(r)) < _ROOT_TOL:
                raise WeightSingularityError(
                    f"raising operator from {m.as_tuple()} is singular at s={r:g}")
    return RankOneOperator(pn, pd, qn, qd, (-1.0, 1.0), f"G+({m.as_tuple()})")


def _poly_in_u(p: P) -> np.ndarray:
    """Coefficients in u of p(s) with s = 1 - 2u."""
    return (p(P([1.0, -2.0]))).coef.astype(np.complex128)


def apply(op: RankOneOperator, fs: USeries) -> USeries:
    """Exact action on a u-power series; d/ds = -(1/2) d/du.

    Orders whose coefficient depends on terms beyond the truncation are
    dropped, so the order falls by one only when p(1) != 0.
    """
    p, q = op.polys()
    pu, qu = _poly_in_u(p), _poly_in_u(q)
    c = np.asarray(fs.coeffs, dtype=np.complex128)
    M = len(c) - 1
    dc = np.arange(1, M + 1) * c[1:] * -0.5
    out = np.zeros(M + 1 + max(len(pu), len(qu)), dtype=np.complex128)
    for i, pi in enumerate(pu):
        out[i:i + M] += pi * dc
    for i, qi in enumerate(qu):
        out[i:i + M + 1] += qi * c
    keep = M if abs(pu[0]) < 1e-14 else M - 1
    return USeries(out[: keep + 1])


def fd_weights(offsets, order: int = 1) -> np.ndarray:
    """Finite-difference weights for the given stencil offsets (in steps)."""
    offsets = np.asarray(offsets, dtype=float)
    n = len(offsets)
    V = np.vander(offsets, n, increasing=True).T
    rhs = np.zeros(n)
    rhs[order] = np.prod(np.arange(1, order + 1))
    return np.linalg.solve(V, rhs)


def sampled_derivative(values, h: float) -> np.ndarray:
    """6th-order first derivative on a uniform grid (7-point stencils)."""
    f = np.asarray(values)
    n = len(f)
    if n < 7:
        raise RepresentationError("need at least 7 samples for the 6th-order stencil")
    out = np.empty_like(f, dtype=np.result_type(f, float))
    central = fd_weights(np.arange(-3, 4))
    for i in range(n):
        lo = min(max(i - 3, 0), n - 7)
        w = central if lo == i - 3 else fd_weights(np.arange(lo, lo + 7) - i)
        out[i] = np.dot(w, f[lo:lo + 7]) / h
    return out


def apply_sampled(op: RankOneOperator, s, values) -> np.ndarray:
    """Action on samples over a uniform s-grid."""
    s = np.asarray(s, dtype=float)
    h = s[1] - s[0]
    if not np.allclose(np.diff(s), h, rtol=1e-9, atol=0):
        raise RepresentationError("sampled representation needs a uniform grid")
    return op(np.asarray(values), sampled_derivative(values, h), s)


def lowering_chain(m_prime, steps: int) -> list:
    """[E_-(m'), E_-(m' - b_1), ...]; applied in list order."""
    b1 = shift_basis()[0]
    m = Multiplicity.of(m_prime)
    return [e_minus(m - b1 * j) for j in range(steps)]


def chain_constant(m_prime, steps: int) -> float:
    """Product of the per-step constants k1 + k2 - 1 along the chain."""
    b1 = shift_basis()[0]
    m = Multiplicity.of(m_prime)
    out = 1.0
    for j in range(steps):
        out *= e_minus_constant(m - b1 * j)
    return out


def apply_chain(m_prime, steps: int, fs: USeries) -> USeries:
    for op in lowering_chain(m_prime, steps):
        fs = apply(op, fs)
    return fs


def weight(m, s) -> np.ndarray:
    """Rank-one s-measure density w_m(s) = 2^rho (1 - s)^a (1 + s)^b on [-1, 1]."""
    k1, k2 = _k(m)
    a, b = weight_exponents(m)
    s = np.asarray(s, dtype=float)
    return 2.0 ** (k1 / 2 + k2) * (1 - s) ** a * (1 + s) ** b


def inner_product(f, g, m, nodes: int = 200) -> float:
    """(f, g)_m = int_{-1}^{1} f g w_m ds by Gauss-Legendre."""
    x, wq = np.polynomial.legendre.leggauss(nodes)
    return complex(np.sum(wq * f(x) * g(x) * weight(m, x)))


# (F, H) coefficient lists in s: 1 vs s, s^2 vs s^3, s vs 1, 1 + 2s - s^2 vs 1/2 + s^2
ADJOINT_PAIRS = (([1.0], [0.0, 1.0]), ([0.0, 0.0, 1.0], [0.0, 0.0, 0.0, 1.0]),
                 ([0.0, 1.0], [1.0]), ([1.0, 2.0, -1.0], [0.5, 0.0, 1.0]))


def adjoint_sides(F, H, upper=(6, 0, 1), nodes: int = 200) -> tuple:
    """((E_- F, H) at upper - b_1, (F, G_+ H) at upper) for polynomials F, H in s."""
    upper = Multiplicity.of(upper)
    lower = upper - shift_basis()[0]
    F, H = P(F), P(H)
    E, G = e_minus(upper), g_plus(lower)
    lhs = inner_product(lambda s: E(F(s), F.deriv()(s), s), H, lower, nodes)
    rhs = inner_product(F, lambda s: G(H(s), H.deriv()(s), s), upper, nodes)
    return lhs, rhs


def ml_apply_series(m, fs: USeries) -> USeries:
    """Modified Laplacian L(m) + rho^2 on a u-series.

    In u the operator is -4[u(1-u) D^2 + (c - (1+rho) u) D] + rho^2 with
    c = (1 + k1 + k2)/2; the top coefficient is dropped.
    """
    k1, k2 = _k(m)
    rho = k1 / 2 + k2
    c0 = (1 + k1 + k2) / 2
    c = np.asarray(fs.coeffs, dtype=np.complex128)
    j = np.arange(len(c) - 1)
    out = -4 * ((j + 1) * (j + c0) * c[1:] - j * (j + rho) * c[:-1]) + rho**2 * c[:-1]
    return USeries(out)
