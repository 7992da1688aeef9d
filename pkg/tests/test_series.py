import io

import numpy as np
import pytest
import sympy as sp

from hoshift.errors import ChamberError, ResonanceError
from hoshift.root_system import build_bc
from hoshift.series import enumerate_lattice, eval_phi, gamma_coefficients

from helpers import radial_operator


def test_enumerate_examples():
    assert enumerate_lattice(build_bc(1), 3).tolist() == [[0], [1], [2], [3]]
    assert enumerate_lattice(build_bc(2), 1).tolist() == [[0, 0], [0, 1], [1, 0]]
    assert len(enumerate_lattice(build_bc(2), 2)) == 6
    with pytest.raises(ValueError):
        enumerate_lattice(build_bc(1), -1)


def test_table_shape():
    rs = build_bc(2)
    tbl = gamma_coefficients([1.3 + 0.2j, 0.4], (1, 1, 1), rs, 6)
    assert tbl.gammas[0] == 1
    assert tbl[(0, 0)] == 1
    assert len(tbl.points) == 28
    assert max(tbl.heights) == 6
    with pytest.raises(KeyError):
        tbl[(4, 3)]


def test_zero_multiplicity_gives_trivial_series():
    tbl = gamma_coefficients([1.7 + 0.3j, 0.6], (0, 0, 0), build_bc(2), 8)
    assert np.all(tbl.gammas[1:] == 0)
    X = np.array([1.1, 0.5])
    val, _ = eval_phi(tbl, X)
    assert np.isclose(val, np.exp(np.dot([1.7 + 0.3j, 0.6], X)), rtol=1e-15)


def _first_coefficient_from_ansatz():
    """Gamma at mu = 2 alpha by plugging e^{(lam-rho)x}(1 + g q), q = e^{-2x}, into L(m)."""
    lam, k1, k2, g, q = sp.symbols("lam k1 k2 g q")
    rho = k1 / 2 + k2
    nu = lam - rho
    # coefficients in q of e^{-nu x} L(m) Phi, with coth x = 1 + 2q + .., 2 coth 2x = 2 + O(q^2)
    drift = (k1 + 2 * k2) + 2 * k1 * q
    phi_d = nu + (nu - 2) * g * q
    phi_dd = nu**2 + (nu - 2) ** 2 * g * q
    lhs = sp.expand(phi_dd + drift * phi_d)
    rhs = sp.expand((lam**2 - rho**2) * (1 + g * q))
    eq = sp.expand(lhs - rhs).coeff(q, 1)
    return sp.lambdify((lam, k1, k2), sp.solve(eq, g)[0])


@pytest.mark.parametrize("lam,k1,k2", [(2.3, 2.0, 1.0), (0.7 + 1.1j, 4.0, 1.0), (3.1, 1.5, 2.5)])
def test_first_coefficient_matches_ansatz(lam, k1, k2):
    tbl = gamma_coefficients([lam], (k1, 0, k2), build_bc(1), 4)
    assert tbl[(1,)] == 0
    expected = _first_coefficient_from_ansatz()(lam, k1, k2)
    assert np.isclose(tbl[(2,)], expected, rtol=1e-14)


def test_resonance_rejected():
    with pytest.raises(ResonanceError) as info:
        gamma_coefficients([1.0], (2, 0, 1), build_bc(1), 10)
    assert info.value.mu == (2,)


def test_chamber_margin():
    tbl = gamma_coefficients([1.3, 0.4], (1, 1, 1), build_bc(2), 4)
    with pytest.raises(ChamberError):
        eval_phi(tbl, [0.5, 0.5])
    with pytest.raises(ChamberError):
        eval_phi(tbl, [0.5, 0.0])


def test_diagnostic_shrinks_with_order():
    rs = build_bc(1)
    d10 = eval_phi(gamma_coefficients([2.3 + 0.5j], (2, 0, 1), rs, 10), [1.2])[1]
    d30 = eval_phi(gamma_coefficients([2.3 + 0.5j], (2, 0, 1), rs, 30), [1.2])[1]
    assert d30 <= d10


@pytest.mark.parametrize("m", [(2, 0, 1), (4, 0, 1), (2, 0, 3), (0.5, 0, 1.7)])
def test_last_shell_small_at_order_40(m):
    tbl = gamma_coefficients([1.9 + 0.4j], m, build_bc(1), 40)
    assert eval_phi(tbl, [1.0])[1] < 1e-12


@pytest.mark.parametrize("lam,m,x", [(2.3 + 0.4j, (2, 0, 1), 1.0), (1.4, (4, 0, 1), 1.3),
                                     (0.6 + 2.0j, (2, 0, 3), 1.1)])
def test_eigen_equation_rank_one(lam, m, x):
    rs = build_bc(1)
    tbl = gamma_coefficients([lam], m, rs, 30)
    Lphi, phi = radial_operator(lambda X: eval_phi(tbl, X)[0], [x], m, rs)
    assert abs(Lphi - lam**2 * phi) < 1e-5 * abs(lam**2 * phi)


def test_eigen_equation_rank_two():
    rs = build_bc(2)
    lam = np.array([1.7 + 0.3j, 0.6 - 0.2j])
    m = (1.0, 1.0, 1.0)
    tbl = gamma_coefficients(lam, m, rs, 20)
    Lphi, phi = radial_operator(lambda X: eval_phi(tbl, X)[0], [2.2, 1.1], m, rs)
    assert abs(Lphi - (lam @ lam) * phi) < 1e-5 * abs((lam @ lam) * phi)


def test_determinism_and_csv():
    rs = build_bc(2)
    a = gamma_coefficients([1.3 + 0.2j, 0.4], (1, 2, 0.5), rs, 8)
    b = gamma_coefficients([1.3 + 0.2j, 0.4], (1, 2, 0.5), rs, 8)
    assert a.gammas.tobytes() == b.gammas.tobytes()
    buf = io.StringIO()
    a.to_csv(buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "n1,n2,height,re_gamma,im_gamma"
    assert len(lines) == 1 + len(enumerate_lattice(rs, 8))
    assert lines[1].startswith("0,0,0,1.0,0.0")
    assert [tuple(map(int, ln.split(",")[:2])) for ln in lines[1:]] == \
        [tuple(p) for p in enumerate_lattice(rs, 8)]
