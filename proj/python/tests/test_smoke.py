import math
from fractions import Fraction

import pytest

import eckart


def test_coeff_matrices():
    assert eckart.coeff_matrix(1, 1) == [[1, Fraction(-4, 3)], [0, 1]]
    assert eckart.coeff_matrix(2, 1)[0] == [1, Fraction(-8, 15), Fraction(8, 75)]
    assert eckart.coeff_matrix(2, "1")[1][2] == Fraction(-4, 15)
    assert eckart.coeff_matrix_text(1, 1) == "[1, -4/3]\n[0, 1]\n"


def test_spectrum():
    assert eckart.eckart_energy(0, 1) == -4
    assert eckart.eckart_energy(1, 1) == Fraction(-22, 9)
    rows = eckart.spectrum(3, Fraction(1, 2))
    assert [r["degeneracy"] for r in rows] == [1, 3, 5, 7]
    for r in rows:
        h = Fraction(2 * r["l"] + 1, 2)
        assert r["epsilon"] == -r["l"] * (r["l"] + 1) - Fraction(1, 4) / h**2
    with pytest.raises(TypeError):
        eckart.eckart_energy(1, 0.5)


def test_recurrence_constant():
    assert eckart.recurrence_constant(2, 0) == Fraction(2, 3)
    with pytest.raises(eckart.IdentityFailure):
        eckart.recurrence_constant(3, 0)


def test_special_functions():
    assert eckart.legendre_hyp(1, 1, 1.0) == pytest.approx(math.sinh(1.0), rel=1e-15)
    assert eckart.legendre_trig(2, 0, 0.3) == pytest.approx(1.5 * math.cos(0.3) ** 2 - 0.5, rel=1e-14)
    assert eckart.jacobi(2, 0, 0, "1/2") == Fraction(-1, 8)
    assert eckart.romanovski(1, 2, -1, 3) == -4
    assert eckart.romanovski_coefficients(2, 2, -1) == [4, -4]


def test_eigenfunction():
    assert eckart.eigenfunction(0, 0, 1, 0.0) == 1
    # Ground state is e^{-2bt}.
    assert eckart.eigenfunction(0, 0, 1, 0.7).real == pytest.approx(math.exp(-1.4), rel=1e-14)
    assert "phase(1)" in eckart.eigenfunction_text(1, 1, 1)
    with pytest.raises(ValueError):
        eckart.eigenfunction(1, 2, 1, 0.5)


def test_verify():
    reports = eckart.verify("eigen", l_max=2, couplings=[1], numeric=False)
    assert reports and all(r["pass"] for r in reports)
    rec = eckart.verify("recurrences", l_max=3)
    assert sum(not r["pass"] for r in rec) == 1


def test_mesh():
    pts = eckart.mesh("hyperboloid-deformed", b=1.0, n_t=8, n_phi=6)
    assert pts.shape == (48, 3)
    t = [2.5 * i / 7 for i in range(8)]
    for i, row in enumerate(pts[::6]):
        x, y, z = row
        assert z * z - x * x - y * y == pytest.approx(math.exp(-4 * t[i]), abs=1e-12)
    with pytest.raises(ValueError):
        eckart.mesh("torus")
