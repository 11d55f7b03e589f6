"""Exact Eckart/Rosen-Morse eigenfunction kernel.

Rational inputs accept int, str ("p/q") or fractions.Fraction; exact outputs
are returned as Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from . import _eckart
from ._eckart import IdentityFailure, degeneracy

RationalLike = Union[int, str, Fraction]

__all__ = [
    "IdentityFailure",
    "alpha_l",
    "coeff_matrix",
    "coeff_matrix_text",
    "degeneracy",
    "eckart_energy",
    "eigenfunction",
    "eigenfunction_text",
    "jacobi",
    "legendre_hyp",
    "legendre_trig",
    "mesh",
    "recurrence_constant",
    "romanovski",
    "romanovski_coefficients",
    "rosen_morse_energy",
    "spectrum",
    "verify",
]


def _q(x: RationalLike) -> str:
    if isinstance(x, float):
        raise TypeError("exact arguments must be int, str or Fraction, not float")
    return str(Fraction(x))


def coeff_matrix(l: int, b: RationalLike = 1) -> list[list[Fraction]]:
    """Upper-triangular a^l matrix; row m~, column m."""
    return [[Fraction(v) for v in row] for row in _eckart.coeff_matrix(l, _q(b))]


def coeff_matrix_text(l: int, b: RationalLike = 1) -> str:
    return _eckart.coeff_matrix_text(l, _q(b))


def recurrence_constant(l: int, m: int) -> Fraction:
    """Raises IdentityFailure when D_l P_l^m is not a multiple of s^-2 P_l^{m+1}."""
    return Fraction(_eckart.recurrence_constant(l, m))


def alpha_l(l: int, b: RationalLike) -> Fraction:
    return Fraction(_eckart.alpha_l(l, _q(b)))


def eckart_energy(l: int, b: RationalLike) -> Fraction:
    return Fraction(_eckart.eckart_energy(l, _q(b)))


def rosen_morse_energy(l: int, b: RationalLike) -> Fraction:
    return Fraction(_eckart.rosen_morse_energy(l, _q(b)))


def spectrum(l_max: int, b: RationalLike) -> list[dict]:
    rows = _eckart.spectrum(l_max, _q(b))
    exact = ("b", "alpha_l", "epsilon", "epsilon_rm", "gamma", "delta")
    return [{k: Fraction(v) if k in exact else v for k, v in row.items()} for row in rows]


def legendre_hyp(l: int, m: int, t: float) -> float:
    return _eckart.legendre_hyp(l, m, t)


def legendre_trig(l: int, m: int, theta: float) -> float:
    return _eckart.legendre_trig(l, m, theta)


def jacobi(n: int, gamma: RationalLike, delta: RationalLike, x: RationalLike) -> Fraction:
    return Fraction(_eckart.jacobi(n, _q(gamma), _q(delta), _q(x)))


def romanovski(n: int, alpha: RationalLike, beta: RationalLike, x: RationalLike) -> Fraction:
    return Fraction(_eckart.romanovski(n, _q(alpha), _q(beta), _q(x)))


def romanovski_coefficients(n: int, alpha: RationalLike, beta: RationalLike) -> list[Fraction]:
    """Coefficients in ascending powers of x."""
    return [Fraction(v) for v in _eckart.romanovski_coefficients(n, _q(alpha), _q(beta))]


def eigenfunction(l: int, m_tilde: int, b: RationalLike, t: float, phi: float = 0.0) -> complex:
    return _eckart.eigenfunction(l, m_tilde, _q(b), t, phi)


def eigenfunction_text(l: int, m_tilde: int, b: RationalLike) -> str:
    return _eckart.eigenfunction_text(l, m_tilde, _q(b))


def verify(
    suite: str = "all",
    l_max: int = 4,
    couplings: Iterable[RationalLike] = ("1/2", 1, 2),
    tol: float = 1e-7,
    numeric: bool = True,
    threads: int = 0,
) -> list[dict]:
    return _eckart.verify(suite, l_max, [_q(b) for b in couplings], tol, numeric, threads)


def mesh(
    kind: str = "hyperboloid-deformed",
    b: float = 1.0,
    t_min: float = 0.0,
    t_max: float = -1.0,
    n_t: int = 64,
    n_phi: int = 64,
):
    """(n_t * n_phi, 3) array of surface points; t_max < 0 picks the default range."""
    return _eckart.mesh(kind, b, t_min, t_max, n_t, n_phi)
