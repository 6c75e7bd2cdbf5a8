"""Eisenstein series, eta, and the almost holomorphic forms built from them.

All pi-dependence is carried by the Pi-grading of the coefficients; nothing
here evaluates pi numerically.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .ahform import AHForm, lowering, tau_bar_limit  # noqa: F401  (re-exported)
from .arith import GaussianRational, bernoulli, divisor_sum
from .qseries import PiScalar, QSeries
from .wseries import WSeries

DEFAULT_PREC = 200

#: ``z = w * Z_PER_W`` with ``w = 2 pi i z``.
Z_PER_W = PiScalar.pi_power(-1, GaussianRational(0, Fraction(-1, 2)))


def _check_even_weight(weight: int) -> None:
    if weight < 2 or weight % 2:
        raise ValueError(f"weight must be a positive even integer, got {weight}")


@lru_cache(maxsize=None)
def eisenstein_G(weight: int, prec: int = DEFAULT_PREC) -> QSeries:
    """``G_2k = -B_2k/(2k) + 2 sum_n sigma_{2k-1}(n) q^n``."""
    _check_even_weight(weight)
    coeffs = {0: -bernoulli(weight) / weight}
    for n in range(1, prec):
        coeffs[n] = 2 * divisor_sum(weight - 1, n)
    return QSeries(coeffs, 0, prec)


@lru_cache(maxsize=None)
def eisenstein_E(weight: int, prec: int = DEFAULT_PREC) -> QSeries:
    """Normalized ``E_2k = -(2k/B_2k) G_2k`` (constant term 1)."""
    _check_even_weight(weight)
    return eisenstein_G(weight, prec).scale(-Fraction(weight) / bernoulli(weight))


@lru_cache(maxsize=None)
def dedekind_eta(prec: int = DEFAULT_PREC) -> QSeries:
    """``q^(1/24) prod_{n>=1} (1 - q^n)``, from the truncated product."""
    if prec < 1:
        raise ValueError("precision must be positive")
    c = [0] * prec
    c[0] = 1
    for n in range(1, prec):
        for i in range(prec - 1, n - 1, -1):
            c[i] -= c[i - n]
    return QSeries(c, Fraction(1, 24), prec)


@lru_cache(maxsize=None)
def dedekind_eta_cubed(prec: int = DEFAULT_PREC) -> QSeries:
    """``eta**3``, offset 1/8."""
    eta = dedekind_eta(prec)
    return eta * eta * eta


@lru_cache(maxsize=None)
def g2_hat(prec: int = DEFAULT_PREC) -> AHForm:
    """``G_2 + 1/(4 pi v)``: X^0 part G_2, X^1 part Pi^-1/4."""
    return AHForm([eisenstein_G(2, prec),
                   QSeries.constant(PiScalar.pi_power(-1, Fraction(1, 4)), prec)], weight=2)


@lru_cache(maxsize=None)
def sigma_exponent(prec: int, wmax: int, completed: bool = True) -> WSeries:
    """The exponent ``-G2 w^2/2 - sum_{k>=2} G_2k w^2k/(2k)!``.

    With ``completed`` the G_2 term uses the almost holomorphic completion.
    """
    coeffs = {}
    g2 = g2_hat(prec) if completed else AHForm([eisenstein_G(2, prec)], 2)
    if wmax >= 2:
        coeffs[2] = g2 * Fraction(-1, 2)
    for k in range(2, wmax // 2 + 1):
        coeffs[2 * k] = AHForm([eisenstein_G(2 * k, prec).scale(Fraction(-1, factorial(2 * k)))],
                               2 * k)
    return WSeries(coeffs, wmax)


@lru_cache(maxsize=None)
def sigma_series(prec: int, wmax: int, completed: bool = True) -> WSeries:
    """``z * exp(sigma_exponent)`` as a w-series (z = w * Pi^-1 * (2i)^-1)."""
    e = sigma_exponent(prec, wmax - 1, completed).exp()
    return e.shift(1) * Z_PER_W


def _ek_wmax(k: int) -> int:
    # share one exponential across small k
    return max(2 * k + 1, 13)


@lru_cache(maxsize=None)
def ek_lambda(k: int, prec: int = DEFAULT_PREC) -> AHForm:
    """``e_k(Lambda_tau(0))`` read off the z^(2k+1) coefficient of the sigma series.

    Depth is exactly ``k``; weight ``2k``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    phi = sigma_series(prec, _ek_wmax(k), True)
    c = phi.z_coeff(2 * k + 1) * (-1) ** k
    return c.trimmed().with_weight(2 * k)


def _check_even_index(index: int) -> int:
    if index < 0 or index % 2:
        raise ValueError(f"index must be a non-negative even integer, got {index}")
    return index // 2


@lru_cache(maxsize=None)
def u_hat(index: int, prec: int = DEFAULT_PREC) -> AHForm:
    """Completion of Ramanujan's ``U_{index}``.

    X^j coefficient: ``2i (-1)^(n+j) Pi^(2n-j+1) U_{2n-2j} / (2^j j! (2n-2j+1)!)``.
    """
    from .traces import ramanujan_U

    n = _check_even_index(index)
    coeffs = []
    for j in range(n + 1):
        c = Fraction((-1) ** (n + j), 2 ** j * factorial(j) * factorial(2 * n - 2 * j + 1))
        s = PiScalar.pi_power(2 * n - j + 1, GaussianRational(0, 2 * c))
        coeffs.append(ramanujan_U(2 * n - 2 * j, prec).scale(s))
    return AHForm(coeffs, weight=2 * n)


@lru_cache(maxsize=None)
def v_hat(index: int, prec: int = DEFAULT_PREC) -> AHForm:
    """Completion of Ramanujan's ``V_{index}``.

    X^j coefficient: ``(-1)^(n+j) 3^j Pi^(2n-j) V_{2n-2j} / (2^j j! (2n-2j)!)``.
    """
    from .traces import ramanujan_V

    n = _check_even_index(index)
    coeffs = []
    for j in range(n + 1):
        c = Fraction((-1) ** (n + j) * 3 ** j, 2 ** j * factorial(j) * factorial(2 * n - 2 * j))
        coeffs.append(ramanujan_V(2 * n - 2 * j, prec).scale(PiScalar.pi_power(2 * n - j, c)))
    return AHForm(coeffs, weight=2 * n)
