"""Partition weights, Eisenstein traces, cycle indices and Ramanujan's U/V.

A trace is ``Tr_n(psi) = sum_{lambda |- n} psi(lambda) E_2^m1 E_4^m2 ... E_2n^mn``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Union

from .ahform import AHForm
from .arith import GaussianRational, Partition, bernoulli, partition_length, partitions
from .modular import DEFAULT_PREC, eisenstein_E, eisenstein_G
from .qseries import PiScalar, QSeries
from .report import VerificationReport
from .wseries import WSeries


@dataclass(frozen=True)
class PartitionWeight:
    """A named function on partitions with exact values."""

    name: str
    evaluator: Callable[[Partition], object]

    def __call__(self, lam: Partition) -> GaussianRational:
        return GaussianRational.coerce(self.evaluator(lam))


def _psi_j(lam: Partition) -> Fraction:
    den = 1
    for j, mj in lam.items():
        den *= factorial(mj) * factorial(j) ** mj
    return Fraction((-1) ** partition_length(lam), den)


def _psi_1(lam: Partition) -> Fraction:
    n = lam.n
    val = Fraction(4 ** n * factorial(2 * n + 1))
    for k, mk in lam.items():
        val *= (bernoulli(2 * k) / (2 * k * factorial(2 * k))) ** mk / factorial(mk)
    return val


def _psi_2(lam: Partition) -> Fraction:
    n = lam.n
    val = Fraction(4 ** n * factorial(2 * n))
    for k, mk in lam.items():
        val *= ((4 ** k - 1) * bernoulli(2 * k) / (2 * k * factorial(2 * k))) ** mk / factorial(mk)
    return val


WEIGHTS = {
    "psiJ": PartitionWeight("psiJ", _psi_j),
    "psi1": PartitionWeight("psi1", _psi_1),
    "psi2": PartitionWeight("psi2", _psi_2),
}

WeightLike = Union[str, PartitionWeight]


def get_weight(psi: WeightLike) -> PartitionWeight:
    if isinstance(psi, PartitionWeight):
        return psi
    try:
        return WEIGHTS[psi]
    except KeyError:
        raise ValueError(f"unknown partition weight {psi!r}; expected one of {sorted(WEIGHTS)}") from None


def psi_weight(name: WeightLike, lam: Partition) -> GaussianRational:
    return get_weight(name)(lam)


@lru_cache(maxsize=None)
def _e_power(weight: int, e: int, prec: int) -> QSeries:
    if e == 0:
        return QSeries.constant(1, prec)
    if e == 1:
        return eisenstein_E(weight, prec)
    return _e_power(weight, e - 1, prec) * eisenstein_E(weight, prec)


def _monomial(lam: Partition, factor: Callable[[int, int], QSeries], prec: int) -> QSeries:
    term = None
    for k, mk in lam.items():
        f = factor(k, mk)
        term = f if term is None else term * f
    return QSeries.constant(1, prec) if term is None else term


def trace_E(n: int, psi: WeightLike, prec: int = DEFAULT_PREC) -> QSeries:
    """``Tr_n(psi; tau)`` as an exact truncated q-series."""
    if n < 0:
        raise ValueError("n must be non-negative")
    w = get_weight(psi)
    total = QSeries.zero(prec)
    for lam in partitions(n):
        c = w(lam)
        if not c:
            continue
        total = total + _monomial(lam, lambda k, mk: _e_power(2 * k, mk, prec), prec).scale(c)
    return total


def trace_zero_divisor(n: int, prec: int = DEFAULT_PREC) -> QSeries:
    """``Tr_n([0], psi_J)`` with ``G_{2k,0} = G_2k`` and ``G_{2k+1,0} = 0``."""
    total = QSeries.zero(prec)
    for lam in partitions(n):
        if any(k % 2 for k, _ in lam.items()):
            continue
        term = _monomial(lam, lambda k, mk: eisenstein_G(k, prec) ** mk, prec)
        total = total + term.scale(_psi_j(lam))
    return total


def _triangular_series(power: int, prec: int) -> QSeries:
    """``sum_{k>=0} (-1)^k (2k+1)^power q^(k(k+1)/2)``."""
    coeffs = {}
    k = 0
    while k * (k + 1) // 2 < prec:
        coeffs[k * (k + 1) // 2] = (-1) ** k * (2 * k + 1) ** power
        k += 1
    return QSeries(coeffs, 0, prec)


def _pentagonal_series(power: int, prec: int) -> QSeries:
    """``sum_{k in Z} (-1)^k (6k+1)^power q^(k(3k+1)/2)``."""
    coeffs = {}
    k = 0
    while True:
        hit = False
        for kk in ((k, -k) if k else (0,)):
            e = kk * (3 * kk + 1) // 2
            if e < prec:
                coeffs[e] = (-1 if kk % 2 else 1) * (6 * kk + 1) ** power
                hit = True
        if not hit:
            break
        k += 1
    return QSeries(coeffs, 0, prec)


def u_numerator(index: int, prec: int) -> QSeries:
    return _triangular_series(index + 1, prec)


def u_denominator(prec: int) -> QSeries:
    return _triangular_series(1, prec)


def v_numerator(index: int, prec: int) -> QSeries:
    return _pentagonal_series(index, prec)


def v_denominator(prec: int) -> QSeries:
    return _pentagonal_series(0, prec)


def _even_index(index: int) -> None:
    if index < 0 or index % 2:
        raise ValueError(f"index must be a non-negative even integer, got {index}")


@lru_cache(maxsize=None)
def _u_den_inverse(prec: int) -> QSeries:
    return u_denominator(prec).invert()


@lru_cache(maxsize=None)
def _v_den_inverse(prec: int) -> QSeries:
    return v_denominator(prec).invert()


@lru_cache(maxsize=None)
def ramanujan_U(index: int, prec: int = DEFAULT_PREC) -> QSeries:
    """``U_{2n} = (1 - 3^(2n+1) q + 5^(2n+1) q^3 - ...)/(1 - 3q + 5q^3 - ...)``."""
    _even_index(index)
    return u_numerator(index, prec) * _u_den_inverse(prec)


@lru_cache(maxsize=None)
def ramanujan_V(index: int, prec: int = DEFAULT_PREC) -> QSeries:
    """``V_{2n} = (1 - 5^2n q - 7^2n q^2 + 11^2n q^5 + ...)/(1 - q - q^2 + q^5 + ...)``."""
    _even_index(index)
    return v_numerator(index, prec) * _v_den_inverse(prec)


def cycle_index(n: int) -> dict[Partition, Fraction]:
    """Coefficients of ``Z(S_n)``: ``prod_k (1/m_k!) (1/k)^m_k`` for each partition."""
    out = {}
    for lam in partitions(n):
        den = 1
        for k, mk in lam.items():
            den *= factorial(mk) * k ** mk
        out[lam] = Fraction(1, den)
    return out


def verify_cycle_lemma(n_max: int, specialization: Callable[[int], QSeries],
                       prec: int = 50, name: str = "cycle-lemma") -> VerificationReport:
    """Compare ``sum_n Z(S_n)[x_k := spec(k)] w^n`` with ``exp(sum_k spec(k) w^k / k)``.

    Both sides are computed independently through ``w**n_max``.
    """
    specs = {k: QSeries._lift(specialization(k)).truncate(prec) for k in range(1, n_max + 1)}
    lhs = {}
    for n in range(n_max + 1):
        total = QSeries.zero(prec)
        for lam, c in cycle_index(n).items():
            term = _monomial(lam, lambda k, mk: specs[k] ** mk, prec)
            total = total + term.scale(c)
        lhs[n] = total
    rhs = WSeries({k: specs[k].scale(Fraction(1, k)) for k in range(1, n_max + 1)}, n_max).exp()
    rep = VerificationReport(name, checked_orders={"w": n_max, "q": prec - 1},
                             anchor="sum_n Z(S_n) w^n = exp(sum_k x_k w^k / k)")
    for n in range(n_max + 1):
        rep.compare_series(lhs[n], rhs.coeff(n).x_coeff(0), w=n)
        if rep.first_failure:
            break
    return rep.finish()


def trace_hat_formal(traces: Callable[[int], QSeries], n: int, m, a: int) -> AHForm:
    """``sum_{j <= n/2} (pi m X)^j / j! (2 pi i)^(n-2j+a) Tr_{n-2j}`` as an AHForm.

    ``traces(k)`` supplies the exact ``Tr_k``; used where the divisor traces
    have closed q-expansions (the point 0, and the 2-torsion divisor of V).
    """
    m = Fraction(m)
    coeffs = []
    for j in range(n // 2 + 1):
        e = n - 2 * j + a
        c = PiScalar.pi_power(j + e, GaussianRational(0, 2) ** e * (m ** j / factorial(j)))
        coeffs.append(traces(n - 2 * j).scale(c))
    return AHForm(coeffs, weight=n)


def v_divisor_trace(k: int, prec: int = DEFAULT_PREC) -> QSeries:
    """Exact ``Tr_k`` for the 2-torsion divisor of ``theta(2z)/(2theta(z))``."""
    if k % 2:
        return QSeries.zero(prec)
    n = k // 2
    return ramanujan_V(k, prec).scale(Fraction(1, 4 ** n * factorial(2 * n)))
