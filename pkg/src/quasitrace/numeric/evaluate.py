"""Floating-point evaluation of exact series, theta and eta."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..ahform import AHForm
from ..qseries import QSeries


def check_tau(tau) -> complex:
    tau = complex(tau)
    if not (math.isfinite(tau.real) and math.isfinite(tau.imag)):
        raise ValueError(f"tau must be finite, got {tau}")
    if tau.imag <= 0:
        raise ValueError(f"tau must lie in the upper half-plane, got {tau}")
    return tau


def check_finite(z) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite complex value {z}")
    return z


@dataclass(frozen=True)
class Evaluation:
    """A value together with a heuristic bound on the discarded tail."""

    value: complex
    tail: float

    def __complex__(self):
        return self.value


def _coeff_array(f: QSeries) -> np.ndarray:
    n = f.prec if f.prec is not None else f.support_bound()
    c = np.zeros(max(n, 1), dtype=complex)
    for k, x in f.items():
        c[k] = x.evaluate(math.pi)
    return c


def eval_qseries_bound(f: QSeries, tau) -> Evaluation:
    """``sum_n c_n q^(offset+n)`` with Pi -> pi, q -> e^(2 pi i tau).

    The tail estimate extrapolates the last few retained terms geometrically;
    for exact (finite) series it is zero.
    """
    tau = check_tau(tau)
    c = _coeff_array(f)
    q = np.exp(2j * np.pi * tau)
    powers = q ** np.arange(len(c))
    terms = c * powers
    pref = np.exp(2j * np.pi * tau * float(f.offset))
    value = pref * terms.sum()
    tail = 0.0
    if f.prec is not None:
        aq = abs(q)
        last = np.abs(terms[-5:]).max() if len(terms) else 0.0
        tail = float(abs(pref) * last * aq / (1 - aq))
    return Evaluation(complex(value), tail)


def eval_qseries(f: QSeries, tau) -> complex:
    return eval_qseries_bound(f, tau).value


def eval_ahform(f: AHForm, tau) -> complex:
    """``sum_j f_j(tau) v^(-j)`` with ``v = Im tau``."""
    tau = check_tau(tau)
    v = tau.imag
    return complex(sum(eval_qseries(c, tau) * v ** (-j) for j, c in enumerate(f.xcoeffs)))


def _theta_range(z: complex, tau: complex, cutoff: float = 70.0):
    """Half-integers ``n`` whose terms matter: ``|e^(2 pi i n z) q^(n^2/2)|`` within e^-cutoff of the peak."""
    v, y = tau.imag, z.imag
    center = -y / v
    width = math.sqrt(cutoff / (math.pi * v)) + 2
    lo = math.floor(center - width)
    hi = math.ceil(center + width)
    return np.arange(lo, hi + 1) + 0.5


def theta_derivatives(z, tau, kmax: int = 0, absolute: bool = False) -> tuple[np.ndarray, float]:
    """``d^j/dw^j theta`` for ``j = 0..kmax`` (``w = 2 pi i z``), by termwise differentiation.

    Returned values share a common factor ``exp(-shift)`` removed for
    stability; ratios are exact, and ``theta_eval`` restores it.  With
    ``absolute`` the sums are of absolute values of the terms instead.
    """
    z, tau = check_finite(z), check_tau(tau)
    n = _theta_range(z, tau)
    expo = 1j * np.pi * n + 2j * np.pi * n * z + 1j * np.pi * tau * n * n
    shift = expo.real.max()
    base = np.exp(expo - shift)
    if absolute:
        base, n = np.abs(base), np.abs(n)
    out = np.empty(kmax + 1, dtype=complex)
    p = np.ones_like(n)
    for j in range(kmax + 1):
        out[j] = np.sum(p * base)
        p = p * n
    return out, shift


def theta_eval(z, tau) -> complex:
    """``theta(z; tau) = sum_{n in Z+1/2} e^(pi i n (1 + 2z)) q^(n^2/2)``."""
    d, shift = theta_derivatives(z, tau, 0)
    return complex(d[0] * math.exp(shift))


def eta_eval(tau) -> complex:
    """``q^(1/24) prod (1 - q^n)``, stopping once ``|q^n| < 1e-18``."""
    tau = check_tau(tau)
    q = np.exp(2j * np.pi * tau)
    aq = abs(q)
    nmax = int(math.ceil(math.log(1e-18) / math.log(aq))) + 1
    prod = np.prod(1 - q ** np.arange(1, nmax + 1))
    return complex(np.exp(2j * np.pi * tau / 24) * prod)
