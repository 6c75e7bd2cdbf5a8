"""Taylor expansions in ``w = 2 pi i z`` of theta, phi*, U(z) and V(z).

Each verifier returns a :class:`VerificationReport` naming the first
mismatching ``(w, X, q, Pi)`` slot.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .ahform import AHForm
from .arith import GaussianRational
from .modular import dedekind_eta_cubed, sigma_series, v_hat, u_hat
from .qseries import PiScalar, QSeries
from .report import VerificationReport
from .traces import ramanujan_U, ramanujan_V, trace_zero_divisor
from .wseries import WSeries

DEFAULT_WMAX = 24
DEFAULT_QPREC = 100

#: ``pi z = w / (2i) = w * (-i/2)``
PI_Z_PER_W = GaussianRational(0, Fraction(-1, 2))


@lru_cache(maxsize=None)
def theta_expansion(prec: int = DEFAULT_QPREC, wmax: int = DEFAULT_WMAX) -> WSeries:
    """``theta(z) = sum_{n in Z+1/2} e^(pi i n) e^(n w) q^(n^2/2)`` expanded in w.

    Pairing ``n`` with ``-n`` leaves ``2i sum_k (-1)^k ((2k+1)/2)^d / d! q^(k(k+1)/2)``
    for odd ``d``, offset 1/8.
    """
    ks = []
    k = 0
    while k * (k + 1) // 2 < prec:
        ks.append(k)
        k += 1
    coeffs = {}
    for d in range(1, wmax + 1, 2):
        c = {}
        for k in ks:
            val = Fraction((2 * k + 1) ** d, 2 ** d * factorial(d)) * (-1 if k % 2 else 1)
            c[k * (k + 1) // 2] = GaussianRational(0, 2 * val)
        coeffs[d] = QSeries(c, Fraction(1, 8), prec)
    return WSeries(coeffs, wmax)


def phi_star_generating(prec: int = DEFAULT_QPREC, wmax: int = DEFAULT_WMAX,
                        completed: bool = True) -> WSeries:
    """``z exp(-G2^ w^2/2 - sum_{k>=2} G_2k w^2k/(2k)!)``; ``completed=False`` uses G2."""
    return sigma_series(prec, wmax, completed)


def completed_phi(series: WSeries, m) -> WSeries:
    """Multiply by ``exp(pi m z^2 / v) = exp(-(m/4) w^2 Pi^-1 X)``."""
    m = Fraction(m)
    if m == 0:
        return series
    gen = AHForm([QSeries.zero(), QSeries.constant(PiScalar.pi_power(-1, -m / 4))])
    # keep the factor's w-range matched to the input
    o = series.order or 0
    factor = WSeries({2: gen}, series.wmax - o).exp()
    return series * factor


def _theta_over_eta3(prec: int, wmax: int) -> WSeries:
    inv = dedekind_eta_cubed(prec).invert()
    return theta_expansion(prec, wmax) * AHForm([inv])


def _offset_report(rep: VerificationReport, series: WSeries) -> None:
    for d in series.exponents():
        for j, c in enumerate(series.coeff(d).xcoeffs):
            if c.offset != 0 and not c.is_zero():
                rep.fail(w=d, x=j, message=f"uncancelled q-offset {c.offset}")
                return


def verify_theta_identity(prec: int = 51, wmax: int = 25) -> VerificationReport:
    """``z exp(-G2 w^2/2 - ...) = theta / (-2 pi eta^3)`` through ``w**wmax``, ``q**(prec-1)``."""
    lhs = phi_star_generating(prec, wmax, completed=False)
    rhs = _theta_over_eta3(prec, wmax) * PiScalar.pi_power(-1, Fraction(-1, 2))
    rep = VerificationReport("theta-identity", {"w": wmax, "q": prec - 1},
                             anchor="z exp(-G2 (2 pi i z)^2/2 - ...) = theta(z)/(-2 pi eta^3)")
    _offset_report(rep, rhs)
    rep.check(lhs.is_odd() and rhs.is_odd(), "parity: expected odd in w")
    rep.compare_wseries(lhs, rhs, wmax)
    return rep.finish()


@lru_cache(maxsize=None)
def u_generating(prec: int = DEFAULT_QPREC, wmax: int = DEFAULT_WMAX) -> WSeries:
    """``U(z) = sum_n (-1)^n U_2n (pi z)^(2n+1)/(2n+1)!`` with ``pi z = w/(2i)``."""
    coeffs = {}
    for d in range(1, wmax + 1, 2):
        n = (d - 1) // 2
        c = PI_Z_PER_W ** d * Fraction((-1) ** n, factorial(d))
        coeffs[d] = ramanujan_U(2 * n, prec).scale(c)
    return WSeries(coeffs, wmax)


def u_trace_generating(prec: int = DEFAULT_QPREC, wmax: int = DEFAULT_WMAX) -> WSeries:
    """``(1/2i) sum_n Tr_n([0], psi_J) w^(n+1)``."""
    half_over_i = GaussianRational(0, 2).inverse()
    return WSeries({n + 1: trace_zero_divisor(n, prec).scale(half_over_i) for n in range(wmax)},
                   wmax)


def verify_u_identity(prec: int = 51, wmax: int = 24) -> VerificationReport:
    """``U(z) = theta/(-2 eta^3) = (1/2i) sum Tr_n([0],psi_J) w^(n+1)``."""
    lhs = u_generating(prec, wmax)
    rhs = _theta_over_eta3(prec, wmax) * Fraction(-1, 2)
    tr = u_trace_generating(prec, wmax)
    rep = VerificationReport("u-identity", {"w": wmax, "q": prec - 1},
                             anchor="U(z) = theta(z)/(-2 eta^3) = (1/2i) sum Tr_n([0],psi_J)(2 pi i z)^(n+1)")
    _offset_report(rep, rhs)
    rep.check(lhs.is_odd() and rhs.is_odd() and tr.is_odd(), "parity: expected odd in w")
    rep.compare_wseries(lhs, rhs, wmax)
    rep.compare_wseries(lhs, tr, wmax)
    return rep.finish()


@lru_cache(maxsize=None)
def v_generating(prec: int = DEFAULT_QPREC, wmax: int = DEFAULT_WMAX) -> WSeries:
    """``V(z) = sum_n (-1)^n V_2n (pi z)^2n/(2n)!``."""
    coeffs = {}
    for d in range(0, wmax + 1, 2):
        n = d // 2
        c = PI_Z_PER_W ** d * Fraction((-1) ** n, factorial(d))
        coeffs[d] = ramanujan_V(2 * n, prec).scale(c)
    return WSeries(coeffs, wmax)


def theta_quotient(prec: int = DEFAULT_QPREC, wmax: int = DEFAULT_WMAX) -> WSeries:
    """``theta(2z) / (2 theta(z))`` through ``w**wmax`` (theta taken to ``wmax+1``)."""
    th = theta_expansion(prec, wmax + 1)
    q = th.scale_variable(2) * th.invert() * Fraction(1, 2)
    return q.truncate(wmax)


def verify_v_identity(prec: int = 51, wmax: int = 24) -> VerificationReport:
    lhs = v_generating(prec, wmax)
    rhs = theta_quotient(prec, wmax)
    rep = VerificationReport("v-identity", {"w": wmax, "q": prec - 1},
                             anchor="V(z) = theta(2z)/(2 theta(z))")
    _offset_report(rep, rhs)
    rep.check(rhs.order == 0, "removable singularity: quotient must have w-order 0")
    rep.check(lhs.is_even() and rhs.is_even(), "parity: expected even in w")
    rep.compare_wseries(lhs, rhs, wmax)
    return rep.finish()


def verify_v_completion(prec: int = 51, wmax: int = 16) -> VerificationReport:
    """z-coefficients of ``exp(3 pi z^2 / 2v) V(z)`` equal ``V^_2n``."""
    star = completed_phi(v_generating(prec, wmax), Fraction(3, 2))
    rep = VerificationReport("v-completion", {"w": wmax, "q": prec - 1},
                             anchor="exp(3 pi z^2/(2v)) V(z) = sum V^_2n z^2n")
    for d in range(0, wmax + 1, 2):
        rep.compare_ahform(star.z_coeff(d), v_hat(d, prec), w=d)
    return rep.finish()


def verify_u_completion(prec: int = 51, wmax: int = 17) -> VerificationReport:
    """z-coefficients of ``exp(pi z^2 / 2v) U(z)`` equal ``U^_2n / (2i)``."""
    star = completed_phi(u_generating(prec, wmax), Fraction(1, 2))
    inv = GaussianRational(0, 2).inverse()
    rep = VerificationReport("u-completion", {"w": wmax, "q": prec - 1},
                             anchor="exp(pi z^2/(2v)) U(z) = sum U^_2n z^(2n+1) / (2i)")
    for d in range(1, wmax + 1, 2):
        rep.compare_ahform(star.z_coeff(d), u_hat(d - 1, prec) * inv, w=d)
    return rep.finish()


def verify_phi_completion(prec: int = 51, wmax: int = 13) -> VerificationReport:
    """``exp(pi z^2/2v)`` carries the G2 expansion to the G2^ one, and ``m = -1/2`` undoes it."""
    holo = phi_star_generating(prec, wmax, completed=False)
    star = phi_star_generating(prec, wmax, completed=True)
    rep = VerificationReport("phi-completion", {"w": wmax, "q": prec - 1},
                             anchor="phi*(z) = exp(pi z^2/(2v)) phi(z)")
    rep.compare_wseries(completed_phi(holo, Fraction(1, 2)), star, wmax)
    rep.compare_wseries(completed_phi(star, Fraction(-1, 2)), holo, wmax)
    return rep.finish()
