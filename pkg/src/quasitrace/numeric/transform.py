"""Sampled modular and elliptic transformation residuals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional

import numpy as np

from ..modular import ek_lambda, eisenstein_E, g2_hat, u_hat, v_hat
from ..report import ResidualRecord
from .evaluate import check_tau, eta_eval, eval_ahform, eval_qseries, theta_eval
from .torsion import Divisor, n_torsion_divisor, trace_divisor_hat_terms, two_torsion_divisor

DEFAULT_TOLERANCES = {
    "series": 1e-8,
    "theta-derivative": 1e-6,
    "lattice": 1e-3,
}

IDENTITY = (1, 0, 0, 1)
S = (0, -1, 1, 0)
T = (1, 1, 0, 1)


def act(gamma, tau: complex) -> complex:
    a, b, c, d = gamma
    return (a * tau + b) / (c * tau + d)


def residual(lhs: complex, rhs: complex, size: float = 0.0) -> float:
    """``|lhs - rhs| / max(|lhs|, |rhs|, size)``, absolute when that scale is below 1e-12.

    ``size`` is the magnitude of the summands behind the two values; pass it
    when they are sums that may cancel.
    """
    scale = max(abs(lhs), abs(rhs), size)
    diff = abs(lhs - rhs)
    return float(diff if scale < 1e-12 else diff / scale)


@lru_cache(maxsize=None)
def _sl2_matrices(bound: int) -> tuple:
    r = range(-bound, bound + 1)
    out = [(a, b, c, d) for a in r for b in r for c in r for d in r if a * d - b * c == 1]
    return tuple(out)


def sample_gammas(count: int, bound: int, rng: np.random.Generator) -> list[tuple]:
    """``count`` elements of SL2(Z) with entries in ``[-bound, bound]``, drawn uniformly."""
    mats = _sl2_matrices(bound)
    idx = rng.integers(0, len(mats), size=count)
    return [mats[i] for i in idx]


def sample_tau(gamma, rng: np.random.Generator) -> complex:
    """A point where both ``Im tau`` and ``Im gamma tau`` are about ``1/|c|``."""
    a, b, c, d = gamma
    if c == 0:
        return complex(rng.uniform(-0.5, 0.5), rng.uniform(0.8, 1.5))
    t = rng.uniform(0.8, 1.25) / abs(c)
    u = rng.uniform(-0.3, 0.3) / abs(c)
    return complex(-d / c + u, t)


def sample_z(tau: complex, rng: np.random.Generator) -> complex:
    x, y = rng.uniform(-0.5, 0.5, size=2)
    return complex(x + y * tau)


@dataclass(frozen=True)
class WeightCheck:
    """``f(gamma tau) = (c tau + d)^weight f(tau)`` for an evaluable ``f``."""

    name: str
    weight: int
    evaluate: Callable[[complex], complex]
    tolerance_key: str = "series"


def _modular_checks(prec: int) -> list[WeightCheck]:
    checks = []
    for k in (4, 6, 8):
        f = eisenstein_E(k, prec)
        checks.append(WeightCheck(f"E{k}", k, lambda t, f=f: eval_qseries(f, t)))
    f = g2_hat(prec)
    checks.append(WeightCheck("G2hat", 2, lambda t, f=f: eval_ahform(f, t)))
    for k in (1, 2, 3):
        f = ek_lambda(k, prec)
        checks.append(WeightCheck(f"e{k}", 2 * k, lambda t, f=f: eval_ahform(f, t)))
    for n in (1, 2, 3):
        f = u_hat(2 * n, prec)
        checks.append(WeightCheck(f"Uhat{2 * n}", 2 * n, lambda t, f=f: eval_ahform(f, t)))
        f = v_hat(2 * n, prec)
        checks.append(WeightCheck(f"Vhat{2 * n}", 2 * n, lambda t, f=f: eval_ahform(f, t)))
    return checks


def default_divisors() -> list[tuple[str, Divisor]]:
    """2-torsion (V), all 3-torsion, an asymmetric 3-torsion set, and a mixed one through 0."""
    t, h = Fraction(1, 3), Fraction(1, 2)
    return [
        ("D2", two_torsion_divisor()),
        ("D3", n_torsion_divisor(3)),
        ("D3a", Divisor([((t, 0), 1), ((2 * t, t), 1), ((0, 2 * t), 1)])),
        ("Dmix", Divisor([((0, 0), 1), ((t, t), 2), ((2 * t, 2 * t), -1), ((0, h), 1), ((h, 0), -1)])),
    ]


def _record(check, lhs, rhs, tol, gamma, tau, z=None, note=None, size=0.0) -> ResidualRecord:
    return ResidualRecord(check, residual(lhs, rhs, size), tol, tuple(gamma), tau, z, note)


def phi_eval(z, tau) -> complex:
    """``theta(z)/(-2 pi eta^3)``: weight -1, index 1/2, no multiplier."""
    return theta_eval(z, tau) / (-2 * math.pi * eta_eval(tau) ** 3)


def v_eval(z, tau) -> complex:
    """``theta(2z)/(2 theta(z))``: weight 0, index 3/2."""
    return theta_eval(2 * z, tau) / (2 * theta_eval(z, tau))


def transformation_residuals(gammas: Iterable, seed: int = 0, prec: int = 100,
                             tolerances: Optional[dict] = None,
                             tr_max: int = 3, divisors=None) -> list[ResidualRecord]:
    """Residuals of every weight law, the theta/phi/V modular laws and the elliptic laws.

    One ``tau`` (and one ``z``) is drawn per ``gamma`` from ``seed``.
    """
    tol = dict(DEFAULT_TOLERANCES)
    if tolerances:
        tol.update(tolerances)
    rng = np.random.default_rng(seed)
    checks = _modular_checks(prec)
    divisors = default_divisors() if divisors is None else divisors
    out: list[ResidualRecord] = []
    for gamma in gammas:
        gamma = tuple(int(x) for x in gamma)
        a, b, c, d = gamma
        if a * d - b * c != 1:
            raise ValueError(f"gamma {gamma} is not in SL2(Z)")
        tau = check_tau(sample_tau(gamma, rng))
        gt = act(gamma, tau)
        j = c * tau + d
        for ch in checks:
            out.append(_record(f"weight:{ch.name}", ch.evaluate(gt), j ** ch.weight * ch.evaluate(tau),
                               tol[ch.tolerance_key], gamma, tau))
        for name, D in divisors:
            Dg = D.transport(gamma)
            for n in range(tr_max + 1):
                lhs, s1 = trace_divisor_hat_terms(n, Dg, gt)
                rhs, s2 = trace_divisor_hat_terms(n, D, tau)
                rhs, s2 = j ** n * rhs, abs(j) ** n * s2
                out.append(_record(f"weight:Trhat{n}[{name}]", lhs, rhs, tol["theta-derivative"],
                                   gamma, tau, note="transported divisor", size=max(s1, s2)))
        z = sample_z(tau, rng)
        zt = z / j
        e = np.exp(1j * math.pi * c * z * z / j)
        out.append(_record("modular:|theta|", abs(theta_eval(zt, gt)),
                           abs(j) ** 0.5 * abs(e) * abs(theta_eval(z, tau)), tol["series"], gamma, tau, z))
        out.append(_record("modular:phi", phi_eval(zt, gt), j ** -1 * e * phi_eval(z, tau),
                           tol["series"], gamma, tau, z))
        out.append(_record("modular:V", v_eval(zt, gt), e ** 3 * v_eval(z, tau),
                           tol["series"], gamma, tau, z))
        lam, mu = int(rng.integers(-2, 3)), int(rng.integers(-2, 3))
        shift = z + lam * tau + mu
        qz = np.exp(2j * math.pi * (lam * lam * tau / 2 + lam * z))
        sign = (-1) ** (lam + mu)
        out.append(_record("elliptic:phi", phi_eval(shift, tau), sign * phi_eval(z, tau) / qz,
                           tol["series"], gamma, tau, z, note=f"lambda={lam}, mu={mu}"))
        out.append(_record("elliptic:V", v_eval(shift, tau), sign * v_eval(z, tau) / qz ** 3,
                           tol["series"], gamma, tau, z, note=f"lambda={lam}, mu={mu}"))
    return out
