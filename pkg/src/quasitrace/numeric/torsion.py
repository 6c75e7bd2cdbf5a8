"""Torsion points, Eisenstein-theta values G_{k,w}, and divisor traces."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Optional

import numpy as np

from ..arith import partitions
from ..modular import eisenstein_G
from ..traces import get_weight
from .evaluate import check_tau, eval_qseries_bound, theta_derivatives

GKW_NOTE = ("G_{k,w} = -(2 pi i)^-k d^k/dz^k log theta at z = a tau + b (holomorphic "
            "derivative); for k = 1 the term -a is added so the value is periodic in w")


@dataclass(frozen=True, order=True)
class TorsionPoint:
    """``a tau + b`` with ``a, b`` reduced to ``[0, 1)``."""

    a: Fraction
    b: Fraction

    def __init__(self, a, b):
        a, b = Fraction(a), Fraction(b)
        object.__setattr__(self, "a", a - math.floor(a))
        object.__setattr__(self, "b", b - math.floor(b))

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def z(self, tau) -> complex:
        return float(self.a) * complex(tau) + float(self.b)

    def transport(self, gamma) -> "TorsionPoint":
        """Coordinates of the same point for ``gamma tau``: ``(a, b) gamma^-1`` mod 1."""
        A, B, C, D = gamma
        return TorsionPoint(self.a * D - self.b * C, -self.a * B + self.b * A)

    def __repr__(self):
        return f"({self.a},{self.b})"


class Divisor:
    """Finite formal sum ``sum a_w [w]`` of torsion points."""

    def __init__(self, entries: Iterable[tuple]):
        acc: dict[TorsionPoint, int] = {}
        for p, order in entries:
            if not isinstance(p, TorsionPoint):
                p = TorsionPoint(*p)
            acc[p] = acc.get(p, 0) + int(order)
        self.entries = tuple(sorted((p, o) for p, o in acc.items() if o))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    @property
    def order_at_zero(self) -> int:
        return sum(o for p, o in self.entries if p.is_zero)

    @property
    def degree(self) -> int:
        return sum(o for _, o in self.entries)

    @property
    def index(self) -> Fraction:
        """Half the total order, the index of the associated theta quotient."""
        return Fraction(self.degree, 2)

    def transport(self, gamma) -> "Divisor":
        return Divisor((p.transport(gamma), o) for p, o in self.entries)

    def __eq__(self, other):
        return isinstance(other, Divisor) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "Divisor(" + " + ".join(f"{o}{p!r}" for p, o in self.entries) + ")"


def two_torsion_divisor() -> Divisor:
    """Divisor of ``theta(2z)/(2 theta(z))``."""
    h = Fraction(1, 2)
    return Divisor([((h, 0), 1), ((0, h), 1), ((h, h), 1)])


def n_torsion_divisor(N: int) -> Divisor:
    """Divisor of ``theta(Nz)/theta(z)``: every non-zero N-torsion point once."""
    return Divisor(((Fraction(i, N), Fraction(j, N)), 1)
                   for i in range(N) for j in range(N) if i or j)


def _log_derivatives(f: np.ndarray, fabs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Derivatives of ``log f`` from those of ``f``, with a magnitude bound.

    ``fabs[j]`` bounds the summands behind ``f[j]``; the second array runs the
    same recursion on absolute values and sets the rounding-error scale.
    """
    k = len(f) - 1
    g = np.zeros(k + 1, dtype=complex)
    gabs = np.zeros(k + 1)
    f0 = abs(f[0])
    for n in range(1, k + 1):
        s, b = f[n], fabs[n]
        for j in range(1, n):
            s -= comb(n - 1, j) * f[j] * g[n - j]
            b += comb(n - 1, j) * fabs[j] * gabs[n - j]
        g[n] = s / f[0]
        gabs[n] = b / f0
    return g, gabs


def _nearest_zero_distance(z: complex, tau: complex) -> float:
    best = math.inf
    y = z.imag / tau.imag
    x = z.real - y * tau.real
    for m in range(math.floor(y) - 1, math.floor(y) + 3):
        for n in range(math.floor(x - m * tau.real) - 2, math.floor(x - m * tau.real) + 4):
            best = min(best, abs(z - (m * tau + n)))
    return best


def _gkw_series(kmax: int, z: complex, tau: complex):
    f, _ = theta_derivatives(z, tau, kmax)
    fabs = theta_derivatives(z, tau, kmax, absolute=True)[0].real
    g, gabs = _log_derivatives(f, fabs)
    return -g, gabs


def _gkw_cauchy(kmax: int, z: complex, tau: complex, nodes: int = 256):
    """Trapezoid rule for the Cauchy integral of ``log theta`` on a small circle."""
    r = 0.4 * _nearest_zero_distance(z, tau)
    t = 2 * np.pi * np.arange(nodes) / nodes
    pts = z + r * np.exp(1j * t)
    vals = np.empty(nodes, dtype=complex)
    for i, p in enumerate(pts):
        d, shift = theta_derivatives(p, tau, 0)
        vals[i] = np.log(d[0]) + shift
    # continuous branch of the logarithm around the circle
    vals = vals.real + 1j * np.unwrap(vals.imag)
    out = np.zeros(kmax + 1, dtype=complex)
    size = np.zeros(kmax + 1)
    vmax = np.abs(vals).max()
    for k in range(1, kmax + 1):
        dz = factorial(k) * np.mean(vals * np.exp(-1j * k * t)) / r ** k
        out[k] = -dz / (2j * np.pi) ** k
        size[k] = factorial(k) * vmax / (2 * np.pi * r) ** k
    return out, size


@lru_cache(maxsize=4096)
def _gkw_table(point: TorsionPoint, tau: complex, kmax: int, route: str) -> tuple:
    """``(values, sizes)`` for ``k = 0..kmax``."""
    if point.is_zero:
        vals = [0j] * (kmax + 1)
        sizes = [0.0] * (kmax + 1)
        for k in range(2, kmax + 1, 2):
            ev = eval_qseries_bound(eisenstein_G(k, 100), tau)
            vals[k] = ev.value
            sizes[k] = abs(ev.value) + ev.tail
        return tuple(vals), tuple(sizes)
    z = point.z(tau)
    if _nearest_zero_distance(z, tau) < 1e-6:
        raise ValueError(f"torsion point {point!r} is too close to a lattice point")
    if route == "series":
        g, size = _gkw_series(kmax, z, tau)
    elif route == "cauchy":
        g, size = _gkw_cauchy(kmax, z, tau)
    else:
        raise ValueError(f"unknown route {route!r}")
    g = g.copy()
    size = size.copy()
    if kmax >= 1:
        g[1] -= float(point.a)
        size[1] += float(point.a)
    return tuple(complex(x) for x in g), tuple(float(x) for x in size)


def G_kw(k: int, point, tau, route: str = "series") -> complex:
    """Eisenstein-theta value ``G_{k,w}(tau)``; see ``GKW_NOTE`` for the reading used.

    At ``w = 0`` the convention ``G_{2k,0} = G_2k``, ``G_{2k+1,0} = 0`` applies.
    """
    return _gkw(k, point, tau, route)[0]


def G_kw_size(k: int, point, tau, route: str = "series") -> float:
    """Magnitude scale of the rounding error in ``G_kw`` (before cancellations)."""
    return _gkw(k, point, tau, route)[1]


def _gkw(k, point, tau, route):
    if k < 1:
        raise ValueError("k must be at least 1")
    if not isinstance(point, TorsionPoint):
        point = TorsionPoint(*point)
    vals, sizes = _gkw_table(point, check_tau(tau), max(k, 8), route)
    return vals[k], sizes[k]


def G_kD(k: int, D: Divisor, tau, route: str = "series") -> complex:
    return sum(o * G_kw(k, p, tau, route) for p, o in D)


def _trace_terms(n: int, D: Divisor, tau, psi, route: str) -> tuple[complex, float]:
    w = get_weight(psi)
    g = {j: G_kD(j, D, tau, route) for j in range(1, n + 1)}
    # error scale of G_{j,D}: the sum before any cancellation between points
    mag = {j: sum(abs(o) * G_kw_size(j, p, tau, route) for p, o in D) for j in range(1, n + 1)}
    total, size = 0j, 0.0
    for lam in partitions(n):
        c = complex(w(lam))
        term, bound = c, abs(c)
        for j, mj in lam.items():
            term *= g[j] ** mj
            bound *= mag[j] ** mj
        total += term
        size += bound
    return total, size


def trace_divisor(n: int, D: Divisor, tau, psi="psiJ", route: str = "series") -> complex:
    """``Tr_n(D, psi; tau) = sum_lambda psi(lambda) prod_j G_{j,D}^m_j``."""
    return _trace_terms(n, D, tau, psi, route)[0]


def trace_divisor_hat_terms(n: int, D: Divisor, tau, m: Optional[Fraction] = None,
                            a: Optional[int] = None, route: str = "series") -> tuple[complex, float]:
    """``(value, size)``; ``size`` bounds the partition terms by the error scales of ``G_{k,w}``.

    ``size`` sets the scale of floating-point error, which matters when the
    terms cancel (e.g. odd ``n`` on a divisor symmetric under ``w -> -w``).
    """
    tau = check_tau(tau)
    m = D.index if m is None else Fraction(m)
    a = D.order_at_zero if a is None else int(a)
    v = tau.imag
    total, size = 0j, 0.0
    for j in range(n // 2 + 1):
        c = (math.pi * float(m) / v) ** j / factorial(j) * (2j * math.pi) ** (n - 2 * j + a)
        t, s = _trace_terms(n - 2 * j, D, tau, "psiJ", route)
        total += c * t
        size += abs(c) * s
    return total, size


def trace_divisor_hat(n: int, D: Divisor, tau, m: Optional[Fraction] = None,
                      a: Optional[int] = None, route: str = "series") -> complex:
    """``sum_{j <= n/2} (pi m / v)^j / j! (2 pi i)^(n-2j+a) Tr_{n-2j}(D, psi_J)``.

    ``m`` defaults to half the degree of ``D`` and ``a`` to its order at 0.
    """
    return trace_divisor_hat_terms(n, D, tau, m, a, route)[0]
