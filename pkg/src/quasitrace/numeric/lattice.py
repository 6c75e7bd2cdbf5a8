"""Lattice power sums ``p_j(s) = sum' (w^2 |w|^(2s))^-j`` and the ``s -> 0+`` limit of e_k."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .evaluate import check_tau

DEFAULT_LADDER = (0.4, 0.2, 0.1, 0.05)
_GL_NODES = 200


@dataclass(frozen=True)
class LatticeSum:
    value: complex
    truncated: complex
    tail: complex


@lru_cache(maxsize=8)
def _lattice(tau: complex, R: int):
    m = np.arange(-R, R + 1)
    M, N = np.meshgrid(m, m, indexing="ij")
    shell = np.maximum(np.abs(M), np.abs(N)).ravel()
    keep = shell > 0
    w = (M * tau + N).ravel()[keep]
    order = np.argsort(shell[keep], kind="stable")
    return w[order], shell[keep][order]


def _boundary_integral(j: int, s: float, tau: complex) -> complex:
    """Integral of ``w^-2j |w|^-2js`` over the max-norm unit square boundary."""
    x, wt = np.polynomial.legendre.leggauss(_GL_NODES)
    total = 0j
    for pts in (tau + x, x * tau + 1):
        total += np.sum(wt * pts ** (-2.0 * j) * np.abs(pts) ** (-2.0 * j * s))
    # opposite sides contribute equally (even exponent)
    return 2 * total


def lattice_power_sum(j: int, s: float, tau, R: int = 400) -> LatticeSum:
    """Sum over ``0 < max(|m|,|n|) <= R`` by shells, plus a continuum tail.

    The tail replaces each shell ``r > R`` by ``r^(1-2j-2js)`` times the
    boundary integral; its size is ``O(R^(2-2j-2js))``.
    """
    tau = check_tau(tau)
    if j < 1 or (j == 1 and s <= 0):
        raise ValueError("need j >= 2, or j = 1 with s > 0, for absolute convergence")
    if s < 0:
        raise ValueError("s must be non-negative")
    w, shell = _lattice(tau, int(R))
    vals = w ** (-2.0 * j) * np.abs(w) ** (-2.0 * j * s)
    per_shell = np.bincount(shell, weights=vals.real, minlength=R + 1) \
        + 1j * np.bincount(shell, weights=vals.imag, minlength=R + 1)
    truncated = complex(per_shell.sum())
    ex = 2 * j - 2 + 2 * j * s
    tail = complex(_boundary_integral(j, s, tau) * (R + 0.5) ** (-ex) / ex)
    return LatticeSum(truncated + tail, truncated, tail)


def newton_elementary(power_sums: Sequence[complex], k: int) -> complex:
    """``e_k`` from ``p_1..p_k`` via ``k e_k = sum_j (-1)^(j-1) e_(k-j) p_j``."""
    e = [1 + 0j]
    for n in range(1, k + 1):
        e.append(sum((-1) ** (j - 1) * e[n - j] * power_sums[j - 1] for j in range(1, n + 1)) / n)
    return e[k]


def ek_at(k: int, s: float, tau, R: int = 400) -> complex:
    """``e_k(Lambda_tau(s))``; the set holds one element per pair ``+-w``, so p_j is halved."""
    if k == 0:
        return 1 + 0j
    p = [lattice_power_sum(j, s, tau, R).value / 2 for j in range(1, k + 1)]
    return newton_elementary(p, k)


def richardson(values: Sequence[complex], ladder: Sequence[float]) -> complex:
    """Extrapolate to ``s = 0`` assuming an expansion in powers of ``s``.

    Uses Neville's scheme, which reduces to the halving table for the
    default ladder.
    """
    xs = list(ladder)
    p = [complex(v) for v in values]
    n = len(xs)
    for m in range(1, n):
        for i in range(n - m):
            p[i] = (xs[i] * p[i + 1] - xs[i + m] * p[i]) / (xs[i] - xs[i + m])
    return p[0]


def ek_lattice(k: int, tau, R: int = 400, ladder: Sequence[float] = DEFAULT_LADDER) -> complex:
    """``lim_{s->0+} e_k(Lambda_tau(s))`` by extrapolation over ``ladder``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return 1 + 0j
    if any(s <= 0 for s in ladder) or len(set(ladder)) != len(ladder):
        raise ValueError("ladder must hold distinct positive s values")
    return richardson([ek_at(k, s, tau, R) for s in ladder], ladder)
