"""Exact scalar arithmetic and the combinatorial substrate.

Rationals are plain :class:`fractions.Fraction` values (always normalized).
:class:`GaussianRational` adds a square root of -1.  Partitions of ``n`` are
stored by their multiplicity vector ``(m_1, ..., m_n)``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterator, Union

Number = Union[int, Fraction]


class GaussianRational:
    """An element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re: Number = 0, im: Number = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero GaussianRational")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = GaussianRational(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if not self.im:
            return f"GaussianRational({self.re})"
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        return f"({self.re} + {self.im}*i)"


I = GaussianRational(0, 1)


_bernoulli_cache: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Return the Bernoulli number B_n (with B_1 = -1/2).

    Values are produced by the Akiyama-Tanigawa transform and memoized.
    """
    if n < 0:
        raise ValueError("bernoulli index must be non-negative")
    if n >= len(_bernoulli_cache):
        with _bernoulli_lock:
            if n >= len(_bernoulli_cache):
                _bernoulli_cache[:] = _akiyama_tanigawa(max(n, 2 * len(_bernoulli_cache)))
    return _bernoulli_cache[n]


def _akiyama_tanigawa(n: int) -> list[Fraction]:
    # A[0] after pass m is B_m in the B_1 = +1/2 convention.
    a: list[Fraction] = []
    out: list[Fraction] = []
    for m in range(n + 1):
        a.append(Fraction(1, m + 1))
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    out[1] = -out[1]
    return out


def divisor_sum(ell: int, n: int) -> int:
    """sigma_ell(n): sum of d**ell over the positive divisors d of n."""
    if n <= 0:
        raise ValueError("divisor_sum needs n >= 1")
    if ell < 0:
        raise ValueError("divisor_sum needs ell >= 0")
    total = 0
    r = isqrt(n)
    for d in range(1, r + 1):
        if n % d == 0:
            e = n // d
            total += d ** ell
            if e != d:
                total += e ** ell
    return total


@dataclass(frozen=True, order=False)
class Partition:
    """A partition ``(1^m_1, 2^m_2, ...)`` given by its multiplicity vector.

    Trailing zero multiplicities are trimmed, so two partitions of the same
    integer compare equal iff they are the same partition.
    """

    multiplicities: tuple[int, ...] = ()

    def __post_init__(self):
        m = tuple(int(x) for x in self.multiplicities)
        if any(x < 0 for x in m):
            raise ValueError("multiplicities must be non-negative")
        while m and m[-1] == 0:
            m = m[:-1]
        object.__setattr__(self, "multiplicities", m)

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        parts = list(parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        m = [0] * (max(parts) if parts else 0)
        for p in parts:
            m[p - 1] += 1
        return cls(tuple(m))

    @property
    def n(self) -> int:
        return sum(k * mk for k, mk in enumerate(self.multiplicities, start=1))

    def multiplicity(self, k: int) -> int:
        if 1 <= k <= len(self.multiplicities):
            return self.multiplicities[k - 1]
        return 0

    def items(self) -> Iterator[tuple[int, int]]:
        """Yield ``(k, m_k)`` for every part size that occurs."""
        for k, mk in enumerate(self.multiplicities, start=1):
            if mk:
                yield k, mk

    def parts(self) -> list[int]:
        return [k for k, mk in self.items() for _ in range(mk)]

    def padded(self, n: int) -> tuple[int, ...]:
        return self.multiplicities + (0,) * (n - len(self.multiplicities))

    def __repr__(self):
        if not self.multiplicities:
            return "Partition(())"
        body = ",".join(f"{k}^{mk}" if mk > 1 else str(k) for k, mk in self.items())
        return f"Partition({body})"


def partition_length(lam: Partition) -> int:
    """Number of parts of ``lam``."""
    return sum(lam.multiplicities)


def partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` once.

    Order is ascending lexicographic on the length-``n`` multiplicity vector
    ``(m_1, ..., m_n)``; for n = 4 that is 4, 2^2, 1+3, 1^2+2, 1^4.
    """
    if n < 0:
        raise ValueError("partitions needs n >= 0")
    if n == 0:
        yield Partition(())
        return
    m = [0] * n

    def rec(k: int, rem: int):
        if k > n:
            if rem == 0:
                yield Partition(tuple(m))
            return
        # parts >= k cannot fill 0 < rem < k
        if 0 < rem < k:
            return
        for mk in range(rem // k + 1):
            m[k - 1] = mk
            yield from rec(k + 1, rem - k * mk)
        m[k - 1] = 0

    yield from rec(1, n)
