"""Truncated Laurent series in ``w = 2 pi i z`` with :class:`AHForm` coefficients.

Coefficients are known for every exponent ``d <= wmax``; exponents absent from
the store are exactly zero.  ``z = w * Pi^-1 * (2i)^-1``, so the coefficient
of ``z**d`` is the coefficient of ``w**d`` times ``(2 pi i)**d``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping, Optional

from .ahform import AHForm
from .arith import GaussianRational
from .qseries import PiScalar

TWO_PI_I = PiScalar.pi_power(1, GaussianRational(0, 2))


def _as_ahform(x) -> AHForm:
    return AHForm._lift(x)


class WSeries:
    """``sum_{d <= wmax} coeffs[d] * w**d``."""

    __slots__ = ("_c", "wmax")

    def __init__(self, coeffs: Mapping[int, object], wmax: int):
        self.wmax = int(wmax)
        store = {}
        for d, c in coeffs.items():
            c = _as_ahform(c)
            if int(d) <= self.wmax and not c.is_zero():
                store[int(d)] = c
        self._c = store

    @classmethod
    def constant(cls, c, wmax: int) -> "WSeries":
        return cls({0: c}, wmax)

    @classmethod
    def w_power(cls, d: int, wmax: int, c=1) -> "WSeries":
        return cls({d: c}, wmax)

    def coeff(self, d: int) -> AHForm:
        if d > self.wmax:
            raise IndexError(f"w-exponent {d} beyond wmax {self.wmax}")
        return self._c.get(d, AHForm.zero())

    def exponents(self) -> list[int]:
        return sorted(self._c)

    @property
    def order(self) -> Optional[int]:
        """Exponent of the leading non-zero coefficient (None for zero)."""
        return min(self._c) if self._c else None

    def is_zero(self) -> bool:
        return not self._c

    # -- algebra --------------------------------------------------------------

    @staticmethod
    def _lift(x, wmax) -> "WSeries":
        if isinstance(x, WSeries):
            return x
        return WSeries({0: x}, wmax)

    def __add__(self, other):
        o = WSeries._lift(other, self.wmax)
        wmax = min(self.wmax, o.wmax)
        out = {d: c for d, c in self._c.items() if d <= wmax}
        for d, c in o._c.items():
            if d <= wmax:
                out[d] = out[d] + c if d in out else c
        return WSeries(out, wmax)

    __radd__ = __add__

    def __neg__(self):
        return WSeries({d: -c for d, c in self._c.items()}, self.wmax)

    def __sub__(self, other):
        return self + (-WSeries._lift(other, self.wmax))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, WSeries):
            return WSeries({d: c * other for d, c in self._c.items()}, self.wmax)
        oa, ob = self.order, other.order
        if oa is None or ob is None:
            return WSeries({}, min(self.wmax + (ob or 0), other.wmax + (oa or 0)))
        wmax = min(self.wmax + ob, other.wmax + oa)
        out: dict[int, AHForm] = {}
        for da, a in self._c.items():
            for db, b in other._c.items():
                d = da + db
                if d > wmax:
                    continue
                t = a * b
                out[d] = out[d] + t if d in out else t
        return WSeries(out, wmax)

    def __rmul__(self, other):
        return WSeries({d: other * c for d, c in self._c.items()}, self.wmax)

    def invert(self) -> "WSeries":
        """Reciprocal; the leading coefficient must be an invertible depth-0 form."""
        o = self.order
        if o is None:
            raise ZeroDivisionError("cannot invert the zero w-series")
        lead = self._c[o]
        b0 = lead.invert()
        n_terms = self.wmax - o
        b = [b0]
        for n in range(1, n_terms + 1):
            s = None
            for i in range(1, n + 1):
                a = self._c.get(o + i)
                if a is None:
                    continue
                t = a * b[n - i]
                s = t if s is None else s + t
            b.append(AHForm.zero() if s is None else -(b0 * s))
        return WSeries({n - o: c for n, c in enumerate(b)}, self.wmax - 2 * o)

    def __truediv__(self, other):
        if isinstance(other, WSeries):
            return self * other.invert()
        return self * PiScalar.coerce(other).inverse()

    def exp(self) -> "WSeries":
        """``exp(self)`` for a series of w-order at least 1."""
        o = self.order
        if o is not None and o < 1:
            raise ValueError("exp needs a w-series with vanishing w^0 and negative terms")
        f = [AHForm.constant(1)]
        g = sorted(self._c.items())
        for n in range(1, self.wmax + 1):
            s = None
            for k, gk in g:
                if k > n:
                    break
                if f[n - k].is_zero():
                    continue
                t = (gk * f[n - k]) * k
                s = t if s is None else s + t
            f.append(AHForm.zero() if s is None else s * Fraction(1, n))
        return WSeries(dict(enumerate(f)), self.wmax)

    def map(self, fn: Callable[[AHForm], AHForm]) -> "WSeries":
        return WSeries({d: fn(c) for d, c in self._c.items()}, self.wmax)

    def scale_variable(self, c) -> "WSeries":
        """Substitute ``w -> c*w`` (c an integer or rational)."""
        c = Fraction(c)
        return WSeries({d: cf * (c ** d) for d, cf in self._c.items()}, self.wmax)

    def shift(self, k: int) -> "WSeries":
        """Multiply by ``w**k``."""
        return WSeries({d + k: c for d, c in self._c.items()}, self.wmax + k)

    def truncate(self, wmax: int) -> "WSeries":
        return WSeries(self._c, min(wmax, self.wmax))

    def z_coeff(self, d: int) -> AHForm:
        """Coefficient of ``z**d``."""
        return self.coeff(d) * (TWO_PI_I ** d)

    def is_odd(self) -> bool:
        return all(d % 2 for d in self._c)

    def is_even(self) -> bool:
        return all(d % 2 == 0 for d in self._c)

    # -- comparison -----------------------------------------------------------

    def first_difference(self, other, wmax: Optional[int] = None) -> Optional[tuple]:
        """First ``(w_exp, x_power, q_exp, pi_degree, lhs, rhs)`` mismatch, or None."""
        o = WSeries._lift(other, self.wmax)
        top = min(self.wmax, o.wmax) if wmax is None else wmax
        for d in sorted(set(self._c) | set(o._c)):
            if d > top:
                break
            diff = self.coeff(d).first_difference(o.coeff(d))
            if diff is not None:
                return (d,) + diff
        return None

    def __eq__(self, other):
        if not isinstance(other, WSeries):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None

    def q_prec(self) -> Optional[int]:
        precs = [c.prec for c in self._c.values() if c.prec is not None]
        return min(precs) if precs else None

    def __repr__(self):
        return f"WSeries(order={self.order}, wmax={self.wmax}, exponents={self.exponents()[:8]})"

