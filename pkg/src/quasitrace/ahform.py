"""Almost holomorphic forms as polynomials in a formal ``X = 1/v``.

:class:`AHForm` stores the q-series coefficient of each power of ``X``.  The
lowering operator acts through ``L(X) = -1`` and ``L(holomorphic) = 0``, so it
is the formal derivation ``sum_j f_j X^j -> sum_j -j f_j X^(j-1)``.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .qseries import PiScalar, QSeries, _min_prec


def _as_qseries(x) -> QSeries:
    return x if isinstance(x, QSeries) else QSeries.constant(x)


class AHForm:
    """``sum_j xcoeffs[j] * X**j`` with a weight tag carried as metadata."""

    __slots__ = ("_x", "weight")

    def __init__(self, xcoeffs: Sequence, weight: Optional[int] = None):
        coeffs = [_as_qseries(c) for c in xcoeffs] or [QSeries.zero()]
        self._x = tuple(coeffs)
        self.weight = weight

    @classmethod
    def holomorphic(cls, f, weight: Optional[int] = None) -> "AHForm":
        return cls([f], weight)

    @classmethod
    def constant(cls, c, weight: Optional[int] = 0) -> "AHForm":
        return cls([QSeries.constant(c)], weight)

    @classmethod
    def zero(cls, weight: Optional[int] = None) -> "AHForm":
        return cls([QSeries.zero()], weight)

    @property
    def xcoeffs(self) -> tuple[QSeries, ...]:
        return self._x

    def x_coeff(self, j: int) -> QSeries:
        if 0 <= j < len(self._x):
            return self._x[j]
        return QSeries.zero()

    @property
    def depth(self) -> int:
        """Largest power of ``X`` with a non-zero coefficient (0 for the zero form)."""
        for j in range(len(self._x) - 1, -1, -1):
            if not self._x[j].is_zero():
                return j
        return 0

    @property
    def prec(self) -> Optional[int]:
        return _min_prec(*(c.prec for c in self._x))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self._x)

    def trimmed(self) -> "AHForm":
        return AHForm(self._x[: self.depth + 1], self.weight)

    # -- algebra --------------------------------------------------------------

    @staticmethod
    def _lift(x) -> "AHForm":
        if isinstance(x, AHForm):
            return x
        if isinstance(x, QSeries):
            return AHForm([x])
        return AHForm([QSeries.constant(PiScalar.coerce(x))])

    def __add__(self, other):
        try:
            o = AHForm._lift(other)
        except TypeError:
            return NotImplemented
        size = max(len(self._x), len(o._x))
        coeffs = []
        for j in range(size):
            if j >= len(self._x):
                coeffs.append(o._x[j])
            elif j >= len(o._x):
                coeffs.append(self._x[j])
            else:
                coeffs.append(self._x[j] + o._x[j])
        return AHForm(coeffs, self.weight if self.weight == o.weight else None)

    __radd__ = __add__

    def __neg__(self):
        return AHForm([-c for c in self._x], self.weight)

    def __sub__(self, other):
        try:
            o = AHForm._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AHForm):
            out: list[Optional[QSeries]] = [None] * (len(self._x) + len(other._x) - 1)
            for i, a in enumerate(self._x):
                if a.is_zero() and a.is_exact:
                    continue
                for j, b in enumerate(other._x):
                    if b.is_zero() and b.is_exact:
                        continue
                    t = a * b
                    out[i + j] = t if out[i + j] is None else out[i + j] + t
            coeffs = [c if c is not None else QSeries.zero() for c in out]
            w = None if self.weight is None or other.weight is None else self.weight + other.weight
            return AHForm(coeffs, w)
        if isinstance(other, QSeries):
            return AHForm([c * other for c in self._x], None)
        try:
            s = PiScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return AHForm([c.scale(s) for c in self._x], self.weight)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for depth-0 forms; use invert()")
        result = AHForm.constant(1)
        for _ in range(k):
            result = result * self
        if self.weight is not None:
            result.weight = self.weight * k
        return result

    def times_x(self, j: int = 1) -> "AHForm":
        """Multiply by ``X**j``."""
        return AHForm([QSeries.zero()] * j + list(self._x), None)

    def invert(self) -> "AHForm":
        if self.depth:
            raise ZeroDivisionError("only depth-0 forms are invertible")
        w = None if self.weight is None else -self.weight
        return AHForm([self._x[0].invert()], w)

    def truncate(self, prec: int) -> "AHForm":
        return AHForm([c.truncate(prec) for c in self._x], self.weight)

    def with_weight(self, weight: Optional[int]) -> "AHForm":
        return AHForm(self._x, weight)

    # -- comparison -----------------------------------------------------------

    def first_difference(self, other) -> Optional[tuple]:
        """First ``(x_power, q_exponent, pi_degree, lhs, rhs)`` mismatch, or None."""
        o = AHForm._lift(other)
        for j in range(max(len(self._x), len(o._x))):
            d = self.x_coeff(j).first_difference(o.x_coeff(j))
            if d is not None:
                return (j,) + d
        return None

    def __eq__(self, other):
        if not isinstance(other, (AHForm, QSeries, int, PiScalar)):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None

    def to_json(self) -> dict:
        t = self.trimmed()
        return {"weight": self.weight, "depth": t.depth, "xcoeffs": [c.to_json() for c in t._x]}

    @classmethod
    def from_json(cls, data) -> "AHForm":
        return cls([QSeries.from_json(c) for c in data["xcoeffs"]], data.get("weight"))

    def __repr__(self):
        return f"AHForm(weight={self.weight}, depth={self.depth}, xcoeffs={list(self._x)})"


def lowering(f: AHForm) -> AHForm:
    """Apply ``L = -2 i v^2 d/d(tau-bar)`` via ``L(1/v) = -1``; weight drops by 2."""
    coeffs = [c.scale(-j) for j, c in enumerate(f.xcoeffs)][1:] or [QSeries.zero()]
    w = None if f.weight is None else f.weight - 2
    return AHForm(coeffs, w)


def tau_bar_limit(f: AHForm) -> QSeries:
    """Holomorphic part: the ``X**0`` coefficient."""
    return f.x_coeff(0)
