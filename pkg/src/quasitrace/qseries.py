"""Truncated q-series with Pi-graded Gaussian-rational coefficients.

A :class:`QSeries` stands for ``q**offset * sum_n c_n q**n + O(q**(offset+prec))``
where every ``c_n`` is a :class:`PiScalar`, a finite sum ``sum_p g_p * Pi**p``
with Gaussian-rational ``g_p`` and a formal symbol ``Pi`` playing the role of
pi.  Keeping pi formal lets identities involving powers of pi be checked with
exact equality.

``prec=None`` marks an exact (polynomial) series, e.g. a constant.
"""

from __future__ import annotations

import json
import math
from collections import defaultdict
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Optional, Union

from .arith import GaussianRational

OFFSET_DENOMINATOR = 24

Scalar = Union[int, Fraction, GaussianRational, "PiScalar"]


class PiScalar:
    """A finite sum ``sum_p g_p * Pi**p`` (``p`` may be negative)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, object]] = None):
        clean = {}
        if terms:
            for p, g in terms.items():
                g = GaussianRational.coerce(g)
                if g:
                    clean[int(p)] = g
        self._terms = clean
        self._hash = None

    @classmethod
    def coerce(cls, x) -> "PiScalar":
        if isinstance(x, PiScalar):
            return x
        return cls({0: GaussianRational.coerce(x)})

    @classmethod
    def pi_power(cls, p: int, coeff=1) -> "PiScalar":
        """``coeff * Pi**p``."""
        return cls({p: GaussianRational.coerce(coeff)})

    @property
    def terms(self) -> dict[int, GaussianRational]:
        return dict(self._terms)

    def degrees(self) -> list[int]:
        return sorted(self._terms)

    def get(self, p: int) -> GaussianRational:
        return self._terms.get(p, GaussianRational(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_unit(self) -> bool:
        return len(self._terms) == 1

    def inverse(self) -> "PiScalar":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit (needs exactly one Pi-degree)")
        (p, g), = self._terms.items()
        return PiScalar({-p: g.inverse()})

    def __add__(self, other):
        try:
            o = PiScalar.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for p, g in o._terms.items():
            out[p] = out[p] + g if p in out else g
        return PiScalar(out)

    __radd__ = __add__

    def __neg__(self):
        return PiScalar({p: -g for p, g in self._terms.items()})

    def __sub__(self, other):
        try:
            o = PiScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = PiScalar.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[int, GaussianRational] = {}
        for p, g in self._terms.items():
            for r, h in o._terms.items():
                gh = g * h
                out[p + r] = out[p + r] + gh if p + r in out else gh
        return PiScalar(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = PiScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = PiScalar.coerce(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        try:
            o = PiScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def evaluate(self, pi: float = math.pi) -> complex:
        return sum((complex(g) * pi ** p for p, g in self._terms.items()), 0j)

    def to_json(self) -> list:
        return [[p, _frac_str(g.re), _frac_str(g.im)] for p, g in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data) -> "PiScalar":
        return cls({int(p): GaussianRational(Fraction(re), Fraction(im)) for p, re, im in data})

    def __repr__(self):
        if not self._terms:
            return "PiScalar(0)"
        return "PiScalar(" + " + ".join(
            f"{g}" if p == 0 else f"{g}*Pi^{p}" for p, g in sorted(self._terms.items())) + ")"


ZERO = PiScalar()
ONE = PiScalar.coerce(1)


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _check_offset(offset) -> Fraction:
    offset = Fraction(offset)
    if OFFSET_DENOMINATOR % offset.denominator:
        raise ValueError(f"offset {offset} must have denominator dividing {OFFSET_DENOMINATOR}")
    return offset


def _conv(x: list[int], ynz: list[tuple[int, int]], size: int) -> list[int]:
    """Truncated convolution; ``ynz`` lists the non-zero entries of the right factor."""
    out = [0] * size
    for i, a in enumerate(x):
        if i >= size:
            break
        if not a:
            continue
        lim = size - i
        for j, b in ynz:
            if j >= lim:
                break
            out[i + j] += a * b
    return out


def _min_prec(*vals):
    vals = [v for v in vals if v is not None]
    return min(vals) if vals else None


class QSeries:
    """Immutable truncated series ``q**offset * (sum_{n<prec} c_n q**n)``."""

    __slots__ = ("_offset", "_prec", "_coeffs", "_components")

    def __init__(self, coeffs: Union[Mapping[int, Scalar], Iterable[Scalar], None] = None,
                 offset=0, prec: Optional[int] = None):
        self._offset = _check_offset(offset)
        if prec is not None:
            prec = int(prec)
            if prec <= 0:
                raise ValueError("precision must be positive")
        self._prec = prec
        items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs or ())
        clean: dict[int, PiScalar] = {}
        for n, c in items:
            n = int(n)
            if n < 0:
                raise ValueError("coefficient indices must be non-negative")
            if prec is not None and n >= prec:
                continue
            c = PiScalar.coerce(c)
            if c:
                clean[n] = c
        self._coeffs = clean
        self._components = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c: Scalar, prec: Optional[int] = None) -> "QSeries":
        return cls({0: c}, 0, prec)

    @classmethod
    def zero(cls, prec: Optional[int] = None, offset=0) -> "QSeries":
        return cls({}, offset, prec)

    @classmethod
    def _raw(cls, coeffs: dict[int, PiScalar], offset: Fraction, prec) -> "QSeries":
        obj = cls.__new__(cls)
        obj._offset = offset
        obj._prec = prec
        obj._coeffs = coeffs
        obj._components = None
        return obj

    # -- accessors ----------------------------------------------------------

    @property
    def offset(self) -> Fraction:
        return self._offset

    @property
    def prec(self) -> Optional[int]:
        return self._prec

    @property
    def is_exact(self) -> bool:
        return self._prec is None

    def coeff(self, n: int) -> PiScalar:
        if self._prec is not None and n >= self._prec:
            raise IndexError(f"coefficient {n} beyond precision {self._prec}")
        return self._coeffs.get(n, ZERO)

    def __getitem__(self, n: int) -> PiScalar:
        return self.coeff(n)

    def items(self):
        """Non-zero ``(n, c_n)`` pairs in increasing ``n``."""
        return sorted(self._coeffs.items())

    def support_bound(self) -> int:
        """One past the largest stored index (prec for truncated series)."""
        if self._prec is not None:
            return self._prec
        return max(self._coeffs) + 1 if self._coeffs else 0

    @property
    def valuation(self) -> Optional[int]:
        """Smallest index with a non-zero coefficient (``prec`` if none, None if exactly 0)."""
        if self._coeffs:
            return min(self._coeffs)
        return self._prec

    def is_zero(self) -> bool:
        return not self._coeffs

    def pi_degrees(self) -> list[int]:
        return sorted({p for c in self._coeffs.values() for p in c.degrees()})

    def truncate(self, prec: int) -> "QSeries":
        prec = _min_prec(prec, self._prec)
        return QSeries._raw({n: c for n, c in self._coeffs.items() if n < prec}, self._offset, prec)

    def shift(self, k: int) -> "QSeries":
        """Multiply by ``q**k`` (k an integer), keeping index 0 at the offset."""
        return QSeries._raw(dict(self._coeffs), self._offset + k, self._prec)

    def reindex(self, offset) -> "QSeries":
        """Same series written with a smaller offset differing by an integer."""
        offset = Fraction(offset)
        k = self._offset - offset
        if k.denominator != 1 or k < 0:
            raise ValueError(f"cannot reindex offset {self._offset} to {offset}")
        k = int(k)
        prec = None if self._prec is None else self._prec + k
        return QSeries._raw({n + k: c for n, c in self._coeffs.items()}, offset, prec)

    def normalized(self) -> "QSeries":
        """Move the offset up to the valuation: leading stored index becomes 0."""
        v = min(self._coeffs) if self._coeffs else 0
        if v == 0:
            return self
        prec = None if self._prec is None else self._prec - v
        return QSeries._raw({n - v: c for n, c in self._coeffs.items()}, self._offset + v, prec)

    # -- ring operations ----------------------------------------------------

    def _align(self, other: "QSeries"):
        d = self._offset - other._offset
        if d.denominator != 1:
            raise ValueError(f"offsets {self._offset} and {other._offset} differ by a non-integer")
        lo = min(self._offset, other._offset)
        return self.reindex(lo), other.reindex(lo), lo

    @staticmethod
    def _lift(x) -> "QSeries":
        if isinstance(x, QSeries):
            return x
        return QSeries.constant(PiScalar.coerce(x))

    def __add__(self, other):
        try:
            other = QSeries._lift(other)
        except TypeError:
            return NotImplemented
        a, b, lo = self._align(other)
        prec = _min_prec(a._prec, b._prec)
        out = dict(a._coeffs) if prec is None else {n: c for n, c in a._coeffs.items() if n < prec}
        for n, c in b._coeffs.items():
            if prec is not None and n >= prec:
                continue
            s = out[n] + c if n in out else c
            if s:
                out[n] = s
            else:
                out.pop(n, None)
        return QSeries._raw(out, lo, prec)

    __radd__ = __add__

    def __neg__(self):
        return QSeries._raw({n: -c for n, c in self._coeffs.items()}, self._offset, self._prec)

    def __sub__(self, other):
        try:
            other = QSeries._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "QSeries":
        c = PiScalar.coerce(c)
        if not c:
            return QSeries._raw({}, self._offset, self._prec)
        out = {}
        for n, x in self._coeffs.items():
            y = x * c
            if y:
                out[n] = y
        return QSeries._raw(out, self._offset, self._prec)

    def _comps(self):
        """Dense integer components keyed by (Pi-degree, 0 for real / 1 for imaginary)."""
        if self._components is None:
            size = self.support_bound()
            groups: dict[tuple[int, int], dict[int, Fraction]] = defaultdict(dict)
            for n, c in self._coeffs.items():
                for p, g in c._terms.items():
                    if g.re:
                        groups[(p, 0)][n] = g.re
                    if g.im:
                        groups[(p, 1)][n] = g.im
            comps = {}
            for key, vals in groups.items():
                den = 1
                for v in vals.values():
                    den = den * v.denominator // gcd(den, v.denominator)
                nums = [0] * size
                for n, v in vals.items():
                    nums[n] = v.numerator * (den // v.denominator)
                nz = [(n, nums[n]) for n in sorted(vals)]
                comps[key] = (den, nums, nz)
            self._components = comps
        return self._components

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        if (not self._coeffs and self._prec is None) or (not other._coeffs and other._prec is None):
            return QSeries._raw({}, self._offset + other._offset, None)
        va, vb = self.valuation, other.valuation
        cand = []
        if self._prec is not None:
            cand.append(self._prec + (vb if vb is not None else 0))
        if other._prec is not None:
            cand.append(other._prec + (va if va is not None else 0))
        prec = min(cand) if cand else None
        offset = self._offset + other._offset
        if not self._coeffs or not other._coeffs:
            return QSeries._raw({}, offset, prec)
        size = prec if prec is not None else self.support_bound() + other.support_bound() - 1
        acc: dict[tuple[int, int], list] = defaultdict(list)
        for (pa, ra), (da, xa, _) in self._comps().items():
            for (pb, rb), (db, _, yb) in other._comps().items():
                conv = _conv(xa, yb, size)
                part, sign = ra + rb, 1
                if part == 2:
                    part, sign = 0, -1
                acc[(pa + pb, part)].append((sign, da * db, conv))
        return QSeries._raw(_assemble(acc, size), offset, prec)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            return self.invert() ** (-k)
        result = QSeries.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def invert(self, prec: Optional[int] = None) -> "QSeries":
        """Multiplicative inverse; the leading coefficient must be a unit PiScalar.

        ``prec`` bounds the number of terms (required for exact non-monomial input).
        """
        if not self._coeffs:
            raise ZeroDivisionError("cannot invert a series with no non-zero coefficient")
        v = min(self._coeffs)
        lead = self._coeffs[v]
        if not lead.is_unit():
            raise ZeroDivisionError(f"leading coefficient {lead} is not a unit")
        c = lead.inverse()
        rest = [(n - v, x) for n, x in sorted(self._coeffs.items()) if n > v]
        if self._prec is None:
            if not rest:
                return QSeries._raw({0: c}, -(self._offset + v), None)
            if prec is None:
                raise ValueError("inverting an exact non-monomial series needs an explicit prec")
            size = prec
        else:
            size = _min_prec(self._prec - v, prec)
        b = [c]
        for n in range(1, size):
            s = ZERO
            for i, x in rest:
                if i > n:
                    break
                if b[n - i]:
                    s = s + x * b[n - i]
            b.append(-(c * s))
        return QSeries._raw({n: x for n, x in enumerate(b) if x}, -(self._offset + v), size)

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.invert()
        try:
            return self.scale(PiScalar.coerce(other).inverse())
        except TypeError:
            return NotImplemented

    def exp_series(self, prec: Optional[int] = None) -> "QSeries":
        """``exp(self)`` for a series with integer offset 0 and no constant term."""
        if self._offset != 0:
            raise ValueError("exp_series needs offset 0")
        if self._coeffs.get(0):
            raise ValueError("exp_series needs a vanishing constant term")
        size = _min_prec(self._prec, prec)
        if size is None:
            if self._coeffs:
                raise ValueError("exp of an exact non-zero series needs an explicit prec")
            return QSeries.constant(1)
        a = sorted(self._coeffs.items())
        f = [ONE]
        for n in range(1, size):
            s = ZERO
            for k, x in a:
                if k > n:
                    break
                if f[n - k]:
                    s = s + (x * f[n - k]) * k
            f.append(s * Fraction(1, n))
        return QSeries._raw({n: x for n, x in enumerate(f) if x}, Fraction(0), size)

    # -- comparison ---------------------------------------------------------

    def first_difference(self, other) -> Optional[tuple]:
        """First ``(exponent, pi_degree, lhs, rhs)`` where the two series disagree.

        Exponents are absolute (offset included).  Returns None when equal to
        the common precision.
        """
        other = QSeries._lift(other)
        a, b, lo = self._align(other)
        prec = _min_prec(a._prec, b._prec)
        keys = set(a._coeffs) | set(b._coeffs)
        for n in sorted(keys):
            if prec is not None and n >= prec:
                break
            x, y = a._coeffs.get(n, ZERO), b._coeffs.get(n, ZERO)
            if x != y:
                degs = sorted(set(x.degrees()) | set(y.degrees()))
                for p in degs:
                    if x.get(p) != y.get(p):
                        return (lo + n, p, x.get(p), y.get(p))
        return None

    def __eq__(self, other):
        if not isinstance(other, (QSeries, int, Fraction, GaussianRational, PiScalar)):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "offset": _frac_str(self._offset),
            "precision": self._prec,
            "coeffs": [[n, c.to_json()] for n, c in sorted(self._coeffs.items())],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data) -> "QSeries":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({int(n): PiScalar.from_json(c) for n, c in data["coeffs"]},
                   Fraction(data["offset"]), data["precision"])

    def __repr__(self):
        shown = []
        for n, c in self.items()[:6]:
            e = self._offset + n
            shown.append(f"({c})*q^{e}")
        tail = "" if self._prec is None else f" + O(q^{self._offset + self._prec})"
        return "QSeries(" + (" + ".join(shown) or "0") + (" + ..." if len(self._coeffs) > 6 else "") + tail + ")"


def _assemble(acc, size) -> dict[int, PiScalar]:
    """Turn accumulated integer convolutions back into PiScalar coefficients."""
    per_n: dict[int, dict[int, list]] = defaultdict(lambda: defaultdict(lambda: [0, 0]))
    for (p, part), pieces in acc.items():
        den = 1
        for _, d, _ in pieces:
            den = den * d // gcd(den, d)
        total = [0] * size
        for sign, d, conv in pieces:
            m = sign * (den // d)
            for n, x in enumerate(conv):
                if x:
                    total[n] += m * x
        for n, x in enumerate(total):
            if x:
                per_n[n][p][part] = Fraction(x, den)
    out = {}
    for n, degs in per_n.items():
        terms = {p: GaussianRational(re, im) for p, (re, im) in degs.items()}
        c = PiScalar(terms)
        if c:
            out[n] = c
    return out


def q_monomial(k: int, c: Scalar = 1, prec: Optional[int] = None) -> QSeries:
    """``c * q**k``."""
    return QSeries({k: c}, 0, prec)
