"""Machine-readable reports for exact identities and numeric residuals."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional


def _exp_json(q):
    if q is None or isinstance(q, int):
        return q
    if getattr(q, "denominator", None) == 1:
        return int(q)
    return str(q)


def _scalar_json(x):
    if x is None:
        return None
    if hasattr(x, "to_json"):
        return x.to_json()
    return str(x)


@dataclass
class VerificationReport:
    """Result of an exact identity check.

    ``first_failure`` is ``None`` on success, otherwise the lowest mismatching
    ``(w, x, q, piDeg)`` slot with the two disagreeing coefficients.
    """

    identity: str
    checked_orders: dict = field(default_factory=dict)
    anchor: str = ""
    status: str = "pending"
    first_failure: Optional[dict] = None
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def fail(self, w=None, q=None, pi_deg=None, lhs=None, rhs=None, x=None, message=None):
        if self.first_failure is None:
            ff = {"w": w, "q": q, "piDeg": pi_deg, "lhs": _scalar_json(lhs), "rhs": _scalar_json(rhs)}
            if x is not None:
                ff["x"] = x
            if message:
                ff["message"] = message
            self.first_failure = ff
        return self

    def check(self, ok: bool, message: str):
        """Record a boolean side condition (parity, offset, etc.)."""
        if not ok:
            self.fail(message=message)
        return self

    def compare_series(self, lhs, rhs, w=None):
        """Compare two QSeries, recording the first mismatch."""
        d = lhs.first_difference(rhs)
        if d is not None:
            q, pd, a, b = d
            self.fail(w=w, q=_exp_json(q), pi_deg=pd, lhs=a, rhs=b)
        return self

    def compare_ahform(self, lhs, rhs, w=None):
        d = lhs.first_difference(rhs)
        if d is not None:
            x, q, pd, a, b = d
            self.fail(w=w, q=_exp_json(q), pi_deg=pd, lhs=a, rhs=b, x=x)
        return self

    def compare_wseries(self, lhs, rhs, wmax=None):
        d = lhs.first_difference(rhs, wmax)
        if d is not None:
            wd, x, q, pd, a, b = d
            self.fail(w=wd, q=_exp_json(q), pi_deg=pd, lhs=a, rhs=b, x=x)
        return self

    def finish(self) -> "VerificationReport":
        self.status = "pass" if self.first_failure is None else "fail"
        return self

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "status": self.status,
            "checked_orders": self.checked_orders,
            "first_failure": self.first_failure,
            "anchor": self.anchor,
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out


@dataclass
class ResidualRecord:
    """One numeric check: ``residual < tolerance`` decides ``pass``."""

    check: str
    residual: float
    tolerance: float
    gamma: Optional[tuple] = None
    tau: Optional[complex] = None
    z: Optional[complex] = None
    note: Optional[str] = None

    @property
    def passed(self) -> bool:
        return bool(self.residual == self.residual and self.residual < self.tolerance)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        def cpx(c):
            return None if c is None else [float(c.real), float(c.imag)]

        out = {
            "check": self.check,
            "gamma": None if self.gamma is None else [int(x) for x in self.gamma],
            "tau": cpx(self.tau),
            "z": cpx(self.z),
            "residual": float(self.residual),
            "tolerance": float(self.tolerance),
            "pass": self.passed,
        }
        if self.note:
            out["note"] = self.note
        return out


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(",", ":"))
