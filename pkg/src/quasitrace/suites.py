"""Named verification suites shared by the CLI and the acceptance tests.

Every suite returns results in a fixed order; each result is a dict with at
least ``suite``, ``check``, ``status`` and ``anchor``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .ahform import lowering, tau_bar_limit
from .arith import GaussianRational, bernoulli
from .jacobi import (
    verify_phi_completion,
    verify_theta_identity,
    verify_u_completion,
    verify_u_identity,
    verify_v_completion,
    verify_v_identity,
)
from .modular import (
    dedekind_eta,
    dedekind_eta_cubed,
    eisenstein_E,
    eisenstein_G,
    ek_lambda,
    g2_hat,
    sigma_series,
    u_hat,
    v_hat,
)
from .qseries import PiScalar, QSeries
from .report import ResidualRecord, VerificationReport
from .traces import (
    ramanujan_U,
    ramanujan_V,
    trace_E,
    trace_hat_formal,
    trace_zero_divisor,
    u_denominator,
    v_divisor_trace,
    v_numerator,
    verify_cycle_lemma,
)

SUITES = ("ramanujan", "theta-identity", "v-identity", "cycle-lemma", "lowering", "depth",
          "lattice", "divisor-trace", "transform")

TOLERANCE_KEYS = {
    "series": 1e-8,
    "theta-derivative": 1e-6,
    "lattice-sum": 1e-6,
    "lattice": 1e-3,
    "divisor-trace": 1e-6,
    "odd-trace": 1e-8,
    "gkw-route": 1e-8,
}


@dataclass
class RunConfig:
    q_precision: int = 100
    w_precision: int = 24
    lattice_radius: int = 400
    s_ladder: tuple = (0.4, 0.2, 0.1, 0.05)
    taus: Optional[tuple] = None
    gamma_count: int = 25
    gamma_bound: int = 5
    gammas: Optional[tuple] = None
    tolerances: dict = field(default_factory=lambda: dict(TOLERANCE_KEYS))
    seed: int = 0
    max_n: Optional[int] = None
    family: str = "all"

    def validate(self) -> "RunConfig":
        for name in ("q_precision", "w_precision", "lattice_radius", "gamma_count", "gamma_bound"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if any(s <= 0 for s in self.s_ladder):
            raise ValueError("s-ladder values must be positive")
        if self.max_n is not None and self.max_n < 0:
            raise ValueError("max-n must be non-negative")
        for k, v in self.tolerances.items():
            if k not in TOLERANCE_KEYS:
                raise ValueError(f"unknown tolerance key {k!r}")
            if v <= 0:
                raise ValueError(f"tolerance {k} must be positive")
        if self.family not in ("all", "e", "U", "V"):
            raise ValueError(f"unknown family {self.family!r}")
        return self

    def tol(self, key: str) -> float:
        return self.tolerances.get(key, TOLERANCE_KEYS[key])


# -- result helpers -----------------------------------------------------------

def _exact(suite: str, rep: VerificationReport) -> dict:
    out = {"suite": suite, "check": rep.identity}
    out.update(rep.to_json())
    return out


def _numeric(suite: str, rec: ResidualRecord, anchor: str) -> dict:
    out = {"suite": suite, "check": rec.check, "status": rec.status, "anchor": anchor}
    out.update(rec.to_json())
    return out


def _equal(suite, identity, lhs, rhs, anchor, orders) -> dict:
    rep = VerificationReport(identity, orders, anchor)
    if hasattr(lhs, "xcoeffs") or hasattr(rhs, "xcoeffs"):
        from .ahform import AHForm
        rep.compare_ahform(AHForm._lift(lhs), AHForm._lift(rhs))
    else:
        rep.compare_series(QSeries._lift(lhs), QSeries._lift(rhs))
    return _exact(suite, rep.finish())


def _pi(p, c=1):
    return PiScalar.pi_power(p, c)


# -- exact suites ---------------------------------------------------------------

def suite_ramanujan(cfg: RunConfig) -> list[dict]:
    N = cfg.q_precision
    max_n = 8 if cfg.max_n is None else cfg.max_n
    orders = {"q": N - 1}
    E2, E4, E6 = (eisenstein_E(k, N) for k in (2, 4, 6))
    third, ninth = Fraction(1, 3), Fraction(1, 9)
    closed = [
        ("U0", ramanujan_U(0, N), QSeries.constant(1, N), "U_0 = 1"),
        ("U2", ramanujan_U(2, N), E2, "U_2 = E_2"),
        ("U4", ramanujan_U(4, N), (E2 * E2 * 5 - E4 * 2).scale(third), "U_4 = (5E_2^2 - 2E_4)/3"),
        ("U6", ramanujan_U(6, N), (E2 ** 3 * 35 - E2 * E4 * 42 + E6 * 16).scale(ninth),
         "U_6 = (35E_2^3 - 42E_2E_4 + 16E_6)/9"),
        ("V0", ramanujan_V(0, N), QSeries.constant(1, N), "V_0 = 1"),
        ("V2", ramanujan_V(2, N), E2, "V_2 = E_2"),
        ("V4", ramanujan_V(4, N), E2 * E2 * 3 - E4 * 2, "V_4 = 3E_2^2 - 2E_4"),
        ("V6", ramanujan_V(6, N), E2 ** 3 * 15 - E2 * E4 * 30 + E6 * 16,
         "V_6 = 15E_2^3 - 30E_2E_4 + 16E_6"),
    ]
    out = [_equal("ramanujan", f"closed-form:{name}", a, b, anchor, orders) for name, a, b, anchor in closed]

    # displayed numerator terms of V against the adopted closed form
    for n in range(1, max_n + 1):
        num = v_numerator(2 * n, 8)
        shown = QSeries({0: 1, 1: -5 ** (2 * n), 2: -7 ** (2 * n), 5: 11 ** (2 * n), 7: 13 ** (2 * n)}, 0, 8)
        out.append(_equal("ramanujan", f"v-numerator-terms:{2 * n}", num, shown,
                          "1 - 5^2n q - 7^2n q^2 + 11^2n q^5 + 13^2n q^7 - ...", {"q": 7}))
    int_part = dedekind_eta_cubed(N) * QSeries({0: 1}, Fraction(-1, 8))
    out.append(_equal("ramanujan", "u-denominator-eta3", u_denominator(N), int_part,
                      "1 - 3q + 5q^3 - 7q^6 + ... = q^(-1/8) eta^3", orders))

    for n in range(max_n + 1):
        out.append(_equal("ramanujan", f"U=Tr(psi1):{2 * n}", ramanujan_U(2 * n, N), trace_E(n, "psi1", N),
                          "U_2n = Tr_n(psi_1)", orders))
        out.append(_equal("ramanujan", f"V=Tr(psi2):{2 * n}", ramanujan_V(2 * n, N), trace_E(n, "psi2", N),
                          "V_2n = Tr_n(psi_2)", orders))
    for n in range(max_n + 1):
        rhs = ramanujan_U(2 * n, N).scale(Fraction(1, 4 ** n * math.factorial(2 * n + 1)))
        out.append(_equal("ramanujan", f"Tr([0],psiJ):{2 * n}", trace_zero_divisor(2 * n, N), rhs,
                          "Tr_2n([0], psi_J) = U_2n / (4^n (2n+1)!)", orders))
        out.append(_equal("ramanujan", f"Tr([0],psiJ):{2 * n + 1}", trace_zero_divisor(2 * n + 1, N),
                          QSeries.zero(N), "Tr_(2n+1)([0], psi_J) = 0", orders))
    return out


def suite_theta(cfg: RunConfig) -> list[dict]:
    # the identity is odd in w, so check through the next odd order
    w = cfg.w_precision + (1 - cfg.w_precision % 2)
    N = min(cfg.q_precision, 51)
    return [_exact("theta-identity", verify_theta_identity(N, w))]


def _trace_recursions(cfg: RunConfig, N: int, nmax: int) -> list[dict]:
    out = []
    cases = [
        ("[0]", lambda k: trace_zero_divisor(k, N), Fraction(1, 2), 1, lambda n: u_hat(n, N), "U^"),
        ("D2", lambda k: v_divisor_trace(k, N), Fraction(3, 2), 0, lambda n: v_hat(n, N), "V^"),
    ]
    for name, tr, m, a, ref, label in cases:
        for n in range(nmax + 1):
            th = trace_hat_formal(tr, n, m, a)
            expect = ref(n) if n % 2 == 0 else 0
            out.append(_equal("v-identity", f"Trhat{n}[{name}]={label}", th, expect,
                              "completed trace of a theta quotient equals its completed coefficient",
                              {"q": N - 1}))
            if n >= 2:
                lhs = lowering(th)
                rhs = trace_hat_formal(tr, n - 2, m, a) * _pi(1, -m)
                out.append(_equal("v-identity", f"L(Trhat{n})[{name}]", lhs, rhs,
                                  "L(Tr^_n) = -pi m Tr^_(n-2)", {"q": N - 1}))
    return out


def suite_v_identity(cfg: RunConfig) -> list[dict]:
    N = min(cfg.q_precision, 51)
    W = cfg.w_precision
    out = [
        _exact("v-identity", verify_u_identity(N, W)),
        _exact("v-identity", verify_v_identity(N, W)),
        _exact("v-identity", verify_v_completion(N, min(W, 16))),
        _exact("v-identity", verify_u_completion(N, min(W, 16) + 1)),
        _exact("v-identity", verify_phi_completion(N, 13)),
    ]
    out += _trace_recursions(cfg, N, 8)
    return out


def _cycle_specs(N: int) -> list[tuple[str, Callable, str]]:
    def bernoulli_spec(k):
        if k % 2:
            return QSeries.zero(N)
        return eisenstein_E(k, N).scale(bernoulli(k) / math.factorial(k))

    return [
        ("zero", lambda k: QSeries.zero(N), "spec = 0: both sides 1"),
        ("one", lambda k: QSeries.constant(1, N), "spec = 1: both sides 1/(1-w)"),
        ("bernoulli-eisenstein", bernoulli_spec,
         "spec(k) = B_k E_k / k!: exp(sum B_2n E_2n w^2n / (2n (2n)!))"),
    ]


def suite_cycle(cfg: RunConfig) -> list[dict]:
    n_max = 12 if cfg.max_n is None else cfg.max_n
    N = min(cfg.q_precision, 50)
    out = []
    for name, spec, anchor in _cycle_specs(N):
        rep = verify_cycle_lemma(n_max, spec, N, name=f"cycle-lemma:{name}")
        rep.anchor = anchor
        out.append(_exact("cycle-lemma", rep))
    # spec = 1 closed form: every coefficient of w^n equals 1
    rep = VerificationReport("cycle-lemma:one-closed-form", {"w": n_max}, "sum_n w^n = exp(-log(1-w))")
    from .traces import cycle_index
    for n in range(n_max + 1):
        total = sum(cycle_index(n).values(), Fraction(0))
        if total != 1:
            rep.fail(w=n, lhs=total, rhs=1)
    out.append(_exact("cycle-lemma", rep.finish()))
    return out


def suite_lowering(cfg: RunConfig) -> list[dict]:
    N = cfg.q_precision
    max_n = 6 if cfg.max_n is None else cfg.max_n
    fam = cfg.family
    out = []
    orders = {"q": N - 1}
    half = _pi(1, Fraction(1, 2))
    if fam in ("all", "e"):
        out.append(_equal("lowering", "e0=1", ek_lambda(0, N), 1, "e_0 = 1", orders))
        out.append(_equal("lowering", "L(G2^)", lowering(g2_hat(N)), _pi(-1, Fraction(-1, 4)),
                          "L(G2^) = -1/(4 pi)", orders))
        for k in range(1, max_n + 1):
            out.append(_equal("lowering", f"L(e{k})", lowering(ek_lambda(k, N)), ek_lambda(k - 1, N) * half,
                              "L(e_k) = (pi/2) e_(k-1)", orders))
        # coefficient-wise L on phi*: -(pi/2) z^2 phi* = w^2 Pi^-1/8 phi*
        phi = sigma_series(min(N, 51), 13, True)
        rep = VerificationReport("L(phi*)", {"w": 13, "q": min(N, 51) - 1}, "L(phi*) = -(pi z^2/2) phi*")
        rhs = phi.shift(2) * _pi(-1, Fraction(1, 8))
        lhs = phi.map(lowering)
        rep.compare_wseries(lhs, rhs, 13)
        out.append(_exact("lowering", rep.finish()))
    if fam in ("all", "U"):
        out.append(_equal("lowering", "U^0=2 pi i", u_hat(0, N), _pi(1, GaussianRational(0, 2)),
                          "U^_0 = 2 pi i", orders))
        for n in range(1, max_n + 1):
            out.append(_equal("lowering", f"L(U^{2 * n})", lowering(u_hat(2 * n, N)),
                              u_hat(2 * n - 2, N) * _pi(1, Fraction(-1, 2)),
                              "L(U^_2n) = -(pi/2) U^_(2n-2)", orders))
    if fam in ("all", "V"):
        out.append(_equal("lowering", "V^0=1", v_hat(0, N), 1, "V^_0 = 1", orders))
        for n in range(1, max_n + 1):
            out.append(_equal("lowering", f"L(V^{2 * n})", lowering(v_hat(2 * n, N)),
                              v_hat(2 * n - 2, N) * _pi(1, Fraction(-3, 2)),
                              "L(V^_2n) = -(3 pi/2) V^_(2n-2)", orders))
    # nilpotency: depth + 1 applications annihilate
    rep = VerificationReport("L-nilpotent", orders, "L^(depth+1) f = 0")
    forms = [("G2^", g2_hat(N))]
    if fam in ("all", "e"):
        forms += [(f"e{k}", ek_lambda(k, N)) for k in range(max_n + 1)]
    if fam in ("all", "U"):
        forms += [(f"U^{2 * n}", u_hat(2 * n, N)) for n in range(max_n + 1)]
    if fam in ("all", "V"):
        forms += [(f"V^{2 * n}", v_hat(2 * n, N)) for n in range(max_n + 1)]
    for name, f in forms:
        g = f
        for _ in range(f.depth + 1):
            g = lowering(g)
        if not g.is_zero():
            rep.fail(message=f"{name} survives {f.depth + 1} lowerings")
    out.append(_exact("lowering", rep.finish()))
    return out


def suite_depth(cfg: RunConfig) -> list[dict]:
    N = cfg.q_precision
    max_n = 8 if cfg.max_n is None else cfg.max_n
    out = []
    orders = {"q": N - 1}
    rep = VerificationReport("depth", orders, "depth(e_k) = k, depth(U^_2n) = depth(V^_2n) = n")
    for k in range(min(max_n, 6) + 1):
        d = ek_lambda(k, N).depth
        if d != k:
            rep.fail(message=f"depth(e_{k}) = {d}")
    for n in range(max_n + 1):
        for name, f in (("U^", u_hat(2 * n, N)), ("V^", v_hat(2 * n, N))):
            if f.depth != n or f.x_coeff(n).is_zero():
                rep.fail(message=f"depth({name}{2 * n}) = {f.depth}")
    out.append(_exact("depth", rep.finish()))
    for n in range(max_n + 1):
        lead_v = _pi(n, Fraction(3 ** n, 2 ** n * math.factorial(n)))
        out.append(_equal("depth", f"lead(V^{2 * n})", v_hat(2 * n, N).x_coeff(n), lead_v,
                          "X^n coefficient of V^_2n = 3^n pi^n / (2^n n!)", orders))
        lead_u = _pi(n + 1, GaussianRational(0, Fraction(1, 2 ** n * math.factorial(n)) * 2))
        rep = VerificationReport(f"lead(U^{2 * n})", orders,
                                 "X^n coefficient of U^_2n = pi^(n+1) i / (2^(n-1) n!) (from the defining sum)")
        rep.compare_series(u_hat(2 * n, N).x_coeff(n), QSeries.constant(lead_u))
        measured = u_hat(2 * n, N).x_coeff(n).coeff(0).degrees()
        rep.notes.append(f"measured Pi-degree {measured} = n+1; degree n-1 = {n - 1} does not occur")
        out.append(_exact("depth", rep.finish()))
    ipi = _pi(1, GaussianRational(0, 1))
    for n in range(max_n + 1):
        rhs_u = ramanujan_U(2 * n, N).scale(ipi ** (2 * n + 1) * Fraction(2, math.factorial(2 * n + 1)))
        out.append(_equal("depth", f"limit(U^{2 * n})", tau_bar_limit(u_hat(2 * n, N)), rhs_u,
                          "U^_2n -> 2 (pi i)^(2n+1) U_2n / (2n+1)!", orders))
        rhs_v = ramanujan_V(2 * n, N).scale(ipi ** (2 * n) * Fraction(1, math.factorial(2 * n)))
        out.append(_equal("depth", f"limit(V^{2 * n})", tau_bar_limit(v_hat(2 * n, N)), rhs_v,
                          "V^_2n -> (pi i)^2n V_2n / (2n)!", orders))
    out.append(_equal("depth", "limit(G2^)", tau_bar_limit(g2_hat(N)), eisenstein_G(2, N),
                      "G2^ -> G2", orders))
    return out


# -- numeric suites ---------------------------------------------------------------

def _rel_unit(a: complex, b: complex) -> float:
    return abs(a - b) / max(abs(b), 1.0)


def _rel(a: complex, b: complex) -> float:
    return abs(a - b) / abs(b)


def suite_lattice(cfg: RunConfig) -> list[dict]:
    from .numeric.evaluate import eval_ahform, eval_qseries, eta_eval
    from .numeric.lattice import ek_lattice, lattice_power_sum

    taus = cfg.taus or (1j, 2j, 0.5 + 1j)
    R = cfg.lattice_radius
    N = cfg.q_precision
    out = []
    for tau in taus:
        for j in (2, 3):
            p = lattice_power_sum(j, 0.0, tau, R).value
            ex = (2j * math.pi) ** (2 * j) * eval_qseries(eisenstein_G(2 * j, N), tau) / math.factorial(2 * j - 1)
            rec = ResidualRecord(f"lattice:p{j}", _rel_unit(p, ex), cfg.tol("lattice-sum"), tau=tau,
                                 note=f"R={R}")
            out.append(_numeric("lattice", rec, "sum' w^-2j = (2 pi i)^2j G_2j / (2j-1)!"))
        for k in (1, 2):
            e = ek_lattice(k, tau, R, cfg.s_ladder)
            ex = eval_ahform(ek_lambda(k, N), tau)
            rec = ResidualRecord(f"lattice:e{k}", _rel_unit(e, ex), cfg.tol("lattice"), tau=tau,
                                 note=f"R={R}, s-ladder={list(cfg.s_ladder)}")
            out.append(_numeric("lattice", rec, "lim_{s->0+} e_k(Lambda_tau(s)) = e_k(Lambda_tau(0))"))
        rec = ResidualRecord("eval:eta", _rel(eta_eval(tau), eval_qseries(dedekind_eta(N), tau)),
                             cfg.tol("series"), tau=tau)
        out.append(_numeric("lattice", rec, "eta = q^(1/24) prod (1 - q^n)"))
    return out


def suite_divisor(cfg: RunConfig) -> list[dict]:
    from .numeric.evaluate import eval_ahform, eval_qseries
    from .numeric.torsion import (GKW_NOTE, G_kw, G_kD, TorsionPoint, n_torsion_divisor,
                                  trace_divisor, trace_divisor_hat, two_torsion_divisor)
    from .numeric.transform import default_divisors

    taus = cfg.taus or (1j, 1 / 3 + 1.2j)
    N = cfg.q_precision
    D = two_torsion_divisor()
    out = []
    for tau in taus:
        for n in range(5):
            a = trace_divisor(2 * n, D, tau)
            b = eval_qseries(ramanujan_V(2 * n, N), tau) / (4 ** n * math.factorial(2 * n))
            rec = ResidualRecord(f"trace:Tr{2 * n}[D2]", _rel(a, b), cfg.tol("divisor-trace"), tau=tau,
                                 note=GKW_NOTE)
            out.append(_numeric("divisor-trace", rec, "Tr_2n(D, psi_J) = V_2n / (4^n (2n)!)"))
            rec = ResidualRecord(f"trace:|Tr{2 * n + 1}[D2]|", abs(trace_divisor(2 * n + 1, D, tau)),
                                 cfg.tol("odd-trace"), tau=tau, note=GKW_NOTE)
            out.append(_numeric("divisor-trace", rec, "odd traces of theta(2z)/(2theta(z)) vanish"))
            th = trace_divisor_hat(2 * n, D, tau)
            rec = ResidualRecord(f"trace:Trhat{2 * n}[D2]=V^", _rel_unit(th, eval_ahform(v_hat(2 * n, N), tau)),
                                 cfg.tol("divisor-trace"), tau=tau, note=GKW_NOTE)
            out.append(_numeric("divisor-trace", rec, "Tr^_2n(D) = V^_2n"))
        for name, Dx in default_divisors() + [("[0]", None)]:
            if Dx is None:
                from .numeric.torsion import Divisor
                Dx = Divisor([((0, 0), 1)])
            a0 = Dx.order_at_zero
            rec = ResidualRecord(f"trace:Trhat0[{name}]", _rel(trace_divisor_hat(0, Dx, tau), (2j * math.pi) ** a0),
                                 cfg.tol("series"), tau=tau)
            out.append(_numeric("divisor-trace", rec, "Tr^_0 = (2 pi i)^a"))
            t1 = trace_divisor_hat(1, Dx, tau)
            ex = -(2j * math.pi) ** (1 + a0) * G_kD(1, Dx, tau)
            rec = ResidualRecord(f"trace:Trhat1[{name}]", abs(t1 - ex) / max(abs(ex), 1.0), cfg.tol("series"),
                                 tau=tau, note=GKW_NOTE)
            out.append(_numeric("divisor-trace", rec, "Tr^_1 = -(2 pi i)^(1+a) G_{1,D}"))
        zero = [((0, 0), 1)]
        from .numeric.torsion import Divisor
        for n in range(0, 7, 2):
            th = trace_divisor_hat(n, Divisor(zero), tau)
            rec = ResidualRecord(f"trace:Trhat{n}[0]=U^", _rel_unit(th, eval_ahform(u_hat(n, N), tau)),
                                 cfg.tol("series"), tau=tau)
            out.append(_numeric("divisor-trace", rec, "Tr^_2n([0]) = U^_2n"))
        # two numeric routes for G_{k,w}
        pts = [TorsionPoint(Fraction(i, 2), Fraction(j, 2)) for i in range(2) for j in range(2) if i or j]
        pts += [TorsionPoint(Fraction(i, 3), Fraction(j, 3)) for i in range(3) for j in range(3) if i or j]
        worst, where = 0.0, None
        for p in pts:
            for k in range(1, 9):
                a, b = G_kw(k, p, tau, "series"), G_kw(k, p, tau, "cauchy")
                r = abs(a - b) / max(abs(a), abs(b), 1.0)
                if r > worst:
                    worst, where = r, f"k={k}, w={p!r}"
        rec = ResidualRecord("gkw:series-vs-cauchy", worst, cfg.tol("gkw-route"), tau=tau, note=where)
        out.append(_numeric("divisor-trace", rec, "G_{k,w} by termwise series and by Cauchy integral"))
    return out


def suite_transform(cfg: RunConfig) -> list[dict]:
    from .numeric.transform import DEFAULT_TOLERANCES, sample_gammas, transformation_residuals

    rng = np.random.default_rng(cfg.seed)
    gammas = list(cfg.gammas) if cfg.gammas else sample_gammas(cfg.gamma_count, cfg.gamma_bound, rng)
    tols = {k: cfg.tol(k) for k in DEFAULT_TOLERANCES}
    recs = transformation_residuals(gammas, seed=cfg.seed, prec=cfg.q_precision, tolerances=tols)
    anchors = {
        "weight": "f(gamma tau) = (c tau + d)^k f(tau)",
        "modular": "theta/phi/V modular law with index factor e^(pi i m c z^2/(c tau + d))",
        "elliptic": "f(z + lambda tau + mu) = (-1)^(lambda+mu) q^(-m lambda^2) zeta^(-2 m lambda) f(z)",
    }
    return [_numeric("transform", r, anchors[r.check.split(":")[0]]) for r in recs]


RUNNERS = {
    "ramanujan": suite_ramanujan,
    "theta-identity": suite_theta,
    "v-identity": suite_v_identity,
    "cycle-lemma": suite_cycle,
    "lowering": suite_lowering,
    "depth": suite_depth,
    "lattice": suite_lattice,
    "divisor-trace": suite_divisor,
    "transform": suite_transform,
}


def run_suite(name: str, cfg: Optional[RunConfig] = None) -> list[dict]:
    cfg = (cfg or RunConfig()).validate()
    if name == "all":
        # suite-specific defaults apply inside each suite
        out = []
        for s in SUITES:
            out += RUNNERS[s](cfg)
        return out
    if name not in RUNNERS:
        raise ValueError(f"unknown suite {name!r}")
    return RUNNERS[name](cfg)


def all_passed(results: list[dict]) -> bool:
    return all(r["status"] == "pass" for r in results)
