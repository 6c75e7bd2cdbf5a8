"""Acceptance criteria, one test per criterion, at the stated tolerances.

Each test prints a ``criterion N: PASS|FAIL`` line; the lines are repeated
in a summary section at the end of the pytest run.
"""

from fractions import Fraction

import numpy as np

from quasitrace.ahform import AHForm, lowering
from quasitrace.arith import GaussianRational, partitions
from quasitrace.jacobi import verify_u_identity, verify_v_identity
from quasitrace.qseries import PiScalar, QSeries
from quasitrace.suites import RunConfig, run_suite

TOL = {
    "series": 1e-8,
    "theta-derivative": 1e-6,
    "lattice-sum": 1e-6,
    "lattice": 1e-3,
    "divisor-trace": 1e-6,
    "odd-trace": 1e-8,
    "gkw-route": 1e-8,
}


def cfg(**kw):
    return RunConfig(tolerances=dict(TOL), **kw)


def failures(results):
    return [r["check"] for r in results if r["status"] != "pass"]


def worst(results):
    vals = [r["residual"] / r["tolerance"] for r in results if "residual" in r]
    return max(vals) if vals else 0.0


def test_criterion_01_closed_forms(criterion):
    res = [r for r in run_suite("ramanujan", cfg(q_precision=200)) if r["check"].startswith("closed-form")]
    assert len(res) == 8
    assert all(r["checked_orders"]["q"] == 199 for r in res)
    bad = failures(res)
    criterion(1, not bad, f"U0..U6, V0..V6 closed forms exact to q^199; failed={bad}")
    assert not bad


def test_criterion_02_u_v_traces(criterion):
    res = run_suite("ramanujan", cfg(q_precision=100, max_n=8))
    res = [r for r in res if r["check"].startswith(("U=Tr", "V=Tr"))]
    assert len(res) == 18
    bad = failures(res)
    criterion(2, not bad, f"U_2n = Tr_n(psi1), V_2n = Tr_n(psi2), n <= 8, q^99; failed={bad}")
    assert not bad


def test_criterion_03_theta_identity(criterion):
    (r,) = run_suite("theta-identity", cfg(q_precision=51, w_precision=24))
    ok = r["status"] == "pass" and r["checked_orders"] == {"w": 25, "q": 50}
    criterion(3, ok, f"phi*(G2) = theta/(-2 pi eta^3) through w^25, q^50; first_failure={r['first_failure']}")
    assert ok


def test_criterion_04_u_v_identities(criterion):
    reps = [verify_u_identity(51, 24), verify_v_identity(51, 24)]
    ok = all(rep.passed and rep.checked_orders == {"w": 24, "q": 50} for rep in reps)
    criterion(4, ok, "U = theta/(-2 eta^3) (odd), V = theta(2z)/(2 theta(z)) (even) through w^24, q^50; "
                     f"failures={[rep.first_failure for rep in reps if not rep.passed]}")
    assert ok


def test_criterion_05_lowering(criterion):
    res = run_suite("lowering", cfg(q_precision=100, max_n=6))
    names = {r["check"] for r in res}
    need = {f"L(e{k})" for k in range(1, 7)} | {f"L(U^{2 * n})" for n in range(1, 7)} \
        | {f"L(V^{2 * n})" for n in range(1, 7)} | {"U^0=2 pi i", "V^0=1"}
    assert need <= names
    bad = failures(res)
    criterion(5, not bad, f"L(e_k), L(U^_2n), L(V^_2n) recursions and base values at q^99; failed={bad}")
    assert not bad


def test_criterion_06_depth(criterion):
    res = run_suite("depth", cfg(q_precision=100, max_n=8))
    res = [r for r in res if r["check"] == "depth" or r["check"].startswith("lead(")]
    bad = failures(res)
    notes = [n for r in res if r["check"].startswith("lead(U^") for n in r.get("notes", [])]
    criterion(6, not bad, f"depth(e_k)=k, depth(U^)=depth(V^)=n, V^ lead 3^n pi^n/(2^n n!); failed={bad}; "
                          f"U^ lead note: {notes[-1] if notes else None}")
    assert not bad


def test_criterion_07_tau_bar_limits(criterion):
    res = [r for r in run_suite("depth", cfg(q_precision=100, max_n=8)) if r["check"].startswith("limit(")]
    assert len([r for r in res if r["check"] != "limit(G2^)"]) == 18
    bad = failures(res)
    criterion(7, not bad, f"tau-bar limits of U^_2n, V^_2n for n <= 8; failed={bad}")
    assert not bad


def test_criterion_08_cycle_lemma(criterion):
    res = run_suite("cycle-lemma", cfg(max_n=12, q_precision=50))
    spec = [r for r in res if r["check"] in
            ("cycle-lemma:zero", "cycle-lemma:one", "cycle-lemma:bernoulli-eisenstein")]
    assert len(spec) == 3 and all(r["checked_orders"]["w"] == 12 for r in spec)
    bad = failures(res)
    criterion(8, not bad, f"three specializations through w^12; failed={bad}")
    assert not bad


def test_criterion_09_lattice(criterion):
    res = run_suite("lattice", cfg(lattice_radius=400, taus=(1j, 2j, 0.5 + 1j)))
    p = [r for r in res if r["check"] in ("lattice:p2", "lattice:p3")]
    e = [r for r in res if r["check"] in ("lattice:e1", "lattice:e2")]
    assert len(p) == 6 and len(e) == 6
    assert all(r["tolerance"] == 1e-6 for r in p) and all(r["tolerance"] == 1e-3 for r in e)
    bad = failures(res)
    criterion(9, not bad, f"p2,p3 max residual {max(r['residual'] for r in p):.2e} (< 1e-6), "
                          f"e1,e2 max {max(r['residual'] for r in e):.2e} (< 1e-3); failed={bad}")
    assert not bad


def test_criterion_10_divisor_trace(criterion):
    res = run_suite("divisor-trace", cfg(q_precision=100, taus=(1j, 1 / 3 + 1.2j)))
    even = [r for r in res if r["check"].startswith("trace:Tr") and "[D2]" in r["check"] and "|" not in r["check"]
            and "hat" not in r["check"]]
    odd = [r for r in res if r["check"].startswith("trace:|Tr")]
    low = [r for r in res if r["check"].startswith(("trace:Trhat0[", "trace:Trhat1[")) and "=" not in r["check"]]
    assert len(even) == 10 and len(odd) == 10 and low
    assert all(r["tolerance"] == 1e-6 for r in even) and all(r["tolerance"] == 1e-8 for r in odd)
    bad = failures(res)
    criterion(10, not bad, f"Tr_2n(D2) vs V_2n/(4^n(2n)!) max {max(r['residual'] for r in even):.2e}, "
                           f"odd |Tr| max {max(r['residual'] for r in odd):.2e}, Trhat0/Trhat1 on "
                           f"{len(low) // 4} divisors (5 expected); failed={bad}")
    assert not bad


def test_criterion_11_transformations(criterion):
    res = run_suite("transform", cfg(q_precision=100, gamma_count=25, gamma_bound=5, seed=0))
    gammas = {tuple(r["gamma"]) for r in res}
    per_gamma = len(res) // 25
    assert len(res) == 25 * per_gamma
    assert all(max(map(abs, g)) <= 5 and g[0] * g[3] - g[1] * g[2] == 1 for g in gammas)
    names = {r["check"] for r in res}
    for need in ["weight:E4", "weight:E6", "weight:G2hat", "weight:e1", "weight:e2", "weight:e3",
                 "weight:Uhat6", "weight:Vhat6", "weight:Trhat3[D2]", "modular:|theta|", "elliptic:phi"]:
        assert need in names
    for r in res:
        key = 1e-6 if r["check"].startswith("weight:Trhat") else 1e-8
        assert r["tolerance"] == key
    bad = failures(res)
    criterion(11, not bad, f"{len(res)} residuals over 25 seeded gammas, worst residual/tolerance "
                           f"{worst(res):.2e}; failed={len(bad)}")
    assert not bad


# -- criterion 12: randomized property suites with fixed seeds ---------------------

def random_qseries(rng, prec, min_val=0):
    coeffs = {}
    for _ in range(int(rng.integers(1, 8))):
        k = int(rng.integers(min_val, prec))
        re, im = (Fraction(int(x), int(rng.integers(1, 7))) for x in rng.integers(-20, 21, 2))
        coeffs[k] = PiScalar({int(rng.integers(-2, 3)): GaussianRational(re, im)})
    return QSeries(coeffs, 0, prec)


def pentagonal_counts(nmax):
    p = [1] + [0] * nmax
    for n in range(1, nmax + 1):
        k = 1
        while k * (3 * k - 1) // 2 <= n:
            s = 1 if k % 2 else -1
            p[n] += s * p[n - k * (3 * k - 1) // 2]
            if k * (3 * k + 1) // 2 <= n:
                p[n] += s * p[n - k * (3 * k + 1) // 2]
            k += 1
    return p


def property_ring_axioms(rng):
    for _ in range(40):
        a, b, c = (random_qseries(rng, 40) for _ in range(3))
        if not (a + b == b + a and a * b == b * a and (a * b) * c == a * (b * c)
                and a * (b + c) == a * b + a * c and (a + b) + c == a + (b + c)):
            return False
    return True


def property_nilpotency(rng):
    for _ in range(30):
        depth = int(rng.integers(0, 6))
        f = AHForm([random_qseries(rng, 20) for _ in range(depth + 1)])
        g = f
        for _ in range(f.depth + 1):
            g = lowering(g)
        if not g.is_zero():
            return False
    res = [r for r in run_suite("lowering", cfg(q_precision=100)) if r["check"] == "L-nilpotent"]
    return all(r["status"] == "pass" for r in res)


def property_precision(rng):
    for _ in range(40):
        a, b = random_qseries(rng, int(rng.integers(5, 40))), random_qseries(rng, int(rng.integers(5, 40)))
        prod = a * b
        if prod.prec > min(a.prec + b.valuation, b.prec + a.valuation):
            return False
        exact = QSeries(dict(a.items())) * QSeries(dict(b.items()))
        if any(prod.coeff(n) != exact.coeff(n) for n in range(prod.prec)):
            return False
    return True


def property_partition_counts(rng):
    ref = pentagonal_counts(40)
    ns = sorted(set(int(x) for x in rng.integers(0, 41, 12)) | {0, 4, 8})
    return all(sum(1 for _ in partitions(n)) == ref[n] for n in ns)


def property_gkw_routes(rng):
    from quasitrace.numeric.torsion import G_kw, TorsionPoint

    for _ in range(6):
        tau = complex(rng.uniform(-0.5, 0.5), rng.uniform(0.7, 1.8))
        N = int(rng.integers(2, 6))
        p = TorsionPoint(Fraction(int(rng.integers(0, N)), N), Fraction(int(rng.integers(1, N)), N))
        for k in range(1, 9):
            a, b = G_kw(k, p, tau, "series"), G_kw(k, p, tau, "cauchy")
            if abs(a - b) / max(abs(a), abs(b), 1) >= TOL["gkw-route"]:
                return False
    return True


PROPERTIES = [
    ("ring axioms", property_ring_axioms),
    ("L-nilpotency", property_nilpotency),
    ("precision tracking", property_precision),
    ("partition-count oracle", property_partition_counts),
    ("two-route G_kw agreement", property_gkw_routes),
]


def test_criterion_12_properties(criterion):
    outcome = {}
    for seed, (name, prop) in enumerate(PROPERTIES):
        outcome[name] = prop(np.random.default_rng(1000 + seed))
    bad = [k for k, v in outcome.items() if not v]
    criterion(12, not bad, f"{', '.join(outcome)} with seeds 1000..1004; failed={bad}")
    assert not bad
