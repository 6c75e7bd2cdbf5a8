"""Command-line interface: ``quasitrace series ...`` and ``quasitrace verify ...``.

Exit codes: 0 success / all checks pass, 1 a check failed or an internal
error occurred, 2 invalid usage or parameters.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from typing import Optional, Sequence

from .suites import SUITES, TOLERANCE_KEYS, RunConfig, all_passed, run_suite

SERIES_KINDS = ("G", "E", "eta", "U", "V", "trace")


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r}") from None


def parse_gammas(text: str) -> tuple:
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            g = tuple(int(x) for x in chunk.split(","))
        except ValueError:
            raise UsageError(f"cannot parse matrix {chunk!r}") from None
        if len(g) != 4 or g[0] * g[3] - g[1] * g[2] != 1:
            raise UsageError(f"{chunk!r} is not an SL2(Z) matrix a,b,c,d")
        out.append(g)
    return tuple(out)


def _floats(text: str) -> tuple:
    try:
        return tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"cannot parse list of numbers {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--terms", type=int, help="q-precision N (default 100)")
    common.add_argument("--format", choices=("json", "tsv"), help="output format (default json)")
    common.add_argument("--out", help="write output to this path instead of stdout")
    common.add_argument("--config", help="JSON file with defaults; flags override it")

    p = argparse.ArgumentParser(prog="quasitrace", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("series", parents=[common], help="print an exact q-series")
    s.add_argument("kind", choices=SERIES_KINDS)
    s.add_argument("--weight", type=int, help="weight 2k for G and E")
    s.add_argument("--index", type=int, help="even index 2n for U and V")
    s.add_argument("--n", type=int, help="trace index for 'trace'")
    s.add_argument("--psi", default="psiJ", help="partition weight for 'trace' (psiJ, psi1, psi2)")

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--worder", type=int, help="w-precision (default 24)")
    v.add_argument("--radius", type=int, help="lattice radius R (default 400)")
    v.add_argument("--s-ladder", help="comma-separated s values (default 0.4,0.2,0.1,0.05)")
    v.add_argument("--tau", action="append", help="tau sample, e.g. 0.5+1i (repeatable)")
    v.add_argument("--gammas", help="explicit matrices 'a,b,c,d;a,b,c,d' instead of sampling")
    v.add_argument("--checks", type=int, help="number of sampled gammas (default 25)")
    v.add_argument("--gamma-bound", type=int, help="entry bound for sampled gammas (default 5)")
    v.add_argument("--seed", type=int, help="seed for gamma/tau/z sampling (default 0)")
    v.add_argument("--max-n", type=int, help="largest index checked (suite-specific default)")
    v.add_argument("--family", choices=("all", "e", "U", "V"), help="lowering family")
    for key in TOLERANCE_KEYS:
        v.add_argument(f"--tol-{key}", type=float, dest=f"tol_{key.replace('-', '_')}",
                       help=f"tolerance for {key} checks (default {TOLERANCE_KEYS[key]:g})")
    return p


def _load_config(path: Optional[str]) -> dict:
    if not path:
        return {}
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("config file must hold a JSON object")
    return data


def _pick(args, conf: dict, name: str, conf_key: Optional[str] = None, default=None):
    val = getattr(args, name, None)
    if val is not None:
        return val
    return conf.get(conf_key or name.replace("_", "-"), default)


def run_config(args, conf: dict) -> RunConfig:
    cfg = RunConfig()
    terms = _pick(args, conf, "terms")
    worder = _pick(args, conf, "worder")
    radius = _pick(args, conf, "radius")
    ladder = _pick(args, conf, "s_ladder")
    taus = args.tau if args.tau else conf.get("tau")
    gammas = _pick(args, conf, "gammas")
    tols = dict(TOLERANCE_KEYS)
    tols.update(conf.get("tolerances", {}))
    for key in TOLERANCE_KEYS:
        val = getattr(args, f"tol_{key.replace('-', '_')}", None)
        if val is not None:
            tols[key] = val
    return replace(
        cfg,
        q_precision=int(terms) if terms is not None else cfg.q_precision,
        w_precision=int(worder) if worder is not None else cfg.w_precision,
        lattice_radius=int(radius) if radius is not None else cfg.lattice_radius,
        s_ladder=_floats(ladder) if isinstance(ladder, str) else tuple(ladder or cfg.s_ladder),
        taus=tuple(parse_complex(str(t)) for t in taus) if taus else None,
        gammas=parse_gammas(gammas) if isinstance(gammas, str) else (tuple(map(tuple, gammas)) if gammas else None),
        gamma_count=int(_pick(args, conf, "checks", default=cfg.gamma_count)),
        gamma_bound=int(_pick(args, conf, "gamma_bound", default=cfg.gamma_bound)),
        seed=int(_pick(args, conf, "seed", default=cfg.seed)),
        max_n=_pick(args, conf, "max_n"),
        family=_pick(args, conf, "family", default="all"),
        tolerances=tols,
    )


def _series(args, conf: dict):
    from .modular import dedekind_eta, eisenstein_E, eisenstein_G
    from .traces import ramanujan_U, ramanujan_V, trace_E

    N = int(_pick(args, conf, "terms", default=100))
    if N <= 0:
        raise UsageError("--terms must be positive")
    kind = args.kind

    def need(name):
        val = getattr(args, name)
        if val is None:
            raise UsageError(f"series {kind} requires --{name}")
        return val

    if kind == "G":
        return eisenstein_G(need("weight"), N)
    if kind == "E":
        return eisenstein_E(need("weight"), N)
    if kind == "eta":
        return dedekind_eta(N)
    if kind == "U":
        return ramanujan_U(need("index"), N)
    if kind == "V":
        return ramanujan_V(need("index"), N)
    n = need("n")
    return trace_E(n, args.psi, N)


def _fmt_pi(c) -> list:
    return [[p, str(g.re), str(g.im)] for p, g in sorted(c.terms.items())]


def series_tsv(f) -> str:
    rows = ["exponent\tpi_degree\tre\tim"]
    for n, c in f.items():
        for p, g in sorted(c.terms.items()):
            rows.append(f"{f.offset + n}\t{p}\t{g.re}\t{g.im}")
    rows.append(f"# precision\t{f.prec}")
    return "\n".join(rows) + "\n"


def results_tsv(results: list[dict]) -> str:
    rows = ["suite\tcheck\tstatus\tdetail"]
    for r in results:
        if "residual" in r:
            detail = f"residual={r['residual']:.3e} tol={r['tolerance']:.1e}"
            if r.get("tau") is not None:
                detail += f" tau={r['tau'][0]:.6g}{r['tau'][1]:+.6g}i"
            if r.get("gamma") is not None:
                detail += " gamma=" + ",".join(map(str, r["gamma"]))
        else:
            detail = json.dumps(r.get("first_failure"), separators=(",", ":"))
        rows.append(f"{r['suite']}\t{r['check']}\t{r['status']}\t{detail}")
    return "\n".join(rows) + "\n"


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on malformed flags
    try:
        conf = _load_config(args.config)
        fmt = args.format or conf.get("format", "json")
        if args.command == "series":
            f = _series(args, conf)
            text = series_tsv(f) if fmt == "tsv" else f.dumps() + "\n"
            _emit(text, args.out)
            return 0
        cfg = run_config(args, conf).validate()
        results = run_suite(args.suite, cfg)
        ok = all_passed(results)
        if fmt == "tsv":
            text = results_tsv(results)
        else:
            body = {"suite": args.suite, "status": "pass" if ok else "fail",
                    "checks": len(results), "failed": sum(r["status"] != "pass" for r in results),
                    "results": results}
            text = json.dumps(body, indent=1) + "\n"
        _emit(text, args.out)
        return 0 if ok else 1
    except (UsageError, ValueError) as exc:
        print(f"quasitrace: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"quasitrace: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
