"""Command-line front end.

Verbs: enumerate (exact counting terms), kappa (growth constants),
singularities (root families exported as CSV/SVG, optionally a rendered
figure), verify (cross-method agreement against the DP oracle), bench
(timing table).  Exact integers are always emitted as decimal strings;
JSON outputs carry a schema_version field.  Exit codes: 0 success, 1
failed verification, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

import mpmath as mp

from . import asymptotics, fast_enum, naive_enum, singularities
from .models import ALL_MODELS, ASYMMETRIC_MODELS, ModelId, SYMMETRIC_MODELS

SCHEMA_VERSION = 1
_ENV_PRECISION = "QKERNEL_PRECISION_BITS"


@dataclass
class Command:
    verb: str
    models: list
    options: dict = field(default_factory=dict)


def _models_arg(value: str):
    if value.lower() == "all":
        return list(ALL_MODELS)
    try:
        return [ModelId.from_string(value)]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _default_precision(fallback: int) -> int:
    raw = os.environ.get(_ENV_PRECISION)
    if not raw:
        return fallback
    try:
        bits = int(raw)
        if bits < 8:
            raise ValueError
    except ValueError:
        raise SystemExit(f"invalid {_ENV_PRECISION}={raw!r}: expected integer >= 8")
    return bits


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qkernel",
        description="Exact enumeration and singularity analysis of the five "
                    "singular quarter-plane walk models.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p_enum = sub.add_parser("enumerate", help="exact counting sequence")
    p_enum.add_argument("--model", type=_models_arg, default=list(ALL_MODELS))
    p_enum.add_argument("--terms", type=int, default=11)
    p_enum.add_argument("--method", choices=("fast", "iterated", "naive"), default="fast")
    p_enum.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_enum.add_argument("--output", default=None)
    p_enum.add_argument("--seed-check", action="store_true",
                        help="re-run the DP oracle on the first min(terms,30) terms")

    p_kappa = sub.add_parser("kappa", help="asymptotic growth constants")
    p_kappa.add_argument("--model", type=_models_arg, default=list(ALL_MODELS))
    p_kappa.add_argument("--digits", type=int, default=12)
    p_kappa.add_argument("--terms", type=int, default=None)
    p_kappa.add_argument("--precision-bits", type=int, default=None)
    p_kappa.add_argument("--format", choices=("text", "json"), default="text")
    p_kappa.add_argument("--output", default=None)

    p_sing = sub.add_parser("singularities", help="export singularity point sets")
    p_sing.add_argument("--model", type=_models_arg, required=True)
    p_sing.add_argument("--n", default="20",
                        help="iterate index, or range like 1:15")
    p_sing.add_argument("--plane", choices=("q", "t"), default="q")
    p_sing.add_argument("--family", type=int, choices=(1, 2, 3, 4), default=1,
                        help="omega family index for models D and E")
    p_sing.add_argument("--format", choices=("csv", "svg"), default="csv")
    p_sing.add_argument("--output", default=None)
    p_sing.add_argument("--plot", default=None,
                        help="also render a matplotlib figure to this path")
    p_sing.add_argument("--precision-bits", type=int, default=None)

    p_verify = sub.add_parser("verify", help="cross-method agreement checks")
    p_verify.add_argument("--model", type=_models_arg, default=list(ALL_MODELS))
    p_verify.add_argument("--terms", type=int, default=50)

    p_bench = sub.add_parser("bench", help="timing table")
    p_bench.add_argument("--model", type=_models_arg, default=[ModelId.A])
    p_bench.add_argument("--sizes", default="100,200,400")
    p_bench.add_argument("--methods", default="naive,iterated,fast")
    return parser


def parse(argv) -> Command:
    """Parse an argument vector into a Command; exits with code 2 on bad usage."""
    ns = build_parser().parse_args(argv)
    opts = {k: v for k, v in vars(ns).items() if k not in ("verb", "model")}
    models = getattr(ns, "model", list(ALL_MODELS))
    return Command(ns.verb, models, opts)


def _emit(text: str, output):
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run_enumerate(models, opts) -> int:
    terms = opts["terms"]
    if terms < 1:
        raise SystemExit("--terms must be >= 1")
    method = opts["method"]
    results = []
    for model in models:
        counts = fast_enum.enumerate_counts(model, terms - 1, method)
        if opts.get("seed_check"):
            k = min(terms, 30)
            oracle = naive_enum.count_all(model, k - 1)
            if counts[:k] != oracle:
                print(f"seed-check FAILED for model {model.value}", file=sys.stderr)
                return 1
        results.append((model, counts))
    fmt = opts["format"]
    if fmt == "text":
        lines = [f"{m.value}: " + ", ".join(str(c) for c in counts)
                 for m, counts in results]
        _emit("\n".join(lines) + "\n", opts.get("output"))
    elif fmt == "csv":
        lines = ["model,n,count"]
        for m, counts in results:
            lines.extend(f"{m.value},{n},{c}" for n, c in enumerate(counts))
        _emit("\n".join(lines) + "\n", opts.get("output"))
    else:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "enumerate",
            "method": method,
            "sequences": [
                {"model": m.value, "terms": [str(c) for c in counts]}
                for m, counts in results
            ],
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", opts.get("output"))
    return 0


def _run_kappa(models, opts) -> int:
    digits = opts["digits"]
    precision = opts.get("precision_bits") or _default_precision(max(128, 4 * digits + 32))
    entries = []
    for model in models:
        if model in SYMMETRIC_MODELS:
            terms = opts.get("terms") or max(12, digits + 6)
            res = asymptotics.kappa_symmetric(model, terms, precision)
            entries.append({
                "model": model.value,
                "estimate": mp.nstr(res.estimate, digits),
                "tail_bound": mp.nstr(res.tail_bound, 3),
                "terms": res.terms_used,
                "growth_base": res.growth_base,
                "subdominant_base": mp.nstr(res.subdominant_base, 8),
                "rigorous": True,
            })
        elif model is ModelId.E:
            res = asymptotics.kappa_E(opts.get("terms") or 40, precision)
            entries.append({
                "model": "E",
                "estimate": mp.nstr(res.estimate, digits),
                "interval": [mp.nstr(res.interval[0], digits), mp.nstr(res.interval[1], digits)],
                "bracket": ["122/525", "7/10"],
                "growth_base": 4,
                "rigorous": True,
            })
        else:
            est = asymptotics.kappa_D_empirical(600, max(64, precision))
            entries.append({
                "model": "D",
                "estimate": mp.nstr(est, min(digits, 6)),
                "growth": "3^n/sqrt(n)",
                "rigorous": False,
                "note": "empirical extrapolation; only the bracket [0, sqrt(3/pi)] is proven",
            })
    if opts["format"] == "json":
        payload = {"schema_version": SCHEMA_VERSION, "command": "kappa", "constants": entries}
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", opts.get("output"))
    else:
        lines = []
        for e in entries:
            extra = " (empirical)" if not e["rigorous"] else ""
            tail = f" tail<{e['tail_bound']}" if "tail_bound" in e else ""
            lines.append(f"kappa_{e['model']} = {e['estimate']}{tail}{extra}")
        _emit("\n".join(lines) + "\n", opts.get("output"))
    return 0


def _parse_n_range(text: str):
    if ":" in text:
        lo, hi = text.split(":", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _run_singularities(models, opts) -> int:
    precision = opts.get("precision_bits") or _default_precision(256)
    ns = _parse_n_range(opts["n"])
    rootsets = []
    for model in models:
        for n in ns:
            if model in SYMMETRIC_MODELS:
                poly = singularities.sigma_poly(model, n)
                family = "sigma"
            else:
                poly = singularities.omega_poly(model, opts["family"], n)
                family = f"omega{opts['family']}"
            rs = singularities.find_roots(poly, precision, model=model.value,
                                          family=family, n=n)
            if opts["plane"] == "t":
                rs = singularities.rootset_to_t_plane(rs)
            rootsets.append(rs)
    out = opts.get("output")
    if out is None:
        models_tag = "".join(m.value for m in models)
        out = f"singularities_{models_tag}_{opts['plane']}.{opts['format']}"
    singularities.export_points(rootsets, opts["format"], out)
    print(f"wrote {out}")
    if opts.get("plot"):
        from .plotting import render_rootsets

        render_rootsets(rootsets, opts["plot"])
        print(f"wrote {opts['plot']}")
    return 0


def _run_verify(models, opts) -> int:
    terms = opts["terms"]
    failures = 0
    for model in models:
        naive = naive_enum.count_all(model, terms - 1)
        iterated = fast_enum.enumerate_counts(model, terms - 1, "iterated")
        fast = fast_enum.enumerate_counts(model, terms - 1, "fast")
        ok = naive == iterated == fast
        axis_ok = True
        if model in SYMMETRIC_MODELS:
            from .kernel_iter import gf_axis_symmetric

            axis = gf_axis_symmetric(model, terms).integer_coeffs()
            axis_ok = axis == naive_enum.count_axis(model, terms - 1, "y_axis")
        status = "OK" if ok and axis_ok else "MISMATCH"
        print(f"model {model.value}: naive==iterated==fast up to N={terms - 1}: {status}")
        if not (ok and axis_ok):
            failures += 1
    return 1 if failures else 0


def _run_bench(models, opts) -> int:
    sizes = [int(s) for s in opts["sizes"].split(",") if s]
    methods = tuple(m.strip() for m in opts["methods"].split(",") if m.strip())
    print(f"{'model':5} {'N':>6} {'method':>9} {'seconds':>10} {'peak_bytes':>12}")
    all_rows = []
    for model in models:
        rows = fast_enum.benchmark(model, sizes, methods)
        all_rows.extend(rows)
        for r in rows:
            print(f"{r['model']:5} {r['N']:>6} {r['method']:>9} "
                  f"{r['seconds']:>10.3f} {r['bytes']:>12}")
    slope = fast_enum.loglog_slope(all_rows, "fast")
    if slope is not None:
        print(f"fast-method log-log slope: {slope:.2f} "
              "(theory: ~3 bit-complexity exponent; naive is ~4)")
    return 0


def run(cmd: Command) -> int:
    """Execute a parsed Command and return the process exit code."""
    dispatch = {
        "enumerate": _run_enumerate,
        "kappa": _run_kappa,
        "singularities": _run_singularities,
        "verify": _run_verify,
        "bench": _run_bench,
    }
    return dispatch[cmd.verb](cmd.models, cmd.options)


def main(argv=None) -> int:
    cmd = parse(sys.argv[1:] if argv is None else argv)
    return run(cmd)


if __name__ == "__main__":
    sys.exit(main())
