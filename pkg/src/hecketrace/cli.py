"""Command-line front end: single traces, character listings, trace forms,
grid tables with an on-disk cache, and the self-check suite.

Exit codes: 0 success, 1 self-check failure, 2 invalid flags, 3 integrality
assertion failure (an engine bug surfaced, never silent).  Exact values are
rendered as JSON {"int": v} / {"rat": "p/q"} / {"m": m, "coeffs": [...]};
floats appear only next to exact values and only under --approx.
"""

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import __version__
from .atkin_lehner import ALQuery, trace_tn_wl
from .characters import DirichletCharacter, enumerate_characters, unit_group
from .classnum import hurwitz_class_number, primitive_hurwitz
from .cyclotomic import CyclotomicNumber
from .gamma0 import IntegralityError, TraceQuery, trace_cusp, trace_full
from .gamma1 import trace_cusp_gamma1, trace_full_gamma1
from .level4 import trace_form
from .oracles import consistency_suite

CACHE_ENV = "HECKETRACE_CACHE"
EXIT_SELFCHECK = 1
EXIT_USAGE = 2
EXIT_INTEGRALITY = 3


def value_json(x):
    """Canonical JSON for an exact value (minimal form, deterministic)."""
    if isinstance(x, CyclotomicNumber):
        return x.to_json()
    if isinstance(x, int):
        return {"int": x}
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return {"int": int(x)}
        return {"rat": f"{x.numerator}/{x.denominator}"}
    raise TypeError(f"cannot encode {type(x).__name__}")


def _approx(x, digits):
    if isinstance(x, CyclotomicNumber):
        if x.is_rational():
            return round(float(x.rational_value()), digits)
        z = x.to_complex()
        return [round(z.real, digits), round(z.imag, digits)]
    return round(float(x), digits)


def _emit(record, args):
    if getattr(args, "text", False):
        for key, val in record.items():
            print(f"{key}: {json.dumps(val, sort_keys=True)}")
    else:
        print(json.dumps(record, sort_keys=True))


def _usage_error(msg: str):
    print(f"error: {msg}", file=sys.stderr)
    sys.exit(EXIT_USAGE)


def _resolve_character(level: int, spec: str) -> DirichletCharacter:
    chars = enumerate_characters(level)
    if spec in (None, "trivial"):
        return chars[0]
    idx = int(spec)
    if not 0 <= idx < len(chars):
        _usage_error(f"character index {idx} out of range 0..{len(chars) - 1}")
    return chars[idx]


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, round(1000 * (time.perf_counter() - t0), 3)


# --- subcommands -------------------------------------------------------------

def cmd_trace(args):
    chi = _resolve_character(args.level, args.char)
    query = TraceQuery(args.level, args.weight, chi, args.index)
    engine = trace_full if args.space == "MS" else trace_cusp
    result, ms = _timed(lambda: engine(query))
    record = {
        "query": {"level": args.level, "weight": args.weight, "index": args.index,
                  "char": list(chi.exponents), "space": args.space},
        "result": value_json(result.value),
        "wall_ms": ms,
    }
    if args.breakdown:
        record["breakdown"] = {"elliptic": value_json(result.elliptic),
                               "cusp": value_json(result.cusp),
                               "delta": value_json(result.delta)}
    if args.approx is not None:
        record["approx"] = _approx(result.value, args.approx)
    _emit(record, args)


def cmd_trace_al(args):
    query = ALQuery(args.level, args.ell, args.weight, args.index)
    value, ms = _timed(lambda: trace_tn_wl(query))
    record = {
        "query": {"level": args.level, "ell": args.ell, "weight": args.weight,
                  "index": args.index},
        "result": value_json(value),
        "wall_ms": ms,
    }
    if args.approx is not None:
        record["approx"] = _approx(value, args.approx)
    _emit(record, args)


def cmd_trace_gamma1(args):
    engine = trace_full_gamma1 if args.space == "MS" else trace_cusp_gamma1
    value, ms = _timed(lambda: engine(args.level, args.weight, args.index))
    record = {
        "query": {"level": args.level, "weight": args.weight, "index": args.index,
                  "space": args.space},
        "result": value_json(value),
        "wall_ms": ms,
    }
    _emit(record, args)


def cmd_trace_form(args):
    chi = _resolve_character(args.level, args.char) if args.group == "gamma0" else None
    series, ms = _timed(lambda: trace_form(
        args.group, args.level, args.weight, args.precision,
        character=chi, parity=args.parity))
    if args.format == "qseries":
        print(series.q_series_text())
        return
    record = series.to_json(value_encoder=value_json)
    record["wall_ms"] = ms
    _emit(record, args)


def cmd_classnum(args):
    fn = primitive_hurwitz if args.h0 else hurwitz_class_number
    record = {"query": {"D": args.D, "kind": "h0" if args.h0 else "H"},
              "result": value_json(fn(args.D))}
    _emit(record, args)


def cmd_char(args):
    grp = unit_group(args.level)
    record = {
        "modulus": args.level,
        "generators": list(grp.generators),
        "orders": list(grp.orders),
        "characters": [dict(index=i, **chi.to_json())
                       for i, chi in enumerate(enumerate_characters(args.level))],
    }
    _emit(record, args)


def cmd_selfcheck(args):
    report = consistency_suite(max_level=args.max_level, max_weight=args.max_weight,
                               max_index=args.max_index,
                               classnum_bound=args.classnum_bound)
    print(report.summary())
    for key, left, right in report.failures[:50]:
        print(f"  FAIL {key}: {left} != {right}")
    if not report.ok:
        sys.exit(EXIT_SELFCHECK)


# --- grid tables with a resumable cache --------------------------------------

def _parse_grid(spec: str) -> dict:
    """Parse "N=1..10,k=2..6:2,n=1..10" into {"N": [...], "k": [...], "n": [...]}."""
    axes = {}
    for part in spec.split(","):
        name, _, rng = part.partition("=")
        name = name.strip()
        if name not in ("N", "k", "n"):
            raise ValueError(f"unknown grid axis {name!r}")
        rng, _, step = rng.partition(":")
        lo, _, hi = rng.partition("..")
        lo, hi = int(lo), int(hi) if hi else int(lo)
        axes[name] = list(range(lo, hi + 1, int(step) if step else 1))
    for axis in ("N", "k", "n"):
        axes.setdefault(axis, [1])
    return axes


def _cell_key(space, N, k, n, char_exps):
    chi = "triv" if char_exps is None else "e" + "_".join(map(str, char_exps))
    return f"{space}-N{N}-k{k}-n{n}-{chi}"


def _compute_cell(task):
    space, N, k, n, char_exps = task
    if space == "gamma1":
        value = trace_cusp_gamma1(N, k, n)
        result = value_json(value)
    else:
        chi = (enumerate_characters(N)[0] if char_exps is None
               else DirichletCharacter(N, char_exps))
        result = value_json(trace_cusp(TraceQuery(N, k, chi, n)).value)
    return {"query": {"space": space, "level": N, "weight": k, "index": n,
                      "char": list(char_exps) if char_exps is not None else "trivial"},
            "result": result, "engine": __version__}


def _cache_load(path: Path):
    try:
        record = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if record.get("engine") != __version__:
        return None  # version mismatch forces recompute, never reuse
    return record


def _cache_store(path: Path, record):
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(record, sort_keys=True))
    os.replace(tmp, path)  # atomic per entry


def cmd_table(args):
    axes = _parse_grid(args.grid)
    tasks = {}
    for N in axes["N"]:
        for k in axes["k"]:
            for n in axes["n"]:
                if args.space == "gamma1":
                    tasks[_cell_key("gamma1", N, k, n, None)] = ("gamma1", N, k, n, None)
                elif args.chars == "all-valid-parity":
                    for chi in enumerate_characters(N, parity=(-1) ** k):
                        key = _cell_key("gamma0", N, k, n, chi.exponents)
                        tasks[key] = ("gamma0", N, k, n, chi.exponents)
                else:
                    tasks[_cell_key("gamma0", N, k, n, None)] = ("gamma0", N, k, n, None)

    if args.format == "csv" and args.chars == "all-valid-parity":
        _usage_error("CSV output is restricted to integer-valued grids "
                     "(trivial character or gamma1); use --format json")

    cache_dir = args.cache or os.environ.get(CACHE_ENV)
    cache = Path(cache_dir) if cache_dir else None
    if cache:
        cache.mkdir(parents=True, exist_ok=True)

    records = {}
    pending = []
    for key, task in tasks.items():
        if cache:
            hit = _cache_load(cache / f"{key}.json")
            if hit is not None:
                records[key] = hit
                continue
        pending.append((key, task))

    if pending:
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                for (key, _), record in zip(pending, pool.map(
                        _compute_cell, [t for _, t in pending])):
                    records[key] = record
        else:
            for key, task in pending:
                records[key] = _compute_cell(task)
        if cache:
            for key, _ in pending:
                _cache_store(cache / f"{key}.json", records[key])

    def sort_key(key):
        q = records[key]["query"]
        return (q["space"], q["level"], q["weight"], q["index"], str(q["char"]))

    ordered = sorted(records, key=sort_key)  # deterministic key order
    if args.format == "csv":
        print("space,level,weight,index,char,trace")
        for key in ordered:
            rec = records[key]
            q = rec["query"]
            val = rec["result"]
            if "int" not in val:
                _usage_error("CSV output is restricted to integer-valued grids; "
                             "use --format json")
            print(f"{q['space']},{q['level']},{q['weight']},{q['index']},"
                  f"{q['char']},{val['int']}")
    else:
        for key in ordered:
            print(json.dumps(records[key], sort_keys=True))
    print(f"# {len(ordered)} cells ({len(pending)} computed, "
          f"{len(ordered) - len(pending)} cached)", file=sys.stderr)


# --- parser ------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="hecketrace",
        description="Exact traces of Hecke and Atkin-Lehner operators.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trace", help="trace of T_n on S_k(N, chi) (or M_k + S_k)")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--char", default="trivial",
                   help="character index from `char list`, or 'trivial'")
    p.add_argument("--space", choices=("S", "MS"), default="S")
    p.add_argument("--breakdown", action="store_true")
    p.add_argument("--approx", type=int, metavar="DIGITS")
    p.add_argument("--text", action="store_true", help="plain text instead of JSON")
    p.set_defaults(fn=cmd_trace)

    p = sub.add_parser("trace-al", help="trace of T_n composed with W_ell on S_k(N)")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--approx", type=int, metavar="DIGITS")
    p.add_argument("--text", action="store_true")
    p.set_defaults(fn=cmd_trace_al)

    p = sub.add_parser("trace-gamma1", help="trace of T_n on S_k(Gamma_1(N))")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--space", choices=("S", "MS"), default="S")
    p.add_argument("--text", action="store_true")
    p.set_defaults(fn=cmd_trace_gamma1)

    p = sub.add_parser("trace-form", help="q-expansion of the trace form")
    p.add_argument("--group", choices=("gamma0", "gamma1"), default="gamma0")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--precision", type=int, required=True)
    p.add_argument("--char", default="trivial")
    p.add_argument("--parity", choices=("all", "odd", "even"), default="all")
    p.add_argument("--format", choices=("json", "qseries"), default="json")
    p.add_argument("--text", action="store_true")
    p.set_defaults(fn=cmd_trace_form)

    p = sub.add_parser("classnum", help="Hurwitz class number H(D) (or h0 with --h0)")
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--h0", action="store_true")
    p.add_argument("--text", action="store_true")
    p.set_defaults(fn=cmd_classnum)

    p = sub.add_parser("char", help="character bookkeeping")
    p.add_argument("action", choices=("list",))
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--text", action="store_true")
    p.set_defaults(fn=cmd_char)

    p = sub.add_parser("selfcheck", help="run the cross-formula consistency suite")
    p.add_argument("--max-level", type=int, default=16)
    p.add_argument("--max-weight", type=int, default=8)
    p.add_argument("--max-index", type=int, default=12)
    p.add_argument("--classnum-bound", type=int, default=2000)
    p.set_defaults(fn=cmd_selfcheck)

    p = sub.add_parser("table", help="compute a grid of traces with a resumable cache")
    p.add_argument("--grid", required=True, metavar="SPEC",
                   help="e.g. N=1..10,k=2..6:2,n=1..10")
    p.add_argument("--space", choices=("gamma0", "gamma1"), default="gamma0")
    p.add_argument("--chars", choices=("trivial", "all-valid-parity"), default="trivial")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache", metavar="DIR",
                   help=f"cache directory (default: ${CACHE_ENV})")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=cmd_table)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.fn(args)
    except IntegralityError as exc:
        print(f"integrality assertion failed: {exc}", file=sys.stderr)
        sys.exit(EXIT_INTEGRALITY)
    except (ValueError, SystemExit) as exc:
        if isinstance(exc, SystemExit):
            raise
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


if __name__ == "__main__":
    main()
