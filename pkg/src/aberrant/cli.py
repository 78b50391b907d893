"""Command-line interface.

Subcommands: fit, fan, polytope, curve, bounds, cornercuts, generic-check,
census, compare, gen.  JSON results are wrapped in a self-describing report
envelope; CSV outputs start with a comment echoing the invocation.  Exit
codes: 0 success, 1 domain error (rank deficiency, exhausted budgets), 2
usage error (bad flags, missing or malformed files).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__, analytics
from .cornercuts import corner_cut_polytope, enumerate_corner_cuts, find_nonidentifiable_corner_cut
from .designs import (
    DefiningWord,
    DesignFileError,
    LatinHypercubeSpec,
    central_composite,
    degree_histogram,
    design_document,
    f3_design,
    full_factorial,
    latin_hypercube,
    lh_genericity_census,
    load_design,
    save_design,
    two_level_fraction,
)
from .fan import algebraic_fan, min_aberration_curve, state_polytope
from .greedy import RankDeficient, minimal_aberration
from .hull import BudgetExceeded
from .identify import SizeMismatch
from .model import Design, WeightVector, exponent_sum

SCHEMA = 1


def _parse_weights(text: str) -> WeightVector:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise argparse.ArgumentTypeError("empty weight list")
    floaty = any(("." in p or "e" in p.lower()) and "/" not in p for p in parts)
    try:
        if floaty:
            return WeightVector([float(p) for p in parts])
        return WeightVector([Fraction(p) for p in parts])
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad weights {text!r}: {exc}") from exc


def _load(path: str) -> Design:
    builtin = {
        "F1": lambda: two_level_fraction(
            7, [DefiningWord(6, (1, 2, 3)), DefiningWord(7, (2, 3, 4))]
        ),
        "F2": lambda: two_level_fraction(
            7, [DefiningWord(6, (1, 2, 3, 4)), DefiningWord(7, (1, 2, 3, 5))]
        ),
        "F3": f3_design,
    }
    if path in builtin:
        return builtin[path]()
    return load_design(path)


def _emit(args, payload: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(payload)
    else:
        sys.stdout.write(payload)


def _report(args, started: float, result) -> str:
    doc = {
        "schema": SCHEMA,
        "command": " ".join(sys.argv[1:]) if sys.argv[1:] else args.cmd,
        "config": {
            k: v for k, v in sorted(vars(args).items())
            if k not in ("cmd", "func") and v is not None and not callable(v)
        },
        "version": __version__,
        "elapsed_s": round(time.perf_counter() - started, 6),
        "result": result,
    }
    return json.dumps(doc, indent=1, default=str) + "\n"


def _model_doc(model) -> dict:
    return {
        "exponents": [list(a) for a in model.exponents],
        "exponent_sum": list(exponent_sum(model)),
    }


def _fan_doc(entries) -> list[dict]:
    out = []
    for e in entries:
        out.append(
            {
                **_model_doc(e.model),
                "vertex": list(e.vertex),
                "witness": [str(x) for x in e.witness.w],
            }
        )
    return out


def cmd_fit(args):
    started = time.perf_counter()
    design = _load(args.design)
    if args.mode and args.mode != design.scalar_mode:
        if args.mode == "float":
            design = Design(
                [[float(c) for c in p] for p in design.points], scalar_mode="float"
            )
        else:
            raise DesignFileError("cannot promote a float design to exact mode")
    model, value = minimal_aberration(design, args.weights)
    doc = _model_doc(model)
    doc["aberration"] = str(value) if not isinstance(value, float) else value
    doc["aberration_float"] = float(value)
    _emit(args, _report(args, started, doc))
    return 0


def cmd_fan(args):
    started = time.perf_counter()
    design = _load(args.design)
    entries = algebraic_fan(design, max_oracle_calls=args.max_oracle_calls)
    _emit(args, _report(args, started, {"size": len(entries), "entries": _fan_doc(entries)}))
    return 0


def cmd_polytope(args):
    started = time.perf_counter()
    design = _load(args.design)
    poly = state_polytope(design, max_oracle_calls=args.max_oracle_calls)
    doc = {
        "vertices": [list(v) for v in poly.vertices],
        "recession_cone": "nonnegative orthant" if args.polyhedron else None,
    }
    _emit(args, _report(args, started, doc))
    return 0


def _simplex_rows(n, w1, approx_surface):
    g = math.sqrt(w1 * (1.0 - w1))
    a_s = math.sqrt(2.0 * n) * (2.0 / 3.0) * g
    a_lo, a_hi = a_s - 1.0, a_s + 1.0
    a_tilde = None
    if approx_surface is not None:
        a_tilde = 2.0 * math.sqrt(approx_surface.b) * g - approx_surface.a
    return a_s, a_lo, a_hi, a_tilde


def cmd_curve(args):
    design = _load(args.design)
    curve = min_aberration_curve(design)
    n = design.size
    surface = analytics.approx_surface_params(n, 2) if args.approx else None
    ts = set(float(b) for b in curve.breakpoints)
    ts.update(i / (args.samples - 1) for i in range(args.samples))
    lines = [
        f"# aberrant curve --design {args.design} --samples {args.samples}"
        + (" --approx" if args.approx else ""),
        "w1,A_min,A_simplex,A_lo,A_hi,A_tilde",
    ]
    for t in sorted(ts):
        a_min = float(curve.value(t))
        a_s, a_lo, a_hi, a_tilde = _simplex_rows(n, t, surface)
        tail = f"{a_tilde:.12g}" if a_tilde is not None else ""
        lines.append(f"{t:.12g},{a_min:.12g},{a_s:.12g},{a_lo:.12g},{a_hi:.12g},{tail}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_bounds(args):
    started = time.perf_counter()
    w = args.weights
    c = analytics.simplex_constant(args.n, args.d, w)
    a_s = analytics.equivalent_simplex_aberration(args.n, args.d, w)
    lo, hi = analytics.aberration_bounds(args.n, args.d, w)
    surface = analytics.approx_surface_params(args.n, args.d)
    a_tilde = analytics.approx_min_aberration(args.n, args.d, w, surface)
    doc = {
        "c": c,
        "A_S": a_s,
        "lo": lo,
        "hi": hi,
        "a": surface.a,
        "b": surface.b,
        "A_tilde": a_tilde,
    }
    _emit(args, _report(args, started, doc))
    return 0


def cmd_cornercuts(args):
    started = time.perf_counter()
    cuts = enumerate_corner_cuts(args.n, args.d)
    result = {
        "count": len(cuts),
        "cuts": [
            {
                **_model_doc(c.model),
                "witness": [str(x) for x in c.witness.w],
            }
            for c in cuts
        ],
    }
    if args.polytope:
        poly = corner_cut_polytope(args.n, args.d)
        result["polytope"] = [list(v) for v in poly.vertices]
    _emit(args, _report(args, started, result))
    return 0


def cmd_generic_check(args):
    started = time.perf_counter()
    design = _load(args.design)
    failing = find_nonidentifiable_corner_cut(design, threads=args.threads)
    doc = {"generic": failing is None}
    if failing is not None:
        doc["failing_cut"] = [list(a) for a in failing.model.exponents]
    _emit(args, _report(args, started, doc))
    return 0


def cmd_census(args):
    started = time.perf_counter()
    mode = "exhaustive" if args.exhaustive else "sample"
    res = lh_genericity_census(
        args.n,
        args.d,
        mode=mode,
        sample_size=args.sample,
        seed=args.seed,
        threads=args.threads,
    )
    doc = {
        "generic_fraction": str(res.generic_fraction),
        "generic_percent": float(res.generic_fraction * 100),
        "maximal_fan_fraction": str(res.maximal_fan_fraction),
        "maximal_fan_percent": float(res.maximal_fan_fraction * 100),
        "total_examined": res.total_examined,
    }
    _emit(args, _report(args, started, doc))
    return 0


def cmd_compare(args):
    names = args.designs
    fans = []
    for name in names:
        design = _load(name)
        fans.append(degree_histogram(algebraic_fan(design, max_oracle_calls=args.max_oracle_calls)))
    degrees = sorted(set().union(*fans))
    totals = [sum(h.values()) for h in fans]
    lines = [f"# aberrant compare --designs {' '.join(names)}"]
    header = ["total_degree"]
    header += [f"AF {n}" for n in names] + [f"RF {n}" for n in names]
    lines.append(",".join(header))
    for deg in degrees:
        row = [str(deg)]
        row += [str(h.get(deg, 0)) for h in fans]
        row += [f"{100.0 * h.get(deg, 0) / t:.2f}" for h, t in zip(fans, totals)]
        lines.append(",".join(row))
    lines.append(",".join(["total"] + [str(t) for t in totals] + ["100.00"] * len(fans)))
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _parse_words(text: str):
    words = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        target, _, rhs = chunk.partition("=")
        sign = 1
        rhs = rhs.strip()
        if rhs.startswith("-"):
            sign = -1
            rhs = rhs[1:]
        words.append(
            DefiningWord(int(target), tuple(int(ch) for ch in rhs), sign)
        )
    return words


def cmd_gen(args):
    if args.kind == "factorial":
        groups = [g for g in args.levels.split(";") if g.strip()]
        if len(groups) == 1 and args.d > 1:
            groups = groups * args.d
        levels = [[_num(tok) for tok in g.split(",")] for g in groups]
        design = full_factorial(levels)
    elif args.kind == "ccd":
        axial = math.sqrt(2) if args.axial == "sqrt2" else _num(args.axial)
        design = central_composite(args.d, axial, args.center_reps)
    elif args.kind == "fraction":
        design = two_level_fraction(args.d, _parse_words(args.words))
    elif args.kind == "lh":
        spec = LatinHypercubeSpec(
            n=args.n,
            d=args.d,
            placement=args.placement,
            jitter_seed=args.jitter_seed,
            perm_seed=args.seed,
        )
        design = latin_hypercube(spec)
    else:
        raise argparse.ArgumentTypeError(f"unknown generator {args.kind!r}")
    if args.output:
        save_design(design, args.output)
    else:
        sys.stdout.write(json.dumps(design_document(design), indent=1) + "\n")
    return 0


def _num(tok: str):
    tok = tok.strip()
    if "/" in tok:
        return Fraction(tok)
    if "." in tok or "e" in tok.lower():
        return float(tok)
    return int(tok)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="aberrant", description=__doc__)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add_common(p):
        p.add_argument("--output", help="write the artifact here instead of stdout")
        p.add_argument("--threads", type=int, default=None, help="worker threads")

    p = sub.add_parser("fit", help="minimal-aberration model for one weight vector")
    p.add_argument("--design", required=True)
    p.add_argument("--weights", required=True, type=_parse_weights)
    p.add_argument("--mode", choices=("exact", "float"))
    add_common(p)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("fan", help="full algebraic fan")
    p.add_argument("--design", required=True)
    p.add_argument("--max-oracle-calls", type=int, default=None)
    add_common(p)
    p.set_defaults(func=cmd_fan)

    p = sub.add_parser("polytope", help="state polytope vertices")
    p.add_argument("--design", required=True)
    p.add_argument("--polyhedron", action="store_true")
    p.add_argument("--max-oracle-calls", type=int, default=None)
    add_common(p)
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("curve", help="minimal-aberration curve data (two factors)")
    p.add_argument("--design", required=True)
    p.add_argument("--samples", type=int, default=512)
    p.add_argument("--approx", action="store_true")
    add_common(p)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("bounds", help="simplex bounds and surface approximation")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--d", required=True, type=int)
    p.add_argument("--weights", required=True, type=_parse_weights)
    add_common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("cornercuts", help="enumerate corner cut models")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--d", required=True, type=int)
    p.add_argument("--polytope", action="store_true")
    add_common(p)
    p.set_defaults(func=cmd_cornercuts)

    p = sub.add_parser("generic-check", help="is the design generic")
    p.add_argument("--design", required=True)
    add_common(p)
    p.set_defaults(func=cmd_generic_check)

    p = sub.add_parser("census", help="Latin hypercube genericity census")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--sample", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    add_common(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("compare", help="total-degree histograms of several designs")
    p.add_argument("--designs", nargs="+", required=True)
    p.add_argument("--max-oracle-calls", type=int, default=None)
    add_common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("gen", help="generate a design file")
    p.add_argument("kind", choices=("factorial", "ccd", "fraction", "lh"))
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--levels", default="-1,0,1")
    p.add_argument("--axial", default="sqrt2")
    p.add_argument("--center-reps", type=int, default=1)
    p.add_argument("--words", default="")
    p.add_argument("--placement", default="midpoint",
                   choices=("midpoint", "left", "right", "random"))
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--jitter-seed", type=int, default=None)
    add_common(p)
    p.set_defaults(func=cmd_gen)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (FileNotFoundError, DesignFileError) as exc:
        print(f"aberrant: {exc}", file=sys.stderr)
        return 2
    except (RankDeficient, BudgetExceeded, SizeMismatch) as exc:
        print(f"aberrant: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"aberrant: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
