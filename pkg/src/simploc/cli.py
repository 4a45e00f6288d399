"""Batch command line front end.

Subcommands: check, reduce, minimize, metrize, bound, generate.  Exit codes
form a stable contract: 0 success / all verdicts true, 1 a checked verdict
is false, 2 malformed input.  Reports are JSON, written to stdout or to
--report.  All randomness sits behind an explicit --seed.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from .complexes import (
    ComplexError,
    complex_to_dict,
    load_complex,
)
from .conditions import (
    check_w5hat,
    is_k_large,
    is_locally_k_large,
    is_locally_weakly_systolic,
    is_m_located,
)
from .discs import DiscError, disc_to_dict, load_disc
from .generators import GeneratorSpec, generate
from .metric import (
    MetricError,
    export_svg,
    isoperimetric_bound,
    metric_report,
    metrize,
)
from .oracle import brute_force_min_diagram
from .surgery import (
    DiagramError,
    diagram_to_dict,
    load_diagram,
    reduce as reduce_diagram,
    save_diagram,
)

INPUT_ERRORS = (ComplexError, DiscError, DiagramError, OSError, MetricError)


def _digest(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _emit(report: dict, args) -> None:
    text = json.dumps(report, indent=1, sort_keys=True)
    if getattr(args, "report", None):
        Path(args.report).write_text(text + "\n")
    else:
        print(text)


def _witness_json(X, report):
    out = []
    for witness, dom in report.witnesses:
        entry = {
            "vertices": sorted(X.label(v) for v in witness.vertex_set()),
            "dominated_by": X.label(dom) if dom is not None else None,
        }
        if hasattr(witness, "boundary"):
            entry["boundary"] = [X.label(v) for v in witness.boundary]
        out.append(entry)
    return out


def cmd_check(args) -> int:
    t0 = time.perf_counter()
    X = load_complex(args.input)
    checks: dict[str, dict] = {}
    ok = True
    if args.k_large is not None:
        verdict = is_k_large(X, args.k_large)
        checks[f"k-large:{args.k_large}"] = {"verdict": verdict}
        ok &= verdict
    if args.locally_k_large is not None:
        verdict = is_locally_k_large(X, args.locally_k_large)
        checks[f"locally-k-large:{args.locally_k_large}"] = {"verdict": verdict}
        ok &= verdict
    if args.m_located is not None:
        rep = is_m_located(X, args.m_located)
        checks[f"m-located:{args.m_located}"] = {
            "verdict": rep.verdict,
            "witnesses": _witness_json(X, rep),
        }
        ok &= rep.verdict
    if args.w5hat:
        rep = check_w5hat(X)
        checks["w5hat"] = {
            "verdict": rep.verdict,
            "witnesses": _witness_json(X, rep),
        }
        ok &= rep.verdict
    if args.lws:
        verdict = is_locally_weakly_systolic(X)
        checks["lws"] = {"verdict": verdict}
        ok &= verdict
    if not checks:
        raise ComplexError("no checks requested")
    report = {
        "command": "check",
        "inputs": {args.input: _digest(args.input)},
        "checks": checks,
        "timings_ms": {"total": round(1000 * (time.perf_counter() - t0), 3)},
    }
    _emit(report, args)
    return 0 if ok else 1


def cmd_reduce(args) -> int:
    t0 = time.perf_counter()
    diagram = load_diagram(args.input)
    reduced, certs = reduce_diagram(diagram)
    if args.out:
        save_diagram(reduced, args.out)
    report = {
        "command": "reduce",
        "inputs": {args.input: _digest(args.input)},
        "area_before": diagram.disc.area,
        "area_after": reduced.disc.area,
        "trace": [c.to_dict() for c in certs],
        "timings_ms": {"total": round(1000 * (time.perf_counter() - t0), 3)},
    }
    if not args.out:
        report["diagram"] = diagram_to_dict(reduced)
    _emit(report, args)
    return 0


def cmd_minimize(args) -> int:
    t0 = time.perf_counter()
    X = load_complex(args.input)
    by_label = {X.label(v): v for v in X}
    try:
        loop = tuple(by_label[name] for name in args.loop.split(","))
    except KeyError as exc:
        raise ComplexError(f"loop vertex {exc} not in the complex") from exc
    result = brute_force_min_diagram(X, loop, area_cap=args.cap)
    report = {
        "command": "minimize",
        "inputs": {args.input: _digest(args.input)},
        "loop": [X.label(v) for v in loop],
        "minimal_area": result.minimal_area,
        "unsat": result.is_unsat,
        "capped": result.capped,
        "explored": result.explored,
        "diagrams": [diagram_to_dict(d) for d in result.diagrams],
        "timings_ms": {"total": round(1000 * (time.perf_counter() - t0), 3)},
    }
    _emit(report, args)
    return 0 if not result.is_unsat else 1


def cmd_metrize(args) -> int:
    t0 = time.perf_counter()
    disc = load_disc(args.input)
    try:
        metrized = metrize(disc)
    except MetricError as exc:
        report = {
            "command": "metrize",
            "inputs": {args.input: _digest(args.input)},
            "error": str(exc),
            "timings_ms": {"total": round(1000 * (time.perf_counter() - t0), 3)},
        }
        _emit(report, args)
        return 1
    body = metric_report(metrized)
    body["command"] = "metrize"
    body["inputs"] = {args.input: _digest(args.input)}
    body["timings_ms"] = {"total": round(1000 * (time.perf_counter() - t0), 3)}
    if args.svg:
        Path(args.svg).write_text(export_svg(metrized))
    _emit(body, args)
    return 0 if body["cat0"] else 1


def cmd_bound(args) -> int:
    bound, tri_bound = isoperimetric_bound(args.n)
    _emit(
        {
            "command": "bound",
            "n": args.n,
            "bound": bound,
            "triangle_bound": tri_bound,
        },
        args,
    )
    return 0


def cmd_generate(args) -> int:
    random_kinds = {"RANDOM_DISC", "RANDOM_FLAG"}
    if args.kind in random_kinds and args.seed is None:
        raise ComplexError(f"{args.kind} requires --seed")
    spec = GeneratorSpec(
        kind=args.kind,
        k=args.k,
        l=args.l,
        planar=not args.nonplanar,
        radius=args.radius,
        size=args.size,
        n=args.n,
        p=args.p,
        seed=args.seed,
    )
    obj = generate(spec)
    data = disc_to_dict(obj) if hasattr(obj, "triangles") else complex_to_dict(obj)
    text = json.dumps(data, indent=1, sort_keys=True)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simploc",
        description="Local curvature checks and disc diagram tools "
        "for flag simplicial complexes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run condition checkers on a complex")
    p.add_argument("input")
    p.add_argument("--k-large", type=int, metavar="K")
    p.add_argument("--locally-k-large", type=int, metavar="K")
    p.add_argument("--m-located", type=int, metavar="M")
    p.add_argument("--w5hat", action="store_true")
    p.add_argument("--lws", action="store_true")
    p.add_argument("--report", metavar="PATH")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reduce", help="greedily reduce a disc diagram")
    p.add_argument("input")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--report", metavar="PATH")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("minimize", help="brute-force minimal diagrams for a loop")
    p.add_argument("input")
    p.add_argument("--loop", required=True, metavar="V1,V2,...")
    p.add_argument("--cap", type=int, default=12)
    p.add_argument("--report", metavar="PATH")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("metrize", help="flattened wheel metric and CAT(0) verdict")
    p.add_argument("input")
    p.add_argument("--svg", metavar="PATH")
    p.add_argument("--report", metavar="PATH")
    p.set_defaults(func=cmd_metrize)

    p = sub.add_parser("bound", help="quadratic isoperimetric bound for length n")
    p.add_argument("n", type=int)
    p.add_argument("--report", metavar="PATH")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("generate", help="write a fixture or random input")
    p.add_argument("kind", choices=[
        "WHEEL", "DWHEEL", "EXTENDED_5WHEEL", "HEX_DISC",
        "RANDOM_DISC", "RANDOM_FLAG",
    ])
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--nonplanar", action="store_true")
    p.add_argument("--radius", type=int)
    p.add_argument("--size", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_generate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        print(f"simploc: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
