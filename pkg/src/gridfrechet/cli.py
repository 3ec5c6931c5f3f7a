"""Command-line interface.

Exit codes: 0 success, 2 input error (bad flags, unreadable or invalid files,
infeasible parameters), 3 semantic error (dimension mismatch).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import List, Optional

from .approx import Method, approx_decide, approx_distance, continuous_distance
from .bench import fit_loglog_slope, run_bench, to_csv
from .core import DimensionMismatch, GridWalk, Metric
from .exact import exact_distance
from .generators import (
    BandSpec,
    Sign,
    band_path,
    embed_product,
    hardness_params,
    random_lambda_walk,
    scale_discretize_1d,
)
from .io import parse_rational, read_walk, serialize_walk, write_walk

EXIT_INPUT = 2
EXIT_SEMANTIC = 3


class InputError(Exception):
    pass


def _eps(text: Optional[str]) -> Fraction:
    if text is None:
        raise InputError("--eps is required for this algorithm")
    try:
        eps = parse_rational(text)
    except ValueError as exc:
        raise InputError(f"--eps: {exc}") from None
    if eps <= 0:
        raise InputError("--eps must be positive")
    return eps


def _int_list(text: str, flag: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise InputError(f"{flag}: expected a comma-separated list of integers") from None


def _metric(text: str) -> Metric:
    return Metric.L1 if text == "l1" else Metric.LINF


def _emit_walk(w: GridWalk, out: Optional[str]) -> None:
    lo = w.vertices.min(axis=0).tolist()
    hi = w.vertices.max(axis=0).tolist()
    info = f"n={w.n} lambda={w.multiplicity} bbox={lo}..{hi}"
    if out:
        write_walk(out, w)
        print(info)
    else:
        sys.stdout.write(serialize_walk(w))
        print(info, file=sys.stderr)


def cmd_dist(args) -> int:
    P, Q = read_walk(args.a), read_walk(args.b)
    metric = _metric(args.metric)
    if args.algo == "exact":
        print(exact_distance(P, Q, metric))
    elif args.algo == "approx":
        eps = _eps(args.eps)
        res = approx_distance(P, Q, eps, metric)
        print(res.value)
        print(f"interval [{res.lower_bound}, {res.value}]")
    else:
        eps = _eps(args.eps)
        print(continuous_distance(P, Q, eps, metric))
    return 0


def cmd_decide(args) -> int:
    P, Q = read_walk(args.a), read_walk(args.b)
    eps = _eps(args.eps)
    if args.delta < 0:
        raise InputError("--delta must be non-negative")
    force = {None: None, "dp": Method.SIMPLIFIED_DP, "cells": Method.SWITCHING_CELLS}[args.force_method]
    out = approx_decide(P, Q, args.delta, eps, _metric(args.metric), force_method=force)
    print(out.verdict.value)
    return 0


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "band":
        sign = Sign.NEGATIVE if args.negative else Sign.POSITIVE
        w = band_path(BandSpec(args.d, args.a, args.w, args.lam, sign))
    elif kind == "random":
        w = random_lambda_walk(args.d, args.n, args.lam, args.seed)
    elif kind == "embed":
        origin, signal = read_walk(args.origin), read_walk(args.signal)
        cuts = _int_list(args.cuts, "--cuts")
        w = embed_product(origin, signal, cuts)
    else:
        w = scale_discretize_1d(_int_list(args.values, "--values"), args.C)
    _emit_walk(w, args.out)
    return 0


def cmd_validate(args) -> int:
    eps = _eps(args.eps)
    hp = hardness_params(args.d, args.lam, eps, args.N)
    print(f"a={hp.a}")
    print(f"w={hp.w}")
    print(f"feasible={'true' if hp.feasible else 'false'}")
    print(f"threshold={hp.threshold:.12g}")
    return 0


def cmd_bench(args) -> int:
    eps = _eps(args.eps)
    sizes = _int_list(args.sizes, "--sizes")
    if not sizes or any(s < 1 for s in sizes):
        raise InputError("--sizes must list positive integers")
    records = run_bench(
        args.d, eps, args.lam, sizes, args.seeds, args.algo, args.instances, _metric(args.metric)
    )
    sys.stdout.write(to_csv(records))
    algos = ["exact", "approx"] if args.algo == "both" else [args.algo]
    for a in algos:
        print(f"slope {a} {fit_loglog_slope(records, a):.3f}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gridfrechet", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dist", help="distance between two walk files")
    d.add_argument("--algo", choices=["exact", "approx", "continuous"], default="exact")
    d.add_argument("--eps")
    d.add_argument("--metric", choices=["l1", "linf"], default="l1")
    d.add_argument("a")
    d.add_argument("b")
    d.set_defaults(func=cmd_dist)

    c = sub.add_parser("decide", help="approximate decision at a threshold")
    c.add_argument("--delta", type=int, required=True)
    c.add_argument("--eps", required=True)
    c.add_argument("--metric", choices=["l1", "linf"], default="l1")
    c.add_argument("--force-method", choices=["dp", "cells"])
    c.add_argument("a")
    c.add_argument("b")
    c.set_defaults(func=cmd_decide)

    g = sub.add_parser("gen", help="generate a walk file")
    gs = g.add_subparsers(dest="kind", required=True)
    gb = gs.add_parser("band")
    gb.add_argument("--d", type=int, required=True)
    gb.add_argument("--a", type=int, required=True)
    gb.add_argument("--w", type=int, required=True)
    gb.add_argument("--lambda", dest="lam", type=int, required=True)
    gb.add_argument("--negative", action="store_true")
    gr = gs.add_parser("random")
    gr.add_argument("--d", type=int, required=True)
    gr.add_argument("--n", type=int, required=True)
    gr.add_argument("--lambda", dest="lam", type=int, required=True)
    gr.add_argument("--seed", type=int, required=True)
    ge = gs.add_parser("embed")
    ge.add_argument("--origin", required=True)
    ge.add_argument("--signal", required=True)
    ge.add_argument("--cuts", required=True)
    gc = gs.add_parser("scale1d")
    gc.add_argument("--values", required=True)
    gc.add_argument("--C", type=int, required=True)
    for sp in (gb, gr, ge, gc):
        sp.add_argument("--out", "-o")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("validate", help="hardness parameters a, w and their feasibility")
    v.add_argument("--d", type=int, required=True)
    v.add_argument("--lambda", dest="lam", type=int, required=True)
    v.add_argument("--eps", required=True)
    v.add_argument("--N", type=int, required=True)
    v.set_defaults(func=cmd_validate)

    b = sub.add_parser("bench", help="runtime scaling benchmark (CSV on stdout)")
    b.add_argument("--d", type=int, required=True)
    b.add_argument("--eps", required=True)
    b.add_argument("--lambda", dest="lam", type=int, default=1)
    b.add_argument("--sizes", required=True)
    b.add_argument("--seeds", type=int, default=3)
    b.add_argument("--algo", choices=["exact", "approx", "both"], default="both")
    b.add_argument("--instances", choices=["random", "band"], default="random")
    b.add_argument("--metric", choices=["l1", "linf"], default="l1")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DimensionMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
