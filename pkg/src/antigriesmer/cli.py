"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 hypothesis or budget violation,
3 mismatch against a reference worked example.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import jsonschema

from . import bounds as B
from .codes import CodeError, InfeasibleEnumeration, LinearCode, metrics
from .constructions import (
    default_evaluation,
    extended_grs,
    from_spec,
    grs,
    identity_pair,
    repetition,
    simplex,
    to_spec,
)
from .gf import FieldError, field_of_order
from .partition import HypothesisError, greedy_partition, verify_trace
from .reproduce import format_rows, reproduce_rows
from .search import DEFAULT_SEARCH_BUDGET, SearchConfig, run_search

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2
EXIT_MISMATCH = 3

BUILDERS = ("simplex", "identity-pair", "grs", "extended-grs", "repetition")


class InputError(Exception):
    pass


def _require(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise InputError(f"builder {args.builder!r} needs {', '.join(missing)}")


def build_code(args) -> LinearCode:
    if args.spec:
        try:
            doc = json.loads(Path(args.spec).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read {args.spec}: {exc}") from None
        return from_spec(doc)
    if not args.builder:
        raise InputError("give --spec PATH or --builder NAME")
    _require(args, "q")
    F = field_of_order(args.q)
    if args.builder == "simplex":
        _require(args, "k")
        return simplex(F, args.k)
    if args.builder == "identity-pair":
        _require(args, "m")
        return identity_pair(args.m, F)
    if args.builder == "repetition":
        _require(args, "n")
        return repetition(F, args.n)
    _require(args, "n", "k")
    alphas, vs = default_evaluation(F, args.n)
    if args.builder == "grs":
        return grs(F, alphas, vs, args.k)
    return extended_grs(F, alphas, vs, args.k)


def _add_code_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--spec", help="code-spec JSON file")
    p.add_argument("--builder", choices=BUILDERS)
    p.add_argument("--q", type=int, help="field order")
    p.add_argument("--k", type=int, help="dimension")
    p.add_argument("--n", type=int, help="length (grs: number of evaluation points)")
    p.add_argument("--m", type=int, help="identity-pair block size")
    p.add_argument("--limit", type=int, help="enumeration limit on q^k (default 2^24)")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def cmd_analyze(args) -> int:
    C = build_code(args)
    m = metrics(C, args.limit)
    if args.json:
        print(json.dumps({"code": to_spec(C), "metrics": m.to_dict()}, indent=2))
        return EXIT_OK
    print(f"code: {C.name or args.spec}  over GF({C.q})")
    print(f"n={m.n} k={m.k} d={m.d} delta={m.delta}  ({m.method})")
    print(f"d(C-perp): {m.dual_distance}")
    if m.weight_distribution is not None:
        print("weight distribution:")
        for w, c in sorted(m.weight_distribution.items()):
            print(f"  {w:>4}: {c}")
    else:
        print("weight distribution: not enumerated")
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.spec or args.builder:
        C = build_code(args)
        reports = B.verify_all(C, args.limit)
    else:
        if args.n is None or args.k is None or args.q is None:
            raise InputError("parameter mode needs --n, --k and --q")
        reports = B.parameter_reports(args.n, args.k, args.q)
        if args.delta is not None:
            try:
                params = B.ParamTuple(args.q, args.n, args.k, args.delta, args.d, args.w)
            except ValueError as exc:
                raise InputError(str(exc)) from None
            reports += B.feasible(params)
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        print(B.format_table(reports))
    return EXIT_OK


def cmd_partition(args) -> int:
    C = build_code(args)
    trace = greedy_partition(C, args.limit)
    verdict = verify_trace(trace, C)
    if args.json:
        print(json.dumps({"trace": trace.to_dict(), "checks": verdict.to_dict()}, indent=2))
    else:
        print(" ".join(str(s) for s in trace.sizes) + " | " + ("all checks pass" if verdict.all_pass else "CHECK FAILED"))
        for i, a in enumerate(trace.functionals, 1):
            print(f"  a_{i} = {list(a) if a is not None else '-'}  |S_{i}| = {len(trace.sets[i - 1])}")
        v = verdict
        print(
            f"  independence={v.independence} partition={v.partition} halving={v.halving} "
            f"pencil={all(p.holds for p in v.pencils)} maximality={v.maximality}"
        )
        print(f"  n = {v.bound_lhs} <= {v.bound_rhs}")
    return EXIT_OK if verdict.all_pass else EXIT_BUDGET


def cmd_reproduce(args) -> int:
    rows = reproduce_rows()
    if args.json:
        print(json.dumps([r.to_dict() for r in rows], indent=2))
    else:
        print(format_rows(rows))
    return EXIT_OK if all(r.match for r in rows) else EXIT_MISMATCH


def cmd_spec(args) -> int:
    print(json.dumps(to_spec(build_code(args)), indent=2))
    return EXIT_OK


def _int_range(text: str) -> tuple[int, ...]:
    """'3' -> (3,), '2:5' -> (2,3,4,5), '2,4' -> (2,4)."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" in part:
            lo, hi = part.split(":")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return tuple(out)


def cmd_search(args) -> int:
    try:
        q_values = _int_range(args.q)
        for q in q_values:
            field_of_order(q)
        config = SearchConfig(
            q_values=q_values,
            k_values=_int_range(args.k),
            n_values=_int_range(args.n),
            projective=args.projective,
            budget=args.budget,
            output=args.output,
            workers=args.workers,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    rows = run_search(config)
    if not args.output:
        print("q,k,n,instances,min_delta,diameter_lower_bound,attains,anti_griesmer_tight,violations,truncated")
        for r in rows:
            print(
                f"{r.q},{r.k},{r.n},{r.instances},{r.min_delta},{r.diameter_lower_bound},"
                f"{r.attains_diameter_bound},{r.anti_griesmer_tight},{r.violations},"
                f"{'TRUNCATED' if r.truncated else ''}"
            )
    else:
        print(f"wrote {len(rows)} rows to {args.output}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="antigriesmer", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="n, k, d, diameter, dual distance and weight distribution")
    _add_code_args(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bounds", help="evaluate bounds for a code or a parameter tuple")
    _add_code_args(p)
    p.add_argument("--delta", type=int, help="diameter (parameter mode)")
    p.add_argument("--d", type=int, help="minimum distance (parameter mode)")
    p.add_argument("--w", type=int, help="a known nonzero weight (parameter mode)")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("partition", help="run and verify the greedy functional partition")
    _add_code_args(p)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("reproduce", help="recompute the reference worked examples")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("spec", help="print the code-spec JSON of a built code")
    _add_code_args(p)
    p.set_defaults(func=cmd_spec)

    p = sub.add_parser("search", help="exhaustive tightness search over column multisets")
    p.add_argument("--q", required=True, help="field orders, e.g. '2,3' or '2:4'")
    p.add_argument("--k", required=True, help="dimensions, e.g. '1:3'")
    p.add_argument("--n", required=True, help="lengths, e.g. '1:7'")
    p.add_argument("--projective", action="store_true", help="one column per projective point")
    p.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET, help="multisets examined per point")
    p.add_argument("--output", help="CSV catalog path")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InfeasibleEnumeration, HypothesisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, CodeError, FieldError, jsonschema.ValidationError, B.BoundError) as exc:
        msg = exc.message if isinstance(exc, jsonschema.ValidationError) else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
