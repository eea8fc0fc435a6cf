"""Command line interface: ``wmoduli <command> ...``.

Exit codes: 0 success, 1 conic without rational point, 2 invalid input,
3 database directory needs a resumed build.
"""

from __future__ import annotations

import argparse
import sys

from . import db
from .autloci import classify
from .conic import TernaryForm, has_rational_point
from .enumerate import count_grid, count_points, enumerate_shard, full_shard, split_shards
from .igusa import BinarySextic, SingularCurveError, igusa_invariants
from .reconstruct import is_fine, reconstruct
from .wpspace import (
    COMPACT, WeightedPoint, WeightSystem, absolute_normalize, canonicalize, parse_point,
    weighted_height,
)

EXIT_OK, EXIT_NO_POINT, EXIT_INVALID, EXIT_RESUME = 0, 1, 2, 3


def _weights(text: str) -> WeightSystem:
    try:
        return WeightSystem.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _point(args) -> WeightedPoint:
    return parse_point(args.point, args.weights)


def cmd_invariants(args) -> int:
    f = BinarySextic.parse(args.sextic)
    J = igusa_invariants(f)
    if J.J10 == 0:
        raise SingularCurveError("sextic has a repeated root (J10 = 0)")
    raw = WeightedPoint(tuple(J), args.weights)
    if args.weights == COMPACT:
        p = canonicalize(raw)
    else:
        # minimal tuple over Qbar, measured in the (2,4,6,10) weights
        p = WeightedPoint(absolute_normalize(raw).coords, args.weights)
    print(f"J: {raw}")
    print(f"point: {p}")
    h = weighted_height(p)
    print(f"height: {h} = {h.base}^(1/{h.root})")
    return EXIT_OK


def cmd_conic(args) -> int:
    try:
        a, b, c = (int(x) for x in args.form.split(","))
    except ValueError:
        raise ValueError(f"expected a,b,c integers: {args.form!r}") from None
    if a * b * c == 0:
        raise ValueError("diagonal entries must be nonzero")
    v = has_rational_point(TernaryForm.diagonal(a, b, c))
    if not v.solvable:
        print(f"no rational point (fails at {v.failing_place})")
        return EXIT_NO_POINT
    print(":".join(map(str, v.witness)))
    return EXIT_OK


def cmd_classify(args) -> int:
    print(classify(_point(args)))
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    r = reconstruct(_point(args))
    print(f"fine: {'yes' if r.fine else 'no'}")
    print(f"case: {r.case_tag}")
    if r.curve is not None:
        print(f"sextic: {r.curve}")
    elif r.obstruction is not None and r.obstruction.failing_place is not None:
        print(f"obstruction: {r.obstruction.failing_place}")
    return EXIT_OK


def cmd_isfine(args) -> int:
    print("true" if is_fine(_point(args)) else "false")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if (args.shards is None) != (args.shard is None):
        raise ValueError("--shards and --shard go together")
    if args.shards is None:
        shard = full_shard(args.height)
    else:
        if not 0 <= args.shard < args.shards:
            raise ValueError("need 0 <= --shard < --shards")
        shard = split_shards(args.height, args.shards)[args.shard]
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for p in enumerate_shard(shard):
            out.write(f"{p}\n")
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def cmd_count(args) -> int:
    print(f"grid: {count_grid(args.height)}")
    print(f"points: {count_points(args.height)}")
    return EXIT_OK


def cmd_build(args) -> int:
    path = db.build_database(args.height, args.out, args.shards)
    print(path)
    return EXIT_OK


def cmd_stats(args) -> int:
    print(db.summarize_database(args.dir).render())
    return EXIT_OK


def cmd_query(args) -> int:
    rec = db.query_point(args.dir, _point(args))
    if rec is None:
        print("absent")
        return EXIT_OK
    print(rec.to_line())
    return EXIT_OK


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wmoduli", description="Genus-2 moduli points over Q.")
    ap.add_argument("--weights", type=_weights, default=COMPACT,
                    help="weight system for point input and output: 1,2,3,5 (default) or 2,4,6,10")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", help="Igusa invariants of y^2 = f")
    s.add_argument("--sextic", required=True, help="a0,a1,...,a6 (rationals p/q allowed)")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("conic", help="rational point on a x^2 + b y^2 + c z^2 = 0")
    s.add_argument("--form", required=True, help="a,b,c")
    s.set_defaults(func=cmd_conic)

    for name, fn, text in (("classify", cmd_classify, "automorphism group tag"),
                           ("reconstruct", cmd_reconstruct, "curve over Q for a point, if any"),
                           ("isfine", cmd_isfine, "whether the point is fine")):
        s = sub.add_parser(name, help=text)
        s.add_argument("--point", required=True, help="[J2,J4,J6,J10]")
        s.set_defaults(func=fn)

    s = sub.add_parser("enumerate", help="canonical points of height <= h")
    s.add_argument("--height", type=_positive, required=True)
    s.add_argument("--shards", type=_positive)
    s.add_argument("--shard", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("count", help="grid size and number of points of height <= h")
    s.add_argument("--height", type=_positive, required=True)
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("build", help="build a point database")
    s.add_argument("--height", type=_positive, required=True)
    s.add_argument("--shards", type=_positive, default=1)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("stats", help="per-band summary of a database")
    s.add_argument("dir")
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("query", help="look up a point in a database")
    s.add_argument("dir")
    s.add_argument("--point", required=True)
    s.set_defaults(func=cmd_query)
    return ap


def _join_values(argv):
    """Glue '--sextic -1,0,...' into '--sextic=-1,0,...' so argparse does not
    read a leading minus as an option."""
    out, it = [], iter(argv)
    for a in it:
        if a in ("--sextic", "--form", "--point"):
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def main(argv=None) -> int:
    ap = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = ap.parse_args(_join_values(argv))
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args)
    except db.ResumeNeeded as exc:
        print(f"wmoduli: {exc}", file=sys.stderr)
        return EXIT_RESUME
    except (ValueError, ArithmeticError, db.DatabaseError, OSError) as exc:
        print(f"wmoduli: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
