"""Command-line interface.

Exit status is 0 on success, 1 when the input is invalid or the target is
unreachable, and 2 for usage, I/O and parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bench as bench_mod
from .complex import facets, validate
from .errors import ConfigInvalid, InvalidSimplex, InvalidWeights, ParseError
from .generate import GeneratorConfig, generate
from .paths import shortest_path, sssp
from .scxio import format_weight, load, serialize

OK, FAILED, USAGE = 0, 1, 2


def fmt_simplex(s) -> str:
    return ",".join(map(str, s))


def fmt_dist(x: float) -> str:
    return "inf" if x == float("inf") else format_weight(x)


def parse_simplex(text: str) -> tuple[int, ...]:
    try:
        return tuple(sorted(int(t) for t in text.split(",")))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex ids, got {text!r}") from None


def _err(msg: str) -> None:
    print(f"scxpath: {msg}", file=sys.stderr)


def _load(path: str):
    try:
        return load(path)
    except OSError as exc:
        _err(f"{path}: {exc.strerror or exc}")
    except ParseError as exc:
        _err(f"{path}:{exc.line}: {exc.reason}")
    return None


def cmd_validate(args) -> int:
    X = _load(args.file)
    if X is None:
        return USAGE
    report = validate(X, strict_positive=args.strict_positive)
    if args.json:
        print(json.dumps({"ok": not report, "violations": [
            {"kind": v.kind, "simplex": list(v.simplex), "detail": v.detail} for v in report]}))
    elif report:
        for v in report:
            print(v)
    else:
        print("ok")
    return FAILED if report else OK


def cmd_sssp(args) -> int:
    X = _load(args.file)
    if X is None:
        return USAGE
    if not _query_ok(X, args.source):
        return USAGE
    source = X.check_simplex(args.source)
    try:
        dm = sssp(X, source)
    except (InvalidSimplex, InvalidWeights) as exc:
        _err(str(exc))
        return FAILED
    rows = sorted(dm.dist.items(), key=lambda kv: (kv[1], kv[0]))
    table = [(s, t, dm.pred[s].simplex if s in dm.pred else None) for s, t in rows]
    if args.all:
        extra = sorted({f for tau in X.top for f in facets(tau)} - dm.dist.keys())
        table += [(s, float("inf"), None) for s in extra]
    if args.json:
        print(json.dumps({"source": list(source), "rows": [
            {"simplex": list(s), "distance": None if t == float("inf") else t,
             "predecessor": list(p) if p else None} for s, t, p in table]}))
    else:
        for s, t, p in table:
            print(fmt_simplex(s), fmt_dist(t), fmt_simplex(p) if p else "-")
    return OK


def _query_ok(X, *simplices) -> bool:
    for q in simplices:
        try:
            X.check_simplex(q)
        except InvalidSimplex as exc:
            _err(str(exc))
            return False
    return True


def cmd_path(args) -> int:
    X = _load(args.file)
    if X is None:
        return USAGE
    if not _query_ok(X, args.source, args.target):
        return USAGE
    try:
        path = shortest_path(X, args.source, args.target)
    except (InvalidSimplex, InvalidWeights) as exc:
        _err(str(exc))
        return FAILED
    if path is None:
        if args.json:
            print(json.dumps({"reachable": False}))
        else:
            print("unreachable")
        return FAILED
    if args.json:
        print(json.dumps({"reachable": True, "simplices": [list(s) for s in path.simplices],
                          "via": [list(t) for t in path.via], "hops": path.length, "total": path.total}))
    else:
        print("simplices:", " ".join(map(fmt_simplex, path.simplices)))
        print("via:", " ".join(map(fmt_simplex, path.via)) or "-")
        print("hops:", path.length)
        print("total:", fmt_dist(path.total))
    return OK


def cmd_generate(args) -> int:
    cfg = GeneratorConfig(n=args.n, d=args.d, p=args.p, weight_low=args.wmin, weight_high=args.wmax,
                          integer_weights=args.int, seed=args.seed)
    try:
        X = generate(cfg)
    except ConfigInvalid as exc:
        _err(str(exc))
        return USAGE
    data = serialize(X)
    if args.output == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        try:
            with open(args.output, "wb") as fh:
                fh.write(data)
        except OSError as exc:
            _err(f"{args.output}: {exc.strerror or exc}")
            return USAGE
    return OK


def cmd_bench(args) -> int:
    try:
        rows = bench_mod.sweep(args.vertices, args.d, args.m, seed=args.seed, repeat=args.repeat)
    except ConfigInvalid as exc:
        _err(str(exc))
        return USAGE
    sys.stdout.write(bench_mod.to_csv(rows))
    if args.plot:
        from .report import save_bench_figure

        save_bench_figure(rows, args.plot, title=f"d={args.d}, {args.vertices} vertices")
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scxpath", description="Shortest d-paths in weighted simplicial complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a .scx file")
    p.add_argument("file")
    p.add_argument("--strict-positive", action="store_true", help="also reject zero weights")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("sssp", help="distances from one (d-1)-simplex")
    p.add_argument("file")
    p.add_argument("--source", type=parse_simplex, required=True, help="e.g. 1,3")
    p.add_argument("--all", action="store_true", help="also list unreachable incident simplices as inf")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sssp)

    p = sub.add_parser("path", help="one shortest d-path")
    p.add_argument("file")
    p.add_argument("--source", type=parse_simplex, required=True)
    p.add_argument("--target", type=parse_simplex, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("generate", help="write a seeded random complex")
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    p.add_argument("--d", type=int, required=True, help="dimension")
    p.add_argument("--p", type=float, required=True, help="inclusion probability")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--wmin", type=float, default=1.0)
    p.add_argument("--wmax", type=float, default=10.0)
    p.add_argument("--int", action="store_true", help="integer weights")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="time sssp over a size sweep, CSV on stdout")
    p.add_argument("--vertices", type=int, default=100)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--m", type=int, nargs="+", default=[10_000, 20_000, 40_000], help="target d-simplex counts")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeat", type=int, default=1, help="report the median of this many runs")
    p.add_argument("--plot", metavar="FILE", help="also save a figure (format from extension)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
