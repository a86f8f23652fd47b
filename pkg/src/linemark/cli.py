"""Command-line interface.

Exit codes: 0 success, 1 verification failure (or search budget exhausted),
2 infeasible (or search proved non-existence), 3 unsupported open case,
4 experimental failure, 5 I/O or parse error.
"""

from __future__ import annotations

import argparse
import sys

from . import grid
from .errors import ExperimentalFailure, Infeasible, PreconditionError, UnsupportedOpenCase
from .feasibility import Params, feasibility, feasible_table
from .markfile import MarkingFileError, read_marking, render_marking
from .oracle import SearchLimits, search
from .planner import construct
from .verify import hat_guess, verify

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INFEASIBLE = 2
EXIT_UNSUPPORTED = 3
EXIT_EXPERIMENTAL = 4
EXIT_IO = 5


def _params(args) -> Params:
    return Params(args.k, args.n, args.a, args.b)


def _write(path, data: bytes) -> None:
    with open(path, "wb") as fh:
        fh.write(data)


def cmd_feasible(args, out) -> int:
    w = feasibility(_params(args))
    if w is None:
        print("feasible=false", file=out)
        return EXIT_INFEASIBLE
    print(f"feasible=true s={w.s} t={w.t}", file=out)
    return EXIT_OK


def cmd_construct(args, out) -> int:
    p = _params(args)
    try:
        m = construct(p, parity_group=args.parity_group, cap=args.cell_cap)
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=out)
        return EXIT_INFEASIBLE
    except UnsupportedOpenCase as exc:
        print(f"unsupported: {exc}", file=out)
        return EXIT_UNSUPPORTED
    except ExperimentalFailure as exc:
        print(f"experimental failure: {exc}", file=out)
        return EXIT_EXPERIMENTAL
    report = verify(m, p, cap=args.cell_cap)
    if not report.ok:
        out.write(report.render())
        return EXIT_VERIFY_FAILED
    if args.out:
        _write(args.out, render_marking(m))
    out.write(report.render())
    return EXIT_OK


def cmd_verify(args, out) -> int:
    m = read_marking(args.input)
    a = m.a if args.a is None else args.a
    b = m.b if args.b is None else args.b
    try:
        p = Params(m.k, m.n, a, b)
    except ValueError as exc:
        print(f"bad parameters: {exc}", file=out)
        return EXIT_VERIFY_FAILED
    report = verify(m, p, cap=args.cell_cap)
    out.write(report.render())
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def cmd_table(args, out) -> int:
    rows = feasible_table(args.k, args.n, include_infeasible=True)
    if args.format == "tsv":
        print("a\tb\tfeasible\ts\tt\troute", file=out)
        for r in rows:
            s, t = (r.witness.s, r.witness.t) if r.witness else ("", "")
            print(f"{r.a}\t{r.b}\t{str(r.feasible).lower()}\t{s}\t{t}\t{r.route}", file=out)
    else:
        for r in rows:
            if r.witness:
                print(f"a={r.a} b={r.b} feasible=true s={r.witness.s} t={r.witness.t} "
                      f"route={r.route}", file=out)
            else:
                print(f"a={r.a} b={r.b} feasible=false", file=out)
    return EXIT_OK


def cmd_search(args, out) -> int:
    res = search(_params(args), SearchLimits(args.max_nodes, args.max_seconds))
    print(f"result={res.status} nodes={res.nodes}", file=out)
    if res.found:
        if args.out:
            _write(args.out, render_marking(res.marking))
        return EXIT_OK
    return EXIT_INFEASIBLE if res.status == "none" else EXIT_VERIFY_FAILED


def cmd_hat(args, out) -> int:
    m = read_marking(args.input)
    try:
        hats = [int(x) for x in args.assignment.split(",")]
    except ValueError:
        print(f"bad assignment {args.assignment!r}", file=out)
        return EXIT_IO
    if len(hats) != m.n or any(not 0 <= h < m.k for h in hats):
        print(f"assignment must be {m.n} colors in 0..{m.k - 1}", file=out)
        return EXIT_IO
    correct = 0
    for i in range(m.n):
        g = hat_guess(m, i, hats[:i] + hats[i + 1 :])
        correct += g == hats[i]
        print(f"player={i} hat={hats[i]} guess={g} correct={'true' if g == hats[i] else 'false'}",
              file=out)
    print(f"correct={correct}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linemark", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def kn(sp, ab=True):
        sp.add_argument("-k", type=int, required=True)
        sp.add_argument("-n", type=int, required=True)
        if ab:
            sp.add_argument("-a", type=int, required=True)
            sp.add_argument("-b", type=int, required=True)

    def cap(sp):
        sp.add_argument("--cell-cap", type=int, default=grid.DEFAULT_CELL_CAP)

    sp = sub.add_parser("feasible", help="check the counting condition")
    kn(sp)
    sp.set_defaults(func=cmd_feasible)

    sp = sub.add_parser("construct", help="build, verify and write a marking")
    kn(sp)
    sp.add_argument("-o", "--out")
    sp.add_argument("--parity-group", choices=["cyclic", "product"], default="product")
    cap(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="certify a marking file")
    sp.add_argument("-i", "--in", dest="input", required=True)
    sp.add_argument("-a", type=int)
    sp.add_argument("-b", type=int)
    cap(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("table", help="feasibility and route for every (a, b)")
    kn(sp, ab=False)
    sp.add_argument("--format", choices=["text", "tsv"], default="text")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("search", help="exhaustive search on tiny grids")
    kn(sp)
    sp.add_argument("-o", "--out")
    sp.add_argument("--max-nodes", type=int, default=10_000_000)
    sp.add_argument("--max-seconds", type=float, default=60.0)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("hat", help="play one round of the hat game")
    sp.add_argument("-i", "--in", dest="input", required=True)
    sp.add_argument("--assignment", required=True, help="comma-separated hat colors")
    sp.set_defaults(func=cmd_hat)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except MarkingFileError as exc:
        print(f"parse error: {exc}", file=out)
        return EXIT_IO
    except OSError as exc:
        print(f"I/O error: {exc}", file=out)
        return EXIT_IO
    except (grid.CellCapExceeded, PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=out)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
