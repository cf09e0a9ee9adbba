"""Command-line front end.

Exit codes: 0 success, 1 verification or equivalence failure, 2 usage error,
3 guard violation or unsupported board.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from kingdom import engine, matching, oracle, transfer
from kingdom.board import BoardSpec, Boundary, Family, parse_board
from kingdom.errors import BoardSpecError, GuardError, NotDominatingError, UnsupportedError
from kingdom.poly import first_difference

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

BOUNDARY_FLAGS = {"free": (), "cyl_x": (0,), "cyl_y": (1,), "torus": (0, 1)}


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B or A, got {text!r}") from None
    if b < a:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


def _board(text: str) -> BoardSpec:
    return parse_board(text)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_poly(args) -> int:
    spec = _board(args.board)
    p = engine.polynomial(
        spec, args.method, threads=args.threads, prune=not args.no_prune, force=args.force
    )
    text = "\n".join(
        [
            f"board:   {spec}",
            f"method:  {engine.resolve_method(spec, args.method)}",
            f"nverts:  {p.nverts}",
            f"coeffs:  {' '.join(map(str, p.coeffs))}",
            f"gamma:   {p.gamma}",
            f"P(-1):   {p.eval_at(-1)}",
            f"P(1):    {p.eval_at(1)}",
        ]
    )
    _emit(args, p.to_json(str(spec)), text)
    return EXIT_OK


def cmd_eval(args) -> int:
    spec = _board(args.board)
    value = engine.evaluate(
        spec, args.z, args.method, threads=args.threads, prune=not args.no_prune, force=args.force
    )
    _emit(args, {"board": str(spec), "z": args.z, "value": str(value)}, str(value))
    return EXIT_OK


def cmd_domination_number(args) -> int:
    spec = _board(args.board)
    p = engine.polynomial(
        spec, args.method, threads=args.threads, prune=not args.no_prune, force=args.force
    )
    _emit(args, {"board": str(spec), "gamma": p.gamma, "count": str(p.coeffs[p.gamma])},
          str(p.gamma))
    return EXIT_OK


def theorem_sign(m: int, n: int) -> int:
    return (-1) ** (((m + 1) // 2) * ((n + 1) // 2))


def render_table(m_range: range, n_range: range, rows: list[list]) -> str:
    header = ["n\\m", *map(str, m_range)]
    body = [[str(n), *map(str, row)] for n, row in zip(n_range, rows)]
    width = max(len(cell) for line in [header, *body] for cell in line)
    lines = [" ".join(cell.rjust(width) for cell in header)]
    lines.append("-" * len(lines[0]))
    lines.extend(" ".join(cell.rjust(width) for cell in line) for line in body)
    return "\n".join(lines)


def table_to_csv(m_range: range, n_range: range, rows: list[list[int]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n\\m", *m_range])
    for n, row in zip(n_range, rows):
        w.writerow([n, *row])
    return buf.getvalue()


def table_from_csv(text: str) -> tuple[list[int], list[int], list[list[int]]]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    ms = [int(x) for x in header[1:]]
    ns, rows = [], []
    for line in reader:
        if not line:
            continue
        ns.append(int(line[0]))
        rows.append([int(x) for x in line[1:]])
    return ms, ns, rows


def cmd_table(args) -> int:
    family = Family(args.family)
    cyclic = BOUNDARY_FLAGS[args.boundary]
    if args.check_theorem and (family is not Family.KING or cyclic):
        raise UsageError("--check-theorem applies to free king boards only")
    rows = []
    for n in args.n:
        row = []
        for m in args.m:
            spec = BoardSpec(
                family, (m, n), tuple(Boundary.CYCLIC if a in cyclic else Boundary.FREE for a in range(2))
            )
            row.append(
                engine.evaluate(spec, args.z, args.method, threads=args.threads,
                                prune=not args.no_prune, force=args.force)
            )
        rows.append(row)
    checks = None
    failed = 0
    if args.check_theorem:
        checks = [[v == theorem_sign(m, n) for m, v in zip(args.m, row)] for n, row in zip(args.n, rows)]
        failed = sum(not ok for line in checks for ok in line)
    if args.json:
        payload = {
            "family": family.value,
            "boundary": args.boundary.replace("_", "-"),
            "z": args.z,
            "m": list(args.m),
            "n": list(args.n),
            "values": [[str(v) for v in row] for row in rows],
        }
        if checks is not None:
            payload["check"] = checks
        print(json.dumps(payload, indent=2))
    elif args.csv:
        sys.stdout.write(table_to_csv(args.m, args.n, rows))
    else:
        print(render_table(args.m, args.n, rows))
        if checks is not None:
            print()
            print("theorem check (. pass, X fail):")
            print(render_table(args.m, args.n, [["." if ok else "X" for ok in line] for line in checks]))
    if checks is not None:
        total = len(args.m) * len(args.n)
        print(f"theorem check: {total - failed}/{total} cells pass", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_compare(args) -> int:
    spec = _board(args.board)
    if spec.d != 2:
        raise UnsupportedError(f"compare needs a two-dimensional board, got d = {spec.d}")
    t0 = time.perf_counter()
    po = oracle.enumerate_polynomial(spec, force=args.force, threads=args.threads)
    t1 = time.perf_counter()
    pt = transfer.transfer_polynomial(spec, prune=not args.no_prune)
    t2 = time.perf_counter()
    k = first_difference(po, pt)
    payload = {
        "board": str(spec),
        "equal": k is None,
        "oracle_seconds": round(t1 - t0, 6),
        "transfer_seconds": round(t2 - t1, 6),
    }
    if k is None:
        text = f"{spec}: equal ({len(po.coeffs)} coefficients); oracle {t1 - t0:.3f}s, transfer {t2 - t1:.3f}s"
    else:
        a = po.coeffs[k] if k < len(po.coeffs) else None
        b = pt.coeffs[k] if k < len(pt.coeffs) else None
        payload.update(first_difference=k, oracle=str(a), transfer=str(b))
        text = f"{spec}: MISMATCH at z^{k}: oracle {a}, transfer {b}"
    _emit(args, payload, text)
    return EXIT_OK if k is None else EXIT_FAIL


def cmd_verify_matching(args) -> int:
    spec = _board(args.board)
    if args.samples is not None:
        report = matching.sampled_check(spec, args.samples, args.seed)
        text = (
            f"{spec}: {report.trials} samples, {report.partners} partners, "
            f"{report.fixed_points} fixed points ({report.fixed_point_samples} corner-set samples), "
            f"{len(report.violations)} violations"
        )
    else:
        report = matching.verify_theorem(spec, force=args.force)
        checks = ", ".join(f"{k} {'ok' if v else 'FAIL'}" for k, v in report.checks.items())
        text = (
            f"{spec}: {report.dominating_sets} dominating sets, {report.pairs} pairs, "
            f"{report.fixed_points} fixed point(s); signed count {report.signed_count} "
            f"(expected {report.expected_sign}); {checks}"
        )
    text += "\n" + ("PASS" if report.passed else "FAIL")
    for v in report.violations:
        text += f"\n  {v}"
    _emit(args, report.to_json(), text)
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker threads for the oracle (default: all cores)")
    common.add_argument("--no-prune", action="store_true", default=argparse.SUPPRESS,
                        help="keep dead transfer states (debugging)")
    common.add_argument("--force", action="store_true", default=argparse.SUPPRESS,
                        help="let the oracle run past its vertex guard")

    methods = argparse.ArgumentParser(add_help=False)
    methods.add_argument("--method", choices=engine.METHODS, default="auto")

    parser = argparse.ArgumentParser(prog="kingdom", parents=[common],
                                     description="Domination polynomials of chessboard graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[common, methods], help="full domination polynomial")
    p.add_argument("board")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("eval", parents=[common, methods], help="polynomial at one integer point")
    p.add_argument("board")
    p.add_argument("-z", type=int, default=-1)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("domination-number", parents=[common, methods], help="smallest dominating set size")
    p.add_argument("board")
    p.set_defaults(func=cmd_domination_number)

    p = sub.add_parser("table", parents=[common, methods], help="grid of values over m and n")
    p.add_argument("family", choices=[f.value for f in Family])
    bnd = p.add_mutually_exclusive_group()
    for flag in BOUNDARY_FLAGS:
        bnd.add_argument(f"--{flag.replace('_', '-')}", dest="boundary", action="store_const", const=flag)
    p.set_defaults(boundary="free")
    p.add_argument("-m", type=parse_range, required=True, help="column range, e.g. 1..8")
    p.add_argument("-n", type=parse_range, required=True, help="row range, e.g. 1..8")
    p.add_argument("-z", type=int, default=-1)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--check-theorem", action="store_true",
                   help="compare each cell with (-1)^(ceil(m/2)*ceil(n/2))")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("compare", parents=[common], help="oracle vs transfer, coefficient by coefficient")
    p.add_argument("board")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify-matching", parents=[common], help="check the parity-reversing partner map")
    p.add_argument("board")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_matching)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("json", False), ("threads", None), ("no_prune", False), ("force", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except (BoardSpecError, UsageError, NotDominatingError) as exc:
        print(f"kingdom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GuardError, UnsupportedError) as exc:
        print(f"kingdom: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
