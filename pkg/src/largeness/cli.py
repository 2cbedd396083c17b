"""Command line: ``largeness {construct,verify,witness,fiber,lattice}``.

Exit codes: 0 success, 1 violation or missing witness, 2 inconclusive or
budget exhausted, 64 malformed input or usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .claims import replay_all
from .constructions import THEOREMS, ConstructionResult, construct
from .errors import BoundsError, DomainError, ParseError, PreconditionError
from .families import (find_delta_witness, find_ip_witness, pws_witness, syndetic_max_gap,
                       thick_run)
from .fiber import FiberBacked, Rect, pbm_bytes
from .lattice import family_lattice
from .polynomials import parse_poly
from .report import (EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, dumps,
                     export_report, exit_code, write_atomic)
from .sets import descriptor_from_json


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    kw = {}
    if args.modulus is not None:
        kw["modulus"] = args.modulus
    if args.N is not None:
        kw["N"] = args.N
    if args.base is not None:
        kw["base"] = args.base
    res = construct(args.theorem, args.poly, args.cap, **kw)
    _emit(dumps(res.to_json()), args.out)
    if args.out:
        print(f"{res.name}: {len(res.claims)} claims written to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    obj = _load_json(args.result)
    try:
        res = ConstructionResult.from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"{args.result}: not a construction result ({exc})") from exc
    outcomes = replay_all(res)
    payload, summary = export_report(outcomes, res.name)
    print(summary)
    if args.report:
        write_atomic(args.report, dumps(payload))
    return exit_code(outcomes)


def cmd_witness(args) -> int:
    s = descriptor_from_json(_load_json(args.set))
    if args.kind == "ip":
        rep = find_ip_witness(s, args.k, args.bound)
    elif args.kind == "delta":
        rep = find_delta_witness(s, args.k, args.bound)
    elif args.kind == "thick":
        rep = thick_run(s, args.L, (args.lo, args.hi))
    elif args.kind == "pws":
        rep = pws_witness(s, args.g, args.L, (args.lo, args.hi))
    else:
        gap = syndetic_max_gap(s, (args.lo, args.hi))
        payload = {"kind": "syndetic", "max_gap": None if gap is None else str(gap),
                   "window": [str(args.lo), str(args.hi)]}
        _emit(dumps(payload), args.out)
        return EXIT_OK if gap is not None else EXIT_VIOLATION
    _emit(dumps(rep.to_json()), args.out)
    return {"witness_found": EXIT_OK, "exhausted": EXIT_VIOLATION}.get(rep.verdict,
                                                                        EXIT_INCONCLUSIVE)


def cmd_fiber(args) -> int:
    A = descriptor_from_json(_load_json(args.set))
    polys = [parse_poly(p) for p in args.poly]
    rect = Rect(*args.rect)
    fiber = FiberBacked(A, tuple(polys), args.universe)
    pts = fiber.points(rect)
    text = "m,n\n" + "".join(f"{m},{n}\n" for m, n in pts)
    _emit(text, args.out)
    if args.pbm:
        write_atomic(args.pbm, pbm_bytes(fiber.grid(rect)))
    if args.out:
        print(f"{len(pts)} points written to {args.out}")
    return EXIT_OK


def cmd_lattice(args) -> int:
    lat = family_lattice(args.max_n)
    if args.implies:
        print("true" if lat.implies(*args.implies) else "false")
    else:
        payload = {"nodes": list(lat.nodes), "edges": [list(e) for e in lat.edges]}
        _emit(dumps(payload), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="largeness", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build a construction and write its claims")
    c.add_argument("--theorem", required=True, choices=THEOREMS)
    c.add_argument("--poly", default=None,
                   help="polynomial such as 'n^2' (default depends on the theorem)")
    c.add_argument("--cap", type=int, default=None,
                   help="size parameter: N, index cap, count, blocks or radius")
    c.add_argument("--modulus", type=int, default=None, help="syndetic-d1 modulus (default 5)")
    c.add_argument("--N", type=int, default=None, help="remark2 region height (default 10)")
    c.add_argument("--base", type=int, default=None, help="thick block base (default 2)")
    c.add_argument("--out", default=None, help="output JSON path (default stdout)")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="replay every claim of a construction result")
    v.add_argument("result")
    v.add_argument("--report", default=None, help="write the JSON report here")
    v.set_defaults(func=cmd_verify)

    w = sub.add_parser("witness", help="bounded witness search on a set descriptor")
    w.add_argument("--kind", required=True, choices=("ip", "delta", "thick", "pws", "syndetic"))
    w.add_argument("--set", required=True, help="set descriptor JSON")
    w.add_argument("--k", type=int, default=3, help="witness length (default 3)")
    w.add_argument("--bound", type=int, default=100, help="largest x_i (default 100)")
    w.add_argument("--L", type=int, default=10, help="run or block length (default 10)")
    w.add_argument("--g", type=int, default=1, help="largest allowed gap (default 1)")
    w.add_argument("--lo", type=int, default=1, help="window start (default 1)")
    w.add_argument("--hi", type=int, default=1000, help="window end (default 1000)")
    w.add_argument("--out", default=None)
    w.set_defaults(func=cmd_witness)

    f = sub.add_parser("fiber", help="export fiber points as CSV")
    f.add_argument("--set", required=True, help="set descriptor JSON for A")
    f.add_argument("--poly", action="append", required=True, help="repeat for several")
    f.add_argument("--rect", type=int, nargs=4, required=True,
                   metavar=("M_LO", "M_HI", "N_LO", "N_HI"))
    f.add_argument("--universe", default="naturals2", choices=("naturals2", "integers2"))
    f.add_argument("--out", default=None, help="CSV path (default stdout)")
    f.add_argument("--pbm", default=None, help="also write a plain portable bitmap")
    f.set_defaults(func=cmd_fiber)

    lt = sub.add_parser("lattice", help="query the implication lattice")
    lt.add_argument("--implies", nargs=2, metavar=("F1", "F2"), default=None)
    lt.add_argument("--max-n", type=int, default=8, help="largest n in the IP_n chains")
    lt.add_argument("--out", default=None)
    lt.set_defaults(func=cmd_lattice)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, PreconditionError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BoundsError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
