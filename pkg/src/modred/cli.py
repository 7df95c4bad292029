"""Command-line front end: every computation as a subcommand with JSON output.

All output is deterministic (canonical ordering everywhere, keys sorted), so
identical invocations produce identical bytes.  Exit codes: 0 success, 1 a
`check` invariant failed, 2 configuration/validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .base_arith import CuspidalDatum, DatumError, digit_decompose
from .checks import run_all
from .classical_limit import (
    RegimeError,
    UnsupportedPatternError,
    YoungDiagram,
    borel_induction_decomposition,
    elliptic_reduction_classical,
    induct_diagrams,
)
from .involution import InvolutionUndefined, involute_single_segment
from .levels import enumerate_index_set, index_width
from .reduction import (
    constituents_disjoint,
    euler_check,
    extension_graph_lubin_tate,
    extension_graph_steinberg,
    jacquet_constituent,
    jacquet_steinberg,
    lubin_tate_constituents,
    steinberg_constituents,
)
from .serialize import (
    classical_json,
    constituent_json,
    datum_json,
    elliptic_json,
    graph_dot,
    graph_json,
    groth_json,
    param_json,
)
from .levels import LevelIndex
from .zelevinski import LinePoint, ParameterError, cuspidal_line


def _add_datum_args(p: argparse.ArgumentParser):
    p.add_argument("--ell", type=int, required=True, help="the modulus (a prime)")
    p.add_argument("--m", type=int, default=None, help="target period m (= epsilon when > 1, else ell)")
    p.add_argument("--epsilon", type=int, default=None, help="line size (overrides --m)")
    p.add_argument("--q", type=int, default=None, help="residue cardinality (optional witness)")
    p.add_argument("--g", type=int, default=1, help="the cuspidal base lives on GL_g")


def _datum(args) -> CuspidalDatum:
    if args.epsilon is not None:
        return CuspidalDatum(g=args.g, ell=args.ell, epsilon=args.epsilon, q=args.q)
    if args.m is not None:
        d = CuspidalDatum.for_period(args.m, args.ell, g=args.g)
        if args.q is not None:
            d = CuspidalDatum(g=args.g, ell=args.ell, epsilon=d.epsilon, q=args.q)
        return d
    if args.q is not None:
        return CuspidalDatum.trivial_character(args.q, args.ell)
    raise DatumError("need --m, --epsilon, or --q to pin the datum down")


def _emit(payload, args):
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_level(raw: str) -> LevelIndex:
    return LevelIndex(tuple(int(x) for x in raw.split(",") if x.strip() != ""))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="modred",
        description="exact mod-ell reduction combinatorics for GL_n over a p-adic field",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index-set", help="enumerate the level index set of size s")
    _add_datum_args(p)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser("digits", help="mixed-radix digit decomposition of s")
    _add_datum_args(p)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser("involute", help="dual of a single-segment label")
    _add_datum_args(p)
    p.add_argument("--s", type=int, required=True, help="segment length")
    p.add_argument("--twist", default="0", help="start twist, e.g. 1/2")
    p.add_argument("--out")

    p = sub.add_parser("reduce-steinberg", help="constituents of the size-s Steinberg reduction")
    _add_datum_args(p)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser("reduce-lt", help="constituents of the mixed reduction with arms (t, s-t)")
    _add_datum_args(p)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser("jacquet", help="Levi restriction formulas")
    _add_datum_args(p)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--i", default=None, help="level index (comma list) for the constituent restriction")
    p.add_argument("--arrow", choices=["left", "right"], default="left")
    p.add_argument("--variant", choices=["standard", "opposite"], default="standard")
    p.add_argument("--out")

    for name in ("graph-steinberg", "graph-lt"):
        p = sub.add_parser(name, help=f"extension graph of the induction lattice ({name.split('-')[1]})")
        _add_datum_args(p)
        p.add_argument("--s", type=int, required=True)
        if name == "graph-lt":
            p.add_argument("--t", type=int, required=True)
        p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
        p.add_argument("--out")

    p = sub.add_parser("euler", help="Euler-characteristic identity of the induction complex")
    _add_datum_args(p)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser("disjoint", help="disjointness of two mixed reductions")
    _add_datum_args(p)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--t1", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser("classical", help="classical-limit computations (q = 1 mod ell, d < ell)")
    p.add_argument("--ell", type=int, default=None, help="enforce d < ell when given")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pattern", help="arrow pattern, e.g. '<1,>1,<1'")
    group.add_argument("--borel", type=int, metavar="D", help="Borel induction decomposition in degree D")
    group.add_argument("--induct", metavar="P1xP2", help="numbered-box induction, e.g. '2,1x1,1'")
    p.add_argument("--out")

    p = sub.add_parser("check", help="run the full invariant suite")
    p.add_argument("--out")

    args = parser.parse_args(argv)

    try:
        return _dispatch(args)
    except (DatumError, ParameterError, InvolutionUndefined, RegimeError,
            UnsupportedPatternError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    cmd = args.command

    if cmd == "check":
        report, ok = run_all()
        for row in report:
            print(f"[{row['status']}] {row['check']}: {row['detail']}", file=sys.stderr)
        _emit({"checks": report, "ok": ok}, args)
        return 0 if ok else 1

    if cmd == "classical":
        if args.pattern is not None:
            element = elliptic_reduction_classical(args.pattern, ell=args.ell)
        elif args.borel is not None:
            element = borel_induction_decomposition(args.borel, ell=args.ell)
        else:
            left, right = args.induct.split("x")
            dy1 = YoungDiagram(tuple(int(x) for x in left.split(",")))
            dy2 = YoungDiagram(tuple(int(x) for x in right.split(",")))
            element = induct_diagrams(dy1, dy2, ell=args.ell)
        _emit(classical_json(element), args)
        return 0

    datum = _datum(args)

    if cmd == "index-set":
        width = index_width(datum, args.s)
        payload = [list(i.padded(width)) for i in enumerate_index_set(datum, args.s)]
    elif cmd == "digits":
        dec = digit_decompose(datum, args.s)
        payload = {"m_minus1": dec.m_minus1, "digits": list(dec.digits), "s": dec.s}
    elif cmd == "involute":
        base = LinePoint(cuspidal_line(datum), Fraction(args.twist))
        payload = param_json(involute_single_segment(base, args.s))
    elif cmd == "reduce-steinberg":
        width = index_width(datum, args.s)
        payload = {
            "context": datum_json(datum),
            "constituents": [
                constituent_json(lab, width) for lab in steinberg_constituents(datum, args.s)
            ],
        }
    elif cmd == "reduce-lt":
        width = index_width(datum, max(args.t - 1, 1))
        payload = {
            "context": datum_json(datum),
            "constituents": [
                constituent_json(lab, width)
                for lab in lubin_tate_constituents(datum, args.s, args.t)
            ],
        }
    elif cmd == "jacquet":
        if args.i is None:
            a, b = jacquet_steinberg(datum, args.s, args.t, arrow=args.arrow, variant=args.variant)
            payload = {"factors": [elliptic_json(a), elliptic_json(b)]}
        else:
            width = index_width(datum, args.s)
            element = jacquet_constituent(datum, args.s, _parse_level(args.i), args.t)
            payload = groth_json(element, width)
    elif cmd in ("graph-steinberg", "graph-lt"):
        if cmd == "graph-steinberg":
            graph = extension_graph_steinberg(datum, args.s)
            width = index_width(datum, args.s)
            title = f"steinberg-s{args.s}"
        else:
            graph = extension_graph_lubin_tate(datum, args.s, args.t)
            width = index_width(datum, max(args.t - 1, 1))
            title = f"lt-s{args.s}-t{args.t}"
        if args.dot:
            text = graph_dot(graph, title)
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return 0
        payload = graph_json(graph, datum, width)
    elif cmd == "euler":
        payload = {"holds": euler_check(datum, args.s)}
    elif cmd == "disjoint":
        payload = {"disjoint": constituents_disjoint(datum, args.s, args.t, args.t1)}
    else:  # pragma: no cover
        raise ValueError(f"unhandled command {cmd}")

    _emit(payload, args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
