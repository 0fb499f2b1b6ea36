"""Command line front end: ``wcalc <command> [options]``.

Without ``--ctriple`` or ``--g2`` commands work with the wonderful pieces
[J, v1, v2] for the triple ``--triple``; with either of them they work with
the pieces [v1, v2] of G1 x G2 for the pair (--triple, --ctriple).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import cache
from .pieces_gg import (
    check_index as check_gg, closure_witness_gg, closure_witness_gg_minus, dim_piece, enumerate_gg,
)
from .pieces_wonderful import WITNESSES, check_index as check_wonderful, dim_wonderful_piece, enumerate_wonderful
from .poset import build_gg_poset, build_poset
from .rootdata import RootSystemError, build_root_system
from .serialize import ParseError, format_triple, parse_gg, parse_triple, parse_wonderful
from .triples import PairContext, TripleError
from .verify import SUITES, run
from .weyl import WeylError

log = logging.getLogger("wcalc")


class Setup:
    def __init__(self, args):
        d = cache.cache_dir(args.cache_dir)
        self.W1, st1 = cache.load_group(args.g, d)
        log.info("weyl tables for %s: cache %s", self.W1.rs.name, st1)
        self.rs1 = self.W1.rs
        self.gg = args.ctriple is not None or args.g2 is not None
        if args.g2 is not None:
            self.W2, st2 = cache.load_group(args.g2, d)
            log.info("weyl tables for %s: cache %s", self.W2.rs.name, st2)
        else:
            self.W2 = self.W1
        self.rs2 = self.W2.rs
        self.A = parse_triple(args.triple, self.rs1, self.rs2)
        if self.gg:
            C = parse_triple(args.ctriple or "trivial", self.rs1, self.rs2)
            self.ctx = PairContext(self.rs1, self.rs2, self.A, C)
            self.variant = args.variant

    def describe(self) -> str:
        if self.gg:
            return (f"# {self.rs1.name} x {self.rs2.name}; A: {format_triple(self.A)}; "
                    f"C: {format_triple(self.ctx.C)}; variant {self.variant}")
        return f"# {self.rs1.name}; A: {format_triple(self.A)}"


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--g", default="A1", help="root system type, e.g. A2, B3, A1xA1 (default A1)")
    p.add_argument("--g2", help="second factor for G1 x G2 pieces")
    p.add_argument("--triple", default="trivial",
                   help="triple A: trivial, diag, swap or a literal A1={..};A2={..};a={i->j}")
    p.add_argument("--ctriple", help="triple C for G1 x G2 pieces (default trivial)")
    p.add_argument("--variant", choices=("plus", "minus"), default="plus")
    p.add_argument("--cache-dir", help="directory for cached Weyl tables (default $WCALC_CACHE)")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="wcalc", description="Stable pieces, dimensions and closure orders.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list piece indices with dimensions")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--ambient", action="store_true", help="G1 x G2 mode: add dim R_C")

    p = sub.add_parser("dim", parents=[common], help="dimension of one piece")
    p.add_argument("piece", help="J={..};v1=..;v2=.. or v1=..;v2=..")
    p.add_argument("--ambient", action="store_true")

    p = sub.add_parser("closure", parents=[common], help="is QUERY in the closure of TARGET?")
    p.add_argument("target")
    p.add_argument("query")
    p.add_argument("--criterion", type=int, choices=(1, 2, 3), default=3)

    p = sub.add_parser("poset", parents=[common], help="closure poset export")
    p.add_argument("--format", choices=("tsv", "json", "dot"), default="dot")
    p.add_argument("--criterion", type=int, choices=(1, 2, 3), default=3)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")

    p = sub.add_parser("cache", parents=[common], help="cache maintenance")
    p.add_argument("action", choices=("clear",))
    return ap


def _out(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_enumerate(args, s: Setup):
    if s.gg:
        nodes = enumerate_gg(s.ctx, s.variant)
        rows = [(str(p), dim_piece(s.ctx, p, args.ambient)) for p in nodes]
    else:
        nodes = enumerate_wonderful(s.rs1, s.A)
        rows = [(str(p), dim_wonderful_piece(s.rs1, s.A, p)) for p in nodes]
    if args.format == "json":
        _out(json.dumps([{"piece": k, "dim": d} for k, d in rows], indent=2))
    else:
        _out("\n".join([s.describe(), "piece\tdim"] + [f"{k}\t{d}" for k, d in rows]))
    return 0


def _piece(s: Setup, text: str, target: bool = False):
    if s.gg:
        idx = parse_gg(text, s.W1, s.W2, s.variant)
        if not target:
            check_gg(s.ctx, idx)
        return idx
    idx = parse_wonderful(text, s.W1)
    check_wonderful(s.rs1, s.A, idx, target=target)
    return idx


def cmd_dim(args, s: Setup):
    idx = _piece(s, args.piece)
    d = dim_piece(s.ctx, idx, args.ambient) if s.gg else dim_wonderful_piece(s.rs1, s.A, idx)
    _out(str(d))
    return 0


def cmd_closure(args, s: Setup):
    t = _piece(s, args.target, target=True)
    q = _piece(s, args.query)
    if s.gg:
        fn = closure_witness_gg if s.variant == "plus" else closure_witness_gg_minus
        w = fn(s.ctx, (t.v1, t.v2), q)
        names = ("x1", "y1")
    else:
        w = WITNESSES[args.criterion](s.rs1, s.A, t, q)
        names = ("x", "y", "z") if args.criterion == 1 else ("x", "z")
    if w is None:
        _out("no")
    else:
        _out("yes\t" + " ".join(f"{n}={e}" for n, e in zip(names, w)))
    return 0


def cmd_poset(args, s: Setup):
    if s.gg:
        P = build_gg_poset(s.ctx, s.variant)
    else:
        P = build_poset(s.rs1, s.A, args.criterion)
    if args.format == "dot":
        _out(P.to_dot())
    elif args.format == "json":
        _out(P.to_json())
    else:
        _out(P.to_tsv())
    return 0


def cmd_verify(args, s: Setup):
    if s.rs1 != s.rs2:
        raise ParseError("verify works on a single root system; drop --g2")
    _out(s.describe())
    return 1 if run(s.rs1, s.A, args.suite, echo=_out) else 0


COMMANDS = {
    "enumerate": cmd_enumerate,
    "dim": cmd_dim,
    "closure": cmd_closure,
    "poset": cmd_poset,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="wcalc: %(message)s", stream=sys.stderr)
    try:
        if args.command == "cache":
            n = cache.clear(cache.cache_dir(args.cache_dir))
            _out(f"removed {n} cache file(s)")
            return 0
        s = Setup(args)
        if not s.gg and s.rs1 != s.rs2:
            raise ParseError("wonderful pieces need a single root system")
        return COMMANDS[args.command](args, s)
    except (ParseError, TripleError, RootSystemError, WeylError) as e:
        print(f"wcalc: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
