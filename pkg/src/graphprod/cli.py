"""Command-line front end.

Exit status: 0/1 are decision results (``iso``), 2 is a parse error, 3 a
semantic error (unknown vertex, non-CP centralizer, infinite-order element
where a finite one is required, ...).
"""
from __future__ import annotations

import argparse
import sys

from .canonical import canonical_indecomposable, canonical_t0_abelian, groups_isomorphic, refine
from .core import INFINITE
from .errors import ParseError, SemanticError
from .graphs import read_graph, t0_quotient
from .oracle import DEFAULT_RADIUS_CAP, enumerate_ball
from .words import (
    Word,
    centralizer_of_cp,
    cyclically_reduce,
    element_order,
    maximal_finite_reps,
    minimal_conjugacy_rep,
    normal_form,
    reduce,
    support,
)

EXIT_PARSE = 2
EXIT_SEMANTIC = 3


class _InputError(Exception):
    def __init__(self, source, error):
        self.source = source
        self.error = error


def _graph(path):
    try:
        return read_graph(path)
    except ParseError as exc:
        raise _InputError(path, exc) from None
    except OSError as exc:
        raise _InputError(path, ParseError(f"cannot read file: {exc.strerror}")) from None


def _word(graph, text):
    try:
        return Word.parse(graph, text)
    except ParseError as exc:
        raise _InputError("word", exc) from None


def _fmt_set(vs):
    return "{" + ", ".join(sorted(vs)) + "}"


def _cmd_word(op):
    def run(args, out):
        g = _graph(args.graph)
        w = _word(g, args.word)
        out.write(op(w) + "\n")
        return 0

    return run


def _cyclic_reduce(args, out):
    g = _graph(args.graph)
    conj, core = cyclically_reduce(_word(g, args.word))
    out.write(f"conjugator {conj}\ncore {core}\n")
    return 0


def _centralizer(args, out):
    g = _graph(args.graph)
    out.write(centralizer_of_cp(_word(g, args.word)).to_text())
    return 0


def _order(w):
    n = element_order(w)
    return "infinite" if n == INFINITE else str(n)


def _cmd_graph(op):
    def run(args, out):
        out.write(op(_graph(args.graph)).to_text())
        return 0

    return run


def _iso(args, out):
    g1, g2 = _graph(args.graph1), _graph(args.graph2)
    witness = groups_isomorphic(g1, g2)
    if witness is None:
        out.write("NOT ISOMORPHIC\n")
        return 1
    for u in refine(g1).vertices:
        out.write(f"{u} -> {witness[u]}\n")
    return 0


def _ball(args, out):
    ball = enumerate_ball(_graph(args.graph), args.radius, cap=args.cap)
    for r, n in enumerate(ball.sizes):
        out.write(f"{r} {n}\n")
    return 0


def _maxfinite(args, out):
    for clique in maximal_finite_reps(_graph(args.graph)):
        out.write(" ".join(sorted(clique)) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphprod", description="Compute in graph products of finitely generated abelian groups.")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def word_cmd(name, handler, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph")
        sp.add_argument("word", help='word such as "a b^-1 a^3" (quote it)')
        sp.set_defaults(handler=handler)

    word_cmd("reduce", _cmd_word(lambda w: str(normal_form(reduce(w)))), "reduced word (printed in normal form)")
    word_cmd("nf", _cmd_word(lambda w: str(normal_form(w))), "normal form")
    word_cmd("support", _cmd_word(lambda w: _fmt_set(support(w))), "support of the element")
    word_cmd("cyclic-reduce", _cyclic_reduce, "conjugator and cyclically reduced core")
    word_cmd("centralizer", _centralizer, "centralizer subgraph of a CP element")
    word_cmd("order", _cmd_word(_order), "element order")
    word_cmd("minrep", _cmd_word(lambda w: str(minimal_conjugacy_rep(w))), "shortest conjugate of a finite-order element")

    for name, op, help_ in (
        ("refine", refine, "split labels into primary cyclic cliques"),
        ("t0", t0_quotient, "T0-quotient"),
        ("canonical", canonical_indecomposable, "canonical indecomposable-cyclic decomposition"),
        ("canonical-t0", canonical_t0_abelian, "canonical T0 abelian decomposition"),
    ):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph")
        sp.set_defaults(handler=_cmd_graph(op))

    sp = sub.add_parser("iso", help="decide whether two presentations give isomorphic groups")
    sp.add_argument("graph1")
    sp.add_argument("graph2")
    sp.set_defaults(handler=_iso)

    sp = sub.add_parser("ball", help="cumulative ball sizes in the Cayley graph")
    sp.add_argument("graph")
    sp.add_argument("radius", type=int)
    sp.add_argument("--cap", type=int, default=DEFAULT_RADIUS_CAP, help="largest radius allowed (default %(default)s)")
    sp.set_defaults(handler=_ball)

    sp = sub.add_parser("maxfinite", help="representatives of maximal finite subgroups")
    sp.add_argument("graph")
    sp.set_defaults(handler=_maxfinite)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args, out)
    except _InputError as exc:
        err.write(f"{exc.source}: {exc.error}\n")
        return EXIT_PARSE
    except SemanticError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
