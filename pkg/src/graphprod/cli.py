"""Command-line front end.

Exit codes: 0 success or true, 1 false, 2 certificate rejected,
3 bad input, 4 a search or enumeration limit was hit.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .action import DEFAULT_STATE_LIMIT, enumerate_fk
from .errors import BudgetExceeded, GraphProductError, StateLimitExceeded
from .fixtures import FIXTURE_NAMES, fixture_text
from .formats import (
    certificate_to_doc,
    dumps_machine,
    instance_to_doc,
    nf_to_doc,
    parse_certificate,
    parse_instance,
    parse_quotients,
    parse_word,
)
from .normalform import format_normal_form, lfnf
from .oracle import ClosureConfig, closure_equal
from .product import element_of
from .separation import separate_finite, separate_pipeline, verify_certificate

EXIT_OK, EXIT_FALSE, EXIT_REJECTED, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3, 4

__all__ = ["main", "run", "parse_instance"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_instance(arg: str):
    """A path, or the name of a bundled fixture such as FIX-C."""
    if arg in FIXTURE_NAMES and not os.path.exists(arg):
        return parse_instance(fixture_text(arg))
    return parse_instance(_read(arg))


def _arg(token: str) -> str:
    # "@path" reads the word from a file
    return _read(token[1:]) if token.startswith("@") else token


def _word(args_words: Sequence[str]) -> str:
    return " ".join(_arg(t) for t in args_words)


class _Out:
    def __init__(self, fmt: str):
        self.machine = fmt == "machine"
        self.lines: list[str] = []

    def emit(self, text: str, doc) -> None:
        self.lines.append(dumps_machine(doc) if self.machine else text + "\n")

    def text(self) -> str:
        return "".join(self.lines)


def cmd_check(spec, args, out):
    sizes = [m.size for m in spec.monoids]
    doc = {"ok": True, "digest": spec.digest, "vertices": spec.vertex_count,
           "edges": len(spec.graph.edges()), "monoid_sizes": sizes}
    out.emit(f"ok: {spec.vertex_count} vertices, {doc['edges']} edges, "
             f"monoid sizes {sizes}, digest {spec.digest[:16]}", doc)
    return EXIT_OK


def cmd_normalize(spec, args, out):
    nf = lfnf(spec, parse_word(spec, _word(args.word)))
    out.emit(format_normal_form(spec, nf),
             {"normal_form": nf_to_doc(spec, nf), "block_length": len(nf)})
    return EXIT_OK


def cmd_equal(spec, args, out):
    same = element_of(spec, parse_word(spec, _arg(args.u))) == element_of(spec, parse_word(spec, _arg(args.v)))
    out.emit("true" if same else "false", {"equal": same})
    return EXIT_OK if same else EXIT_FALSE


def cmd_blocklen(spec, args, out):
    n = len(lfnf(spec, parse_word(spec, _word(args.word))))
    out.emit(str(n), {"block_length": n})
    return EXIT_OK


def cmd_mul(spec, args, out):
    result = spec.identity()
    for w in args.words:
        result = result * element_of(spec, parse_word(spec, _arg(w)))
    out.emit(format_normal_form(spec, result.nf),
             {"normal_form": nf_to_doc(spec, result.nf), "block_length": result.block_length})
    return EXIT_OK


def cmd_enumerate(spec, args, out):
    table = enumerate_fk(spec, args.k, args.limit)
    if out.machine:
        out.emit("", {"k": args.k, "size": len(table),
                      "states": [nf_to_doc(spec, nf) for nf in table.states]})
    else:
        lines = [f"{i}\t{format_normal_form(spec, nf)}" for i, nf in enumerate(table.states)]
        out.emit("\n".join([f"# F_{args.k}: {len(table)} states"] + lines), None)
    return EXIT_OK


def cmd_separate(spec, args, out):
    u = element_of(spec, parse_word(spec, _arg(args.u)))
    v = element_of(spec, parse_word(spec, _arg(args.v)))
    if args.quotients:
        quotients = parse_quotients(spec, _read(args.quotients))
        cert = separate_pipeline(spec, u, v, quotients, args.limit)
    else:
        cert = separate_finite(spec, u, v, args.limit)
    doc = certificate_to_doc(spec, cert)
    out.emit(json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False), doc)
    return EXIT_OK


def cmd_verify(spec, args, out):
    cert = parse_certificate(spec, _read(args.certificate))
    ok = verify_certificate(spec, cert, args.limit)
    out.emit("valid" if ok else "invalid", {"valid": ok})
    return EXIT_OK if ok else EXIT_REJECTED


def cmd_oracle_equal(spec, args, out):
    config = ClosureConfig(args.max_len, args.max_visited)
    same = closure_equal(spec, parse_word(spec, _arg(args.u)), parse_word(spec, _arg(args.v)), config)
    out.emit("true" if same else "false", {"equal": same, "max_len": args.max_len})
    return EXIT_OK if same else EXIT_FALSE


def cmd_show(spec, args, out):
    doc = instance_to_doc(spec)
    out.emit(json.dumps(doc, indent=2, ensure_ascii=False), doc)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("instance", help="instance file, '-' for stdin, or a fixture name (FIX-A .. FIX-E)")
    common.add_argument("--format", choices=("text", "machine"), default="text")

    parser = _Parser(prog="graphprod", description="Normal forms and separating morphisms "
                                                   "for graph products of finite monoids.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    add("check", cmd_check, "validate an instance")
    add("show", cmd_show, "print an instance in canonical form")
    p = add("normalize", cmd_normalize, "print the normal form of a word")
    p.add_argument("word", nargs="*", help="letters vertex:element, or @file")
    p = add("equal", cmd_equal, "decide whether two words are equal")
    p.add_argument("u")
    p.add_argument("v")
    p = add("blocklen", cmd_blocklen, "print the block length of a word")
    p.add_argument("word", nargs="*")
    p = add("mul", cmd_mul, "multiply words")
    p.add_argument("words", nargs="+")
    p = add("enumerate", cmd_enumerate, "list the elements of block length at most k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--limit", type=int, default=DEFAULT_STATE_LIMIT)
    p = add("separate", cmd_separate, "emit a separation certificate for two elements")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--quotients", help="JSON file of vertex quotients; enables the full pipeline")
    p.add_argument("--limit", type=int, default=DEFAULT_STATE_LIMIT)
    p = add("verify", cmd_verify, "re-check a certificate")
    p.add_argument("certificate")
    p.add_argument("--limit", type=int, default=DEFAULT_STATE_LIMIT)
    p = add("oracle-equal", cmd_oracle_equal, "decide equality by brute-force search")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--max-visited", type=int, default=2_000_000)
    return parser


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Run one command; returns the exit code and everything meant for stdout.

    Diagnostics go straight to stderr.
    """
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT, ""
    out = _Out(args.format)
    try:
        spec = load_instance(args.instance)
        code = args.func(spec, args, out)
    except (StateLimitExceeded, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT, out.text()
    except (GraphProductError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT, out.text()
    return code, out.text()


def main(argv: Optional[Sequence[str]] = None) -> None:
    code, text = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    sys.stdout.flush()
    sys.exit(code)


if __name__ == "__main__":
    main()
