"""Command-line front end.

Subcommands: compare, factorize, pstd, tree, verify.  Rendering is
text (default), structured (JSON), or dot (trees only).  Exit codes:
0 success, 1 a cross-check or sweep failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .cartesian import left_cartesian_tree, prefix_standard_permutation
from .errors import LyndonKitError
from .lyndon import (
    first_lyndon_factor,
    last_lyndon_factor,
    lyndon_factorization,
)
from .omega import omega_cmp, six_conditions
from .oracle import CHECK_NAMES, verify_word
from .trees import Leaf, MagmaTree, Node, internal_addresses, left_foliage, left_lyndon_tree, right_lyndon_tree, subtree_at
from .words import Ordering, OrderedAlphabet, Word, iter_all_words, lex_cmp, make_word, nontrivial_splits

__all__ = ["main", "format_tree", "parse_tree", "render_dot"]

_SIX_LABELS = (
    "u^ω < v^ω",
    "(uv)^ω < v^ω",
    "u^ω < (vu)^ω",
    "(uv)^ω < (vu)^ω",
    "u^ω < (uv)^ω",
    "(vu)^ω < v^ω",
)


def format_tree(tree: MagmaTree) -> str:
    """Canonical text form: a leaf prints its letter, a node prints (l,r)."""
    if isinstance(tree, Leaf):
        return tree.letter.text()
    return f"({format_tree(tree.left)},{format_tree(tree.right)})"


def parse_tree(text: str, alphabet: OrderedAlphabet) -> MagmaTree:
    """Inverse of format_tree.  Raises ValueError on malformed input."""
    tree, stop = _parse_tree(text, 0, alphabet)
    if stop != len(text):
        raise ValueError(f"trailing input at offset {stop}")
    return tree


def _parse_tree(text: str, at: int, alphabet: OrderedAlphabet):
    if at >= len(text):
        raise ValueError("unexpected end of tree text")
    if text[at] == "(":
        left, at = _parse_tree(text, at + 1, alphabet)
        if at >= len(text) or text[at] != ",":
            raise ValueError(f"expected ',' at offset {at}")
        right, at = _parse_tree(text, at + 1, alphabet)
        if at >= len(text) or text[at] != ")":
            raise ValueError(f"expected ')' at offset {at}")
        return Node(left, right), at + 1
    if text[at] in "),":
        raise ValueError(f"unexpected {text[at]!r} at offset {at}")
    return Leaf(make_word(text[at], alphabet)), at + 1


def render_dot(tree: MagmaTree) -> str:
    """DOT digraph with pre-order node ids.

    Internal nodes are labeled with their left foliage, leaves with
    their letter, so the output is byte-stable for a given tree.
    """
    ids: dict[str, str] = {}
    order: list[str] = []

    def visit(node: MagmaTree, address: str) -> None:
        ids[address] = f"n{len(ids)}"
        order.append(address)
        if isinstance(node, Node):
            visit(node.left, address + "L")
            visit(node.right, address + "R")

    visit(tree, "")
    lines = ["digraph {"]
    for address in order:
        node = subtree_at(tree, address)
        if isinstance(node, Leaf):
            label = node.letter.text()
        else:
            label = left_foliage(tree, address).text()
        label = label.replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  {ids[address]} [label="{label}"];')
    for address in order:
        if isinstance(subtree_at(tree, address), Node):
            lines.append(f"  {ids[address]} -> {ids[address + 'L']};")
            lines.append(f"  {ids[address]} -> {ids[address + 'R']};")
    lines.append("}")
    return "\n".join(lines)


def _alphabet_for(symbols: str | None, *texts: str) -> OrderedAlphabet:
    # Absent the flag, take the distinct input characters in natural order.
    if symbols is not None:
        return OrderedAlphabet(symbols)
    seen = sorted(set("".join(texts)))
    if not seen:
        raise LyndonKitError("cannot infer an alphabet from empty input")
    return OrderedAlphabet(seen)


def _six_rows(u: Word, v: Word) -> list[tuple[str, bool]]:
    six = six_conditions(u, v)
    return list(zip(_SIX_LABELS, six))


def _emit(text: str) -> None:
    print(text)


def cmd_compare(args) -> int:
    alphabet = _alphabet_for(args.alphabet, args.u, args.v)
    u = make_word(args.u, alphabet)
    v = make_word(args.v, alphabet)
    result = omega_cmp(u, v)
    if args.format == "structured":
        doc = {
            "outcome": result.outcome.name.lower(),
            "mismatch_position": result.mismatch_position,
            "common_root": None if result.common_root is None else result.common_root.text(),
        }
        if args.six:
            doc["six"] = {
                name: value
                for name, value in zip(six_conditions(u, v)._fields, six_conditions(u, v))
            }
        _emit(json.dumps(doc))
        return 0
    if result.outcome is Ordering.EQUAL:
        _emit(f"equal: powers of {result.common_root.text()}")
    else:
        sign = "<ω" if result.outcome is Ordering.LESS else ">ω"
        _emit(f"{u.text()} {sign} {v.text()}, mismatch at {result.mismatch_position}")
    if args.six:
        for label, value in _six_rows(u, v):
            _emit(f"{label}: {'true' if value else 'false'}")
    return 0


def cmd_factorize(args) -> int:
    alphabet = _alphabet_for(args.alphabet, args.w)
    w = make_word(args.w, alphabet)
    factorization = lyndon_factorization(w)
    first = first_lyndon_factor(w)
    last = last_lyndon_factor(w)
    if first != factorization.factors[0] or last != factorization.factors[-1]:
        print(
            f"cross-check failed on {w.text()!r}: "
            f"ends {first.text()},{last.text()} vs factorization",
            file=sys.stderr,
        )
        return 1
    if args.format == "structured":
        _emit(
            json.dumps(
                {
                    "factors": [f.text() for f in factorization.factors],
                    "first": first.text(),
                    "last": last.text(),
                }
            )
        )
        return 0
    _emit("".join(f"({f.text()})" for f in factorization.factors))
    _emit(f"first: {first.text()}")
    _emit(f"last: {last.text()}")
    return 0


def _format_perm(values: tuple[int, ...]) -> str:
    # Digit string while unambiguous, comma-separated past rank 9.
    if len(values) <= 9:
        return "".join(str(v) for v in values)
    return ",".join(str(v) for v in values)


def cmd_pstd(args) -> int:
    alphabet = _alphabet_for(args.alphabet, args.w)
    w = make_word(args.w, alphabet)
    ranks = prefix_standard_permutation(w)
    if args.format == "structured":
        _emit(json.dumps({"sigma": list(ranks.sigma), "inverse": list(ranks.inverse)}))
        return 0
    _emit(_format_perm(ranks.sigma))
    _emit(f"inverse: {_format_perm(ranks.inverse)}")
    return 0


def _lyndon_violation(w: Word) -> tuple[Word, Word] | None:
    for u, v in nontrivial_splits(w):
        if lex_cmp(u, v) is not Ordering.LESS:
            return u, v
    return None


def _tree_structured(tree: MagmaTree):
    if isinstance(tree, Leaf):
        return {"leaf": tree.letter.text()}
    return {"l": _tree_structured(tree.left), "r": _tree_structured(tree.right)}


def cmd_tree(args) -> int:
    alphabet = _alphabet_for(args.alphabet, args.w)
    w = make_word(args.w, alphabet)
    violation = _lyndon_violation(w)
    if violation is not None:
        u, v = violation
        print(
            f"not Lyndon: split {u.text()}|{v.text()} has u ≥ v",
            file=sys.stderr,
        )
        return 2
    builders = {
        "left": left_lyndon_tree,
        "right": right_lyndon_tree,
        "cartesian": left_cartesian_tree,
    }
    tree = builders[args.kind](w)
    if args.format == "dot":
        _emit(render_dot(tree))
    elif args.format == "structured":
        _emit(json.dumps(_tree_structured(tree)))
    else:
        _emit(format_tree(tree))
    if args.kind in ("left", "cartesian"):
        other = left_cartesian_tree(w) if args.kind == "left" else left_lyndon_tree(w)
        equal = tree == other
        if args.format == "text":
            _emit(f"left == cartesian: {'equal' if equal else 'different'}")
        if not equal:
            if args.format != "text":
                print("left and cartesian trees differ", file=sys.stderr)
            return 1
    return 0


def _verify_one(symbols: str, text: str):
    """Worker: plain strings in, plain tuples out, so it crosses processes."""
    alphabet = OrderedAlphabet(symbols)
    report = verify_word(make_word(text, alphabet))
    return text, tuple((c.name, c.passed, c.detail) for c in report.checks)


def cmd_verify(args) -> int:
    if args.format != "text":
        print("verify only renders text", file=sys.stderr)
        return 2
    if args.max_len < 1:
        print("--max-len must be at least 1", file=sys.stderr)
        return 2
    symbols = args.alphabet if args.alphabet is not None else "ab"
    alphabet = OrderedAlphabet(symbols)
    words = [w.text() for w in iter_all_words(alphabet, args.max_len)]
    if args.jobs > 1:
        executor = ProcessPoolExecutor(max_workers=args.jobs)
        with executor:
            reports = list(
                executor.map(
                    _verify_one,
                    [symbols] * len(words),
                    words,
                    chunksize=max(1, len(words) // (4 * args.jobs)),
                )
            )
    else:
        reports = [_verify_one(symbols, text) for text in words]

    lyndon_per_length = [0] * args.max_len
    passes = {name: 0 for name in CHECK_NAMES}
    for text, checks in reports:
        ran = {name for name, _, _ in checks}
        if "trees-coincide" in ran:
            lyndon_per_length[len(text) - 1] += 1
        for name, ok, detail in checks:
            if not ok:
                print(f"FAIL {name} on {text}: {detail}", file=sys.stderr)
                return 1
            passes[name] += 1

    _emit(f"alphabet: {symbols}")
    _emit(f"words checked: {len(words)}")
    _emit("lyndon words per length: " + ",".join(str(c) for c in lyndon_per_length))
    for name in CHECK_NAMES:
        _emit(f"{name}: {passes[name]} pass")
    _emit("all checks pass")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--alphabet",
        help="symbols in increasing order (default: distinct input letters)",
    )
    common.add_argument(
        "--format",
        choices=("text", "structured", "dot"),
        default="text",
        help="output rendering (dot is tree-only)",
    )

    parser = argparse.ArgumentParser(
        prog="lyndonkit",
        description="Compare periodic extensions of words and build Lyndon trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compare", parents=[common], help="compare u^ω with v^ω")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--six", action="store_true", help="print the six-condition table")
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser("factorize", parents=[common], help="nonincreasing Lyndon factorization")
    p.add_argument("w")
    p.set_defaults(handler=cmd_factorize)

    p = sub.add_parser("pstd", parents=[common], help="prefix rank permutation and its inverse")
    p.add_argument("w")
    p.set_defaults(handler=cmd_pstd)

    p = sub.add_parser("tree", parents=[common], help="build a tree over a Lyndon word")
    p.add_argument("w")
    p.add_argument("--kind", choices=("left", "right", "cartesian"), default="left")
    p.set_defaults(handler=cmd_tree)

    p = sub.add_parser("verify", parents=[common], help="exhaustive cross-check sweep")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return int(stop.code or 0)
    if args.format == "dot" and args.command != "tree":
        print("dot output is only available for tree", file=sys.stderr)
        return 2
    try:
        return args.handler(args)
    except (LyndonKitError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
