#!/usr/bin/env python3
"""Walk one word through the whole pipeline and print every artifact.

Usage: python scripts/worked_example.py [WORD] [--alphabet SYMS]

Defaults to the word aabaacab, whose left Lyndon tree, prefix ranks and
internal labels make a compact end-to-end demonstration.
"""

import argparse
import functools

from lyndonkit import (
    Ordering,
    OrderedAlphabet,
    first_lyndon_factor,
    foliage,
    format_tree,
    internal_addresses,
    is_lyndon,
    last_lyndon_factor,
    left_cartesian_tree,
    left_foliage,
    left_lyndon_tree,
    left_standard_factorization,
    left_subtrees_sequence,
    lyndon_factorization,
    make_word,
    omega_cmp,
    prefix_standard_permutation,
    right_lyndon_tree,
    verify_word,
)


def _omega_sign(u, v) -> int:
    outcome = omega_cmp(u, v).outcome
    if outcome is Ordering.LESS:
        return -1
    return 1 if outcome is Ordering.GREATER else 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("word", nargs="?", default="aabaacab")
    parser.add_argument("--alphabet", help="symbols in increasing order")
    args = parser.parse_args()

    symbols = args.alphabet or "".join(sorted(set(args.word)))
    w = make_word(args.word, OrderedAlphabet(symbols))

    print(f"word: {w.text()}   alphabet: {symbols}")
    print(f"lyndon: {is_lyndon(w)}")

    fact = lyndon_factorization(w)
    print("factorization:", "".join(f"({f.text()})" for f in fact))
    print(f"first factor: {first_lyndon_factor(w).text()}")
    print(f"last factor:  {last_lyndon_factor(w).text()}")

    chain = sorted(
        (w[i:] for i in range(len(w))),
        key=functools.cmp_to_key(_omega_sign),
    )
    parts = [chain[0].text()]
    for prev, cur in zip(chain, chain[1:]):
        sign = "<" if omega_cmp(prev, cur).outcome is Ordering.LESS else "="
        parts.append(f"{sign} {cur.text()}")
    print("\nsuffixes in increasing extension order:")
    print("  " + " ".join(parts))

    if not is_lyndon(w):
        print("\nnot a Lyndon word; tree constructions need one, stopping here")
        return 0

    ranks = prefix_standard_permutation(w)
    print(f"\nprefix ranks:  {ranks.sigma}")
    print(f"prefix array:  {ranks.inverse}")

    if len(w) >= 2:
        u, v = left_standard_factorization(w)
        print(f"left standard factorization: ({u.text()})({v.text()})")

    tree = left_lyndon_tree(w)
    print(f"left lyndon tree:    {format_tree(tree)}")
    print(f"left cartesian tree: {format_tree(left_cartesian_tree(w))}")
    print(f"right lyndon tree:   {format_tree(right_lyndon_tree(w))}")
    print(f"foliage round trip:  {foliage(tree).text()}")

    print("\ninternal node labels (left foliage) and hanging subtrees:")
    for x in internal_addresses(tree):
        ells = [foliage(s).text() for s in left_subtrees_sequence(tree, x)]
        print(f"  {x or 'root':6} g = {left_foliage(tree, x).text():12} lss = {ells}")

    report = verify_word(w)
    print(f"\nverification: {'all checks pass' if report.passed else 'FAILED'}")
    for check in report.failures():
        print(f"  FAIL {check.name}: {check.detail}")
    return 0 if report.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
