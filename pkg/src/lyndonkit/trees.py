"""Complete binary trees over letters, and the two standard factorizations.

A tree is either a single letter or an ordered pair of subtrees; its
foliage is the word read off the leaves from left to right.  Iterating the
left (or right) standard factorization of a Lyndon word grows such a tree.

Internal nodes are addressed by strings over 'L' and 'R' describing the
path from the root.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .errors import BadAddress, NotLyndon, TooShort
from .lyndon import is_lyndon
from .words import Word

__all__ = [
    "Leaf",
    "Node",
    "MagmaTree",
    "foliage",
    "left_standard_factorization",
    "right_standard_factorization",
    "left_lyndon_tree",
    "right_lyndon_tree",
    "left_subtrees_sequence",
    "left_foliage",
    "internal_addresses",
    "subtree_at",
]


@dataclass(frozen=True)
class Leaf:
    """A single-letter tree."""

    letter: Word

    def __post_init__(self) -> None:
        if len(self.letter.letters) != 1:
            raise ValueError("a leaf carries exactly one letter")


@dataclass(frozen=True)
class Node:
    """An internal node with exactly two children."""

    left: "MagmaTree"
    right: "MagmaTree"


MagmaTree = Union[Leaf, Node]


def foliage(tree: MagmaTree) -> Word:
    """The leaf word of the tree, left to right."""
    if isinstance(tree, Leaf):
        return tree.letter
    return foliage(tree.left) + foliage(tree.right)


def left_standard_factorization(w: Word) -> tuple[Word, Word]:
    """Split w = uv where u is the longest nonempty proper Lyndon prefix.

    Both parts of the result are Lyndon again.
    """
    if not is_lyndon(w):
        raise NotLyndon(f"{w.text()!r} is not a Lyndon word")
    if len(w.letters) < 2:
        raise TooShort("single letters have no standard factorization")
    for i in range(len(w.letters) - 1, 0, -1):
        u = w[:i]
        if is_lyndon(u):
            return u, w[i:]
    raise AssertionError("unreachable: a single letter is always Lyndon")


def right_standard_factorization(w: Word) -> tuple[Word, Word]:
    """Split w = uv where v is the longest proper nonempty Lyndon suffix."""
    if not is_lyndon(w):
        raise NotLyndon(f"{w.text()!r} is not a Lyndon word")
    if len(w.letters) < 2:
        raise TooShort("single letters have no standard factorization")
    for i in range(1, len(w.letters)):
        v = w[i:]
        if is_lyndon(v):
            return w[:i], v
    raise AssertionError("unreachable: the last letter alone is Lyndon")


def left_lyndon_tree(w: Word) -> MagmaTree:
    """Iterate the left standard factorization down to single letters."""
    if not is_lyndon(w):
        raise NotLyndon(f"{w.text()!r} is not a Lyndon word")
    if len(w.letters) == 1:
        return Leaf(w)
    u, v = left_standard_factorization(w)
    return Node(left_lyndon_tree(u), left_lyndon_tree(v))


def right_lyndon_tree(w: Word) -> MagmaTree:
    """Iterate the right standard factorization down to single letters."""
    if not is_lyndon(w):
        raise NotLyndon(f"{w.text()!r} is not a Lyndon word")
    if len(w.letters) == 1:
        return Leaf(w)
    u, v = right_standard_factorization(w)
    return Node(right_lyndon_tree(u), right_lyndon_tree(v))


def _check_address(address: str) -> None:
    if any(step not in "LR" for step in address):
        raise BadAddress(f"address {address!r} must use only 'L' and 'R'")


def subtree_at(tree: MagmaTree, address: str) -> MagmaTree:
    """The subtree rooted at the addressed node."""
    _check_address(address)
    for depth, step in enumerate(address):
        if isinstance(tree, Leaf):
            raise BadAddress(f"address {address!r} walks into a leaf at depth {depth}")
        tree = tree.left if step == "L" else tree.right
    return tree


def left_subtrees_sequence(tree: MagmaTree, address: str) -> tuple[MagmaTree, ...]:
    """Subtrees hanging off to the left of the path to the addressed node.

    The sequence ends with the addressed node's own left subtree, so the
    address must land on an internal node.
    """
    _check_address(address)
    return _lss(tree, address, address)


def _lss(tree: MagmaTree, path: str, full: str) -> tuple[MagmaTree, ...]:
    if isinstance(tree, Leaf):
        raise BadAddress(f"address {full!r} does not reach an internal node")
    if not path:
        return (tree.left,)
    if path[0] == "L":
        return _lss(tree.left, path[1:], full)
    return (tree.left,) + _lss(tree.right, path[1:], full)


def left_foliage(tree: MagmaTree, address: str) -> Word:
    """Concatenated foliage of the left subtrees sequence of the addressed node.

    Its length equals the number of leaves strictly to the left of the node.
    """
    _check_address(address)
    return _left_foliage(tree, address, address)


def _left_foliage(tree: MagmaTree, path: str, full: str) -> Word:
    if isinstance(tree, Leaf):
        raise BadAddress(f"address {full!r} does not reach an internal node")
    if not path:
        return foliage(tree.left)
    if path[0] == "L":
        return _left_foliage(tree.left, path[1:], full)
    return foliage(tree.left) + _left_foliage(tree.right, path[1:], full)


def internal_addresses(tree: MagmaTree) -> Iterator[str]:
    """Addresses of the internal nodes, in pre-order."""
    if isinstance(tree, Node):
        yield ""
        for sub in internal_addresses(tree.left):
            yield "L" + sub
        for sub in internal_addresses(tree.right):
            yield "R" + sub
