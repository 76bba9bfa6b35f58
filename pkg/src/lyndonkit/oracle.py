"""Brute-force reference implementations and a per-word theorem verifier.

Everything here is written against the raw definitions and shares only the
data types with the fast paths, so each claim gets checked by two
independently written routines.  Exponential behavior is acceptable;
inputs stay desk sized.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartesian import (
    left_cartesian_tree,
    left_cartesian_tree_via_prefixes,
    prec_cmp,
)
from .errors import NotLyndon, UniquenessViolation
from .lyndon import (
    LyndonFactorization,
    first_lyndon_factor,
    is_lyndon,
    is_lyndon_prefix_omega,
    is_lyndon_suffix_omega,
    is_lyndon_via_rotations,
    is_lyndon_via_suffixes,
    last_lyndon_factor,
    lyndon_factorization,
)
from .omega import OmegaComparison, bergman_chain, omega_cmp, six_conditions
from .trees import (
    Leaf,
    MagmaTree,
    Node,
    foliage,
    internal_addresses,
    left_foliage,
    left_lyndon_tree,
    left_standard_factorization,
    left_subtrees_sequence,
    right_lyndon_tree,
    right_standard_factorization,
    subtree_at,
)
from .words import (
    Ordering,
    Word,
    ensure_nonempty,
    ensure_same_alphabet,
    lex_cmp,
    nontrivial_splits,
)

__all__ = [
    "CheckResult",
    "VerificationReport",
    "CHECK_NAMES",
    "omega_cmp_naive",
    "lyndon_factorization_naive",
    "left_lyndon_tree_naive",
    "verify_word",
]


def omega_cmp_naive(u: Word, v: Word) -> OmegaComparison:
    """Materialize both extensions out to |u| + |v| letters and scan.

    Equality is declared exactly when uv = vu; the common root is then
    found by trying prefixes of u from the shortest up.
    """
    ensure_same_alphabet(u, v)
    ensure_nonempty(u)
    ensure_nonempty(v)
    a, b = u.letters, v.letters
    total = len(a) + len(b)
    ea = [a[i % len(a)] for i in range(total)]
    eb = [b[i % len(b)] for i in range(total)]
    for i in range(total):
        if ea[i] != eb[i]:
            outcome = Ordering.LESS if ea[i] < eb[i] else Ordering.GREATER
            return OmegaComparison(outcome, i + 1, None)
    assert a + b == b + a
    return OmegaComparison(Ordering.EQUAL, None, _common_root(u, v))


def _common_root(u: Word, v: Word) -> Word:
    a = u.letters
    for d in range(1, len(a) + 1):
        root = a[:d]
        if _repeats_to(root, a) and _repeats_to(root, v.letters):
            return Word(u.alphabet, root)
    raise AssertionError("unreachable: equal extensions share a root")


def _repeats_to(root: tuple[int, ...], letters: tuple[int, ...]) -> bool:
    q, r = divmod(len(letters), len(root))
    return r == 0 and root * q == letters


def _is_lyndon_brute(letters: tuple[int, ...]) -> bool:
    # Strictly smallest among its rotations.
    return all(letters < letters[i:] + letters[:i] for i in range(1, len(letters)))


@lru_cache(maxsize=None)
def _lyndon_splittings(letters):
    """Every factorization of the letter tuple into Lyndon pieces."""
    if not letters:
        return ((),)
    out = []
    for i in range(1, len(letters) + 1):
        head = letters[:i]
        if _is_lyndon_brute(head):
            out.extend((head,) + tail for tail in _lyndon_splittings(letters[i:]))
    return tuple(out)


def lyndon_factorization_naive(w: Word) -> LyndonFactorization:
    """Enumerate all Lyndon-piece factorizations, keep the nonincreasing one.

    Raises UniquenessViolation unless exactly one survives the filter.
    """
    ensure_nonempty(w)
    survivors = [
        fact
        for fact in _lyndon_splittings(w.letters)
        if all(fact[i] >= fact[i + 1] for i in range(len(fact) - 1))
    ]
    if len(survivors) != 1:
        raise UniquenessViolation(
            f"{w.text()!r}: {len(survivors)} nonincreasing factorizations"
        )
    return LyndonFactorization(tuple(Word(w.alphabet, part) for part in survivors[0]))


def left_lyndon_tree_naive(w: Word) -> MagmaTree:
    """Definitional recursion: split at the longest proper Lyndon prefix.

    Uses its own rotation-based Lyndon test and scans every prefix instead
    of stopping early, so it shares no algorithm with the fast builder.
    """
    if not _is_lyndon_brute(w.letters):
        raise NotLyndon(f"{w.text()!r} is not a Lyndon word")
    if len(w.letters) == 1:
        return Leaf(w)
    cut = 0
    for i in range(1, len(w.letters)):
        if _is_lyndon_brute(w.letters[:i]):
            cut = i
    return Node(left_lyndon_tree_naive(w[:cut]), left_lyndon_tree_naive(w[cut:]))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of every check that applied to one word."""

    word: Word
    checks: tuple[CheckResult, ...]

    def __post_init__(self) -> None:
        names = [c.name for c in self.checks]
        if len(set(names)) != len(names):
            raise ValueError("duplicate check name in report")

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)


def _check_omega_agreement(w: Word):
    for i in range(1, len(w.letters) + 1):
        p = w[:i]
        for j in range(len(w.letters)):
            s = w[j:]
            fast = omega_cmp(p, s)
            slow = omega_cmp_naive(p, s)
            if fast != slow:
                return False, f"prefix {p} vs suffix {s}: {fast} != {slow}"
    return True, ""


def _check_lyndon_definitions(w: Word):
    flags = (is_lyndon(w), is_lyndon_via_suffixes(w), is_lyndon_via_rotations(w))
    if len(set(flags)) != 1:
        return False, f"split conditions disagree: {flags}"
    return True, ""


def _check_suffix_conditions(w: Word):
    # is_lyndon_suffix_omega cross-checks its two internal forms itself.
    if is_lyndon_suffix_omega(w) != is_lyndon(w):
        return False, "suffix extension test disagrees with the split test"
    return True, ""


def _check_prefix_condition(w: Word):
    if is_lyndon_prefix_omega(w) != is_lyndon(w):
        return False, "prefix extension test disagrees with the split test"
    return True, ""


def _check_six_equivalence(w: Word):
    for u, v in nontrivial_splits(w):
        six = six_conditions(u, v)
        if omega_cmp(u, v).outcome is Ordering.EQUAL:
            if any(six):
                return False, f"split {u}|{v}: equal extensions but {six}"
        elif not six.all_equal():
            return False, f"split {u}|{v}: {six}"
    return True, ""


def _check_bergman(w: Word):
    for u, v in nontrivial_splits(w):
        if omega_cmp(u, v).outcome is Ordering.LESS and not bergman_chain(u, v):
            return False, f"split {u}|{v}: chain violated"
    return True, ""


def _check_factorization(w: Word):
    fact = lyndon_factorization(w)
    if fact.word != w:
        return False, "factors do not concatenate back to the word"
    if not all(is_lyndon(f) for f in fact.factors):
        return False, "non-Lyndon factor"
    for a, b in zip(fact.factors, fact.factors[1:]):
        if lex_cmp(a, b) is Ordering.LESS:
            return False, f"factors increase: {a} then {b}"
        if omega_cmp(a, b).outcome is Ordering.LESS:
            return False, f"extensions increase: {a} then {b}"
    naive = lyndon_factorization_naive(w)
    if fact.factors != naive.factors:
        return False, f"{fact.factors} != naive {naive.factors}"
    return True, ""


def _check_first_factor(w: Word):
    if first_lyndon_factor(w) != lyndon_factorization(w).factors[0]:
        return False, "prefix scan disagrees with the factorization head"
    return True, ""


def _check_last_factor(w: Word):
    if last_lyndon_factor(w) != lyndon_factorization(w).factors[-1]:
        return False, "suffix scan disagrees with the final factor"
    return True, ""


def _check_first_dominates_rest(w: Word):
    factors = lyndon_factorization(w).factors
    if len(factors) >= 2:
        rest = factors[1]
        for f in factors[2:]:
            rest = rest + f
        if omega_cmp(factors[0], rest).outcome is Ordering.LESS:
            return False, f"head {factors[0]} sits below the rest {rest}"
    return True, ""


def _check_left_factorization(w: Word):
    u, v = left_standard_factorization(w)
    if not (is_lyndon(u) and is_lyndon(v)):
        return False, f"parts {u}|{v} are not both Lyndon"
    if lex_cmp(u, v) is not Ordering.LESS:
        return False, f"{u} is not below {v}"
    if len(v.letters) >= 2:
        v1, _ = left_standard_factorization(v)
        if lex_cmp(v1, u) is Ordering.GREATER:
            return False, f"head {v1} of the right part exceeds {u}"
        if v1.letters != u.letters[:len(v1.letters)]:
            return False, f"head {v1} of the right part is not a prefix of {u}"
    return True, ""


def _check_right_factorization(w: Word):
    u, v = right_standard_factorization(w)
    if not (is_lyndon(u) and is_lyndon(v)):
        return False, f"parts {u}|{v} are not both Lyndon"
    return True, ""


def _concat(parts):
    out = parts[0]
    for p in parts[1:]:
        out = out + p
    return out


def _check_left_subtrees_chain(w: Word):
    t = left_lyndon_tree(w)
    for addr in internal_addresses(t):
        ells = [foliage(s) for s in left_subtrees_sequence(t, addr)]
        if not all(is_lyndon(e) for e in ells):
            return False, f"node {addr or 'root'}: non-Lyndon hanging subtree"
        for a, b in zip(ells, ells[1:]):
            if b.letters != a.letters[:len(b.letters)]:
                return False, f"node {addr or 'root'}: {b} is not a prefix of {a}"
    return True, ""


def _check_left_foliage_concatenation(w: Word):
    t = left_lyndon_tree(w)
    for addr in internal_addresses(t):
        ells = [foliage(s) for s in left_subtrees_sequence(t, addr)]
        if left_foliage(t, addr) != _concat(ells):
            return False, f"node {addr or 'root'}: foliages do not concatenate"
    return True, ""


def _check_left_subtrees_order(w: Word):
    t = left_lyndon_tree(w)
    for addr in internal_addresses(t):
        ells = [foliage(s) for s in left_subtrees_sequence(t, addr)]
        whole = _concat(ells)
        last = ells[-1]
        if len(last.letters) >= 2:
            head, _ = left_standard_factorization(last)
            clipped = _concat(ells[:-1] + [head])
            if omega_cmp(clipped, whole).outcome is not Ordering.LESS:
                return False, f"node {addr or 'root'}: clipping the tail did not shrink it"
        if len(ells) >= 2:
            shorter = _concat(ells[:-1])
            if omega_cmp(whole, shorter).outcome is Ordering.GREATER:
                return False, f"node {addr or 'root'}: dropping the tail shrank it"
    return True, ""


def _check_left_foliage_decreasing(w: Word):
    t = left_lyndon_tree(w)
    for addr in internal_addresses(t):
        node = subtree_at(t, addr)
        for step in "LR":
            child = node.left if step == "L" else node.right
            if isinstance(child, Node):
                down = left_foliage(t, addr + step)
                here = left_foliage(t, addr)
                if prec_cmp(down, here) is not Ordering.LESS:
                    return False, f"label at {addr + step} is not below {addr or 'root'}"
    return True, ""


def _check_trees_coincide(w: Word):
    t = left_lyndon_tree(w)
    same = (
        t
        == left_cartesian_tree(w)
        == left_cartesian_tree_via_prefixes(w)
        == left_lyndon_tree_naive(w)
    )
    return same, "" if same else "tree constructions disagree"


def _check_tree_foliage(w: Word):
    if foliage(left_lyndon_tree(w)) != w:
        return False, "left tree foliage broke"
    if foliage(right_lyndon_tree(w)) != w:
        return False, "right tree foliage broke"
    return True, ""


def _always(w: Word) -> bool:
    return True


def _when_lyndon(w: Word) -> bool:
    return is_lyndon(w)


def _when_lyndon_composite(w: Word) -> bool:
    return len(w.letters) >= 2 and is_lyndon(w)


_CHECKS = (
    ("omega-agreement", _check_omega_agreement, _always),
    ("lyndon-definitions", _check_lyndon_definitions, _always),
    ("lyndon-suffix-conditions", _check_suffix_conditions, _always),
    ("lyndon-prefix-condition", _check_prefix_condition, _always),
    ("six-equivalence", _check_six_equivalence, _always),
    ("bergman-chain", _check_bergman, _always),
    ("factorization", _check_factorization, _always),
    ("first-factor", _check_first_factor, _always),
    ("last-factor", _check_last_factor, _always),
    ("first-dominates-rest", _check_first_dominates_rest, _always),
    ("left-factorization", _check_left_factorization, _when_lyndon_composite),
    ("right-factorization", _check_right_factorization, _when_lyndon_composite),
    ("left-subtrees-chain", _check_left_subtrees_chain, _when_lyndon),
    ("left-foliage-concatenation", _check_left_foliage_concatenation, _when_lyndon),
    ("left-subtrees-order", _check_left_subtrees_order, _when_lyndon),
    ("left-foliage-decreasing", _check_left_foliage_decreasing, _when_lyndon),
    ("trees-coincide", _check_trees_coincide, _when_lyndon),
    ("tree-foliage", _check_tree_foliage, _when_lyndon),
)

CHECK_NAMES = tuple(name for name, _, _ in _CHECKS)


def verify_word(w: Word) -> VerificationReport:
    """Run every applicable cross-check on one word."""
    ensure_nonempty(w)
    results = []
    for name, check, applies in _CHECKS:
        if applies(w):
            ok, detail = check(w)
            results.append(CheckResult(name, ok, "" if ok else detail))
    return VerificationReport(w, tuple(results))
