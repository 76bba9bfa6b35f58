"""Comparison of finite words through their periodic infinite extensions.

Nonempty words u and v are compared by the lexicographic order of the
infinite repetitions uuu... and vvv....  No infinite object is ever built:
the outcome is decided by comparing the concatenations uv and vu, and the
first differing position of the two extensions is bounded by
|u| + |v| - gcd(|u|, |v|), the Fine and Wilf bound.
"""

from __future__ import annotations

from math import gcd
from typing import NamedTuple

from .errors import OmegaEqual, PreconditionFailed
from .words import (
    Ordering,
    Word,
    ensure_nonempty,
    ensure_same_alphabet,
    fractional_power_of,
    primitive_root,
)

__all__ = [
    "OmegaComparison",
    "SixConditions",
    "omega_cmp",
    "omega_mismatch_position",
    "comparison_within_first_factor",
    "six_conditions",
    "bergman_chain",
]


class OmegaComparison(NamedTuple):
    """Outcome of comparing two periodic extensions.

    mismatch_position is the 1-based index of the first differing letter,
    present exactly when the extensions differ.  common_root is present
    exactly when they coincide, in which case both words are powers of it.
    """

    outcome: Ordering
    mismatch_position: int | None
    common_root: Word | None


class SixConditions(NamedTuple):
    """The six pairwise extension inequalities built from u, v, uv and vu.

    Whenever the extensions of u and v differ, all six fields carry the
    same boolean; when the extensions coincide, all six are false.
    """

    u_lt_v: bool
    uv_lt_v: bool
    u_lt_vu: bool
    uv_lt_vu: bool
    u_lt_uv: bool
    vu_lt_v: bool

    def all_equal(self) -> bool:
        return all(self) or not any(self)


def _scan_difference(a: tuple[int, ...], b: tuple[int, ...]) -> int | None:
    # Synchronized walk along both extensions.  If no difference shows up
    # before the periodicity bound, the extensions are equal.
    la, lb = len(a), len(b)
    bound = la + lb - gcd(la, lb)
    for i in range(bound):
        if a[i % la] != b[i % lb]:
            return i + 1
    return None


def omega_cmp(u: Word, v: Word) -> OmegaComparison:
    """Compare the periodic extensions of u and v.

    Equality holds exactly when uv = vu; the common primitive root is
    reported in that case.
    """
    ensure_same_alphabet(u, v)
    ensure_nonempty(u)
    ensure_nonempty(v)
    uv = u.letters + v.letters
    vu = v.letters + u.letters
    if uv == vu:
        root, _ = primitive_root(u)
        return OmegaComparison(Ordering.EQUAL, None, root)
    outcome = Ordering.LESS if uv < vu else Ordering.GREATER
    position = _scan_difference(u.letters, v.letters)
    assert position is not None
    return OmegaComparison(outcome, position, None)


def omega_mismatch_position(u: Word, v: Word) -> int | None:
    """1-based first position where the two extensions differ, None if never."""
    ensure_same_alphabet(u, v)
    ensure_nonempty(u)
    ensure_nonempty(v)
    return _scan_difference(u.letters, v.letters)


def comparison_within_first_factor(u: Word, v: Word) -> bool:
    """Whether the extensions already differ inside the leading copy of v.

    True exactly when the mismatch position is at most |v|, which in turn
    holds exactly when v is not a fractional power of u; both routes are
    evaluated and must agree.
    """
    cmp = omega_cmp(u, v)
    if cmp.outcome is Ordering.EQUAL:
        raise OmegaEqual("the extensions coincide, no comparison position exists")
    within = cmp.mismatch_position <= len(v.letters)
    assert within == (fractional_power_of(v, u) is None)
    return within


def _omega_less(a: Word, b: Word) -> bool:
    return omega_cmp(a, b).outcome is Ordering.LESS


def six_conditions(u: Word, v: Word) -> SixConditions:
    """Evaluate each of the six extension inequalities independently."""
    ensure_nonempty(u)
    ensure_nonempty(v)
    uv = u + v
    vu = v + u
    return SixConditions(
        u_lt_v=_omega_less(u, v),
        uv_lt_v=_omega_less(uv, v),
        u_lt_vu=_omega_less(u, vu),
        uv_lt_vu=_omega_less(uv, vu),
        u_lt_uv=_omega_less(u, uv),
        vu_lt_v=_omega_less(vu, v),
    )


def bergman_chain(u: Word, v: Word) -> bool:
    """Check u^ω < (uv)^ω < (vu)^ω < v^ω, given that u^ω < v^ω.

    Raises PreconditionFailed unless the extensions of u and v compare Less.
    """
    if omega_cmp(u, v).outcome is not Ordering.LESS:
        raise PreconditionFailed("the chain is stated for u strictly below v")
    uv = u + v
    vu = v + u
    return _omega_less(u, uv) and _omega_less(uv, vu) and _omega_less(vu, v)
