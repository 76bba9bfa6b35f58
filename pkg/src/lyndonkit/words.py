"""Ordered alphabets, finite words over them, and the period/power toolbox.

A word stores alphabet ranks instead of raw characters, so the declared
symbol order is baked in at construction time and every later comparison is
a plain integer comparison.  Rank tuples compare lexicographically exactly
like the words they encode, with a proper prefix sorting first, so Python's
tuple order is the word order.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import AlphabetMismatch, EmptyBase, EmptyWord, UnknownSymbol

__all__ = [
    "Ordering",
    "OrderedAlphabet",
    "Word",
    "FractionalExponent",
    "make_word",
    "lex_cmp",
    "borders",
    "nontrivial_periods",
    "fractional_power_of",
    "primitive_root",
    "nontrivial_splits",
    "iter_all_words",
    "ensure_nonempty",
    "ensure_same_alphabet",
]


class Ordering(enum.IntEnum):
    """Three-way comparison outcome."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


class OrderedAlphabet:
    """A finite symbol set with an explicit total order.

    The declared order is the only order the package ever uses.  Reversing
    the symbol list yields the opposite order; no other machinery is needed.
    """

    __slots__ = ("symbols", "rank")

    def __init__(self, symbols: Iterable[str]) -> None:
        syms = tuple(symbols)
        if any(len(s) != 1 or not s.isprintable() for s in syms):
            raise ValueError("alphabet symbols must be single printable characters")
        if len(set(syms)) != len(syms):
            raise ValueError(f"alphabet symbols must be distinct: {''.join(syms)!r}")
        self.symbols = syms
        self.rank = {s: i for i, s in enumerate(syms)}

    def reversed(self) -> "OrderedAlphabet":
        """The same symbols under the opposite order."""
        return OrderedAlphabet(self.symbols[::-1])

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.rank

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OrderedAlphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return f"OrderedAlphabet({''.join(self.symbols)!r})"


class Word:
    """An immutable finite word, stored as a tuple of alphabet ranks.

    Indexing with an int returns a rank, slicing returns a Word, and `+`
    concatenates words over the same alphabet.
    """

    __slots__ = ("alphabet", "letters")

    def __init__(self, alphabet: OrderedAlphabet, letters: Iterable[int] = ()) -> None:
        ls = tuple(letters)
        if ls and not (0 <= min(ls) and max(ls) < len(alphabet.symbols)):
            bad = next(x for x in ls if not 0 <= x < len(alphabet.symbols))
            raise ValueError(f"rank {bad} out of range for {alphabet!r}")
        self.alphabet = alphabet
        self.letters = ls

    @classmethod
    def _make(cls, alphabet: OrderedAlphabet, letters: tuple) -> "Word":
        # Trusted path: letters already known to be valid ranks.
        word = object.__new__(cls)
        word.alphabet = alphabet
        word.letters = letters
        return word

    def text(self) -> str:
        symbols = self.alphabet.symbols
        return "".join(symbols[i] for i in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word._make(self.alphabet, self.letters[index])
        return self.letters[index]

    def __add__(self, other: "Word") -> "Word":
        if self.alphabet is not other.alphabet and self.alphabet != other.alphabet:
            raise AlphabetMismatch("cannot concatenate words over different alphabets")
        return Word._make(self.alphabet, self.letters + other.letters)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Word)
            and self.alphabet == other.alphabet
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        return hash((self.alphabet.symbols, self.letters))

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"Word({self.text()!r})"


@dataclass(frozen=True)
class FractionalExponent:
    """Exponent of a fractional power: whole copies plus a reduced remainder.

    The remainder num/den satisfies 0 <= num/den < 1 with gcd(num, den) = 1.
    The power is strict exactly when it contains at least one whole copy of
    the base.
    """

    whole: int
    num: int
    den: int

    def __post_init__(self) -> None:
        if self.whole < 0 or self.den <= 0 or not 0 <= self.num < self.den:
            raise ValueError("need whole >= 0 and 0 <= num/den < 1")
        if Fraction(self.num, self.den).numerator != self.num:
            raise ValueError(f"{self.num}/{self.den} is not reduced")

    @property
    def strict(self) -> bool:
        return self.whole >= 1

    def as_fraction(self) -> Fraction:
        return self.whole + Fraction(self.num, self.den)


def ensure_nonempty(word: Word) -> None:
    if len(word.letters) == 0:
        raise EmptyWord("operation requires a nonempty word")


def ensure_same_alphabet(u: Word, v: Word) -> None:
    if u.alphabet != v.alphabet:
        raise AlphabetMismatch("words belong to different alphabets")


def make_word(text: Iterable[str], alphabet: OrderedAlphabet) -> Word:
    """Encode a character sequence as a word; error positions are 1-based."""
    rank = alphabet.rank
    letters = []
    for pos, ch in enumerate(text, start=1):
        if ch not in rank:
            raise UnknownSymbol(pos, ch)
        letters.append(rank[ch])
    return Word(alphabet, letters)


def lex_cmp(u: Word, v: Word) -> Ordering:
    """Lexicographic comparison; a proper prefix is smaller than its extension."""
    ensure_same_alphabet(u, v)
    if u.letters == v.letters:
        return Ordering.EQUAL
    return Ordering.LESS if u.letters < v.letters else Ordering.GREATER


def borders(w: Word) -> list[Word]:
    """Nonempty proper prefixes of w that are also suffixes, shortest first."""
    ensure_nonempty(w)
    ls = w.letters
    n = len(ls)
    return [Word(w.alphabet, ls[:k]) for k in range(1, n) if ls[:k] == ls[n - k:]]


def nontrivial_periods(w: Word) -> list[int]:
    """Shifts 0 < p < |w| under which w agrees with itself, ascending.

    p is a period exactly when w has a border of length |w| - p.
    """
    ensure_nonempty(w)
    ls = w.letters
    n = len(ls)
    return [p for p in range(1, n) if ls[p:] == ls[:n - p]]


def fractional_power_of(v: Word, u: Word) -> FractionalExponent | None:
    """The exponent r with v = u^r, if v is a prefix of the periodic extension of u.

    An empty v is the zeroth power.  Returns None when v falls off the
    extension of u.
    """
    ensure_same_alphabet(v, u)
    base = u.letters
    if len(base) == 0:
        raise EmptyBase("the base of a fractional power must be nonempty")
    if any(x != base[i % len(base)] for i, x in enumerate(v.letters)):
        return None
    whole, rem = divmod(len(v.letters), len(base))
    part = Fraction(rem, len(base))
    return FractionalExponent(whole, part.numerator, part.denominator)


def primitive_root(w: Word) -> tuple[Word, int]:
    """The shortest word x and the exponent e >= 1 with w = x^e."""
    ensure_nonempty(w)
    ls = w.letters
    n = len(ls)
    for d in range(1, n + 1):
        if n % d == 0 and ls[:d] * (n // d) == ls:
            return Word(w.alphabet, ls[:d]), n // d
    raise AssertionError("unreachable: every word is a power of itself")


def nontrivial_splits(w: Word) -> Iterator[tuple[Word, Word]]:
    """All factorizations w = uv with both parts nonempty."""
    for i in range(1, len(w.letters)):
        yield w[:i], w[i:]


def iter_all_words(alphabet: OrderedAlphabet, max_len: int) -> Iterator[Word]:
    """Every nonempty word of length at most max_len, in shortlex order."""
    for n in range(1, max_len + 1):
        for tup in itertools.product(range(len(alphabet.symbols)), repeat=n):
            yield Word(alphabet, tup)
