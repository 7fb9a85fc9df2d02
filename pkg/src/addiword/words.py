"""Integer words, factors, prefix sums and the plain-text word format."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import DomainError, ParseError, RangeError

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class Alphabet:
    """A finite, non-empty set of integers kept in increasing order."""

    symbols: tuple

    def __init__(self, symbols: Iterable[int]):
        syms = tuple(sorted(set(int(s) for s in symbols)))
        if not syms:
            raise DomainError("alphabet must be non-empty")
        object.__setattr__(self, "symbols", syms)

    @classmethod
    def of(cls, letters: Iterable[int]) -> "Alphabet":
        return cls(letters)

    @property
    def t(self) -> int:
        return len(self.symbols)

    @property
    def min(self) -> int:
        return self.symbols[0]

    @property
    def max(self) -> int:
        return self.symbols[-1]

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, x):
        return x in self.symbols

    def __str__(self):
        return "{" + ",".join(map(str, self.symbols)) + "}"


class Word(Sequence[int]):
    """An immutable finite word over the integers.

    Letters are checked to fit in a signed 64-bit integer and, when an
    alphabet is attached, to belong to it.
    """

    __slots__ = ("letters", "alphabet")

    def __init__(self, letters: Iterable[int] = (), alphabet: Optional[Alphabet] = None):
        letters = tuple(int(x) for x in letters)
        for x in letters:
            if not INT64_MIN <= x <= INT64_MAX:
                raise DomainError(f"letter {x} does not fit in 64 bits")
        if alphabet is not None:
            bad = [x for x in letters if x not in alphabet]
            if bad:
                raise DomainError(f"letter {bad[0]} is not in alphabet {alphabet}")
        self.letters = letters
        self.alphabet = alphabet

    def __len__(self):
        return len(self.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.letters[i], self.alphabet)
        return self.letters[i]

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        if isinstance(other, Word):
            return self.letters == other.letters
        if isinstance(other, (tuple, list)):
            return self.letters == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"Word({list(self.letters)!r})"

    def __str__(self):
        return format_word(self.letters)

    def effective_alphabet(self) -> Alphabet:
        """The attached alphabet, or the set of letters actually used."""
        if self.alphabet is not None:
            return self.alphabet
        return Alphabet(self.letters)


class Factor(NamedTuple):
    """Half-open window ``[start, start + length)`` of a word (0-based)."""

    start: int
    length: int

    @property
    def stop(self) -> int:
        return self.start + self.length


def prefix_sums(w: Sequence[int]) -> list[int]:
    """Return ``[0, x1, x1+x2, ...]``, one more entry than the word has letters."""
    return list(accumulate(w, initial=0))


def _check(ps: Sequence[int], f: Factor) -> None:
    if f.length < 1:
        raise RangeError(f"factors are non-empty, got length {f.length}")
    if f.start < 0 or f.start + f.length > len(ps) - 1:
        raise RangeError(f"factor {tuple(f)} outside word of length {len(ps) - 1}")


def factor_sum(ps: Sequence[int], f: Factor) -> int:
    _check(ps, f)
    return ps[f.start + f.length] - ps[f.start]


def factor_average(ps: Sequence[int], f: Factor) -> Fraction:
    """Exact average of the letters in ``f``."""
    return Fraction(factor_sum(ps, f), f.length)


_SPLIT = re.compile(r"[^\s,]+")
_INT = re.compile(r"[+-]?[0-9]+")


def parse_word(text: str, alphabet: Optional[Alphabet] = None) -> Word:
    """Parse whitespace/comma separated integers; ``#`` lines are comments."""
    letters = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.lstrip().startswith("#"):
            continue
        for m in _SPLIT.finditer(line):
            tok = m.group()
            if not _INT.fullmatch(tok):
                raise ParseError(
                    f"not an integer: {tok!r}", lineno, m.start() + 1, tok, len(letters) + 1
                )
            letters.append(int(tok))
    try:
        return Word(letters, alphabet)
    except DomainError as e:
        raise ParseError(str(e), 0, 0) from None


def format_word(w: Iterable[int]) -> str:
    return " ".join(str(x) for x in w)
