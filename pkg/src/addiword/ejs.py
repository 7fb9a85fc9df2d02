"""Near-additive squares through the binary encoding ``1^x1 0 1^x2 0 ...``.

A word over positive integers is encoded as a binary word in which each
letter ``x`` becomes a run of ``x`` ones closed by a single zero.  An abelian
square in the encoding has the same number ``k`` of zeros in each half, so
it straddles ``2k`` consecutive letters of the source word.  Splitting those
letters into the first ``k`` and the next ``k`` gives adjacent equal-length
blocks whose sums differ by ``|a1 - 2*a3 + a5|``, where ``a1, a3, a5`` are the
pieces of the letters cut by the square's left edge, midpoint and right
edge.  Each piece is at most the largest letter, hence the bound.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError, NoZeroCrossing, NotFound
from .words import Alphabet, Factor, Word, prefix_sums


@dataclass(frozen=True)
class BinaryWord:
    """Encoded word.

    ``zero_positions[i]`` is the bit index of the zero that closes letter
    ``i`` and ``run_starts[i]`` the bit index where its run of ones begins.
    """

    bits: np.ndarray
    zero_positions: tuple
    run_starts: tuple

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return "".join("1" if b else "0" for b in self.bits)

    def letter_closed_by(self, bit: int) -> int:
        """Index of the letter whose terminating zero sits at ``bit``."""
        i = bisect_left(self.zero_positions, bit)
        if i == len(self.zero_positions) or self.zero_positions[i] != bit:
            raise DomainError(f"bit {bit} is not a zero")
        return i

    @classmethod
    def from_bits(cls, bits) -> "BinaryWord":
        """Wrap an arbitrary 0/1 sequence; runs are read off the zeros."""
        arr = np.asarray([1 if b in (1, "1", True) else 0 for b in bits], dtype=np.int8)
        zeros = tuple(int(z) for z in np.flatnonzero(arr == 0))
        starts = tuple([0] + [z + 1 for z in zeros[:-1]]) if zeros else ()
        return cls(arr, zeros, starts)


@dataclass(frozen=True)
class EjsAlignment:
    """How a binary square sits over the source letters.

    ``alpha`` holds the six run pieces: (a1, a2) split the letter cut by the
    left edge, (a3, a4) the one cut by the midpoint and (a5, a6) the one cut
    by the right edge.  a2, a3 and a5 are the pieces inside the square.  When
    the right edge coincides with the end of the encoded word there is no
    letter to cut and a6 is 0.
    """

    k: int
    alpha: tuple
    first_block_start: int
    second_block_start: int


@dataclass(frozen=True)
class NearSquare:
    u: Factor
    v: Factor
    discrepancy: int
    bound_c: int
    shift_offset: int = 0


def compute_bound(s: Alphabet) -> int:
    if s.min >= 1:
        return 2 * s.max
    return 2 * (abs(s.min) + 1 + s.max)


def shift_to_positive(w: Sequence[int]) -> tuple[Word, int]:
    """Translate letters so that all are at least 1; returns (word, offset)."""
    if not w or min(w) >= 1:
        return Word(w), 0
    offset = abs(min(w)) + 1
    return Word(x + offset for x in w), offset


def ejs_encode(w: Sequence[int]) -> BinaryWord:
    if any(x < 1 for x in w):
        raise DomainError("encoding needs letters >= 1")
    bits = np.ones(sum(w) + len(w), dtype=np.int8)
    zeros = []
    starts = []
    pos = 0
    for x in w:
        starts.append(pos)
        pos += x
        zeros.append(pos)
        pos += 1
    bits[zeros] = 0
    return BinaryWord(bits, tuple(zeros), tuple(starts))


def _bits_of(bw) -> np.ndarray:
    if isinstance(bw, BinaryWord):
        return bw.bits
    return BinaryWord.from_bits(bw).bits


def find_binary_abelian_square(bw, min_half_len: int = 1) -> Optional[tuple[int, int]]:
    """Leftmost, then shortest, abelian square in a binary word.

    Two equal-length binary blocks are permutations of each other exactly
    when they hold the same number of ones.  Returns ``(start, half_len)``.
    """
    bits = _bits_of(bw)
    n = len(bits)
    h0 = max(1, min_half_len)
    ones = np.concatenate(([0], np.cumsum(bits, dtype=np.int64)))
    for start in range(n - 2 * h0 + 1):
        h = np.arange(h0, (n - start) // 2 + 1)
        mid = ones[start + h]
        hit = np.flatnonzero(2 * mid == ones[start] + ones[start + 2 * h])
        if hit.size:
            return start, int(h[hit[0]])
    return None


def decode_to_near_square(w: Sequence[int], bw: BinaryWord, square: tuple[int, int]):
    """Map a binary abelian square back to adjacent equal-length blocks of ``w``.

    ``w`` is the (positive) word that was encoded into ``bw``.  Returns
    ``(NearSquare, EjsAlignment)``.
    """
    start, h = square
    mid, end = start + h, start + 2 * h
    if h < 1 or end > len(bw):
        raise DomainError(f"square {square} does not fit in {len(bw)} bits")
    zp = bw.zero_positions
    a = bisect_left(zp, start)
    k = bisect_left(zp, mid) - a
    k2 = bisect_left(zp, end) - a - k
    if k == 0:
        raise NoZeroCrossing(f"square {square} lies inside one run of ones")
    if k2 != k:
        raise DomainError(f"square {square} is not abelian ({k} vs {k2} zeros)")

    def run_start(i):
        return bw.run_starts[i] if i < len(w) else zp[i - 1] + 1

    a2 = zp[a] - start
    a1 = w[a] - a2
    a3 = mid - run_start(a + k)
    a4 = w[a + k] - a3
    a5 = end - run_start(a + 2 * k)
    a6 = w[a + 2 * k] - a5 if a + 2 * k < len(w) else 0
    alpha = (a1, a2, a3, a4, a5, a6)

    ps = prefix_sums(w)
    u, v = Factor(a, k), Factor(a + k, k)
    disc = abs((ps[a + k] - ps[a]) - (ps[a + 2 * k] - ps[a + k]))
    if disc != abs(a1 - 2 * a3 + a5):
        raise AssertionError(f"alignment identity broken for square {square}: {alpha}")
    near = NearSquare(u, v, disc, compute_bound(Alphabet(w)))
    return near, EjsAlignment(k, alpha, a, a + k)


def near_additive_square(w: Sequence[int], min_block_len: int = 1, alphabet: Optional[Alphabet] = None):
    """Adjacent blocks ``U, V`` with ``|U| = |V| >= min_block_len`` and small sum gap.

    The gap is measured on the original letters and never exceeds
    ``compute_bound`` of the alphabet.  Raises ``NotFound`` when this finite
    word is too short to contain a qualifying square.  Returns
    ``(NearSquare, EjsAlignment)``.
    """
    if not w:
        raise NotFound("empty word")
    if alphabet is None:
        alphabet = w.effective_alphabet() if isinstance(w, Word) else Alphabet(w)
    shifted, offset = shift_to_positive(w)
    bw = ejs_encode(shifted)
    # any max(shifted)+1 consecutive bits hold a zero, so this forces k >= min_block_len
    min_half = (max(1, min_block_len) + 1) * (1 + max(shifted))
    square = find_binary_abelian_square(bw, min_half)
    if square is None:
        raise NotFound(f"no binary abelian square with half length >= {min_half}")
    near, align = decode_to_near_square(shifted, bw, square)
    ps = prefix_sums(w)
    u, v = near.u, near.v
    disc = abs((ps[u.stop] - ps[u.start]) - (ps[v.stop] - ps[v.start]))
    near = NearSquare(u, v, disc, compute_bound(alphabet), offset)
    return near, align
