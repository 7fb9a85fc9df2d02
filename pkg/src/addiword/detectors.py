"""Detection of additive powers, abelian squares and near-square discrepancy.

All detectors return the first occurrence under a fixed order so that
results are reproducible:

* additive powers: smallest end index, then smallest block length;
* abelian squares: smallest start index, then smallest block length.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence

from .errors import DomainError, RangeError
from .words import Factor, prefix_sums


class PowerLocation(NamedTuple):
    start: int
    half_len: int
    order: int
    block_sums: tuple

    @property
    def blocks(self) -> list[Factor]:
        return [Factor(self.start + i * self.half_len, self.half_len) for i in range(self.order)]

    @property
    def stop(self) -> int:
        return self.start + self.order * self.half_len


class DiscrepancyReport(NamedTuple):
    u: Factor
    v: Factor
    discrepancy: int


def _block_sums(ps, start, length, p):
    return tuple(ps[start + (i + 1) * length] - ps[start + i * length] for i in range(p))


def find_additive_power(w: Sequence[int], p: int = 2, min_half_len: int = 1) -> Optional[PowerLocation]:
    """Find ``B1...Bp`` with equal block lengths and equal block sums."""
    if p < 2:
        raise DomainError(f"order must be at least 2, got {p}")
    min_half_len = max(1, min_half_len)
    ps = prefix_sums(w)
    n = len(w)
    for end in range(p * min_half_len, n + 1):
        for L in range(min_half_len, end // p + 1):
            start = end - p * L
            first = ps[start + L] - ps[start]
            if all(ps[start + (i + 1) * L] - ps[start + i * L] == first for i in range(1, p)):
                return PowerLocation(start, L, p, (first,) * p)
    return None


def is_additive_power_at(w: Sequence[int], start: int, half_len: int, p: int = 2) -> bool:
    ps = prefix_sums(w[start:start + p * half_len])
    if half_len < 1 or len(ps) - 1 < p * half_len:
        return False
    return len(set(_block_sums(ps, 0, half_len, p))) == 1


def find_abelian_square(w: Sequence[int], min_half_len: int = 1) -> Optional[PowerLocation]:
    """Find adjacent blocks that are permutations of each other.

    For a fixed start the per-symbol count difference between the two halves
    is updated in O(1) as the half length grows, so the scan is O(n^2).
    """
    min_half_len = max(1, min_half_len)
    symbols = sorted(set(w))
    code = {s: i for i, s in enumerate(symbols)}
    x = [code[a] for a in w]
    n = len(x)
    t = len(symbols)
    for start in range(n):
        if start + 2 * min_half_len > n:
            break
        diff = [0] * t
        nonzero = 0

        def bump(sym, d):
            nonlocal nonzero
            before = diff[sym]
            diff[sym] = before + d
            nonzero += (diff[sym] != 0) - (before != 0)

        L = 0
        while start + 2 * (L + 1) <= n:
            # halves [start, start+L) and [start+L, start+2L) grow to L+1
            mid = start + L
            bump(x[mid], 2)  # leaves the second half, joins the first
            bump(x[start + 2 * L], -1)
            bump(x[start + 2 * L + 1], -1)
            L += 1
            if L >= min_half_len and nonzero == 0:
                ps = prefix_sums(w[start:start + 2 * L])
                return PowerLocation(start, L, 2, _block_sums(ps, 0, L, 2))
    return None


def min_discrepancy_scan(w: Sequence[int], half_len: int) -> DiscrepancyReport:
    """Adjacent pair ``U, V`` with ``|U| = |V| = half_len`` minimising ``|sum U - sum V|``."""
    n = len(w)
    if half_len < 1 or 2 * half_len > n:
        raise RangeError(f"need 1 <= 2*{half_len} <= {n}")
    ps = prefix_sums(w)
    best = None
    for start in range(n - 2 * half_len + 1):
        mid = start + half_len
        d = abs(2 * ps[mid] - ps[start] - ps[mid + half_len])
        if best is None or d < best[0]:
            best = (d, start)
            if d == 0:
                break
    d, start = best
    return DiscrepancyReport(Factor(start, half_len), Factor(start + half_len, half_len), d)
