"""Equal-average factorizations from collinear points of the lattice path.

The path of a word is ``P_i = (i, x_1 + ... + x_i)`` for ``i = 0..n``.  The
slope of the chord from ``P_i`` to ``P_j`` is the average of the letters
``x_{i+1} .. x_j``, so ``k + 1`` collinear path points cut out ``k`` adjacent
factors sharing one average.  Every decision here is made in integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import DomainError
from .words import Factor, prefix_sums

DEFAULT_MAX_POINTS = 20000


class LatticePoint(NamedTuple):
    index: int
    ordinate: int


class LineKey(NamedTuple):
    """Line ``a*index + b*ordinate = c`` in canonical form.

    ``gcd(a, b) == 1`` and the first non-zero of ``(a, b)`` is positive.
    """

    a: int
    b: int
    c: int


@dataclass(frozen=True)
class Factorization:
    factors: tuple
    common_average: Fraction
    points: tuple = ()


class DoubleApTriple(NamedTuple):
    i: int
    j: int
    k: int
    values: tuple


def lattice_path(w: Sequence[int]) -> list[LatticePoint]:
    return [LatticePoint(i, s) for i, s in enumerate(prefix_sums(w))]


def collinear(p: LatticePoint, q: LatticePoint, r: LatticePoint) -> bool:
    cross = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return cross == 0


def line_key(p: LatticePoint, q: LatticePoint) -> LineKey:
    if tuple(p) == tuple(q):
        raise DomainError("a line needs two distinct points")
    a = q[1] - p[1]
    b = p[0] - q[0]
    g = gcd(a, b)
    a, b = a // g, b // g
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    return LineKey(a, b, a * p[0] + b * p[1])


def _directions_numpy(xs, ys, r):
    dx = xs[r] - xs[:r]
    dy = ys[r] - ys[:r]
    g = np.gcd(dx, dy)
    g[g == 0] = 1
    dx, dy = dx // g, dy // g
    flip = (dx < 0) | ((dx == 0) & (dy < 0))
    dx[flip] *= -1
    dy[flip] *= -1
    return list(zip(dx.tolist(), dy.tolist()))


def _directions_python(pts, r):
    out = []
    xr, yr = pts[r]
    for x, y in pts[:r]:
        dx, dy = xr - x, yr - y
        g = gcd(dx, dy) or 1
        dx, dy = dx // g, dy // g
        if dx < 0 or (dx == 0 and dy < 0):
            dx, dy = -dx, -dy
        out.append((dx, dy))
    return out


def find_collinear(points: Sequence[LatticePoint], m: int) -> Optional[tuple]:
    """Positions of ``m`` collinear points.

    The chosen set minimises its largest position, then is lexicographically
    least.  Points sharing a line with the largest one ``r`` are exactly the
    earlier points seen from ``r`` along the same reduced direction, so the
    scan grows ``r`` and groups only the pairs ending at ``r``.
    """
    if m < 3:
        raise DomainError(f"need m >= 3, got {m}")
    pts = [(int(p[0]), int(p[1])) for p in points]
    if len(pts) < m:
        return None
    bound = max(max(abs(x), abs(y)) for x, y in pts)
    use_numpy = bound < 2**61
    if use_numpy:
        xs = np.array([p[0] for p in pts], dtype=np.int64)
        ys = np.array([p[1] for p in pts], dtype=np.int64)
    for r in range(m - 1, len(pts)):
        dirs = _directions_numpy(xs, ys, r) if use_numpy else _directions_python(pts, r)
        groups: dict = {}
        for p, d in enumerate(dirs):
            groups.setdefault(d, []).append(p)
        best = None
        for members in groups.values():
            if len(members) >= m - 1:
                cand = tuple(members[: m - 1]) + (r,)
                if best is None or cand < best:
                    best = cand
        if best is not None:
            return best
    return None


def equal_average_factorization(
    w: Sequence[int], k: int, max_points: Optional[int] = None
) -> Optional[Factorization]:
    """``k`` adjacent factors with identical averages, or None.

    Only the first ``max_points`` path points are searched when a cap is
    given.
    """
    if k < 2:
        raise DomainError(f"need k >= 2, got {k}")
    path = lattice_path(w)
    if max_points is not None:
        path = path[:max_points]
    idx = find_collinear(path, k + 1)
    if idx is None:
        return None
    factors = tuple(Factor(i, j - i) for i, j in zip(idx, idx[1:]))
    p, q = path[idx[0]], path[idx[1]]
    avg = Fraction(q.ordinate - p.ordinate, q.index - p.index)
    return Factorization(factors, avg, idx)


def find_double_ap(x: Sequence[int]) -> Optional[DoubleApTriple]:
    """Indices ``i < j < k`` (0-based) with ``j - i == k - j`` and
    ``x[j] - x[i] == x[k] - x[j]``; the triple with least ``k``, then ``j``.
    """
    n = len(x)
    for k in range(2, n):
        for j in range((k + 1) // 2, k):
            i = 2 * j - k
            if 2 * x[j] == x[i] + x[k]:
                return DoubleApTriple(i, j, k, (x[i], x[j], x[k]))
    return None
