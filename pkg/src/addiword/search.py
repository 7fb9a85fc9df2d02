"""Exhaustive search for the longest words avoiding a pattern.

The search is a depth-first walk over words in lexicographic order.  A
letter is appended only if no forbidden factor ends at the new last
position; every factor ends somewhere, so checking suffixes at each step
keeps every word on the stack pattern-free.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import DomainError
from .words import Alphabet

PATTERNS = ("additive-square", "additive-cube", "abelian-square")
DEFAULT_DEPTH_BUDGET = 200
DEFAULT_NODE_BUDGET = 10**8


@dataclass(frozen=True)
class SearchConfig:
    alphabet: Alphabet
    pattern: str = "additive-square"
    depth_budget: int = DEFAULT_DEPTH_BUDGET
    node_budget: int = DEFAULT_NODE_BUDGET

    def __post_init__(self):
        if not isinstance(self.alphabet, Alphabet):
            object.__setattr__(self, "alphabet", Alphabet(self.alphabet))
        if self.pattern not in PATTERNS:
            raise DomainError(f"unknown pattern {self.pattern!r}; expected one of {PATTERNS}")
        if self.depth_budget < 1 or self.node_budget < 1:
            raise DomainError("budgets must be positive")

    @property
    def order(self) -> int:
        return 3 if self.pattern == "additive-cube" else 2


@dataclass
class SearchResult:
    """``exhausted`` is True when the whole tree fit in the budgets; then
    ``g`` is the longest avoiding length.  Otherwise ``depth_reached`` is the
    longest length seen before a budget ran out.
    """

    exhausted: bool
    g: Optional[int]
    depth_reached: int
    witness: tuple
    nodes_visited: int
    budget_hit: Optional[str] = None

    @property
    def verdict(self) -> str:
        return "exhausted" if self.exhausted else "budget-exceeded"


class WordState:
    """A pattern-free word under construction with its running sums.

    For abelian squares ``counts[c]`` is the prefix count of symbol ``c``.
    """

    def __init__(self, cfg: SearchConfig):
        self.pattern = cfg.pattern
        self.symbols = cfg.alphabet.symbols
        self.code = {s: i for i, s in enumerate(self.symbols)}
        self.letters: list[int] = []
        self.ps = [0]
        self.counts = [[0] for _ in self.symbols] if cfg.pattern == "abelian-square" else None

    def __len__(self):
        return len(self.letters)

    def extendable(self, letter: int) -> bool:
        """True iff appending ``letter`` creates no forbidden suffix."""
        ps = self.ps
        n = len(ps)  # length after the append
        top = ps[-1] + letter
        if self.pattern == "additive-square":
            for L in range(1, n // 2 + 1):
                if 2 * ps[n - L] == top + ps[n - 2 * L]:
                    return False
            return True
        if self.pattern == "additive-cube":
            for L in range(1, n // 3 + 1):
                mid = ps[n - L]
                d = top - mid
                if mid - ps[n - 2 * L] == d and ps[n - 2 * L] - ps[n - 3 * L] == d:
                    return False
            return True
        c = self.code[letter]
        counts = self.counts
        for L in range(1, n // 2 + 1):
            a, b = n - L, n - 2 * L
            ok = False
            for s, col in enumerate(counts):
                last = col[-1] + (s == c)
                if last - col[a] != col[a] - col[b]:
                    ok = True
                    break
            if not ok:
                return False
        return True

    def push(self, letter: int) -> None:
        self.letters.append(letter)
        self.ps.append(self.ps[-1] + letter)
        if self.counts is not None:
            c = self.code[letter]
            for s, col in enumerate(self.counts):
                col.append(col[-1] + (s == c))

    def pop(self) -> None:
        self.letters.pop()
        self.ps.pop()
        if self.counts is not None:
            for col in self.counts:
                col.pop()


def extendable(cfg: SearchConfig, word: Sequence[int], letter: int) -> bool:
    """Stateless form of :meth:`WordState.extendable` for a given prefix."""
    if letter not in cfg.alphabet:
        raise DomainError(f"letter {letter} is not in {cfg.alphabet}")
    st = WordState(cfg)
    for x in word:
        st.push(x)
    return st.extendable(letter)


def _dfs(cfg: SearchConfig, prefix: Sequence[int] = ()):
    """Walk the subtree below ``prefix``; returns a SearchResult for it.

    ``prefix`` is assumed pattern-free and is not counted as a node.
    """
    st = WordState(cfg)
    for x in prefix:
        st.push(x)
    symbols = st.symbols
    t = len(symbols)
    base = len(prefix)
    depth_budget = cfg.depth_budget
    node_budget = cfg.node_budget
    best_len = base
    witness = tuple(prefix)
    nodes = 0
    if base >= depth_budget:
        return SearchResult(False, None, base, witness, 0, "depth")
    nxt = [0]
    while nxt:
        i = nxt[-1]
        if i == t:
            nxt.pop()
            if len(st) > base:
                st.pop()
            continue
        nxt[-1] = i + 1
        a = symbols[i]
        if not st.extendable(a):
            continue
        st.push(a)
        nodes += 1
        depth = len(st)
        if depth > best_len:
            best_len = depth
            witness = tuple(st.letters)
            if depth >= depth_budget:
                return SearchResult(False, None, depth, witness, nodes, "depth")
        if nodes >= node_budget:
            return SearchResult(False, None, best_len, witness, nodes, "nodes")
        nxt.append(0)
    return SearchResult(True, best_len, best_len, witness, nodes)


def _frontier(cfg: SearchConfig, depth: int) -> list[tuple]:
    """Pattern-free words of length ``depth`` in lexicographic order."""
    out = []
    st = WordState(cfg)

    def rec():
        if len(st) == depth:
            out.append(tuple(st.letters))
            return
        for a in st.symbols:
            if st.extendable(a):
                st.push(a)
                rec()
                st.pop()

    rec()
    return out


def _worker_count() -> int:
    env = os.environ.get("ADDIWORD_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def longest_avoiding(cfg: SearchConfig, workers: Optional[int] = None, split_depth: int = 3) -> SearchResult:
    """Search for the longest word over ``cfg.alphabet`` avoiding ``cfg.pattern``.

    With ``workers > 1`` the subtrees below the pattern-free words of length
    ``split_depth`` run in separate processes and are merged in
    lexicographic order, so the verdict, ``g`` and witness match a
    sequential run.  In that mode the node budget applies per subtree.
    ``workers`` defaults to ``$ADDIWORD_THREADS`` (1 when unset).
    """
    if workers is None:
        workers = _worker_count()
    if workers <= 1 or split_depth >= cfg.depth_budget:
        return _dfs(cfg)
    roots = _frontier(cfg, split_depth)
    # words shorter than split_depth are not below any root; cover them here
    shallow = _dfs(SearchConfig(cfg.alphabet, cfg.pattern, split_depth, cfg.node_budget))
    shallow_nodes = _count_nodes_to(cfg, split_depth)
    if not roots:
        return SearchResult(True, shallow.g, shallow.depth_reached, shallow.witness, shallow_nodes)
    results = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for res in pool.map(_dfs, [cfg] * len(roots), roots):
            results.append(res)
            if not res.exhausted and res.budget_hit == "depth":
                pool.shutdown(wait=False, cancel_futures=True)
                break
    nodes = shallow_nodes + sum(r.nodes_visited for r in results)
    deep = next((r for r in results if r.budget_hit == "depth"), None)
    if deep is not None:
        return SearchResult(False, None, deep.depth_reached, deep.witness, nodes, "depth")
    top = max(results, key=lambda r: r.depth_reached)
    best = next(r for r in results if r.depth_reached == top.depth_reached)
    if any(not r.exhausted for r in results):
        return SearchResult(False, None, best.depth_reached, best.witness, nodes, "nodes")
    return SearchResult(True, best.depth_reached, best.depth_reached, best.witness, nodes)


def _count_nodes_to(cfg: SearchConfig, depth: int) -> int:
    return sum(count_avoiding(cfg, n) for n in range(1, depth + 1))


def count_avoiding(cfg: SearchConfig, length: int) -> int:
    """Number of words of exactly ``length`` letters avoiding the pattern."""
    if length < 0:
        raise DomainError("length must be non-negative")
    if length > cfg.depth_budget:
        raise DomainError(f"length {length} exceeds depth budget {cfg.depth_budget}")
    st = WordState(cfg)
    symbols = st.symbols

    def rec():
        if len(st) == length:
            return 1
        total = 0
        for a in symbols:
            if st.extendable(a):
                st.push(a)
                total += rec()
                st.pop()
        return total

    return rec()
