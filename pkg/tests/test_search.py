import pytest

from addiword import Alphabet, DomainError, SearchConfig, count_avoiding, extendable, find_additive_power, longest_avoiding
from addiword.detectors import find_abelian_square
from oracles import avoiding_by_brute_force, avoiding_by_level, contains

PATTERNS = ("additive-square", "additive-cube", "abelian-square")


def cfg(symbols, pattern="additive-square", **kw):
    return SearchConfig(Alphabet(symbols), pattern, **kw)


def test_extendable_examples():
    c = cfg([1, 2])
    assert not extendable(c, [1], 1)
    assert not extendable(c, [1, 2], 2)
    assert extendable(c, [1, 2], 1)
    assert not contains((1, 2, 1), "additive-square")
    with pytest.raises(DomainError):
        extendable(c, [1], 5)


@pytest.mark.parametrize("pattern", PATTERNS)
def test_extendable_matches_full_detector(pattern):
    c = cfg([1, 2, 4], pattern)
    for u in avoiding_by_level((1, 2, 4), pattern, 6)[-1][:200]:
        for a in (1, 2, 4):
            assert extendable(c, u, a) == (not contains(u + (a,), pattern))


def test_g_binary():
    res = longest_avoiding(cfg([1, 2]))
    assert res.exhausted and res.g == 3 and res.witness == (1, 2, 1)
    levels = avoiding_by_level((1, 2), "additive-square", 10)
    assert len(levels) - 2 == 3 and min(levels[3]) == (1, 2, 1)


def test_g_singleton():
    res = longest_avoiding(cfg([1]))
    assert res.exhausted and res.g == 1 and res.witness == (1,)


def test_cube_free_over_0134_reaches_budget():
    res = longest_avoiding(cfg([0, 1, 3, 4], "additive-cube", depth_budget=50))
    assert not res.exhausted and res.depth_reached == 50 and res.budget_hit == "depth"
    assert len(res.witness) == 50
    assert find_additive_power(res.witness, 3) is None


def test_node_budget_verdict():
    res = longest_avoiding(cfg([1, 2, 3], node_budget=10))
    assert not res.exhausted and res.budget_hit == "nodes" and res.nodes_visited == 10
    assert res.g is None


def test_count_examples():
    c = cfg([1, 2])
    assert count_avoiding(c, 3) == 2 == len(avoiding_by_brute_force((1, 2), "additive-square", 3))
    assert count_avoiding(c, 4) == 0 == len(avoiding_by_brute_force((1, 2), "additive-square", 4))
    for p in PATTERNS:
        assert count_avoiding(cfg([1], p), 1) == 1
    with pytest.raises(DomainError):
        count_avoiding(cfg([1, 2], depth_budget=5), 6)


@pytest.mark.parametrize("symbols", [(1,), (1, 2), (0, 1), (1, 3), (-1, 2)])
@pytest.mark.parametrize("pattern", PATTERNS)
def test_count_matches_enumeration(symbols, pattern):
    levels = avoiding_by_level(symbols, pattern, 14)
    c = cfg(symbols, pattern)
    for n in range(15):
        expected = len(levels[n]) if n < len(levels) else 0
        assert count_avoiding(c, n) == expected


@pytest.mark.parametrize("pattern", PATTERNS)
def test_g_three_letters_matches_enumeration(pattern):
    # cube-free words over {1,2,3} grow too fast for the naive filter past 9
    levels = avoiding_by_level((1, 2, 3), pattern, 9 if pattern == "additive-cube" else 14)
    res = longest_avoiding(cfg([1, 2, 3], pattern))
    if levels[-1]:
        assert not res.exhausted
    else:
        g = len(levels) - 2
        assert res.exhausted and res.g == g and res.witness == min(levels[g])


def test_g_three_letters_pinned():
    res = longest_avoiding(cfg([1, 2, 3]))
    assert (res.g, res.witness) == (7, (1, 2, 1, 3, 1, 2, 1))


@pytest.mark.parametrize("symbols, pattern", [((1, 2, 3), "additive-square"), ((1, 2, 3), "abelian-square"), ((1, 2), "additive-cube")])
def test_monotone_counts(symbols, pattern):
    c = cfg(symbols, pattern, depth_budget=30)
    res = longest_avoiding(c)
    counts = [count_avoiding(c, n) for n in range(12)]
    for a, b in zip(counts, counts[1:]):
        assert b <= len(symbols) * a
    if res.exhausted:
        assert all(v == 0 for v in counts[res.g + 1:])


@pytest.mark.parametrize("pattern", PATTERNS)
def test_witness_avoids_pattern(pattern):
    res = longest_avoiding(cfg([1, 2, 3, 5], pattern, depth_budget=25))
    w = res.witness
    if pattern == "abelian-square":
        assert find_abelian_square(w) is None
    else:
        assert find_additive_power(w, 3 if pattern == "additive-cube" else 2) is None


def test_translation_invariance():
    a, b = longest_avoiding(cfg([1, 2])), longest_avoiding(cfg([5, 6]))
    assert a.g == b.g
    assert [x + 4 for x in a.witness] == list(b.witness)


def test_deterministic():
    c = cfg([0, 1, 3, 4], "additive-cube", depth_budget=60)
    assert longest_avoiding(c) == longest_avoiding(c)


@pytest.mark.parametrize("symbols, pattern, depth", [
    ((1, 2, 3), "additive-square", 200),
    ((1, 2, 3), "abelian-square", 200),
    ((0, 1, 3, 4), "additive-cube", 80),
    ((1, 2), "additive-cube", 200),
])
def test_parallel_matches_sequential(symbols, pattern, depth):
    c = cfg(symbols, pattern, depth_budget=depth)
    seq = longest_avoiding(c, workers=1)
    par = longest_avoiding(c, workers=2, split_depth=2)
    assert (par.exhausted, par.g, par.depth_reached, par.witness) == (seq.exhausted, seq.g, seq.depth_reached, seq.witness)


def test_config_validation():
    with pytest.raises(DomainError):
        cfg([1, 2], "additive-quartic")
    with pytest.raises(DomainError):
        cfg([1, 2], depth_budget=0)
    assert cfg([1, 2], "additive-cube").order == 3
