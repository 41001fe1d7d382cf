from __future__ import annotations

import pytest

from defekt.canon import canonical_key
from defekt.colour import chi_k
from defekt.enumerate import (
    SearchConfig,
    brute_force_enumerate,
    enumerate_triangle_free,
    extremal_search,
    independent_sets,
    smallest_order,
    triangle_free_level,
)
from defekt.graph import cycle, is_triangle_free
from defekt.planar import is_maximal_tfp, is_planar

# triangle-free graphs up to isomorphism, orders 1..10 (OEIS A006785)
TRIANGLE_FREE_COUNTS = [1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172]


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(13)
    with pytest.raises(ValueError):
        SearchConfig(5, require_maximal_tfp=True)
    with pytest.raises(ValueError):
        SearchConfig(5, chi_filter=(1, "ne", 3))


def test_independent_sets_of_c5():
    c5 = cycle(5)
    sets = list(independent_sets(c5.adj, 5, 5))
    assert len(sets) == 1 + 5 + 5  # empty, singletons, non-adjacent pairs
    assert len(set(sets)) == len(sets)
    assert len(list(independent_sets(c5.adj, 5, 1))) == 6


@pytest.mark.parametrize("n", range(0, 7))
def test_complete_against_brute_force(n):
    expected = sorted(canonical_key(g) for g in brute_force_enumerate(n) if is_triangle_free(g))
    assert list(triangle_free_level(n).keys) == expected


@pytest.mark.parametrize("n", range(1, 11))
def test_counts_match_known_sequence(n):
    assert len(triangle_free_level(n).graphs) == TRIANGLE_FREE_COUNTS[n - 1]


@pytest.mark.parametrize("n", range(1, 10))
def test_planar_level_is_planar_filter_of_full_level(n):
    full = triangle_free_level(n)
    expected = [k for k, g in zip(full.keys, full.graphs) if is_planar(g)]
    assert list(triangle_free_level(n, planar=True).keys) == expected


@pytest.mark.parametrize("n", [5, 8, 9])
def test_level_invariants(n):
    lvl = triangle_free_level(n)
    assert len(set(lvl.keys)) == len(lvl.keys)
    assert list(lvl.keys) == sorted(lvl.keys)
    parents = set(triangle_free_level(n - 1).keys)
    for key, g in zip(lvl.keys, lvl.graphs):
        assert canonical_key(g) == key
        assert is_triangle_free(g)
        # deleting some minimum-degree vertex lands on a listed parent
        d = g.min_degree
        assert any(canonical_key(g.delete_vertex(v)) in parents for v in range(n) if g.degree(v) == d)


def test_threaded_run_matches_serial():
    from defekt import enumerate as en

    serial = triangle_free_level(9, planar=True)
    saved = dict(en._LEVELS)
    try:
        en._LEVELS.clear()
        par = triangle_free_level(9, planar=True, threads=2)
    finally:
        en._LEVELS.clear()
        en._LEVELS.update(saved)
    assert par.keys == serial.keys
    assert par.graphs == serial.graphs


def test_filters_and_stats():
    out, stats = enumerate_triangle_free(SearchConfig(8, require_planar=True, require_maximal_tfp=True))
    assert out and all(is_maximal_tfp(g) for g in out)
    assert stats.emitted == len(out)
    assert stats.per_level[8] == len(triangle_free_level(8, planar=True).graphs)
    assert "emitted=%d" % len(out) in stats.as_lines()
    out, _ = enumerate_triangle_free(SearchConfig(7, chi_filter=(0, "ge", 3)))
    assert all(chi_k(g, 0) >= 3 for g in out)


def test_small_extremal_orders():
    # a 5-cycle is the smallest triangle-free graph needing 3 proper colours
    assert smallest_order(0, 3, False, range(1, 8))[0] == 5
    # (2,1)-colourings exist below order 9
    n, counts = smallest_order(1, 3, False, range(1, 10))
    assert n == 9 and counts[8] == 0
    assert [len(extremal_search(9, 1, 3, False))] == [counts[9]]
