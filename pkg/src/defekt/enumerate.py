"""Triangle-free graphs up to isomorphism by one-vertex augmentation.

Level ``n`` is built from the level ``n - 1`` representatives by appending a
vertex whose neighbourhood is an independent set of the parent. Two cheap,
isomorphism-invariant rules cut duplicate children before canonical
labelling:

* the new vertex must have minimum degree in the child, so only independent
  sets of size at most ``min_degree(parent) + 1`` are tried;
* among the minimum-degree vertices it must also minimise the sum of its
  neighbours' degrees.

Every triangle-free graph has such a vertex, and deleting it leaves a
triangle-free graph already present one level down, so completeness is kept.
Whatever duplicates remain are removed by a set of canonical keys.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .canon import canonical_key
from .colour import chi_k
from .graph import SmallGraph, bits
from .planar import is_maximal_tfp, is_planar

log = logging.getLogger(__name__)

MAX_SEARCH_ORDER = 12
COMPARATORS: dict[str, Callable[[int, int], bool]] = {
    "eq": lambda a, b: a == b,
    "ge": lambda a, b: a >= b,
    "le": lambda a, b: a <= b,
    "gt": lambda a, b: a > b,
    "lt": lambda a, b: a < b,
}


@dataclass(frozen=True)
class SearchConfig:
    n: int
    require_planar: bool = False
    require_maximal_tfp: bool = False
    chi_filter: tuple[int, str, int] | None = None  # (k, comparator, value)
    threads: int = 1

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_SEARCH_ORDER:
            raise ValueError(f"order {self.n} outside the supported range 0..{MAX_SEARCH_ORDER}")
        if self.require_maximal_tfp and not self.require_planar:
            raise ValueError("the maximality filter is only defined for planar search")
        if self.chi_filter is not None and self.chi_filter[1] not in COMPARATORS:
            raise ValueError(f"unknown comparator {self.chi_filter[1]!r}")


@dataclass
class EnumerationStats:
    generated: int = 0
    emitted: int = 0
    pruned_nonplanar: int = 0
    pruned_dup: int = 0
    children_tested: int = 0
    per_level: dict[int, int] = field(default_factory=dict)

    def as_lines(self) -> list[str]:
        lines = [
            f"generated={self.generated}",
            f"emitted={self.emitted}",
            f"pruned_nonplanar={self.pruned_nonplanar}",
            f"pruned_dup={self.pruned_dup}",
            f"children_tested={self.children_tested}",
        ]
        lines += [f"level_{n}={c}" for n, c in sorted(self.per_level.items())]
        return lines


@dataclass(frozen=True)
class Level:
    """Isomorphism class representatives of one order, sorted by canonical key."""

    n: int
    keys: tuple[bytes, ...]
    graphs: tuple[SmallGraph, ...]
    pruned_nonplanar: int
    pruned_dup: int
    children_tested: int


def independent_sets(adj: tuple[int, ...], n: int, max_size: int) -> Iterator[int]:
    """Masks of independent sets of size <= ``max_size``, in increasing vertex order."""

    def rec(start: int, mask: int, allowed: int, size: int) -> Iterator[int]:
        yield mask
        if size == max_size:
            return
        for v in range(start, n):
            if allowed >> v & 1:
                yield from rec(v + 1, mask | 1 << v, allowed & ~adj[v] & ~(1 << v), size + 1)

    yield from rec(0, 0, (1 << n) - 1, 0)


def _children(parent: SmallGraph, planar: bool) -> Iterator[tuple[int, SmallGraph]]:
    """Children passing the new-vertex-is-minimal rule, as ``(mask, child)``."""
    n = parent.n
    padj = parent.adj
    pdeg = [row.bit_count() for row in padj]
    cap = min(pdeg, default=0) + 1
    if planar:
        cap = min(cap, 3)  # triangle-free planar graphs have a vertex of degree <= 3
    new_bit = 1 << n
    for mask in independent_sets(padj, n, cap):
        d = mask.bit_count()
        deg = [pdeg[v] + (mask >> v & 1) for v in range(n)]
        if min(deg, default=d) < d:
            continue
        score = sum(deg[v] for v in bits(mask))
        ok = True
        for v in range(n):
            if deg[v] == d:
                s = sum(deg[w] for w in bits(padj[v])) + (d if mask >> v & 1 else 0)
                if s < score:
                    ok = False
                    break
        if not ok:
            continue
        adj = tuple(row | new_bit if mask >> v & 1 else row for v, row in enumerate(padj)) + (mask,)
        yield mask, SmallGraph(n + 1, adj)


def _augment_shard(
    args: tuple[list[tuple[int, SmallGraph]], bool, int],
) -> tuple[dict[bytes, tuple[tuple[int, int], SmallGraph]], int, int, int]:
    shard, planar, max_edges = args
    found: dict[bytes, tuple[tuple[int, int], SmallGraph]] = {}
    nonplanar = dup = tested = 0
    rejected: set[bytes] = set()
    for pidx, parent in shard:
        for mask, child in _children(parent, planar):
            tested += 1
            if planar and parent.num_edges + mask.bit_count() > max_edges:
                nonplanar += 1
                continue
            key = canonical_key(child)
            if key in found:
                dup += 1
                # keep the smallest origin so sharding never changes the representative
                if (pidx, mask) < found[key][0]:
                    found[key] = ((pidx, mask), child)
                continue
            if key in rejected:
                dup += 1
                continue
            if planar and not is_planar(child):
                rejected.add(key)
                nonplanar += 1
                continue
            found[key] = ((pidx, mask), child)
    return found, nonplanar, dup, tested


def _next_level(prev: Level, planar: bool, threads: int) -> Level:
    n = prev.n + 1
    max_edges = max(2 * n - 4, 1) if n >= 3 else n * (n - 1) // 2
    indexed = list(enumerate(prev.graphs))
    if threads > 1 and len(indexed) > 64:
        shards = [(indexed[i::threads], planar, max_edges) for i in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_augment_shard, shards))
    else:
        results = [_augment_shard((indexed, planar, max_edges))]
    merged: dict[bytes, tuple[tuple[int, int], SmallGraph]] = {}
    nonplanar = dup = tested = 0
    for found, np_, dp, ts in results:
        nonplanar += np_
        dup += dp
        tested += ts
        for key, (origin, child) in found.items():
            if key in merged:
                dup += 1
                if origin < merged[key][0]:
                    merged[key] = (origin, child)
            else:
                merged[key] = (origin, child)
    keys = tuple(sorted(merged))
    return Level(n, keys, tuple(merged[k][1] for k in keys), nonplanar, dup, tested)


_LEVELS: dict[tuple[int, bool], Level] = {}


def triangle_free_level(n: int, planar: bool = False, threads: int = 1) -> Level:
    """All triangle-free (planar, if asked) graphs of order ``n`` up to isomorphism.

    Levels are memoised per process; the result does not depend on ``threads``.
    """
    if not 0 <= n <= MAX_SEARCH_ORDER:
        raise ValueError(f"order {n} outside 0..{MAX_SEARCH_ORDER}")
    cached = _LEVELS.get((n, planar))
    if cached is not None:
        return cached
    if n == 0:
        g = SmallGraph.empty(0)
        level = Level(0, (canonical_key(g),), (g,), 0, 0, 0)
    else:
        prev = triangle_free_level(n - 1, planar, threads)
        level = _next_level(prev, planar, threads)
        log.info("order %d%s: %d classes", n, " planar" if planar else "", len(level.graphs))
    _LEVELS[(n, planar)] = level
    return level


def default_threads() -> int:
    env = os.environ.get("DEFEKT_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def enumerate_triangle_free(cfg: SearchConfig) -> tuple[list[SmallGraph], EnumerationStats]:
    """Representatives passing ``cfg``'s filters, in canonical-key order, plus counters."""
    level = triangle_free_level(cfg.n, cfg.require_planar, cfg.threads)
    stats = EnumerationStats(
        generated=len(level.graphs),
        pruned_nonplanar=level.pruned_nonplanar,
        pruned_dup=level.pruned_dup,
        children_tested=level.children_tested,
    )
    stats.per_level = {
        m: len(triangle_free_level(m, cfg.require_planar, cfg.threads).graphs)
        for m in range(1, cfg.n + 1)
    }
    out = []
    for g in level.graphs:
        if cfg.require_maximal_tfp and not is_maximal_tfp(g):
            continue
        if cfg.chi_filter is not None:
            k, cmp, value = cfg.chi_filter
            if not COMPARATORS[cmp](chi_k(g, k), value):
                continue
        out.append(g)
    stats.emitted = len(out)
    return out, stats


def brute_force_enumerate(n: int) -> list[SmallGraph]:
    """Every simple graph of order ``n <= 6`` up to isomorphism, by exhaustive labelled generation."""
    if not 0 <= n <= 6:
        raise ValueError("brute-force oracle limited to n <= 6")
    pairs = [(i, j) for j in range(n) for i in range(j)]
    seen: dict[bytes, SmallGraph] = {}
    for m in range(1 << len(pairs)):
        g = SmallGraph.from_edges(n, [p for b, p in enumerate(pairs) if m >> b & 1])
        seen.setdefault(canonical_key(g), g)
    return [seen[k] for k in sorted(seen)]


def has_chi(g: SmallGraph, k: int, m: int) -> bool:
    return chi_k(g, k) == m


def extremal_search(
    n: int, k: int, m: int, require_planar: bool, threads: int = 1
) -> list[SmallGraph]:
    """Triangle-free (planar) graphs of order ``n`` with ``chi_k == m``, up to isomorphism."""
    cfg = SearchConfig(n, require_planar=require_planar, chi_filter=(k, "eq", m), threads=threads)
    return enumerate_triangle_free(cfg)[0]


def smallest_order(
    k: int, m: int, require_planar: bool, orders: range, threads: int = 1
) -> tuple[int | None, dict[int, int]]:
    """Smallest order in ``orders`` with a non-empty extremal set, plus per-order counts."""
    counts = {}
    for n in orders:
        counts[n] = len(extremal_search(n, k, m, require_planar, threads))
        if counts[n]:
            return n, counts
    return None, counts
