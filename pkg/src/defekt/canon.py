"""Canonical labelling by partition refinement plus individualisation search.

The canonical form of a graph is the relabelling whose graph6 adjacency bit
string is lexicographically smallest among the leaves of a refinement search
tree. Automorphisms found between equal leaves prune sibling branches that lie
in the same orbit of the pointwise stabiliser of the current prefix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import SmallGraph, emit_graph6


@dataclass(frozen=True)
class CanonicalForm:
    perm: tuple[int, ...]  # perm[v] = canonical label of input vertex v
    key: bytes

    @property
    def graph6(self) -> str:
        return self.key.decode("ascii")


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition until equitable.

    A vertex's signature is its neighbour count in every current cell; each
    cell splits into sub-cells ordered by signature. Cell order depends only on
    the structure, never on labels.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                sig = tuple([(row & m).bit_count() for m in masks])
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                for sig in sorted(groups):
                    out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def _code(adj: Sequence[int], order: Sequence[int]) -> int:
    """graph6 bit string of the relabelling ``order[i] -> i`` as an integer."""
    n = len(order)
    code = 0
    for j in range(1, n):
        row = adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


class _Search:
    __slots__ = ("adj", "n", "best_code", "best_order", "first_code", "first_order", "autos")

    def __init__(self, adj: Sequence[int]) -> None:
        self.adj = adj
        self.n = len(adj)
        self.best_code: int | None = None
        self.best_order: list[int] | None = None
        self.first_code: int | None = None
        self.first_order: list[int] | None = None
        self.autos: list[list[int]] = []

    def _leaf(self, order: list[int]) -> None:
        code = _code(self.adj, order)
        if self.first_code is None:
            self.first_code = code
            self.first_order = order
            self.best_code = code
            self.best_order = order
            return
        if code == self.first_code:
            self._record_auto(order, self.first_order)
        elif code == self.best_code:
            self._record_auto(order, self.best_order)
        elif code < self.best_code:
            self.best_code = code
            self.best_order = order

    def _record_auto(self, order: list[int], ref: list[int]) -> None:
        gamma = [0] * self.n
        for a, b in zip(order, ref):
            gamma[a] = b
        self.autos.append(gamma)

    def _orbit_roots(self, prefix: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.autos:
            if all(gamma[p] == p for p in prefix):
                for v in range(self.n):
                    a, b = find(v), find(gamma[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.n)]

    def run(self, cells: list[list[int]], prefix: list[int]) -> None:
        cells = _refine(self.adj, cells)
        if len(cells) == self.n:
            self._leaf([c[0] for c in cells])
            return
        ti = min(
            (i for i, c in enumerate(cells) if len(c) > 1),
            key=lambda i: (len(cells[i]), i),
        )
        target = cells[ti]
        explored: list[int] = []
        for v in sorted(target):
            if explored and self.autos:
                roots = self._orbit_roots(prefix)
                if any(roots[v] == roots[w] for w in explored):
                    continue
            rest = [w for w in target if w != v]
            child = cells[:ti] + [[v], rest] + cells[ti + 1 :]
            self.run(child, prefix + [v])
            explored.append(v)


def canonical_form(g: SmallGraph) -> CanonicalForm:
    n = g.n
    if n == 0:
        return CanonicalForm((), emit_graph6(g))
    search = _Search(g.adj)
    search.run([list(range(n))], [])
    order = search.best_order
    perm = [0] * n
    for i, v in enumerate(order):
        perm[v] = i
    return CanonicalForm(tuple(perm), emit_graph6(g.relabel(perm)))


def canonical_key(g: SmallGraph) -> bytes:
    return canonical_form(g).key


def are_isomorphic(g: SmallGraph, h: SmallGraph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_key(g) == canonical_key(h)


def find_deletion_isomorph(g: SmallGraph, targets: Sequence[SmallGraph]) -> int | None:
    """Smallest vertex ``u`` with ``g - u`` isomorphic to some target, else ``None``."""
    for t in targets:
        if t.n != g.n - 1:
            raise ValueError(f"target order {t.n} does not match |g|-1 = {g.n - 1}")
    keys = {canonical_key(t) for t in targets}
    for u in range(g.n):
        if canonical_key(g.delete_vertex(u)) in keys:
            return u
    return None
