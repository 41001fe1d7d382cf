"""Small simple graphs stored as per-vertex neighbour bitmasks.

Every other module passes :class:`SmallGraph` values around. Vertex ``v`` is
bit ``1 << v``; a graph of order ``n`` keeps ``n`` row masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 32


class GraphError(ValueError):
    """Base class for graph construction and format errors."""


class VertexRangeError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class MissingEdgeError(GraphError):
    pass


class Graph6Error(GraphError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SmallGraph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise VertexRangeError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("need exactly one adjacency row per vertex")

    # -- constructors -------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> SmallGraph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SmallGraph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    # -- basic queries ------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbours(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((row.bit_count() for row in self.adj), default=0)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_valid(self) -> bool:
        """Check symmetry, irreflexivity and that no bit beyond ``n`` is set."""
        full = self.full_mask
        for u, row in enumerate(self.adj):
            if row & ~full or row >> u & 1:
                return False
            for v in bits(row):
                if not self.adj[v] >> u & 1:
                    return False
        return True

    def components(self) -> list[int]:
        """Vertex masks of the connected components, ordered by lowest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # -- mutations (all return new graphs) ----------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexRangeError(f"vertex {v} out of range for n={self.n}")

    def add_edge(self, u: int, v: int) -> SmallGraph:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if self.has_edge(u, v):
            raise DuplicateEdgeError(f"edge ({u},{v}) already present")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return SmallGraph(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> SmallGraph:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v or not self.has_edge(u, v):
            raise MissingEdgeError(f"edge ({u},{v}) not present")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return SmallGraph(self.n, tuple(adj))

    def delete_vertex(self, v: int) -> SmallGraph:
        """Remove ``v``; vertices above it shift down by one."""
        self._check_vertex(v)
        low = (1 << v) - 1
        rows = []
        for u, row in enumerate(self.adj):
            if u != v:
                rows.append((row & low) | (row >> (v + 1) << v))
        return SmallGraph(self.n - 1, tuple(rows))

    def add_vertex(self, neighbourhood: int = 0) -> SmallGraph:
        """Append vertex ``n`` adjacent to the vertices in ``neighbourhood``."""
        if neighbourhood & ~self.full_mask:
            raise VertexRangeError("neighbourhood mask exceeds graph order")
        if self.n >= MAX_ORDER:
            raise VertexRangeError(f"cannot exceed order {MAX_ORDER}")
        new = 1 << self.n
        adj = [row | new if neighbourhood >> u & 1 else row for u, row in enumerate(self.adj)]
        adj.append(neighbourhood)
        return SmallGraph(self.n + 1, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> SmallGraph:
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self.n
        for u, row in enumerate(self.adj):
            r = 0
            for v in bits(row):
                r |= 1 << perm[v]
            adj[perm[u]] = r
        return SmallGraph(self.n, tuple(adj))

    def disjoint_union(self, other: SmallGraph) -> SmallGraph:
        shift = self.n
        rows = list(self.adj) + [row << shift for row in other.adj]
        return SmallGraph(self.n + other.n, tuple(rows))

    def __str__(self) -> str:
        return emit_graph6(self).decode("ascii")


# -- structural predicates ---------------------------------------------------


def is_triangle_free(g: SmallGraph) -> bool:
    adj = g.adj
    for u in range(g.n):
        row = adj[u] >> (u + 1)
        v = u + 1
        while row:
            if row & 1 and adj[u] & adj[v]:
                return False
            row >>= 1
            v += 1
    return True


def odd_girth(g: SmallGraph) -> int | None:
    """Length of a shortest odd cycle, or ``None`` for bipartite graphs.

    A BFS from ``s`` that meets an edge inside one layer ``d`` closes an odd
    closed walk of length ``2d + 1`` through ``s``; the minimum over all roots
    is the odd girth.
    """
    best = None
    for s in range(g.n):
        dist = {s: 0}
        layer = [s]
        d = 0
        while layer and (best is None or 2 * d + 1 < best):
            layer_mask = 0
            for v in layer:
                layer_mask |= 1 << v
            if any(g.adj[v] & layer_mask for v in layer):
                best = 2 * d + 1
                break
            nxt = []
            for v in layer:
                for w in bits(g.adj[v]):
                    if w not in dist:
                        dist[w] = d + 1
                        nxt.append(w)
            layer = nxt
            d += 1
    return best


def induced_subgraph(g: SmallGraph, s: int | Iterable[int]) -> SmallGraph:
    """Subgraph induced on ``s`` (mask or iterable), relabelled in increasing order."""
    mask = s if isinstance(s, int) else sum(1 << v for v in set(s))
    if mask & ~g.full_mask:
        raise VertexRangeError("vertex set exceeds graph order")
    keep = list(bits(mask))
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        r = 0
        for w in bits(g.adj[v] & mask):
            r |= 1 << pos[w]
        rows.append(r)
    return SmallGraph(len(keep), tuple(rows))


def complete_bipartite(a: int, b: int) -> SmallGraph:
    if a < 1 or b < 1 or a + b > MAX_ORDER:
        raise VertexRangeError(f"K_{{{a},{b}}} outside supported range")
    part_a = (1 << a) - 1
    part_b = ((1 << b) - 1) << a
    return SmallGraph(a + b, tuple([part_b] * a + [part_a] * b))


def cycle(n: int) -> SmallGraph:
    return SmallGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> SmallGraph:
    return SmallGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> SmallGraph:
    full = (1 << n) - 1
    return SmallGraph(n, tuple(full & ~(1 << v) for v in range(n)))


# -- graph6 --------------------------------------------------------------------


def emit_graph6(g: SmallGraph) -> bytes:
    n = g.n
    out = bytearray([n + 63])
    acc = nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def parse_graph6(data: bytes | str) -> SmallGraph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise Graph6Error("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise Graph6Error("byte outside printable graph6 range 63..126")
    n = data[0] - 63
    if n == 63:
        raise Graph6Error("long-form graph6 (n > 62) is not supported")
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    body = data[1:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("padding bits set beyond the adjacency triangle")
    return SmallGraph(n, tuple(adj))


def g6(g: SmallGraph) -> str:
    return emit_graph6(g).decode("ascii")


def read_graph6_lines(lines: Iterable[str | bytes]) -> Iterator[tuple[int, SmallGraph]]:
    """Parse graph6 lines, yielding ``(line_number, graph)``; blank lines are skipped."""
    for lineno, line in enumerate(lines, 1):
        if isinstance(line, bytes):
            line = line.decode("ascii", errors="replace")
        line = line.strip()
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from exc


# -- edge list and DOT -----------------------------------------------------------


def to_edge_list(g: SmallGraph) -> str:
    es = g.edges()
    lines = [f"{g.n} {len(es)}"] + [f"{u} {v}" for u, v in es]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> SmallGraph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list needs an 'n m' header line")
    n, m = int(rows[0][0]), int(rows[0][1])
    pairs = [(int(a), int(b)) for a, b in rows[1:]]
    if len(pairs) != m:
        raise GraphError(f"header promises {m} edges, found {len(pairs)}")
    g = SmallGraph.empty(n)
    for u, v in pairs:
        g = g.add_edge(u, v)
    return g


def to_dot(g: SmallGraph, labels: dict[int, str] | None = None, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    for v in range(g.n):
        label = labels.get(v, str(v)) if labels else str(v)
        out.append(f'  {v} [label="{label}"];')
    for u, v in g.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
