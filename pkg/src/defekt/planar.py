"""Planarity, combinatorial embeddings and face arithmetic.

Two independent routes live here. ``is_planar`` is the fast decision used on
the enumeration hot path (networkx's left-right test behind cheap counting
filters). ``planar_embedding`` builds a rotation system with the
Demoucron-Malgrange-Pertuiset face-splitting algorithm, run per block and
spliced at cut vertices; faces are the orbits of the dart successor map.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass

import networkx as nx

from .graph import SmallGraph, bits, is_triangle_free, odd_girth


class EmbeddingError(RuntimeError):
    """Internal inconsistency in a computed embedding (a bug, not bad input)."""


class DisconnectedGraphError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class RotationSystem:
    rotation: tuple[tuple[int, ...], ...]  # rotation[v]: cyclic order of N(v)

    @property
    def n(self) -> int:
        return len(self.rotation)

    def successor(self, u: int, v: int) -> tuple[int, int]:
        """Next dart after ``(u, v)``: ``(v, w)`` with ``w`` following ``u`` around ``v``."""
        rot = self.rotation[v]
        return v, rot[(rot.index(u) + 1) % len(rot)]

    def faces(self) -> list[list[int]]:
        """Face boundary walks, each as the vertex sequence of its darts' tails."""
        nxt: dict[tuple[int, int], tuple[int, int]] = {}
        for v, rot in enumerate(self.rotation):
            d = len(rot)
            for i, u in enumerate(rot):
                nxt[(u, v)] = (v, rot[(i + 1) % d])
        seen: set[tuple[int, int]] = set()
        out = []
        for dart in sorted(nxt):
            if dart in seen:
                continue
            walk = []
            d = dart
            while d not in seen:
                seen.add(d)
                walk.append(d[0])
                d = nxt[d]
            out.append(walk)
        return out


@dataclass(frozen=True)
class FaceProfile:
    lengths: tuple[int, ...]  # sorted
    f4: int
    f5: int

    @property
    def num_faces(self) -> int:
        return len(self.lengths)


# -- decision ----------------------------------------------------------------


def _nx_graph(g: SmallGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def is_planar(g: SmallGraph) -> bool:
    n, e = g.n, g.num_edges
    if n >= 3 and e > 3 * n - 6:
        return False
    if n >= 3 and e > 2 * n - 4 and is_triangle_free(g):
        return False
    degs = g.degrees()
    # a Kuratowski subdivision needs five branch vertices of degree >= 4
    # or six of degree >= 3
    if sum(d >= 3 for d in degs) < 6 and sum(d >= 4 for d in degs) < 5:
        return True
    return nx.check_planarity(_nx_graph(g))[0]


# -- embedding ---------------------------------------------------------------


def _blocks(g: SmallGraph, mask: int) -> list[list[tuple[int, int]]]:
    """Edge sets of the biconnected components of ``g[mask]`` (Hopcroft-Tarjan)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    stack: list[tuple[int, int]] = []
    blocks: list[list[tuple[int, int]]] = []
    counter = 0
    for root in bits(mask):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        it = [(root, -1, iter(list(bits(g.adj[root] & mask))))]
        while it:
            v, parent, children = it[-1]
            advanced = False
            for w in children:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((v, w))
                    it.append((w, v, iter(list(bits(g.adj[w] & mask)))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            it.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    block = []
                    while True:
                        edge = stack.pop()
                        block.append(edge)
                        if edge == (parent, v):
                            break
                    blocks.append(block)
    return blocks


def _find_cycle(adj: dict[int, set[int]]) -> list[int]:
    u = min(adj)
    v = min(adj[u])
    # shortest v -> u path avoiding edge (u, v); exists inside a block
    prev = {v: None}
    q = deque([v])
    while q:
        x = q.popleft()
        if x == u:
            break
        for y in sorted(adj[x]):
            if (x, y) in ((v, u),) or y in prev:
                continue
            prev[y] = x
            q.append(y)
    walk = []
    x: int | None = u
    while x is not None:
        walk.append(x)
        x = prev[x]
    return walk  # u ... v, closed by the edge (v, u)


def _dmp_block(edges: list[tuple[int, int]]) -> list[list[int]] | None:
    """Faces of a planar embedding of one biconnected block, or ``None``."""
    adj: dict[int, set[int]] = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    cyc = _find_cycle(adj)
    faces = [cyc, cyc[::-1]]
    in_h = set(cyc)
    h_edges = {frozenset((cyc[i], cyc[(i + 1) % len(cyc)])) for i in range(len(cyc))}
    total = len(edges)
    while len(h_edges) < total:
        fragments: list[tuple[set[int], list[int] | None, set[int]]] = []
        for a, b in edges:
            e = frozenset((a, b))
            if e not in h_edges and a in in_h and b in in_h:
                fragments.append(({a, b}, [a, b], set()))
        seen: set[int] = set()
        for s in sorted(adj):
            if s in in_h or s in seen:
                continue
            comp = {s}
            q = deque([s])
            while q:
                x = q.popleft()
                for y in adj[x]:
                    if y not in in_h and y not in comp:
                        comp.add(y)
                        q.append(y)
            seen |= comp
            attach = {y for x in comp for y in adj[x] if y in in_h}
            fragments.append((attach, None, comp))
        choice = None
        for attach, p, comp in fragments:
            admissible = [f for f in faces if attach <= set(f)]
            if not admissible:
                return None
            if choice is None or len(admissible) == 1 and len(choice[3]) > 1:
                choice = (attach, p, comp, admissible)
            if len(admissible) == 1:
                break
        attach, p, comp, admissible = choice
        face = admissible[0]
        if p is None:
            p = _fragment_path(adj, attach, comp)
        a, b = p[0], p[-1]
        ia, ib = face.index(a), face.index(b)
        k = len(face)
        a_to_b = [face[(ia + t) % k] for t in range((ib - ia) % k + 1)]
        b_to_a = [face[(ib + t) % k] for t in range((ia - ib) % k + 1)]
        interior = p[1:-1]
        f1 = a_to_b + interior[::-1]
        f2 = b_to_a + interior
        faces.remove(face)
        faces.extend([f1, f2])
        in_h.update(interior)
        for i in range(len(p) - 1):
            h_edges.add(frozenset((p[i], p[i + 1])))
    return faces


def _fragment_path(adj: dict[int, set[int]], attach: set[int], comp: set[int]) -> list[int]:
    a = min(attach)
    start = min(y for y in adj[a] if y in comp)
    prev = {start: None}
    q = deque([start])
    end = None
    while q:
        x = q.popleft()
        if any(y in attach and y != a for y in adj[x]):
            end = x
            break
        for y in sorted(adj[x]):
            if y in comp and y not in prev:
                prev[y] = x
                q.append(y)
    if end is None:
        raise EmbeddingError("fragment has fewer than two attachments")
    b = min(y for y in adj[end] if y in attach and y != a)
    inner = []
    x: int | None = end
    while x is not None:
        inner.append(x)
        x = prev[x]
    return [a] + inner[::-1] + [b]


def _rotations_from_faces(faces: list[list[int]]) -> dict[int, list[int]]:
    follow: dict[int, dict[int, int]] = {}
    for f in faces:
        k = len(f)
        for i in range(k):
            prv, v, nxt = f[i - 1], f[i], f[(i + 1) % k]
            follow.setdefault(v, {})[prv] = nxt
    rot = {}
    for v, m in follow.items():
        start = min(m)
        order = [start]
        x = m[start]
        while x != start:
            order.append(x)
            x = m[x]
        if len(order) != len(m):
            raise EmbeddingError(f"rotation at vertex {v} is not a single cycle")
        rot[v] = order
    return rot


def planar_embedding(g: SmallGraph) -> RotationSystem | None:
    """Rotation system of a planar embedding of connected ``g``; ``None`` if nonplanar."""
    if not g.is_connected():
        raise DisconnectedGraphError("embed each connected component separately")
    rotation: list[list[int]] = [[] for _ in range(g.n)]
    for block in _blocks(g, g.full_mask):
        if len(block) == 1:
            a, b = block[0]
            rotation[a].append(b)
            rotation[b].append(a)
            continue
        faces = _dmp_block(block)
        if faces is None:
            return None
        for v, order in _rotations_from_faces(faces).items():
            rotation[v].extend(order)
    emb = RotationSystem(tuple(tuple(r) for r in rotation))
    _check_euler(g, emb)
    return emb


def _check_euler(g: SmallGraph, emb: RotationSystem) -> None:
    for v in range(g.n):
        if sorted(emb.rotation[v]) != g.neighbours(v):
            raise EmbeddingError(f"rotation at {v} is not a permutation of its neighbours")
    faces = emb.faces() if g.num_edges else [[0]] if g.n else []
    n, e = g.n, g.num_edges
    if g.n and n - e + len(faces) != 2:
        raise EmbeddingError(f"Euler check failed: n={n} e={e} faces={len(faces)}")
    if sum(len(f) for f in faces if g.num_edges) != 2 * e:
        raise EmbeddingError("face lengths do not sum to twice the edge count")


def face_profile(emb: RotationSystem) -> FaceProfile:
    lengths = tuple(sorted(len(f) for f in emb.faces()))
    c = Counter(lengths)
    return FaceProfile(lengths, c[4], c[5])


# -- maximality and the edge/face audit ------------------------------------------


def is_maximal_tfp(g: SmallGraph) -> bool:
    """True iff no edge can be added without a triangle or a crossing."""
    if not is_triangle_free(g) or not is_planar(g):
        raise PreconditionError("graph must be triangle-free and planar")
    if g.n >= 3 and g.num_edges == 2 * g.n - 4:
        return True  # one more triangle-free edge would break the planar edge bound
    adj = g.adj
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if adj[x] >> y & 1 or adj[x] & adj[y]:
                continue
            if is_planar(g.add_edge(x, y)):
                return False
    return True


@dataclass(frozen=True)
class Lemma3Audit:
    n: int
    edges: int
    f4: int
    f5: int
    lengths: tuple[int, ...]
    formula_holds: bool


def lemma3_audit(g: SmallGraph) -> Lemma3Audit:
    """Check edges == 2n - 4 - f5/2 with f5 even and >= 2 on an embedding of ``g``."""
    if not g.is_connected():
        raise DisconnectedGraphError("audit needs a connected graph")
    if odd_girth(g) is None:
        raise PreconditionError("audit needs a graph with an odd cycle")
    if not is_maximal_tfp(g):
        raise PreconditionError("audit needs a maximal triangle-free planar graph")
    emb = planar_embedding(g)
    prof = face_profile(emb)
    n, e = g.n, g.num_edges
    ok = (
        set(prof.lengths) <= {4, 5}
        and prof.f5 % 2 == 0
        and prof.f5 >= 2
        and 2 * e == 4 * n - 8 - prof.f5
    )
    return Lemma3Audit(n, e, prof.f4, prof.f5, prof.lengths, ok)


def mtfp_edges_from_f5(n: int, f5: int) -> int:
    """Edge count forced by Euler plus face-length counting when faces have length 4 or 5."""
    if f5 % 2:
        raise ValueError("f5 must be even")
    return 2 * n - 4 - f5 // 2
