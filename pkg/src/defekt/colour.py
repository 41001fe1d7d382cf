"""Exact defective colouring: decision, chromatic number, enumeration, criticality.

A colouring is (m, k)-valid when every colour class induces a subgraph of
maximum degree at most k. Colours are numbered 1..m; 0 marks "unassigned".
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import SmallGraph, bits

ENUMERATION_LIMIT = 10**7


class UnassignedVertexError(ValueError):
    pass


class EnumerationTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class ColouringAssignment:
    colour: tuple[int, ...]
    defect: tuple[int, ...]

    @classmethod
    def from_colours(cls, g: SmallGraph, colour: tuple[int, ...] | list[int]) -> ColouringAssignment:
        colour = tuple(colour)
        defect = []
        for v in range(g.n):
            same = 0
            if colour[v]:
                for w in bits(g.adj[v]):
                    same += colour[w] == colour[v]
            defect.append(same)
        return cls(colour, tuple(defect))

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colour):
            out.setdefault(c, []).append(v)
        return dict(sorted(out.items()))

    def class_mask(self, c: int) -> int:
        return sum(1 << v for v, cv in enumerate(self.colour) if cv == c)


@dataclass(frozen=True)
class Z3Assignment:
    b: tuple[int, ...]  # each entry 1 or 2, read in the field of three elements

    def to_colouring(self, g: SmallGraph) -> ColouringAssignment:
        return ColouringAssignment.from_colours(g, self.b)


def validate_colouring(g: SmallGraph, c: ColouringAssignment | list[int] | tuple[int, ...], k: int) -> bool:
    colours = c.colour if isinstance(c, ColouringAssignment) else tuple(c)
    if len(colours) != g.n or any(x <= 0 for x in colours):
        raise UnassignedVertexError("every vertex must carry a colour >= 1")
    masks: dict[int, int] = {}
    for v, col in enumerate(colours):
        masks[col] = masks.get(col, 0) | 1 << v
    for v, col in enumerate(colours):
        if (g.adj[v] & masks[col]).bit_count() > k:
            return False
    return True


def _search_order(g: SmallGraph) -> list[int]:
    # descending degree, ties by label
    return sorted(range(g.n), key=lambda v: (-g.adj[v].bit_count(), v))


def is_mk_colourable(g: SmallGraph, m: int, k: int) -> ColouringAssignment | None:
    """Return an (m, k)-colouring of ``g`` or ``None`` if none exists."""
    if m < 1 or k < 0:
        raise ValueError("need m >= 1 and k >= 0")
    n = g.n
    if n == 0:
        return ColouringAssignment((), ())
    adj = g.adj
    order = _search_order(g)
    colour = [0] * n
    defect = [0] * n
    class_mask = [0] * (m + 1)

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        row = adj[v]
        for c in range(1, min(used + 1, m) + 1):
            same = row & class_mask[c]
            if same.bit_count() > k:
                continue
            ok = True
            for w in bits(same):
                if defect[w] >= k:
                    ok = False
                    break
            if not ok:
                continue
            colour[v] = c
            defect[v] = same.bit_count()
            for w in bits(same):
                defect[w] += 1
            class_mask[c] |= 1 << v
            if place(i + 1, max(used, c)):
                return True
            class_mask[c] &= ~(1 << v)
            for w in bits(same):
                defect[w] -= 1
            defect[v] = 0
            colour[v] = 0
        return False

    if place(0, 0):
        return ColouringAssignment(tuple(colour), tuple(defect))
    return None


def chi_k(g: SmallGraph, k: int) -> int:
    """k-defective chromatic number; 1 for the order-0 graph."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if g.max_degree <= k:
        return 1
    m = 2
    while is_mk_colourable(g, m, k) is None:
        m += 1
    return m


def enumerate_colourings(g: SmallGraph, m: int, k: int) -> list[ColouringAssignment]:
    """All labelled (m, k)-colourings; colour permutations count separately."""
    if m**g.n > ENUMERATION_LIMIT:
        raise EnumerationTooLarge(f"{m}^{g.n} assignments exceed {ENUMERATION_LIMIT}")
    n = g.n
    adj = g.adj
    colour = [0] * n
    class_mask = [0] * (m + 1)
    found: list[ColouringAssignment] = []

    def place(v: int) -> None:
        if v == n:
            found.append(ColouringAssignment.from_colours(g, colour))
            return
        for c in range(1, m + 1):
            same = adj[v] & class_mask[c]
            if same.bit_count() > k:
                continue
            mask_after = class_mask[c] | 1 << v
            if any((adj[w] & mask_after).bit_count() > k for w in bits(same)):
                continue
            colour[v] = c
            class_mask[c] = mask_after
            place(v + 1)
            class_mask[c] &= ~(1 << v)
        colour[v] = 0

    place(0)
    return found


# -- algebraic oracle over Z_3 -------------------------------------------------


def path_constraints(g: SmallGraph) -> list[tuple[int, int, int]]:
    """One ``(i, j, k)`` per unordered pair ``{i, k}`` of neighbours of a centre ``j``."""
    out = []
    for j in range(g.n):
        for i, k in combinations(list(bits(g.adj[j])), 2):
            out.append((i, j, k))
    return out


def _z3_holds(bi: int, bj: int, bk: int) -> bool:
    return (bi * bj + bj * bk + bk * bi) % 3 == 2


def z3_oracle(g: SmallGraph) -> Z3Assignment | None:
    """Solve b_j^2 = 1, b_i b_j + b_j b_k + b_k b_i = 2 over Z_3 for every 2-path.

    Depth-first over b in {1, 2}^n; whenever a constraint has two assigned
    variables, the value of the third is forced (or refuted) immediately.
    """
    n = g.n
    cons = path_constraints(g)
    by_var: list[list[int]] = [[] for _ in range(n)]
    for idx, (i, j, k) in enumerate(cons):
        by_var[i].append(idx)
        by_var[j].append(idx)
        by_var[k].append(idx)
    b = [0] * n

    def propagate(start: int, trail: list[int]) -> bool:
        queue = [start]
        while queue:
            x = queue.pop()
            for idx in by_var[x]:
                i, j, k = cons[idx]
                vals = (b[i], b[j], b[k])
                free = [v for v, val in zip((i, j, k), vals) if val == 0]
                if not free:
                    if not _z3_holds(*vals):
                        return False
                elif len(free) == 1:
                    f = free[0]
                    options = []
                    for cand in (1, 2):
                        b[f] = cand
                        if _z3_holds(b[i], b[j], b[k]):
                            options.append(cand)
                        b[f] = 0
                    if not options:
                        return False
                    if len(options) == 1:
                        b[f] = options[0]
                        trail.append(f)
                        queue.append(f)
        return True

    def undo(trail: list[int]) -> None:
        for v in trail:
            b[v] = 0

    def solve() -> bool:
        try:
            v = b.index(0)
        except ValueError:
            return True
        # b_v^2 = 1 leaves exactly the two non-zero residues
        for val in (1, 2):
            b[v] = val
            trail = [v]
            if propagate(v, trail) and solve():
                return True
            undo(trail)
        return False

    if solve():
        assert all(x * x % 3 == 1 for x in b)
        return Z3Assignment(tuple(b))
    return None


# -- criticality and bounds ----------------------------------------------------


def is_vertex_critical(g: SmallGraph, m: int, k: int) -> bool:
    if m < 2:
        raise ValueError("criticality needs m >= 2")
    if chi_k(g, k) != m:
        return False
    return all(chi_k(g.delete_vertex(u), k) < m for u in range(g.n))


def is_edge_critical(g: SmallGraph, m: int, k: int) -> bool:
    if m < 2:
        raise ValueError("criticality needs m >= 2")
    if chi_k(g, k) != m:
        return False
    return all(chi_k(g.remove_edge(u, v), k) < m for u, v in g.edges())


def lovasz_bound(g: SmallGraph | int, k: int) -> int:
    """``1 + floor(max_degree / (k + 1))``; accepts a graph or a bare maximum degree."""
    delta = g if isinstance(g, int) else g.max_degree
    return 1 + delta // (k + 1)
