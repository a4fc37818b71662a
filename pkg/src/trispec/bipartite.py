"""Distance to bipartiteness: exact minimum over all cuts, plus a local-search heuristic."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import QuadSurd
from .graph import Graph, GraphError, _bits

EXACT_MAX_VERTICES = 24


@dataclass(frozen=True)
class Cut:
    n: int
    side_S: int
    class_edges: int
    cross_edges: int

    @property
    def side_T(self) -> int:
        return ((1 << self.n) - 1) ^ self.side_S

    @property
    def sizes(self) -> tuple[int, int]:
        s = self.side_S.bit_count()
        return s, self.n - s

    def S(self) -> list[int]:
        return list(_bits(self.side_S))

    def T(self) -> list[int]:
        return list(_bits(self.side_T))


def cut_of(g: Graph, side_S: int) -> Cut:
    full = (1 << g.n) - 1
    if side_S & ~full:
        raise GraphError("cut side references a vertex >= n")
    cross = sum((g.rows[v] & ~side_S & full).bit_count() for v in _bits(side_S))
    return Cut(g.n, side_S, g.m - cross, cross)


def class_edge_list(g: Graph, cut: Cut) -> list[tuple[int, int]]:
    """Edges with both ends on the same side."""
    return [(u, v) for u, v in g.edges() if (cut.side_S >> u & 1) == (cut.side_S >> v & 1)]


def cut_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Every cut with vertex 0 in S: (side_S masks ascending, class-edge counts)."""
    if g.n > EXACT_MAX_VERTICES:
        raise GraphError(f"exact cut scan limited to n <= {EXACT_MAX_VERTICES}")
    if g.n == 0:
        return np.zeros(1, dtype=np.uint32), np.zeros(1, dtype=np.int64)
    adj = [np.uint32(r) for r in g.rows]
    deg = g.degrees()
    masks = np.array([1], dtype=np.uint32)
    # val = 2 e(S) - sum_{v in S} d(v); class edges = m + val
    val = np.array([-deg[0]], dtype=np.int32)
    for v in range(1, g.n):
        inside = np.bitwise_count(masks & adj[v]).astype(np.int32)
        masks = np.concatenate([masks, masks | np.uint32(1 << v)])
        val = np.concatenate([val, val + 2 * inside - deg[v]])
    return masks, val.astype(np.int64) + g.m


def bipartite_distance_exact(g: Graph) -> tuple[int, Cut]:
    """m - maxcut(g) with an optimal cut (smallest side_S on ties)."""
    masks, cls = cut_arrays(g)
    i = int(np.argmin(cls))
    best = int(cls[i])
    side = int(masks[i]) if g.n else 0
    return best, Cut(g.n, side, best, g.m - best)


def _bfs_order(g: Graph) -> list[int]:
    order: list[int] = []
    seen = 0
    for s in range(g.n):
        if seen >> s & 1:
            continue
        seen |= 1 << s
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in _bits(g.rows[v] & ~seen):
                seen |= 1 << w
                queue.append(w)
    return order


def max_cut_heuristic(g: Graph) -> Cut:
    """Greedy placement in BFS order, then single-vertex moves until no move helps.

    BFS order makes the greedy pass a proper 2-colouring on bipartite graphs.
    """
    side = 0
    placed = 0
    for v in _bfs_order(g):
        nb = g.rows[v] & placed
        # join the side holding fewer placed neighbours (ties go to T)
        in_s = (nb & side).bit_count()
        in_t = (nb & ~side).bit_count()
        if in_t > in_s:
            side |= 1 << v
        placed |= 1 << v
    full = (1 << g.n) - 1
    improved = True
    while improved:
        improved = False
        for v in range(g.n):
            same = side if side >> v & 1 else full ^ side
            d_same = (g.rows[v] & same).bit_count()
            d_other = g.rows[v].bit_count() - d_same
            if d_same > d_other:
                side ^= 1 << v
                improved = True
    return cut_of(g, side)


@dataclass(frozen=True)
class HeuristicDistance:
    value: int
    cut: Cut
    grade: str = "heuristic"


def bipartite_distance_lower(g: Graph) -> HeuristicDistance:
    """Distance implied by the heuristic cut.

    The heuristic cut is a lower bound on the max cut, so ``value`` is an
    upper bound on the true distance; it is graded "heuristic".
    """
    cut = max_cut_heuristic(g)
    return HeuristicDistance(cut.class_edges, cut)


def is_t_far(g: Graph, t) -> bool:
    """True iff at least t edges must be deleted to make g bipartite."""
    if isinstance(t, float):
        t = Fraction(t)
    t = QuadSurd.coerce(t)
    if t.sign() <= 0:
        raise ValueError("t must be positive")
    d, _ = bipartite_distance_exact(g)
    return QuadSurd(d) >= t
