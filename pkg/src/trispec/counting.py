"""Exact subgraph counters: triangles, cliques, books, odd cycles, friendship graphs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .graph import Graph, GraphError, _bits

PATH_SEARCH_MAX_VERTICES = 14


@dataclass(frozen=True)
class TriangleCensus:
    t: int
    per_edge: dict[tuple[int, int], int]
    triangular_edges: int

    @property
    def booksize(self) -> int:
        return max(self.per_edge.values(), default=0)

    @property
    def non_triangular_edges(self) -> int:
        return len(self.per_edge) - self.triangular_edges


@lru_cache(maxsize=1 << 16)
def triangle_census(g: Graph) -> TriangleCensus:
    rows = g.rows
    per_edge = {}
    for u, v in g.edges():
        per_edge[(u, v)] = (rows[u] & rows[v]).bit_count()
    total = sum(per_edge.values())
    return TriangleCensus(total // 3, per_edge, sum(1 for c in per_edge.values() if c))


def triangles(g: Graph) -> int:
    return triangle_census(g).t


def triangular_edges(g: Graph) -> int:
    return triangle_census(g).triangular_edges


def non_triangular_edges(g: Graph) -> int:
    return triangle_census(g).non_triangular_edges


def triangular_subgraph(g: Graph) -> Graph:
    c = triangle_census(g)
    return Graph.from_edges(g.n, (e for e, k in c.per_edge.items() if k))


def booksize(g: Graph) -> int:
    return triangle_census(g).booksize


def clique_count(g: Graph, p: int) -> int:
    if not 3 <= p <= g.n:
        raise ValueError(f"clique order p={p} outside [3, n={g.n}]")
    return _cliques(g, p)


def _cliques(g: Graph, p: int) -> int:
    rows = g.rows

    def rec(cand: int, need: int) -> int:
        if need == 0:
            return 1
        if cand.bit_count() < need:
            return 0
        total = 0
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            total += rec(cand & rows[v], need - 1)
        return total

    return rec((1 << g.n) - 1, p)


def cliques_or_zero(g: Graph, p: int) -> int:
    """k_p(G), with 0 when p exceeds n."""
    return 0 if p > g.n else _cliques(g, p)


def neighborhood_edge_sum(g: Graph) -> int:
    """Sum over v of e(G[N(v)]); equals 3 t(G)."""
    total = 0
    for v in range(g.n):
        nv = g.rows[v]
        total += sum((g.rows[w] & nv).bit_count() for w in _bits(nv)) // 2
    return total


# -- paths and odd cycles -----------------------------------------------


def _check_path_limit(g: Graph) -> None:
    if g.n > PATH_SEARCH_MAX_VERTICES:
        raise GraphError(f"path search limited to n <= {PATH_SEARCH_MAX_VERTICES}")


def _has_path_between(rows: tuple[int, ...], u: int, v: int, length: int) -> bool:
    """Simple path of exactly ``length`` edges from u to v."""

    def dfs(x: int, used: int, left: int) -> bool:
        if left == 1:
            return bool(rows[x] >> v & 1)
        cand = rows[x] & ~used & ~(1 << v)
        while cand:
            low = cand & -cand
            cand ^= low
            if dfs(low.bit_length() - 1, used | low, left - 1):
                return True
        return False

    return dfs(u, 1 << u | 1 << v, length)


def edges_on_odd_cycles(g: Graph, k: int) -> int:
    """Number of edges lying on some cycle of length exactly 2k+1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_path_limit(g)
    return sum(1 for u, v in g.edges() if _has_path_between(g.rows, u, v, 2 * k))


def is_odd_cycle_free(g: Graph, k: int) -> bool:
    """True iff g has no cycle of length exactly 2k+1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return triangles(g) == 0
    _check_path_limit(g)
    if 2 * k + 1 > g.n:
        return True
    return not any(_has_path_between(g.rows, u, v, 2 * k) for u, v in g.edges())


def is_path_free(g: Graph, length: int) -> bool:
    """True iff g has no path on ``length`` vertices."""
    if length < 1:
        raise ValueError("path length must be >= 1")
    _check_path_limit(g)
    if length > g.n:
        return True
    if length == 1:
        return g.n == 0
    rows = g.rows

    def dfs(x: int, used: int, left: int) -> bool:
        if left == 0:
            return True
        cand = rows[x] & ~used
        while cand:
            low = cand & -cand
            cand ^= low
            if dfs(low.bit_length() - 1, used | low, left - 1):
                return True
        return False

    return not any(dfs(s, 1 << s, length - 1) for s in range(g.n))


# -- matchings and friendship graphs ------------------------------------


def max_matching_size(rows: Sequence[int], vertices: int, cap: int | None = None) -> int:
    """Maximum matching in the subgraph induced by the bitmask ``vertices``.

    Exhaustive branch-and-bound; stops early once ``cap`` is reached.
    """
    memo: dict[int, int] = {}
    limit = cap if cap is not None else len(rows)

    def best(avail: int) -> int:
        if avail in memo:
            return memo[avail]
        # drop vertices with no neighbour left
        live = 0
        for v in _bits(avail):
            if rows[v] & avail:
                live |= 1 << v
        if not live:
            memo[avail] = 0
            return 0
        low = live & -live
        u = low.bit_length() - 1
        rest = live ^ low
        res = best(rest)
        if res < limit:
            for w in _bits(rows[u] & rest):
                res = max(res, 1 + best(rest & ~(1 << w)))
                if res >= limit:
                    break
        memo[avail] = res
        return res

    return best(vertices)


def contains_friendship(g: Graph, k: int) -> bool:
    """True iff some vertex has a k-matching in its neighbourhood (a copy of F_k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    for v in range(g.n):
        nv = g.rows[v]
        if nv.bit_count() < 2 * k:
            continue
        if max_matching_size(g.rows, nv, cap=k) >= k:
            return True
    return False


# -- inequalities used as hypotheses -------------------------------------


def kruskal_katona_holds(g: Graph) -> bool:
    """t(G') <= (sqrt 2 / 3) m'^{3/2} on the triangular-edge subgraph G', decided exactly."""
    c = triangle_census(g)
    return 9 * c.t * c.t <= 2 * c.triangular_edges**3


def intersection_lower_bound(sets: Sequence[set | frozenset]) -> int:
    """sum |A_i| - (k-1) |union A_i|, a lower bound on |intersection A_i|."""
    if not sets:
        raise ValueError("need at least one set")
    union = set().union(*sets)
    return sum(len(s) for s in sets) - (len(sets) - 1) * len(union)


def alon_shikhelman_bound(n: int, k: int) -> Fraction:
    """Upper bound 9 k^2 n on triangles of an F_k-free graph."""
    return Fraction(9 * k * k * n)
