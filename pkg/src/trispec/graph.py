"""Immutable simple graphs on at most 64 vertices, graph6 I/O and canonical labeling.

Adjacency is stored as one Python int per vertex (bit ``w`` of ``rows[v]`` is set
iff ``vw`` is an edge).  All surgery returns new graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_VERTICES = 64
GRAPH6_MAX_SHORT = 62
CANONICAL_MAX_VERTICES = 10


class GraphError(ValueError):
    """Invalid graph construction or surgery."""


class Graph6Error(ValueError):
    """Malformed graph6 input or unsupported size."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    m: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.rows) != self.n:
            raise GraphError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        total = 0
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for w in _bits(row):
                if not self.rows[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
            total += row.bit_count()
        object.__setattr__(self, "m", total // 2)

    # -- construction ---------------------------------------------------
    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {(u, v)} out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_adjacency(cls, matrix: Sequence[Sequence[int]]) -> Graph:
        n = len(matrix)
        for i in range(n):
            if len(matrix[i]) != n:
                raise GraphError("adjacency matrix must be square")
            if matrix[i][i]:
                raise GraphError(f"loop at vertex {i}")
            for j in range(i + 1, n):
                if bool(matrix[i][j]) != bool(matrix[j][i]):
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if matrix[i][j]]
        return cls.from_edges(n, edges)

    # -- queries -------------------------------------------------------
    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    def adjacency_matrix(self, dtype=float) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.rows[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(_bits(comp)))
        return comps

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for w in _bits(self.rows[v]):
                    if color[w] < 0:
                        color[w] = 1 - color[v]
                        stack.append(w)
                    elif color[w] == color[v]:
                        return False
        return True

    # -- surgery -------------------------------------------------------
    def add_edge(self, u: int, v: int) -> Graph:
        if u == v or self.has_edge(u, v):
            raise GraphError(f"cannot add edge {(u, v)}")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def delete_edge(self, u: int, v: int) -> Graph:
        if u == v or not self.has_edge(u, v):
            raise GraphError(f"edge {(u, v)} is absent")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def delete_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        g = self
        for u, v in edges:
            g = g.delete_edge(u, v)
        return g

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.rows)))

    def induced_subgraph(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced by ``vertices``, relabeled 0..k-1 in the given order."""
        vs = list(vertices)
        if len(set(vs)) != len(vs):
            raise GraphError("repeated vertex in induced_subgraph")
        pos = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            r = 0
            for w in _bits(self.rows[v]):
                if w in pos:
                    r |= 1 << pos[w]
            rows.append(r)
        return Graph(len(vs), tuple(rows))

    def permute(self, perm: Sequence[int]) -> Graph:
        """Relabel vertex ``v`` as ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("perm is not a permutation of the vertex set")
        rows = [0] * self.n
        for v, r in enumerate(self.rows):
            nr = 0
            for w in _bits(r):
                nr |= 1 << perm[w]
            rows[perm[v]] = nr
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={to_graph6(self)!r})" if self.n <= GRAPH6_MAX_SHORT else f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# graph6


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_SHORT:
        raise Graph6Error(f"n={g.n} needs the long size header; only n <= {GRAPH6_MAX_SHORT} is written")
    bits = []
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6Error("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error(f"character outside the graph6 range in {text!r}")
    if codes[0] < 63:
        n, body = codes[0], codes[1:]
    else:
        if len(codes) < 4 or codes[1] == 63:
            raise Graph6Error("unsupported or malformed long size header")
        n = codes[1] << 12 | codes[2] << 6 | codes[3]
        body = codes[4:]
        if n > MAX_VERTICES:
            raise Graph6Error(f"n={n} exceeds the {MAX_VERTICES}-vertex limit")
    nbits = n * (n - 1) // 2
    if len(body) != -(-nbits // 6):
        raise Graph6Error(f"expected {-(-nbits // 6)} data bytes for n={n}, got {len(body)}")
    bits = []
    for c in body:
        bits.extend((c >> s_) & 1 for s_ in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# canonical labeling


@dataclass(frozen=True, order=True)
class CanonicalForm:
    bytes: str

    def graph(self) -> Graph:
        return from_graph6(self.bytes)


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition; order-invariant under relabeling."""
    changed = True
    while changed:
        changed = False
        for w_idx in range(len(cells)):
            if w_idx >= len(cells):
                break
            wmask = 0
            for v in cells[w_idx]:
                wmask |= 1 << v
            new_cells = []
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((rows[v] & wmask).bit_count(), []).append(v)
                if len(groups) == 1:
                    new_cells.append(cell)
                else:
                    changed = True
                    new_cells.extend(groups[k] for k in sorted(groups))
            cells = new_cells
    return cells


def _leaf_key(rows: tuple[int, ...], order: list[int]) -> int:
    key = 0
    for j in range(1, len(order)):
        rj = rows[order[j]]
        for i in range(j):
            key = key << 1 | (rj >> order[i] & 1)
    return key


def _search(rows: tuple[int, ...], cells: list[list[int]], best: list) -> None:
    cells = _refine(rows, cells)
    target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
    if target is None:
        order = [c[0] for c in cells]
        key = _leaf_key(rows, order)
        if best[0] is None or key > best[0]:
            best[0], best[1] = key, order
        return
    cell = cells[target]
    tried: list[int] = []
    for v in cell:
        # swapping twins in one cell is an automorphism fixing the partition
        if any((rows[u] & ~(1 << v)) == (rows[v] & ~(1 << u)) for u in tried):
            continue
        tried.append(v)
        rest = [u for u in cell if u != v]
        _search(rows, cells[:target] + [[v], rest] + cells[target + 1 :], best)


@lru_cache(maxsize=1 << 18)
def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Permutation ``perm`` such that ``g.permute(perm)`` is the canonical representative."""
    if g.n > CANONICAL_MAX_VERTICES:
        raise GraphError(f"canonical labeling limited to n <= {CANONICAL_MAX_VERTICES}")
    if g.n == 0:
        return ()
    best: list = [None, None]
    _search(g.rows, [list(range(g.n))], best)
    perm = [0] * g.n
    for pos, v in enumerate(best[1]):
        perm[v] = pos
    return tuple(perm)


def canonical_graph(g: Graph) -> Graph:
    return g.permute(canonical_labeling(g))


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(to_graph6(canonical_graph(g)))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def brute_force_canonical(g: Graph) -> str:
    """Lexicographically largest graph6 over all n! relabelings (slow oracle, n <= 7)."""
    from itertools import permutations

    return max(to_graph6(g.permute(p)) for p in permutations(range(g.n)))


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, (pairs[i] for i in _bits(mask)))
