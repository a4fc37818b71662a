"""Named graph families and the G(a,b,c) lower-bound minimization.

Vertex labels are deterministic: for bipartite-based constructions the
a-side is ``0..a-1`` and the b-side is ``a..a+b-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graph import Graph, GraphError


def complete(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_multipartite(sizes: list[int]) -> Graph:
    owner = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(owner)
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n) if owner[u] != owner[v]))


def turan_part_sizes(n: int, r: int) -> list[int]:
    return [n // r + (1 if i < n % r else 0) for i in range(r)]


def turan(n: int, r: int) -> Graph:
    if not 1 <= r <= n:
        raise GraphError(f"Turan graph needs 1 <= r <= n, got n={n}, r={r}")
    return complete_multipartite(turan_part_sizes(n, r))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0 or a + b < 1:
        raise GraphError(f"bad complete bipartite sizes {(a, b)}")
    return complete_multipartite([a, b])


def k_plus(a: int, b: int) -> Graph:
    """K_{a,b} with one extra edge {0, 1} inside the a-side."""
    if a < 2 or b < 0:
        raise GraphError(f"k_plus needs a >= 2, got {(a, b)}")
    return complete_bipartite(a, b).add_edge(0, 1)


def k_plus_bar(a: int, b: int) -> Graph:
    """k_plus(a, b) minus the cross edge {0, a}."""
    if a < 2 or b < 1:
        raise GraphError(f"k_plus_bar needs a >= 2 and b >= 1, got {(a, b)}")
    return k_plus(a, b).delete_edge(0, a)


def g_abc(a: int, b: int, c: int) -> Graph:
    """Clique A (size a); independent B, C; B complete to A and C."""
    if min(a, b, c) < 0 or a + b + c < 1:
        raise GraphError(f"bad G(a,b,c) parameters {(a, b, c)}")
    n = a + b + c
    A = range(a)
    B = range(a, a + b)
    C = range(a + b, n)
    edges = [(u, v) for u in A for v in A if u < v]
    edges += [(u, v) for u in B for v in list(A) + list(C)]
    return Graph.from_edges(n, edges)


def g_abc_edges(a: int, b: int, c: int) -> int:
    return comb(a, 2) + b * (a + c)


def g_lower_bound(n: int, m: int) -> tuple[int, tuple[int, int, int]]:
    """Exact min of m - bc over a+b+c = n with C(a,2) + b(a+c) >= m.

    Returns the value and the lexicographically first minimizing triple.
    """
    if not n * n // 4 < m <= comb(n, 2):
        raise ValueError(f"m={m} outside (floor(n^2/4), C(n,2)] for n={n}")
    best = None
    for a in range(n + 1):
        for b in range(n - a + 1):
            c = n - a - b
            if g_abc_edges(a, b, c) >= m:
                val = m - b * c
                if best is None or val < best[0]:
                    best = (val, (a, b, c))
    assert best is not None  # a = n is always feasible
    return best


def split(n: int, k: int) -> Graph:
    """Join of a k-clique with an independent set of size n - k."""
    if not 0 <= k <= n or n < 1:
        raise GraphError(f"bad split graph parameters {(n, k)}")
    return Graph.from_edges(n, ((u, v) for u in range(k) for v in range(u + 1, n)))


def friendship(k: int) -> Graph:
    if k < 1:
        raise GraphError("friendship graph needs k >= 1")
    edges = []
    for i in range(k):
        x, y = 2 * i + 1, 2 * i + 2
        edges += [(0, x), (0, y), (x, y)]
    return Graph.from_edges(2 * k + 1, edges)


def book(t: int) -> Graph:
    if t < 1:
        raise GraphError("book needs t >= 1")
    edges = [(0, 1)] + [(s, p) for p in range(2, t + 2) for s in (0, 1)]
    return Graph.from_edges(t + 2, edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    """Path on n vertices."""
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


_BUILDERS = {
    "turan": (turan, 2),
    "kplus": (k_plus, 2),
    "kplusbar": (k_plus_bar, 2),
    "gabc": (g_abc, 3),
    "split": (split, 2),
    "friendship": (friendship, 1),
    "book": (book, 1),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "kab": (complete_bipartite, 2),
    "complete": (complete, 1),
}
_ALIASES = {"complete_bipartite": "kab", "k_plus": "kplus", "k_plus_bar": "kplusbar", "g_abc": "gabc"}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in _BUILDERS:
            raise ValueError(f"unknown family {self.kind!r}; known: {sorted(_BUILDERS)}")
        arity = _BUILDERS[self.kind][1]
        if len(self.params) != arity:
            raise ValueError(f"family {self.kind!r} takes {arity} parameter(s), got {len(self.params)}")
        if any(p < 0 for p in self.params):
            raise ValueError("family parameters must be non-negative")

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse ``"kind:p1,p2,..."``, e.g. ``"turan:12,2"`` or ``"gabc:3,4,2"``."""
        kind, sep, rest = text.strip().partition(":")
        if not sep:
            raise ValueError(f"family spec {text!r} lacks ':'")
        kind = _ALIASES.get(kind.lower(), kind.lower())
        try:
            params = tuple(int(p) for p in rest.split(","))
        except ValueError:
            raise ValueError(f"non-integer parameter in {text!r}") from None
        return cls(kind, params)

    def build(self) -> Graph:
        return _BUILDERS[self.kind][0](*self.params)

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(map(str, self.params))}"


def family_kinds() -> list[str]:
    return sorted(_BUILDERS)
