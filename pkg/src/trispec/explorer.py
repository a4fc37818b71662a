"""Exhaustive enumeration up to isomorphism, statement scans and minimizer search."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from . import counting
from .families import g_abc, g_lower_bound
from .graph import Graph, GraphError, all_labeled_graphs, brute_force_canonical, canonical_form, from_graph6, to_graph6
from .spectral import DEFAULT_TOL
from .verdicts import CONJECTURES, STATEMENTS, Outcome, Verdict, run_check

ENUM_MAX_VERTICES = 8
EDGE_STRATEGY_MAX = 7
LABELED_STRATEGY_MAX = 5
KNOWN_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


# ---------------------------------------------------------------------------
# enumeration


def _check_n(n: int, limit: int) -> None:
    if not 0 <= n <= limit:
        raise GraphError(f"enumeration limited to 0 <= n <= {limit}, got {n}")


@lru_cache(maxsize=None)
def _vertex_classes(n: int) -> tuple[str, ...]:
    """Canonical graph6 strings, grown one vertex at a time."""
    if n == 0:
        return (to_graph6(Graph.empty(0)),)
    seen = set()
    for code in _vertex_classes(n - 1):
        base = from_graph6(code)
        for nbrs in range(1 << (n - 1)):
            rows = list(base.rows) + [nbrs]
            for w in range(n - 1):
                if nbrs >> w & 1:
                    rows[w] |= 1 << (n - 1)
            seen.add(canonical_form(Graph(n, tuple(rows))).bytes)
    return tuple(sorted(seen))


@lru_cache(maxsize=None)
def _edge_classes(n: int) -> tuple[str, ...]:
    """Canonical graph6 strings, grown one edge at a time from the empty graph."""
    level = {canonical_form(Graph.empty(n)).bytes}
    out = set(level)
    while level:
        nxt = set()
        for code in level:
            g = from_graph6(code)
            for u in range(n):
                for v in range(u + 1, n):
                    if not g.has_edge(u, v):
                        nxt.add(canonical_form(g.add_edge(u, v)).bytes)
        out |= nxt
        level = nxt
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _labeled_classes(n: int) -> tuple[str, ...]:
    """All labeled graphs deduplicated by brute-force permutation (slow oracle)."""
    reps = {brute_force_canonical(g) for g in all_labeled_graphs(n)}
    # re-express each class by the fast canonical form so sets are comparable
    return tuple(sorted({canonical_form(from_graph6(r)).bytes for r in reps}))


def enumerate_classes(n: int, strategy: str = "vertex") -> tuple[str, ...]:
    if strategy == "vertex":
        _check_n(n, ENUM_MAX_VERTICES)
        return _vertex_classes(n)
    if strategy == "edge":
        _check_n(n, EDGE_STRATEGY_MAX)
        return _edge_classes(n)
    if strategy == "labeled":
        _check_n(n, LABELED_STRATEGY_MAX)
        return _labeled_classes(n)
    raise ValueError(f"unknown strategy {strategy!r}")


def enumerate_graphs(n: int, strategy: str = "vertex") -> Iterator[Graph]:
    """Each isomorphism class on n vertices exactly once, as its canonical representative."""
    for code in enumerate_classes(n, strategy):
        yield from_graph6(code)


def self_check(n: int) -> dict:
    """Counts from every applicable strategy and whether they agree with each other."""
    counts = {"vertex": len(enumerate_classes(n, "vertex"))}
    sets = {"vertex": set(enumerate_classes(n, "vertex"))}
    if n <= EDGE_STRATEGY_MAX:
        sets["edge"] = set(enumerate_classes(n, "edge"))
        counts["edge"] = len(sets["edge"])
    if n <= LABELED_STRATEGY_MAX:
        sets["labeled"] = set(enumerate_classes(n, "labeled"))
        counts["labeled"] = len(sets["labeled"])
    agree = all(s == sets["vertex"] for s in sets.values())
    return {"n": n, "counts": counts, "agree": agree, "known": KNOWN_COUNTS.get(n)}


# ---------------------------------------------------------------------------
# reports


@dataclass
class ScanReport:
    statement_id: str
    n_min: int
    n_max: int
    params: dict = field(default_factory=dict)
    graphs_scanned: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    unresolved: list = field(default_factory=list)
    extremal_set: list = field(default_factory=list)
    findings: bool = False
    details: list = field(default_factory=list)
    extras: dict = field(default_factory=dict)

    @property
    def total_scanned(self) -> int:
        return sum(self.graphs_scanned.values())

    def exit_code(self) -> int:
        if self.violations:
            return 1
        if self.unresolved:
            return 2
        return 0

    def to_dict(self) -> dict:
        return {
            "statement_id": self.statement_id,
            "n_range": [self.n_min, self.n_max],
            "params": {k: str(v) for k, v in sorted(self.params.items())},
            "graphs_scanned": {str(k): v for k, v in sorted(self.graphs_scanned.items())},
            "counts": dict(sorted(self.counts.items())),
            "violations": self.violations,
            "unresolved": self.unresolved,
            "extremal_set": self.extremal_set,
            "findings": self.findings,
            "details": self.details,
            "extras": self.extras,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["statement_id", "kind", "graph6"])
        for kind, items in (("violation", self.violations), ("unresolved", self.unresolved), ("extremal", self.extremal_set)):
            for code in items:
                w.writerow([self.statement_id, kind, code])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [
            f"statement: {self.statement_id}  n={self.n_min}..{self.n_max}  params={self.params or {}}",
            f"graphs scanned: {self.total_scanned} {dict(sorted(self.graphs_scanned.items()))}",
            f"outcomes: {dict(sorted(self.counts.items()))}",
            f"violations: {len(self.violations)}  unresolved: {len(self.unresolved)}  extremal: {len(self.extremal_set)}",
        ]
        if self.findings:
            lines.append("grade: findings (hypothesis not promised at this scale)")
        lines += [f"  violated: {c}" for c in self.violations]
        lines += [f"  unresolved: {c}" for c in self.unresolved]
        return "\n".join(lines)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        return self.to_text()


# ---------------------------------------------------------------------------
# pre-filters: cheap certificates that a graph is NotApplicable


def prefilter_skips(statement_id: str, g: Graph) -> bool:
    """True only when the checker is guaranteed to return NotApplicable."""
    n, m = g.n, g.m
    if statement_id in ("efr", "erdos_rademacher"):
        return m <= n * n // 4
    if statement_id == "book_conjecture":
        return 4 * m <= n * n
    if statement_id in ("spectral_efr", "ning_zhai", "structure_theorem"):
        # lambda <= max degree < sqrt(floor(n^2/4)) rules out the spectral hypothesis
        dmax = max(g.degrees(), default=0)
        return n >= 2 and dmax * dmax < n * n // 4
    return False


def _check_codes(args) -> list[tuple[str, dict, bool]]:
    statement_id, params, tol, codes = args
    out = []
    for code in codes:
        g = from_graph6(code)
        if prefilter_skips(statement_id, g):
            out.append((code, {"outcome": Outcome.NOT_APPLICABLE.value}, False))
            continue
        v = run_check(statement_id, g, params, tol)
        out.append((code, v.to_dict(), v.equality))
    return out


def _shards(codes: Sequence[str]) -> list[list[str]]:
    """Group by the first adjacency row; shard order is deterministic."""
    groups: dict[int, list[str]] = {}
    for code in codes:
        groups.setdefault(from_graph6(code).rows[0] if len(code) > 1 else 0, []).append(code)
    return [groups[k] for k in sorted(groups)]


def _run(statement_id: str, params: dict, tol: float, shards: list[list[str]], workers: int) -> list[tuple[str, dict, bool]]:
    jobs = [(statement_id, params, tol, s) for s in shards]
    if workers <= 1 or len(jobs) <= 1:
        results = [r for j in jobs for r in _check_codes(j)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = [r for chunk in ex.map(_check_codes, jobs) for r in chunk]
    return sorted(results, key=lambda r: (len(r[0]), r[0]))


def _collect(report: ScanReport, results: list[tuple[str, dict, bool]]) -> None:
    extremal = set(report.extremal_set)
    for code, vd, eq in results:
        out = vd["outcome"]
        report.counts[out] = report.counts.get(out, 0) + 1
        if out == Outcome.VIOLATED.value:
            report.violations.append(code)
            report.details.append(vd)
        elif out == Outcome.UNRESOLVED.value:
            report.unresolved.append(code)
            report.details.append(vd)
        if eq and out != Outcome.VIOLATED.value:
            extremal.add(code)
    report.extremal_set = sorted(extremal, key=lambda c: (len(c), c))


def parse_n_range(text: str) -> tuple[int, int]:
    """'3..7', '3-7' or '5'."""
    for sep in ("..", "-", ":"):
        if sep in text:
            a, b = text.split(sep, 1)
            return int(a), int(b)
    return int(text), int(text)


def scan(
    statement_id: str,
    n_range: tuple[int, int] | Iterable[int],
    params: dict | None = None,
    workers: int = 1,
    tol: float = DEFAULT_TOL,
) -> ScanReport:
    """Run one checker over every isomorphism class with n in the given range."""
    if statement_id not in STATEMENTS:
        raise ValueError(f"unknown statement {statement_id!r}")
    ns = list(range(n_range[0], n_range[1] + 1)) if isinstance(n_range, tuple) else sorted(n_range)
    params = dict(params or {})
    report = ScanReport(statement_id, min(ns), max(ns), params, findings=STATEMENTS[statement_id].findings)
    for n in ns:
        codes = enumerate_classes(n)
        report.graphs_scanned[n] = len(codes)
        _collect(report, _run(statement_id, params, tol, _shards(codes), workers))
    report.extras["enumeration_self_check"] = {
        str(n): KNOWN_COUNTS.get(n) == report.graphs_scanned[n] for n in ns if n in KNOWN_COUNTS
    }
    return report


def scan_graphs(
    statement_id: str, graphs: Iterable[Graph], params: dict | None = None, tol: float = DEFAULT_TOL
) -> ScanReport:
    """Run one checker on explicit (labeled) graphs, e.g. witnesses read from a file."""
    gs = list(graphs)
    params = dict(params or {})
    ns = [g.n for g in gs] or [0]
    report = ScanReport(statement_id, min(ns), max(ns), params, findings=STATEMENTS[statement_id].findings)
    results = []
    for g in gs:
        v = run_check(statement_id, g, params, tol)
        results.append((v.instance, v.to_dict(), v.equality))
        report.graphs_scanned[g.n] = report.graphs_scanned.get(g.n, 0) + 1
    _collect(report, results)
    return report


def hunt(conjecture: str, n_range: tuple[int, int], workers: int = 1, tol: float = DEFAULT_TOL) -> ScanReport:
    if conjecture not in CONJECTURES:
        raise ValueError(f"unknown conjecture {conjecture!r}; known: {list(CONJECTURES)}")
    return scan(conjecture, n_range, workers=workers, tol=tol)


def hunt_conjecture_spectral_far(n_range, workers: int = 1, tol: float = DEFAULT_TOL) -> ScanReport:
    return hunt("spectral_far", n_range, workers, tol)


def hunt_conjecture_sqrt_m(n_range, workers: int = 1, tol: float = DEFAULT_TOL) -> ScanReport:
    return hunt("sqrt_m", n_range, workers, tol)


def hunt_conjecture_gabc_dominance(n_range, workers: int = 1, tol: float = DEFAULT_TOL) -> ScanReport:
    return hunt("gabc_dominance", n_range, workers, tol)


# ---------------------------------------------------------------------------
# minimizers


def embeds_spanning(g: Graph, h: Graph) -> bool:
    """Is g isomorphic to a spanning (not necessarily induced) subgraph of h?"""
    if g.n != h.n or g.m > h.m:
        return False
    n = g.n
    order = sorted(range(n), key=lambda v: -g.degree(v))
    hdeg = h.degrees()
    image = [-1] * n

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        need = 0
        for w in order[:i]:
            if g.has_edge(v, w):
                need |= 1 << image[w]
        for x in range(n):
            if used >> x & 1 or hdeg[x] < g.degree(v):
                continue
            if h.rows[x] & need != need:
                continue
            image[v] = x
            if place(i + 1, used | 1 << x):
                return True
        image[v] = -1
        return False

    return place(0, 0)


def gabc_host(g: Graph) -> list[int] | None:
    """First (a, b, c) such that g embeds as a spanning subgraph of G(a,b,c)."""
    n = g.n
    for a in range(n + 1):
        for b in range(n - a + 1):
            if embeds_spanning(g, g_abc(a, b, n - a - b)):
                return [a, b, n - a - b]
    return None


_QUANTITIES = {
    "triangular_edges": counting.triangular_edges,
    "triangles": counting.triangles,
}


def find_minimizers(n: int, m: int, quantity: str = "triangular_edges") -> ScanReport:
    """All n-vertex, m-edge graphs minimizing ``quantity``, with G(a,b,c) embeddings."""
    if quantity not in _QUANTITIES:
        raise ValueError(f"quantity must be one of {sorted(_QUANTITIES)}")
    _check_n(n, ENUM_MAX_VERTICES)
    f = _QUANTITIES[quantity]
    best, arg = None, []
    scanned = with_m = 0
    for code in enumerate_classes(n):
        g = from_graph6(code)
        scanned += 1
        if g.m != m:
            continue
        with_m += 1
        val = f(g)
        if best is None or val < best:
            best, arg = val, [code]
        elif val == best:
            arg.append(code)
    report = ScanReport(f"minimizers:{quantity}", n, n, {"m": m}, graphs_scanned={n: scanned})
    report.extremal_set = sorted(arg, key=lambda c: (len(c), c))
    report.counts = {"with_m_edges": with_m, "minimizers": len(arg)}
    extras: dict = {"minimum": best}
    if n * n // 4 < m <= n * (n - 1) // 2:
        gval, abc = g_lower_bound(n, m)
        extras["g_lower_bound"] = gval
        extras["g_lower_bound_abc"] = list(abc)
        extras["furedi_maleki_floor"] = str(gval - Fraction(3 * n, 2))
    extras["embeddings"] = {code: gabc_host(from_graph6(code)) for code in report.extremal_set}
    report.extras = extras
    return report
