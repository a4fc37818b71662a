"""One checker per statement; each returns a Verdict.

Integral inequalities are decided in exact rational arithmetic.  Anything
involving lambda goes through a certified three-way comparison, so an
``Unresolved`` outcome can only come from such a comparison.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable

import numpy as np

from . import counting
from .algebra import AlgebraicReal, QuadSurd
from .bipartite import EXACT_MAX_VERTICES as CUT_MAX_VERTICES
from .bipartite import bipartite_distance_exact, cut_arrays
from .families import g_abc, k_plus, k_plus_bar, turan
from .graph import CANONICAL_MAX_VERTICES, Graph, _bits, is_isomorphic, to_graph6
from .spectral import (
    DEFAULT_TOL,
    CertifiedScalar,
    Comparison,
    compare_lambda,
    exact_spectral_radius,
    lambda_turan_2,
    named_poly,
    spectral_radius,
    EXACT_MAX_VERTICES as LAMBDA_EXACT_MAX,
)


class Outcome(Enum):
    HOLDS = "Holds"
    VIOLATED = "Violated"
    UNRESOLVED = "Unresolved"
    NOT_APPLICABLE = "NotApplicable"


# severity order used when several sub-checks are folded into one verdict
_SEVERITY = {Outcome.NOT_APPLICABLE: 0, Outcome.HOLDS: 1, Outcome.UNRESOLVED: 2, Outcome.VIOLATED: 3}


def worst(outcomes) -> Outcome:
    return max(outcomes, key=_SEVERITY.__getitem__, default=Outcome.NOT_APPLICABLE)


@dataclass(frozen=True)
class Verdict:
    statement_id: str
    instance: str
    outcome: Outcome
    witness: dict | None = None
    margins: dict = field(default_factory=dict)
    hypothesis_scale: str | None = None
    equality: bool = False

    def to_dict(self) -> dict:
        return {
            "statement_id": self.statement_id,
            "instance": self.instance,
            "outcome": self.outcome.value,
            "witness": _jsonable(self.witness),
            "margins": _jsonable(self.margins),
            "hypothesis_scale": self.hypothesis_scale,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _jsonable(x: Any) -> Any:
    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, QuadSurd):
        return str(x)
    if isinstance(x, CertifiedScalar):
        return {"value": x.value, "radius": x.radius}
    if isinstance(x, (Comparison, Outcome)):
        return x.value
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def _instance(g: Graph) -> str:
    return to_graph6(g)


def _verdict(sid, g, outcome, witness=None, margins=None, scale=None, equality=False) -> Verdict:
    if outcome is Outcome.VIOLATED and witness is None:
        witness = {}
    return Verdict(sid, _instance(g), outcome, witness, margins or {}, scale, equality)


def _lam(g: Graph, tol: float) -> CertifiedScalar:
    return spectral_radius(g, tol).lam if g.n else CertifiedScalar.exact(0)


def _sid(base: str, **params) -> str:
    if not params:
        return base
    inner = ",".join(f"{k}={v}" for k, v in sorted(params.items()))
    return f"{base}[{inner}]"


# ---------------------------------------------------------------------------
# structural recognizers


def is_turan_2(g: Graph) -> bool:
    """g is T_{n,2}; canonical-form equality for small n, exact structure beyond."""
    if g.n < 2:
        return False
    if g.n <= CANONICAL_MAX_VERTICES:
        return is_isomorphic(g, turan(g.n, 2))
    return g.m == g.n * g.n // 4 and g.is_bipartite()


def turan_divisor(g: Graph) -> int | None:
    """r if g = T_{n,r} with r dividing n, else None."""
    n = g.n
    if n == 0:
        return None
    comps = g.complement().components()
    r = len(comps)
    if n % r or any(len(c) != n // r for c in comps):
        return None
    comp = g.complement()
    for c in comps:
        for v in c:
            if comp.degree(v) != len(c) - 1:
                return None
    return r


def is_complete_bipartite(g: Graph) -> bool:
    """Non-isolated vertices induce a complete bipartite graph (edgeless graphs included)."""
    support = [v for v in range(g.n) if g.rows[v]]
    if not support:
        return True
    h = g.induced_subgraph(support)
    if not h.is_bipartite():
        return False
    color = {0: 0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in _bits(h.rows[v]):
            if w not in color:
                color[w] = 1 - color[v]
                stack.append(w)
    x = sum(1 for v in color if color[v] == 0)
    return len(color) == h.n and h.m == x * (h.n - x)


def is_balanced_k_plus(g: Graph) -> bool:
    """g is K+_{ceil(n/2), floor(n/2)}."""
    n = g.n
    if n < 3 or g.m != n * n // 4 + 1:
        return False
    if n <= CANONICAL_MAX_VERTICES:
        return is_isomorphic(g, k_plus((n + 1) // 2, n // 2))
    for u, v in g.edges():
        h = g.delete_edge(u, v)
        if h.m == n * n // 4 and h.is_bipartite():
            side = [w for w in range(n) if not (h.rows[u] >> w & 1)]
            if v in side and len(side) == (n + 1) // 2:
                return True
    return False


@lru_cache(maxsize=None)
def _ning_zhai_family(n: int) -> tuple[Graph, ...]:
    if n % 2 == 0 and n >= 4:
        return (k_plus(n // 2 + 1, n // 2 - 1), k_plus_bar(n // 2, n // 2))
    if n % 2 == 1 and n >= 5:
        return (k_plus_bar((n + 1) // 2, (n - 1) // 2),)
    return ()


@lru_cache(maxsize=None)
def _k_plus_threshold(n: int) -> AlgebraicReal:
    """lambda(K+_{ceil(n/2), floor(n/2)}) as the largest root of f (even n) or g (odd n)."""
    return AlgebraicReal.largest_root(named_poly("f" if n % 2 == 0 else "g", n))


def _compare_threshold(g: Graph, t, tol: float) -> Comparison:
    if isinstance(t, AlgebraicReal):
        # fresh copy: refinement inside comparisons must not leak between callers
        t = AlgebraicReal(t.poly, t.lo, t.hi)
    return compare_lambda(g, t, tol)


def compare_graph_lambdas(h: Graph, g: Graph, tol: float = DEFAULT_TOL) -> Comparison:
    """Certified comparison lambda(h) vs lambda(g)."""
    res = _lam(h, tol).compare(_lam(g, tol))
    if res.resolved or max(h.n, g.n) > LAMBDA_EXACT_MAX:
        return res
    a = exact_spectral_radius(h) if h.n else None
    b = exact_spectral_radius(g) if g.n else None
    if a is None or b is None:
        return res
    s = a.compare_algebraic(b)
    return Comparison.GREATER if s > 0 else Comparison.LESS if s < 0 else Comparison.EQUAL


# ---------------------------------------------------------------------------
# edge-count statements


def check_efr(g: Graph) -> Verdict:
    n = g.n
    sid = "efr"
    if g.m <= n * n // 4:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE, margins={"m": g.m, "turan_edges": n * n // 4})
    te = counting.triangular_edges(g)
    bound = 2 * (n // 2) + 1
    margins = {"triangular_edges": te, "bound": bound, "slack": te - bound}
    if te >= bound:
        return _verdict(sid, g, Outcome.HOLDS, margins=margins, equality=te == bound)
    return _verdict(sid, g, Outcome.VIOLATED, witness={"triangular_edges": te}, margins=margins)


def _ls_single(g: Graph, q: int) -> tuple[Outcome, dict]:
    n = g.n
    if not (1 <= q and 2 * q < n) or g.m < n * n // 4 + q:
        return Outcome.NOT_APPLICABLE, {}
    t = counting.triangles(g)
    bound = q * (n // 2)
    return (Outcome.HOLDS if t >= bound else Outcome.VIOLATED), {"triangles": t, "bound": bound, "slack": t - bound}


def check_lovasz_simonovits_q(g: Graph, q: int | None = None) -> Verdict:
    """t(G) >= q floor(n/2) when e(G) >= floor(n^2/4) + q, 1 <= q < n/2.

    With q=None every valid q is checked and the worst outcome is reported.
    """
    qs = [q] if q is not None else list(range(1, (g.n + 1) // 2 + 1))
    sid = _sid("lovasz_simonovits_q", q=q) if q is not None else "lovasz_simonovits_q"
    results = {qq: _ls_single(g, qq) for qq in qs}
    out = worst(o for o, _ in results.values())
    margins = {f"q={qq}": m for qq, (o, m) in results.items() if o is not Outcome.NOT_APPLICABLE}
    witness = None
    if out is Outcome.VIOLATED:
        witness = {"q": [qq for qq, (o, _) in results.items() if o is Outcome.VIOLATED], "triangles": counting.triangles(g)}
    eq = any(m.get("slack") == 0 for m in margins.values())
    return _verdict(sid, g, out, witness, margins, equality=eq)


def check_erdos_rademacher(g: Graph) -> Verdict:
    n = g.n
    sid = "erdos_rademacher"
    if g.m <= n * n // 4:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE)
    t = counting.triangles(g)
    bound = n // 2
    margins = {"triangles": t, "bound": bound, "slack": t - bound}
    if t >= bound:
        return _verdict(sid, g, Outcome.HOLDS, margins=margins, equality=t == bound)
    return _verdict(sid, g, Outcome.VIOLATED, {"triangles": t}, margins)


def check_moon_moser(g: Graph) -> Verdict:
    n, m = g.n, g.m
    sid = "moon_moser"
    if n == 0:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE)
    t = counting.triangles(g)
    rhs = Fraction(4 * m, 3 * n) * (m - Fraction(n * n, 4))
    slack = t - rhs
    r = turan_divisor(g)
    margins = {"triangles": t, "rhs": rhs, "slack": slack, "turan_r": r}
    if slack < 0:
        return _verdict(sid, g, Outcome.VIOLATED, {"triangles": t, "rhs": rhs}, margins)
    if (slack == 0) != (r is not None):
        # the equality characterization fails in one direction
        return _verdict(sid, g, Outcome.VIOLATED, {"equality": slack == 0, "turan_r": r}, margins)
    return _verdict(sid, g, Outcome.HOLDS, margins=margins, equality=slack == 0)


def check_supersaturation_stability(g: Graph) -> Verdict:
    """t(G) >= (n/6)(m + d - n^2/4) where d is the exact distance to bipartite."""
    n, m = g.n, g.m
    sid = "supersaturation_stability"
    if n > CUT_MAX_VERTICES:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE, margins={"reason": "n beyond exact distance limit"})
    d, cut = bipartite_distance_exact(g)
    if d == 0:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE, margins={"distance": 0})
    t = counting.triangles(g)
    rhs = Fraction(n, 6) * (m + d - Fraction(n * n, 4))
    margins = {"triangles": t, "distance": d, "rhs": rhs, "slack": t - rhs}
    if t >= rhs:
        return _verdict(sid, g, Outcome.HOLDS, margins=margins, equality=t == rhs)
    return _verdict(sid, g, Outcome.VIOLATED, {"distance": d, "cut_S": cut.side_S, "triangles": t}, margins)


def check_corollary_bipartite(g: Graph) -> Verdict:
    """distance <= 6t/n + q with q = n^2/4 - m (exact rational)."""
    n, m = g.n, g.m
    sid = "corollary_bipartite"
    if n == 0 or n > CUT_MAX_VERTICES:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE)
    d, cut = bipartite_distance_exact(g)
    t = counting.triangles(g)
    budget = Fraction(6 * t, n) + Fraction(n * n, 4) - m
    margins = {"distance": d, "budget": budget, "slack": budget - d}
    if d <= budget:
        return _verdict(sid, g, Outcome.HOLDS, margins=margins, equality=d == budget)
    return _verdict(sid, g, Outcome.VIOLATED, {"distance": d, "cut_S": cut.side_S}, margins)


def check_book_conjecture(g: Graph) -> Verdict:
    n = g.n
    sid = "book_conjecture"
    if 4 * g.m <= n * n:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE)
    b = counting.booksize(g)
    margins = {"booksize": b, "bound": Fraction(n, 6), "slack": b - Fraction(n, 6)}
    if 6 * b > n:
        return _verdict(sid, g, Outcome.HOLDS, margins=margins)
    return _verdict(sid, g, Outcome.VIOLATED, {"booksize": b}, margins)


# ---------------------------------------------------------------------------
# spectral statements


def _spectral_gate(g: Graph, threshold, tol: float, strict: bool = False) -> tuple[Outcome | None, Comparison]:
    """None if the hypothesis lambda >= threshold (or >) is certified, else the gating outcome."""
    c = _compare_threshold(g, threshold, tol)
    if c is Comparison.UNRESOLVED:
        return Outcome.UNRESOLVED, c
    if c is Comparison.LESS or (strict and c is Comparison.EQUAL):
        return Outcome.NOT_APPLICABLE, c
    return None, c


def check_spectral_efr(g: Graph, tol: float = DEFAULT_TOL) -> Verdict:
    n = g.n
    sid, scale = "spectral_efr", "n >= 5432"
    if n < 2:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE, scale=scale)
    if is_turan_2(g):
        return _verdict(sid, g, Outcome.NOT_APPLICABLE, margins={"excluded": "T_{n,2}"}, scale=scale)
    gate, c = _spectral_gate(g, lambda_turan_2(n), tol)
    margins: dict = {"lambda": _lam(g, tol), "lambda_vs_turan": c}
    if gate is not None:
        return _verdict(sid, g, gate, margins=margins, scale=scale)
    te = counting.triangular_edges(g)
    bound = 2 * (n // 2) - 1
    margins.update(triangular_edges=te, bound=bound, slack=te - bound)
    if te >= bound:
        return _verdict(sid, g, Outcome.HOLDS, margins=margins, scale=scale, equality=te == bound)
    return _verdict(sid, g, Outcome.VIOLATED, {"triangular_edges": te}, margins, scale)


def check_spectral_efr_plus(g: Graph, tol: float = DEFAULT_TOL) -> Verdict:
    n = g.n
    sid, scale = "spectral_efr_plus", "n >= 5432"
    if n < 3:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE, scale=scale)
    gate, c = _spectral_gate(g, _k_plus_threshold(n), tol)
    margins: dict = {"lambda": _lam(g, tol), "lambda_vs_kplus": c}
    if gate is not None:
        return _verdict(sid, g, gate, margins=margins, scale=scale)
    te = counting.triangular_edges(g)
    bound = 2 * (n // 2) + 1
    margins.update(triangular_edges=te, bound=bound, slack=te - bound)
    if te < bound:
        return _verdict(sid, g, Outcome.VIOLATED, {"triangular_edges": te}, margins, scale)
    if te == bound and not is_balanced_k_plus(g):
        return _verdict(sid, g, Outcome.VIOLATED, {"equality_graph": "not K+"}, margins, scale, equality=True)
    return _verdict(sid, g, Outcome.HOLDS, margins=margins, scale=scale, equality=te == bound)


def check_ning_zhai(g: Graph, tol: float = DEFAULT_TOL) -> Verdict:
    n = g.n
    sid = "ning_zhai"
    if n < 2 or is_turan_2(g):
        return _verdict(sid, g, Outcome.NOT_APPLICABLE)
    gate, c = _spectral_gate(g, lambda_turan_2(n), tol)
    margins: dict = {"lambda_vs_turan": c}
    if gate is not None:
        return _verdict(sid, g, gate, margins=margins)
    t = counting.triangles(g)
    bound = n // 2 - 1
    margins.update(triangles=t, bound=bound, slack=t - bound)
    if t < bound:
        return _verdict(sid, g, Outcome.VIOLATED, {"triangles": t}, margins)
    eq = t == bound
    if eq:
        margins["extremal_family"] = any(is_isomorphic(g, h) for h in _ning_zhai_family(n)) if n <= CANONICAL_MAX_VERTICES else None
    return _verdict(sid, g, Outcome.HOLDS, margins=margins, equality=eq)


def _slack_interval(lam: CertifiedScalar, t: int, m: int) -> tuple[Fraction, Fraction]:
    lo, hi = max(lam.lo, Fraction(0)), lam.hi
    return 3 * t + m * lo - hi**3, 3 * t + m * hi - lo**3


def check_bn_cftz(g: Graph, tol: float = DEFAULT_TOL) -> Verdict:
    """3t + m lambda - lambda^3 >= 0, equality iff complete bipartite."""
    sid = "bn_cftz"
    if g.n == 0:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE)
    t, m = counting.triangles(g), g.m
    lam = _lam(g, tol)
    s_lo, s_hi = _slack_interval(lam, t, m)
    cb = is_complete_bipartite(g)
    margins: dict = {"slack_lo": float(s_lo), "slack_hi": float(s_hi), "complete_bipartite": cb}
    if s_lo > 0:
        sign = 1
    elif s_hi < 0:
        sign = -1
    elif m == 0:
        sign = 0
    elif g.n <= LAMBDA_EXACT_MAX:
        from .algebra import RationalPoly

        p = RationalPoly([-3 * t, -m, 0, 1])  # lambda^3 - m lambda - 3t
        sign = -exact_spectral_radius(g).sign_of(p)
    else:
        return _verdict(sid, g, Outcome.UNRESOLVED, margins=margins)
    margins["slack_sign"] = sign
    if sign < 0:
        return _verdict(sid, g, Outcome.VIOLATED, {"triangles": t, "m": m}, margins)
    if (sign == 0) != cb:
        return _verdict(sid, g, Outcome.VIOLATED, {"equality": sign == 0, "complete_bipartite": cb}, margins, equality=sign == 0)
    return _verdict(sid, g, Outcome.HOLDS, margins=margins, equality=sign == 0)


def check_bn_clique_density(g: Graph, r: int = 2, tol: float = DEFAULT_TOL) -> Verdict:
    """k_{r+1} >= (lambda/n - 1 + 1/r) r(r-1)/(r+1) (n/r)^{r+1}.

    The right side is increasing in lambda, so this is lambda <= Lambda* for an
    exact rational Lambda*.
    """
    n = g.n
    sid = _sid("bn_clique_density", r=r)
    if r < 2:
        raise ValueError("r must be >= 2")
    if n == 0:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE)
    k = counting.cliques_or_zero(g, r + 1)
    coef = Fraction(r * (r - 1), r + 1) * Fraction(n, r) ** (r + 1)
    lam_star = n * (k / coef + 1 - Fraction(1, r))
    c = _compare_threshold(g, lam_star, tol)
    margins = {"cliques": k, "lambda_max_allowed": lam_star, "lambda_vs_bound": c}
    if c is Comparison.UNRESOLVED:
        return _verdict(sid, g, Outcome.UNRESOLVED, margins=margins)
    if c is Comparison.GREATER:
        return _verdict(sid, g, Outcome.VIOLATED, {"cliques": k}, margins)
    return _verdict(sid, g, Outcome.HOLDS, margins=margins, equality=c is Comparison.EQUAL)


def check_wilf(g: Graph, r: int = 2, tol: float = DEFAULT_TOL) -> Verdict:
    """lambda > (1 - 1/r) n forces a K_{r+1}."""
    n = g.n
    sid = _sid("wilf", r=r)
    if n == 0:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE)
    gate, c = _spectral_gate(g, (1 - Fraction(1, r)) * n, tol, strict=True)
    margins: dict = {"lambda_vs_bound": c}
    if gate is not None:
        return _verdict(sid, g, gate, margins=margins)
    k = counting.cliques_or_zero(g, r + 1)
    margins["cliques"] = k
    if k >= 1:
        return _verdict(sid, g, Outcome.HOLDS, margins=margins)
    return _verdict(sid, g, Outcome.VIOLATED, {"cliques": 0}, margins)


def check_spectral_supersat_density(g: Graph, eps: Fraction = Fraction(1, 10), tol: float = DEFAULT_TOL) -> Verdict:
    """lambda >= n/2 + eps n  implies  TE >= 32^{-1/3} eps^{2/3} n^2, i.e. 32 TE^3 >= eps^2 n^6."""
    eps = Fraction(eps)
    n = g.n
    sid = _sid("spectral_supersat_density", eps=eps)
    if n == 0 or eps <= 0:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE)
    gate, c = _spectral_gate(g, Fraction(n, 2) + eps * n, tol)
    margins: dict = {"lambda_vs_hypothesis": c}
    if gate is not None:
        return _verdict(sid, g, gate, margins=margins)
    te = counting.triangular_edges(g)
    lhs, rhs = 32 * te**3, eps**2 * n**6
    margins.update(triangular_edges=te, cubed_slack=lhs - rhs)
    if lhs >= rhs:
        return _verdict(sid, g, Outcome.HOLDS, margins=margins)
    return _verdict(sid, g, Outcome.VIOLATED, {"triangular_edges": te}, margins)


def check_spectral_supersat_size(g: Graph, eps: Fraction = Fraction(1, 10), tol: float = DEFAULT_TOL) -> Verdict:
    """lambda >= (1+eps) sqrt(m)  implies  TE > 2^{1/3} eps^{2/3} m, i.e. TE^3 > 2 eps^2 m^3."""
    eps = Fraction(eps)
    m = g.m
    sid = _sid("spectral_supersat_size", eps=eps)
    if m == 0 or eps <= 0:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE)
    gate, c = _spectral_gate(g, QuadSurd.sqrt(m, 1 + eps), tol)
    margins: dict = {"lambda_vs_hypothesis": c}
    if gate is not None:
        return _verdict(sid, g, gate, margins=margins)
    te = counting.triangular_edges(g)
    lhs, rhs = te**3, 2 * eps**2 * m**3
    margins.update(triangular_edges=te, cubed_slack=lhs - rhs)
    if lhs > rhs:
        return _verdict(sid, g, Outcome.HOLDS, margins=margins)
    return _verdict(sid, g, Outcome.VIOLATED, {"triangular_edges": te}, margins)


def check_fk_structure(g: Graph, k: int = 1, tol: float = DEFAULT_TOL) -> Verdict:
    n = g.n
    sid = _sid("fk_structure", k=k)
    if n == 0 or n > CUT_MAX_VERTICES or counting.contains_friendship(g, k):
        return _verdict(sid, g, Outcome.NOT_APPLICABLE)
    gate, c = _spectral_gate(g, Fraction(n, 2), tol)
    if gate is not None:
        return _verdict(sid, g, gate, margins={"lambda_vs_half_n": c})
    kk = k * k
    masks, cls = cut_arrays(g)
    sizes = np.bitwise_count(masks).astype(np.int64)
    # sides strictly inside (n/2 - 13k, n/2 + 13k): |2|S| - n| < 26k
    ok_sides = (np.abs(2 * sizes - n) < 26 * k) & (np.abs(2 * (n - sizes) - n) < 26 * k)
    good_cut = bool(np.any((cls < 108 * kk) & ok_sides))
    degs = g.degrees()
    checks = {
        "edges": 4 * g.m > n * n - 216 * kk,
        "cut": good_cut,
        "min_degree": 2 * min(degs) > n - 112 * kk,
        "max_degree": 2 * max(degs) < n + 28 * k,
    }
    margins = {"checks": checks, "distance": int(cls.min())}
    if all(checks.values()):
        return _verdict(sid, g, Outcome.HOLDS, margins=margins)
    return _verdict(sid, g, Outcome.VIOLATED, {"failed": sorted(a for a, ok in checks.items() if not ok)}, margins)


def check_odd_cycle_stability(g: Graph, k: int = 2, eps: Fraction = Fraction(1, 10), enforce_n0: bool = True) -> Verdict:
    """C_{2k+1}-free, n >= 2k/eps, e(G) >= (1/4 - eps/2) n^2  implies  distance <= eps n^2."""
    eps = Fraction(eps)
    n = g.n
    sid = _sid("odd_cycle_stability", eps=eps, k=k)
    n0 = 2 * k / eps
    scale = f"n >= {n0}"
    if not 0 < eps < Fraction(1, 2):
        raise ValueError("eps must lie in (0, 1/2)")
    if n == 0 or n > CUT_MAX_VERTICES or n > counting.PATH_SEARCH_MAX_VERTICES:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE, scale=scale)
    if enforce_n0 and n < n0:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE, margins={"n0": n0}, scale=scale)
    if 4 * g.m < (1 - 2 * eps) * n * n or not counting.is_odd_cycle_free(g, k):
        return _verdict(sid, g, Outcome.NOT_APPLICABLE, scale=scale)
    d, cut = bipartite_distance_exact(g)
    budget = eps * n * n
    margins = {"distance": d, "budget": budget, "slack": budget - d}
    if d <= budget:
        return _verdict(sid, g, Outcome.HOLDS, margins=margins, scale=scale)
    return _verdict(sid, g, Outcome.VIOLATED, {"distance": d, "cut_S": cut.side_S}, margins, scale)


def check_odd_cycle_spectral_stability(g: Graph, k: int = 2, delta: Fraction = Fraction(0), tol: float = DEFAULT_TOL) -> Verdict:
    """C_{2k+1}-free with lambda >= n/2 - delta  implies  e >= n^2/4 - (delta+2k)n and distance <= (delta+3k)n."""
    delta = Fraction(delta)
    n = g.n
    sid = _sid("odd_cycle_spectral_stability", delta=delta, k=k)
    if delta < 0:
        raise ValueError("delta must be >= 0")
    if n == 0 or n > CUT_MAX_VERTICES or n > counting.PATH_SEARCH_MAX_VERTICES:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE)
    if not counting.is_odd_cycle_free(g, k):
        return _verdict(sid, g, Outcome.NOT_APPLICABLE)
    gate, c = _spectral_gate(g, Fraction(n, 2) - delta, tol)
    if gate is not None:
        return _verdict(sid, g, gate, margins={"lambda_vs_hypothesis": c})
    d, cut = bipartite_distance_exact(g)
    edge_floor = Fraction(n * n, 4) - (delta + 2 * k) * n
    budget = (delta + 3 * k) * n
    checks = {"edges": g.m >= edge_floor, "distance": d <= budget}
    margins = {"checks": checks, "distance": d, "budget": budget, "edge_floor": edge_floor}
    if all(checks.values()):
        return _verdict(sid, g, Outcome.HOLDS, margins=margins)
    return _verdict(sid, g, Outcome.VIOLATED, {"failed": sorted(a for a, ok in checks.items() if not ok), "cut_S": cut.side_S}, margins)


def check_structure_theorem(g: Graph, tol: float = DEFAULT_TOL) -> Verdict:
    """Conclusion side only: e >= floor(n^2/4) - 3 and some cut with e(S,T) >= floor(n^2/4) - 4
    and ceil(n/2) - 2 <= |S|, |T| <= floor(n/2) + 2."""
    n = g.n
    sid, scale = "structure_theorem", "assumes maximum spectral radius (not checked per graph)"
    if n < 2 or n > CUT_MAX_VERTICES:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE, scale=scale)
    if counting.triangular_edges(g) > n + 1:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE, scale=scale)
    gate, c = _spectral_gate(g, lambda_turan_2(n), tol)
    if gate is not None:
        return _verdict(sid, g, gate, margins={"lambda_vs_turan": c}, scale=scale)
    q = n * n // 4
    masks, cls = cut_arrays(g)
    sizes = np.bitwise_count(masks).astype(np.int64)
    lo_side, hi_side = (n + 1) // 2 - 2, n // 2 + 2
    ok = (g.m - cls >= q - 4) & (sizes >= lo_side) & (sizes <= hi_side) & (n - sizes >= lo_side) & (n - sizes <= hi_side)
    checks = {"edges": g.m >= q - 3, "cut": bool(np.any(ok))}
    margins = {"checks": checks, "max_cross": int(g.m - cls.min())}
    if all(checks.values()):
        return _verdict(sid, g, Outcome.HOLDS, margins=margins, scale=scale)
    return _verdict(sid, g, Outcome.VIOLATED, {"failed": sorted(a for a, v in checks.items() if not v)}, margins, scale)


# ---------------------------------------------------------------------------
# conjectures


def check_conjecture_spectral_far(g: Graph, tol: float = DEFAULT_TOL) -> Verdict:
    """t(G) >= (n/6)(lambda + d - lambda(T_{n,2})) at d = exact distance.

    Equivalent to lambda <= 6 t/n - d + sqrt(floor(n^2/4)).
    """
    n = g.n
    sid, scale = "spectral_far", "conjecture"
    if n < 2 or n > CUT_MAX_VERTICES:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE, scale=scale)
    d, cut = bipartite_distance_exact(g)
    t = counting.triangles(g)
    bound = lambda_turan_2(n) + Fraction(6 * t, n) - d
    c = _compare_threshold(g, bound, tol)
    margins = {"triangles": t, "distance": d, "lambda_max_allowed": bound, "lambda_vs_bound": c}
    if c is Comparison.UNRESOLVED:
        return _verdict(sid, g, Outcome.UNRESOLVED, margins=margins, scale=scale)
    if c is Comparison.GREATER:
        return _verdict(sid, g, Outcome.VIOLATED, {"distance": d, "triangles": t, "cut_S": cut.side_S}, margins, scale)
    return _verdict(sid, g, Outcome.HOLDS, margins=margins, scale=scale, equality=c is Comparison.EQUAL)


def check_conjecture_sqrt_m(g: Graph, tol: float = DEFAULT_TOL) -> Verdict:
    sid, scale = "sqrt_m", "conjecture"
    m = g.m
    if g.n == 0 or is_complete_bipartite(g):
        return _verdict(sid, g, Outcome.NOT_APPLICABLE, scale=scale)
    gate, c = _spectral_gate(g, QuadSurd.sqrt(m), tol)
    margins: dict = {"lambda_vs_sqrt_m": c}
    if gate is not None:
        return _verdict(sid, g, gate, margins=margins, scale=scale)
    te = counting.triangular_edges(g)
    margins.update(triangular_edges=te, squared_slack=te * te - m)
    if te * te >= m:
        return _verdict(sid, g, Outcome.HOLDS, margins=margins, scale=scale, equality=te * te == m)
    return _verdict(sid, g, Outcome.VIOLATED, {"triangular_edges": te, "m": m}, margins, scale)


@lru_cache(maxsize=None)
def _gabc_candidates(n: int) -> tuple[tuple[tuple[int, int, int], Graph, int], ...]:
    out = []
    for a in range(n + 1):
        for b in range(n - a + 1):
            h = g_abc(a, b, n - a - b)
            out.append(((a, b, n - a - b), h, counting.non_triangular_edges(h)))
    return tuple(out)


def check_conjecture_gabc_dominance(g: Graph, tol: float = DEFAULT_TOL) -> Verdict:
    """Some G(a,b,c) on n vertices has lambda >= lambda(G) and at least as many non-triangular edges."""
    n = g.n
    sid, scale = "gabc_dominance", "conjecture"
    if n == 0:
        return _verdict(sid, g, Outcome.NOT_APPLICABLE, scale=scale)
    nt = counting.non_triangular_edges(g)
    unresolved = []
    for abc, h, nt_h in _gabc_candidates(n):
        if nt_h < nt:
            continue
        c = compare_graph_lambdas(h, g, tol)
        if c in (Comparison.GREATER, Comparison.EQUAL):
            return _verdict(sid, g, Outcome.HOLDS, margins={"dominator": list(abc), "nt": nt, "nt_dominator": nt_h}, scale=scale)
        if c is Comparison.UNRESOLVED:
            unresolved.append(list(abc))
    if unresolved:
        return _verdict(sid, g, Outcome.UNRESOLVED, margins={"unresolved": unresolved, "nt": nt}, scale=scale)
    return _verdict(sid, g, Outcome.VIOLATED, {"nt": nt, "lambda": _lam(g, tol)}, {"nt": nt}, scale)


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Statement:
    sid: str
    checker: Callable[..., Verdict]
    params: tuple[str, ...] = ()
    spectral: bool = False
    findings: bool = False


STATEMENTS: dict[str, Statement] = {
    s.sid: s
    for s in [
        Statement("efr", check_efr),
        Statement("spectral_efr", check_spectral_efr, spectral=True, findings=True),
        Statement("spectral_efr_plus", check_spectral_efr_plus, spectral=True, findings=True),
        Statement("erdos_rademacher", check_erdos_rademacher),
        Statement("lovasz_simonovits_q", check_lovasz_simonovits_q, ("q",)),
        Statement("ning_zhai", check_ning_zhai, spectral=True),
        Statement("bn_cftz", check_bn_cftz, spectral=True),
        Statement("bn_clique_density", check_bn_clique_density, ("r",), spectral=True),
        Statement("moon_moser", check_moon_moser),
        Statement("supersaturation_stability", check_supersaturation_stability),
        Statement("corollary_bipartite", check_corollary_bipartite),
        Statement("book_conjecture", check_book_conjecture),
        Statement("spectral_supersat_density", check_spectral_supersat_density, ("eps",), spectral=True),
        Statement("spectral_supersat_size", check_spectral_supersat_size, ("eps",), spectral=True),
        Statement("wilf", check_wilf, ("r",), spectral=True),
        Statement("fk_structure", check_fk_structure, ("k",), spectral=True, findings=True),
        Statement("odd_cycle_stability", check_odd_cycle_stability, ("k", "eps", "enforce_n0")),
        Statement("odd_cycle_spectral_stability", check_odd_cycle_spectral_stability, ("k", "delta"), spectral=True),
        Statement("structure_theorem", check_structure_theorem, spectral=True, findings=True),
        Statement("spectral_far", check_conjecture_spectral_far, spectral=True, findings=True),
        Statement("sqrt_m", check_conjecture_sqrt_m, spectral=True, findings=True),
        Statement("gabc_dominance", check_conjecture_gabc_dominance, spectral=True, findings=True),
    ]
}

CONJECTURES = ("spectral_far", "sqrt_m", "gabc_dominance")


def parse_param(name: str, text: str):
    if name in ("eps", "delta"):
        return Fraction(text)
    if name == "enforce_n0":
        return text.lower() in ("1", "true", "yes")
    return int(text)


def run_check(statement_id: str, g: Graph, params: dict | None = None, tol: float = DEFAULT_TOL) -> Verdict:
    if statement_id not in STATEMENTS:
        raise ValueError(f"unknown statement {statement_id!r}; known: {sorted(STATEMENTS)}")
    st = STATEMENTS[statement_id]
    kwargs = dict(params or {})
    unknown = set(kwargs) - set(st.params)
    if unknown:
        raise ValueError(f"{statement_id} takes parameters {list(st.params)}, got {sorted(unknown)}")
    if st.spectral:
        kwargs["tol"] = tol
    return st.checker(g, **kwargs)
