from fractions import Fraction
from math import isqrt

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from trispec import counting
from trispec.bipartite import bipartite_distance_exact
from trispec.graph import Graph, from_graph6, to_graph6
from trispec.spectral import Comparison, compare_lambda, spectral_radius


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_radius_between_average_and_max_degree(g):
    lam = spectral_radius(g).lam
    assert lam.compare(Fraction(2 * g.m, g.n)) is not Comparison.LESS
    assert lam.compare(max(g.degrees())) is not Comparison.GREATER
    dmax = max(g.degrees())
    assert float(lam.hi) + 1e-12 >= dmax**0.5


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=2), st.data())
def test_radius_monotone_under_edge_addition(g, data):
    missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    if not missing:
        return
    u, v = data.draw(st.sampled_from(missing))
    h = g.add_edge(u, v)
    assert spectral_radius(h).lam.hi >= spectral_radius(g).lam.lo


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_interval_contains_eigvalsh(g):
    lam = spectral_radius(g).lam
    ref = float(np.linalg.eigvalsh(g.adjacency_matrix())[-1])
    assert float(lam.lo) - 1e-12 <= ref <= float(lam.hi) + 1e-12


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_counting_identities(g):
    c = counting.triangle_census(g)
    assert 3 * c.t == sum(c.per_edge.values())
    assert c.triangular_edges <= g.m
    assert counting.neighborhood_edge_sum(g) == 3 * c.t
    assert counting.kruskal_katona_holds(g)


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_distance_bounds(g):
    d, cut = bipartite_distance_exact(g)
    assert 0 <= 2 * d <= g.m  # every graph has a cut with at least half the edges
    assert (d == 0) == g.is_bipartite()
    assert cut.class_edges + cut.cross_edges == g.m


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=0, max_n=20))
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)) == g


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=9))
def test_compare_lambda_is_consistent_with_square_root_thresholds(g):
    k = isqrt(g.m)
    c = compare_lambda(g, k)
    ref = float(np.linalg.eigvalsh(g.adjacency_matrix())[-1])
    if c is Comparison.LESS:
        assert ref < k + 1e-9
    elif c is Comparison.GREATER:
        assert ref > k - 1e-9
    elif c is Comparison.EQUAL:
        assert abs(ref - k) < 1e-9
