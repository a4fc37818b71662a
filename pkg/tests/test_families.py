from math import comb

import pytest

from trispec import counting
from trispec.families import (
    FamilySpec,
    book,
    complete,
    complete_bipartite,
    cycle,
    family_kinds,
    friendship,
    g_abc,
    g_abc_edges,
    g_lower_bound,
    k_plus,
    k_plus_bar,
    path,
    split,
    turan,
    turan_part_sizes,
)
from trispec.graph import GraphError, is_isomorphic


def test_turan_examples():
    assert is_isomorphic(turan(4, 2), cycle(4))
    assert turan(4, 2).m == 4
    assert turan(5, 2).m == 6
    assert is_isomorphic(turan(6, 3), complete_bipartite(2, 2).complement().complement()) is False
    assert turan(6, 3).m == 12


def test_turan_edge_formula():
    for n in range(1, 41):
        for r in range(1, min(n, 6) + 1):
            sizes = turan_part_sizes(n, r)
            assert sum(sizes) == n and max(sizes) - min(sizes) <= 1
            assert turan(n, r).m == (n * n - sum(s * s for s in sizes)) // 2
        if n >= 2:
            assert turan(n, 2).m == n * n // 4


def test_k_plus_examples():
    assert counting.triangles(k_plus(4, 2)) == 2
    assert counting.triangular_edges(k_plus(3, 3)) == 7
    assert is_isomorphic(k_plus(2, 1), complete(3))
    assert counting.triangular_edges(k_plus(2, 1)) == 3
    with pytest.raises(GraphError):
        k_plus(1, 3)


def test_k_plus_bar_examples():
    g = k_plus_bar(3, 3)
    assert g.m == 9 and counting.triangular_edges(g) == 5
    h = k_plus_bar(2, 1)
    assert h.m == 2 and counting.triangles(h) == 0
    with pytest.raises(GraphError):
        k_plus_bar(1, 1)


def test_g_abc_examples():
    g = g_abc(2, 2, 1)
    assert g.m == 7 and counting.triangular_edges(g) == 5
    assert is_isomorphic(g_abc(0, 3, 4), complete_bipartite(3, 4))
    assert counting.triangles(g_abc(0, 3, 4)) == 0
    assert is_isomorphic(g_abc(3, 0, 0), complete(3))


def test_g_abc_triangular_identity():
    for n in range(2, 13):
        for a in range(2, n + 1):
            for b in range(n - a + 1):
                c = n - a - b
                if a == 2 and b == 0:
                    continue  # a lone edge lies in no triangle
                g = g_abc(a, b, c)
                assert g.m == g_abc_edges(a, b, c)
                assert counting.triangular_edges(g) == comb(a, 2) + a * b == g.m - b * c


def test_g_lower_bound_examples():
    assert g_lower_bound(5, 7) == (5, (2, 2, 1))
    for n in range(3, 8):
        assert g_lower_bound(n, comb(n, 2))[0] == comb(n, 2)
    # enumeration oracle, recorded
    assert _g_oracle(6, 10) == 7
    assert g_lower_bound(6, 10) == (7, (2, 3, 1))
    with pytest.raises(ValueError):
        g_lower_bound(5, 6)


def _g_oracle(n, m):
    vals = [m - b * (n - a - b) for a in range(n + 1) for b in range(n - a + 1) if comb(a, 2) + b * (n - b) >= m]
    return min(vals)


def test_g_lower_bound_matches_oracle():
    for n in range(2, 15):
        for m in range(n * n // 4 + 1, comb(n, 2) + 1):
            assert g_lower_bound(n, m)[0] == _g_oracle(n, m)


def test_small_families():
    assert is_isomorphic(friendship(1), complete(3))
    f2 = friendship(2)
    assert (f2.n, f2.m, counting.triangles(f2)) == (5, 6, 2)
    assert is_isomorphic(book(2), complete(4).delete_edge(0, 1))
    for k in range(1, 6):
        assert (friendship(k).n, friendship(k).m) == (2 * k + 1, 3 * k)
        assert book(k).n == k + 2
    assert split(5, 2).m == 1 + 2 * 3
    assert path(4).m == 3 and cycle(6).m == 6


def test_closed_form_edge_counts():
    for n in range(4, 41):
        a, b = (n + 1) // 2, n // 2
        assert complete(n).m == comb(n, 2)
        assert complete_bipartite(a, b).m == a * b
        assert k_plus(a, b).m == a * b + 1
        assert k_plus_bar(a, b).m == a * b
        assert split(n, 2).m == 1 + 2 * (n - 2)


def test_k_plus_balanced_triangular_edges():
    for n in range(4, 41):
        assert counting.triangular_edges(k_plus((n + 1) // 2, n // 2)) == 2 * (n // 2) + 1


def test_family_spec_parsing():
    assert FamilySpec.parse("turan:12,2").build() == turan(12, 2)
    assert FamilySpec.parse("kplus:7,5").build() == k_plus(7, 5)
    assert FamilySpec.parse("gabc:3,4,2").build() == g_abc(3, 4, 2)
    assert set(family_kinds()) >= {"turan", "kplus", "kplusbar", "gabc", "complete", "kab"}
    with pytest.raises(ValueError):
        FamilySpec.parse("nosuch:3")
    with pytest.raises(ValueError):
        FamilySpec.parse("turan:x")
