"""Acceptance gate: one test group per criterion, run at the stated tolerances.

The terminal summary (see conftest.py) prints one pass/fail line per criterion.
"""

import json
import random
import time
from fractions import Fraction
from itertools import combinations

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trispec import counting
from trispec.cli import main
from trispec.explorer import (
    KNOWN_COUNTS,
    enumerate_classes,
    find_minimizers,
    hunt_conjecture_gabc_dominance,
    hunt_conjecture_spectral_far,
    hunt_conjecture_sqrt_m,
    scan,
    self_check,
)
from trispec.families import g_lower_bound, k_plus, k_plus_bar, turan
from trispec.graph import Graph, canonical_form, from_graph6
from trispec.spectral import (
    NAMED_POLYS,
    Comparison,
    char_poly,
    construction_quotient,
    named_parity,
    named_poly,
    poly_match,
    rayleigh_exact,
    spectral_radius,
    verify_lemma,
)
from trispec.verdicts import Outcome, run_check

TOL = 1e-11

# ---------------------------------------------------------------------------
# 1. lemma certification


@pytest.mark.criterion(1)
def test_lemma_certification_dual_path():
    ranges = {
        "kplus_shifted": range(4, 101, 2),
        "kplusbar_even": range(4, 101, 2),
        "kplusbar_odd": range(5, 100, 2),
        "kplus_balanced_square": range(4, 201),
    }
    start = time.perf_counter()
    failures = []
    for lemma, ns in ranges.items():
        for n in ns:
            cert = verify_lemma(lemma, n, TOL)
            exact_ok = cert.exact
            numeric_ok = cert.numeric is Comparison.GREATER
            graph_ok = cert.graph_numeric in (None, Comparison.GREATER)
            if not (exact_ok and numeric_ok and graph_ok):
                failures.append((lemma, n, cert))
    elapsed = time.perf_counter() - start
    assert not failures
    assert elapsed < 60


# ---------------------------------------------------------------------------
# 2. polynomial transcription


def _transcription_mismatches(name):
    bad = []
    for n in range(6, 31):
        if n % 2 != named_parity(name):
            continue
        try:
            cp = char_poly(construction_quotient(name, n))
        except ValueError as exc:
            bad.append((n, f"no construction: {exc}"))
            continue
        if cp != named_poly(name, n):
            bad.append((n, f"quotient {cp} vs named {named_poly(name, n)}"))
    return bad


@pytest.mark.criterion(2)
@pytest.mark.parametrize("name", NAMED_POLYS)
def test_polynomial_transcription_exact(name):
    assert _transcription_mismatches(name) == []


@pytest.mark.parametrize("name", NAMED_POLYS)
def test_polynomial_transcription_up_to_x(name):
    # companion check: every mismatch above is a pure power-of-x factor
    for n in range(6, 31):
        if n % 2 != named_parity(name):
            continue
        try:
            kind = poly_match(name, n)
        except ValueError:
            continue
        assert kind in ("exact", "up_to_x"), (name, n)


# ---------------------------------------------------------------------------
# 3. extremal tightness


@pytest.mark.criterion(3)
def test_extremal_graphs_edge_and_triangular_counts():
    for n in range(4, 61):
        h = n // 2
        if n % 2 == 0:
            graphs = [k_plus(h + 1, h - 1), k_plus_bar(h, h)]
        else:
            graphs = [k_plus_bar((n + 1) // 2, (n - 1) // 2)]
        for g in graphs:
            assert g.n == n
            assert g.m == n * n // 4
            assert counting.triangular_edges(g) == 2 * h - 1
        assert counting.triangular_edges(k_plus((n + 1) // 2, n // 2)) == 2 * h + 1


# ---------------------------------------------------------------------------
# 4. exhaustive theorem suite


EXHAUSTIVE = [
    ("efr", {}),
    ("erdos_rademacher", {}),
    ("lovasz_simonovits_q", {}),
    ("moon_moser", {}),
    ("bn_cftz", {}),
    ("bn_clique_density", {"r": 2}),
    ("bn_clique_density", {"r": 3}),
    ("supersaturation_stability", {}),
    ("corollary_bipartite", {}),
    ("wilf", {"r": 2}),
    ("wilf", {"r": 3}),
]

_SUITE_CLOCK = {"elapsed": 0.0}


@pytest.fixture(scope="module")
def exhaustive_reports():
    start = time.perf_counter()
    reports = {}
    for sid, params in EXHAUSTIVE:
        reports[(sid, tuple(params.items()))] = scan(sid, (1, 7), params, tol=TOL)
    reports[("book_conjecture", ())] = scan("book_conjecture", (1, 8), tol=TOL)
    _SUITE_CLOCK["elapsed"] += time.perf_counter() - start
    return reports


@pytest.mark.criterion(4)
def test_enumerator_self_verifies():
    for n, expect in ((5, 34), (6, 156), (7, 1044)):
        report = self_check(n)
        assert report["agree"] and report["counts"]["vertex"] == report["counts"]["edge"] == expect
    assert len(enumerate_classes(8)) == KNOWN_COUNTS[8]


@pytest.mark.criterion(4)
@pytest.mark.parametrize("sid,params", EXHAUSTIVE + [("book_conjecture", {})], ids=lambda x: str(x))
def test_exhaustive_no_violations(exhaustive_reports, sid, params):
    r = exhaustive_reports[(sid, tuple(params.items()))]
    assert r.graphs_scanned[7] == 1044
    assert r.violations == []
    assert r.unresolved == []


@pytest.mark.criterion(4)
def test_moon_moser_equality_set(exhaustive_reports):
    r = exhaustive_reports[("moon_moser", ())]
    expect = {canonical_form(turan(n, k)) for n in range(1, 8) for k in range(1, n + 1) if n % k == 0}
    assert {canonical_form(from_graph6(c)) for c in r.extremal_set} == expect


def _nx_complete_bipartite(g):
    h = nx.Graph(g.edges())
    if h.number_of_edges() == 0:
        return True
    if not nx.is_connected(h) or not nx.is_bipartite(h):
        return False
    a, b = nx.bipartite.sets(h)
    return h.number_of_edges() == len(a) * len(b)


@pytest.mark.criterion(4)
def test_bn_cftz_equality_set(exhaustive_reports):
    r = exhaustive_reports[("bn_cftz", ())]
    expect = {c for n in range(1, 8) for c in enumerate_classes(n) if _nx_complete_bipartite(from_graph6(c))}
    assert set(r.extremal_set) == expect


@pytest.mark.criterion(4)
def test_exhaustive_runtime(exhaustive_reports):
    assert _SUITE_CLOCK["elapsed"] < 600


# ---------------------------------------------------------------------------
# 5. conjecture scans


HUNTS = {
    "spectral_far": hunt_conjecture_spectral_far,
    "sqrt_m": hunt_conjecture_sqrt_m,
    "gabc_dominance": hunt_conjecture_gabc_dominance,
}


@pytest.fixture(scope="module")
def hunt_reports():
    return {name: fn((1, 7), 1, TOL) for name, fn in HUNTS.items()}


@pytest.mark.criterion(5)
@pytest.mark.parametrize("name", list(HUNTS))
def test_hunt_completes_and_is_deterministic(hunt_reports, name):
    r = hunt_reports[name]
    assert sum(r.graphs_scanned.values()) == sum(KNOWN_COUNTS[n] for n in range(1, 8))
    assert r.unresolved == []
    again = HUNTS[name]((1, 7), 2, TOL)
    assert again.to_json() == r.to_json()


@pytest.mark.criterion(5)
@pytest.mark.parametrize("name", list(HUNTS))
def test_hunt_witnesses_reproduce_via_cli(hunt_reports, name, capsys):
    r = hunt_reports[name]
    assert r.exit_code() == (1 if r.violations else 0)
    for code in r.violations:
        assert run_check(name, from_graph6(code), tol=TOL).outcome is Outcome.VIOLATED
        exit_code = main(["eval", code, "--statements", name, "--quantities", "n"])
        out = json.loads(capsys.readouterr().out)
        assert exit_code == 1 and out["verdicts"][0]["outcome"] == "Violated"


@pytest.mark.criterion(5)
@settings(max_examples=6, deadline=None)
@given(st.sampled_from(list(HUNTS)), st.integers(1, 6), st.integers(2, 3))
def test_reports_byte_identical_across_thread_counts(name, n_max, workers):
    assert HUNTS[name]((1, n_max), 1, TOL).to_json() == HUNTS[name]((1, n_max), workers, TOL).to_json()


# ---------------------------------------------------------------------------
# 6. minimizer consistency


@pytest.mark.criterion(6)
def test_minimizers_against_g_lower_bound():
    for n in range(3, 8):
        for m in range(n * n // 4 + 1, n * (n - 1) // 2 + 1):
            r = find_minimizers(n, m)
            gval, _ = g_lower_bound(n, m)
            assert r.extras["minimum"] >= gval - Fraction(3 * n, 2), (n, m)
            if m == n * n // 4 + 1:
                assert r.extras["minimum"] == 2 * (n // 2) + 1, (n, m)


# ---------------------------------------------------------------------------
# 7. large-n theorems as findings reports


@pytest.mark.criterion(7)
@pytest.mark.parametrize("sid", ["spectral_efr", "spectral_efr_plus", "structure_theorem"])
def test_findings_reports(sid):
    r = scan(sid, (1, 7), tol=TOL)
    d = json.loads(r.to_json())
    assert d["findings"] is True
    assert sum(r.graphs_scanned.values()) == sum(KNOWN_COUNTS[n] for n in range(1, 8))
    for code in r.violations:
        assert run_check(sid, from_graph6(code), tol=TOL).outcome is Outcome.VIOLATED


# ---------------------------------------------------------------------------
# 8. numerical soundness


def _random_graph(rng):
    n = rng.randint(1, 10)
    p = rng.random()
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


@pytest.mark.criterion(8)
def test_numerical_soundness_random_graphs():
    rng = random.Random(20260101)
    start = time.perf_counter()
    for _ in range(1000):
        g = _random_graph(rng)
        est = spectral_radius(g, TOL)
        lam = est.lam
        x = est.as_array()
        # Rayleigh quotient of the returned vector lies in the certified interval
        assert lam.contains(rayleigh_exact(g, est.vector))
        # residual recomputation matches the claim, and the interval is honest
        a = g.adjacency_matrix()
        assert abs(float(np.max(np.abs(a @ x - lam.value * x))) - est.residual) <= 1e-15
        eig = np.linalg.eigvalsh(a) if g.n else np.zeros(1)
        r2 = float(np.linalg.norm(a @ x - lam.value * x) / np.linalg.norm(x))
        assert float(np.min(np.abs(eig - lam.value))) <= r2 + 1e-12
        assert abs(eig[-1] - lam.value) <= lam.radius + 1e-12
        # lambda >= 2m/n, certified: the interval cannot lie below it
        assert lam.compare(Fraction(2 * g.m, g.n)) is not Comparison.LESS
    assert time.perf_counter() - start < 60
