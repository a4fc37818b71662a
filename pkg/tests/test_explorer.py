import json

import pytest

from trispec.explorer import (
    KNOWN_COUNTS,
    enumerate_classes,
    enumerate_graphs,
    embeds_spanning,
    find_minimizers,
    gabc_host,
    parse_n_range,
    prefilter_skips,
    scan,
    scan_graphs,
    self_check,
)
from trispec.families import complete, g_abc, turan
from trispec.graph import canonical_form, from_graph6, is_isomorphic
from trispec.verdicts import Outcome, run_check


@pytest.mark.parametrize("n", range(0, 8))
def test_class_counts(n):
    assert len(enumerate_classes(n)) == KNOWN_COUNTS[n]


def test_strategies_agree():
    for n in range(1, 6):
        report = self_check(n)
        assert report["agree"] and set(report["counts"]) == {"vertex", "edge", "labeled"}
        assert report["counts"]["labeled"] == KNOWN_COUNTS[n]
    assert self_check(6)["agree"] and self_check(7)["counts"]["edge"] == 1044


def test_classes_are_canonical_and_distinct():
    for n in range(1, 7):
        codes = enumerate_classes(n)
        forms = {canonical_form(g) for g in enumerate_graphs(n)}
        assert len(forms) == len(codes)


def test_unsupported_sizes():
    with pytest.raises(ValueError):
        enumerate_classes(9)
    with pytest.raises(ValueError):
        enumerate_classes(8, "edge")
    with pytest.raises(ValueError):
        enumerate_classes(4, "magic")


def test_prefilter_is_sound(graphs_upto7):
    for sid in ("efr", "erdos_rademacher", "book_conjecture", "spectral_efr", "ning_zhai", "structure_theorem"):
        for g in graphs_upto7:
            if prefilter_skips(sid, g):
                assert run_check(sid, g).outcome is Outcome.NOT_APPLICABLE, (sid, g)


def test_scan_efr():
    r = scan("efr", (3, 7))
    assert r.violations == [] and r.unresolved == [] and r.exit_code() == 0
    assert r.graphs_scanned == {3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
    assert all(r.extras["enumeration_self_check"].values())


def test_scan_moon_moser_extremal_set():
    r = scan("moon_moser", (3, 7))
    expect = set()
    for n in range(3, 8):
        for k in range(1, n + 1):
            if n % k == 0:  # k = 1 gives the empty graph
                expect.add(canonical_form(turan(n, k)))
    got = {canonical_form(from_graph6(c)) for c in r.extremal_set}
    assert got == expect


def test_scan_outputs_are_deterministic():
    a = scan("bn_cftz", (3, 6), workers=1)
    b = scan("bn_cftz", (3, 6), workers=3)
    assert a.to_json() == b.to_json()
    assert a.to_csv() == b.to_csv()
    assert json.loads(a.to_json())["statement_id"] == "bn_cftz"


def test_scan_graphs_reproduces_witness():
    r = scan("spectral_far", (5, 5))
    assert r.violations
    again = scan_graphs("spectral_far", [from_graph6(c) for c in r.violations])
    assert again.violations == r.violations and again.exit_code() == 1


def test_parse_n_range():
    assert parse_n_range("3..7") == (3, 7)
    assert parse_n_range("3-7") == (3, 7)
    assert parse_n_range("5") == (5, 5)


def test_minimizer_examples():
    r = find_minimizers(5, 7)
    assert r.extras["minimum"] == 5 == r.extras["g_lower_bound"]
    assert r.extras["g_lower_bound_abc"] == [2, 2, 1]
    assert any(is_isomorphic(from_graph6(c), g_abc(2, 2, 1)) for c in r.extremal_set)
    r = find_minimizers(6, 9)
    assert r.extras["minimum"] == 0


def test_spanning_embedding():
    assert embeds_spanning(g_abc(2, 2, 1), complete(5))
    assert not embeds_spanning(g_abc(2, 2, 1), turan(5, 2))
    assert embeds_spanning(turan(5, 2), g_abc(2, 2, 1))
    assert gabc_host(g_abc(2, 2, 1)) is not None
    assert gabc_host(turan(6, 2)) is not None
