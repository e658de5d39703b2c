import json
import math

import pytest

from kms.enumeration import are_isomorphic
from kms.errors import EmptyCandidateError, InvalidSpecError
from kms.graphs import complete_graph, parse_graph6, split_star
from kms.harness import (
    TheoremSpec,
    _looks_like_double_pendant_clique,
    _looks_like_pendant_clique,
    _looks_like_split_star,
    lemma_numeric_check,
    minimizer_search,
    report_csv,
    report_json,
    sample_source,
    sharpness_check,
    theorem_query,
    threshold_for,
    verify_theorem,
)
from kms.matching import Property, PropertyQuery
from kms.quotients import (
    build_family,
    double_pendant_clique_family,
    largest_real_root,
    pendant_clique_cubic,
    pendant_clique_family,
)
from kms.spectra import distance_spectral_radius


def test_spec_validation():
    with pytest.raises(InvalidSpecError):
        TheoremSpec("T1", 5, 3)  # odd n
    with pytest.raises(InvalidSpecError):
        TheoremSpec("T1", 6, 2)  # even k
    with pytest.raises(InvalidSpecError):
        TheoremSpec("T2", 6, 3, 3)  # d = k
    with pytest.raises(InvalidSpecError):
        TheoremSpec("T2", 6, 3, 1)  # parity mismatch
    with pytest.raises(InvalidSpecError):
        TheoremSpec("T5", 4, 3)  # odd k
    with pytest.raises(InvalidSpecError):
        TheoremSpec("T9", 6, 3)


def test_threshold_examples():
    thr, exc = threshold_for(TheoremSpec("T1", 6, 3))
    assert are_isomorphic(exc, split_star(6, 2))
    assert thr == pytest.approx(distance_spectral_radius(exc).lambda1, abs=1e-8)

    thr, exc = threshold_for(TheoremSpec("T3", 7, 3))
    assert thr == pytest.approx(largest_real_root(pendant_clique_cubic(7)), abs=1e-12)
    assert are_isomorphic(exc, build_family(pendant_clique_family(7)))

    thr, exc = threshold_for(TheoremSpec("T4", 6, 3))
    assert thr == pytest.approx(3 + math.sqrt(10), abs=1e-12)
    assert are_isomorphic(exc, split_star(6, 3))

    # large-order branches switch to the pendant shapes
    _, exc = threshold_for(TheoremSpec("T1", 10, 3))
    assert are_isomorphic(exc, build_family(double_pendant_clique_family(10)))
    _, exc = threshold_for(TheoremSpec("T4", 10, 3))
    assert are_isomorphic(exc, build_family(pendant_clique_family(10)))


def test_verify_t1_exhaustive():
    report = verify_theorem(TheoremSpec("T1", 6, 3))
    assert len(report.rows) == 112
    assert report.violations == 0
    assert report.exceptions == 1
    assert report.exhaustive
    exc_row = next(r for r in report.rows if r.exception)
    assert exc_row.cmp == "equal"
    assert not exc_row.verdict
    assert are_isomorphic(parse_graph6(exc_row.graph6), split_star(6, 2))


def test_verify_t3_and_t5():
    report = verify_theorem(TheoremSpec("T3", 7, 3))
    assert len(report.rows) == 853
    assert report.violations == 0 and report.exceptions == 1

    report = verify_theorem(TheoremSpec("T5", 8, 2))
    assert report.violations == 0 and report.exceptions == 1
    exc_row = next(r for r in report.rows if r.exception)
    assert are_isomorphic(parse_graph6(exc_row.graph6), split_star(8, 4))


def test_verify_rejects_wrong_order_source():
    with pytest.raises(InvalidSpecError):
        verify_theorem(TheoremSpec("T1", 6, 3), [complete_graph(7)])


def test_reports_identical_across_runs_and_workers():
    spec = TheoremSpec("T1", 6, 1)
    a = verify_theorem(spec, workers=1)
    b = verify_theorem(spec, workers=4)
    assert report_csv(a) == report_csv(b)
    assert report_json(a) == report_json(b)
    assert report_csv(a) == report_csv(verify_theorem(spec, workers=1))


def test_report_formats():
    spec = TheoremSpec("T2", 5, 3, 1)
    report = verify_theorem(spec)
    csv = report_csv(report)
    header = csv.splitlines()[0]
    assert header == "graph6,n,k,d,lambda1,threshold,cmp,property,verdict,exception,violation"
    assert len(csv.splitlines()) == len(report.rows) + 1
    payload = json.loads(report_json(report))
    assert payload["metadata"]["theorem"] == "T2"
    assert payload["metadata"]["d"] == 1
    assert payload["metadata"]["exhaustive"] is True
    assert payload["metadata"]["violations"] == 0
    assert len(payload["rows"]) == len(report.rows)


def test_sampled_mode_metadata():
    spec = TheoremSpec("T1", 10, 3)
    graphs = sample_source(10, count=60, seed=3)
    report = verify_theorem(spec, graphs, source="sampled", exhaustive=False)
    assert not report.exhaustive
    assert report.violations == 0
    assert report.exceptions == 1
    payload = json.loads(report_json(report))
    assert payload["metadata"]["exhaustive"] is False


@pytest.mark.parametrize(
    "spec",
    [
        TheoremSpec("T1", 8, 3),
        TheoremSpec("T5", 7, 2),
        TheoremSpec("T2", 5, 3, 1),
        TheoremSpec("T4", 8, 5),
        TheoremSpec("T1", 12, 5),
        TheoremSpec("T3", 11, 3),
    ],
)
def test_sharpness(spec):
    assert sharpness_check(spec)


def test_minimizers():
    g, lam = minimizer_search(PropertyQuery(Property.PERFECT_K_MATCHING, 3), 6)
    assert are_isomorphic(g, split_star(6, 2))
    assert lam == pytest.approx(distance_spectral_radius(split_star(6, 2)).lambda1)

    g, _ = minimizer_search(PropertyQuery(Property.FACTOR_CRITICAL, 3), 7)
    assert are_isomorphic(g, build_family(pendant_clique_family(7)))

    g, _ = minimizer_search(PropertyQuery(Property.BICRITICAL, 2), 6)
    assert are_isomorphic(g, split_star(6, 3))


def test_minimizer_empty_candidate_set():
    # every connected graph on 2 vertices (just K2) has a perfect matching
    with pytest.raises(EmptyCandidateError):
        minimizer_search(PropertyQuery(Property.PERFECT_K_MATCHING, 1), 2)


def test_lemma_sweeps_pass():
    for lemma in ("L2.6", "L2.7", "L2.8"):
        report = lemma_numeric_check(lemma, max_n=16)
        assert report.ok, [r for r in report.rows if not r.ok][:3]


def test_lemma_equality_cases():
    rep = lemma_numeric_check("L2.8", max_n=20)
    for row in rep.rows:
        if row.item == "ii":
            assert (row.cmp == "equal") == row.params.endswith("n=3")
        if row.item == "iv":
            assert (row.cmp == "equal") == (row.params == "n=2")
        if row.item == "i":
            assert (row.cmp == "equal") == row.params.endswith("s=1")
    rep = lemma_numeric_check("L2.7", max_n=20)
    for row in rep.rows:
        if row.item == "ii":
            assert (row.cmp == "equal") == (row.params == "n=4")
        if row.item == "iii":
            assert row.cmp == "below"


def test_structural_matchers_beyond_canonical_cap():
    n = 14
    assert _looks_like_split_star(split_star(n, 7), 7)
    assert not _looks_like_split_star(split_star(n, 6), 7)
    assert not _looks_like_split_star(complete_graph(n), 7)
    pend = build_family(pendant_clique_family(n))
    dbl = build_family(double_pendant_clique_family(n))
    assert _looks_like_pendant_clique(pend)
    assert not _looks_like_pendant_clique(dbl)
    assert _looks_like_double_pendant_clique(dbl)
    assert not _looks_like_double_pendant_clique(pend)


def test_theorem_query_mapping():
    assert theorem_query(TheoremSpec("T1", 6, 3)).prop is Property.PERFECT_K_MATCHING
    assert theorem_query(TheoremSpec("T2", 5, 3, 1)).prop is Property.D_CRITICAL
    assert theorem_query(TheoremSpec("T5", 7, 2)).prop is Property.FACTOR_CRITICAL
    assert theorem_query(TheoremSpec("T5", 8, 2)).prop is Property.BICRITICAL
