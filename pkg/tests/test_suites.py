import pytest

from stingycolor import VerificationParams, emit_graph6
from stingycolor.suites import (
    UnknownClaimError,
    claim_records_for,
    exhaustive_graphs,
    load_graph6_lines,
    sample_specs,
    search_claim,
    split_counts,
    suite_gen_lonely_path,
    suite_identities,
    suite_lonely_path,
    suite_properties,
    suite_replete,
    suite_swap,
    sweep_reports,
)

PARAMS = VerificationParams()


def test_split_counts():
    assert split_counts(10, 3) == [4, 3, 3]
    assert split_counts(9, 3) == [3, 3, 3]
    assert sum(split_counts(10000, 9)) == 10000


def test_sample_specs_cover_total():
    specs = sample_specs(100, (7, 8))
    assert sum(c for _, _, c in specs) == 100
    assert [(n, p) for n, p, _ in specs] == [
        (7, 0.2), (7, 0.5), (7, 0.8), (8, 0.2), (8, 0.5), (8, 0.8)]


def test_suite_swap_passes():
    result = suite_swap(4)
    assert result.passed and result.checked > 0
    assert result.details["colorings"] > 0


def test_suite_lonely_path_with_samples():
    result = suite_lonely_path(4, samples=30, sample_ns=(7,), seed=99)
    assert result.passed
    two = suite_lonely_path(4, samples=30, sample_ns=(7,), seed=99)
    assert result.to_dict() == two.to_dict()


def test_suite_gen_lonely_path():
    assert suite_gen_lonely_path(4, rs=(2, 3)).passed


def test_suite_replete():
    result = suite_replete(4, t2s=(0, 1), rs=(2, 3))
    assert result.passed
    assert result.vacuous > 0  # most small graphs fail the hypotheses


def test_suite_identities():
    assert suite_identities(4).passed


def test_suite_properties_structure():
    result = suite_properties(seed=31, predicates=10, max_n_br=4)
    # the b_r and frame3 parts never fail; only the claimed equivalence may
    for violation in result.violations:
        assert violation["claim"] == "complete-condition-iff"
        assert violation["frame_property"] and violation["singleton_friendly"]
        assert not violation["complete_condition"]


def test_sweep_reports_sorted_and_mergeable():
    graphs = list(exhaustive_graphs(1, 4))
    whole = sweep_reports(graphs, PARAMS)
    ids = [(rep["inv"]["n"], rep["g6"]) for rep in whole]
    assert ids == sorted(ids)
    # split the corpus across two workers, merge, re-sort: same reports
    part = sweep_reports(graphs[::2], PARAMS) + sweep_reports(graphs[1::2], PARAMS)
    part.sort(key=lambda rep: (rep["inv"]["n"], rep["g6"]))
    assert part == whole


def test_load_graph6_lines(tmp_path):
    corpus = tmp_path / "corpus.g6"
    corpus.write_text("Dhc\n\nbroken line\nD??\n")
    graphs, errors = load_graph6_lines(str(corpus))
    assert [lineno for lineno, _ in graphs] == [1, 4]
    assert [lineno for lineno, _ in errors] == [3]


def test_claim_records_for(c5):
    records = claim_records_for(c5, "gen-reed-conjecture", PARAMS)
    assert {rec.name for rec in records} == {
        f"gen-reed-conjecture[r={r}]" for r in (1, 2, 3)}
    records = claim_records_for(c5, "gen-reed-conjecture[r=2]", PARAMS)
    assert [rec.name for rec in records] == ["gen-reed-conjecture[r=2]"]
    records = claim_records_for(c5, "lonely-path-join", PARAMS)
    assert "lonely-path-join" in {rec.name for rec in records}
    with pytest.raises(UnknownClaimError):
        claim_records_for(c5, "nope", PARAMS)


def test_search_claim_no_counterexamples():
    result = search_claim("reed-disjunct", PARAMS, max_n=4)
    assert result["graphs"] == 18
    assert result["counterexamples"] == []
    sampled = search_claim("gen-reed-conjecture[r=2]",
                           VerificationParams(r_list=(2,)),
                           max_n=4, samples=20, sample_ns=(7,), seed=3)
    assert sampled["counterexamples"] == []
    assert sampled["graphs"] == 18 + 20


def test_search_claim_unknown():
    with pytest.raises(UnknownClaimError, match="valid claims"):
        search_claim("foo", PARAMS)
