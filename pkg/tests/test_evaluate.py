"""Evaluation harness: truth resolution, ranks, top-N verdicts."""

from __future__ import annotations

import pytest

from charmfl import (
    DEFAULT_METRICS,
    GroundTruth,
    Kind,
    Outcome,
    ProgramElement,
    SpectraSet,
    TARANTULA,
    TestCase,
    UnresolvedTruthError,
    evaluate,
    rank_spectra,
)

from .conftest import FAULTY_LINE


class TestGroundTruth:
    def test_parse_locations_and_ids(self):
        truth = GroundTruth.parse("example.py:11, pkg/mod.py:3,  s42")
        assert truth.locations == (("example.py", 11), ("pkg/mod.py", 3))
        assert truth.element_ids == ("s42",)

    def test_empty_truth_rejected(self):
        with pytest.raises(UnresolvedTruthError):
            GroundTruth.parse("")

    def test_unknown_line_unresolved(self, cart_spectra):
        truth = GroundTruth.parse("example.py:999")
        with pytest.raises(UnresolvedTruthError, match="example.py:999"):
            truth.resolve(cart_spectra)

    def test_id_must_be_statement(self, cart_spectra):
        truth = GroundTruth.parse("example.py::addToCart:4")
        with pytest.raises(UnresolvedTruthError):
            truth.resolve(cart_spectra)

    def test_ambiguous_location_unresolved(self):
        elements = [
            ProgramElement("s1", Kind.STATEMENT, "a.py", 5, 5),
            ProgramElement("s2", Kind.STATEMENT, "a.py", 5, 5),
        ]
        spectra = SpectraSet.from_bits(
            elements, [TestCase("t", Outcome.FAILED)], [[1, 1]]
        )
        with pytest.raises(UnresolvedTruthError, match="ambiguous"):
            GroundTruth.parse("a.py:5").resolve(spectra)


class TestEvaluate:
    def test_cart_line_eleven_hits_top_ten_under_all_metrics(self, cart_spectra):
        truth = GroundTruth.parse("example.py:11")
        verdicts = evaluate(cart_spectra, truth, DEFAULT_METRICS, (10,))
        assert len(verdicts) == 4
        for verdict in verdicts:
            assert verdict.hits[10] is True
            assert verdict.min_rank <= verdict.avg_rank <= verdict.max_rank

    def test_boundary_rank_eleven_misses_top_ten(self, boundary_spectra):
        truth = GroundTruth.parse("m.py:11")
        verdicts = evaluate(boundary_spectra, truth, DEFAULT_METRICS, (10, 11))
        for verdict in verdicts:
            assert verdict.min_rank == 11
            assert verdict.hits[10] is False
            assert verdict.hits[11] is True

    def test_hits_monotone_in_n(self, cart_spectra):
        truth = GroundTruth.parse(f"{FAULTY_LINE[0]}:{FAULTY_LINE[1]}")
        n_values = (1, 2, 3, 5, 8, 13, 18)
        for verdict in evaluate(cart_spectra, truth, DEFAULT_METRICS, n_values):
            hits = [verdict.hits[n] for n in n_values]
            assert hits == sorted(hits)  # False never follows True

    def test_top_ranked_element_always_hits_one(self, cart_spectra):
        ranked = rank_spectra(cart_spectra, TARANTULA, Kind.STATEMENT)
        best_id = ranked.entries[0].element_id
        truth = GroundTruth(element_ids=(best_id,))
        (verdict,) = evaluate(cart_spectra, truth, [TARANTULA], (1,))
        assert verdict.hits[1] is True

    def test_zero_ef_truth_lands_in_last_group(self, cart_spectra):
        # Line 10 is the never-executed guard, so its Ochiai score is 0.
        truth = GroundTruth.parse("example.py:10")
        (verdict,) = evaluate(cart_spectra, truth, [TARANTULA], (10,))
        assert verdict.max_rank == verdict.list_length

    def test_multiple_truth_entries_use_best(self, boundary_spectra):
        truth = GroundTruth.parse("m.py:29,m.py:1")
        (verdict,) = evaluate(boundary_spectra, truth, [TARANTULA], (10,))
        assert verdict.min_rank == 1
        assert verdict.hits[10] is True

    def test_deterministic(self, cart_spectra):
        truth = GroundTruth.parse("example.py:11")
        first = evaluate(cart_spectra, truth, DEFAULT_METRICS, (1, 3, 5, 10))
        second = evaluate(cart_spectra, truth, DEFAULT_METRICS, (1, 3, 5, 10))
        assert first == second

    def test_list_length_reported(self, cart_spectra):
        truth = GroundTruth.parse("example.py:11")
        (verdict,) = evaluate(cart_spectra, truth, [TARANTULA], (10,))
        assert verdict.list_length == len(cart_spectra.elements_of_kind(Kind.STATEMENT))
