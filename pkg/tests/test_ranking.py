"""Rank assignment, tie strategies, hierarchy building, and top-N cuts."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from charmfl import (
    Kind,
    MissingGranularityError,
    Outcome,
    ProgramElement,
    Score,
    SpectraSet,
    TARANTULA,
    TestCase,
    TieStrategy,
    assign_ranks,
    build_hierarchical,
    rank_spectra,
    top_n,
)

EXAMPLE_SCORES = {"a": 0.7, "b": 0.5, "c": 0.5, "d": 0.0}


def as_scores(values: dict[str, float]) -> dict[str, Score]:
    return {eid: Score(v, TARANTULA) for eid, v in values.items()}


def ranks_of(values: dict[str, float], tie: TieStrategy) -> dict[str, float]:
    return {e.element_id: e.rank for e in assign_ranks(as_scores(values), tie)}


class TestAssignRanks:
    def test_min_strategy(self):
        assert ranks_of(EXAMPLE_SCORES, TieStrategy.MIN) == {"a": 1, "b": 2, "c": 2, "d": 4}

    def test_max_strategy(self):
        assert ranks_of(EXAMPLE_SCORES, TieStrategy.MAX) == {"a": 1, "b": 3, "c": 3, "d": 4}

    def test_average_strategy(self):
        assert ranks_of(EXAMPLE_SCORES, TieStrategy.AVERAGE) == {
            "a": 1,
            "b": 2.5,
            "c": 2.5,
            "d": 4,
        }

    def test_entries_sorted_descending(self):
        entries = assign_ranks(as_scores(EXAMPLE_SCORES), TieStrategy.MIN)
        values = [e.score.value for e in entries]
        assert values == sorted(values, reverse=True)

    def test_empty_scores_rejected(self):
        with pytest.raises(ValueError):
            assign_ranks({}, TieStrategy.MIN)

    def test_equal_scores_share_rank(self):
        ranks = ranks_of(EXAMPLE_SCORES, TieStrategy.AVERAGE)
        assert ranks["b"] == ranks["c"]


score_lists = st.lists(
    st.integers(0, 1000).map(lambda n: n / 1000), min_size=1, max_size=40
)


class TestRankProperties:
    @given(score_lists)
    def test_min_le_average_le_max(self, values):
        scores = as_scores({f"e{i}": v for i, v in enumerate(values)})
        by_mode = {
            mode: {e.element_id: e.rank for e in assign_ranks(scores, mode)}
            for mode in TieStrategy
        }
        for eid in scores:
            assert (
                by_mode[TieStrategy.MIN][eid]
                <= by_mode[TieStrategy.AVERAGE][eid]
                <= by_mode[TieStrategy.MAX][eid]
            )

    @given(score_lists)
    def test_average_ranks_sum_to_gauss(self, values):
        scores = as_scores({f"e{i}": v for i, v in enumerate(values)})
        total = sum(e.rank for e in assign_ranks(scores, TieStrategy.AVERAGE))
        n = len(values)
        assert total == pytest.approx(n * (n + 1) / 2)

    @given(score_lists, st.sampled_from(["affine", "cube", "exp"]))
    def test_monotone_transform_keeps_ranks(self, values, transform):
        import math

        maps = {
            "affine": lambda v: 3.0 * v + 1.0,
            "cube": lambda v: v**3,
            "exp": lambda v: math.exp(v),
        }
        scores = {f"e{i}": v for i, v in enumerate(values)}
        transformed = {eid: maps[transform](v) for eid, v in scores.items()}
        for mode in TieStrategy:
            original = assign_ranks(as_scores(scores), mode)
            mapped = assign_ranks(as_scores(transformed), mode)
            assert [e.element_id for e in original] == [e.element_id for e in mapped]
            assert [e.rank for e in original] == [e.rank for e in mapped]

    @given(score_lists, st.randoms(use_true_random=False))
    def test_input_permutation_never_changes_ranks(self, values, rng):
        scores = {f"e{i}": v for i, v in enumerate(values)}
        shuffled_ids = list(scores)
        rng.shuffle(shuffled_ids)
        permuted = {eid: scores[eid] for eid in shuffled_ids}
        original = {e.element_id: e.rank for e in assign_ranks(as_scores(scores), TieStrategy.MIN)}
        again = {e.element_id: e.rank for e in assign_ranks(as_scores(permuted), TieStrategy.MIN)}
        assert original == again


def two_method_spectra(high_score_method_fails: bool = True) -> SpectraSet:
    """Two methods, three statements each; one method clearly suspect."""
    elements = [
        ProgramElement("mA", Kind.METHOD, "a.py", 1, 9, display_name="alpha"),
        ProgramElement("mB", Kind.METHOD, "a.py", 20, 29, display_name="beta"),
    ]
    for i in range(3):
        elements.append(ProgramElement(f"a{i}", Kind.STATEMENT, "a.py", 2 + i, 2 + i, "mA"))
    for i in range(3):
        elements.append(ProgramElement(f"b{i}", Kind.STATEMENT, "a.py", 21 + i, 21 + i, "mB"))
    tests = [TestCase("fail", Outcome.FAILED), TestCase("pass", Outcome.PASSED)]
    # The failing test runs only alpha, the passing test only beta.
    bits = [
        [1, 1, 1, 0, 0, 0],
        [0, 0, 0, 1, 1, 1],
    ]
    return SpectraSet.from_bits(elements, tests, bits)


class TestHierarchy:
    def test_cart_top_group_contains_add_to_cart(self, cart_spectra):
        ranked = rank_spectra(cart_spectra, TARANTULA, Kind.METHOD)
        top_rank = ranked.entries[0].rank
        top_group = {
            cart_spectra.element_by_id[e.element_id].display_name
            for e in ranked.entries
            if e.rank == top_rank
        }
        assert "addToCart" in top_group

    def test_single_path_tree(self):
        elements = [
            ProgramElement("C", Kind.CLASS, "a.py", 1, 99, display_name="Only"),
            ProgramElement("m", Kind.METHOD, "a.py", 2, 9, "C", "only"),
            ProgramElement("s1", Kind.STATEMENT, "a.py", 3, 3, "m"),
            ProgramElement("s2", Kind.STATEMENT, "a.py", 4, 4, "m"),
        ]
        tests = [TestCase("f", Outcome.FAILED)]
        spectra = SpectraSet.from_bits(elements, tests, [[1, 1]])
        ranked = rank_spectra(spectra, TARANTULA, Kind.STATEMENT)
        assert ranked.hierarchy is not None
        (root,) = ranked.hierarchy
        assert root.element.id == "C"
        (method,) = root.children
        leaf_ids = [leaf.element.id for leaf in method.children]
        flat_ids = [e.element_id for e in ranked.entries]
        assert leaf_ids == flat_ids

    def test_high_ranked_method_statements_come_first(self):
        spectra = two_method_spectra()
        ranked = rank_spectra(spectra, TARANTULA, Kind.STATEMENT)
        order = [n.element.id for n in ranked.iter_hierarchy() if n.element.kind is Kind.STATEMENT]
        # Every statement of the suspect method precedes every statement of
        # the clean one, whatever the statement scores say individually.
        assert order[:3] == ["a0", "a1", "a2"]
        assert set(order[3:]) == {"b0", "b1", "b2"}

    def test_hierarchy_visits_each_statement_once(self, cart_spectra):
        ranked = rank_spectra(cart_spectra, TARANTULA, Kind.STATEMENT)
        visited = [n.element.id for n in ranked.iter_hierarchy() if n.element.kind is Kind.STATEMENT]
        assert sorted(visited) == sorted(e.id for e in cart_spectra.elements_of_kind(Kind.STATEMENT))
        assert len(visited) == len(set(visited))

    def test_missing_level_scores_rejected(self, cart_spectra):
        ranked = rank_spectra(cart_spectra, TARANTULA, Kind.STATEMENT)
        statement_entries = {Kind.STATEMENT: list(ranked.entries)}
        with pytest.raises(MissingGranularityError, match="method"):
            build_hierarchical(statement_entries, cart_spectra)

    def test_flat_spectra_have_no_hierarchy(self, boundary_spectra):
        ranked = rank_spectra(boundary_spectra, TARANTULA, Kind.STATEMENT)
        assert ranked.hierarchy is None


class TestTopN:
    def test_n_beyond_length_keeps_everything(self, cart_spectra):
        ranked = rank_spectra(cart_spectra, TARANTULA, Kind.METHOD)
        assert len(top_n(ranked, 10).entries) == 4

    def test_boundary_tie_group_kept_in_full(self):
        entries = assign_ranks(as_scores(EXAMPLE_SCORES), TieStrategy.MIN)
        ranked_list = rank_spectra_like(entries)
        cut = top_n(ranked_list, 2)
        assert [e.element_id for e in cut.entries] == ["a", "b", "c"]

    def test_top_one_with_distinct_scores(self):
        scores = as_scores({"a": 0.9, "b": 0.5, "c": 0.1})
        ranked_list = rank_spectra_like(assign_ranks(scores, TieStrategy.MIN))
        cut = top_n(ranked_list, 1)
        assert [e.element_id for e in cut.entries] == ["a"]

    def test_bad_n_rejected(self, cart_spectra):
        ranked = rank_spectra(cart_spectra, TARANTULA, Kind.METHOD)
        with pytest.raises(ValueError):
            top_n(ranked, 0)


def rank_spectra_like(entries):
    from charmfl import RankedList

    return RankedList(TARANTULA, Kind.STATEMENT, TieStrategy.MIN, tuple(entries), None)


class TestRandomizedStrategies:
    def test_five_hundred_random_lists(self):
        # Seeded sweep across list shapes; mirrors the property suite above
        # with plain random data.
        rng = random.Random(1234)
        for _ in range(500):
            n = rng.randint(1, 30)
            values = {f"e{i}": rng.choice([0.0, 0.1, 0.25, 0.5, 0.5, 0.7, 1.0]) for i in range(n)}
            scores = as_scores(values)
            per_mode = {mode: assign_ranks(scores, mode) for mode in TieStrategy}
            by_id = {
                mode: {e.element_id: e.rank for e in entries}
                for mode, entries in per_mode.items()
            }
            for eid in values:
                assert (
                    by_id[TieStrategy.MIN][eid]
                    <= by_id[TieStrategy.AVERAGE][eid]
                    <= by_id[TieStrategy.MAX][eid]
                )
            transformed = as_scores({eid: 2.0 * v + 5.0 for eid, v in values.items()})
            assert [e.element_id for e in assign_ranks(transformed, TieStrategy.MIN)] == [
                e.element_id for e in per_mode[TieStrategy.MIN]
            ]
