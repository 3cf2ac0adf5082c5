"""
Unit tests for color correlations, area deficits, truncated approximants and
entropy sweeps.
"""

import math
from fractions import Fraction

import pytest

from rainbowtn.core.exceptions import (
    InvalidParameterError,
    ModelMismatchError,
    ResourceCapError,
)
from rainbowtn.core.observables import (
    ColorOperatorSpec,
    centered_site,
    correlation_G,
    correlation_records,
    deficit_envelope,
    deficit_law,
    deficit_law_check,
    entropy_sweep,
    expectation_C,
    exponent_fit,
    log_matched_probability,
    matched_probability,
    max_area_deficit,
    sweep_grid,
    truncated_state,
    truncation_fidelity,
    window_areas,
    write_sweep_csv,
)
from rainbowtn.core.schemas import ArithmeticMode, ChainModel, CutRule, TruncationWindow
from rainbowtn.core.states import build_ground_state
from rainbowtn.core.walks import format_walk, parse_walk


@pytest.mark.unit
class TestColorCorrelations:
    """Unit tests for <C>, G and the matched-pair identity"""

    def test_color_operator_values(self):
        operator = ColorOperatorSpec()
        assert operator.color(parse_walk("U1 D1")[0]) == -1
        assert operator.color(parse_walk("U2 D2")[1]) == 1
        assert operator.color(parse_walk("F F")[0]) == 0

    def test_color_operator_needs_two_colors(self):
        with pytest.raises(InvalidParameterError):
            ColorOperatorSpec(j=1)
        with pytest.raises(InvalidParameterError):
            expectation_C(build_ground_state(1, 1, t=1), 1)

    @pytest.mark.parametrize("model", [ChainModel.motzkin, ChainModel.fredkin])
    def test_expectation_vanishes_exactly(self, model):
        state = build_ground_state(2, 2, model, Fraction(1, 2))
        assert all(expectation_C(state, x) == 0 for x in range(1, 5))

    @pytest.mark.parametrize("t", [Fraction(1, 2), Fraction(1), Fraction(3)])
    def test_two_site_closed_form(self, t):
        state = build_ground_state(1, 2, t=t)
        expected = 2 * t**2 / (1 + 2 * t**2)
        assert correlation_G(state, 1, 2) == expected
        assert matched_probability(1, 2, ChainModel.motzkin, t, 1, 2) == expected

    @pytest.mark.parametrize("model", [ChainModel.motzkin, ChainModel.fredkin])
    @pytest.mark.parametrize("t", [Fraction(1, 2), Fraction(1), Fraction(2)])
    def test_correlation_equals_matched_probability(self, model, t):
        n = 3
        state = build_ground_state(n, 2, model, t)
        for x1 in range(1, 2 * n + 1):
            for x2 in range(x1 + 1, 2 * n + 1):
                assert correlation_G(state, x1, x2) == matched_probability(
                    n, 2, model, t, x1, x2
                )

    def test_float_matched_probability(self):
        exact = matched_probability(3, 2, ChainModel.motzkin, Fraction(3, 2), 2, 5)
        approx = matched_probability(3, 2, ChainModel.motzkin, 1.5, 2, 5)
        assert approx == pytest.approx(float(exact), rel=1e-12)

    def test_correlation_needs_ordered_sites(self):
        state = build_ground_state(1, 2, t=1)
        with pytest.raises(InvalidParameterError):
            correlation_G(state, 2, 1)
        with pytest.raises(InvalidParameterError):
            correlation_G(state, 1, 3)

    def test_correlation_dense_cap(self, tight_limits):
        state = build_ground_state(2, 2, t=1)
        with pytest.raises(ResourceCapError):
            correlation_G(state, 1, 2, limits=tight_limits)

    def test_matched_probability_needs_positive_t(self):
        with pytest.raises(InvalidParameterError):
            matched_probability(2, 2, ChainModel.motzkin, 0, 1, 2)

    def test_unmatchable_fredkin_pair(self):
        assert matched_probability(2, 2, ChainModel.fredkin, Fraction(1), 1, 3) == 0
        assert log_matched_probability(2, 2, ChainModel.fredkin, 2.0, 1, 3) == -math.inf

    def test_log_matched_probability_at_large_t(self):
        value = log_matched_probability(40, 2, ChainModel.motzkin, 1e6, 1, 80)
        assert value <= 0.0
        assert math.isfinite(value)

    def test_records(self):
        records = correlation_records(2, 2, ChainModel.motzkin, Fraction(2))
        assert [(r.x1, r.x2) for r in records] == [
            (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)
        ]
        by_pair = {(r.x1, r.x2): r for r in records}
        assert by_pair[(1, 4)].area_deficit == 0
        assert by_pair[(1, 3)].area_deficit == 2
        assert by_pair[(1, 4)].value == by_pair[(1, 4)].matched_probability

    def test_fredkin_records_skip_unmatchable_deficits(self):
        records = correlation_records(2, 2, ChainModel.fredkin, 2.0)
        by_pair = {(r.x1, r.x2): r for r in records}
        assert by_pair[(1, 3)].area_deficit is None
        assert by_pair[(1, 3)].value == 0.0
        assert by_pair[(1, 2)].area_deficit is not None

    def test_exponent_fit_of_the_outer_pair(self):
        fit = exponent_fit(2, 2, 100, 1, 4)
        assert 0.0 <= fit < 0.1

    @pytest.mark.parametrize("t", [1, 0.5])
    def test_exponent_fit_needs_large_t(self, t):
        with pytest.raises(InvalidParameterError):
            exponent_fit(2, 2, t, 1, 4)

    def test_exponent_fit_of_unmatchable_pair(self):
        with pytest.raises(InvalidParameterError):
            exponent_fit(2, 2, 10, 1, 3, ChainModel.fredkin)


@pytest.mark.unit
class TestAreaDeficit:
    """Unit tests for area deficits and the centered-square law"""

    @pytest.mark.parametrize(
        "n,x1,x2,expected",
        [
            (2, 1, 4, 0),
            (2, 1, 3, 2),
            (2, 2, 4, 2),
            (2, 1, 2, 2),
            (4, 1, 3, 8),
            (4, 2, 4, 5),
            (4, 3, 5, 2),
            (4, 1, 8, 0),
        ],
    )
    def test_motzkin_deficits(self, n, x1, x2, expected):
        assert max_area_deficit(n, ChainModel.motzkin, x1, x2) == expected

    def test_fredkin_even_separation_is_unmatchable(self):
        assert max_area_deficit(2, ChainModel.fredkin, 1, 3) == math.inf
        assert max_area_deficit(2, ChainModel.fredkin, 1, 4) == 0

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_envelope_matches_enumeration(self, n):
        for x1 in range(1, 2 * n + 1):
            for x2 in range(x1 + 1, 2 * n + 1):
                assert deficit_envelope(n, x1, x2) == max_area_deficit(
                    n, ChainModel.motzkin, x1, x2
                )

    def test_transfer_path_matches_enumeration(self):
        # 2n = 14 is past the exhaustive cutoff
        n = 7
        for x1, x2 in [(1, 3), (2, 4), (6, 8), (1, 14), (3, 10)]:
            assert max_area_deficit(n, ChainModel.motzkin, x1, x2) == deficit_envelope(
                n, x1, x2
            )

    def test_pair_out_of_range(self):
        with pytest.raises(InvalidParameterError):
            max_area_deficit(2, ChainModel.motzkin, 3, 3)
        with pytest.raises(InvalidParameterError):
            max_area_deficit(2, ChainModel.motzkin, 1, 5)

    def test_centered_coordinates(self):
        assert centered_site(2, 1) == Fraction(-3, 2)
        assert centered_site(2, 4) == Fraction(3, 2)
        assert deficit_law(4, 1, 3) == 10

    def test_law_holds_on_the_smallest_chain(self):
        report = deficit_law_check(2)
        assert [(e.x1, e.x2) for e in report.entries] == [(1, 3), (2, 4)]
        assert not report.exceptions

    def test_law_exceptions_are_reported(self):
        report = deficit_law_check(4)
        exceptions = {(e.x1, e.x2): (e.deficit, e.law) for e in report.exceptions}
        assert exceptions[(1, 3)] == (8.0, 10.0)
        assert exceptions[(2, 4)] == (5.0, 6.0)
        assert (3, 5) in {(e.x1, e.x2) for e in report.matches}

    def test_fredkin_law_check_has_no_entries(self):
        assert deficit_law_check(3, ChainModel.fredkin).entries == []


@pytest.mark.unit
class TestTruncation:
    """Unit tests for the small-t and large-t approximants"""

    def test_window_areas(self):
        assert window_areas(3, TruncationWindow.small_t) == {0, 1}
        assert window_areas(3, TruncationWindow.large_t) == {9, 8}

    def test_small_t_support(self):
        state = truncated_state(2, 1, t=Fraction(1, 10), window=TruncationWindow.small_t)
        assert {format_walk(w) for w in state.walks()} == {
            "F F F F",
            "U1 D1 F F",
            "F U1 D1 F",
            "F F U1 D1",
        }
        assert state.normalized

    def test_large_t_support(self):
        state = truncated_state(2, 1, t=Fraction(10), window=TruncationWindow.large_t)
        assert {format_walk(w) for w in state.walks()} == {"U1 U1 D1 D1", "U1 F F D1"}

    def test_fredkin_is_rejected(self):
        with pytest.raises(ModelMismatchError):
            truncated_state(2, 1, ChainModel.fredkin, t=Fraction(2))

    def test_fidelity_is_exact_and_below_one(self):
        value = truncation_fidelity(2, 1, Fraction(1, 10), TruncationWindow.small_t)
        assert isinstance(value, Fraction)
        assert Fraction(9, 10) < value < 1

    def test_small_t_fidelity_improves_as_t_shrinks(self):
        ts = [0.4, 0.2, 0.1, 0.05]
        losses = [1 - truncation_fidelity(3, 2, t, "small_t") for t in ts]
        assert losses == sorted(losses, reverse=True)

    def test_large_t_fidelity_improves_as_t_grows(self):
        ts = [2.0, 4.0, 10.0]
        losses = [1 - truncation_fidelity(3, 2, t, "large_t") for t in ts]
        assert losses == sorted(losses, reverse=True)


@pytest.mark.unit
class TestSweeps:
    """Unit tests for entropy sweeps and their CSV table"""

    def test_grid_order(self):
        grid = sweep_grid([ChainModel.motzkin], [1, 2], [2], [0.5, 1.0])
        assert [(p.n, p.t) for p in grid] == [(1, 0.5), (1, 1.0), (2, 0.5), (2, 1.0)]
        assert all(p.mode == ArithmeticMode.float for p in grid)

    def test_half_chain_rows(self):
        rows = entropy_sweep(sweep_grid([ChainModel.motzkin], [1, 2], [2], [1.0]))
        assert [(r.n, r.cut) for r in rows] == [(1, 1), (2, 2)]
        assert rows[0].value == pytest.approx(math.log(3.0))

    def test_all_cuts_and_bits(self):
        rows = entropy_sweep(
            sweep_grid([ChainModel.motzkin], [1], [2], [1.0]), cut=CutRule.all, bits=True
        )
        assert len(rows) == 1
        assert rows[0].quantity == "entropy_bits"
        assert rows[0].value == pytest.approx(math.log2(3.0))

    def test_profile_rows(self):
        rows = entropy_sweep(sweep_grid([ChainModel.fredkin], [3], [1], [2.0]), cut="all")
        assert [r.cut for r in rows] == [1, 2, 3, 4, 5]

    def test_failed_point_becomes_error_row(self):
        points = sweep_grid([ChainModel.fredkin, ChainModel.motzkin], [2], [1], [0.0])
        rows = entropy_sweep(points)
        assert rows[0].error is not None
        assert rows[0].value is None
        assert rows[1].error is None
        assert rows[1].value == pytest.approx(0.0)

    def test_csv(self, tmp_path):
        rows = entropy_sweep(sweep_grid([ChainModel.motzkin], [1], [2], [1.0]))
        path = tmp_path / "sweep.csv"
        text = write_sweep_csv(rows, str(path))
        lines = text.splitlines()
        assert lines[0] == "model,n,j,t,cut,quantity,value,mode"
        assert lines[1].startswith("motzkin,1,2,1,1,entropy,1.09861228866811")
        assert lines[1].endswith(",float")
        assert path.read_text() == text

    def test_csv_keeps_failed_rows_empty(self):
        rows = entropy_sweep(sweep_grid([ChainModel.fredkin], [1], [1], [0.0]))
        line = write_sweep_csv(rows).splitlines()[1]
        assert line.split(",")[6] == ""
