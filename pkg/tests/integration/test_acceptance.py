"""
Acceptance suite: the network against enumeration, the Hamiltonian against
the ground state, entropies against the dense oracle and the large-t
exponents against the area deficits.

These runs enumerate every walk or every tiling of chains up to 2n = 8, so
they are marked slow; ``pytest -m "not slow"`` skips them.
"""

import csv
import io
import json
import math
import time
from fractions import Fraction

import numpy as np
import pytest

from rainbowtn.cli import EXIT_OK, main
from rainbowtn.core.hamiltonian import (
    apply,
    build_hamiltonian,
    ground_energy_and_kernel,
    spectral_gap,
    verify_frustration_free,
)
from rainbowtn.core.network import (
    contract,
    contract_to_mps,
    enumerate_valid_tilings,
    tiling_to_walk,
    walk_to_tiling,
)
from rainbowtn.core.observables import (
    correlation_G,
    deficit_envelope,
    deficit_law_check,
    expectation_C,
    exponent_fit,
    matched_probability,
    max_area_deficit,
    truncation_fidelity,
)
from rainbowtn.core.schemas import ChainModel
from rainbowtn.core.states import (
    build_ground_state,
    entanglement_entropy,
    entropy_profile,
    log_norm_sq,
    norm_sq,
    schmidt_spectrum_dense,
    von_neumann_entropy,
)
from rainbowtn.core.walks import count_walks, enumerate_walks, format_walk
from rainbowtn.core.walks.enumeration import shape_counts_by_pairs


def _bond_dimension(n, j, model, z):
    top = min(z, 2 * n - z)
    heights = range(top + 1)
    if model == ChainModel.fredkin:
        heights = [h for h in heights if h % 2 == z % 2]
    return sum(j**h for h in heights)


@pytest.mark.integration
class TestWalkCounts:
    """Known sequences and the color expansion"""

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_uncolored_counts(self, test_config, n):
        assert count_walks(n, 1) == test_config.MOTZKIN_COUNTS[n]
        assert count_walks(n, 1, ChainModel.fredkin) == test_config.FREDKIN_COUNTS[n]

    @pytest.mark.parametrize("model", [ChainModel.motzkin, ChainModel.fredkin])
    @pytest.mark.parametrize("n,j", [(3, 2), (4, 3), (6, 2)])
    def test_colored_counts_expand_shapes(self, model, n, j):
        shapes = shape_counts_by_pairs(n, model)
        assert count_walks(n, j, model) == sum(c * j**p for p, c in shapes.items())

    @pytest.mark.parametrize("model", [ChainModel.motzkin, ChainModel.fredkin])
    def test_enumeration_matches_count(self, model):
        walks = [format_walk(w) for w in enumerate_walks(4, 2, model)]
        assert len(walks) == len(set(walks)) == count_walks(4, 2, model)


@pytest.mark.integration
@pytest.mark.slow
class TestTilingIsomorphism:
    """Valid tilings are in bijection with walks"""

    @pytest.mark.parametrize("model", [ChainModel.motzkin, ChainModel.fredkin])
    @pytest.mark.parametrize("n,j", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2)])
    def test_bijection(self, model, n, j):
        tilings = list(enumerate_valid_tilings(n, j, model))
        walks = {format_walk(w) for w in enumerate_walks(n, j, model)}
        assert len(tilings) == len(walks)
        assert {format_walk(tiling_to_walk(t)) for t in tilings} == walks
        for tiling in tilings:
            assert walk_to_tiling(tiling_to_walk(tiling)) == tiling

    @pytest.mark.parametrize("model", [ChainModel.motzkin, ChainModel.fredkin])
    def test_tiling_weights_give_amplitudes(self, model):
        state = build_ground_state(3, 2, model)
        for tiling in enumerate_valid_tilings(3, 2, model):
            walk = tiling_to_walk(tiling)
            assert state.amplitude(walk).power == tiling.weight_power()


@pytest.mark.integration
@pytest.mark.slow
class TestContractionExactness:
    """Contraction reproduces t**A(w) on every walk"""

    @pytest.mark.parametrize("model", [ChainModel.motzkin, ChainModel.fredkin])
    @pytest.mark.parametrize("n,j", [(1, 1), (2, 3), (3, 2), (3, 3), (4, 1), (4, 2)])
    def test_symbolic(self, model, n, j):
        assert contract(n, j, model).same_amplitudes(build_ground_state(n, j, model))

    @pytest.mark.parametrize("t", [Fraction(1, 3), Fraction(5, 2)])
    def test_exact_norm(self, t):
        state = contract(4, 2, ChainModel.motzkin, t)
        assert state.norm_sq() == norm_sq(4, 2, ChainModel.motzkin, t)

    @pytest.mark.parametrize("model", [ChainModel.motzkin, ChainModel.fredkin])
    def test_float_log_norm(self, model):
        state = contract(4, 2, model, 3.0)
        assert state.log_norm_sq() == pytest.approx(log_norm_sq(4, 2, model, 3.0), rel=1e-12)

    @pytest.mark.parametrize("model", [ChainModel.motzkin, ChainModel.fredkin])
    @pytest.mark.parametrize("n,j", [(3, 2), (4, 1), (4, 3)])
    def test_mps(self, model, n, j):
        mps = contract_to_mps(n, j, model)
        assert mps.bond_dimensions == [
            _bond_dimension(n, j, model, z) for z in range(1, 2 * n)
        ]
        assert mps.expand().same_amplitudes(contract(n, j, model))


@pytest.mark.integration
@pytest.mark.slow
class TestParentHamiltonian:
    """The ground state is the unique frustration-free zero mode"""

    @pytest.mark.parametrize("n,j", [(2, 1), (2, 2), (3, 1), (3, 2)])
    @pytest.mark.parametrize("t", [0.5, 1.0, 2.0])
    def test_unique_zero_mode(self, n, j, t):
        h = build_hamiltonian(n, j, t)
        state = contract(n, j, ChainModel.motzkin, t)
        energy, kernel = ground_energy_and_kernel(h)
        assert energy == pytest.approx(0.0, abs=1e-9)
        assert kernel == 1
        assert spectral_gap(h) > 1e-6
        assert np.linalg.norm(apply(h, state.normalize())) <= 1e-10
        assert verify_frustration_free(h, state).max_residual <= 1e-10


@pytest.mark.integration
@pytest.mark.slow
class TestEntanglement:
    """Transfer-matrix entropies"""

    @pytest.mark.parametrize("model", [ChainModel.motzkin, ChainModel.fredkin])
    @pytest.mark.parametrize("n,j", [(2, 1), (3, 2), (4, 2)])
    @pytest.mark.parametrize("t", [Fraction(1, 2), Fraction(1), 3.0])
    def test_profile_equals_dense_oracle(self, test_config, model, n, j, t):
        state = build_ground_state(n, j, model, t)
        profile = entropy_profile(n, j, model, t)
        for z, value in enumerate(profile, start=1):
            oracle = von_neumann_entropy(schmidt_spectrum_dense(state, z))
            assert value == pytest.approx(oracle, abs=test_config.ORACLE_TOLERANCE)

    @pytest.mark.parametrize(
        "t,tolerance",
        [
            (10.0, 0.05),
            (100.0, 0.01),
        ],
    )
    def test_rainbow_limit(self, t, tolerance):
        # one color bit per half-chain pair once the rainbow dominates
        s = entanglement_entropy(6, 2, ChainModel.motzkin, t)
        assert abs(s - 6 * math.log(2)) <= tolerance

    def test_area_law_below_one(self):
        small = entanglement_entropy(6, 2, ChainModel.motzkin, 0.5)
        large = entanglement_entropy(8, 2, ChainModel.motzkin, 0.5)
        assert abs(large - small) <= 0.01

    def test_sublinear_growth_at_one(self):
        values = [
            entanglement_entropy(n, 1, ChainModel.motzkin, 1.0) / n for n in range(4, 13)
        ]
        assert values == sorted(values, reverse=True)
        assert len(set(values)) == len(values)

    def test_linear_growth_above_one(self):
        values = [entanglement_entropy(n, 2, ChainModel.motzkin, 5.0) for n in (4, 8, 12)]
        slopes = [b - a for a, b in zip(values, values[1:])]
        assert all(s == pytest.approx(4 * math.log(2), abs=0.1) for s in slopes)

    def test_long_chain(self):
        start = time.perf_counter()
        entropy = entanglement_entropy(200, 2, ChainModel.motzkin, 1.1)
        assert time.perf_counter() - start < 10
        assert 0 < entropy < 200 * math.log(2)
        assert math.isfinite(log_norm_sq(200, 2, ChainModel.motzkin, 10.0))

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_log_domain_agrees_with_exact(self, n):
        exact = entanglement_entropy(n, 2, ChainModel.motzkin, Fraction(11, 10))
        assert entanglement_entropy(n, 2, ChainModel.motzkin, 1.1) == pytest.approx(
            exact, abs=1e-8
        )


@pytest.mark.integration
@pytest.mark.slow
class TestLargeTCorrelations:
    """Exponents and area deficits"""

    @pytest.mark.parametrize("model", [ChainModel.motzkin, ChainModel.fredkin])
    def test_correlation_is_matched_probability(self, model):
        t = Fraction(2)
        state = build_ground_state(4, 2, model, t)
        assert all(expectation_C(state, x) == 0 for x in range(1, 9))
        for x1 in range(1, 9):
            for x2 in range(x1 + 1, 9):
                assert correlation_G(state, x1, x2) == matched_probability(
                    4, 2, model, t, x1, x2
                )

    def test_envelope_equals_brute_force(self):
        for n in (4, 6):
            for x1 in range(1, 2 * n + 1):
                for x2 in range(x1 + 1, 2 * n + 1):
                    assert deficit_envelope(n, x1, x2) == max_area_deficit(n, x1=x1, x2=x2)

    def test_envelope_equals_transfer_deficit(self):
        n = 7
        for x1 in range(1, 2 * n + 1):
            for x2 in range(x1 + 1, 2 * n + 1):
                assert deficit_envelope(n, x1, x2) == max_area_deficit(n, x1=x1, x2=x2)

    def test_law_exceptions(self):
        report = deficit_law_check(4)
        exceptions = {(e.x1, e.x2): (e.deficit, e.law) for e in report.exceptions}
        assert exceptions[(1, 3)] == (8, 10)
        assert exceptions[(2, 4)] == (5, 6)
        assert (3, 5) in {(e.x1, e.x2) for e in report.matches}

    @pytest.mark.parametrize("x1,x2", [(1, 3), (2, 4), (1, 4)])
    def test_exponent_tracks_twice_the_deficit(self, x1, x2):
        fit = exponent_fit(4, 2, 100.0, x1, x2)
        assert abs(fit - 2 * max_area_deficit(4, x1=x1, x2=x2)) <= 0.2

    def test_fredkin_even_separation_is_never_matched(self):
        assert math.isinf(max_area_deficit(4, ChainModel.fredkin, 1, 3))
        assert max_area_deficit(4, ChainModel.fredkin, 1, 8) == 0


@pytest.mark.integration
@pytest.mark.slow
class TestTruncation:
    """Few-walk approximants at the two ends of the t axis"""

    def test_small_t(self):
        grid = [0.05, 0.1, 0.2, 0.4]
        values = [truncation_fidelity(4, 2, t, "small_t") for t in grid]
        assert values[0] >= 0.999
        assert values == sorted(values, reverse=True)

    def test_large_t(self):
        grid = [2.0, 4.0, 10.0]
        values = [truncation_fidelity(4, 2, t, "large_t") for t in grid]
        assert values[2] >= 0.99
        assert values == sorted(values)


@pytest.mark.integration
class TestCommandLine:
    """End-to-end runs through the console entry point"""

    def test_verify(self, capsys):
        assert main(["verify", "--n", "3", "--colors", "2", "--t", "3/2"]) == EXIT_OK
        assert capsys.readouterr().out == "PASS\n"

    def test_entropy_sweep_file(self, output_dir):
        path = output_dir / "sweep.csv"
        status = main(
            [
                "entropy",
                "--colors",
                "2",
                "--n",
                "4",
                "--t-grid",
                "0.25,0.5,1,2,4,10",
                "--out",
                str(path),
            ]
        )
        rows = list(csv.DictReader(io.StringIO(path.read_text())))
        assert status == EXIT_OK
        assert [row["t"] for row in rows] == ["0.25", "0.5", "1", "2", "4", "10"]
        values = [float(row["value"]) for row in rows]
        assert values[0] < values[-1]
        assert values[-1] == pytest.approx(4 * math.log(2), abs=0.05)
        assert all(row["cut"] == "4" for row in rows)

    def test_state_and_contract_agree(self, capsys):
        main(["state", "--n", "3", "--colors", "2", "--t", "2"])
        enumerated = json.loads(capsys.readouterr().out)
        main(["contract", "--n", "3", "--colors", "2", "--t", "2"])
        contracted = json.loads(capsys.readouterr().out)
        assert contracted["amplitudes"] == enumerated["amplitudes"]
        assert contracted["norm_sq"] == enumerated["norm_sq"]
        assert contracted["bond_dimensions"] == [3, 7, 15, 7, 3]
