import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import alpha_triples, channel_params, unit
from memqec.channel import (
    SYMMETRIC,
    ChannelParams,
    EnumerationTooLarge,
    alphas_from_ratios,
    chain_probabilities,
    conditional_prob,
    distribution_csv,
    enumerate_distribution,
    index_sequences,
    joint_prob,
    single_prob,
    total_probability,
)
from memqec.pauli import PauliString

FIG6 = alphas_from_ratios(5, 1, 25)


class TestParams:
    @pytest.mark.parametrize("kwargs", [{"p": -0.1}, {"p": 1.1}, {"p": 0.1, "mu": 2.0}, {"p": 0.1, "alphas": (0.5, 0.5, 0.5)}, {"p": 0.1, "alphas": (1.2, -0.1, -0.1)}, {"p": 0.1, "alphas": (0.5, 0.5)}])
    def test_rejects_invalid(self, kwargs):
        with pytest.raises(ValueError):
            ChannelParams(**kwargs)

    def test_symmetric_flag(self):
        assert ChannelParams(0.1).is_symmetric
        assert not ChannelParams(0.1, alphas=FIG6).is_symmetric

    def test_ratios(self):
        assert FIG6 == pytest.approx((5 / 31, 1 / 31, 25 / 31))

    def test_transition_rows_sum_to_one(self):
        t = ChannelParams(0.3, 0.4, FIG6).transition_matrix()
        np.testing.assert_allclose(t.sum(axis=1), 1.0, atol=1e-15)


class TestSingleAndConditional:
    def test_symmetric_x(self):
        assert single_prob(ChannelParams(0.3), 1) == pytest.approx(0.1)

    def test_asymmetric_z(self):
        assert single_prob(ChannelParams(0.04, alphas=FIG6), 3) == pytest.approx(0.0322580645, abs=1e-10)

    @given(channel_params())
    def test_single_normalized(self, params):
        assert math.fsum(single_prob(params, k) for k in range(4)) == pytest.approx(1.0, abs=1e-15)

    @given(channel_params(), st.integers(0, 3))
    def test_conditional_normalized(self, params, j):
        assert math.fsum(conditional_prob(params, k, j) for k in range(4)) == pytest.approx(1.0, abs=1e-15)

    @given(unit, alpha_triples(), st.integers(0, 3), st.integers(0, 3))
    def test_memoryless(self, p, alphas, k, j):
        params = ChannelParams(p, 0.0, alphas)
        assert conditional_prob(params, k, j) == single_prob(params, k)

    @given(unit, st.integers(0, 3))
    def test_full_memory_repeats(self, p, k):
        assert conditional_prob(ChannelParams(p, 1.0), k, k) == 1.0

    def test_worked_value(self):
        assert conditional_prob(ChannelParams(0.3, 0.5), 1, 1) == pytest.approx(0.55)


class TestJoint:
    def test_identity_uncorrelated(self):
        assert joint_prob(ChannelParams(0.1), [0] * 5) == pytest.approx(0.59049, abs=1e-15)

    @given(unit, unit)
    def test_identity_closed_form(self, p, mu):
        p00 = (1 - mu) * (1 - p) + mu
        assert joint_prob(ChannelParams(p, mu), [0] * 5) == pytest.approx((1 - p) * p00**4, abs=1e-15)

    @given(st.floats(0, 1), st.floats(0, 1), st.floats(0, 1))
    def test_identity_monotone_in_mu(self, p, mu1, mu2):
        lo, hi = sorted((mu1, mu2))
        assert joint_prob(ChannelParams(p, lo), [0] * 7) <= joint_prob(ChannelParams(p, hi), [0] * 7) + 1e-15

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            joint_prob(ChannelParams(0.1), [])

    @given(channel_params(), st.lists(st.integers(0, 3), min_size=1, max_size=8))
    def test_reversal_preserves_probability(self, params, seq):
        # p_j p(k|j) = p_k p(j|k): the chain satisfies detailed balance.
        assert joint_prob(params, seq[::-1]) == pytest.approx(joint_prob(params, seq), rel=1e-12, abs=1e-300)

    @given(channel_params())
    def test_reversal_with_equal_endpoint_weights(self, params):
        seq = [1, 0, 0, 3, 1]
        assert joint_prob(params, seq[::-1]) == pytest.approx(joint_prob(params, seq), rel=1e-12, abs=1e-300)

    def test_general_permutation_not_invariant(self):
        params = ChannelParams(0.3, 0.5)
        assert joint_prob(params, [1, 1, 0]) != pytest.approx(joint_prob(params, [1, 0, 1]))

    @given(channel_params(), st.lists(st.integers(0, 3), min_size=1, max_size=7))
    def test_vectorized_matches_scalar(self, params, seq):
        vec = chain_probabilities(params, np.array([seq]))[0]
        assert vec == pytest.approx(joint_prob(params, seq), rel=1e-13, abs=1e-300)


class TestEnumeration:
    @pytest.mark.parametrize("n", [5, 7])
    def test_counts_by_weight(self, n):
        seqs = index_sequences(n)
        assert len(seqs) == 4**n == sum(3**m * math.comb(n, m) for m in range(n + 1))
        counts = np.bincount(np.count_nonzero(seqs, axis=1), minlength=n + 1)
        assert counts.tolist() == [3**m * math.comb(n, m) for m in range(n + 1)]

    def test_lexicographic_qubit_one_first(self):
        seqs = index_sequences(2)
        assert seqs[:5].tolist() == [[0, 0], [0, 1], [0, 2], [0, 3], [1, 0]]

    def test_single_qubit_noiseless(self):
        dist = [(e, pr) for e, pr in enumerate_distribution(ChannelParams(0.0), 1) if pr > 0]
        assert dist == [(PauliString.identity(1), 1.0)]

    def test_too_large(self):
        with pytest.raises(EnumerationTooLarge, match="Monte Carlo"):
            index_sequences(11)

    @given(channel_params())
    def test_normalized(self, params):
        assert total_probability(enumerate_distribution(params, 5)) == pytest.approx(1.0, abs=1e-12)

    @given(unit, unit)
    def test_symmetric_alphas_identical(self, p, mu):
        a = chain_probabilities(ChannelParams(p, mu), index_sequences(5))
        b = chain_probabilities(ChannelParams(p, mu, SYMMETRIC), index_sequences(5))
        assert np.array_equal(a, b)

    def test_strings_follow_indices(self):
        dist = enumerate_distribution(ChannelParams(0.2, 0.3), 3)
        e, pr = dist[1 * 16 + 2 * 4 + 3]
        assert str(e) == "X1Y2Z3"
        assert pr == pytest.approx(joint_prob(ChannelParams(0.2, 0.3), [1, 2, 3]))

    def test_csv(self):
        text = distribution_csv(ChannelParams(0.1, 0.2), 2)
        lines = text.splitlines()
        assert lines[0] == "# schema=1" and lines[1] == "pauli,probability"
        assert len(lines) == 2 + 16
        name, value = lines[2].split(",")
        assert name == "I" and float(value) == joint_prob(ChannelParams(0.1, 0.2), [0, 0])
