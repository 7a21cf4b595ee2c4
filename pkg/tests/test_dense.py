import itertools

import numpy as np
import pytest
from hypothesis import given

from conftest import paulis
from memqec.codes import build_code, listed_generators
from memqec.dense import (
    PAULI_MATRICES,
    DenseState,
    build_codeword,
    check_kl_conditions,
    check_orthonormal_decomposition,
    check_stabilizer_fixing,
    check_syndrome_consistency,
    dense_pauli,
    dense_syndrome,
    kl_report_for_code,
    printed_codeword,
)
from memqec.pauli import PauliString

TOL = 1e-12


def P(n, text):
    return PauliString.parse(n, text)


def reverse(e):
    return PauliString.from_indices(e.indices()[::-1])


class TestPauliMatrices:
    def test_y_is_i_x_z(self):
        x, y, z = (PAULI_MATRICES[k] for k in "XYZ")
        np.testing.assert_allclose(y, 1j * x @ z)
        np.testing.assert_allclose(y, [[0, -1j], [1j, 0]])

    @given(paulis(3))
    def test_unitary_and_involutive(self, e):
        m = dense_pauli(e)
        np.testing.assert_allclose(m @ m.conj().T, np.eye(8), atol=TOL)
        np.testing.assert_allclose(m @ m, np.eye(8), atol=TOL)

    def test_qubit_one_is_leftmost_factor(self):
        # X on qubit 1 flips the most significant index bit.
        m = dense_pauli(P(3, "X1"))
        state = np.zeros(8)
        state[0] = 1
        assert np.argmax(np.abs(m @ state)) == 0b100


class TestCodewords:
    @pytest.mark.parametrize("name", ["five_qubit", "seven_qubit_set1"])
    def test_orthonormal(self, name):
        zero, one = build_codeword(name, 0), build_codeword(name, 1)
        assert zero.inner(zero) == pytest.approx(1, abs=TOL)
        assert one.inner(one) == pytest.approx(1, abs=TOL)
        assert abs(zero.inner(one)) < TOL

    def test_five_qubit_golden_amplitude(self):
        assert build_codeword("five_qubit", 0).amplitude("11110") == pytest.approx(-0.25, abs=TOL)

    @pytest.mark.parametrize("logical", [0, 1])
    def test_five_qubit_amplitudes_are_quarters(self, logical):
        support = build_codeword("five_qubit", logical).support()
        assert len(support) == 16
        assert all(abs(abs(v) - 0.25) < TOL for v in support.values())

    @pytest.mark.parametrize("logical", [0, 1])
    def test_seven_qubit_matches_printed_kets(self, logical):
        built = build_codeword("seven_qubit_set1", logical)
        printed = printed_codeword("seven_qubit_set1", logical)
        np.testing.assert_allclose(built.amplitudes, printed.amplitudes, atol=TOL)
        assert all(v.real == pytest.approx(1 / np.sqrt(8)) for v in built.support().values())

    @pytest.mark.parametrize("logical", [0, 1])
    def test_printed_five_qubit_shares_support_but_not_signs(self, logical):
        built = build_codeword("five_qubit", logical).support()
        printed = printed_codeword("five_qubit", logical).support()
        assert set(built) == set(printed)
        assert any(np.sign(built[k].real) != np.sign(printed[k].real) for k in built)

    def test_printed_five_qubit_fixed_by_relabelled_generators(self):
        # The printed kets belong to the generator list under qubit i -> 2i mod 5.
        def relabel(g):
            letters = [((2 * q) % 5 or 5, l) for q, l in g.letters()]
            return PauliString.from_letters(5, letters)

        gens = [relabel(g) for g in listed_generators(5)]
        printed = (printed_codeword("five_qubit", 0), printed_codeword("five_qubit", 1))
        assert check_stabilizer_fixing("five_qubit", gens, printed).passed
        assert not check_stabilizer_fixing("five_qubit", codewords=printed).passed

    def test_bad_logical(self):
        with pytest.raises(ValueError):
            build_codeword("five_qubit", 2)

    def test_state_validation(self):
        with pytest.raises(ValueError):
            DenseState(2, np.ones(3))
        with pytest.raises(ValueError):
            build_codeword("five_qubit", 0).amplitude("1111")


class TestStabilizerFixing:
    @pytest.mark.parametrize("name", ["five_qubit", "seven_qubit_set1"])
    def test_listed_generators(self, name):
        report = check_stabilizer_fixing(name)
        assert report.passed and report.max_deviation < TOL

    def test_five_qubit_generator_example(self):
        state = build_codeword("five_qubit", 0)
        out = dense_pauli(P(5, "X1Z2Z3X4")) @ state.amplitudes
        np.testing.assert_allclose(out, state.amplitudes, atol=TOL)

    def test_seven_qubit_generator_example(self):
        state = build_codeword("seven_qubit_set1", 1)
        out = dense_pauli(P(7, "Z4Z5Z6Z7")) @ state.amplitudes
        np.testing.assert_allclose(out, state.amplitudes, atol=TOL)

    def test_identity(self):
        assert check_stabilizer_fixing("five_qubit", [PauliString.identity(5)]).passed

    def test_five_qubit_registry_generators(self, five):
        assert check_stabilizer_fixing("five_qubit", five.generators).passed

    def test_seven_qubit_registry_generators_fix_reversed_states(self, set1):
        # The check-matrix generators are the listed ones read right to left.
        assert not check_stabilizer_fixing("seven_qubit_set1", set1.generators).passed
        assert check_stabilizer_fixing("seven_qubit_set1", [reverse(g) for g in set1.generators]).passed

    def test_failure_report(self):
        report = check_stabilizer_fixing("five_qubit", [P(5, "X1")])
        assert not report.passed
        assert report.failures[0][0] == "X1"


class TestKnillLaflamme:
    def test_five_qubit_passes(self):
        report = kl_report_for_code("five_qubit")
        assert report.passed and report.n_pairs == 256

    def test_set1_passes(self):
        report = kl_report_for_code("seven_qubit_set1")
        assert report.passed and report.n_pairs == 64 * 64

    def test_set2_fails_on_logical_z_triples(self):
        report = kl_report_for_code("seven_qubit_set2")
        assert not report.passed
        assert len(report.violations) == 42
        for v in report.violations:
            assert v.kind == "unequal_diagonal"
            prod = v.left * v.right
            assert prod.weight == 3 and set(str(prod)[::2]) == {"Z"}

    def test_weight_three_witness(self):
        report = check_kl_conditions("seven_qubit_set1", [PauliString.identity(7), P(7, "X1X2X3")])
        assert not report.passed
        overlaps = {(str(v.left), str(v.right), v.i, v.j): v.overlap for v in report.violations}
        assert overlaps["I", "X1X2X3", 0, 1] == pytest.approx(1.0, abs=TOL)

    def test_length_checked(self):
        with pytest.raises(ValueError):
            check_kl_conditions("five_qubit", [P(7, "X1")])

    def test_report_serializes(self):
        data = check_kl_conditions("seven_qubit_set1", [PauliString.identity(7), P(7, "X1X2X3")]).to_dict()
        assert data["n_violations"] == 4
        assert data["violations"][0]["overlap"][0] == pytest.approx(1.0)


class TestDecomposition:
    @pytest.mark.parametrize("name, dim", [("five_qubit", 32), ("seven_qubit_set1", 128)])
    def test_full_space(self, name, dim):
        report = check_orthonormal_decomposition(name, build_code(name).correctable_set)
        assert report.passed and report.n_vectors == report.dimension == dim


class TestSyndromeConsistency:
    @pytest.mark.parametrize("name", ["five_qubit", "seven_qubit_set1", "seven_qubit_set2"])
    def test_dense_matches_binary(self, name):
        assert check_syndrome_consistency(build_code(name, allow_collisions=True)).passed

    @given(paulis(5))
    def test_random_strings(self, e):
        from memqec.codes import syndrome_of

        five = build_code("five_qubit")
        assert dense_syndrome(five, e) == syndrome_of(five, e)
