import pytest
from hypothesis import given, strategies as st

from conftest import alpha_triples, unit
from memqec.channel import ChannelParams
from memqec.closed_forms import (
    FIVE_SYMMETRIC,
    SET1_SYMMETRIC,
    SET2_SYMMETRIC,
    NoClosedForm,
    _poly,
    closed_form,
    five_qubit_compact,
    has_closed_form,
    set1_compact,
    set2_asymmetric,
    set2_asymmetric_compact,
    set2_compact,
    set_difference_identity,
)
from fractions import Fraction

FIG6 = (5 / 31, 1 / 31, 25 / 31)


def poly5(p):
    return 4 * p**5 - 15 * p**4 + 20 * p**3 - 10 * p**2 + 1


def poly7(p):
    return (4 / 3) * p**7 - (35 / 3) * p**6 + (112 / 3) * p**5 - (175 / 3) * p**4 + (140 / 3) * p**3 - (49 / 3) * p**2 + 1


class TestParser:
    def test_terms(self):
        assert _poly("-35/3p^6", "3p", "1") == (1, 3, 0, 0, 0, 0, Fraction(-35, 3))

    def test_bad_term(self):
        with pytest.raises(ValueError):
            _poly("3q^2")

    def test_thirds_are_exact(self):
        assert SET1_SYMMETRIC[0][2] == Fraction(-49, 3)


class TestUncorrelated:
    @given(unit)
    def test_five_qubit(self, p):
        assert closed_form("five_qubit", "symmetric", ChannelParams(p)) == pytest.approx(poly5(p), abs=1e-12)

    @given(unit)
    def test_set1_and_set2_coincide(self, p):
        params = ChannelParams(p)
        assert closed_form("seven_qubit_set1", "symmetric", params) == pytest.approx(poly7(p), abs=1e-12)
        assert closed_form("seven_qubit_set2", "symmetric", params) == pytest.approx(poly7(p), abs=1e-12)

    @given(unit, alpha_triples())
    def test_seven_qubit_asymmetric(self, p, alphas):
        ax, _, az = alphas
        expected = (1 - p) ** 7 + 7 * p * (1 - p) ** 6 + 21 * p**2 * (1 - p) ** 5 * (az**2 + ax * az)
        assert set2_asymmetric(ChannelParams(p, 0.0, alphas)) == pytest.approx(expected, abs=1e-12)

    def test_value_at_tenth(self):
        assert closed_form("five", None, ChannelParams(0.1)) == pytest.approx(0.91854, abs=1e-12)


class TestExpandedAgainstFactored:
    """The expanded polynomials and the product forms are separate transcriptions."""

    @given(unit, unit)
    def test_five_qubit(self, p, mu):
        params = ChannelParams(p, mu)
        assert closed_form("five_qubit", "symmetric", params) == pytest.approx(five_qubit_compact(params), abs=1e-12)

    @given(unit, unit)
    def test_set1(self, p, mu):
        params = ChannelParams(p, mu)
        assert closed_form("set1", "symmetric", params) == pytest.approx(set1_compact(params), abs=1e-12)

    @given(unit, unit)
    def test_set2(self, p, mu):
        params = ChannelParams(p, mu)
        assert closed_form("set2", "symmetric", params) == pytest.approx(set2_compact(params), abs=1e-12)

    @given(unit, unit, alpha_triples())
    def test_set2_asymmetric(self, p, mu, alphas):
        params = ChannelParams(p, mu, alphas)
        assert set2_asymmetric(params) == pytest.approx(set2_asymmetric_compact(params), abs=1e-12)

    @given(unit, unit, alpha_triples())
    def test_five_qubit_asymmetric_reduces_to_symmetric(self, p, mu, alphas):
        asym = closed_form("five_qubit", "asymmetric", ChannelParams(p, mu, alphas))
        assert asym == pytest.approx(closed_form("five_qubit", "symmetric", ChannelParams(p, mu)), abs=1e-12)


class TestBoundaries:
    @pytest.mark.parametrize("name", ["five_qubit", "seven_qubit_set1", "seven_qubit_set2"])
    @pytest.mark.parametrize("mu", [0.0, 0.3, 0.7, 1.0])
    def test_limits(self, name, mu):
        assert closed_form(name, "symmetric", ChannelParams(0.0, mu)) == pytest.approx(1.0, abs=1e-12)
        assert closed_form(name, "symmetric", ChannelParams(1.0, mu)) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("series", [FIVE_SYMMETRIC, SET1_SYMMETRIC, SET2_SYMMETRIC])
    def test_mu_coefficients_vanish_at_p0(self, series):
        assert series[0][0] == 1
        assert all(poly[0] == 0 for poly in series[1:])


class TestDispatch:
    def test_set1_asymmetric_unpublished(self):
        assert not has_closed_form("seven_qubit_set1", "asymmetric")
        with pytest.raises(NoClosedForm):
            closed_form("seven_qubit_set1", "asymmetric", ChannelParams(0.1, 0.1, FIG6))

    def test_regime_inferred(self):
        params = ChannelParams(0.1, 0.2, FIG6)
        assert closed_form("set2", None, params) == closed_form("set2", "asymmetric", params)

    def test_symmetric_formula_refuses_unequal_weights(self):
        with pytest.raises(ValueError):
            closed_form("five_qubit", "symmetric", ChannelParams(0.1, 0.2, FIG6))

    def test_unknown_regime(self):
        with pytest.raises(ValueError):
            closed_form("five_qubit", "skewed", ChannelParams(0.1))


class TestSetDifference:
    @pytest.mark.parametrize("p", [0.0, 0.05, 0.3])
    def test_zero_without_memory(self, p):
        assert set_difference_identity(ChannelParams(p, 0.0)) == 0.0

    @pytest.mark.parametrize("mu", [0.0, 0.4, 1.0])
    def test_zero_without_errors(self, mu):
        assert set_difference_identity(ChannelParams(0.0, mu)) == 0.0

    def test_worked_point(self):
        params = ChannelParams(0.05, 0.1)
        diff = closed_form("set2", "symmetric", params) - closed_form("set1", "symmetric", params)
        value = set_difference_identity(params)
        assert value > 0
        assert value == pytest.approx(diff, abs=1e-12)

    @given(unit, unit)
    def test_identity_everywhere(self, p, mu):
        params = ChannelParams(p, mu)
        diff = closed_form("set2", "symmetric", params) - closed_form("set1", "symmetric", params)
        assert set_difference_identity(params) == pytest.approx(diff, abs=1e-12)
        assert set_difference_identity(params) >= 0

    def test_vanishes_at_full_memory(self):
        # p01 = p10 = 0 when mu = 1, so the two sets tie there as well.
        assert set_difference_identity(ChannelParams(0.2, 1.0)) == 0.0

    def test_asymmetric_rejected(self):
        with pytest.raises(ValueError):
            set_difference_identity(ChannelParams(0.1, 0.1, FIG6))
