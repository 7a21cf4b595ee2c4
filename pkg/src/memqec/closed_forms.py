"""Published closed-form fidelity polynomials.

Expanded forms are stored as exact rational coefficients indexed by the
power of mu, each a polynomial in p (constant term first), and are
evaluated by Horner's rule. The compact product forms written in terms of
the conditional probabilities p_00, p_01, p_10, ... are kept alongside so
the two transcriptions can be checked against each other.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .channel import ChannelParams
from .codes import canonical_name


class NoClosedForm(LookupError):
    """No published expression exists for this code/regime pair."""


_TERM = re.compile(r"^([+-]?[\d/]+)(p(?:\^(\d+))?)?$")


def _poly(*terms: str) -> tuple[Fraction, ...]:
    """Coefficients (constant first) from terms like ``"-35/3p^6"`` or ``"3p"``."""
    coeffs: dict[int, Fraction] = {}
    for term in terms:
        match = _TERM.match(term)
        if match is None:
            raise ValueError(f"bad polynomial term {term!r}")
        coef, var, power = match.groups()
        k = int(power) if power else (1 if var else 0)
        coeffs[k] = coeffs.get(k, Fraction(0)) + Fraction(coef)
    return tuple(coeffs.get(k, Fraction(0)) for k in range(max(coeffs) + 1))


def _horner(coeffs: Sequence[Fraction], x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + float(c)
    return acc


def _eval_mu_series(series: Sequence[Sequence[Fraction]], mu: float, p: float) -> float:
    acc = 0.0
    for poly in reversed(series):
        acc = acc * mu + _horner(poly, p)
    return acc


# series[m] multiplies mu**m
FIVE_SYMMETRIC = (
    _poly("4p^5", "-15p^4", "20p^3", "-10p^2", "1"),
    _poly("-16p^5", "52p^4", "-60p^3", "28p^2", "-4p"),
    _poly("24p^5", "-66p^4", "63p^3", "-24p^2", "3p"),
    _poly("-16p^5", "36p^4", "-26p^3", "6p^2"),
    _poly("4p^5", "-7p^4", "3p^3"),
)

_SEVEN_MU0 = _poly("4/3p^7", "-35/3p^6", "112/3p^5", "-175/3p^4", "140/3p^3", "-49/3p^2", "1")

SET1_SYMMETRIC = (
    _SEVEN_MU0,
    _poly("-8p^7", "178/3p^6", "-490/3p^5", "220p^4", "-460/3p^3", "154/3p^2", "-6p"),
    _poly("20p^7", "-365/3p^6", "835/3p^5", "-310p^4", "530/3p^3", "-145/3p^2", "5p"),
    _poly("-80/3p^7", "380/3p^6", "-680/3p^5", "192p^4", "-232/3p^3", "12p^2"),
    _poly("20p^7", "-205/3p^6", "250/3p^5", "-41p^4", "14/3p^3", "4/3p^2"),
    _poly("-8p^7", "50/3p^6", "-22/3p^5", "-4p^4", "8/3p^3"),
    _poly("4/3p^7", "-1p^6", "-5/3p^5", "4/3p^4"),
)

SET2_SYMMETRIC = (
    _SEVEN_MU0,
    _poly("-8p^7", "172/3p^6", "-460/3p^5", "200p^4", "-400/3p^3", "124/3p^2", "-4p"),
    _poly("20p^7", "-335/3p^6", "235p^5", "-710/3p^4", "350/3p^3", "-25p^2", "5/3p"),
    _poly("-80/3p^7", "320/3p^6", "-460/3p^5", "272/3p^4", "-40/3p^3", "-16/3p^2", "4/3p"),
    _poly("20p^7", "-145/3p^6", "70/3p^5", "23p^4", "-70/3p^3", "16/3p^2"),
    _poly("-8p^7", "20/3p^6", "16p^5", "-64/3p^4", "20/3p^3"),
    _poly("4/3p^7", "1p^6", "-5p^5", "8/3p^4"),
)


@dataclass(frozen=True)
class _AsymTerm:
    base: tuple[Fraction, ...]
    alpha_z: tuple[Fraction, ...]
    alpha_pair: tuple[Fraction, ...]  # multiplies alpha_z**2 + alpha_x*alpha_z


# A_1 .. A_6; A_0 has its own factored form.
SET2_ASYMMETRIC = (
    None,
    _AsymTerm(
        _poly("-36p^7", "186p^6", "-390p^5", "420p^4", "-240p^3", "66p^2", "-6p"),
        _poly("-6p^6", "30p^5", "-60p^4", "60p^3", "-30p^2", "6p"),
        _poly("126p^7", "-570p^6", "1020p^5", "-900p^4", "390p^3", "-66p^2"),
    ),
    _AsymTerm(
        _poly("90p^7", "-405p^6", "725p^5", "-650p^4", "300p^3", "-65p^2", "5p"),
        _poly("30p^6", "-130p^5", "220p^4", "-180p^3", "70p^2", "-10p"),
        _poly("-315p^7", "1275p^6", "-2010p^5", "1530p^4", "-555p^3", "75p^2"),
    ),
    _AsymTerm(
        _poly("-120p^7", "460p^6", "-680p^5", "480p^4", "-160p^3", "20p^2"),
        _poly("-60p^6", "220p^5", "-304p^4", "192p^3", "-52p^2", "4p"),
        _poly("420p^7", "-1500p^6", "2040p^5", "-1296p^4", "372p^3", "-36p^2"),
    ),
    _AsymTerm(
        _poly("90p^7", "-285p^6", "330p^5", "-165p^4", "30p^3"),
        _poly("60p^6", "-180p^5", "192p^4", "-84p^3", "12p^2"),
        _poly("-315p^7", "975p^6", "-1110p^5", "558p^4", "-114p^3", "6p^2"),
    ),
    _AsymTerm(
        _poly("-36p^7", "90p^6", "-74p^5", "20p^4"),
        _poly("-30p^6", "70p^5", "-52p^4", "12p^3"),
        _poly("126p^7", "-330p^6", "300p^5", "-108p^4", "12p^3"),
    ),
    _AsymTerm(
        _poly("6p^7", "-11p^6", "5p^5"),
        _poly("6p^6", "-10p^5", "4p^4"),
        _poly("-21p^7", "45p^6", "-30p^5", "6p^4"),
    ),
)


@dataclass(frozen=True)
class ConditionalProbs:
    """Shorthand probabilities p_0, p_k and p_kj = p(k | j)."""

    p0: float
    p1: float
    p2: float
    p3: float
    p00: float
    p01: float
    p10: float
    p20: float
    p30: float
    p11: float
    p31: float
    p33: float

    @classmethod
    def from_params(cls, params: ChannelParams) -> ConditionalProbs:
        p, mu = params.p, params.mu
        ax, ay, az = params.alphas
        return cls(
            p0=1 - p,
            p1=ax * p,
            p2=ay * p,
            p3=az * p,
            p00=(1 - mu) * (1 - p) + mu,
            p01=(1 - mu) * (1 - p),
            p10=ax * p * (1 - mu),
            p20=ay * p * (1 - mu),
            p30=az * p * (1 - mu),
            p11=ax * p * (1 - mu) + mu,
            p31=az * p * (1 - mu),
            p33=az * p * (1 - mu) + mu,
        )


def five_qubit_symmetric(params: ChannelParams) -> float:
    return _eval_mu_series(FIVE_SYMMETRIC, params.mu, params.p)


def five_qubit_asymmetric(params: ChannelParams) -> float:
    """Factored five-qubit expression with separate X/Y/Z rates."""
    c = ConditionalProbs.from_params(params)
    s_j0 = c.p10 + c.p20 + c.p30
    return (
        c.p00**4 * c.p0
        + c.p00**3 * c.p0 * s_j0
        + 3 * c.p00**2 * c.p01 * c.p0 * s_j0
        + c.p00**3 * c.p01 * (c.p1 + c.p2 + c.p3)
    )


def five_qubit_compact(params: ChannelParams) -> float:
    c = ConditionalProbs.from_params(params)
    return c.p00**4 * c.p0 + 3 * (
        2 * c.p00**3 * c.p10 * c.p0 + 3 * c.p00**2 * c.p01 * c.p10 * c.p0
    )


def set1_symmetric(params: ChannelParams) -> float:
    return _eval_mu_series(SET1_SYMMETRIC, params.mu, params.p)


def set1_compact(params: ChannelParams) -> float:
    c = ConditionalProbs.from_params(params)
    return (
        c.p00**6 * c.p0
        + 6 * c.p00**5 * c.p10 * c.p0
        + 15 * c.p00**4 * c.p01 * c.p10 * c.p0
        + 6 * c.p00**4 * c.p10**2 * c.p0
        + 24 * c.p00**3 * c.p01 * c.p10**2 * c.p0
        + 12 * c.p00**2 * c.p01**2 * c.p10**2 * c.p0
    )


def set2_symmetric(params: ChannelParams) -> float:
    return _eval_mu_series(SET2_SYMMETRIC, params.mu, params.p)


def set2_compact(params: ChannelParams) -> float:
    c = ConditionalProbs.from_params(params)
    return (
        c.p00**6 * c.p0
        + 6 * c.p00**5 * c.p10 * c.p0
        + 15 * c.p00**4 * c.p01 * c.p10 * c.p0
        + 2 * c.p00**4 * c.p10 * c.p0 * (c.p11 + 2 * c.p10)
        + 4 * c.p00**3 * c.p01 * c.p10 * c.p0 * (5 * c.p10 + c.p11)
        + 12 * c.p00**2 * c.p01**2 * c.p10**2 * c.p0
    )


def set2_asymmetric(params: ChannelParams) -> float:
    """Expanded seven-qubit asymmetric expression, A_6 + ... + A_0."""
    p, mu = params.p, params.mu
    ax, _, az = params.alphas
    pair = az * az + ax * az
    total = (1 - p) ** 7 + 7 * p * (1 - p) ** 6 + 21 * p**2 * (1 - p) ** 5 * pair
    for m in range(1, 7):
        term = SET2_ASYMMETRIC[m]
        total += mu**m * (
            _horner(term.base, p) + az * _horner(term.alpha_z, p) + pair * _horner(term.alpha_pair, p)
        )
    return total


def set2_asymmetric_compact(params: ChannelParams) -> float:
    c = ConditionalProbs.from_params(params)
    return (
        c.p00**6 * c.p0
        + 2 * c.p00**5 * c.p01 * (c.p1 + c.p2 + c.p3)
        + 5 * c.p00**4 * c.p01 * c.p0 * (c.p10 + c.p20 + c.p30)
        + c.p00**4 * c.p0 * (2 * c.p30 * c.p33 + c.p30**2 + 3 * c.p10 * c.p31)
        + c.p00**3 * c.p01 * c.p30 * c.p0 * (8 * c.p30 + 4 * c.p33 + 12 * c.p10)
        + 6 * c.p00**2 * c.p01**2 * c.p30 * c.p0 * (c.p30 + c.p10)
    )


_TABLE = {
    ("five_qubit", "symmetric"): five_qubit_symmetric,
    ("five_qubit", "asymmetric"): five_qubit_asymmetric,
    ("seven_qubit_set1", "symmetric"): set1_symmetric,
    ("seven_qubit_set2", "symmetric"): set2_symmetric,
    ("seven_qubit_set2", "asymmetric"): set2_asymmetric,
}


def has_closed_form(code_name: str, regime: str) -> bool:
    return (canonical_name(code_name), regime) in _TABLE


def closed_form(code_name: str, regime: Optional[str], params: ChannelParams) -> float:
    """Evaluate the published fidelity expression for ``code_name``.

    A ``regime`` of None means ``"symmetric"`` when the X/Y/Z weights are
    equal and ``"asymmetric"`` otherwise. The symmetric expressions assume equal
    weights, so asking for one with unequal weights is an error.

    Raises
    ------
    NoClosedForm
        For Set-1 with unequal X/Y/Z weights, which was never published.
    """
    name = canonical_name(code_name)
    if regime is None:
        regime = "symmetric" if params.is_symmetric else "asymmetric"
    if regime not in ("symmetric", "asymmetric"):
        raise ValueError(f"regime must be 'symmetric' or 'asymmetric', got {regime!r}")
    if regime == "symmetric" and not params.is_symmetric:
        raise ValueError("symmetric expression requested for unequal X/Y/Z weights")
    try:
        fn = _TABLE[name, regime]
    except KeyError:
        raise NoClosedForm(f"no published closed form for {name} in the {regime} regime") from None
    return fn(params)


def set_difference_identity(params: ChannelParams) -> float:
    """Right-hand side of F_Set2 - F_Set1 in the symmetric regime."""
    if not params.is_symmetric:
        raise ValueError("the Set-2 minus Set-1 identity holds in the symmetric regime only")
    c = ConditionalProbs.from_params(params)
    return (c.p11 - c.p10) * (
        2 * c.p00**4 * c.p10 * c.p0 + 4 * c.p00**3 * c.p01 * c.p10 * c.p0
    )
