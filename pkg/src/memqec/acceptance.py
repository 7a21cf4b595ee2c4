"""Acceptance checks shared by ``memqec verify`` and the test suite.

Each numbered criterion returns a :class:`CriterionResult` made of named
sub-checks. A criterion passes only if every sub-check does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .channel import (
    SYMMETRIC,
    ChannelParams,
    chain_probabilities,
    index_sequences,
)
from .closed_forms import closed_form, set_difference_identity
from .codes import build_code, detectability_check, syndrome_of
from .dense import (
    check_kl_conditions,
    check_orthonormal_decomposition,
    check_syndrome_consistency,
)
from .fidelity import fidelity
from .pauli import PauliString
from .reference_data import FIVE_QUBIT_SYNDROMES, SEVEN_QUBIT_SET1_SYNDROMES
from .threshold import (
    ASYMMETRIC_ALPHAS,
    EFFECTIVE_MARGIN,
    mu_threshold_curve,
    p_threshold_at_mu,
)

ORACLE_TOL = 1e-12
MU_GRID = tuple(i / 10 for i in range(11))
P_GRID = tuple(j / 100 for j in range(21))
SEED = 20240611


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    checks: tuple[Check, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        failed = [c.name for c in self.checks if not c.passed]
        tail = f" (failed: {', '.join(failed)})" if failed else ""
        label = f"criterion {self.number}: {self.title}" if self.number else self.title
        return f"[{status}] {label}{tail}"

    def to_dict(self) -> dict:
        return {
            "number": self.number,
            "title": self.title,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def _grid():
    for mu in MU_GRID:
        for p in P_GRID:
            yield mu, p


def _code(name: str):
    return build_code(name, allow_collisions=True)


def criterion_1() -> CriterionResult:
    cases = [
        ("five_qubit", "symmetric", SYMMETRIC),
        ("seven_qubit_set1", "symmetric", SYMMETRIC),
        ("seven_qubit_set2", "symmetric", SYMMETRIC),
        ("seven_qubit_set2", "asymmetric", ASYMMETRIC_ALPHAS),
    ]
    checks = []
    for name, regime, alphas in cases:
        code = _code(name)
        worst = 0.0
        for mu, p in _grid():
            params = ChannelParams(p, mu, alphas)
            worst = max(worst, abs(fidelity(code, params) - closed_form(name, regime, params)))
        checks.append(Check(f"{name}/{regime}", worst <= ORACLE_TOL, f"max |diff| = {worst:.3e} over 231 points"))
    return CriterionResult(1, "enumeration matches closed forms", tuple(checks))


def _poly5(p: float) -> float:
    return 4 * p**5 - 15 * p**4 + 20 * p**3 - 10 * p**2 + 1


def _poly7(p: float) -> float:
    return (
        (4 / 3) * p**7 - (35 / 3) * p**6 + (112 / 3) * p**5 - (175 / 3) * p**4
        + (140 / 3) * p**3 - (49 / 3) * p**2 + 1
    )


def criterion_2() -> CriterionResult:
    ps = [k / 20 for k in range(1, 21)]
    checks = []
    for name, poly in (("five_qubit", _poly5), ("seven_qubit_set1", _poly7)):
        code = _code(name)
        worst = max(abs(fidelity(code, ChannelParams(p, 0.0)) - poly(p)) for p in ps)
        checks.append(Check(name, worst <= ORACLE_TOL, f"max |diff| = {worst:.3e} at 20 p values"))
    return CriterionResult(2, "uncorrelated polynomials", tuple(checks))


def _within(name: str, value: float, target: float, tol: float) -> Check:
    return Check(name, abs(value - target) <= tol, f"{value:.6g} vs {target:g} +- {tol:g}")


def criterion_3() -> CriterionResult:
    checks = [
        _within("set1 p_th(mu=0)", p_threshold_at_mu("seven_qubit_set1", "symmetric", 0.0), 7.63e-2, 5e-4),
        _within("set2 p_th(mu=0)", p_threshold_at_mu("seven_qubit_set2", "symmetric", 0.0), 7.63e-2, 5e-4),
        _within("set2 p_th(mu=0.29)", p_threshold_at_mu("seven_qubit_set2", "symmetric", 0.29), 1.95e-3, 2e-4),
    ]
    for name, target, tol in (
        ("seven_qubit_set1", 0.199, 0.005),
        ("seven_qubit_set2", 0.29, 0.01),
        ("five_qubit", 0.33, 0.01),
    ):
        curve = mu_threshold_curve(name, "symmetric")
        checks.append(_within(f"{name} max mu_th", curve.max_threshold, target, tol))
    return CriterionResult(3, "threshold values", tuple(checks))


def criterion_4() -> CriterionResult:
    worst = worst_mu = 0.0
    negative = 0
    for mu, p in _grid():
        params = ChannelParams(p, mu)
        diff = closed_form("seven_qubit_set2", "symmetric", params) - closed_form(
            "seven_qubit_set1", "symmetric", params
        )
        rhs = set_difference_identity(params)
        p0 = 1 - p
        p00 = (1 - mu) * (1 - p) + mu
        p01 = (1 - mu) * (1 - p)
        p10 = p * (1 - mu) / 3
        rhs_mu = mu * (2 * p00**4 * p10 * p0 + 4 * p00**3 * p01 * p10 * p0)
        worst = max(worst, abs(diff - rhs))
        worst_mu = max(worst_mu, abs(diff - rhs_mu))
        negative += rhs < 0
    return CriterionResult(
        4,
        "Set-2 minus Set-1 identity",
        (
            Check("matches (p11 - p10) form", worst <= ORACLE_TOL, f"max |diff| = {worst:.3e}"),
            Check("matches mu form", worst_mu <= ORACLE_TOL, f"max |diff| = {worst_mu:.3e}"),
            Check("nonnegative", negative == 0, f"{negative} negative values"),
        ),
    )


def criterion_5() -> CriterionResult:
    rng = np.random.default_rng(SEED)
    code = _code("five_qubit")
    worst = 0.0
    triples = rng.dirichlet(np.ones(3), size=10)
    for triple in triples:
        alphas = tuple(float(x) for x in triple / triple.sum())
        for mu, p in _grid():
            sym = fidelity(code, ChannelParams(p, mu))
            asym = fidelity(code, ChannelParams(p, mu, alphas))
            worst = max(worst, abs(sym - asym))
    check = Check("10 random alpha triples", worst <= ORACLE_TOL, f"max |diff| = {worst:.3e}")
    return CriterionResult(5, "five-qubit asymmetry invariance", (check,))


def criterion_6() -> CriterionResult:
    checks = []
    for name in ("five_qubit", "seven_qubit_set1", "seven_qubit_set2"):
        code = _code(name)
        report = check_kl_conditions(name, code.correctable_set)
        detail = f"{len(code.correctable_set)} elements, {len(report.violations)} violations"
        if report.violations:
            v = report.violations[0]
            detail += f"; first: <{v.i}|{v.left}*{v.right}|{v.j}> = {v.overlap.real:.3g}"
        checks.append(Check(f"{name} KL", report.passed, detail))
    witness = check_kl_conditions("seven_qubit_set1", [PauliString.identity(7), PauliString.parse(7, "X1X2X3")])
    overlaps = [abs(v.overlap) for v in witness.violations if v.kind == "off_diagonal"]
    ok = (not witness.passed) and bool(overlaps) and all(abs(o - 1) <= ORACLE_TOL for o in overlaps)
    checks.append(Check("{I, X1X2X3} fails with overlap 1", ok, f"overlaps {sorted(set(round(o, 15) for o in overlaps))}"))
    return CriterionResult(6, "Knill-Laflamme conditions", tuple(checks))


def criterion_7() -> CriterionResult:
    checks = []
    for name, n, table in (
        ("five_qubit", 5, FIVE_QUBIT_SYNDROMES),
        ("seven_qubit_set1", 7, SEVEN_QUBIT_SET1_SYNDROMES),
    ):
        code = _code(name)
        bad = [t for t, s in table.items() if syndrome_of(code, PauliString.parse(n, t)) != s]
        checks.append(Check(name, not bad, f"{len(table) - len(bad)}/{len(table)} match" + (f"; mismatched {bad}" if bad else "")))
    return CriterionResult(7, "published syndrome tables", tuple(checks))


def criterion_8() -> CriterionResult:
    checks = []
    for n in (5, 7):
        total = sum(3**m * math.comb(n, m) for m in range(n + 1))
        seqs = index_sequences(n)
        weights = np.count_nonzero(seqs, axis=1)
        by_weight = np.bincount(weights, minlength=n + 1).tolist()
        expected = [3**m * math.comb(n, m) for m in range(n + 1)]
        ok = total == 4**n == len(seqs) and by_weight == expected
        checks.append(Check(f"n={n} counts", ok, f"sum 3^m C({n},m) = {total}, per weight {by_weight}"))
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(50):
        p, mu = rng.uniform(0, 1, size=2)
        alphas = rng.dirichlet(np.ones(3))
        params = ChannelParams(float(p), float(mu), tuple(float(x) for x in alphas / alphas.sum()))
        for n in (5, 7):
            total = math.fsum(chain_probabilities(params, index_sequences(n)).tolist())
            worst = max(worst, abs(total - 1))
    checks.append(Check("normalization at 50 draws", worst <= ORACLE_TOL, f"max |sum - 1| = {worst:.3e}"))
    return CriterionResult(8, "structural counts", tuple(checks))


def criterion_9() -> CriterionResult:
    set1, set2, five = _code("seven_qubit_set1"), _code("seven_qubit_set2"), _code("five_qubit")
    worst_order = 0.0
    for mu, p in _grid():
        if mu == 0:
            continue
        params = ChannelParams(p, mu)
        worst_order = min(worst_order, fidelity(set2, params) - fidelity(set1, params))
    checks = [Check("F_set2 >= F_set1 for mu > 0", worst_order >= -ORACLE_TOL, f"min difference {worst_order:.3e}")]

    for code in (five, set1, set2):
        violations = 0
        inside = 0
        for mu, p in _grid():
            params = ChannelParams(p, mu)
            f = fidelity(code, params)
            if 1 - f < p - EFFECTIVE_MARGIN:
                inside += 1
                if f > fidelity(code, ChannelParams(p, 0.0)) + ORACLE_TOL:
                    violations += 1
        checks.append(Check(f"{code.name} F(mu,p) <= F(0,p) in region", violations == 0, f"{inside} points inside, {violations} violations"))

    p = 4e-2
    bad = 0
    mus = np.linspace(0.0, 0.199, 200)
    for mu in mus:
        asym7 = fidelity(set2, ChannelParams(p, float(mu), ASYMMETRIC_ALPHAS))
        f5 = fidelity(five, ChannelParams(p, float(mu)))
        f5_asym = fidelity(five, ChannelParams(p, float(mu), ASYMMETRIC_ALPHAS))
        sym7 = max(fidelity(set2, ChannelParams(p, float(mu))), fidelity(set1, ChannelParams(p, float(mu))))
        if not (asym7 >= f5 - ORACLE_TOL and abs(f5 - f5_asym) <= ORACLE_TOL and f5 >= sym7 - ORACLE_TOL):
            bad += 1
    checks.append(Check("F_asym7 >= F_5 >= F_sym7 at p=0.04", bad == 0, f"{len(mus)} mu values, {bad} out of order"))
    return CriterionResult(9, "ordering properties", tuple(checks))


CRITERIA: dict[int, Callable[[], CriterionResult]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
}


def supplementary_checks() -> CriterionResult:
    """Detectability, dense syndrome agreement and orthonormality."""
    checks = []
    for name in ("five_qubit", "seven_qubit_set1", "seven_qubit_set2"):
        code = _code(name)
        det = detectability_check(code, code.correctable_set)
        checks.append(Check(f"{name} detectability", det.passed, f"{len(det.failures)} logical products in {det.n_pairs} pairs"))
        cons = check_syndrome_consistency(code)
        checks.append(Check(f"{name} dense syndromes", cons.passed, f"{len(cons.mismatches)} mismatches"))
    for name in ("five_qubit", "seven_qubit_set1"):
        gram = check_orthonormal_decomposition(name, _code(name).correctable_set)
        checks.append(Check(f"{name} orthonormal decomposition", gram.passed, f"max deviation {gram.max_deviation:.2e}"))
    return CriterionResult(0, "supplementary code checks", tuple(checks))


def run_criteria(numbers=None) -> list[CriterionResult]:
    numbers = sorted(CRITERIA) if numbers is None else numbers
    return [CRITERIA[k]() for k in numbers]
