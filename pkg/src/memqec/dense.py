"""Phase-exact state-vector checks for the five- and seven-qubit codes.

Basis kets are written with qubit 1 leftmost, and qubit 1 is the most
significant bit of the amplitude index, so ``|11110>`` on five qubits is
index 30. Pauli matrices are tensored in the same order.

Codewords are built as ``|0_L> ~ prod_g (1 + g)/2 |0...0>`` over the
published generator list, with ``|1_L> = X...X |0_L>``. For seven qubits
this reproduces the printed expansion ket for ket. The printed five-qubit
expansion belongs to a relabelled copy of the code (qubit ``i`` -> ``2i mod
5``) and is available separately through :func:`printed_codeword`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Optional, Sequence

import numpy as np

from .codes import CodeSpec, build_code, canonical_name, listed_generators, syndrome_of
from .pauli import PauliString

TOL = 1e-12

PAULI_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
PAULI_MATRICES["Y"] = 1j * PAULI_MATRICES["X"] @ PAULI_MATRICES["Z"]

_PRINTED = {
    (5, 0): (
        "+00000 +11000 +01100 +00110 +00011 +10001 -01010 -00101 "
        "-10010 -01001 -10100 -11110 -01111 -10111 -11011 -11101"
    ),
    (5, 1): (
        "+11111 +00111 +10011 +11001 +11100 +01110 -10101 -11010 "
        "-01101 -10110 -01011 -00001 -10000 -01000 -00100 -00010"
    ),
    (7, 0): "+0000000 +0110011 +1010101 +1100110 +0001111 +0111100 +1011010 +1101001",
    (7, 1): "+1111111 +1001100 +0101010 +0011001 +1110000 +1000011 +0100101 +0010110",
}


@dataclass(frozen=True, eq=False)
class DenseState:
    """A pure state on ``n`` qubits as ``2**n`` complex amplitudes."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (1 << self.n,):
            raise ValueError(f"expected {1 << self.n} amplitudes, got shape {amps.shape}")
        amps = amps.copy()
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    def amplitude(self, ket: str) -> complex:
        """Amplitude of a basis ket such as ``"11110"`` (qubit 1 leftmost)."""
        if len(ket) != self.n or set(ket) - {"0", "1"}:
            raise ValueError(f"bad basis ket {ket!r} for {self.n} qubits")
        return complex(self.amplitudes[int(ket, 2)])

    def inner(self, other: DenseState) -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def support(self) -> dict[str, complex]:
        return {
            format(i, f"0{self.n}b"): complex(v)
            for i, v in enumerate(self.amplitudes)
            if abs(v) > TOL
        }


def dense_pauli(e: PauliString) -> np.ndarray:
    """``2**n x 2**n`` matrix of ``e``, qubit 1 as the leftmost factor."""
    return reduce(np.kron, (PAULI_MATRICES[e.letter(q)] for q in range(1, e.n + 1)))


def _code_n(code_name: str) -> int:
    return 5 if canonical_name(code_name) == "five_qubit" else 7


@lru_cache(maxsize=None)
def _projected(n: int) -> tuple[np.ndarray, np.ndarray]:
    dim = 1 << n
    state = np.zeros(dim, dtype=complex)
    state[0] = 1.0
    for g in listed_generators(n):
        state = 0.5 * (state + dense_pauli(g) @ state)
    state /= np.linalg.norm(state)
    flip = dense_pauli(PauliString(n, (1 << n) - 1, 0))
    return state, flip @ state


def build_codeword(code_name: str, logical: int) -> DenseState:
    """Logical basis state ``|0_L>`` or ``|1_L>`` from the stabilizer projector."""
    if logical not in (0, 1):
        raise ValueError(f"logical must be 0 or 1, got {logical!r}")
    n = _code_n(code_name)
    return DenseState(n, _projected(n)[logical])


def printed_codeword(code_name: str, logical: int) -> DenseState:
    """Codeword assembled literally from the textbook ket expansion."""
    if logical not in (0, 1):
        raise ValueError(f"logical must be 0 or 1, got {logical!r}")
    n = _code_n(code_name)
    terms = _PRINTED[n, logical].split()
    amps = np.zeros(1 << n, dtype=complex)
    scale = 1 / np.sqrt(len(terms))
    for term in terms:
        amps[int(term[1:], 2)] = scale if term[0] == "+" else -scale
    return DenseState(n, amps)


def _codewords(code_name: str, codewords: Optional[Sequence[DenseState]]) -> tuple[DenseState, DenseState]:
    if codewords is None:
        return build_codeword(code_name, 0), build_codeword(code_name, 1)
    zero, one = codewords
    return zero, one


@dataclass(frozen=True)
class StabilizerFixingReport:
    passed: bool
    max_deviation: float
    failures: tuple[tuple[str, int, float], ...]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "max_deviation": self.max_deviation,
            "failures": [list(f) for f in self.failures],
        }


def check_stabilizer_fixing(
    code_name: str,
    generators: Optional[Sequence[PauliString]] = None,
    codewords: Optional[Sequence[DenseState]] = None,
) -> StabilizerFixingReport:
    """Check ``g |l_L> = |l_L>`` elementwise for each generator and ``l``.

    Defaults to the published generator list and :func:`build_codeword`.
    """
    n = _code_n(code_name)
    gens = tuple(generators) if generators is not None else listed_generators(n)
    states = _codewords(code_name, codewords)
    failures = []
    worst = 0.0
    for g in gens:
        mat = dense_pauli(g)
        for logical, state in enumerate(states):
            dev = float(np.max(np.abs(mat @ state.amplitudes - state.amplitudes)))
            worst = max(worst, dev)
            if dev > TOL:
                failures.append((str(g), logical, dev))
    return StabilizerFixingReport(not failures, worst, tuple(failures))


@dataclass(frozen=True)
class KLViolation:
    left: PauliString
    right: PauliString
    i: int
    j: int
    overlap: complex
    kind: str  # "off_diagonal" or "unequal_diagonal"

    def to_dict(self) -> dict:
        return {
            "left": str(self.left),
            "right": str(self.right),
            "i": self.i,
            "j": self.j,
            "overlap": [self.overlap.real, self.overlap.imag],
            "kind": self.kind,
        }


@dataclass(frozen=True)
class KLReport:
    passed: bool
    n_pairs: int
    violations: tuple[KLViolation, ...]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "n_pairs": self.n_pairs,
            "n_violations": len(self.violations),
            "violations": [v.to_dict() for v in self.violations],
        }


def _error_vectors(elements: Sequence[PauliString], states: Sequence[DenseState]) -> np.ndarray:
    # Column 2*l + i holds E_l |i_L>.
    cols = []
    for e in elements:
        mat = dense_pauli(e)
        cols.extend(mat @ s.amplitudes for s in states)
    return np.column_stack(cols)


def check_kl_conditions(
    code_name: str,
    elements: Sequence[PauliString],
    codewords: Optional[Sequence[DenseState]] = None,
) -> KLReport:
    """Knill-Laflamme test over all ordered pairs of ``elements``.

    For each pair (l, m) the overlaps ``<i_L| E_l E_m |j_L>`` must vanish for
    ``i != j`` and agree for ``i = j = 0`` and ``i = j = 1``, all to 1e-12.
    The overlaps are read off one Gram matrix of the vectors ``E |i_L>``.
    """
    n = _code_n(code_name)
    elements = list(elements)
    for e in elements:
        if e.n != n:
            raise ValueError(f"{e} acts on {e.n} qubits, code has {n}")
    states = _codewords(code_name, codewords)
    vecs = _error_vectors(elements, states)
    gram = vecs.conj().T @ vecs
    violations = []
    for l, el in enumerate(elements):
        for m, em in enumerate(elements):
            block = gram[2 * l: 2 * l + 2, 2 * m: 2 * m + 2]
            for i, j in ((0, 1), (1, 0)):
                if abs(block[i, j]) >= TOL:
                    violations.append(KLViolation(el, em, i, j, complex(block[i, j]), "off_diagonal"))
            if abs(block[0, 0] - block[1, 1]) > TOL:
                violations.append(KLViolation(el, em, 1, 1, complex(block[1, 1]), "unequal_diagonal"))
    return KLReport(not violations, len(elements) ** 2, tuple(violations))


@dataclass(frozen=True)
class GramReport:
    passed: bool
    dimension: int
    n_vectors: int
    max_deviation: float

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def check_orthonormal_decomposition(
    code_name: str,
    elements: Sequence[PauliString],
    codewords: Optional[Sequence[DenseState]] = None,
) -> GramReport:
    """The vectors ``E |i_L>`` must be orthonormal; when there are ``2**n``
    of them they span the whole space."""
    states = _codewords(code_name, codewords)
    vecs = _error_vectors(list(elements), states)
    gram = vecs.conj().T @ vecs
    dev = float(np.max(np.abs(gram - np.eye(gram.shape[0]))))
    return GramReport(dev <= TOL, vecs.shape[0], vecs.shape[1], dev)


@dataclass(frozen=True)
class SyndromeConsistencyReport:
    passed: bool
    mismatches: tuple[tuple[str, str, str], ...]

    def to_dict(self) -> dict:
        return {"passed": self.passed, "mismatches": [list(m) for m in self.mismatches]}


def dense_syndrome(code: CodeSpec, e: PauliString) -> str:
    """Syndrome from matrices: bit is 1 where ``g E = -E g``."""
    emat = dense_pauli(e)
    bits = []
    for g in code.generators:
        gmat = dense_pauli(g)
        if np.allclose(gmat @ emat, emat @ gmat, atol=TOL):
            bits.append("0")
        elif np.allclose(gmat @ emat, -emat @ gmat, atol=TOL):
            bits.append("1")
        else:
            raise AssertionError(f"{g} and {e} neither commute nor anticommute")
    return "".join(bits)


def check_syndrome_consistency(code: CodeSpec) -> SyndromeConsistencyReport:
    """Compare :func:`dense_syndrome` with the symplectic syndrome for the
    whole correctable set."""
    mismatches = []
    for e in code.correctable_set:
        dense, binary = dense_syndrome(code, e), syndrome_of(code, e)
        if dense != binary:
            mismatches.append((str(e), dense, binary))
    return SyndromeConsistencyReport(not mismatches, tuple(mismatches))


def kl_report_for_code(code_name: str) -> KLReport:
    """KL check of the registered correctable set of ``code_name``."""
    code = build_code(code_name, allow_collisions=True)
    return check_kl_conditions(code_name, code.correctable_set)


def report_json(report) -> str:
    return json.dumps(report.to_dict())
