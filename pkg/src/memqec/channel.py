"""Markov-correlated depolarizing channel as an explicit Pauli distribution.

Error indices follow 0=I, 1=X, 2=Y, 3=Z. Qubit 1 draws from the single-qubit
distribution and qubit j+1 is conditioned on qubit j through

    p(k | j) = (1 - mu) * p_k + mu * delta(k, j).
"""

from __future__ import annotations

import csv
import io
import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .pauli import PauliString

SYMMETRIC = (1 / 3, 1 / 3, 1 / 3)
MAX_ENUMERATION_QUBITS = 10


class EnumerationTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class ChannelParams:
    """Error probability ``p``, memory ``mu`` and the X/Y/Z split of ``p``."""

    p: float
    mu: float = 0.0
    alphas: tuple[float, float, float] = SYMMETRIC

    def __post_init__(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        if not 0.0 <= self.mu <= 1.0:
            raise ValueError(f"mu must lie in [0, 1], got {self.mu}")
        alphas = tuple(float(x) for x in self.alphas)
        if len(alphas) != 3 or min(alphas) < 0:
            raise ValueError(f"alphas must be three nonnegative weights, got {self.alphas}")
        if abs(sum(alphas) - 1.0) > 1e-12:
            raise ValueError(f"alphas must sum to 1, got {sum(alphas)!r}")
        object.__setattr__(self, "alphas", alphas)

    @property
    def is_symmetric(self) -> bool:
        return all(abs(x - 1 / 3) <= 1e-12 for x in self.alphas)

    def single_probs(self) -> np.ndarray:
        ax, ay, az = self.alphas
        return np.array([1.0 - self.p, ax * self.p, ay * self.p, az * self.p])

    def transition_matrix(self) -> np.ndarray:
        """``T[j, k] = p(k | j)``; each row sums to one."""
        return (1.0 - self.mu) * np.tile(self.single_probs(), (4, 1)) + self.mu * np.eye(4)

    def with_(self, **changes) -> ChannelParams:
        fields = {"p": self.p, "mu": self.mu, "alphas": self.alphas}
        fields.update(changes)
        return ChannelParams(**fields)


def alphas_from_ratios(rx: float, ry: float, rz: float) -> tuple[float, float, float]:
    """Normalize relative weights, e.g. ``(5, 1, 25)`` -> ``(5/31, 1/31, 25/31)``."""
    total = rx + ry + rz
    return (rx / total, ry / total, rz / total)


def single_prob(params: ChannelParams, k: int) -> float:
    if k == 0:
        return 1.0 - params.p
    return params.alphas[k - 1] * params.p


def conditional_prob(params: ChannelParams, k: int, j: int) -> float:
    """Probability of error ``k`` on a qubit whose predecessor had error ``j``."""
    return (1.0 - params.mu) * single_prob(params, k) + (params.mu if k == j else 0.0)


def joint_prob(params: ChannelParams, indices: Sequence[int]) -> float:
    if not indices:
        raise ValueError("need at least one qubit")
    prob = single_prob(params, indices[0])
    for prev, cur in zip(indices, indices[1:]):
        prob *= conditional_prob(params, cur, prev)
    return prob


def _check_size(n: int) -> None:
    if n > MAX_ENUMERATION_QUBITS:
        raise EnumerationTooLarge(
            f"exact enumeration is limited to n <= {MAX_ENUMERATION_QUBITS} "
            f"(4**{n} strings); larger blocks need Monte Carlo sampling, "
            "which this package does not provide"
        )


def index_sequences(n: int) -> np.ndarray:
    """All 4**n index sequences, shape ``(4**n, n)``, lexicographic, qubit 1 first."""
    _check_size(n)
    return np.array(list(itertools.product(range(4), repeat=n)), dtype=np.int8)


def chain_probabilities(params: ChannelParams, sequences: np.ndarray) -> np.ndarray:
    """Vectorized :func:`joint_prob` over the rows of ``sequences``."""
    sequences = np.asarray(sequences, dtype=np.intp)
    single = params.single_probs()
    trans = params.transition_matrix()
    probs = single[sequences[:, 0]]
    for j in range(1, sequences.shape[1]):
        probs = probs * trans[sequences[:, j - 1], sequences[:, j]]
    return probs


def enumerate_distribution(params: ChannelParams, n: int) -> list[tuple[PauliString, float]]:
    """Every n-qubit Pauli string paired with its channel probability."""
    seqs = index_sequences(n)
    probs = chain_probabilities(params, seqs)
    return [(PauliString.from_indices(s), float(pr)) for s, pr in zip(seqs.tolist(), probs)]


def total_probability(distribution: Sequence[tuple[PauliString, float]]) -> float:
    return math.fsum(pr for _, pr in distribution)


def distribution_csv(params: ChannelParams, n: int) -> str:
    buf = io.StringIO()
    buf.write("# schema=1\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["pauli", "probability"])
    for e, pr in enumerate_distribution(params, n):
        writer.writerow([str(e), f"{pr:.17g}"])
    return buf.getvalue()
