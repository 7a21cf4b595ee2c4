"""Phase-free n-qubit Pauli operators in the symplectic (a|b) representation.

A Pauli string on ``n`` qubits is stored as two ``n``-bit integers: ``a``
carries the X-part and ``b`` the Z-part. Bit ``j - 1`` of each word belongs
to qubit ``j`` (qubit 1 is the least significant bit). A Y on qubit ``j``
sets the bit in both words. Global phases are dropped throughout, so the
objects here are elements of the quotient group P_n / {+-1, +-i}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_QUBITS = 16

_LETTER_BITS = {"X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_LETTER = {(1, 0): "X", (1, 1): "Y", (0, 1): "Z"}
_TOKEN = re.compile(r"([XYZ])(\d+)")


class PauliError(ValueError):
    """Raised for malformed Pauli strings or mismatched qubit counts."""


@dataclass(frozen=True, order=True)
class PauliString:
    """An n-qubit Pauli operator modulo phase.

    Parameters
    ----------
    n : int
        Number of qubits, ``1 <= n <= 16``.
    a : int
        X-part; bit ``j - 1`` set means sigma_x acts on qubit ``j``.
    b : int
        Z-part; bit ``j - 1`` set means sigma_z acts on qubit ``j``.
    """

    n: int
    a: int = 0
    b: int = 0

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_QUBITS:
            raise PauliError(f"qubit count must be in 1..{MAX_QUBITS}, got {self.n}")
        mask = (1 << self.n) - 1
        if self.a & ~mask or self.b & ~mask or self.a < 0 or self.b < 0:
            raise PauliError(f"bits set above qubit {self.n}: a={self.a:#x}, b={self.b:#x}")

    @classmethod
    def identity(cls, n: int) -> PauliString:
        return cls(n, 0, 0)

    @classmethod
    def from_letters(cls, n: int, letters: Iterable[tuple[int, str]]) -> PauliString:
        """Build from ``(qubit, letter)`` pairs with 1-based qubit labels."""
        a = b = 0
        seen: set[int] = set()
        for qubit, letter in letters:
            if not 1 <= qubit <= n:
                raise PauliError(f"qubit index {qubit} outside 1..{n}")
            if qubit in seen:
                raise PauliError(f"qubit index {qubit} given twice")
            if letter not in _LETTER_BITS:
                raise PauliError(f"unknown Pauli letter {letter!r}")
            seen.add(qubit)
            x, z = _LETTER_BITS[letter]
            a |= x << (qubit - 1)
            b |= z << (qubit - 1)
        return cls(n, a, b)

    @classmethod
    def parse(cls, n: int, text: str) -> PauliString:
        """Parse the compact ``"Z1X4"`` notation; ``"I"`` is the identity.

        Examples
        --------
        >>> PauliString.parse(7, "Z1X4")
        PauliString('Z1X4', n=7)
        """
        text = text.replace(" ", "")
        if text in ("", "I"):
            return cls.identity(n)
        tokens = _TOKEN.findall(text)
        if "".join(f"{l}{q}" for l, q in tokens) != text:
            raise PauliError(f"cannot parse Pauli string {text!r}")
        return cls.from_letters(n, [(int(q), l) for l, q in tokens])

    @classmethod
    def from_indices(cls, indices: Sequence[int]) -> PauliString:
        """Build from per-qubit error indices 0=I, 1=X, 2=Y, 3=Z (qubit 1 first)."""
        a = b = 0
        for j, k in enumerate(indices):
            if k in (1, 2):
                a |= 1 << j
            if k in (2, 3):
                b |= 1 << j
        return cls(len(indices), a, b)

    def letter(self, qubit: int) -> str:
        bit = 1 << (qubit - 1)
        key = (int(bool(self.a & bit)), int(bool(self.b & bit)))
        return _BITS_LETTER.get(key, "I")

    def letters(self) -> Iterator[tuple[int, str]]:
        for q in range(1, self.n + 1):
            ch = self.letter(q)
            if ch != "I":
                yield q, ch

    def indices(self) -> tuple[int, ...]:
        """Inverse of :meth:`from_indices`."""
        code = {"I": 0, "X": 1, "Y": 2, "Z": 3}
        return tuple(code[self.letter(q)] for q in range(1, self.n + 1))

    def symplectic_vector(self) -> tuple[int, ...]:
        """The 2n-bit vector (a_1..a_n | b_1..b_n) with qubit 1 first."""
        return tuple((self.a >> j) & 1 for j in range(self.n)) + tuple(
            (self.b >> j) & 1 for j in range(self.n)
        )

    @property
    def weight(self) -> int:
        return weight(self)

    def __mul__(self, other: PauliString) -> PauliString:
        return multiply(self, other)

    def __str__(self) -> str:
        return "".join(f"{l}{q}" for q, l in self.letters()) or "I"

    def __repr__(self) -> str:
        return f"PauliString({str(self)!r}, n={self.n})"


def _check_same_length(u: PauliString, v: PauliString) -> None:
    if u.n != v.n:
        raise PauliError(f"qubit count mismatch: {u.n} vs {v.n}")


def multiply(lhs: PauliString, rhs: PauliString) -> PauliString:
    """Group product in the phase quotient (componentwise XOR)."""
    _check_same_length(lhs, rhs)
    return PauliString(lhs.n, lhs.a ^ rhs.a, lhs.b ^ rhs.b)


def weight(e: PauliString) -> int:
    """Number of qubits on which ``e`` acts non-trivially."""
    return (e.a | e.b).bit_count()


def symplectic_product(u: PauliString, v: PauliString) -> int:
    """Return 0 if ``u`` and ``v`` commute and 1 if they anticommute."""
    _check_same_length(u, v)
    return ((u.a & v.b).bit_count() + (u.b & v.a).bit_count()) & 1


def from_letter_spec(n: int, letters: Iterable[tuple[int, str]]) -> PauliString:
    return PauliString.from_letters(n, letters)


def all_paulis(n: int) -> Iterator[PauliString]:
    """All 4**n phase-free Paulis on ``n`` qubits."""
    for a in range(1 << n):
        for b in range(1 << n):
            yield PauliString(n, a, b)
