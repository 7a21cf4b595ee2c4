"""Registry of the [[5,1,3]] and [[7,1,3]] stabilizer codes.

Each code carries its generators, check matrix, a named set of correctable
Paulis and the syndrome -> correction lookup that realizes recovery. The
generators are read off the published check matrices, which fixes the
syndrome bit order (first row = most significant bit).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .pauli import PauliError, PauliString, multiply, symplectic_product, weight

CODE_NAMES = ("five_qubit", "seven_qubit_set1", "seven_qubit_set2")

# Short aliases accepted wherever a code name is.
ALIASES = {
    "five": "five_qubit",
    "5": "five_qubit",
    "set1": "seven_qubit_set1",
    "seven_set1": "seven_qubit_set1",
    "set2": "seven_qubit_set2",
    "seven_set2": "seven_qubit_set2",
}


class SyndromeCollisionError(ValueError):
    """Two elements of a correctable set share a syndrome."""

    def __init__(self, first: PauliString, second: PauliString, syndrome: str):
        self.pair = (first, second)
        self.syndrome = syndrome
        super().__init__(
            f"correctable elements {first} and {second} share syndrome {syndrome}"
        )


def _gens(n: int, texts: Iterable[str]) -> tuple[PauliString, ...]:
    return tuple(PauliString.parse(n, t) for t in texts)


def _from_check_rows(n: int, rows: Sequence[tuple[str, str]]) -> tuple[PauliString, ...]:
    # Published rows are (left | right) with qubit 1 leftmost and S = H.v taken
    # as a plain dot product against v = (a|b). That makes the left block the
    # generator's Z-part and the right block its X-part.
    gens = []
    for left, right in rows:
        b = int(left[::-1], 2)
        a = int(right[::-1], 2)
        gens.append(PauliString(n, a, b))
    return tuple(gens)


FIVE_CHECK_ROWS = (
    ("11000", "00101"),
    ("01100", "10010"),
    ("00110", "01001"),
    ("00011", "10100"),
)
SEVEN_CHECK_ROWS = (
    ("1111000", "0000000"),
    ("1100110", "0000000"),
    ("1010101", "0000000"),
    ("0000000", "1111000"),
    ("0000000", "1100110"),
    ("0000000", "1010101"),
)

# Generator lists as printed next to the codeword expansions. The five-qubit
# list spans the same group as the check matrix; the seven-qubit list spans
# its qubit-reversed image.
LISTED_GENERATORS = {
    5: ("X1Z2Z3X4", "X2Z3Z4X5", "X1X3Z4Z5", "Z1X2X4Z5"),
    7: ("X4X5X6X7", "X2X3X6X7", "X1X3X5X7", "Z4Z5Z6Z7", "Z2Z3Z6Z7", "Z1Z3Z5Z7"),
}


def _weight_one(n: int) -> list[str]:
    return [f"{letter}{q}" for letter in "XYZ" for q in range(1, n + 1)]


SET1_WEIGHT_TWO = (
    "X1Z2 X1Z3 X1Z4 X1Z5 X1Z6 X1Z7 Z1X2 X2Z3 X2Z4 X2Z5 X2Z6 X2Z7 "
    "Z1X3 Z2X3 X3Z4 X3Z5 X3Z6 X3Z7 Z1X4 Z2X4 Z3X4 X4Z5 X4Z6 X4Z7 "
    "Z1X5 Z2X5 Z3X5 Z4X5 X5Z6 X5Z7 Z1X6 Z2X6 Z3X6 Z4X6 Z5X6 X6Z7 "
    "Z1X7 Z2X7 Z3X7 Z4X7 Z5X7 Z6X7"
).split()
SET2_WEIGHT_TWO = [f"Z{i}Z{j}" for i in range(1, 8) for j in range(i + 1, 8)] + [
    f"Z{i}X{j}" for i in range(1, 8) for j in range(i + 1, 8)
]

CORRECTABLE_SETS = {
    "five_qubit": ["I"] + _weight_one(5),
    "seven_qubit_set1": ["I"] + _weight_one(7) + SET1_WEIGHT_TWO,
    "seven_qubit_set2": ["I"] + _weight_one(7) + SET2_WEIGHT_TWO,
}


class _XorBasis:
    """Incremental F2 row reduction on integer-packed rows."""

    def __init__(self, rows: Iterable[int] = ()):
        self.pivots: dict[int, int] = {}
        for r in rows:
            self.add(r)

    def reduce(self, v: int) -> int:
        while v:
            top = v.bit_length() - 1
            row = self.pivots.get(top)
            if row is None:
                return v
            v ^= row
        return 0

    def add(self, v: int) -> bool:
        v = self.reduce(v)
        if v:
            self.pivots[v.bit_length() - 1] = v
            return True
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _pack(e: PauliString) -> int:
    return e.a | (e.b << e.n)


@dataclass(frozen=True, eq=False)
class CodeSpec:
    """A stabilizer code plus its correctable set and lookup recovery.

    ``recovery_table`` maps each syndrome to the first listed correctable
    element carrying it. ``collisions`` lists every later element whose
    syndrome was already taken; it is empty for a valid correctable set.
    """

    name: str
    n: int
    k: int
    d: int
    generators: tuple[PauliString, ...]
    correctable_set: tuple[PauliString, ...]
    recovery_table: Mapping[str, PauliString]
    collisions: tuple[tuple[PauliString, PauliString, str], ...] = field(default=())

    @property
    def n_checks(self) -> int:
        return self.n - self.k

    @property
    def check_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Rows are the (a|b) symplectic vectors of the generators."""
        return tuple(g.symplectic_vector() for g in self.generators)

    @property
    def is_valid_recovery(self) -> bool:
        return not self.collisions

    @cached_property
    def _basis(self) -> _XorBasis:
        return _XorBasis(_pack(g) for g in self.generators)

    @cached_property
    def members_by_syndrome(self) -> Mapping[str, tuple[PauliString, ...]]:
        out: dict[str, list[PauliString]] = {}
        for e in self.correctable_set:
            out.setdefault(syndrome_of(self, e), []).append(e)
        return MappingProxyType({s: tuple(v) for s, v in out.items()})

    def stabilizer_group(self) -> list[PauliString]:
        """All 2**(n-k) stabilizer elements, by brute-force products."""
        group = []
        for bits in itertools.product((0, 1), repeat=len(self.generators)):
            e = PauliString.identity(self.n)
            for bit, g in zip(bits, self.generators):
                if bit:
                    e = multiply(e, g)
            group.append(e)
        return group

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "generators": [str(g) for g in self.generators],
            "check_matrix": ["".join(map(str, row)) for row in self.check_matrix],
            "correctable_set": [str(e) for e in self.correctable_set],
            "recovery_table": {s: str(e) for s, e in sorted(self.recovery_table.items())},
            "collisions": [[str(a), str(b), s] for a, b, s in self.collisions],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def __repr__(self) -> str:
        return f"CodeSpec({self.name!r}, [[{self.n},{self.k},{self.d}]])"


def canonical_name(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in CODE_NAMES:
        raise ValueError(f"unknown code {name!r}; expected one of {', '.join(CODE_NAMES)}")
    return name


def syndrome_of(code: CodeSpec, e: PauliString) -> str:
    """Syndrome bit string, generator 1 first (most significant)."""
    if e.n != code.n:
        raise PauliError(f"error acts on {e.n} qubits, code has {code.n}")
    return "".join(str(symplectic_product(g, e)) for g in code.generators)


def recovery_for_syndrome(code: CodeSpec, syndrome: str) -> PauliString:
    if len(syndrome) != code.n_checks:
        raise ValueError(f"syndrome must have {code.n_checks} bits, got {syndrome!r}")
    return code.recovery_table[syndrome]


def is_in_stabilizer_group(code: CodeSpec, e: PauliString) -> bool:
    """Row-span membership of ``e`` in the check matrix, by F2 elimination."""
    if e.n != code.n:
        raise PauliError(f"error acts on {e.n} qubits, code has {code.n}")
    return code._basis.reduce(_pack(e)) == 0


@dataclass(frozen=True)
class DetectabilityReport:
    passed: bool
    n_pairs: int
    failures: tuple[tuple[PauliString, PauliString, PauliString], ...]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "n_pairs": self.n_pairs,
            "failures": [[str(x) for x in f] for f in self.failures],
        }


def detectability_check(code: CodeSpec, elements: Sequence[PauliString]) -> DetectabilityReport:
    """Check that every pairwise product is detectable or a stabilizer.

    A product with zero syndrome that is not in the stabilizer group is a
    logical operator; such pairs are reported as ``(e_l, e_k, e_l * e_k)``.
    """
    zero = "0" * code.n_checks
    failures = []
    n_pairs = 0
    for i, el in enumerate(elements):
        for j, ek in enumerate(elements):
            if i == j:
                continue
            n_pairs += 1
            prod = multiply(el, ek)
            if syndrome_of(code, prod) == zero and not is_in_stabilizer_group(code, prod):
                failures.append((el, ek, prod))
    return DetectabilityReport(not failures, n_pairs, tuple(failures))


def make_code(
    name: str,
    n: int,
    k: int,
    d: int,
    generators: Sequence[PauliString],
    correctable: Sequence[PauliString],
    *,
    allow_collisions: bool = False,
) -> CodeSpec:
    """Assemble and validate a :class:`CodeSpec`.

    Raises
    ------
    ValueError
        If generators fail to commute or are not independent.
    SyndromeCollisionError
        If two correctable elements share a syndrome and
        ``allow_collisions`` is false.
    """
    generators = tuple(generators)
    if len(generators) != n - k:
        raise ValueError(f"{name}: expected {n - k} generators, got {len(generators)}")
    for g, h in itertools.combinations(generators, 2):
        if symplectic_product(g, h):
            raise ValueError(f"{name}: generators {g} and {h} anticommute")
    if _XorBasis(_pack(g) for g in generators).rank != len(generators):
        raise ValueError(f"{name}: generators are not independent")

    draft = CodeSpec(name, n, k, d, generators, tuple(correctable), MappingProxyType({}))
    table: dict[str, PauliString] = {}
    collisions = []
    for e in draft.correctable_set:
        s = syndrome_of(draft, e)
        if s in table:
            if not allow_collisions:
                raise SyndromeCollisionError(table[s], e, s)
            collisions.append((table[s], e, s))
            continue
        table[s] = e
    return CodeSpec(
        name, n, k, d, generators, draft.correctable_set,
        MappingProxyType(table), tuple(collisions),
    )


@lru_cache(maxsize=None)
def build_code(name: str, *, allow_collisions: bool = False) -> CodeSpec:
    """Build one of the registered codes by name.

    ``seven_qubit_set2`` as published contains pairs such as Z3 and Z1Z2 whose
    syndromes coincide, so it only builds with ``allow_collisions=True``. The
    lookup table then keeps the first listed element of each syndrome class
    (weight-1 before weight-2) and the clashes are kept in ``collisions``.
    """
    name = canonical_name(name)
    if name == "five_qubit":
        n, gens = 5, _from_check_rows(5, FIVE_CHECK_ROWS)
    else:
        n, gens = 7, _from_check_rows(7, SEVEN_CHECK_ROWS)
    correctable = [PauliString.parse(n, t) for t in CORRECTABLE_SETS[name]]
    return make_code(name, n, 1, 3, gens, correctable, allow_collisions=allow_collisions)


def listed_generators(n: int) -> tuple[PauliString, ...]:
    return _gens(n, LISTED_GENERATORS[n])


def min_stabilizer_weight(code: CodeSpec) -> int:
    return min(weight(s) for s in code.stabilizer_group() if s.a or s.b)
