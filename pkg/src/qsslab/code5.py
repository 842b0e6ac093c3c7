"""The five-qubit [[5,1,3]] code: code words, Pauli action, distance check.

The two code words are stored as explicit 16-term amplitude tables in the
computational basis (textbook sign convention, normalization 1/4). The
tables are the single source of truth for encoding; nothing here derives
them from stabilizer generators.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .quantum_core import NORM_ATOL, PureState

#: (bit string, sign) terms of the code word for classical bit 0.
WORD_TERMS_0: tuple[tuple[str, int], ...] = (
    ("00000", +1), ("10010", +1), ("01001", +1), ("10100", +1),
    ("01010", +1), ("11011", -1), ("00110", -1), ("11000", -1),
    ("11101", -1), ("00011", -1), ("11110", -1), ("01111", -1),
    ("10001", -1), ("01100", -1), ("10111", -1), ("00101", +1),
)

#: (bit string, sign) terms of the code word for classical bit 1.
WORD_TERMS_1: tuple[tuple[str, int], ...] = (
    ("11111", +1), ("01101", +1), ("10110", +1), ("01011", +1),
    ("10101", +1), ("00100", -1), ("11001", -1), ("00111", -1),
    ("00010", -1), ("11100", -1), ("00001", -1), ("10000", -1),
    ("01110", -1), ("10011", -1), ("01000", -1), ("11010", +1),
)


@dataclass(frozen=True)
class CodeTable:
    """Amplitude tables of the two code words.

    Each table holds exactly 16 distinct 5-bit strings with signs, and the
    two supports are disjoint, which makes the code words orthogonal.
    """

    terms_0: tuple[tuple[str, int], ...] = WORD_TERMS_0
    terms_1: tuple[tuple[str, int], ...] = WORD_TERMS_1
    normalization: float = 0.25

    def __post_init__(self) -> None:
        for name, terms in (("terms_0", self.terms_0), ("terms_1", self.terms_1)):
            if len(terms) != 16:
                raise ValueError(f"{name} must have 16 terms, got {len(terms)}")
            for bits, sign in terms:
                if len(bits) != 5 or set(bits) - {"0", "1"}:
                    raise ValueError(f"bad bit string {bits!r} in {name}")
                if sign not in (-1, 1):
                    raise ValueError(f"bad sign {sign!r} in {name}")
            if len({bits for bits, _ in terms}) != 16:
                raise ValueError(f"duplicate bit strings in {name}")
        support_0 = {bits for bits, _ in self.terms_0}
        support_1 = {bits for bits, _ in self.terms_1}
        if support_0 & support_1:
            raise ValueError("code word supports must be disjoint")

    def amplitudes(self, s: int) -> np.ndarray:
        terms = self.terms_0 if s == 0 else self.terms_1
        amps = np.zeros(32, dtype=complex)
        for bits, sign in terms:
            amps[int(bits, 2)] = sign * self.normalization
        return amps


CODE_TABLE = CodeTable()


@functools.lru_cache(maxsize=2)
def encode_classical(s: int) -> PureState:
    """Five-qubit code word carrying the classical bit ``s``."""
    if s not in (0, 1):
        raise ValueError(f"secret bit must be 0 or 1, got {s!r}")
    return PureState(5, CODE_TABLE.amplitudes(s))


@dataclass(frozen=True)
class QubitSecret:
    """One-qubit secret alpha0|0> + alpha1|1>."""

    alpha0: complex
    alpha1: complex

    def __post_init__(self) -> None:
        norm_sq = abs(self.alpha0) ** 2 + abs(self.alpha1) ** 2
        if abs(norm_sq - 1.0) > NORM_ATOL:
            raise ValueError(f"secret is not normalized: |alpha|^2 = {norm_sq!r}")

    def amplitudes(self) -> np.ndarray:
        return np.array([self.alpha0, self.alpha1], dtype=complex)


def encode_quantum(secret: QubitSecret) -> PureState:
    """Encode alpha0|0> + alpha1|1> into the five-qubit code space.

    Linearity plus the orthogonality of the code words guarantees the
    result is unit norm.
    """
    amps = (
        secret.alpha0 * encode_classical(0).amplitudes
        + secret.alpha1 * encode_classical(1).amplitudes
    )
    return PureState(5, amps)


@dataclass(frozen=True)
class PauliOperator:
    """Tensor product of single-qubit Paulis, e.g. "XIYZI"."""

    letters: str

    def __post_init__(self) -> None:
        if set(self.letters) - set("IXYZ"):
            raise ValueError(f"letters must be over IXYZ, got {self.letters!r}")

    @property
    def weight(self) -> int:
        return sum(1 for c in self.letters if c != "I")


def apply_pauli(op: PauliOperator, psi: PureState) -> PureState:
    """Apply a Pauli string to a state (Y = iXZ convention).

    X flips the bit at its position, Z multiplies by (-1)^bit, and the
    norm is preserved exactly.
    """
    if len(op.letters) != psi.num_qubits:
        raise ValueError(
            f"operator acts on {len(op.letters)} qubits, state has {psi.num_qubits}"
        )
    n = psi.num_qubits
    idx = np.arange(psi.dim)
    amps = psi.amplitudes
    for pos, letter in enumerate(op.letters):
        if letter == "I":
            continue
        shift = n - 1 - pos
        bit_sign = np.where((idx >> shift) & 1, -1.0, 1.0)
        if letter == "X":
            amps = amps[idx ^ (1 << shift)]
        elif letter == "Z":
            amps = amps * bit_sign
        else:  # Y = i X Z
            amps = 1j * (amps * bit_sign)[idx ^ (1 << shift)]
    return PureState(n, amps)


@dataclass(frozen=True)
class WeightCheck:
    """Worst-case error-operator matrix elements at one Pauli weight."""

    weight: int
    operators_checked: int
    max_off_diagonal: float
    max_diagonal_difference: float
    violations: int
    first_violation: Optional[str]


@dataclass(frozen=True)
class DistanceReport:
    """Outcome of the exhaustive error-operator scan up to max_weight.

    An operator E violates the correctability conditions when
    |<w0|E|w1>| or |<w0|E|w0> - <w1|E|w1>| exceeds the tolerance; the
    certified distance is the smallest weight where that happens.
    """

    max_weight: int
    tolerance: float
    checks: tuple[WeightCheck, ...]

    @property
    def certified_distance(self) -> Optional[int]:
        """Smallest weight with a violation, or None if none seen yet."""
        for check in self.checks:
            if check.violations:
                return check.weight
        return None

    def passes_through_weight(self, weight: int) -> bool:
        """True when every operator of weight <= ``weight`` is clean."""
        return all(c.violations == 0 for c in self.checks if c.weight <= weight)


def verify_distance(max_weight: int, tolerance: float = 1e-9) -> DistanceReport:
    """Scan all Pauli operators of weight 1..max_weight against the code.

    For each operator E this compares the two code words through
    off = <w0|E|w1> and diagdiff = <w0|E|w0> - <w1|E|w1>; both must
    vanish for correctable errors.
    """
    if not 1 <= max_weight <= 5:
        raise ValueError(f"max_weight must be in 1..5, got {max_weight}")
    w0 = encode_classical(0)
    w1 = encode_classical(1)
    checks = []
    for weight in range(1, max_weight + 1):
        count = 0
        max_off = 0.0
        max_dd = 0.0
        violations = 0
        first: Optional[str] = None
        for positions in itertools.combinations(range(5), weight):
            for letters in itertools.product("XYZ", repeat=weight):
                full = ["I"] * 5
                for pos, letter in zip(positions, letters):
                    full[pos] = letter
                op = PauliOperator("".join(full))
                e_w1 = apply_pauli(op, w1).amplitudes
                e_w0 = apply_pauli(op, w0).amplitudes
                off = abs(np.vdot(w0.amplitudes, e_w1))
                diag_diff = abs(
                    np.vdot(w0.amplitudes, e_w0) - np.vdot(w1.amplitudes, e_w1)
                )
                count += 1
                max_off = max(max_off, off)
                max_dd = max(max_dd, diag_diff)
                if off > tolerance or diag_diff > tolerance:
                    violations += 1
                    if first is None:
                        first = op.letters
        checks.append(
            WeightCheck(
                weight=weight,
                operators_checked=count,
                max_off_diagonal=max_off,
                max_diagonal_difference=max_dd,
                violations=violations,
                first_violation=first,
            )
        )
    return DistanceReport(max_weight=max_weight, tolerance=tolerance, checks=tuple(checks))
