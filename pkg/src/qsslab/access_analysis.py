"""Access-structure analysis of the five-qubit sharing scheme.

For a subset J of the five participants, the two classical secrets leave
J holding reduced states rho0^J and rho1^J. Classification is operational:
J is Qualified when the two are perfectly distinguishable (trace distance
1) and Forbidden when they are indistinguishable and carry zero Holevo
information. This scheme is perfect, so every subset must land in exactly
one class; anything else signals an implementation bug and raises.

Reconstruction comes in two flavors: a projective measurement recovering
the classical bit, and an exact erasure-recovery channel (a transpose /
Petz map built from the code's correctability data) recovering the full
qubit secret for subsets of three or more shares.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

import numpy as np

from .code5 import QubitSecret, encode_classical
from .quantum_core import (
    PSD_ATOL,
    DensityMatrix,
    all_nonempty_subsets,
    reduced_state,
    share_subset,
    trace_distance,
    trace_norm,
    von_neumann_entropy,
)

#: Deviation allowed when deciding Qualified / Forbidden.
CLASSIFICATION_ATOL = 1e-9


class UnqualifiedSubsetError(ValueError):
    """Raised when quantum reconstruction is requested for a forbidden set."""


class IndeterminateClassificationError(RuntimeError):
    """A subset matched neither classification predicate (perfectness bug)."""


class Classification(str, Enum):
    QUALIFIED = "Qualified"
    FORBIDDEN = "Forbidden"


@dataclass(frozen=True)
class SecretPrior:
    """Probability distribution (q0, q1) of the classical secret bit."""

    q0: float
    q1: float

    def __post_init__(self) -> None:
        if self.q0 < 0 or self.q1 < 0:
            raise ValueError(f"probabilities must be nonnegative: {self}")
        if abs(self.q0 + self.q1 - 1.0) > 1e-12:
            raise ValueError(f"probabilities must sum to 1: {self}")

    @classmethod
    def from_q0(cls, q0: float) -> "SecretPrior":
        return cls(q0, 1.0 - q0)

    @property
    def entropy_bits(self) -> float:
        """Binary entropy H(q0) in bits."""
        total = 0.0
        for q in (self.q0, self.q1):
            if q > 1e-12:
                total -= q * math.log2(q)
        return total


UNIFORM_PRIOR = SecretPrior(0.5, 0.5)


@functools.lru_cache(maxsize=None)
def _codeword_reduction(s: int, members: tuple[int, ...]) -> DensityMatrix:
    return reduced_state(encode_classical(s), members)


def codeword_reductions(j: Iterable[int]) -> tuple[DensityMatrix, DensityMatrix]:
    """Reduced states (rho0^J, rho1^J) of the two code words on J."""
    members = share_subset(j)
    return _codeword_reduction(0, members), _codeword_reduction(1, members)


def holevo_information(j: Iterable[int], prior: SecretPrior = UNIFORM_PRIOR) -> float:
    """Holevo information of the share set J about the secret bit, in bits.

    Computed as S(q0 rho0^J + q1 rho1^J) - (q0 S(rho0^J) + q1 S(rho1^J)).
    """
    rho0, rho1 = codeword_reductions(j)
    mixture = DensityMatrix(prior.q0 * rho0.matrix + prior.q1 * rho1.matrix)
    return von_neumann_entropy(mixture) - (
        prior.q0 * von_neumann_entropy(rho0) + prior.q1 * von_neumann_entropy(rho1)
    )


@dataclass(frozen=True)
class SubsetVerdict:
    subset: tuple[int, ...]
    holevo_bits: float
    trace_dist: float
    classification: Classification


def classify_subset(
    j: Iterable[int], prior: SecretPrior = UNIFORM_PRIOR
) -> SubsetVerdict:
    """Classify one share subset as Qualified or Forbidden.

    Qualified means trace distance 1 (the two encoded bits are perfectly
    distinguishable from J alone); Forbidden means zero trace distance and
    zero Holevo information. A subset matching neither raises
    IndeterminateClassificationError.
    """
    members = share_subset(j)
    rho0, rho1 = codeword_reductions(members)
    holevo = holevo_information(members, prior)
    dist = trace_distance(rho0, rho1)
    if dist >= 1.0 - CLASSIFICATION_ATOL:
        classification = Classification.QUALIFIED
    elif holevo <= CLASSIFICATION_ATOL and dist <= CLASSIFICATION_ATOL:
        classification = Classification.FORBIDDEN
    else:
        raise IndeterminateClassificationError(
            f"subset {members}: holevo={holevo!r}, trace_dist={dist!r} "
            "matches neither classification"
        )
    return SubsetVerdict(
        subset=members,
        holevo_bits=holevo,
        trace_dist=dist,
        classification=classification,
    )


@dataclass(frozen=True)
class AccessReport:
    """Verdicts for all 31 nonempty subsets, ordered by (size, members)."""

    prior: SecretPrior
    verdicts: tuple[SubsetVerdict, ...]

    def __post_init__(self) -> None:
        expected = all_nonempty_subsets(5)
        if [v.subset for v in self.verdicts] != expected:
            raise ValueError("verdicts must cover all 31 subsets in canonical order")

    @property
    def is_threshold(self) -> bool:
        """True when qualified subsets are exactly those of size >= 3."""
        return all(
            (v.classification is Classification.QUALIFIED) == (len(v.subset) >= 3)
            for v in self.verdicts
        )

    def to_records(self) -> list[dict]:
        return [
            {
                "members": list(v.subset),
                "holevo_bits": v.holevo_bits,
                "trace_dist": v.trace_dist,
                "classification": v.classification.value,
            }
            for v in self.verdicts
        ]


def access_structure_report(prior: SecretPrior = UNIFORM_PRIOR) -> AccessReport:
    """Classify every nonempty subset of the five shares."""
    verdicts = tuple(classify_subset(s, prior) for s in all_nonempty_subsets(5))
    return AccessReport(prior=prior, verdicts=verdicts)


@dataclass(frozen=True)
class ClassicalReconstruction:
    """Outcome of measuring the code-word support projector on J."""

    guess: int
    success_probability: float
    support_overlap: float


def reconstruct_classical(
    j: Iterable[int],
    state: DensityMatrix,
    prior: SecretPrior = UNIFORM_PRIOR,
) -> ClassicalReconstruction:
    """Guess the classical secret from the shares in J.

    Measures the projector onto the support of rho0^J against its
    complement and reports the induced guess together with the optimal
    (Helstrom) success probability (1/2)(1 + ||q0 rho0 - q1 rho1||_1).
    For a qualified J and an honestly encoded input the guess is certain.
    """
    members = share_subset(j)
    rho0, rho1 = codeword_reductions(members)
    if state.dim != rho0.dim:
        raise ValueError(f"state has dimension {state.dim}, expected {rho0.dim}")
    projector = rho0.support_projector(PSD_ATOL)
    overlap = float(np.real(np.trace(projector @ state.matrix)))
    guess = 0 if overlap >= 0.5 else 1
    success = 0.5 * (
        1.0 + trace_norm(prior.q0 * rho0.matrix - prior.q1 * rho1.matrix)
    )
    return ClassicalReconstruction(
        guess=guess, success_probability=success, support_overlap=overlap
    )


@functools.lru_cache(maxsize=None)
def _recovery_kraus(members: tuple[int, ...]) -> tuple[np.ndarray, ...]:
    """Kraus operators of the exact erasure-recovery channel for J.

    Losing the complement of J is the channel N(rho_L) = Tr_Jbar(V rho_L V+)
    with V the encoding isometry. Because the code corrects that erasure,
    the transpose (Petz) map of N taken at the maximally mixed logical
    state inverts it exactly:

        R(X) = sigma^{1/2} N+( M^{-1/2} X M^{-1/2} ) sigma^{1/2},

    with sigma = I/2 and M = N(I/2); inverses act on the support of M.
    Returned operators map dim(J) -> 2 and satisfy sum L+ L = P_supp(M).
    """
    n = 5
    kept = [q - 1 for q in members]
    erased = [q - 1 for q in range(1, n + 1) if q not in members]
    dim_kept = 2 ** len(kept)
    dim_erased = 2 ** len(erased)

    blocks = []
    for s in (0, 1):
        amps = encode_classical(s).amplitudes
        blocks.append(
            amps.reshape([2] * n).transpose(kept + erased).reshape(dim_kept, dim_erased)
        )
    forward = [
        np.stack([blocks[0][:, e], blocks[1][:, e]], axis=1) for e in range(dim_erased)
    ]

    mixed = sum(k @ k.conj().T for k in forward) / 2.0
    rho_mix = DensityMatrix(mixed)
    lam, vec = rho_mix.eigenvalues, rho_mix.eigenvectors
    inv_sqrt = np.zeros_like(lam)
    support = lam > PSD_ATOL
    inv_sqrt[support] = 1.0 / np.sqrt(lam[support])
    m_inv_half = (vec * inv_sqrt) @ vec.conj().T

    sigma_half = 1.0 / math.sqrt(2.0)
    recovery = []
    for k in forward:
        op = sigma_half * k.conj().T @ m_inv_half
        op.setflags(write=False)
        recovery.append(op)
    return tuple(recovery)


@dataclass(frozen=True)
class QuantumReconstruction:
    """Recovered one-qubit state, plus fidelity when the secret is known."""

    recovered: DensityMatrix
    fidelity: Optional[float]


def reconstruct_quantum(
    j: Iterable[int],
    state: DensityMatrix,
    secret: Optional[QubitSecret] = None,
) -> QuantumReconstruction:
    """Recover the qubit secret from the shares in J (|J| >= 3).

    ``state`` must be the reduced state on J of an encoded secret; the
    recovery channel then returns that secret exactly. When ``secret`` is
    supplied, the fidelity <secret|recovered|secret> is reported as well.
    Subsets of two or fewer shares hold no information and raise
    UnqualifiedSubsetError.
    """
    members = share_subset(j)
    if len(members) <= 2:
        raise UnqualifiedSubsetError(
            f"subset {members} is unqualified: reconstruction is impossible"
        )
    if state.dim != 2 ** len(members):
        raise ValueError(
            f"state has dimension {state.dim}, expected {2 ** len(members)}"
        )
    out = np.zeros((2, 2), dtype=complex)
    for kraus in _recovery_kraus(members):
        out += kraus @ state.matrix @ kraus.conj().T
    recovered = DensityMatrix(out)
    fidelity = None
    if secret is not None:
        target = secret.amplitudes()
        fidelity = float(np.real(target.conj() @ recovered.matrix @ target))
    return QuantumReconstruction(recovered=recovered, fidelity=fidelity)
