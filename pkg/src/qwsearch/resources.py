"""Coherence and entanglement meters.

Qubit registers are numpy state vectors with qubit 0 as the most significant
bit. Walk states on K_{2^(n-1), 2^(n-1)} with one marked vertex are encoded on
``2n`` qubits: an n-qubit tail register followed by an n-qubit head register.
The first qubit of each register is 0 for X and 1 for Y; the marked vertex is
the all-zeros X label.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import closedform
from .errors import EncodingMismatch, InvalidQubitIndex, NotTwoQubit, TooManyQubits
from .model import SearchInstance

BRUTE_FORCE_MAX_QUBITS = 12

_SIGMA_Y = np.array([[0, -1j], [1j, 0]])
_SPIN_FLIP = np.kron(_SIGMA_Y, _SIGMA_Y)


def check_density_matrix(rho: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1) > tol:
        raise ValueError(f"density matrix has trace {np.trace(rho).real}")
    if np.linalg.eigvalsh(rho)[0] < -1e-9:
        raise ValueError("density matrix is not positive semidefinite")
    return rho


def l1_coherence(rho: np.ndarray) -> float:
    """Sum of absolute off-diagonal entries."""
    absolute = np.abs(np.asarray(rho))
    return float(absolute.sum() - np.trace(absolute))


@dataclass(frozen=True)
class EncodingParams:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need at least 2 qubits per vertex label, got {self.n}")

    @property
    def partition_size(self) -> int:
        return 2 ** (self.n - 1)

    @property
    def n_qubits(self) -> int:
        return 2 * self.n

    def matches(self, inst: SearchInstance) -> bool:
        size = self.partition_size
        return inst.n1 == size and inst.n2 == size and inst.k == 1


def encode_subspace_state(amps, p: EncodingParams) -> np.ndarray:
    """Superpose the register images of ``|ab>, |ba>, |bc>, |cb>``."""
    m_ab, m_ba, m_bc, m_cb = amps
    size = p.partition_size
    # axes: tail side, tail label, head side, head label
    psi = np.zeros((2, size, 2, size))
    psi[0, 0, 1, :] = m_ab / math.sqrt(size)
    psi[1, :, 0, 0] = m_ba / math.sqrt(size)
    psi[1, :, 0, 1:] = m_bc / math.sqrt(size * (size - 1))
    psi[0, 1:, 1, :] = m_cb / math.sqrt(size * (size - 1))
    return psi.reshape(-1)


def _n_qubits(state: np.ndarray) -> int:
    m = int(state.size).bit_length() - 1
    if state.ndim != 1 or 2**m != state.size:
        raise ValueError(f"state of size {state.size} is not a qubit register")
    return m


def _split(state: np.ndarray, keep) -> np.ndarray:
    """Reshape so rows index the kept qubits and columns the rest."""
    state = np.asarray(state)
    m = _n_qubits(state)
    keep = list(keep)
    if not keep or len(set(keep)) != len(keep) or any(not 0 <= q < m for q in keep):
        raise InvalidQubitIndex(f"invalid qubit selection {keep} for {m} qubits")
    rest = [q for q in range(m) if q not in keep]
    tensor = state.reshape([2] * m).transpose(keep + rest)
    return tensor.reshape(2 ** len(keep), -1)


def partial_trace(state: np.ndarray, keep) -> np.ndarray:
    """Reduced density matrix of the qubits in ``keep`` (in that order)."""
    mat = _split(state, keep)
    return mat @ mat.conj().T


def purity(state: np.ndarray, keep) -> float:
    mat = _split(state, keep)
    # Tr rho^2 = ||M M^+||_F^2; use the smaller Gram matrix
    gram = mat @ mat.conj().T if mat.shape[0] <= mat.shape[1] else mat.conj().T @ mat
    return float(np.sum(np.abs(gram) ** 2))


def linear_entropy(state: np.ndarray, keep) -> float:
    """``1 - Tr rho^2`` of the reduced state on ``keep``.

    Evaluated as ``2 * sum_{i<j} l_i l_j`` over the Schmidt weights, a sum of
    nonnegative terms, so product states give ~1e-32 instead of ~1e-16.
    """
    weights = np.linalg.svd(_split(state, keep), compute_uv=False) ** 2
    tail = np.cumsum(weights[::-1])[::-1]
    return float(2 * np.dot(weights[:-1], tail[1:]))


def _psd_sqrt(rho: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(rho)
    return (v * np.sqrt(np.clip(w, 0, None))) @ v.conj().T


def wootters_concurrence(rho: np.ndarray) -> float:
    """Two-qubit concurrence ``max(0, l1 - l2 - l3 - l4)``.

    The ``l_i`` are the singular values of ``sqrt(rho) sqrt(rho~)``, i.e. the
    square roots of the eigenvalues of ``rho rho~``.
    """
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        raise NotTwoQubit(f"expected a 4x4 density matrix, got shape {rho.shape}")
    root = _psd_sqrt(rho)
    flipped_root = _SPIN_FLIP @ root.conj() @ _SPIN_FLIP
    lam = np.linalg.svd(root @ flipped_root, compute_uv=False)
    return max(0.0, float(lam[0] - lam[1:].sum()))


def _check_cap(m: int) -> None:
    if m > BRUTE_FORCE_MAX_QUBITS:
        raise TooManyQubits(f"{m} qubits exceeds the brute-force cap of {BRUTE_FORCE_MAX_QUBITS}")


def pairwise_concurrences(state: np.ndarray) -> dict[tuple[int, int], float]:
    m = _n_qubits(np.asarray(state))
    _check_cap(m)
    return {
        (i, j): wootters_concurrence(partial_trace(state, (i, j)))
        for i, j in itertools.combinations(range(m), 2)
    }


def pairwise_concurrence_sum(state: np.ndarray) -> float:
    """Sum of concurrences of every two-qubit reduced state."""
    return math.fsum(pairwise_concurrences(state).values())


def sC_closed_form(amps, n: int) -> float:
    m1, m2, m3, m4 = amps
    size = 2 ** (n - 1)
    value = m1 * m2 / size + math.sqrt(size - 1) / size * (m1 * m3 + m2 * m4) + (size - 1) / size * m3 * m4
    return max(value, 0.0)


def multipartite_concurrence(state: np.ndarray, use_symmetry: bool = True) -> float:
    """Multipartite concurrence of a pure state over all proper nonempty subsets.

    With ``use_symmetry`` each subset and its complement share one purity
    evaluation (they have equal purity for a pure global state).
    """
    state = np.asarray(state)
    m = _n_qubits(state)
    _check_cap(m)
    # 2^m - 2 - sum_a Tr rho_a^2 == sum_a (1 - Tr rho_a^2)
    terms = []
    for size in range(1, m):
        for subset in itertools.combinations(range(m), size):
            if use_symmetry:
                if 0 in subset:
                    terms.append(2 * linear_entropy(state, subset))
            else:
                terms.append(linear_entropy(state, subset))
    numerator = math.fsum(terms)
    return 2 * math.sqrt(max(numerator, 0.0) / 2**m)


@dataclass(frozen=True)
class ResourceRow:
    t: int
    P: float
    C_l1: float
    sC_closed: float | None = None
    sC_brute: float | None = None
    MC: float | None = None


def parity_steps(t_max: int, parity: str = "all") -> list[int]:
    if parity not in ("even", "odd", "all"):
        raise ValueError(f"parity must be even, odd or all, got {parity!r}")
    start = 1 if parity == "odd" else 0
    stride = 1 if parity == "all" else 2
    return list(range(start, t_max + 1, stride))


def resource_series(
    inst: SearchInstance,
    p: EncodingParams | None,
    t_max: int,
    parity: str = "all",
    brute_force: bool | None = None,
) -> list[ResourceRow]:
    """Success probability, coherence and entanglement along the walk.

    Entanglement columns need the encoding to match the instance. The
    brute-force columns (``sC_brute``, ``MC``) are filled when the register has
    at most :data:`BRUTE_FORCE_MAX_QUBITS` qubits, unless ``brute_force`` says
    otherwise.
    """
    if p is not None and not p.matches(inst):
        raise EncodingMismatch(
            f"encoding with n={p.n} needs n1 = n2 = {p.partition_size}, k = 1; got {inst}"
        )
    if p is not None and brute_force is None:
        brute_force = p.n_qubits <= BRUTE_FORCE_MAX_QUBITS
    if p is not None and brute_force:
        _check_cap(p.n_qubits)
    rows = []
    for t in parity_steps(t_max, parity):
        amps = closedform.state_at(inst, t)
        row = dict(t=t, P=closedform.success_probability(inst, t), C_l1=closedform.coherence_at(inst, t))
        if p is not None:
            row["sC_closed"] = sC_closed_form(amps, p.n)
            if brute_force:
                psi = encode_subspace_state(amps, p)
                row["sC_brute"] = pairwise_concurrence_sum(psi)
                row["MC"] = multipartite_concurrence(psi)
        rows.append(ResourceRow(**row))
    return rows


def encoding_for(inst: SearchInstance) -> EncodingParams:
    """Encoding parameters matching ``inst``, or :class:`EncodingMismatch`."""
    n = inst.n1.bit_length()
    if n >= 2 and inst.n1 == 2 ** (n - 1):
        p = EncodingParams(n)
        if p.matches(inst):
            return p
    raise EncodingMismatch(f"{inst} has no qubit encoding (need n1 = n2 = 2^(n-1), k = 1)")

