"""Brute-force search walk on the full arc space of K_{n1,n2}.

Vertex ids: X occupies ``0 .. n1-1`` with the marked vertices first
(``0 .. k-1``), Y occupies ``n1 .. n1+n2-1``. Arcs are laid out as

* ``x * n2 + y``             for the arc x -> n1+y,
* ``n1*n2 + y * n1 + x``     for the arc n1+y -> x.

One search step is ``U = S G Q``: oracle sign flip on arcs leaving a marked
vertex, Grover coin ``2|s_v><s_v| - I`` on the arcs leaving each vertex, then
the flip-flop shift ``|i,j> -> |j,i>``. The step is applied as three O(n1*n2)
passes; the dense matrix is only materialised on request.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import DimensionTooLarge, SubspaceLeak
from .model import InitialState, SearchInstance, SubspaceAmplitudes

DEFAULT_MAX_DIM = 2**22
DENSE_MAX_DIM = 2**12

ORACLES = ("tail", "head", "none")


def arc_index(inst: SearchInstance, tail: int, head: int) -> int:
    n1, n2 = inst.n1, inst.n2
    if tail < n1 <= head < n1 + n2:
        return tail * n2 + (head - n1)
    if head < n1 <= tail < n1 + n2:
        return n1 * n2 + (tail - n1) * n1 + head
    raise ValueError(f"({tail}, {head}) is not an arc of K_{{{n1},{n2}}}")


def arc_endpoints(inst: SearchInstance, index: int) -> tuple[int, int]:
    n1, n2 = inst.n1, inst.n2
    if not 0 <= index < 2 * n1 * n2:
        raise IndexError(index)
    if index < n1 * n2:
        x, y = divmod(index, n2)
        return x, n1 + y
    y, x = divmod(index - n1 * n2, n1)
    return n1 + y, x


def _check_dim(inst: SearchInstance, max_dim: int) -> None:
    if inst.n_arcs > max_dim:
        raise DimensionTooLarge(f"arc space dimension {inst.n_arcs} exceeds cap {max_dim}")


@dataclass(frozen=True)
class StepOperator:
    """Structured search step ``U = S G Q`` on the arc space.

    ``oracle`` selects which arcs get the sign flip: ``"tail"`` (arcs leaving a
    marked vertex, the search oracle), ``"none"`` (plain walk ``W``) or
    ``"head"`` (arcs entering a marked vertex; only used to exercise the
    validation harness with a deliberately wrong oracle).
    """

    inst: SearchInstance
    oracle: str = "tail"

    def __post_init__(self):
        if self.oracle not in ORACLES:
            raise ValueError(f"oracle must be one of {ORACLES}, got {self.oracle!r}")

    @property
    def dim(self) -> int:
        return self.inst.n_arcs

    def apply(self, state: np.ndarray) -> np.ndarray:
        n1, n2, k = self.inst.n1, self.inst.n2, self.inst.k
        half = n1 * n2
        xy = np.array(state[:half]).reshape(n1, n2)
        yx = np.array(state[half:]).reshape(n2, n1)
        if self.oracle == "tail":
            xy[:k] *= -1
        elif self.oracle == "head":
            yx[:, :k] *= -1
        xy = 2 * xy.mean(axis=1, keepdims=True) - xy
        yx = 2 * yx.mean(axis=1, keepdims=True) - yx
        return np.concatenate([yx.T.reshape(-1), xy.T.reshape(-1)])

    __call__ = apply

    def dense(self) -> np.ndarray:
        if self.dim > DENSE_MAX_DIM:
            raise DimensionTooLarge(f"refusing to densify a {self.dim}-dimensional operator")
        return np.column_stack([self.apply(col) for col in np.eye(self.dim)])


def build_step_operator(inst: SearchInstance, oracle: str = "tail", max_dim: int = DEFAULT_MAX_DIM) -> StepOperator:
    _check_dim(inst, max_dim)
    return StepOperator(inst, oracle)


def initial_arc_state(inst: SearchInstance) -> np.ndarray:
    """Arc-space initial state, built from its vertex/edge definition."""
    n1, n2 = inst.n1, inst.n2
    state = np.empty(inst.n_arcs, dtype=complex)
    if inst.init is InitialState.VERTEX_UNIFORM:
        n = n1 + n2
        # each vertex carries 1/n, spread evenly over its outgoing arcs
        state[: n1 * n2] = 1 / np.sqrt(n * n2)
        state[n1 * n2 :] = 1 / np.sqrt(n * n1)
    else:
        state[:] = 1 / np.sqrt(inst.n_arcs)
    return state


def iter_evolution(
    inst: SearchInstance, t_max: int, op: StepOperator | None = None, max_dim: int = DEFAULT_MAX_DIM
) -> Iterator[np.ndarray]:
    """Yield the arc state at steps ``0 .. t_max``."""
    op = op or build_step_operator(inst, max_dim=max_dim)
    state = initial_arc_state(inst)
    yield state
    for _ in range(t_max):
        state = op.apply(state)
        yield state


def evolve(inst: SearchInstance, t: int, op: StepOperator | None = None, max_dim: int = DEFAULT_MAX_DIM) -> np.ndarray:
    if t < 0:
        raise ValueError(f"step must be nonnegative, got {t}")
    for state in iter_evolution(inst, t, op, max_dim):
        pass
    return state


def subspace_basis(inst: SearchInstance) -> np.ndarray:
    """Columns are the arc-space vectors of ``|ab>, |ba>, |bc>, |cb>``."""
    n1, n2, k = inst.n1, inst.n2, inst.k
    half = n1 * n2
    basis = np.zeros((inst.n_arcs, 4))
    xy = basis[:half].reshape(n1, n2, 4)
    yx = basis[half:].reshape(n2, n1, 4)
    xy[:k, :, 0] = 1 / np.sqrt(k * n2)
    yx[:, :k, 1] = 1 / np.sqrt(k * n2)
    yx[:, k:, 2] = 1 / np.sqrt((n1 - k) * n2)
    xy[k:, :, 3] = 1 / np.sqrt((n1 - k) * n2)
    return basis


def project_to_subspace(state: np.ndarray, basis: np.ndarray, imag_tol: float = 1e-10) -> tuple[SubspaceAmplitudes, float]:
    """Overlaps with the four basis vectors and the norm left outside their span."""
    state = np.asarray(state)
    overlaps = basis.T @ state
    if np.max(np.abs(np.imag(overlaps)), initial=0.0) > imag_tol:
        raise ValueError("subspace overlaps have a non-negligible imaginary part")
    residual = float(np.linalg.norm(state - basis @ overlaps))
    return SubspaceAmplitudes.from_array(np.real(overlaps)), residual


def success_probability_full(state: np.ndarray, inst: SearchInstance) -> float:
    marked = np.asarray(state)[: inst.k * inst.n2]
    return float(np.sum(np.abs(marked) ** 2))


def extract_subspace_operator(
    inst: SearchInstance, op: StepOperator | None = None, leak_tol: float = 1e-8, max_dim: int = DEFAULT_MAX_DIM
) -> np.ndarray:
    """Restriction ``B^T U B`` of the step operator to the invariant subspace."""
    op = op or build_step_operator(inst, max_dim=max_dim)
    basis = subspace_basis(inst)
    image = np.column_stack([op.apply(basis[:, j]) for j in range(4)])
    reduced = basis.T @ image
    leak = np.linalg.norm(image - basis @ reduced)
    if leak > leak_tol:
        raise SubspaceLeak(f"step operator leaks out of the subspace (|UB - BM| = {leak:.3e})")
    return np.real(reduced)
