"""Generalized depolarizing noise acting inside the 4-dim invariant subspace.

Each step first depolarizes, then applies the walk: ``d_n = U E(d_{n-1}) U^+``
with ``E(D) = (1 - alpha)/d Tr(D) I + alpha D``. The subspace operator ``U``
comes from :func:`qwsearch.fullsim.extract_subspace_operator`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import closedform
from .fullsim import extract_subspace_operator
from .model import SearchInstance, initial_amplitudes
from .resources import l1_coherence


@dataclass(frozen=True)
class NoiseConfig:
    alpha: float

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {self.alpha}")


@dataclass(frozen=True)
class NoisySeriesRow:
    t: int
    Q_t: float
    C_noisy: float
    P_t: float
    C_clean: float
    Q_closed: float
    C_noisy_closed: float

    @property
    def agrees(self) -> bool:
        return abs(self.Q_t - self.Q_closed) <= 1e-12 and abs(self.C_noisy - self.C_noisy_closed) <= 1e-10


def depolarize(rho: np.ndarray, cfg: NoiseConfig) -> np.ndarray:
    rho = np.asarray(rho)
    d = rho.shape[0]
    return (1 - cfg.alpha) / d * np.trace(rho) * np.eye(d) + cfg.alpha * rho


def noisy_evolution(inst: SearchInstance, cfg: NoiseConfig, t_max: int, walk: np.ndarray | None = None) -> list[np.ndarray]:
    """Density matrices ``d_0 .. d_{t_max}`` of the noisy walk."""
    walk = extract_subspace_operator(inst) if walk is None else walk
    psi0 = np.array(initial_amplitudes(inst))
    rho = np.outer(psi0, psi0).astype(complex)
    out = [rho]
    for _ in range(t_max):
        rho = walk @ depolarize(rho, cfg) @ walk.conj().T
        out.append(rho)
    return out


def noisy_state_closed_form(inst: SearchInstance, cfg: NoiseConfig, t: int, walk: np.ndarray | None = None) -> np.ndarray:
    """``(1 - a^t)/4 I + a^t U^t d_0 U^{+t}``."""
    walk = extract_subspace_operator(inst) if walk is None else walk
    psi = np.linalg.matrix_power(walk, t) @ np.array(initial_amplitudes(inst))
    weight = cfg.alpha**t
    return (1 - weight) / 4 * np.eye(4) + weight * np.outer(psi, psi.conj())


def noisy_success_probability(inst: SearchInstance, cfg: NoiseConfig, t: int) -> float:
    weight = cfg.alpha**t
    return (1 - weight) / 4 + weight * closedform.success_probability(inst, t)


def noisy_coherence(inst: SearchInstance, cfg: NoiseConfig, t: int) -> float:
    return cfg.alpha**t * closedform.coherence_at(inst, t)


def noisy_series(inst: SearchInstance, cfg: NoiseConfig, t_max: int) -> list[NoisySeriesRow]:
    """Density-matrix measurements next to the closed-form noise laws."""
    rows = []
    for t, rho in enumerate(noisy_evolution(inst, cfg, t_max)):
        rows.append(
            NoisySeriesRow(
                t=t,
                Q_t=float(np.real(rho[0, 0])),
                C_noisy=l1_coherence(rho),
                P_t=closedform.success_probability(inst, t),
                C_clean=closedform.coherence_at(inst, t),
                Q_closed=noisy_success_probability(inst, cfg, t),
                C_noisy_closed=noisy_coherence(inst, cfg, t),
            )
        )
    return rows
