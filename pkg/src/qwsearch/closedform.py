"""Exact closed-form dynamics of the search walk on K_{n1,n2}.

Every function here is a pure function of ``(inst, t)``. Step ``t = 0`` uses the
even branch, which reproduces the initial state. The expressions are checked
against the arc-space simulator in :mod:`qwsearch.fullsim`.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import OutOfRange
from .model import InitialState, SearchInstance, SubspaceAmplitudes, angles

SUBSPACE_DIM = 4


class PhaseArgs(NamedTuple):
    A: float
    B: float
    h: int


def phase_args(inst: SearchInstance, t: int) -> PhaseArgs:
    _, delta, phi = angles(inst)
    h = 0 if t % 2 == 0 else -1
    return PhaseArgs(delta + t * phi, delta - t * phi, h)


def _check_step(t: int) -> None:
    if t < 0:
        raise ValueError(f"step must be nonnegative, got {t}")


def state_at(inst: SearchInstance, t: int) -> SubspaceAmplitudes:
    """Amplitudes on ``(|ab>, |ba>, |bc>, |cb>)`` after ``t`` search steps."""
    _check_step(t)
    theta, delta, phi = angles(inst)
    even = t % 2 == 0
    if inst.init is InitialState.VERTEX_UNIFORM:
        c, s = math.cos(theta), math.sin(theta)
        if even:
            return SubspaceAmplitudes(
                c * math.sin(delta + phi * t),
                s * math.sin(delta - phi * t),
                s * math.cos(delta - phi * t),
                c * math.cos(delta + phi * t),
            )
        return SubspaceAmplitudes(
            s * math.sin(phi * (1 + t) - delta),
            c * math.sin((1 - t) * phi - delta),
            c * math.cos((t - 1) * phi + delta),
            s * math.cos(phi * (1 + t) - delta),
        )
    r = math.sqrt(0.5)
    if even:
        return SubspaceAmplitudes(
            r * math.sin(phi * t + delta),
            r * math.sin(delta - phi * t),
            r * math.cos(phi * t - delta),
            r * math.cos(phi * t + delta),
        )
    return SubspaceAmplitudes(
        r * math.sin(phi * t + phi - delta),
        r * math.sin(phi - delta - phi * t),
        r * math.cos(phi * t - phi + delta),
        r * math.cos(phi * t + phi - delta),
    )


def success_probability(inst: SearchInstance, t: int) -> float:
    _check_step(t)
    theta, delta, phi = angles(inst)
    even = t % 2 == 0
    if inst.init is InitialState.VERTEX_UNIFORM:
        if even:
            return math.cos(theta) ** 2 * math.sin(delta + phi * t) ** 2
        return math.sin(theta) ** 2 * math.sin(phi * (1 + t) - delta) ** 2
    if even:
        return 0.5 * math.sin(phi * t + delta) ** 2
    return 0.5 * math.sin(phi * t + phi - delta) ** 2


def _abs_sum(x: float) -> float:
    return abs(math.sin(x)) + abs(math.cos(x))


def coherence_at(inst: SearchInstance, t: int) -> float:
    """l1-norm coherence of the step-``t`` state in the subspace basis."""
    _check_step(t)
    theta, _, phi = angles(inst)
    A, B, h = phase_args(inst, t)
    a = A + h * phi
    b = B + h * phi
    cross = _abs_sum(a) * _abs_sum(b)
    if inst.init is InitialState.VERTEX_UNIFORM:
        return (
            math.sin(2 * theta) * cross
            + math.cos(theta) ** 2 * abs(math.sin(2 * a))
            + math.sin(theta) ** 2 * abs(math.sin(2 * b))
        )
    return cross + (abs(math.sin(2 * a)) + abs(math.sin(2 * b))) / 2


def normalized_coherence(c: float, dim: int = SUBSPACE_DIM) -> float:
    bound = dim - 1
    if c < 0 or c > bound + 1e-9:
        raise OutOfRange(f"l1 coherence {c} outside [0, {bound}]")
    return min(c / bound, 1.0)


def complementarity_target(inst: SearchInstance) -> float:
    if inst.init is InitialState.VERTEX_UNIFORM:
        return math.sin(2 * angles(inst).theta)
    return 1.0


def complementarity_residual(inst: SearchInstance, t: int) -> float:
    """``P_t + C_l1(t)`` minus its large-graph limit.

    Only asymptotically zero; for small graphs the residual is simply reported.
    """
    return success_probability(inst, t) + coherence_at(inst, t) - complementarity_target(inst)


def optimal_even_step(inst: SearchInstance) -> int:
    """Even step closest to the first peak of the even-step success probability."""
    _, delta, phi = angles(inst)
    return 2 * round((math.pi / 2 - delta) / phi / 2)
