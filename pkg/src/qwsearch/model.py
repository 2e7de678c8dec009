"""Search instances on the complete bipartite graph K_{n1,n2}.

The walk restricted to the search problem lives in a four dimensional invariant
subspace spanned by uniform superpositions over four arc classes::

    |ab>  marked vertex (in X)  -> Y
    |ba>  Y -> marked vertex
    |bc>  Y -> unmarked vertex of X
    |cb>  unmarked vertex of X  -> Y

Amplitudes on that basis are carried around as :class:`SubspaceAmplitudes`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import InvalidMarkedCount, InvalidPartition


class InitialState(str, enum.Enum):
    """Initial state of the walk.

    ``VERTEX_UNIFORM`` is the equal superposition over vertices (``|s>``),
    ``EDGE_UNIFORM`` the equal superposition over arcs (``|sigma>``).
    """

    VERTEX_UNIFORM = "s"
    EDGE_UNIFORM = "sigma"

    @classmethod
    def parse(cls, value: "str | InitialState") -> "InitialState":
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            aliases = {"vertex": cls.VERTEX_UNIFORM, "edge": cls.EDGE_UNIFORM}
            if value in aliases:
                return aliases[value]
            raise


@dataclass(frozen=True)
class SearchInstance:
    n1: int
    n2: int
    k: int
    init: InitialState = InitialState.VERTEX_UNIFORM

    def __post_init__(self):
        if self.n1 < 2 or self.n2 < 1:
            raise InvalidPartition(f"need n1 >= 2 and n2 >= 1, got n1={self.n1}, n2={self.n2}")
        if not 1 <= self.k <= self.n1 - 1:
            raise InvalidMarkedCount(f"need 1 <= k <= n1 - 1, got k={self.k}, n1={self.n1}")
        object.__setattr__(self, "init", InitialState.parse(self.init))

    @property
    def n_vertices(self) -> int:
        return self.n1 + self.n2

    @property
    def n_arcs(self) -> int:
        return 2 * self.n1 * self.n2


class AngleParams(NamedTuple):
    theta: float
    delta: float
    phi: float


class SubspaceAmplitudes(NamedTuple):
    m_ab: float
    m_ba: float
    m_bc: float
    m_cb: float

    def as_array(self) -> np.ndarray:
        return np.array(self, dtype=float)

    @classmethod
    def from_array(cls, values) -> "SubspaceAmplitudes":
        a, b, c, d = (float(v) for v in values)
        return cls(a, b, c, d)

    def norm(self) -> float:
        return math.sqrt(sum(v * v for v in self))


def make_instance(n1: int, n2: int, k: int, init: "str | InitialState" = InitialState.VERTEX_UNIFORM) -> SearchInstance:
    return SearchInstance(int(n1), int(n2), int(k), InitialState.parse(init))


def angles(inst: SearchInstance) -> AngleParams:
    n1, n2, k = inst.n1, inst.n2, inst.k
    theta = math.acos(math.sqrt(n1 / (n1 + n2)))
    delta = math.asin(math.sqrt(k / n1))
    phi = math.acos(math.sqrt((n1 - k) / n1))
    return AngleParams(theta, delta, phi)


def initial_amplitudes(inst: SearchInstance) -> SubspaceAmplitudes:
    n1, n2, k = inst.n1, inst.n2, inst.k
    if inst.init is InitialState.VERTEX_UNIFORM:
        n = n1 + n2
        return SubspaceAmplitudes(
            math.sqrt(k / n),
            math.sqrt(n2 * k / (n1 * n)),
            math.sqrt(n2 * (n1 - k) / (n1 * n)),
            math.sqrt((n1 - k) / n),
        )
    marked = math.sqrt(k / (2 * n1))
    unmarked = math.sqrt((n1 - k) / (2 * n1))
    return SubspaceAmplitudes(marked, marked, unmarked, unmarked)
