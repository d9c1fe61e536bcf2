"""Levi-Civita connection of a left-invariant metric on a 3D Lie group."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lie_algebra import StructureConstants, format_vector
from .scalar import ZERO, Scalar, as_scalar
from .structure import Matrix, inner, metric_inverse

__all__ = [
    "ConnectionCoefficients",
    "levi_civita",
    "check_connection",
    "connection_failures",
    "covariant_derivative",
]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ConnectionCoefficients:
    """``gamma[i][j][k]`` is the ``e_{k+1}`` component of ``nabla_{e_{i+1}} e_{j+1}``."""

    gamma: tuple[tuple[tuple[Scalar, ...], ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "gamma",
            tuple(tuple(tuple(as_scalar(x) for x in r) for r in p) for p in self.gamma),
        )

    def nabla_basis(self, i: int, j: int) -> tuple[Scalar, ...]:
        return self.gamma[i][j]

    def nonzero_lines(self) -> list[str]:
        return [
            f"nabla_e{i+1} e{j+1} = {format_vector(self.gamma[i][j])}"
            for i in range(3)
            for j in range(3)
            if any(not x.is_zero() for x in self.gamma[i][j])
        ]

    def to_json(self) -> list:
        return [[[x.to_json() for x in r] for r in p] for p in self.gamma]


def covariant_derivative(
    gamma: ConnectionCoefficients, i: int, v: Sequence[Scalar]
) -> tuple[Scalar, ...]:
    """``nabla_{e_i} v`` for a left-invariant field with constant coordinates ``v``."""
    out = [ZERO, ZERO, ZERO]
    for j in range(3):
        if v[j].is_zero():
            continue
        for k in range(3):
            out[k] = out[k] + v[j] * gamma.gamma[i][j][k]
    return tuple(out)


def levi_civita(sc: StructureConstants, g: Matrix) -> ConnectionCoefficients:
    """Koszul formula for left-invariant fields, index raised with ``g^-1``.

    The inner products of basis fields are constant, so only the three
    bracket terms of ``2 g(nabla_i e_j, e_k)`` survive.
    """
    g_inv = metric_inverse(g)
    c = sc.c

    def gb(a: int, b: int, w: int) -> Scalar:
        # g([e_a, e_b], e_w)
        return sum((c[a][b][m] * g[m][w] for m in range(3)), ZERO)

    gamma = []
    for i in range(3):
        plane = []
        for j in range(3):
            lowered = [(gb(i, j, k) + gb(k, i, j) + gb(k, j, i)) * HALF for k in range(3)]
            plane.append(
                tuple(sum((g_inv[m][k] * lowered[k] for k in range(3)), ZERO) for m in range(3))
            )
        gamma.append(tuple(plane))
    return ConnectionCoefficients(tuple(gamma))


def connection_failures(
    sc: StructureConstants, g: Matrix, gamma: ConnectionCoefficients
) -> list[str]:
    out = []
    G = gamma.gamma
    for i in range(3):
        for j in range(3):
            for k in range(3):
                if G[i][j][k] - G[j][i][k] != sc.c[i][j][k]:
                    out.append(f"torsion: nabla_e{i+1} e{j+1} - nabla_e{j+1} e{i+1} != [e{i+1},e{j+1}]")
                    break
    e = [tuple(as_scalar(int(a == b)) for b in range(3)) for a in range(3)]
    for i in range(3):
        for j in range(3):
            for k in range(3):
                if inner(g, G[i][j], e[k]) + inner(g, e[j], G[i][k]) != 0:
                    out.append(f"metric: (nabla_e{i+1} g)(e{j+1}, e{k+1}) != 0")
    return out


def check_connection(sc: StructureConstants, g: Matrix, gamma: ConnectionCoefficients) -> bool:
    """Torsion-free and metric-compatible, checked exactly."""
    return not connection_failures(sc, g, gamma)
