"""Almost contact B-metric structures ``(phi, xi, eta, g)`` in dimension three.

Matrices are tuples of rows.  ``phi`` acts on coordinate columns, so the
image of the basis vector ``e_j`` is the column ``phi[.][j]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .scalar import ONE, ZERO, ExactRoot, Scalar, as_scalar, common_roots

__all__ = [
    "AcbStructure",
    "StructureError",
    "SingularMatrix",
    "canonical_structure",
    "check_compatibility",
    "compatibility_failures",
    "associated_metric",
    "metric_inverse",
    "signature",
    "matmul",
    "matvec",
    "identity",
    "determinant",
    "inner",
]

Matrix = tuple[tuple[Scalar, ...], ...]
Vec = tuple[Scalar, ...]


class StructureError(ValueError):
    pass


class SingularMatrix(StructureError):
    def __init__(self, message: str, exceptional: Sequence[ExactRoot] = ()):
        super().__init__(message)
        self.exceptional = list(exceptional)


def _mat(rows) -> Matrix:
    return tuple(tuple(as_scalar(x) for x in r) for r in rows)


def identity(n: int = 3) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, m, p = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(m)), ZERO) for j in range(p)) for i in range(n)
    )


def matvec(a: Matrix, v: Sequence[Scalar]) -> Vec:
    return tuple(sum((a[i][k] * v[k] for k in range(len(v))), ZERO) for i in range(len(a)))


def inner(g: Matrix, x: Sequence[Scalar], y: Sequence[Scalar]) -> Scalar:
    return sum((x[i] * g[i][j] * y[j] for i in range(len(x)) for j in range(len(y))), ZERO)


def determinant(m: Matrix) -> Scalar:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


@dataclass(frozen=True)
class AcbStructure:
    phi: Matrix
    xi: Vec
    eta: Vec
    g: Matrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "phi", _mat(self.phi))
        object.__setattr__(self, "g", _mat(self.g))
        object.__setattr__(self, "xi", tuple(as_scalar(x) for x in self.xi))
        object.__setattr__(self, "eta", tuple(as_scalar(x) for x in self.eta))

    def phi_of(self, v: Sequence[Scalar]) -> Vec:
        return matvec(self.phi, v)

    def phi_basis(self, j: int) -> Vec:
        return tuple(self.phi[i][j] for i in range(3))

    def eta_of(self, v: Sequence[Scalar]) -> Scalar:
        return sum((self.eta[i] * v[i] for i in range(3)), ZERO)

    def horizontal_indices(self) -> tuple[int, ...]:
        """Basis indices spanning ``ker eta``."""
        return tuple(i for i in range(3) if self.eta[i].is_zero())

    @property
    def g_inv(self) -> Matrix:
        return metric_inverse(self.g)

    def to_json(self) -> dict:
        return {
            "phi": [[x.to_json() for x in r] for r in self.phi],
            "xi": [x.to_json() for x in self.xi],
            "eta": [x.to_json() for x in self.eta],
            "g": [[x.to_json() for x in r] for r in self.g],
        }

    @classmethod
    def from_json(cls, data: dict) -> AcbStructure:
        try:
            return cls(
                phi=[[Scalar.from_json(x) for x in r] for r in data["phi"]],
                xi=[Scalar.from_json(x) for x in data["xi"]],
                eta=[Scalar.from_json(x) for x in data["eta"]],
                g=[[Scalar.from_json(x) for x in r] for r in data["g"]],
            )
        except (KeyError, TypeError) as exc:
            raise StructureError(f"malformed structure: {exc}") from exc

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def canonical_structure() -> AcbStructure:
    """``phi e1 = e2, phi e2 = -e1, phi e3 = 0``, ``xi = e3``, ``g = diag(1,-1,1)``."""
    return AcbStructure(
        phi=((0, -1, 0), (1, 0, 0), (0, 0, 0)),
        xi=(0, 0, 1),
        eta=(0, 0, 1),
        g=((1, 0, 0), (0, -1, 0), (0, 0, 1)),
    )


def compatibility_failures(s: AcbStructure) -> list[str]:
    """Names of the structure axioms that fail; empty when compatible."""
    out = []
    if any(not x.is_zero() for x in s.phi_of(s.xi)):
        out.append("phi xi = 0")
    phi2 = matmul(s.phi, s.phi)
    target = tuple(
        tuple((-1 if i == j else 0) + s.xi[i] * s.eta[j] for j in range(3)) for i in range(3)
    )
    if phi2 != target:
        out.append("phi^2 = -Id + eta (x) xi")
    eta_phi = tuple(sum((s.eta[i] * s.phi[i][j] for i in range(3)), ZERO) for j in range(3))
    if any(not x.is_zero() for x in eta_phi):
        out.append("eta o phi = 0")
    if s.eta_of(s.xi) != 1:
        out.append("eta(xi) = 1")
    if any(s.g[i][j] != s.g[j][i] for i in range(3) for j in range(3)):
        out.append("g symmetric")
    for i in range(3):
        for j in range(3):
            lhs = inner(s.g, s.phi_basis(i), s.phi_basis(j))
            rhs = -s.g[i][j] + s.eta[i] * s.eta[j]
            if lhs != rhs:
                out.append(f"g(phi e{i+1}, phi e{j+1}) = -g(e{i+1}, e{j+1}) + eta(e{i+1})eta(e{j+1})")
    if determinant(s.g).is_zero():
        out.append("g non-degenerate")
    elif not _signature_ok(s.g):
        out.append("g has signature (2,1)")
    return out


def _signature_ok(g: Matrix) -> bool:
    try:
        return signature(g) == (2, 1)
    except StructureError:
        return False


def check_compatibility(s: AcbStructure) -> bool:
    return not compatibility_failures(s)


def associated_metric(s: AcbStructure) -> Matrix:
    """``g~(x, y) = g(x, phi y) + eta(x) eta(y)`` on basis pairs."""
    return tuple(
        tuple(inner(s.g, _e(i), s.phi_basis(j)) + s.eta[i] * s.eta[j] for j in range(3))
        for i in range(3)
    )


def associated_structure(s: AcbStructure) -> AcbStructure:
    return AcbStructure(s.phi, s.xi, s.eta, associated_metric(s))


def _e(i: int) -> Vec:
    return tuple(ONE if k == i else ZERO for k in range(3))


def metric_inverse(gm: Matrix) -> Matrix:
    """Exact inverse via adjugate over determinant.

    Parametric matrices need a nonzero constant determinant, since the
    inverse must again have polynomial entries.  A determinant vanishing at
    some h is reported together with those values.
    """
    gm = _mat(gm)
    det = determinant(gm)
    if det.is_zero():
        raise SingularMatrix("matrix is singular")
    if not det.is_constant():
        try:
            bad = common_roots([det])
        except ValueError:
            bad = []
        where = ", ".join(str(r) for r in bad or [])
        raise SingularMatrix(
            f"determinant {det} depends on h" + (f"; singular at h = {where}" if where else ""),
            bad or [],
        )
    d = det.constant_value()
    cof = [[ZERO] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            rows = [r for r in range(3) if r != i]
            cols = [c for c in range(3) if c != j]
            minor = (
                gm[rows[0]][cols[0]] * gm[rows[1]][cols[1]]
                - gm[rows[0]][cols[1]] * gm[rows[1]][cols[0]]
            )
            cof[i][j] = minor if (i + j) % 2 == 0 else -minor
    return tuple(tuple(cof[j][i] * (1 / d) for j in range(3)) for i in range(3))


def signature(g: Matrix) -> tuple[int, int]:
    """(positive, negative) inertia of a constant non-degenerate symmetric matrix.

    Exact symmetric elimination (congruence), so no eigenvalues are needed.
    """
    m = [[as_scalar(x).constant_value() for x in r] for r in g]
    n = len(m)
    diag = []
    for k in range(n):
        if m[k][k] == 0:
            j = next((j for j in range(k + 1, n) if m[j][j] != 0), None)
            if j is not None:
                m[k], m[j] = m[j], m[k]
                for r in m:
                    r[k], r[j] = r[j], r[k]
            else:
                j = next((j for j in range(k + 1, n) if m[k][j] != 0), None)
                if j is None:
                    raise StructureError("matrix is degenerate")
                # e_k <- e_k + e_j makes the pivot 2 m[k][j]
                for c in range(n):
                    m[k][c] += m[j][c]
                for r in range(n):
                    m[r][k] += m[r][j]
        piv = m[k][k]
        for r in range(k + 1, n):
            f = m[r][k] / piv
            if f:
                for c in range(n):
                    m[r][c] -= f * m[k][c]
                for c in range(n):
                    m[c][r] -= f * m[c][k]
        diag.append(piv)
    pos = sum(1 for d in diag if d > 0)
    return pos, n - pos
