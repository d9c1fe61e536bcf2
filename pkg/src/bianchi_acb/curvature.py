"""Curvature of the Levi-Civita connection and the geometric predicates built on it.

Conventions: ``R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z``
and ``R(x,y,z,w) = g(R(x,y)z, w)``.  Sectional curvature of a plane spanned
by ``x, y`` is ``R(x,y,y,x) / (g(x,x)g(y,y) - g(x,y)^2)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .connection import ConnectionCoefficients, covariant_derivative
from .lie_algebra import StructureConstants
from .scalar import (
    ZERO,
    Domain,
    ExactRoot,
    REAL_LINE,
    Scalar,
    Sign,
    as_scalar,
    common_roots,
    sign_on,
)
from .structure import AcbStructure, Matrix, associated_metric, determinant, inner, metric_inverse

__all__ = [
    "CurvatureTensor",
    "DegenerateSection",
    "Condition",
    "EtaEinsteinResult",
    "Proportionality",
    "curvature",
    "ricci",
    "star_ricci",
    "scalar_curvatures",
    "scalar_curvature_direct",
    "sectional",
    "section_kind",
    "condition_all_zero",
    "einstein_condition",
    "eta_complex_einstein",
    "horizontal_flat",
    "horizontal_star_ricci_flat",
    "star_ricci_vs_g_tilde",
]


class DegenerateSection(ValueError):
    pass


@dataclass(frozen=True)
class CurvatureTensor:
    """``r[i][j][k][l] = R(e_{i+1}, e_{j+1}, e_{k+1}, e_{l+1})``."""

    r: tuple

    def __getitem__(self, idx: tuple[int, int, int, int]) -> Scalar:
        i, j, k, l = idx
        return self.r[i][j][k][l]

    def component(self, label: str) -> Scalar:
        i, j, k, l = (int(ch) - 1 for ch in label)
        return self.r[i][j][k][l]

    def entries(self):
        for i, j, k, l in itertools.product(range(3), repeat=4):
            yield (i, j, k, l), self.r[i][j][k][l]

    def is_zero(self) -> bool:
        return all(v.is_zero() for _, v in self.entries())

    def independent(self) -> dict[str, Scalar]:
        """Nonzero ``R_ijkl`` with ``i<j``, ``k<l`` and ``(i,j) <= (k,l)``."""
        out = {}
        for (i, j, k, l), v in self.entries():
            if i < j and k < l and (i, j) <= (k, l) and not v.is_zero():
                out[f"{i+1}{j+1}{k+1}{l+1}"] = v
        return out

    def to_json(self) -> list:
        return [[[[x.to_json() for x in a] for a in b] for b in c] for c in self.r]

    @classmethod
    def from_json(cls, data) -> CurvatureTensor:
        return cls(tuple(tuple(tuple(tuple(Scalar.from_json(x) for x in a) for a in b) for b in c) for c in data))


def curvature(gamma: ConnectionCoefficients, sc: StructureConstants, g: Matrix) -> CurvatureTensor:
    G = gamma.gamma
    r = [[[[ZERO] * 3 for _ in range(3)] for _ in range(3)] for _ in range(3)]
    for i, j, k in itertools.product(range(3), repeat=3):
        a = covariant_derivative(gamma, i, G[j][k])
        b = covariant_derivative(gamma, j, G[i][k])
        c = [ZERO, ZERO, ZERO]
        for m in range(3):
            if sc.c[i][j][m].is_zero():
                continue
            for n in range(3):
                c[n] = c[n] + sc.c[i][j][m] * G[m][k][n]
        v = [a[n] - b[n] - c[n] for n in range(3)]
        for l in range(3):
            r[i][j][k][l] = sum((v[n] * g[n][l] for n in range(3)), ZERO)
    return CurvatureTensor(tuple(tuple(tuple(tuple(x) for x in a) for a in b) for b in r))


def ricci(R: CurvatureTensor, g_inv: Matrix) -> Matrix:
    """``rho(y, z) = g^ij R(e_i, y, z, e_j)``."""
    return tuple(
        tuple(
            sum((g_inv[i][j] * R.r[i][y][z][j] for i in range(3) for j in range(3)), ZERO)
            for z in range(3)
        )
        for y in range(3)
    )


def star_ricci(R: CurvatureTensor, g_inv: Matrix, phi: Matrix) -> Matrix:
    """``rho*(y, z) = g^ij R(e_i, y, z, phi e_j)``."""
    out = []
    for y in range(3):
        row = []
        for z in range(3):
            t = ZERO
            for i, j in itertools.product(range(3), repeat=2):
                if g_inv[i][j].is_zero():
                    continue
                t = t + g_inv[i][j] * sum((phi[l][j] * R.r[i][y][z][l] for l in range(3)), ZERO)
            row.append(t)
        out.append(tuple(row))
    return tuple(out)


def _trace(m: Matrix, g_inv: Matrix) -> Scalar:
    return sum((g_inv[i][j] * m[i][j] for i in range(3) for j in range(3)), ZERO)


def scalar_curvatures(rho: Matrix, rho_star: Matrix, g_inv: Matrix) -> tuple[Scalar, Scalar]:
    return _trace(rho, g_inv), _trace(rho_star, g_inv)


def scalar_curvature_direct(R: CurvatureTensor, g_inv: Matrix) -> Scalar:
    """``tau = g^il g^jk R_ijkl`` straight from R, bypassing the Ricci tensor."""
    t = ZERO
    for i, j, k, l in itertools.product(range(3), repeat=4):
        w = g_inv[i][l] * g_inv[j][k]
        if not w.is_zero():
            t = t + w * R.r[i][j][k][l]
    return t


def _r4(R: CurvatureTensor, x, y, z, w) -> Scalar:
    t = ZERO
    for i, j, k, l in itertools.product(range(3), repeat=4):
        c = x[i] * y[j] * z[k] * w[l]
        if not c.is_zero():
            t = t + c * R.r[i][j][k][l]
    return t


def _plane_gram(g: Matrix, x, y) -> Scalar:
    return inner(g, x, x) * inner(g, y, y) - inner(g, x, y) ** 2


def sectional(R: CurvatureTensor, g: Matrix, x: Sequence, y: Sequence) -> Scalar:
    x = [as_scalar(v) for v in x]
    y = [as_scalar(v) for v in y]
    den = _plane_gram(g, x, y)
    if den.is_zero():
        raise DegenerateSection("the plane is degenerate: g(x,x)g(y,y) - g(x,y)^2 = 0")
    return _r4(R, x, y, y, x) / den


def _span_contains(x, y, v) -> bool:
    return determinant((tuple(x), tuple(y), tuple(v))).is_zero()


def section_kind(s: AcbStructure, x: Sequence, y: Sequence) -> frozenset[str]:
    """Which of ``phi-holomorphic``, ``totally-real``, ``xi-section`` apply."""
    x = [as_scalar(v) for v in x]
    y = [as_scalar(v) for v in y]
    if _plane_gram(s.g, x, y).is_zero():
        raise DegenerateSection("the plane is degenerate")
    px, py = s.phi_of(x), s.phi_of(y)
    kinds = set()
    image_is_plane = any(
        not (px[a] * py[b] - px[b] * py[a]).is_zero() for a in range(3) for b in range(3)
    )
    if image_is_plane and _span_contains(x, y, px) and _span_contains(x, y, py):
        kinds.add("phi-holomorphic")
    if all(inner(s.g, u, v).is_zero() for u in (x, y) for v in (px, py)):
        kinds.add("totally-real")
    if _span_contains(x, y, s.xi):
        kinds.add("xi-section")
    return frozenset(kinds)


# predicates ------------------------------------------------------------------------


@dataclass(frozen=True)
class Condition:
    """When a polynomial condition holds: ``identically``, ``iff`` h in roots, or ``never``."""

    kind: str
    roots: tuple[ExactRoot, ...] = ()

    @property
    def holds(self) -> bool | None:
        return {"identically": True, "never": False}.get(self.kind)

    def __str__(self) -> str:
        if self.kind == "identically":
            return "holds identically"
        if self.kind == "never":
            return "never holds"
        return "holds iff h = " + " or ".join(str(r) for r in self.roots)

    def to_json(self) -> dict:
        return {"kind": self.kind, "roots": [r.to_json() for r in self.roots], "text": str(self)}

    @classmethod
    def from_json(cls, data: dict) -> Condition:
        return cls(data["kind"], tuple(ExactRoot.from_json(r) for r in data["roots"]))


def condition_all_zero(polys, domain: Domain = REAL_LINE) -> Condition:
    roots = common_roots(list(polys), domain)
    if roots is None:
        return Condition("identically")
    if not roots:
        return Condition("never")
    return Condition("iff", tuple(roots))


def einstein_condition(rho: Matrix, tau: Scalar, g: Matrix, domain: Domain = REAL_LINE) -> Condition:
    """``rho = (tau/3) g``."""
    third = tau * Fraction(1, 3)
    return condition_all_zero(
        (rho[i][j] - third * g[i][j] for i in range(3) for j in range(3)), domain
    )


@dataclass(frozen=True)
class EtaEinsteinResult:
    """``rho = lam g + mu g~ + nu eta(x)eta``: when solvable, and the coefficients."""

    condition: Condition
    lam: Scalar | None = None
    mu: Scalar | None = None
    nu: Scalar | None = None

    def to_json(self) -> dict:
        out = {"condition": self.condition.to_json()}
        if self.lam is not None:
            out["coefficients"] = {
                "lambda": self.lam.to_json(),
                "mu": self.mu.to_json(),
                "nu": self.nu.to_json(),
            }
        return out

    @classmethod
    def from_json(cls, data: dict) -> EtaEinsteinResult:
        co = data.get("coefficients")
        if co is None:
            return cls(Condition.from_json(data["condition"]))
        return cls(
            Condition.from_json(data["condition"]),
            Scalar.from_json(co["lambda"]),
            Scalar.from_json(co["mu"]),
            Scalar.from_json(co["nu"]),
        )


def eta_complex_einstein(rho: Matrix, s: AcbStructure, domain: Domain = REAL_LINE) -> EtaEinsteinResult:
    """Solve ``rho = lam g + mu g~ + nu eta(x)eta`` exactly.

    Three entries with an invertible coefficient block fix the candidate
    coefficients (Cramer's rule); the remaining entries then decide for which
    h the decomposition holds.  Inconsistency is a result, not an error.
    """
    gt = associated_metric(s)
    ee = tuple(tuple(s.eta[i] * s.eta[j] for j in range(3)) for i in range(3))
    basis = (s.g, gt, ee)
    positions = [(i, j) for i in range(3) for j in range(i, 3)]
    for trio in itertools.combinations(positions, 3):
        A = tuple(tuple(basis[b][i][j] for b in range(3)) for i, j in trio)
        det = determinant(A)
        if det.is_zero():
            continue
        d = det.constant_value()
        rhs = [rho[i][j] for i, j in trio]
        coef = []
        for col in range(3):
            Ac = tuple(
                tuple(rhs[r] if c == col else A[r][c] for c in range(3)) for r in range(3)
            )
            coef.append(determinant(Ac) * (1 / d))
        lam, mu, nu = coef
        residual = [
            rho[i][j] - (lam * s.g[i][j] + mu * gt[i][j] + nu * ee[i][j])
            for i in range(3)
            for j in range(3)
        ]
        cond = condition_all_zero(residual, domain)
        if cond.kind == "never":
            return EtaEinsteinResult(cond)
        return EtaEinsteinResult(cond, lam, mu, nu)
    raise ValueError("g, g~ and eta(x)eta are linearly dependent")


def horizontal_flat(R: CurvatureTensor, s: AcbStructure, domain: Domain = REAL_LINE) -> Condition:
    hor = s.horizontal_indices()
    return condition_all_zero(
        (R.r[i][j][k][l] for i, j, k, l in itertools.product(hor, repeat=4)), domain
    )


def horizontal_star_ricci_flat(rho_star: Matrix, s: AcbStructure, domain: Domain = REAL_LINE) -> Condition:
    hor = s.horizontal_indices()
    return condition_all_zero((rho_star[i][j] for i in hor for j in hor), domain)


@dataclass(frozen=True)
class Proportionality:
    """``rho*|_H = factor * g~|_H``; ``factor`` is None when no single factor works."""

    factor: Scalar | None
    condition: Condition

    def to_json(self) -> dict:
        return {
            "factor": None if self.factor is None else self.factor.to_json(),
            "condition": self.condition.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> Proportionality:
        f = data["factor"]
        return cls(None if f is None else Scalar.from_json(f), Condition.from_json(data["condition"]))


def star_ricci_vs_g_tilde(rho_star: Matrix, s: AcbStructure, domain: Domain = REAL_LINE) -> Proportionality:
    hor = s.horizontal_indices()
    gt = associated_metric(s)
    pivot = next(((i, j) for i in hor for j in hor if not gt[i][j].is_zero()), None)
    if pivot is None:
        return Proportionality(None, Condition("never"))
    i0, j0 = pivot
    factor = rho_star[i0][j0] * (1 / gt[i0][j0].constant_value())
    cond = condition_all_zero((rho_star[i][j] - factor * gt[i][j] for i in hor for j in hor), domain)
    return Proportionality(factor if cond.kind == "identically" else None, cond)


@dataclass
class CurvatureData:
    """Raw curvature quantities of one structure; see ``report.analyze``."""

    R: CurvatureTensor
    rho: Matrix
    rho_star: Matrix
    tau: Scalar
    tau_star: Scalar
    k: dict[str, Scalar] = field(default_factory=dict)


def curvature_data(gamma: ConnectionCoefficients, sc: StructureConstants, s: AcbStructure) -> CurvatureData:
    R = curvature(gamma, sc, s.g)
    gi = metric_inverse(s.g)
    rho = ricci(R, gi)
    rho_star = star_ricci(R, gi, s.phi)
    tau, tau_star = scalar_curvatures(rho, rho_star, gi)
    e = [tuple(as_scalar(int(a == b)) for b in range(3)) for a in range(3)]
    k = {}
    for a, b in ((0, 1), (0, 2), (1, 2)):
        try:
            k[f"{a+1}{b+1}"] = sectional(R, s.g, e[a], e[b])
        except DegenerateSection:
            continue
    return CurvatureData(R, rho, rho_star, tau, tau_star, k)


def sign_summary(values: dict[str, Scalar], domain: Domain) -> dict[str, Sign]:
    return {name: sign_on(v, domain) for name, v in values.items()}
