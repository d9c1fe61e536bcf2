"""The structure tensor ``F(x,y,z) = g((nabla_x phi) y, z)`` and its classes.

In dimension three ``F`` splits into seven basic classes, parameterised by
nine scalars::

    F1   theta1, theta2          F8   lam
    F4   theta3                  F9   mu
    F5   theta_star3             F10  nu
                                 F11  omega1, omega2

The extraction formulas assume the canonical phi-basis (``phi e1 = e2``,
``xi = e3``, ``g = diag(1,-1,1)``).
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from fractions import Fraction
from typing import Iterable

from .connection import ConnectionCoefficients, covariant_derivative
from .scalar import (
    ZERO,
    Domain,
    ExactRoot,
    REAL_LINE,
    Scalar,
    as_scalar,
    roots_in,
    vanishes_at,
)
from .structure import AcbStructure, canonical_structure, inner, metric_inverse

__all__ = [
    "FTensor",
    "ClassParameters",
    "ClassLabel",
    "LeeForms",
    "NotAdmissible",
    "LeeFormMismatch",
    "CLASS_NAMES",
    "compute_F",
    "nabla_phi",
    "lee_forms",
    "lee_forms_contracted",
    "lee_forms_table",
    "admissibility_violations",
    "decompose",
    "reconstruct",
    "classify",
    "square_norm_nabla_phi",
    "class_label_text",
]

CLASS_NAMES = ("F1", "F4", "F5", "F8", "F9", "F10", "F11")
_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


class NotAdmissible(ValueError):
    """The array violates the symmetries every structure tensor has."""

    def __init__(self, violations: list[str]):
        self.violations = violations
        super().__init__("not a structure tensor: " + "; ".join(violations))


class LeeFormMismatch(RuntimeError):
    pass


Tensor3 = tuple[tuple[tuple[Scalar, ...], ...], ...]


@dataclass(frozen=True)
class FTensor:
    """``f[i][j][k] = F(e_{i+1}, e_{j+1}, e_{k+1})``."""

    f: Tensor3

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "f", tuple(tuple(tuple(as_scalar(x) for x in r) for r in p) for p in self.f)
        )

    @classmethod
    def zeros(cls) -> FTensor:
        return cls(tuple(tuple((ZERO,) * 3 for _ in range(3)) for _ in range(3)))

    @classmethod
    def from_components(cls, comps: dict[str, Scalar | int | Fraction]) -> FTensor:
        """Build from one-based labels, e.g. ``{"113": -1/2, "311": -1}``."""
        f = [[[ZERO] * 3 for _ in range(3)] for _ in range(3)]
        for key, v in comps.items():
            i, j, k = (int(ch) - 1 for ch in key)
            f[i][j][k] = as_scalar(v)
        return cls(f)  # type: ignore[arg-type]

    def __getitem__(self, idx: tuple[int, int, int]) -> Scalar:
        i, j, k = idx
        return self.f[i][j][k]

    def component(self, label: str) -> Scalar:
        """One-based access: ``F.component("311")``."""
        i, j, k = (int(ch) - 1 for ch in label)
        return self.f[i][j][k]

    def nonzero(self) -> dict[str, Scalar]:
        return {
            f"{i+1}{j+1}{k+1}": self.f[i][j][k]
            for i in range(3)
            for j in range(3)
            for k in range(3)
            if not self.f[i][j][k].is_zero()
        }

    def specialize(self, h0) -> FTensor:
        return FTensor(tuple(tuple(tuple(x.specialize(h0) for x in r) for r in p) for p in self.f))

    def to_json(self) -> list:
        return [[[x.to_json() for x in r] for r in p] for p in self.f]


@dataclass(frozen=True)
class ClassParameters:
    theta1: Scalar = ZERO
    theta2: Scalar = ZERO
    theta3: Scalar = ZERO
    theta_star3: Scalar = ZERO
    lam: Scalar = ZERO
    mu: Scalar = ZERO
    nu: Scalar = ZERO
    omega1: Scalar = ZERO
    omega2: Scalar = ZERO

    def __post_init__(self) -> None:
        for f in fields(self):
            object.__setattr__(self, f.name, as_scalar(getattr(self, f.name)))

    def items(self) -> list[tuple[str, Scalar]]:
        return [(f.name, getattr(self, f.name)) for f in fields(self)]

    def by_class(self) -> dict[str, tuple[Scalar, ...]]:
        return {
            "F1": (self.theta1, self.theta2),
            "F4": (self.theta3,),
            "F5": (self.theta_star3,),
            "F8": (self.lam,),
            "F9": (self.mu,),
            "F10": (self.nu,),
            "F11": (self.omega1, self.omega2),
        }

    def to_json(self) -> dict:
        return {k: v.to_json() for k, v in self.items()}


@dataclass(frozen=True)
class ClassLabel:
    """Members of the class decomposition; empty means the class F0.

    ``exceptional`` pairs each real root (inside the type's h-domain) of a
    participating parameter with the member set at that value of h.
    """

    members: frozenset[str]
    exceptional: tuple[tuple[ExactRoot, frozenset[str]], ...] = field(default=())

    @property
    def ordered(self) -> list[str]:
        return [c for c in CLASS_NAMES if c in self.members]

    def text(self) -> str:
        return class_label_text(self.members)

    def to_json(self) -> dict:
        return {
            "class": self.ordered,
            "label": self.text(),
            "exceptional": [
                {"h": r.to_json(), "h_text": str(r), "class": [c for c in CLASS_NAMES if c in m],
                 "label": class_label_text(m)}
                for r, m in self.exceptional
            ],
        }


def class_label_text(members: Iterable[str]) -> str:
    m = [c for c in CLASS_NAMES if c in set(members)]
    if not m:
        return "F₀"
    return "⊕".join(c.translate(_SUB) for c in m)


@dataclass(frozen=True)
class LeeForms:
    theta: tuple[Scalar, Scalar, Scalar]
    theta_star: tuple[Scalar, Scalar, Scalar]
    omega: tuple[Scalar, Scalar, Scalar]

    def to_json(self) -> dict:
        return {
            "theta": [x.to_json() for x in self.theta],
            "theta_star": [x.to_json() for x in self.theta_star],
            "omega": [x.to_json() for x in self.omega],
        }


# computing F ----------------------------------------------------------------------


def nabla_phi(gamma: ConnectionCoefficients, s: AcbStructure, i: int, j: int) -> tuple[Scalar, ...]:
    """``(nabla_{e_i} phi) e_j = nabla_{e_i}(phi e_j) - phi(nabla_{e_i} e_j)``."""
    a = covariant_derivative(gamma, i, s.phi_basis(j))
    b = s.phi_of(gamma.gamma[i][j])
    return tuple(x - y for x, y in zip(a, b))


def compute_F(gamma: ConnectionCoefficients, s: AcbStructure | None = None) -> FTensor:
    s = s or canonical_structure()
    e = [tuple(as_scalar(int(a == b)) for b in range(3)) for a in range(3)]
    f = []
    for i in range(3):
        plane = []
        for j in range(3):
            d = nabla_phi(gamma, s, i, j)
            plane.append(tuple(inner(s.g, d, e[k]) for k in range(3)))
        f.append(tuple(plane))
    return FTensor(tuple(f))


def square_norm_nabla_phi(gamma: ConnectionCoefficients, s: AcbStructure | None = None) -> Scalar:
    """``g^ij g^ks g((nabla_i phi) e_k, (nabla_j phi) e_s)`` over the full basis."""
    s = s or canonical_structure()
    gi = metric_inverse(s.g)
    d = [[nabla_phi(gamma, s, i, k) for k in range(3)] for i in range(3)]
    total = ZERO
    for i in range(3):
        for j in range(3):
            if gi[i][j].is_zero():
                continue
            for k in range(3):
                for t in range(3):
                    if gi[k][t].is_zero():
                        continue
                    total = total + gi[i][j] * gi[k][t] * inner(s.g, d[i][k], d[j][t])
    return total


# Lee forms ------------------------------------------------------------------------


def lee_forms_contracted(F: FTensor, s: AcbStructure | None = None) -> LeeForms:
    """Lee forms as traces of F over the horizontal phi-basis.

    ``theta(z) = g^ij F(e_i, e_j, z)`` and ``theta*(z) = g^ij F(e_i, phi e_j, z)``
    with i, j running over the basis of ``ker eta``; ``omega(z) = F(xi, xi, z)``.
    """
    s = s or canonical_structure()
    hor = s.horizontal_indices()
    gh = _inverse_block(s, hor)
    theta, theta_star, omega = [], [], []
    for z in range(3):
        t = ts = ZERO
        for a, i in enumerate(hor):
            for b, j in enumerate(hor):
                if gh[a][b].is_zero():
                    continue
                t = t + gh[a][b] * F.f[i][j][z]
                pj = s.phi_basis(j)
                ts = ts + gh[a][b] * sum((pj[m] * F.f[i][m][z] for m in range(3)), ZERO)
        theta.append(t)
        theta_star.append(ts)
        omega.append(
            sum((s.xi[a] * s.xi[b] * F.f[a][b][z] for a in range(3) for b in range(3)), ZERO)
        )
    return LeeForms(tuple(theta), tuple(theta_star), tuple(omega))  # type: ignore[arg-type]


def _inverse_block(s: AcbStructure, idx: tuple[int, ...]):
    (a, b), (c, d) = [[s.g[i][j] for j in idx] for i in idx]
    det = (a * d - b * c).constant_value()
    inv = 1 / det
    return ((d * inv, -b * inv), (-c * inv, a * inv))


def lee_forms_table(F: FTensor) -> LeeForms:
    """Component shortcut valid in the canonical phi-basis."""
    c = F.component
    return LeeForms(
        (c("111") - c("221"), c("112") - c("211"), c("113") - c("223")),
        (c("112") + c("211"), c("111") + c("221"), c("123") + c("213")),
        (c("331"), c("332"), ZERO),
    )


def lee_forms(F: FTensor, s: AcbStructure | None = None) -> LeeForms:
    """Lee forms, computed both ways; the two must agree exactly."""
    general = lee_forms_contracted(F, s)
    table = lee_forms_table(F)
    if general != table:
        raise LeeFormMismatch(f"contracted {general} != component table {table}")
    if not general.omega[2].is_zero():
        raise LeeFormMismatch(f"omega_3 = {general.omega[2]} != 0")
    return general


# decomposition --------------------------------------------------------------------


def _phi_identity(s: AcbStructure, i: int, j: int, k: int) -> dict[tuple[int, int, int], Fraction]:
    """Right-hand side of ``F(x,y,z) = F(x,phi y,phi z) + eta(y)F(x,xi,z) + eta(z)F(x,y,xi)``.

    Returned as a linear combination of components; structure data must be
    constant.
    """
    out: dict[tuple[int, int, int], Fraction] = {}

    def add(key, coef):
        if coef:
            out[key] = out.get(key, Fraction(0)) + coef

    pj, pk = s.phi_basis(j), s.phi_basis(k)
    for a in range(3):
        for b in range(3):
            add((i, a, b), (pj[a] * pk[b]).constant_value())
    ej, ek = s.eta[j].constant_value(), s.eta[k].constant_value()
    for a in range(3):
        xa = s.xi[a].constant_value()
        add((i, a, k), ej * xa)
        add((i, j, a), ek * xa)
    return {key: v for key, v in out.items() if v}


def _render_identity(lhs: tuple[int, int, int], rhs: dict) -> str:
    def name(t):
        return "F_" + "".join(str(x + 1) for x in t)

    if not rhs:
        return f"{name(lhs)} = 0"
    terms = []
    for key in sorted(rhs):
        coef = rhs[key]
        mag = abs(coef)
        body = name(key) if mag == 1 else f"{mag}*{name(key)}"
        terms.append(("-" if coef < 0 else "+", body))
    text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sg, body in terms[1:]:
        text += f" {sg} {body}"
    return f"{name(lhs)} = {text}"


def admissibility_violations(F: FTensor, s: AcbStructure | None = None) -> list[str]:
    """Each failed symmetry of F, named as the identity it breaks."""
    s = s or canonical_structure()
    out = []
    f = F.f
    for i in range(3):
        for j in range(3):
            for k in range(j + 1, 3):
                if f[i][j][k] != f[i][k][j]:
                    out.append(_render_identity((i, j, k), {(i, k, j): Fraction(1)}))
    for i in range(3):
        for j in range(3):
            for k in range(3):
                rhs = _phi_identity(s, i, j, k)
                if rhs == {(i, j, k): Fraction(1)}:
                    continue
                value = sum((c * f[a][b][d] for (a, b, d), c in rhs.items()), ZERO)
                if f[i][j][k] != value:
                    out.append(_render_identity((i, j, k), rhs))
    return out


def decompose(F: FTensor) -> ClassParameters:
    """Class parameters of an admissible F in the canonical phi-basis.

    Raises :class:`NotAdmissible` naming every violated identity, or the
    components no class can produce when the reconstruction is not exact.
    """
    violations = admissibility_violations(F)
    if violations:
        raise NotAdmissible(violations)
    c = F.component
    half = Fraction(1, 2)
    p = ClassParameters(
        theta1=c("111"),
        theta2=-c("211"),
        theta3=c("113") - c("223"),
        theta_star3=c("123") + c("213"),
        lam=(c("113") + c("223")) * half,
        mu=(c("123") - c("213")) * half,
        nu=c("311"),
        omega1=c("331"),
        omega2=c("332"),
    )
    back = reconstruct(p)
    residual = [
        f"F_{i+1}{j+1}{k+1}"
        for i in range(3)
        for j in range(3)
        for k in range(3)
        if back.f[i][j][k] != F.f[i][j][k]
    ]
    if residual:
        raise NotAdmissible([f"no class produces {', '.join(residual)}"])
    return p


def reconstruct(p: ClassParameters) -> FTensor:
    """Superpose the seven pure-class tensors given by ``p``."""
    half = Fraction(1, 2)
    f = [[[ZERO] * 3 for _ in range(3)] for _ in range(3)]

    def put(x, y, z, v):
        f[x - 1][y - 1][z - 1] = f[x - 1][y - 1][z - 1] + v

    for x, y, z in _all_triples():
        ex = [0, int(x == 1), int(x == 2), int(x == 3)]
        ey = [0, int(y == 1), int(y == 2), int(y == 3)]
        ez = [0, int(z == 1), int(z == 2), int(z == 3)]
        h11 = ey[1] * ez[1] + ey[2] * ez[2]
        s31 = ey[3] * ez[1] + ey[1] * ez[3]
        s32 = ey[3] * ez[2] + ey[2] * ez[3]
        v = (ex[1] * p.theta1 - ex[2] * p.theta2) * h11
        v = v + p.theta3 * half * (ex[1] * s31 - ex[2] * s32)
        v = v + p.theta_star3 * half * (ex[1] * s32 + ex[2] * s31)
        v = v + p.lam * (ex[1] * s31 + ex[2] * s32)
        v = v + p.mu * (ex[1] * s32 - ex[2] * s31)
        v = v + p.nu * (ex[3] * h11)
        v = v + (p.omega1 * s31 + p.omega2 * s32) * ex[3]
        put(x, y, z, v)
    return FTensor(f)  # type: ignore[arg-type]


def _all_triples():
    return [(x, y, z) for x in (1, 2, 3) for y in (1, 2, 3) for z in (1, 2, 3)]


def _members_where(p: ClassParameters, nonzero) -> frozenset[str]:
    return frozenset(name for name, vals in p.by_class().items() if any(nonzero(v) for v in vals))


def classify(F: FTensor, domain: Domain = REAL_LINE) -> ClassLabel:
    """Class of F, generic in h, plus the values of h where it shrinks.

    A parameter counts as present when it is a nonzero polynomial.  Every
    real root inside ``domain`` of a present, non-constant parameter is
    listed with the class at that value.
    """
    p = decompose(F)
    members = _members_where(p, lambda v: not v.is_zero())
    roots: list[ExactRoot] = []
    for _, v in p.items():
        if v.is_zero() or v.is_constant():
            continue
        for r in roots_in(v, domain):
            if r not in roots:
                roots.append(r)
    roots.sort(key=float)
    exceptional = tuple(
        (r, _members_where(p, lambda v, r=r: not v.is_zero() and not vanishes_at(v, r)))
        for r in roots
    )
    return ClassLabel(members, exceptional)
