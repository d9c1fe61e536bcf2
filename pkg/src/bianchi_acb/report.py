"""End-to-end analysis of one equipped Lie algebra and its JSON / text renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .connection import ConnectionCoefficients, check_connection, connection_failures, levi_civita
from .curvature import (
    Condition,
    CurvatureTensor,
    EtaEinsteinResult,
    Proportionality,
    condition_all_zero,
    curvature_data,
    einstein_condition,
    eta_complex_einstein,
    horizontal_flat,
    horizontal_star_ricci_flat,
    scalar_curvature_direct,
    sign_summary,
    star_ricci_vs_g_tilde,
)
from .f_tensor import (
    ClassLabel,
    ClassParameters,
    FTensor,
    LeeForms,
    classify,
    compute_F,
    decompose,
    lee_forms,
    square_norm_nabla_phi,
)
from .lie_algebra import (
    BianchiId,
    JacobiError,
    StructureConstants,
    catalog_algebra,
    check_jacobi,
    jacobiator,
    thurston_geometry,
)
from .scalar import Domain, ExactRoot, REAL_LINE, Scalar, Sign, format_rational
from .structure import (
    AcbStructure,
    StructureError,
    canonical_structure,
    compatibility_failures,
    metric_inverse,
)

__all__ = [
    "Analysis",
    "analyze",
    "InternalInconsistency",
    "PREDICATES",
    "render_text",
    "dumps",
    "classification_json",
    "classification_text",
]

# order of appearance in reports
PREDICATES = (
    "flat",
    "scalar_flat",
    "star_scalar_flat",
    "isotropic_cosymplectic",
    "einstein",
    "eta_complex_einstein",
    "horizontal_flat",
    "horizontal_star_ricci_flat",
    "star_ricci_proportional_to_g_tilde_on_H",
)


class InternalInconsistency(RuntimeError):
    """Two independent computations of the same quantity disagree."""


def _mat_json(m) -> list:
    return [[x.to_json() for x in r] for r in m]


def _mat_from(data) -> tuple:
    return tuple(tuple(Scalar.from_json(x) for x in r) for r in data)


@dataclass
class Analysis:
    name: str
    domain: Domain
    h: Fraction | None
    algebra: StructureConstants
    structure: AcbStructure
    gamma: ConnectionCoefficients
    F: FTensor
    lee: LeeForms
    parameters: ClassParameters
    label: ClassLabel
    norm_nabla_phi: Scalar
    R: CurvatureTensor
    rho: tuple
    rho_star: tuple
    tau: Scalar
    tau_star: Scalar
    k: dict[str, Scalar]
    predicates: dict[str, object]
    signs: dict[str, Sign]
    thurston: str | None = None
    warnings: list[str] = field(default_factory=list)

    def condition(self, name: str) -> Condition:
        p = self.predicates[name]
        return p if isinstance(p, Condition) else p.condition  # type: ignore[union-attr]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "domain": self.domain.to_json(),
            "h": None if self.h is None else format_rational(self.h),
            "thurston": self.thurston,
            "warnings": list(self.warnings),
            "algebra": self.algebra.to_json(),
            "structure": self.structure.to_json(),
            "connection": self.gamma.to_json(),
            "F": self.F.to_json(),
            "lee_forms": self.lee.to_json(),
            "classification": {"parameters": self.parameters.to_json(), **self.label.to_json()},
            "norm_nabla_phi": self.norm_nabla_phi.to_json(),
            "R": self.R.to_json(),
            "rho": _mat_json(self.rho),
            "rho_star": _mat_json(self.rho_star),
            "tau": self.tau.to_json(),
            "tau_star": self.tau_star.to_json(),
            "sectional": {k: v.to_json() for k, v in self.k.items()},
            "predicates": {k: self.predicates[k].to_json() for k in PREDICATES},  # type: ignore[attr-defined]
            "signs": {k: v.value for k, v in self.signs.items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> Analysis:
        dom = data["domain"]
        domain = Domain(
            None if dom["lower"] is None else Fraction(dom["lower"]),
            None if dom["upper"] is None else Fraction(dom["upper"]),
        )
        cls_data = data["classification"]
        params = ClassParameters(**{k: Scalar.from_json(v) for k, v in cls_data["parameters"].items()})
        label = ClassLabel(
            frozenset(cls_data["class"]),
            tuple(
                (ExactRoot.from_json(e["h"]), frozenset(e["class"])) for e in cls_data["exceptional"]
            ),
        )
        lee = data["lee_forms"]
        preds: dict[str, object] = {}
        for k, v in data["predicates"].items():
            if k == "eta_complex_einstein":
                preds[k] = EtaEinsteinResult.from_json(v)
            elif k == "star_ricci_proportional_to_g_tilde_on_H":
                preds[k] = Proportionality.from_json(v)
            else:
                preds[k] = Condition.from_json(v)
        return cls(
            name=data["name"],
            domain=domain,
            h=None if data["h"] is None else Fraction(data["h"]),
            algebra=StructureConstants.from_json(data["algebra"], name=data["name"]),
            structure=AcbStructure.from_json(data["structure"]),
            gamma=ConnectionCoefficients(
                tuple(tuple(tuple(Scalar.from_json(x) for x in r) for r in p) for p in data["connection"])
            ),
            F=FTensor(tuple(tuple(tuple(Scalar.from_json(x) for x in r) for r in p) for p in data["F"])),
            lee=LeeForms(
                tuple(Scalar.from_json(x) for x in lee["theta"]),
                tuple(Scalar.from_json(x) for x in lee["theta_star"]),
                tuple(Scalar.from_json(x) for x in lee["omega"]),
            ),  # type: ignore[arg-type]
            parameters=params,
            label=label,
            norm_nabla_phi=Scalar.from_json(data["norm_nabla_phi"]),
            R=CurvatureTensor.from_json(data["R"]),
            rho=_mat_from(data["rho"]),
            rho_star=_mat_from(data["rho_star"]),
            tau=Scalar.from_json(data["tau"]),
            tau_star=Scalar.from_json(data["tau_star"]),
            k={k: Scalar.from_json(v) for k, v in data["sectional"].items()},
            predicates=preds,
            signs={k: Sign(v) for k, v in data["signs"].items()},
            thurston=data["thurston"],
            warnings=list(data["warnings"]),
        )


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def analyze(
    target: BianchiId | StructureConstants,
    structure: AcbStructure | None = None,
    domain: Domain | None = None,
) -> Analysis:
    """Run the whole pipeline: brackets, connection, F, classes, curvature, predicates.

    Raises ``JacobiError`` for a bracket that is not a Lie algebra,
    ``StructureError`` for an incompatible structure and ``NotAdmissible``
    if F fails its symmetries.
    """
    s = structure or canonical_structure()
    failures = compatibility_failures(s)
    if failures:
        raise StructureError("incompatible structure: " + "; ".join(failures))

    warnings: list[str] = []
    h = None
    thurston = None
    if isinstance(target, BianchiId):
        sc = catalog_algebra(target)
        h = target.h
        dom = target.domain if domain is None else domain
        if h is not None and not target.in_domain():
            warnings.append(f"h = {format_rational(h)} lies outside {target.domain} for Bia({target.type})")
        thurston = thurston_geometry(target.type, h)
        name = target.label
    else:
        sc = target
        dom = domain or REAL_LINE
        name = sc.name
    if h is not None:
        # every scalar is constant; conditions are decided outright
        dom = REAL_LINE
    if not check_jacobi(sc):
        raise JacobiError(
            f"{name}: Jacobi identity fails, cyclic sum = {[str(x) for x in jacobiator(sc)]}"
        )

    gamma = levi_civita(sc, s.g)
    if not check_connection(sc, s.g, gamma):
        raise InternalInconsistency("; ".join(connection_failures(sc, s.g, gamma)))
    F = compute_F(gamma, s)
    lee = lee_forms(F, s)
    params = decompose(F)
    label = classify(F, dom)
    norm = square_norm_nabla_phi(gamma, s)

    cd = curvature_data(gamma, sc, s)
    gi = metric_inverse(s.g)
    if scalar_curvature_direct(cd.R, gi) != cd.tau:
        raise InternalInconsistency("trace of Ricci differs from the double contraction of R")

    prop = star_ricci_vs_g_tilde(cd.rho_star, s, dom)
    predicates: dict[str, object] = {
        "flat": condition_all_zero((v for _, v in cd.R.entries()), dom),
        "scalar_flat": condition_all_zero([cd.tau], dom),
        "star_scalar_flat": condition_all_zero([cd.tau_star], dom),
        "isotropic_cosymplectic": condition_all_zero([norm], dom),
        "einstein": einstein_condition(cd.rho, cd.tau, s.g, dom),
        "eta_complex_einstein": eta_complex_einstein(cd.rho, s, dom),
        "horizontal_flat": horizontal_flat(cd.R, s, dom),
        "horizontal_star_ricci_flat": horizontal_star_ricci_flat(cd.rho_star, s, dom),
        "star_ricci_proportional_to_g_tilde_on_H": prop,
    }
    sign_inputs = {"tau": cd.tau, "tau_star": cd.tau_star, "norm_nabla_phi": norm}
    sign_inputs.update({f"k{key}": v for key, v in cd.k.items()})
    signs = sign_summary(sign_inputs, dom)

    return Analysis(
        name=name,
        domain=dom,
        h=h,
        algebra=sc,
        structure=s,
        gamma=gamma,
        F=F,
        lee=lee,
        parameters=params,
        label=label,
        norm_nabla_phi=norm,
        R=cd.R,
        rho=cd.rho,
        rho_star=cd.rho_star,
        tau=cd.tau,
        tau_star=cd.tau_star,
        k=cd.k,
        predicates=predicates,
        signs=signs,
        thurston=thurston,
        warnings=warnings,
    )


# text ---------------------------------------------------------------------------------


def _poly(s: Scalar) -> str:
    f = s.factored()
    return f"{s}    # = {f}" if f else str(s)


def _matrix_lines(name: str, m) -> list[str]:
    return [
        f"  {name}_{i+1}{j+1} = {_poly(m[i][j])}"
        for i in range(3)
        for j in range(i, 3)
        if not m[i][j].is_zero()
    ] or [f"  {name} = 0"]


def _pred_text(a: Analysis, name: str) -> str:
    p = a.predicates[name]
    if isinstance(p, EtaEinsteinResult):
        text = str(p.condition)
        if p.lam is not None:
            text += f"  (lambda = {p.lam}, mu = {p.mu}, nu = {p.nu})"
        return text
    if isinstance(p, Proportionality):
        if p.factor is not None:
            return f"rho*|_H = ({p.factor}) g~|_H"
        return f"proportional {p.condition}".replace("holds ", "")
    return str(p)


def render_text(a: Analysis) -> str:
    scope = f"domain: {a.domain}" if a.h is None else f"evaluated at h = {format_rational(a.h)}"
    lines = [f"== {a.name} ==", scope]
    if a.thurston:
        lines.append(f"Thurston geometry: {a.thurston}")
    lines += [f"warning: {w}" for w in a.warnings]
    lines.append("brackets: " + ", ".join(a.algebra.bracket_lines()))
    lines.append("nonzero components of nabla:")
    lines += ["  " + x for x in a.gamma.nonzero_lines()] or ["  none"]
    lines.append("nonzero components of F:")
    lines += [f"  F_{k} = {v}" for k, v in a.F.nonzero().items()] or ["  none"]
    lee = a.lee
    for nm, vec in (("theta", lee.theta), ("theta*", lee.theta_star), ("omega", lee.omega)):
        lines.append(f"  {nm} = ({', '.join(str(x) for x in vec)})")
    present = [f"{k}={v}" for k, v in a.parameters.items() if not v.is_zero()]
    lines.append("class parameters: " + (", ".join(present) or "all zero"))
    lines.append(f"class: {a.label.text()}")
    for r, m in a.label.exceptional:
        lines.append(f"  at h = {r}: {ClassLabel(m).text()}")
    lines.append(f"||nabla phi||^2 = {_poly(a.norm_nabla_phi)}")
    lines.append("curvature:")
    lines += [f"  R_{k} = {_poly(v)}" for k, v in a.R.independent().items()] or ["  R = 0"]
    lines += _matrix_lines("rho", a.rho)
    rs = a.rho_star
    lines += [
        f"  rho*_{i+1}{j+1} = {_poly(rs[i][j])}"
        for i in range(3)
        for j in range(3)
        if not rs[i][j].is_zero()
    ] or ["  rho* = 0"]
    lines.append(f"  tau = {_poly(a.tau)}")
    lines.append(f"  tau* = {_poly(a.tau_star)}")
    for key, v in a.k.items():
        lines.append(f"  k_{key} = {_poly(v)}")
    lines.append("signs over the domain:")
    lines += [f"  {k}: {v.value}" for k, v in a.signs.items()]
    lines.append("predicates:")
    lines += [f"  {name}: {_pred_text(a, name)}" for name in PREDICATES]
    return "\n".join(lines) + "\n"


def classification_json(a: Analysis) -> dict:
    return {
        "name": a.name,
        "parameters": a.parameters.to_json(),
        **a.label.to_json(),
    }


def classification_text(a: Analysis) -> str:
    out = [f"{a.name}: {a.label.text()}"]
    for r, m in a.label.exceptional:
        out.append(f"  at h = {r}: {ClassLabel(m).text()}")
    return "\n".join(out) + "\n"

