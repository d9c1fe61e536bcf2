"""Three-dimensional real Lie algebras on the canonical basis ``e1, e2, e3``.

Structure constants are stored zero-based internally: ``c[i][j][k]`` is the
coefficient of ``e_{k+1}`` in ``[e_{i+1}, e_{j+1}]``.  Every external format
(JSON files, reports) documents its arrays with the same nesting, position
0 standing for basis vector ``e1``.

The catalog holds all 22 equipped rows of the Bianchi list.  Subtypes of one
type are related by the cyclic relabelling ``e1 -> e2 -> e3 -> e1``: pushing
subtype (k) through it gives subtype (k mod 3 + 1).  This orientation was
checked against every three-row type and is asserted in the test suite.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .scalar import H, ZERO, Domain, REAL_LINE, Scalar, as_scalar, format_rational

__all__ = [
    "StructureConstants",
    "BianchiId",
    "BianchiType",
    "LieAlgebraError",
    "JacobiError",
    "bracket",
    "check_jacobi",
    "jacobiator",
    "catalog_algebra",
    "catalog_ids",
    "cyclic_relabel",
    "thurston_geometry",
    "load_algebra",
    "TYPES",
]

Vector = tuple[Scalar, Scalar, Scalar]


class LieAlgebraError(ValueError):
    pass


class JacobiError(LieAlgebraError):
    pass


def _basis(i: int) -> Vector:
    return tuple(Scalar.const(1) if k == i else ZERO for k in range(3))  # type: ignore[return-value]


@dataclass(frozen=True)
class StructureConstants:
    """Bracket table ``c[i][j][k]``; antisymmetry is checked on construction."""

    c: tuple[tuple[tuple[Scalar, ...], ...], ...]
    name: str = "custom"

    def __post_init__(self) -> None:
        c = tuple(tuple(tuple(as_scalar(x) for x in row) for row in plane) for plane in self.c)
        if len(c) != 3 or any(len(p) != 3 or any(len(r) != 3 for r in p) for p in c):
            raise LieAlgebraError("structure constants must be a 3x3x3 array")
        for i in range(3):
            for j in range(3):
                for k in range(3):
                    if c[i][j][k] != -c[j][i][k]:
                        raise LieAlgebraError(
                            f"not antisymmetric: c^{k+1}_{i+1}{j+1} = {c[i][j][k]} "
                            f"but c^{k+1}_{j+1}{i+1} = {c[j][i][k]}"
                        )
        object.__setattr__(self, "c", c)

    @classmethod
    def from_brackets(
        cls,
        e12: Sequence,
        e23: Sequence,
        e31: Sequence,
        name: str = "custom",
    ) -> StructureConstants:
        """Build from the three brackets ``[e1,e2]``, ``[e2,e3]``, ``[e3,e1]``."""
        c = [[[ZERO] * 3 for _ in range(3)] for _ in range(3)]
        for (i, j), v in (((0, 1), e12), ((1, 2), e23), ((2, 0), e31)):
            for k in range(3):
                c[i][j][k] = as_scalar(v[k])
                c[j][i][k] = -as_scalar(v[k])
        return cls(tuple(tuple(tuple(r) for r in p) for p in c), name)

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.c[i][j]  # type: ignore[return-value]

    def specialize(self, h0) -> StructureConstants:
        return StructureConstants(
            tuple(tuple(tuple(x.specialize(h0) for x in r) for r in p) for p in self.c),
            f"{self.name} at h={h0}",
        )

    def is_parametric(self) -> bool:
        return any(not x.is_constant() for p in self.c for r in p for x in r)

    def to_json(self) -> dict:
        return {"c": [[[x.to_json() for x in r] for r in p] for p in self.c]}

    @classmethod
    def from_json(cls, data: dict, name: str = "custom") -> StructureConstants:
        if not isinstance(data, dict) or "c" not in data:
            raise LieAlgebraError('expected an object with key "c"')
        try:
            c = [[[Scalar.from_json(x) for x in r] for r in p] for p in data["c"]]
        except TypeError as exc:
            raise LieAlgebraError(f"malformed structure constants: {exc}") from exc
        return cls(c, data.get("name", name))  # type: ignore[arg-type]

    def bracket_lines(self) -> list[str]:
        return [
            f"[e{i+1},e{j+1}]={format_vector(self.c[i][j])}" for i, j in ((0, 1), (1, 2), (2, 0))
        ]


def format_vector(v: Sequence[Scalar]) -> str:
    """Render ``sum v_k e_k`` the way bracket tables are printed, ``o`` for zero."""
    out = ""
    for k, x in enumerate(v):
        if x.is_zero():
            continue
        s = str(x)
        if sum(1 for a in x.coefficients if a) > 1:
            term = f"({s})"
        elif s in ("1", "-1"):
            term = s[:-1]
        elif "/" in s and "(" not in s:
            term = f"-({s[1:]})" if s.startswith("-") else f"({s})"
        else:
            term = s
        term += f"e{k+1}"
        if out and not term.startswith("-"):
            out += "+"
        out += term
    return out or "o"


def bracket(sc: StructureConstants, v: Sequence, w: Sequence) -> Vector:
    """``[v, w] = sum v^i w^j c^k_ij e_k``."""
    v = [as_scalar(x) for x in v]
    w = [as_scalar(x) for x in w]
    out = [ZERO, ZERO, ZERO]
    for i in range(3):
        if v[i].is_zero():
            continue
        for j in range(3):
            if w[j].is_zero():
                continue
            vw = v[i] * w[j]
            for k in range(3):
                out[k] = out[k] + vw * sc.c[i][j][k]
    return tuple(out)  # type: ignore[return-value]


def jacobiator(sc: StructureConstants) -> Vector:
    """Cyclic sum ``[[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2]``.

    In dimension three this single triple decides the Jacobi identity; every
    other basis triple has a repeated entry and vanishes by antisymmetry.
    """
    e = [_basis(i) for i in range(3)]
    terms = [
        bracket(sc, bracket(sc, e[0], e[1]), e[2]),
        bracket(sc, bracket(sc, e[1], e[2]), e[0]),
        bracket(sc, bracket(sc, e[2], e[0]), e[1]),
    ]
    return tuple(sum((t[k] for t in terms), ZERO) for k in range(3))  # type: ignore[return-value]


def check_jacobi(sc: StructureConstants) -> bool:
    e = [_basis(i) for i in range(3)]
    for a in range(3):
        for b in range(3):
            for c in range(3):
                x, y, z = e[a], e[b], e[c]
                total = [ZERO] * 3
                for t in (
                    bracket(sc, bracket(sc, x, y), z),
                    bracket(sc, bracket(sc, y, z), x),
                    bracket(sc, bracket(sc, z, x), y),
                ):
                    total = [p + q for p, q in zip(total, t)]
                if any(not s.is_zero() for s in total):
                    return False
    return True


# catalog -----------------------------------------------------------------------

TYPES = ("I", "II", "III", "IV", "V", "VI_h", "VII_h", "VIII", "IX")

_ALIASES = {
    "VI": "VI_h", "VIH": "VI_h", "VI_H": "VI_h",
    "VII": "VII_h", "VIIH": "VII_h", "VII_H": "VII_h",
}


@dataclass(frozen=True)
class BianchiType:
    name: str
    domain: Domain = REAL_LINE
    parametric: bool = False


_TYPE_INFO = {
    "I": BianchiType("I"),
    "II": BianchiType("II"),
    "III": BianchiType("III"),
    "IV": BianchiType("IV"),
    "V": BianchiType("V"),
    "VI_h": BianchiType("VI_h", Domain(upper=Fraction(0)), True),
    "VII_h": BianchiType("VII_h", Domain(lower=Fraction(0)), True),
    "VIII": BianchiType("VIII"),
    "IX": BianchiType("IX"),
}


def normalize_type(name: str) -> str:
    key = str(name).strip()
    if key in _TYPE_INFO:
        return key
    up = key.upper()
    if up in _TYPE_INFO:
        return up
    if up in _ALIASES:
        return _ALIASES[up]
    raise LieAlgebraError(f"unknown Bianchi type {name!r}; expected one of {', '.join(TYPES)}")


@dataclass(frozen=True)
class BianchiId:
    """A row of the equipped catalog.

    ``h`` is ``None`` for the indeterminate parameter; a rational value
    specializes the VI_h / VII_h families.  Type III is kept as its own row
    set although it equals VI_h at h = -1.
    """

    type: str
    subtype: int = 1
    h: Fraction | None = field(default=None)

    def __post_init__(self) -> None:
        t = normalize_type(self.type)
        object.__setattr__(self, "type", t)
        allowed = (1,) if t in ("I", "IX") else (1, 2, 3)
        if self.subtype not in allowed:
            raise LieAlgebraError(f"Bia({t}) has no subtype ({self.subtype}); allowed: {allowed}")
        if self.h is not None:
            if not _TYPE_INFO[t].parametric:
                raise LieAlgebraError(f"Bia({t}) takes no parameter h")
            object.__setattr__(self, "h", Fraction(self.h))

    @property
    def info(self) -> BianchiType:
        return _TYPE_INFO[self.type]

    @property
    def domain(self) -> Domain:
        return self.info.domain

    def in_domain(self) -> bool:
        return self.h is None or self.domain.contains(self.h)

    @property
    def label(self) -> str:
        base = f"Bia({self.type})({self.subtype})"
        if self.h is not None:
            base += f" h={format_rational(self.h)}"
        return base

    def __str__(self) -> str:
        return self.label


def _catalog_brackets(t: str, k: int, h: Scalar) -> tuple:
    o = (0, 0, 0)
    table = {
        ("I", 1): (o, o, o),
        ("II", 1): (o, (1, 0, 0), o),
        ("II", 2): (o, o, (0, 1, 0)),
        ("II", 3): ((0, 0, 1), o, o),
        ("III", 1): (o, (1, 1, 0), (-1, -1, 0)),
        ("III", 2): ((0, -1, -1), o, (0, 1, 1)),
        ("III", 3): ((1, 0, 1), (-1, 0, -1), o),
        ("IV", 1): (o, (1, -1, 0), (1, 0, 0)),
        ("IV", 2): ((0, 1, 0), o, (0, 1, -1)),
        ("IV", 3): ((-1, 0, 1), (0, 0, 1), o),
        ("V", 1): (o, (0, 1, 0), (1, 0, 0)),
        ("V", 2): ((0, 1, 0), o, (0, 0, 1)),
        ("V", 3): ((1, 0, 0), (0, 0, 1), o),
        ("VI_h", 1): (o, (1, -h, 0), (h, -1, 0)),
        ("VI_h", 2): ((0, h, -1), o, (0, 1, -h)),
        ("VI_h", 3): ((-h, 0, 1), (-1, 0, h), o),
        ("VII_h", 1): (o, (1, -h, 0), (h, 1, 0)),
        ("VII_h", 2): ((0, h, 1), o, (0, 1, -h)),
        ("VII_h", 3): ((-h, 0, 1), (1, 0, h), o),
        ("VIII", 1): ((0, 0, -1), (1, 0, 0), (0, 1, 0)),
        ("VIII", 2): ((0, 0, 1), (-1, 0, 0), (0, 1, 0)),
        ("VIII", 3): ((0, 0, 1), (1, 0, 0), (0, -1, 0)),
        ("IX", 1): ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
    }
    return table[(t, k)]


def catalog_algebra(id: BianchiId) -> StructureConstants:
    h = H if id.h is None else Scalar.const(id.h)
    return StructureConstants.from_brackets(*_catalog_brackets(id.type, id.subtype, h), name=id.label)


def catalog_ids() -> list[BianchiId]:
    """The 23 catalog rows in table order, parametric rows with symbolic h."""
    return [BianchiId(t, k) for t in TYPES for k in ((1,) if t in ("I", "IX") else (1, 2, 3))]


def cyclic_relabel(sc: StructureConstants) -> StructureConstants:
    """Push the bracket through ``e1 -> e2 -> e3 -> e1``."""
    p = (1, 2, 0)
    c = [[[ZERO] * 3 for _ in range(3)] for _ in range(3)]
    for i in range(3):
        for j in range(3):
            for k in range(3):
                c[p[i]][p[j]][p[k]] = sc.c[i][j][k]
    return StructureConstants(c, f"relabelled {sc.name}")  # type: ignore[arg-type]


_THURSTON = {
    "I": "E3",
    "II": "Nil",
    "III": "H2xR",
    "V": "H3",
    "VIII": "SL2R~",
    "IX": "S3",
}


def thurston_geometry(type: str, h: Fraction | int | None = None) -> str | None:
    """Thurston geometry realised by a Bianchi type, if any.

    For the parametric families only the special members carry a geometry:
    VI_0 (Solv), VI_{-1} = III (H2xR) and VII_0 (E3).  The S2xR geometry has
    no Bianchi realisation and is never returned.
    """
    t = normalize_type(type)
    if t == "VI_h":
        if h is None:
            return None
        return {Fraction(0): "Solv", Fraction(-1): "H2xR"}.get(Fraction(h))
    if t == "VII_h":
        return "E3" if h is not None and Fraction(h) == 0 else None
    return _THURSTON.get(t)


def load_algebra(path: str | Path) -> StructureConstants:
    """Read a custom algebra ``{"c": [[[...]]], "name": ...}`` from disk."""
    p = Path(path)
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise LieAlgebraError(f"cannot read {p}: {exc}") from exc
    return StructureConstants.from_json(data, name=p.stem)
