"""Published values, re-derived by the engine and compared exactly.

Every check is named after the algebra and the quantity it covers.  The
checklist:

* class of each of the 23 catalog rows, and of the six h = 0 rows of the
  parametric families (read off the exceptional values and confirmed by
  running the pipeline at h = 0);
* for the parametric families, that no negative (VI_h) or positive
  (VII_h) value of h changes the class;
* nonzero F components and theta_3 of the three Bia(II) subtypes;
* the connection table of VI_h(1);
* for each subtype of VI_h and VII_h: norm of nabla phi, independent R
  components, rho, rho*, tau, tau*, basis sectional curvatures;
* every listed property of those six manifolds (flatness, isotropic
  cosymplecticity, scalar flatness, sign claims, Einstein-type claims,
  horizontal claims);
* the Thurston geometry lookup and the flatness of the only F0 row.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .curvature import Condition, section_kind
from .f_tensor import class_label_text
from .lie_algebra import (
    BianchiId,
    StructureConstants,
    catalog_algebra,
    catalog_ids,
    thurston_geometry,
)
from .report import Analysis, analyze
from .structure import canonical_structure
from .scalar import H, ExactRoot, Scalar, Sign, as_scalar

__all__ = [
    "Check",
    "run_checks",
    "summarize",
    "TABLE3",
    "EXPECTED_CURVATURE",
    "PROPERTY_CLAIMS",
    "SIGN_CLAIMS",
    "BIA_II_F",
    "VI1_CONNECTION",
    "BRACKET_SPOTS",
    "THURSTON_EXPECTED",
]

Catalog = Callable[[BianchiId], StructureConstants]


@dataclass(frozen=True)
class Check:
    name: str
    group: str
    passed: bool
    expected: str
    computed: str


# published class table; the h = 0 rows of the families are keyed with h=0
TABLE3: dict[tuple[str, int, int | None], tuple[str, ...]] = {
    ("I", 1, None): (),
    ("II", 1, None): ("F4", "F10"),
    ("II", 2, None): ("F4", "F10"),
    ("II", 3, None): ("F8", "F10"),
    ("III", 1, None): ("F5", "F10"),
    ("III", 2, None): ("F1", "F4", "F8", "F11"),
    ("III", 3, None): ("F1", "F4", "F8", "F10", "F11"),
    ("IV", 1, None): ("F4", "F5", "F10"),
    ("IV", 2, None): ("F1", "F4", "F10", "F11"),
    ("IV", 3, None): ("F1", "F8", "F10", "F11"),
    ("V", 1, None): ("F9",),
    ("V", 2, None): ("F1", "F11"),
    ("V", 3, None): ("F1", "F11"),
    ("VI_h", 1, 0): ("F10",),
    ("VI_h", 2, 0): ("F4", "F8"),
    ("VI_h", 3, 0): ("F4", "F8", "F10"),
    ("VI_h", 1, None): ("F5", "F10"),
    ("VI_h", 2, None): ("F1", "F4", "F8", "F11"),
    ("VI_h", 3, None): ("F1", "F4", "F8", "F10", "F11"),
    ("VII_h", 1, 0): ("F4",),
    ("VII_h", 2, 0): ("F4", "F8", "F10"),
    ("VII_h", 3, 0): ("F4", "F8"),
    ("VII_h", 1, None): ("F4", "F5"),
    ("VII_h", 2, None): ("F1", "F4", "F8", "F10", "F11"),
    ("VII_h", 3, None): ("F1", "F4", "F8", "F11"),
    ("VIII", 1, None): ("F4", "F8", "F10"),
    ("VIII", 2, None): ("F8", "F10"),
    ("VIII", 3, None): ("F8", "F10"),
    ("IX", 1, None): ("F4", "F8", "F10"),
}

_half = Fraction(1, 2)
BIA_II_F = {
    1: ({"113": -_half, "131": -_half, "223": _half, "232": _half, "311": -1, "322": -1}, -1),
    2: ({"113": -_half, "131": -_half, "223": _half, "232": _half, "311": 1, "322": 1}, -1),
    3: ({"113": _half, "131": _half, "223": _half, "232": _half, "311": 1, "322": 1}, 0),
}

# single published brackets and structure values
BRACKET_SPOTS = [
    (("III", 1), "[e2,e3]=e1+e2"),
    (("VIII", 2), "[e1,e2]=e3"),
    (("VIII", 2), "[e2,e3]=-e1"),
    (("VIII", 2), "[e3,e1]=e2"),
    (("V", 3), "[e1,e2]=e1"),
    (("V", 3), "[e2,e3]=e3"),
    (("V", 3), "[e3,e1]=o"),
    (("II", 1), "[e2,e3]=e1"),
    (("VI_h", 1), "[e3,e1]=he1-e2"),
    (("I", 1), "[e1,e2]=o"),
]

VI1_CONNECTION = {
    (1, 1): (0, 0, H),
    (1, 3): (-H, 0, 0),
    (2, 2): (0, 0, -H),
    (2, 3): (0, -H, 0),
    (3, 1): (0, -1, 0),
    (3, 2): (-1, 0, 0),
}

h2 = H * H


def _sym(entries: dict[str, Scalar]) -> dict[str, Scalar]:
    out = dict(entries)
    for key, v in entries.items():
        out[key[::-1]] = v
    return out


# displayed curvature blocks; R lists the independent nonzero components
EXPECTED_CURVATURE: dict[tuple[str, int], dict] = {
    ("VI_h", 1): {
        "norm": 4 * (2 - h2),
        "R": {"1212": -h2, "1313": h2, "2323": -h2},
        "rho": _sym({"11": -2 * h2, "22": 2 * h2, "33": -2 * h2}),
        "rho_star": _sym({"12": -h2}),
        "tau": -6 * h2,
        "tau_star": Scalar(),
        "k": {"12": -h2, "13": -h2, "23": -h2},
    },
    ("VI_h", 2): {
        "norm": 2 * (1 - 5 * h2),
        "R": {"1212": -h2, "1313": h2, "2323": -h2},
        "rho": _sym({"11": -2 * h2, "22": 2 * h2, "33": -2 * h2}),
        "rho_star": _sym({"12": -h2}),
        "tau": -6 * h2,
        "tau_star": Scalar(),
        "k": {"12": -h2, "13": -h2, "23": -h2},
    },
    ("VI_h", 3): {
        "norm": 10 * (h2 + 1),
        "R": {"1212": h2 + 1, "2323": h2 + 1, "1313": 1 - h2, "1223": 2 * H},
        "rho": _sym({"11": 2 * h2, "33": 2 * h2, "13": -2 * H, "22": -2 * (h2 + 1)}),
        "rho_star": _sym({"12": h2 + 1, "23": -2 * H}),
        "tau": 2 * (3 * h2 + 1),
        "tau_star": Scalar(),
        "k": {"12": h2 + 1, "23": h2 + 1, "13": h2 - 1},
    },
    ("VII_h", 1): {
        "norm": 4 * (1 - h2),
        "R": {"1212": -(h2 + 1), "1313": h2 - 1, "2323": -(h2 - 1), "1323": -2 * H},
        "rho": _sym({"11": -2 * h2, "22": 2 * h2, "12": 2 * H, "33": 2 * (1 - h2)}),
        "rho_star": _sym({"12": -(h2 + 1), "33": 4 * H}),
        "tau": 2 * (1 - 3 * h2),
        "tau_star": 4 * H,
        "k": {"12": -(h2 + 1), "13": 1 - h2, "23": 1 - h2},
    },
    ("VII_h", 2): {
        "norm": -10 * (h2 - 1),
        "R": {"1212": -(h2 - 1), "1313": h2 - 1, "2323": -(h2 + 1), "1213": 2 * H},
        "rho": _sym({"11": -2 * (h2 - 1), "22": 2 * h2, "33": -2 * h2, "23": -2 * H}),
        "rho_star": _sym({"12": -(h2 - 1), "13": 2 * H}),
        "tau": -2 * (3 * h2 - 1),
        "tau_star": Scalar(),
        "k": {"12": -(h2 - 1), "13": -(h2 - 1), "23": -(h2 + 1)},
    },
    ("VII_h", 3): {
        "norm": 2 * (5 * h2 + 1),
        "R": {"1212": h2, "1313": -h2, "2323": h2},
        "rho": _sym({"11": 2 * h2, "22": -2 * h2, "33": 2 * h2}),
        "rho_star": _sym({"12": h2}),
        "tau": 6 * h2,
        "tau_star": Scalar(),
        "k": {"12": h2, "13": h2, "23": h2},
    },
}

ROOT_0 = ExactRoot.rational(0)
ROOT_1 = ExactRoot.rational(1)
MINUS_SQRT2 = ExactRoot.surd(2, -1)
MINUS_SQRT5_OVER_5 = ExactRoot.surd(Fraction(1, 5), -1)
SQRT3_OVER_3 = ExactRoot.surd(Fraction(1, 3), 1)

_IFF = lambda *roots: Condition("iff", tuple(roots))  # noqa: E731
_ALWAYS = Condition("identically")

# (type, subtype) -> list of (claim name, predicate, expected condition)
PROPERTY_CLAIMS: dict[tuple[str, int], list[tuple[str, str, Condition]]] = {
    ("VI_h", 1): [
        ("flat iff h=0", "flat", _IFF(ROOT_0)),
        ("isotropic-cosymplectic iff h=-sqrt2", "isotropic_cosymplectic", _IFF(MINUS_SQRT2)),
        ("*-scalar flat", "star_scalar_flat", _ALWAYS),
        ("Einstein", "einstein", _ALWAYS),
    ],
    ("VI_h", 2): [
        ("flat iff h=0", "flat", _IFF(ROOT_0)),
        ("isotropic-cosymplectic iff h=-sqrt5/5", "isotropic_cosymplectic", _IFF(MINUS_SQRT5_OVER_5)),
        ("*-scalar flat", "star_scalar_flat", _ALWAYS),
        ("Einstein", "einstein", _ALWAYS),
    ],
    ("VI_h", 3): [
        ("*-scalar flat", "star_scalar_flat", _ALWAYS),
    ],
    ("VII_h", 1): [
        ("isotropic-cosymplectic iff h=1", "isotropic_cosymplectic", _IFF(ROOT_1)),
        ("scalar flat iff h=sqrt3/3", "scalar_flat", _IFF(SQRT3_OVER_3)),
        ("*-scalar flat iff h=0", "star_scalar_flat", _IFF(ROOT_0)),
        ("eta-complex-Einstein", "eta_complex_einstein", _ALWAYS),
    ],
    ("VII_h", 2): [
        ("isotropic-cosymplectic iff h=1", "isotropic_cosymplectic", _IFF(ROOT_1)),
        ("scalar flat iff h=sqrt3/3", "scalar_flat", _IFF(SQRT3_OVER_3)),
        ("*-scalar flat", "star_scalar_flat", _ALWAYS),
        ("horizontal flat iff h=1", "horizontal_flat", _IFF(ROOT_1)),
        ("horizontal *-Ricci flat iff h=1", "horizontal_star_ricci_flat", _IFF(ROOT_1)),
    ],
    ("VII_h", 3): [
        ("flat iff h=0", "flat", _IFF(ROOT_0)),
        ("*-scalar flat", "star_scalar_flat", _ALWAYS),
        ("Einstein", "einstein", _ALWAYS),
    ],
}

_NONPOS = {Sign.NONPOSITIVE, Sign.NEGATIVE, Sign.ZERO}
_NONNEG = {Sign.NONNEGATIVE, Sign.POSITIVE, Sign.ZERO}

# (type, subtype) -> list of (claim name, quantities, allowed signs)
SIGN_CLAIMS: dict[tuple[str, int], list[tuple[str, tuple[str, ...], set[Sign]]]] = {
    ("VI_h", 1): [("tau and sectional curvatures non-positive", ("tau", "k12", "k13", "k23"), _NONPOS)],
    ("VI_h", 2): [("tau and sectional curvatures non-positive", ("tau", "k12", "k13", "k23"), _NONPOS)],
    ("VI_h", 3): [
        ("norm of nabla phi and tau positive", ("norm_nabla_phi", "tau"), {Sign.POSITIVE}),
        ("phi-holomorphic sectional curvature positive", ("k12",), {Sign.POSITIVE}),
    ],
    ("VII_h", 1): [("phi-holomorphic sectional curvature negative", ("k12",), {Sign.NEGATIVE})],
    ("VII_h", 3): [
        ("norm of nabla phi positive", ("norm_nabla_phi",), {Sign.POSITIVE}),
        ("tau and sectional curvatures non-negative", ("tau", "k12", "k13", "k23"), _NONNEG),
    ],
}

THURSTON_EXPECTED = [
    (("I", None), "E3"),
    (("II", None), "Nil"),
    (("III", None), "H2xR"),
    (("IV", None), None),
    (("V", None), "H3"),
    (("VI_h", 0), "Solv"),
    (("VI_h", Fraction(-1, 2)), None),
    (("VII_h", 0), "E3"),
    (("VII_h", 1), None),
    (("VIII", None), "SL2R~"),
    (("IX", None), "S3"),
]


def _label(members: Iterable[str]) -> str:
    return class_label_text(members)


def _mat_entries(m) -> dict[str, Scalar]:
    return {f"{i+1}{j+1}": m[i][j] for i in range(3) for j in range(3) if not m[i][j].is_zero()}


def _fmt_dict(d: dict[str, Scalar]) -> str:
    return "{" + ", ".join(f"{k}: {v}" for k, v in sorted(d.items())) + "}" if d else "{}"


def _analysis(catalog: Catalog, bid: BianchiId) -> Analysis:
    return analyze(catalog(bid), domain=bid.domain)


def run_checks(catalog: Catalog = catalog_algebra) -> list[Check]:
    """Run the full checklist; ``catalog`` can be swapped for negative controls."""
    checks: list[Check] = []

    def add(name, group, passed, expected, computed):
        checks.append(Check(name, group, bool(passed), str(expected), str(computed)))

    cache: dict[BianchiId, Analysis] = {}

    def get(bid: BianchiId) -> Analysis | Exception:
        if bid not in cache:
            try:
                cache[bid] = _analysis(catalog, bid)
            except Exception as exc:  # a corrupted catalog surfaces as failed checks
                cache[bid] = exc  # type: ignore[assignment]
        return cache[bid]

    # classes
    for bid in catalog_ids():
        want = TABLE3[(bid.type, bid.subtype, None)]
        a = get(bid)
        got = a if isinstance(a, Exception) else a.label.ordered
        add(f"class {bid.label}", "class", got == list(want), _label(want),
            got if isinstance(got, Exception) else _label(got))
        if bid.info.parametric:
            want0 = TABLE3[(bid.type, bid.subtype, 0)]
            if isinstance(a, Exception):
                add(f"class {bid.label} at h=0 (exceptional)", "class h=0", False, _label(want0), a)
                add(f"class {bid.label} only shrinks at h=0", "class h=0", False, "only h=0", a)
            else:
                exc = dict(a.label.exceptional)
                got0 = exc.get(ROOT_0, a.label.members)
                add(f"class {bid.label} at h=0 (exceptional)", "class h=0",
                    sorted(got0) == sorted(want0), _label(want0), _label(got0))
                others = [str(r) for r, _ in a.label.exceptional if r != ROOT_0]
                add(f"class {bid.label} only shrinks at h=0", "class h=0", not others,
                    "only h=0", others or "only h=0")
            b0 = BianchiId(bid.type, bid.subtype, Fraction(0))
            try:
                got_c = analyze(catalog(b0)).label.ordered
            except Exception as err:
                got_c = err  # type: ignore[assignment]
            add(f"class {b0.label} (concrete pipeline)", "class h=0", got_c == list(want0),
                _label(want0), got_c if isinstance(got_c, Exception) else _label(got_c))

    # catalog spot values and the canonical structure
    for (t, k), line in BRACKET_SPOTS:
        bid = BianchiId(t, k)
        try:
            lines = catalog(bid).bracket_lines()
        except Exception as err:
            lines = [str(err)]
        add(f"bracket {bid.label} {line}", "catalog", line in lines, line, ", ".join(lines))
    canon = canonical_structure()
    add("structure phi e1 = e2", "structure", canon.phi_basis(0) == (0, 1, 0), "(0, 1, 0)",
        tuple(str(x) for x in canon.phi_basis(0)))
    add("structure g(e2,e2) = -1", "structure", canon.g[1][1] == -1, -1, canon.g[1][1])

    # Bia(II) F components
    for k, (comps, theta3) in BIA_II_F.items():
        bid = BianchiId("II", k)
        a = get(bid)
        want = {key: as_scalar(v) for key, v in comps.items()}
        if isinstance(a, Exception):
            add(f"F components {bid.label}", "Bia(II) F", False, _fmt_dict(want), a)
            add(f"theta3 {bid.label}", "Bia(II) F", False, theta3, a)
            continue
        got = a.F.nonzero()
        add(f"F components {bid.label}", "Bia(II) F", got == want, _fmt_dict(want), _fmt_dict(got))
        add(f"theta3 {bid.label}", "Bia(II) F", a.lee.theta[2] == theta3, theta3, a.lee.theta[2])
        if k == 1:
            rest = [a.lee.theta[0], a.lee.theta[1], *a.lee.theta_star, *a.lee.omega]
            add(f"Lee forms {bid.label} vanish apart from theta3", "Bia(II) F",
                all(x.is_zero() for x in rest), "0", [str(x) for x in rest])
            want_p = {"theta3": as_scalar(-1), "nu": as_scalar(-1)}
            got_p = {n: v for n, v in a.parameters.items() if not v.is_zero()}
            add(f"class parameters {bid.label}", "Bia(II) F", got_p == want_p,
                _fmt_dict(want_p), _fmt_dict(got_p))

    # connection of VI_h(1)
    a = get(BianchiId("VI_h", 1))
    want_g = {k: tuple(as_scalar(x) for x in v) for k, v in VI1_CONNECTION.items()}
    if isinstance(a, Exception):
        add("connection Bia(VI_h)(1)", "connection", False, want_g, a)
    else:
        got_g = {
            (i + 1, j + 1): a.gamma.gamma[i][j]
            for i in range(3)
            for j in range(3)
            if any(not x.is_zero() for x in a.gamma.gamma[i][j])
        }
        add("connection Bia(VI_h)(1)", "connection", got_g == want_g,
            "; ".join(f"nabla_e{i}e{j}={[str(x) for x in v]}" for (i, j), v in sorted(want_g.items())),
            "; ".join(f"nabla_e{i}e{j}={[str(x) for x in v]}" for (i, j), v in sorted(got_g.items())))

    # curvature displays
    for (t, k), exp in EXPECTED_CURVATURE.items():
        bid = BianchiId(t, k)
        a = get(bid)
        for qty in ("norm", "R", "rho", "rho_star", "tau", "tau_star", "k"):
            name = f"{bid.label} {qty}"
            want = exp[qty]
            if isinstance(a, Exception):
                add(name, "curvature", False, want, a)
                continue
            got = {
                "norm": a.norm_nabla_phi,
                "R": a.R.independent(),
                "rho": _mat_entries(a.rho),
                "rho_star": _mat_entries(a.rho_star),
                "tau": a.tau,
                "tau_star": a.tau_star,
                "k": dict(a.k),
            }[qty]
            if isinstance(want, dict):
                want_n = {key: v for key, v in want.items() if not as_scalar(v).is_zero()}
                add(name, "curvature", got == want_n, _fmt_dict(want_n), _fmt_dict(got))
            else:
                add(name, "curvature", got == want, want, got)

    # properties
    for (t, k), claims in PROPERTY_CLAIMS.items():
        bid = BianchiId(t, k)
        a = get(bid)
        for title, pred, want in claims:
            name = f"{bid.label} {title}"
            if isinstance(a, Exception):
                add(name, "properties", False, want, a)
                continue
            got = a.condition(pred)
            add(name, "properties", got == want, want, got)
    for (t, k), claims in SIGN_CLAIMS.items():
        bid = BianchiId(t, k)
        a = get(bid)
        for title, names, allowed in claims:
            name = f"{bid.label} {title}"
            expected = " or ".join(sorted(s.value for s in allowed))
            if isinstance(a, Exception):
                add(name, "properties", False, expected, a)
                continue
            got = {n: a.signs[n] for n in names}
            add(name, "properties", all(v in allowed for v in got.values()), expected,
                ", ".join(f"{n}: {v.value}" for n, v in got.items()))

    a = get(BianchiId("VII_h", 2))
    if isinstance(a, Exception):
        add("Bia(VII_h)(2) rho*|_H = (h^2-1) g~|_H", "properties", False, "h^2-1", a)
    else:
        p = a.predicates["star_ricci_proportional_to_g_tilde_on_H"]
        add("Bia(VII_h)(2) rho*|_H = (h^2-1) g~|_H", "properties", p.factor == h2 - 1, h2 - 1, p.factor)
    a = get(BianchiId("VII_h", 1))
    if isinstance(a, Exception):
        add("Bia(VII_h)(1) xi-sections e1e3, e2e3", "properties", False, "xi-section", a)
    else:
        s = a.structure
        e = [[int(i == j) for j in range(3)] for i in range(3)]
        kinds = [section_kind(s, e[0], e[2]), section_kind(s, e[1], e[2])]
        ok = all("xi-section" in kd for kd in kinds) and "phi-holomorphic" in section_kind(s, e[0], e[1])
        add("Bia(VII_h)(1) e1e2 phi-holomorphic, e1e3 and e2e3 xi-sections", "properties", ok,
            "phi-holomorphic; xi-section; xi-section",
            "; ".join(",".join(sorted(kd)) for kd in [section_kind(s, e[0], e[1]), *kinds]))

    # Thurston lookup and F0 => flat
    for (t, hv), geo in THURSTON_EXPECTED:
        got_geo = thurston_geometry(t, hv)
        tag = t if hv is None else f"{t} h={hv}"
        add(f"Thurston {tag}", "Thurston", got_geo == geo, geo, got_geo)
    a = get(BianchiId("I", 1))
    if isinstance(a, Exception):
        add("Bia(I)(1) F0 and flat", "F0 flat", False, "F0, R = 0", a)
    else:
        ok = not a.label.members and a.R.is_zero()
        add("Bia(I)(1) F0 and flat", "F0 flat", ok, "F0, R = 0",
            f"{a.label.text()}, R {'= 0' if a.R.is_zero() else '!= 0'}")

    return sorted(checks, key=lambda c: c.name)


def summarize(checks: list[Check]) -> list[str]:
    groups: dict[str, list[Check]] = {}
    for c in checks:
        groups.setdefault(c.group, []).append(c)
    return [
        f"{sum(c.passed for c in cs)}/{len(cs)} {g} checks pass" for g, cs in sorted(groups.items())
    ]

