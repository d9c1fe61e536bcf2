import json
from fractions import Fraction

import pytest

from bianchi_acb.curvature import Condition
from bianchi_acb.lie_algebra import BianchiId, catalog_algebra, catalog_ids
from bianchi_acb.report import PREDICATES, Analysis, analyze, dumps, render_text
from bianchi_acb.scalar import ExactRoot

SAMPLES = [Fraction(x) for x in ("-2", "-1", "-1/2", "0", "1/2", "1", "2")]


def _spec_matrix(m, h0):
    return tuple(tuple(x.specialize(h0) for x in r) for r in m)


def _predicate_condition(p):
    return p if isinstance(p, Condition) else p.condition


def _cases():
    for bid in catalog_ids():
        if not bid.info.parametric:
            continue
        for h0 in SAMPLES:
            if bid.domain.contains(h0):
                yield bid, h0


@pytest.mark.parametrize("bid,h0", list(_cases()), ids=lambda v: getattr(v, "label", str(v)))
def test_specialization_commutes(bid, h0):
    sym = analyze(bid)
    conc = analyze(BianchiId(bid.type, bid.subtype, h0))
    assert catalog_algebra(bid).specialize(h0).c == conc.algebra.c
    assert tuple(tuple(tuple(x.specialize(h0) for x in r) for r in p) for p in sym.gamma.gamma) == conc.gamma.gamma
    assert sym.F.specialize(h0) == conc.F
    assert sym.norm_nabla_phi.specialize(h0) == conc.norm_nabla_phi
    assert all(a.specialize(h0) == b for (_, a), (_, b) in zip(sym.parameters.items(), conc.parameters.items()))
    for idx in ((i, j, k, l) for i in range(3) for j in range(3) for k in range(3) for l in range(3)):
        assert sym.R[idx].specialize(h0) == conc.R[idx]
    assert _spec_matrix(sym.rho, h0) == conc.rho
    assert _spec_matrix(sym.rho_star, h0) == conc.rho_star
    assert (sym.tau.specialize(h0), sym.tau_star.specialize(h0)) == (conc.tau, conc.tau_star)
    assert {k: v.specialize(h0) for k, v in sym.k.items()} == conc.k

    root = ExactRoot.rational(h0)
    members = dict(sym.label.exceptional).get(root, sym.label.members)
    assert members == conc.label.members

    for name in PREDICATES:
        s = _predicate_condition(sym.predicates[name])
        c = _predicate_condition(conc.predicates[name])
        expect = s.kind == "identically" or (s.kind == "iff" and root in s.roots)
        assert c.holds is expect, name


@pytest.mark.parametrize("bid", catalog_ids(), ids=lambda b: b.label)
def test_json_round_trip_is_byte_identical(bid):
    a = analyze(bid)
    text = dumps(a.to_json())
    assert dumps(Analysis.from_json(json.loads(text)).to_json()) == text


def test_out_of_domain_h_warns():
    a = analyze(BianchiId("VII_h", 1, Fraction(-1)))
    assert a.warnings and "outside" in a.warnings[0]
    assert "warning" in render_text(a)


def test_text_report_mentions_everything():
    text = render_text(analyze(BianchiId("VII_h", 3)))
    for needle in ("nabla_e1 e1", "F_111", "theta", "class: F₁⊕F₄⊕F₈⊕F₁₁", "R_1212", "rho_11",
                   "rho*_12", "tau = 6h^2", "k_12 = h^2", "||nabla phi||^2", "einstein: holds identically"):
        assert needle in text


def test_abelian_report():
    a = analyze(BianchiId("I", 1))
    assert a.R.is_zero() and a.norm_nabla_phi == 0 and a.tau == 0
    assert a.condition("flat") == Condition("identically")
    assert a.thurston == "E3"
