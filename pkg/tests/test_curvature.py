import pytest

from bianchi_acb.connection import levi_civita
from bianchi_acb.curvature import (
    Condition,
    CurvatureTensor,
    DegenerateSection,
    curvature,
    curvature_data,
    eta_complex_einstein,
    ricci,
    scalar_curvature_direct,
    scalar_curvatures,
    section_kind,
    sectional,
    star_ricci,
)
from bianchi_acb.lie_algebra import BianchiId, catalog_algebra, catalog_ids
from bianchi_acb.report import analyze
from bianchi_acb.scalar import H, ZERO, ExactRoot
from bianchi_acb.structure import associated_metric, canonical_structure, metric_inverse

import _oracle

S = canonical_structure()
GI = metric_inverse(S.g)
E1, E2, E3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def data(t, k=1):
    sc = catalog_algebra(BianchiId(t, k))
    return curvature_data(levi_civita(sc, S.g), sc, S)


def test_vi_h_1_block():
    d = data("VI_h", 1)
    assert d.R.independent() == {"1212": -(H**2), "1313": H**2, "2323": -(H**2)}
    assert (d.rho[0][0], d.rho[1][1], d.rho[2][2]) == (-2 * H**2, 2 * H**2, -2 * H**2)
    assert d.rho_star[0][1] == d.rho_star[1][0] == -(H**2)
    assert (d.tau, d.tau_star) == (-6 * H**2, 0)
    assert sectional(d.R, S.g, E1, E2) == -(H**2)


def test_vi_h_3_components():
    R = data("VI_h", 3).R
    assert R.component("1212") == R.component("2323") == H**2 + 1
    assert R.component("1313") == 1 - H**2
    assert R.component("1223") == 2 * H


def test_vii_h_blocks():
    d1 = data("VII_h", 1)
    assert d1.rho_star[2][2] == 4 * H
    assert (d1.tau, d1.tau_star) == (2 * (1 - 3 * H**2), 4 * H)
    assert sectional(d1.R, S.g, E1, E2) == -(H**2 + 1)
    assert data("VII_h", 3).tau == 6 * H**2


def test_flat_abelian():
    d = data("I")
    assert d.R.is_zero()
    assert ricci(d.R, GI) == ((ZERO,) * 3,) * 3
    assert star_ricci(d.R, GI, S.phi) == ((ZERO,) * 3,) * 3


def test_degenerate_section():
    R = data("VI_h", 1).R
    with pytest.raises(DegenerateSection):
        sectional(R, S.g, E1, E1)
    with pytest.raises(DegenerateSection):
        # e1 + e2 and e3 span a plane on which g is degenerate
        sectional(R, S.g, (1, 1, 0), E3)
    with pytest.raises(DegenerateSection):
        # parallel vectors span no plane at all
        sectional(R, S.g, (1, 1, 0), (2, 2, 0))


def test_section_kinds():
    assert section_kind(S, E1, E2) == {"phi-holomorphic"}
    assert section_kind(S, E1, E3) == {"xi-section", "totally-real"}
    assert section_kind(S, E2, E3) == {"xi-section", "totally-real"}


def test_predicate_examples():
    a = analyze(BianchiId("VI_h", 1))
    assert a.condition("flat") == Condition("iff", (ExactRoot.rational(0),))
    assert a.condition("isotropic_cosymplectic") == Condition("iff", (ExactRoot.surd(2, -1),))
    assert a.condition("einstein") == Condition("identically")
    b = analyze(BianchiId("VII_h", 2))
    assert a.condition("flat").holds is None
    assert b.condition("horizontal_flat") == Condition("iff", (ExactRoot.rational(1),))
    assert b.predicates["star_ricci_proportional_to_g_tilde_on_H"].factor == H**2 - 1


def test_eta_complex_einstein_coefficients():
    d = data("VII_h", 1)
    res = eta_complex_einstein(d.rho, S, BianchiId("VII_h", 1).domain)
    assert res.condition == Condition("identically")
    assert (res.lam, res.mu, res.nu) == (-2 * H**2, -2 * H, 2 * H + 2)
    gt = associated_metric(S)
    for i in range(3):
        for j in range(3):
            rebuilt = res.lam * S.g[i][j] + res.mu * gt[i][j] + res.nu * S.eta[i] * S.eta[j]
            assert rebuilt == d.rho[i][j]


def test_eta_complex_einstein_inconsistency_is_not_an_error():
    d = data("VII_h", 2)
    res = eta_complex_einstein(d.rho, S, BianchiId("VII_h", 2).domain)
    assert res.condition.kind in ("never", "iff")


@pytest.mark.parametrize("bid", catalog_ids(), ids=lambda b: b.label)
def test_curvature_identities(bid):
    R = data(bid.type, bid.subtype).R
    r = R.r
    for i in range(3):
        for j in range(3):
            for k in range(3):
                for l in range(3):
                    assert r[i][j][k][l] == -r[j][i][k][l]
                    assert r[i][j][k][l] == -r[i][j][l][k]
                    assert r[i][j][k][l] == r[k][l][i][j]
                    assert r[i][j][k][l] + r[j][k][i][l] + r[k][i][j][l] == 0


@pytest.mark.parametrize("bid", catalog_ids(), ids=lambda b: b.label)
def test_tau_two_paths(bid):
    d = data(bid.type, bid.subtype)
    assert scalar_curvature_direct(d.R, GI) == d.tau
    assert scalar_curvatures(d.rho, d.rho_star, GI) == (d.tau, d.tau_star)


@pytest.mark.parametrize("bid", catalog_ids(), ids=lambda b: b.label)
def test_curvature_matches_sympy(bid):
    sc = catalog_algebra(bid)
    c = _oracle.from_sc(sc)
    R_ref = _oracle.curvature(_oracle.solve_connection(c), c)
    d = data(bid.type, bid.subtype)
    for idx in ((i, j, k, l) for i in range(3) for j in range(3) for k in range(3) for l in range(3)):
        assert _oracle.to_sympy(d.R[idx]) == R_ref[idx]
    rho_ref = _oracle.ricci(R_ref)
    star_ref = _oracle.star_ricci(R_ref)
    for i in range(3):
        for j in range(3):
            assert _oracle.to_sympy(d.rho[i][j]) == rho_ref[i, j]
            assert _oracle.to_sympy(d.rho_star[i][j]) == star_ref[i, j]


def test_json_round_trip():
    R = data("VII_h", 1).R
    assert CurvatureTensor.from_json(R.to_json()) == R
    assert curvature(levi_civita(catalog_algebra(BianchiId("I", 1)), S.g), catalog_algebra(BianchiId("I", 1)), S.g).is_zero()
