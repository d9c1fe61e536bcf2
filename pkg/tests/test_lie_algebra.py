from fractions import Fraction

import pytest
import sympy as sp

from bianchi_acb.lie_algebra import (
    BianchiId,
    LieAlgebraError,
    StructureConstants,
    bracket,
    catalog_algebra,
    catalog_ids,
    check_jacobi,
    cyclic_relabel,
    jacobiator,
    thurston_geometry,
)
from bianchi_acb.scalar import H, ZERO, as_scalar

import _oracle

E1, E2, E3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def vec(*xs):
    return tuple(as_scalar(x) for x in xs)


def test_bracket_examples():
    assert bracket(catalog_algebra(BianchiId("II", 1)), E2, E3) == vec(1, 0, 0)
    assert bracket(catalog_algebra(BianchiId("I", 1)), E1, E2) == vec(0, 0, 0)
    assert bracket(catalog_algebra(BianchiId("VI_h", 1)), E3, E1) == (H, as_scalar(-1), ZERO)


def test_catalog_rows():
    ids = catalog_ids()
    assert len(ids) == 23
    counts = {}
    for bid in ids:
        counts[bid.type] = counts.get(bid.type, 0) + 1
    assert counts == {"I": 1, "II": 3, "III": 3, "IV": 3, "V": 3, "VI_h": 3, "VII_h": 3, "VIII": 3, "IX": 1}
    assert catalog_algebra(BianchiId("VIII", 2)).bracket_lines() == ["[e1,e2]=e3", "[e2,e3]=-e1", "[e3,e1]=e2"]
    assert catalog_algebra(BianchiId("V", 3)).bracket_lines() == ["[e1,e2]=e1", "[e2,e3]=e3", "[e3,e1]=o"]
    assert catalog_algebra(BianchiId("III", 1)).bracket_lines()[1] == "[e2,e3]=e1+e2"


@pytest.mark.parametrize("bid", catalog_ids(), ids=lambda b: b.label)
def test_catalog_satisfies_jacobi(bid):
    assert check_jacobi(catalog_algebra(bid))


@pytest.mark.parametrize("bid", catalog_ids(), ids=lambda b: b.label)
def test_jacobi_against_sympy(bid):
    c = _oracle.from_sc(catalog_algebra(bid))
    e = [[int(a == b) for b in range(3)] for a in range(3)]

    def br(x, y):
        return [sum(x[i] * y[j] * c[i][j][k] for i in range(3) for j in range(3)) for k in range(3)]

    total = [
        sp.expand(a + b + d)
        for a, b, d in zip(br(br(e[0], e[1]), e[2]), br(br(e[1], e[2]), e[0]), br(br(e[2], e[0]), e[1]))
    ]
    assert total == [0, 0, 0]


def test_non_jacobi_table_is_rejected():
    sc = StructureConstants.from_brackets((1, 0, 0), (0, 1, 0), (0, 0, 0))
    assert not check_jacobi(sc)
    assert jacobiator(sc) != vec(0, 0, 0)


def test_table_with_two_e1_brackets_is_a_lie_algebra():
    # [e1,e2] = e1 and [e2,e3] = e1: the cyclic sum is [e1,e3] + [e1,e1] + 0 = 0
    sc = StructureConstants.from_brackets((1, 0, 0), (1, 0, 0), (0, 0, 0))
    assert check_jacobi(sc)


def test_antisymmetry_is_enforced():
    c = [[[ZERO] * 3 for _ in range(3)] for _ in range(3)]
    c[0][1][2] = as_scalar(1)
    with pytest.raises(LieAlgebraError):
        StructureConstants(c)


def test_subtype_validation():
    with pytest.raises(LieAlgebraError):
        BianchiId("IX", 2)
    with pytest.raises(LieAlgebraError):
        BianchiId("I", 3)
    with pytest.raises(LieAlgebraError):
        BianchiId("IV", 1, Fraction(1))
    assert BianchiId("VI", 2).type == "VI_h"


@pytest.mark.parametrize("t", ["II", "III", "IV", "V", "VI_h", "VII_h", "VIII"])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_subtypes_cycle_under_relabelling(t, k):
    # e1 -> e2 -> e3 -> e1 carries subtype (k) to subtype (k mod 3 + 1)
    src = catalog_algebra(BianchiId(t, k))
    dst = catalog_algebra(BianchiId(t, k % 3 + 1))
    assert cyclic_relabel(src).c == dst.c


def test_iii_is_vi_at_minus_one():
    for k in (1, 2, 3):
        vi = catalog_algebra(BianchiId("VI_h", k)).specialize(-1)
        assert vi.c == catalog_algebra(BianchiId("III", k)).c


def test_json_round_trip():
    sc = catalog_algebra(BianchiId("VII_h", 2))
    assert StructureConstants.from_json(sc.to_json()).c == sc.c


@pytest.mark.parametrize(
    "t,h,geo",
    [
        ("I", None, "E3"),
        ("II", None, "Nil"),
        ("III", None, "H2xR"),
        ("IV", None, None),
        ("V", None, "H3"),
        ("VI_h", 0, "Solv"),
        ("VI_h", -1, "H2xR"),
        ("VI_h", Fraction(-1, 3), None),
        ("VII_h", 0, "E3"),
        ("VII_h", 2, None),
        ("VIII", None, "SL2R~"),
        ("IX", None, "S3"),
    ],
)
def test_thurston_lookup(t, h, geo):
    assert thurston_geometry(t, h) == geo
