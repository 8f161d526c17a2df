import json

import pytest

from bicirc.perm import Group, Perm, product_set, cyclic_subgroup
from bicirc.section5 import (
    DEGREE, Section5Context, case1_condition, case2_equalities,
    case2_inverse_in_double_coset, five_cycles, report_json, run_section5,
)


def test_five_cycles():
    cs = five_cycles()
    assert len(cs) == 24 and len(set(cs)) == 24
    assert all(c.cycle_type() == (5,) for c in cs)
    assert cs[0] == Perm.from_cycles([(0, 1, 2, 3, 4)], 5)


def test_contexts():
    a5, s5 = Section5Context.build("A5"), Section5Context.build("S5")
    assert a5.H.order == 6 and s5.H.order == 12 and s5.H1.order == 6
    assert s5.H == Group([Perm.parse("(1,2,3)", 5), Perm.parse("(1,2)", 5),
                          Perm.parse("(4,5)", 5)], 5)
    assert a5.H == Group([Perm.parse("(1,2,3)", 5), Perm.parse("(1,2)(4,5)", 5)], 5)
    with pytest.raises(ValueError):
        Section5Context.build("A6")


@pytest.mark.parametrize("variant", ["A5", "S5"])
def test_case1_never_holds(variant):
    ctx = Section5Context.build(variant)
    assert not any(case1_condition(ctx, s).holds for s in five_cycles())


def test_case2_inverse_always_solvable():
    ctx = Section5Context.build("S5")
    t = Perm.parse("(4,5)", 5)
    for s in five_cycles():
        w = case2_inverse_in_double_coset(ctx, s)
        assert w is not None
        l1, l2 = w
        assert l1 in ctx.H1.elements and l2 in ctx.H1.elements
        assert s.inverse() == t * l1 * s * t * l2


def test_case2_equalities_never_both():
    ctx = Section5Context.build("S5")
    for s in five_cycles():
        r = case2_equalities(ctx, s)
        assert not (r.eq1 and r.eq2)


def test_product_set_size():
    # H ∩ <σ> trivial so |H<σ>| = 12 * 5
    ctx = Section5Context.build("S5")
    s = five_cycles()[0]
    assert len(product_set(ctx.H.elements, cyclic_subgroup(s))) == 60


def test_reject_non_five_cycle():
    ctx = Section5Context.build("S5")
    with pytest.raises(ValueError):
        case1_condition(ctx, Perm.parse("(1,2,3)", 5))


def test_full_run():
    rep = run_section5()
    assert [c["pass"] for c in rep["claims"]] == [True, True, True]
    assert rep["H_order"] == {"A5": 6, "S5": 12}
    assert len(rep["rows"]) == 24 * 4


def test_tamper_flips_outcome():
    small = Group([Perm.parse("(1,2,3)", 5)], DEGREE)
    rep = run_section5({"A5": small, "S5": small})
    assert not all(c["pass"] for c in rep["claims"])


def test_deterministic():
    assert report_json(run_section5()) == report_json(run_section5())
    json.loads(report_json(run_section5()))


@pytest.mark.parametrize("variant", ["A5", "S5"])
def test_conjugation_equivariance(variant):
    ctx = Section5Context.build(variant)
    for s in five_cycles()[:6]:
        base = case1_condition(ctx, s)
        for h in ctx.H.elements:
            assert case1_condition(ctx, s.conj(h)) == base
    if variant == "S5":
        for s in five_cycles()[:6]:
            base = case2_equalities(ctx, s)
            for h in ctx.H1.elements:
                # (4,5) normalises H1, so the counts are stable under H1-conjugation
                assert case2_equalities(ctx, s.conj(h)) == base
