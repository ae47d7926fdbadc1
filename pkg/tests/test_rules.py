import math

import pytest

from zxblock.diagram import ZSpider
from zxblock.rules import CATALOG, RewriteRule, check_catalog, check_rule, fusion_1_1, hopf


def test_catalog_names():
    assert sorted(CATALOG) == sorted([
        "stack_compose_distribute", "bihadamard_color_change", "color_swap_theorem",
        "bialgebra", "hopf", "bi_pi", "pi_copy", "fusion_1_1", "phase_gadget_split",
        "swap_via_3_cnots",
    ])


def test_hopf_single_sample():
    r = check_rule(hopf, samples=1)
    assert r.passed and r.line() == "PASS hopf (1 samples)"


def test_corrupted_fusion_fails():
    broken = RewriteRule(
        "fusion_broken", "i, o, alpha, beta", fusion_1_1.sample, fusion_1_1.lhs,
        lambda p: ZSpider(p["i"], p["o"], p["alpha"] + p["beta"] + 0.5),
    )
    r = check_rule(broken, samples=10)
    assert not r.passed
    assert r.line().startswith("FAIL fusion_broken params={")
    assert set(r.counterexample) == {"i", "o", "alpha", "beta"}


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_rule_and_mutant(name):
    rule = CATALOG[name]
    assert check_rule(rule, samples=30, tol=1e-8).passed
    assert not check_rule(rule.mutant(), samples=30, tol=1e-8).passed


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_color_swapped_rule(name):
    rule = CATALOG[name].color_swapped()
    assert check_rule(rule, samples=20, tol=1e-8).passed
    assert not check_rule(rule.mutant(), samples=20, tol=1e-8).passed


def test_deterministic():
    a = [r.line() for r in check_catalog(samples=5, seed=3)]
    b = [r.line() for r in check_catalog(samples=5, seed=3)]
    assert a == b


def test_errors():
    with pytest.raises(KeyError):
        check_catalog(names=["nope"])
    with pytest.raises(ValueError):
        check_rule(hopf, samples=0)
    with pytest.raises(ValueError):
        hopf.mutant().mutant()
