"""Catalog of ZX rewrite rules, checked numerically.

Each rule pairs a parameter sampler with builders for its two sides.  A rule
holds when, for every sampled parameter point, both sides have the same
boundary and their matrices agree up to a non-zero scalar.  Every rule also
carries a deliberately broken *mutant* that the harness must reject.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Any, Callable

import numpy as np

from .diagram import (
    Compose,
    Diagram,
    Stack,
    Swap,
    XSpider,
    ZSpider,
    color_swap,
    n_wire,
    stack_all,
    wire,
)
from .gates import h_stack, swap_via_3_cnots
from .generate import random_diagram, random_phase, random_spider
from .propcheck import DimensionMismatch, PropResult, diagrams_proportional
from .semantics import DEFAULT_MAX_WIRES

Params = dict[str, Any]


@dataclass(frozen=True)
class RewriteRule:
    name: str
    params: str
    sample: Callable[[np.random.Generator], Params]
    lhs: Callable[[Params], Diagram]
    rhs: Callable[[Params], Diagram]
    mutant_rhs: Callable[[Params], Diagram] | None = field(default=None, compare=False)

    def mutant(self) -> RewriteRule:
        if self.mutant_rhs is None:
            raise ValueError(f"rule {self.name} has no registered mutant")
        return replace(self, name=f"{self.name}~mutant", rhs=self.mutant_rhs, mutant_rhs=None)

    def color_swapped(self) -> RewriteRule:
        lhs, rhs, mut = self.lhs, self.rhs, self.mutant_rhs
        return replace(
            self,
            name=f"{self.name}~colorswap",
            lhs=lambda p: color_swap(lhs(p)),
            rhs=lambda p: color_swap(rhs(p)),
            mutant_rhs=None if mut is None else (lambda p: color_swap(mut(p))),
        )


@dataclass(frozen=True)
class RuleReport:
    name: str
    passed: bool
    samples: int
    counterexample: Params | None = None
    result: PropResult | None = None

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.name} ({self.samples} samples)"
        return f"FAIL {self.name} params={format_params(self.counterexample or {})}"


def format_params(params: Params) -> str:
    def fmt(v: Any) -> str:
        if isinstance(v, Diagram):
            return str(v)
        if isinstance(v, float):
            return f"{v:.6g}"
        return repr(v)

    return "{" + ", ".join(f"{k}={fmt(v)}" for k, v in params.items()) + "}"


def check_rule(
    rule: RewriteRule,
    samples: int = 100,
    tol: float = 1e-9,
    seed: int = 42,
    max_wires: int = DEFAULT_MAX_WIRES,
) -> RuleReport:
    """Evaluate both sides of ``rule`` on ``samples`` seeded parameter points.

    Stops at the first point where the sides differ by more than a scalar.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        params = rule.sample(rng)
        result = diagrams_proportional(rule.lhs(params), rule.rhs(params), tol, max_wires)
        if not result:
            return RuleReport(rule.name, False, samples, params, result)
    return RuleReport(rule.name, True, samples)


# ---------------------------------------------------------------------------
# helpers


def z_pi_stack(n: int) -> Diagram:
    return stack_all([ZSpider(1, 1, math.pi) for _ in range(n)])


def _arity(rng: np.random.Generator, hi: int) -> int:
    return int(rng.integers(0, hi + 1))


def _no_params(rng: np.random.Generator) -> Params:
    return {}


def bi_hadamard(d: Diagram) -> Diagram:
    return Compose(h_stack(d.n_in), Compose(d, h_stack(d.n_out)))


# ---------------------------------------------------------------------------
# the catalog


def _distribute_sample(rng: np.random.Generator) -> Params:
    i1, m1, o1, i2, m2, o2 = (_arity(rng, 2) for _ in range(6))
    return {
        "a": random_spider(rng, i1, m1),
        "b": random_spider(rng, m1, o1),
        "c": random_spider(rng, i2, m2),
        "d": random_spider(rng, m2, o2),
    }


stack_compose_distribute = RewriteRule(
    name="stack_compose_distribute",
    params="random spiders a:(i1,m1) b:(m1,o1) c:(i2,m2) d:(m2,o2), arities <= 2",
    sample=_distribute_sample,
    lhs=lambda p: Stack(Compose(p["a"], p["b"]), Compose(p["c"], p["d"])),
    rhs=lambda p: Compose(Stack(p["a"], p["c"]), Stack(p["b"], p["d"])),
    mutant_rhs=lambda p: Compose(Stack(color_swap(p["a"]), p["c"]), Stack(p["b"], p["d"])),
)


def _spider_sample(hi: int) -> Callable[[np.random.Generator], Params]:
    def sample(rng: np.random.Generator) -> Params:
        return {"i": _arity(rng, hi), "o": _arity(rng, hi), "alpha": random_phase(rng)}

    return sample


bihadamard_color_change = RewriteRule(
    name="bihadamard_color_change",
    params="i, o <= 4, alpha",
    sample=_spider_sample(4),
    lhs=lambda p: bi_hadamard(ZSpider(p["i"], p["o"], p["alpha"])),
    rhs=lambda p: XSpider(p["i"], p["o"], p["alpha"]),
    mutant_rhs=lambda p: ZSpider(p["i"], p["o"], p["alpha"]),
)


def _diagram_sample(rng: np.random.Generator) -> Params:
    return {"zx": random_diagram(rng, _arity(rng, 4), _arity(rng, 4), depth=4, max_arity=3)}


color_swap_theorem = RewriteRule(
    name="color_swap_theorem",
    params="random diagram, boundary <= 4, depth <= 4, arities <= 3",
    sample=_diagram_sample,
    lhs=lambda p: bi_hadamard(p["zx"]),
    rhs=lambda p: color_swap(p["zx"]),
    mutant_rhs=lambda p: p["zx"],
)


def _bialgebra_lhs(p: Params) -> Diagram:
    copies = Stack(ZSpider(1, 2, 0), ZSpider(1, 2, 0))
    cross = stack_all([wire(), Swap(), wire()])
    merges = Stack(XSpider(2, 1, 0), XSpider(2, 1, 0))
    return Compose(copies, Compose(cross, merges))


bialgebra = RewriteRule(
    name="bialgebra",
    params="none",
    sample=_no_params,
    lhs=_bialgebra_lhs,
    rhs=lambda p: Compose(XSpider(2, 1, 0), ZSpider(1, 2, 0)),
    mutant_rhs=lambda p: Compose(XSpider(2, 1, 0), ZSpider(1, 2, math.pi)),
)

hopf = RewriteRule(
    name="hopf",
    params="none",
    sample=_no_params,
    lhs=lambda p: Compose(ZSpider(1, 2, 0), XSpider(2, 1, 0)),
    rhs=lambda p: Compose(ZSpider(1, 0, 0), XSpider(0, 1, 0)),
    mutant_rhs=lambda p: Compose(ZSpider(1, 0, math.pi), XSpider(0, 1, 0)),
)

bi_pi = RewriteRule(
    name="bi_pi",
    params="i, o <= 3, alpha",
    sample=_spider_sample(3),
    lhs=lambda p: Compose(
        z_pi_stack(p["i"]), Compose(XSpider(p["i"], p["o"], -p["alpha"]), z_pi_stack(p["o"]))
    ),
    rhs=lambda p: XSpider(p["i"], p["o"], p["alpha"]),
    mutant_rhs=lambda p: XSpider(p["i"], p["o"], p["alpha"] + math.pi / 2),
)


def _pi_copy_sample(rng: np.random.Generator) -> Params:
    return {"o": _arity(rng, 3)}


pi_copy = RewriteRule(
    name="pi_copy",
    params="o <= 3",
    sample=_pi_copy_sample,
    lhs=lambda p: Compose(ZSpider(1, 1, math.pi), XSpider(1, p["o"], 0)),
    rhs=lambda p: Compose(XSpider(1, p["o"], 0), z_pi_stack(p["o"])),
    mutant_rhs=lambda p: XSpider(1, p["o"], 0),
)


def _fusion_sample(rng: np.random.Generator) -> Params:
    return {
        "i": _arity(rng, 3),
        "o": _arity(rng, 3),
        "alpha": random_phase(rng),
        "beta": random_phase(rng),
    }


fusion_1_1 = RewriteRule(
    name="fusion_1_1",
    params="i, o <= 3, alpha, beta",
    sample=_fusion_sample,
    lhs=lambda p: Compose(ZSpider(p["i"], 1, p["alpha"]), ZSpider(1, p["o"], p["beta"])),
    rhs=lambda p: ZSpider(p["i"], p["o"], p["alpha"] + p["beta"]),
    mutant_rhs=lambda p: ZSpider(p["i"], p["o"], p["alpha"] + p["beta"] + 0.1),
)


def phase_gadget(alpha: float, leaf_color: type = ZSpider) -> Diagram:
    """One-legged phase spider hung off an X node."""
    return Compose(XSpider(1, 1, 0), leaf_color(1, 0, alpha))


phase_gadget_split = RewriteRule(
    name="phase_gadget_split",
    params="i, o <= 3, alpha",
    sample=_spider_sample(3),
    lhs=lambda p: ZSpider(p["i"], p["o"], p["alpha"]),
    rhs=lambda p: Compose(
        ZSpider(p["i"], p["o"] + 1, 0), Stack(n_wire(p["o"]), phase_gadget(p["alpha"]))
    ),
    mutant_rhs=lambda p: Compose(
        ZSpider(p["i"], p["o"] + 1, 0), Stack(n_wire(p["o"]), phase_gadget(p["alpha"], XSpider))
    ),
)

swap_via_cnots = RewriteRule(
    name="swap_via_3_cnots",
    params="none",
    sample=_no_params,
    lhs=lambda p: swap_via_3_cnots(),
    rhs=lambda p: Swap(),
    mutant_rhs=lambda p: n_wire(2),
)


CATALOG: dict[str, RewriteRule] = {
    r.name: r
    for r in [
        stack_compose_distribute,
        bihadamard_color_change,
        color_swap_theorem,
        bialgebra,
        hopf,
        bi_pi,
        pi_copy,
        fusion_1_1,
        phase_gadget_split,
        swap_via_cnots,
    ]
}


def check_catalog(
    samples: int = 100, tol: float = 1e-9, seed: int = 42, names: list[str] | None = None
) -> list[RuleReport]:
    chosen = sorted(names) if names else sorted(CATALOG)
    unknown = [n for n in chosen if n not in CATALOG]
    if unknown:
        raise KeyError(f"unknown rule(s): {', '.join(unknown)}")
    return [check_rule(CATALOG[n], samples, tol, seed) for n in chosen]


__all__ = [
    "CATALOG",
    "DimensionMismatch",
    "RewriteRule",
    "RuleReport",
    "check_catalog",
    "check_rule",
    "z_pi_stack",
]
