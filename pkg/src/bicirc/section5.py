"""The three finite checks inside A5 / S5 that close the twice-odd argument.

L is A5 or S5 on points 0..4 and H is the normalizer in L of <(0,1,2)>
(points are shifted down by one from the 1-indexed cycles used in print).
All checks run over the 24 five-cycles of S5.  Every 5-cycle is even, so
the same list serves for A5.

* case 1: does ``|H| = 3|H ∩ H^σ| = |H<σ> ∩ HσH|`` hold?
* case 2 inverse: are there ``λ1, λ2 in H1 = H ∩ A5`` with
  ``σ^-1 = (3,4) λ1 σ (3,4) λ2``?
* case 2 equalities: ``|H| = 6|H ∩ H1^σ|`` and
  ``|H<σ> ∩ H1σH| + |H<σ> ∩ (3,4)H1σH| = 2|H|``.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from itertools import permutations

from .perm import (
    Group,
    Perm,
    alternating_group,
    conjugate_group,
    cyclic_subgroup,
    normalizer,
    product_set,
    subgroup,
    symmetric_group,
)

DEGREE = 5
TRANSPOSITION_45 = Perm.parse("(4,5)", DEGREE)
THREE_CYCLE = Perm.parse("(1,2,3)", DEGREE)


def five_cycles() -> list[Perm]:
    """The 24 five-cycles ``(0 a b c d)`` in lexicographic order of (a, b, c, d)."""
    return [Perm.from_cycles([(0,) + rest], DEGREE) for rest in permutations(range(1, 5))]


@dataclass(frozen=True)
class Section5Context:
    L: Group
    H: Group
    H1: Group | None

    @classmethod
    def build(cls, variant: str) -> Section5Context:
        if variant == "A5":
            L = alternating_group(DEGREE)
        elif variant == "S5":
            L = symmetric_group(DEGREE)
        else:
            raise ValueError(f"variant must be 'A5' or 'S5', not {variant!r}")
        H = normalizer(L, Group([THREE_CYCLE], DEGREE))
        H1 = None
        if variant == "S5":
            H1 = subgroup((h for h in H.elements if h.sign() == 1), DEGREE)
        return cls(L, H, H1)

    @property
    def variant(self) -> str:
        return "S5" if self.L.order == 120 else "A5"


def _require_five_cycle(sigma: Perm) -> None:
    if sigma.cycle_type() != (5,):
        raise ValueError(f"{sigma!r} is not a 5-cycle")


@dataclass(frozen=True)
class Case1Result:
    order_H: int
    meet: int            # |H ∩ H^σ|
    product_meet: int    # |H<σ> ∩ HσH|

    @property
    def holds(self) -> bool:
        return self.order_H == 3 * self.meet == self.product_meet


def case1_condition(ctx: Section5Context, sigma: Perm) -> Case1Result:
    _require_five_cycle(sigma)
    H = ctx.H.elements
    HsH = product_set(H, [sigma], H)
    return Case1Result(
        order_H=len(H),
        meet=len(H & conjugate_group(ctx.H, sigma).elements),
        product_meet=len(product_set(H, cyclic_subgroup(sigma)) & HsH),
    )


def case2_inverse_in_double_coset(ctx: Section5Context, sigma: Perm) -> tuple[Perm, Perm] | None:
    """First ``(λ1, λ2)`` in H1 x H1 with ``σ^-1 = t λ1 σ t λ2``, t = (3,4)."""
    _require_five_cycle(sigma)
    t = TRANSPOSITION_45
    target = sigma.inverse()
    for l1 in ctx.H1.sorted_elements():
        left = t * l1 * sigma * t
        for l2 in ctx.H1.sorted_elements():
            if left * l2 == target:
                return l1, l2
    return None


@dataclass(frozen=True)
class Case2Result:
    order_H: int
    meet_H1: int         # |H ∩ H1^σ|
    part_even: int       # |H<σ> ∩ H1σH|
    part_odd: int        # |H<σ> ∩ (3,4)H1σH|

    @property
    def eq1(self) -> bool:
        return self.order_H == 6 * self.meet_H1

    @property
    def eq2(self) -> bool:
        return self.part_even + self.part_odd == 2 * self.order_H


def case2_equalities(ctx: Section5Context, sigma: Perm) -> Case2Result:
    _require_five_cycle(sigma)
    H, H1 = ctx.H.elements, ctx.H1.elements
    t = TRANSPOSITION_45
    H_sig = product_set(H, cyclic_subgroup(sigma))
    return Case2Result(
        order_H=len(H),
        meet_H1=len(H & conjugate_group(ctx.H1, sigma).elements),
        part_even=len(H_sig & product_set(H1, [sigma], H)),
        part_odd=len(H_sig & product_set([t], H1, [sigma], H)),
    )


def run_section5(H_override: dict[str, Group] | None = None) -> dict:
    """Run all checks; ``H_override`` swaps in a different H per variant."""
    contexts = {}
    for variant in ("A5", "S5"):
        ctx = Section5Context.build(variant)
        if H_override and variant in H_override:
            H = H_override[variant]
            H1 = subgroup((h for h in H.elements if h.sign() == 1), DEGREE)
            ctx = Section5Context(ctx.L, H, H1 if variant == "S5" else None)
        contexts[variant] = ctx
    sigmas = five_cycles()
    rows = []
    claims = []

    case1_ok = True
    for variant, ctx in contexts.items():
        for s in sigmas:
            res = case1_condition(ctx, s)
            case1_ok &= not res.holds
            rows.append({"claim": "case1", "variant": variant, "sigma": s.cycle_str(True),
                         "cardinalities": asdict(res), "pass": not res.holds})
    claims.append({"claim": "case1: no 5-cycle satisfies |H| = 3|H∩H^σ| = |H<σ>∩HσH|",
                   "pass": case1_ok})

    ctx = contexts["S5"]
    inv_ok = True
    for s in sigmas:
        w = case2_inverse_in_double_coset(ctx, s)
        inv_ok &= w is not None
        rows.append({"claim": "case2_inverse", "variant": "S5", "sigma": s.cycle_str(True),
                     "witness": None if w is None else [p.cycle_str(True) for p in w],
                     "pass": w is not None})
    claims.append({"claim": "case2: σ^-1 = (4,5)λ1 σ (4,5)λ2 solvable in H1 for every σ",
                   "pass": inv_ok})

    eq_ok = True
    for s in sigmas:
        res = case2_equalities(ctx, s)
        both = res.eq1 and res.eq2
        eq_ok &= not both
        rows.append({"claim": "case2_equalities", "variant": "S5", "sigma": s.cycle_str(True),
                     "cardinalities": asdict(res), "eq1": res.eq1, "eq2": res.eq2,
                     "pass": not both})
    claims.append({"claim": "case2: no 5-cycle satisfies both equalities", "pass": eq_ok})

    return {
        "H_order": {v: c.H.order for v, c in contexts.items()},
        "claims": claims,
        "rows": rows,
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=1, sort_keys=True)
