"""Hand-built proof fixtures.

``rule_fixtures`` holds one small proof per rule tag, each ending in that rule,
so that deleting any formula occurrence from the root breaks it.  ``cut_corpus``
combines cut-free pieces into proofs with cuts of every degree class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .calculus import Derivation, PSequent, make, zero_node
from .formula import All, BotOnly, ClassicalVars, PPolicy, parse_formula

CVARS = ClassicalVars()
BOT_ONLY = BotOnly()
ALL = All()


@dataclass(frozen=True)
class Fixture:
    name: str
    derivation: Derivation
    policy: PPolicy


def F(text: str):
    return parse_formula(text)


class _Builder:
    """Forward construction shorthand bound to one policy."""

    def __init__(self, policy: PPolicy):
        self.policy = policy

    def __getattr__(self, rule):
        def step(*args):
            *premises, principal = args
            return make(rule, premises, F(principal) if isinstance(principal, str) else principal,
                        self.policy)

        return step

    def ax(self, a):
        return make("ax", [], F(a), self.policy)

    def der_ax(self, a):
        return self.der(self.ax(a), a)


def rule_fixtures() -> list:
    c = _Builder(CVARS)
    b = _Builder(BOT_ONLY)
    out = {
        "ax": (c.ax("p"), CVARS),
        "zero": (zero_node(PSequent((F("0"),))), CVARS),
        "bot": (make("bot", [], F("bot"), CVARS), CVARS),
        "der": (c.der_ax("x_c"), CVARS),
        "c_l": (c.c_l(c.w_l(c.ax("p"), "p"), "p"), CVARS),
        "c_r": (c.c_r(c.w_r(c.der_ax("x_c"), "x_c"), "x_c"), CVARS),
        "w_l": (c.w_l(c.ax("p"), "q"), CVARS),
        "w_r": (c.w_r(c.ax("p"), "x_c"), CVARS),
        "cut1": (c.cut1(c.ax("p"), c.ax("p"), "p"), CVARS),
        "cut2": (c.cut2(c.der_ax("x_c"), c.der_ax("x_c"), "x_c"), CVARS),
        "and1_l": (c.and1_l(c.w_l(c.ax("p"), "q"), "p & q"), CVARS),
        "and2_l": (c.and2_l(c.w_l(c.der_ax("x_c"), "y_c"), "x_c & y_c"), CVARS),
        "and1_r": (c.and1_r(c.ax("p"), c.ax("q"), "p & q"), CVARS),
        "and2_r": (c.and2_r(c.der_ax("x_c"), c.der_ax("y_c"), "x_c & y_c"), CVARS),
        "and3_r": (c.and3_r(c.ax("p"), c.der_ax("y_c"), "p & y_c"), CVARS),
        "and4_r": (c.and4_r(c.der_ax("x_c"), c.ax("q"), "x_c & q"), CVARS),
        "or1_l": (c.or1_l(c.or2_r(c.ax("p"), "q | p"), c.or1_r(c.ax("q"), "q | p"), "p | q"), CVARS),
        "or2_l": (c.or2_l(c.w_r(c.der_ax("x_c"), "y_c"), c.w_r(c.der_ax("y_c"), "x_c"), "x_c | y_c"),
                  CVARS),
        "or1_r": (c.or1_r(c.ax("p"), "p | q"), CVARS),
        "or2_r": (c.or2_r(c.ax("q"), "p | q"), CVARS),
        "or3_r": (c.or3_r(c.der_ax("x_c"), "x_c | q"), CVARS),
        "or4_r": (c.or4_r(c.der_ax("y_c"), "p | y_c"), CVARS),
        "imp1_l": (c.imp1_l(c.ax("q"), c.ax("p"), "p -> q"), CVARS),
        "imp2_l": (c.imp2_l(c.der_ax("y_c"), c.ax("x_c"), "x_c -> y_c"), CVARS),
        "imp3_l": (c.imp3_l(c.der_ax("y_c"), c.w_r(c.ax("p"), "x_c"), "x_c -> y_c"), CVARS),
        "imp1_r": (c.imp1_r(c.ax("p"), "p -> p"), CVARS),
        "imp2_r": (c.imp2_r(c.der_ax("x_c"), "x_c -> x_c"), CVARS),
        # the same shapes under the smallest policy
        "bot/der": (b.der_ax("bot"), BOT_ONLY),
        "bot/imp2_r": (b.imp2_r(b.w_l(b.der_ax("bot"), "p"), "p -> bot"), BOT_ONLY),
        "bot/imp3_l": (b.imp3_l(b.der_ax("bot"), b.w_r(b.ax("p"), "bot"), "bot -> bot"), BOT_ONLY),
    }
    return [Fixture(name, d, pol) for name, (d, pol) in out.items()]


def imp3_fixture() -> Fixture:
    """An imp3_l step with nonempty contexts on both sides and an occupied stoup."""
    c = _Builder(CVARS)
    # left: q, y_c |- y_c ;   right: r, x_c |- x_c ; r
    left = c.w_l(c.der_ax("y_c"), "q")
    right = c.w_r(c.w_l(c.ax("r"), "x_c"), "x_c")
    return Fixture("imp3_l/contexts", c.imp3_l(left, right, "x_c -> y_c"), CVARS)


def _k0_cuts(c: _Builder) -> dict:
    """Cuts whose formula is principal on both sides."""
    out = {}
    # implication, intuitionistic
    left = c.imp1_r(c.w_l(c.ax("q"), "p"), "p -> q")
    right = c.imp1_l(c.ax("q"), c.ax("p"), "p -> q")
    out["k0/imp1"] = c.cut1(left, right, "p -> q")
    # implication, classical consequent
    left = c.imp2_r(c.w_l(c.der_ax("y_c"), "x_c"), "x_c -> y_c")
    right = c.imp2_l(c.der_ax("y_c"), c.ax("x_c"), "x_c -> y_c")
    out["k0/imp2"] = c.cut1(left, right, "x_c -> y_c")
    # implication, classical antecedent
    left = c.imp1_r(c.w_l(c.ax("y_c"), "x_c"), "x_c -> y_c")
    right = c.imp3_l(c.der_ax("y_c"), c.w_r(c.ax("p"), "x_c"), "x_c -> y_c")
    out["k0/imp3"] = c.cut1(left, right, "x_c -> y_c")
    # conjunction
    left = c.and1_r(c.ax("p"), c.ax("q"), "p & q")
    right = c.and1_l(c.w_l(c.ax("q"), "p"), "p & q")
    out["k0/and1"] = c.cut1(left, right, "p & q")
    left = c.and2_r(c.der_ax("x_c"), c.der_ax("y_c"), "x_c & y_c")
    right = c.and2_l(c.w_l(c.der_ax("x_c"), "y_c"), "x_c & y_c")
    out["k0/and2"] = c.cut1(left, right, "x_c & y_c")
    left = c.and3_r(c.ax("p"), c.der_ax("y_c"), "p & y_c")
    right = c.and2_l(c.w_l(c.der_ax("y_c"), "p"), "p & y_c")
    out["k0/and3"] = c.cut1(left, right, "p & y_c")
    left = c.and4_r(c.der_ax("x_c"), c.ax("q"), "x_c & q")
    right = c.and2_l(c.w_l(c.der_ax("x_c"), "q"), "x_c & q")
    out["k0/and4"] = c.cut1(left, right, "x_c & q")
    # disjunction
    or_swap = c.or1_l(c.or2_r(c.ax("p"), "q | p"), c.or1_r(c.ax("q"), "q | p"), "p | q")
    out["k0/or1"] = c.cut1(c.or1_r(c.ax("p"), "p | q"), or_swap, "p | q")
    out["k0/or2"] = c.cut1(c.or2_r(c.ax("q"), "p | q"), or_swap, "p | q")
    or_both = c.or2_l(c.w_r(c.der_ax("x_c"), "y_c"), c.w_r(c.der_ax("y_c"), "x_c"), "x_c | y_c")
    out["k0/or3"] = c.cut1(c.or3_r(c.der_ax("x_c"), "x_c | y_c"), or_both, "x_c | y_c")
    out["k0/or4"] = c.cut1(c.or4_r(c.der_ax("y_c"), "x_c | y_c"), or_both, "x_c | y_c")
    return out


def _k1_cuts(c: _Builder) -> dict:
    """Cut formula principal on the left only."""
    out = {}
    pq = c.and1_r(c.ax("p"), c.ax("q"), "p & q")
    out["k1/ax"] = c.cut1(pq, c.ax("p & q"), "p & q")
    out["k1/w_l"] = c.cut1(pq, c.w_l(c.ax("r"), "p & q"), "p & q")
    twice = c.c_l(c.and1_r(c.ax("p & q"), c.ax("p & q"), "(p & q) & (p & q)"), "p & q")
    out["k1/c_l"] = c.cut1(pq, twice, "p & q")
    swap = c.and1_l(c.and1_r(c.ax("q"), c.ax("p"), "q & p"), "p & q")
    out["k1/and1_r"] = c.cut1(pq, c.imp1_r(c.w_l(swap, "r"), "r -> q & p"), "p & q")
    imp = c.imp1_r(c.ax("p"), "p -> p")
    use = c.imp1_l(c.ax("p"), c.ax("p"), "p -> p")
    out["k1/imp1_l-side"] = c.cut1(imp, c.or1_r(use, "p | q"), "p -> p")
    xy = c.and2_r(c.der_ax("x_c"), c.der_ax("y_c"), "x_c & y_c")
    out["k1/der"] = c.cut1(xy, c.der_ax("x_c & y_c"), "x_c & y_c")
    out["k1/w_r"] = c.cut1(xy, c.w_r(c.ax("x_c & y_c"), "z_c"), "x_c & y_c")
    out["k1/cut2-shape"] = c.cut1(c.or3_r(c.der_ax("x_c"), "x_c | q"),
                                  c.der(c.ax("x_c | q"), "x_c | q"), "x_c | q")
    return out


def _k2_cuts(c: _Builder) -> dict:
    """Left premise does not end by introducing the cut formula."""
    out = {}
    out["k2/ax-ax"] = c.cut1(c.ax("p"), c.ax("p"), "p")
    out["k2/w_l"] = c.cut1(c.w_l(c.ax("p"), "r"), c.and1_r(c.ax("p"), c.ax("q"), "p & q"), "p")
    out["k2/c_l"] = c.cut1(c.c_l(c.w_l(c.ax("p"), "p"), "p"), c.w_l(c.ax("p"), "s"), "p")
    left = c.and1_l(c.w_l(c.ax("p"), "q"), "p & q")
    out["k2/and1_l"] = c.cut1(left, c.or1_r(c.ax("p"), "p | r"), "p")
    left = c.imp1_l(c.ax("q"), c.ax("p"), "p -> q")
    right = c.and1_r(c.ax("q"), c.ax("q"), "q & q")
    out["k2/imp1_l"] = c.cut1(left, c.c_l(right, "q"), "q")
    left = c.or1_l(c.or2_r(c.ax("p"), "q | p"), c.or1_r(c.ax("q"), "q | p"), "p | q")
    right = c.or1_l(c.or2_r(c.ax("q"), "p | q"), c.or1_r(c.ax("p"), "p | q"), "q | p")
    out["k2/or1_l"] = c.cut1(left, right, "q | p")
    left = c.cut1(c.ax("p"), c.ax("p"), "p")
    out["k2/nested"] = c.cut1(left, c.imp1_r(c.w_l(c.ax("p"), "r"), "r -> p"), "p")
    left = c.imp3_l(c.der_ax("y_c"), c.w_r(c.ax("p"), "x_c"), "x_c -> y_c")
    out["k2/imp3_l"] = c.cut1(left, c.imp1_l(c.and1_r(c.ax("q"), c.ax("q"), "q & q"),
                                             c.ax("p"), "p -> q"), "p")
    # classical material in the right premise, stoup emptied below the traced formula
    left = c.w_l(c.ax("p"), "x_c")
    right = c.imp2_l(c.der_ax("y_c"), c.ax("p"), "p -> y_c")
    out["k2/imp2_l"] = c.cut1(left, right, "p")
    right = c.and2_l(c.w_l(c.der_ax("x_c"), "q"), "x_c & q")
    out["k2/and2_l-trace"] = c.cut1(c.ax("x_c & q"), right, "x_c & q")
    return out


def _k3_cuts(c: _Builder) -> dict:
    out = {}
    out["k3/der-der"] = c.cut2(c.der_ax("x_c"), c.der_ax("x_c"), "x_c")
    out["k3/w_r"] = c.cut2(c.w_r(c.ax("p"), "x_c"), c.w_r(c.der_ax("x_c"), "y_c"), "x_c")
    twice = c.c_r(c.w_r(c.der_ax("x_c"), "x_c"), "x_c")
    use = c.and2_r(c.der_ax("x_c"), c.der_ax("x_c"), "x_c & x_c")
    out["k3/c_r"] = c.cut2(twice, c.der(use, "x_c & x_c"), "x_c")
    left = c.or2_l(c.w_r(c.der_ax("x_c"), "y_c"), c.w_r(c.der_ax("y_c"), "x_c"), "x_c | y_c")
    out["k3/or2_l"] = c.cut2(left, c.w_l(c.der_ax("y_c"), "x_c"), "x_c")
    left = c.imp3_l(c.der_ax("y_c"), c.w_r(c.ax("p"), "x_c"), "x_c -> y_c")
    out["k3/stoup"] = c.cut2(left, c.der_ax("y_c"), "y_c")
    out["k3/zero"] = c.cut2(zero_node(PSequent((F("0"),), (F("x_c"),))), c.der_ax("x_c"), "x_c")
    right = c.and2_r(c.der_ax("x_c"), c.der_ax("y_c"), "x_c & y_c")
    out["k3/into-right"] = c.cut2(c.der_ax("x_c"), c.der(right, "x_c & y_c"), "x_c")
    both = c.c_l(c.der(c.and2_r(c.der_ax("x_c"), c.der_ax("x_c"), "x_c & x_c"), "x_c & x_c"), "x_c")
    out["k3/c_l-right"] = c.cut2(c.c_r(c.w_r(c.der_ax("x_c"), "x_c"), "x_c"), both, "x_c")
    return out


def cut_corpus() -> list:
    c = _Builder(CVARS)
    named = {}
    for part in (_k0_cuts, _k1_cuts, _k2_cuts, _k3_cuts):
        named.update(part(c))
    return [Fixture(name, d, CVARS) for name, d in named.items()]
