"""Seeded random instances: formulas, proofs with cuts, and LL transformer inputs.

Shared by the test suite and the experiment scripts so both exercise the same
distributions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .calculus import Derivation, PSequent, make
from .embeddings import make_lj, make_lk
from .formula import And, Formula, Imp, Or, PPolicy, p_member, parse_formula
from .linear import (LL_ZERO, Atom, LLDerivation, LLSequent, OfCourse, Plus, Tensor, WhyNot,
                     bang_right_t, contract_ll, ll_ax, make_ll, quest_left_t, t_translate,
                     weaken_ll)
from .oracle import LJSearch, MLPSearch, SearchConfig, lj_prove_bounded, lk_decide, prove_bounded

CLASSICAL_ATOMS = tuple(parse_formula(x) for x in ("x_c", "y_c", "bot"))
INTUITIONISTIC_ATOMS = tuple(parse_formula(x) for x in ("p", "q", "0"))
MIXED_ATOMS = tuple(parse_formula(x) for x in ("p", "q", "x_c", "y_c", "bot", "0"))


def random_formula(rng: random.Random, atoms, size: int, leaf_bias: float = 0.3) -> Formula:
    """A formula with at most ``size`` leaves."""
    if size <= 1 or rng.random() < leaf_bias:
        return rng.choice(atoms)
    split = rng.randint(1, size - 1)
    conn = rng.choice((And, Or, Imp))
    return conn(random_formula(rng, atoms, split, leaf_bias),
                random_formula(rng, atoms, size - split, leaf_bias))


# ---------------------------------------------------------------- LK / LJ proofs


def random_lk_proofs(rng: random.Random, count: int, cut_rate: float = 0.3) -> list:
    """Valid LK derivations over classical atoms; roughly ``cut_rate`` end in a cut."""
    out = []
    while len(out) < count:
        goal = random_formula(rng, CLASSICAL_ATOMS, 4)
        ante = [random_formula(rng, CLASSICAL_ATOMS, 2) for _ in range(rng.randint(0, 1))]
        if rng.random() < cut_rate:
            mid = random_formula(rng, CLASSICAL_ATOMS, 3)
            left, right = lk_decide(ante, [mid]), lk_decide([mid], [goal])
            if left is not None and right is not None:
                out.append(make_lk("lk.cut", [left, right], mid))
            continue
        d = lk_decide(ante, [goal])
        if d is not None:
            out.append(d)
    return out


def random_lj_proofs(rng: random.Random, count: int, cut_rate: float = 0.3,
                     depth: int = 8) -> list:
    """Valid LJ derivations over p, q, 0; roughly ``cut_rate`` end in a cut."""
    search, cfg, out = LJSearch(), SearchConfig(depth=depth), []
    while len(out) < count:
        goal = random_formula(rng, INTUITIONISTIC_ATOMS, 4)
        ante = [random_formula(rng, INTUITIONISTIC_ATOMS, 2) for _ in range(rng.randint(0, 1))]
        if rng.random() < cut_rate:
            mid = random_formula(rng, INTUITIONISTIC_ATOMS, 3)
            left = lj_prove_bounded(ante, mid, cfg, search)
            right = lj_prove_bounded([mid], goal, cfg, search)
            if left is not None and right is not None:
                out.append(make_lj("lj.cut", [left, right], mid))
            continue
        d = lj_prove_bounded(ante, goal, cfg, search)
        if d is not None:
            out.append(d)
    return out


# ---------------------------------------------------------------- ML_P proofs with cuts


@dataclass
class CutGenerator:
    """Builds cut1/cut2 instances from bounded-search premises, optionally nested."""

    policy: PPolicy
    rng: random.Random
    depth: int = 7
    search: MLPSearch = field(init=False)

    def __post_init__(self):
        self.search = MLPSearch(self.policy)

    def _proof(self, ante, body, stoup) -> Optional[Derivation]:
        body = tuple(f for f in body if p_member(self.policy, f))
        return prove_bounded(PSequent(tuple(ante), body, stoup), self.policy,
                             SearchConfig(depth=self.depth), self.search)

    def _small(self, size):
        return random_formula(self.rng, MIXED_ATOMS, size, leaf_bias=0.25)

    def cut_on(self, a: Formula, left: Optional[Derivation] = None) -> Optional[Derivation]:
        ante = [self._small(2) for _ in range(self.rng.randint(0, 2))]
        ante2 = [self._small(2) for _ in range(self.rng.randint(0, 2))]
        body = [self._small(2) for _ in range(self.rng.randint(0, 1))]
        other = self._small(3)
        if self.rng.random() < 0.5 or not p_member(self.policy, a):
            left = left or self._proof(ante, body, a)
            right = (self._proof(ante2 + [a], body, other)
                     or self._proof(ante2 + [a], body + [other], None))
            if left is None or right is None or left.conclusion.stoup != a:
                return None
            return make("cut1", [left, right], a, self.policy)
        left = left or self._proof(ante, body + [a], self.rng.choice([None, other]))
        right = self._proof(ante2 + [a], body + [other], None)
        if left is None or right is None or a not in left.conclusion.body:
            return None
        return make("cut2", [left, right], a, self.policy)

    def instance(self, nest_rate: float = 0.5) -> Derivation:
        while True:
            d = self.cut_on(self._small(4))
            if d is None:
                continue
            if d.conclusion.stoup is not None and self.rng.random() < nest_rate:
                outer = self.cut_on(d.conclusion.stoup, left=d)
                if outer is not None:
                    return outer
            return d


# ---------------------------------------------------------------- LL transformer inputs


def random_bang_like(rng: random.Random, depth: int = 3):
    """A !-like LL formula: 0, !X, or a tensor/plus of !-like formulas."""
    roll = rng.random()
    if depth <= 0 or roll < 0.35:
        return OfCourse(Atom(rng.choice("pqr")))
    if roll < 0.45:
        return LL_ZERO
    conn = Tensor if roll < 0.75 else Plus
    return conn(random_bang_like(rng, depth - 1), random_bang_like(rng, depth - 1))


def random_t_image(rng: random.Random, policy: PPolicy):
    """Either t(A) for a random formula or a random nested !-like formula."""
    if rng.random() < 0.5:
        return t_translate(random_formula(rng, MIXED_ATOMS, 4), policy)
    return random_bang_like(rng)


@dataclass(frozen=True)
class TransformerCase:
    name: str
    input: LLDerivation
    apply: Callable[[], LLDerivation]
    expected: LLSequent
    formula: object  # the !-like formula being contracted, weakened or promoted


def _context(rng, policy, n_max=2) -> list:
    return [random_t_image(rng, policy) for _ in range(rng.randint(0, n_max))]


def _weakened(d: LLDerivation, fs) -> LLDerivation:
    for f in fs:
        d = weaken_ll(d, f)
    return d


def _base(rng, policy) -> LLDerivation:
    """A small valid derivation with a !-like left side and ?-prefixed right side."""
    x = random_t_image(rng, policy)
    return make_ll("quest_r", [ll_ax(x)], WhyNot(x))


def transformer_case(kind: str, rng: random.Random, policy: PPolicy) -> TransformerCase:
    """One random instance of the contraction, weakening, ?-left or !-right transformer."""
    a = random_t_image(rng, policy)
    if kind == "contract":
        d = _weakened(_weakened(_base(rng, policy), _context(rng, policy)), [a, a])
        s = d.conclusion
        left = list(s.left)
        left.remove(a)
        expected = LLSequent(tuple(left), s.right)
        return TransformerCase(kind, d, lambda: contract_ll(d, a), expected, a)
    if kind == "weaken":
        d = _weakened(_base(rng, policy), _context(rng, policy))
        s = d.conclusion
        expected = LLSequent(s.left + (a,), s.right)
        return TransformerCase(kind, d, lambda: weaken_ll(d, a), expected, a)
    if kind == "quest_left":
        # a |- ?a, then a !-like context on the left
        d = _weakened(make_ll("quest_r", [ll_ax(a)], WhyNot(a)), _context(rng, policy))
        s = d.conclusion
        left = list(s.left)
        left.remove(a)
        expected = LLSequent(tuple(left) + (WhyNot(a),), s.right)
        return TransformerCase(kind, d, lambda: quest_left_t(d, a), expected, a)
    if kind == "bang_right":
        # Γ |- a with Γ !-like: start from a |- a and weaken in more context
        d = _weakened(ll_ax(a), _context(rng, policy))
        if rng.random() < 0.5:
            extra = WhyNot(random_t_image(rng, policy))
            d = make_ll("quest_w", [d], extra)
        s = d.conclusion
        right = list(s.right)
        right.remove(a)
        expected = LLSequent(s.left, tuple(right) + (OfCourse(a),))
        return TransformerCase(kind, d, lambda: bang_right_t(d, a), expected, a)
    raise ValueError(f"unknown transformer {kind!r}")


TRANSFORMERS = ("contract", "weaken", "quest_left", "bang_right")
