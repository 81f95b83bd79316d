"""Desk-scale decision procedures used to test the metatheory.

``prove_bounded`` searches cut-free mixed derivations, ``lj_prove_bounded`` cut-free
LJ derivations, ``lk_decide`` cut-free LK derivations and ``classical_valid``
evaluates truth tables.

Both bounded searches run over *set* contexts: antecedent (and body) formulas are
kept once and never dropped, so contraction is implicit and weakening is absorbed
into the axioms.  A found set-proof is then elaborated into an exact multiset
derivation with explicit ``c_l``/``c_r``/``w_l``/``w_r`` steps (see
:func:`mixed.calculus.fit`).  Results are memoised per search object by
(state, remaining depth); since provability within a bound is monotone in the
bound, storing the least proved depth and the greatest failed depth per state is
exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .calculus import Derivation, PSequent, fit, make, msort, zero_node
from .embeddings import LJDerivation, LJSequent, LKDerivation, LKSequent, make_lj, make_lk
from .formula import (
    BOT,
    ZERO,
    And,
    Bot,
    Formula,
    Imp,
    Or,
    PPolicy,
    Var,
    Zero,
    p_member,
    sort_key,
    vars_of,
)


@dataclass(frozen=True)
class SearchConfig:
    """Search bounds.

    ``depth`` bounds the number of rule applications on any branch.  ``mult_cap``
    caps copies of one formula in a context; the set-based searches keep a single
    copy, which is already complete, so any cap of at least 1 gives the same
    answers.
    """

    depth: int = 12
    mult_cap: int = 2

    def __post_init__(self):
        if self.depth < 1 or self.mult_cap < 1:
            raise ValueError("depth and mult_cap must be positive")


class _Search:
    """Depth-bounded memoised backward search over set states.

    Subclasses list moves as (move, premises) where each premise is an extension
    of the current state; :meth:`child` turns an extension into the next state.
    """

    def __init__(self):
        self.proved = {}
        self.failed = {}

    def prove(self, state, depth: int) -> bool:
        if depth <= 0:
            return False
        if self.proved.get(state, depth + 1) <= depth:
            return True
        if self.failed.get(state, 0) >= depth:
            return False
        for _, premises in self.moves(state):
            if all(self.prove(self.child(state, p), depth - 1) for p in premises):
                self.proved[state] = depth
                return True
        self.failed[state] = depth
        return False

    def choose(self, state):
        """First move whose premises are provable within the recorded depth."""
        d = self.proved[state]
        for move, premises in self.moves(state):
            if all(self.prove(self.child(state, p), d - 1) for p in premises):
                return move, premises
        raise AssertionError("memo table inconsistent")  # pragma: no cover


# ---------------------------------------------------------------- ML_P


# Set contexts keep the principal, so these rules lose nothing and are never
# worth backtracking over.
_INVERTIBLE = {"imp1_r", "imp2_r", "and1_l", "and2_l", "or1_l", "or2_l"}


class MLPSearch(_Search):
    """Cut-free search for one policy; reuse an instance to share the memo table.

    A state is (antecedent set, body set, stoup); a premise extension is
    (extra antecedent formulas, extra body formulas, premise stoup).
    """

    def __init__(self, policy: PPolicy):
        super().__init__()
        self.policy = policy
        self._member = {}

    def in_p(self, f) -> bool:
        r = self._member.get(f)
        if r is None:
            r = self._member[f] = p_member(self.policy, f)
        return r

    @staticmethod
    def state_of(s: PSequent):
        return frozenset(s.ante), frozenset(s.body), s.stoup

    @staticmethod
    def child(state, ext):
        G, D, _ = state
        ea, eb, stoup = ext
        return G.union(ea), D.union(eb), stoup

    def moves(self, state):
        G, D, S = state
        inP = self.in_p
        out = []
        if S is not None and S in G:
            out.append((("ax", S), []))
        if ZERO in G:
            out.append((("zero", ZERO), []))
        if BOT in G and S is None:
            out.append((("bot", BOT), []))
        if out:
            return out

        if isinstance(S, Imp):
            # der turns the stoup premise into the body one, so the body form is never worse
            A, B = S.left, S.right
            if inP(B):
                out.append((("imp2_r", S), [((A,), (B,), None)]))
            else:
                out.append((("imp1_r", S), [((A,), (), B)]))
        ands, ors, imps = [], [], []
        for f in msort(G):
            if isinstance(f, And):
                ands.append(f)
            elif isinstance(f, Or):
                ors.append(f)
            elif isinstance(f, Imp):
                imps.append(f)
        for f in ands:
            A, B = f.left, f.right
            if S is None:
                out.append((("and2_l", f), [((A, B), (), None)]))
            elif not inP(A) and not inP(B):
                out.append((("and1_l", f), [((A, B), (), S)]))
        for f in ors:
            A, B = f.left, f.right
            if S is None:
                out.append((("or2_l", f), [((A,), (), None), ((B,), (), None)]))
            elif not inP(A) and not inP(B):
                out.append((("or1_l", f), [((A,), (), S), ((B,), (), S)]))
        if isinstance(S, And):
            A, B = S.left, S.right
            out.append((("and1_r", S), [((), (), A), ((), (), B)]))
            if inP(A):
                out.append((("and4_r", S), [((), (A,), None), ((), (), B)]))
            if inP(B):
                out.append((("and3_r", S), [((), (), A), ((), (B,), None)]))
            if inP(A) and inP(B):
                out.append((("and2_r", S), [((), (A,), None), ((), (B,), None)]))
        if isinstance(S, Or):
            A, B = S.left, S.right
            out.append((("or1_r", S), [((), (), A)]))
            out.append((("or2_r", S), [((), (), B)]))
            if inP(A):
                out.append((("or3_r", S), [((), (A,), None)]))
            if inP(B):
                out.append((("or4_r", S), [((), (B,), None)]))
        for f in imps:
            A, B = f.left, f.right
            if S is None:
                out.append((("imp2_l", f), [((B,), (), None), ((), (), A)]))
            elif not inP(B):
                out.append((("imp1_l", f), [((B,), (), S), ((), (), A)]))
            if inP(A):
                out.append((("imp3_l", f), [((B,), (), None), ((), (A,), S)]))
        if S is None:
            for f in msort(D):
                out.append((("der", f), [((), (), f)]))
        # a premise identical to the goal never helps
        out = [(m, ps) for m, ps in out if all(self.child(state, p) != state for p in ps)]
        if out and out[0][0][0] in _INVERTIBLE:
            return out[:1]
        return out

    def derivation(self, state) -> Derivation:
        """Elaborate a proved state into an exact derivation of its sequent."""
        (rule, a), premises = self.choose(state)
        pol = self.policy
        G, D, S = state
        here = PSequent(tuple(G), tuple(D), S)
        if rule == "zero":
            return zero_node(here)
        if rule in ("ax", "bot"):
            return fit(make(rule, [], a, pol), here, pol)
        subs = []
        for ext in premises:
            target = PSequent(tuple(G) + ext[0], tuple(D) + ext[1], ext[2])
            subs.append(fit(self.derivation(self.child(state, ext)), target, pol))
        return fit(make(rule, subs, a, pol), here, pol)


def prove_bounded(s: PSequent, policy: PPolicy, cfg: SearchConfig = SearchConfig(),
                  search: Optional[MLPSearch] = None) -> Optional[Derivation]:
    """A cut-free derivation of ``s`` within ``cfg.depth`` search steps, or None.

    None only means nothing was found within the bound.
    """
    search = search or MLPSearch(policy)
    if search.policy != policy:
        raise ValueError("search object belongs to another policy")
    state = search.state_of(s)
    if not search.prove(state, cfg.depth):
        return None
    return fit(search.derivation(state), s, policy)


# ---------------------------------------------------------------- LJ


class LJSearch(_Search):
    """Cut-free LJ search over (antecedent set, goal) states, without commitment."""

    @staticmethod
    def child(state, ext):
        extra, goal = ext
        return state[0].union(extra), goal

    def moves(self, state):
        G, C = state
        out = []
        if C in G:
            out.append((("lj.ax", C), []))
        if ZERO in G:
            out.append((("lj.zero", ZERO), []))
        if out:
            return out
        G = msort(state[0])
        if isinstance(C, Imp):
            out.append((("lj.imp_r", C), [((C.left,), C.right)]))
        for f in G:
            if isinstance(f, And):
                out.append((("lj.and_l", f), [((f.left, f.right), C)]))
        for f in G:
            if isinstance(f, Or):
                out.append((("lj.or_l", f), [((f.left,), C), ((f.right,), C)]))
        if isinstance(C, And):
            out.append((("lj.and_r", C), [((), C.left), ((), C.right)]))
        if isinstance(C, Or):
            out.append((("lj.or_r1", C), [((), C.left)]))
            out.append((("lj.or_r2", C), [((), C.right)]))
        for f in G:
            if isinstance(f, Imp):
                out.append((("lj.imp_l", f), [((f.right,), C), ((), f.left)]))
        return [(m, ps) for m, ps in out if all(self.child(state, p) != state for p in ps)]

    def derivation(self, state) -> LJDerivation:
        (rule, a), premises = self.choose(state)
        here = LJSequent(tuple(state[0]), state[1])
        if rule == "lj.zero":
            return LJDerivation(here, rule, (), ZERO)
        if rule == "lj.ax":
            return fit_lj(make_lj(rule, [], a), here)
        subs = [fit_lj(self.derivation(self.child(state, ext)),
                       LJSequent(tuple(state[0]) + ext[0], ext[1])) for ext in premises]
        return fit_lj(make_lj(rule, subs, a), here)


def fit_lj(d: LJDerivation, target: LJSequent) -> LJDerivation:
    from collections import Counter

    if d.conclusion.goal != target.goal:
        raise ValueError("goals differ")
    have, want = Counter(d.conclusion.ante), Counter(target.ante)
    for f in sorted(set(have) | set(want), key=sort_key):
        h, w = have[f], want[f]
        if h > w and w == 0:
            raise ValueError(f"cannot erase {f}")
        for _ in range(h - w):
            d = make_lj("lj.c_l", [d], f)
        for _ in range(w - h):
            d = make_lj("lj.w_l", [d], f)
    return d


def lj_prove_bounded(ante, goal: Formula, cfg: SearchConfig = SearchConfig(),
                     search: Optional[LJSearch] = None) -> Optional[LJDerivation]:
    search = search or LJSearch()
    target = LJSequent(tuple(ante), goal)
    state = (frozenset(target.ante), goal)
    if not search.prove(state, cfg.depth):
        return None
    return fit_lj(search.derivation(state), target)


# ---------------------------------------------------------------- LK


def fit_lk(d: LKDerivation, target: LKSequent) -> LKDerivation:
    from collections import Counter

    for side, contract, weaken in (("ante", "lk.c_l", "lk.w_l"), ("succ", "lk.c_r", "lk.w_r")):
        have, want = Counter(getattr(d.conclusion, side)), Counter(getattr(target, side))
        for f in sorted(set(have) | set(want), key=sort_key):
            h, w = have[f], want[f]
            if h > w and w == 0:
                raise ValueError(f"cannot erase {f}")
            for _ in range(h - w):
                d = make_lk(contract, [d], f)
            for _ in range(w - h):
                d = make_lk(weaken, [d], f)
    return d


def lk_decide(ante, succ) -> Optional[LKDerivation]:
    """Cut-free LK derivation of ``ante |- succ`` or None if it is not valid.

    All rules are invertible over set contexts, so the first applicable rule is
    always taken; every step adds a new subformula, which bounds the search.
    """
    target = LKSequent(tuple(ante), tuple(succ))
    d = _lk(frozenset(target.ante), frozenset(target.succ))
    return None if d is None else fit_lk(d, target)


def _lk(G: frozenset, D: frozenset) -> Optional[LKDerivation]:
    here = LKSequent(msort(G), msort(D))
    for f in msort(G & D):
        return fit_lk(make_lk("lk.ax", [], f), here)
    if BOT in G:
        return fit_lk(make_lk("lk.bot", [], BOT), here)

    def sub(g=(), d=()):
        return frozenset(G | set(g)), frozenset(D | set(d))

    def done(rule, a, parts):
        subs = []
        for (g, d), (ea, es) in parts:
            p = _lk(g, d)
            if p is None:
                return None
            subs.append(fit_lk(p, LKSequent(msort(G) + ea, msort(D) + es)))
        return fit_lk(make_lk(rule, subs, a), here)

    for f in msort(G):
        A, B = getattr(f, "left", None), getattr(f, "right", None)
        if isinstance(f, And) and not {A, B} <= G:
            return done("lk.and_l", f, [(sub([A, B]), ((A, B), ()))])
        if isinstance(f, Or) and A not in G and B not in G:
            return done("lk.or_l", f, [(sub([A]), ((A,), ())), (sub([B]), ((B,), ()))])
        if isinstance(f, Imp) and B not in G and A not in D:
            return done("lk.imp_l", f, [(sub([B]), ((B,), ())), (sub([], [A]), ((), (A,)))])
    for f in msort(D):
        A, B = getattr(f, "left", None), getattr(f, "right", None)
        if isinstance(f, And) and A not in D and B not in D:
            return done("lk.and_r", f, [(sub([], [A]), ((), (A,))), (sub([], [B]), ((), (B,)))])
        if isinstance(f, Or) and not {A, B} <= D:
            return _lk_or_r(G, D, f, here)
        if isinstance(f, Imp) and not (A in G and B in D):
            return done("lk.imp_r", f, [(sub([A], [B]), ((A,), (B,)))])
    return None


def _lk_or_r(G, D, f, here):
    # or-right needs both disjuncts present: apply it twice, then contract
    A, B = f.left, f.right
    p = _lk(G, D | {A, B})
    if p is None:
        return None
    base = LKSequent(msort(G), msort(D) + (A, B))
    p = fit_lk(p, base)
    p = make_lk("lk.or_r1", [p], f)
    p = make_lk("lk.or_r2", [p], f)
    return fit_lk(p, here)


# ---------------------------------------------------------------- truth tables


def classical_valid(f: Formula) -> bool:
    atoms = vars_of(f)
    bad = [a for a in atoms if isinstance(a, Zero) or (isinstance(a, Var) and not a.classical)]
    if bad:
        raise ValueError(f"truth tables need classical variables and bot only, got {bad[0]}")
    names = sorted(a.name for a in atoms if isinstance(a, Var))
    for values in itertools.product((False, True), repeat=len(names)):
        if not _eval(f, dict(zip(names, values))):
            return False
    return True


def _eval(f, env) -> bool:
    if isinstance(f, Bot):
        return False
    if isinstance(f, Var):
        return env[f.name]
    if isinstance(f, And):
        return _eval(f.left, env) and _eval(f.right, env)
    if isinstance(f, Or):
        return _eval(f.left, env) or _eval(f.right, env)
    return (not _eval(f.left, env)) or _eval(f.right, env)


# ---------------------------------------------------------------- corpora


def formulas_up_to(atoms, max_symbols: int) -> list:
    """Every formula over ``atoms`` with at most ``max_symbols`` symbols, by size."""
    by_size = {1: list(atoms)}
    for n in range(3, max_symbols + 1, 2):
        out = []
        for left in range(1, n - 1, 2):
            right = n - 1 - left
            for a in by_size[left]:
                for b in by_size[right]:
                    out.extend((And(a, b), Or(a, b), Imp(a, b)))
        by_size[n] = out
    return [f for n in sorted(by_size) for f in by_size[n]]
