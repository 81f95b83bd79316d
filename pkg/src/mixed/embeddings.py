"""LK and LJ derivations, their checkers, and the translations to and from the
mixed calculus.

LK works over variables and ``bot``; LJ over variables and ``0``.  The rule sets
are exactly the images of the mixed rules used by the translations:

LK: ``lk.ax lk.cut lk.c_l lk.c_r lk.w_l lk.w_r lk.bot lk.and_l lk.and_r lk.or_l
lk.or_r1 lk.or_r2 lk.imp_l lk.imp_r`` (multiplicative cut/and_r/imp_l, additive or_l).

LJ: ``lj.ax lj.cut lj.c_l lj.w_l lj.zero lj.and_l lj.and_r lj.or_l lj.or_r1
lj.or_r2 lj.imp_l lj.imp_r``.

For ``imp_l`` the first premise holds ``B`` on the left and the second proves ``A``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .calculus import (
    CheckReport,
    Derivation,
    PSequent,
    ProofError,
    RuleError,
    annotate,
    format_path,
    make,
    msort,
    mremove,
    walk_shared,
)
from .formula import (
    BOT,
    ZERO,
    And,
    Bot,
    Formula,
    Imp,
    Or,
    PPolicy,
    BotOnly,
    Zero,
    is_stable,
    p_member,
    parse_formula,
    show,
    subformula_closure,
)


class PreconditionError(ValueError):
    """A translation hypothesis does not hold; the message names it."""


def _need(xs, *items):
    rest = mremove(xs, *items)
    if rest is None:
        raise RuleError("missing " + ", ".join(show(i) for i in items))
    return rest


def _formulas(text):
    text = text.strip()
    return tuple(parse_formula(t.strip()) for t in text.split(",")) if text else ()


# ---------------------------------------------------------------- sequents


@dataclass(frozen=True)
class LKSequent:
    ante: tuple = ()
    succ: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "ante", msort(self.ante))
        object.__setattr__(self, "succ", msort(self.succ))

    def formulas(self):
        return self.ante + self.succ

    def __str__(self):
        left = ", ".join(map(show, self.ante))
        right = ", ".join(map(show, self.succ))
        return ((left + " |- " if left else "|- ") + right).rstrip()


@dataclass(frozen=True)
class LJSequent:
    ante: tuple
    goal: Formula

    def __post_init__(self):
        if self.goal is None or isinstance(self.goal, (tuple, list)):
            raise TypeError("LJ sequents have exactly one succedent formula")
        object.__setattr__(self, "ante", msort(self.ante))

    def formulas(self):
        return self.ante + (self.goal,)

    def __str__(self):
        left = ", ".join(map(show, self.ante))
        return (left + " |- " if left else "|- ") + show(self.goal)


def parse_lk_sequent(text: str) -> LKSequent:
    if text.count("|-") != 1:
        raise ValueError(f"sequent needs exactly one '|-': {text!r}")
    left, right = text.split("|-")
    return LKSequent(_formulas(left), _formulas(right))


def parse_lj_sequent(text: str) -> LJSequent:
    if text.count("|-") != 1:
        raise ValueError(f"sequent needs exactly one '|-': {text!r}")
    left, right = text.split("|-")
    succ = _formulas(right)
    if len(succ) != 1:
        raise ValueError(f"LJ succedent must hold exactly one formula: {text!r}")
    return LJSequent(_formulas(left), succ[0])


# ---------------------------------------------------------------- derivations

LK_RULES = {
    "lk.ax": 0, "lk.bot": 0, "lk.cut": 2, "lk.c_l": 1, "lk.c_r": 1, "lk.w_l": 1,
    "lk.w_r": 1, "lk.and_l": 1, "lk.and_r": 2, "lk.or_l": 2, "lk.or_r1": 1,
    "lk.or_r2": 1, "lk.imp_l": 2, "lk.imp_r": 1,
}
LJ_RULES = {
    "lj.ax": 0, "lj.zero": 0, "lj.cut": 2, "lj.c_l": 1, "lj.w_l": 1, "lj.and_l": 1,
    "lj.and_r": 2, "lj.or_l": 2, "lj.or_r1": 1, "lj.or_r2": 1, "lj.imp_l": 2,
    "lj.imp_r": 1,
}


@dataclass(frozen=True)
class LKDerivation:
    conclusion: LKSequent
    rule: str
    premises: tuple = ()
    principal: Optional[Formula] = None

    def __post_init__(self):
        if self.rule not in LK_RULES:
            raise ValueError(f"unknown LK rule {self.rule!r}")
        object.__setattr__(self, "premises", tuple(self.premises))


@dataclass(frozen=True)
class LJDerivation:
    conclusion: LJSequent
    rule: str
    premises: tuple = ()
    principal: Optional[Formula] = None

    def __post_init__(self):
        if self.rule not in LJ_RULES:
            raise ValueError(f"unknown LJ rule {self.rule!r}")
        object.__setattr__(self, "premises", tuple(self.premises))


_CONN = {"and": And, "or": Or, "imp": Imp}


def _conn(rule):
    name = rule[3:].split("_")[0]
    return _CONN.get(name)


def build_lk(rule: str, prem, a) -> LKSequent:
    if len(prem) != LK_RULES[rule]:
        raise RuleError(f"{rule} takes {LK_RULES[rule]} premises")
    if rule == "lk.ax":
        return LKSequent((a,), (a,))
    if rule == "lk.bot":
        if a != BOT:
            raise RuleError("lk.bot needs principal bot")
        return LKSequent((BOT,), ())
    if rule == "lk.cut":
        l, r = prem
        return LKSequent(l.ante + _need(r.ante, a), _need(l.succ, a) + r.succ)
    if rule in ("lk.c_l", "lk.c_r", "lk.w_l", "lk.w_r"):
        (p,) = prem
        if rule == "lk.c_l":
            return LKSequent(_need(p.ante, a, a) + (a,), p.succ)
        if rule == "lk.c_r":
            return LKSequent(p.ante, _need(p.succ, a, a) + (a,))
        if rule == "lk.w_l":
            return LKSequent(p.ante + (a,), p.succ)
        return LKSequent(p.ante, p.succ + (a,))
    if not isinstance(a, _conn(rule)):
        raise RuleError(f"{rule}: wrong principal connective")
    A, B = a.left, a.right
    if rule == "lk.and_l":
        (p,) = prem
        return LKSequent(_need(p.ante, A, B) + (a,), p.succ)
    if rule == "lk.and_r":
        l, r = prem
        return LKSequent(l.ante + r.ante, _need(l.succ, A) + _need(r.succ, B) + (a,))
    if rule == "lk.or_l":
        l, r = prem
        gl, gr = _need(l.ante, A), _need(r.ante, B)
        if msort(gl) != msort(gr) or l.succ != r.succ:
            raise RuleError("lk.or_l premises must share their contexts")
        return LKSequent(gl + (a,), l.succ)
    if rule in ("lk.or_r1", "lk.or_r2"):
        (p,) = prem
        return LKSequent(p.ante, _need(p.succ, A if rule == "lk.or_r1" else B) + (a,))
    if rule == "lk.imp_l":
        l, r = prem
        return LKSequent(_need(l.ante, B) + r.ante + (a,), l.succ + _need(r.succ, A))
    if rule == "lk.imp_r":
        (p,) = prem
        return LKSequent(_need(p.ante, A), _need(p.succ, B) + (a,))
    raise RuleError(rule)  # pragma: no cover


def build_lj(rule: str, prem, a) -> LJSequent:
    if len(prem) != LJ_RULES[rule]:
        raise RuleError(f"{rule} takes {LJ_RULES[rule]} premises")
    if rule == "lj.ax":
        return LJSequent((a,), a)
    if rule == "lj.zero":
        raise RuleError("lj.zero has no forward form")
    if rule == "lj.cut":
        l, r = prem
        if l.goal != a:
            raise RuleError(f"lj.cut: left premise must prove {show(a)}")
        return LJSequent(l.ante + _need(r.ante, a), r.goal)
    if rule == "lj.c_l":
        (p,) = prem
        return LJSequent(_need(p.ante, a, a) + (a,), p.goal)
    if rule == "lj.w_l":
        (p,) = prem
        return LJSequent(p.ante + (a,), p.goal)
    if not isinstance(a, _conn(rule)):
        raise RuleError(f"{rule}: wrong principal connective")
    A, B = a.left, a.right
    if rule == "lj.and_l":
        (p,) = prem
        return LJSequent(_need(p.ante, A, B) + (a,), p.goal)
    if rule == "lj.and_r":
        l, r = prem
        if l.goal != A or r.goal != B:
            raise RuleError("lj.and_r premises must prove the conjuncts")
        return LJSequent(l.ante + r.ante, a)
    if rule == "lj.or_l":
        l, r = prem
        gl, gr = _need(l.ante, A), _need(r.ante, B)
        if msort(gl) != msort(gr) or l.goal != r.goal:
            raise RuleError("lj.or_l premises must share their contexts")
        return LJSequent(gl + (a,), l.goal)
    if rule in ("lj.or_r1", "lj.or_r2"):
        (p,) = prem
        if p.goal != (A if rule == "lj.or_r1" else B):
            raise RuleError(f"{rule}: premise proves the wrong disjunct")
        return LJSequent(p.ante, a)
    if rule == "lj.imp_l":
        l, r = prem
        if r.goal != A:
            raise RuleError("lj.imp_l: second premise must prove the antecedent")
        return LJSequent(_need(l.ante, B) + r.ante + (a,), l.goal)
    if rule == "lj.imp_r":
        (p,) = prem
        if p.goal != B:
            raise RuleError("lj.imp_r: premise must prove the consequent")
        return LJSequent(_need(p.ante, A), a)
    raise RuleError(rule)  # pragma: no cover


def _candidates(d, lk: bool):
    if d.principal is not None:
        return [d.principal]
    s, r = d.conclusion, d.rule
    succ = s.succ if lk else (s.goal,)
    if r.endswith(".ax"):
        return list(dict.fromkeys(f for f in s.ante if f in succ))
    if r == "lk.bot":
        return [BOT]
    if r.endswith(".cut"):
        if len(d.premises) != 2:
            return []
        left, right = (p.conclusion for p in d.premises)
        lsucc = left.succ if lk else (left.goal,)
        return list(dict.fromkeys(f for f in lsucc if f in right.ante))
    if r.endswith((".c_l", ".w_l")):
        return list(dict.fromkeys(s.ante))
    if r.endswith((".c_r", ".w_r")):
        return list(dict.fromkeys(s.succ))
    conn = _conn(r)
    side = s.ante if r.endswith("_l") else succ
    return list(dict.fromkeys(f for f in side if isinstance(f, conn)))


def _check(d, lk: bool) -> CheckReport:
    failures = []
    build = build_lk if lk else build_lj
    forbidden = Zero if lk else Bot
    for path, node in walk_shared(d):
        s = node.conclusion
        bad = [f for f in subformula_closure(s.formulas()) if isinstance(f, forbidden)]
        if bad:
            failures.append((path, f"{show(bad[0])} is not a formula of {'LK' if lk else 'LJ'}"))
        if len(node.premises) != (LK_RULES if lk else LJ_RULES)[node.rule]:
            failures.append((path, f"{node.rule}: wrong number of premises"))
            continue
        if node.rule == "lj.zero":
            if ZERO not in s.ante:
                failures.append((path, "lj.zero needs 0 in the antecedent"))
            continue
        prem = [p.conclusion for p in node.premises]
        err = None
        for a in _candidates(node, lk):
            try:
                if build(node.rule, prem, a) == s:
                    break
                err = err or "conclusion does not match the rule schema"
            except RuleError as e:
                err = err or str(e)
        else:
            failures.append((path, err or f"{node.rule}: no principal formula fits"))
    return CheckReport(not failures, failures)


def check_lk(d: LKDerivation) -> CheckReport:
    return _check(d, lk=True)


def check_lj(d: LJDerivation) -> CheckReport:
    return _check(d, lk=False)


def _annotated(d, lk: bool):
    build = build_lk if lk else build_lj
    prem = tuple(_annotated(p, lk) for p in d.premises)
    if d.rule == "lj.zero":
        return type(d)(d.conclusion, d.rule, prem, ZERO)
    for a in _candidates(d, lk):
        try:
            if build(d.rule, [p.conclusion for p in prem], a) == d.conclusion:
                return type(d)(d.conclusion, d.rule, prem, a)
        except RuleError:
            pass
    raise RuleError(f"{d.rule} does not check")  # pragma: no cover


def make_lk(rule, premises, a) -> LKDerivation:
    return LKDerivation(build_lk(rule, [p.conclusion for p in premises], a), rule, tuple(premises), a)


def make_lj(rule, premises, a) -> LJDerivation:
    return LJDerivation(build_lj(rule, [p.conclusion for p in premises], a), rule, tuple(premises), a)


# ---------------------------------------------------------------- LK <-> ML_P


def _all_formulas(d):
    return [f for _, n in walk_shared(d) for f in n.conclusion.formulas()]


def _check_k(policy, k_set):
    if not is_stable(k_set):
        raise PreconditionError("K is not stable")
    if ZERO in k_set:
        raise PreconditionError("0 ∈ K")
    outside = sorted((show(f) for f in k_set if not p_member(policy, f)))
    if outside:
        raise PreconditionError(f"K ⊄ P ({outside[0]} ∉ P)")


def _check_i(policy, i_set):
    if not is_stable(i_set):
        raise PreconditionError("I is not stable")
    if BOT in i_set:
        raise PreconditionError("bot ∈ I")
    inside = sorted(show(f) for f in i_set if p_member(policy, f))
    if inside:
        raise PreconditionError(f"I ∩ P ≠ ∅ ({inside[0]} ∈ P)")


def lk_to_mlp(d: LKDerivation, policy: PPolicy, k_set=None) -> Derivation:
    """Embed an LK derivation as a mixed derivation with empty stoups.

    ``k_set`` defaults to the subformula closure of everything in ``d``; every
    formula occurring in ``d`` (cut formulas included) must lie in it.
    """
    report = check_lk(d)
    if not report.ok:
        raise ProofError(report.failures)
    forms = _all_formulas(d)
    k_set = frozenset(k_set) if k_set is not None else subformula_closure(forms)
    _check_k(policy, k_set)
    stray = [f for f in forms if f not in k_set]
    if stray:
        raise PreconditionError(f"formula {show(stray[0])} of the derivation is not in K")
    return _lk_to_mlp(_annotated(d, True), policy)


_LK_SIMPLE = {"lk.c_l": "c_l", "lk.c_r": "c_r", "lk.w_l": "w_l", "lk.w_r": "w_r",
              "lk.cut": "cut2", "lk.and_l": "and2_l", "lk.or_l": "or2_l", "lk.imp_l": "imp3_l"}
_LK_RIGHT = {"lk.and_r": "and2_r", "lk.or_r1": "or3_r", "lk.or_r2": "or4_r", "lk.imp_r": "imp2_r"}


def _lk_to_mlp(d: LKDerivation, policy) -> Derivation:
    prem = [_lk_to_mlp(p, policy) for p in d.premises]
    a = d.principal
    if d.rule == "lk.ax":
        return make("der", [make("ax", [], a, policy)], a, policy)
    if d.rule == "lk.bot":
        return make("bot", [], BOT, policy)
    if d.rule in _LK_SIMPLE:
        return make(_LK_SIMPLE[d.rule], prem, a, policy)
    # right rules go through the stoup and are discharged at once
    return make("der", [make(_LK_RIGHT[d.rule], prem, a, policy)], a, policy)


_MLP_TO_LK = {
    "ax": "lk.ax", "bot": "lk.bot", "cut1": "lk.cut", "cut2": "lk.cut",
    "c_l": "lk.c_l", "c_r": "lk.c_r", "w_l": "lk.w_l", "w_r": "lk.w_r",
    "and1_l": "lk.and_l", "and2_l": "lk.and_l",
    "and1_r": "lk.and_r", "and2_r": "lk.and_r", "and3_r": "lk.and_r", "and4_r": "lk.and_r",
    "or1_l": "lk.or_l", "or2_l": "lk.or_l",
    "or1_r": "lk.or_r1", "or3_r": "lk.or_r1", "or2_r": "lk.or_r2", "or4_r": "lk.or_r2",
    "imp1_l": "lk.imp_l", "imp2_l": "lk.imp_l", "imp3_l": "lk.imp_l",
    "imp1_r": "lk.imp_r", "imp2_r": "lk.imp_r",
}


def fuse(s: PSequent) -> LKSequent:
    return LKSequent(s.ante, s.body + ((s.stoup,) if s.stoup is not None else ()))


def mlp_to_lk(d: Derivation, policy: PPolicy, k_set=None) -> LKDerivation:
    """Read a mixed derivation as an LK derivation by merging body and stoup."""
    d = annotate(d, policy)
    forms = _all_formulas(d)
    k_set = frozenset(k_set) if k_set is not None else subformula_closure(forms)
    _check_k(policy, k_set)
    stray = [f for f in forms if f not in k_set]
    if stray:
        raise PreconditionError(f"formula {show(stray[0])} of the derivation is not in K")
    return _mlp_to_lk(d)


def _mlp_to_lk(d: Derivation) -> LKDerivation:
    if d.rule == "der":
        return _mlp_to_lk(d.premises[0])
    if d.rule == "zero":  # pragma: no cover - 0 is never in K
        raise PreconditionError("0 occurs in the derivation")
    prem = [_mlp_to_lk(p) for p in d.premises]
    out = make_lk(_MLP_TO_LK[d.rule], prem, d.principal)
    assert out.conclusion == fuse(d.conclusion)
    return out


# ---------------------------------------------------------------- LJ <-> ML_P

_LJ_TO_MLP = {
    "lj.ax": "ax", "lj.cut": "cut1", "lj.c_l": "c_l", "lj.w_l": "w_l",
    "lj.and_l": "and1_l", "lj.and_r": "and1_r", "lj.or_l": "or1_l",
    "lj.or_r1": "or1_r", "lj.or_r2": "or2_r", "lj.imp_l": "imp1_l", "lj.imp_r": "imp1_r",
}
_MLP_TO_LJ = {v: k for k, v in _LJ_TO_MLP.items()}


def lj_to_mlp(d: LJDerivation, policy: PPolicy = BotOnly(), i_set=None) -> Derivation:
    """Embed an LJ derivation as a body-free mixed derivation."""
    report = check_lj(d)
    if not report.ok:
        raise ProofError(report.failures)
    forms = _all_formulas(d)
    i_set = frozenset(i_set) if i_set is not None else subformula_closure(forms)
    _check_i(policy, i_set)
    stray = [f for f in forms if f not in i_set]
    if stray:
        raise PreconditionError(f"formula {show(stray[0])} of the derivation is not in I")
    return _lj_to_mlp(_annotated(d, False), policy)


def _lj_to_mlp(d: LJDerivation, policy) -> Derivation:
    s = d.conclusion
    if d.rule == "lj.zero":
        return Derivation(PSequent(s.ante, (), s.goal), "zero", (), ZERO)
    prem = [_lj_to_mlp(p, policy) for p in d.premises]
    return make(_LJ_TO_MLP[d.rule], prem, d.principal, policy)


def mlp_to_lj(d: Derivation, policy: PPolicy, i_set=None) -> LJDerivation:
    """Normalize ``d`` (concluding ``G |- ; A``) and read it as an LJ derivation."""
    from .cutelim import normalize

    s = d.conclusion
    if s.body or s.stoup is None:
        raise PreconditionError(f"expected a conclusion G |- ; A, got {s}")
    i_set = frozenset(i_set) if i_set is not None else subformula_closure(s.formulas())
    _check_i(policy, i_set)
    stray = [f for f in s.formulas() if f not in i_set]
    if stray:
        raise PreconditionError(f"{show(stray[0])} is not in I")
    normal = normalize(d, policy)
    for path, node in walk_shared(normal):
        if node.conclusion.body or node.conclusion.stoup is None:
            raise AssertionError(f"normal form uses a body at {format_path(path)}")
        if node.rule not in _MLP_TO_LJ and node.rule != "zero":
            raise AssertionError(f"normal form uses non-intuitionistic rule {node.rule}")
    return _mlp_to_lj(normal)


def _mlp_to_lj(d: Derivation) -> LJDerivation:
    s = d.conclusion
    if d.rule == "zero":
        return LJDerivation(LJSequent(s.ante, s.stoup), "lj.zero", (), ZERO)
    prem = [_mlp_to_lj(p) for p in d.premises]
    return make_lj(_MLP_TO_LJ[d.rule], prem, d.principal)


# ---------------------------------------------------------------- proof files


def _from_node(node, lk: bool):
    cls, rules = (LKDerivation, LK_RULES) if lk else (LJDerivation, LJ_RULES)
    if node.tag not in rules:
        raise ValueError(f"unknown {'LK' if lk else 'LJ'} rule tag {node.tag!r}")
    seq = parse_lk_sequent(node.sequent) if lk else parse_lj_sequent(node.sequent)
    principal = parse_formula(node.principal) if node.principal is not None else None
    return cls(seq, node.tag, tuple(_from_node(c, lk) for c in node.children), principal)


def read_lk(text: str) -> LKDerivation:
    from .sexpr import read_tree

    return _from_node(read_tree(text), True)


def read_lj(text: str) -> LJDerivation:
    from .sexpr import read_tree

    return _from_node(read_tree(text), False)


def write_proof(d) -> str:
    from .sexpr import Node, write_tree

    def conv(n):
        p = show(n.principal) if n.principal is not None else None
        return Node(n.rule, str(n.conclusion), p, [conv(c) for c in n.premises])

    return write_tree(conv(d)) + "\n"
