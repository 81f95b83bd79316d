"""Translation of mixed derivations into two-sided linear logic.

The fragment has ``0``, atoms, ``*`` (tensor), ``+`` (plus), ``-o`` (linear
implication) and the exponentials ``!`` and ``?``.  Formulas are mapped by the
mutually recursive ``t``/``b`` translations; derivations by
:func:`translate_derivation`, which leans on four admissible transformations
(:func:`contract_t`, :func:`weaken_t`, :func:`quest_left_t`, :func:`bang_right_t`).

Those transformations work because every ``t`` image is *!-like*: ``0``, a
``!``-formula, or a tensor/plus of !-like formulas.  A !-like context member can
be contracted, weakened or made promotion-ready by inverting its tensors and
plusses down to ``!``-formulas.  Inversion is done with a cut against a small
right-introduction (``U, V |- U * V`` or ``U |- U + V``), so every output is an
ordinary checkable proof.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Union

from .calculus import CheckReport, Derivation, RuleError, annotate, mremove, walk_shared
from .formula import And, Bot, Formula, Imp, Or, PPolicy, Var, Zero, p_member


# ---------------------------------------------------------------- formulas


class _Cached:
    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((type(self).__name__,) + tuple(getattr(self, f) for f in self._fields))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        return show_ll(self)


@dataclass(frozen=True)
class Atom(_Cached):
    name: str
    _fields = ("name",)
    __hash__ = _Cached.__hash__


@dataclass(frozen=True)
class LZero(_Cached):
    _fields = ()
    __hash__ = _Cached.__hash__


@dataclass(frozen=True)
class Tensor(_Cached):
    left: "LLFormula"
    right: "LLFormula"
    _fields = ("left", "right")
    __hash__ = _Cached.__hash__


@dataclass(frozen=True)
class Plus(_Cached):
    left: "LLFormula"
    right: "LLFormula"
    _fields = ("left", "right")
    __hash__ = _Cached.__hash__


@dataclass(frozen=True)
class Lolli(_Cached):
    left: "LLFormula"
    right: "LLFormula"
    _fields = ("left", "right")
    __hash__ = _Cached.__hash__


@dataclass(frozen=True)
class OfCourse(_Cached):
    body: "LLFormula"
    _fields = ("body",)
    __hash__ = _Cached.__hash__


@dataclass(frozen=True)
class WhyNot(_Cached):
    body: "LLFormula"
    _fields = ("body",)
    __hash__ = _Cached.__hash__


LLFormula = Union[Atom, LZero, Tensor, Plus, Lolli, OfCourse, WhyNot]
LL_ZERO = LZero()

_BIN = {Tensor: ("*", 3), Plus: ("+", 2), Lolli: ("-o", 1)}


@lru_cache(maxsize=None)
def show_ll(f) -> str:
    if isinstance(f, LZero):
        return "0"
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, (OfCourse, WhyNot)):
        inner = show_ll(f.body)
        if isinstance(f.body, tuple(_BIN)):
            inner = f"({inner})"
        return ("!" if isinstance(f, OfCourse) else "?") + inner
    sym, prec = _BIN[type(f)]
    left, right = show_ll(f.left), show_ll(f.right)
    if type(f.left) in _BIN:
        lp = _BIN[type(f.left)][1]
        if lp < prec or (lp == prec and isinstance(f, Lolli)):
            left = f"({left})"
    if type(f.right) in _BIN:
        rp = _BIN[type(f.right)][1]
        if rp < prec or (rp == prec and not isinstance(f, Lolli)):
            right = f"({right})"
    return f"{left} {sym} {right}"


_LL_TOKEN = re.compile(r"-o|[*+!?()]|0(?![A-Za-z0-9_])|[a-z][a-zA-Z0-9_]*")


class LLSyntaxError(ValueError):
    pass


def parse_ll(text: str):
    toks, pos = [], 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _LL_TOKEN.match(text, pos)
        if not m:
            raise LLSyntaxError(f"unexpected character at position {pos} in {text!r}")
        toks.append((m.group(), pos))
        pos = m.end()
    toks.append(("", len(text)))
    i = 0

    def peek():
        return toks[i][0]

    def take(expected=None):
        nonlocal i
        tok, at = toks[i]
        if expected is not None and tok != expected:
            raise LLSyntaxError(f"expected {expected!r} at position {at} in {text!r}")
        i += 1
        return tok

    def lolli():
        left = plus()
        if peek() == "-o":
            take()
            return Lolli(left, lolli())
        return left

    def plus():
        left = tensor()
        while peek() == "+":
            take()
            left = Plus(left, tensor())
        return left

    def tensor():
        left = unary()
        while peek() == "*":
            take()
            left = Tensor(left, unary())
        return left

    def unary():
        tok, at = toks[i]
        if tok == "!":
            take()
            return OfCourse(unary())
        if tok == "?":
            take()
            return WhyNot(unary())
        if tok == "(":
            take()
            inner = lolli()
            take(")")
            return inner
        if tok == "0":
            take()
            return LL_ZERO
        if tok and (tok[0].isalpha()):
            take()
            return Atom(tok)
        raise LLSyntaxError(f"unexpected {tok or 'end of input'!r} at position {at} in {text!r}")

    out = lolli()
    if peek():
        raise LLSyntaxError(f"trailing input at position {toks[i][1]} in {text!r}")
    return out


def _ll_key(f) -> str:
    return show_ll(f)


def _lsort(xs) -> tuple:
    return tuple(sorted(xs, key=_ll_key))


def is_bang_like(f) -> bool:
    """0, a !-formula, or a tensor/plus of such: the shapes ``t`` produces."""
    if isinstance(f, (LZero, OfCourse)):
        return True
    if isinstance(f, (Tensor, Plus)):
        return is_bang_like(f.left) and is_bang_like(f.right)
    return False


# ---------------------------------------------------------------- translations


def t_translate(a: Formula, policy: PPolicy):
    if isinstance(a, (Zero, Bot)):
        return LL_ZERO
    if isinstance(a, Var):
        return OfCourse(Atom(a.name))
    if isinstance(a, And):
        return Tensor(OfCourse(b_translate(a.left, policy)), OfCourse(b_translate(a.right, policy)))
    if isinstance(a, Or):
        return Plus(OfCourse(b_translate(a.left, policy)), OfCourse(b_translate(a.right, policy)))
    if isinstance(a, Imp):
        return OfCourse(Lolli(t_translate(a.left, policy), b_translate(a.right, policy)))
    raise TypeError(f"not a formula: {a!r}")


def b_translate(a: Formula, policy: PPolicy):
    ta = t_translate(a, policy)
    return WhyNot(ta) if p_member(policy, a) else ta


# ---------------------------------------------------------------- sequents and rules


@dataclass(frozen=True)
class LLSequent:
    left: tuple = ()
    right: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "left", _lsort(self.left))
        object.__setattr__(self, "right", _lsort(self.right))

    def __str__(self):
        left = ", ".join(map(show_ll, self.left))
        right = ", ".join(map(show_ll, self.right))
        return f"{left} |- {right}".strip()


def _ll_list(text: str) -> tuple:
    text = text.strip()
    return tuple(parse_ll(p) for p in text.split(",")) if text else ()


def parse_ll_sequent(text: str) -> LLSequent:
    if text.count("|-") != 1:
        raise ValueError(f"sequent needs exactly one '|-': {text!r}")
    left, right = text.split("|-")
    return LLSequent(_ll_list(left), _ll_list(right))


LL_RULES = {
    "ll_ax": 0, "zero_l": 0, "ll_cut": 2,
    "tensor_l": 1, "tensor_r": 2, "plus_l": 2, "plus_r1": 1, "plus_r2": 1,
    "lolli_l": 2, "lolli_r": 1,
    "bang_l": 1, "bang_r": 1, "bang_c": 1, "bang_w": 1,
    "quest_r": 1, "quest_l": 1, "quest_c": 1, "quest_w": 1,
}


@dataclass(frozen=True)
class LLDerivation:
    conclusion: LLSequent
    rule: str
    premises: tuple = ()
    principal: Optional[object] = field(default=None)

    def __post_init__(self):
        if self.rule not in LL_RULES:
            raise ValueError(f"unknown LL rule {self.rule!r}")
        object.__setattr__(self, "premises", tuple(self.premises))


def _take(xs, *items):
    rest = mremove(xs, *items)
    if rest is None:
        raise RuleError("missing " + ", ".join(show_ll(i) for i in items))
    return rest


def _promotion_context(left, right):
    if not all(isinstance(f, OfCourse) for f in left) or not all(isinstance(f, WhyNot) for f in right):
        raise RuleError("promotion context: left side must be all !, right side all ?")


def build_ll(rule: str, prem, a) -> LLSequent:
    """Conclusion of an LL rule; ``a`` is the principal (compound) or cut formula.

    Two-premise rules that consume a formula on the left take that premise
    first: ``ll_cut`` is (Γ, A |- Δ) (Γ' |- Δ', A) and ``lolli_l`` is
    (Γ, B |- Δ) (Γ' |- Δ', A).
    """
    if len(prem) != LL_RULES[rule]:
        raise RuleError(f"{rule} takes {LL_RULES[rule]} premises, got {len(prem)}")
    if rule == "ll_ax":
        return LLSequent((a,), (a,))
    if rule == "zero_l":
        raise RuleError("zero_l has no forward form")
    if rule == "ll_cut":
        l, r = prem
        return LLSequent(_take(l.left, a) + r.left, l.right + _take(r.right, a))
    kinds = {
        "tensor": Tensor, "plus": Plus, "lolli": Lolli, "bang": OfCourse, "quest": WhyNot,
    }
    want = kinds[rule.split("_")[0]]
    if not isinstance(a, want):
        raise RuleError(f"{rule} needs a principal built with {want.__name__}")
    if rule == "tensor_l":
        (p,) = prem
        return LLSequent(_take(p.left, a.left, a.right) + (a,), p.right)
    if rule == "tensor_r":
        l, r = prem
        return LLSequent(l.left + r.left, _take(l.right, a.left) + _take(r.right, a.right) + (a,))
    if rule == "plus_l":
        l, r = prem
        gl, gr = _take(l.left, a.left), _take(r.left, a.right)
        if _lsort(gl) != _lsort(gr) or l.right != r.right:
            raise RuleError("plus_l premises must share their contexts")
        return LLSequent(gl + (a,), l.right)
    if rule in ("plus_r1", "plus_r2"):
        (p,) = prem
        return LLSequent(p.left, _take(p.right, a.left if rule == "plus_r1" else a.right) + (a,))
    if rule == "lolli_l":
        l, r = prem
        return LLSequent(_take(l.left, a.right) + r.left + (a,), l.right + _take(r.right, a.left))
    if rule == "lolli_r":
        (p,) = prem
        return LLSequent(_take(p.left, a.left), _take(p.right, a.right) + (a,))
    (p,) = prem
    if rule == "bang_l":
        return LLSequent(_take(p.left, a.body) + (a,), p.right)
    if rule == "bang_r":
        rest = _take(p.right, a.body)
        _promotion_context(p.left, rest)
        return LLSequent(p.left, rest + (a,))
    if rule == "bang_c":
        return LLSequent(_take(p.left, a, a) + (a,), p.right)
    if rule == "bang_w":
        return LLSequent(p.left + (a,), p.right)
    if rule == "quest_r":
        return LLSequent(p.left, _take(p.right, a.body) + (a,))
    if rule == "quest_l":
        rest = _take(p.left, a.body)
        _promotion_context(rest, p.right)
        return LLSequent(rest + (a,), p.right)
    if rule == "quest_c":
        return LLSequent(p.left, _take(p.right, a, a) + (a,))
    if rule == "quest_w":
        return LLSequent(p.left, p.right + (a,))
    raise RuleError(rule)  # pragma: no cover


def _ll_candidates(d: LLDerivation) -> list:
    if d.principal is not None:
        return [d.principal]
    s, r = d.conclusion, d.rule
    if r == "ll_ax":
        return list(dict.fromkeys(f for f in s.left if f in s.right))
    if r == "ll_cut":
        if len(d.premises) != 2:
            return []
        l, rr = (p.conclusion for p in d.premises)
        return list(dict.fromkeys(f for f in l.left if f in rr.right))
    kinds = {"tensor": Tensor, "plus": Plus, "lolli": Lolli, "bang": OfCourse, "quest": WhyNot}
    want = kinds[r.split("_")[0]]
    on_left = r.endswith(("_l", "_c", "_w")) if want is OfCourse else r.endswith("_l")
    side = s.left if on_left else s.right
    return list(dict.fromkeys(f for f in side if isinstance(f, want)))


def match_ll(d: LLDerivation):
    if len(d.premises) != LL_RULES[d.rule]:
        raise RuleError(f"{d.rule} takes {LL_RULES[d.rule]} premises, got {len(d.premises)}")
    if d.rule == "zero_l":
        if LL_ZERO not in d.conclusion.left:
            raise RuleError("zero_l needs 0 on the left")
        return LL_ZERO
    cands = _ll_candidates(d)
    if not cands:
        raise RuleError(f"no candidate principal formula for {d.rule}")
    first = None
    prem = [p.conclusion for p in d.premises]
    for a in cands:
        try:
            got = build_ll(d.rule, prem, a)
        except RuleError as e:
            first = first or str(e)
            continue
        if got == d.conclusion:
            return a
        first = first or f"conclusion mismatch: schema gives {got}"
    raise RuleError(first)


def check_ll(d: LLDerivation) -> CheckReport:
    failures = []
    for path, node in walk_shared(d):
        try:
            match_ll(node)
        except RuleError as e:
            failures.append((path, str(e)))
    return CheckReport(not failures, failures)


def make_ll(rule: str, premises, a) -> LLDerivation:
    return LLDerivation(build_ll(rule, [p.conclusion for p in premises], a), rule, tuple(premises), a)


def zero_l(seq: LLSequent) -> LLDerivation:
    if LL_ZERO not in seq.left:
        raise RuleError("zero_l needs 0 on the left")
    return LLDerivation(seq, "zero_l", (), LL_ZERO)


def ll_ax(a) -> LLDerivation:
    return make_ll("ll_ax", [], a)


# ---------------------------------------------------------------- inversion


def invert_tensor(d: LLDerivation, a: Tensor) -> LLDerivation:
    """From Γ, U*V |- Δ derive Γ, U, V |- Δ (cut against U, V |- U*V)."""
    intro = make_ll("tensor_r", [ll_ax(a.left), ll_ax(a.right)], a)
    return make_ll("ll_cut", [d, intro], a)


def invert_plus(d: LLDerivation, a: Plus) -> tuple:
    """From Γ, U+V |- Δ derive Γ, U |- Δ and Γ, V |- Δ."""
    left = make_ll("ll_cut", [d, make_ll("plus_r1", [ll_ax(a.left)], a)], a)
    right = make_ll("ll_cut", [d, make_ll("plus_r2", [ll_ax(a.right)], a)], a)
    return left, right


def _with_left(seq: LLSequent, remove=(), add=()) -> LLSequent:
    return LLSequent(_take(seq.left, *remove) + tuple(add), seq.right)


# ---------------------------------------------------------------- admissible transformations


def contract_ll(d: LLDerivation, f) -> LLDerivation:
    """Γ, f, f |- Δ  ⟹  Γ, f |- Δ for a !-like ``f``."""
    s = d.conclusion
    if mremove(s.left, f, f) is None:
        raise RuleError(f"contraction needs two copies of {show_ll(f)} on the left")
    if isinstance(f, LZero):
        return zero_l(_with_left(s, [f]))
    if isinstance(f, OfCourse):
        return make_ll("bang_c", [d], f)
    if isinstance(f, Tensor):
        e = invert_tensor(invert_tensor(d, f), f)
        e = contract_ll(contract_ll(e, f.left), f.right)
        return make_ll("tensor_l", [e], f)
    if isinstance(f, Plus):
        branches = []
        for part, rule in ((f.left, "plus_r1"), (f.right, "plus_r2")):
            intro = make_ll(rule, [ll_ax(part)], f)
            e = make_ll("ll_cut", [make_ll("ll_cut", [d, intro], f), intro], f)
            branches.append(contract_ll(e, part))
        return make_ll("plus_l", branches, f)
    raise RuleError(f"cannot contract {show_ll(f)}: not !-like")


def weaken_ll(d: LLDerivation, f) -> LLDerivation:
    """Γ |- Δ  ⟹  Γ, f |- Δ for a !-like ``f``."""
    if isinstance(f, LZero):
        return zero_l(_with_left(d.conclusion, add=[f]))
    if isinstance(f, OfCourse):
        return make_ll("bang_w", [d], f)
    if isinstance(f, Tensor):
        return make_ll("tensor_l", [weaken_ll(weaken_ll(d, f.left), f.right)], f)
    if isinstance(f, Plus):
        return make_ll("plus_l", [weaken_ll(d, f.left), weaken_ll(d, f.right)], f)
    raise RuleError(f"cannot weaken {show_ll(f)}: not !-like")


def contract_t(d: LLDerivation, a: Formula, policy: PPolicy) -> LLDerivation:
    return contract_ll(d, t_translate(a, policy))


def weaken_t(d: LLDerivation, a: Formula, policy: PPolicy) -> LLDerivation:
    return weaken_ll(d, t_translate(a, policy))


def _promote(d: LLDerivation, context: tuple, finish, target) -> LLDerivation:
    """Invert the !-like ``context`` down to !-formulas, ``finish``, then rebuild.

    ``target(seq)`` gives the conclusion ``finish`` would produce from ``seq``,
    used for the 0 shortcut.
    """
    if LL_ZERO in context:
        return zero_l(target(d.conclusion))
    for f in context:
        if isinstance(f, OfCourse):
            continue
        rest = _take(context, f)
        if isinstance(f, Tensor):
            e = _promote(invert_tensor(d, f), rest + (f.left, f.right), finish, target)
            return make_ll("tensor_l", [e], f)
        if isinstance(f, Plus):
            left, right = invert_plus(d, f)
            return make_ll("plus_l", [_promote(left, rest + (f.left,), finish, target),
                                      _promote(right, rest + (f.right,), finish, target)], f)
        raise RuleError(f"promotion context: {show_ll(f)} is not !-like")
    return finish(d)


def _all_quest(xs):
    bad = [f for f in xs if not isinstance(f, WhyNot)]
    if bad:
        raise RuleError(f"right side not all ?-prefixed ({show_ll(bad[0])})")


def quest_left_t(d: LLDerivation, a) -> LLDerivation:
    """t(Γ), a |- ?t(Δ)  ⟹  t(Γ), ?a |- ?t(Δ)."""
    s = d.conclusion
    context = mremove(s.left, a)
    if context is None:
        raise RuleError(f"{show_ll(a)} does not occur on the left")
    _all_quest(s.right)
    qa = WhyNot(a)
    return _promote(d, context, lambda e: make_ll("quest_l", [e], qa),
                    lambda seq: _with_left(seq, [a], [qa]))


def bang_right_t(d: LLDerivation, a) -> LLDerivation:
    """t(Γ) |- ?t(Δ), a  ⟹  t(Γ) |- ?t(Δ), !a."""
    s = d.conclusion
    rest = mremove(s.right, a)
    if rest is None:
        raise RuleError(f"{show_ll(a)} does not occur on the right")
    _all_quest(rest)
    ba = OfCourse(a)
    return _promote(d, s.left, lambda e: make_ll("bang_r", [e], ba),
                    lambda seq: LLSequent(seq.left, _take(seq.right, a) + (ba,)))


# ---------------------------------------------------------------- derivations


def translate_sequent(s, policy: PPolicy) -> LLSequent:
    """t(Γ) |- ?t(Δ), t(Π) for the P-sequent Γ |- Δ ; Π."""
    right = [WhyNot(t_translate(f, policy)) for f in s.body]
    if s.stoup is not None:
        right.append(t_translate(s.stoup, policy))
    return LLSequent(tuple(t_translate(f, policy) for f in s.ante), tuple(right))


def translate_derivation(d: Derivation, policy: PPolicy) -> LLDerivation:
    """LL derivation of the translated conclusion; raises ProofError on invalid input."""
    out = _translate(annotate(d, policy), policy, {})
    assert out.conclusion == translate_sequent(d.conclusion, policy)
    return out


def _translate(d: Derivation, policy: PPolicy, memo: dict) -> LLDerivation:
    done = memo.get(id(d))
    if done is None:
        done = memo[id(d)] = _translate_node(d, policy, memo)
    return done


def _translate_node(d: Derivation, policy: PPolicy, memo: dict) -> LLDerivation:
    t = lambda f: t_translate(f, policy)  # noqa: E731
    inP = lambda f: p_member(policy, f)  # noqa: E731
    rule, a = d.rule, d.principal
    if rule in ("zero", "bot"):
        return zero_l(translate_sequent(d.conclusion, policy))
    if rule == "ax":
        return ll_ax(t(a))
    ps = [_translate(p, policy, memo) for p in d.premises]

    if rule == "cut1":
        return make_ll("ll_cut", [ps[1], ps[0]], t(a))
    if rule == "cut2":
        right = quest_left_t(ps[1], t(a))
        return make_ll("ll_cut", [right, ps[0]], WhyNot(t(a)))
    if rule == "der":
        return make_ll("quest_r", ps, WhyNot(t(a)))
    if rule == "c_r":
        return make_ll("quest_c", ps, WhyNot(t(a)))
    if rule == "w_r":
        return make_ll("quest_w", ps, WhyNot(t(a)))
    if rule == "c_l":
        return contract_t(ps[0], a, policy)
    if rule == "w_l":
        return weaken_t(ps[0], a, policy)

    A, B = a.left, a.right

    def left_component(p, comp):
        # t(C) on the left becomes !b(C): promote ? first when C ∈ P
        if inP(comp):
            p = quest_left_t(p, t(comp))
        return make_ll("bang_l", [p], OfCourse(b_translate(comp, policy)))

    def right_component(p, comp, in_stoup):
        if in_stoup and inP(comp):
            p = make_ll("quest_r", [p], WhyNot(t(comp)))
        return bang_right_t(p, b_translate(comp, policy))

    ta = t(a)
    if rule in ("and1_l", "and2_l"):
        p = left_component(left_component(ps[0], A), B)
        return make_ll("tensor_l", [p], ta)
    if rule in ("or1_l", "or2_l"):
        return make_ll("plus_l", [left_component(ps[0], A), left_component(ps[1], B)], ta)
    if rule in ("imp1_l", "imp2_l"):
        left = ps[0]
        if inP(B):
            left = quest_left_t(left, t(B))
        lolli = make_ll("lolli_l", [left, ps[1]], ta.body)
        return make_ll("bang_l", [lolli], ta)
    if rule == "imp3_l":
        left = ps[0]
        if inP(B):
            left = quest_left_t(left, t(B))
        lolli = make_ll("lolli_l", [left, ll_ax(t(A))], ta.body)
        derelict = make_ll("bang_l", [lolli], ta)
        promoted = quest_left_t(derelict, t(A))
        return make_ll("ll_cut", [promoted, ps[1]], WhyNot(t(A)))
    if rule.startswith("and") and rule.endswith("_r"):
        left = right_component(ps[0], A, rule in ("and1_r", "and3_r"))
        right = right_component(ps[1], B, rule in ("and1_r", "and4_r"))
        return make_ll("tensor_r", [left, right], ta)
    if rule.startswith("or") and rule.endswith("_r"):
        comp = A if rule in ("or1_r", "or3_r") else B
        p = right_component(ps[0], comp, rule in ("or1_r", "or2_r"))
        return make_ll("plus_r1" if rule in ("or1_r", "or3_r") else "plus_r2", [p], ta)
    if rule in ("imp1_r", "imp2_r"):
        p = ps[0]
        if rule == "imp1_r" and inP(B):
            p = make_ll("quest_r", [p], WhyNot(t(B)))
        p = make_ll("lolli_r", [p], ta.body)
        return bang_right_t(p, ta.body)
    raise RuleError(f"no translation for {rule}")  # pragma: no cover


# ---------------------------------------------------------------- proof files


def ll_from_node(node) -> LLDerivation:
    if node.tag not in LL_RULES:
        raise ValueError(f"unknown LL rule tag {node.tag!r}")
    principal = parse_ll(node.principal) if node.principal is not None else None
    return LLDerivation(parse_ll_sequent(node.sequent), node.tag,
                        tuple(ll_from_node(c) for c in node.children), principal)


def read_ll(text: str) -> LLDerivation:
    from .sexpr import read_tree

    return ll_from_node(read_tree(text))


def write_ll(d: LLDerivation) -> str:
    from .sexpr import Node, write_tree

    def node(e):
        principal = show_ll(e.principal) if e.principal is not None else None
        return Node(e.rule, str(e.conclusion), principal, [node(p) for p in e.premises])

    return write_tree(node(d)) + "\n"
