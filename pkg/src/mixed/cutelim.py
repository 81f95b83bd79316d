"""Cut elimination for the mixed calculus.

Every cut carries a degree ``(l, k)``: ``l`` is the symbol count of the cut formula
and ``k`` classifies the cut

* ``k = 3`` for ``cut2``;
* ``k = 0`` for ``cut1`` when the cut formula is principal in the last logical rule
  of both premises;
* ``k = 1`` when it is principal on the left only;
* ``k = 2`` otherwise (the left premise's stoup formula is not logically principal).

A derivation's degree is the multiset of its cut degrees, compared with the
Dershowitz-Manna extension of the lexicographic order.  :func:`normalize` always
reduces the leftmost topmost cut (both premises cut-free):

* ``k = 0`` is a key case and becomes cuts on the immediate subformulas;
* ``k = 1`` pushes the left premise up the right premise along the traced
  antecedent copies of the cut formula, cutting again where they become principal;
* ``k = 2`` pushes the right premise up the left premise along the stoup;
* ``k = 3`` pushes the right premise up the left premise along the traced body
  copies, turning every ``der`` that introduced one into a ``cut1``.

Tracing duplicates the carried premise at every contraction of a traced copy and
drops it at weakenings, so contexts are finally readjusted with :func:`fit`.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from functools import total_ordering
from typing import Callable, Optional

from .calculus import (
    CUTS,
    LEFT_LOGICAL,
    RIGHT_LOGICAL,
    Derivation,
    PSequent,
    ProofError,
    RuleError,
    annotate,
    check_derivation,
    fit,
    is_cut_free,
    make,
    match_node,
    mremove,
    replace_at,
    subtree,
    walk,
    walk_shared,
    zero_node,
)
from .formula import ZERO, And, BotOnly, All, Imp, Or, PPolicy, length, subformula_closure

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**6


def _pairs(rights, lefts) -> frozenset:
    return frozenset((r, l) for r in rights for l in lefts)


# (left premise rule, right premise rule) combinations that can meet in a key case
KEY_PAIRS = (_pairs(("and1_r", "and2_r", "and3_r", "and4_r"), ("and1_l", "and2_l"))
             | _pairs(("or1_r", "or2_r", "or3_r", "or4_r"), ("or1_l", "or2_l"))
             | _pairs(("imp1_r", "imp2_r"), ("imp1_l", "imp2_l", "imp3_l")))


class NormalizationBudgetExceeded(RuntimeError):
    pass


@total_ordering
@dataclass(frozen=True)
class Degree:
    l: int
    k: int

    def __lt__(self, other):
        return (self.l, self.k) < (other.l, other.k)

    def __str__(self):
        return f"({self.l},{self.k})"


def _principal(node: Derivation):
    if node.principal is not None:
        return node.principal
    # unannotated input: any policy admitting the node identifies the same principal
    for pol in (BotOnly(), All()):
        try:
            return match_node(node, pol)
        except RuleError:
            continue
    return None


def _degree(node: Derivation) -> Degree:
    a = _principal(node)
    if a is None:
        raise ValueError("cannot determine the cut formula")
    if node.rule == "cut2":
        return Degree(length(a), 3)
    left, right = node.premises
    on_left = left.rule in RIGHT_LOGICAL
    on_right = right.rule in LEFT_LOGICAL and _principal(right) == a
    return Degree(length(a), 0 if on_left and on_right else 1 if on_left else 2)


def cut_degree(d: Derivation, path) -> Degree:
    node = subtree(d, tuple(path))
    if node.rule not in CUTS:
        raise ValueError(f"no cut at path {tuple(path)} (rule {node.rule})")
    return _degree(node)


def derivation_degree(d: Derivation) -> list:
    """Sorted list standing for the multiset of cut degrees."""
    return sorted(_degree(n) for _, n in walk(d) if n.rule in CUTS)


def multiset_greater(m, n) -> bool:
    """Dershowitz-Manna: ``m > n`` iff they differ and every element ``n`` gains is
    dominated by some element ``m`` loses."""
    cm, cn = Counter(m), Counter(n)
    if cm == cn:
        return False
    lost, gained = cm - cn, cn - cm
    return all(any(x > y for x in lost) for y in gained)


# ---------------------------------------------------------------- helpers


def _cut(left: Derivation, right: Derivation, x, policy, kind=None) -> Optional[Derivation]:
    """Cut ``x`` out of ``left``'s stoup (cut1) or body (cut2).

    When ``x`` sits in both, ``kind`` says which occurrence is meant; otherwise
    the stoup wins.
    """
    ls, rs = left.conclusion, right.conclusion
    if x not in rs.ante:
        return None
    if ls.stoup == x and kind != "cut2":
        return make("cut1", [left, right], x, policy)
    if x in ls.body and rs.stoup is None and kind != "cut1":
        return make("cut2", [left, right], x, policy)
    return None


def _cut_conclusion(rule, left, right, a) -> PSequent:
    ls, rs = left.conclusion, right.conclusion
    if rule == "cut1":
        return PSequent(ls.ante + mremove(rs.ante, a), ls.body + rs.body, rs.stoup)
    return PSequent(ls.ante + mremove(rs.ante, a), mremove(ls.body, a) + rs.body, ls.stoup)


# antecedent formulas each premise consumes, per rule and premise index
def _ante_actives(node: Derivation) -> list:
    r, p = node.rule, node.principal
    if r in ("cut1", "cut2"):
        return [[], [p]]
    if r == "c_l":
        return [[p, p]]
    if r in ("and1_l", "and2_l"):
        return [[p.left, p.right]]
    if r in ("or1_l", "or2_l"):
        return [[p.left], [p.right]]
    if r in ("imp1_l", "imp2_l", "imp3_l"):
        return [[p.right], []]
    if r in ("imp1_r", "imp2_r"):
        return [[p.left]]
    return [[] for _ in node.premises]


def _body_actives(node: Derivation) -> list:
    r, p = node.rule, node.principal
    if r == "cut2":
        return [[p], []]
    if r == "c_r":
        return [[p, p]]
    if r == "and2_r":
        return [[p.left], [p.right]]
    if r == "and3_r":
        return [[], [p.right]]
    if r == "and4_r":
        return [[p.left], []]
    if r == "or3_r":
        return [[p.left]]
    if r == "or4_r":
        return [[p.right]]
    if r == "imp3_l":
        return [[], [p.left]]
    if r == "imp2_r":
        return [[p.right]]
    return [[] for _ in node.premises]


def _distribute(node, side, actives, a, m) -> list:
    """Share ``m`` traced context copies of ``a`` among the premises."""
    counts = [getattr(q.conclusion, side).count(a) - act.count(a)
              for q, act in zip(node.premises, actives)]
    if node.rule in ("or1_l", "or2_l"):
        # additive: both premises carry the whole context
        assert all(c >= m for c in counts), "traced copy missing from a premise"
        return [m, m]
    out = []
    for c in counts:
        t = min(m, c)
        out.append(t)
        m -= t
    assert m == 0, f"{node.rule}: traced copies unaccounted for"
    return out


# ---------------------------------------------------------------- k = 1


def push_left(L: Derivation, R: Derivation, a, n: int, policy) -> Derivation:
    """Cut ``L`` (stoup ``a``) against ``n`` antecedent copies of ``a`` in ``R``.

    Result concludes ``ante(R) - n*a + ante(L) |- body(R) + body(L) ; stoup(R)``.
    """
    if n == 0:
        return R
    s = R.conclusion
    target = PSequent(mremove(s.ante, *[a] * n) + L.conclusion.ante,
                      s.body + L.conclusion.body, s.stoup)
    rule, p = R.rule, R.principal
    if rule == "ax":
        assert n == 1
        return L
    if rule == "zero":
        assert ZERO in target.ante
        return zero_node(target)
    assert rule != "bot", "bot cannot meet a logically introduced cut formula"

    hit = p == a and (rule in LEFT_LOGICAL or rule in ("c_l", "w_l"))
    actives = _ante_actives(R)
    shares = _distribute(R, "ante", actives, a, n - hit)
    if hit and rule == "c_l":
        shares[0] += 2
    prem = [push_left(L, q, a, t, policy) for q, t in zip(R.premises, shares)]
    if hit and rule in ("c_l", "w_l"):
        node = prem[0]
    else:
        node = make(rule, prem, p, policy)
        if hit:
            node = make("cut1", [L, node], a, policy)
    return fit(node, target, policy)


# ---------------------------------------------------------------- k = 2

_STOUP_PREMISE = {
    "c_l": (0,), "c_r": (0,), "w_l": (0,), "w_r": (0,),
    "and1_l": (0,), "imp1_l": (0,), "or1_l": (0, 1),
    "imp3_l": (1,), "cut1": (1,), "cut2": (0,),
}
_EMPTY_STOUP_FORM = {"and1_l": "and2_l", "or1_l": "or2_l", "imp1_l": "imp2_l"}


def push_stoup(L: Derivation, R: Derivation, a, policy) -> Derivation:
    """Cut ``L`` against ``R`` by carrying ``R`` up the stoup path of ``L``."""
    s = L.conclusion
    assert s.stoup == a
    target = PSequent(s.ante + mremove(R.conclusion.ante, a),
                      s.body + R.conclusion.body, R.conclusion.stoup)
    rule = L.rule
    if rule == "ax":
        return R
    if rule == "zero":
        return zero_node(target)
    if rule in RIGHT_LOGICAL:
        return make("cut1", [L, R], a, policy)
    prem = list(L.premises)
    for i in _STOUP_PREMISE[rule]:
        prem[i] = push_stoup(prem[i], R, a, policy)
    if R.conclusion.stoup is None:
        rule = _EMPTY_STOUP_FORM.get(rule, rule)
    return fit(make(rule, prem, L.principal, policy), target, policy)


# ---------------------------------------------------------------- k = 3


def push_body(L: Derivation, R: Derivation, a, n: int, policy) -> Derivation:
    """Eliminate ``n`` traced body copies of ``a`` in ``L`` against ``R`` (empty stoup)."""
    if n == 0:
        return L
    s = L.conclusion
    target = PSequent(s.ante + mremove(R.conclusion.ante, a),
                      mremove(s.body, *[a] * n) + R.conclusion.body, s.stoup)
    rule, p = L.rule, L.principal
    if rule == "zero":
        return zero_node(target)
    hit = p == a and rule in ("der", "w_r", "c_r")
    shares = _distribute(L, "body", _body_actives(L), a, n - hit)
    if hit and rule == "c_r":
        shares[0] += 2
    prem = [push_body(q, R, a, t, policy) for q, t in zip(L.premises, shares)]
    if hit and rule in ("w_r", "c_r"):
        node = prem[0]
    elif hit:
        node = make("cut1", [prem[0], R], a, policy)
    else:
        node = make(rule, prem, p, policy)
    return fit(node, target, policy)


# ---------------------------------------------------------------- k = 0


def key_case(L: Derivation, R: Derivation, a, policy) -> Derivation:
    if (L.rule, R.rule) not in KEY_PAIRS:
        raise ValueError(f"not a key case: ({L.rule}, {R.rule})")
    target = _cut_conclusion("cut1", L, R, a)
    A, B = a.left, a.right
    plans = []
    if isinstance(a, And):
        (r0,) = R.premises
        l0, l1 = L.premises

        def plan(order):
            cur = r0
            for x, lx in order:
                cur = cur and _cut(lx, cur, x, policy)
            return cur

        plans = [lambda: plan([(A, l0), (B, l1)]), lambda: plan([(B, l1), (A, l0)])]
    elif isinstance(a, Or):
        (l0,) = L.premises
        x, branch = (A, R.premises[0]) if L.rule in ("or1_r", "or3_r") else (B, R.premises[1])
        plans = [lambda: _cut(l0, branch, x, policy)]
    elif isinstance(a, Imp):
        (l0,) = L.premises
        r0, r1 = R.premises

        def a_first():
            # imp3_l holds A in the body of its right premise
            cur = _cut(r1, l0, A, policy, "cut2" if R.rule == "imp3_l" else "cut1")
            return cur and _cut(cur, r0, B, policy)

        def b_first():
            cur = _cut(l0, r0, B, policy)
            return cur and _cut(r1, cur, A, policy, "cut2" if R.rule == "imp3_l" else "cut1")

        plans = [a_first, b_first]
    for attempt in plans:
        try:
            out = attempt()
        except RuleError:
            continue
        if out is not None:
            return fit(out, target, policy)
    raise AssertionError(f"unreachable key case ({L.rule}, {R.rule})")


# ---------------------------------------------------------------- driver


def reduce_cut(node: Derivation, policy: PPolicy) -> Derivation:
    """Replace a topmost cut (annotated, cut-free premises) by smaller cuts."""
    L, R = node.premises
    a = node.principal
    if node.rule == "cut2":
        out = push_body(L, R, a, 1, policy)
    else:
        k = _degree(node).k
        if k == 0:
            out = key_case(L, R, a, policy)
        elif k == 1:
            out = push_left(L, R, a, 1, policy)
        else:
            out = push_stoup(L, R, a, policy)
    assert out.conclusion == node.conclusion, (node.conclusion, out.conclusion)
    return out


def topmost_cut(d: Derivation):
    """Path of the leftmost cut whose premises are cut-free, or None."""

    def visit(node, path):
        # returns (contains_cut, first topmost path)
        found, has = None, False
        for i, p in enumerate(node.premises):
            h, f = visit(p, path + (i,))
            has |= h
            if found is None:
                found = f
        if node.rule in CUTS:
            if not has:
                return True, path
            return True, found
        return has, found

    return visit(d, ())[1]


def reduce_once(d: Derivation, policy: PPolicy) -> Derivation:
    d = annotate(d, policy)
    path = topmost_cut(d)
    if path is None:
        raise ValueError("derivation has no cut")
    return replace_at(d, path, reduce_cut(subtree(d, path), policy))


def normalize(d: Derivation, policy: PPolicy, max_steps: int = DEFAULT_BUDGET,
              trace: Optional[Callable] = None) -> Derivation:
    """Cut-free derivation of the same conclusion.

    ``trace`` (if given) is called as ``trace(path, degree_before, degree_after)``
    after every reduction.
    """
    d = annotate(d, policy)
    steps = 0
    while True:
        path = topmost_cut(d)
        if path is None:
            return d
        steps += 1
        if steps > max_steps:
            raise NormalizationBudgetExceeded(f"no normal form after {max_steps} reductions")
        before = derivation_degree(d) if trace else None
        d = replace_at(d, path, reduce_cut(subtree(d, path), policy))
        if trace:
            trace(path, before, derivation_degree(d))


# ---------------------------------------------------------------- corollaries


def verify_subformula_property(d: Derivation) -> bool:
    if not is_cut_free(d):
        raise ValueError("subformula check needs a cut-free derivation")
    allowed = subformula_closure(d.conclusion.formulas())
    return all(f in allowed for _, n in walk_shared(d) for f in n.conclusion.formulas())


@dataclass(frozen=True)
class Witness:
    derivation: Derivation


class StoupLeft(Witness):
    pass


class StoupRight(Witness):
    pass


class BodyLeft(Witness):
    pass


class BodyRight(Witness):
    pass


_WITNESS = {"or1_r": StoupLeft, "or2_r": StoupRight, "or3_r": BodyLeft, "or4_r": BodyRight}


def disjunction_witness(d: Derivation, policy: PPolicy) -> Witness:
    s = d.conclusion
    if s.ante or s.body or not isinstance(s.stoup, Or):
        raise ValueError(f"expected a conclusion |- ; A | B, got {s}")
    if not is_cut_free(d):
        raise ValueError("disjunction witness needs a cut-free derivation")
    report = check_derivation(d, policy)
    if not report.ok:
        raise ProofError(report.failures)
    if d.rule not in _WITNESS:  # pragma: no cover - excluded by the rule table
        raise AssertionError(f"cut-free proof of {s} ends with {d.rule}")
    return _WITNESS[d.rule](d.premises[0])
