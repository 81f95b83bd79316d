"""P-sequents, rule-labelled derivations and the derivation checker.

A P-sequent ``G |- D ; S`` has an antecedent multiset ``G``, a body multiset ``D``
(every member must belong to P) and a stoup ``S`` holding at most one formula.
Multisets are stored as tuples sorted by printed form, so structural equality of
sequents is multiset equality.

Rule instances are computed *forward*: given the premises' conclusions and the
principal formula, :func:`build` returns the conclusion the schema prescribes (or
raises :class:`RuleError`).  Checking a node is then a matter of finding a principal
formula for which the forward conclusion equals the recorded one.  Every side
condition on P is enforced.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .formula import (
    BOT,
    ZERO,
    And,
    Bot,
    Formula,
    Imp,
    Or,
    PPolicy,
    p_member,
    parse_formula,
    show,
    sort_key,
)

RULES = {
    "ax": 0, "zero": 0, "bot": 0,
    "cut1": 2, "cut2": 2,
    "der": 1, "c_l": 1, "c_r": 1, "w_l": 1, "w_r": 1,
    "and1_l": 1, "and2_l": 1,
    "and1_r": 2, "and2_r": 2, "and3_r": 2, "and4_r": 2,
    "or1_l": 2, "or2_l": 2,
    "or1_r": 1, "or2_r": 1, "or3_r": 1, "or4_r": 1,
    "imp1_l": 2, "imp2_l": 2, "imp3_l": 2,
    "imp1_r": 1, "imp2_r": 1,
}

LEFT_LOGICAL = ("and1_l", "and2_l", "or1_l", "or2_l", "imp1_l", "imp2_l", "imp3_l")
RIGHT_LOGICAL = ("and1_r", "and2_r", "and3_r", "and4_r",
                 "or1_r", "or2_r", "or3_r", "or4_r", "imp1_r", "imp2_r")
CUTS = ("cut1", "cut2")

_CONNECTIVE = {"and": And, "or": Or, "imp": Imp}


class RuleError(ValueError):
    """A node is not an instance of its rule schema."""


class ProofError(ValueError):
    """A derivation failed checking; ``failures`` holds (path, message) pairs."""

    def __init__(self, failures):
        self.failures = list(failures)
        lines = "; ".join(f"{format_path(p)}: {m}" for p, m in self.failures[:5])
        super().__init__(f"invalid derivation: {lines}")


def msort(items) -> tuple:
    return tuple(sorted(items, key=sort_key))


def madd(xs: tuple, *items) -> tuple:
    return msort(xs + tuple(items))


def mremove(xs: tuple, *items) -> Optional[tuple]:
    """``xs`` minus one occurrence of each item, or None if some item is missing."""
    out = list(xs)
    for it in items:
        try:
            out.remove(it)
        except ValueError:
            return None
    return tuple(out)


def _need(xs, *items):
    rest = mremove(xs, *items)
    if rest is None:
        raise RuleError("missing " + ", ".join(show(i) for i in items))
    return rest


@dataclass(frozen=True)
class PSequent:
    ante: tuple = ()
    body: tuple = ()
    stoup: Optional[Formula] = None

    def __post_init__(self):
        object.__setattr__(self, "ante", msort(self.ante))
        object.__setattr__(self, "body", msort(self.body))

    def __str__(self):
        return format_sequent(self)

    def formulas(self):
        yield from self.ante
        yield from self.body
        if self.stoup is not None:
            yield self.stoup


def format_sequent(s: PSequent) -> str:
    left = ", ".join(map(show, s.ante))
    body = ", ".join(map(show, s.body))
    out = (left + " |- " if left else "|- ") + (body + " ; " if body else "; ")
    if s.stoup is not None:
        out += show(s.stoup)
    return out.rstrip()


def _split_list(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_formula(part.strip()) for part in text.split(","))


def parse_sequent(text: str) -> PSequent:
    if text.count("|-") != 1:
        raise ValueError(f"sequent needs exactly one '|-': {text!r}")
    left, right = text.split("|-")
    if right.count(";") != 1:
        raise ValueError(f"P-sequent needs exactly one ';': {text!r}")
    body, stoup = right.split(";")
    st = _split_list(stoup)
    if len(st) > 1:
        raise ValueError(f"stoup holds at most one formula: {text!r}")
    return PSequent(_split_list(left), _split_list(body), st[0] if st else None)


@dataclass(frozen=True)
class Derivation:
    conclusion: PSequent
    rule: str
    premises: tuple = ()
    principal: Optional[Formula] = field(default=None, compare=True)

    def __post_init__(self):
        if self.rule not in RULES:
            raise ValueError(f"unknown rule tag {self.rule!r}")
        object.__setattr__(self, "premises", tuple(self.premises))


@dataclass
class CheckReport:
    ok: bool
    failures: list

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(f"{format_path(p)}: {m}" for p, m in self.failures)


def format_path(path) -> str:
    return "root" if not path else "root/" + "/".join(map(str, path))


def conclusion(d) -> PSequent:
    return d.conclusion


def walk(d, path=()) -> Iterator:
    """Pre-order (path, node) pairs; paths are tuples of premise indices."""
    yield path, d
    for i, p in enumerate(d.premises):
        yield from walk(p, path + (i,))


def walk_shared(d) -> Iterator:
    """Like :func:`walk`, but visits a subtree object shared by several parents once.

    Proof transformations reuse premises freely, so a derivation is really a DAG
    whose unfolding can be exponentially larger than its node count.
    """
    seen = set()
    stack = [((), d)]
    while stack:
        path, node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        yield path, node
        for i in reversed(range(len(node.premises))):
            stack.append((path + (i,), node.premises[i]))


def subtree(d, path):
    for i in path:
        d = d.premises[i]
    return d


def replace_at(d, path, new):
    if not path:
        return new
    i = path[0]
    prem = list(d.premises)
    prem[i] = replace_at(prem[i], path[1:], new)
    return type(d)(d.conclusion, d.rule, tuple(prem), d.principal)


def is_cut_free(d: Derivation) -> bool:
    return all(n.rule not in CUTS for _, n in walk_shared(d))


def size(d) -> int:
    return sum(1 for _ in walk(d))


# ---------------------------------------------------------------- rule schemas


def _outside(policy, *fs):
    bad = [f for f in fs if p_member(policy, f)]
    if bad:
        raise RuleError("A ∉ P and B ∉ P violated (" + ", ".join(show(f) + " ∈ P" for f in bad) + ")")


def _stoup_full(s: PSequent):
    if s.stoup is None:
        raise RuleError("stoup must be occupied")
    return s.stoup


def _stoup_empty(s: PSequent):
    if s.stoup is not None:
        raise RuleError("stoup must be empty")


def _stoup_is(s: PSequent, a):
    if s.stoup != a:
        raise RuleError(f"expected stoup {show(a)}")


def build(rule: str, prem, a: Formula, policy: PPolicy) -> PSequent:
    """Conclusion of ``rule`` applied to premise sequents ``prem`` with principal ``a``.

    ``zero`` has no forward form (its contexts are arbitrary) and is rejected here.
    """
    if len(prem) != RULES[rule]:
        raise RuleError(f"{rule} takes {RULES[rule]} premises, got {len(prem)}")
    if rule == "ax":
        return PSequent((a,), (), a)
    if rule == "bot":
        if not isinstance(a, Bot):
            raise RuleError("bot rule needs principal bot")
        return PSequent((BOT,), (), None)
    if rule == "zero":
        raise RuleError("zero has no forward form")
    if rule == "cut1":
        left, right = prem
        _stoup_is(left, a)
        return PSequent(left.ante + _need(right.ante, a), left.body + right.body, right.stoup)
    if rule == "cut2":
        left, right = prem
        _stoup_empty(right)
        return PSequent(left.ante + _need(right.ante, a),
                        _need(left.body, a) + right.body, left.stoup)
    if rule == "der":
        (p,) = prem
        _stoup_is(p, a)
        if not p_member(policy, a):
            raise RuleError(f"A ∈ P violated ({show(a)} ∉ P)")
        return PSequent(p.ante, p.body + (a,), None)
    if rule in ("c_l", "c_r", "w_l", "w_r"):
        (p,) = prem
        if rule == "c_l":
            return PSequent(_need(p.ante, a, a) + (a,), p.body, p.stoup)
        if rule == "c_r":
            return PSequent(p.ante, _need(p.body, a, a) + (a,), p.stoup)
        if rule == "w_l":
            return PSequent(p.ante + (a,), p.body, p.stoup)
        if not p_member(policy, a):
            raise RuleError(f"A ∈ P violated ({show(a)} ∉ P)")
        return PSequent(p.ante, p.body + (a,), p.stoup)

    kind = rule[: rule.index("_") - 1]
    if not isinstance(a, _CONNECTIVE[kind]):
        raise RuleError(f"{rule} needs a principal formula built with {kind}")
    A, B = a.left, a.right

    if rule == "and1_l":
        (p,) = prem
        _outside(policy, A, B)
        c = _stoup_full(p)
        return PSequent(_need(p.ante, A, B) + (a,), p.body, c)
    if rule == "and2_l":
        (p,) = prem
        _stoup_empty(p)
        return PSequent(_need(p.ante, A, B) + (a,), p.body, None)
    if rule.startswith("and") and rule.endswith("_r"):
        left, right = prem
        lbody, rbody = left.body, right.body
        if rule in ("and1_r", "and3_r"):
            _stoup_is(left, A)
        else:
            _stoup_empty(left)
            lbody = _need(lbody, A)
        if rule in ("and1_r", "and4_r"):
            _stoup_is(right, B)
        else:
            _stoup_empty(right)
            rbody = _need(rbody, B)
        return PSequent(left.ante + right.ante, lbody + rbody, a)
    if rule in ("or1_l", "or2_l"):
        left, right = prem
        if rule == "or1_l":
            _outside(policy, A, B)
            _stoup_full(left)
        else:
            _stoup_empty(left)
        if left.stoup != right.stoup:
            raise RuleError("or-left premises must share the stoup")
        gl, gr = _need(left.ante, A), _need(right.ante, B)
        if msort(gl) != msort(gr) or left.body != right.body:
            raise RuleError("or-left premises must share their contexts")
        return PSequent(gl + (a,), left.body, left.stoup)
    if rule.startswith("or"):
        (p,) = prem
        target = A if rule in ("or1_r", "or3_r") else B
        if rule in ("or1_r", "or2_r"):
            _stoup_is(p, target)
            return PSequent(p.ante, p.body, a)
        _stoup_empty(p)
        return PSequent(p.ante, _need(p.body, target), a)
    if rule in ("imp1_l", "imp2_l", "imp3_l"):
        left, right = prem
        gl = _need(left.ante, B)
        if rule == "imp1_l":
            _outside_b(policy, B)
            c = _stoup_full(left)
            _stoup_is(right, A)
            return PSequent(gl + right.ante + (a,), left.body + right.body, c)
        _stoup_empty(left)
        if rule == "imp2_l":
            _stoup_is(right, A)
            return PSequent(gl + right.ante + (a,), left.body + right.body, None)
        return PSequent(gl + right.ante + (a,), left.body + _need(right.body, A), right.stoup)
    if rule == "imp1_r":
        (p,) = prem
        _stoup_is(p, B)
        return PSequent(_need(p.ante, A), p.body, a)
    if rule == "imp2_r":
        (p,) = prem
        _stoup_empty(p)
        return PSequent(_need(p.ante, A), _need(p.body, B), a)
    raise RuleError(f"unknown rule {rule}")  # pragma: no cover


def _outside_b(policy, b):
    if p_member(policy, b):
        raise RuleError(f"B ∉ P violated ({show(b)} ∈ P)")


def candidates(d: Derivation) -> list:
    """Principal formulas worth trying when a node carries no annotation."""
    s, rule, prem = d.conclusion, d.rule, d.premises
    if d.principal is not None:
        return [d.principal]
    if rule in ("ax",) or rule in RIGHT_LOGICAL:
        return [s.stoup] if s.stoup is not None else []
    if rule == "bot":
        return [BOT]
    if rule == "zero":
        return [ZERO]
    if rule == "cut1":
        return [prem[0].conclusion.stoup] if prem and prem[0].conclusion.stoup is not None else []
    if rule == "cut2":
        if len(prem) != 2:
            return []
        right = set(prem[1].conclusion.ante)
        return _distinct(f for f in prem[0].conclusion.body if f in right)
    if rule == "der":
        return [prem[0].conclusion.stoup] if prem and prem[0].conclusion.stoup is not None else []
    if rule in ("c_l", "w_l"):
        return _distinct(s.ante)
    if rule in ("c_r", "w_r"):
        return _distinct(s.body)
    conn = _CONNECTIVE[rule[: rule.index("_") - 1]]
    return _distinct(f for f in s.ante if isinstance(f, conn))


def _distinct(fs) -> list:
    seen, out = set(), []
    for f in fs:
        if f not in seen:
            seen.add(f)
            out.append(f)
    return out


def match_node(d: Derivation, policy: PPolicy):
    """Return the principal formula under which ``d`` is a correct instance.

    Raises :class:`RuleError` describing the first failed attempt otherwise.
    Only the node itself is examined, not its premises.
    """
    s = d.conclusion
    if len(d.premises) != RULES[d.rule]:
        raise RuleError(f"{d.rule} takes {RULES[d.rule]} premises, got {len(d.premises)}")
    if d.rule == "zero":
        if d.principal not in (None, ZERO) or ZERO not in s.ante:
            raise RuleError("zero rule needs 0 in the antecedent")
        bad = [f for f in s.body if not p_member(policy, f)]
        if bad:
            raise RuleError("Δ ⊆ P violated")
        return ZERO
    cands = candidates(d)
    if not cands:
        raise RuleError(f"no candidate principal formula for {d.rule}")
    first = None
    prem = [p.conclusion for p in d.premises]
    for a in cands:
        try:
            got = build(d.rule, prem, a, policy)
        except RuleError as e:
            first = first or str(e)
            continue
        if got == s:
            return a
        first = first or f"conclusion mismatch: schema gives {got}"
    raise RuleError(first)


def check_derivation(d: Derivation, policy: PPolicy) -> CheckReport:
    failures = []
    for path, node in walk_shared(d):
        bad = [f for f in node.conclusion.body if not p_member(policy, f)]
        for f in bad:
            failures.append((path, f"body formula {show(f)} ∉ P"))
        try:
            match_node(node, policy)
        except RuleError as e:
            failures.append((path, str(e)))
    return CheckReport(not failures, failures)


def annotate(d: Derivation, policy: PPolicy) -> Derivation:
    """Copy of ``d`` with every principal filled in; raises ProofError if invalid."""
    report = check_derivation(d, policy)
    if not report.ok:
        raise ProofError(report.failures)
    return _annotate(d, policy, {})


def _annotate(d, policy, memo):
    done = memo.get(id(d))
    if done is None:
        prem = tuple(_annotate(p, policy, memo) for p in d.premises)
        done = memo[id(d)] = Derivation(d.conclusion, d.rule, prem, match_node(d, policy))
    return done


# ---------------------------------------------------------------- construction


def make(rule: str, premises, principal: Formula, policy: PPolicy) -> Derivation:
    """Forward-build a node, computing its conclusion from the premises."""
    concl = build(rule, [p.conclusion for p in premises], principal, policy)
    for f in concl.body:
        if not p_member(policy, f):
            raise RuleError(f"body formula {show(f)} ∉ P")
    return Derivation(concl, rule, tuple(premises), principal)


def zero_node(s: PSequent) -> Derivation:
    return Derivation(s, "zero", (), ZERO)


def fit(d: Derivation, target: PSequent, policy: PPolicy) -> Derivation:
    """Extend ``d`` with contractions and weakenings until it concludes ``target``.

    Surplus copies are contracted (so at least one copy must remain in the
    target) and missing ones weakened in.  The stoups must already agree.
    """
    s = d.conclusion
    if s.stoup != target.stoup:
        raise RuleError(f"cannot fit {s} to {target}: stoups differ")
    for side, contract, weaken in (("ante", "c_l", "w_l"), ("body", "c_r", "w_r")):
        have = Counter(getattr(d.conclusion, side))
        want = Counter(getattr(target, side))
        for f in sorted(set(have) | set(want), key=sort_key):
            h, w = have[f], want[f]
            if h > w and w == 0:
                raise RuleError(f"cannot fit {s} to {target}: {show(f)} cannot be erased")
            for _ in range(h - w):
                d = make(contract, [d], f, policy)
            for _ in range(w - h):
                d = make(weaken, [d], f, policy)
    assert d.conclusion == target
    return d


# ---------------------------------------------------------------- proof files


def from_node(node) -> Derivation:
    if node.tag not in RULES:
        raise ValueError(f"unknown ML_P rule tag {node.tag!r}")
    principal = parse_formula(node.principal) if node.principal is not None else None
    return Derivation(parse_sequent(node.sequent), node.tag,
                      tuple(from_node(c) for c in node.children), principal)


def to_node(d: Derivation):
    from .sexpr import Node

    principal = show(d.principal) if d.principal is not None else None
    return Node(d.rule, format_sequent(d.conclusion), principal, [to_node(p) for p in d.premises])


def read_derivation(text: str) -> Derivation:
    from .sexpr import read_tree

    return from_node(read_tree(text))


def write_derivation(d: Derivation) -> str:
    from .sexpr import write_tree

    return write_tree(to_node(d)) + "\n"
