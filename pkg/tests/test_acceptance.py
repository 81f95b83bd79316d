"""Acceptance gate: nine end-to-end criteria with runtime budgets.

Each criterion is a plain function returning a short summary and raising
AssertionError on failure.  Under pytest every criterion is one test and a
PASS/FAIL line per criterion is printed in the terminal summary; running this
file directly prints the same lines.
"""

import random
import sys
import time

import pytest

from mixed.calculus import RULES, PSequent, check_derivation, is_cut_free, walk
from mixed.corpus import cut_corpus, imp3_fixture, rule_fixtures
from mixed.cutelim import (StoupLeft, StoupRight, cut_degree, derivation_degree,
                           disjunction_witness, multiset_greater, normalize, reduce_once,
                           verify_subformula_property)
from mixed.embeddings import check_lj, check_lk, lj_to_mlp, lk_to_mlp, mlp_to_lj, mlp_to_lk
from mixed.formula import BOT, ZERO, All, BotOnly, ClassicalVars, Or, Var, p_member
from mixed.generators import TRANSFORMERS, random_lj_proofs, random_lk_proofs, transformer_case
from mixed.linear import (LL_ZERO, Lolli, OfCourse, Plus, Tensor, WhyNot, b_translate, check_ll,
                          ll_ax, t_translate, translate_derivation, translate_sequent)
from mixed.oracle import (LJSearch, MLPSearch, SearchConfig, classical_valid, formulas_up_to,
                          prove_bounded)

from conftest import drop_one_occurrence

RESULTS = {}

# Output of scripts/calibrate_depth.py over the agreement corpora: disagreements
# per search depth (LK side; the LJ side is exact from depth 4).  Depth 8 is the
# first exact one; the default keeps a margin above it.
LK_DISAGREEMENTS_BY_DEPTH = {4: 1905, 5: 1126, 6: 374, 7: 60, 8: 0, 12: 0}
CALIBRATED_DEPTH = 12


def budget(seconds):
    """Fail the criterion when it overruns ``seconds`` of wall time."""
    def wrap(fn):
        def run():
            start = time.perf_counter()
            summary = fn()
            elapsed = time.perf_counter() - start
            assert elapsed < seconds, f"took {elapsed:.1f}s, budget {seconds}s"
            return f"{summary} in {elapsed:.2f}s (budget {seconds}s)"
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


@budget(1)
def rule_coverage():
    """Fixture per rule tag checks; removing one root formula breaks each."""
    fixtures = rule_fixtures()
    assert len(fixtures) >= 27
    assert {fx.derivation.rule for fx in fixtures} == set(RULES)
    for fx in fixtures:
        assert check_derivation(fx.derivation, fx.policy).ok, fx.name
    broken = [fx.name for fx in fixtures
              if not check_derivation(drop_one_occurrence(fx.derivation), fx.policy).ok]
    assert len(broken) == len(fixtures), set(f.name for f in fixtures) - set(broken)
    return f"{len(fixtures)} fixtures over {len(RULES)} tags, {len(broken)} mutations rejected"


def _normal_forms():
    out = []
    for fx in cut_corpus():
        d, steps = fx.derivation, 0
        while not is_cut_free(d):
            nxt = reduce_once(d, fx.policy)
            assert multiset_greater(derivation_degree(d), derivation_degree(nxt)), fx.name
            d, steps = nxt, steps + 1
        out.append((fx, d, steps))
    return out


@budget(10)
def cut_elimination():
    """Corpus proofs with cuts normalize with strictly decreasing degree."""
    corpus = cut_corpus()
    classes = {cut_degree(fx.derivation, ()).k for fx in corpus}
    assert len(corpus) >= 30 and classes == {0, 1, 2, 3}
    forms = _normal_forms()
    for fx, d, _ in forms:
        assert is_cut_free(d), fx.name
        assert check_derivation(d, fx.policy).ok, fx.name
        assert d.conclusion == fx.derivation.conclusion, fx.name
    steps = sum(s for _, _, s in forms)
    return f"{len(corpus)} proofs (k classes {sorted(classes)}), {steps} reductions"


@budget(10)
def subformula_property():
    """Every normalized corpus proof mentions only subformulas of its conclusion."""
    forms = _normal_forms()
    for fx, d, _ in forms:
        assert verify_subformula_property(d), fx.name
    return f"{len(forms)} normal forms"


@budget(60)
def disjunction_property():
    """Provable A | B over p, q yields a provable stoup disjunct."""
    policy = BotOnly()
    parts = formulas_up_to([Var("p"), Var("q")], 5)
    assert not any(p_member(policy, f) for f in parts)
    search, cfg, found = MLPSearch(policy), SearchConfig(depth=10), 0
    for a in parts:
        for b in parts:
            d = prove_bounded(PSequent((), (), Or(a, b)), policy, cfg, search)
            if d is None:
                continue
            found += 1
            w = disjunction_witness(normalize(d, policy), policy)
            assert isinstance(w, (StoupLeft, StoupRight))
            goal = PSequent((), (), a if isinstance(w, StoupLeft) else b)
            assert w.derivation.conclusion == goal
            assert check_derivation(w.derivation, policy).ok
            assert prove_bounded(goal, policy, cfg, search) is not None
    return f"{len(parts) ** 2} disjunctions, {found} provable, all with stoup witnesses"


@budget(300)
def lk_agreement():
    """Bounded body derivability under ClassicalVars equals truth-table validity."""
    policy, cfg = ClassicalVars(), SearchConfig(depth=CALIBRATED_DEPTH)
    assert SearchConfig().depth == CALIBRATED_DEPTH
    search = MLPSearch(policy)
    fs = formulas_up_to([Var("x_c"), Var("y_c"), BOT], 7)
    wrong = [f for f in fs
             if (prove_bounded(PSequent((), (f,), None), policy, cfg, search) is not None)
             != classical_valid(f)]
    assert not wrong, f"{len(wrong)} disagreements, first {wrong[0]}"
    return f"{len(fs)} formulas at depth {cfg.depth}, 0 disagreements"


@budget(300)
def lj_agreement():
    """Bounded stoup derivability under BotOnly equals bounded LJ derivability."""
    policy, cfg = BotOnly(), SearchConfig(depth=CALIBRATED_DEPTH)
    mixed, lj = MLPSearch(policy), LJSearch()
    fs = formulas_up_to([Var("p"), Var("q"), ZERO], 7)
    wrong = [f for f in fs
             if mixed.prove(mixed.state_of(PSequent((), (), f)), cfg.depth)
             != lj.prove((frozenset(), f), cfg.depth)]
    assert not wrong, f"{len(wrong)} disagreements, first {wrong[0]}"
    return f"{len(fs)} formulas at depth {cfg.depth}, 0 disagreements"


@budget(120)
def embedding_round_trips():
    """200 LK and 200 LJ proofs survive embed, check and extract."""
    cvars, bot = ClassicalVars(), BotOnly()
    lk = random_lk_proofs(random.Random(2024), 200)
    for d in lk:
        assert check_lk(d).ok
        m = lk_to_mlp(d, cvars)
        assert check_derivation(m, cvars).ok and m.conclusion.stoup is None
        back = mlp_to_lk(m, cvars)
        assert check_lk(back).ok and back.conclusion == d.conclusion
    lj = random_lj_proofs(random.Random(2025), 200)
    for d in lj:
        assert check_lj(d).ok
        m = lj_to_mlp(d, bot)
        assert check_derivation(m, bot).ok
        # mlp_to_lj normalizes first and asserts the normal form is body-free
        back = mlp_to_lj(m, bot)
        assert check_lj(back).ok and back.conclusion == d.conclusion
    cuts = sum(d.rule == "lk.cut" for d in lk) + sum(d.rule == "lj.cut" for d in lj)
    return f"{len(lk)} LK + {len(lj)} LJ proofs ({cuts} ending in a cut)"


def _imp3_shape_holds(fx):
    d = fx.derivation
    a, b = d.principal.left, d.principal.right
    ta = t_translate(a, fx.policy)
    out = translate_derivation(d, fx.policy)
    promoted, right = out.premises
    derelict = promoted.premises[0]
    lolli = derelict.premises[0]
    return (out.rule == "ll_cut" and out.principal == WhyNot(ta)
            and right.conclusion == translate_sequent(d.premises[1].conclusion, fx.policy)
            and promoted.rule == "quest_l" and promoted.principal == WhyNot(ta)
            and derelict.rule == "bang_l"
            and derelict.principal == OfCourse(Lolli(ta, b_translate(b, fx.policy)))
            and lolli.rule == "lolli_l" and lolli.premises[1] == ll_ax(ta))


@budget(10)
def ll_translation():
    """Every corpus proof translates to a checked LL proof of its image."""
    corpus = rule_fixtures() + [imp3_fixture()] + cut_corpus()
    used = set()
    for fx in corpus:
        used |= {n.rule for _, n in walk(fx.derivation)}
        out = translate_derivation(fx.derivation, fx.policy)
        assert check_ll(out).ok, fx.name
        assert out.conclusion == translate_sequent(fx.derivation.conclusion, fx.policy), fx.name
    assert used == set(RULES)
    assert _imp3_shape_holds(imp3_fixture())
    return f"{len(corpus)} proofs covering all {len(RULES)} rules; imp3_l shape reproduced"


def _shape(f):
    if f == LL_ZERO:
        return "0"
    if isinstance(f, OfCourse):
        return "!"
    nested = any(isinstance(x, (Tensor, Plus)) for x in (f.left, f.right))
    return ("*" if isinstance(f, Tensor) else "+") + ("nested" if nested else "")


@budget(120)
def transformer_suite():
    """500 random inputs per transformer give checked LL proofs of the expected sequent."""
    shapes = set()
    policies = [ClassicalVars(), BotOnly(), All()]
    for kind in TRANSFORMERS:
        rng = random.Random(kind)
        for _ in range(500):
            case = transformer_case(kind, rng, rng.choice(policies))
            assert check_ll(case.input).ok
            out = case.apply()
            assert check_ll(out).ok, kind
            assert out.conclusion == case.expected, kind
            shapes.add(_shape(case.formula))
    assert {"0", "!", "*", "+", "*nested", "+nested"} <= shapes, shapes
    return f"{len(TRANSFORMERS)} x 500 instances, shapes {sorted(shapes)}"


CRITERIA = [
    (1, "rule coverage", rule_coverage),
    (2, "cut elimination", cut_elimination),
    (3, "subformula property", subformula_property),
    (4, "disjunction property", disjunction_property),
    (5, "LK agreement", lk_agreement),
    (6, "LJ agreement", lj_agreement),
    (7, "embedding round trips", embedding_round_trips),
    (8, "LL translation", ll_translation),
    (9, "LL transformers", transformer_suite),
]


def run_criterion(number, name, fn):
    try:
        summary = fn()
    except AssertionError as exc:
        RESULTS[number] = f"criterion {number} ({name}): FAIL {exc}"
        raise
    RESULTS[number] = f"criterion {number} ({name}): PASS {summary}"


@pytest.mark.parametrize("number, name, fn", CRITERIA, ids=[c[2].__name__ for c in CRITERIA])
def test_acceptance(number, name, fn):
    run_criterion(number, name, fn)


if __name__ == "__main__":
    failed = 0
    for number, name, fn in CRITERIA:
        try:
            run_criterion(number, name, fn)
        except AssertionError:
            failed += 1
        print(RESULTS[number], flush=True)
    sys.exit(1 if failed else 0)
