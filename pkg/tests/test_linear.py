import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mixed.calculus import RULES, Derivation, RuleError, make, parse_sequent, walk
from mixed.corpus import cut_corpus, imp3_fixture, rule_fixtures
from mixed.formula import All, BotOnly, ClassicalVars, parse_formula
from mixed.generators import TRANSFORMERS, transformer_case
from mixed.linear import (LL_ZERO, Atom, LLDerivation, LLSequent, LLSyntaxError, Lolli, OfCourse,
                          Plus, Tensor, WhyNot, b_translate, bang_right_t, build_ll, check_ll,
                          contract_ll, contract_t, is_bang_like, ll_ax, make_ll, parse_ll,
                          parse_ll_sequent, quest_left_t, read_ll, show_ll, t_translate,
                          translate_derivation, translate_sequent, weaken_ll, weaken_t, write_ll,
                          zero_l)

from conftest import formulas

F = parse_formula
CVARS, BOT_ONLY = ClassicalVars(), BotOnly()
bang = OfCourse
p, q, x_c = Atom("p"), Atom("q"), Atom("x_c")


def rules_used(d):
    out = [d.rule]
    for prem in d.premises:
        out += rules_used(prem)
    return out


# ---------------------------------------------------------------- translations of formulas


def test_variables_and_falsity_translate():
    assert t_translate(F("x_c"), CVARS) == bang(x_c)
    assert t_translate(F("bot"), CVARS) == LL_ZERO
    assert t_translate(F("0"), CVARS) == LL_ZERO


def test_conjunction_translates_to_tensor_of_bangs():
    assert t_translate(F("p & q"), BOT_ONLY) == Tensor(bang(bang(p)), bang(bang(q)))


def test_b_adds_why_not_exactly_on_p():
    assert b_translate(F("p"), BOT_ONLY) == bang(p)
    assert b_translate(F("x_c"), CVARS) == WhyNot(bang(x_c))
    assert b_translate(F("bot"), BOT_ONLY) == WhyNot(LL_ZERO)


def test_implication_translates_to_banged_linear_implication():
    assert t_translate(F("p -> bot"), BOT_ONLY) == bang(Lolli(bang(p), WhyNot(LL_ZERO)))


@given(formulas(), st.sampled_from([CVARS, BOT_ONLY, All()]))
def test_t_images_are_bang_like(f, policy):
    assert is_bang_like(t_translate(f, policy))


@given(formulas(), st.sampled_from([CVARS, BOT_ONLY, All()]))
def test_ll_text_round_trips(f, policy):
    for g in (t_translate(f, policy), b_translate(f, policy)):
        assert parse_ll(show_ll(g)) == g


def test_ll_printing_conventions():
    assert show_ll(Lolli(Lolli(p, q), p)) == "(p -o q) -o p"
    assert show_ll(Lolli(p, Lolli(q, p))) == "p -o q -o p"
    assert show_ll(bang(Tensor(p, q))) == "!(p * q)"
    assert parse_ll("!p * !q + 0") == Plus(Tensor(bang(p), bang(q)), LL_ZERO)


@pytest.mark.parametrize("text", ["!", "p *", "(p", "p q", "p -o"])
def test_malformed_ll_text_is_rejected(text):
    with pytest.raises(LLSyntaxError):
        parse_ll(text)


# ---------------------------------------------------------------- rules


def test_ll_axiom_checks():
    assert check_ll(ll_ax(bang(p))).ok
    assert ll_ax(bang(p)).conclusion == parse_ll_sequent("!p |- !p")


def test_promotion_rejects_non_bang_context():
    with pytest.raises(RuleError, match="promotion context"):
        build_ll("bang_r", [LLSequent((Tensor(bang(p), bang(q)),), (q,))], bang(q))
    bad = LLDerivation(LLSequent((Tensor(bang(p), bang(q)),), (bang(q),)), "bang_r",
                       (LLDerivation(LLSequent((Tensor(bang(p), bang(q)),), (q,)), "ll_ax"),))
    report = check_ll(bad)
    assert not report.ok and any("promotion context" in m for _, m in report.failures)


def test_zero_left_proves_anything():
    s = LLSequent((LL_ZERO, p), (q, WhyNot(p)))
    assert check_ll(zero_l(s)).ok


# ---------------------------------------------------------------- transformers


def test_contracting_a_bang_is_one_step():
    d = weaken_ll(weaken_ll(ll_ax(q), bang(p)), bang(p))
    out = contract_ll(d, bang(p))
    assert out.rule == "bang_c" and out.premises[0] is d


def test_contracting_zero_rebuilds_from_zero_left():
    d = weaken_ll(weaken_ll(ll_ax(q), LL_ZERO), LL_ZERO)
    out = contract_ll(d, LL_ZERO)
    assert out.rule == "zero_l" and out.conclusion == LLSequent((q, LL_ZERO), (q,))


def test_contracting_a_tensor_inverts_and_rebuilds():
    a = t_translate(F("p & q"), BOT_ONLY)
    d = weaken_t(weaken_t(ll_ax(q), F("p & q"), BOT_ONLY), F("p & q"), BOT_ONLY)
    out = contract_t(d, F("p & q"), BOT_ONLY)
    assert check_ll(out).ok and out.rule == "tensor_l"
    assert out.conclusion == LLSequent((q, a), (q,))


def test_weakening_primitives():
    assert weaken_ll(ll_ax(q), bang(p)).rule == "bang_w"
    assert weaken_ll(ll_ax(q), LL_ZERO).rule == "zero_l"
    out = weaken_t(ll_ax(q), F("p | q"), BOT_ONLY)
    assert out.rule == "plus_l" and check_ll(out).ok


def test_weakening_rejects_non_bang_like_formulas():
    with pytest.raises(RuleError):
        weaken_ll(ll_ax(q), p)


def test_question_left_with_bang_context_is_one_step():
    d = weaken_ll(make_ll("quest_r", [ll_ax(bang(q))], WhyNot(bang(q))), bang(p))
    out = quest_left_t(d, bang(q))
    assert out.rule == "quest_l" and check_ll(out).ok


def test_question_left_with_zero_context_rebuilds():
    d = weaken_ll(make_ll("quest_r", [ll_ax(bang(q))], WhyNot(bang(q))), LL_ZERO)
    out = quest_left_t(d, bang(q))
    assert out.rule == "zero_l"
    assert out.conclusion == LLSequent((LL_ZERO, WhyNot(bang(q))), (WhyNot(bang(q)),))


def test_question_left_inverts_tensor_context():
    ctx = t_translate(F("p & q"), BOT_ONLY)
    d = weaken_ll(make_ll("quest_r", [ll_ax(bang(q))], WhyNot(bang(q))), ctx)
    out = quest_left_t(d, bang(q))
    assert out.rule == "tensor_l" and check_ll(out).ok


def test_question_left_needs_question_marks_on_the_right():
    with pytest.raises(RuleError, match="right side"):
        quest_left_t(ll_ax(bang(q)), bang(q))


def test_bang_right_with_bang_context_is_one_step():
    out = bang_right_t(ll_ax(bang(p)), bang(p))
    assert out.rule == "bang_r" and out.conclusion == LLSequent((bang(p),), (bang(bang(p)),))


def test_bang_right_splits_a_plus_context():
    ctx = t_translate(F("p | q"), BOT_ONLY)
    d = weaken_ll(make_ll("quest_w", [ll_ax(bang(q))], WhyNot(p)), ctx)
    out = bang_right_t(d, bang(q))
    assert out.rule == "plus_l" and len(out.premises) == 2 and check_ll(out).ok


def test_bang_right_with_empty_context():
    inner = make_ll("lolli_r", [ll_ax(p)], Lolli(p, p))
    out = bang_right_t(inner, Lolli(p, p))
    assert out.rule == "bang_r" and out.conclusion == LLSequent((), (bang(Lolli(p, p)),))


@pytest.mark.parametrize("kind", TRANSFORMERS)
@pytest.mark.parametrize("seed", range(25))
def test_transformers_on_random_inputs(kind, seed):
    rng = random.Random(seed)
    case = transformer_case(kind, rng, rng.choice([CVARS, BOT_ONLY, All()]))
    assert check_ll(case.input).ok
    out = case.apply()
    assert check_ll(out).ok and out.conclusion == case.expected


# ---------------------------------------------------------------- derivations


def test_axiom_translates_to_ll_axiom():
    ax = make("ax", [], F("p"), BOT_ONLY)
    out = translate_derivation(ax, BOT_ONLY)
    assert out.rule == "ll_ax" and out.conclusion == LLSequent((bang(p),), (bang(p),))


def test_dereliction_translates_to_question_right():
    d = make("der", [make("ax", [], F("x_c"), CVARS)], F("x_c"), CVARS)
    out = translate_derivation(d, CVARS)
    assert out.rule == "quest_r" and check_ll(out).ok
    assert out.conclusion == LLSequent((bang(x_c),), (WhyNot(bang(x_c)),))


def test_translated_sequent_shape():
    s = parse_sequent("p, x_c |- y_c ; q")
    assert translate_sequent(s, CVARS) == parse_ll_sequent("!p, !x_c |- ?!y_c, !q")


ALL_PROOFS = rule_fixtures() + [imp3_fixture()] + cut_corpus()


@pytest.mark.parametrize("fx", ALL_PROOFS, ids=lambda fx: fx.name)
def test_every_fixture_translates_to_a_valid_ll_proof(fx):
    out = translate_derivation(fx.derivation, fx.policy)
    assert check_ll(out).ok
    assert out.conclusion == translate_sequent(fx.derivation.conclusion, fx.policy)


def test_implication_with_classical_antecedent_has_the_expected_shape():
    fx = imp3_fixture()
    d = fx.derivation
    A, B = d.principal.left, d.principal.right
    tA = t_translate(A, fx.policy)
    out = translate_derivation(d, fx.policy)
    assert out.rule == "ll_cut" and out.principal == WhyNot(tA)
    promoted, right = out.premises
    assert right.conclusion == translate_sequent(d.premises[1].conclusion, fx.policy)
    assert promoted.rule == "quest_l" and WhyNot(tA) in promoted.conclusion.left
    derelict = promoted.premises[0]
    assert derelict.rule == "bang_l"
    assert derelict.principal == bang(Lolli(tA, b_translate(B, fx.policy)))
    lolli = derelict.premises[0]
    assert lolli.rule == "lolli_l" and lolli.premises[1] == ll_ax(tA)
    assert check_ll(out).ok


def test_invalid_input_is_refused():
    bad = Derivation(parse_sequent("p |- ; q"), "ax")
    with pytest.raises(ValueError):
        translate_derivation(bad, CVARS)


@pytest.mark.parametrize("fx", ALL_PROOFS[:10], ids=lambda fx: fx.name)
def test_ll_proof_files_round_trip(fx):
    out = translate_derivation(fx.derivation, fx.policy)
    text = write_ll(out)
    again = read_ll(text)
    assert check_ll(again).ok and write_ll(again) == text


def test_translation_covers_every_rule_in_the_fixtures():
    used = set()
    for fx in ALL_PROOFS:
        used |= {n.rule for _, n in walk(fx.derivation)}
    assert used == set(RULES)
