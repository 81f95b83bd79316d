import pytest
from hypothesis import given

from mixed.calculus import (CUTS, RULES, Derivation, ProofError, PSequent, RuleError, annotate,
                            build, check_derivation, fit, format_path, is_cut_free, make,
                            parse_sequent, read_derivation, replace_at, size, subtree, walk,
                            walk_shared, write_derivation)
from mixed.corpus import cut_corpus, imp3_fixture, rule_fixtures
from mixed.embeddings import lk_to_mlp
from mixed.formula import BOT, All, BotOnly, ClassicalVars, Var, parse_formula
from mixed.oracle import lk_decide
from mixed.sexpr import SexprError, read_tree

from conftest import drop_one_occurrence, formulas

F = parse_formula
S = parse_sequent
CVARS, BOT_ONLY = ClassicalVars(), BotOnly()
FIXTURES = rule_fixtures() + [imp3_fixture()]


def test_fixtures_cover_every_rule_tag():
    assert {fx.derivation.rule for fx in FIXTURES} == set(RULES)


@pytest.mark.parametrize("fx", FIXTURES, ids=lambda fx: fx.name)
def test_fixture_proofs_check(fx):
    report = check_derivation(fx.derivation, fx.policy)
    assert report.ok, report.describe()


@pytest.mark.parametrize("fx", FIXTURES, ids=lambda fx: fx.name)
def test_dropping_a_root_formula_breaks_the_fixture(fx):
    report = check_derivation(drop_one_occurrence(fx.derivation), fx.policy)
    assert not report.ok
    assert any(path == () for path, _ in report.failures)


def test_axiom_checks_under_any_policy():
    ax = Derivation(S("x_c |- ; x_c"), "ax")
    for policy in (All(), BOT_ONLY, CVARS):
        assert check_derivation(ax, policy).ok


def test_dereliction_outside_p_reports_the_side_condition():
    d = Derivation(S("|- p ;"), "der", (Derivation(S("p |- ; p"), "ax"),))
    report = check_derivation(d, BOT_ONLY)
    assert not report.ok
    assert any("A ∈ P violated" in msg for _, msg in report.failures)


def test_classical_peirce_law_checks_after_embedding():
    peirce = F("((x_c -> y_c) -> x_c) -> x_c")
    d = lk_to_mlp(lk_decide([], [peirce]), CVARS)
    assert d.conclusion == PSequent((), (peirce,), None)
    assert check_derivation(d, CVARS).ok


def test_forward_building_computes_conclusions():
    assert build("ax", [], F("p"), CVARS) == S("p |- ; p")
    assert build("imp1_r", [S("p |- ; p")], F("p -> p"), CVARS) == S("|- ; p -> p")
    assert build("cut2", [S("|- x_c ;"), S("x_c |- y_c ;")], F("x_c"), CVARS) == S("|- y_c ;")


@pytest.mark.parametrize("rule, premises, principal, policy, message", [
    ("imp1_l", ["bot |- ; bot", "p |- ; p"], "p -> bot", BOT_ONLY, "B ∉ P"),
    ("and1_l", ["x_c, p |- ; p"], "x_c & p", CVARS, "A ∉ P and B ∉ P"),
    ("or1_l", ["x_c |- ; x_c", "p |- ; x_c"], "x_c | p", CVARS, "A ∉ P and B ∉ P"),
    ("w_r", ["p |- ; p"], "q", CVARS, "A ∈ P violated"),
    ("imp2_r", ["p |- ; p"], "p -> p", All(), "stoup must be empty"),
    ("and1_r", ["p |- ; p", "q |- ; q"], "q & p", CVARS, "expected stoup"),
    ("cut2", ["|- x_c ;", "x_c |- ; x_c"], "x_c", CVARS, "stoup must be empty"),
])
def test_side_conditions_are_enforced(rule, premises, principal, policy, message):
    with pytest.raises(RuleError, match=message):
        build(rule, [S(p) for p in premises], F(principal), policy)


def test_body_formulas_must_belong_to_p():
    d = Derivation(S("p |- p ; p"), "w_r", (Derivation(S("p |- ; p"), "ax"),))
    report = check_derivation(d, CVARS)
    assert any("∉ P" in msg for _, msg in report.failures)


def test_failures_carry_tree_paths():
    bad_leaf = Derivation(S("p |- ; q"), "ax")
    d = Derivation(S("p, r |- ; q"), "w_l", (bad_leaf,))
    report = check_derivation(d, CVARS)
    paths = {path for path, _ in report.failures}
    assert (0,) in paths
    assert "root/0" in report.describe()
    assert format_path(()) == "root"


def test_zero_rule_needs_zero_on_the_left():
    assert check_derivation(Derivation(S("0, p |- x_c ; q"), "zero"), CVARS).ok
    assert not check_derivation(Derivation(S("p |- ; q"), "zero"), CVARS).ok
    assert not check_derivation(Derivation(S("0 |- p ;"), "zero"), CVARS).ok


def test_cut_freeness():
    ax = Derivation(S("p |- ; p"), "ax")
    assert is_cut_free(ax)
    for fx in cut_corpus():
        assert not is_cut_free(fx.derivation)
        assert fx.derivation.rule in CUTS


def test_checking_leaves_the_tree_untouched():
    fx = imp3_fixture()
    before = write_derivation(fx.derivation)
    check_derivation(fx.derivation, fx.policy)
    assert write_derivation(fx.derivation) == before


def test_annotation_fills_principals_and_rejects_invalid_trees():
    bare = read_derivation('(imp1_r "|- ; p -> p" (ax "p |- ; p"))')
    full = annotate(bare, CVARS)
    assert full.principal == F("p -> p") and full.premises[0].principal == F("p")
    with pytest.raises(ProofError):
        annotate(Derivation(S("p |- ; q"), "ax"), CVARS)


@pytest.mark.parametrize("fx", FIXTURES + cut_corpus(), ids=lambda fx: fx.name)
def test_proof_files_round_trip(fx):
    text = write_derivation(fx.derivation)
    assert read_derivation(text) == fx.derivation
    assert write_derivation(read_derivation(text)) == text


@pytest.mark.parametrize("text", ['(ax "p |- ; p"', '(ax "p |- ; p"))', '', '(ax "p |- ; p") (ax "q |- ; q")'])
def test_malformed_proof_files_are_rejected(text):
    with pytest.raises(SexprError):
        read_tree(text)


def test_unknown_rule_tag_is_rejected():
    with pytest.raises(ValueError, match="unknown"):
        read_derivation('(axiom "p |- ; p")')


@pytest.mark.parametrize("text", ["p |- q", "p |- ; q, r", "|- |- ;"])
def test_malformed_sequents_are_rejected(text):
    with pytest.raises(ValueError):
        parse_sequent(text)


@given(formulas(max_leaves=5))
def test_sequent_text_round_trips(f):
    s = PSequent((f, Var("p")), (BOT,), f)
    assert parse_sequent(str(s)) == s


def test_fit_adds_weakenings_and_contractions():
    d = make("w_l", [make("ax", [], F("p"), CVARS)], F("p"), CVARS)
    target = S("p, q |- x_c ; p")
    out = fit(d, target, CVARS)
    assert out.conclusion == target and check_derivation(out, CVARS).ok


def test_tree_navigation():
    d = imp3_fixture().derivation
    assert size(d) == len(list(walk(d)))
    leaf_path = max((p for p, _ in walk(d)), key=len)
    leaf = subtree(d, leaf_path)
    replaced = replace_at(d, leaf_path, leaf)
    assert replaced == d


def test_shared_premises_are_visited_once():
    ax = make("ax", [], F("p"), CVARS)
    d = make("and1_r", [ax, ax], F("p & p"), CVARS)
    assert len(list(walk(d))) == 3
    assert len(list(walk_shared(d))) == 2
