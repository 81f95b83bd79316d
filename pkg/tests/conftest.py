import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from mixed.formula import BOT, ZERO, And, Imp, Or, Var

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("quick", max_examples=30, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

VAR_NAMES = ("p", "q", "r", "x_c", "y_c")


def formulas(names=VAR_NAMES, constants=True, max_leaves=8):
    leaves = st.sampled_from([Var(n) for n in names])
    if constants:
        leaves = leaves | st.sampled_from([ZERO, BOT])

    def grow(children):
        return st.builds(lambda c, l, r: c(l, r), st.sampled_from([And, Or, Imp]), children, children)

    return st.recursive(leaves, grow, max_leaves=max_leaves)


def drop_one_occurrence(d):
    """Copy of ``d`` whose root sequent loses one formula occurrence.

    The principal formula is removed when the root mentions it, otherwise the
    first formula of the sequent.
    """
    from mixed.calculus import Derivation, PSequent, mremove

    s = d.conclusion
    target = d.principal if d.principal in set(s.formulas()) else next(iter(s.formulas()))
    if target in s.ante:
        s = PSequent(mremove(s.ante, target), s.body, s.stoup)
    elif target in s.body:
        s = PSequent(s.ante, mremove(s.body, target), s.stoup)
    else:
        s = PSequent(s.ante, s.body, None)
    return Derivation(s, d.rule, d.premises, d.principal)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
