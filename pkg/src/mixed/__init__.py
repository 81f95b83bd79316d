"""Proof kernel for the parametric mixed sequent calculus ML_P."""

from .formula import (
    All,
    BotOnly,
    ClassicalVars,
    Explicit,
    parse_formula,
    parse_policy,
    print_formula,
    p_member,
)
from .calculus import Derivation, PSequent, check_derivation, parse_sequent
from .cutelim import disjunction_witness, normalize, reduce_once, verify_subformula_property
from .embeddings import lj_to_mlp, lk_to_mlp, mlp_to_lj, mlp_to_lk
from .linear import check_ll, translate_derivation
from .oracle import SearchConfig, classical_valid, lj_prove_bounded, prove_bounded

__all__ = [
    "All", "BotOnly", "ClassicalVars", "Explicit", "parse_formula", "parse_policy",
    "print_formula", "p_member", "Derivation", "PSequent", "check_derivation",
    "parse_sequent", "normalize", "reduce_once", "verify_subformula_property",
    "disjunction_witness", "lk_to_mlp", "mlp_to_lk", "lj_to_mlp", "mlp_to_lj",
    "translate_derivation", "check_ll", "SearchConfig", "prove_bounded", "lj_prove_bounded",
    "classical_valid",
]
