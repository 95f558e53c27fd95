"""Finite semigroups, finite right acts over them, and the congruence
machinery needed to classify acts as large/uniform/subdirectly
irreducible, plus exhaustive claim verification over small enumerated
scopes."""

from .acts import Act, ActHom, act_profile, build_act, regular_act
from .classifiers import (
    classify_regular_uniform_monoid,
    classify_structure,
    construct_two_zero_uniform,
    irreducibility_report,
    is_large,
    is_uniform,
)
from .congruences import (
    Congruence,
    all_congruences,
    congruence_closure,
    monocyclic,
    rees_congruence,
)
from .enumeration import (
    Budget,
    EnumerationScope,
    canonical_form,
    enumerate_acts,
    enumerate_semigroups,
)
from .errors import (
    ActkitError,
    BudgetExceededError,
    InvariantViolationError,
    MalformedInputError,
    NotApplicableError,
    SizeGuardError,
)
from .fileio import load_act, load_file, load_semigroup
from .harness import VerificationReport, verify, verify_all, verify_many
from .semigroups import Semigroup, adjoin_identity, check_associativity

__version__ = "0.1.0"

__all__ = [
    "Act",
    "ActHom",
    "ActkitError",
    "Budget",
    "BudgetExceededError",
    "Congruence",
    "EnumerationScope",
    "InvariantViolationError",
    "MalformedInputError",
    "NotApplicableError",
    "Semigroup",
    "SizeGuardError",
    "VerificationReport",
    "act_profile",
    "adjoin_identity",
    "all_congruences",
    "build_act",
    "canonical_form",
    "check_associativity",
    "classify_regular_uniform_monoid",
    "classify_structure",
    "congruence_closure",
    "construct_two_zero_uniform",
    "enumerate_acts",
    "enumerate_semigroups",
    "irreducibility_report",
    "is_large",
    "is_uniform",
    "load_act",
    "load_file",
    "load_semigroup",
    "monocyclic",
    "rees_congruence",
    "regular_act",
    "verify",
    "verify_all",
    "verify_many",
]
