"""Exact choice functions, sets of desirable option sets and S-irrelevance
for credal models on finite possibility spaces."""

from .axioms import (AxiomReport, check_coherence_axioms, check_mixing_axiom_instance,
                     find_mixing_violation)
from .choice import CRITERIA, ChoiceResult, archimedean_slack, choose, k_member, rejected_by_k
from .core import (Event, EventGamble, FiniteSpace, Gamble, OptionSet, Variable, dominates,
                   event_gamble, indicator, opt_minus, posi_member)
from .errors import (CapExceeded, CredalChoiceError, CriterionMismatch, FNotInSet,
                     MalformedProgram, ModelError, PreconditionFailed, SpaceMismatch,
                     VertexFormRequired)
from .independence import (IndependenceVerdict, RationalInterval, classical_independent,
                           credibility_status, factorization_check, interval_product, is_trivial,
                           precise_distribution, s_independent, s_irrelevant,
                           s_irrelevant_variables_sampled)
from .lp import LinearProgram, lp_minimize, open_halfplane_pair_feasible
from .marginals import ProductSpace, corollary1_check, distribution_model
from .previsions import (ArchimedeanModel, CredalSet, LinearPrevision,
                         check_lower_prevision_properties, is_precise_on, prevision_eval)

__all__ = [
    "ArchimedeanModel", "AxiomReport", "CRITERIA", "CapExceeded", "ChoiceResult",
    "CredalChoiceError", "CredalSet", "CriterionMismatch", "Event", "EventGamble", "FNotInSet",
    "FiniteSpace", "Gamble", "IndependenceVerdict", "LinearPrevision", "LinearProgram",
    "MalformedProgram", "ModelError", "OptionSet", "PreconditionFailed", "ProductSpace",
    "RationalInterval", "SpaceMismatch", "Variable", "VertexFormRequired", "archimedean_slack",
    "check_coherence_axioms", "check_lower_prevision_properties", "check_mixing_axiom_instance",
    "choose", "classical_independent", "corollary1_check", "credibility_status", "distribution_model",
    "dominates", "event_gamble", "factorization_check", "find_mixing_violation", "indicator",
    "interval_product", "is_precise_on", "is_trivial", "k_member", "lp_minimize",
    "open_halfplane_pair_feasible", "opt_minus", "posi_member", "precise_distribution",
    "prevision_eval", "rejected_by_k", "s_independent", "s_irrelevant",
    "s_irrelevant_variables_sampled",
]
