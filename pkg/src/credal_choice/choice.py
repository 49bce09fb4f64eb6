"""Sets of desirable option sets and the choice functions they induce.

An option set ``A`` belongs to the model's set ``K`` when, for every
representing lower prevision, some gamble in ``A`` has strictly positive
lower prevision. An option ``f`` is rejected from ``A`` exactly when
``A ⊖ f`` belongs to ``K``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import Gamble, OptionSet, dominates, opt_minus
from .errors import CriterionMismatch, SpaceMismatch
from .previsions import ArchimedeanModel, CredalSet, LinearPrevision, members

CRITERIA = ("meu", "maximality", "eadmissibility", "lowerset")


def _check_space(model, A: OptionSet) -> None:
    if A.space is not None and A.space != model.space:
        raise SpaceMismatch(f"option set on {A.space.atoms}, model on {model.space.atoms}")


def k_member(model, A: OptionSet) -> bool:
    """Is *A* a desirable option set under *model*?

    The empty set is never a member (nothing in it can be desirable).
    """
    _check_space(model, A)
    return all(any(m.lower(f) > 0 for f in A) for m in members(model))


def rejected_by_k(model, A: OptionSet, f: Gamble) -> bool:
    """Rejection straight from the set of desirable option sets."""
    return k_member(model, opt_minus(A, f))


def archimedean_slack(model, A: OptionSet) -> Fraction | None:
    """``min over members of max over f in A of lower(f)``, or None if ``A`` is not in K.

    For every ``0 < eps < slack``, ``A - eps`` is still in K.
    """
    _check_space(model, A)
    if not len(A):
        return None
    s = min(max(m.lower(f) for f in A) for m in members(model))
    return s if s > 0 else None


@dataclass
class ChoiceResult:
    chosen: OptionSet
    rejected: OptionSet
    # rejected gamble -> witness; see choose() for the shape per criterion
    certificates: dict = field(default_factory=dict)


def _meu_prevision(model) -> LinearPrevision:
    if isinstance(model, LinearPrevision):
        return model
    ms = members(model)
    if len(ms) == 1 and ms[0].is_single_vertex:
        return ms[0].vertices[0]
    raise CriterionMismatch("expected utility needs a linear prevision")


def _maximality_set(model) -> CredalSet:
    if isinstance(model, LinearPrevision):
        return CredalSet(model.space, [model])
    if isinstance(model, CredalSet):
        return model
    if isinstance(model, ArchimedeanModel) and len(model.members) == 1:
        return model.members[0]
    raise CriterionMismatch("maximality needs a single credal set; use 'lowerset' for a set of them")


def _eadmissibility_previsions(model) -> list[LinearPrevision]:
    if isinstance(model, LinearPrevision):
        return [model]
    if isinstance(model, CredalSet):
        if model.is_single_vertex:
            return [model.vertices[0]]
        raise CriterionMismatch(
            "E-admissibility needs a lower_set of linear previsions; "
            "wrap the vertices explicitly instead of passing a credal set")
    if isinstance(model, ArchimedeanModel):
        if not model.all_linear:
            raise CriterionMismatch("E-admissibility needs every lower_set member to be single-vertex")
        return [m.vertices[0] for m in model.members]
    raise CriterionMismatch(f"not a choice model: {type(model).__name__}")


def _maximal_under(m: CredalSet, A: OptionSet, f: Gamble) -> Gamble | None:
    """First ``g`` in ``A`` with ``lower(g - f) > 0``, or None if *f* is maximal."""
    for g in A:
        if g != f and m.lower(g - f) > 0:
            return g
    return None


def choose(model, A: OptionSet, criterion: str) -> ChoiceResult:
    """Apply a decision criterion to the option set *A*.

    Certificates, keyed by rejected gamble:

    * ``meu`` / ``maximality``: the gamble ``g`` preferred to it;
    * ``eadmissibility``: one preferred gamble per member prevision (so no
      member makes the option expectation-maximal);
    * ``lowerset``: one preferred gamble per member credal set.
    """
    _check_space(model, A)
    if criterion not in CRITERIA:
        raise CriterionMismatch(f"unknown criterion {criterion!r}; expected one of {CRITERIA}")
    chosen, certs = [], {}
    if criterion == "meu":
        P = _meu_prevision(model)
        vals = {f: P(f) for f in A}
        for f in A:
            better = next((g for g in A if vals[g] > vals[f]), None)
            if better is None:
                chosen.append(f)
            else:
                certs[f] = better
    elif criterion == "maximality":
        m = _maximality_set(model)
        for f in A:
            g = _maximal_under(m, A, f)
            if g is None:
                chosen.append(f)
            else:
                certs[f] = g
    elif criterion == "eadmissibility":
        Ps = _eadmissibility_previsions(model)
        for f in A:
            witnesses = []
            for P in Ps:
                better = next((g for g in A if P(g) > P(f)), None)
                if better is None:
                    break
                witnesses.append(better)
            else:
                certs[f] = tuple(witnesses)
                continue
            chosen.append(f)
    else:
        ms = members(model)
        for f in A:
            witnesses = []
            for m in ms:
                g = _maximal_under(m, A, f)
                if g is None:
                    break
                witnesses.append(g)
            else:
                certs[f] = tuple(witnesses)
                continue
            chosen.append(f)
    chosen_set = OptionSet(chosen, A.space)
    return ChoiceResult(chosen_set, A - chosen_set, certs)


def dominance_filter(A: OptionSet) -> OptionSet:
    """Drop every option that another option dominates pointwise (``>=`` and ``!=``)."""
    return OptionSet([f for f in A if not any(dominates(g, f, "strict-pointwise") for g in A)],
                     A.space)
