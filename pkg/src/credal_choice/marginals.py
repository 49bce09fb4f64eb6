"""Distributions of variables and the marginal-mixingness check.

Composing with a variable ``Z`` turns option sets on its codomain into
option sets on the space; the induced model on the codomain is obtained
by pushing every vertex forward.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .axioms import find_mixing_violation
from .core import FiniteSpace, Variable
from .errors import ModelError, PreconditionFailed, SpaceMismatch
from .independence import credibility_status, precise_distribution, s_irrelevant
from .previsions import ArchimedeanModel, CredalSet, LinearPrevision, members


@dataclass(frozen=True)
class ProductSpace:
    """The space ``X-codomain × Y-codomain`` with its two coordinate variables.

    Atom labels are ``x + y`` in row-major order (x0y0, x0y1, x1y0, ...).
    """

    space: FiniteSpace
    X: Variable
    Y: Variable

    def __init__(self, x_values: Sequence[str], y_values: Sequence[str]):
        x_values, y_values = [str(v) for v in x_values], [str(v) for v in y_values]
        pairs = [(x, y) for x in x_values for y in y_values]
        labels = [x + y for x, y in pairs]
        if len(set(labels)) != len(labels):
            raise ModelError("coordinate labels collide when concatenated")
        space = FiniteSpace(labels)
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "X", Variable(space, x_values, [x for x, _ in pairs]))
        object.__setattr__(self, "Y", Variable(space, y_values, [y for _, y in pairs]))

    def product(self, px: Sequence, py: Sequence) -> LinearPrevision:
        """The product measure of two marginal pmfs."""
        return LinearPrevision(self.space, [Fraction(a) * Fraction(b) for a in px for b in py])

    def lift(self, pmf: Sequence) -> LinearPrevision:
        return LinearPrevision(self.space, pmf)


def distribution_model(model, Z: Variable):
    """The model induced on the codomain of *Z*, of the same kind as *model*."""
    if Z.space != model.space:
        raise SpaceMismatch(f"variable on {Z.space.atoms}, model on {model.space.atoms}")
    if isinstance(model, LinearPrevision):
        return model.pushforward(Z)
    if isinstance(model, CredalSet):
        return model.pushforward(Z)
    return ArchimedeanModel([m.pushforward(Z) for m in members(model)])


CLAUSES = (
    "credibly-indeterminate",
    "irrelevant",
    "precise-marginals",
    "linear-marginal-representation",
    "no-mixing-violation",
)


@dataclass
class CorollaryReport:
    clauses: dict[str, bool] = field(default_factory=dict)
    details: dict[str, object] = field(default_factory=dict)
    marginal: object = None

    @property
    def ok(self) -> bool:
        return len(self.clauses) == len(CLAUSES) and all(self.clauses.values())

    @property
    def first_failure(self) -> str | None:
        return next((c for c in CLAUSES if not self.clauses.get(c, False)), None)


def corollary1_check(model, X: Variable, Y: Variable, trials: int = 1000, seed: int = 0,
                     survey: bool = True) -> CorollaryReport:
    """Check that irrelevance of a credibly indeterminate X to Y forces a mixing Y-marginal.

    All five clauses are always evaluated in survey mode; otherwise a failing
    precondition (clause 1 or 2) raises :class:`PreconditionFailed`.
    """
    rep = CorollaryReport()
    cred = credibility_status(model, X)
    rep.clauses["credibly-indeterminate"] = cred.credibly_indeterminate
    rep.details["credibly-indeterminate"] = cred.witness
    irr = s_irrelevant(model, "variable", X, Y)
    rep.clauses["irrelevant"] = irr.holds
    rep.details["irrelevant"] = irr.witness
    if not survey and not (cred.credibly_indeterminate and irr.holds):
        raise PreconditionFailed(
            "X is not credibly indeterminate" if not cred.credibly_indeterminate
            else f"X is not S-irrelevant to Y: {irr.witness!r}")

    dists = [precise_distribution(m, Y) for m in members(model)]
    rep.clauses["precise-marginals"] = all(dists)
    rep.details["precise-marginals"] = [d.pmf for d in dists]
    marginal = distribution_model(model, Y)
    rep.marginal = marginal
    rep.clauses["linear-marginal-representation"] = all(m.is_single_vertex for m in members(marginal))
    w = find_mixing_violation(marginal, trials=trials, seed=seed)
    rep.clauses["no-mixing-violation"] = w is None
    rep.details["no-mixing-violation"] = w
    return rep
