"""Triviality, credibility, classical independence and S-irrelevance.

Irrelevance of an event ``A`` to an event ``B`` asks that, for every gamble
``f = λ·I_B + μ·I_coB``, at least one of ``I_coA·f`` and ``-I_A·f`` has
non-negative lower prevision. Both lower previsions are minima over
vertices of linear functions of ``(λ, μ)``, so a failure is exactly a
pair of vertices whose two open half-planes in ``R²`` intersect. That is
the direct route. The characterization route checks triviality of ``A``
or, failing that, a shared probability of ``B`` across vertices plus
factorization at every vertex.

Variables reduce to events: a variable is irrelevant to another iff every
pair of preimage events is. Per member, that is again triviality of ``X``
or a precise ``Y`` with every vertex factorizing value by value.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass
from fractions import Fraction

from .core import Event, Gamble, Variable, event_gamble, indicator
from .errors import CapExceeded, SpaceMismatch
from .lp import open_halfplane_pair_witness
from .previsions import CredalSet, LinearPrevision, members

DEFAULT_SUBSET_CAP = 16
CAP_ENV = "CREDAL_CHOICE_SUBSET_CAP"
LEVELS = ("event", "variable")
METHODS = ("direct", "characterization")


def subset_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    return int(raw) if raw else DEFAULT_SUBSET_CAP


# ---------------------------------------------------------------- intervals

@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def is_singleton(self) -> bool:
        return self.lo == self.hi


def interval_product(i: RationalInterval, c) -> RationalInterval:
    c = Fraction(c)
    a, b = i.lo * c, i.hi * c
    return RationalInterval(min(a, b), max(a, b))


# ---------------------------------------------------------------- helpers

def _check_target(model, target) -> None:
    if target.space != model.space:
        raise SpaceMismatch(f"target on {target.space.atoms}, model on {model.space.atoms}")


def _upper(ms, f: Gamble) -> Fraction:
    return max(m.upper(f) for m in ms)


def _lower(ms, f: Gamble) -> Fraction:
    return min(m.lower(f) for m in ms)


def _proper_subsets(codomain) -> list[tuple[str, ...]]:
    """One representative per complementary pair of proper non-empty subsets."""
    first, rest = codomain[0], codomain[1:]
    reps = []
    for k in range(len(rest) + 1):
        for combo in itertools.combinations(rest, k):
            if k == len(rest):
                continue  # the full codomain
            reps.append((first,) + combo)
    return reps


def _all_subsets(codomain) -> list[tuple[str, ...]]:
    return [c for k in range(len(codomain) + 1) for c in itertools.combinations(codomain, k)]


# ---------------------------------------------------------------- triviality and credibility

def is_trivial(model, target) -> bool:
    """Zero upper probability on one side of an event, or on all but one value of a variable.

    For a set of credal sets the union envelope is used: the target must be
    practically certain under every member's vertices jointly.
    """
    _check_target(model, target)
    ms = members(model)
    if isinstance(target, Event):
        return (_upper(ms, indicator(target)) == 0
                or _upper(ms, indicator(target.complement())) == 0)
    live = [v for v in target.codomain if _upper(ms, indicator(target.preimage([v]))) > 0]
    return len(live) <= 1


@dataclass(frozen=True)
class CredibilityStatus:
    # None for a variable: only indeterminacy is defined there
    credible: bool | None
    credibly_indeterminate: bool
    # an event whose both sides are credible, when there is one
    witness: Event | None = None


def _credible(ms, E: Event) -> bool:
    return _lower(ms, indicator(E)) > 0


def credibility_status(model, target) -> CredibilityStatus:
    _check_target(model, target)
    ms = members(model)
    if isinstance(target, Event):
        cred = _credible(ms, target)
        both = cred and _credible(ms, target.complement())
        return CredibilityStatus(cred, both, target if both else None)
    for S in _proper_subsets(target.codomain):
        E = target.preimage(S)
        if _credible(ms, E) and _credible(ms, E.complement()):
            return CredibilityStatus(None, True, E)
    return CredibilityStatus(None, False, None)


# ---------------------------------------------------------------- classical independence

def classical_independent(model: LinearPrevision, first, second) -> bool:
    """Product rule for events, or value-by-value for variables."""
    _check_target(model, first)
    _check_target(model, second)
    if isinstance(first, Event) and isinstance(second, Event):
        return model.prob(first & second) == model.prob(first) * model.prob(second)
    if isinstance(first, Variable) and isinstance(second, Variable):
        px = {x: model.prob(first.preimage([x])) for x in first.codomain}
        py = {y: model.prob(second.preimage([y])) for y in second.codomain}
        return all(model.prob(first.preimage([x]) & second.preimage([y])) == px[x] * py[y]
                   for x in first.codomain for y in second.codomain)
    raise TypeError("compare two events or two variables")


def classical_independent_all_subsets(model: LinearPrevision, X: Variable, Y: Variable) -> bool:
    """The defining version: every pair of preimage events is independent."""
    return all(classical_independent(model, X.preimage(S), Y.preimage(T))
               for S in _all_subsets(X.codomain) for T in _all_subsets(Y.codomain))


# ---------------------------------------------------------------- verdicts and witnesses

@dataclass(frozen=True)
class EventWitness:
    """A gamble ``f = λ·I_B + μ·I_coB`` on which both lower previsions are negative."""

    member: int
    lam: Fraction
    mu: Fraction
    f: Gamble
    lower_on_complement: Fraction  # lower(I_coA · f)
    lower_on_event: Fraction  # lower(-I_A · f)


@dataclass(frozen=True)
class VariableWitness:
    """A partition of the first codomain with one gamble on the second codomain per cell.

    Under member ``member`` every ``lower(Σ_{C≠E} I_C(X)·(s_E(Y) - s_C(Y)))``
    is at most ``-epsilon``.
    """

    member: int
    cells: tuple[tuple[str, ...], ...]
    gambles: tuple[Gamble, ...]
    epsilon: Fraction
    lowers: tuple[Fraction, ...]
    source: str = "exact"


@dataclass(frozen=True)
class IndependenceVerdict:
    holds: bool
    route: str
    # failures: EventWitness / VariableWitness; characterization successes: clause per member
    witness: object = None
    forward: "IndependenceVerdict | None" = None
    backward: "IndependenceVerdict | None" = None

    def __bool__(self) -> bool:
        return self.holds


def _event_vectors(Q: LinearPrevision, A: Event, B: Event):
    coA, coB = A.complement(), B.complement()
    a = (Q.prob(coA & B), Q.prob(coA & coB))
    b = (-Q.prob(A & B), -Q.prob(A & coB))
    return a, b


def _event_criterion(m: CredalSet, A: Event, B: Event, f: Gamble) -> tuple[Fraction, Fraction]:
    """``(lower(I_coA·f), lower(-I_A·f))``; the pair fails iff both are negative."""
    return m.lower(indicator(A.complement()) * f), m.lower(-(indicator(A) * f))


def _guided_candidates(m: CredalSet, B: Event):
    """Gambles ``±(I_B - κ)`` with κ a vertex probability of B or the midpoint of two."""
    IB = indicator(B)
    probs = []
    for Q in m.require_vertices():
        p = Q.prob(B)
        if p not in probs:
            probs.append(p)
    kappas = list(probs) + [(p + q) / 2 for p, q in itertools.combinations(probs, 2)]
    for k in kappas:
        yield IB - k
        yield k - IB


def _make_event_witness(k: int, m: CredalSet, A: Event, B: Event, f: Gamble) -> EventWitness | None:
    lo_c, lo_a = _event_criterion(m, A, B, f)
    if lo_c < 0 and lo_a < 0:
        lam, mu = f.values[_first_index(B, True)], f.values[_first_index(B, False)]
        return EventWitness(k, lam, mu, f, lo_c, lo_a)
    return None


def _first_index(B: Event, inside: bool) -> int:
    for i, atom in enumerate(B.space.atoms):
        if (atom in B) == inside:
            return i
    return 0  # B empty or full: λ or μ never matters


def _cone_witness(k: int, m: CredalSet, A: Event, B: Event) -> EventWitness | None:
    verts = m.require_vertices()
    vecs = [_event_vectors(Q, A, B) for Q in verts]
    for a, _ in vecs:
        for _, b in vecs:
            x = open_halfplane_pair_witness(a, b)
            if x is not None:
                f = event_gamble(B, x[0], x[1])
                w = _make_event_witness(k, m, A, B, f)
                assert w is not None, "cone point does not violate the criterion"
                return w
    return None


def event_failure_witness(k: int, m: CredalSet, A: Event, B: Event) -> EventWitness | None:
    """Structure-guided gambles first, then the cone point; None if the pair is irrelevant."""
    for f in _guided_candidates(m, B):
        w = _make_event_witness(k, m, A, B, f)
        if w is not None:
            return w
    return _cone_witness(k, m, A, B)


def _event_direct(m: CredalSet, A: Event, B: Event) -> bool:
    """True iff no ordered vertex pair has intersecting open half-planes."""
    vecs = [_event_vectors(Q, A, B) for Q in m.require_vertices()]
    return not any(open_halfplane_pair_witness(a, b) is not None
                   for a, _ in vecs for _, b in vecs)


def _event_characterization(m: CredalSet, A: Event, B: Event) -> str | None:
    """The clause that makes A irrelevant to B, or None."""
    verts = m.require_vertices()
    if max(Q.prob(A) for Q in verts) == 0 or max(Q.prob(A.complement()) for Q in verts) == 0:
        return "trivial"
    pB = {Q.prob(B) for Q in verts}
    if len(pB) == 1 and all(Q.prob(A & B) == Q.prob(A) * Q.prob(B) for Q in verts):
        return "precise-factorizing"
    return None


def _variable_characterization(m: CredalSet, X: Variable, Y: Variable) -> str | None:
    verts = m.require_vertices()
    live = [x for x in X.codomain if max(Q.prob(X.preimage([x])) for Q in verts) > 0]
    if len(live) <= 1:
        return "trivial"
    pushed = {Q.pushforward(Y) for Q in verts}
    if len(pushed) == 1 and all(classical_independent(Q, X, Y) for Q in verts):
        return "precise-factorizing"
    return None


def _variable_witness_from_event(ew: EventWitness, X: Variable, Y: Variable,
                                 S: tuple[str, ...], T: tuple[str, ...],
                                 source: str = "exact") -> VariableWitness:
    cod_y = Y.codomain_space
    f = cod_y.gamble([ew.lam if y in T else ew.mu for y in Y.codomain])
    cells = (S, tuple(x for x in X.codomain if x not in S))
    lowers = (ew.lower_on_complement, ew.lower_on_event)
    return VariableWitness(ew.member, cells, (f, cod_y.zero()), min(-v for v in lowers), lowers, source)


def _event_pair_witness(k, m, X, Y, S, T):
    ew = event_failure_witness(k, m, X.preimage(S), Y.preimage(T))
    return None if ew is None else _variable_witness_from_event(ew, X, Y, S, T)


def _check_level(level, first, second):
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}")
    kind = Event if level == "event" else Variable
    if not (isinstance(first, kind) and isinstance(second, kind)):
        raise TypeError(f"level {level!r} needs two {kind.__name__} arguments")


def s_irrelevant(model, level: str, first, second, method: str = "direct") -> IndependenceVerdict:
    """Is *first* S-irrelevant to *second* under *model*?

    A set of credal sets gives the conjunction of its members' verdicts.
    Failure witnesses always come from the first failing member in order.
    """
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    _check_level(level, first, second)
    _check_target(model, first)
    _check_target(model, second)
    ms = members(model)
    for m in ms:
        m.require_vertices()
    if level == "variable" and method == "direct":
        cap = subset_cap()
        if len(first.codomain) + len(second.codomain) > cap:
            raise CapExceeded(
                f"|X|+|Y| = {len(first.codomain) + len(second.codomain)} exceeds the cap {cap}; "
                f"raise it with {CAP_ENV}")

    clauses = []
    for k, m in enumerate(ms):
        if level == "event":
            if method == "direct":
                ok = _event_direct(m, first, second)
            else:
                clause = _event_characterization(m, first, second)
                ok = clause is not None
                clauses.append(clause)
            if not ok:
                w = event_failure_witness(k, m, first, second)
                return IndependenceVerdict(False, method, w)
        else:
            if method == "direct":
                for S in _proper_subsets(first.codomain):
                    for T in _proper_subsets(second.codomain):
                        if not _event_direct(m, first.preimage(S), second.preimage(T)):
                            w = _event_pair_witness(k, m, first, second, S, T)
                            return IndependenceVerdict(False, method, w)
            else:
                clause = _variable_characterization(m, first, second)
                clauses.append(clause)
                if clause is None:
                    w = None
                    for S in _proper_subsets(first.codomain):
                        for T in _proper_subsets(second.codomain):
                            w = w or _event_pair_witness(k, m, first, second, S, T)
                    return IndependenceVerdict(False, method, w)
    return IndependenceVerdict(True, method, tuple(clauses) if clauses else None)


def s_independent(model, level: str, first, second, method: str = "direct") -> IndependenceVerdict:
    fwd = s_irrelevant(model, level, first, second, method)
    bwd = s_irrelevant(model, level, second, first, method)
    witness = fwd.witness if not fwd.holds else (bwd.witness if not bwd.holds else None)
    return IndependenceVerdict(fwd.holds and bwd.holds, method, witness, fwd, bwd)


# ---------------------------------------------------------------- partition criterion

def partition_criterion(m: CredalSet, X: Variable, Y: Variable,
                        cells, gambles) -> tuple[Fraction, ...]:
    """``lower(Σ_{C≠E} I_C(X)·(s_E(Y) - s_C(Y)))`` for each cell E.

    The composite option is rejected for every ε > 0 iff the largest entry is >= 0.
    """
    inds = [indicator(X.preimage(C)) for C in cells]
    comps = [Y.compose(s) for s in gambles]
    out = []
    for e in range(len(cells)):
        total = X.space.zero()
        for c in range(len(cells)):
            if c != e:
                total = total + inds[c] * (comps[e] - comps[c])
        out.append(m.lower(total))
    return tuple(out)


def _try_partition(k, m, X, Y, cells, gambles, source) -> VariableWitness | None:
    lowers = partition_criterion(m, X, Y, cells, gambles)
    if max(lowers) < 0:
        return VariableWitness(k, tuple(tuple(c) for c in cells), tuple(gambles),
                               min(-v for v in lowers), lowers, source)
    return None


def _random_partition(codomain, rng: random.Random):
    k = rng.randint(2, len(codomain))
    while True:
        labels = [rng.randrange(k) for _ in codomain]
        if len(set(labels)) == k:
            return [tuple(v for v, l in zip(codomain, labels) if l == c) for c in range(k)]


def s_irrelevant_variables_sampled(model, X: Variable, Y: Variable, trials: int = 200,
                                   seed: int = 0) -> VariableWitness | None:
    """Falsifier for variable irrelevance built on the partition criterion.

    Tries the structure-guided family first (two-cell partitions from
    preimage-event witness candidates, within the subset cap), then
    *trials* random partitions with lattice gambles.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    _check_target(model, X)
    _check_target(model, Y)
    ms = members(model)
    cod_y = Y.codomain_space
    if len(X.codomain) < 2:
        return None  # a single cell never rejects anything
    if len(X.codomain) + len(Y.codomain) <= subset_cap():
        for k, m in enumerate(ms):
            for S in _proper_subsets(X.codomain):
                coS = tuple(x for x in X.codomain if x not in S)
                for T in _proper_subsets(Y.codomain):
                    B = Y.preimage(T)
                    for f in _guided_candidates(m, B):
                        s = cod_y.gamble([f.values[_first_index(B, y in T)] for y in Y.codomain])
                        w = _try_partition(k, m, X, Y, (S, coS), (s, cod_y.zero()), "guided")
                        if w is not None:
                            return w
    rng = random.Random(seed)
    for _ in range(trials):
        cells = _random_partition(X.codomain, rng)
        gambles = [cod_y.gamble([Fraction(rng.randint(-8, 8), rng.choice((1, 2, 5)))
                                 for _ in Y.codomain]) for _ in cells]
        for k, m in enumerate(ms):
            w = _try_partition(k, m, X, Y, cells, gambles, "random")
            if w is not None:
                return w
    return None


# ---------------------------------------------------------------- distributions

@dataclass(frozen=True)
class PreciseDistribution:
    precise: bool
    pmf: LinearPrevision | None = None

    def __bool__(self) -> bool:
        return self.precise


def precise_distribution(model, Z: Variable) -> PreciseDistribution:
    _check_target(model, Z)
    ms = members(model)
    pushed = {Q.pushforward(Z) for m in ms for Q in m.require_vertices()}
    if len(pushed) == 1:
        return PreciseDistribution(True, next(iter(pushed)))
    return PreciseDistribution(False, None)


@dataclass(frozen=True)
class FactorizationReport:
    precondition: bool  # Y has a precise distribution
    y_pmf: LinearPrevision | None
    exact: bool  # every vertex is its X-marginal times the common Y-marginal
    failing_vertex: LinearPrevision | None
    samples: int
    # (f, g, lower/upper interval of f(X)g(Y), interval product) of the first mismatch
    sampled_counterexample: tuple | None

    @property
    def ok(self) -> bool:
        return self.precondition and self.exact and self.sampled_counterexample is None


def factorization_check(model: CredalSet, X: Variable, Y: Variable, samples: int = 100,
                        seed: int = 0) -> FactorizationReport:
    """Exact per-vertex factorization plus sampled interval-product identities."""
    _check_target(model, X)
    _check_target(model, Y)
    pd = precise_distribution(model, Y)
    if not pd:
        return FactorizationReport(False, None, False, None, 0, None)
    verts = model.require_vertices()
    bad = next((Q for Q in verts if not classical_independent(Q, X, Y)), None)
    rng = random.Random(seed)
    cx, cy = X.codomain_space, Y.codomain_space
    counter = None
    for _ in range(samples):
        f = cx.gamble([Fraction(rng.randint(-6, 6), rng.choice((1, 2, 3))) for _ in cx.atoms])
        g = cy.gamble([Fraction(rng.randint(-6, 6), rng.choice((1, 2, 3))) for _ in cy.atoms])
        fx, gy = X.compose(f), Y.compose(g)
        joint = RationalInterval(model.lower(fx * gy), model.upper(fx * gy))
        pred = interval_product(RationalInterval(model.lower(fx), model.upper(fx)), pd.pmf(g))
        if joint != pred:
            counter = (f, g, joint, pred)
            break
    return FactorizationReport(True, pd.pmf, bad is None, bad, samples, counter)
