"""Linear previsions, credal sets and sets of lower previsions.

A :class:`CredalSet` is the finitely generated set of linear previsions
that dominates a coherent lower prevision; the lower (upper) prevision of
a gamble is the minimum (maximum) expectation over its vertices. Such a
finite hull is closed, so every model built here is strongly Archimedean.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .core import FiniteSpace, Gamble, Variable, as_rational, fmt
from .errors import ModelError, SpaceMismatch, VertexFormRequired
from .lp import LinearProgram, lp_minimize


@dataclass(frozen=True)
class LinearPrevision:
    """Expectation operator of a probability mass function on a finite space."""

    space: FiniteSpace
    pmf: tuple[Fraction, ...]

    def __init__(self, space: FiniteSpace, pmf):
        if isinstance(pmf, Mapping):
            unknown = set(pmf) - set(space.atoms)
            if unknown:
                raise ModelError(f"pmf mentions unknown atoms {sorted(unknown)}")
            pmf = [pmf.get(a, 0) for a in space.atoms]
        pmf = tuple(as_rational(p) for p in pmf)
        if len(pmf) != len(space):
            raise ModelError(f"pmf has {len(pmf)} masses for {len(space)} atoms")
        if any(p < 0 for p in pmf):
            raise ModelError(f"negative mass in pmf {[fmt(p) for p in pmf]}")
        if sum(pmf) != 1:
            raise ModelError(f"pmf sums to {fmt(sum(pmf))}, not 1")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "pmf", pmf)

    def __call__(self, f: Gamble) -> Fraction:
        if f.space != self.space:
            raise SpaceMismatch(f"{f.space.atoms} vs {self.space.atoms}")
        return sum((p * v for p, v in zip(self.pmf, f.values)), Fraction(0))

    def prob(self, event) -> Fraction:
        return sum((p for a, p in zip(self.space.atoms, self.pmf) if a in event.members), Fraction(0))

    def pushforward(self, Z: Variable) -> "LinearPrevision":
        """The distribution of *Z*: a pmf on its codomain."""
        if Z.space != self.space:
            raise SpaceMismatch(f"{Z.space.atoms} vs {self.space.atoms}")
        mass = {c: Fraction(0) for c in Z.codomain}
        for v, p in zip(Z.assignment, self.pmf):
            mass[v] += p
        return LinearPrevision(Z.codomain_space, [mass[c] for c in Z.codomain])

    def __repr__(self) -> str:
        return "LinearPrevision(" + ", ".join(fmt(p) for p in self.pmf) + ")"


@dataclass(frozen=True)
class Constraint:
    """``sum(coeffs[a] * p(a)) rel rhs`` on the probability simplex."""

    coeffs: tuple[Fraction, ...]
    rel: str
    rhs: Fraction

    def holds(self, P: LinearPrevision) -> bool:
        lhs = sum((c * p for c, p in zip(self.coeffs, P.pmf)), Fraction(0))
        return {">=": lhs >= self.rhs, "<=": lhs <= self.rhs, "==": lhs == self.rhs}[self.rel]


@dataclass(frozen=True)
class CredalSet:
    """A polytope of linear previsions, given by vertices and/or constraints.

    Evaluation works in either form. Procedures that enumerate vertices
    raise :class:`VertexFormRequired` for a constraint-only set.
    """

    space: FiniteSpace
    vertices: tuple[LinearPrevision, ...]
    constraints: tuple[Constraint, ...] = field(default=())

    def __init__(self, space: FiniteSpace, vertices: Iterable = (), constraints: Iterable = ()):
        verts: list[LinearPrevision] = []
        for v in vertices:
            P = v if isinstance(v, LinearPrevision) else LinearPrevision(space, v)
            if P.space != space:
                raise SpaceMismatch(f"vertex on {P.space.atoms}, credal set on {space.atoms}")
            if P not in verts:
                verts.append(P)
        cons: list[Constraint] = []
        for c in constraints:
            if not isinstance(c, Constraint):
                coeffs, rel, rhs = c
                if isinstance(coeffs, Mapping):
                    coeffs = [coeffs.get(a, 0) for a in space.atoms]
                if rel not in (">=", "<=", "==", "="):
                    raise ModelError(f"unknown relation {rel!r}")
                c = Constraint(tuple(as_rational(x) for x in coeffs), "==" if rel == "=" else rel,
                               as_rational(rhs))
            if len(c.coeffs) != len(space):
                raise ModelError("constraint needs one coefficient per atom")
            cons.append(c)
        if not verts and not cons:
            raise ModelError("a credal set needs at least one vertex or a constraint form")
        for P in verts:
            for c in cons:
                if not c.holds(P):
                    raise ModelError(f"vertex {P!r} violates a listed constraint")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "vertices", tuple(verts))
        object.__setattr__(self, "constraints", tuple(cons))
        if not verts and lp_minimize(self._program(space.zero())).status == "infeasible":
            raise ModelError("constraint form describes an empty credal set")

    @classmethod
    def of(cls, *pmfs: LinearPrevision) -> "CredalSet":
        return cls(pmfs[0].space, pmfs)

    @classmethod
    def vacuous(cls, space: FiniteSpace) -> "CredalSet":
        n = len(space)
        return cls(space, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def has_vertices(self) -> bool:
        return bool(self.vertices)

    def require_vertices(self) -> tuple[LinearPrevision, ...]:
        if not self.vertices:
            raise VertexFormRequired("this operation needs a credal set in vertex form")
        return self.vertices

    @property
    def is_single_vertex(self) -> bool:
        return len(self.vertices) == 1

    def _program(self, f: Gamble) -> LinearProgram:
        n = len(self.space)
        rows = [[1] * n] + [list(c.coeffs) for c in self.constraints]
        rels = ["=="] + [c.rel for c in self.constraints]
        rhs = [1] + [c.rhs for c in self.constraints]
        return LinearProgram(objective=f.values, rows=rows, relations=rels, rhs=rhs)

    def lower(self, f: Gamble) -> Fraction:
        if f.space != self.space:
            raise SpaceMismatch(f"{f.space.atoms} vs {self.space.atoms}")
        if self.vertices:
            return min(P(f) for P in self.vertices)
        return self.lower_lp(f)

    def lower_lp(self, f: Gamble) -> Fraction:
        """Lower prevision through the constraint form (exact simplex)."""
        if not self.constraints:
            raise ModelError("no constraint form available")
        out = lp_minimize(self._program(f))
        assert out.status == "optimal", out.status
        return out.optimum

    def upper(self, f: Gamble) -> Fraction:
        return -self.lower(-f)

    def argmin(self, f: Gamble) -> LinearPrevision:
        """A vertex attaining the lower prevision of *f*."""
        verts = self.require_vertices()
        return min(verts, key=lambda P: P(f))

    def pushforward(self, Z: Variable) -> "CredalSet":
        verts = self.require_vertices()
        return CredalSet(Z.codomain_space, [P.pushforward(Z) for P in verts])

    def __repr__(self) -> str:
        if self.vertices:
            return "CredalSet[" + "; ".join(repr(P) for P in self.vertices) + "]"
        return f"CredalSet(<{len(self.constraints)} constraints>)"


@dataclass(frozen=True)
class ArchimedeanModel:
    """A non-empty finite set of credal sets (one per lower prevision).

    Its set of desirable option sets is the intersection of the members'.
    """

    members: tuple[CredalSet, ...]

    def __init__(self, members: Iterable):
        ms = []
        for m in members:
            if isinstance(m, LinearPrevision):
                m = CredalSet(m.space, [m])
            if not isinstance(m, CredalSet):
                raise ModelError(f"lower_set members must be credal sets, got {type(m).__name__}")
            if m not in ms:
                ms.append(m)
        if not ms:
            raise ModelError("a lower_set model needs at least one member")
        space = ms[0].space
        if any(m.space != space for m in ms):
            raise SpaceMismatch("all members of a lower_set model must share one space")
        object.__setattr__(self, "members", tuple(ms))

    @property
    def space(self) -> FiniteSpace:
        return self.members[0].space

    @property
    def all_linear(self) -> bool:
        return all(m.is_single_vertex for m in self.members)

    def __repr__(self) -> str:
        return "ArchimedeanModel(" + ", ".join(repr(m) for m in self.members) + ")"


ChoiceModel = LinearPrevision | CredalSet | ArchimedeanModel


def members(model) -> tuple[CredalSet, ...]:
    """The representing credal sets of any model kind."""
    if isinstance(model, LinearPrevision):
        return (CredalSet(model.space, [model]),)
    if isinstance(model, CredalSet):
        return (model,)
    if isinstance(model, ArchimedeanModel):
        return model.members
    raise ModelError(f"not a choice model: {type(model).__name__}")


def model_space(model) -> FiniteSpace:
    return model.space


def prevision_eval(model, f: Gamble, side: str = "lower") -> Fraction:
    """Lower or upper prevision of *f* under a linear prevision or credal set."""
    if isinstance(model, LinearPrevision):
        return model(f)
    if not isinstance(model, CredalSet):
        raise ModelError("prevision_eval expects a linear prevision or a credal set")
    if side == "lower":
        return model.lower(f)
    if side == "upper":
        return model.upper(f)
    raise ValueError(f"side must be 'lower' or 'upper', got {side!r}")


def is_precise_on(model, f: Gamble) -> bool:
    return prevision_eval(model, f, "lower") == prevision_eval(model, f, "upper")


@dataclass
class PropertyReport:
    """Outcome of :func:`check_lower_prevision_properties`."""

    instances: int = 0
    violations: list[tuple[str, dict]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def random_gamble(space: FiniteSpace, rng: random.Random, lo: int = -6, hi: int = 6,
                  den: int = 4) -> Gamble:
    """A gamble with entries on the lattice ``{k/den : lo*den <= k <= hi*den}``."""
    return Gamble(space, [Fraction(rng.randint(lo * den, hi * den), den) for _ in space.atoms])


def check_lower_prevision_properties(model, samples: int = 500, seed: int = 0) -> PropertyReport:
    """Check LP1-LP8 on random gambles and scalars.

    Uniform continuity is checked in its finite-space form, the Lipschitz
    bound ``|low(f) - low(g)| <= max|f - g|``.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    low = lambda h: prevision_eval(model, h, "lower")  # noqa: E731
    upp = lambda h: prevision_eval(model, h, "upper")  # noqa: E731
    rep = PropertyReport()
    space = model.space

    def bad(name, **data):
        rep.violations.append((name, {k: (fmt(v) if isinstance(v, Fraction) else repr(v))
                                       for k, v in data.items()}))

    for _ in range(samples):
        f, g = random_gamble(space, rng), random_gamble(space, rng)
        lam = Fraction(rng.randint(1, 20), rng.randint(1, 6))
        mu = Fraction(rng.randint(-20, 20), rng.randint(1, 6))
        lf, lg, uf, ug = low(f), low(g), upp(f), upp(g)
        lfg, ufg = low(f + g), upp(f + g)
        rep.instances += 1
        if not lf >= f.min():
            bad("LP1", f=f, lower=lf)
        if low(f * lam) != lam * lf:
            bad("LP2", f=f, lam=lam)
        if not lfg >= lf + lg:
            bad("LP3", f=f, g=g)
        if not (f.min() <= lf <= uf <= f.max()):
            bad("LP4", f=f, lower=lf, upper=uf)
        h = f + Gamble(space, [abs(v) for v in g.values])  # h >= f
        if not (lf <= low(h) and uf <= upp(h)):
            bad("LP5", f=f, g=h)
        if low(f + mu) != lf + mu:
            bad("LP6", f=f, mu=mu)
        if not abs(lf - lg) <= max(abs(v) for v in (f - g).values):
            bad("LP7", f=f, g=g)
        if not (lf + lg <= lfg <= lf + ug <= ufg <= uf + ug):
            bad("LP8", f=f, g=g)
    return rep
