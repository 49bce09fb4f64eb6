"""Instance-level checks of the coherence axioms K0-K4 and of mixingness.

Mixingness quantifies over all pairs of option sets, so it can only be
falsified here. A model whose members are all single-vertex is mixing by
its representation; for other models :func:`find_mixing_violation` looks
for a counterexample and returns None when its budget runs out, which is
no proof of anything.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .choice import k_member
from .core import Gamble, OptionSet, posi_member
from .errors import PreconditionFailed
from .previsions import members, random_gamble

AXIOMS = ("K0", "K1", "K2", "K3", "K4")


@dataclass
class AxiomReport:
    axiom: str
    instances: int = 0
    violations: list[tuple[object, bool, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class CoherenceReport:
    reports: dict[str, AxiomReport]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports.values())

    @property
    def instances(self) -> int:
        return sum(r.instances for r in self.reports.values())


def random_member_set(model, rng: random.Random, size: int | None = None) -> OptionSet:
    """A random option set that belongs to K, shifted so it only just does."""
    space = model.space
    size = size or rng.randint(1, 4)
    gambles = [random_gamble(space, rng) for _ in range(size)]
    need = max(-max(m.lower(f) for f in gambles) for m in members(model))
    shift = need + Fraction(rng.randint(1, 8), rng.choice((4, 8, 16)))
    return OptionSet([f + shift for f in gambles], space)


def _coefficient_pair(rng: random.Random) -> tuple[Fraction, Fraction]:
    kind = rng.random()
    if kind < 0.15:
        return Fraction(0), Fraction(rng.randint(1, 9), rng.randint(1, 4))
    if kind < 0.3:
        return Fraction(rng.randint(1, 9), rng.randint(1, 4)), Fraction(0)
    return (Fraction(rng.randint(1, 9), rng.randint(1, 4)),
            Fraction(rng.randint(1, 9), rng.randint(1, 4)))


def check_coherence_axioms(model, instances: int = 1000, seed: int = 0) -> CoherenceReport:
    """Test K0-K4 on *instances* generated cases, spread round-robin over the axioms."""
    if instances < 1:
        raise ValueError("instances must be >= 1")
    rng = random.Random(seed)
    space = model.space
    zero = space.zero()
    reports = {a: AxiomReport(a) for a in AXIOMS}

    for i in range(instances):
        axiom = AXIOMS[i % len(AXIOMS)]
        rep = reports[axiom]
        rep.instances += 1
        if axiom == "K0":
            A = random_member_set(model, rng) if rng.random() < 0.7 else OptionSet(
                [random_gamble(space, rng) for _ in range(rng.randint(1, 3))], space)
            A = A | OptionSet([zero], space)
            if k_member(model, A) and not k_member(model, A.without(zero)):
                rep.violations.append((A, True, False))
        elif axiom == "K1":
            got = k_member(model, OptionSet([zero], space))
            if got:
                rep.violations.append((OptionSet([zero], space), False, got))
        elif axiom == "K2":
            f = Gamble(space, [Fraction(rng.randint(1, 40), rng.randint(1, 8)) for _ in space.atoms])
            got = k_member(model, OptionSet([f], space))
            if not got:
                rep.violations.append((OptionSet([f], space), True, got))
        elif axiom == "K3":
            A1, A2 = random_member_set(model, rng), random_member_set(model, rng)
            combo = []
            for f in A1:
                for g in A2:
                    lam, mu = _coefficient_pair(rng)
                    combo.append(f * lam + g * mu)
            C = OptionSet(combo, space)
            got = k_member(model, C)
            if not got:
                rep.violations.append(((A1, A2, C), True, got))
        else:
            A1 = random_member_set(model, rng)
            A2 = A1 | OptionSet([random_gamble(space, rng) for _ in range(rng.randint(1, 3))], space)
            got = k_member(model, A2)
            if not got:
                rep.violations.append(((A1, A2), True, got))
    return CoherenceReport(reports)


def check_mixing_axiom_instance(model, B: OptionSet, A: OptionSet) -> bool:
    """One instance of K_M: with ``B ⊆ A ⊆ posi(B)``, ``A in K`` must imply ``B in K``."""
    if not B <= A:
        raise PreconditionFailed(f"B is not a subset of A: {B!r} vs {A!r}")
    for g in A:
        if not posi_member(g, B):
            raise PreconditionFailed(f"{g!r} in A is not in posi(B)")
    return (not k_member(model, A)) or k_member(model, B)


@dataclass(frozen=True)
class MixingWitness:
    B: OptionSet
    A: OptionSet
    member: int  # index of the member whose lower prevision is not additive
    source: str  # "random" or "targeted"


def _pair_witness(model, f: Gamble, g: Gamble, member: int, source: str) -> MixingWitness | None:
    B = OptionSet([f, g], f.space)
    A = OptionSet([f, g, f + g], f.space)
    if len(B) != 2 or len(A) != 3:
        return None
    if k_member(model, A) and not k_member(model, B):
        return MixingWitness(B, A, member, source)
    return None


def _directions(m):
    space = m.space
    n = len(space)
    for i in range(n):
        yield Gamble(space, [1 if j == i else 0 for j in range(n)])
    verts = m.vertices
    for i, P in enumerate(verts):
        for Q in verts[i + 1:]:
            yield Gamble(space, [p - q for p, q in zip(P.pmf, Q.pmf)])


def find_mixing_violation(model, trials: int = 1000, seed: int = 0) -> MixingWitness | None:
    """Search for ``B = {f, g}`` and ``A = {f, g, f + g}`` with ``A in K`` but ``B not in K``.

    First *trials* random pairs, then a sweep over imprecise directions
    ``h`` of each member: ``f = h - lower(h)`` and ``g = upper(h) - h`` have
    zero lower prevision while ``f + g`` is a positive constant.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    ms = members(model)
    space = model.space
    for _ in range(trials):
        f, g = random_gamble(space, rng, -4, 4, 2), random_gamble(space, rng, -4, 4, 2)
        for k, m in enumerate(ms):
            if m.lower(f) <= 0 and m.lower(g) <= 0 and m.lower(f + g) > 0:
                w = _pair_witness(model, f, g, k, "random")
                if w is not None:
                    return w
    for k, m in enumerate(ms):
        if m.is_single_vertex:
            continue
        for h in _directions(m):
            lo, up = m.lower(h), m.upper(h)
            if lo < up:
                w = _pair_witness(model, h - lo, up - h, k, "targeted")
                if w is not None:
                    return w
    return None
