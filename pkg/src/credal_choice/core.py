"""Finite possibility spaces, gambles, events, option sets and variables.

Every numeric value is a :class:`fractions.Fraction`; nothing in this
package goes through floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import FNotInSet, ModelError, SpaceMismatch

Rational = Fraction


def as_rational(value) -> Fraction:
    """Convert *value* to an exact :class:`Fraction`.

    Accepts ints, Fractions and strings such as ``"3/10"``, ``"-2"`` or
    ``"0.25"``. Floats are refused, they are almost never what was meant.

    >>> as_rational("6/20")
    Fraction(3, 10)
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ModelError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ModelError(f"not a rational: {value!r}") from exc
    raise ModelError(f"not an exact rational: {value!r} ({type(value).__name__})")


def fmt(value: Fraction) -> str:
    """Canonical text form: ``"p/q"`` reduced with ``q > 0``, or ``"n"``."""
    return str(Fraction(value))


@dataclass(frozen=True)
class FiniteSpace:
    """An ordered, non-empty list of distinct atom labels."""

    atoms: tuple[str, ...]

    def __init__(self, atoms: Iterable[str]):
        atoms = tuple(str(a) for a in atoms)
        if not atoms:
            raise ModelError("a possibility space needs at least one atom")
        if len(set(atoms)) != len(atoms):
            raise ModelError(f"duplicate atom labels in {atoms}")
        object.__setattr__(self, "atoms", atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)

    def index(self, atom: str) -> int:
        try:
            return self._positions[atom]
        except KeyError:
            raise ModelError(f"unknown atom {atom!r}") from None

    @property
    def _positions(self) -> dict[str, int]:
        # cached lazily; the dataclass is frozen so go through __dict__
        pos = self.__dict__.get("_pos")
        if pos is None:
            pos = {a: i for i, a in enumerate(self.atoms)}
            object.__setattr__(self, "_pos", pos)
        return pos

    def event(self, members: Iterable[str]) -> "Event":
        return Event(self, members)

    def gamble(self, values) -> "Gamble":
        """Build a gamble from a sequence (atom order) or an atom mapping."""
        if isinstance(values, Mapping):
            unknown = set(values) - set(self.atoms)
            if unknown:
                raise ModelError(f"unknown atoms {sorted(unknown)}")
            missing = [a for a in self.atoms if a not in values]
            if missing:
                raise ModelError(f"gamble misses atoms {missing}")
            values = [values[a] for a in self.atoms]
        return Gamble(self, values)

    def constant(self, c) -> "Gamble":
        c = as_rational(c)
        return Gamble(self, [c] * len(self.atoms))

    def zero(self) -> "Gamble":
        return self.constant(0)

    @property
    def full(self) -> "Event":
        return Event(self, self.atoms)

    @property
    def empty(self) -> "Event":
        return Event(self, ())


def _check_same_space(a, b) -> None:
    if a.space != b.space:
        raise SpaceMismatch(f"{a.space.atoms} vs {b.space.atoms}")


@dataclass(frozen=True)
class Gamble:
    """A real-valued (here: rational-valued) map on a finite space."""

    space: FiniteSpace
    values: tuple[Fraction, ...]

    def __init__(self, space: FiniteSpace, values: Iterable):
        values = tuple(as_rational(v) for v in values)
        if len(values) != len(space):
            raise ModelError(
                f"gamble has {len(values)} values for {len(space)} atoms")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, atom: str) -> Fraction:
        return self.values[self.space.index(atom)]

    def _lift(self, other) -> tuple[Fraction, ...]:
        if isinstance(other, Gamble):
            _check_same_space(self, other)
            return other.values
        c = as_rational(other)
        return (c,) * len(self.values)

    def __add__(self, other) -> "Gamble":
        return Gamble(self.space, [x + y for x, y in zip(self.values, self._lift(other))])

    __radd__ = __add__

    def __sub__(self, other) -> "Gamble":
        return Gamble(self.space, [x - y for x, y in zip(self.values, self._lift(other))])

    def __rsub__(self, other) -> "Gamble":
        return Gamble(self.space, [y - x for x, y in zip(self.values, self._lift(other))])

    def __neg__(self) -> "Gamble":
        return Gamble(self.space, [-x for x in self.values])

    def __mul__(self, other) -> "Gamble":
        """Scalar multiple, or pointwise product with another gamble."""
        return Gamble(self.space, [x * y for x, y in zip(self.values, self._lift(other))])

    __rmul__ = __mul__

    def min(self) -> Fraction:
        return min(self.values)

    def max(self) -> Fraction:
        return max(self.values)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.space.atoms, self.values))

    def __repr__(self) -> str:
        return "Gamble(" + ", ".join(fmt(v) for v in self.values) + ")"


@dataclass(frozen=True)
class Event:
    """A subset of the atoms of a space (possibly empty or full)."""

    space: FiniteSpace
    members: frozenset[str]

    def __init__(self, space: FiniteSpace, members: Iterable[str]):
        members = frozenset(str(m) for m in members)
        unknown = members - set(space.atoms)
        if unknown:
            raise ModelError(f"event mentions unknown atoms {sorted(unknown)}")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "members", members)

    def complement(self) -> "Event":
        return Event(self.space, [a for a in self.space.atoms if a not in self.members])

    def __and__(self, other: "Event") -> "Event":
        _check_same_space(self, other)
        return Event(self.space, self.members & other.members)

    def __or__(self, other: "Event") -> "Event":
        _check_same_space(self, other)
        return Event(self.space, self.members | other.members)

    def __contains__(self, atom: str) -> bool:
        return atom in self.members

    def sorted_members(self) -> list[str]:
        """Members in the space's atom order."""
        return [a for a in self.space.atoms if a in self.members]

    def indicator(self) -> Gamble:
        return indicator(self)

    def __repr__(self) -> str:
        return "Event{" + ", ".join(self.sorted_members()) + "}"


def indicator(event: Event) -> Gamble:
    """The gamble that is 1 on *event* and 0 elsewhere."""
    return Gamble(event.space, [1 if a in event.members else 0 for a in event.space.atoms])


@dataclass(frozen=True)
class EventGamble:
    """A gamble on the occurrence of an event: ``lam * I_B + mu * I_coB``."""

    event: Event
    lam: Fraction
    mu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lam", as_rational(self.lam))
        object.__setattr__(self, "mu", as_rational(self.mu))

    def gamble(self) -> Gamble:
        return event_gamble(self.event, self.lam, self.mu)


def event_gamble(event: Event, lam, mu) -> Gamble:
    lam, mu = as_rational(lam), as_rational(mu)
    return Gamble(event.space, [lam if a in event.members else mu for a in event.space.atoms])


class OptionSet:
    """A finite set of gambles on one space.

    Duplicates collapse and equality ignores order, but iteration follows
    first-insertion order so that results and certificates are reproducible.
    """

    __slots__ = ("space", "_items", "_set")

    def __init__(self, gambles: Iterable[Gamble], space: FiniteSpace | None = None):
        items: list[Gamble] = []
        seen: set[Gamble] = set()
        for g in gambles:
            if not isinstance(g, Gamble):
                raise ModelError(f"option sets hold gambles, got {type(g).__name__}")
            if space is None:
                space = g.space
            elif g.space != space:
                raise SpaceMismatch(f"{g.space.atoms} vs {space.atoms}")
            if g not in seen:
                seen.add(g)
                items.append(g)
        self.space = space
        self._items = tuple(items)
        self._set = frozenset(items)

    def __iter__(self):
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __contains__(self, g) -> bool:
        return g in self._set

    def __eq__(self, other) -> bool:
        if isinstance(other, OptionSet):
            return self._set == other._set
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._set)

    def __le__(self, other: "OptionSet") -> bool:
        return self._set <= other._set

    def __sub__(self, other: "OptionSet") -> "OptionSet":
        return OptionSet([g for g in self._items if g not in other._set], self.space)

    def __or__(self, other: "OptionSet") -> "OptionSet":
        return OptionSet(list(self._items) + list(other._items), self.space or other.space)

    def without(self, g: Gamble) -> "OptionSet":
        return OptionSet([h for h in self._items if h != g], self.space)

    def shifted(self, c) -> "OptionSet":
        """``{f + c : f in self}``."""
        return OptionSet([g + c for g in self._items], self.space)

    @property
    def gambles(self) -> tuple[Gamble, ...]:
        return self._items

    def __repr__(self) -> str:
        return "OptionSet{" + "; ".join(repr(g) for g in self._items) + "}"


def opt_minus(A: OptionSet, f: Gamble) -> OptionSet:
    """``A ⊖ f = {g - f : g in A, g != f}``."""
    if f not in A:
        raise FNotInSet(f"{f!r} is not in {A!r}")
    return OptionSet([g - f for g in A if g != f], A.space)


DOMINANCE_KINDS = ("strict-uniform", "strict-pointwise", "weak")


def dominates(f: Gamble, g: Gamble, kind: str = "strict-pointwise") -> bool:
    """Compare two gambles.

    ``strict-uniform``: ``min(f - g) > 0``; ``strict-pointwise``: ``f >= g``
    and ``f != g``; ``weak``: ``f >= g`` everywhere.
    """
    _check_same_space(f, g)
    diff = (f - g).values
    if kind == "strict-uniform":
        return min(diff) > 0
    if kind == "strict-pointwise":
        return all(d >= 0 for d in diff) and any(d > 0 for d in diff)
    if kind == "weak":
        return all(d >= 0 for d in diff)
    raise ValueError(f"unknown dominance kind {kind!r}; expected one of {DOMINANCE_KINDS}")


@dataclass(frozen=True)
class PosiResult:
    member: bool
    coefficients: tuple[Fraction, ...] | None = None

    def __bool__(self) -> bool:
        return self.member


def posi_member(h: Gamble, generators: OptionSet) -> PosiResult:
    """Decide whether *h* is a positive linear combination of *generators*.

    That is ``h = sum(lam_k * f_k)`` with all ``lam_k >= 0`` and not all zero.
    Decided with an exact LP; for ``h = 0`` the normalisation ``sum(lam) = 1``
    is added so that the trivial combination is excluded.
    """
    from .lp import LinearProgram, lp_minimize

    gens = list(generators)
    if not gens:
        raise ValueError("posi_member needs at least one generator")
    _check_same_space(h, gens[0])
    n = len(gens)
    rows, rels, rhs = [], [], []
    for i in range(len(h.space)):
        rows.append([g.values[i] for g in gens])
        rels.append("==")
        rhs.append(h.values[i])
    if h.is_zero():
        rows.append([1] * n)
        rels.append("==")
        rhs.append(1)
    lp = LinearProgram(objective=[1] * n, rows=rows, relations=rels, rhs=rhs)
    out = lp_minimize(lp)
    if out.status != "optimal":
        return PosiResult(False)
    lam = tuple(out.x)
    # recheck the witness by substitution
    combo = h.space.zero()
    for c, g in zip(lam, gens):
        combo = combo + g * c
    assert combo == h and all(c >= 0 for c in lam) and any(c > 0 for c in lam)
    return PosiResult(True, lam)


@dataclass(frozen=True)
class Variable:
    """A map from the atoms of a space into a finite list of value labels.

    Variables need not be surjective: unreached codomain values simply get
    probability zero.
    """

    space: FiniteSpace
    codomain: tuple[str, ...]
    assignment: tuple[str, ...] = field(repr=False)

    def __init__(self, space: FiniteSpace, codomain: Sequence[str], assignment):
        codomain = tuple(str(c) for c in codomain)
        if not codomain:
            raise ModelError("a variable needs a non-empty codomain")
        if len(set(codomain)) != len(codomain):
            raise ModelError(f"duplicate codomain labels in {codomain}")
        if isinstance(assignment, Mapping):
            missing = [a for a in space.atoms if a not in assignment]
            if missing:
                raise ModelError(f"variable assignment misses atoms {missing}")
            unknown = set(assignment) - set(space.atoms)
            if unknown:
                raise ModelError(f"variable assignment mentions unknown atoms {sorted(unknown)}")
            assignment = [assignment[a] for a in space.atoms]
        assignment = tuple(str(v) for v in assignment)
        if len(assignment) != len(space):
            raise ModelError("variable assignment must give one value per atom")
        bad = set(assignment) - set(codomain)
        if bad:
            raise ModelError(f"assigned values {sorted(bad)} are not in the codomain")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "codomain", codomain)
        object.__setattr__(self, "assignment", assignment)

    @property
    def codomain_space(self) -> FiniteSpace:
        return FiniteSpace(self.codomain)

    def value(self, atom: str) -> str:
        return self.assignment[self.space.index(atom)]

    def preimage(self, values: Iterable[str]) -> Event:
        """The event ``Z in values``, i.e. ``Z^{-1}(values)``."""
        values = set(values)
        unknown = values - set(self.codomain)
        if unknown:
            raise ModelError(f"{sorted(unknown)} not in codomain {self.codomain}")
        return Event(self.space, [a for a, v in zip(self.space.atoms, self.assignment) if v in values])

    def compose(self, h: Gamble) -> Gamble:
        """``h(Z) = h ∘ Z`` for a gamble *h* on the codomain."""
        if h.space.atoms != self.codomain:
            raise SpaceMismatch(f"gamble lives on {h.space.atoms}, codomain is {self.codomain}")
        pos = {c: i for i, c in enumerate(self.codomain)}
        return Gamble(self.space, [h.values[pos[v]] for v in self.assignment])

    def compose_set(self, H: OptionSet) -> OptionSet:
        return OptionSet([self.compose(h) for h in H], self.space)
