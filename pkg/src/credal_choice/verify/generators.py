"""Seeded random generators for models, events, option sets and polytopes."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from ..core import Event, FiniteSpace, Gamble, OptionSet
from ..errors import ModelError
from ..marginals import ProductSpace
from ..previsions import ArchimedeanModel, CredalSet, LinearPrevision, random_gamble

MODEL_KINDS = ("linear", "credal", "product-factorizing", "lower_set")


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 1
    # overrides the default case count of every randomized battery
    trials: int | None = None
    min_atoms: int = 2
    max_atoms: int = 8
    max_vertices: int = 5
    subset_cap: int = 16
    batteries: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.trials is not None and self.trials < 1:
            raise ModelError("trials must be a positive integer")
        if min(self.min_atoms, self.max_atoms, self.max_vertices, self.subset_cap) < 1:
            raise ModelError("config bounds must be positive")
        if self.min_atoms < 2 or self.min_atoms > self.max_atoms:
            raise ModelError("need 2 <= min_atoms <= max_atoms")
        if not 0 <= self.seed < 2 ** 64:
            raise ModelError("seed must be a 64-bit unsigned integer")

    def rng(self, salt: str) -> random.Random:
        """An independent stream per battery, fixed by the seed."""
        return random.Random(f"{self.seed}:{salt}")

    def count(self, default: int) -> int:
        return self.trials if self.trials is not None else default


def numbered_space(n: int) -> FiniteSpace:
    return FiniteSpace([f"w{i}" for i in range(n)])


def random_pmf(space: FiniteSpace, rng: random.Random, zero_rate: float = 0.15) -> LinearPrevision:
    """Integer weights normalised; some masses may be zero."""
    while True:
        w = [0 if rng.random() < zero_rate else rng.randint(1, 12) for _ in space.atoms]
        if sum(w):
            total = sum(w)
            return LinearPrevision(space, [Fraction(x, total) for x in w])


def random_marginal(n: int, rng: random.Random, positive: bool = False) -> tuple[Fraction, ...]:
    while True:
        w = [rng.randint(1 if positive else 0, 9) for _ in range(n)]
        if sum(w):
            return tuple(Fraction(x, sum(w)) for x in w)


def random_credal(space: FiniteSpace, rng: random.Random, max_vertices: int = 5) -> CredalSet:
    k = rng.randint(1, max_vertices)
    return CredalSet(space, [random_pmf(space, rng) for _ in range(k)])


def random_event(space: FiniteSpace, rng: random.Random) -> Event:
    return Event(space, [a for a in space.atoms if rng.random() < 0.5])


def random_option_set(space: FiniteSpace, rng: random.Random, max_size: int = 6,
                      den: int = 2, span: int = 3) -> OptionSet:
    k = rng.randint(1, max_size)
    return OptionSet([random_gamble(space, rng, -span, span, den) for _ in range(k)], space)


def gen_product_factorizing(rng: random.Random, nx: int, ny: int, max_vertices: int = 4,
                            positive_x: bool = False) -> tuple[ProductSpace, CredalSet]:
    """Vertices are products of varying X-marginals with one shared Y-marginal."""
    ps = ProductSpace([f"x{i}" for i in range(nx)], [f"y{j}" for j in range(ny)])
    py = random_marginal(ny, rng)
    k = rng.randint(1, max_vertices)
    verts = [ps.product(random_marginal(nx, rng, positive_x), py) for _ in range(k)]
    return ps, CredalSet(ps.space, verts)


def gen_random_model(config: SuiteConfig, kind: str, rng: random.Random | None = None):
    """A random model of the given kind; see :data:`MODEL_KINDS`."""
    rng = rng or config.rng(f"model:{kind}")
    if kind == "product-factorizing":
        return gen_product_factorizing(rng, rng.randint(2, 3), rng.randint(2, 3),
                                       config.max_vertices)[1]
    space = numbered_space(rng.randint(config.min_atoms, config.max_atoms))
    if kind == "linear":
        return random_pmf(space, rng)
    if kind == "credal":
        return random_credal(space, rng, config.max_vertices)
    if kind == "lower_set":
        return ArchimedeanModel([random_credal(space, rng, min(3, config.max_vertices))
                                 for _ in range(rng.randint(1, 3))])
    raise ValueError(f"unknown model kind {kind!r}; expected one of {MODEL_KINDS}")


def gen_all_linear_lower_set(rng: random.Random, n: int, k: int) -> ArchimedeanModel:
    space = numbered_space(n)
    return ArchimedeanModel([CredalSet(space, [random_pmf(space, rng)]) for _ in range(k)])


def _split(mass: Fraction, atoms: list[str], rng: random.Random) -> dict[str, Fraction]:
    w = [rng.randint(1, 5) for _ in atoms]
    return {a: mass * x / sum(w) for a, x in zip(atoms, w)}


def gen_factorizing_event_case(rng: random.Random, n: int, max_vertices: int = 5):
    """A credal set, A and B with every vertex independent and sharing P(B).

    Needs ``n >= 4`` so that all four cells of the A/B partition are non-empty.
    """
    space = numbered_space(n)
    atoms = list(space.atoms)
    rng.shuffle(atoms)
    cuts = sorted(rng.sample(range(1, n), 3))
    cells = [atoms[:cuts[0]], atoms[cuts[0]:cuts[1]], atoms[cuts[1]:cuts[2]], atoms[cuts[2]:]]
    A = Event(space, cells[0] + cells[1])
    B = Event(space, cells[0] + cells[2])
    beta = Fraction(rng.randint(1, 9), 10)
    verts = []
    for _ in range(rng.randint(1, max_vertices)):
        alpha = Fraction(rng.randint(0, 10), 10)
        mass = {}
        for cell, m in zip(cells, (alpha * beta, alpha * (1 - beta),
                                   (1 - alpha) * beta, (1 - alpha) * (1 - beta))):
            mass.update(_split(m, cell, rng))
        verts.append(LinearPrevision(space, mass))
    return CredalSet(space, verts), A, B


def gen_independent_linear_case(rng: random.Random, n: int):
    m, A, B = gen_factorizing_event_case(rng, n, 1)
    return m.vertices[0], A, B


# ---------------------------------------------------------------- polytopes

def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Exact Gaussian elimination for a square system; None when singular."""
    n = len(rows)
    M = [list(r) + [b] for r, b in zip(rows, rhs)]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return None
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [v / piv for v in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return [M[r][n] for r in range(n)]


def polytope_vertices(n: int, cons: list[tuple[list[Fraction], Fraction]]) -> list[tuple[Fraction, ...]]:
    """Brute-force vertices of ``{p in simplex : c·p >= r}`` by solving every active set."""
    ineqs = [([Fraction(int(i == j)) for j in range(n)], Fraction(0)) for i in range(n)] + cons
    found = []
    for active in itertools.combinations(range(len(ineqs)), n - 1):
        rows = [[Fraction(1)] * n] + [ineqs[i][0] for i in active]
        rhs = [Fraction(1)] + [ineqs[i][1] for i in active]
        p = _solve(rows, rhs)
        if p is None:
            continue
        if all(sum(c * x for c, x in zip(row, p)) >= r for row, r in ineqs):
            t = tuple(p)
            if t not in found:
                found.append(t)
    return found


def gen_polytope(rng: random.Random, n: int, k: int = 3):
    """Random constraints satisfied by a random interior point, plus the brute-forced vertices."""
    space = numbered_space(n)
    centre = random_marginal(n, rng, positive=True)
    cons = []
    for _ in range(k):
        c = [Fraction(rng.randint(-4, 4)) for _ in range(n)]
        val = sum(a * b for a, b in zip(c, centre))
        cons.append((c, val - Fraction(rng.randint(0, 4), 10)))
    verts = polytope_vertices(n, cons)
    vertex_form = CredalSet(space, verts)
    constraint_form = CredalSet(space, (), [(c, ">=", r) for c, r in cons])
    return vertex_form, constraint_form


def random_gamble_on(space: FiniteSpace, rng: random.Random) -> Gamble:
    return random_gamble(space, rng, -5, 5, 3)
