from fractions import Fraction

from hypothesis import settings, strategies as st

from credal_choice import CredalSet, FiniteSpace, Gamble, LinearPrevision, OptionSet

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def space_of(n):
    return FiniteSpace([f"w{i}" for i in range(n)])


@st.composite
def spaces(draw, lo=2, hi=5):
    return space_of(draw(st.integers(lo, hi)))


@st.composite
def gambles(draw, space):
    return Gamble(space, draw(st.lists(small_rationals, min_size=len(space), max_size=len(space))))


@st.composite
def pmfs(draw, space, allow_zero=True):
    lo = 0 if allow_zero else 1
    w = draw(st.lists(st.integers(lo, 9), min_size=len(space), max_size=len(space))
             .filter(lambda xs: sum(xs) > 0))
    return LinearPrevision(space, [Fraction(x, sum(w)) for x in w])


@st.composite
def credal_sets(draw, space, max_vertices=4):
    k = draw(st.integers(1, max_vertices))
    return CredalSet(space, [draw(pmfs(space)) for _ in range(k)])


@st.composite
def events(draw, space):
    return space.event([a for a in space.atoms if draw(st.booleans())])


@st.composite
def option_sets(draw, space, max_size=5):
    k = draw(st.integers(1, max_size))
    return OptionSet([draw(gambles(space)) for _ in range(k)], space)
