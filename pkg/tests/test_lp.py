import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from credal_choice import LinearProgram, MalformedProgram, lp_minimize, open_halfplane_pair_feasible
from credal_choice.lp import open_halfplane_pair_witness

vec2 = st.tuples(st.fractions(-4, 4, max_denominator=5), st.fractions(-4, 4, max_denominator=5))


def simplex_program(c, extra_rows=(), extra_rhs=()):
    n = len(c)
    rows = [[1] * n] + [list(r) for r in extra_rows]
    return LinearProgram(c, rows, ["=="] + [">="] * len(extra_rows), [1] + list(extra_rhs))


def oracle_min(c, rows, rhs):
    """Minimum over basic feasible points of ``{p >= 0, sum p = 1, rows·p >= rhs}``."""
    n = len(c)
    ineq = [([int(i == j) for j in range(n)], 0) for i in range(n)] + list(zip(rows, rhs))
    best = None
    for active in itertools.combinations(ineq, n - 1):
        M = [[F(1)] * n + [F(1)]] + [[F(v) for v in r] + [F(b)] for r, b in active]
        # Gauss-Jordan on the augmented matrix
        ok = True
        for col in range(n):
            piv = next((i for i in range(col, n) if M[i][col] != 0), None)
            if piv is None:
                ok = False
                break
            M[col], M[piv] = M[piv], M[col]
            M[col] = [v / M[col][col] for v in M[col]]
            for i in range(n):
                if i != col and M[i][col]:
                    M[i] = [a - M[i][col] * b for a, b in zip(M[i], M[col])]
        if not ok:
            continue
        p = [M[i][n] for i in range(n)]
        if all(sum(F(a) * x for a, x in zip(r, p)) >= b for r, b in ineq):
            val = sum(F(a) * x for a, x in zip(c, p))
            best = val if best is None else min(best, val)
    return best


class TestLpMinimize:
    def test_min_first_coordinate(self):
        out = lp_minimize(simplex_program([1, 0]))
        assert out.status == "optimal" and out.optimum == 0 and out.x == (0, 1)

    def test_min_difference(self):
        out = lp_minimize(simplex_program([1, -1]))
        assert out.optimum == -1 and out.x == (0, 1)

    def test_min_coordinate_of_objective(self):
        out = lp_minimize(simplex_program([3, 1, 2]))
        assert out.optimum == 1 and out.x == (0, 1, 0)

    def test_infeasible(self):
        lp = LinearProgram([1, 1], [[1, 1]], ["<="], [-1])
        assert lp_minimize(lp).status == "infeasible"

    def test_unbounded(self):
        lp = LinearProgram([-1, 0], [[1, -1]], [">="], [0])
        assert lp_minimize(lp).status == "unbounded"

    def test_free_variable(self):
        lp = LinearProgram([1], [[1]], [">="], [-3], free=[True])
        assert lp_minimize(lp).optimum == -3

    def test_redundant_equalities(self):
        lp = LinearProgram([1, 2], [[1, 1], [2, 2]], ["==", "=="], [1, 2])
        assert lp_minimize(lp).optimum == 1

    def test_degenerate_program_terminates(self):
        # a classic cycling-prone shape: many constraints tight at the origin
        lp = LinearProgram([F(-3, 4), 150, F(-1, 50), 6],
                           [[F(1, 4), -60, F(-1, 25), 9], [F(1, 2), -90, F(-1, 50), 3], [0, 0, 1, 0]],
                           ["<=", "<=", "<="], [0, 0, 1])
        out = lp_minimize(lp)
        assert out.status == "optimal" and out.optimum == F(-1, 20)

    @pytest.mark.parametrize("bad", [
        dict(objective=[1, 2], rows=[[1]], relations=[">="], rhs=[0]),
        dict(objective=[1], rows=[[1]], relations=[">>"], rhs=[0]),
        dict(objective=[1], rows=[[1]], relations=[">=", "<="], rhs=[0]),
        dict(objective=[1], rows=[], relations=[], rhs=[], free=[True, False]),
        dict(objective=["x"], rows=[], relations=[], rhs=[]),
    ])
    def test_malformed(self, bad):
        with pytest.raises(MalformedProgram):
            LinearProgram(**bad)

    @given(st.lists(st.integers(-9, 9), min_size=2, max_size=6))
    def test_simplex_minimum_is_smallest_coefficient(self, c):
        assert lp_minimize(simplex_program(c)).optimum == min(c)

    @given(st.data())
    def test_matches_basic_solution_oracle(self, data):
        n = data.draw(st.integers(2, 4))
        k = data.draw(st.integers(0, 2))
        c = data.draw(st.lists(st.integers(-5, 5), min_size=n, max_size=n))
        rows = [data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n)) for _ in range(k)]
        rhs = [data.draw(st.fractions(-2, 1, max_denominator=4)) for _ in range(k)]
        out = lp_minimize(simplex_program(c, rows, rhs))
        want = oracle_min(c, rows, rhs)
        if want is None:
            assert out.status == "infeasible"
        else:
            assert out.status == "optimal" and out.optimum == want


class TestOpenHalfplanes:
    def test_zero_normal(self):
        assert not open_halfplane_pair_feasible((0, 0), (1, 0))

    def test_opposite_normals(self):
        assert not open_halfplane_pair_feasible((1, 0), (-2, 0))

    def test_independent_normals(self):
        assert open_halfplane_pair_feasible((1, 0), (0, 1))
        assert open_halfplane_pair_witness((1, 0), (0, 1)) == (-1, -1)

    def test_same_direction(self):
        x = open_halfplane_pair_witness((1, 2), (2, 4))
        assert x is not None and x[0] + 2 * x[1] < 0

    @given(vec2, vec2)
    def test_symmetric(self, a, b):
        assert open_halfplane_pair_feasible(a, b) == open_halfplane_pair_feasible(b, a)

    @given(vec2, vec2, st.fractions(F(1, 10), 5), st.fractions(F(1, 10), 5))
    def test_positive_scaling_invariant(self, a, b, s, t):
        scaled = (tuple(s * v for v in a), tuple(t * v for v in b))
        assert open_halfplane_pair_feasible(a, b) == open_halfplane_pair_feasible(*scaled)

    @given(vec2, vec2)
    def test_witness_or_lattice_search(self, a, b):
        x = open_halfplane_pair_witness(a, b)
        if x is not None:
            assert a[0] * x[0] + a[1] * x[1] < 0 and b[0] * x[0] + b[1] * x[1] < 0
        else:
            # independent oracle: the feasible set is an open cone, so a dense
            # set of directions would meet it
            for p, q in itertools.product(range(-12, 13), repeat=2):
                assert not (a[0] * p + a[1] * q < 0 and b[0] * p + b[1] * q < 0)
