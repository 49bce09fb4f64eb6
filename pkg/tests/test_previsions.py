from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from credal_choice import (ArchimedeanModel, CredalSet, FiniteSpace, LinearPrevision, ModelError,
                           SpaceMismatch, VertexFormRequired, check_lower_prevision_properties,
                           indicator, is_precise_on, prevision_eval)
from credal_choice.verify import fixtures as fx

from conftest import credal_sets, events, gambles, spaces

TWO = FiniteSpace(["1", "2"])


def hand_lower(pmfs, values):
    """Oracle: minimum of the expectations over listed pmfs."""
    return min(sum(F(p) * F(v) for p, v in zip(pmf, values)) for pmf in pmfs)


class TestLinearPrevision:
    def test_rejects_bad_sum(self):
        with pytest.raises(ModelError):
            LinearPrevision(TWO, [F(1, 2), F(2, 5)])

    def test_rejects_negative_mass(self):
        with pytest.raises(ModelError):
            LinearPrevision(TWO, [F(3, 2), F(-1, 2)])

    def test_rejects_unknown_atoms(self):
        with pytest.raises(ModelError):
            LinearPrevision(TWO, {"1": 1, "3": 0})

    def test_uniform_probability_of_event(self):
        assert fx.UNIF(indicator(fx.B)) == F(1, 2)


class TestPrevisionEval:
    def test_uniform_both_sides(self):
        assert prevision_eval(fx.UNIF, indicator(fx.B), "lower") == F(1, 2)
        assert prevision_eval(fx.UNIF, indicator(fx.B), "upper") == F(1, 2)

    def test_vacuous_is_min_and_max(self):
        f = TWO.gamble([2, -1])
        assert prevision_eval(fx.VAC2, f, "lower") == -1
        assert prevision_eval(fx.VAC2, f, "upper") == 2

    def test_two_vertex_event_bounds(self):
        IB = indicator(fx.B)
        assert prevision_eval(fx.C2, IB, "lower") == hand_lower([(F(1, 4),) * 4, fx.P2.pmf], IB.values)
        assert prevision_eval(fx.C2, IB, "lower") == F(3, 10)
        assert prevision_eval(fx.C2, IB, "upper") == F(1, 2)

    def test_space_mismatch(self):
        with pytest.raises(SpaceMismatch):
            prevision_eval(fx.C2, TWO.zero())

    def test_bad_side(self):
        with pytest.raises(ValueError):
            prevision_eval(fx.C2, indicator(fx.B), "middle")

    @given(st.data())
    def test_single_vertex_matches_linear(self, data):
        s = data.draw(spaces())
        from conftest import pmfs
        P = data.draw(pmfs(s))
        f = data.draw(gambles(s))
        assert prevision_eval(CredalSet(s, [P]), f) == P(f)


class TestPrecision:
    def test_single_vertex_precise(self):
        assert is_precise_on(CredalSet(fx.OMEGA4, [fx.DEP]), fx.OMEGA4.gamble([1, 2, 3, 4]))

    def test_constants_precise_under_vacuous(self):
        assert is_precise_on(fx.VAC2, TWO.constant(F(7, 3)))

    def test_event_imprecise_under_two_vertices(self):
        assert not is_precise_on(fx.C2, indicator(fx.B))


class TestCredalSet:
    def test_duplicate_vertices_collapse(self):
        assert len(CredalSet(TWO, [[1, 0], [1, 0], [0, 1]]).vertices) == 2

    def test_vertex_must_satisfy_constraints(self):
        with pytest.raises(ModelError):
            CredalSet(TWO, [[1, 0]], [([1, 0], "<=", F(1, 2))])

    def test_empty_constraint_form_rejected(self):
        with pytest.raises(ModelError):
            CredalSet(TWO, [], [([1, 0], ">=", 2)])

    def test_constraint_form_evaluates_through_lp(self):
        cs = CredalSet(TWO, [], [([1, 0], ">=", F(1, 3)), ([1, 0], "<=", F(1, 2))])
        f = TWO.gamble([3, -1])
        assert cs.lower(f) == F(1, 3) * 3 - F(2, 3)
        assert cs.upper(f) == F(1, 2) * 3 - F(1, 2)

    def test_constraint_form_has_no_vertices(self):
        cs = CredalSet(TWO, [], [([1, 0], ">=", F(1, 3))])
        with pytest.raises(VertexFormRequired):
            cs.require_vertices()

    def test_lower_set_needs_one_space(self):
        with pytest.raises(SpaceMismatch):
            ArchimedeanModel([fx.C2, fx.VAC2])

    def test_lower_set_needs_members(self):
        with pytest.raises(ModelError):
            ArchimedeanModel([])

    @given(st.data())
    def test_conjugacy_and_attainment(self, data):
        s = data.draw(spaces())
        m = data.draw(credal_sets(s))
        f = data.draw(gambles(s))
        assert m.upper(f) == -m.lower(-f)
        assert m.argmin(f)(f) == m.lower(f)
        assert m.lower(f) == hand_lower([P.pmf for P in m.vertices], f.values)

    @given(st.data())
    def test_lower_event_plus_upper_complement(self, data):
        s = data.draw(spaces())
        m = data.draw(credal_sets(s))
        E = data.draw(events(s))
        assert m.lower(indicator(E)) + m.upper(indicator(E.complement())) == 1


class TestCoherenceProperties:
    def test_vertex_form_has_no_violations(self):
        rep = check_lower_prevision_properties(fx.C2, samples=500, seed=3)
        assert rep.ok and rep.instances == 500

    def test_superadditivity_instance(self):
        IB = indicator(fx.B)
        assert fx.C2.lower(IB * 2) == F(3, 5) >= fx.C2.lower(IB) + fx.C2.lower(IB)

    def test_constraint_form_has_no_violations(self):
        cs = CredalSet(TWO, [], [([2, -1], ">=", 0)])
        assert check_lower_prevision_properties(cs, samples=40, seed=1).ok

    def test_sample_count_guard(self):
        with pytest.raises(ValueError):
            check_lower_prevision_properties(fx.C2, samples=0)

    def test_a_broken_lower_prevision_is_caught(self, monkeypatch):
        # an upper envelope posing as a lower one breaks superadditivity and more
        monkeypatch.setattr(CredalSet, "lower", lambda self, f: max(P(f) for P in self.vertices))
        rep = check_lower_prevision_properties(fx.C2, samples=50, seed=0)
        assert not rep.ok
        assert {name for name, _ in rep.violations} & {"LP3", "LP4", "LP8"}
