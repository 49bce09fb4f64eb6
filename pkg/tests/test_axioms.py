from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from credal_choice import (ArchimedeanModel, CredalSet, LinearPrevision, OptionSet,
                           PreconditionFailed, check_coherence_axioms, check_mixing_axiom_instance,
                           find_mixing_violation, k_member)
from credal_choice.verify import fixtures as fx

from conftest import credal_sets, gambles, pmfs, spaces

TWO = fx.OMEGA2


def g2(a, b):
    return TWO.gamble([a, b])


class TestCoherence:
    def test_two_vertex_fixture_has_no_violations(self):
        rep = check_coherence_axioms(fx.C2, instances=1000, seed=0)
        assert rep.ok and rep.instances == 1000
        assert all(r.instances == 200 for r in rep.reports.values())

    @pytest.mark.parametrize("model", [fx.UNIF, fx.VAC2, fx.EADM, fx.COR1])
    def test_fixtures(self, model):
        assert check_coherence_axioms(model, instances=100, seed=4).ok

    def test_budget_guard(self):
        with pytest.raises(ValueError):
            check_coherence_axioms(fx.C2, instances=0)

    def test_violations_are_reported(self, monkeypatch):
        # a membership test that also accepts {0} must trip K1
        import credal_choice.axioms as ax
        monkeypatch.setattr(ax, "k_member", lambda model, A: True)
        rep = check_coherence_axioms(fx.C2, instances=10, seed=0)
        assert not rep.reports["K1"].ok and rep.reports["K2"].ok


class TestMixingInstance:
    def test_identical_sets_pass(self):
        A = OptionSet([g2(2, -1), g2(-1, 2)])
        assert check_mixing_axiom_instance(fx.VAC2, A, A)

    def test_linear_model_passes(self):
        P = LinearPrevision(TWO, [F(1, 3), F(2, 3)])
        f, g = g2(2, -1), g2(-1, 2)
        assert check_mixing_axiom_instance(P, OptionSet([f, g]), OptionSet([f, g, f + g]))

    def test_vacuous_fails(self):
        B = OptionSet([g2(2, -1), g2(-1, 2)])
        A = B | OptionSet([g2(1, 1)])
        assert not check_mixing_axiom_instance(fx.VAC2, B, A)

    def test_subset_precondition(self):
        with pytest.raises(PreconditionFailed):
            check_mixing_axiom_instance(fx.VAC2, OptionSet([g2(1, 0), g2(0, 1)]), OptionSet([g2(1, 0)]))

    def test_posi_precondition(self):
        B = OptionSet([g2(1, 0)])
        with pytest.raises(PreconditionFailed):
            check_mixing_axiom_instance(fx.VAC2, B, B | OptionSet([g2(0, 1)]))


class TestMixingFalsifier:
    def test_vacuous_has_a_witness(self):
        w = find_mixing_violation(fx.VAC2, trials=100, seed=0)
        assert w is not None
        assert k_member(fx.VAC2, w.A) and not k_member(fx.VAC2, w.B)
        assert not check_mixing_axiom_instance(fx.VAC2, w.B, w.A)

    def test_targeted_sweep_finds_what_random_misses(self):
        w = find_mixing_violation(fx.C2, trials=1, seed=0)
        assert w is not None and not check_mixing_axiom_instance(fx.C2, w.B, w.A)

    def test_single_vertex_has_none(self):
        assert find_mixing_violation(CredalSet(fx.OMEGA4, [fx.DEP]), trials=1000, seed=2) is None

    def test_linear_lower_set_has_none(self):
        assert find_mixing_violation(fx.EADM, trials=1000, seed=5) is None

    def test_budget_guard(self):
        with pytest.raises(ValueError):
            find_mixing_violation(fx.VAC2, trials=0)

    @settings(max_examples=25)
    @given(st.data())
    def test_linear_members_never_yield_witnesses(self, data):
        s = data.draw(spaces(2, 4))
        Ps = data.draw(st.lists(pmfs(s), min_size=1, max_size=3))
        assert find_mixing_violation(ArchimedeanModel(Ps), trials=50,
                                     seed=data.draw(st.integers(0, 99))) is None

    @settings(max_examples=25)
    @given(st.data())
    def test_witnesses_self_validate(self, data):
        s = data.draw(spaces(2, 4))
        m = data.draw(credal_sets(s))
        w = find_mixing_violation(m, trials=20, seed=data.draw(st.integers(0, 99)))
        if w is not None:
            assert not check_mixing_axiom_instance(m, w.B, w.A)
        else:
            # only models that are precise everywhere escape the sweep
            assert all(m.lower(f) == m.upper(f) for f in (data.draw(gambles(s)) for _ in range(5)))
