from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from credal_choice import (ArchimedeanModel, CredalSet, CriterionMismatch, FiniteSpace,
                           LinearPrevision, OptionSet, SpaceMismatch, archimedean_slack, choose,
                           k_member, opt_minus, rejected_by_k)
from credal_choice.choice import dominance_filter
from credal_choice.verify import fixtures as fx

from conftest import credal_sets, gambles, option_sets, pmfs, space_of, spaces

TWO = fx.OMEGA2


def g2(a, b):
    return TWO.gamble([a, b])


VAC_A = OptionSet([g2(2, -1), g2(-1, 2), g2(1, 1)])
VAC_B = OptionSet([g2(2, -1), g2(-1, 2)])


def model_kinds(space):
    """One model of every kind on *space*, drawn by hypothesis."""
    return st.one_of(
        pmfs(space),
        credal_sets(space),
        st.lists(credal_sets(space, 3), min_size=1, max_size=3).map(ArchimedeanModel),
    )


class TestMembership:
    @pytest.mark.parametrize("model", [fx.UNIF, fx.C2, fx.VAC2, fx.EADM])
    def test_positive_constant_is_desirable(self, model):
        assert k_member(model, OptionSet([model.space.constant(1)]))

    @pytest.mark.parametrize("model", [fx.UNIF, fx.C2, fx.VAC2, fx.EADM])
    def test_zero_is_not(self, model):
        assert not k_member(model, OptionSet([model.space.zero()]))

    def test_vacuous_pair_versus_triple(self):
        assert k_member(fx.VAC2, VAC_A)
        assert not k_member(fx.VAC2, VAC_B)

    def test_empty_set_is_never_desirable(self):
        assert not k_member(fx.C2, OptionSet([], fx.OMEGA4))

    def test_space_mismatch(self):
        with pytest.raises(SpaceMismatch):
            k_member(fx.C2, VAC_A)

    @given(st.data())
    def test_lower_set_is_conjunction_of_members(self, data):
        s = data.draw(spaces(2, 4))
        ms = data.draw(st.lists(credal_sets(s, 3), min_size=1, max_size=3))
        A = data.draw(option_sets(s))
        assert k_member(ArchimedeanModel(ms), A) == all(k_member(m, A) for m in ms)


class TestSlack:
    def test_constant_one(self):
        assert archimedean_slack(fx.C2, OptionSet([fx.OMEGA4.constant(1)])) == 1

    def test_non_member(self):
        assert archimedean_slack(fx.C2, OptionSet([fx.OMEGA4.zero()])) is None

    def test_vacuous_triple(self):
        assert archimedean_slack(fx.VAC2, VAC_A) == 1
        assert k_member(fx.VAC2, VAC_A.shifted(F(-1, 2)))
        assert not k_member(fx.VAC2, VAC_A.shifted(-1))

    @given(st.data())
    def test_members_have_positive_slack(self, data):
        s = data.draw(spaces(2, 4))
        model = data.draw(model_kinds(s))
        A = data.draw(option_sets(s))
        slack = archimedean_slack(model, A)
        assert (slack is not None) == k_member(model, A)
        if slack is not None:
            assert slack > 0
            assert k_member(model, A.shifted(-slack / 2))


class TestChoose:
    def test_expected_utility(self):
        P = LinearPrevision(TWO, [F(1, 2), F(1, 2)])
        A = OptionSet([g2(1, 0), g2(0, 1), g2(2, -2)])
        res = choose(P, A, "meu")
        assert res.chosen == OptionSet([g2(1, 0), g2(0, 1)])
        assert res.rejected == OptionSet([g2(2, -2)])
        assert P(res.certificates[g2(2, -2)]) > P(g2(2, -2))

    def test_e_admissibility_versus_maximality(self):
        A = OptionSet([g2(2, -1), g2(-1, 2), g2(F(1, 4), F(1, 4))])
        assert choose(fx.EADM, A, "eadmissibility").chosen == OptionSet([g2(2, -1), g2(-1, 2)])
        assert choose(fx.VAC2, A, "maximality").chosen == A
        # over single-vertex members the set-valued rule reduces to E-admissibility
        assert choose(fx.EADM, A, "lowerset").chosen == OptionSet([g2(2, -1), g2(-1, 2)])
        assert choose(ArchimedeanModel([fx.VAC2]), A, "lowerset").chosen == A

    def test_ties_are_kept(self):
        P = LinearPrevision(TWO, [F(1, 2), F(1, 2)])
        A = OptionSet([g2(1, 0), g2(0, 1)])
        assert choose(P, A, "meu").chosen == A

    @pytest.mark.parametrize("model,criterion", [
        (fx.C2, "meu"),
        (fx.C2, "eadmissibility"),
        (fx.EADM, "maximality"),
        (fx.UNIF, "astrology"),
    ])
    def test_criterion_mismatch(self, model, criterion):
        with pytest.raises(CriterionMismatch):
            choose(model, OptionSet([model.space.zero()]), criterion)

    @given(st.data())
    def test_partition_and_duality(self, data):
        s = data.draw(spaces(2, 4))
        model = data.draw(model_kinds(s))
        A = data.draw(option_sets(s))
        res = choose(model, A, "lowerset")
        assert set(res.chosen) | set(res.rejected) == set(A)
        assert not set(res.chosen) & set(res.rejected)
        for f in A:
            assert (f in res.rejected) == rejected_by_k(model, A, f)
            assert rejected_by_k(model, A, f) == k_member(model, opt_minus(A, f))

    @given(st.data())
    def test_linear_models_collapse(self, data):
        s = data.draw(spaces(2, 5))
        P = data.draw(pmfs(s))
        A = data.draw(option_sets(s, 6))
        results = {choose(P, A, c).chosen for c in ("meu", "maximality", "eadmissibility", "lowerset")}
        assert len(results) == 1

    @given(st.data())
    def test_e_admissibility_is_union_of_expected_utility(self, data):
        s = data.draw(spaces(2, 4))
        Ps = data.draw(st.lists(pmfs(s), min_size=1, max_size=3))
        A = data.draw(option_sets(s))
        union = set()
        for P in Ps:
            union |= set(choose(P, A, "meu").chosen)
        assert set(choose(ArchimedeanModel(Ps), A, "eadmissibility").chosen) == union

    @given(st.data())
    def test_lowerset_is_union_of_maximality(self, data):
        s = data.draw(spaces(2, 4))
        ms = data.draw(st.lists(credal_sets(s, 3), min_size=1, max_size=3))
        A = data.draw(option_sets(s))
        union = set()
        for m in ms:
            union |= set(choose(m, A, "maximality").chosen)
        assert set(choose(ArchimedeanModel(ms), A, "lowerset").chosen) == union

    @given(st.data())
    def test_e_admissible_options_are_maximal(self, data):
        s = data.draw(spaces(2, 4))
        m = data.draw(credal_sets(s))
        A = data.draw(option_sets(s))
        eadm = choose(ArchimedeanModel(list(m.vertices)), A, "eadmissibility").chosen
        assert eadm <= choose(m, A, "maximality").chosen


class TestDominanceFilter:
    def test_dominated_option_removed(self):
        assert dominance_filter(OptionSet([g2(1, 1), g2(0, 0)])) == OptionSet([g2(1, 1)])

    def test_incomparable_kept(self):
        A = OptionSet([g2(1, 0), g2(0, 1)])
        assert dominance_filter(A) == A

    def test_singleton(self):
        A = OptionSet([g2(3, -3)])
        assert dominance_filter(A) == A
