"""Acceptance suite: every criterion at its stated size and time limit, seed 1.

Each test prints one ``PASS``/``FAIL`` line.  Run directly with
``python3 tests/test_acceptance.py`` for just those lines.
"""

import functools
from fractions import Fraction

import pytest

from credal_choice import independence as ind
from credal_choice.axioms import check_mixing_axiom_instance, find_mixing_violation
from credal_choice.verify import SuiteConfig, run_verify_suite
from credal_choice.verify import fixtures as fx

SEED = 1


@functools.lru_cache(maxsize=None)
def battery(name):
    return run_verify_suite(SuiteConfig(seed=SEED, batteries=(name,))).batteries[name]


def _report(capsys, number, title, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2} {title}: {detail}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    return ok


def _summary(b):
    return f"{b.cases} cases, {b.failures} failures, {b.runtime:.2f}s"


def criterion_1(capsys=None):
    b = battery("linear-independence")
    ok = (b.passed and b.cases >= 1000 and b.runtime < 10
          and b.stats.get("holds=True", 0) > 0 and b.stats.get("holds=False", 0) > 0)
    return _report(capsys, 1, "linear cone criterion = classical independence", ok, _summary(b))


def criterion_2(capsys=None):
    b = battery("credal-independence")
    c2 = ind.s_irrelevant(fx.C2, "event", fx.A, fx.B)
    ok = b.passed and b.cases >= 500 and b.runtime < 30 and not c2.holds
    return _report(capsys, 2, "pairwise-vertex decision = characterization", ok, _summary(b))


def criterion_3(capsys=None):
    b = battery("complementation")
    ok = b.passed and b.cases >= 1500
    return _report(capsys, 3, "complement invariance", ok, _summary(b))


def criterion_4(capsys=None):
    b = battery("precise-collapse")
    ok = b.passed and b.cases >= 500
    return _report(capsys, 4, "criteria collapse under a linear prevision", ok, _summary(b))


def criterion_5(capsys=None):
    b = battery("mixing")
    w = find_mixing_violation(fx.VAC2, trials=100, seed=SEED)
    ok = (b.passed and b.cases >= 101 and w is not None
          and not check_mixing_axiom_instance(fx.VAC2, w.B, w.A))
    return _report(capsys, 5, "mixing falsifier", ok, _summary(b))


def criterion_6(capsys=None):
    b = battery("coherence")
    ok = b.passed and all(b.stats.get(k, 0) >= 1000 for k in
                          ("linear", "credal", "product-factorizing", "lower_set"))
    return _report(capsys, 6, "K0-K4 instance checks", ok, _summary(b))


def criterion_7(capsys=None):
    b = battery("variable")
    ps = fx.OMEGA4_PRODUCT
    w = ind.s_irrelevant(fx.C2, "variable", ps.X, ps.Y).witness
    ok = (b.passed and b.runtime < 60 and w is not None and w.epsilon > 0
          and w.gambles[0].values == (Fraction(3, 5), Fraction(-2, 5)))
    return _report(capsys, 7, "variable-level exact vs sampled", ok, _summary(b))


def criterion_8(capsys=None):
    b = battery("marginal-mixing")
    ok = b.passed and b.stats.get("generated-irrelevant", 0) >= 200 and b.cases >= 701
    return _report(capsys, 8, "irrelevance forces a mixing marginal", ok, _summary(b))


def criterion_9(capsys=None):
    b = battery("lp-backend")
    ok = b.passed and b.cases >= 200
    return _report(capsys, 9, "vertex form = constraint form, positive slack", ok, _summary(b))


def criterion_10(capsys=None):
    b = battery("lp-properties")
    ok = b.passed and b.cases >= 20 * 500
    return _report(capsys, 10, "lower prevision properties", ok, _summary(b))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


class TestAcceptance:
    @pytest.mark.parametrize("check", CRITERIA, ids=lambda c: c.__name__)
    def test_criterion(self, check, capsys):
        assert check(capsys)


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    raise SystemExit(0 if all(results) else 1)
