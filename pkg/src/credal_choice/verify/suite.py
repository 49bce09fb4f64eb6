"""The verification batteries: each one a differential or oracle test with exact arithmetic."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .. import independence as ind
from ..axioms import (check_coherence_axioms, check_mixing_axiom_instance, find_mixing_violation,
                      random_member_set)
from ..choice import archimedean_slack, choose, k_member
from ..core import Event, OptionSet
from ..io import canonical_json, encode
from ..marginals import corollary1_check, distribution_model
from ..previsions import (ArchimedeanModel, CredalSet, LinearPrevision,
                          check_lower_prevision_properties, members)
from . import fixtures as fx
from .generators import (MODEL_KINDS, SuiteConfig, gen_all_linear_lower_set,
                         gen_factorizing_event_case, gen_independent_linear_case, gen_polytope,
                         gen_product_factorizing, gen_random_model, numbered_space, random_credal,
                         random_event, random_gamble_on, random_marginal, random_option_set,
                         random_pmf)


@dataclass
class BatteryResult:
    name: str
    cases: int = 0
    failures: int = 0
    counterexample: dict | None = None
    runtime: float = 0.0
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def fail(self, data: dict) -> None:
        self.failures += 1
        if self.counterexample is None:
            self.counterexample = data

    def bump(self, key: str) -> None:
        self.stats[key] = self.stats.get(key, 0) + 1


@dataclass
class SuiteReport:
    seed: int
    batteries: dict[str, BatteryResult]
    runtime: float

    @property
    def ok(self) -> bool:
        return all(b.passed for b in self.batteries.values())

    def to_dict(self, runtime: bool = True) -> dict:
        out = {"seed": self.seed, "ok": self.ok, "batteries": {}}
        for name, b in self.batteries.items():
            entry = {"cases": b.cases, "failures": b.failures, "passed": b.passed,
                     "counterexample": b.counterexample, "stats": b.stats}
            if runtime:
                entry["runtime"] = round(b.runtime, 3)
            out["batteries"][name] = entry
        if runtime:
            out["runtime"] = round(self.runtime, 3)
        return out

    def to_json(self, runtime: bool = True) -> str:
        return canonical_json(self.to_dict(runtime), indent=2)

    def to_text(self) -> str:
        lines = []
        for name, b in self.batteries.items():
            status = "PASS" if b.passed else "FAIL"
            lines.append(f"{status} {name}: {b.cases} cases, {b.failures} failures, {b.runtime:.2f}s")
            if b.counterexample is not None:
                lines.append("  first counterexample: " + canonical_json(b.counterexample))
        lines.append(f"{'OK' if self.ok else 'FAILED'} in {self.runtime:.2f}s")
        return "\n".join(lines)


def _event_case_file(model, A: Event, B: Event, **extra) -> dict:
    """A replayable model file naming the two events A and B."""
    out = {"space": list(model.space.atoms), "model": encode(model),
           "events": {"A": encode(A), "B": encode(B)}}
    out.update({k: encode(v) for k, v in extra.items()})
    return out


def _witness_ok(model, verdict, A, B) -> bool:
    """A failure witness must violate the direct criterion under its member."""
    w = verdict.witness
    if w is None:
        return False
    m = members(model)[w.member]
    lo_c, lo_a = ind._event_criterion(m, A, B, w.f)
    return lo_c < 0 and lo_a < 0 and (lo_c, lo_a) == (w.lower_on_complement, w.lower_on_event)


# ---------------------------------------------------------------- case streams

def linear_independence_cases(config: SuiteConfig):
    rng = config.rng("linear-independence")
    for _ in range(config.count(1000)):
        n = rng.randint(config.min_atoms, config.max_atoms)
        r = rng.random()
        if r < 0.4 and n >= 4:
            P, A, B = gen_independent_linear_case(rng, n)
            yield "independent", P, A, B
            continue
        space = numbered_space(n)
        if r < 0.5:
            j = rng.randrange(n)
            if rng.random() < 0.5:
                P = LinearPrevision(space, [int(i == j) for i in range(n)])
            else:
                P = random_pmf(space, rng, zero_rate=0.6)
            kind = "degenerate"
        else:
            P, kind = random_pmf(space, rng), "random"
        yield kind, P, random_event(space, rng), random_event(space, rng)


def credal_independence_cases(config: SuiteConfig):
    yield "C2", fx.C2, fx.A, fx.B
    rng = config.rng("credal-independence")
    hi = min(config.max_atoms, 8)
    for _ in range(config.count(500) - 1):
        n = rng.randint(config.min_atoms, hi)
        r = rng.random()
        if r < 0.3 and n >= 4:
            m, A, B = gen_factorizing_event_case(rng, n, config.max_vertices)
            yield "factorizing", m, A, B
            continue
        space = numbered_space(n)
        if r < 0.4:
            # A lies where every vertex puts zero mass
            dead = [a for a in space.atoms if rng.random() < 0.4] or [space.atoms[0]]
            live = [a for a in space.atoms if a not in dead] or [space.atoms[-1]]
            dead = [a for a in dead if a not in live]
            verts = []
            for _ in range(rng.randint(1, config.max_vertices)):
                w = {a: rng.randint(1, 9) for a in live}
                verts.append(LinearPrevision(space, {a: Fraction(x, sum(w.values())) for a, x in w.items()}))
            yield "trivial", CredalSet(space, verts), Event(space, dead), random_event(space, rng)
            continue
        m = random_credal(space, rng, config.max_vertices)
        yield "random", m, random_event(space, rng), random_event(space, rng)


# ---------------------------------------------------------------- batteries

def battery_linear_independence(config: SuiteConfig) -> BatteryResult:
    res = BatteryResult("linear-independence")
    for kind, P, A, B in linear_independence_cases(config):
        res.cases += 1
        direct = ind.s_irrelevant(P, "event", A, B, "direct")
        classical = ind.classical_independent(P, A, B)
        res.bump(f"holds={classical}")
        if direct.holds != classical or (not direct.holds and not _witness_ok(P, direct, A, B)):
            res.fail(_event_case_file(P, A, B, kind=kind, direct=direct.holds, classical=classical))
    return res


def battery_credal_independence(config: SuiteConfig) -> BatteryResult:
    res = BatteryResult("credal-independence")
    for kind, m, A, B in credal_independence_cases(config):
        res.cases += 1
        direct = ind.s_irrelevant(m, "event", A, B, "direct")
        char = ind.s_irrelevant(m, "event", A, B, "characterization")
        res.bump(f"holds={direct.holds}")
        expected = {"C2": False, "factorizing": True, "trivial": True}.get(kind)
        bad = (direct.holds != char.holds
               or (expected is not None and direct.holds != expected)
               or (not direct.holds and not _witness_ok(m, direct, A, B)))
        if bad:
            res.fail(_event_case_file(m, A, B, fixture=kind, direct=direct.holds,
                                      characterization=char.holds))
    return res


def battery_complementation(config: SuiteConfig) -> BatteryResult:
    res = BatteryResult("complementation")
    cases = [(m, A, B) for _, m, A, B in linear_independence_cases(config)]
    cases += [(m, A, B) for _, m, A, B in credal_independence_cases(config)]
    for m, A, B in cases:
        res.cases += 1
        verdicts = {ind.s_irrelevant(m, "event", a, b).holds
                    for a in (A, A.complement()) for b in (B, B.complement())}
        if len(verdicts) != 1:
            res.fail(_event_case_file(m, A, B))
    return res


def battery_precise_collapse(config: SuiteConfig) -> BatteryResult:
    res = BatteryResult("precise-collapse")
    rng = config.rng("precise-collapse")
    for _ in range(config.count(500)):
        space = numbered_space(rng.randint(config.min_atoms, min(config.max_atoms, 6)))
        P = random_pmf(space, rng)
        opts = random_option_set(space, rng, 6)
        res.cases += 1
        chosen = {c: choose(P, opts, c).chosen for c in ("meu", "maximality", "eadmissibility")}
        if len(set(chosen.values())) != 1:
            res.fail({"model": encode(P), "space": list(space.atoms), "option_set": encode(opts),
                      "chosen": encode(chosen)})
    return res


def battery_mixing(config: SuiteConfig) -> BatteryResult:
    res = BatteryResult("mixing")
    rng = config.rng("mixing")

    def self_validates(model, w) -> bool:
        return not check_mixing_axiom_instance(model, w.B, w.A)

    res.cases += 1
    w = find_mixing_violation(fx.VAC2, trials=100, seed=config.seed)
    if w is None or not self_validates(fx.VAC2, w):
        res.fail({"fixture": "VAC2", "witness": encode(w)})
    # witnesses on further non-linear models must validate too
    for _ in range(10):
        space = numbered_space(rng.randint(2, 4))
        m = CredalSet(space, [random_pmf(space, rng) for _ in range(rng.randint(2, 3))])
        res.cases += 1
        w = find_mixing_violation(m, trials=50, seed=rng.randrange(2 ** 32))
        if w is None:
            res.bump("nonlinear-without-witness")
        elif not self_validates(m, w):
            res.fail({"model": encode(m), "witness": encode(w)})
    for _ in range(config.count(100)):
        model = gen_all_linear_lower_set(rng, rng.randint(2, 4), rng.randint(1, 3))
        res.cases += 1
        w = find_mixing_violation(model, trials=1000, seed=rng.randrange(2 ** 32))
        if w is not None:
            res.fail({"model": encode(model), "witness": encode(w)})
    return res


def battery_coherence(config: SuiteConfig) -> BatteryResult:
    res = BatteryResult("coherence")
    rng = config.rng("coherence")
    per_kind = config.count(1000)
    plan = [(kind, gen_random_model(config, kind, rng)) for kind in MODEL_KINDS for _ in range(10)]
    for kind, model in plan:
        rep = check_coherence_axioms(model, instances=max(5, per_kind // 10),
                                     seed=rng.randrange(2 ** 32))
        res.cases += rep.instances
        res.stats[kind] = res.stats.get(kind, 0) + rep.instances
        if not rep.ok:
            bad = next(r for r in rep.reports.values() if not r.ok)
            res.fail({"kind": kind, "model": encode(model), "axiom": bad.axiom,
                      "instance": encode(bad.violations[0][0])})
    rep = check_coherence_axioms(fx.C2, instances=1000, seed=config.seed)
    res.cases += rep.instances
    if not rep.ok:
        res.fail({"fixture": "C2"})
    return res


def _expected_c2_variable_witness(w) -> bool:
    ps = fx.OMEGA4_PRODUCT
    cy = ps.Y.codomain_space
    want = cy.gamble([Fraction(3, 5), Fraction(-2, 5)])
    return w is not None and w.cells == (("a",), ("a'",)) and w.gambles == (want, cy.zero())


def battery_variable(config: SuiteConfig) -> BatteryResult:
    res = BatteryResult("variable")
    rng = config.rng("variable")
    ps = fx.OMEGA4_PRODUCT
    res.cases += 1
    exact = ind.s_irrelevant(fx.C2, "variable", ps.X, ps.Y)
    sampled = ind.s_irrelevant_variables_sampled(fx.C2, ps.X, ps.Y, trials=200, seed=config.seed)
    if exact.holds or not _expected_c2_variable_witness(sampled) \
            or not _expected_c2_variable_witness(exact.witness):
        res.fail({"fixture": "C2-product", "exact": exact.holds, "sampled": encode(sampled)})

    for nx, ny in ((2, 2), (2, 3)):
        for _ in range(config.count(40)):
            r = rng.random()
            if r < 0.3:
                p, model = gen_product_factorizing(rng, nx, ny)
                kind = "factorizing"
            elif r < 0.45:
                p, m1 = gen_product_factorizing(rng, nx, ny)
                _, m2 = gen_product_factorizing(rng, nx, ny)
                model, kind = ArchimedeanModel([m1, CredalSet(p.space, [
                    LinearPrevision(p.space, Q.pmf) for Q in m2.vertices])]), "lower_set"
            elif r < 0.55:
                p, _ = gen_product_factorizing(rng, nx, ny, 1)
                x0 = rng.randrange(nx)
                verts = [p.product([int(i == x0) for i in range(nx)], random_marginal(ny, rng))
                         for _ in range(rng.randint(1, 3))]
                model, kind = CredalSet(p.space, verts), "trivial"
            elif r < 0.75:
                # per-vertex products whose Y-marginals differ
                p, _ = gen_product_factorizing(rng, nx, ny, 1)
                verts = [p.product(random_marginal(nx, rng), random_marginal(ny, rng))
                         for _ in range(rng.randint(2, 3))]
                model, kind = CredalSet(p.space, verts), "vertex-products"
            else:
                p, _ = gen_product_factorizing(rng, nx, ny, 1)
                model, kind = random_credal(p.space, rng, 4), "random"
            res.cases += 1
            direct = ind.s_irrelevant(model, "variable", p.X, p.Y, "direct")
            char = ind.s_irrelevant(model, "variable", p.X, p.Y, "characterization")
            res.bump(f"holds={direct.holds}")
            sampled = ind.s_irrelevant_variables_sampled(model, p.X, p.Y, trials=200,
                                                         seed=rng.randrange(2 ** 32))
            ok = direct.holds == char.holds
            if kind in ("factorizing", "trivial") and not direct.holds:
                ok = False
            if direct.holds:
                ok = ok and sampled is None
            else:
                ok = ok and sampled is not None and sampled.source == "guided"
                if sampled is not None:
                    m = members(model)[sampled.member]
                    lowers = ind.partition_criterion(m, p.X, p.Y, sampled.cells, sampled.gambles)
                    ok = ok and max(lowers) < 0
            if not ok:
                res.fail({"kind": kind, "space": list(p.space.atoms), "model": encode(model),
                          "direct": direct.holds, "characterization": char.holds,
                          "sampled": encode(sampled)})
    return res


def battery_marginal_mixing(config: SuiteConfig) -> BatteryResult:
    res = BatteryResult("marginal-mixing")
    rng = config.rng("marginal-mixing")
    ps = fx.COR1_PRODUCT
    res.cases += 1
    rep = corollary1_check(fx.COR1, ps.X, ps.Y, trials=1000, seed=config.seed)
    explicit = ArchimedeanModel([CredalSet(ps.Y.codomain_space, [fx.R1]),
                                 CredalSet(ps.Y.codomain_space, [fx.R2])])
    if not rep.ok or rep.marginal != explicit:
        res.fail({"fixture": "COR1", "clauses": rep.clauses})
    marginal = distribution_model(fx.COR1, ps.Y)
    cy = ps.Y.codomain_space
    for _ in range(config.count(500)):
        H = random_option_set(cy, rng, 4)
        res.cases += 1
        got = {k_member(marginal, H), k_member(explicit, H), k_member(fx.COR1, ps.Y.compose_set(H))}
        if len(got) != 1:
            res.fail({"fixture": "COR1", "option_set": encode(H)})

    generated = 0
    while generated < config.count(200):
        nx, ny = rng.choice(((2, 2), (2, 3), (3, 2)))
        ms = []
        for _ in range(rng.randint(1, 3)):
            p, m = gen_product_factorizing(rng, nx, ny, 3, positive_x=True)
            ms.append(CredalSet(p.space, [LinearPrevision(p.space, Q.pmf) for Q in m.vertices]))
        perturbed = rng.random() < 0.3
        if perturbed:
            # one extra vertex with a different Y-marginal breaks irrelevance (usually)
            extra = p.product(random_marginal(nx, rng, True), random_marginal(ny, rng))
            ms[0] = CredalSet(p.space, ms[0].vertices + (extra,))
        model = ArchimedeanModel(ms)
        rep = corollary1_check(model, p.X, p.Y, trials=20, seed=rng.randrange(2 ** 32))
        res.cases += 1
        pre = rep.clauses["credibly-indeterminate"] and rep.clauses["irrelevant"]
        if not perturbed:
            if not pre:
                res.fail({"kind": "generated", "model": encode(model), "clauses": rep.clauses})
            generated += 1
        else:
            res.bump(f"perturbed-pre={pre}")
        if pre and not (rep.clauses["precise-marginals"]
                        and rep.clauses["linear-marginal-representation"]):
            res.fail({"kind": "consequence", "model": encode(model), "clauses": rep.clauses})
        if pre:
            for m in members(model):
                if not ind.factorization_check(m, p.X, p.Y, samples=5,
                                               seed=rng.randrange(2 ** 32)).ok:
                    res.fail({"kind": "factorization", "model": encode(m)})
    res.stats["generated-irrelevant"] = generated
    return res


def _slack_ok(model, A: OptionSet) -> bool:
    s = archimedean_slack(model, A)
    if s is None or s <= 0:
        return False
    return k_member(model, A.shifted(-s / 2)) and not k_member(model, A.shifted(-s))


def battery_lp_backend(config: SuiteConfig) -> BatteryResult:
    res = BatteryResult("lp-backend")
    rng = config.rng("lp-backend")
    for _ in range(config.count(200)):
        n = rng.randint(2, min(config.max_atoms, 5))
        vform, cform = gen_polytope(rng, n, rng.randint(1, 3))
        res.cases += 1
        for _ in range(6):
            f = random_gamble_on(vform.space, rng)
            if vform.lower(f) != cform.lower(f) or vform.upper(f) != cform.upper(f):
                res.fail({"vertices": encode(vform), "constraints": encode(cform), "gamble": encode(f)})
                break
        A = random_member_set(vform, rng)
        if not _slack_ok(vform, A):
            res.fail({"model": encode(vform), "option_set": encode(A), "check": "slack"})
    # slack across every model kind used by the other batteries
    for kind in MODEL_KINDS:
        for _ in range(10):
            model = gen_random_model(config, kind, rng)
            A = random_member_set(model, rng)
            res.cases += 1
            res.bump(f"slack:{kind}")
            if not _slack_ok(model, A):
                res.fail({"kind": kind, "model": encode(model), "option_set": encode(A)})
    for model in (fx.C2, fx.VAC2, fx.EADM, fx.COR1):
        A = random_member_set(model, rng)
        res.cases += 1
        if not _slack_ok(model, A):
            res.fail({"model": encode(model), "option_set": encode(A)})
    return res


def battery_lp_properties(config: SuiteConfig) -> BatteryResult:
    res = BatteryResult("lp-properties")
    rng = config.rng("lp-properties")
    for i in range(20):
        space = numbered_space(rng.randint(config.min_atoms, min(config.max_atoms, 6)))
        m = random_credal(space, rng, config.max_vertices)
        rep = check_lower_prevision_properties(m, samples=config.count(500), seed=rng.randrange(2 ** 32))
        res.cases += rep.instances
        if not rep.ok:
            res.fail({"model": encode(m), "violation": rep.violations[0][0],
                      "data": rep.violations[0][1]})
    return res


BATTERIES = {
    "linear-independence": battery_linear_independence,
    "credal-independence": battery_credal_independence,
    "complementation": battery_complementation,
    "precise-collapse": battery_precise_collapse,
    "mixing": battery_mixing,
    "coherence": battery_coherence,
    "variable": battery_variable,
    "marginal-mixing": battery_marginal_mixing,
    "lp-backend": battery_lp_backend,
    "lp-properties": battery_lp_properties,
}


def run_verify_suite(config: SuiteConfig) -> SuiteReport:
    names = config.batteries or tuple(BATTERIES)
    unknown = [n for n in names if n not in BATTERIES]
    if unknown:
        raise ValueError(f"unknown batteries {unknown}; choose from {list(BATTERIES)}")
    start = time.perf_counter()
    results = {}
    for name in names:
        t0 = time.perf_counter()
        r = BATTERIES[name](config)
        r.runtime = time.perf_counter() - t0
        results[name] = r
    return SuiteReport(config.seed, results, time.perf_counter() - start)
