"""Command-line interface.

Exit status: 0 when the checked property holds (or the command simply
succeeded), 1 when it fails (a witness is printed), 2 on usage or data
errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import independence as ind
from .axioms import check_coherence_axioms, find_mixing_violation
from .choice import CRITERIA, archimedean_slack, choose, k_member, rejected_by_k
from .core import Event, Variable, opt_minus
from .errors import CredalChoiceError
from .io import (ModelFile, canonical_json, decode_event, decode_gamble, decode_option_set,
                 decode_variable, encode, encode_model_file, load_model_file)
from .marginals import corollary1_check, distribution_model
from .previsions import LinearPrevision, members, prevision_eval
from .verify import BATTERIES, SuiteConfig, run_verify_suite

HOLDS, FAILS, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- argument resolution

def _inline(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        raise UsageError(f"{text!r} is neither a known name nor valid JSON") from None


def _gamble(mf: ModelFile, text: str):
    if text in mf.gambles:
        return mf.gambles[text]
    return decode_gamble(mf.space, _inline(text))


def _option_set(mf: ModelFile, text: str):
    if text in mf.option_sets:
        return mf.option_sets[text]
    return decode_option_set(mf.space, _inline(text), mf.gambles)


def _event(mf: ModelFile, text: str) -> Event:
    if text in mf.events:
        return mf.events[text]
    return decode_event(mf.space, _inline(text))


def _variable(mf: ModelFile, text: str) -> Variable:
    if text in mf.variables:
        return mf.variables[text]
    return decode_variable(mf.space, _inline(text))


def _target(mf: ModelFile, text: str):
    if text in mf.events:
        return mf.events[text]
    if text in mf.variables:
        return mf.variables[text]
    raw = _inline(text)
    return decode_variable(mf.space, raw) if isinstance(raw, dict) else decode_event(mf.space, raw)


# ---------------------------------------------------------------- output

def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(canonical_json(encode(data)))
    else:
        print(text)


def _verdict_data(v: ind.IndependenceVerdict) -> dict:
    out = {"holds": v.holds, "route": v.route, "witness": v.witness}
    if v.forward is not None:
        out["forward"] = _verdict_data(v.forward)
        out["backward"] = _verdict_data(v.backward)
    return out


def _describe_witness(w) -> str:
    if isinstance(w, ind.EventWitness):
        return (f"witness f = {canonical_json(encode(w.f))} (member {w.member}): "
                f"lower(I_coA f) = {w.lower_on_complement}, lower(-I_A f) = {w.lower_on_event}")
    if isinstance(w, ind.VariableWitness):
        return (f"witness partition {[list(c) for c in w.cells]}, gambles "
                f"{[encode(g) for g in w.gambles]}, epsilon {w.epsilon} (member {w.member})")
    return f"clauses: {canonical_json(encode(w))}"


# ---------------------------------------------------------------- commands

def cmd_eval(args, mf):
    model = mf.require_model()
    f = _gamble(mf, args.gamble)
    v = prevision_eval(model, f, args.side)
    _emit(args, {"side": args.side, "value": v}, f"{args.side} prevision: {v}")
    return HOLDS


def cmd_member(args, mf):
    model = mf.require_model()
    A = _option_set(mf, args.option_set)
    ok = k_member(model, A)
    slack = archimedean_slack(model, A)
    text = "member of K" if ok else "not a member of K"
    if ok:
        text += f" (slack {slack})"
    _emit(args, {"member": ok, "slack": slack}, text)
    return HOLDS if ok else FAILS


def cmd_choose(args, mf):
    model = mf.require_model()
    A = _option_set(mf, args.option_set)
    res = choose(model, A, args.criterion)
    data = {"criterion": args.criterion, "chosen": res.chosen, "rejected": res.rejected,
            "certificates": [{"rejected": f, "by": w} for f, w in res.certificates.items()]}
    text = "\n".join(["chosen:"] + [f"  {canonical_json(encode(g))}" for g in res.chosen]
                     + ["rejected:"] + [f"  {canonical_json(encode(g))}" for g in res.rejected])
    _emit(args, data, text)
    return HOLDS


def cmd_reject(args, mf):
    model = mf.require_model()
    A = _option_set(mf, args.option_set)
    f = _gamble(mf, args.gamble)
    rej = rejected_by_k(model, A, f)
    witness = opt_minus(A, f)
    _emit(args, {"rejected": rej, "difference_set": witness},
          f"{'rejected' if rej else 'not rejected'}; A minus f = "
          f"{canonical_json(encode(witness))}")
    return HOLDS if rej else FAILS


def cmd_check_coherence(args, mf):
    rep = check_coherence_axioms(mf.require_model(), args.instances, args.seed)
    data = {"ok": rep.ok, "axioms": {a: {"instances": r.instances, "violations": len(r.violations),
                                         "first": r.violations[0] if r.violations else None}
                                     for a, r in rep.reports.items()}}
    text = "\n".join(f"{a}: {r.instances} instances, {len(r.violations)} violations"
                     for a, r in rep.reports.items())
    _emit(args, data, text)
    return HOLDS if rep.ok else FAILS


def cmd_find_mixing(args, mf):
    w = find_mixing_violation(mf.require_model(), args.trials, args.seed)
    if w is None:
        _emit(args, {"witness": None}, f"no violation found in {args.trials} trials "
                                        "(this is not a proof of mixingness)")
        return HOLDS
    _emit(args, {"witness": {"B": w.B, "A": w.A, "member": w.member, "source": w.source}},
          f"violation: A = {canonical_json(encode(w.A))} is desirable, "
          f"B = {canonical_json(encode(w.B))} is not")
    return FAILS


def cmd_check_independence(args, mf):
    model = mf.require_model()
    get = _event if args.level == "event" else _variable
    first, second = get(mf, args.first), get(mf, args.second)
    if args.kind == "classical":
        ms = members(model)
        if not (isinstance(model, LinearPrevision) or (len(ms) == 1 and ms[0].is_single_vertex)):
            raise UsageError("classical independence needs a linear model")
        P = model if isinstance(model, LinearPrevision) else ms[0].vertices[0]
        holds = ind.classical_independent(P, first, second)
        _emit(args, {"holds": holds, "kind": "classical"}, "independent" if holds else "dependent")
        return HOLDS if holds else FAILS
    fn = ind.s_irrelevant if args.kind == "s-irrelevance" else ind.s_independent
    methods = ["direct", "characterization"] if args.method == "both" else [args.method]
    verdicts = [fn(model, args.level, first, second, m) for m in methods]
    if len({v.holds for v in verdicts}) != 1:
        raise AssertionError("direct and characterization routes disagree")
    v = verdicts[0]
    data = _verdict_data(v)
    if len(verdicts) == 2:
        data["routes_agree"] = True
        if v.holds:
            data["witness"] = verdicts[1].witness
    w = data["witness"]
    text = ("holds" if v.holds else "fails") + (f"; {_describe_witness(w)}" if w is not None else "")
    _emit(args, data, text)
    return HOLDS if v.holds else FAILS


def cmd_check_credibility(args, mf):
    st = ind.credibility_status(mf.require_model(), _target(mf, args.target))
    _emit(args, {"credible": st.credible, "credibly_indeterminate": st.credibly_indeterminate,
                 "witness": st.witness},
          f"credible: {st.credible}, credibly indeterminate: {st.credibly_indeterminate}")
    return HOLDS if st.credibly_indeterminate else FAILS


def cmd_check_trivial(args, mf):
    t = ind.is_trivial(mf.require_model(), _target(mf, args.target))
    _emit(args, {"trivial": t}, "trivial" if t else "not trivial")
    return HOLDS if t else FAILS


def cmd_marginalize(args, mf):
    Z = _variable(mf, args.variable)
    dm = distribution_model(mf.require_model(), Z)
    out = encode_model_file(ModelFile(Z.codomain_space, dm))
    print(canonical_json(out, None if args.json else 2))
    return HOLDS


def cmd_corollary1(args, mf):
    X, Y = _variable(mf, args.first), _variable(mf, args.second)
    rep = corollary1_check(mf.require_model(), X, Y, trials=args.trials, seed=args.seed)
    data = {"ok": rep.ok, "clauses": rep.clauses, "first_failure": rep.first_failure,
            "irrelevance_witness": rep.details.get("irrelevant"), "marginal": rep.marginal}
    text = "\n".join(f"{'PASS' if ok else 'FAIL'} {c}" for c, ok in rep.clauses.items())
    _emit(args, data, text)
    return HOLDS if rep.ok else FAILS


def cmd_verify(args, _mf):
    cfg = SuiteConfig(seed=args.seed, trials=args.trials,
                      batteries=tuple(args.battery) if args.battery else None)
    rep = run_verify_suite(cfg)
    print(rep.to_json() if args.json else rep.to_text())
    return HOLDS if rep.ok else FAILS


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="credal-choice",
                                description="Exact choice functions and irrelevance checks "
                                            "for credal models on finite spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, func, help_text, model=True):
        sp = sub.add_parser(name, help=help_text)
        if model:
            sp.add_argument("-m", "--model", required=True, help="model file (JSON)")
        sp.add_argument("--json", action="store_true", help="canonical JSON output")
        sp.set_defaults(func=func, needs_model=model)
        return sp

    sp = cmd("eval", cmd_eval, "lower or upper prevision of a gamble")
    sp.add_argument("-f", "--gamble", required=True)
    sp.add_argument("--side", choices=("lower", "upper"), default="lower")

    sp = cmd("member", cmd_member, "is an option set desirable")
    sp.add_argument("-A", "--option-set", required=True)

    sp = cmd("choose", cmd_choose, "apply a decision criterion")
    sp.add_argument("-A", "--option-set", required=True)
    sp.add_argument("--criterion", choices=CRITERIA, required=True)

    sp = cmd("reject", cmd_reject, "is a gamble rejected from an option set")
    sp.add_argument("-A", "--option-set", required=True)
    sp.add_argument("-f", "--gamble", required=True)

    sp = cmd("check-coherence", cmd_check_coherence, "instance checks of K0-K4")
    sp.add_argument("--instances", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)

    sp = cmd("find-mixing-violation", cmd_find_mixing, "search for a mixing counterexample")
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)

    sp = cmd("check-independence", cmd_check_independence, "irrelevance and independence")
    sp.add_argument("--level", choices=ind.LEVELS, default="event")
    sp.add_argument("--kind", choices=("s-irrelevance", "s-independence", "classical"),
                    default="s-irrelevance")
    sp.add_argument("--method", choices=("direct", "characterization", "both"), default="direct")
    sp.add_argument("--first", required=True, help="event or variable name, or inline JSON")
    sp.add_argument("--second", required=True)

    for name, func, help_text in (("check-credibility", cmd_check_credibility,
                                   "credibility of an event or variable"),
                                  ("check-trivial", cmd_check_trivial,
                                   "triviality of an event or variable")):
        sp = cmd(name, func, help_text)
        sp.add_argument("--target", required=True, help="event or variable name, or inline JSON")

    sp = cmd("marginalize", cmd_marginalize, "the model induced on a variable's codomain")
    sp.add_argument("--variable", required=True)

    sp = cmd("corollary1", cmd_corollary1, "irrelevance forces a mixing marginal")
    sp.add_argument("--first", required=True, help="variable X")
    sp.add_argument("--second", required=True, help="variable Y")
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)

    sp = cmd("verify", cmd_verify, "run the verification batteries", model=False)
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--trials", type=int, default=None)
    sp.add_argument("--battery", action="append", choices=list(BATTERIES))
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else HOLDS
    try:
        mf = load_model_file(args.model) if args.needs_model else None
        return args.func(args, mf)
    except (UsageError, CredalChoiceError, ValueError, KeyError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
