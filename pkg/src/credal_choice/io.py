"""JSON model files and canonical serialization.

Rationals are written as reduced strings (``"3/10"``, ``"-2"``); floats
are rejected on input so that nothing inexact slips in.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .core import Event, FiniteSpace, Gamble, OptionSet, Variable, as_rational, fmt
from .errors import ModelError
from .previsions import ArchimedeanModel, Constraint, CredalSet, LinearPrevision


@dataclass
class ModelFile:
    space: FiniteSpace
    model: object = None
    variables: dict[str, Variable] = field(default_factory=dict)
    events: dict[str, Event] = field(default_factory=dict)
    gambles: dict[str, Gamble] = field(default_factory=dict)
    option_sets: dict[str, OptionSet] = field(default_factory=dict)

    def require_model(self):
        if self.model is None:
            raise ModelError("the model file has no 'model' entry")
        return self.model


# ---------------------------------------------------------------- decoding

def _rational(v) -> Fraction:
    if isinstance(v, float):
        raise ModelError(f"floats are not exact; write {v!r} as a string like '3/10'")
    return as_rational(v)


def decode_gamble(space: FiniteSpace, raw) -> Gamble:
    if isinstance(raw, dict):
        unknown = set(raw) - set(space.atoms)
        if unknown:
            raise ModelError(f"gamble mentions unknown atoms {sorted(unknown)}")
        missing = [a for a in space.atoms if a not in raw]
        if missing:
            raise ModelError(f"gamble misses atoms {missing}")
        return Gamble(space, [_rational(raw[a]) for a in space.atoms])
    if isinstance(raw, list):
        if len(raw) != len(space):
            raise ModelError(f"gamble has {len(raw)} values for {len(space)} atoms")
        return Gamble(space, [_rational(v) for v in raw])
    raise ModelError(f"cannot read a gamble from {raw!r}")


def decode_event(space: FiniteSpace, raw) -> Event:
    if not isinstance(raw, list):
        raise ModelError(f"an event is a list of atoms, got {raw!r}")
    unknown = set(raw) - set(space.atoms)
    if unknown:
        raise ModelError(f"event mentions unknown atoms {sorted(unknown)}")
    return Event(space, raw)


def _decode_pmf(space: FiniteSpace, raw) -> LinearPrevision:
    if isinstance(raw, dict):
        return LinearPrevision(space, {k: _rational(v) for k, v in raw.items()})
    if isinstance(raw, list):
        return LinearPrevision(space, [_rational(v) for v in raw])
    raise ModelError(f"cannot read a pmf from {raw!r}")


def decode_model(space: FiniteSpace, raw):
    if not isinstance(raw, dict) or "kind" not in raw:
        raise ModelError("a model needs a 'kind'")
    kind = raw["kind"]
    if kind == "linear":
        return _decode_pmf(space, raw["pmf"])
    if kind == "credal":
        verts = [_decode_pmf(space, v) for v in raw.get("vertices", [])]
        cons = []
        for c in raw.get("constraints", []):
            coeffs = c["coeffs"]
            if isinstance(coeffs, dict):
                unknown = set(coeffs) - set(space.atoms)
                if unknown:
                    raise ModelError(f"constraint mentions unknown atoms {sorted(unknown)}")
                coeffs = [coeffs.get(a, 0) for a in space.atoms]
            cons.append(([_rational(x) for x in coeffs], c.get("rel", ">="), _rational(c["rhs"])))
        return CredalSet(space, verts, cons)
    if kind == "lower_set":
        ms = []
        for m in raw["members"]:
            dm = decode_model(space, m)
            if isinstance(dm, ArchimedeanModel):
                raise ModelError("lower_set members cannot be lower_set models")
            ms.append(dm)
        return ArchimedeanModel(ms)
    raise ModelError(f"unknown model kind {kind!r}")


def decode_variable(space: FiniteSpace, raw) -> Variable:
    if not isinstance(raw, dict) or "codomain" not in raw or "assignment" not in raw:
        raise ModelError("a variable needs 'codomain' and 'assignment'")
    return Variable(space, raw["codomain"], raw["assignment"])


def decode_option_set(space: FiniteSpace, raw, gambles: dict[str, Gamble] | None = None) -> OptionSet:
    if not isinstance(raw, list):
        raise ModelError(f"an option set is a list of gambles, got {raw!r}")
    out = []
    for g in raw:
        if isinstance(g, str):
            if not gambles or g not in gambles:
                raise ModelError(f"unknown gamble name {g!r}")
            out.append(gambles[g])
        else:
            out.append(decode_gamble(space, g))
    return OptionSet(out, space)


def decode_model_file(raw: dict) -> ModelFile:
    if not isinstance(raw, dict) or "space" not in raw:
        raise ModelError("a model file needs a 'space'")
    space = FiniteSpace(raw["space"])
    mf = ModelFile(space)
    if "model" in raw:
        mf.model = decode_model(space, raw["model"])
    mf.variables = {k: decode_variable(space, v) for k, v in raw.get("variables", {}).items()}
    mf.events = {k: decode_event(space, v) for k, v in raw.get("events", {}).items()}
    mf.gambles = {k: decode_gamble(space, v) for k, v in raw.get("gambles", {}).items()}
    mf.option_sets = {k: decode_option_set(space, v, mf.gambles)
                      for k, v in raw.get("option_sets", {}).items()}
    return mf


def load_model_file(path) -> ModelFile:
    try:
        raw = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ModelError(f"{path}: not valid JSON ({exc})") from None
    return decode_model_file(raw)


# ---------------------------------------------------------------- encoding

def encode(value):
    """Turn library objects into plain JSON-ready data."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value  # counts and indices stay numbers
    if isinstance(value, Fraction):
        return fmt(value)
    if isinstance(value, Gamble):
        return {a: fmt(v) for a, v in zip(value.space.atoms, value.values)}
    if isinstance(value, Event):
        return value.sorted_members()
    if isinstance(value, OptionSet):
        return sorted((encode(g) for g in value), key=canonical_json)
    if isinstance(value, LinearPrevision):
        return {"kind": "linear", "pmf": {a: fmt(p) for a, p in zip(value.space.atoms, value.pmf)}}
    if isinstance(value, CredalSet):
        out = {"kind": "credal",
               "vertices": [encode(P)["pmf"] for P in value.vertices]}
        if value.constraints:
            out["constraints"] = [encode(c) for c in value.constraints]
        return out
    if isinstance(value, Constraint):
        return {"coeffs": [fmt(c) for c in value.coeffs], "rel": value.rel, "rhs": fmt(value.rhs)}
    if isinstance(value, ArchimedeanModel):
        return {"kind": "lower_set", "members": [encode(m) for m in value.members]}
    if isinstance(value, Variable):
        return {"codomain": list(value.codomain),
                "assignment": dict(zip(value.space.atoms, value.assignment))}
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if hasattr(value, "__dataclass_fields__"):
        return {k: encode(getattr(value, k)) for k in value.__dataclass_fields__}
    raise TypeError(f"cannot encode {type(value).__name__}")


def canonical_json(data, indent: int | None = None) -> str:
    return json.dumps(data, sort_keys=True, indent=indent, ensure_ascii=False)


def encode_model_file(mf: ModelFile) -> dict:
    out = {"space": list(mf.space.atoms)}
    if mf.model is not None:
        out["model"] = encode(mf.model)
    for key in ("variables", "events", "gambles"):
        items = getattr(mf, key)
        if items:
            out[key] = {k: encode(v) for k, v in items.items()}
    if mf.option_sets:
        out["option_sets"] = {k: [encode(g) for g in A] for k, A in mf.option_sets.items()}
    return out
