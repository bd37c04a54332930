"""JSON round-tripping for presentations, V-sets, systems, and fibration data.

Every document embeds the presentation spec it lives over, so files are
self-contained; loaders rebuild the presentation and check the document's
shape, raising SerializationError on anything malformed.
"""
from __future__ import annotations

import json

from .presentation import build_presentation
from .systems import WeakIndexingSystem
from .fibrations import TransferSystem, is_family
from .sieves import Sieve
from .reps import RepDescriptor


class SerializationError(ValueError):
    pass


def _need(obj, key, kind):
    if not isinstance(obj, dict) or key not in obj:
        raise SerializationError(f"{kind} document needs a {key!r} field")
    return obj[key]


def _presentation_of(obj, kind):
    spec = _need(obj, "presentation", kind)
    try:
        return build_presentation(spec)
    except Exception as exc:
        raise SerializationError(f"bad presentation spec: {exc}") from exc


def vset_to_obj(S):
    return {"over": S.over, "orbits": [[k, m] for k, m in S.orbits]}


def vset_from_obj(P, obj):
    over = _need(obj, "over", "V-set")
    orbits = _need(obj, "orbits", "V-set")
    try:
        return P.vset(over, [(k, m) for k, m in orbits])
    except Exception as exc:
        raise SerializationError(f"bad V-set {obj!r}: {exc}") from exc


def system_to_obj(W):
    base = {"kind": "system", "presentation": W.P.spec}
    if W.label:
        base["label"] = W.label
    if W.form == "sparse":
        base["form"] = "sparse"
        base["levels"] = {
            V: sorted((vset_to_obj(S) for S in W.sparse_levels[V]),
                      key=lambda o: o["orbits"])
            for V in W.P.orbit_classes}
    elif W.form == "generated":
        base["form"] = "generated"
        base["generators"] = [vset_to_obj(S) for S in W.gens]
        base["bound"] = W.bound
    else:
        raise SerializationError("predicate-backed systems cannot be serialized")
    return base


def system_from_obj(obj, validate=False):
    _check_kind(obj, "system")
    P = _presentation_of(obj, "system")
    form = _need(obj, "form", "system")
    label = obj.get("label")
    if form == "sparse":
        raw = _need(obj, "levels", "system")
        levels = {}
        for V in P.orbit_classes:
            levels[V] = frozenset(vset_from_obj(P, o) for o in raw.get(V, []))
        extra = set(raw) - set(P.orbit_classes)
        if extra:
            raise SerializationError(f"levels at unknown classes {sorted(extra)}")
        return WeakIndexingSystem.from_sparse(P, levels, validate=validate,
                                              label=label)
    if form == "generated":
        gens = [vset_from_obj(P, o) for o in _need(obj, "generators", "system")]
        bound = obj.get("bound")
        return WeakIndexingSystem.from_generators(P, gens, bound=bound,
                                                  label=label)
    raise SerializationError(f"unknown system form {form!r}")


def transfer_to_obj(R):
    return {"kind": "transfer", "presentation": R.P.spec,
            "pairs": sorted([u, V] for u, V in R.strict())}


def transfer_from_obj(obj):
    _check_kind(obj, "transfer")
    P = _presentation_of(obj, "transfer")
    pairs = _need(obj, "pairs", "transfer")
    try:
        return TransferSystem(P, {(u, V) for u, V in pairs})
    except ValueError as exc:
        raise SerializationError(f"bad transfer system: {exc}") from exc


def family_to_obj(P, family):
    return {"kind": "family", "presentation": P.spec,
            "members": sorted(family)}


def family_from_obj(obj):
    _check_kind(obj, "family")
    P = _presentation_of(obj, "family")
    members = frozenset(_need(obj, "members", "family"))
    if not is_family(P, members):
        raise SerializationError(
            f"{sorted(members)} is not downward closed over {P.key}")
    return P, members


def sieve_to_obj(sv):
    return {"kind": "sieve", "presentation": sv.R.P.spec,
            "transfer": sorted([u, V] for u, V in sv.R.strict()),
            "scope": sorted(sv.scope),
            "pairs": sorted([k, h] for k, h in sv.pairs)}


def sieve_from_obj(obj):
    _check_kind(obj, "sieve")
    P = _presentation_of(obj, "sieve")
    try:
        R = TransferSystem(P, {(u, V) for u, V in _need(obj, "transfer", "sieve")})
        return Sieve(R, frozenset(_need(obj, "scope", "sieve")),
                     frozenset((k, h) for k, h in _need(obj, "pairs", "sieve")))
    except ValueError as exc:
        raise SerializationError(f"bad sieve: {exc}") from exc


def rep_to_obj(rep):
    out = {"kind": "rep", "presentation": rep.P.spec,
           "fixed_dims": dict(sorted(rep.fixed_dims.items()))}
    if rep.name:
        out["name"] = rep.name
    return out


def rep_from_obj(obj):
    _check_kind(obj, "rep")
    P = _presentation_of(obj, "rep")
    dims = _need(obj, "fixed_dims", "rep")
    try:
        return RepDescriptor(P, dims, name=obj.get("name"))
    except ValueError as exc:
        raise SerializationError(f"bad representation: {exc}") from exc


def _check_kind(obj, expected):
    kind = obj.get("kind") if isinstance(obj, dict) else None
    if kind is not None and kind != expected:
        raise SerializationError(f"expected a {expected} document, got {kind!r}")


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def dump(obj, path):
    with open(path, "w") as fh:
        fh.write(dumps(obj))


def load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise SerializationError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise SerializationError(f"{path} is not valid JSON: {exc}") from exc
