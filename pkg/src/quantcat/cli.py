"""File-driven front end.

An instance file is strict JSON with three top-level fields: a quantale
(built-in name or finite table), a dictionary of named objects, and a task
list.  Quantale elements are referenced by name in finite carriers; the
extended-rational carriers accept integers and strings like ``"1/2"`` or
``"inf"`` (floats are rejected everywhere).

Commands: validate, compose, adjoint, isbell, representable, lawvere,
split, cauchy, colimit, forward-limit, lipnorm.

Exit codes: 0 every verdict-bearing task passed, 1 some verdict failed,
2 input error, 3 enumeration budget exceeded.  The ``--json`` machine
report is byte-identical across reruns; wall-clock timing appears only in
the human-readable output.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any

from . import ncat as ncat_mod
from . import seqlim as seq_mod
from . import vcat as vcat_mod
from .common import (
    BudgetExceeded,
    CarrierMismatch,
    PreconditionError,
    Report,
    default_budget,
)
from .normed_set import NormedSet
from .quantale import (
    FiniteQuantale,
    Quantale,
    builtin_quantale,
    BUILTIN_QUANTALES,
)
from .vcat import VCategory


class InputError(ValueError):
    """A problem with the instance file: parse failure or bad reference."""


# ---------------------------------------------------------------------------
# parsing


def parse_quantale(spec) -> Quantale:
    if isinstance(spec, str):
        if spec not in BUILTIN_QUANTALES:
            raise InputError(f"unknown built-in quantale {spec!r}")
        return builtin_quantale(spec)
    if isinstance(spec, dict):
        try:
            return FiniteQuantale(
                spec["elements"], spec["leq"], spec["tensor"], spec["unit"]
            )
        except KeyError as missing:
            raise InputError(f"quantale table is missing field {missing}")
        except (ValueError, CarrierMismatch) as exc:
            raise InputError(f"bad quantale table: {exc}")
    raise InputError("quantale must be a built-in name or a table")


def parse_value(q: Quantale, raw):
    try:
        return q.parse(raw)
    except CarrierMismatch as exc:
        raise InputError(str(exc))


def parse_normed_set(q: Quantale, spec: dict) -> NormedSet:
    elements = spec.get("elements")
    if not isinstance(elements, list):
        raise InputError("normed set literal needs an 'elements' list")
    norms, order = {}, []
    for entry in elements:
        norms[entry["id"]] = parse_value(q, entry["norm"])
        order.append(entry["id"])
    return NormedSet(q, norms, order)


def parse_vcat(q: Quantale, spec: dict) -> VCategory:
    objects = spec.get("objects")
    matrix = spec.get("dist")
    if objects is None or matrix is None:
        raise InputError("V-category literal needs 'objects' and 'dist'")
    parsed = [[parse_value(q, v) for v in row] for row in matrix]
    try:
        return vcat_mod.vcat_from_matrix(q, objects, parsed)
    except (ValueError, IndexError) as exc:
        raise InputError(f"bad V-category literal: {exc}")


def parse_ncat(q: Quantale, spec: dict) -> ncat_mod.NormedCategory:
    try:
        morphisms = spec["morphisms"]
        names = [m["id"] for m in morphisms]
        table = {(g, f): gf for g, f, gf in spec["compose"]}
        return ncat_mod.NormedCategory(
            q,
            spec["objects"],
            names,
            {m["id"]: m["dom"] for m in morphisms},
            {m["id"]: m["cod"] for m in morphisms},
            spec["identities"],
            table,
            {m["id"]: parse_value(q, m["norm"]) for m in morphisms},
        )
    except KeyError as missing:
        raise InputError(f"normed category literal is missing {missing}")
    except ValueError as exc:
        raise InputError(f"bad normed category literal: {exc}")


class Instance:
    """A parsed instance file."""

    def __init__(self, quantale_spec, quantale, objects, tasks):
        self.quantale_spec = quantale_spec
        self.quantale = quantale
        self.objects = objects  # name -> (kind, parsed value)
        self.tasks = tasks

    def resolve(self, name, kinds=None):
        if name not in self.objects:
            raise InputError(f"unresolved reference {name!r}")
        kind, value = self.objects[name]
        if kinds is not None and kind not in kinds:
            raise InputError(f"{name!r} has kind {kind}, expected one of {kinds}")
        return kind, value


def _parse_vdist(inst: Instance, spec: dict) -> vcat_mod.VDistributor:
    q = inst.quantale
    _, source = inst.resolve(spec["source"], {"vcat"})
    _, target = inst.resolve(spec["target"], {"vcat"})
    values = {}
    for i, x in enumerate(source.objects):
        for j, y in enumerate(target.objects):
            values[(x, y)] = parse_value(q, spec["values"][i][j])
    return vcat_mod.VDistributor(source, target, values)


def _parse_weight_pair(inst: Instance, spec: dict) -> vcat_mod.VWeightPair:
    q = inst.quantale
    _, X = inst.resolve(spec["space"], {"vcat"})
    phi = vcat_mod.left_weight(X, {x: parse_value(q, spec["phi"][x]) for x in X.objects})
    psi = vcat_mod.right_weight(X, {x: parse_value(q, spec["psi"][x]) for x in X.objects})
    return vcat_mod.VWeightPair(phi, psi)


def _parse_ndist(inst: Instance, spec: dict) -> ncat_mod.NormedDistributor:
    q = inst.quantale
    _, A = inst.resolve(spec["category"], {"ncat"})
    variance = spec.get("variance", "covariant")
    if variance not in ("covariant", "contravariant"):
        raise InputError(f"unknown variance {variance!r}")
    sets = {
        a: parse_normed_set(q, {"elements": spec["sets"][a]}) for a in A.objects
    }
    action = {h: dict(spec["action"][h]) for h in A.morphisms}
    try:
        return ncat_mod.NormedDistributor(A, variance == "covariant", sets, action)
    except ValueError as exc:
        raise InputError(f"bad distributor literal: {exc}")


def _parse_certificate(inst: Instance, spec: dict) -> ncat_mod.AdjunctionCertificate:
    _, phi = inst.resolve(spec["phi"], {"ndist"})
    _, psi = inst.resolve(spec["psi"], {"ndist"})
    eps = {}
    for entry in spec["eps"]:
        table = {(y, x): m for y, x, m in entry["map"]}
        eps[(entry["a"], entry["b"])] = table
    return ncat_mod.AdjunctionCertificate(
        phi, psi, eps, spec["c"], spec["u"], spec["v"]
    )


def _parse_stage_object(inst: Instance, ambient: str, raw):
    q = inst.quantale
    if isinstance(raw, str):
        kind = {"nset": "normed_set", "dset": "vcat"}[ambient]
        return inst.resolve(raw, {kind})[1]
    if ambient == "nset":
        return parse_normed_set(q, raw)
    return parse_vcat(q, raw)


def _parse_sequence(inst: Instance, spec: dict) -> seq_mod.Sequence:
    ambient = spec.get("ambient")
    if ambient not in seq_mod.AMBIENTS:
        raise InputError(f"unknown ambient {ambient!r}")
    tail = spec.get("tail")
    if not isinstance(tail, dict):
        raise InputError("sequence literal needs a 'tail' object")
    try:
        if ambient == "ncat":
            _, A = inst.resolve(spec["category"], {"ncat"})
            prefix_objects = [p["object"] for p in spec.get("prefix", [])]
            prefix_steps = [p["step"] for p in spec.get("prefix", [])]
            return seq_mod.Sequence(
                ambient, prefix_objects, prefix_steps, tail["object"], tail["endo"],
                category=A,
            )
        prefix_objects = [
            _parse_stage_object(inst, ambient, p["object"])
            for p in spec.get("prefix", [])
        ]
        prefix_steps = [dict(p["step"]) for p in spec.get("prefix", [])]
        tail_object = _parse_stage_object(inst, ambient, tail["object"])
        norm_quantale = None
        if ambient == "dset" and "odot" in spec:
            norm_quantale = parse_quantale(spec["odot"])
        return seq_mod.Sequence(
            ambient, prefix_objects, prefix_steps, tail_object, dict(tail["endo"]),
            norm_quantale=norm_quantale,
        )
    except (KeyError, ValueError) as exc:
        raise InputError(f"bad sequence literal: {exc}")


def _parse_metric_sequence(inst: Instance, spec: dict) -> seq_mod.MetricSequence:
    _, X = inst.resolve(spec["space"], {"vcat"})
    tail = spec.get("tail", {})
    points = tail.get("points")
    if not points:
        raise InputError("metric sequence needs tail points")
    if tail.get("period", len(points)) != len(points):
        raise InputError("tail period must equal the number of tail points")
    try:
        return seq_mod.MetricSequence(X, spec.get("prefix_points", []), points)
    except ValueError as exc:
        raise InputError(f"bad metric sequence: {exc}")


_PARSERS = {
    "normed_set": lambda inst, spec: parse_normed_set(inst.quantale, spec),
    "vcat": lambda inst, spec: parse_vcat(inst.quantale, spec),
    "ncat": lambda inst, spec: parse_ncat(inst.quantale, spec),
    "vdist": _parse_vdist,
    "weight_pair": _parse_weight_pair,
    "ndist": _parse_ndist,
    "certificate": _parse_certificate,
    "sequence": _parse_sequence,
    "metric_sequence": _parse_metric_sequence,
}


def parse_instance(data: dict) -> Instance:
    if not isinstance(data, dict):
        raise InputError("the instance file must be a JSON object")
    if "quantale" not in data:
        raise InputError("missing 'quantale'")
    quantale = parse_quantale(data["quantale"])
    inst = Instance(data["quantale"], quantale, {}, [])
    for name, spec in data.get("objects", {}).items():
        kind = spec.get("kind")
        if kind not in _PARSERS:
            raise InputError(f"object {name!r} has unknown kind {kind!r}")
        inst.objects[name] = (kind, _PARSERS[kind](inst, spec))
    tasks = data.get("tasks", [])
    if not isinstance(tasks, list):
        raise InputError("'tasks' must be a list")
    inst.tasks = tasks
    return inst


def load_instance(path: str) -> Instance:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise InputError(
            f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        )
    return parse_instance(data)


# ---------------------------------------------------------------------------
# serialization (round-trip support)


def _value_out(q: Quantale, v) -> str:
    return q.format(v)


def serialize_instance(inst: Instance) -> dict:
    q = inst.quantale
    objects = {}
    for name, (kind, value) in inst.objects.items():
        objects[name] = _SERIALIZERS[kind](inst, value)
        objects[name]["kind"] = kind
    return {"quantale": inst.quantale_spec, "objects": objects, "tasks": inst.tasks}


def _ser_normed_set(inst, A: NormedSet) -> dict:
    q = A.quantale
    return {"elements": [{"id": e, "norm": _value_out(q, A.norm(e))} for e in A]}


def _ser_vcat(inst, X: VCategory) -> dict:
    q = X.quantale
    return {
        "objects": list(X.objects),
        "dist": [[_value_out(q, X.d(a, b)) for b in X.objects] for a in X.objects],
    }


def _ser_ncat(inst, A: ncat_mod.NormedCategory) -> dict:
    q = A.quantale
    return {
        "objects": list(A.objects),
        "morphisms": [
            {"id": m, "dom": A.dom[m], "cod": A.cod[m], "norm": _value_out(q, A.norm[m])}
            for m in A.morphisms
        ],
        "identities": dict(A.identity),
        "compose": sorted([g, f, gf] for (g, f), gf in A.table.items()),
    }


def _ser_vdist(inst, d: vcat_mod.VDistributor) -> dict:
    q = d.quantale
    source_name = _find_name(inst, d.source)
    target_name = _find_name(inst, d.target)
    return {
        "source": source_name,
        "target": target_name,
        "values": [
            [_value_out(q, d.at(x, y)) for y in d.target.objects]
            for x in d.source.objects
        ],
    }


def _find_name(inst: Instance, value) -> str:
    for name, (_, v) in inst.objects.items():
        if v is value or v == value:
            return name
    raise InputError("object cannot be serialized: no name refers to it")


def _ser_weight_pair(inst, wp: vcat_mod.VWeightPair) -> dict:
    q = wp.phi.quantale
    X = wp.phi.target
    return {
        "space": _find_name(inst, X),
        "phi": {x: _value_out(q, v) for x, v in vcat_mod.weight_vector(wp.phi).items()},
        "psi": {x: _value_out(q, v) for x, v in vcat_mod.coweight_vector(wp.psi).items()},
    }


def _ser_ndist(inst, Phi: ncat_mod.NormedDistributor) -> dict:
    q = Phi.quantale
    return {
        "category": _find_name(inst, Phi.category),
        "variance": "covariant" if Phi.covariant else "contravariant",
        "sets": {
            a: [{"id": e, "norm": _value_out(q, S.norm(e))} for e in S]
            for a, S in Phi.sets.items()
        },
        "action": {h: dict(t) for h, t in Phi.action.items()},
    }


def _ser_certificate(inst, cert: ncat_mod.AdjunctionCertificate) -> dict:
    return {
        "phi": _find_name(inst, cert.phi),
        "psi": _find_name(inst, cert.psi),
        "eps": [
            {"a": a, "b": b, "map": sorted([y, x, m] for (y, x), m in table.items())}
            for (a, b), table in sorted(cert.eps.items())
        ],
        "c": cert.c,
        "u": cert.u,
        "v": cert.v,
    }


def _ser_sequence(inst, s: seq_mod.Sequence) -> dict:
    if s.kind == "ncat":
        return {
            "ambient": s.kind,
            "category": _find_name(inst, s.category),
            "prefix": [
                {"object": o, "step": st}
                for o, st in zip(s.prefix_objects, s.prefix_steps)
            ],
            "tail": {"object": s.tail_object, "endo": s.tail_endo},
        }
    ser_obj = _ser_normed_set if s.kind == "nset" else _ser_vcat
    out = {
        "ambient": s.kind,
        "prefix": [
            {"object": ser_obj(inst, o), "step": st}
            for o, st in zip(s.prefix_objects, s.prefix_steps)
        ],
        "tail": {"object": ser_obj(inst, s.tail_object), "endo": s.tail_endo},
    }
    if s.kind == "dset" and s.norm_quantale != s.quantale:
        out["odot"] = quantale_spec_of(s.norm_quantale)
    return out


def quantale_spec_of(q: Quantale):
    """A file-format spec naming q: a built-in name when one matches, else
    the full table."""
    for name, factory in BUILTIN_QUANTALES.items():
        if factory() == q:
            return name
    return {
        "elements": list(q.names),
        "leq": [[q.leq(u, v) for v in q.carrier()] for u in q.carrier()],
        "tensor": [[q.name(q.tensor(u, v)) for v in q.carrier()] for u in q.carrier()],
        "unit": q.name(q.unit),
    }


def _ser_metric_sequence(inst, ms: seq_mod.MetricSequence) -> dict:
    return {
        "space": _find_name(inst, ms.space),
        "prefix_points": list(ms.prefix),
        "tail": {"points": list(ms.tail), "period": len(ms.tail)},
    }


_SERIALIZERS = {
    "normed_set": _ser_normed_set,
    "vcat": _ser_vcat,
    "ncat": _ser_ncat,
    "vdist": _ser_vdist,
    "weight_pair": _ser_weight_pair,
    "ndist": _ser_ndist,
    "certificate": _ser_certificate,
    "sequence": _ser_sequence,
    "metric_sequence": _ser_metric_sequence,
}


# ---------------------------------------------------------------------------
# task execution


def _report_details(q: Quantale, report: Report) -> list:
    return [
        {"check": c.name, "ok": c.ok, "witness": _jsonable(q, c.witness)}
        for c in report.checks
    ]


def _jsonable(q: Quantale, value) -> Any:
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(q, v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(q, v) for k, v in value.items()}
    try:
        return q.format(value)
    except Exception:
        return repr(value)


def _task_validate(inst: Instance, task: dict, budget: int, probe: int) -> dict:
    kind, value = inst.resolve(task["target"])
    q = inst.quantale
    if kind == "vcat":
        report = vcat_mod.validate_vcat(value)
    elif kind == "ncat":
        report = ncat_mod.validate_ncat(value)
    elif kind == "vdist":
        report = vcat_mod.validate_vdist(value)
    elif kind == "weight_pair":
        report = Report()
        for label, d in (("phi", value.phi), ("psi", value.psi)):
            sub = vcat_mod.validate_vdist(d)
            report.add(f"{label}-bimodule", sub.ok, sub.describe() if not sub.ok else None)
    elif kind == "ndist":
        report = ncat_mod.validate_ndist(value)
    elif kind == "normed_set":
        report = Report()
        report.add("norm-total", True)
    elif kind == "sequence":
        report = seq_mod.validate_sequence(value)
    else:
        raise InputError(f"validate does not apply to kind {kind!r}")
    return {
        "verdict": "pass" if report.ok else "fail",
        "details": {"checks": _report_details(q, report)},
    }


def _task_compose(inst: Instance, task: dict, budget: int, probe: int) -> dict:
    _, outer = inst.resolve(task["outer"], {"vdist"})
    _, inner = inst.resolve(task["inner"], {"vdist"})
    try:
        result = vcat_mod.compose_vdist(outer, inner)
    except ValueError as exc:
        raise InputError(str(exc))
    q = inst.quantale
    values = [
        [_value_out(q, result.at(x, z)) for z in result.target.objects]
        for x in result.source.objects
    ]
    return {"verdict": "info", "details": {"values": values}}


def _task_adjoint(inst: Instance, task: dict, budget: int, probe: int) -> dict:
    q = inst.quantale
    if "pair" in task:
        _, wp = inst.resolve(task["pair"], {"weight_pair"})
        report = vcat_mod.adjoint_report(wp.phi, wp.psi)
        return {
            "verdict": "pass" if report.ok else "fail",
            "details": {"checks": _report_details(q, report)},
        }
    _, cert = inst.resolve(task["target"], {"certificate"})
    report = ncat_mod.check_adjunction_cert(cert, normed=task.get("normed", False))
    return {
        "verdict": "pass" if report.ok else "fail",
        "details": {"checks": _report_details(q, report)},
    }


def _task_isbell(inst: Instance, task: dict, budget: int, probe: int) -> dict:
    q = inst.quantale
    kind, value = inst.resolve(task["target"], {"weight_pair", "ndist"})
    if kind == "weight_pair":
        conj = vcat_mod.isbell_conjugate_weight(value.phi)
        vec = vcat_mod.coweight_vector(conj)
        return {
            "verdict": "info",
            "details": {"conjugate": {x: _value_out(q, v) for x, v in vec.items()}},
        }
    conj = ncat_mod.isbell_conjugate_ndist(value, budget)
    sizes = {a: len(conj.set_at(a)) for a in conj.category.objects}
    norms = {
        a: [_value_out(q, conj.set_at(a).norm(e)) for e in conj.set_at(a)]
        for a in conj.category.objects
    }
    return {"verdict": "info", "details": {"sizes": sizes, "norms": norms}}


def _task_representable(inst: Instance, task: dict, budget: int, probe: int) -> dict:
    q = inst.quantale
    _, wp = inst.resolve(task["pair"], {"weight_pair"})
    try:
        witness = vcat_mod.is_representable(wp.phi, wp.psi)
    except PreconditionError as exc:
        return {
            "verdict": "fail",
            "details": {"error": "pair is not adjoint", "evidence": str(exc)},
        }
    return {
        "verdict": "pass" if witness is not None else "fail",
        "details": {"witness": witness},
    }


def _format_weight_vec(q: Quantale, vec: dict) -> dict:
    return {str(x): _value_out(q, v) for x, v in vec.items()}


def _task_lawvere(inst: Instance, task: dict, budget: int, probe: int) -> dict:
    q = inst.quantale
    kind, value = inst.resolve(task["target"], {"vcat", "ncat"})
    if kind == "vcat":
        verdict = vcat_mod.lawvere_complete_vcat(value, budget=budget)
        if verdict.complete:
            witness = [
                {"weight": _format_weight_vec(q, vec), "witness": obj}
                for vec, obj in verdict.witness
            ]
        else:
            phi_vec, psi_vec = verdict.witness
            witness = {
                "phi": _format_weight_vec(q, phi_vec),
                "psi": _format_weight_vec(q, psi_vec),
            }
        return {
            "verdict": "pass" if verdict.complete else "fail",
            "details": {"witness": witness},
        }
    verdict = ncat_mod.is_lawvere_complete_ncat(value, budget=budget)
    details = {
        "clause": verdict.clause,
        "certificate": _jsonable(q, verdict.certificate),
    }
    return {"verdict": "pass" if verdict.complete else "fail", "details": details}


def _task_split(inst: Instance, task: dict, budget: int, probe: int) -> dict:
    _, A = inst.resolve(task["target"], {"ncat"})
    C = ncat_mod.strict_subcategory(A) if task.get("strict") else A
    ok, witness = ncat_mod.split_idempotents_check(C)
    return {"verdict": "pass" if ok else "fail", "details": {"witness": witness}}


def _task_cauchy(inst: Instance, task: dict, budget: int, probe: int) -> dict:
    q = inst.quantale
    kind, value = inst.resolve(task["target"], {"sequence", "metric_sequence"})
    if kind == "sequence":
        v = seq_mod.cauchy_value(value)
        ok = value.norm_quantale.leq(value.norm_quantale.unit, v)
        return {
            "verdict": "pass" if ok else "fail",
            "details": {"value": value.norm_quantale.format(v)},
        }
    v = seq_mod.forward_cauchy_value(value)
    ok = q.leq(q.unit, v)
    return {"verdict": "pass" if ok else "fail", "details": {"value": q.format(v)}}


def _task_colimit(inst: Instance, task: dict, budget: int, probe: int) -> dict:
    q = inst.quantale
    _, s = inst.resolve(task["target"], {"sequence"})
    try:
        if s.kind == "nset":
            apex, gamma = seq_mod.colimit_nset(s)
            apex_out = _ser_normed_set(inst, apex)
        elif s.kind == "dset":
            if task.get("vlip"):
                apex, gamma = seq_mod.colimit_vlip(s, budget=budget)
            else:
                apex, gamma = seq_mod.colimit_dset(s)
            apex_out = _ser_vcat(inst, apex)
        else:
            raise InputError("colimit construction applies to set-like ambients")
    except PreconditionError as exc:
        return {
            "verdict": "fail",
            "details": {
                "rejected": str(exc),
                "value": s.norm_quantale.format(exc.value),
            },
        }
    verification = seq_mod.verify_normed_colimit(s, gamma, probe_bound=probe, budget=budget)
    return {
        "verdict": "pass" if verification.ok else "fail",
        "details": {
            "apex": apex_out,
            "checks": _report_details(s.norm_quantale, verification),
            "probe_bound": probe,
        },
    }


def _task_forward_limit(inst: Instance, task: dict, budget: int, probe: int) -> dict:
    _, ms = inst.resolve(task["target"], {"metric_sequence"})
    point = task.get("point")
    if point is None:
        raise InputError("forward-limit needs a candidate 'point'")
    try:
        ok = seq_mod.forward_limit_metric(ms, point)
    except ValueError as exc:
        raise InputError(str(exc))
    return {"verdict": "pass" if ok else "fail", "details": {"point": point}}


def _task_lipnorm(inst: Instance, task: dict, budget: int, probe: int) -> dict:
    _, X = inst.resolve(task["source"], {"vcat"})
    _, Y = inst.resolve(task["target"], {"vcat"})
    mapping = task.get("map")
    mode = task.get("mode", "multiplicative")
    if not isinstance(mapping, dict):
        raise InputError("lipnorm needs a 'map' object")
    try:
        value = seq_mod.lipschitz_norm(
            X, Y, mapping, mode,
            q_odot=inst.quantale if mode == "odot" else None,
            log_base=task.get("log_base", 2),
        )
    except ValueError as exc:
        raise InputError(str(exc))
    if isinstance(value, seq_mod.LogNorm):
        exponent = value.exponent()
        detail = {
            "mode": mode,
            "zero": value.is_zero(),
            "infinite": value.is_infinite(),
            "ratio": "inf" if value.is_infinite() else str(value.ratio),
            "base": value.base,
            "exponent": None if exponent is None else str(exponent),
        }
    else:
        q_for = inst.quantale if mode == "odot" else seq_mod.lawvere_times()
        detail = {"mode": mode, "value": q_for.format(value)}
    return {"verdict": "info", "details": detail}


_TASKS = {
    "validate": _task_validate,
    "compose": _task_compose,
    "adjoint": _task_adjoint,
    "isbell": _task_isbell,
    "representable": _task_representable,
    "lawvere": _task_lawvere,
    "split": _task_split,
    "cauchy": _task_cauchy,
    "colimit": _task_colimit,
    "forward-limit": _task_forward_limit,
    "lipnorm": _task_lipnorm,
}


def run_instance(inst: Instance, budget: int, probe: int) -> dict:
    results = []
    for i, task in enumerate(inst.tasks):
        op = task.get("op")
        if op not in _TASKS:
            raise InputError(f"task {i}: unknown op {op!r}")
        try:
            outcome = _TASKS[op](inst, task, budget, probe)
        except (InputError, BudgetExceeded):
            raise
        except PreconditionError as exc:
            outcome = {
                "verdict": "fail",
                "details": {"precondition": str(exc)},
            }
        except (KeyError, ValueError) as exc:
            raise InputError(f"task {i} ({op}): {exc}")
        entry = {"index": i, "op": op}
        for key in ("target", "pair", "outer", "inner", "source", "point", "mode"):
            if key in task:
                entry[key] = task[key]
        entry.update(outcome)
        results.append(entry)
    all_pass = all(r["verdict"] != "fail" for r in results)
    return {
        "budget": budget,
        "probe_bound": probe,
        "tasks": results,
        "all_pass": all_pass,
    }


def machine_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def human_report(report: dict, elapsed: float) -> str:
    lines = []
    for entry in report["tasks"]:
        label = entry.get("target") or entry.get("pair") or entry.get("source") or ""
        verdict = entry["verdict"].upper()
        lines.append(f"[{entry['index']}] {entry['op']} {label}: {verdict}")
        details = entry.get("details", {})
        for key, value in details.items():
            if key == "checks":
                for check in value:
                    mark = "ok" if check["ok"] else "FAIL"
                    suffix = "" if check["witness"] is None else f" ({check['witness']})"
                    lines.append(f"      {check['check']}: {mark}{suffix}")
            else:
                lines.append(f"      {key}: {value}")
    lines.append(
        f"result: {'all tasks passed' if report['all_pass'] else 'failures'} "
        f"(budget {report['budget']}, probe bound {report['probe_bound']}, "
        f"{elapsed:.3f}s)"
    )
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="quantcat",
        description="Run validations, decisions, and constructions from an instance file.",
    )
    parser.add_argument("file", help="JSON instance file")
    parser.add_argument("--json", action="store_true", help="emit the machine report")
    parser.add_argument(
        "--budget", type=int, default=None,
        help="enumeration budget (default from QUANTCAT_BUDGET or 4096)",
    )
    parser.add_argument(
        "--probe", type=int, default=3, help="probe object size bound for (C2b)"
    )
    args = parser.parse_args(argv)
    try:
        budget = args.budget if args.budget is not None else default_budget()
        if budget <= 0:
            raise InputError("budget must be positive")
        if args.probe <= 0:
            raise InputError("probe bound must be positive")
        started = time.perf_counter()
        inst = load_instance(args.file)
        report = run_instance(inst, budget, args.probe)
        elapsed = time.perf_counter() - started
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    if args.json:
        print(machine_report(report))
    else:
        print(human_report(report, elapsed))
    return 0 if report["all_pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
