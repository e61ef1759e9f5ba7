"""JSON import/export for tables, presentations, cocycles and cleft extensions.

Scalars are written as strings (``"3"`` or ``"-1/2"``), so files are exact and
independent of numpy integer widths. Coproducts and coactions are stored as
sparse ``[i, j, "c"]`` triples per basis element. Export is deterministic:
re-exporting an imported file reproduces it byte for byte.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .algebra import AlgebraTable, AugmentedAlgebra, MonomialPresentation
from .exactla import Field
from .hopf import HopfTable

__all__ = [
    "SchemaError",
    "dumps",
    "algebra_to_json",
    "algebra_from_json",
    "hopf_to_json",
    "hopf_from_json",
    "presentation_to_json",
    "presentation_from_json",
    "cocycle_to_json",
    "cocycle_table_from_json",
    "cleft_to_json",
    "cleft_from_json",
    "matrix_to_json",
]


class SchemaError(ValueError):
    """A JSON document does not match the expected schema."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _fmt(F: Field, a: np.ndarray):
    a = np.asarray(a)
    if a.ndim == 0:
        return F.format_scalar(a.item() if hasattr(a, "item") else a)
    return [_fmt(F, x) for x in a]


def matrix_to_json(F: Field, m: np.ndarray) -> list:
    return _fmt(F, np.asarray(m))


def _sparse(F: Field, block: np.ndarray) -> list:
    out = []
    for idx in zip(*np.nonzero(np.asarray(block != 0))):
        out.append([int(i) for i in idx] + [F.format_scalar(block[idx])])
    return out


def _need(doc: dict, key: str, where: str):
    if not isinstance(doc, dict) or key not in doc:
        raise SchemaError(f"{where}: missing key {key!r}")
    return doc[key]


def _field(doc: dict, where: str) -> Field:
    try:
        return Field.parse(_need(doc, "field", where))
    except ValueError as exc:
        raise SchemaError(f"{where}.field: {exc}") from exc


def _dense(F: Field, data, shape: tuple, where: str) -> np.ndarray:
    try:
        arr = np.array(data, dtype=object)
    except Exception as exc:  # ragged nesting
        raise SchemaError(f"{where}: malformed array ({exc})") from exc
    if arr.shape != shape:
        raise SchemaError(f"{where}: expected shape {shape}, got {arr.shape}")
    if arr.size and not all(isinstance(v, str) for v in arr.reshape(-1)):
        raise SchemaError(f"{where}: scalars must be strings")
    try:
        return F.array(arr) if arr.size else F.zeros(shape)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"{where}: bad scalar ({exc})") from exc


def _from_sparse(F: Field, data, shape: tuple, where: str) -> np.ndarray:
    if not isinstance(data, list) or len(data) != shape[0]:
        raise SchemaError(f"{where}: expected a list of {shape[0]} triple lists")
    out = F.zeros(shape)
    for i, triples in enumerate(data):
        if not isinstance(triples, list):
            raise SchemaError(f"{where}[{i}]: expected a list of triples")
        for t, tr in enumerate(triples):
            if not (isinstance(tr, list) and len(tr) == len(shape)):
                raise SchemaError(f"{where}[{i}][{t}]: expected {len(shape)} entries")
            idx = tr[:-1]
            if not all(isinstance(k, int) and 0 <= k < s for k, s in zip(idx, shape[1:])):
                raise SchemaError(f"{where}[{i}][{t}]: index out of range")
            try:
                out[(i, *idx)] = F.parse_scalar(tr[-1])
            except (ValueError, ZeroDivisionError) as exc:
                raise SchemaError(f"{where}[{i}][{t}]: bad scalar ({exc})") from exc
    return out


# -- algebras ------------------------------------------------------------------------

def algebra_to_json(a: AlgebraTable) -> dict:
    F = a.field
    return {
        "field": F.name,
        "dim": a.dim,
        "labels": list(a.labels),
        "unit": _fmt(F, a.unit),
        "mult": _fmt(F, a.mult),
    }


def algebra_from_json(doc: dict, where: str = "algebra", check: bool = True) -> AlgebraTable:
    F = _field(doc, where)
    n = _need(doc, "dim", where)
    if not isinstance(n, int) or n < 1:
        raise SchemaError(f"{where}.dim: expected a positive integer")
    labels = _need(doc, "labels", where)
    if not isinstance(labels, list) or len(labels) != n or not all(isinstance(x, str) for x in labels):
        raise SchemaError(f"{where}.labels: expected {n} strings")
    unit = _dense(F, _need(doc, "unit", where), (n,), f"{where}.unit")
    mult = _dense(F, _need(doc, "mult", where), (n, n, n), f"{where}.mult")
    alg = AlgebraTable(F, mult, unit, tuple(labels))
    if check:
        for c in alg.check_axioms():
            if not c.ok:
                raise SchemaError(f"{where}: {c.name} fails at basis tuple {c.witness}")
    return alg


# -- Hopf algebras ---------------------------------------------------------------------

def hopf_to_json(h: HopfTable) -> dict:
    F = h.field
    doc = algebra_to_json(h.alg)
    doc["name"] = h.name
    doc["coproduct"] = [_sparse(F, h.coproduct[i]) for i in range(h.dim)]
    doc["counit"] = _fmt(F, h.counit)
    doc["antipode"] = _fmt(F, h.antipode)
    return doc


def hopf_from_json(doc: dict, where: str = "hopf", check: bool = True) -> HopfTable:
    alg = algebra_from_json(doc, where, check=check)
    F = alg.field
    n = alg.dim
    D = _from_sparse(F, _need(doc, "coproduct", where), (n, n, n), f"{where}.coproduct")
    eps = _dense(F, _need(doc, "counit", where), (n,), f"{where}.counit")
    S = _dense(F, _need(doc, "antipode", where), (n, n), f"{where}.antipode")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise SchemaError(f"{where}.name: expected a string")
    return HopfTable(alg, D, eps, S, name)


# -- presentations ------------------------------------------------------------------------

def presentation_to_json(p: MonomialPresentation) -> dict:
    F = p.field
    params = {}
    for k, v in p.params.items():
        if k == "base":
            params[k] = presentation_to_json(v)
        elif k in ("a", "c"):
            params[k] = [F.format_scalar(F.parse_scalar(x) if isinstance(x, str) else F.scalar(x)) for x in v]
        elif isinstance(v, (list, tuple)):
            params[k] = [int(x) for x in v]
        else:
            params[k] = int(v)
    return {"kind": p.kind, "field": F.name, "params": params}


def presentation_from_json(doc: dict, where: str = "presentation") -> MonomialPresentation:
    F = _field(doc, where)
    kind = _need(doc, "kind", where)
    raw = _need(doc, "params", where)
    if not isinstance(raw, dict):
        raise SchemaError(f"{where}.params: expected an object")
    params: dict = {}
    for k, v in raw.items():
        if k == "base":
            params[k] = presentation_from_json(v, f"{where}.params.base")
        elif k in ("a", "c"):
            params[k] = [F.parse_scalar(x) for x in v]
        else:
            params[k] = v
    pres = MonomialPresentation(kind, F, params)
    try:
        pres.validate()
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc
    return pres


# -- cocycles and cleft extensions -----------------------------------------------------------

def cocycle_to_json(hopf_ref, F: Field, table: np.ndarray) -> dict:
    """``{"hopf": <preset or inline>, "s": [[...]]}``."""
    return {"hopf": hopf_ref, "s": _fmt(F, table)}


def cocycle_table_from_json(doc: dict, F: Field, d: int, where: str = "cocycle") -> np.ndarray:
    return _dense(F, _need(doc, "s", where), (d, d), f"{where}.s")


def cleft_to_json(e) -> dict:
    F = e.hopf.field
    doc = algebra_to_json(e.carrier.alg)
    doc["name"] = e.name
    doc["counit"] = _fmt(F, e.carrier.counit)
    N = e.carrier.alg.dim
    doc["coaction"] = [_sparse(F, e.coaction[X]) for X in range(N)]
    doc["section"] = _fmt(F, e.section)
    doc["tau_action"] = _fmt(F, e.tau_action)
    doc["hopf"] = hopf_to_json(e.hopf)
    return doc


def cleft_from_json(doc: dict, where: str = "cleft"):
    from .cleft import CleftExtension

    h = hopf_from_json(_need(doc, "hopf", where), f"{where}.hopf")
    alg = algebra_from_json(doc, where)
    F = alg.field
    if F != h.field:
        raise SchemaError(f"{where}: carrier and Hopf algebra over different fields")
    N, n = alg.dim, h.dim
    eps = _dense(F, _need(doc, "counit", where), (N,), f"{where}.counit")
    R = _from_sparse(F, _need(doc, "coaction", where), (N, N, n), f"{where}.coaction")
    phi = _dense(F, _need(doc, "section", where), (N, n), f"{where}.section")
    tau = _dense(F, _need(doc, "tau_action", where), (N, N), f"{where}.tau_action")
    return CleftExtension(h, AugmentedAlgebra(alg, eps), R, phi, tau, doc.get("name", ""))
