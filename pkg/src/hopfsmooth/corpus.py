"""The curated corpus of Hopf algebras and the regression suite over it.

A corpus file is a JSON array of entries::

    {"id": "kZ4Z2_F2",
     "preset": "group:F2:4,2",            # or "tensor": [p1, p2], or "inline": {...}
     "expected": {"h2s_dim": {"value": 2, "provenance": "paper"}},
     "note": "..."}

Every expected value carries a provenance tag (paper, derived or trivial);
untagged expectations are rejected when the file is loaded.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from .cohomology import SizeError, build_mu_data, cochain_segment, smoothness_report
from .decompose import decompose_local_hopf, frobenius_exponents, is_local, verify_decomposition
from .hopf import HopfTable, tensor_hopf, verify_hopf_axioms
from .presets import PresetError, parse_preset
from .serialize import SchemaError, hopf_from_json

__all__ = [
    "PROVENANCES",
    "EXPECTED_KEYS",
    "CHECKS",
    "Expectation",
    "CorpusEntry",
    "EntryResult",
    "SuiteReport",
    "default_corpus_path",
    "load_corpus",
    "parse_corpus",
    "run_suite",
]

PROVENANCES = ("paper", "derived", "trivial")
EXPECTED_KEYS = ("h2s_dim", "h2_full_dim", "ker_mu_dim", "smooth", "local", "exponents")
CHECKS = ("axioms", "complex", "duality", "equivalence", "expected", "decomposition")
ENV_VAR = "HOPFSMOOTH_CORPUS"


@dataclass(frozen=True)
class Expectation:
    value: object
    provenance: str


@dataclass(frozen=True, eq=False)
class CorpusEntry:
    id: str
    source: dict  # exactly one of preset / tensor / inline
    expected: dict = field(default_factory=dict)
    note: str = ""

    def build(self) -> HopfTable:
        if "preset" in self.source:
            return parse_preset(self.source["preset"])
        if "tensor" in self.source:
            a, b = self.source["tensor"]
            return tensor_hopf(parse_preset(a), parse_preset(b))
        return hopf_from_json(self.source["inline"], f"{self.id}.inline", check=False)

    @property
    def description(self) -> str:
        if "preset" in self.source:
            return self.source["preset"]
        if "tensor" in self.source:
            return " (x) ".join(self.source["tensor"])
        return "inline table"


def default_corpus_path() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(str(resources.files("hopfsmooth") / "data" / "corpus.json"))


def _line_of(text: str, needle: str) -> Optional[int]:
    pos = text.find(needle)
    return None if pos < 0 else text.count("\n", 0, pos) + 1


def parse_corpus(text: str, origin: str = "<corpus>") -> list:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{origin}:{exc.lineno}: invalid JSON ({exc.msg})") from exc
    if not isinstance(raw, list):
        raise SchemaError(f"{origin}:1: corpus must be a JSON array of entries")
    entries = []
    seen = set()
    for k, doc in enumerate(raw):
        ident = doc.get("id") if isinstance(doc, dict) else None
        line = _line_of(text, f'"id": "{ident}"') if ident else None
        where = f"{origin}:{line}" if line else f"{origin}: entry #{k}"

        def fail(msg):
            raise SchemaError(f"{where}: {msg}")

        if not isinstance(doc, dict):
            fail("entry must be an object")
        if not isinstance(ident, str) or not ident:
            fail("entry needs a non-empty string id")
        if ident in seen:
            fail(f"duplicate id {ident!r}")
        seen.add(ident)
        sources = [key for key in ("preset", "tensor", "inline") if key in doc]
        if len(sources) != 1:
            fail("entry needs exactly one of preset, tensor, inline")
        src = {sources[0]: doc[sources[0]]}
        if "tensor" in src and not (
            isinstance(src["tensor"], list) and len(src["tensor"]) == 2 and all(isinstance(s, str) for s in src["tensor"])
        ):
            fail("tensor needs a list of two preset strings")
        expected = {}
        exp_doc = doc.get("expected", {})
        if not isinstance(exp_doc, dict):
            fail("expected must be an object")
        for key, val in exp_doc.items():
            if key not in EXPECTED_KEYS:
                fail(f"unknown expectation {key!r}")
            if not isinstance(val, dict) or "value" not in val or "provenance" not in val:
                fail(f"expectation {key!r} is untagged; use {{\"value\": ..., \"provenance\": ...}}")
            if val["provenance"] not in PROVENANCES:
                fail(f"expectation {key!r} has provenance {val['provenance']!r}; expected one of {PROVENANCES}")
            expected[key] = Expectation(val["value"], val["provenance"])
        entries.append(CorpusEntry(ident, src, expected, doc.get("note", "")))
    return entries


def load_corpus(path=None) -> list:
    p = Path(path) if path is not None else default_corpus_path()
    try:
        text = p.read_text()
    except OSError as exc:
        raise SchemaError(f"{p}: cannot read corpus ({exc.strerror})") from exc
    return parse_corpus(text, str(p))


# -- suite ----------------------------------------------------------------------------------

@dataclass
class EntryResult:
    id: str
    status: dict  # check -> "pass" | "fail" | "skip"
    details: dict
    values: dict
    seconds: float

    @property
    def ok(self) -> bool:
        return all(v != "fail" for v in self.status.values())


@dataclass
class SuiteReport:
    results: list

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "entries": [
                {"id": r.id, "status": r.status, "details": r.details, "values": r.values} for r in self.results
            ],
        }


def _evaluate(entry: CorpusEntry, checks: Sequence[str]) -> EntryResult:
    t0 = time.perf_counter()
    status = {c: "skip" for c in checks}
    status.setdefault("axioms", "skip")
    details: dict = {}
    values: dict = {}
    try:
        h = entry.build()
    except (PresetError, SchemaError, ValueError) as exc:
        status = {c: "fail" for c in checks}
        details["build"] = str(exc)
        return EntryResult(entry.id, status, details, values, time.perf_counter() - t0)

    axioms = verify_hopf_axioms(h)
    bad = [f"{c.name} at {c.witness}" for c in axioms if not c.ok]
    status["axioms"] = "fail" if bad else "pass"
    if bad:
        details["axioms"] = bad
        return EntryResult(entry.id, status, details, values, time.perf_counter() - t0)

    try:
        mu = build_mu_data(h)
        report = smoothness_report(h, mu)
    except SizeError as exc:
        for c in ("complex", "duality", "equivalence", "expected"):
            if c in status:
                status[c] = "fail"
        details["size"] = str(exc)
        return EntryResult(entry.id, status, details, values, time.perf_counter() - t0)
    values.update(report.to_json())
    values["dim"] = h.dim
    local = (not h.field.is_rational) and is_local(h)
    values["local"] = local

    if "complex" in status:
        ok = all(cochain_segment(h, fl).is_complex() for fl in ("symmetric", "full")) and mu.is_complex()
        status["complex"] = "pass" if ok else "fail"
    if "duality" in status:
        status["duality"] = "pass" if report.h2s_dim == report.ker_mu_dim else "fail"
    if "equivalence" in status:
        status["equivalence"] = "pass" if report.consistent else "fail"

    if "decomposition" in status and local:
        try:
            dec = decompose_local_hopf(h)
            values["exponents"] = sorted(dec.exponents, reverse=True)
            ok = verify_decomposition(h, dec) and sorted(dec.exponents) == sorted(frobenius_exponents(h))
            status["decomposition"] = "pass" if ok else "fail"
        except ArithmeticError as exc:
            status["decomposition"] = "fail"
            details["decomposition"] = str(exc)

    if "expected" in status:
        mismatches = []
        smooth = report.derived_abc
        actual = {
            "h2s_dim": report.h2s_dim,
            "h2_full_dim": report.h2_full_dim,
            "ker_mu_dim": report.ker_mu_dim,
            "smooth": smooth,
            "local": local,
            "exponents": values.get("exponents"),
        }
        if "exponents" in entry.expected and "exponents" not in values and local:
            actual["exponents"] = sorted(decompose_local_hopf(h).exponents, reverse=True)
        for key, exp in entry.expected.items():
            got = actual[key]
            want = exp.value
            if key == "exponents" and got is not None:
                got, want = sorted(got), sorted(want)
            if got != want:
                mismatches.append(f"{key}: expected {exp.value} ({exp.provenance}), got {actual[key]}")
        status["expected"] = "fail" if mismatches else "pass"
        if mismatches:
            details["expected"] = mismatches
    return EntryResult(entry.id, status, details, values, time.perf_counter() - t0)


def run_suite(entries: Sequence[CorpusEntry], checks: Sequence[str] = CHECKS, workers: int = 1) -> SuiteReport:
    """Evaluate every entry; axioms gate all later checks. Results sorted by id.

    With ``workers > 1`` entries are evaluated in separate processes; the report
    is identical to the sequential one apart from timings.
    """
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; available: {CHECKS}")
    checks = list(checks)
    if workers > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_evaluate, entries, [checks] * len(entries)))
    else:
        results = [_evaluate(e, checks) for e in entries]
    return SuiteReport(sorted(results, key=lambda r: r.id))
