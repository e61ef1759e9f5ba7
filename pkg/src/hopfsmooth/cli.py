"""Command-line front end.

Usage::

    hopfsmooth <verb> (--preset P | --file F) [options] [--format table|json]

Exit status: 0 on success, 1 when a mathematical check fails (inconsistent
verdicts, an invalid cocycle, a failing suite entry, ...), 2 on input errors.
Input errors print a single diagnostic line on stderr. Output is deterministic.

JSON schemas: Hopf tables and cleft extensions follow :mod:`hopfsmooth.serialize`;
cocycle files are ``{"hopf": <preset string or inline table>, "s": [[...]]}``
with ``s`` the table on the chosen basis of ``H+``; corpus files follow
:mod:`hopfsmooth.corpus`.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .algebra import UnsupportedOperation
from .cleft import (
    CocycleError,
    SubgroupError,
    SymmetricCocycle,
    build_A_a,
    build_A_c_truncated,
    cohomologous,
    compare_group_restriction,
    crossed_product_from_cocycle,
    extract_cocycle,
    group_cocycle_parameters,
    sample1_cocycle_parameters,
)
from .cohomology import (
    FLAVORS,
    SizeError,
    build_mu_data,
    second_cohomology,
    smoothness_report,
)
from .corpus import CHECKS, load_corpus, run_suite
from .decompose import NotLocalError, decompose_local_hopf, frobenius_exponents
from .exactla import Field
from .hopf import HopfTable, SubgroupData, hopf_is_valid
from .presets import PresetError, parse_preset, preset_group
from .serialize import (
    SchemaError,
    cleft_from_json,
    cleft_to_json,
    cocycle_table_from_json,
    cocycle_to_json,
    dumps,
    hopf_from_json,
    hopf_to_json,
    matrix_to_json,
)

__all__ = ["InputError", "build_parser", "main"]

VERBS = ("check", "cohom", "mu", "restrict", "cleft-build", "cleft-extract", "cocycle-test", "decompose", "suite", "export")


class InputError(Exception):
    """Anything wrong with the command line or the input files (exit status 2)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # one-line diagnostic, status 2
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hopfsmooth", description="Smoothness and H^2 of commutative Hopf algebras over F_p and Q.")
    parser.add_argument("--version", action="version", version=f"hopfsmooth {__version__}")
    sub = parser.add_subparsers(dest="verb", metavar="verb", parser_class=_Parser)

    def verb(name, help_text, needs_input=True):
        p = sub.add_parser(name, help=help_text)
        if needs_input:
            p.add_argument("--preset", help="group:<field>:<orders> | trunc:<field>:<exps> | etale:<field>:<orders> | sample1:<p>:<n>:<M> | trivial:<field>")
            p.add_argument("--file", help="JSON file (Hopf table, or cleft extension for cleft-extract)")
        p.add_argument("--format", choices=("table", "json"), default="json")
        return p

    verb("check", "smoothness verdicts and the consistency report")
    p = verb("cohom", "second cohomology with trivial coefficients")
    p.add_argument("--flavor", choices=FLAVORS, default="symmetric")
    verb("mu", "the chain-level description Ker mu")
    p = verb("restrict", "restriction to the group algebra of a subgroup")
    p.add_argument("--subgroup", required=True, help='rows of the c matrix, e.g. "2,0;0,1"')
    p.add_argument("--flavor", choices=FLAVORS, default="symmetric")
    p = verb("cleft-build", "build a cleft extension over the dual numbers")
    p.add_argument("--params", help="a (group presets) or c (sample1 presets), comma-separated")
    p.add_argument("--cocycle", help="cocycle JSON file; builds the crossed product")
    p = verb("cleft-extract", "extract the cocycle of a cleft extension")
    p.add_argument("--params", help="with --preset: build A_a / A_c from these parameters first")
    p = verb("cocycle-test", "validate a cocycle and locate its class")
    p.add_argument("--cocycle", required=True, help="cocycle JSON file")
    p.add_argument("--against", help="second cocycle JSON file to test for cohomology")
    verb("decompose", "truncated-polynomial decomposition of a local Hopf algebra")
    p = verb("suite", "run the regression suite over a corpus", needs_input=False)
    p.add_argument("--corpus", help="corpus JSON (default: $HOPFSMOOTH_CORPUS or the bundled corpus)")
    p.add_argument("--checks", help=f"comma-separated subset of {','.join(CHECKS)}")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    verb("export", "write the Hopf table as JSON")
    return parser


# -- input helpers --------------------------------------------------------------------

def _read_json(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}: invalid JSON ({exc.msg})") from exc


def _source(args) -> tuple:
    """``(kind, value)`` with kind ``preset`` or ``file``; exactly one must be given."""
    given = [(k, getattr(args, k)) for k in ("preset", "file") if getattr(args, k, None)]
    if len(given) != 1:
        raise InputError("give exactly one input source: --preset or --file")
    return given[0]


def _hopf(args) -> HopfTable:
    kind, value = _source(args)
    if kind == "preset":
        return parse_preset(value)
    doc = _read_json(value)
    h = hopf_from_json(doc, value)
    if not hopf_is_valid(h):
        raise InputError(f"{value}: the table violates the Hopf algebra axioms (run 'check' for the witness)")
    return h


def _params(F: Field, text: Optional[str], n: int, what: str) -> list:
    if text is None:
        raise InputError(f"--params is required ({n} comma-separated values for {what})")
    try:
        vals = [F.parse_scalar(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"--params: {exc}") from exc
    if len(vals) != n:
        raise InputError(f"--params: expected {n} values for {what}, got {len(vals)}")
    return vals


def _cocycle(h: HopfTable, path: str, args) -> SymmetricCocycle:
    doc = _read_json(path)
    ref = doc.get("hopf") if isinstance(doc, dict) else None
    if isinstance(ref, str) and getattr(args, "preset", None) and ref.strip() != args.preset.strip():
        raise InputError(f"{path}: cocycle is for {ref!r}, not {args.preset!r}")
    table = cocycle_table_from_json(doc, h.field, h.augmentation.dim, path)
    return SymmetricCocycle(h, table)


def _sample1_shape(text: str) -> tuple:
    """``(n, M)`` of a ``sample1:<p>:<n>:<M>`` preset (``p`` may be written ``F3`` or ``3``)."""
    parts = text.split(":")
    return int(parts[2]), int(parts[3])


# -- output ----------------------------------------------------------------------------------

def _cell(v) -> str:
    if isinstance(v, bool) or v is None:
        return json.dumps(v)
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def _emit(doc: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(dumps(doc))
        return
    width = max((len(k) for k in doc), default=0)
    for k, v in doc.items():
        out.write(f"{k.ljust(width)}  {_cell(v)}\n")


# -- verbs ------------------------------------------------------------------------------------

def _do_check(args, out) -> int:
    h = _hopf(args)
    report = smoothness_report(h)
    doc = {"hopf": h.name, "dim": h.dim}
    doc.update(report.to_json())
    _emit(doc, args.format, out)
    return 0 if report.consistent else 1


def _do_cohom(args, out) -> int:
    h = _hopf(args)
    res = second_cohomology(h, args.flavor)
    F = h.field
    doc = {
        "hopf": h.name,
        "flavor": res.flavor,
        "aug_dim": h.augmentation.dim,
        "dim": res.dim,
        "cocycle_dim": res.cocycle_space.dim,
        "coboundary_dim": res.coboundary_space.dim,
        "representatives": [matrix_to_json(F, t) for t in res.tables()],
    }
    _emit(doc, args.format, out)
    return 0


def _do_mu(args, out) -> int:
    h = _hopf(args)
    mu = build_mu_data(h)
    doc = {
        "hopf": h.name,
        "aug_dim": h.augmentation.dim,
        "s2_dim": len(mu.s2_basis),
        "ker_delta1_dim": mu.ker_delta1.dim,
        "image_delta2_dim": mu.image_delta2.dim,
        "ker_mu_dim": mu.ker_mu_dim,
        "complex": mu.is_complex(),
    }
    _emit(doc, args.format, out)
    return 0 if doc["complex"] else 1


def _do_restrict(args, out) -> int:
    kind, value = _source(args)
    if kind != "preset":
        raise InputError("restrict needs a group:<field>:<orders> preset")
    g = preset_group(value)
    h = parse_preset(value)
    F = h.field
    s = SubgroupData.parse(args.subgroup)
    comp = compare_group_restriction(g, F, s)
    if args.flavor == "symmetric":
        res = comp.restriction
    else:
        from .cohomology import restriction_map
        from .hopf import hopf_subalgebra_from_subgroup

        res = restriction_map(hopf_subalgebra_from_subgroup(g, F, s), args.flavor)
    norm = comp.normalized
    doc = {
        "hopf": h.name,
        "subgroup": [list(r) for r in s.rows],
        "normalized": [list(r) for r in norm.sub.rows],
        "perm": list(norm.perm),
        "T": [list(r) for r in comp.T.t],
        "T_mod_p": comp.T.mod(F.p).tolist(),
        "T_rank": comp.T_rank,
        "flavor": res.flavor,
        "matrix": matrix_to_json(F, res.matrix),
        "rank": res.rank,
        "source_dim": res.source_dim,
        "target_dim": res.target_dim,
        "surjective": res.surjective,
        "T_agrees": comp.agree,
    }
    _emit(doc, args.format, out)
    return 0 if comp.agree else 1


def _build_cleft(args):
    kind, value = _source(args)
    if kind != "preset":
        raise InputError("building a cleft extension needs --preset")
    h = parse_preset(value)
    F = h.field
    if getattr(args, "cocycle", None):
        if args.params:
            raise InputError("give either --params or --cocycle, not both")
        return crossed_product_from_cocycle(h, _cocycle(h, args.cocycle, args))
    head = value.split(":")[0]
    if head == "group":
        if F.is_rational:
            raise InputError("A_a needs a prime field")
        g = preset_group(value)
        return build_A_a(g, _params(F, args.params, g.q, "a"), F.p)
    if head == "sample1":
        n, M = _sample1_shape(value)
        if n < 2:
            raise InputError("A_c needs n >= 2")
        return build_A_c_truncated(n, M, F.p, _params(F, args.params, n - 1, "c"))
    raise InputError("--params applies to group and sample1 presets; use --cocycle for other Hopf algebras")


def _do_cleft_build(args, out) -> int:
    e = _build_cleft(args)
    checks = e.verify()
    bad = [f"{c.name} at {c.witness}" for c in checks if not c.ok]
    if args.format == "json":
        doc = cleft_to_json(e)
    else:
        doc = {"name": e.name, "dim": e.dim, "hopf_dim": e.hopf.dim, "labels": list(e.carrier.alg.labels)}
    doc["checks"] = {c.name: c.ok for c in checks}
    _emit(doc, args.format, out)
    if bad:
        print(f"hopfsmooth: cleft extension fails {'; '.join(bad)}", file=sys.stderr)
    return 1 if bad else 0


def _parameters(args, e, s) -> Optional[list]:
    """Cocycle parameters (a or c) when the Hopf algebra is a group algebra or sample-1 truncation."""
    F = e.hopf.field
    preset = getattr(args, "preset", None)
    if not preset:
        return None
    head = preset.split(":")[0]
    if head == "group" and not F.is_rational:
        g = preset_group(preset)
        return [F.format_scalar(x) for x in group_cocycle_parameters(e.hopf, g, s)]
    if head == "sample1":
        n, _M = _sample1_shape(preset)
        if n >= 2:
            c, _ = sample1_cocycle_parameters(e.hopf, s, n)
            return [F.format_scalar(x) for x in c]
    return None


def _do_cleft_extract(args, out) -> int:
    kind, value = _source(args)
    if kind == "file":
        if args.params:
            raise InputError("--params only applies with --preset")
        e = cleft_from_json(_read_json(value), value)
        bad = [c.name for c in e.verify() if not c.ok]
        if bad:
            raise InputError(f"{value}: not a cleft extension ({', '.join(bad)} fails)")
        ref = hopf_to_json(e.hopf)
    else:
        e = _build_cleft(args)
        ref = value
    s = extract_cocycle(e)
    F = e.hopf.field
    doc = cocycle_to_json(ref if args.format == "json" else e.hopf.name, F, s.table)
    params = _parameters(args, e, s)
    if params is not None:
        doc["parameters"] = params
    doc["valid"] = s.is_valid()
    _emit(doc, args.format, out)
    return 0 if doc["valid"] else 1


def _do_cocycle_test(args, out) -> int:
    h = _hopf(args)
    F = h.field
    s = _cocycle(h, args.cocycle, args)
    checks = s.check()
    doc = {"hopf": h.name, "checks": {c.name: c.ok for c in checks}}
    witnesses = {c.name: list(c.witness) for c in checks if not c.ok and c.witness is not None}
    if witnesses:
        doc["witnesses"] = witnesses
    valid = all(c.ok for c in checks)
    doc["valid"] = valid
    if valid:
        res = second_cohomology(h, "symmetric")
        coords = res.coordinates(s.vector)
        doc["class"] = None if coords is None else [F.format_scalar(x) for x in coords]
        doc["coboundary"] = res.is_coboundary(s.vector)
        if args.against:
            t = _cocycle(h, args.against, args)
            if not t.is_valid():
                raise InputError(f"{args.against}: not a symmetric 2-cocycle")
            same, f = cohomologous(h, s, t)
            doc["cohomologous"] = same
            if same:
                doc["witness_f"] = [F.format_scalar(x) for x in f]
    _emit(doc, args.format, out)
    return 0 if valid else 1


def _do_decompose(args, out) -> int:
    h = _hopf(args)
    if h.field.is_rational:
        raise InputError("decompose needs a prime field")
    try:
        dec = decompose_local_hopf(h)
    except NotLocalError as exc:
        _emit({"hopf": h.name, "local": False}, args.format, out)
        print(f"hopfsmooth: {exc}", file=sys.stderr)
        return 1
    doc = {"hopf": h.name, "local": True}
    doc.update(dec.to_json(h.field))
    doc["exponents"] = sorted(doc["exponents"], reverse=True)
    doc["frobenius_exponents"] = sorted(frobenius_exponents(h), reverse=True)
    doc["labels"] = list(h.alg.labels)
    _emit(doc, args.format, out)
    return 0 if doc["exponents"] == doc["frobenius_exponents"] else 1


def _do_suite(args, out) -> int:
    entries = load_corpus(args.corpus)
    checks = CHECKS if not args.checks else [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise InputError(f"unknown checks {unknown}; available: {', '.join(CHECKS)}")
    if args.jobs < 1:
        raise InputError("--jobs must be >= 1")
    report = run_suite(entries, checks, workers=args.jobs)
    if args.format == "json":
        out.write(dumps(report.to_json()))
    else:
        width = max((len(r.id) for r in report.results), default=2)
        out.write(("id".ljust(width) + "  " + "  ".join(c.ljust(13) for c in checks)).rstrip() + "\n")
        for r in report.results:
            cells = "  ".join(r.status.get(c, "skip").ljust(13) for c in checks)
            out.write((r.id.ljust(width) + "  " + cells).rstrip() + "\n")
            for key, val in r.details.items():
                out.write(f"{'':{width}}  {key}: {val}\n")
        out.write(f"{'ok' if report.ok else 'FAILED'}: {sum(r.ok for r in report.results)}/{len(report.results)} entries pass\n")
    return 0 if report.ok else 1


def _do_export(args, out) -> int:
    h = _hopf(args)
    out.write(dumps(hopf_to_json(h)))
    return 0


HANDLERS = {
    "check": _do_check,
    "cohom": _do_cohom,
    "mu": _do_mu,
    "restrict": _do_restrict,
    "cleft-build": _do_cleft_build,
    "cleft-extract": _do_cleft_extract,
    "cocycle-test": _do_cocycle_test,
    "decompose": _do_decompose,
    "suite": _do_suite,
    "export": _do_export,
}

_INPUT_ERRORS = (
    InputError,
    PresetError,
    SchemaError,
    SubgroupError,
    SizeError,
    CocycleError,
    UnsupportedOperation,
)


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        if argv and not argv[0].startswith("-") and argv[0] not in VERBS:
            raise InputError(f"unknown verb {argv[0]!r}; expected one of {', '.join(VERBS)}")
        args = build_parser().parse_args(argv)
        if args.verb is None:
            raise InputError(f"missing verb; expected one of {', '.join(VERBS)}")
        return HANDLERS[args.verb](args, out)
    except (*_INPUT_ERRORS, ValueError) as exc:
        msg = " ".join(str(exc).split())
        print(f"hopfsmooth: error: {msg}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:  # a verification inside the engine failed
        msg = " ".join(str(exc).split())
        print(f"hopfsmooth: check failed: {msg}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
