"""Preset strings naming the built-in Hopf algebra families.

Grammar::

    group:<field>:<o1,o2,...>     group algebra of Z/o1 + Z/o2 + ...
    trunc:<field>:<e1,e2,...>     k[x_1..]/(x_i^{p^{e_i}}), primitive generators
    etale:<field>:<o1,o2,...>     functions on the group Z/o1 + ...
    sample1:<p>:<n>:<M>           truncated sample-1 algebra H(n, M)
    trivial:<field>               the base field

``<field>`` is ``Q`` or ``F<p>`` (a bare prime also works).
"""

from __future__ import annotations

from .exactla import Field
from .hopf import (
    GroupData,
    HopfTable,
    etale_functions_hopf,
    group_hopf,
    sample1_hopf,
    trivial_hopf,
    truncated_primitive_hopf,
)

__all__ = ["PresetError", "parse_preset", "preset_group"]


class PresetError(ValueError):
    """Malformed preset string."""


def _ints(text: str, what: str) -> list:
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise PresetError(f"{what}: expected comma-separated integers, got {text!r}") from exc
    if not vals:
        raise PresetError(f"{what}: empty list")
    return vals


def _field(text: str) -> Field:
    try:
        return Field.parse(text)
    except ValueError as exc:
        raise PresetError(str(exc)) from exc


def preset_group(text: str) -> GroupData:
    """The group of a ``group:`` preset (needed for subgroup restriction)."""
    parts = text.split(":")
    if len(parts) != 3 or parts[0] != "group":
        raise PresetError("subgroup options need a group:<field>:<orders> preset")
    try:
        return GroupData(tuple(_ints(parts[2], "orders")))
    except ValueError as exc:
        raise PresetError(str(exc)) from exc


def parse_preset(text: str) -> HopfTable:
    parts = text.strip().split(":")
    kind = parts[0]
    try:
        if kind == "group" and len(parts) == 3:
            return group_hopf(GroupData(tuple(_ints(parts[2], "orders"))), _field(parts[1]))
        if kind == "etale" and len(parts) == 3:
            return etale_functions_hopf(GroupData(tuple(_ints(parts[2], "orders"))), _field(parts[1]))
        if kind == "trunc" and len(parts) == 3:
            F = _field(parts[1])
            if F.is_rational:
                raise PresetError("trunc presets need a prime field")
            ex = _ints(parts[2], "exponents")
            if any(e < 1 for e in ex):
                raise PresetError("exponents must be >= 1")
            return truncated_primitive_hopf(ex, F.p)
        if kind == "sample1" and len(parts) == 4:
            p = _field(parts[1])
            if p.is_rational:
                raise PresetError("sample1 presets need a prime p")
            n, M = int(parts[2]), int(parts[3])
            if n < 1 or M < 1:
                raise PresetError("sample1 needs n >= 1 and M >= 1")
            return sample1_hopf(n, M, p.p)
        if kind == "trivial" and len(parts) == 2:
            return trivial_hopf(_field(parts[1]))
    except PresetError:
        raise
    except ValueError as exc:
        raise PresetError(f"{text!r}: {exc}") from exc
    raise PresetError(
        f"unrecognised preset {text!r}; expected group:<field>:<orders>, trunc:<field>:<exps>, "
        "etale:<field>:<orders>, sample1:<p>:<n>:<M> or trivial:<field>"
    )
