"""JSON system descriptions for the command-line interface.

A spec file is a JSON object with:

- ``components``: nonempty list of ``{"name": str, "levels": int,
  "probs": [float, ...]}`` with one probability per level;
- exactly one of
  - ``minimal_nonfailure_points``: list of integer vectors (one entry per
    component, each within that component's level range), or
  - ``profit``: ``{"linear": [c1..cd], "interactions": [[i, j, coeff],
    ...], "cutoff": number}`` with 1-based component pairs;
- optional ``deformation_v``: positive integer tie-break denominator.

Unknown keys are rejected so typos surface as parse errors instead of
being silently ignored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .complexes import LabeledComplex, deform_and_scarf, scarf_complex
from .monomial import Exponent, MonomialIdeal, is_generic, minimalize
from .systems import (
    CoherentSystem,
    Component,
    ProfitSpec,
    minimal_points_from_profit,
)


class SpecFileError(ValueError):
    """The spec file is unreadable or violates the schema."""


@dataclass(frozen=True)
class SystemSpec:
    system: CoherentSystem
    points: Optional[tuple[Exponent, ...]]
    profit: Optional[ProfitSpec]
    deformation_v: Optional[int]


def load_spec(path: str | Path) -> SystemSpec:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as err:
        raise SpecFileError(f"{p}: cannot read spec file: {err}") from err
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise SpecFileError(
            f"{p}: invalid JSON at line {err.lineno}, column {err.colno}: {err.msg}"
        ) from err
    return parse_spec(data, source=str(p))


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise SpecFileError(message)


def _int_field(value, where: str) -> int:
    _require(isinstance(value, int) and not isinstance(value, bool), f"{where}: expected an integer, got {value!r}")
    return value


def _number_field(value, where: str) -> float:
    ok = isinstance(value, (int, float)) and not isinstance(value, bool)
    _require(ok, f"{where}: expected a number, got {value!r}")
    return float(value)


def parse_spec(data, source: str = "<spec>") -> SystemSpec:
    _require(isinstance(data, dict), f"{source}: top level must be a JSON object")
    known = {"components", "minimal_nonfailure_points", "profit", "deformation_v"}
    for key in data:
        _require(key in known, f"{source}: unknown key {key!r}")

    raw_components = data.get("components")
    _require(
        isinstance(raw_components, list) and raw_components,
        f"{source}: 'components' must be a nonempty list",
    )
    components = []
    for idx, entry in enumerate(raw_components):
        where = f"{source}: components[{idx}]"
        _require(isinstance(entry, dict), f"{where}: expected an object")
        extra = set(entry) - {"name", "levels", "probs"}
        _require(not extra, f"{where}: unknown keys {sorted(extra)}")
        _require(
            all(k in entry for k in ("name", "levels", "probs")),
            f"{where}: needs 'name', 'levels' and 'probs'",
        )
        _require(isinstance(entry["name"], str), f"{where}: 'name' must be a string")
        levels = _int_field(entry["levels"], f"{where}.levels")
        probs = entry["probs"]
        _require(isinstance(probs, list), f"{where}.probs: expected a list")
        row = tuple(_number_field(p, f"{where}.probs[{j}]") for j, p in enumerate(probs))
        try:
            components.append(Component(entry["name"], levels, row))
        except ValueError as err:
            raise SpecFileError(f"{where}: {err}") from err
    system = CoherentSystem(components=tuple(components))
    d = system.dimension

    has_points = "minimal_nonfailure_points" in data
    has_profit = "profit" in data
    _require(
        has_points != has_profit,
        f"{source}: give exactly one of 'minimal_nonfailure_points' or 'profit'",
    )

    points: Optional[tuple[Exponent, ...]] = None
    profit: Optional[ProfitSpec] = None
    if has_points:
        raw_points = data["minimal_nonfailure_points"]
        _require(
            isinstance(raw_points, list) and raw_points,
            f"{source}: 'minimal_nonfailure_points' must be a nonempty list",
        )
        rows = []
        for idx, vec in enumerate(raw_points):
            where = f"{source}: minimal_nonfailure_points[{idx}]"
            _require(isinstance(vec, list), f"{where}: expected a list of integers")
            _require(
                len(vec) == d,
                f"{where}: has {len(vec)} coordinates, expected {d}",
            )
            coords = tuple(_int_field(x, f"{where}[{k}]") for k, x in enumerate(vec))
            for k, x in enumerate(coords):
                _require(
                    0 <= x < components[k].levels,
                    f"{where}[{k}]: level {x} outside 0..{components[k].levels - 1} "
                    f"for component {components[k].name!r}",
                )
            rows.append(coords)
        points = tuple(rows)
    else:
        raw_profit = data["profit"]
        where = f"{source}: profit"
        _require(isinstance(raw_profit, dict), f"{where}: expected an object")
        extra = set(raw_profit) - {"linear", "interactions", "cutoff"}
        _require(not extra, f"{where}: unknown keys {sorted(extra)}")
        _require(
            "linear" in raw_profit and "cutoff" in raw_profit,
            f"{where}: needs 'linear' and 'cutoff'",
        )
        raw_linear = raw_profit["linear"]
        _require(isinstance(raw_linear, list), f"{where}.linear: expected a list")
        _require(
            len(raw_linear) == d,
            f"{where}.linear: has {len(raw_linear)} coefficients, expected {d}",
        )
        linear = tuple(
            _number_field(c, f"{where}.linear[{k}]") for k, c in enumerate(raw_linear)
        )
        interactions = []
        for idx, triple in enumerate(raw_profit.get("interactions", [])):
            iw = f"{where}.interactions[{idx}]"
            _require(
                isinstance(triple, list) and len(triple) == 3,
                f"{iw}: expected [i, j, coeff]",
            )
            i = _int_field(triple[0], f"{iw}[0]")
            j = _int_field(triple[1], f"{iw}[1]")
            c = _number_field(triple[2], f"{iw}[2]")
            _require(1 <= i <= d and 1 <= j <= d, f"{iw}: pair ({i}, {j}) outside 1..{d}")
            interactions.append((i - 1, j - 1, c))
        cutoff = _number_field(raw_profit["cutoff"], f"{where}.cutoff")
        try:
            profit = ProfitSpec(
                linear=linear, interactions=tuple(interactions), cutoff=cutoff
            )
        except ValueError as err:
            raise SpecFileError(f"{where}: {err}") from err

    deformation_v: Optional[int] = None
    if "deformation_v" in data:
        deformation_v = _int_field(data["deformation_v"], f"{source}: deformation_v")
        _require(deformation_v >= 1, f"{source}: deformation_v must be positive")

    return SystemSpec(
        system=system, points=points, profit=profit, deformation_v=deformation_v
    )


def ideal_from_spec(spec: SystemSpec) -> MonomialIdeal:
    """The monomial ideal of minimal nonfailure points described by the spec."""
    if spec.points is not None:
        return minimalize(spec.points)
    assert spec.profit is not None
    return minimal_points_from_profit(spec.profit, spec.system.level_counts())


def complex_from_spec(
    spec: SystemSpec, v_override: Optional[int] = None
) -> tuple[LabeledComplex, Optional[int]]:
    """Build the Scarf-route complex, deforming only when needed.

    Returns the complex and the deformation parameter actually used (None
    when the ideal was already generic).
    """
    ideal = ideal_from_spec(spec)
    if is_generic(ideal):
        return scarf_complex(ideal), None
    v = v_override if v_override is not None else spec.deformation_v
    r = len(ideal.generators)
    if v is None:
        v = r + 1
    if v <= r:
        raise SpecFileError(
            f"deformation_v must exceed the generator count {r}, got {v}"
        )
    return deform_and_scarf(ideal, v), v
