"""Coherent multistate systems with independent components.

Component i takes levels 0..L_i-1 with given probabilities.  A system is
described by the minimal points of its nonfailure region: the region is an
upper set in the state lattice, so those minimal points are exactly the
minimal generators of a monomial ideal and the nonfailure probability can
be computed from any inclusion-exclusion support of that ideal.

Component indices in this module are 0-based, like any Python sequence;
the 1-based indices appear only in faces and rendered diagnostics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

from .monomial import DimensionMismatchError, Exponent, MonomialIdeal, minimalize

PROB_TOL = 1e-9


@dataclass(frozen=True)
class Component:
    """One component: ``probs[j]`` is the probability of sitting at level j."""

    name: str
    levels: int
    probs: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "name", str(self.name).strip())
        object.__setattr__(self, "probs", tuple(float(p) for p in self.probs))
        if not self.name:
            raise ValueError("component name must be nonempty")
        if self.levels < 2:
            raise ValueError(
                f"component {self.name!r} needs at least 2 levels, got {self.levels}"
            )
        if len(self.probs) != self.levels:
            raise ValueError(
                f"component {self.name!r} has {self.levels} levels but "
                f"{len(self.probs)} probabilities"
            )
        for j, p in enumerate(self.probs):
            if not 0.0 <= p <= 1.0:
                raise ValueError(
                    f"component {self.name!r}: probability {p} at level {j} "
                    f"is outside [0, 1]"
                )
        total = math.fsum(self.probs)
        if abs(total - 1.0) > PROB_TOL:
            raise ValueError(
                f"component {self.name!r}: probabilities sum to {total!r}, "
                f"not 1 within {PROB_TOL}"
            )


@dataclass(frozen=True)
class CoherentSystem:
    components: tuple[Component, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise ValueError("a system needs at least one component")

    @property
    def dimension(self) -> int:
        return len(self.components)

    def level_counts(self) -> tuple[int, ...]:
        return tuple(c.levels for c in self.components)


def validate(system: CoherentSystem) -> CoherentSystem:
    """Re-run all construction checks on a system and return it.

    Constructing :class:`Component` and :class:`CoherentSystem` already
    validates, so this is only needed for instances built by other means
    (e.g. ``dataclasses.replace`` games or deserialization layers).
    """
    return CoherentSystem(
        components=tuple(
            Component(c.name, c.levels, c.probs) for c in system.components
        )
    )


def survival(system: CoherentSystem, component: int, level: int) -> float:
    """P(X_i >= level) for the 0-based component i.

    Level 0 returns the full mass (1 up to rounding), and any level at or
    beyond the top returns exactly 0; that convention makes orthant
    probabilities of out-of-grid corners vanish instead of erroring.
    """
    if not 0 <= component < system.dimension:
        raise ValueError(
            f"component index {component} out of range for "
            f"{system.dimension} components"
        )
    if level < 0:
        raise ValueError(f"level must be nonnegative, got {level}")
    comp = system.components[component]
    if level >= comp.levels:
        return 0.0
    return math.fsum(comp.probs[level:])


def orthant_prob(system: CoherentSystem, alpha: Sequence[int]) -> float:
    """P(X >= alpha coordinatewise) under component independence."""
    a = tuple(alpha)
    if len(a) != system.dimension:
        raise DimensionMismatchError(
            f"corner {a} has length {len(a)}, expected {system.dimension}"
        )
    result = 1.0
    for i, level in enumerate(a):
        result *= survival(system, i, level)
        if result == 0.0:
            return 0.0
    return result


class CutoffUnreachableError(ValueError):
    """No state of the grid reaches the profit cutoff."""


@dataclass(frozen=True)
class ProfitSpec:
    """A monotone profit function: sum of linear terms plus pairwise products.

    ``linear[i]`` multiplies level alpha_i; ``interactions`` holds
    ``(i, j, coeff)`` triples (0-based, i != j) contributing
    coeff * alpha_i * alpha_j.  All coefficients must be nonnegative, which
    makes the profit nondecreasing in every coordinate and the cutoff
    region an upper set.
    """

    linear: tuple[float, ...]
    interactions: tuple[tuple[int, int, float], ...]
    cutoff: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "linear", tuple(float(c) for c in self.linear))
        object.__setattr__(
            self,
            "interactions",
            tuple((int(i), int(j), float(c)) for i, j, c in self.interactions),
        )
        object.__setattr__(self, "cutoff", float(self.cutoff))
        if not self.linear:
            raise ValueError("profit needs at least one linear coefficient")
        d = len(self.linear)
        for c in self.linear:
            if c < 0:
                raise ValueError(f"linear coefficients must be nonnegative, got {c}")
        for i, j, c in self.interactions:
            if not (0 <= i < d and 0 <= j < d):
                raise ValueError(f"interaction ({i}, {j}) out of range for {d} components")
            if i == j:
                raise ValueError(f"interaction pairs must be distinct, got ({i}, {j})")
            if c < 0:
                raise ValueError(f"interaction coefficients must be nonnegative, got {c}")

    def value(self, alpha: Sequence[int]) -> float:
        if len(alpha) != len(self.linear):
            raise DimensionMismatchError(
                f"state {tuple(alpha)} has length {len(alpha)}, "
                f"expected {len(self.linear)}"
            )
        total = math.fsum(c * a for c, a in zip(self.linear, alpha))
        return total + math.fsum(c * alpha[i] * alpha[j] for i, j, c in self.interactions)


def minimal_points_from_profit(spec: ProfitSpec, levels: Sequence[int]) -> MonomialIdeal:
    """Minimal states reaching the cutoff, as a monomial ideal.

    Scans the full grid prod(range(L_i)).  Because the profit is monotone,
    a state is minimal iff it reaches the cutoff and every one-step
    decrement falls below.  Points are emitted sorted by reversed-tuple
    lexicographic order (last coordinate most significant), which is the
    natural reading order of the grid scan.
    """
    d = len(levels)
    if d != len(spec.linear):
        raise DimensionMismatchError(
            f"grid has {d} coordinates but profit has {len(spec.linear)}"
        )
    for L in levels:
        if L < 1:
            raise ValueError(f"level counts must be >= 1, got {L}")
    minimal: list[Exponent] = []
    for alpha in product(*(range(L) for L in levels)):
        if spec.value(alpha) < spec.cutoff:
            continue
        dominated = False
        for i in range(d):
            if alpha[i] > 0:
                down = alpha[:i] + (alpha[i] - 1,) + alpha[i + 1:]
                if spec.value(down) >= spec.cutoff:
                    dominated = True
                    break
        if not dominated:
            minimal.append(alpha)
    if not minimal:
        raise CutoffUnreachableError(
            f"no state of the grid reaches profit cutoff {spec.cutoff}"
        )
    minimal.sort(key=lambda a: a[::-1])
    return MonomialIdeal(dimension=d, generators=tuple(minimal))


class GeneralPositionError(ValueError):
    """Two critical points share a coordinate value, so ranks are ambiguous."""


@dataclass(frozen=True)
class ContinuousSpec:
    """Continuous-state system data for quantization.

    ``critical_points`` are the minimal nonfailure points in real
    coordinates.  ``survival`` must evaluate the joint survival function
    P(Z > z) at an arbitrary corner z; for independent coordinates that is
    the product of marginal survivals.
    """

    critical_points: tuple[tuple[float, ...], ...]
    survival: Callable[[tuple[float, ...]], float]

    def __post_init__(self) -> None:
        pts = tuple(tuple(float(x) for x in p) for p in self.critical_points)
        object.__setattr__(self, "critical_points", pts)
        if not pts:
            raise ValueError("at least one critical point is required")
        d = len(pts[0])
        for p in pts:
            if len(p) != d:
                raise DimensionMismatchError(
                    f"critical point {p} has length {len(p)}, expected {d}"
                )
            for x in p:
                if not math.isfinite(x):
                    raise ValueError(f"critical point coordinates must be finite: {p}")


def quantize(
    spec: ContinuousSpec,
) -> tuple[MonomialIdeal, Callable[[Exponent], float]]:
    """Map continuous critical points to a discrete ideal plus an evaluator.

    Each point's coordinates are replaced by their 0-based rank among the m
    values seen in that coordinate; the ranked points generate the returned
    ideal (dominated points are pruned, survivors keep input order).  The
    evaluator takes a face label in rank coordinates back to the real
    corner it names and applies the continuous survival function, so
    inclusion-exclusion over a complex of the returned ideal reproduces the
    continuous nonfailure probability exactly.

    Requires general position: a repeated value within one coordinate
    raises :class:`GeneralPositionError` naming the coordinate and the
    tied pair of points (1-based).
    """
    points = spec.critical_points
    m = len(points)
    d = len(points[0])
    sorted_values: list[list[float]] = []
    rank_vectors = [[0] * d for _ in range(m)]
    for k in range(d):
        order = sorted(range(m), key=lambda i: points[i][k])
        for a, b in zip(order, order[1:]):
            if points[a][k] == points[b][k]:
                raise GeneralPositionError(
                    f"critical points {a + 1} and {b + 1} share value "
                    f"{points[a][k]} in coordinate {k + 1}"
                )
        sorted_values.append([points[i][k] for i in order])
        for pos, i in enumerate(order):
            rank_vectors[i][k] = pos
    ideal = minimalize(tuple(row) for row in rank_vectors)

    def evaluate(label: Exponent) -> float:
        if len(label) != d:
            raise DimensionMismatchError(
                f"label {tuple(label)} has length {len(label)}, expected {d}"
            )
        corner = tuple(sorted_values[k][label[k]] for k in range(d))
        return spec.survival(corner)

    return ideal, evaluate
