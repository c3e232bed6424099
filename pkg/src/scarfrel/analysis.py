"""Reliability computations over labeled complexes.

The nonfailure probability of a coherent system is the probability of the
union of the orthants above its minimal nonfailure points.  Any labeled
complex supporting the corresponding monomial ideal turns that union into
an alternating sum of orthant probabilities, one per face; the Scarf route
keeps the term count near-minimal.  Truncating the alternating sum at a
cardinality depth yields two-sided bounds: odd depth from above, even
depth from below.  All sums use compensated (fsum) accumulation so that
cross-checks against the enumeration oracle are stable at 1e-12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Callable, Optional

from .complexes import LabeledComplex, SignedTerm
from .monomial import DimensionMismatchError, Exponent, MonomialIdeal
from .systems import CoherentSystem, orthant_prob

STATE_CAP = 10_000_000
_IDENTITY_TOL = 1e-9


@dataclass(frozen=True)
class DepthBound:
    """A one-sided truncation bound: faces of cardinality <= depth."""

    depth: int
    value: float
    kind: str  # "upper" when depth is odd, "lower" when even

    def __post_init__(self) -> None:
        if self.kind not in ("upper", "lower"):
            raise ValueError(f"bound kind must be 'upper' or 'lower', got {self.kind!r}")


@dataclass(frozen=True)
class ReliabilityReport:
    """Everything the identity route produces for one system."""

    identity_value: float
    term_count: int
    terms: tuple[SignedTerm, ...]
    bounds: tuple[DepthBound, ...]
    baseline_term_count: int
    oracle_value: Optional[float]


def _check_dimensions(system: CoherentSystem, complex_: LabeledComplex) -> None:
    if system.dimension != complex_.ideal.dimension:
        raise DimensionMismatchError(
            f"system has {system.dimension} components but the complex is over "
            f"{complex_.ideal.dimension} coordinates"
        )


def inclusion_exclusion(
    complex_: LabeledComplex, orthant: Callable[[Exponent], float]
) -> float:
    """Alternating sum of orthant values over the faces of a complex.

    Faces of odd cardinality enter with +, even with -.  ``orthant`` maps a
    face label to the probability of the orthant above it; passing a
    continuous evaluator makes the same identity work off-grid.
    """
    terms = []
    for face in complex_.faces:
        p = orthant(face.label)
        terms.append(p if face.cardinality % 2 else -p)
    return math.fsum(terms)


def reliability_identity(system: CoherentSystem, complex_: LabeledComplex) -> float:
    """Exact nonfailure probability via the complex's alternating sum."""
    _check_dimensions(system, complex_)
    return inclusion_exclusion(complex_, lambda label: orthant_prob(system, label))


def _truncated_sum(
    system: CoherentSystem, complex_: LabeledComplex, depth: int
) -> DepthBound:
    max_card = complex_.max_cardinality()
    if not 1 <= depth <= max_card:
        raise ValueError(
            f"depth must lie in 1..{max_card} for this complex, got {depth}"
        )
    terms = []
    for face in complex_.faces:
        if face.cardinality > depth:
            break  # canonical order sorts by cardinality
        p = orthant_prob(system, face.label)
        terms.append(p if face.cardinality % 2 else -p)
    kind = "upper" if depth % 2 else "lower"
    return DepthBound(depth=depth, value=math.fsum(terms), kind=kind)


def tube_bounds(system: CoherentSystem, complex_: LabeledComplex, depth: int) -> DepthBound:
    """Truncation bound from a Scarf-type complex.

    At depth equal to the maximum face cardinality the bound coincides with
    the exact identity (and still carries its parity kind).
    """
    _check_dimensions(system, complex_)
    return _truncated_sum(system, complex_, depth)


def bonferroni_bounds(
    system: CoherentSystem, taylor: LabeledComplex, depth: int
) -> DepthBound:
    """Classical truncation bound over the full subset complex."""
    if taylor.kind != "taylor":
        raise ValueError(
            f"Bonferroni bounds need the full subset complex, got kind {taylor.kind!r}"
        )
    _check_dimensions(system, taylor)
    return _truncated_sum(system, taylor, depth)


def brute_force_reliability(
    system: CoherentSystem, ideal: MonomialIdeal, max_states: int = STATE_CAP
) -> float:
    """Nonfailure probability by full state enumeration.

    Sums the probability of every grid state whose vector lies in the
    ideal.  Completely independent of the complex machinery, so it serves
    as the correctness oracle.  Refuses grids larger than ``max_states``.
    """
    if system.dimension != ideal.dimension:
        raise DimensionMismatchError(
            f"system has {system.dimension} components but the ideal is over "
            f"{ideal.dimension} coordinates"
        )
    total_states = math.prod(system.level_counts())
    if total_states > max_states:
        raise ValueError(
            f"state space has {total_states} states, above the cap {max_states}"
        )
    tables = [c.probs for c in system.components]
    gens = ideal.generators
    terms = []
    for state in product(*(range(c.levels) for c in system.components)):
        if any(all(g <= s for g, s in zip(gen, state)) for gen in gens):
            p = 1.0
            for table, level in zip(tables, state):
                p *= table[level]
            terms.append(p)
    return math.fsum(terms)


def build_report(
    system: CoherentSystem,
    complex_: LabeledComplex,
    oracle_cap: int = STATE_CAP,
) -> ReliabilityReport:
    """Identity value, signed terms, all depth bounds, and the oracle when affordable."""
    _check_dimensions(system, complex_)
    identity = reliability_identity(system, complex_)
    if not -_IDENTITY_TOL <= identity <= 1.0 + _IDENTITY_TOL:
        raise RuntimeError(
            f"identity value {identity!r} is outside [0, 1]; "
            f"complex or system data is inconsistent"
        )
    terms = tuple(
        SignedTerm(-1 if f.cardinality % 2 else 1, f.label, f.cardinality)
        for f in complex_.faces
    )
    bounds = tuple(
        _truncated_sum(system, complex_, depth)
        for depth in range(1, complex_.max_cardinality() + 1)
    )
    r = len(complex_.ideal.generators)
    oracle: Optional[float] = None
    if math.prod(system.level_counts()) <= oracle_cap:
        oracle = brute_force_reliability(system, complex_.ideal, oracle_cap)
    return ReliabilityReport(
        identity_value=identity,
        term_count=len(complex_.faces),
        terms=terms,
        bounds=bounds,
        baseline_term_count=2**r - 1,
        oracle_value=oracle,
    )
