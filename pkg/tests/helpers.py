"""Shared fixtures: reference systems and seeded random factories.

The reference data below (point lists, deformations, face sets) is used by
both the unit tests and the acceptance suite, so it lives in one place.
"""

from __future__ import annotations

import random

from scarfrel import (
    CoherentSystem,
    Component,
    MonomialIdeal,
    deform,
    is_generic,
    minimalize,
)

# Planar ideal with generators x^3, x^2 y^2, y^3: small enough to check
# every construction by hand.
PLANAR_GENS = ((3, 0), (2, 2), (0, 3))

# Eight-component binary system with nine minimal nonfailure points
# (a source-to-terminal network).  Deformation with v=10 gives a Scarf
# complex of 103 faces with six five-element facets.
BINARY_NINE = (
    (1, 0, 0, 0, 0, 1, 0, 0),
    (1, 0, 0, 1, 0, 0, 1, 0),
    (0, 1, 0, 1, 0, 1, 0, 0),
    (1, 0, 0, 1, 1, 0, 0, 1),
    (0, 1, 0, 0, 0, 0, 1, 0),
    (0, 0, 1, 1, 1, 1, 0, 0),
    (0, 1, 0, 0, 1, 0, 0, 1),
    (0, 0, 1, 0, 1, 0, 1, 0),
    (0, 0, 1, 0, 0, 0, 0, 1),
)

BINARY_NINE_FACETS = (
    (1, 2, 4, 7, 9),
    (1, 2, 5, 7, 9),
    (1, 2, 5, 8, 9),
    (1, 3, 5, 7, 9),
    (1, 3, 5, 8, 9),
    (1, 3, 6, 8, 9),
)

# Four-component multistate system (levels 0..3).  These nine points are
# the solutions of profit = cutoff for the profit function below; the full
# set of minimal points of {profit >= cutoff} adds two more, see
# MULTI_EXTRA.
MULTI_NINE = (
    (3, 2, 3, 1),
    (2, 3, 3, 1),
    (2, 0, 2, 2),
    (1, 1, 2, 2),
    (0, 2, 2, 2),
    (3, 0, 1, 3),
    (2, 1, 1, 3),
    (1, 2, 1, 3),
    (0, 3, 1, 3),
)

# profit = a1 + a2 + 4 a3 + 5 a4 + 2 a3 a4, cutoff 28, grid {0..3}^4
MULTI_PROFIT_LINEAR = (1.0, 1.0, 4.0, 5.0)
MULTI_PROFIT_INTERACTIONS = ((2, 3, 2.0),)
MULTI_PROFIT_CUTOFF = 28.0

# Minimal points of the cutoff region that do not attain the cutoff
# exactly: profit jumps from 26 to 34 resp. 35 across the last decrement.
MULTI_EXTRA = ((0, 0, 3, 2), (0, 0, 2, 3))

# Deformation of MULTI_NINE with v=10 (dense ranks per coordinate).
MULTI_NINE_DEFORMED = (
    (7, 4, 7, 0),
    (4, 7, 8, 1),
    (5, 0, 4, 2),
    (2, 2, 5, 3),
    (0, 5, 6, 4),
    (8, 1, 0, 5),
    (6, 3, 1, 6),
    (3, 6, 2, 7),
    (1, 8, 3, 8),
)

# The 31-face complex of the deformed MULTI_NINE ideal.
MULTI_NINE_FACES = (
    (1, 2, 3), (4, 8, 9), (4, 5, 9), (2, 3, 4), (3, 7, 8), (3, 4, 8), (3, 6, 7),
    (4, 9), (5, 9), (2, 3), (2, 4), (3, 8), (8, 9), (7, 8), (4, 8), (3, 6),
    (6, 7), (4, 5), (3, 4), (1, 3), (3, 7), (1, 2),
    (9,), (8,), (7,), (6,), (5,), (4,), (3,), (2,), (1,),
)

# Five-component binary system that is not a network.
NONNETWORK_FIVE = (
    (1, 1, 0, 0, 0),
    (0, 1, 1, 0, 0),
    (0, 0, 1, 1, 0),
    (1, 0, 0, 1, 1),
    (0, 1, 0, 1, 1),
)

# Deformed Scarf complex of NONNETWORK_FIVE under the (value, index)
# ascending tie-break, frozen from the first validated run and
# cross-checked against the exhaustive label scan.
NONNETWORK_FIVE_FACES = (
    (1, 2, 3), (1, 2, 5), (1, 3, 4),
    (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 5), (3, 4),
    (1,), (2,), (3,), (4,), (5,),
)

# The same system's published face listing; it corresponds to breaking
# exponent ties toward the higher generator index (equivalently, feeding
# the points in reverse order), not to the ascending rule used here.
NONNETWORK_FIVE_FACES_REVERSED_TIEBREAK = (
    (1, 2, 3, 5),
    (1, 2, 3), (1, 3, 5), (1, 2, 5), (2, 3, 5), (3, 4, 5),
    (1, 3), (1, 2), (1, 5), (3, 4), (2, 3), (2, 5), (3, 5), (4, 5),
    (1,), (2,), (3,), (4,), (5,),
)


def dyadic_probs(rng: random.Random, levels: int, denom: int = 64) -> tuple[float, ...]:
    """A random probability row with exact binary representations.

    All entries are multiples of 1/denom, so the row sums to exactly 1.0
    and downstream comparisons see no input rounding noise.
    """
    cuts = sorted(rng.sample(range(1, denom), levels - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [denom])]
    return tuple(p / denom for p in parts)


def random_system(rng: random.Random, max_d: int = 5, max_levels: int = 4) -> CoherentSystem:
    d = rng.randint(2, max_d)
    components = tuple(
        Component(f"c{i + 1}", levels, dyadic_probs(rng, levels))
        for i, levels in ((i, rng.randint(2, max_levels)) for i in range(d))
    )
    return CoherentSystem(components=components)


def random_points_for(rng: random.Random, system: CoherentSystem, max_points: int = 8):
    count = rng.randint(1, max_points)
    return [
        tuple(rng.randrange(c.levels) for c in system.components)
        for _ in range(count)
    ]


def random_ideal(
    rng: random.Random, d: int | None = None, max_coord: int = 6, max_points: int = 8
) -> MonomialIdeal:
    if d is None:
        d = rng.randint(2, 5)
    points = [
        tuple(rng.randrange(max_coord + 1) for _ in range(d))
        for _ in range(rng.randint(1, max_points))
    ]
    return minimalize(points)


def random_generic_ideal(
    rng: random.Random, d: int | None = None, max_coord: int = 8, max_points: int = 10
) -> MonomialIdeal:
    ideal = random_ideal(rng, d, max_coord, max_points)
    if is_generic(ideal):
        return ideal
    # The rank vectors of any minimal ideal form a generic minimal ideal,
    # so deforming is a cheap way to manufacture generic test inputs.
    record = deform(ideal)
    return MonomialIdeal(ideal.dimension, record.deformed)
