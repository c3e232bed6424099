"""Exact arithmetic on exponent vectors and monomial ideals.

An exponent vector is a plain tuple of nonnegative ints, read either as a
monomial x1^a1 * ... * xd^ad or as the joint state of a d-component system.
A monomial ideal is held by its minimal generating antichain.

Generator order is significant and is preserved exactly as given: 1-based
face members, report lines and the deformation tie-break all refer to
positions in ``MonomialIdeal.generators``, so callers control the labeling
by controlling the input order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

Exponent = tuple[int, ...]


class DimensionMismatchError(ValueError):
    """Exponent vectors of different lengths were combined."""


def _vector(v: Sequence[int]) -> Exponent:
    out = tuple(v)
    for c in out:
        if not isinstance(c, int):
            raise ValueError(f"exponent coordinates must be integers, got {c!r}")
        if c < 0:
            raise ValueError(f"exponent coordinates must be nonnegative, got {c}")
    return out


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """True when x^a divides x^b, i.e. a <= b coordinatewise."""
    if len(a) != len(b):
        raise DimensionMismatchError(
            f"cannot compare vectors of length {len(a)} and {len(b)}"
        )
    return all(x <= y for x, y in zip(a, b))


def lcm(vectors: Iterable[Sequence[int]]) -> Exponent:
    """Coordinatewise maximum of one or more exponent vectors."""
    vs = [_vector(v) for v in vectors]
    if not vs:
        raise ValueError("lcm of an empty collection is undefined")
    d = len(vs[0])
    for v in vs[1:]:
        if len(v) != d:
            raise DimensionMismatchError(
                f"cannot combine vectors of length {d} and {len(v)}"
            )
    return tuple(max(col) for col in zip(*vs))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in d variables, given by its minimal generators.

    ``generators`` must already form an antichain under divisibility (no
    duplicates, no generator dividing another).  Use :func:`minimalize` to
    build an ideal from an arbitrary generating set; it prunes redundant
    generators while keeping the survivors in input order.
    """

    dimension: int
    generators: tuple[Exponent, ...]

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ValueError(f"dimension must be >= 1, got {self.dimension}")
        gens = tuple(_vector(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("a monomial ideal needs at least one generator")
        for g in gens:
            if len(g) != self.dimension:
                raise DimensionMismatchError(
                    f"generator {g} has length {len(g)}, expected {self.dimension}"
                )
        for i, g in enumerate(gens):
            for j, h in enumerate(gens):
                if i == j:
                    continue
                if g == h:
                    raise ValueError(f"duplicate generator {g}")
                if divides(h, g):
                    raise ValueError(
                        f"generator {g} is redundant: divisible by {h}"
                    )


def minimalize(generators: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Build an ideal from any generating set, pruning redundant vectors.

    A vector is dropped when another generator strictly divides it, or when
    it repeats an earlier vector.  Survivors keep their input order.
    """
    vs = [_vector(g) for g in generators]
    if not vs:
        raise ValueError("at least one generator is required")
    d = len(vs[0])
    keep: list[Exponent] = []
    for i, g in enumerate(vs):
        redundant = False
        for j, h in enumerate(vs):
            if i == j:
                continue
            if h == g:
                if j < i:
                    redundant = True
                    break
                continue
            if divides(h, g):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    return MonomialIdeal(dimension=d, generators=tuple(keep))


def contains(ideal: MonomialIdeal, beta: Sequence[int]) -> bool:
    """Membership test: x^beta lies in the ideal iff some generator divides beta."""
    b = _vector(beta)
    if len(b) != ideal.dimension:
        raise DimensionMismatchError(
            f"point {b} has length {len(b)}, expected {ideal.dimension}"
        )
    return any(divides(g, b) for g in ideal.generators)


def nongeneric_witness(ideal: MonomialIdeal) -> Optional[tuple[int, int, int]]:
    """Locate a genericity violation, or return None.

    Returns ``(k, i, j)`` (all 1-based) when generators i and j share the
    same nonzero exponent in coordinate k.  An ideal with no such triple is
    generic: its Scarf complex supports a minimal free resolution.
    """
    for k in range(ideal.dimension):
        seen: dict[int, int] = {}
        for i, g in enumerate(ideal.generators):
            e = g[k]
            if e == 0:
                continue
            if e in seen:
                return (k + 1, seen[e] + 1, i + 1)
            seen[e] = i
    return None


def is_generic(ideal: MonomialIdeal) -> bool:
    """True when no variable has the same nonzero exponent in two generators."""
    return nongeneric_witness(ideal) is None
