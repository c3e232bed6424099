"""Labeled simplicial complexes on the generators of a monomial ideal.

Two constructions are provided.  The Taylor complex takes every nonempty
subset of generator indices and gives the full 2^r - 1 term
inclusion-exclusion formula.  The Scarf complex keeps only subsets whose
lcm label is unique among all subsets; for generic ideals it supports the
minimal free resolution, so its alternating sum has no cancellation and is
usually far smaller.

Non-generic ideals are handled by deformation: break exponent ties by
replacing, in each coordinate, the exponents with their dense ranks under
(value, generator index) order.  The deformed ideal is generic by
construction, its Scarf complex is computed, and faces are relabeled with
the lcms of the original generators.  The resulting face set does not
depend on the tie-break magnitude, only on the ordering, so any deformation
parameter v > r yields the same complex.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Literal, NamedTuple, Optional, Sequence

from .monomial import (
    Exponent,
    MonomialIdeal,
    divides,
    lcm,
    nongeneric_witness,
)

TAYLOR_GENERATOR_CAP = 20
ORACLE_GENERATOR_CAP = 16

ComplexKind = Literal["taylor", "scarf", "scarf_deformed"]
_KINDS = ("taylor", "scarf", "scarf_deformed")


class NotGenericError(ValueError):
    """The ideal has an exponent tie, so the direct Scarf route is invalid."""

    def __init__(self, coordinate: int, pair: tuple[int, int], exponent: int):
        self.coordinate = coordinate
        self.pair = pair
        super().__init__(
            f"ideal is not generic: generators {pair[0]} and {pair[1]} share "
            f"exponent {exponent} in coordinate {coordinate}; deform first"
        )


class ComplexSizeError(ValueError):
    """Too many generators for an exponential-size construction."""


@dataclass(frozen=True)
class Face:
    """A face of a labeled complex.

    ``members`` are 1-based generator indices in ascending order; ``label``
    is the coordinatewise maximum of the corresponding exponent vectors.
    """

    members: tuple[int, ...]
    label: Exponent

    def __post_init__(self) -> None:
        if not self.members:
            raise ValueError("faces must be nonempty; the empty face is implicit")
        if list(self.members) != sorted(set(self.members)):
            raise ValueError(f"face members must be strictly ascending: {self.members}")
        if self.members[0] < 1:
            raise ValueError(f"face members are 1-based: {self.members}")

    @property
    def cardinality(self) -> int:
        return len(self.members)


class SignedTerm(NamedTuple):
    """One inclusion-exclusion term: sign * x^exponent from a face of given size."""

    sign: int
    exponent: Exponent
    cardinality: int


def _face_sort_key(face: Face) -> tuple[int, tuple[int, ...]]:
    return (len(face.members), face.members)


@dataclass(frozen=True)
class LabeledComplex:
    """A simplicial complex on generator indices with lcm labels.

    Faces are stored in canonical order: ascending cardinality, then
    lexicographic on the member tuple.  Construction checks the structural
    invariants (closure under subsets, all singletons present, labels
    consistent with the recorded kind).
    """

    ideal: MonomialIdeal
    faces: tuple[Face, ...]
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown complex kind {self.kind!r}")
        r = len(self.ideal.generators)
        ordered = tuple(sorted(self.faces, key=_face_sort_key))
        object.__setattr__(self, "faces", ordered)
        seen: set[tuple[int, ...]] = set()
        for face in ordered:
            if face.members[-1] > r:
                raise ValueError(f"face {face.members} exceeds generator count {r}")
            if face.members in seen:
                raise ValueError(f"duplicate face {face.members}")
            seen.add(face.members)
        for i in range(1, r + 1):
            if (i,) not in seen:
                raise ValueError(f"singleton {{{i}}} is missing")
        for face in ordered:
            if len(face.members) > 1:
                for k in range(len(face.members)):
                    sub = face.members[:k] + face.members[k + 1:]
                    if sub not in seen:
                        raise ValueError(
                            f"complex is not closed under subsets: {face.members} "
                            f"present but {sub} missing"
                        )
        if self.kind in ("taylor", "scarf"):
            for face in ordered:
                expected = lcm(self.ideal.generators[i - 1] for i in face.members)
                if face.label != expected:
                    raise ValueError(
                        f"face {face.members} labeled {face.label}, "
                        f"lcm of its generators is {expected}"
                    )
        if self.kind in ("scarf", "scarf_deformed"):
            d = self.ideal.dimension
            for face in ordered:
                if len(face.members) > d:
                    raise ValueError(
                        f"Scarf face {face.members} has cardinality above "
                        f"the ambient dimension {d}"
                    )
        if self.kind == "scarf":
            labels: dict[Exponent, tuple[int, ...]] = {}
            for face in ordered:
                if face.label in labels:
                    raise ValueError(
                        f"Scarf labels must be distinct: {labels[face.label]} "
                        f"and {face.members} share {face.label}"
                    )
                labels[face.label] = face.members

    def member_sets(self) -> frozenset[tuple[int, ...]]:
        """The face set as bare member tuples, for comparisons."""
        return frozenset(face.members for face in self.faces)

    def facets(self) -> tuple[Face, ...]:
        """Maximal faces, in canonical order."""
        present = self.member_sets()
        r = len(self.ideal.generators)
        out = []
        for face in self.faces:
            ms = set(face.members)
            grows = any(
                tuple(sorted(ms | {j})) in present
                for j in range(1, r + 1)
                if j not in ms
            )
            if not grows:
                out.append(face)
        return tuple(out)

    def max_cardinality(self) -> int:
        return max(len(face.members) for face in self.faces)


def taylor_complex(ideal: MonomialIdeal, max_generators: int = TAYLOR_GENERATOR_CAP) -> LabeledComplex:
    """Every nonempty subset of generators, labeled by its lcm.

    Raises :class:`ComplexSizeError` when the ideal has more than
    ``max_generators`` generators, since the face count is 2^r - 1.
    """
    gens = ideal.generators
    r = len(gens)
    if r > max_generators:
        raise ComplexSizeError(
            f"Taylor complex on {r} generators would have 2^{r}-1 faces; "
            f"cap is {max_generators}"
        )
    faces = []
    for s in range(1, r + 1):
        for combo in combinations(range(1, r + 1), s):
            faces.append(Face(combo, lcm(gens[i - 1] for i in combo)))
    return LabeledComplex(ideal=ideal, faces=tuple(faces), kind="taylor")


def _all_members_essential(members: Sequence[Exponent], label: Exponent) -> bool:
    # A member is essential when it alone attains the label's maximum in
    # some coordinate, i.e. dropping it would strictly shrink the lcm.
    d = len(label)
    attainers = [0] * d
    for mv in members:
        for k in range(d):
            if mv[k] == label[k]:
                attainers[k] += 1
    for mv in members:
        if not any(attainers[k] == 1 and mv[k] == label[k] for k in range(d)):
            return False
    return True


def _scarf_member_tuples(gens: Sequence[Exponent]) -> list[tuple[int, ...]]:
    """Subsets of {1..r} whose lcm label is unique among all subsets.

    A subset I of size >= 2 qualifies iff (a) dropping any member strictly
    shrinks lcm(I) and (b) no generator outside I divides lcm(I).  The two
    local conditions are equivalent to global label uniqueness: any other
    subset J with the same label either adds an index j whose generator
    divides lcm(I), breaking (b), or sits inside I, forcing some one-element
    deletion to preserve the label and breaking (a).  Singletons are always
    faces.  Uniqueness passes down to subsets, so candidates of size s only
    need to extend accepted faces of size s - 1.
    """
    r = len(gens)
    accepted: list[tuple[int, ...]] = [(i,) for i in range(1, r + 1)]
    accepted_set: set[tuple[int, ...]] = set(accepted)
    frontier = list(accepted)
    while frontier:
        grown: list[tuple[int, ...]] = []
        for face in frontier:
            base = [gens[i - 1] for i in face]
            for j in range(face[-1] + 1, r + 1):
                cand = face + (j,)
                # cand[:-1] == face is already accepted; check the others.
                if any(
                    cand[:k] + cand[k + 1:] not in accepted_set
                    for k in range(len(cand) - 1)
                ):
                    continue
                members = base + [gens[j - 1]]
                label = tuple(max(col) for col in zip(*members))
                if not _all_members_essential(members, label):
                    continue
                if any(
                    divides(gens[g - 1], label)
                    for g in range(1, r + 1)
                    if g not in cand
                ):
                    continue
                grown.append(cand)
                accepted_set.add(cand)
        accepted.extend(grown)
        frontier = grown
    return accepted


def scarf_complex(ideal: MonomialIdeal) -> LabeledComplex:
    """The Scarf complex of a generic ideal.

    Raises :class:`NotGenericError` (naming the offending coordinate and
    generator pair) when the ideal has an exponent tie; use
    :func:`deform_and_scarf` for those.
    """
    witness = nongeneric_witness(ideal)
    if witness is not None:
        k, i, j = witness
        raise NotGenericError(k, (i, j), ideal.generators[i - 1][k - 1])
    gens = ideal.generators
    faces = tuple(
        Face(members, lcm(gens[i - 1] for i in members))
        for members in _scarf_member_tuples(gens)
    )
    return LabeledComplex(ideal=ideal, faces=faces, kind="scarf")


def scarf_brute_oracle(ideal: MonomialIdeal, max_generators: int = ORACLE_GENERATOR_CAP) -> LabeledComplex:
    """Scarf complex by exhaustive label counting over all 2^r - 1 subsets.

    Independent of the incremental construction; intended for
    cross-validation.  Singletons are kept unconditionally (they only fail
    the uniqueness scan for the degenerate ideal generated by the zero
    vector, and a simplicial complex needs its vertices).
    """
    gens = ideal.generators
    r = len(gens)
    if r > max_generators:
        raise ComplexSizeError(
            f"brute-force Scarf scan on {r} generators needs 2^{r} lcms; "
            f"cap is {max_generators}"
        )
    labels: dict[tuple[int, ...], Exponent] = {}
    counts: dict[Exponent, int] = {}
    for s in range(1, r + 1):
        for combo in combinations(range(1, r + 1), s):
            label = lcm(gens[i - 1] for i in combo)
            labels[combo] = label
            counts[label] = counts.get(label, 0) + 1
    faces = tuple(
        Face(combo, label)
        for combo, label in labels.items()
        if counts[label] == 1 or len(combo) == 1
    )
    return LabeledComplex(ideal=ideal, faces=faces, kind="scarf")


@dataclass(frozen=True)
class DeformationRecord:
    """Outcome of the tie-breaking deformation.

    ``deformed[i]`` is the generic replacement for generator i: in each
    coordinate, the original exponents are replaced by their dense rank
    (0-based) under (value, generator index) order.  ``v`` records the
    nominal perturbation denominator; the face set is the same for every
    admissible v, so v only matters for reporting.
    """

    v: int
    deformed: tuple[Exponent, ...]

    def __post_init__(self) -> None:
        r = len(self.deformed)
        for k in range(len(self.deformed[0]) if r else 0):
            column = sorted(g[k] for g in self.deformed)
            if column != list(range(r)):
                raise ValueError(
                    f"deformed coordinate {k + 1} is not a permutation of 0..{r - 1}"
                )


def deform(ideal: MonomialIdeal, v: Optional[int] = None) -> DeformationRecord:
    """Replace exponents by per-coordinate dense ranks to force genericity.

    Ties between equal exponents are broken toward the lower generator
    index, matching a perturbation that adds i/v to generator i's exponents
    with v > r.  Defaults to v = r + 1; smaller v is rejected.
    """
    gens = ideal.generators
    r = len(gens)
    if v is None:
        v = r + 1
    if v <= r:
        raise ValueError(f"deformation parameter v must exceed {r}, got {v}")
    d = ideal.dimension
    ranks = [[0] * d for _ in range(r)]
    for k in range(d):
        order = sorted(range(r), key=lambda i: (gens[i][k], i))
        for pos, i in enumerate(order):
            ranks[i][k] = pos
    return DeformationRecord(v=v, deformed=tuple(tuple(row) for row in ranks))


def deform_and_scarf(ideal: MonomialIdeal, v: Optional[int] = None) -> LabeledComplex:
    """Scarf complex of the deformed ideal, relabeled with original lcms.

    The deformed exponent vectors are generic and minimal by construction,
    so the Scarf route always applies to them.  Relabeling each face with
    the lcm of the original generators yields a (possibly non-minimal, but
    still exact) inclusion-exclusion support for the original ideal;
    repeated labels are allowed here, unlike for kind="scarf".
    """
    record = deform(ideal, v)
    gens = ideal.generators
    faces = tuple(
        Face(members, lcm(gens[i - 1] for i in members))
        for members in _scarf_member_tuples(record.deformed)
    )
    return LabeledComplex(ideal=ideal, faces=faces, kind="scarf_deformed")


def hilbert_numerator(complex_: LabeledComplex) -> tuple[SignedTerm, ...]:
    """Signed terms of the rational Hilbert series numerator.

    The implicit empty face contributes the constant +1; each face of
    cardinality s contributes (-1)^s x^label.  Terms follow the canonical
    face order.  For kind="scarf" no two terms may share an exponent (the
    alternating sum is cancellation-free); a collision means the complex
    was built incorrectly and raises RuntimeError.  The one exception is
    the whole-ring ideal generated by the zero vector, whose numerator is
    legitimately 1 - x^0; both terms are kept so the pointwise identity
    still holds.
    """
    d = complex_.ideal.dimension
    zero = (0,) * d
    terms = [SignedTerm(1, zero, 0)]
    for face in complex_.faces:
        s = face.cardinality
        terms.append(SignedTerm(-1 if s % 2 else 1, face.label, s))
    if complex_.kind == "scarf" and zero not in complex_.ideal.generators:
        exponents = [t.exponent for t in terms]
        if len(set(exponents)) != len(exponents):
            raise RuntimeError("cancellation in a Scarf numerator; complex is corrupt")
    return tuple(terms)


def pointwise_coefficient(terms: Sequence[SignedTerm], beta: Sequence[int]) -> int:
    """Coefficient of x^beta in the series expansion of numerator / prod(1 - xi).

    Equals the signed count of terms whose exponent divides beta.  For a
    numerator built from any inclusion-exclusion support of an ideal M this
    is 1 when x^beta is a standard monomial (outside M) and 0 when inside.
    """
    b = tuple(beta)
    total = 0
    for t in terms:
        if divides(t.exponent, b):
            total += t.sign
    return total
