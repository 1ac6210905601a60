"""Enumeration of all fixed ideals through face geometry.

An ideal is fixed by the twisted operator (paired with a coefficient
ideal power) exactly when it is a sum of face ideals of the shifted
Newton region: for each face F of t*Newt(a) placed at the base point
w/(1-p^e), the face ideal collects the semigroup points in the relative
interiors of all faces containing F.  Finitely many sums arise, so the
whole lattice of fixed ideals is computable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartier import CartierData, TripleData
from .errors import AllFixedIdealsZeroError, TooManyFacesError
from .ideals import MonomialIdeal, Semigroup, ideal_from_generators, zero_ideal
from .polyhedral import (
    Face,
    FaceLattice,
    Polyhedron,
    as_rational_vector,
    face_lattice,
    translate_polyhedron,
)

MAX_FACES = 64


@dataclass(frozen=True)
class ShiftedNewton:
    """The polytope P = t*Newt(a), its base point, and the face lattice
    of the shifted region base + P."""

    ambient: Semigroup
    polytope: Polyhedron
    base: tuple
    shifted: Polyhedron
    faces: FaceLattice

    @classmethod
    def from_base(cls, ambient, base, polytope):
        base = as_rational_vector(base, ambient.dim)
        shifted = translate_polyhedron(polytope, base)
        lattice = face_lattice(shifted)
        if len(lattice) > MAX_FACES:
            raise TooManyFacesError(f"face lattice has {len(lattice)} faces, cap is {MAX_FACES}")
        return cls(ambient, polytope, base, shifted, lattice)

    @classmethod
    def from_triple(cls, tr: TripleData):
        return cls.from_base(tr.ambient, tr.cartier.base_point, tr.newton_region())

    @classmethod
    def from_cartier(cls, c: CartierData):
        return cls.from_base(c.ambient, c.base_point, c.ambient.cone.as_polyhedron())


@dataclass(frozen=True)
class FixedIdealRecord:
    """One fixed ideal with a reduced generating set of faces (removing
    any face changes the sum) and a canonical label."""

    ideal: MonomialIdeal
    generating_faces: tuple
    label: str


@lru_cache(maxsize=None)
def _relint_ideal(sn, face_index):
    """Ideal generated by the semigroup points in the relative interior
    of one shifted face."""
    face = sn.faces.faces[face_index]
    pts = sn.ambient.minimal_points(sn.shifted, face=face)
    return ideal_from_generators(sn.ambient, pts)


@lru_cache(maxsize=None)
def face_ideal(sn, face):
    """Sum of the relative-interior ideals over all faces containing the
    given one (itself included); possibly zero on lower faces, never on
    the top face."""
    if isinstance(face, Face):
        face_index = face.index
    else:
        face_index = face
        face = sn.faces.faces[face_index]
    pts = []
    for sup in sn.faces.superfaces(face):
        pts.extend(_relint_ideal(sn, sup.index).gens)
    return ideal_from_generators(sn.ambient, pts)


def _sum_closure(seeds):
    """Close a list of ideals under pairwise sums: exactly the sums over
    non-empty subsets, since ideal sum is idempotent."""
    found = set(seeds)
    frontier = list(found)
    while frontier:
        fresh = []
        for a in frontier:
            for b in found.copy():
                s = a + b
                if s not in found:
                    found.add(s)
                    fresh.append(s)
        frontier = fresh
    return found


def _roman(n):
    out = []
    for value, glyph in ((1000, "M"), (900, "CM"), (500, "D"), (400, "CD"), (100, "C"), (90, "XC"),
                         (50, "L"), (40, "XL"), (10, "X"), (9, "IX"), (5, "V"), (4, "IV"), (1, "I")):
        while n >= value:
            out.append(glyph)
            n -= value
    return "".join(out)


def _reduced_faces(sn, ideal):
    """A minimal set of faces whose face ideals sum to the ideal."""
    members = [f for f in sn.faces.faces if ideal.contains_ideal(face_ideal(sn, f))]
    total = zero_ideal(sn.ambient)
    for f in members:
        total = total + face_ideal(sn, f)
    if total != ideal:
        raise AssertionError("fixed ideal is not the sum of its contained face ideals")
    chosen = list(members)
    for f in list(members):
        rest = [g for g in chosen if g is not f]
        s = zero_ideal(sn.ambient)
        for g in rest:
            s = s + face_ideal(sn, g)
        if s == ideal:
            chosen = rest
    return tuple(f.index for f in chosen)


@lru_cache(maxsize=None)
def enumerate_fixed(sn):
    """Every fixed ideal: all sums of face ideals over non-empty face
    subsets, deduplicated, plus the zero ideal, in canonical order."""
    seeds = [face_ideal(sn, f) for f in sn.faces.faces]
    ideals = sorted(_sum_closure(seeds), key=lambda i: i.gens)
    records = [FixedIdealRecord(zero_ideal(sn.ambient), (), "0")]
    for k, ideal in enumerate(ideals, start=1):
        records.append(FixedIdealRecord(ideal, _reduced_faces(sn, ideal), _roman(k)))
    return tuple(records)


def fixed_ideals(sn):
    return tuple(r.ideal for r in enumerate_fixed(sn))


def smallest_nonzero_fixed(sn):
    """The top-face ideal: the unique smallest nonzero fixed ideal (the
    test-ideal analogue)."""
    smallest = face_ideal(sn, sn.faces.top)
    if smallest.is_zero:
        raise AllFixedIdealsZeroError("top face carries no semigroup points")
    for record in enumerate_fixed(sn):
        if not record.ideal.is_zero and not record.ideal.contains_ideal(smallest):
            raise AssertionError("top-face ideal is not minimal among fixed ideals")
    return smallest


def largest_fixed(sn):
    """Sum of all face ideals: the largest fixed ideal (the non-LC
    analogue, and the stable image of the operator for a pair)."""
    total = zero_ideal(sn.ambient)
    for f in sn.faces.faces:
        total = total + face_ideal(sn, f)
    for record in enumerate_fixed(sn):
        if not total.contains_ideal(record.ideal):
            raise AssertionError("face-ideal sum is not maximal among fixed ideals")
    return total


@dataclass(frozen=True)
class Decomposition:
    """Result of decomposing an ideal into face data; ``faces`` is None
    exactly when the ideal is not fixed, and then the witness explains
    why (a generator outside the shifted region, or a relative-interior
    point the ideal misses)."""

    faces: tuple | None
    witness: tuple | None
    detail: str

    @property
    def is_fixed(self):
        return self.faces is not None


def decompose_fixed(sn, ideal):
    """Assign each generator its unique relative-interior face and check
    that the reconstructed face-ideal sum gives the ideal back."""
    if ideal.is_zero:
        return Decomposition((), None, "zero ideal is fixed by convention")
    picked = []
    for v in ideal.gens:
        face = sn.faces.relint_face_of(v)
        if face is None:
            return Decomposition(None, v, f"generator {v} lies outside the shifted region")
        if face.index not in picked:
            picked.append(face.index)
    total = zero_ideal(sn.ambient)
    for i in picked:
        total = total + face_ideal(sn, i)
    if total != ideal:
        missing = next(g for g in total.gens if not ideal.contains(g))
        return Decomposition(None, missing, f"relative-interior point {missing} is missing from the ideal")
    return Decomposition(tuple(sorted(picked)), None, "fixed")
