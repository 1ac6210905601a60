"""Triples with a coefficient ideal power, and the characteristic-free
description of the same lattice of ideals.

Pairing the operator with closures of powers of a monomial ideal 'a' at
a rational exponent t replaces the cone by the scaled Newton region
t*Newt(a).  The same ideals then appear as intermediate adjoint ideals:
single-face relative-interior ideals assembled per face, with the
non-LC ideal on top and the multiplier-type ideal at the bottom, and
each face ideal is realized by perturbing the boundary data.
"""

from fractions import Fraction

from toric_cartier import (
    CartierData,
    Semigroup,
    ShiftedNewton,
    TripleData,
    enumerate_fixed,
    face_ideal,
    face_ideal_via_perturbation,
    format_ideal,
    ideal_from_generators,
    intermediate_adjoint_set,
    largest_fixed,
    non_lc_ideal,
    smallest_nonzero_fixed,
)

S = Semigroup.from_rays([(1, 0), (1, 3)])
a = ideal_from_generators(S, [(2, 1), (1, 3)])
tr = TripleData.create(CartierData(3, 1, (-1, -2), S), a, Fraction(1, 2))
print(f"triple: a = {format_ideal(a)}, t = {tr.t}, period = {tr.period}")

sn = ShiftedNewton.from_triple(tr)
print("shifted region vertices:", sn.shifted.vertices)
for r in enumerate_fixed(sn):
    print(f"  {r.label:>3}: {format_ideal(r.ideal)}")

# Extremes: the multiplier-type ideal below, the non-LC ideal on top.
print("\nsmallest nonzero fixed:", format_ideal(smallest_nonzero_fixed(sn)))
largest = largest_fixed(sn)
print("largest fixed:         ", format_ideal(largest))
print("non-LC ideal:          ", format_ideal(non_lc_ideal(S, sn.base, a, tr.t)))
assert largest == non_lc_ideal(S, sn.base, a, tr.t)

# The characteristic-free route reproduces the same set from the base
# point alone.
adjoint = intermediate_adjoint_set(S, sn.base, a, tr.t)
print("\nintermediate adjoint ideals:", [format_ideal(i) for i in adjoint])
assert {format_ideal(i) for i in adjoint} == {format_ideal(r.ideal) for r in enumerate_fixed(sn)}

# And every face ideal arises as a perturbed non-LC ideal: shift the
# base slightly into the face and let the shift shrink to zero.
for face in sn.faces.faces:
    direct = face_ideal(sn, face)
    perturbed = face_ideal_via_perturbation(sn, face)
    assert direct == perturbed
    print(f"face {face.index} (dim {face.dim}): {format_ideal(direct)}")
