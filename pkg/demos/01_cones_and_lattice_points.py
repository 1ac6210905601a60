"""Cones, duality, Hilbert bases, and lattice point enumeration.

The geometric substrate: everything downstream reduces to exact
questions about a pointed rational cone and the polyhedra riding on it.
"""

from fractions import Fraction

from toric_cartier import (
    cone_from_rays,
    dual_cone,
    face_lattice,
    hilbert_basis,
    minimal_lattice_points,
    newton_polyhedron,
    relint_contains,
    translate_polyhedron,
)

# The running example everywhere in this package: the cone spanned by
# (1,0) and (1,3).  Its semigroup ring is k[x, xy, xy^2, xy^3].
sigma = cone_from_rays([(1, 0), (1, 3)])
print("rays:         ", sigma.rays)
print("facet normals:", sigma.normals)

# Duality swaps the two descriptions and is an involution.
print("dual rays:    ", dual_cone(sigma).rays)
assert dual_cone(dual_cone(sigma)) == sigma

# The Hilbert basis is the unique minimal generating set of the monoid
# of lattice points: exactly the exponents of x, xy, xy^2, xy^3.
print("Hilbert basis:", hilbert_basis(sigma))

# Polyhedra are convex hulls plus the recession cone.  Faces carry the
# relative-interior structure that face ideals are built from.
region = translate_polyhedron(sigma.as_polyhedron(), (1, 2))
lattice = face_lattice(region)
print("\nshifted cone at (1,2):", region.hrep)
print("faces by dimension:", sorted(f.dim for f in lattice.faces))
print("(2,3) in the relative interior of the top face:",
      relint_contains(region, lattice.top, (2, 3)))

# Minimal lattice points of a region, under the semigroup order: the
# closed shifted cone is generated by its apex...
print("\nminimal points, closed region: ", minimal_lattice_points(region, sigma))
# ...while its interior needs two generators, one on each 'step'.
print("minimal points, open region:   ",
      minimal_lattice_points(region, sigma, face=lattice.top))

# Fractional shifts are fine; everything stays exact.
half = translate_polyhedron(sigma.as_polyhedron(), (Fraction(1, 2), 1))
lat = face_lattice(half)
flat_ray = next(f for f in lat.faces
                if f.dim == 1 and [half.recession.rays[j] for j in f.ray_ids] == [(1, 0)])
print("minimal points on an open shifted boundary ray:",
      minimal_lattice_points(half, sigma, face=flat_ray))

# A Newton region: hull of exponents plus the cone.
newt = newton_polyhedron([(2, 0), (0, 2)], cone_from_rays([(1, 0), (0, 1)]))
print("\nNewton region of <x^2, y^2>:", newt.hrep)
