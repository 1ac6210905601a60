"""Monomial ideal arithmetic in a toric semigroup ring.

Ideals are stored by minimal generating exponents; sum, product,
intersection, integral closure and closures of powers all stay exact.
"""

from toric_cartier import Semigroup, ideal_from_generators, minkowski_sum, monomial_string

S = Semigroup.from_rays([(1, 0), (1, 3)])
print("ambient Hilbert basis:", S.hilbert)

# Generating sets are minimalized on construction: (2,3) sits above
# (1,2) because their difference (1,1) is a semigroup element.
I = ideal_from_generators(S, [(1, 2), (2, 3)])
print("<xy^2, x^2y^3> minimalizes to:", [monomial_string(g) for g in I.gens])

# (2,3) and (2,4) are incomparable: (0,1) is not in the cone.
J = ideal_from_generators(S, [(2, 3), (2, 4)])
print("incomparable generators stay: ", [monomial_string(g) for g in J.gens])

# Membership is a facet-inequality test on the difference vector.
print("x^2y^5 in <xy^2>:", I.contains((2, 5)))
print("xy^2 in <xy>:    ", ideal_from_generators(S, [(1, 1)]).contains((1, 2)))

# Sum, product, intersection.
K = ideal_from_generators(S, [(2, 2)])
print("\nsum:         ", [monomial_string(g) for g in (J + K).gens])
print("product:     ", [monomial_string(g) for g in (J * K).gens])
print("intersection:", [monomial_string(g) for g in (J & (J + K)).gens])

# Integral closure fills in the lattice points of the Newton region.
orthant = Semigroup.from_rays([(1, 0), (0, 1)])
L = ideal_from_generators(orthant, [(2, 0), (0, 2)])
print("\nclosure of <x^2, y^2>:", [monomial_string(g) for g in L.integral_closure().gens])

# Closures of powers come from the scaled region, never from expanding
# the actual power; both routes agree.
print("closure of its square:", [monomial_string(g) for g in L.closure_of_power(2).gens])
assert L.closure_of_power(3) == (L * L * L).integral_closure()

# The Newton region turns products into Minkowski sums.
A = ideal_from_generators(S, [(2, 1), (1, 3)])
assert (A * J).newton() == minkowski_sum(A.newton(), J.newton())
print("\nNewt(A*J) == Newt(A) + Newt(J) holds")
