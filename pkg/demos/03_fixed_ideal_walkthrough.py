"""Enumerating every fixed ideal of a twisted trace operator.

The operator phi(x^u) = x^{(u-w)/q} on k[x, xy, xy^2, xy^3] (q = p^e)
fixes an ideal exactly when the ideal is a sum of face ideals of the
cone shifted to the base point w/(1-q).  Sweeping w and q reproduces a
whole zoo of fixed-ideal lattices.
"""

from toric_cartier import (
    CartierData,
    Semigroup,
    ShiftedNewton,
    decompose_fixed,
    enumerate_fixed,
    format_ideal,
    ideal_from_generators,
    phi_on_ideal,
    stable_image,
    w_to_divisor,
)

S = Semigroup.from_rays([(1, 0), (1, 3)])

for w, qs in [((-1, -2), [(2, 1), (3, 1), (2, 2)]), ((1, 2), [(2, 1)]), ((1, 0), [(2, 1)]), ((0, 1), [(2, 1), (3, 1)])]:
    for p, e in qs:
        op = CartierData(p, e, w, S)
        sn = ShiftedNewton.from_cartier(op)
        records = enumerate_fixed(sn)
        print(f"w = {w}, p^e = {p**e}:  base point {op.base_point}")
        print(f"  boundary divisor coefficients: {w_to_divisor(S.cone, w, p, e).coefficients}")
        for r in records:
            faces = [sn.faces.faces[i].dim for i in r.generating_faces]
            print(f"  {r.label:>3}: {format_ideal(r.ideal):<28} from faces of dimension {faces}")
        print()

# The operator itself confirms the list: each member is literally fixed.
op = CartierData(2, 1, (-1, -2), S)
sn = ShiftedNewton.from_cartier(op)
for r in enumerate_fixed(sn):
    if not r.ideal.is_zero:
        assert phi_on_ideal(op, r.ideal) == r.ideal

# The stable image of the operator is the largest fixed ideal.
print("stable image:", format_ideal(stable_image(op)))

# Decomposition recovers the face data of a fixed ideal, and produces
# a concrete witness for a non-fixed one.
good = decompose_fixed(sn, ideal_from_generators(S, [(1, 2)]))
print("decompose <xy^2>: fixed =", good.is_fixed, "faces =", good.faces)
bad = decompose_fixed(ShiftedNewton.from_cartier(CartierData(3, 1, (-1, -2), S)),
                      ideal_from_generators(S, [(1, 1)]))
print("decompose <xy> at p = 3: fixed =", bad.is_fixed, "witness =", bad.witness)
