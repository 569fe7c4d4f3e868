"""Counting isotypic dimensions of section spaces.

A scenario bundles a group (circle power or SU(2)), a product of
projective factors with per-coordinate weights, and an ample linearized
bundle.  The engine counts, exactly, how the space of degree-k sections
decomposes under the group.
"""

from equivol import (
    brute_force_oracle,
    circle_scenario,
    full_weight_distribution,
    section_dimension,
    su2_scenario,
    total_dimension,
)

# The rank-one action t.(z0,z1,z2) = (t^-1 z0, t z1, t z2) on P^2 with the
# hyperplane bundle.  Sections of O(k) are degree-k monomials; the
# monomial z0^(k-a-b) z1^a z2^b carries weight 2(a+b) - k.
p2 = circle_scenario([[-1, 1, 1]], [1])

print("P^2, weights (-1, 1, 1), O(k):")
for k in (2, 4, 6):
    dist = full_weight_distribution(p2, k)
    print(f"  k={k}: total dim {total_dimension(p2, k)}, decomposition {dist}")

# The invariant part of O(2r) is the degree-r polynomial ring in two
# variables pushed down to the quotient P^1: dimension 1 + r.
print("\ninvariants dim H^0(O(2r))_0 = 1 + r:")
print("  ", [section_dimension(p2, 2 * r, 0) for r in range(1, 8)])

# SU(2) acting on P^3 = P(V + V), V the defining representation.  The
# isotypic piece of highest weight mu has dimension (mu+1)^2 exactly when
# mu <= k with the right parity.
su2 = su2_scenario([[1, 1]], [1])
print("\nSU(2) on P^3, isotypic dimensions (mu+1)^2:")
for k in (3, 5):
    rows = {mu: (mu + 1) * n for mu, n in full_weight_distribution(su2, k).items()}
    print(f"  k={k}: {rows}")

# Everything is cross-checked against explicit monomial enumeration (and,
# for SU(2), exact raising-operator kernel ranks).
print("\nbrute-force oracle agreement at k <= 6:")
for s, label in ((p2, "P^2"), (su2, "su2 P^3")):
    ok = all(full_weight_distribution(s, k) == brute_force_oracle(s, k) for k in range(7))
    print(f"  {label}: {'agrees' if ok else 'MISMATCH'}")
