"""Exact membership in the eigenvalue cone.

A family of s weakly decreasing spectra plus a scalar t lies in the cone
exactly when s Hermitian matrices with those spectra can sum to t times
the identity.  The inequality description consists of the trace equality,
the ordering (chamber) rows, and one Horn row per zero-expected-dimension
intersecting tuple below the rank.
"""

from fractions import Fraction

from horncone import HornStore, SpectrumFamily, generate_system, member, shift_rescale

store = HornStore(arity=3)

# The rank-2 description has 8 rows; count the three kinds.
system = generate_system(2, 3, None, "full0", store)
print(f"rank 2 system: {system.count} rows")
for con in system.constraints():
    print("  ", con.describe())

# Two eigenvalue questions, answered exactly.
yes = SpectrumFamily([[1, -1], [1, -1], [1, -1]], 0)
print("\n(1,-1) three times, t=0:", "member" if member(yes, system) else "no")

system3 = generate_system(3, 3, None, "full0", store)
no = SpectrumFamily([[0, 0, 0], [0, 0, 0], [1, 0, -1]], 0)
verdict = member(no, system3)
print("two zero matrices plus a nonzero one:",
      "member" if verdict else f"no -- violates {verdict.violation.constraint.describe()}")

# Membership is invariant under shifting each spectrum and rescaling.
moved = shift_rescale(yes, [Fraction(1, 2), 0, -1], Fraction(3, 7))
print("\nafter shift and rescale:", "member" if member(moved, system) else "no")

# Restricting to three equal spectra: the reduced description for rank 5
# has just 10 rows, and decides e.g. lambda = (1,1,0,-1,-1).
sym = generate_system(5, 3, (3,), "full0", store)
lam = [1, 1, 0, -1, -1]
print(f"\nequal-spectra rank-5 system: {sym.count} rows")
print("lambda = (1,1,0,-1,-1) three times, t=0:",
      "member" if member(SpectrumFamily([lam] * 3, 0), sym) else "no")
