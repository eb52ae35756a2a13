"""Finding explicit matrices behind a cone membership.

For a member family the package searches for actual Hermitian matrices
with the prescribed spectra summing to t*I, by alternating projections
between the product of unitary orbits and the affine constraint.  The
search is advisory: it confirms exact verdicts but never replaces them.
"""

import numpy as np

from horncone import HornStore, SpectrumFamily, find_witness, generate_system, member

store = HornStore(arity=3)
system = generate_system(3, 3, None, "full0", store)

family = SpectrumFamily([[2, 1, -1], [2, 1, -1], [2, 1, -1]], 2)
print("exact verdict:", "member" if member(family, system) else "not a member")

result = find_witness(family, seed=5)
print(f"converged: {result.converged} after {result.iterations} iterations"
      f" (residual {result.residual:.2e})")

x1, x2, x3 = result.matrices
print("\nfirst witness matrix (rounded):")
print(np.round(x1, 6))
print("\nsum of the three (should be 2*I):")
print(np.round(x1 + x2 + x3, 9))
print("\nspectra (should each be (2, 1, -1)):")
for m in result.matrices:
    print(" ", np.round(np.linalg.eigvalsh(m)[::-1], 9))

# An infeasible family: zero plus zero can only give zero, so the
# projections stall at a positive residual and the search reports that.
bad = SpectrumFamily([[0, 0, 0], [0, 0, 0], [1, 0, -1]], 0)
result = find_witness(bad, seed=5, restarts=5)
print(f"\ninfeasible family: converged={result.converged},"
      f" residual stalls at {result.residual:.3f}")
