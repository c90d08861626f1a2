#!/usr/bin/env python3
"""The deviation from either bound can be made arbitrarily large.

Gap trees are built from a base tree whose vertices are split into b star
hosts and d subdivided-star hosts.  The construction realizes the two gaps
exactly: tcoi - (n - beta) = b and (n - #leaves) - tcoi = d.
"""

from treedom import FamilyFSpec, family_f, invariant_value, path, structure

print(f"{'b':>2} {'d':>2} {'order':>6} {'leaves':>6} {'beta':>5} "
      f"{'tcoi':>5} {'gap to n-beta':>14} {'gap to n-|L|':>13}")
for b in range(1, 4):
    for d in range(1, 4):
        base = path(b + d)
        spec = FamilyFSpec(
            base, frozenset(range(b)), frozenset(range(b, base.n))
        )
        t = family_f(spec)
        n = t.n
        leaves = len(structure(t).leaves)
        beta = invariant_value(t, "beta")
        tcoi = invariant_value(t, "tcoi")
        print(f"{b:>2} {d:>2} {n:>6} {leaves:>6} {beta:>5} {tcoi:>5} "
              f"{tcoi - (n - beta):>14} {(n - leaves) - tcoi:>13}")

print("\nthe two right-hand columns reproduce b and d exactly: both bounds")
print("can be missed by as much as you like, independently.")
