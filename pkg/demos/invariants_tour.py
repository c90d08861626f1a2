#!/usr/bin/env python3
"""Tour of the three invariants on a handful of named trees.

For each tree we print the independence number, the total domination
number, and the total co-independent domination number with their witness
sets, and show where the value sits between its two bounds
n - beta <= tcoi <= n - #leaves (trees of diameter >= 3).
"""

from treedom import (
    FamilyFSpec,
    comb,
    diameter,
    double_star,
    family_f,
    invariant_report,
    path,
    q_tree,
    star,
    structure,
)

ZOO = {
    "path on 6": path(6),
    "star on 6": star(6),
    "double star (3,3)": double_star(3, 3),
    "comb over 4 spine vertices": comb(4),
    "pendant caterpillar r=3": q_tree(3),
    "gap tree b=1, d=1": family_f(
        FamilyFSpec(path(2), frozenset({0}), frozenset({1}))
    ),
}


def fmt(witness):
    return "{" + ", ".join(map(str, sorted(witness))) + "}"


for name, tree in ZOO.items():
    rep = invariant_report(tree)
    leaves = len(structure(tree).leaves)
    print(f"== {name} (n={tree.n}) ==")
    print(f"  beta    = {rep.beta:2d}   witness {fmt(rep.beta_witness)}")
    print(f"  gamma_t = {rep.gamma_t:2d}   witness {fmt(rep.gamma_t_witness)}")
    print(f"  tcoi    = {rep.tcoi:2d}   witness {fmt(rep.tcoi_witness)}")
    if diameter(tree) >= 3:
        lo, hi = tree.n - rep.beta, tree.n - leaves
        spot = "at the lower bound" if rep.tcoi == lo else (
            "at the upper bound" if rep.tcoi == hi else "strictly between"
        )
        print(f"  bounds: {lo} <= {rep.tcoi} <= {hi}  ({spot})")
    else:
        print("  (diameter < 3: extremal families not defined)")
    print()
