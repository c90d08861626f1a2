"""End-to-end acceptance suite.

Each test verifies one stated guarantee at its full range and prints one
PASS/FAIL line.  Run with ``pytest tests/test_acceptance.py -s`` to see the
per-criterion lines.

Criterion 4 (the structural upper-bound characterization as an "if and only
if") fails honestly: the implication from the structural conditions to the
bound equality has counterexamples starting at order 9, the smallest being
the 8-vertex path with one extra pendant on its middle.  The check is
implemented exactly as stated and the test reports the counterexamples
rather than weakening the claim.
"""

import itertools

from treedom import (
    FamilyFSpec,
    UndefinedInvariantError,
    all_tcoi_sets,
    brute_force,
    decompose_to_p4,
    distance_matrix,
    exhaustive_sequence_search,
    family_f,
    independence_number,
    is_independent_set,
    is_minimal_tcoi_set,
    is_tcoi_set,
    is_total_dominating_set,
    optimal_sets,
    path,
    star,
    structural_upper_bound_check,
    structure,
    tcoi_number,
    total_domination_number,
    verify_certificate,
)
from treedom.trees import Tree
from conftest import profile, trees_of_order

FULL_RANGE = range(3, 15)


def report(num, name, ok, detail=""):
    print(f"\n[acceptance] criterion {num} ({name}): "
          f"{'PASS' if ok else 'FAIL'}{detail}")
    return ok


def test_criterion_1_oracle_equivalence():
    """DP values equal brute-force values on every tree with 3 <= n <= 14,
    and every witness satisfies its defining predicate."""
    checked = 0
    for n in FULL_RANGE:
        for t in trees_of_order(n):
            beta, bw = independence_number(t)
            gt, gw = total_domination_number(t)
            tc, tw = tcoi_number(t)
            assert beta == brute_force(t, "beta")[0]
            assert gt == brute_force(t, "gamma_t")[0]
            assert tc == brute_force(t, "tcoi")[0]
            assert is_independent_set(t, bw) and len(bw) == beta
            assert is_total_dominating_set(t, gw) and len(gw) == gt
            assert is_tcoi_set(t, tw) and len(tw) == tc
            checked += 1
    assert report(1, "oracle equivalence", True, f" [{checked} trees]")


def test_criterion_2_bound_sandwich():
    """n - beta <= tcoi <= n - #leaves on every tree of diameter >= 3."""
    violations = []
    for n in FULL_RANGE:
        for t in trees_of_order(n):
            tn, diam, leaves, beta, _, tcoi = profile(t)
            if diam < 3:
                continue
            if not (tn - beta <= tcoi <= tn - leaves):
                violations.append(t)
    assert report(2, "bound sandwich", not violations,
                  f" [{len(violations)} violations]"), violations[:3]


def test_criterion_3_lower_characterization():
    """A certificate exists iff tcoi = n - beta; every certificate replays
    with all preconditions satisfied to an isomorphic tree."""
    mismatches, replayed = [], 0
    for n in FULL_RANGE:
        for t in trees_of_order(n):
            tn, diam, _, beta, _, tcoi = profile(t)
            if diam < 3:
                continue
            member = tcoi == tn - beta
            cert = decompose_to_p4(t)
            if (cert is not None) != member:
                mismatches.append(t)
                continue
            if cert is not None:
                assert verify_certificate(cert, t)
                replayed += 1
    assert report(3, "lower-bound characterization", not mismatches,
                  f" [{replayed} certificates replayed]"), mismatches[:3]


def test_criterion_4_upper_characterization():
    """Structural check iff tcoi = n - #leaves; zero mismatches expected.

    This fails: the structural conditions do not force the bound equality.
    The smallest counterexample has 9 vertices (an 8-path with a pendant on
    its middle vertex); its unique minimum total co-independent dominating
    set omits a semi-support whose neighbors are all in the set.
    """
    mismatches = []
    for n in FULL_RANGE:
        for t in trees_of_order(n):
            tn, diam, leaves, _, _, tcoi = profile(t)
            if diam < 3:
                continue
            if structural_upper_bound_check(t) != (tcoi == tn - leaves):
                mismatches.append(t)
    first = ""
    if mismatches:
        t = mismatches[0]
        first = (f"; first counterexample n={t.n} edges={list(t.edges)} "
                 f"tcoi={profile(t)[5]} n-leaves={t.n - profile(t)[2]}")
    ok = report(4, "upper-bound characterization",
                not mismatches, f" [{len(mismatches)} mismatches{first}]")
    assert ok, (
        f"{len(mismatches)} trees satisfy the structural conditions without "
        f"attaining the leaf bound (or vice versa){first}"
    )


def test_criterion_5_gap_family_identities():
    """Every gap tree over every base of order <= 5 and every host
    assignment with b, d in 1..3 matches all six stated identities."""
    cases = 0
    for base_n in range(2, 6):
        for base in trees_of_order(base_n):
            for b in range(1, min(3, base_n - 1) + 1):
                d = base_n - b
                if not 1 <= d <= 3:
                    continue
                for us in itertools.combinations(range(base_n), b):
                    spec = FamilyFSpec(
                        base,
                        frozenset(us),
                        frozenset(range(base_n)) - frozenset(us),
                    )
                    t = family_f(spec)
                    rep = structure(t)
                    total, _, leaves, beta, _, tcoi = profile(t)
                    assert total == 3 * base_n + 4 * b + 5 * d
                    assert leaves == len(rep.leaves) == 2 * base_n + 2 * b + 2 * d
                    assert beta == 2 * base_n + 3 * b + 3 * d
                    assert tcoi == base_n + 2 * b + 2 * d
                    assert tcoi - (total - beta) == b
                    assert (total - leaves) - tcoi == d
                    cases += 1
    assert report(5, "gap family identities", True, f" [{cases} trees]")


def test_criterion_6_operation_necessity_examples():
    """The three drawn example trees are produced by exactly the stated
    operation-kind sequences, no more, no fewer."""
    tree_i = Tree(12, ((0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (5, 6),
                       (6, 7), (2, 8), (8, 9), (9, 10), (10, 11)))
    tree_ii = Tree(12, ((0, 1), (1, 2), (0, 3), (3, 4), (4, 5), (1, 6),
                        (2, 7), (0, 8), (8, 9), (8, 10), (10, 11)))
    tree_iii = Tree(6, ((0, 1), (1, 2), (2, 3), (3, 4), (2, 5)))
    assert exhaustive_sequence_search(tree_i, 2) == [("O3", "O3"), ("O4", "O3")]
    assert exhaustive_sequence_search(tree_ii, 2) == [("O3", "O4"), ("O4", "O4")]
    assert exhaustive_sequence_search(tree_iii, 1) == [("O2",)]
    assert report(6, "operation necessity examples", True)


def test_criterion_7_minimality_characterization():
    """Condition-based minimality equals single-removal minimality on every
    total co-independent dominating set of every tree with n <= 10."""
    sets_checked = 0
    for n in range(3, 11):
        for t in trees_of_order(n):
            for d in all_tcoi_sets(t):
                by_cond = is_minimal_tcoi_set(t, d)
                by_removal = not any(is_tcoi_set(t, d - {v}) for v in d)
                assert by_cond == by_removal, (t, sorted(d))
                sets_checked += 1
    assert report(7, "minimality characterization", True,
                  f" [{sets_checked} sets]")


def test_criterion_8_distance_within_maximum_independent_sets():
    """In every maximum independent set of every tree with n <= 12, each
    member has another member within distance 3."""
    sets_checked = 0
    for n in range(3, 13):
        for t in trees_of_order(n):
            dm = distance_matrix(t)
            for b in optimal_sets(t, "beta"):
                for v in b:
                    assert any(u != v and dm[v][u] <= 3 for u in b), (t, v)
                sets_checked += 1
    assert report(8, "distance remark", True, f" [{sets_checked} sets]")


def test_criterion_9_degenerate_contract():
    """tcoi is undefined for n <= 2 and equals 2 on every star with n >= 3."""
    for n in (1, 2):
        try:
            tcoi_number(path(n))
            assert False, "expected UndefinedInvariantError"
        except UndefinedInvariantError:
            pass
        try:
            brute_force(path(n), "tcoi")
            assert False, "expected UndefinedInvariantError"
        except UndefinedInvariantError:
            pass
    for n in range(3, 31):
        assert tcoi_number(star(n))[0] == 2
    for n in range(3, 13):
        assert brute_force(star(n), "tcoi")[0] == 2
    assert report(9, "degenerate cases", True)
