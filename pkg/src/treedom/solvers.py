"""Exact solvers for independence, total domination, and total co-independent
domination on trees.

Each invariant has two independent routes:

* a linear dynamic program over the tree rooted at vertex 0, with optional
  per-vertex "forced in/out" constraints (used for witness reconstruction
  and for membership-in-some-optimal-set queries), and
* a brute-force oracle that enumerates every subset as a bit mask and
  evaluates the defining predicate directly (vectorized with numpy).

Witnesses are deterministic: among optimal sets the one whose sorted vertex
list is lexicographically smallest is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    NotATcoiSetError,
    TooLargeError,
    UndefinedInvariantError,
    VertexOutOfRangeError,
)
from .trees import VertexSet

_INF = 1 << 40

BRUTE_FORCE_CAP = 20
_CHUNK = 1 << 16


# ---------------------------------------------------------------------------
# Set predicates
# ---------------------------------------------------------------------------


def _as_set(tree, members):
    s = frozenset(members)
    for v in s:
        if not (0 <= v < tree.n):
            raise VertexOutOfRangeError(f"vertex {v} not in 0..{tree.n - 1}")
    return s


def is_independent_set(tree, members):
    """True iff no two members are adjacent."""
    s = _as_set(tree, members)
    return not any(u in s and v in s for u, v in tree.edges)


def is_total_dominating_set(tree, members):
    """True iff every vertex of the tree has a neighbor in the set."""
    s = _as_set(tree, members)
    return all(any(w in s for w in tree.adj[v]) for v in range(tree.n))


def is_tcoi_set(tree, members):
    """True iff the set totally dominates and its complement is independent
    and non-empty."""
    s = _as_set(tree, members)
    if len(s) == tree.n:
        return False
    if not is_total_dominating_set(tree, s):
        return False
    rest = frozenset(range(tree.n)) - s
    return is_independent_set(tree, rest)


def is_minimal_tcoi_set(tree, members):
    """Condition-based minimality test for a total co-independent dominating
    set: every member v either is the sole dominator of some vertex, or has
    a neighbor outside the set.  Raises NotATcoiSetError if the input is not
    a tcoi set at all.
    """
    s = _as_set(tree, members)
    if not is_tcoi_set(tree, s):
        raise NotATcoiSetError(f"{sorted(s)} is not a total co-independent dominating set")
    for v in s:
        sole = any(
            set(tree.adj[u]) & s == {v} for u in range(tree.n)
        )
        outside = any(w not in s for w in tree.adj[v])
        if not (sole or outside):
            return False
    return True


# ---------------------------------------------------------------------------
# Rooted dynamic programs (root = vertex 0)
# ---------------------------------------------------------------------------


def _rooted_children(tree):
    parent = [-2] * tree.n
    parent[0] = -1
    order = [0]
    for u in order:
        for w in tree.adj[u]:
            if parent[w] == -2:
                parent[w] = u
                order.append(w)
    children = [[] for _ in range(tree.n)]
    for v in order[1:]:
        children[parent[v]].append(v)
    return order, children


def _beta_opt(tree, forced_in=(), forced_out=()):
    """Maximum independent set size, or None if the constraints clash."""
    n = tree.n
    order, children = _rooted_children(tree)
    fin, fout = set(forced_in), set(forced_out)
    dp_in = [0] * n
    dp_out = [0] * n
    for v in reversed(order):
        best_in = 1 if v not in fout else -_INF
        best_out = 0 if v not in fin else -_INF
        for c in children[v]:
            best_in += dp_out[c]
            best_out += max(dp_in[c], dp_out[c])
            best_in = max(best_in, -_INF)
            best_out = max(best_out, -_INF)
        dp_in[v], dp_out[v] = best_in, best_out
    ans = max(dp_in[0], dp_out[0])
    return None if ans < 0 else ans


def _gamma_t_opt(tree, forced_in=(), forced_out=()):
    """Minimum total dominating set size, or None if infeasible.

    Per-vertex states, parent contribution excluded:
    a = in set & dominated by a child, b = in set & not yet dominated,
    c = out & dominated, d = out & not yet dominated.
    """
    n = tree.n
    order, children = _rooted_children(tree)
    fin, fout = set(forced_in), set(forced_out)
    st = [None] * n
    for v in reversed(order):
        a, b = _INF, 1
        c, d = _INF, 0
        if v in fin:
            c = d = _INF
        if v in fout:
            a = b = _INF
        for ch in children[v]:
            ca, cb, cc, cd = st[ch]
            in_any = min(ca, cb, cc, cd)
            in_dset = min(ca, cb)
            a, b = (
                min(a + in_any, b + in_dset, _INF),
                min(b + min(cc, cd), _INF),
            )
            c, d = (
                min(c + min(ca, cc), d + ca, _INF),
                min(d + cc, _INF),
            )
        st[v] = (a, b, c, d)
    ans = min(st[0][0], st[0][2])
    return None if ans >= _INF else ans


def _tcoi_opt(tree, forced_in=(), forced_out=()):
    """Minimum total co-independent dominating set size, or None.

    Per-vertex states: (in set, dominated?, subtree-has-out-vertex?) for
    members, plus a single "out" state (an out vertex forces all its
    children into the set, already dominated within their subtrees, and
    itself contributes the required out-vertex).
    """
    n = tree.n
    order, children = _rooted_children(tree)
    fin, fout = set(forced_in), set(forced_out)
    st = [None] * n
    for v in reversed(order):
        # a0/a1: in & dominated, without/with an out vertex below
        # b0/b1: in & undominated, likewise; o: v itself out
        a0 = a1 = _INF
        b0, b1 = 1, _INF
        o = 0
        if v in fin:
            o = _INF
        if v in fout:
            b0 = _INF
        for ch in children[v]:
            ca0, ca1, cb0, cb1, co = st[ch]
            in_t0 = min(ca0, cb0)
            in_t1 = min(ca1, cb1)
            any_t1 = min(in_t1, co)
            any_t0 = in_t0
            na0 = min(a0 + any_t0, b0 + in_t0, _INF)
            na1 = min(a1 + min(any_t0, any_t1), a0 + any_t1, b1 + min(in_t0, in_t1), b0 + in_t1, _INF)
            # b-state keeps "no child in set": only out children qualify,
            # and an out child always carries the out flag
            nb1 = min(b1 + co, b0 + co, _INF)
            no = min(o + min(ca0, ca1), _INF)
            a0, a1, b0, b1, o = na0, na1, _INF, nb1, no
        st[v] = (a0, a1, b0, b1, o)
    a0, a1, b0, b1, o = st[0]
    ans = min(a1, o if n >= 2 else _INF)
    return None if ans >= _INF else ans


_DP = {"beta": _beta_opt, "gamma_t": _gamma_t_opt, "tcoi": _tcoi_opt}


def _check_defined(tree, which):
    if which == "gamma_t" and tree.n < 2:
        raise UndefinedInvariantError("total domination is undefined on a single vertex")
    if which == "tcoi" and tree.n <= 2:
        raise UndefinedInvariantError(
            "total co-independent domination is undefined for trees on at most 2 vertices"
        )


def _dp_value(tree, which, forced_in=(), forced_out=()):
    return _DP[which](tree, forced_in, forced_out)


def _dp_witness(tree, which):
    """Lexicographically smallest optimal set, by greedy forcing from 0."""
    base = _dp_value(tree, which)
    forced_in, forced_out = [], []
    for v in range(tree.n):
        if _dp_value(tree, which, forced_in + [v], forced_out) == base:
            forced_in.append(v)
        else:
            forced_out.append(v)
    return base, frozenset(forced_in)


def invariant_value(tree, which):
    """Value of one invariant without witness reconstruction (faster)."""
    _check_defined(tree, which)
    val = _dp_value(tree, which)
    if val is None:
        raise UndefinedInvariantError(f"no feasible set exists for {which}")
    return val


def independence_number(tree):
    """(beta, witness): maximum independent set size and one such set."""
    return _dp_witness(tree, "beta")


def total_domination_number(tree):
    """(gamma_t, witness); undefined for the single-vertex tree."""
    _check_defined(tree, "gamma_t")
    return _dp_witness(tree, "gamma_t")


def tcoi_number(tree):
    """(gamma_t,coi, witness); undefined for trees on at most 2 vertices."""
    _check_defined(tree, "tcoi")
    return _dp_witness(tree, "tcoi")


def in_some_optimal_set(tree, v, which):
    """True iff vertex v lies in at least one optimal set for the invariant.

    which is "beta" (maximum independent sets) or "tcoi" (minimum total
    co-independent dominating sets).
    """
    if which not in ("beta", "tcoi"):
        raise ValueError(f"unsupported invariant {which!r}")
    tree._check_vertex(v)
    _check_defined(tree, which)
    base = _dp_value(tree, which)
    return _dp_value(tree, which, forced_in=(v,)) == base


# ---------------------------------------------------------------------------
# Brute-force oracle over all 2^n subsets
# ---------------------------------------------------------------------------


def _neighbor_masks(tree):
    nb = [0] * tree.n
    for u, v in tree.edges:
        nb[u] |= 1 << v
        nb[v] |= 1 << u
    return nb


def _mask_valid(tree, arr, which, nb):
    ok = np.ones(arr.shape, dtype=bool)
    if which == "beta":
        for u, v in tree.edges:
            ok &= ((arr >> np.uint64(u)) & (arr >> np.uint64(v)) & np.uint64(1)) == 0
        return ok
    for v in range(tree.n):
        ok &= (arr & np.uint64(nb[v])) != 0
    if which == "tcoi":
        for u, v in tree.edges:
            ok &= (((arr >> np.uint64(u)) | (arr >> np.uint64(v))) & np.uint64(1)) != 0
        ok &= arr != np.uint64((1 << tree.n) - 1)
    return ok


def _bit_reversed(arr, n):
    rev = np.zeros(arr.shape, dtype=np.uint64)
    for i in range(n):
        rev |= ((arr >> np.uint64(i)) & np.uint64(1)) << np.uint64(n - 1 - i)
    return rev


def _scan_best(tree, which):
    """(value, mask) over all subsets, ties broken to the lexicographically
    smallest sorted vertex list."""
    n = tree.n
    nb = _neighbor_masks(tree)
    maximize = which == "beta"
    best = None  # (size, rev, mask)
    for lo in range(0, 1 << n, _CHUNK):
        arr = np.arange(lo, min(lo + _CHUNK, 1 << n), dtype=np.uint64)
        ok = _mask_valid(tree, arr, which, nb)
        cand = arr[ok]
        if cand.size == 0:
            continue
        sizes = np.bitwise_count(cand)
        target = sizes.max() if maximize else sizes.min()
        if best is not None:
            if maximize and target < best[0]:
                continue
            if not maximize and target > best[0]:
                continue
        tied = cand[sizes == target]
        revs = _bit_reversed(tied, n)
        k = int(np.argmax(revs))
        entry = (int(target), int(revs[k]), int(tied[k]))
        if (
            best is None
            or (maximize and entry[0] > best[0])
            or (not maximize and entry[0] < best[0])
            or (entry[0] == best[0] and entry[1] > best[1])
        ):
            best = entry
    if best is None:
        return None
    return best[0], frozenset(v for v in range(n) if best[2] >> v & 1)


def brute_force(tree, which, cap=BRUTE_FORCE_CAP):
    """Exact optimum by checking the defining predicate on every subset.

    Independent of the dynamic programs; this is the oracle the DP results
    are validated against.
    """
    if which not in _DP:
        raise ValueError(f"unknown invariant {which!r}")
    if tree.n > cap:
        raise TooLargeError(f"brute force capped at {cap} vertices, got {tree.n}")
    _check_defined(tree, which)
    result = _scan_best(tree, which)
    if result is None:
        raise UndefinedInvariantError(f"no feasible set exists for {which}")
    return result


def optimal_sets(tree, which, cap=16):
    """Every optimal set for the invariant, as sorted frozensets."""
    if tree.n > cap:
        raise TooLargeError(f"optimal-set enumeration capped at {cap} vertices")
    _check_defined(tree, which)
    n = tree.n
    nb = _neighbor_masks(tree)
    arr = np.arange(1 << n, dtype=np.uint64)
    ok = _mask_valid(tree, arr, which, nb)
    cand = arr[ok]
    if cand.size == 0:
        raise UndefinedInvariantError(f"no feasible set exists for {which}")
    sizes = np.bitwise_count(cand)
    target = sizes.max() if which == "beta" else sizes.min()
    hits = cand[sizes == target]
    out = [frozenset(v for v in range(n) if int(m) >> v & 1) for m in hits]
    return sorted(out, key=sorted)


def all_tcoi_sets(tree, cap=16):
    """Every total co-independent dominating set of the tree (any size)."""
    if tree.n > cap:
        raise TooLargeError(f"tcoi-set enumeration capped at {cap} vertices")
    _check_defined(tree, "tcoi")
    n = tree.n
    nb = _neighbor_masks(tree)
    arr = np.arange(1 << n, dtype=np.uint64)
    ok = _mask_valid(tree, arr, "tcoi", nb)
    return [
        frozenset(v for v in range(n) if int(m) >> v & 1) for m in arr[ok]
    ]


# ---------------------------------------------------------------------------
# Combined report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantReport:
    """The three invariants of one tree with witness sets.

    gamma_t is None on the single-vertex tree; tcoi is None whenever the
    tree has at most 2 vertices.
    """

    n: int
    beta: int
    beta_witness: VertexSet
    gamma_t: int | None
    gamma_t_witness: VertexSet | None
    tcoi: int | None
    tcoi_witness: VertexSet | None

    def to_json_dict(self):
        def lst(s):
            return None if s is None else sorted(s)

        return {
            "n": self.n,
            "beta": self.beta,
            "gamma_t": self.gamma_t,
            "tcoi": self.tcoi,
            "beta_witness": lst(self.beta_witness),
            "gamma_t_witness": lst(self.gamma_t_witness),
            "tcoi_witness": lst(self.tcoi_witness),
        }


def invariant_report(tree):
    beta, bw = independence_number(tree)
    gt = gw = tc = tw = None
    if tree.n >= 2:
        gt, gw = total_domination_number(tree)
    if tree.n >= 3:
        tc, tw = tcoi_number(tree)
    return InvariantReport(
        n=tree.n,
        beta=beta,
        beta_witness=bw,
        gamma_t=gt,
        gamma_t_witness=gw,
        tcoi=tc,
        tcoi_witness=tw,
    )
