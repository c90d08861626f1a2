"""Membership tests for the two extremal families and operation certificates.

A tree of diameter >= 3 attains the lower bound when its total
co-independent domination number equals n minus the independence number,
and the upper bound when it equals n minus the number of leaves.  The lower
family has an operational characterization: exactly the trees reachable
from P_4 by attachment operations O1-O4 applied at vertices lying in
suitable optimal sets.  decompose_to_p4 finds such an operation sequence by
peeling reducible configurations off the tree; verify_certificate replays
it forward and checks every precondition.  The upper family has a purely
structural characterization checked by structural_upper_bound_check.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    CertificateMismatchError,
    InternalError,
    InvalidStepError,
    TreedomError,
    UndefinedInvariantError,
)
from .generators import OP_KINDS, OP_PRECONDITION, OP_SIZES, OperationStep, apply_operation, path
from .solvers import in_some_optimal_set, invariant_value
from .trees import (
    canonical_code,
    diameter,
    distance_matrix,
    structure,
)


def _require_diameter(tree):
    if diameter(tree) < 3:
        raise UndefinedInvariantError(
            "extremal family membership is defined only for trees of diameter >= 3"
        )


def attains_lower_bound(tree):
    """True iff the total co-independent domination number equals n - beta."""
    _require_diameter(tree)
    return invariant_value(tree, "tcoi") == tree.n - invariant_value(tree, "beta")


def attains_upper_bound(tree):
    """True iff the total co-independent domination number equals n - #leaves."""
    _require_diameter(tree)
    return invariant_value(tree, "tcoi") == tree.n - len(structure(tree).leaves)


def structural_upper_bound_check(tree):
    """Structural equivalent of attains_upper_bound, computed without any
    optimization: every vertex is a leaf, support, or semi-support, and
    every semi-support has an isolated-support neighbor."""
    _require_diameter(tree)
    rep = structure(tree)
    covered = rep.leaves | rep.supports | rep.semi_supports
    if len(covered) != tree.n:
        return False
    return all(
        any(w in rep.isolated_supports for w in tree.adj[v])
        for v in rep.semi_supports
    )


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """Operation sequence rebuilding a tree from P_4.

    Replaying the steps from the path 0-1-2-3 yields a tree whose canonical
    code is final_code; every step's attachment precondition holds in the
    intermediate tree it is applied to.  used_fallback records that the
    structured decomposition dead-ended and backtracking search finished
    the job (never expected in practice).
    """

    steps: tuple
    final_code: bytes
    used_fallback: bool = False


def certificate_to_text(cert):
    lines = ["base=P4"]
    for s in cert.steps:
        new = ",".join(str(x) for x in s.new_vertex_labels)
        lines.append(f"{s.op_kind} attach={s.attach_vertex} new={new}")
    lines.append(f"canon={cert.final_code.hex()}")
    return "\n".join(lines) + "\n"


_STEP_RE = re.compile(r"^(O[1-4]) attach=(\d+) new=(\d+(?:,\d+)*)$")


def certificate_from_text(text):
    lines = [l.strip() for l in text.strip().splitlines() if l.strip()]
    if not lines or lines[0] != "base=P4":
        raise CertificateMismatchError("certificate must start with 'base=P4'")
    if not lines[-1].startswith("canon="):
        raise CertificateMismatchError("certificate must end with a canon= line")
    final_code = bytes.fromhex(lines[-1][len("canon="):])
    steps = []
    for line in lines[1:-1]:
        m = _STEP_RE.match(line)
        if not m:
            raise CertificateMismatchError(f"bad certificate line: {line!r}")
        kind, attach, new = m.group(1), int(m.group(2)), m.group(3)
        steps.append(
            OperationStep(kind, attach, tuple(int(x) for x in new.split(",")))
        )
    return Certificate(steps=tuple(steps), final_code=final_code)


def verify_certificate(cert, target):
    """Replay a certificate from P_4 and compare against the target tree.

    Returns True; raises InvalidStepError if a step cannot be applied (with
    its index) and CertificateMismatchError if the replayed tree does not
    match the recorded code or the target's isomorphism class.
    """
    cur = path(4)
    for i, step in enumerate(cert.steps):
        try:
            cur = apply_operation(cur, step)
        except TreedomError as exc:
            raise InvalidStepError(i, str(exc)) from exc
    code = canonical_code(cur)
    if code != cert.final_code:
        raise CertificateMismatchError(
            "replayed tree does not match the certificate's recorded code"
        )
    if code != canonical_code(target):
        raise CertificateMismatchError("replayed tree is not isomorphic to the target")
    return True


# ---------------------------------------------------------------------------
# Decomposition to P_4
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Reduction:
    """One peeled operation: kind, removed vertices in role order, and the
    attachment vertex, all in the labels of the tree it was peeled from."""

    kind: str
    removed: tuple
    attach: int


def _is_member(tree):
    return (
        tree.n >= 4
        and diameter(tree) >= 3
        and invariant_value(tree, "tcoi") == tree.n - invariant_value(tree, "beta")
    )


def _validated(tree, red):
    """Check that a reduction peels cleanly: the remainder is a tree of
    diameter >= 3 that still attains the lower bound, and the forward
    precondition holds at the attachment vertex.  Returns (subtree,
    old_to_new) or None."""
    if red.attach in red.removed:
        return None
    try:
        sub, old_to_new = tree.without(red.removed)
    except TreedomError:
        return None
    if sub.n < 4 or not _is_member(sub):
        return None
    if not in_some_optimal_set(sub, old_to_new[red.attach], OP_PRECONDITION[red.kind]):
        return None
    return sub, old_to_new


def _leaf_neighbors(tree, v, leaves):
    return sorted(w for w in tree.adj[v] if w in leaves)


def _q_chain_move(tree, rep, v, s, h):
    """Reduction for the caterpillar configuration hanging at semi-support v:
    follow the support chain from s and peel its far end (reverse O2), or,
    for a one-link chain, peel the whole 4-vertex piece as a reverse O4."""
    supports, leaves = rep.supports, rep.leaves
    chain = [s]
    prev = None
    while True:
        nxt = sorted(x for x in tree.adj[chain[-1]] if x in supports and x != prev)
        if not nxt:
            break
        prev = chain[-1]
        chain.append(nxt[0])
    if len(chain) >= 3:
        sr, srm1 = chain[-1], chain[-2]
        hr_list = _leaf_neighbors(tree, sr, leaves)
        if hr_list and set(tree.adj[sr]) == {srm1, hr_list[0]}:
            red = _Reduction("O2", (sr, hr_list[0]), srm1)
            if _validated(tree, red):
                return red
        return None
    # one-link chain: s - s1
    s1 = chain[1]
    h1_list = _leaf_neighbors(tree, s1, leaves)
    if not h1_list:
        return None
    h1 = h1_list[0]
    if set(tree.adj[s1]) == {s, h1}:
        red = _Reduction("O2", (s1, h1), s)
        if _validated(tree, red):
            return red
        if set(tree.adj[s]) == {h, v, s1}:
            red = _Reduction("O4", (h, s, s1, h1), v)
            if _validated(tree, red):
                return red
    return None


def _select_triple(tree, rep, dm):
    """Pick (h, h2, v): leaves h, h2 at maximum distance whose connecting
    path passes through a semi-support v two steps from h.  Deterministic
    tie-break by smallest (h, h2, v)."""
    best = None
    for v in sorted(rep.semi_supports):
        for h in sorted(rep.leaves):
            if dm[v][h] != 2:
                continue
            for h2 in sorted(rep.leaves):
                if h2 == h or dm[h][v] + dm[v][h2] != dm[h][h2]:
                    continue
                key = (-dm[h][h2], h, h2, v)
                if best is None or key < best:
                    best = key
    if best is None:
        return None
    return best[1], best[2], best[3]


def _proof_move(tree):
    """The structured reduction for a lower-bound member with n > 4.

    Case order: a support with two leaves loses one (reverse O1); with no
    semi-supports, an end support of the support subtree comes off with its
    leaf (reverse O2); otherwise the deepest semi-support configuration is
    peeled as a caterpillar chain, a pendant 2-path, the whole pendant
    4-path (reverse O3), or a 4-vertex branch (reverse O4).
    """
    rep = structure(tree)
    leaves, supports, semi = rep.leaves, rep.supports, rep.semi_supports

    if len(supports) < len(leaves):
        for v in sorted(supports):
            lv = _leaf_neighbors(tree, v, leaves)
            if len(lv) >= 2:
                red = _Reduction("O1", (lv[0],), v)
                return red if _validated(tree, red) else None
        return None

    if not semi:
        # every vertex is a leaf or a support; peel an end support whose
        # support-neighbor is not itself an end
        sup_deg = {x: sum(1 for w in tree.adj[x] if w in supports) for x in supports}
        for s in sorted(supports):
            if sup_deg[s] != 1:
                continue
            x = next(w for w in tree.adj[s] if w in supports)
            if sup_deg[x] < 2:
                continue
            lv = _leaf_neighbors(tree, s, leaves)
            if len(lv) == 1 and set(tree.adj[s]) == {lv[0], x}:
                red = _Reduction("O2", (s, lv[0]), x)
                return red if _validated(tree, red) else None
        return None

    dm = distance_matrix(tree)
    triple = _select_triple(tree, rep, dm)
    if triple is None:
        return None
    h, h2, v = triple
    s = tree.adj[h][0]  # the support between h and v

    if any(w in supports for w in tree.adj[s]):
        return _q_chain_move(tree, rep, v, s, h)

    # s has no support neighbor: it must be the degree-2 end of the path
    if set(tree.adj[s]) != {h, v}:
        return None
    v_sup = [w for w in tree.adj[v] if w in supports]
    if len(v_sup) > 1:
        red = _Reduction("O2", (s, h), v)
        return red if _validated(tree, red) else None
    if tree.degree(v) != 2:
        return None
    # walk two more steps toward h2
    p = next(w for w in tree.adj[v] if dm[w][h2] == dm[v][h2] - 1)
    q = next(w for w in tree.adj[p] if dm[w][h2] == dm[p][h2] - 1)
    if set(tree.adj[p]) == {v, q}:
        red = _Reduction("O3", (p, v, s, h), q)
        return red if _validated(tree, red) else None
    for w in sorted(set(tree.adj[p]) - {v, q}):
        if w in supports:
            wl = _leaf_neighbors(tree, w, leaves)
            if wl:
                return _q_chain_move(tree, rep, p, w, wl[0])
    return None


def _candidate_reductions(tree):
    """Every way the tree could have arisen by one operation: each leaf
    (O1), pendant 2-path (O2), pendant 4-path (O3), and pendant 4-vertex
    branch (O4)."""
    deg = [tree.degree(x) for x in range(tree.n)]
    reds = []
    for h in range(tree.n):
        if deg[h] != 1:
            continue
        reds.append(_Reduction("O1", (h,), tree.adj[h][0]))
        u1 = tree.adj[h][0]
        if deg[u1] == 2:
            att = next(w for w in tree.adj[u1] if w != h)
            reds.append(_Reduction("O2", (u1, h), att))
            if deg[att] == 2:
                x3 = att
                x4 = next(w for w in tree.adj[x3] if w != u1)
                if deg[x4] == 2:
                    att2 = next(w for w in tree.adj[x4] if w != x3)
                    reds.append(_Reduction("O3", (x4, x3, u1, h), att2))
    for a in range(tree.n):
        if deg[a] != 3:
            continue
        for h1 in tree.adj[a]:
            if deg[h1] != 1:
                continue
            for u2 in tree.adj[a]:
                if u2 == h1 or deg[u2] != 2:
                    continue
                h2 = next(w for w in tree.adj[u2] if w != a)
                if deg[h2] != 1:
                    continue
                att = next(w for w in tree.adj[a] if w not in (h1, u2))
                reds.append(_Reduction("O4", (h1, a, u2, h2), att))
    reds.sort(key=lambda r: (r.kind, r.removed, r.attach))
    return reds


def _search(tree, to_orig, failed):
    """Backtracking over all reductions; returns reductions in original
    labels, or None.  failed memoizes dead isomorphism classes."""
    if tree.n == 4:
        return [] if diameter(tree) == 3 else None
    code = canonical_code(tree)
    if code in failed:
        return None
    for red in _candidate_reductions(tree):
        val = _validated(tree, red)
        if val is None:
            continue
        sub, old_to_new = val
        sub_to_orig = {new: to_orig[old] for old, new in old_to_new.items()}
        rest = _search(sub, sub_to_orig, failed)
        if rest is not None:
            first = _Reduction(
                red.kind,
                tuple(to_orig[x] for x in red.removed),
                to_orig[red.attach],
            )
            return [first] + rest
    failed.add(code)
    return None


def _forward_certificate(tree, reductions, used_fallback):
    removed_all = {x for r in reductions for x in r.removed}
    base_orig = [v for v in range(tree.n) if v not in removed_all]
    if len(base_orig) != 4:
        raise InternalError("decomposition did not end at 4 vertices")
    base_set = set(base_orig)
    base_adj = {
        v: [w for w in tree.adj[v] if w in base_set] for v in base_orig
    }
    ends = sorted(v for v in base_orig if len(base_adj[v]) == 1)
    if len(ends) != 2:
        raise InternalError("decomposition did not end at a path")
    order = [ends[0]]
    while len(order) < 4:
        order.append(
            next(w for w in base_adj[order[-1]] if w not in order)
        )
    phi = {orig: i for i, orig in enumerate(order)}
    cur = path(4)
    steps = []
    for red in reversed(reductions):
        labels = tuple(range(cur.n, cur.n + len(red.removed)))
        for orig, fwd in zip(red.removed, labels):
            phi[orig] = fwd
        step = OperationStep(red.kind, phi[red.attach], labels)
        try:
            cur = apply_operation(cur, step)
        except TreedomError as exc:
            raise InternalError(f"forward replay rejected a peeled step: {exc}") from exc
        steps.append(step)
    code = canonical_code(cur)
    if code != canonical_code(tree):
        raise InternalError("forward replay did not reproduce the input tree")
    return Certificate(tuple(steps), code, used_fallback)


def decompose_to_p4(tree):
    """Find an operation certificate rebuilding the tree from P_4.

    Returns None when the tree does not attain the lower bound (or when no
    operation sequence exists, which the characterization rules out).  The
    structured case analysis is tried first; if it ever dead-ends the
    certificate is completed by exhaustive backtracking and flagged via
    used_fallback.
    """
    _require_diameter(tree)
    if not _is_member(tree):
        return None
    reductions = []
    used_fallback = False
    cur = tree
    to_orig = {v: v for v in range(tree.n)}
    while cur.n > 4:
        red = _proof_move(cur)
        if red is None:
            rest = _search(cur, to_orig, set())
            if rest is None:
                return None
            reductions.extend(rest)
            used_fallback = True
            break
        val = _validated(cur, red)
        if val is None:
            raise InternalError("proof move failed re-validation")
        sub, old_to_new = val
        reductions.append(
            _Reduction(
                red.kind,
                tuple(to_orig[x] for x in red.removed),
                to_orig[red.attach],
            )
        )
        to_orig = {new: to_orig[old] for old, new in old_to_new.items()}
        cur = sub
    return _forward_certificate(tree, reductions, used_fallback)


# ---------------------------------------------------------------------------
# Exhaustive forward search over operation sequences
# ---------------------------------------------------------------------------


def exhaustive_sequence_search(tree, max_len=3):
    """All distinct operation-kind sequences of length <= max_len that build
    a tree isomorphic to the given one from P_4, each realized by some
    choice of attachment vertices."""
    _require_diameter(tree)
    target_code = canonical_code(tree)
    target_n = tree.n
    reach = [{0}]
    for _ in range(max_len):
        reach.append(reach[-1] | {s + a for s in reach[-1] for a in (1, 2, 4)})
    results = set()
    start = path(4)
    if target_n == 4 and canonical_code(start) == target_code:
        results.add(())
    seen = set()
    stack = [(start, ())]
    while stack:
        t, kinds = stack.pop()
        steps_left = max_len - len(kinds)
        if steps_left == 0:
            continue
        need = target_n - t.n
        for kind in OP_KINDS:
            add = OP_SIZES[kind]
            if add > need or (need - add) not in reach[steps_left - 1]:
                continue
            for v in range(t.n):
                try:
                    nt = apply_operation(t, OperationStep(kind, v))
                except TreedomError:
                    continue
                nk = kinds + (kind,)
                if nt.n == target_n:
                    if canonical_code(nt) == target_code:
                        results.add(nk)
                    continue
                key = (canonical_code(nt), nk)
                if key not in seen:
                    seen.add(key)
                    stack.append((nt, nk))
    return sorted(results)
