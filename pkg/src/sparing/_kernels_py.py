"""Pure-Python maximum-weight independent set kernels.

Graphs arrive as per-vertex neighbor bitmasks.  Both kernels return
``(best_weight, best_mask, explored)``.  The compiled twin in
``_ckernels`` implements the same contract for graphs with at most 64
vertices; this module has no size limit.
"""

from __future__ import annotations

BACKEND = "python"


def lex_less(a: int, b: int) -> bool:
    """Order bitmasks as their sorted vertex tuples, lexicographically."""
    while a and b:
        la = a & -a
        lb = b & -b
        if la != lb:
            return la < lb
        a ^= la
        b ^= lb
    return a == 0 and b != 0


def mwis_brute(adj: list[int], weights: list[int]) -> tuple[int, int, int]:
    """Enumerate every subset; keep the max-weight independent one.

    Ties go to the lexicographically smallest vertex set, so witnesses
    are reproducible.  Vertices with non-positive weight still count:
    the empty set (weight 0) beats any negative-weight set.
    """
    n = len(adj)
    best_w = 0
    best_mask = 0
    for mask in range(1 << n):
        m = mask
        w = 0
        independent = True
        while m:
            lb = m & -m
            v = lb.bit_length() - 1
            if adj[v] & mask:
                independent = False
                break
            w += weights[v]
            m ^= lb
        if independent and (w > best_w or (w == best_w and lex_less(mask, best_mask))):
            best_w = w
            best_mask = mask
    return best_w, best_mask, 1 << n


def mwis_bb(
    adj: list[int],
    weights: list[int],
    node_limit: int = 0,
) -> tuple[int, int, int, bool]:
    """Exact branch and bound.

    Branches on the highest-degree undecided vertex (lowest id on ties).
    The bound covers the undecided vertices by greedy cliques and adds
    each clique's maximum weight: an independent set takes at most one
    vertex per clique, so the bound is admissible.  Non-positive-weight
    vertices are never included (dropping one never lowers the total).
    Returns ``(best_weight, best_mask, explored, optimal)``; ``optimal``
    is False only when ``node_limit`` > 0 was exhausted.
    """
    n = len(adj)
    order = sorted(range(n), key=lambda v: (-bin(adj[v]).count("1"), v))
    avail0 = 0
    for v in range(n):
        if weights[v] > 0:
            avail0 |= 1 << v

    best_w = 0
    best_mask = 0
    explored = 0
    truncated = False

    # Explicit stack of (avail, cur_w, cur_mask) to dodge recursion limits.
    stack = [(avail0, 0, 0)]
    while stack:
        avail, cur_w, cur_mask = stack.pop()
        explored += 1
        if node_limit and explored > node_limit:
            truncated = True
            break

        # Sweep in vertices with no undecided neighbor; they are free.
        changed = True
        while changed:
            changed = False
            m = avail
            while m:
                lb = m & -m
                m ^= lb
                v = lb.bit_length() - 1
                if adj[v] & avail == 0:
                    cur_w += weights[v]
                    cur_mask |= lb
                    avail ^= lb
                    changed = True

        if avail == 0:
            if cur_w > best_w:
                best_w = cur_w
                best_mask = cur_mask
            continue

        rem = 0
        uncovered = avail
        while uncovered:
            lb = uncovered & -uncovered
            uncovered ^= lb
            v = lb.bit_length() - 1
            clique_max = weights[v]
            common = adj[v] & uncovered
            while common:
                ub = common & -common
                u = ub.bit_length() - 1
                uncovered ^= ub
                if weights[u] > clique_max:
                    clique_max = weights[u]
                common &= adj[u]
            rem += clique_max
        if cur_w + rem <= best_w:
            continue

        for v in order:
            if avail >> v & 1:
                break
        bit = 1 << v
        # Exclude pushed first so the include branch is explored first;
        # deep dives establish a strong incumbent early.
        stack.append((avail & ~bit, cur_w, cur_mask))
        stack.append((avail & ~(adj[v] | bit), cur_w + weights[v], cur_mask | bit))

    return best_w, best_mask, explored, not truncated
