"""Exact sparing-number solvers.

Every edge needs a mono endpoint, so a feasible marking is exactly an
independent non-mono set S, and the mono-edge count is
|E| - sum(deg(v) for v in S).  Minimizing mono edges is therefore a
maximum-weight independent set problem with degree weights; the three
solvers below attack it by full enumeration, by branch and bound, and by
decomposing a corona product into one MWIS per operand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from sparing import _backend
from sparing.graphs import CoronaLayout, Graph
from sparing.setlab import Assignment, count_mono_edges

BRUTE_FORCE_CAP = 24


class SizeError(ValueError):
    """Instance too large for the requested solver."""


@dataclass(frozen=True)
class SparingResult:
    value: int
    witness: Assignment
    method: str
    explored: int
    optimal: bool = True

    def to_json(self, g: Graph) -> str:
        spec = str(g.tag) if g.tag is not None else "custom"
        marks = {
            str(v): ("nonmono" if v in self.witness.nonmono else "mono")
            for v in range(g.vertex_count)
        }
        return json.dumps(
            {
                "graph": spec,
                "vertices": g.vertex_count,
                "edges": g.edge_count,
                "sparing": self.value,
                "method": self.method,
                "witness": marks,
            },
            sort_keys=False,
            separators=(",", ":"),
        )


def sparing_bruteforce(g: Graph, cap: int = BRUTE_FORCE_CAP) -> SparingResult:
    """Minimum over all feasible markings by full subset enumeration.

    Witness is the lexicographically smallest optimal non-mono set.
    """
    n = g.vertex_count
    if n > cap:
        raise SizeError(
            f"{n} vertices exceeds the brute-force cap {cap}; use sparing_mwis"
        )
    best_w, best_mask, explored = _backend.mwis_brute(g.adjacency_masks(), g.degrees())
    witness = Assignment.from_mask(best_mask, n)
    return SparingResult(g.edge_count - best_w, witness, "BruteForce", explored)


def sparing_mwis(g: Graph, node_limit: int = 0) -> SparingResult:
    """Exact branch and bound on the degree-weighted MWIS reduction.

    With a positive node_limit the search may stop early; the result is
    then the best marking found so far, flagged non-optimal.
    """
    best_w, best_mask, explored, optimal = _backend.mwis_bb(
        g.adjacency_masks(), g.degrees(), node_limit
    )
    witness = Assignment.from_mask(best_mask, g.vertex_count)
    return SparingResult(
        g.edge_count - best_w, witness, "MwisBB", explored, optimal=optimal
    )


def sparing_corona(layout: CoronaLayout) -> SparingResult:
    """Corona decomposition.

    A copy whose base vertex is non-mono must be fully mono, so the
    product MWIS splits: solve the copy graph once under weights
    deg+1 (the join edge adds one), then solve the base graph where
    picking a base vertex v is worth deg(v)+n2 but forfeits the copy
    optimum W2.
    """
    g1, g2, product = layout.base, layout.copy, layout.graph
    n1, n2 = g1.vertex_count, g2.vertex_count

    adj2 = g2.adjacency_masks()
    w2 = [d + 1 for d in g2.degrees()]
    copy_w, copy_mask, explored2, _ = _backend.mwis_bb(adj2, w2)

    adj1 = g1.adjacency_masks()
    w1 = [d + n2 - copy_w for d in g1.degrees()]
    base_w, base_mask, explored1, _ = _backend.mwis_bb(adj1, w1)

    total_weight = base_w + n1 * copy_w
    nonmono = {v for v in range(n1) if base_mask >> v & 1}
    for i in range(n1):
        if base_mask >> i & 1:
            continue  # copies under a non-mono base vertex stay 1-uniform
        for u in range(n2):
            if copy_mask >> u & 1:
                nonmono.add(layout.copy_vertex(i, u))
    witness = Assignment(frozenset(nonmono), product.vertex_count)
    result = SparingResult(
        product.edge_count - total_weight,
        witness,
        "CoronaDecomp",
        explored1 + explored2,
    )
    assert count_mono_edges(product, witness) == result.value
    return result
