"""Graph construction, corona products, and basic queries.

Vertices are dense integers 0..n-1.  Graphs are immutable after
construction and safe to share between concurrent solver runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional


class GraphError(ValueError):
    """Invalid graph construction or query parameters."""


@dataclass(frozen=True)
class Graph:
    """A simple, finite, undirected graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]
    tag: Optional["FamilySpec"] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise GraphError("vertex_count must be non-negative")
        seen_deg = [0] * self.vertex_count
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(f"edge {e} has endpoint outside 0..{self.vertex_count - 1}")
            if u > v:
                raise GraphError(f"edge {e} not normalized (expected u < v)")
            seen_deg[u] += 1
            seen_deg[v] += 1
        # Isolated vertices are rejected except for the one-vertex graph,
        # which only ever appears as a corona operand.
        if self.vertex_count > 1 and 0 in seen_deg:
            bad = seen_deg.index(0)
            raise GraphError(f"vertex {bad} is isolated")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        if not 0 <= v < self.vertex_count:
            raise GraphError(f"vertex {v} out of range 0..{self.vertex_count - 1}")
        return sum(1 for u, w in self.edges if u == v or w == v)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency_masks(self) -> list[int]:
        """Neighbor bitmask per vertex, for subset-enumeration kernels."""
        adj = [0] * self.vertex_count
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def neighbors(self, v: int) -> set[int]:
        if not 0 <= v < self.vertex_count:
            raise GraphError(f"vertex {v} out of range 0..{self.vertex_count - 1}")
        return {u if w == v else w for u, w in self.edges if v in (u, w)}


def _normalize_edges(edges: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    return frozenset((min(u, v), max(u, v)) for u, v in edges)


def make_graph(
    vertex_count: int,
    edges: Iterable[tuple[int, int]],
    tag: Optional["FamilySpec"] = None,
) -> Graph:
    return Graph(vertex_count, _normalize_edges(edges), tag)


_FAMILY_KINDS = ("Path", "Cycle", "Complete", "CompleteBipartite", "Corona", "Custom")


@dataclass(frozen=True)
class FamilySpec:
    """Named graph family with integer (or nested) parameters.

    Path carries its EDGE count m, so Path(m) has m+1 vertices; corona
    order/size arithmetic always uses actual vertex counts.
    """

    kind: str
    params: tuple = ()

    def __post_init__(self) -> None:
        if self.kind not in _FAMILY_KINDS:
            raise GraphError(f"unknown family kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "Path":
            return f"path:{self.params[0]}"
        if self.kind == "Cycle":
            return f"cycle:{self.params[0]}"
        if self.kind == "Complete":
            return f"complete:{self.params[0]}"
        if self.kind == "CompleteBipartite":
            return f"biclique:{self.params[0]},{self.params[1]}"
        if self.kind == "Corona":
            return f"corona({self.params[0]},{self.params[1]})"
        return "custom"


def path_spec(m: int) -> FamilySpec:
    return FamilySpec("Path", (m,))


def cycle_spec(n: int) -> FamilySpec:
    return FamilySpec("Cycle", (n,))


def complete_spec(n: int) -> FamilySpec:
    return FamilySpec("Complete", (n,))


def biclique_spec(r: int, s: int) -> FamilySpec:
    return FamilySpec("CompleteBipartite", (r, s))


def corona_spec(base: FamilySpec, copy: FamilySpec) -> FamilySpec:
    return FamilySpec("Corona", (base, copy))


def build_family(spec: FamilySpec) -> Graph:
    """Construct the graph named by a family spec."""
    kind, params = spec.kind, spec.params
    if kind == "Path":
        (m,) = params
        if m < 1:
            raise GraphError(f"Path needs edge count >= 1, got {m}")
        return make_graph(m + 1, [(i, i + 1) for i in range(m)], tag=spec)
    if kind == "Cycle":
        (n,) = params
        if n < 3:
            raise GraphError(f"Cycle needs length >= 3, got {n}")
        return make_graph(n, [(i, (i + 1) % n) for i in range(n)], tag=spec)
    if kind == "Complete":
        (n,) = params
        if n < 1:
            raise GraphError(f"Complete needs order >= 1, got {n}")
        return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)], tag=spec)
    if kind == "CompleteBipartite":
        r, s = params
        if r < 1 or s < 1:
            raise GraphError(f"CompleteBipartite needs part sizes >= 1, got {r},{s}")
        return make_graph(r + s, [(i, r + j) for i in range(r) for j in range(s)], tag=spec)
    if kind == "Corona":
        base, copy = params
        return corona(build_family(base), build_family(copy)).graph
    raise GraphError(f"cannot build family of kind {kind!r}")


@dataclass(frozen=True)
class CoronaLayout:
    """Corona product with the id layout used to map back to the operands.

    Base vertices keep ids 0..n1-1; the i-th copy of the second operand
    occupies ids n1 + i*n2 .. n1 + (i+1)*n2 - 1 in copy-vertex order.
    """

    base: Graph
    copy: Graph
    graph: Graph

    @property
    def base_count(self) -> int:
        return self.base.vertex_count

    @property
    def copy_count(self) -> int:
        return self.copy.vertex_count

    def copy_vertex(self, i: int, u: int) -> int:
        """Product id of vertex u in the i-th copy."""
        n1, n2 = self.base_count, self.copy_count
        if not 0 <= i < n1:
            raise GraphError(f"copy index {i} out of range 0..{n1 - 1}")
        if not 0 <= u < n2:
            raise GraphError(f"copy vertex {u} out of range 0..{n2 - 1}")
        return n1 + i * n2 + u

    def base_vertex_of(self, product_id: int) -> Optional[int]:
        """Base vertex an id belongs to: itself if a base id, else its copy's base."""
        n1, n2 = self.base_count, self.copy_count
        if not 0 <= product_id < self.graph.vertex_count:
            raise GraphError(f"vertex {product_id} out of range")
        if product_id < n1:
            return product_id
        return (product_id - n1) // n2


def corona(g1: Graph, g2: Graph) -> CoronaLayout:
    """One copy of g1, n1 copies of g2, i-th base vertex joined to every
    vertex of the i-th copy."""
    if g1.vertex_count == 0 or g2.vertex_count == 0:
        raise GraphError("corona operands must be non-empty")
    n1, n2 = g1.vertex_count, g2.vertex_count
    edges = list(g1.edges)
    for i in range(n1):
        off = n1 + i * n2
        edges.extend((off + u, off + v) for u, v in g2.edges)
        edges.extend((i, off + u) for u in range(n2))
    tag = None
    if g1.tag is not None and g2.tag is not None:
        tag = corona_spec(g1.tag, g2.tag)
    product = make_graph(n1 * (1 + n2), edges, tag=tag)
    assert product.edge_count == g1.edge_count + n1 * g2.edge_count + n1 * n2
    return CoronaLayout(base=g1, copy=g2, graph=product)


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    """True iff no edge of g has both endpoints in s."""
    vs = set(s)
    for v in vs:
        if not 0 <= v < g.vertex_count:
            raise GraphError(f"vertex {v} out of range 0..{g.vertex_count - 1}")
    return all(not (u in vs and v in vs) for u, v in g.edges)


def is_bipartite(g: Graph) -> bool:
    """BFS 2-coloring."""
    color: dict[int, int] = {}
    adj: dict[int, list[int]] = {v: [] for v in range(g.vertex_count)}
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    for start in range(g.vertex_count):
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in adj[v]:
                if u not in color:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def write_dimacs(g: Graph) -> str:
    """Edge-list text: `p edge <n> <m>` header then `e <u> <v>`, 1-based."""
    lines = [f"p edge {g.vertex_count} {g.edge_count}"]
    for u, v in sorted(g.edges):
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def read_dimacs(text: str) -> Graph:
    n = None
    m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphError(f"line {lineno}: malformed problem line {line!r}")
            n, m = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: malformed edge line {line!r}")
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        else:
            raise GraphError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise GraphError("missing `p edge` header")
    if m is not None and m != len(edges):
        raise GraphError(f"header declares {m} edges, found {len(edges)}")
    return make_graph(n, edges)
