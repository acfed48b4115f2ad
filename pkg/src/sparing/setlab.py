"""Set-label arithmetic and witness labelings.

Vertex labels are finite sets of non-negative integers.  A labeling is a
valid witness when the vertex map is injective, the induced edge map
(sum sets) is injective, and every edge label's size equals the larger
endpoint size.  The last condition holds exactly when the non-singleton
vertices form an independent set, which is the binary abstraction the
solver optimizes over.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from sparing.graphs import Graph, is_independent

IndexSet = tuple[int, ...]

MONO = "mono"
NONMONO = "nonmono"


class FeasibilityError(ValueError):
    """Assignment violates the independent-set condition."""


def index_set(elements: Iterable[int]) -> IndexSet:
    out = tuple(sorted(set(elements)))
    if not out:
        raise ValueError("index sets must be non-empty")
    if out[0] < 0:
        raise ValueError("index sets contain non-negative integers only")
    return out


def sumset(a: IndexSet, b: IndexSet) -> IndexSet:
    """All pairwise sums {x + y : x in a, y in b}, deduplicated."""
    return tuple(sorted({x + y for x in a for y in b}))


def scale(k: int, a: IndexSet) -> IndexSet:
    """Elementwise integral multiple; cardinality is preserved."""
    if k < 1:
        raise ValueError(f"scale factor must be >= 1, got {k}")
    return tuple(k * x for x in a)


def mian_chowla(count: int) -> IndexSet:
    """First `count` terms of the greedy Sidon sequence starting at 1.

    Every pairwise sum (including doubles) of the result is distinct,
    which is what makes witness edge labels injective for free.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    terms: list[int] = []
    sums: set[int] = set()
    candidate = 1
    while len(terms) < count:
        new_sums = {candidate + t for t in terms} | {2 * candidate}
        if not (new_sums & sums):
            terms.append(candidate)
            sums |= new_sums
        candidate += 1
    return tuple(terms)


@dataclass(frozen=True)
class Assignment:
    """Binary vertex marking; True means the vertex may carry a
    non-singleton label."""

    nonmono: frozenset[int]
    vertex_count: int

    def __post_init__(self) -> None:
        for v in self.nonmono:
            if not 0 <= v < self.vertex_count:
                raise ValueError(f"vertex {v} out of range 0..{self.vertex_count - 1}")

    def is_mono(self, v: int) -> bool:
        return v not in self.nonmono

    def is_feasible(self, g: Graph) -> bool:
        return is_independent(g, self.nonmono)

    @classmethod
    def all_mono(cls, g: Graph) -> "Assignment":
        return cls(frozenset(), g.vertex_count)

    @classmethod
    def from_mask(cls, mask: int, vertex_count: int) -> "Assignment":
        return cls(
            frozenset(v for v in range(vertex_count) if mask >> v & 1), vertex_count
        )

    def to_mask(self) -> int:
        mask = 0
        for v in self.nonmono:
            mask |= 1 << v
        return mask


@dataclass(frozen=True)
class Labeling:
    """Per-vertex index sets, in vertex-id order."""

    vertex_labels: tuple[IndexSet, ...]

    def edge_label(self, u: int, v: int) -> IndexSet:
        return sumset(self.vertex_labels[u], self.vertex_labels[v])


@dataclass(frozen=True)
class ValidationReport:
    f_injective: bool
    f_plus_injective: bool
    weak_condition: bool
    mono_edge_count: int

    @property
    def is_weak_iasi(self) -> bool:
        return self.f_injective and self.f_plus_injective and self.weak_condition


def count_mono_edges(g: Graph, asg: Assignment) -> int:
    """Edges whose endpoints are both marked mono.

    Defined for infeasible assignments too; feasibility is checked
    separately.
    """
    return sum(1 for u, v in g.edges if asg.is_mono(u) and asg.is_mono(v))


def build_witness(g: Graph, asg: Assignment) -> Labeling:
    """Concrete labeling realizing an assignment.

    Base values come from the greedy Sidon sequence, so singleton edge
    labels are automatically pairwise distinct; the two-element labels
    add an offset D larger than any possible base sum, keeping one- and
    two-element edge labels apart.
    """
    if not asg.is_feasible(g):
        for u, v in sorted(g.edges):
            if not asg.is_mono(u) and not asg.is_mono(v):
                raise FeasibilityError(
                    f"non-mono vertices {u} and {v} are adjacent"
                )
        raise FeasibilityError("assignment is infeasible")
    base = mian_chowla(g.vertex_count)
    offset = 2 * max(base) + 1
    labels = []
    for v in range(g.vertex_count):
        if asg.is_mono(v):
            labels.append((base[v],))
        else:
            labels.append((base[v], base[v] + offset))
    return Labeling(tuple(labels))


def validate_labeling(g: Graph, lab: Labeling) -> ValidationReport:
    """Check the witness axioms; violations are report content, not errors."""
    if len(lab.vertex_labels) != g.vertex_count:
        raise ValueError(
            f"expected {g.vertex_count} labels, got {len(lab.vertex_labels)}"
        )
    f_injective = len(set(lab.vertex_labels)) == g.vertex_count
    edge_labels = {}
    weak = True
    mono_edges = 0
    for e in sorted(g.edges):
        u, v = e
        el = lab.edge_label(u, v)
        edge_labels[e] = el
        if len(el) != max(len(lab.vertex_labels[u]), len(lab.vertex_labels[v])):
            weak = False
        if len(el) == 1:
            mono_edges += 1
    f_plus_injective = len(set(edge_labels.values())) == len(edge_labels)
    return ValidationReport(f_injective, f_plus_injective, weak, mono_edges)


def restrict(lab: Labeling, vertex_map: dict[int, int]) -> Labeling:
    """Labeling induced on a subgraph; vertex_map sends new id -> old id."""
    return Labeling(
        tuple(lab.vertex_labels[vertex_map[v]] for v in range(len(vertex_map)))
    )


def labeling_to_json(lab: Labeling) -> str:
    """Serialize as a vertex-id -> sorted-int-list map."""
    return json.dumps(
        {str(v): list(s) for v, s in enumerate(lab.vertex_labels)},
        sort_keys=True,
        indent=None,
        separators=(",", ":"),
    )


def labeling_from_json(text: str) -> Labeling:
    data = json.loads(text)
    labels = [None] * len(data)
    for key, values in data.items():
        labels[int(key)] = index_set(values)
    if any(label is None for label in labels):
        raise ValueError("vertex ids must be dense 0..n-1")
    return Labeling(tuple(labels))
