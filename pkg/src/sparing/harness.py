"""Conformance grid: oracle vs printed vs proof-derived values.

For every theorem and parameter tuple in a grid, build the corona,
solve it exactly, evaluate the closed forms, and classify the result.
Row order and all output bytes are deterministic.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path
from typing import Optional

from sparing.formulas import REGISTRY, Status, TheoremId, Variant
from sparing.graphs import CoronaLayout, build_family, corona
from sparing.setlab import build_witness, labeling_to_json, validate_labeling
from sparing.solver import sparing_bruteforce, sparing_corona, sparing_mwis


class GridConfigError(ValueError):
    """Grid ranges exceed the exact-solver budget."""


class SolverDisagreement(RuntimeError):
    """Two exact solvers returned different values: an implementation bug."""


@dataclass(frozen=True)
class GridSpec:
    path_edges: tuple[int, ...] = (1, 2, 3, 4, 5)
    cycle_lengths: tuple[int, ...] = (3, 4, 5, 6, 7)
    complete_orders: tuple[int, ...] = (1, 2, 3, 4, 5)
    biclique_parts: tuple[int, ...] = (1, 2, 3)
    # Instances at or below this vertex count get a brute-force
    # cross-check on top of the decomposition solver; larger ones are
    # cross-checked by branch and bound instead.
    oracle_cap: int = 20
    max_vertices: int = 64

    @classmethod
    def from_json(cls, text: str) -> "GridSpec":
        data = json.loads(text)
        known = {f.name for f in cls.__dataclass_fields__.values()}  # type: ignore[attr-defined]
        unknown = set(data) - known
        if unknown:
            raise GridConfigError(f"unknown grid fields: {sorted(unknown)}")
        kwargs = {
            k: tuple(v) if isinstance(v, list) else v for k, v in data.items()
        }
        return cls(**kwargs)


@dataclass(frozen=True)
class ConformanceRow:
    theorem: TheoremId
    params: tuple[tuple[str, int], ...]
    vertices: int
    edges: int
    oracle: int
    as_printed: Fraction
    proof_derived: Optional[int]
    status: Status
    witness_path: Optional[str] = None

    def params_str(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.params)


@dataclass(frozen=True)
class ConformanceSummary:
    status_counts: dict[TheoremId, dict[Status, int]]
    offenders: tuple[ConformanceRow, ...]

    @property
    def paper_consistent(self) -> bool:
        return not self.offenders


def _param_tuples(theorem_id: TheoremId, spec: GridSpec) -> list[tuple[int, ...]]:
    paths = spec.path_edges
    cycles = spec.cycle_lengths
    completes = spec.complete_orders
    parts = [
        (r, s)
        for r in spec.biclique_parts
        for s in spec.biclique_parts
        if r <= s
    ]
    odd_cycles = tuple(c for c in cycles if c % 2 == 1)
    grids: dict[TheoremId, list[tuple[int, ...]]] = {
        TheoremId.PP: [(m, n) for m in paths for n in paths],
        TheoremId.CP: [(m, n) for m in cycles for n in paths],
        TheoremId.PC: [(n, m) for n in paths for m in cycles],
        TheoremId.CC: [(m, n) for m in cycles for n in cycles],
        TheoremId.KK: [(m, n) for m in completes for n in completes],
        TheoremId.PK: [(m, n) for m in paths for n in completes],
        TheoremId.KP: [(n, m) for n in completes for m in paths],
        TheoremId.CK: [(m, n) for m in cycles for n in completes],
        TheoremId.KC: [(n, m) for n in completes for m in cycles],
        TheoremId.BICLIQUE_BICLIQUE: [
            (m1, n1, m2, n2) for m1, n1 in parts for m2, n2 in parts
        ],
        TheoremId.BIPARTITE_BIPARTITE: [
            (u1, v1, u2, v2) for u1, v1 in parts for u2, v2 in parts
        ],
        TheoremId.ODDCYCLE_BIP: [(n, r, s) for n in odd_cycles for r, s in parts],
        TheoremId.BIP_ODDCYCLE: [(r, s, n) for r, s in parts for n in odd_cycles],
        TheoremId.K_BIP: [(n, r, s) for n in completes for r, s in parts],
        TheoremId.BIP_K: [(r, s, n) for r, s in parts for n in completes],
    }
    return sorted(grids[theorem_id])


def grid_instances(spec: GridSpec) -> list[tuple[TheoremId, tuple[int, ...], CoronaLayout]]:
    """Every (theorem, params, corona) in deterministic row order."""
    out = []
    for theorem_id in TheoremId:
        theorem = REGISTRY[theorem_id]
        for params in _param_tuples(theorem_id, spec):
            base_spec, copy_spec = theorem.corona_operands(*params)
            layout = corona(build_family(base_spec), build_family(copy_spec))
            out.append((theorem_id, params, layout))
    return out


def solve_instance(layout: CoronaLayout, oracle_cap: int) -> int:
    """Exact value with a mandatory cross-check between two solvers."""
    decomp = sparing_corona(layout)
    g = layout.graph
    if g.vertex_count <= oracle_cap:
        other = sparing_bruteforce(g, cap=oracle_cap)
    else:
        other = sparing_mwis(g)
    if other.value != decomp.value:
        raise SolverDisagreement(
            f"{other.method} got {other.value} but CoronaDecomp got "
            f"{decomp.value} on {g.vertex_count}-vertex corona"
        )
    return decomp.value


def run_grid(
    spec: GridSpec = GridSpec(),
    witness_dir: Optional[Path] = None,
) -> list[ConformanceRow]:
    instances = grid_instances(spec)
    for _, params, layout in instances:
        if layout.graph.vertex_count > spec.max_vertices:
            raise GridConfigError(
                f"instance {params} has {layout.graph.vertex_count} vertices, "
                f"over the budget of {spec.max_vertices}"
            )
    rows = []
    for theorem_id, params, layout in instances:
        theorem = REGISTRY[theorem_id]
        oracle = solve_instance(layout, spec.oracle_cap)
        as_printed = theorem.evaluate(*params, variant=Variant.AS_PRINTED)
        proof_derived: Optional[int] = None
        if theorem.has_derived_variant:
            derived = theorem.evaluate(*params, variant=Variant.PROOF_DERIVED)
            if derived != as_printed:
                assert derived.denominator == 1
                proof_derived = int(derived)
        status = _classify(as_printed, proof_derived, oracle)
        row = ConformanceRow(
            theorem=theorem_id,
            params=tuple(zip(theorem.param_names, params)),
            vertices=layout.graph.vertex_count,
            edges=layout.graph.edge_count,
            oracle=oracle,
            as_printed=as_printed,
            proof_derived=proof_derived,
            status=status,
        )
        if witness_dir is not None:
            row = replace(row, witness_path=_emit_witness(row, layout, witness_dir))
        rows.append(row)
    return rows


def _classify(
    as_printed: Fraction, proof_derived: Optional[int], oracle: int
) -> Status:
    from sparing.formulas import classify

    return classify(
        as_printed,
        Fraction(proof_derived) if proof_derived is not None else None,
        oracle,
    )


def _emit_witness(row: ConformanceRow, layout: CoronaLayout, out_dir: Path) -> str:
    result = sparing_corona(layout)
    labeling = build_witness(layout.graph, result.witness)
    report = validate_labeling(layout.graph, labeling)
    if not report.is_weak_iasi or report.mono_edge_count != row.oracle:
        raise SolverDisagreement(
            f"witness for {row.theorem.value} {row.params_str()} failed validation"
        )
    out_dir.mkdir(parents=True, exist_ok=True)
    name = f"{row.theorem.value}_{row.params_str().replace(';', '_')}.json"
    path = out_dir / name
    path.write_text(labeling_to_json(labeling) + "\n", encoding="utf-8")
    return name


CSV_HEADER = "theorem,params,vertices,edges,oracle,as_printed,proof_derived,status"


def rows_to_csv(rows: list[ConformanceRow]) -> str:
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    for r in rows:
        derived = "" if r.proof_derived is None else str(r.proof_derived)
        buf.write(
            f"{r.theorem.value},{r.params_str()},{r.vertices},{r.edges},"
            f"{r.oracle},{r.as_printed},{derived},{r.status.value}\n"
        )
    return buf.getvalue()


def rows_to_json(rows: list[ConformanceRow]) -> str:
    payload = [
        {
            "theorem": r.theorem.value,
            "params": dict(r.params),
            "vertices": r.vertices,
            "edges": r.edges,
            "oracle": r.oracle,
            "as_printed": str(r.as_printed),
            "proof_derived": r.proof_derived,
            "status": r.status.value,
            "witness_path": r.witness_path,
        }
        for r in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def summarize(rows: list[ConformanceRow]) -> ConformanceSummary:
    if not rows:
        raise ValueError("no rows to summarize")
    counts: dict[TheoremId, dict[Status, int]] = {}
    offenders = []
    for r in rows:
        per = counts.setdefault(r.theorem, {})
        per[r.status] = per.get(r.status, 0) + 1
        if r.status in (Status.UNDERESTIMATE, Status.NON_INTEGER):
            offenders.append(r)
    return ConformanceSummary(counts, tuple(offenders))
