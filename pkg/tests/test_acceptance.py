"""Acceptance suite: one printed pass/fail line per criterion.

All comparisons are exact integer (or exact rational) arithmetic; there
are no tolerances anywhere.
"""

import time

import pytest

from sparing.formulas import Status, TheoremId
from sparing.graphs import (
    biclique_spec,
    build_family,
    complete_spec,
    cycle_spec,
    path_spec,
)
from sparing.harness import GridSpec, grid_instances, rows_to_csv, run_grid, summarize
from sparing.setlab import (
    Assignment,
    build_witness,
    count_mono_edges,
    validate_labeling,
)
from sparing.solver import sparing_bruteforce, sparing_corona, sparing_mwis

DEFAULT_GRID = GridSpec()


@pytest.fixture(scope="module")
def default_rows():
    return run_grid(DEFAULT_GRID)


def _report(criterion, ok, detail=""):
    tag = "PASS" if ok else "FAIL"
    print(f"{tag} criterion {criterion}: {detail}")
    assert ok, f"criterion {criterion}: {detail}"


def test_criterion_1_baselines():
    start = time.perf_counter()
    for n in range(2, 9):
        expect = (n - 1) * (n - 2) // 2
        got = sparing_bruteforce(build_family(complete_spec(n))).value
        assert got == expect, f"complete graph order {n}: {got} != {expect}"
    bipartite = (
        [path_spec(m) for m in range(1, 12)]
        + [cycle_spec(n) for n in range(4, 13, 2)]
        + [biclique_spec(r, s) for r in range(1, 7) for s in range(r, 7) if r + s <= 12]
    )
    for spec in bipartite:
        got = sparing_bruteforce(build_family(spec)).value
        assert got == 0, f"{spec}: expected 0, got {got}"
    elapsed = time.perf_counter() - start
    _report(1, elapsed < 10.0, f"baselines exact, {elapsed:.2f}s < 10s")


def test_criterion_2_corona_counts():
    checked = 0
    for _, _, layout in grid_instances(DEFAULT_GRID):
        n1, m1 = layout.base.vertex_count, layout.base.edge_count
        n2, m2 = layout.copy.vertex_count, layout.copy.edge_count
        assert layout.graph.vertex_count == n1 * (1 + n2)
        assert layout.graph.edge_count == m1 + n1 * m2 + n1 * n2
        checked += 1
    _report(2, True, f"order/size formulas exact on {checked} grid instances")


def test_criterion_3_oracle_triple_agreement():
    small = [
        (tid, params, layout)
        for tid, params, layout in grid_instances(DEFAULT_GRID)
        if layout.graph.vertex_count <= 20
    ]
    assert len(small) >= 60, f"only {len(small)} instances at <= 20 vertices"
    for tid, params, layout in small:
        bf = sparing_bruteforce(layout.graph).value
        bb = sparing_mwis(layout.graph).value
        dc = sparing_corona(layout).value
        assert bf == bb == dc, (
            f"{tid.value} {params}: bruteforce={bf} mwis={bb} corona={dc}"
        )
    _report(3, True, f"three solvers agree on all {len(small)} small instances")


CONFIRMED = [
    (TheoremId.CC, {"m": 3, "n": 3}, 10),
    (TheoremId.CC, {"m": 4, "n": 4}, 12),
    (TheoremId.PP, {"m": 1, "n": 1}, 2),
    (TheoremId.KK, {"m": 2, "n": 2}, 2),
    (TheoremId.KK, {"m": 3, "n": 2}, 4),
    (TheoremId.PC, {"n": 1, "m": 3}, 6),
    (TheoremId.BICLIQUE_BICLIQUE, {"m1": 1, "n1": 2, "m2": 1, "n2": 1}, 3),
]


def _find(rows, theorem, params):
    want = tuple(params.items())
    for r in rows:
        if r.theorem is theorem and r.params == want:
            return r
    raise AssertionError(f"row {theorem} {params} missing from grid")


def test_criterion_4_confirmed_values(default_rows):
    for theorem, params, expect in CONFIRMED:
        row = _find(default_rows, theorem, params)
        assert row.oracle == expect, f"{theorem.value} {params}: oracle {row.oracle}"
        assert row.status is Status.EXACT_MATCH, (
            f"{theorem.value} {params}: status {row.status.value}"
        )
    _report(4, True, f"{len(CONFIRMED)} confirmed values all ExactMatch")


DISCREPANCIES = [
    (TheoremId.CK, {"m": 3, "n": 2}, 4, Status.UNDERESTIMATE),
    (TheoremId.KC, {"n": 2, "m": 3}, 6, Status.UNDERESTIMATE),
    (TheoremId.BIP_K, {"r": 1, "s": 1, "n": 2}, 2, Status.UNDERESTIMATE),
    (TheoremId.PP, {"m": 2, "n": 2}, 4, Status.UPPER_BOUND),
    (TheoremId.PP, {"m": 2, "n": 1}, 3, Status.NON_INTEGER),
    (TheoremId.CP, {"m": 3, "n": 3}, 8, Status.NON_INTEGER),
]


def test_criterion_5_known_discrepancies(default_rows):
    for theorem, params, oracle, status in DISCREPANCIES:
        row = _find(default_rows, theorem, params)
        assert row.oracle == oracle, f"{theorem.value} {params}: oracle {row.oracle}"
        assert row.status is status, (
            f"{theorem.value} {params}: status {row.status.value} != {status.value}"
        )
    # proof-derived variants recover the oracle where the printed form breaks
    assert _find(default_rows, TheoremId.PP, {"m": 2, "n": 1}).proof_derived == 3
    assert _find(default_rows, TheoremId.CP, {"m": 3, "n": 3}).proof_derived == 8
    from sparing.cli import main

    code = main(["verify", "--strict", "--output", "/dev/null"])
    assert code == 3, f"verify --strict exited {code}, expected nonzero (3)"
    _report(5, True, "all known discrepancies classified; strict verify exits 3")


def test_criterion_6_witness_soundness(default_rows):
    instances = grid_instances(DEFAULT_GRID)
    assert len(instances) == len(default_rows)
    for (_, _, layout), row in zip(instances, default_rows):
        result = sparing_corona(layout)
        assert result.value == row.oracle
        labeling = build_witness(layout.graph, result.witness)
        report = validate_labeling(layout.graph, labeling)
        assert report.f_injective
        assert report.f_plus_injective
        assert report.weak_condition
        assert report.mono_edge_count == row.oracle
    _report(6, True, f"validated witnesses for all {len(default_rows)} instances")


def test_criterion_7_cycle_parity():
    for n in range(3, 9):
        g = build_family(cycle_spec(n))
        adj = g.adjacency_masks()
        feasible = 0
        for mask in range(1 << n):
            if any(adj[v] & mask for v in range(n) if mask >> v & 1):
                continue
            feasible += 1
            asg = Assignment.from_mask(mask, n)
            mono_edges = count_mono_edges(g, asg)
            assert mono_edges % 2 == n % 2, f"cycle {n}, marking {mask:b}"
            assert n - len(asg.nonmono) >= (n + 1) // 2
        assert feasible > 1
    _report(7, True, "mono-edge parity and mono-vertex bound hold exhaustively")


def test_criterion_8_determinism_and_budget(default_rows):
    start = time.perf_counter()
    again = run_grid(DEFAULT_GRID)
    elapsed = time.perf_counter() - start
    first = rows_to_csv(default_rows).encode()
    second = rows_to_csv(again).encode()
    assert first == second, "two grid runs differ"
    assert elapsed < 300.0, f"grid run took {elapsed:.1f}s"
    summary = summarize(default_rows)
    assert not summary.paper_consistent  # known discrepancies exist
    _report(8, True, f"byte-identical CSV, one run in {elapsed:.1f}s < 300s")
