import pytest

from sparing.formulas import Status, TheoremId
from sparing.harness import (
    CSV_HEADER,
    GridConfigError,
    GridSpec,
    grid_instances,
    rows_to_csv,
    rows_to_json,
    run_grid,
    summarize,
)

SMALL = GridSpec(
    path_edges=(1, 2),
    cycle_lengths=(3, 4),
    complete_orders=(1, 2, 3),
    biclique_parts=(1, 2),
)


@pytest.fixture(scope="module")
def small_rows():
    return run_grid(SMALL)


def _row(rows, theorem, **params):
    want = tuple(params.items())
    for r in rows:
        if r.theorem is theorem and r.params == want:
            return r
    raise AssertionError(f"no row for {theorem} {params}")


def test_known_exact_matches(small_rows):
    r = _row(small_rows, TheoremId.CC, m=3, n=3)
    assert r.oracle == 10 and r.status is Status.EXACT_MATCH
    r = _row(small_rows, TheoremId.CC, m=4, n=4)
    assert r.oracle == 12 and r.status is Status.EXACT_MATCH
    r = _row(small_rows, TheoremId.PP, m=1, n=1)
    assert r.oracle == 2 and r.status is Status.EXACT_MATCH


def test_known_discrepancies(small_rows):
    r = _row(small_rows, TheoremId.CK, m=3, n=2)
    assert r.oracle == 4 and r.status is Status.UNDERESTIMATE
    r = _row(small_rows, TheoremId.PP, m=2, n=1)
    assert r.oracle == 3
    assert r.status is Status.NON_INTEGER
    assert r.proof_derived == 3
    r = _row(small_rows, TheoremId.PP, m=2, n=2)
    assert r.oracle == 4 and r.as_printed == 5 and r.status is Status.UPPER_BOUND


def test_corona_counts_on_grid(small_rows):
    for _, params, layout in grid_instances(SMALL):
        g1, g2 = layout.base, layout.copy
        n1, n2 = g1.vertex_count, g2.vertex_count
        assert layout.graph.vertex_count == n1 * (1 + n2)
        assert layout.graph.edge_count == g1.edge_count + n1 * g2.edge_count + n1 * n2


def test_row_order_is_deterministic(small_rows):
    order = [(r.theorem.value, r.params) for r in small_rows]
    theorems = [t for t, _ in order]
    declared = [t.value for t in TheoremId]
    assert sorted(theorems, key=declared.index) == theorems
    for theorem in set(theorems):
        params = [p for t, p in order if t == theorem]
        assert params == sorted(params)


def test_csv_determinism(small_rows):
    first = rows_to_csv(small_rows)
    second = rows_to_csv(run_grid(SMALL))
    assert first == second
    assert first.startswith(CSV_HEADER + "\n")
    assert len(first.splitlines()) == len(small_rows) + 1


def test_json_mirror(small_rows):
    import json

    payload = json.loads(rows_to_json(small_rows))
    assert len(payload) == len(small_rows)
    assert payload[0]["theorem"] == small_rows[0].theorem.value
    assert set(payload[0]) == {
        "theorem", "params", "vertices", "edges", "oracle",
        "as_printed", "proof_derived", "status", "witness_path",
    }


def test_summarize(small_rows):
    summary = summarize(small_rows)
    assert not summary.paper_consistent
    assert any(r.theorem is TheoremId.CK for r in summary.offenders)
    total = sum(
        count for per in summary.status_counts.values() for count in per.values()
    )
    assert total == len(small_rows)


def test_summarize_consistent_case():
    rows = [r for r in run_grid(SMALL) if r.status is Status.EXACT_MATCH]
    summary = summarize(rows)
    assert summary.paper_consistent
    with pytest.raises(ValueError):
        summarize([])


def test_empty_theorem_range_is_absent():
    # no odd cycles -> the odd-cycle theorems contribute no rows at all
    spec = GridSpec(
        path_edges=(1,), cycle_lengths=(4,), complete_orders=(2,), biclique_parts=(1,)
    )
    rows = run_grid(spec)
    summary = summarize(rows)
    assert TheoremId.ODDCYCLE_BIP not in summary.status_counts
    assert TheoremId.BIP_ODDCYCLE not in summary.status_counts


def test_budget_violation_raises_before_solving():
    with pytest.raises(GridConfigError, match="budget"):
        run_grid(GridSpec(path_edges=(30,), cycle_lengths=(3,),
                          complete_orders=(1,), biclique_parts=(1,),
                          max_vertices=40))


def test_witness_emission(tmp_path):
    spec = GridSpec(
        path_edges=(1, 2), cycle_lengths=(3,), complete_orders=(2,),
        biclique_parts=(1,),
    )
    rows = run_grid(spec, witness_dir=tmp_path)
    for r in rows:
        assert r.witness_path is not None
        assert (tmp_path / r.witness_path).exists()


def test_grid_spec_from_json():
    spec = GridSpec.from_json('{"path_edges": [1, 2], "oracle_cap": 12}')
    assert spec.path_edges == (1, 2)
    assert spec.oracle_cap == 12
    with pytest.raises(GridConfigError, match="unknown"):
        GridSpec.from_json('{"bogus": 1}')
