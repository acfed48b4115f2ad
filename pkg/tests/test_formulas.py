from fractions import Fraction

import pytest

from sparing.formulas import (
    REGISTRY,
    Status,
    TheoremId,
    Variant,
    classify,
    phi_CC,
    phi_CK,
    phi_CP,
    phi_KC,
    phi_KK,
    phi_KP,
    phi_PC,
    phi_PK,
    phi_PP,
    phi_biclique_biclique,
    phi_bip_K,
    phi_bip_oddcycle,
    phi_bipartite_bipartite,
    phi_K_bip,
    phi_oddcycle_bip,
    registry_table,
)

P = Variant.AS_PRINTED
D = Variant.PROOF_DERIVED


def test_pp():
    assert phi_PP(1, 1) == 2
    assert phi_PP(2, 1, P) == Fraction(5, 2)
    assert phi_PP(2, 1, D) == 3
    assert phi_PP(2, 2) == 5
    # variants agree off the (even, odd) case
    for m in range(1, 7):
        for n in range(1, 7):
            if not (m % 2 == 0 and n % 2 == 1):
                assert phi_PP(m, n, P) == phi_PP(m, n, D)


def test_cp():
    assert phi_CP(3, 3, P) == Fraction(27, 4)
    assert phi_CP(3, 3, D) == 8
    assert phi_CP(4, 2, D) == 6
    assert phi_CP(4, 3, D) == 10
    # printed (even, odd) guard repeats m; derived uses n
    assert phi_CP(4, 3, P) == 1 + Fraction(4 * 11, 4)


def test_pc():
    assert phi_PC(1, 3) == 6
    assert phi_PC(1, 4) == 6
    assert phi_PC(2, 4) == 8


def test_cc():
    assert phi_CC(4, 4) == 12
    assert phi_CC(3, 3) == 10
    assert phi_CC(3, 4) == 9


def test_complete_families():
    assert phi_KK(2, 2) == 2
    assert phi_KK(3, 2) == 4
    assert phi_KK(3, 3) == 10
    assert phi_PK(1, 2) == 2
    assert phi_KP(2, 1) == 2
    assert phi_KP(3, 2) == 5
    assert phi_CK(3, 2) == 3
    assert phi_CK(4, 2) == 4
    assert phi_KC(2, 3) == 5


def test_bipartite_families():
    assert phi_biclique_biclique(1, 1, 1, 1) == 2
    assert phi_biclique_biclique(1, 2, 1, 1) == 3
    assert phi_bipartite_bipartite(1, 2, 1, 1) == 3
    assert phi_oddcycle_bip(3, 1, 1, 1) == 3
    assert phi_bip_oddcycle(1, 1, 1, 3) == 5
    assert phi_oddcycle_bip(5, 1, 2, 2) == 7
    assert phi_K_bip(2, 1, 1, 1) == 2
    assert phi_bip_K(1, 1, 1, 2) == 1
    assert phi_K_bip(3, 1, 2, 2) == 5


def test_domain_errors():
    with pytest.raises(ValueError):
        phi_biclique_biclique(2, 1, 1, 1)  # needs m1 <= n1
    with pytest.raises(ValueError):
        phi_oddcycle_bip(4, 1, 1, 1)  # needs odd cycle
    with pytest.raises(ValueError):
        phi_oddcycle_bip(3, 2, 1, 1)  # needs r <= s
    with pytest.raises(ValueError):
        phi_PP(0, 1)
    with pytest.raises(ValueError):
        phi_CP(2, 1)


@pytest.mark.parametrize("fn", [phi_PP, phi_CC])
def test_parity_dispatch_total(fn):
    lo = 1 if fn is phi_PP else 3
    for m in range(lo, lo + 6):
        for n in range(lo, lo + 6):
            for variant in (P, D):
                value = fn(m, n, variant)
                assert value > 0


def test_biclique_equals_general_form():
    for m1 in range(1, 4):
        for n1 in range(m1, 4):
            for m2 in range(1, 4):
                for n2 in range(m2, 4):
                    special = phi_biclique_biclique(m1, n1, m2, n2)
                    general = phi_bipartite_bipartite(m1, n1, m2 * n2, m2)
                    assert special == general


def test_classify():
    assert classify(Fraction(5, 2), None, 3) is Status.NON_INTEGER
    assert classify(Fraction(3), None, 3) is Status.EXACT_MATCH
    assert classify(Fraction(5), None, 4) is Status.UPPER_BOUND
    assert classify(Fraction(3), None, 4) is Status.UNDERESTIMATE
    assert classify(Fraction(5), Fraction(3), 4) is Status.UNDERESTIMATE
    assert classify(Fraction(3), None, None) is Status.NOT_COMPARED


def test_registry_covers_all_theorems():
    assert set(REGISTRY) == set(TheoremId)
    table = registry_table()
    assert len(table) == len(TheoremId)
    by_id = {row["id"]: row for row in table}
    assert by_id["PP"]["variants"] == ["printed", "derived"]
    assert by_id["CC"]["variants"] == ["printed"]
    for theorem_id, theorem in REGISTRY.items():
        assert len(by_id[theorem_id.value]["params"]) == len(theorem.param_names)


def test_registry_operands_match_evaluators():
    theorem = REGISTRY[TheoremId.KK]
    base, copy = theorem.corona_operands(3, 2)
    assert str(base) == "complete:3"
    assert str(copy) == "complete:2"
