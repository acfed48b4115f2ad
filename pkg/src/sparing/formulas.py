"""Closed-form sparing-number evaluators for corona products.

Each theorem is evaluated in two variants: AS_PRINTED transcribes the
published formula verbatim, typos included, and returns an exact
rational so a non-integer value is detected instead of rounded;
PROOF_DERIVED re-encodes the unsimplified case arithmetic of the
corresponding constructive argument.  The two coincide for most
theorems.

Path parameters count EDGES (a path with parameter m has m+1 vertices).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable

from sparing.graphs import (
    FamilySpec,
    biclique_spec,
    complete_spec,
    cycle_spec,
    path_spec,
)


class Variant(str, Enum):
    AS_PRINTED = "printed"
    PROOF_DERIVED = "derived"


class TheoremId(str, Enum):
    PP = "PP"
    CP = "CP"
    PC = "PC"
    CC = "CC"
    KK = "KK"
    PK = "PK"
    KP = "KP"
    CK = "CK"
    KC = "KC"
    BICLIQUE_BICLIQUE = "BicliqueBiclique"
    BIPARTITE_BIPARTITE = "BipartiteBipartite"
    ODDCYCLE_BIP = "OddCycleBip"
    BIP_ODDCYCLE = "BipOddCycle"
    K_BIP = "KBip"
    BIP_K = "BipK"


class Status(str, Enum):
    EXACT_MATCH = "ExactMatch"
    UPPER_BOUND = "UpperBound"
    UNDERESTIMATE = "Underestimate"
    NON_INTEGER = "NonInteger"
    NOT_COMPARED = "NotCompared"


F = Fraction


def phi_PP(m: int, n: int, variant: Variant = Variant.AS_PRINTED) -> Fraction:
    """Corona of two paths (m, n edge counts)."""
    if m < 1 or n < 1:
        raise ValueError("path edge counts must be >= 1")
    if m % 2 == 1 and n % 2 == 1:
        return F(m + 1) * (3 * n + 1) / 4
    if m % 2 == 1:
        return F(3, 4) * (m + 1) * n
    if n % 2 == 1:
        if variant is Variant.PROOF_DERIVED:
            # Unsimplified case sum: m/2 uniform copies of n edges, plus
            # (m+2)/2 alternating copies each forcing (n+1)/2 join edges.
            return F(m, 2) * n + F(m + 2, 2) * F(n + 1, 2)
        return F(3 * m * n + 2 * n + m, 4)
    return F(n) * (3 * m + 4) / 4


def phi_CP(m: int, n: int, variant: Variant = Variant.AS_PRINTED) -> Fraction:
    """Cycle (length m) corona path (n edges).

    The printed case guards do not match the proof's cases; the derived
    variant follows the proof text instead.
    """
    if m < 3:
        raise ValueError("cycle length must be >= 3")
    if n < 1:
        raise ValueError("path edge count must be >= 1")
    if variant is Variant.AS_PRINTED:
        if m % 2 == 1 and n % 2 == 1:
            return F(3, 4) * m * n
        if m % 2 == 1:
            return F(m) * (3 * n + 1) / 4
        if n % 2 == 1:
            # Verbatim, with the published formula's repeated m.
            return 1 + F(m) * (3 * m - 1) / 4
        return F(n * (3 * m + 1) + (m + 5), 4)
    if m % 2 == 0 and n % 2 == 0:
        return F(3, 4) * m * n
    if m % 2 == 0:
        return F(m) * (3 * n + 1) / 4
    if n % 2 == 0:
        return 1 + F(n) * (3 * m - 1) / 4
    return 1 + F(m - 1, 2) * n + F(m + 1, 2) * F(n + 1, 2)


def phi_PC(n: int, m: int, variant: Variant = Variant.AS_PRINTED) -> Fraction:
    """Path (n edges) corona cycle (length m); printed equals derived."""
    if n < 1:
        raise ValueError("path edge count must be >= 1")
    if m < 3:
        raise ValueError("cycle length must be >= 3")
    if m % 2 == 1 and n % 2 == 1:
        return F(3, 4) * (m + 1) * (n + 1)
    if n % 2 == 1:
        return F(3, 4) * m * (n + 1)
    if m % 2 == 1:
        return F(3 * n * (m + 1) + 2 * (m + 3), 4)
    return F(m) * (3 * n + 2) / 4


def phi_CC(m: int, n: int, variant: Variant = Variant.AS_PRINTED) -> Fraction:
    """Corona of two cycles; single variant."""
    if m < 3 or n < 3:
        raise ValueError("cycle lengths must be >= 3")
    if m % 2 == 0 and n % 2 == 0:
        return F(3, 4) * m * n
    if m % 2 == 0:
        return F(3, 4) * m * (n + 1)
    if n % 2 == 0:
        return 1 + F(3 * m - 1) * n / 4
    return 2 + F(3 * m - 1) * (n + 1) / 4


def phi_KK(m: int, n: int, variant: Variant = Variant.AS_PRINTED) -> Fraction:
    """Corona of two complete graphs."""
    if m < 1 or n < 1:
        raise ValueError("orders must be >= 1")
    return F((m - 1) * (m - 2) + m * n * (n - 1), 2)


def phi_PK(m: int, n: int, variant: Variant = Variant.AS_PRINTED) -> Fraction:
    """Path (m edges) corona complete (order n)."""
    if m < 1 or n < 1:
        raise ValueError("parameters must be >= 1")
    return F(n * (n - 1) * (m + 1), 2)


def phi_KP(n: int, m: int, variant: Variant = Variant.AS_PRINTED) -> Fraction:
    """Complete (order n) corona path (m edges)."""
    if m < 1 or n < 1:
        raise ValueError("parameters must be >= 1")
    if m % 2 == 1:
        return F((n - 1) ** 2 + m * (n + 1), 2)
    return F((n - 1) * (n - 2) + m * (n + 1), 2)


def phi_CK(m: int, n: int, variant: Variant = Variant.AS_PRINTED) -> Fraction:
    """Cycle (length m) corona complete (order n)."""
    if m < 3:
        raise ValueError("cycle length must be >= 3")
    if n < 1:
        raise ValueError("order must be >= 1")
    return F(m * n * (n - 1), 2)


def phi_KC(n: int, m: int, variant: Variant = Variant.AS_PRINTED) -> Fraction:
    """Complete (order n) corona cycle (length m)."""
    if m < 3:
        raise ValueError("cycle length must be >= 3")
    if n < 1:
        raise ValueError("order must be >= 1")
    if m % 2 == 1:
        return F((n - 1) ** 2 + m * (n + 1), 2)
    return F((n - 1) * (n - 2) + m * (n + 1), 2)


def phi_biclique_biclique(
    m1: int, n1: int, m2: int, n2: int, variant: Variant = Variant.AS_PRINTED
) -> Fraction:
    """Corona of two complete bipartite graphs, smaller parts first."""
    if min(m1, n1, m2, n2) < 1:
        raise ValueError("part sizes must be >= 1")
    if m1 > n1 or m2 > n2:
        raise ValueError("theorem requires part sizes m_i <= n_i")
    return F(m2 * (m1 * n2 + n1))


def phi_bipartite_bipartite(
    u1: int, v1: int, e2: int, u2: int, variant: Variant = Variant.AS_PRINTED
) -> Fraction:
    """General bipartite corona: |U1||E2| + |V1||U2| with |U_i| <= |V_i|."""
    if min(u1, v1, u2) < 1 or e2 < 0:
        raise ValueError("part sizes must be >= 1")
    if u1 > v1:
        raise ValueError("theorem requires |U1| <= |V1|")
    return F(u1 * e2 + v1 * u2)


def phi_oddcycle_bip(
    n: int, r: int, s: int, q: int, variant: Variant = Variant.AS_PRINTED
) -> Fraction:
    """Odd cycle (length n) corona bipartite graph (parts r <= s, q edges)."""
    _check_bip_stats(n, r, s, q, require_odd=True)
    return F((n - 1) * q + (n + 1) * r, 2)


def phi_bip_oddcycle(
    r: int, s: int, q: int, n: int, variant: Variant = Variant.AS_PRINTED
) -> Fraction:
    """Bipartite graph corona odd cycle (length n)."""
    _check_bip_stats(n, r, s, q, require_odd=True)
    return F(2 * r * n + s * (n + 1), 2)


def phi_K_bip(
    n: int, r: int, s: int, q: int, variant: Variant = Variant.AS_PRINTED
) -> Fraction:
    """Complete graph (order n) corona bipartite graph."""
    _check_bip_stats(n, r, s, q, require_odd=False, min_n=1)
    return F((n - 1) * (n - 2) + 2 * q + 2 * r * (n - 1), 2)


def phi_bip_K(
    r: int, s: int, q: int, n: int, variant: Variant = Variant.AS_PRINTED
) -> Fraction:
    """Bipartite graph corona complete graph (order n)."""
    _check_bip_stats(n, r, s, q, require_odd=False, min_n=1)
    return F(n - 1) * (r * n + s * (n - 2)) / 2


def _check_bip_stats(
    n: int, r: int, s: int, q: int, require_odd: bool, min_n: int = 3
) -> None:
    if n < min_n:
        raise ValueError(f"parameter n must be >= {min_n}, got {n}")
    if require_odd and n % 2 == 0:
        raise ValueError(f"theorem requires odd n, got {n}")
    if r < 1 or s < 1:
        raise ValueError("part sizes must be >= 1")
    if r > s:
        raise ValueError("theorem assumes r <= s")
    if q > r * s:
        raise ValueError(f"{q} edges exceeds the bipartite maximum {r * s}")


@dataclass(frozen=True)
class Theorem:
    """Registry row tying an evaluator to its corona construction."""

    theorem_id: TheoremId
    param_names: tuple[str, ...]
    evaluate: Callable[..., Fraction]
    corona_operands: Callable[..., tuple[FamilySpec, FamilySpec]]
    has_derived_variant: bool = False


REGISTRY: dict[TheoremId, Theorem] = {
    TheoremId.PP: Theorem(
        TheoremId.PP,
        ("m", "n"),
        phi_PP,
        lambda m, n: (path_spec(m), path_spec(n)),
        has_derived_variant=True,
    ),
    TheoremId.CP: Theorem(
        TheoremId.CP,
        ("m", "n"),
        phi_CP,
        lambda m, n: (cycle_spec(m), path_spec(n)),
        has_derived_variant=True,
    ),
    TheoremId.PC: Theorem(
        TheoremId.PC,
        ("n", "m"),
        phi_PC,
        lambda n, m: (path_spec(n), cycle_spec(m)),
    ),
    TheoremId.CC: Theorem(
        TheoremId.CC,
        ("m", "n"),
        phi_CC,
        lambda m, n: (cycle_spec(m), cycle_spec(n)),
    ),
    TheoremId.KK: Theorem(
        TheoremId.KK,
        ("m", "n"),
        phi_KK,
        lambda m, n: (complete_spec(m), complete_spec(n)),
    ),
    TheoremId.PK: Theorem(
        TheoremId.PK,
        ("m", "n"),
        phi_PK,
        lambda m, n: (path_spec(m), complete_spec(n)),
    ),
    TheoremId.KP: Theorem(
        TheoremId.KP,
        ("n", "m"),
        phi_KP,
        lambda n, m: (complete_spec(n), path_spec(m)),
    ),
    TheoremId.CK: Theorem(
        TheoremId.CK,
        ("m", "n"),
        phi_CK,
        lambda m, n: (cycle_spec(m), complete_spec(n)),
    ),
    TheoremId.KC: Theorem(
        TheoremId.KC,
        ("n", "m"),
        phi_KC,
        lambda n, m: (complete_spec(n), cycle_spec(m)),
    ),
    TheoremId.BICLIQUE_BICLIQUE: Theorem(
        TheoremId.BICLIQUE_BICLIQUE,
        ("m1", "n1", "m2", "n2"),
        phi_biclique_biclique,
        lambda m1, n1, m2, n2: (biclique_spec(m1, n1), biclique_spec(m2, n2)),
    ),
    TheoremId.BIPARTITE_BIPARTITE: Theorem(
        TheoremId.BIPARTITE_BIPARTITE,
        ("u1", "v1", "u2", "v2"),
        lambda u1, v1, u2, v2, variant=Variant.AS_PRINTED: phi_bipartite_bipartite(
            u1, v1, u2 * v2, u2, variant
        ),
        lambda u1, v1, u2, v2: (biclique_spec(u1, v1), biclique_spec(u2, v2)),
    ),
    TheoremId.ODDCYCLE_BIP: Theorem(
        TheoremId.ODDCYCLE_BIP,
        ("n", "r", "s"),
        lambda n, r, s, variant=Variant.AS_PRINTED: phi_oddcycle_bip(
            n, r, s, r * s, variant
        ),
        lambda n, r, s: (cycle_spec(n), biclique_spec(r, s)),
    ),
    TheoremId.BIP_ODDCYCLE: Theorem(
        TheoremId.BIP_ODDCYCLE,
        ("r", "s", "n"),
        lambda r, s, n, variant=Variant.AS_PRINTED: phi_bip_oddcycle(
            r, s, r * s, n, variant
        ),
        lambda r, s, n: (biclique_spec(r, s), cycle_spec(n)),
    ),
    TheoremId.K_BIP: Theorem(
        TheoremId.K_BIP,
        ("n", "r", "s"),
        lambda n, r, s, variant=Variant.AS_PRINTED: phi_K_bip(n, r, s, r * s, variant),
        lambda n, r, s: (complete_spec(n), biclique_spec(r, s)),
    ),
    TheoremId.BIP_K: Theorem(
        TheoremId.BIP_K,
        ("r", "s", "n"),
        lambda r, s, n, variant=Variant.AS_PRINTED: phi_bip_K(r, s, r * s, n, variant),
        lambda r, s, n: (biclique_spec(r, s), complete_spec(n)),
    ),
}


def registry_table() -> list[dict]:
    """Machine-readable theorem table for the CLI."""
    return [
        {
            "id": t.theorem_id.value,
            "params": list(t.param_names),
            "variants": (
                ["printed", "derived"] if t.has_derived_variant else ["printed"]
            ),
        }
        for t in REGISTRY.values()
    ]


def classify(
    as_printed: Fraction,
    proof_derived: Fraction | None,
    oracle: int | None,
) -> Status:
    """Compare formula values against the exact solver's result.

    The sparing number is a minimum, so a correct constructive theorem
    can only overestimate; any compared value below the oracle is a
    wrong claim, not a bound.
    """
    if as_printed.denominator != 1:
        return Status.NON_INTEGER
    if oracle is None:
        return Status.NOT_COMPARED
    if as_printed < oracle or (proof_derived is not None and proof_derived < oracle):
        return Status.UNDERESTIMATE
    if as_printed == oracle:
        return Status.EXACT_MATCH
    return Status.UPPER_BOUND
