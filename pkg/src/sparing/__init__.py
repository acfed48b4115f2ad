"""Exact sparing numbers of graphs and corona products.

A graph admits a weak integer-additive set-indexer exactly when the
vertices carrying non-singleton labels form an independent set; the
sparing number is the minimum number of edges whose endpoints both carry
singleton labels.  This package builds graph families and corona
products, solves the resulting minimization exactly, constructs
verifiable witness labelings, and conformance-tests the known
closed-form values against a brute-force oracle.
"""

from sparing.graphs import (
    CoronaLayout,
    FamilySpec,
    Graph,
    build_family,
    corona,
    is_bipartite,
    is_independent,
    read_dimacs,
    write_dimacs,
)
from sparing.setlab import (
    Assignment,
    Labeling,
    ValidationReport,
    build_witness,
    count_mono_edges,
    mian_chowla,
    scale,
    sumset,
    validate_labeling,
)
from sparing.solver import (
    SparingResult,
    sparing_bruteforce,
    sparing_corona,
    sparing_mwis,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "FamilySpec",
    "CoronaLayout",
    "build_family",
    "corona",
    "is_bipartite",
    "is_independent",
    "read_dimacs",
    "write_dimacs",
    "Assignment",
    "Labeling",
    "ValidationReport",
    "sumset",
    "scale",
    "mian_chowla",
    "build_witness",
    "validate_labeling",
    "count_mono_edges",
    "SparingResult",
    "sparing_bruteforce",
    "sparing_mwis",
    "sparing_corona",
]
