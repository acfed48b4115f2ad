"""Command-line front end.

Graph spec-string grammar:

    spec     := family | corona | file
    family   := "path:" INT | "cycle:" INT | "complete:" INT
              | "biclique:" INT "," INT
    corona   := "corona(" spec "," spec ")"
    file     := "file:" PATH          (DIMACS-like edge list)

Exit codes: 0 success, 1 usage or parse error, 2 infeasible or invalid
input, 3 strict-mode conformance failure.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from sparing.formulas import REGISTRY, TheoremId, Variant, registry_table
from sparing.graphs import (
    CoronaLayout,
    Graph,
    GraphError,
    build_family,
    corona,
    read_dimacs,
    write_dimacs,
)
from sparing.harness import (
    GridConfigError,
    GridSpec,
    rows_to_csv,
    rows_to_json,
    run_grid,
    summarize,
)
from sparing.setlab import build_witness, labeling_to_json
from sparing.solver import SizeError, sparing_bruteforce, sparing_corona, sparing_mwis

GRAMMAR_HELP = __doc__.split("Graph spec-string grammar:", 1)[1]


class SpecParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"at position {position}: {message}")
        self.position = position


class _SpecParser:
    """Recursive-descent parser for the spec-string grammar."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def parse(self) -> Graph:
        g = self._spec()
        if self.pos != len(self.text):
            raise SpecParseError(f"trailing input {self.text[self.pos:]!r}", self.pos)
        return g

    def _spec(self) -> Graph:
        for prefix in ("path:", "cycle:", "complete:"):
            if self.text.startswith(prefix, self.pos):
                self.pos += len(prefix)
                kind = {"path:": "Path", "cycle:": "Cycle", "complete:": "Complete"}[
                    prefix
                ]
                from sparing.graphs import FamilySpec

                return build_family(FamilySpec(kind, (self._int(),)))
        if self.text.startswith("biclique:", self.pos):
            self.pos += len("biclique:")
            r = self._int()
            self._expect(",")
            s = self._int()
            from sparing.graphs import biclique_spec

            return build_family(biclique_spec(r, s))
        if self.text.startswith("corona(", self.pos):
            self.pos += len("corona(")
            g1 = self._spec()
            self._expect(",")
            g2 = self._spec()
            self._expect(")")
            return corona(g1, g2).graph
        if self.text.startswith("file:", self.pos):
            self.pos += len("file:")
            path = self.text[self.pos:]
            self.pos = len(self.text)
            try:
                return read_dimacs(Path(path).read_text(encoding="utf-8"))
            except OSError as exc:
                raise SpecParseError(str(exc), self.pos - len(path))
        raise SpecParseError(
            "expected path:, cycle:, complete:, biclique:, corona( or file:", self.pos
        )

    def _int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise SpecParseError("expected an integer", start)
        return int(self.text[start:self.pos])

    def _expect(self, token: str) -> None:
        if not self.text.startswith(token, self.pos):
            raise SpecParseError(f"expected {token!r}", self.pos)
        self.pos += len(token)


def parse_spec(text: str) -> Graph:
    return _SpecParser(text).parse()


def _corona_layout_of(text: str) -> Optional[CoronaLayout]:
    """Re-parse a top-level corona so the decomposition solver can run."""
    if not text.startswith("corona(") or not text.endswith(")"):
        return None
    parser = _SpecParser(text)
    parser.pos = len("corona(")
    g1 = parser._spec()
    parser._expect(",")
    g2 = parser._spec()
    parser._expect(")")
    return corona(g1, g2)


def _cmd_gen(args: argparse.Namespace) -> int:
    g = parse_spec(args.spec)
    text = write_dimacs(g)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_sparing(args: argparse.Namespace) -> int:
    g = parse_spec(args.spec)
    if args.method == "bf":
        result = sparing_bruteforce(g)
    elif args.method == "corona":
        layout = _corona_layout_of(args.spec)
        if layout is None:
            print("error: --method corona needs a corona(...) spec", file=sys.stderr)
            return 2
        result = sparing_corona(layout)
        g = layout.graph
    else:
        result = sparing_mwis(g)
    print(result.to_json(g))
    if args.witness:
        labeling = build_witness(g, result.witness)
        Path(args.witness).write_text(
            labeling_to_json(labeling) + "\n", encoding="utf-8"
        )
    return 0


def _cmd_formula(args: argparse.Namespace) -> int:
    try:
        theorem = REGISTRY[TheoremId(args.theorem)]
    except ValueError:
        known = ", ".join(t.value for t in TheoremId)
        print(f"error: unknown theorem {args.theorem!r} (one of: {known})",
              file=sys.stderr)
        return 1
    if len(args.params) != len(theorem.param_names):
        print(
            f"error: {theorem.theorem_id.value} takes parameters "
            f"{' '.join(theorem.param_names)}",
            file=sys.stderr,
        )
        return 1
    variant = Variant.PROOF_DERIVED if args.variant == "derived" else Variant.AS_PRINTED
    value: Fraction = theorem.evaluate(*args.params, variant=variant)
    print(value)
    return 0


def _cmd_registry(args: argparse.Namespace) -> int:
    import json

    print(json.dumps(registry_table(), indent=2))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.grid == "defaults":
        spec = GridSpec()
    else:
        spec = GridSpec.from_json(Path(args.grid).read_text(encoding="utf-8"))
    witness_dir = Path(args.witness_dir) if args.witness_dir else None
    rows = run_grid(spec, witness_dir=witness_dir)
    text = rows_to_csv(rows) if args.out == "csv" else rows_to_json(rows)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.strict and not summarize(rows).paper_consistent:
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sparing",
        description="Exact sparing numbers of graphs and corona products.",
        epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="write a graph as DIMACS-like text")
    p_gen.add_argument("spec")
    p_gen.add_argument("--output", "-o", help="output file (default stdout)")
    p_gen.set_defaults(func=_cmd_gen)

    p_sp = sub.add_parser("sparing", help="solve one instance, print result JSON")
    p_sp.add_argument("spec")
    p_sp.add_argument("--method", choices=["bf", "mwis", "corona"], default="mwis")
    p_sp.add_argument("--witness", help="write the witness labeling JSON here")
    p_sp.set_defaults(func=_cmd_sparing)

    p_f = sub.add_parser("formula", help="evaluate a closed-form value")
    p_f.add_argument("theorem")
    p_f.add_argument("params", nargs="*", type=int)
    p_f.add_argument("--variant", choices=["printed", "derived"], default="printed")
    p_f.set_defaults(func=_cmd_formula)

    p_r = sub.add_parser("registry", help="print the theorem table as JSON")
    p_r.set_defaults(func=_cmd_registry)

    p_v = sub.add_parser("verify", help="run the conformance grid")
    p_v.add_argument("--grid", default="defaults",
                     help="'defaults' or a JSON grid-spec file")
    p_v.add_argument("--strict", action="store_true",
                     help="exit 3 if any Underestimate/NonInteger row exists")
    p_v.add_argument("--out", choices=["csv", "json"], default="csv")
    p_v.add_argument("--output", "-o", help="output file (default stdout)")
    p_v.add_argument("--witness-dir", help="emit validated witness files here")
    p_v.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GridConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (GraphError, SizeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
