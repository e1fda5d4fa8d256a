"""Command-line interface.

    macring betti  COMPLEX.json [--format table|json] [--force]
    macring ring   COMPLEX.json [--format table|json]
    macring cells  COMPLEX.json [--format table|json]
    macring verify COMPLEX.json --hochster --homotopy --diagonal --axioms [--truncate N]

Exit status: 0 success, 1 unreadable input, 2 a verification suite failed,
3 an internal inconsistency was detected (for instance d² != 0).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .cellular import cells
from .cohomology import BigradedTable, bigraded_cohomology, format_series, poincare_series, ring_presentation
from .intlinalg import AbelianGroup, InconsistentComplex
from .simplicial import ComplexFormatError, load_complex
from .verify import SUITES, run_suites

SCHEMA = "macring/1"
BETTI_MAX_M = 20

EXIT_OK, EXIT_PARSE, EXIT_VERIFY, EXIT_INTERNAL = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    input: str
    format: str = "table"
    verify: set[str] = field(default_factory=set)
    truncate: int | None = None
    force: bool = False
    samples: int = 10_000
    seed: int = 0

    def __post_init__(self):
        if self.command not in ("betti", "ring", "verify", "cells"):
            raise ValueError(f"unknown command {self.command!r}")
        if self.format not in ("table", "json"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.command == "verify" and not self.verify:
            raise ValueError("verify needs at least one of --" + ", --".join(SUITES))


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def betti_from_dict(doc: dict) -> dict[tuple[int, int], AbelianGroup]:
    """Inverse of the ``betti`` JSON serialization, keyed by ``(i, j2)``."""
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    return {(e["i"], e["j2"]): AbelianGroup(e["rank"], tuple(e["torsion"])) for e in doc["entries"]}


def _betti_table(table: BigradedTable) -> str:
    lines = [f"m = {table.m}", f"{'i':>3} {'2j':>4} {'deg':>4}  group"]
    for (i, j2), e in table.entries.items():
        if not e.group.is_zero():
            lines.append(f"{i:>3} {j2:>4} {e.degree:>4}  {e.group}")
    lines.append("Poincare series: " + format_series(poincare_series(table)))
    return "\n".join(lines) + "\n"


def _ring_table(pres) -> str:
    lines = [f"m = {pres.m}", "generators:"]
    for n, g in enumerate(pres.generators):
        order = "inf" if g.order == 0 else str(g.order)
        rep = " + ".join(f"{c}*{mono!r}" for mono, c in sorted(
            g.representative.items(), key=lambda kv: kv[0].sort_key()))
        lines.append(f"  x{n}: bidegree ({-g.i},{g.j2}) deg {g.degree} order {order}  [{rep}]")
    lines.append("nonzero products:")
    for (a, b), res in sorted(pres.products.items()):
        if res:
            rhs = " + ".join(f"{c}*x{k}" for k, c in sorted(res.items()))
            lines.append(f"  x{a} * x{b} = {rhs}")
    return "\n".join(lines) + "\n"


def run(config: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        K = load_complex(config.input)
    except (OSError, ComplexFormatError) as e:
        err.write(f"error: {config.input}: {e}\n")
        return EXIT_PARSE

    try:
        if config.command == "betti":
            if K.m > BETTI_MAX_M and not config.force:
                err.write(f"error: m = {K.m} > {BETTI_MAX_M} means 2^m support blocks; pass --force\n")
                return EXIT_PARSE
            table = bigraded_cohomology(K, representatives=False)
            out.write(dumps(table.to_dict()) if config.format == "json" else _betti_table(table))
        elif config.command == "ring":
            pres = ring_presentation(K)
            out.write(dumps(pres.to_dict()) if config.format == "json" else _ring_table(pres))
        elif config.command == "cells":
            census = cells(K)
            if config.format == "json":
                doc = {"schema": SCHEMA, "m": K.m, "cells": [
                    {"dim": d, "count": len(cs), "words": [c.word(K.m) for c in cs]}
                    for d, cs in census.items()]}
                out.write(dumps(doc))
            else:
                out.write("".join(f"dim {d}: {len(cs)}\n" for d, cs in census.items()))
        else:
            results = run_suites(K, config.verify, config.truncate, config.samples, config.seed)
            if config.format == "json":
                out.write(dumps({"schema": SCHEMA, "suites": [r.to_dict() for r in results]}))
            else:
                for r in results:
                    extra = ""
                    if "checked_through_degree" in r.detail:
                        extra = f", identity checked through degree {r.detail['checked_through_degree']}"
                    out.write(f"{r.name}: {'PASS' if r.passed else 'FAIL'} ({r.checks} checks{extra})\n")
                    for f in r.failures:
                        out.write(f"  {f}\n")
            if not all(r.passed for r in results):
                return EXIT_VERIFY
    except InconsistentComplex as e:
        err.write(f"internal inconsistency: {e}\n")
        return EXIT_INTERNAL
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors share exit status 1 with unreadable input; 2 means a failed suite
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="macring", description="Cohomology rings of moment-angle complexes.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, help_ in (("betti", "bigraded cohomology groups"),
                        ("ring", "generators and products of the cohomology ring"),
                        ("cells", "cell census of the moment-angle complex"),
                        ("verify", "run verification suites")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("input", help="complex in JSON: {\"m\": M, \"facets\": [[...], ...]}")
        sp.add_argument("--format", choices=("table", "json"), default="table")
        if name == "betti":
            sp.add_argument("--force", action="store_true", help=f"allow m > {BETTI_MAX_M}")
        if name == "verify":
            for suite in SUITES:
                sp.add_argument(f"--{suite}", action="store_true")
            sp.add_argument("--truncate", type=int, default=None,
                            help="degree truncation for the homotopy check (default 2m+2)")
            sp.add_argument("--samples", type=int, default=10_000)
            sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    chosen = {s for s in SUITES if getattr(args, s, False)}
    try:
        config = RunConfig(
            command=args.command,
            input=args.input,
            format=args.format,
            verify=chosen,
            truncate=getattr(args, "truncate", None),
            force=getattr(args, "force", False),
            samples=getattr(args, "samples", 10_000),
            seed=getattr(args, "seed", 0),
        )
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_PARSE
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
