"""Command line interface.

    opoly check --n 4 --fn mono:2
    opoly check --family segre --n 5 --geometry
    opoly sums --n 3 --fn mono:1
    opoly spectrum --n 3 --fn mono:3 [--dense]
    opoly search --n 4 [--random 100 --seed 1]
    opoly catalog --n 5

Exit codes: 0 success (for ``check``: o-polynomial), 1 not an o-polynomial,
2 usage or resource error.  Reports go to stdout (or ``--out``) as JSON;
diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from opoly import catalog
from opoly.checker import check_direct, check_walsh, full_report, sums_report
from opoly.field import FieldError, FieldSpec, parse_modulus
from opoly.func import FunctionError, VecFunc, from_monomial, from_table, parse_function
from opoly.geometry import hyperoval_points, write_points_csv
from opoly.spectrum import ResourceError, write_csv

SEARCH_MONOMIAL_MAX_N = 8
# candidates * 2^(2n), roughly the cost of check_direct over a random batch
SEARCH_RANDOM_BUDGET = 2**30


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: Optional[int] = None
    modulus: Optional[str] = None
    fn: Optional[str] = None
    family: Optional[str] = None
    k: Optional[int] = None
    geometry: bool = False
    dump_points: Optional[str] = None
    dense: bool = False
    method: str = "stream"
    threads: int = field(default_factory=lambda: os.cpu_count() or 1)
    out: Optional[str] = None
    seed: int = 0
    random: Optional[int] = None

    def field_spec(self) -> FieldSpec:
        if self.modulus is not None:
            return parse_modulus(self.modulus, self.n)
        if self.n is None:
            raise UsageError("--n or --modulus is required")
        return FieldSpec.default(self.n)

    def function(self) -> VecFunc:
        if self.family is not None:
            if self.fn is not None:
                raise UsageError("give either --fn or --family, not both")
            if self.modulus is not None:
                raise UsageError("--family always uses the default modulus")
            if self.n is None:
                raise UsageError("--family needs --n")
            return catalog.family(self.family, self.n, self.k)
        if self.fn is None:
            raise UsageError("--fn or --family is required")
        return parse_function(self.field_spec(), self.fn)


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def run_check(cfg: RunConfig) -> int:
    F = cfg.function()
    report = full_report(F, cfg.geometry, cfg.method, cfg.threads)
    if cfg.dump_points:
        with open(cfg.dump_points, "w") as fh:
            write_points_csv(hyperoval_points(F), fh)
    _emit(report.to_json() + "\n", cfg)
    return 0 if report.is_o_polynomial else 1


def run_sums(cfg: RunConfig) -> int:
    _emit(_dumps(sums_report(cfg.function(), cfg.method, cfg.threads)), cfg)
    return 0


def run_spectrum(cfg: RunConfig) -> int:
    buf = io.StringIO()
    write_csv(cfg.function(), buf, cfg.dense)
    _emit(buf.getvalue(), cfg)
    return 0


def search_monomials(spec: FieldSpec) -> list[int]:
    if spec.n > SEARCH_MONOMIAL_MAX_N:
        raise ResourceError(
            f"exhaustive monomial search capped at n <= {SEARCH_MONOMIAL_MAX_N}"
        )
    hits = []
    for d in range(1, spec.order - 1):
        F = from_monomial(spec, d)
        if check_direct(F):
            _confirm(F)
            hits.append(d)
    return hits


def search_random(spec: FieldSpec, count: int, seed: int) -> list[list[int]]:
    if count * spec.order**2 > SEARCH_RANDOM_BUDGET:
        raise ResourceError(
            f"{count} random tables at n = {spec.n} exceed the search budget"
        )
    rng = np.random.default_rng(seed)
    hits = []
    for _ in range(count):
        F = from_table(spec, rng.integers(0, spec.order, size=spec.order))
        if check_direct(F):
            _confirm(F)
            hits.append(F.tolist())
    return hits


def _confirm(F: VecFunc) -> None:
    if not check_walsh(F):
        raise RuntimeError(f"direct and Walsh tests disagree on {F.label}")


def run_search(cfg: RunConfig) -> int:
    spec = cfg.field_spec()
    out = {"n": spec.n, "modulus": f"{spec.modulus:#x}"}
    if cfg.random is None:
        out["mode"] = "monomial"
        out["hits"] = search_monomials(spec)
    else:
        out["mode"] = "random"
        out["seed"] = cfg.seed
        out["count"] = cfg.random
        out["hits"] = [[f"{v:x}" for v in t] for t in search_random(spec, cfg.random, cfg.seed)]
    _emit(_dumps(out), cfg)
    return 0


def run_catalog(cfg: RunConfig) -> int:
    if cfg.n is None:
        raise UsageError("--n is required")
    items = []
    for name, k in catalog.list_families(cfg.n):
        items.append(
            {
                "family": name,
                "param": k,
                "exponents": catalog.family_exponents(name, cfg.n, k),
            }
        )
    _emit(_dumps({"n": cfg.n, "families": items}), cfg)
    return 0


COMMANDS = {
    "check": run_check,
    "sums": run_sums,
    "spectrum": run_spectrum,
    "search": run_search,
    "catalog": run_catalog,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="extension degree (1..16)")
    common.add_argument("--modulus", help="reduction polynomial as hex bitmask, e.g. 0x13")
    common.add_argument("--fn", help="mono:<d> | poly:<exp>:<hex>[,...] | table:@<path>")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument(
        "--method",
        choices=("stream", "spectrum"),
        default="stream",
        help="how Walsh diagonals are obtained (stream rows or full spectrum)",
    )

    parser = argparse.ArgumentParser(
        prog="opoly", description="Test o-polynomials over GF(2^n)."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="run every characterization")
    p.add_argument("--family", help="catalog family instead of --fn")
    p.add_argument("--k", type=int, help="parameter for the translation family")
    p.add_argument("--geometry", action="store_true", help="also run the arc test (n <= 5)")
    p.add_argument("--dump-points", help="write the hyperoval candidate points as CSV")

    p = sub.add_parser("sums", parents=[common], help="print the Walsh aggregates")
    p.add_argument("--family")
    p.add_argument("--k", type=int)

    p = sub.add_parser("spectrum", parents=[common], help="Walsh spectrum as CSV")
    p.add_argument("--family")
    p.add_argument("--k", type=int)
    p.add_argument("--dense", action="store_true", help="include zero entries")

    p = sub.add_parser("search", parents=[common], help="search for o-polynomials")
    p.add_argument("--random", type=int, metavar="COUNT", help="test COUNT random tables")

    sub.add_parser("catalog", parents=[common], help="list catalog families for --n")
    return parser


def parse_config(argv=None) -> RunConfig:
    args = build_parser().parse_args(argv)
    known = set(RunConfig.__dataclass_fields__)
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in known})
    if cfg.threads < 1:
        raise UsageError("--threads must be >= 1")
    return cfg


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv)
        return COMMANDS[cfg.command](cfg)
    except SystemExit as exc:
        return 2 if exc.code else 0
    except (UsageError, FieldError, FunctionError, catalog.CatalogError, ResourceError, OSError) as exc:
        print(f"opoly: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
