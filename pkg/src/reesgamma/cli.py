"""Command-line front end: run verification suites, print coefficient tables,
inspect and export posets.

Exit status: 0 when everything requested passed (skips allowed), 1 on any
failing check, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from math import comb

from . import combinat as cb
from . import posets as ps
from . import verify as vf
from . import zseries as zs
from .symfunc import gamma_components, to_schur

TABLES = {
    # which: (series builder, gamma centre offset m - n, first k, limit, group)
    "xi": (zs.xi_series, 0, -1, 8, "S"),
    "gamma": (zs.gamma_series, 1, -1, 8, "S"),
    "xi-plus": (zs.xi_plus_series, 0, 0, 6, "B"),
    "xi-minus": (zs.xi_minus_series, -1, 0, 6, "B"),
    "gamma-plus": (zs.gamma_plus_series, 0, 0, 6, "B"),
    "gamma-minus": (zs.gamma_minus_series, 1, 0, 6, "B"),
    "gamma-B": (zs.toric_B_series, 0, 0, 6, "B"),
}

POSET_FAMILIES = ("boolean", "signed", "tree", "chain", "rees", "ij")
POSET_LIMITS = {"boolean": 12, "signed": 7, "chain": 1000, "ij": 6, "tree_size": 20000}
MODIFIERS = ("punctured", "bar", "top", "bounded")


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    suite: str | None = None
    which: str | None = None
    n: int | None = None
    t: int | None = None
    degree: int | None = None
    format: str = "json"
    jobs: int | None = None
    verbose: bool = False


# ------------------------------------------------------------------ verify

def cmd_verify(cfg: CliConfig, out=None) -> int:
    out = out or sys.stdout
    failed = 0
    reports = []
    for report in vf.run_suite(cfg.suite, cfg.n, cfg.t, cfg.degree, cfg.jobs):
        failed += report.failed
        if cfg.format == "json":
            print(vf.render_json(report, cfg.verbose), file=out, flush=True)
        else:
            reports.append(report)
    if cfg.format == "md":
        print(vf.render_markdown(reports, cfg.verbose), file=out)
        counts = {s: sum(r.status == s for r in reports) for s in ("pass", "fail", "skipped")}
        print(f"\n{counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped", file=out)
    return 1 if failed else 0


# ------------------------------------------------------------------- table

def coefficient_table(which: str, n: int) -> list:
    """Rows ``(shape, {k: coefficient})`` of the Schur expansion of each
    gamma coefficient of the ``z^n`` term."""
    build, offset, first_k, limit, group = TABLES[which]
    if not 1 <= n <= limit:
        raise UsageError(f"--n for table {which} must lie in [1, {limit}]")
    comps = gamma_components(build(max(n, 2))[n], n + offset)
    rows = {}
    for i, c in enumerate(comps):
        k = i + first_k
        for key, poly in to_schur(c).items():
            rows.setdefault(key, {})[k] = poly.coeff(0)
    order = sorted(rows, key=_row_order, reverse=group == "S")
    return [(key, rows[key]) for key in order]


def _row_order(key):
    lam, mu = key
    return (-sum(lam), tuple(-p for p in lam), tuple(-p for p in mu))


def _shape(key, group: str) -> str:
    lam, mu = key
    return cb.format_partition(lam) if group == "S" else cb.format_bipartition((lam, mu))


def _dimension(key, group: str) -> int:
    lam, mu = key
    if group == "S":
        return cb.num_syt(lam)
    return comb(sum(lam) + sum(mu), sum(lam)) * cb.num_syt(lam) * cb.num_syt(mu)


def cmd_table(cfg: CliConfig, out=None) -> int:
    out = out or sys.stdout
    rows = coefficient_table(cfg.which, cfg.n)
    group = TABLES[cfg.which][4]
    ks = sorted({k for _, coeffs in rows for k in coeffs})
    if cfg.format == "json":
        doc = {"which": cfg.which, "n": cfg.n,
               "rows": [{"shape": _shape(key, group), "dim": _dimension(key, group),
                         "coefficients": {str(k): int(v) for k, v in sorted(c.items())}}
                        for key, c in rows]}
        print(json.dumps(doc), file=out)
        return 0
    print("| shape | dim | " + " | ".join(f"k={k}" for k in ks) + " |", file=out)
    print("|---|---|" + "---|" * len(ks), file=out)
    for key, coeffs in rows:
        cells = [str(coeffs.get(k, 0)) for k in ks]
        print(f"| {_shape(key, group)} | {_dimension(key, group)} | " + " | ".join(cells) + " |", file=out)
    return 0


# ------------------------------------------------------------------- poset

def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}") from None


def _base_poset(family: str, args: list) -> ps.GradedPoset:
    if family in ("boolean", "signed", "chain"):
        if len(args) != 1:
            raise UsageError(f"{family} takes one parameter n")
        n = _int(args[0], "n")
        if not 0 <= n <= POSET_LIMITS[family]:
            raise UsageError(f"{family}: n must lie in [0, {POSET_LIMITS[family]}]")
        if family == "chain":
            if n < 1:
                raise UsageError("chain: n must be positive")
            return ps.chain_poset(n)
        return ps.boolean_poset(n) if family == "boolean" else ps.signed_boolean(n)
    if family == "tree":
        if len(args) != 2:
            raise UsageError("tree takes parameters t and n")
        t, n = _int(args[0], "t"), _int(args[1], "n")
        if t < 1 or n < 0:
            raise UsageError("tree needs t >= 1 and n >= 0")
        if sum(t ** k for k in range(n + 1)) > POSET_LIMITS["tree_size"]:
            raise UsageError(f"tree: more than {POSET_LIMITS['tree_size']} elements")
        return ps.tree_poset(t, n)
    raise UsageError(f"unknown poset family {family!r}")


def _apply(P: ps.GradedPoset, modifier: str) -> ps.GradedPoset:
    try:
        if modifier == "punctured":
            return ps.remove_bottom(P)
        if modifier == "bar":
            return ps.remove_both(P)
        if modifier == "top":
            return ps.add_bounds(P, bottom=False)
        if modifier == "bounded":
            return ps.bounded(P)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown modifier {modifier!r}; expected one of {', '.join(MODIFIERS)}")


def parse_poset_spec(spec: str) -> ps.GradedPoset:
    """``family:params[:modifier...]``, e.g. ``boolean:3:punctured`` or ``tree:1:2``."""
    parts = spec.split(":")
    family = parts[0]
    arity = {"boolean": 1, "signed": 1, "chain": 1, "tree": 2}.get(family)
    if arity is None:
        raise UsageError(f"unknown poset family {family!r} in {spec!r}")
    P = _base_poset(family, parts[1:1 + arity])
    for mod in parts[1 + arity:]:
        P = _apply(P, mod)
    return P


def build_poset(family: str, n: int | None, t: int | None, j: int | None,
                left: str | None, right: str | None) -> ps.GradedPoset:
    def need(value, name):
        if value is None:
            raise UsageError(f"--{name} is required for family {family}")
        return str(value)

    if family in ("boolean", "signed", "chain"):
        return _base_poset(family, [need(n, "n")])
    if family == "tree":
        return _base_poset(family, [need(t, "t"), need(n, "n")])
    if family == "rees":
        P, Q = parse_poset_spec(need(left, "left")), parse_poset_spec(need(right, "right"))
        return ps.rees_product(P, Q)
    if family == "ij":
        n_, j_ = int(need(n, "n")), int(need(j, "j"))
        if not 1 <= n_ <= POSET_LIMITS["ij"] or not 0 <= j_ < n_:
            raise UsageError(f"ij needs 1 <= n <= {POSET_LIMITS['ij']} and 0 <= j < n")
        return ps.order_ideal_Ij(n_, j_)
    raise UsageError(f"unknown poset family {family!r}")


def poset_info(P: ps.GradedPoset) -> dict:
    group = P.action
    return {
        "elements": len(P),
        "rank": P.max_rank,
        "has_bottom": P.has_bottom,
        "has_top": P.has_top,
        "maximal_chains": ps.count_max_chains(P),
        "group": f"{group.group}_{group.n}" if group.n else "trivial",
        "lefschetz_dim": ps.reduced_euler(P),
    }


def cmd_poset(args, out=None) -> int:
    out = out or sys.stdout
    P = build_poset(args.family, args.n, args.t, args.j, args.left, args.right)
    if args.export:
        out.write(ps.export_edges(P))
        return 0
    info = poset_info(P)
    if args.format == "json":
        print(json.dumps(info), file=out)
    else:
        for key, value in info.items():
            print(f"{key}: {value}", file=out)
    return 0


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reesgamma", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default="all", choices=vf.SUITES + ("all",))
    v.add_argument("--n", type=int)
    v.add_argument("--t", type=int)
    v.add_argument("--degree", type=int, help="z-degree bound of the series")
    v.add_argument("--format", choices=("json", "md"), default="json")
    v.add_argument("--jobs", type=int, help="worker processes (default: $REESGAMMA_JOBS or 1)")
    v.add_argument("-v", "--verbose", action="store_true", help="include elapsed_ms")

    tb = sub.add_parser("table", help="print a Schur coefficient table")
    tb.add_argument("--which", required=True, choices=tuple(TABLES))
    tb.add_argument("--n", type=int, required=True)
    tb.add_argument("--format", choices=("json", "md"), default="md")

    p = sub.add_parser("poset", help="summarize or export a poset")
    p.add_argument("--family", required=True, choices=POSET_FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--left", help="left factor spec, e.g. boolean:3:punctured")
    p.add_argument("--right", help="right factor spec, e.g. tree:1:2")
    p.add_argument("--format", choices=("json", "md"), default="md")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--info", action="store_true", help="print counts (default)")
    mode.add_argument("--export", action="store_true", help="print the cover edge list")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            if args.jobs is not None and args.jobs < 1:
                raise UsageError("--jobs must be positive")
            try:
                vf.validate(args.suite, args.n, args.t, args.degree)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            cfg = CliConfig("verify", suite=args.suite, n=args.n, t=args.t, degree=args.degree,
                            format=args.format, jobs=args.jobs, verbose=args.verbose)
            return cmd_verify(cfg)
        if args.command == "table":
            return cmd_table(CliConfig("table", which=args.which, n=args.n, format=args.format))
        return cmd_poset(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
