"""Command-line front end.

Subcommands: ``compute`` (one spin Kostka polynomial), ``b`` (one
Stembridge coefficient), ``g2`` (square-shape g-coefficient), ``table``
(full table for a given weight, optionally parallel and cached) and
``verify`` (the self-check suites).  Partitions are written as
comma-separated parts, e.g. ``4,3,1``; ``-`` denotes the empty partition.

Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage
errors (argparse's convention).
"""

from __future__ import annotations

import argparse
import json
import sys
from multiprocessing import Pool

from .engine import SpinKostkaEngine, spin_kostka
from .goldens import KNOWN_DISCREPANCIES, published_tables
from .oracle import oracle_spin_kostka, verify_relations
from .partitions import (
    dominates,
    is_partition,
    is_strict_partition,
    partitions,
    strict_partitions,
)
from .polynomial import LaurentPoly
from .schur import b_coeff, g_square, g_square_alternating_sum


def parse_partition(text):
    """'4,3,1' -> (4, 3, 1); '-' or '' -> ()."""
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("cannot parse partition %r" % text)
    if not is_partition(parts):
        raise argparse.ArgumentTypeError("%r is not a partition" % text)
    return parts


def format_partition(lam):
    return ",".join(map(str, lam)) if lam else "-"


def poly_json(xi, mu, poly):
    return {
        "xi": list(xi),
        "mu": list(mu),
        "poly": {str(e): c for e, c in sorted(poly.terms.items())},
    }


# -- table generation ----------------------------------------------------


def _table_cell(args):
    xi, mu, mode = args
    if mode == "spin":
        return (xi, mu, spin_kostka(xi, mu).to_json())
    return (xi, mu, LaurentPoly.const(b_coeff(xi, mu)).to_json())


def build_table(n, mode="spin", threads=1, cache=None):
    """{mu: {xi: LaurentPoly}} for all row/column pairs of weight n."""
    cols = strict_partitions(n)
    rows = [mu for mu in partitions(n) if mu]
    engine = None
    if cache and mode == "spin":
        engine = SpinKostkaEngine()
        try:
            engine.load_cache(cache)
        except FileNotFoundError:
            pass
    jobs = [(xi, mu, mode) for mu in rows for xi in cols]
    table = {mu: {} for mu in rows}
    if threads > 1:
        with Pool(threads) as pool:
            results = pool.map(_table_cell, jobs)
        for xi, mu, data in results:
            table[mu][xi] = LaurentPoly.from_json(data)
    else:
        for xi, mu, _ in jobs:
            if mode == "spin":
                value = engine.spin_kostka(xi, mu) if engine else spin_kostka(xi, mu)
            else:
                value = LaurentPoly.const(b_coeff(xi, mu))
            table[mu][xi] = value
    if engine is not None and cache:
        engine.save_cache(cache)
    return table


def render_table(table, n, fmt, mode="spin"):
    cols = strict_partitions(n)
    rows = [mu for mu in partitions(n) if mu]
    if fmt == "md":
        head = "| mu \\ xi | " + " | ".join(format_partition(c) for c in cols) + " |"
        sep = "|" + "---|" * (len(cols) + 1)
        lines = [head, sep]
        for mu in rows:
            cells = " | ".join(str(table[mu][xi]) for xi in cols)
            lines.append("| %s | %s |" % (format_partition(mu), cells))
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        lines = ["mu/xi," + ",".join('"%s"' % format_partition(c) for c in cols)]
        for mu in rows:
            cells = ",".join('"%s"' % table[mu][xi] for xi in cols)
            lines.append('"%s",%s' % (format_partition(mu), cells))
        return "\n".join(lines) + "\n"
    if fmt == "json":
        data = {
            "n": n,
            "mode": mode,
            "columns": [list(c) for c in cols],
            "rows": [
                {
                    "mu": list(mu),
                    "cells": [
                        {str(e): c for e, c in sorted(table[mu][xi].terms.items())}
                        for xi in cols
                    ],
                }
                for mu in rows
            ],
        }
        return json.dumps(data, indent=2) + "\n"
    raise ValueError("unknown table format %r" % fmt)


# -- verification suites -------------------------------------------------


def _suite_relations(args, out):
    report = verify_relations(max_degree=args.max_degree, seed=args.seed)
    out.write(report.summary() + "\n")
    return report.ok


def _suite_tables(args, out):
    ok = True
    for n, rows in published_tables().items():
        for mu, cells in rows.items():
            for xi, want in cells.items():
                got = spin_kostka(xi, mu)
                if got == want:
                    continue
                known = KNOWN_DISCREPANCIES.get((n, mu, xi))
                if known is not None and got == known["verified"]():
                    out.write(
                        "KNOWN-DISCREPANT cell n=%d xi=%s mu=%s: published %s, "
                        "independently verified value %s\n"
                        % (n, format_partition(xi), format_partition(mu), want, got)
                    )
                    continue
                ok = False
                out.write(
                    "FAIL cell n=%d xi=%s mu=%s: got %s, published %s\n"
                    % (n, format_partition(xi), format_partition(mu), got, want)
                )
    out.write("tables: %s\n" % ("PASS (modulo known misprint)" if ok else "FAIL"))
    return ok


def _suite_properties(args, out):
    """Structural corollaries of the spin Kostka recurrence, exhaustively."""
    failures = []
    for n in range(1, args.max_n + 1):
        for xi in strict_partitions(n):
            for mu in partitions(n):
                poly = spin_kostka(xi, mu)
                if not dominates(xi, mu):
                    if not poly.is_zero():
                        failures.append("nonzero without dominance: %r %r" % (xi, mu))
                    continue
                if xi == mu and poly != LaurentPoly.const(2 ** len(xi)):
                    failures.append("diagonal: %r" % (xi,))
                scale = 2 ** len(xi)
                if any(c % scale for c in poly.coefficients()):
                    failures.append("divisibility by 2^l: %r %r" % (xi, mu))
                want = scale if xi == mu else 0
                if not poly.is_zero() and poly.eval_at(-1) != want:
                    failures.append("t=-1 evaluation: %r %r" % (xi, mu))
                if xi and mu and xi[0] == mu[0]:
                    tail = spin_kostka(xi[1:], mu[1:])
                    if poly != 2 * tail:
                        failures.append("leading-block factorization: %r %r" % (xi, mu))
    # stability: growing the first part of both shapes preserves K- when
    # mu_1 > xi_2
    for n in range(1, max(1, args.max_n - 2)):
        for xi in strict_partitions(n):
            xi2 = xi[1] if len(xi) > 1 else 0
            for mu in partitions(n):
                if mu[0] <= xi2:
                    continue
                base = spin_kostka(xi, mu)
                for r in (1, 2):
                    grown = spin_kostka((xi[0] + r,) + xi[1:], (mu[0] + r,) + mu[1:])
                    if grown != base:
                        failures.append("stability r=%d: %r %r" % (r, xi, mu))
    for f in failures:
        out.write("FAIL %s\n" % f)
    out.write("properties: %s\n" % ("PASS" if not failures else "FAIL"))
    return not failures


def _suite_oracle(args, out):
    bad = 0
    for n in range(0, args.max_n + 1):
        for xi in strict_partitions(n):
            for mu in partitions(n):
                if spin_kostka(xi, mu) != oracle_spin_kostka(xi, mu):
                    bad += 1
                    out.write("FAIL oracle mismatch: %r %r\n" % (xi, mu))
    out.write("oracle: %s\n" % ("PASS" if not bad else "FAIL"))
    return not bad


SUITES = {
    "relations": _suite_relations,
    "tables": _suite_tables,
    "properties": _suite_properties,
    "oracle": _suite_oracle,
}


# -- argument parsing ----------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="spin-kostka",
        description="Exact spin Kostka polynomials and Stembridge coefficients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="one spin Kostka polynomial K^-_{xi,mu}(t)")
    p.add_argument("--xi", type=parse_partition, required=True)
    p.add_argument("--mu", type=parse_partition, required=True)
    p.add_argument("--oracle", action="store_true", help="use the vertex-operator oracle")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("b", help="one Stembridge coefficient b_{xi,lambda}")
    p.add_argument("--xi", type=parse_partition, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_partition, required=True)

    p = sub.add_parser("g2", help="square-shape coefficient g_{(r,r),lambda}")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_partition, required=True)

    p = sub.add_parser("table", help="full table for weight n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("spin", "b"), default="spin")
    p.add_argument("--format", choices=("md", "csv", "json"), default="md")
    p.add_argument("--out", default=None)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cache", default=None)

    p = sub.add_parser("verify", help="run self-check suites")
    p.add_argument(
        "--suite",
        choices=tuple(SUITES) + ("all",),
        default="all",
    )
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout

    if args.command == "compute":
        if sum(args.xi) != sum(args.mu):
            parser.error("xi and mu must have equal weight")
        if not is_strict_partition(args.xi):
            parser.error("xi must be a strict partition")
        fn = oracle_spin_kostka if args.oracle else spin_kostka
        poly = fn(args.xi, args.mu)
        if args.format == "json":
            out.write(json.dumps(poly_json(args.xi, args.mu, poly)) + "\n")
        else:
            out.write("%s\n" % poly)
        return 0

    if args.command == "b":
        if not is_strict_partition(args.xi):
            parser.error("xi must be a strict partition")
        out.write("%d\n" % b_coeff(args.xi, args.lam))
        return 0

    if args.command == "g2":
        if args.r < 1:
            parser.error("r must be >= 1")
        if sum(args.lam) != 2 * args.r:
            parser.error("lambda must have weight 2r")
        value = g_square(args.r, args.lam)
        cross = g_square_alternating_sum(args.r, args.lam)
        if value != cross:
            out.write("internal cross-check failed: %d vs %d\n" % (value, cross))
            return 1
        out.write("%d\n" % value)
        return 0

    if args.command == "table":
        if args.n < 1:
            parser.error("n must be >= 1")
        if args.threads < 1:
            parser.error("threads must be >= 1")
        table = build_table(args.n, args.mode, args.threads, args.cache)
        text = render_table(table, args.n, args.format, args.mode)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            out.write(text)
        return 0

    if args.command == "verify":
        names = list(SUITES) if args.suite == "all" else [args.suite]
        ok = True
        for name in names:
            out.write("== suite: %s ==\n" % name)
            ok = SUITES[name](args, out) and ok
        return 0 if ok else 1

    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
