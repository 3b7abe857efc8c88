"""Command-line interface: ``charpoly <command> ...``.

Exit status is 0 on success, 1 when a verification suite fails, 2 for bad
arguments and 3 when the requested bounds are too large to compute.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path

from .characters import e_poly, h_poly, specht_poly, weyl_poly
from .errors import ConsistencyError, FeasibilityError
from .moments import (
    invariant_dims,
    kronecker_at,
    kronecker_stable,
    moment_n,
    restriction_table,
    stable_moment,
)
from .partitions import Partition, as_partition, set_cache_dir
from .poly import (
    ONE,
    Polynomial,
    binomial_to_json,
    format_binomial,
    format_polynomial,
    monomial_exponents,
    parse_polynomial,
    to_binomial_basis,
)
from .verify import SUITES, run_suites

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_FEASIBILITY = 0, 1, 2, 3

log = logging.getLogger("charpoly")


class UsageError(Exception):
    pass


def parse_partition(text: str) -> Partition:
    """``"3,1"`` -> ``(3, 1)``; ``"0"`` and ``"empty"`` give the empty partition."""
    text = text.strip()
    if text in ("0", "empty", "()", ""):
        return ()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed partition {text!r}; use comma-separated parts like 3,1") from None
    if any(x <= 0 for x in parts):
        raise argparse.ArgumentTypeError(f"partition parts must be positive: {text!r}")
    try:
        return as_partition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_range(text: str) -> range:
    """``"1..8"`` (inclusive) or a single ``"5"``."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed range {text!r}; use a..b") from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"empty or negative range {text!r}")
    return range(lo, hi + 1)


def nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _partition_label(p: Partition) -> str:
    return "+".join(map(str, p)) if p else "0"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# rendering polynomials


def _monomial_label(m) -> str:
    exps = monomial_exponents(m)
    return "*".join(f"X{i}" if e == 1 else f"X{i}^{e}" for i, e in exps.items()) or "1"


def render_polynomial(p: Polynomial, fmt: str, basis: str) -> str:
    if basis == "binomial":
        coeffs = to_binomial_basis(p)
        if fmt == "text":
            return format_binomial(coeffs) + "\n"
        if fmt == "json":
            return json.dumps(binomial_to_json(coeffs), separators=(",", ":")) + "\n"
        obj = binomial_to_json(coeffs)
        rows = [(_partition_label(tuple(t["partition"])), t["coeff"]) for t in obj["terms"]]
        header = ("partition", "coeff")
    else:
        if fmt == "text":
            return format_polynomial(p) + "\n"
        if fmt == "json":
            return json.dumps(p.to_json(), separators=(",", ":")) + "\n"
        rows = [(_monomial_label(m), str(c)) for m, c in p.sorted_terms()]
        header = ("monomial", "coeff")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def load_polynomial(path: str) -> Polynomial:
    text = Path(path).read_text(encoding="utf-8").strip()
    if text.startswith("{"):
        return Polynomial.from_json(json.loads(text))
    return parse_polynomial(text)


# commands


def cmd_charpoly(args) -> int:
    if args.kind in ("weyl", "specht"):
        if args.shape is None:
            raise UsageError(f"charpoly {args.kind} needs --shape")
        p = weyl_poly(args.shape) if args.kind == "weyl" else specht_poly(args.shape)
    else:
        if args.degree is None:
            raise UsageError(f"charpoly {args.kind} needs --degree")
        p = h_poly(args.degree) if args.kind == "sym" else e_poly(args.degree)
    _emit(render_polynomial(p, args.format, args.basis), args.out)
    return EXIT_OK


def cmd_restriction_table(args) -> int:
    table = restriction_table(args.max, jobs=args.jobs)
    if args.format == "json":
        text = table.to_json() + "\n"
    elif args.format == "csv":
        text = table.to_csv()
    else:
        text = table.to_text()
    _emit(text, args.out)
    return EXIT_OK


def cmd_moments(args) -> int:
    factors = args.factors or []
    if not factors:
        raise UsageError("give at least one of --shape-weyl, --shape-specht, --sym, --alt, --file")
    p = ONE
    for kind, value in factors:
        if kind == "weyl":
            p = p * weyl_poly(value)
        elif kind == "specht":
            p = p * specht_poly(value)
            need = sum(value) + (value[0] if value else 0)
            if args.n is not None and args.n < need:
                log.warning("n=%d is below %d, where the Specht polynomial of %s is a character", args.n, need, value)
        elif kind == "sym":
            p = p * h_poly(value)
        elif kind == "alt":
            p = p * e_poly(value)
        else:
            p = p * load_polynomial(value)
    value = stable_moment(p) if args.n is None else moment_n(p, args.n)
    print(value)
    return EXIT_OK


def cmd_invariants(args) -> int:
    print(" ".join(map(str, invariant_dims(args.shape, args.n_range))))
    return EXIT_OK


def cmd_kronecker(args) -> int:
    lam, mu, nu = args.shapes
    g = kronecker_stable(lam, mu, nu) if args.n is None else kronecker_at(lam, mu, nu, args.n)
    print(g)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = ["all"] if args.suite == "all" else [args.suite]
    ok = True
    for res in run_suites(names, args.max):
        print(res.report(), flush=True)
        ok = ok and res.passed
    return EXIT_OK if ok else EXIT_VERIFY


class _AppendFactor(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        items = list(getattr(namespace, self.dest) or [])
        items.append((self.const, values))
        setattr(namespace, self.dest, items)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charpoly",
        description="Character polynomials of symmetric-group representations and their moments.",
    )
    parser.add_argument(
        "--cache-dir",
        default=os.environ.get("CHARPOLY_CACHE_DIR"),
        help="directory for persisted character tables (default: $CHARPOLY_CACHE_DIR)",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", help="print a character polynomial")
    p.add_argument("kind", choices=["weyl", "specht", "sym", "alt"])
    p.add_argument("--shape", type=parse_partition, help="partition for weyl/specht, e.g. 2,1")
    p.add_argument("--degree", type=nonneg_int, help="degree for sym/alt")
    p.add_argument("--basis", choices=["monomial", "binomial"], default="monomial")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("restriction-table", help="stable restriction coefficients r[lam, mu]")
    p.add_argument("--max", type=nonneg_int, required=True, help="largest partition size")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--out")
    p.add_argument("--jobs", type=nonneg_int, default=1, help="worker processes for table rows")
    p.set_defaults(func=cmd_restriction_table)

    p = sub.add_parser("moments", help="moment of a product of character polynomials")
    p.add_argument("--shape-weyl", dest="factors", action=_AppendFactor, const="weyl", type=parse_partition)
    p.add_argument("--shape-specht", dest="factors", action=_AppendFactor, const="specht", type=parse_partition)
    p.add_argument("--sym", dest="factors", action=_AppendFactor, const="sym", type=nonneg_int)
    p.add_argument("--alt", dest="factors", action=_AppendFactor, const="alt", type=nonneg_int)
    p.add_argument("--file", dest="factors", action=_AppendFactor, const="file", help="polynomial as text or JSON")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--n", type=nonneg_int, help="moment over S_n")
    which.add_argument("--stable", action="store_true", help="stable moment (the default)")
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("invariants", help="dimensions of S_n-invariants of a Weyl module")
    p.add_argument("--shape", type=parse_partition, required=True)
    p.add_argument("--n-range", type=parse_range, required=True, help="inclusive range a..b")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("kronecker", help="Kronecker coefficient of three padded shapes")
    p.add_argument("shapes", nargs=3, type=parse_partition, metavar="SHAPE")
    p.add_argument("--n", type=nonneg_int, help="value at n instead of the stable value")
    p.set_defaults(func=cmd_kronecker)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=["all", *SUITES], default="all")
    p.add_argument("--max", type=nonneg_int, help="override the suite's main size bound")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    set_cache_dir(args.cache_dir)
    try:
        return args.func(args)
    except FeasibilityError as exc:
        print(f"charpoly: {exc}", file=sys.stderr)
        return EXIT_FEASIBILITY
    except ConsistencyError as exc:
        print(f"charpoly: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (UsageError, ValueError, OSError) as exc:
        print(f"charpoly: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
