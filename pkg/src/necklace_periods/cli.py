"""``necklace-periods`` command line.

Exit codes: 0 success, 1 a verification or b-file comparison failed,
2 usage error (bad flags, out-of-domain parameters, unreadable input).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import counting, identities, oracle
from .bfile import read_bfile
from .errors import DomainError
from .residues import as_binary_word, exact_period

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(DomainError):
    pass


# name -> (parameter names in call order, function, smallest valid k/n for tables)
COUNT_FORMULAS: dict[str, tuple[tuple[str, ...], Callable[..., int], int]] = {
    "exact-period": (("n", "r", "k"), counting.exact_period_subset_count, 1),
    "period-classes": (("n", "r", "k"), counting.period_class_count, 1),
    "fixed-density": (("r", "k"), counting.fixed_density_necklace_count, 1),
    "aperiodic": (("k",), counting.aperiodic_binary_count, 2),
    "necklaces": (("k",), counting.binary_necklace_closed_form, 2),
    "nonzero-density": (("k",), counting.nonzero_density_total, 2),
    "moreau": (("n", "alphabet"), counting.moreau, 1),
    "macmahon": (("n", "alphabet"), counting.macmahon, 1),
}

# single-index sequences usable by oeis-check: name -> (function of index, first valid index)
SEQUENCE_FORMULAS = {
    "moreau": (lambda i, q: counting.moreau(i, q), 1),
    "macmahon": (lambda i, q: counting.macmahon(i, q), 1),
    "aperiodic": (lambda i, q: counting.aperiodic_binary_count(i), 2),
    "necklaces": (lambda i, q: counting.binary_necklace_closed_form(i), 2),
    "nonzero-density": (lambda i, q: counting.nonzero_density_total(i), 2),
}

# identity -> (runner(k_max, args), default bound, what --k-max bounds)
VERIFIERS = {
    "theorem1": (lambda b, a: identities.verify_theorem1(b, limit=a.max_enum), 12, "k"),
    "theorem2": (lambda b, a: identities.verify_theorem2(b, limit=a.max_enum), 12, "k"),
    "theorem3": (lambda b, a: identities.verify_theorem3(b, limit=a.max_enum), 12, "k"),
    "theorem4": (lambda b, a: identities.resolve_theorem4(b, limit=a.max_enum), 12, "k"),
    "corollary1": (lambda b, a: identities.verify_mobius_congruence(b), 60, "k"),
    "corollary2": (lambda b, a: identities.verify_totient_congruence(b), 60, "k"),
    "corollary3": (lambda b, a: identities.sweep_lucas_prime_power(b, a.primes, a.alpha_max), 8, "n"),
    "corollary4": (lambda b, a: identities.sweep_lucas_basic(b, a.p_max), 12, "n"),
    "lemma2": (lambda b, a: identities.verify_lemma2(b), 200, "a"),
    "lemma3": (lambda b, a: identities.verify_lemma3(b), 500, "q"),
    "bijection": (lambda b, a: identities.verify_bijection(b), 12, "n*d"),
    "witness": (lambda b, a: identities.verify_witness(b), 30, "n"),
    "burnside": (lambda b, a: identities.verify_burnside(b, limit=a.max_enum), 12, "length"),
}


def parse_range(text: str) -> range:
    """``"a..b"`` (inclusive) or a single integer ``"a"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        value = int(text)
    except ValueError:
        raise UsageError(f"invalid range {text!r}; expected 'a..b' or an integer") from None
    return range(value, value + 1)


def _out(line: str = "") -> None:
    sys.stdout.write(line + "\n")


def cmd_count(args) -> int:
    names, fn, _ = COUNT_FORMULAS[args.formula]
    values = []
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"count {args.formula} needs --{name}")
        values.append(value)
    _out(str(fn(*values)))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    limit = args.max_enum
    if args.kind == "lyndon":
        items = oracle.enumerate_lyndon(args.length, args.density, limit=limit)
    elif args.kind == "necklaces":
        classes = oracle.enumerate_necklace_classes(args.length, args.density, limit=limit)
        items = sorted(oracle.least_rotation(as_binary_word(c.representative)) for c in classes)
    else:
        bound = oracle.SUBSET_LIMIT if limit is None else limit
        if args.length > bound:
            raise DomainError(f"length={args.length} exceeds the enumeration limit {bound}")
        densities = [args.density] if args.density is not None else range(1, args.length + 1)
        rows = []
        for r in densities:
            if not 1 <= r <= args.length:
                raise UsageError(f"subsets-by-period needs 1 <= density <= length, got {r}")
            for a in identities.subsets_with_period(args.length, r, args.period):
                rows.append((a.members, exact_period(a)))
        rows.sort()
        if args.format == "json":
            items = [{"members": list(m), "period": n} for m, n in rows]
        else:
            items = [f"{n}: {','.join(map(str, m))}" for m, n in rows]
    if args.format == "json":
        _out(json.dumps(items))
    else:
        for item in items:
            _out(str(item))
    return EXIT_OK


def cmd_verify(args) -> int:
    runner, default, _ = VERIFIERS[args.identity]
    bound = default if args.k_max is None else args.k_max
    report = runner(bound, args)
    _out(report.to_json())
    if report.relation:
        print(f"relation: {report.relation}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_table(args) -> int:
    names, fn, lowest = COUNT_FORMULAS[args.formula]
    index_name = "n" if names[0] == "n" and len(names) == 2 else "k"
    bounds = args.n if index_name == "n" else args.k
    if bounds is None:
        raise UsageError(f"table {args.formula} needs --{index_name} RANGE")
    span = parse_range(bounds)
    if len(span) and span.start < lowest:
        raise UsageError(f"table {args.formula}: range must start at {index_name} >= {lowest}")
    if args.formula in ("exact-period", "period-classes"):
        table = counting.period_table(fn, span)
    elif args.formula == "fixed-density":
        table = counting.density_table(fn, span)
    elif index_name == "n":
        table = counting.alphabet_table(fn, span, args.alphabet)
    else:
        table = counting.single_table("k", fn, span)
    sys.stdout.write(table.to_json() + "\n" if args.format == "json" else table.to_csv())
    return EXIT_OK


def cmd_oeis_check(args) -> int:
    bfile = read_bfile(args.bfile)
    if args.formula == "bfile":
        if args.reference is None:
            raise UsageError("--formula bfile needs --reference PATH")
        ref = read_bfile(args.reference).as_dict()
        lookup = ref.get
    else:
        fn, first = SEQUENCE_FORMULAS[args.formula]

        def lookup(j):
            return fn(j, args.alphabet) if j >= first else None

    compared = []
    for index, value in bfile.entries:
        if args.max_index is not None and index > args.max_index:
            break
        expected = lookup(index + args.offset)
        if expected is None:
            continue
        compared.append(index)
        if expected != value:
            _out(f"{bfile.sequence_id or args.bfile}: mismatch at index {index}: "
                 f"b-file has {value}, {args.formula} gives {expected}")
            return EXIT_FAILED
    if not compared:
        raise UsageError(f"no overlap between {args.bfile} and {args.formula} (offset {args.offset})")
    _out(f"{bfile.sequence_id or args.bfile}: {len(compared)} terms match {args.formula} "
         f"(indices {compared[0]}..{compared[-1]}, offset {args.offset})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--max-enum", type=int, default=None, metavar="N",
        help=f"enumeration bound (default {oracle.SUBSET_LIMIT} for subset "
             f"censuses, {oracle.WORD_LIMIT} for word orbits)",
    )

    parser = argparse.ArgumentParser(
        prog="necklace-periods",
        description="Count, enumerate and cross-check binary necklaces and periodic subsets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="evaluate one closed-form count")
    p.add_argument("formula", choices=sorted(COUNT_FORMULAS))
    for name in ("n", "r", "k"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--alphabet", type=int, default=2)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", parents=[common], help="list objects by brute force")
    p.add_argument("kind", choices=["lyndon", "necklaces", "subsets-by-period"])
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--density", type=int)
    p.add_argument("--period", type=int, help="subsets-by-period: keep only this exact period")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="sweep an identity over a grid")
    p.add_argument("identity", choices=sorted(VERIFIERS))
    p.add_argument("--k-max", type=int,
                   help="grid bound; " + ", ".join(f"{k}: {v[2]} <= {v[1]}" for k, v in VERIFIERS.items()))
    p.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5], help="corollary3 primes")
    p.add_argument("--alpha-max", type=int, default=3, help="corollary3 exponent bound")
    p.add_argument("--p-max", type=int, default=13, help="corollary4 prime bound")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[common], help="tabulate a formula as CSV or JSON")
    p.add_argument("formula", choices=sorted(COUNT_FORMULAS))
    p.add_argument("--k", help="range a..b for k-indexed formulas")
    p.add_argument("--n", help="range a..b for moreau/macmahon")
    p.add_argument("--alphabet", type=int, default=2)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("oeis-check", parents=[common], help="compare a b-file with a formula")
    p.add_argument("bfile")
    p.add_argument("--formula", required=True, choices=sorted(SEQUENCE_FORMULAS) + ["bfile"])
    p.add_argument("--alphabet", type=int, default=2)
    p.add_argument("--offset", type=int, default=0,
                   help="b-file index i is compared with formula(i + offset)")
    p.add_argument("--reference", help="second b-file, for --formula bfile")
    p.add_argument("--max-index", type=int, help="ignore b-file entries past this index")
    p.set_defaults(func=cmd_oeis_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
