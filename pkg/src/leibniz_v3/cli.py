"""Command-line front end.

Exit status: 0 on success, 1 when a verification check fails (the first
counterexample is printed), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Iterable, Optional

from . import checks
from . import invariants as inv
from .algebra import parse_element
from .invariants import InvariantReport
from .partitions import Partition, PartitionError, classify
from .symbolic.catalog import (
    CatalogError,
    default_poly,
    element_shape,
    generator_element,
    parse_id,
    witness_substitution,
)
from .symbolic.certify import build_certificate, search_certificate, substitution_pool
from .symbolic.templates import evaluate_template

FIELDS = ("quantity", "input", "formula", "brute", "agree")


# --- argument types ----------------------------------------------------------

def partition_arg(text: str) -> Partition:
    try:
        lam = Partition.parse(text)
    except PartitionError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not lam.parts:
        raise argparse.ArgumentTypeError("partition must be nonempty")
    return lam


def positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


def params_arg(text: str) -> dict[str, int]:
    out = {}
    for token in filter(None, (t.strip() for t in text.split(","))):
        key, sep, value = token.partition("=")
        if not sep or not key.isidentifier() or not value.strip().lstrip("-").isdigit():
            raise argparse.ArgumentTypeError(f"bad parameter token {token!r} (expected name=int)")
        out[key] = int(value)
    return out


def subst_arg(text: str) -> dict:
    """``"x1=a; x2=b + [t^2]"``: one substitution, assignments separated by ';'."""
    out = {}
    for token in filter(None, (t.strip() for t in text.split(";"))):
        name, sep, value = token.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(f"bad substitution token {token!r} (expected name=element)")
        try:
            out[name.strip()] = parse_element(value)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad element in {token!r}: {exc}") from None
    return out


# --- output ------------------------------------------------------------------

def _plain(v):
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else str(v)
    return v


class Emitter:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout
        self._csv = None

    def report(self, row: InvariantReport, pretty: Optional[str] = None):
        if self.fmt == "json":
            record = {k: _plain(v) for k, v in row.as_dict().items()}
            self.stream.write(json.dumps(record, sort_keys=True) + "\n")
        elif self.fmt == "csv":
            if self._csv is None:
                self._csv = csv.DictWriter(self.stream, fieldnames=FIELDS, lineterminator="\n")
                self._csv.writeheader()
            self._csv.writerow({k: (str(v).lower() if isinstance(v, bool) else v) for k, v in row.as_dict().items()})
        else:
            if pretty is None:
                status = "PASS" if row.agree else "FAIL"
                pretty = f"{status} {row.quantity} {row.input} formula={row.formula} brute={row.brute}"
            self.stream.write(pretty + "\n")
        self.stream.flush()


def _sweep(rows: Iterable[InvariantReport], out: Emitter) -> int:
    for row in rows:
        out.report(row)
        if not row.agree:
            sys.stderr.write(f"counterexample: {row.quantity} at {row.input}\n")
            return 1
    return 0


# --- commands ----------------------------------------------------------------

def cmd_multiplicity(args, out: Emitter) -> int:
    lam = args.partition
    row = InvariantReport.of("m_lambda", lam, inv.multiplicity(lam), inv.multiplicity_via_corners(lam))
    if out.fmt == "pretty" and args.verbose:
        out.report(row, f"{row.formula}  {classify(lam)}")
    else:
        out.report(row, str(row.formula))
    return 0 if row.agree else 1


def cmd_colength(args, out: Emitter) -> int:
    n = args.n
    exact = inv.colength_exact(n)
    if not args.brute:
        out.report(InvariantReport.of("l_n", n, exact, inv.colength_cases(n)), str(exact))
        return 0
    row = InvariantReport.of("l_n", n, exact, inv.colength_bruteforce(n))
    out.report(row, f"formula={row.formula} brute={row.brute} agree={str(row.agree).lower()}")
    return 0 if row.agree else 1


def cmd_codim(args, out: Emitter) -> int:
    row = inv.quantity_report("c_n", args.n)
    out.report(row, str(row.formula))
    return 0 if row.agree else 1


def cmd_table(args, out: Emitter) -> int:
    if args.to < getattr(args, "from"):
        raise argparse.ArgumentTypeError("--to must be >= --from")
    status = 0
    for n in range(getattr(args, "from"), args.to + 1):
        if args.quantity == "c" and n < 4:
            continue
        row = inv.quantity_report(args.quantity, n)
        out.report(row, f"{row.quantity} n={n} formula={row.formula} brute={row.brute} "
                        f"agree={str(row.agree).lower()}")
        status = status or (0 if row.agree else 1)
    return status


def cmd_verify(args, out: Emitter) -> int:
    theorem = args.theorem
    max_n = args.max_n or {"theorem1": 30, "theorem2": 1000, "theorem3": 200}[theorem]
    if theorem == "theorem1":
        status = _sweep(checks.multiplicity_sweep(max_n), out)
        if status == 0 and not args.skip_witnesses:
            status = _sweep(checks.witness_nonzero_checks(), out)
            if status == 0:
                status = _sweep(checks.witness_zero_checks(random_count=args.random), out)
        return status
    if theorem == "theorem2":
        return _sweep(checks.deviation_sweep(max_n, brute_up_to=min(max_n, args.brute_up_to)), out)
    return _sweep(checks.colength_sweep(max_n), out)


def _element(eid: str, params: dict):
    try:
        parse_id(eid)
        return generator_element(eid, **params)
    except CatalogError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_eval(args, out: Emitter) -> int:
    t = _element(args.element, args.params)
    if args.subst:
        subst = args.subst
    else:
        subst = witness_substitution(args.element, default_poly(element_shape(args.element, **args.params).n))
    missing = set(t.content()) - set(subst)
    if missing:
        raise argparse.ArgumentTypeError(f"no value for generators {sorted(missing)}")
    value = evaluate_template(t, subst)
    if out.fmt == "json":
        out.stream.write(json.dumps({"element": args.element, "template": str(t),
                                     "substitution": {k: str(v) for k, v in sorted(subst.items())},
                                     "value": str(value)}, sort_keys=True) + "\n")
    else:
        out.stream.write(f"{value}\n")
    return 0


def cmd_independent(args, out: Emitter) -> int:
    ids = [e.strip() for e in args.elements.split(",") if e.strip()]
    if not ids:
        raise argparse.ArgumentTypeError("no elements given")
    elements = [_element(e, args.params) for e in ids]
    gens = sorted(set().union(*(t.content() for t in elements)))
    poly = default_poly(max(element_shape(e, **args.params).n for e in ids))
    if args.subst_pool == "explicit":
        if not args.subst:
            raise argparse.ArgumentTypeError("--subst-pool explicit needs at least one --subst")
        cert = build_certificate(elements, args.subst, ids)
        cert.poly = None
    else:
        cert = search_certificate(elements, substitution_pool(gens, poly), ids)
        cert.poly = poly
    cert.params = dict(args.params)
    text = cert.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    if out.fmt == "json" or not args.out:
        out.stream.write(text)
    else:
        verdict = "independent" if cert.independent else "inconclusive"
        out.stream.write(f"rank={cert.rank}/{len(ids)} {verdict} certificate={args.out}\n")
    return 0 if cert.independent else 1


def cmd_leibniz_check(args, out: Emitter) -> int:
    return _sweep(checks.leibniz_checks(args.random, seed=args.seed), out)


# --- parser ------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("pretty", "json", "csv"), default="pretty")

    p = _Parser(prog="leibniz-v3", description="Invariants of the Leibniz variety generated by H + Q[t].")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("multiplicity", parents=[common], help="multiplicity of a partition")
    s.add_argument("partition", type=partition_arg, help='comma-separated parts, e.g. "3,2,1"')
    s.add_argument("-v", "--verbose", action="store_true", help="also print the shape class")
    s.set_defaults(func=cmd_multiplicity)

    s = sub.add_parser("colength", parents=[common], help="colength l_n")
    s.add_argument("n", type=positive_int)
    s.add_argument("--brute", action="store_true", help="compare with enumeration")
    s.set_defaults(func=cmd_colength)

    s = sub.add_parser("codim", parents=[common], help="codimension c_n")
    s.add_argument("n", type=positive_int)
    s.set_defaults(func=cmd_codim)

    s = sub.add_parser("table", parents=[common], help="formula vs enumeration over a range of n")
    s.add_argument("--from", type=positive_int, default=1)
    s.add_argument("--to", type=positive_int, required=True)
    s.add_argument("--quantity", choices=inv.QUANTITIES, default="l_n")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("theorem", choices=("theorem1", "theorem2", "theorem3"))
    s.add_argument("--max-n", type=positive_int)
    s.add_argument("--random", type=int, default=200, help="random substitutions per zero-side element")
    s.add_argument("--skip-witnesses", action="store_true", help="theorem1: partition sweep only")
    s.add_argument("--brute-up-to", type=int, default=200, help="theorem2: enumerate up to this n")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("eval", parents=[common], help="evaluate a catalog element in the algebra")
    s.add_argument("--element", required=True, help='catalog id, e.g. "h11(2)"')
    s.add_argument("--params", type=params_arg, default={}, help='e.g. "m=1,k=2"')
    s.add_argument("--subst", type=subst_arg, help='e.g. "x1=a; x2=b + [t^2]"; default is the witness')
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("independent", parents=[common], help="exact-rank independence certificate")
    s.add_argument("--elements", required=True, help='comma-separated ids, e.g. "h11(1),h11(2)"')
    s.add_argument("--params", type=params_arg, default={})
    s.add_argument("--subst-pool", choices=("auto", "explicit"), default="auto")
    s.add_argument("--subst", type=subst_arg, action="append", help="one substitution (repeatable)")
    s.add_argument("--out", help="write the certificate JSON here")
    s.set_defaults(func=cmd_independent)

    s = sub.add_parser("leibniz-check", parents=[common], help="check the Leibniz identity")
    s.add_argument("--random", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_leibniz_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, Emitter(args.output))
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except (ValueError, PartitionError) as exc:
        parser.error(str(exc))
    return 2


if __name__ == "__main__":
    sys.exit(main())
