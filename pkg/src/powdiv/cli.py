"""Command-line front end.

Every subcommand writes one record per line to stdout in ``text`` (default),
``jsonl`` or ``csv`` format. Exit codes: 0 success, 1 a verification found a
deviation from the expected solution set, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys

from . import arith, lemmas, search
from .arith import DomainError
from .search import Sign

_INT_RE = re.compile(r"-?[0-9]+")

# Maps operation parameter names onto the flags that carry them.
_FLAGS = {
    "ell": "--l",
    "n_max": "--n-max",
    "a_max": "--a-max",
    "m_max": "--m-max",
    "a, b": "--a/--b",
    "x, y": "--x/--y",
}


def integer(text: str) -> int:
    if not _INT_RE.fullmatch(text):
        raise argparse.ArgumentTypeError(f"invalid integer value: {text!r}")
    return int(text)


def positive(text: str) -> int:
    value = integer(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def sign(text: str) -> Sign:
    try:
        return Sign.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(exc.message) from None


class Emitter:
    """Single writer for stdout, rendering records in the chosen format."""

    def __init__(self, fmt: str, out=None):
        self.fmt = fmt
        self.out = out or sys.stdout

    @staticmethod
    def _cell(value):
        if isinstance(value, bool):
            return "true" if value else "false"
        return "" if value is None else value

    def emit(self, fields, records, text_lines):
        if self.fmt == "text":
            for line in text_lines:
                self.out.write(f"{line}\n")
        elif self.fmt == "jsonl":
            for rec in records:
                self.out.write(json.dumps({f: rec[f] for f in fields}) + "\n")
        else:
            writer = csv.writer(self.out, lineterminator="\n")
            writer.writerow(fields)
            for rec in records:
                writer.writerow([self._cell(rec[f]) for f in fields])


def _tuple(*values) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _valuation_fields(v: arith.Valuation) -> dict:
    return {"exponent": v.exponent, "infinite": v.is_infinite}


def cmd_val(args, out):
    v = arith.valuation(args.p, args.c)
    rec = {"p": args.p, "c": args.c, **_valuation_fields(v)}
    out.emit(["p", "c", "exponent", "infinite"], [rec], [str(v)])
    return 0


def cmd_lte(args, out):
    premise = lemmas.LtePremise(args.x, args.y, args.l, args.p)
    branch = lemmas.lte_classify(premise)
    v = lemmas.lte_valuation(premise)
    rec = {"x": args.x, "y": args.y, "l": args.l, "p": args.p, "branch": branch.value, **_valuation_fields(v)}
    out.emit(["x", "y", "l", "p", "branch", "exponent", "infinite"], [rec], [f"branch={branch.value} exponent={v}"])
    return 0


def cmd_order(args, out):
    order = arith.multiplicative_order(args.u, args.p)
    out.emit(["u", "p", "order"], [{"u": args.u, "p": args.p, "order": order}], [str(order)])
    return 0


def cmd_divides(args, out):
    ok = search.divides(args.a, args.b, args.n, args.k, args.sign)
    rec = {"a": args.a, "b": args.b, "n": args.n, "k": args.k, "sign": args.sign.value, "divides": ok}
    out.emit(["a", "b", "n", "k", "sign", "divides"], [rec], [_bool(ok)])
    return 0


def _rset_records(report):
    return [
        {"a": report.a, "b": report.b, "k": report.k, "sign": report.sign.value, "n": n}
        for n in report.elements
    ]


_RSET_FIELDS = ["a", "b", "k", "sign", "n"]


def cmd_rset(args, out):
    report = search.rset_enumerate(args.a, args.b, args.k, args.sign, args.n_max, jobs=args.jobs)
    out.emit(_RSET_FIELDS, _rset_records(report), [str(n) for n in report.elements])
    print(f"note: complete up to n={report.complete_up_to}", file=sys.stderr)
    return 0


def cmd_lemma2(args, out):
    if args.bound is not None:
        pairs = lemmas.lemma2_oracle(args.z, args.bound)
    else:
        found = lemmas.lemma2_solve(args.z)
        pairs = [found] if found else []
    records = [{"z": args.z, "x": x, "y": y} for x, y in pairs]
    out.emit(["z", "x", "y"], records, [_tuple(x, y) for x, y in pairs] or ["none"])
    return 0


def cmd_check_lemma(args, out):
    report = lemmas.lemma_divides_check(args.x, args.y, args.z, args.l)
    rows = [
        ("coprime_ok", None, report.coprime_ok),
        ("no_q_divides_difference", None, report.no_q_divides_difference),
        ("four_does_not_divide_z", None, report.four_does_not_divide_z),
    ]
    for br in report.odd_prime_branches:
        rows += [
            ("p_divides_x_plus_y", br.p, br.p_divides_x_plus_y),
            ("ell_odd", br.p, br.ell_odd),
            ("bound_holds", br.p, br.bound_holds),
        ]
    records = [{"conclusion": c, "p": p, "holds": h} for c, p, h in rows]
    text = [f"{c} {_bool(h)}" if p is None else f"{c} p={p} {_bool(h)}" for c, p, h in rows]
    out.emit(["conclusion", "p", "holds"], records, text)
    if not report.holds:
        print(f"deviation: lemma conclusion fails for {_tuple(args.x, args.y, args.z, args.l)}", file=sys.stderr)
        return 1
    return 0


_TRIPLE_FIELDS = ["a", "b", "n", "delta", "alpha", "beta", "part"]


def _report_deviations(found, expected):
    extra = [t for t in found if t not in set(expected)]
    missing = [t for t in expected if t not in set(found)]
    for t in extra:
        print(f"deviation: unexpected {_tuple(*t)}", file=sys.stderr)
    for t in missing:
        print(f"deviation: missing {_tuple(*t)}", file=sys.stderr)
    return 1 if extra or missing else 0


def cmd_verify(args, out):
    window = search.SearchWindow(a_max=args.a_max, n_max=args.n_max, m_max=args.m_max)
    if args.target == "corollary":
        pairs = search.verify_corollary(window, jobs=args.jobs)
        records = [{"m": m, "n": n} for m, n in pairs]
        out.emit(["m", "n"], records, [_tuple(m, n) for m, n in pairs])
        print("note: n=1 omitted; 1^m divides m^1 + 1 for every m", file=sys.stderr)
        return _report_deviations(pairs, search.expected_corollary(window))

    if args.target == "theorem1-i":
        triples = search.verify_theorem1_part_i(window, relaxed=args.relaxed, jobs=args.jobs)
        expected = search.expected_theorem1_part_i(window)
    else:
        triples = search.verify_theorem1_part_ii(window, relaxed=args.relaxed, jobs=args.jobs)
        expected = search.expected_theorem1_part_ii(window)
    records = [
        {"a": t.a, "b": t.b, "n": t.n, "delta": t.delta, "alpha": t.alpha, "beta": t.beta, "part": t.part.value}
        for t in triples
    ]
    out.emit(_TRIPLE_FIELDS, records, [_tuple(*t.abn) for t in triples])
    if args.relaxed:
        print("note: relaxed search, no expected set to compare against", file=sys.stderr)
        return 0
    return _report_deviations([t.abn for t in triples], expected)


def cmd_finiteness(args, out):
    report = search.finiteness_report(args.a, args.b, args.k, args.n_max, jobs=args.jobs)
    records = _rset_records(report.plus) + _rset_records(report.minus)
    text = [f"{r['sign']} {r['n']}" for r in records]
    out.emit(_RSET_FIELDS, records, text)
    print(
        f"note: largest plus={report.largest_plus} minus={report.largest_minus};"
        f" complete up to n={args.n_max}, no claim beyond",
        file=sys.stderr,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "jsonl", "csv"], default="text")
    jobs = argparse.ArgumentParser(add_help=False)
    jobs.add_argument("--jobs", type=positive, default=1, help="worker processes (default: sequential)")

    parser = argparse.ArgumentParser(prog="powdiv", description="Divisibility of a^n ± b^n by powers of n.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *parents, help=None):
        p = sub.add_parser(name, parents=[common, *parents], help=help)
        p.set_defaults(func=func)
        return p

    p = add("val", cmd_val, help="p-adic valuation e_p(c)")
    p.add_argument("--p", type=integer, required=True)
    p.add_argument("--c", type=integer, required=True)

    p = add("lte", cmd_lte, help="lifting-the-exponent valuation of x^l - y^l")
    for flag in ("--x", "--y", "--p"):
        p.add_argument(flag, type=integer, required=True)
    p.add_argument("--l", type=integer, required=True)

    p = add("order", cmd_order, help="multiplicative order of u mod p")
    p.add_argument("--u", type=integer, required=True)
    p.add_argument("--p", type=integer, required=True)

    p = add("divides", cmd_divides, help="does n^k divide a^n ± b^n")
    for flag in ("--a", "--b", "--n", "--k"):
        p.add_argument(flag, type=integer, required=True)
    p.add_argument("--sign", type=sign, required=True)

    p = add("rset", cmd_rset, jobs, help="enumerate R_k^±(a,b) up to n-max")
    for flag in ("--a", "--b", "--k"):
        p.add_argument(flag, type=integer, required=True)
    p.add_argument("--sign", type=sign, required=True)
    p.add_argument("--n-max", type=positive, required=True)

    p = add("lemma2", cmd_lemma2, help="odd x, y >= 0 with x^2 - y^2 = 2^z")
    p.add_argument("--z", type=integer, required=True)
    p.add_argument("--bound", type=integer, help="scan exhaustively up to this x instead")

    p = add("check-lemma", cmd_check_lemma, help="check the conclusions for z | x^l + y^l")
    for flag in ("--x", "--y", "--z", "--l"):
        p.add_argument(flag, type=integer, required=True)

    p = add("verify", cmd_verify, jobs, help="search a window and compare with the theorem")
    p.add_argument("target", choices=["theorem1-i", "theorem1-ii", "corollary"])
    p.add_argument("--a-max", type=positive, default=50)
    p.add_argument("--n-max", type=positive, default=200)
    p.add_argument("--m-max", type=positive, default=100)
    p.add_argument("--relaxed", action="store_true", help="drop the n^alpha condition")

    p = add("finiteness", cmd_finiteness, jobs, help="both R-sets under the conjecture's hypotheses")
    for flag in ("--a", "--b", "--k"):
        p.add_argument(flag, type=integer, required=True)
    p.add_argument("--n-max", type=positive, required=True)
    return parser


def run(argv=None, out=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args, Emitter(args.format, out))
    except DomainError as exc:
        flag = _FLAGS.get(exc.param, "--" + exc.param.replace("_", "-"))
        print(f"powdiv {args.command}: error: {flag}: {exc.message}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
