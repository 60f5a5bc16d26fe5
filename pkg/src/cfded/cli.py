"""Command-line front end.

    cfded expand|convergents|dedekind|clusters|probe|verify
          [--z EXPR] [--digits LIST] [--digit-kind regular|negative]
          [--depth N] [--format text|json] [--precision DIGITS]

Exit codes: 0 ok, 1 usage error, 2 domain error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import (
    CfdedError,
    DivisionByZero,
    RationalValue,
    SurdSyntaxError,
    ToleranceNotReached,
)
from .exactnum import QuadSurd, surd_normalize, to_decimal
from .contfrac import (
    convergents,
    expand_negative,
    expand_regular,
    intercalary_decompose_digits,
    is_floor_convergent,
    transition_prefix,
)
from .dedekind import dedekind_negative_formula, dedekind_regular_formula
from .clusters import classify, coincidence_analysis, convergence_probe

Real = Union[Fraction, QuadSurd]


# -- surd expression parser -------------------------------------------------


@dataclass(frozen=True)
class SurdExpr:
    source: str
    parsed: tuple[int, int, int, int]  # (a, b, c, N)

    @property
    def value(self) -> QuadSurd:
        return QuadSurd(*self.parsed)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise SurdSyntaxError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise SurdSyntaxError("expected an integer", start)
        return int(self.text[start : self.pos])

    def match_word(self, word: str) -> bool:
        self.skip_ws()
        if self.text.startswith(word, self.pos):
            self.pos += len(word)
            return True
        return False


def _parse_expr(sc: _Scanner) -> Real:
    value = _parse_term(sc)
    while sc.peek() in ("+", "-"):
        op = sc.peek()
        sc.pos += 1
        rhs = _parse_term(sc)
        value = value + rhs if op == "+" else value - rhs
    return value


def _parse_term(sc: _Scanner) -> Real:
    value = _parse_factor(sc)
    while sc.peek() in ("*", "/"):
        op = sc.peek()
        sc.pos += 1
        rhs = _parse_factor(sc)
        try:
            value = value / rhs if op == "/" else value * rhs
        except ZeroDivisionError:
            raise DivisionByZero("division by zero in surd expression") from None
    return value


def _parse_factor(sc: _Scanner) -> Real:
    if sc.peek() == "-":
        sc.pos += 1
        return -_parse_factor(sc)
    return _parse_atom(sc)


def _parse_atom(sc: _Scanner) -> Real:
    if sc.match_word("sqrt"):
        sc.expect("(")
        inner = _parse_expr(sc)
        sc.expect(")")
        if not isinstance(inner, Fraction) or inner.denominator != 1 or inner <= 0:
            raise SurdSyntaxError("sqrt() needs a positive integer argument", sc.pos)
        return surd_normalize(0, 1, 1, int(inner)) if inner >= 2 else Fraction(1)
    if sc.peek() == "(":
        sc.expect("(")
        inner = _parse_expr(sc)
        sc.expect(")")
        return inner
    return Fraction(sc.integer())


def parse_surd(text: str) -> SurdExpr:
    """Parse and normalize a quadratic surd expression."""
    sc = _Scanner(text)
    value = _parse_expr(sc)
    sc.skip_ws()
    if sc.pos != len(sc.text):
        raise SurdSyntaxError(f"unexpected {sc.text[sc.pos]!r}", sc.pos)
    if isinstance(value, Fraction):
        raise RationalValue(f"{text!r} is rational; a quadratic irrational is required")
    return SurdExpr(text, (value.a, value.b, value.c, value.N))


def parse_digit_list(text: str) -> list[int]:
    """Comma-separated digits; `a^n` repeats a digit n times."""
    digits: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if "^" in token:
            base, _, count = token.partition("^")
            digits.extend([int(base)] * int(count))
        else:
            digits.append(int(token))
    if not digits:
        raise ValueError("empty digit list")
    return digits


# -- rendering ---------------------------------------------------------------


def fmt_exact(x: Real) -> str:
    if isinstance(x, QuadSurd):
        return str(x)
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _emit(payload: dict, args) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
        return
    _emit_text(payload)


def _emit_text(obj, indent: int = 0) -> None:
    pad = "  " * indent
    if isinstance(obj, dict):
        for key, val in obj.items():
            if isinstance(val, (dict, list)) and val and not _is_flat(val):
                print(f"{pad}{key}:")
                _emit_text(val, indent + 1)
            else:
                print(f"{pad}{key}: {_flat(val)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)):
                _emit_text(item, indent)
                print()
            else:
                print(f"{pad}{_flat(item)}")
    else:
        print(f"{pad}{_flat(obj)}")


def _is_flat(val) -> bool:
    if isinstance(val, list):
        return all(not isinstance(x, (dict, list)) for x in val)
    return False


def _flat(val) -> str:
    if isinstance(val, list):
        return "[" + ", ".join(str(x) for x in val) + "]"
    return str(val)


# -- commands ----------------------------------------------------------------


def _surd_arg(args) -> QuadSurd:
    if not args.z:
        raise CfdedError("this command needs --z with a quadratic surd expression")
    return parse_surd(args.z).value


def cmd_expand(args) -> int:
    z = _surd_arg(args)
    kinds = [args.kind] if args.kind else ["regular", "negative"]
    payload = {"input": args.z}
    for kind in kinds:
        exp = expand_regular(z) if kind == "regular" else expand_negative(z)
        digits = [exp.digit(j) for j in range(args.depth)]
        payload[kind] = {
            "preperiod": list(exp.preperiod),
            "period": list(exp.period),
            "digits": digits,
        }
    _emit(payload, args)
    return 0


def cmd_convergents(args) -> int:
    payload = {"input": args.z or args.digits}
    if args.digits:
        digits = parse_digit_list(args.digits)
        kind = args.digit_kind
        n = min(args.depth, len(digits) - 1)
        table = convergents(digits, n, kind=kind)
    else:
        z = _surd_arg(args)
        kind = args.kind or "regular"
        exp = expand_regular(z) if kind == "regular" else expand_negative(z)
        table = convergents(exp, args.depth)
        n = args.depth
    rows = []
    for k in range(n + 1):
        num, den = table.pair(k)
        rows.append({
            "k": k,
            "numerator": str(num),
            "denominator": str(den),
            "decimal": to_decimal(Fraction(num, den), args.precision),
        })
    payload["kind"] = kind
    payload["convergents"] = rows
    _emit(payload, args)
    return 0


def cmd_dedekind(args) -> int:
    payload = {"input": args.z or args.digits}
    if args.digits:
        digits = parse_digit_list(args.digits)
        if args.digit_kind != "negative":
            raise CfdedError("digit-stream Dedekind sums need --digit-kind negative")
        n = min(args.depth, len(digits) - 2)
        table = convergents(digits, n, kind="negative")
        rows = []
        for j in range(n + 1):
            sj, tj = table.pair(j)
            val = dedekind_negative_formula(digits, j).value
            rows.append({"j": j, "s": str(sj), "t": str(tj), "S": fmt_exact(val)})
        payload["negative"] = rows
        _emit(payload, args)
        return 0
    z = _surd_arg(args)
    reg = expand_regular(z)
    neg = expand_negative(z)
    reg_rows, neg_rows = [], []
    rt = convergents(reg, reg.q + 1 + args.depth)
    nt = convergents(neg, args.depth)
    for k in range(reg.q + 1, reg.q + 1 + args.depth):
        pk, qk = rt.pair(k)
        val = dedekind_regular_formula(z, k).value
        reg_rows.append({"k": k, "p": str(pk), "q": str(qk), "S": fmt_exact(val)})
    for j in range(args.depth):
        sj, tj = nt.pair(j)
        val = dedekind_negative_formula(neg, j).value
        neg_rows.append({"j": j, "s": str(sj), "t": str(tj), "S": fmt_exact(val)})
    payload["regular"] = reg_rows
    payload["negative"] = neg_rows
    _emit(payload, args)
    return 0


def cmd_clusters(args) -> int:
    z = _surd_arg(args)
    reg = expand_regular(z)
    neg = expand_negative(z)
    report = classify(z)
    payload = {
        "input": args.z,
        "regular": {"preperiod": list(reg.preperiod), "period": list(reg.period)},
        "negative": {"preperiod": list(neg.preperiod), "period": list(neg.period)},
        "classification": {"B": str(report.B), "D": str(report.D), "verdict": report.verdict},
    }
    if report.verdict == "bounded":
        co = coincidence_analysis(z)
        payload["clusters"] = {
            "U": [_cluster_json(p, args.precision) for p in co.U],
            "V": [_cluster_json(p, args.precision) for p in co.V],
            "pairs": [
                {"i": i, "h": h, "value": fmt_exact(val), "decimal": to_decimal(val, args.precision)}
                for i, h, val in co.pairs
            ],
        }
    else:
        payload["clusters"] = {"U": [], "V": [], "pairs": []}
    _emit(payload, args)
    return 0


def _cluster_json(point, precision: int) -> dict:
    out = {
        "class": point.class_index,
        "value": fmt_exact(point.value),
        "decimal": to_decimal(point.value, precision),
        "generator": fmt_exact(point.generator),
    }
    if point.parity:
        out["parity"] = point.parity
    return out


def cmd_probe(args) -> int:
    z = _surd_arg(args)
    try:
        report = convergence_probe(z, depth=args.depth)
    except ToleranceNotReached as exc:
        print(f"probe failed: {exc}", file=sys.stderr)
        return 3
    payload = {"input": args.z, "verdict": report.verdict}
    if report.drift_regular is not None:
        payload["drift_per_regular_period"] = fmt_exact(report.drift_regular)
        payload["drift_per_negative_period"] = fmt_exact(report.drift_negative)
    payload["classes"] = [
        {
            "side": cp.side,
            "class": cp.class_index,
            "cluster": fmt_exact(cp.cluster),
            "final_gap": to_decimal(cp.final_gap, 8) if report.verdict == "bounded" else fmt_exact(cp.final_gap),
        }
        for cp in report.classes
    ]
    _emit(payload, args)
    return 0


# -- verify: the embedded golden fixtures -------------------------------------

E_REGULAR_DIGITS = [2, 1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8, 1, 1, 10, 1, 1, 12]
E_NEGATIVE_DIGITS = [3, 4, 3] + [2] * 3 + [3, 8, 3] + [2] * 7 + [3, 12, 3] + [2] * 11

SQRT53_REGULAR = ((0, 7), (3, 1, 1, 3, 14))
SQRT53_NEGATIVE = ((1, 2, 2, 2, 2, 2, 2), (5, 3, 2, 2, 16, 2, 2, 3, 5) + (2,) * 13)

SQRT53_PAIRS = {
    (1, 2): ((636, 60, 371), "2.89166"),
    (4, 4): ((-159, 54, 53), "4.41747"),
    (7, 6): ((-2862, 60, 371), "-6.53690"),
    (8, 8): ((-1749, 57, 212), "-6.29261"),
    (22, 10): ((477, 57, 212), "4.20738"),
}
SQRT53_V12 = (-13833, 97, 2332)
SQRT53_U7 = (-1749, -46, 371)


def run_verify(out=None) -> int:
    """Check every embedded golden fixture; one pass/fail line each."""
    if out is None:
        out = sys.stdout
    failures = 0

    def check(label: str, ok: bool, detail: str = ""):
        nonlocal failures
        if not ok:
            failures += 1
        tail = f"  {detail}" if detail and not ok else ""
        print(f"{'PASS' if ok else 'FAIL'}  {label}{tail}", file=out)

    # Euler's number, digit-stream mode
    trans = transition_prefix(E_REGULAR_DIGITS)
    check("e: transition prefix", trans == E_NEGATIVE_DIGITS[: len(trans)], f"{trans}")
    nt = convergents(E_NEGATIVE_DIGITS, 17, kind="negative")
    expected = {1: (11, 4), 5: (87, 32), 6: (193, 71), 7: (1457, 536),
                15: (23225, 8544), 16: (49171, 18089), 17: (566827, 208524)}
    check("e: ceiling convergents", all(nt.pair(j) == v for j, v in expected.items()))
    flagged = [j for j in range(1, 18) if is_floor_convergent(E_NEGATIVE_DIGITS, j)]
    check("e: floor-convergent flags", flagged == sorted(expected))
    rt = convergents(E_REGULAR_DIGITS, 17, kind="regular")
    matches = [rt.pair(k) for k in (3, 5, 7, 9, 11, 13, 15)]
    check("e: matched floor convergents", [expected[j] for j in sorted(expected)] == matches)
    d2 = intercalary_decompose_digits(E_REGULAR_DIGITS, E_NEGATIVE_DIGITS, 2)
    d8 = intercalary_decompose_digits(E_REGULAR_DIGITS, E_NEGATIVE_DIGITS, 8)
    check("e: intercalary forms", (d2.kind, d2.k, d2.i) == ("intercalary", 4, 1)
          and (d8.kind, d8.k, d8.i) == ("intercalary", 10, 1))

    # 1/sqrt(53)
    z = parse_surd("1/sqrt(53)").value
    reg = expand_regular(z)
    neg = expand_negative(z)
    check("sqrt53: regular expansion", (reg.preperiod, reg.period) == SQRT53_REGULAR)
    check("sqrt53: negative expansion", (neg.preperiod, neg.period) == SQRT53_NEGATIVE)
    try:
        co = coincidence_analysis(z)
    except CfdedError as exc:
        check("sqrt53: coincidence analysis", False, str(exc))
        print(f"{failures} failure(s)" if failures else "all golden fixtures pass", file=out)
        return 3
    got_pairs = {(i, h): val for i, h, val in co.pairs}
    ok = set(got_pairs) == set(SQRT53_PAIRS)
    for (i, h), ((a, b, c), dec) in SQRT53_PAIRS.items():
        want = surd_normalize(a, b, c, 53)
        ok = ok and got_pairs.get((i, h)) == want and to_decimal(want, 5) == dec
    check("sqrt53: five coincidences", ok)
    check("sqrt53: structure", reg.L == 10 and neg.m == 22 and len(co.pairs) == 5
          and len(co.v_only) == 17 and len(co.u_only) == 5)
    v12 = next(p for p in co.V if p.class_index == 12)
    u7 = next(p for p in co.U if p.class_index == 7)
    check("sqrt53: near miss V_12 vs U_7",
          v12.value == surd_normalize(*SQRT53_V12, 53)
          and u7.value == surd_normalize(*SQRT53_U7, 53)
          and v12.value != u7.value)

    print(f"{failures} failure(s)" if failures else "all golden fixtures pass", file=out)
    return 3 if failures else 0


def cmd_verify(args) -> int:
    return run_verify()


# -- argument plumbing --------------------------------------------------------


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="cfded", description="Continued fractions and Dedekind sums, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)
    specs = {
        "expand": cmd_expand,
        "convergents": cmd_convergents,
        "dedekind": cmd_dedekind,
        "clusters": cmd_clusters,
        "probe": cmd_probe,
        "verify": cmd_verify,
    }
    for name, func in specs.items():
        p = sub.add_parser(name)
        p.add_argument("--z", help="quadratic surd expression, e.g. '1/sqrt(53)'")
        p.add_argument("--digits", help="digit list, e.g. '5,3,2^13'")
        p.add_argument("--digit-kind", choices=["regular", "negative"], default="regular")
        p.add_argument("--kind", choices=["regular", "negative"],
                       default="regular" if name == "convergents" else None)
        p.add_argument("--depth", type=int)
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--precision", type=int, default=5)
        p.set_defaults(func=func)
    return parser


_DEPTH_DEFAULTS = {"expand": 40, "convergents": 30, "dedekind": 10, "clusters": 6, "probe": 6, "verify": 6}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    if args.depth is None:
        args.depth = _DEPTH_DEFAULTS[args.command]
    try:
        return args.func(args)
    except (SurdSyntaxError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CfdedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
