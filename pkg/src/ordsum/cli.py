"""Command-line front end.

Exit codes: 0 success, 1 a check came out false, 2 usage or parse error,
3 capacity exceeded.
"""
import argparse
import json
import sys
from pathlib import Path

from . import complicated, sift
from .bicolor import enumerate_bicolorings
from .errors import CapacityError, OrdsumError, ParseError
from .instances import check_bounds, enumerate_instances
from .ordinal import SUMS
from .selftest import SUITES, run_suites
from .sgc import decompose, simple_sum
from .shuffle import shuffle_sum
from .syntax import parse_descriptor, parse_expr, parse_ordinal

SCHEMES = {"w": sift.SINGLE_W, "w-omega": sift.W_THEN_OMEGA}


class Output:
    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def emit(self, kind: str, value, text: str = None, **meta):
        text = str(value) if text is None else text
        if self.as_json:
            record = {"v": 1, "kind": kind, "expr": str(value), "meta": meta}
            print(json.dumps(record, sort_keys=True), file=self.stream)
        else:
            print(text, file=self.stream)


def cmd_ord_sum(args, out):
    a, b = parse_ordinal(args.a), parse_ordinal(args.b)
    out.emit("ordinal", SUMS[args.op](a, b), op=args.op)
    return 0


def cmd_instances(args, out):
    a, b = parse_ordinal(args.a), parse_ordinal(args.b)
    for g in enumerate_instances(a, b):
        out.emit("instance", g)
    report = check_bounds(a, b)
    out.emit("bounds", report.upper, str(report), lower=str(report.lower), ok=report.ok,
             lower_attained=report.lower_attained, upper_attained=report.upper_attained)
    return 0


def cmd_normalize(args, out):
    out.emit("term", parse_expr(args.term))
    return 0


def cmd_eq(args, out):
    same = parse_expr(args.t1) == parse_expr(args.t2)
    out.emit("bool", "true" if same else "false")
    return 0 if same else 1


def cmd_decompose(args, out):
    d = decompose(parse_descriptor(args.cls), parse_expr(args.term))
    out.emit("left", d.left, f"left: {d.left}", cls=args.cls)
    out.emit("right", d.right, f"right: {d.right}", cls=args.cls)
    return 0


def cmd_simple_sum(args, out):
    out.emit("term", simple_sum(parse_descriptor(args.cls), parse_expr(args.a), parse_expr(args.b)), cls=args.cls)
    return 0


def cmd_sift(args, out):
    a, b = parse_expr(args.a), parse_expr(args.b)
    if args.scheme_file:
        scheme = sift.parse_scheme(Path(args.scheme_file).read_text(encoding="utf-8"), args.scheme_file)
    elif args.scheme == "hess":
        scheme = sift.hessenberg_scheme_for(a, b)
    else:
        scheme = SCHEMES[args.scheme]
    out.emit("term", sift.sifted_sum(scheme, a, b), scheme=scheme.name)
    return 0


def cmd_shuffle_sum(args, out):
    out.emit("term", shuffle_sum(parse_expr(args.s1), parse_expr(args.s2)))
    return 0


def cmd_encode(args, out):
    out.emit("term", complicated.encode_word(args.word), word=args.word)
    return 0


def cmd_decode(args, out):
    out.emit("word", complicated.decode_word(parse_expr(args.term)))
    return 0


def read_table(path: str) -> complicated.SumTable:
    rows = []
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        cells = [c.strip() for c in line.split("|")]
        if len(cells) != 3:
            raise ParseError(f"{path}:{lineno}: expected 'lhs | rhs | result'", raw, 0)
        rows.append(tuple(parse_expr(c) for c in cells))
    return complicated.SumTable.from_rows(rows)


def cmd_check_table(args, out):
    table = read_table(args.file)
    report = complicated.check_good_table(table)
    for line in str(report).splitlines():
        out.emit("table", "ok" if report.ok else "fail", line, triples=report.triples)
    return 0 if report.ok else 1


def cmd_bicolor(args, out):
    count, colorings = enumerate_bicolorings(args.m, args.n)
    out.emit("count", count, f"count: {count}", m=args.m, n=args.n)
    if args.list:
        for k, c in enumerate(colorings):
            rows = [list(r) for r in c.rows]
            if not out.as_json and k:
                print(file=out.stream)
            out.emit("bicoloring", c.render(), c.render() or "(empty)", index=k, rows=rows)
    return 0


def cmd_selftest(args, out):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = run_suites(names)
    for suite, check, ok in results:
        out.emit("check", "pass" if ok else "fail", f"{'PASS' if ok else 'FAIL'} {suite}: {check}", suite=suite)
    return 0 if all(ok for _, _, ok in results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ordsum", description="Sums of linear orders.")
    p.add_argument("--json", action="store_true", help="one JSON record per result")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ord-sum", help="a named sum of two ordinals")
    s.add_argument("--op", choices=sorted(SUMS), required=True)
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_ord_sum)

    s = sub.add_parser("instances", help="all instance types of a sum of two ordinals")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_instances)

    s = sub.add_parser("normalize", help="normal form of a term")
    s.add_argument("term")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("eq", help="isomorphism of two terms; exits 1 when false")
    s.add_argument("t1")
    s.add_argument("t2")
    s.set_defaults(func=cmd_eq)

    s = sub.add_parser("decompose", help="split a term by a class")
    s.add_argument("--class", dest="cls", required=True)
    s.add_argument("term")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("simple-sum", help="the simple sum over a left class")
    s.add_argument("--class", dest="cls", required=True)
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_simple_sum)

    s = sub.add_parser("sift", help="a sifted sum")
    s.add_argument("--scheme", choices=["hess", *SCHEMES], default="hess")
    s.add_argument("--scheme-file", help="levels as 'DESCRIPTOR SUM' lines, widest first")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_sift)

    s = sub.add_parser("shuffle-sum", help="the good sum on shuffles")
    s.add_argument("s1")
    s.add_argument("s2")
    s.set_defaults(func=cmd_shuffle_sum)

    s = sub.add_parser("encode", help="encode a binary word")
    s.add_argument("word")
    s.set_defaults(func=cmd_encode)

    s = sub.add_parser("decode", help="decode a word encoding")
    s.add_argument("term")
    s.set_defaults(func=cmd_decode)

    s = sub.add_parser("check-table", help="check a 'lhs | rhs | result' sum table")
    s.add_argument("file")
    s.set_defaults(func=cmd_check_table)

    s = sub.add_parser("bicolor", help="product bi-colorings")
    bsub = s.add_subparsers(dest="action", required=True)
    e = bsub.add_parser("enum", help="count (and list) the bi-colorings of M x N")
    e.add_argument("m", type=int)
    e.add_argument("n", type=int)
    e.add_argument("--list", action="store_true")
    e.set_defaults(func=cmd_bicolor)

    s = sub.add_parser("selftest", help="run the built-in property suites")
    s.add_argument("suite", nargs="?", default="all", choices=["all", *SUITES])
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args.json)
    try:
        return args.func(args, out)
    except CapacityError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (OrdsumError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
