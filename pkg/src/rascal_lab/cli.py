"""Command-line front end.

Exit codes: 0 success / PASS, 1 FAIL (pattern or equivalence violated, or a
generator hit a non-integer), 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import files
from .errors import IntegralityError, RascalError
from .patterns import (RingKind, RingSpec, ashley_verify, even_diamond_check, even_diamond_verify,
                       inner_diamond, odd_diamond_check, odd_diamond_verify, ring_cells, ring_fits,
                       tmeg_verify)
from .rules import check_rule, generate_with_rule, infer_affine_rule, parse_rule, parse_template
from .sequences import DiagonalFamily, ap_profile, diagonal
from .triangle import GENERATORS, Cell, Triangle, build_pascal, build_rascal_diamond, first_difference

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

KINDS = ("pascal", "rascal-diamond", "rascal-additive", "rascal-diagonal", "rule")
PATTERNS = ("tmeg", "ashley", "odd-diamond", "even-diamond", "rule", "equivalence")


class UsageError(RascalError):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _cell(text: str) -> Cell:
    try:
        r, c = (int(x) for x in text.replace("(", "").replace(")", "").split(","))
        return Cell(r, c)
    except (ValueError, RascalError):
        raise argparse.ArgumentTypeError(f"expected 'row,col' with 0 <= col <= row, got {text!r}") from None


def _add_source(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("input", nargs="?", help="triangle file (JSON or CSV); '-' reads stdin")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--rascal", type=_positive, metavar="ROWS", help="built-in Rascal triangle")
    g.add_argument("--pascal", type=_positive, metavar="ROWS", help="built-in Pascal triangle")
    p.set_defaults(source_required=required)


def _load_source(args) -> Triangle | None:
    if args.rascal is not None:
        return build_rascal_diamond(args.rascal)
    if args.pascal is not None:
        return build_pascal(args.pascal)
    if args.input is None:
        if args.source_required:
            raise UsageError("no triangle given: pass a file, --rascal ROWS or --pascal ROWS")
        return None
    if args.input == "-":
        return files.loads(sys.stdin.read(), name="stdin")
    return files.load(args.input)


def _build(kind: str, rows: int, rule_text: str | None = None) -> Triangle:
    if kind == "rule":
        if not rule_text:
            raise UsageError("kind 'rule' needs a rule, e.g. generate rule \"E+W-N+1\" 5")
        return generate_with_rule(parse_rule(rule_text), rows)
    return GENERATORS[kind](rows)


# -- commands --------------------------------------------------------------

def cmd_generate(args, out) -> int:
    rest = list(args.args)
    rule_text = args.rule
    if args.kind == "rule" and rule_text is None and rest:
        rule_text = rest.pop(0)
    rows = args.rows
    if rest:
        if len(rest) > 1 or rows is not None:
            raise UsageError(f"unexpected arguments: {' '.join(rest)}")
        rows = _positive_or_usage(rest[0])
    if rows is None:
        raise UsageError("number of rows missing")
    out.write(files.dumps(_build(args.kind, rows, rule_text), args.format))
    return EXIT_OK


def _positive_or_usage(text: str) -> int:
    try:
        return _positive(text)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(str(exc)) from None


def cmd_export(args, out) -> int:
    out.write(files.dumps(_load_source(args), args.format))
    return EXIT_OK


def _reference_for(t: Triangle, against: str | None) -> Triangle:
    if against is None:
        against = t.name
        if against.startswith("rule:"):
            return generate_with_rule(parse_rule(against[5:]), len(t))
        if against not in GENERATORS:
            against = "rascal"
    if against in GENERATORS:
        return GENERATORS[against](len(t))
    if Path(against).exists():
        return files.load(against)
    raise UsageError(f"--against must be one of {', '.join(GENERATORS)} or a file, got {against!r}")


def _verify_equivalence(args, out) -> int:
    t = _load_source(args)
    if t is None:
        rows = args.rows or 201
        reference = GENERATORS["rascal"](rows)
        candidates = [GENERATORS[k](rows) for k in ("rascal-diamond", "rascal-additive", "rascal-diagonal")]
    else:
        reference = _reference_for(t, args.against)
        candidates = [t]
    ok = True
    for cand in candidates:
        diff = first_difference(cand, reference)
        if diff is None:
            out.write(f"PASS equivalence: {cand.name} == {reference.name} ({len(cand)} rows)\n")
            continue
        ok = False
        if cand.contains(*diff) and reference.contains(*diff):
            out.write(f"FAIL equivalence: {cand.name} vs {reference.name}\n"
                      f"cell {diff}: expected {reference.entry(*diff)}, found {cand.entry(*diff)}\n")
        else:
            out.write(f"FAIL equivalence: {cand.name} has {len(cand)} rows, "
                      f"{reference.name} has {len(reference)}\n")
    return EXIT_OK if ok else EXIT_FAIL


def _verify_diamonds(args, t: Triangle, out) -> int:
    kind = RingKind.ODD if args.pattern == "odd-diamond" else RingKind.EVEN
    anchor = args.center if kind is RingKind.ODD else args.apex
    if anchor is None or args.all:
        report = odd_diamond_verify(t) if kind is RingKind.ODD else even_diamond_verify(t)
        out.write(report.render(args.limit) + "\n")
        return EXIT_OK if report.holds else EXIT_FAIL
    check = odd_diamond_check if kind is RingKind.ODD else even_diamond_check
    if args.level is not None:
        levels = [args.level]
    else:
        first = 1 if kind is RingKind.ODD else 2
        levels = []
        m = first
        while ring_fits(RingSpec(kind, anchor, m), len(t)):
            levels.append(m)
            m += 1
        if not levels:
            raise UsageError(f"no {kind.value} ring around {anchor} fits in {len(t)} rows")
    results = [check(t, anchor, m) for m in levels]
    ok = all(r.holds for r in results)
    out.write(("PASS" if ok else "FAIL") + f" {args.pattern}\n")
    for r in results:
        out.write(f"{r}\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args, out) -> int:
    if args.pattern == "equivalence":
        return _verify_equivalence(args, out)
    t = _load_source(args)
    if t is None:
        raise UsageError(f"verify {args.pattern} needs a file, --rascal ROWS or --pascal ROWS")
    if args.pattern in ("odd-diamond", "even-diamond"):
        return _verify_diamonds(args, t, out)
    if args.pattern == "rule":
        if not args.rule:
            raise UsageError("verify rule needs --rule")
        rep = check_rule(parse_rule(args.rule), t)
        verdict = "PASS" if rep.holds else "FAIL"
        out.write(f"{verdict} rule {parse_rule(args.rule)}: {rep.cells_checked} checked, "
                  f"{len(rep.violations)} counterexamples\n")
        shown = rep.violations if args.limit is None else rep.violations[:args.limit]
        for v in shown:
            out.write(f"{v}\n")
        if len(shown) < len(rep.violations):
            out.write(f"... {len(rep.violations) - len(shown)} more\n")
        return EXIT_OK if rep.holds else EXIT_FAIL
    report = tmeg_verify(t) if args.pattern == "tmeg" else ashley_verify(t)
    out.write(report.render(args.limit) + "\n")
    return EXIT_OK if report.holds else EXIT_FAIL


def cmd_mine(args, out) -> int:
    t = _load_source(args)
    template = parse_template(args.template)
    rule = infer_affine_rule(t, template, args.constant)
    out.write(f"{rule.to_text()}\n" if rule is not None else "no rule found\n")
    return EXIT_OK


def cmd_render(args, out) -> int:
    out.write(files.render(_load_source(args)))
    return EXIT_OK


def cmd_diagonal(args, out) -> int:
    t = _load_source(args)
    indices = [args.index] if args.index is not None else range(len(t))
    for i in indices:
        seq = diagonal(t, args.family, i)
        if args.profile:
            if len(seq) < 2:
                desc = "too-short"
            else:
                prof = ap_profile(seq)
                desc = f"start={prof.start},difference={prof.difference}" if prof else "not-arithmetic"
            out.write(f"{i},{desc}\n")
        else:
            out.write(",".join(str(v) for v in seq) + "\n")
    return EXIT_OK


def cmd_ring(args, out) -> int:
    t = _load_source(args)
    if (args.center is None) == (args.apex is None):
        raise UsageError("give exactly one of --center (odd ring) or --apex (even ring)")
    if args.center is not None:
        spec = RingSpec(RingKind.ODD, args.center, args.level)
    else:
        spec = RingSpec(RingKind.EVEN, args.apex, args.level)
    cells = ring_cells(spec, len(t))
    values = [t.entry(*c) for c in cells]
    out.write("cells: " + " ".join(str(c) for c in cells) + "\n")
    out.write("values: " + "+".join(str(v) for v in values) + f" = {sum(values)}\n")
    if spec.kind is RingKind.ODD:
        centre = t.entry(*spec.anchor)
        out.write(f"center {spec.anchor} = {centre}; {len(cells)}*{centre} = {len(cells) * centre}\n")
    elif spec.level >= 2:
        inner = sum(t.entry(*c) for c in inner_diamond(spec.anchor))
        out.write(f"inner diamond sum = {inner}; {2 * spec.level - 1}*{inner} = "
                  f"{(2 * spec.level - 1) * inner}\n")
    return EXIT_OK


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rascal-lab",
                                     description="Exact experiments on Pascal and Rascal triangles.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build a triangle and print it")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("args", nargs="*", metavar="[RULE] ROWS")
    p.add_argument("--rows", type=_positive)
    p.add_argument("--rule", help="rule text for kind 'rule', e.g. 'E+W-N+1'")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("export", help="re-serialise a triangle")
    _add_source(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify", help="check a pattern, rule or generator equivalence")
    p.add_argument("pattern", choices=PATTERNS)
    _add_source(p, required=False)
    p.add_argument("--all", action="store_true", help="sweep every valid anchor and level")
    p.add_argument("--center", type=_cell, help="odd ring centre as row,col")
    p.add_argument("--apex", type=_cell, help="even ring inner-diamond apex as row,col")
    p.add_argument("--level", type=_positive)
    p.add_argument("--rule", help="rule text for 'verify rule'")
    p.add_argument("--against", help="reference generator kind or file for 'verify equivalence'")
    p.add_argument("--rows", type=_positive, help="rows for the built-in equivalence sweep (default 201)")
    p.add_argument("--limit", type=int, default=20, help="max counterexample lines")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mine", help="infer an affine rule that reproduces the triangle")
    _add_source(p)
    p.add_argument("--template", required=True, help="comma-separated directions, e.g. E,W,N")
    p.add_argument("--constant", action="store_true", help="allow a constant term")
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("render", help="centred text layout")
    _add_source(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("diagonal", help="print diagonals as CSV rows")
    _add_source(p)
    p.add_argument("--family", choices=[f.value for f in DiagonalFamily], default="constant-col")
    p.add_argument("--index", type=int)
    p.add_argument("--profile", action="store_true", help="print arithmetic-progression profiles")
    p.set_defaults(func=cmd_diagonal)

    p = sub.add_parser("ring", help="list a diamond ring and its sums")
    _add_source(p)
    p.add_argument("--center", type=_cell)
    p.add_argument("--apex", type=_cell)
    p.add_argument("--level", type=_positive, default=1)
    p.set_defaults(func=cmd_ring)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except IntegralityError as exc:
        err.write(f"error: integrality violation at cell {exc.cell}: {exc}\n")
        return EXIT_FAIL
    except RascalError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
