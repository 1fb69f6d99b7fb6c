"""Affine neighbourhood rules: apply, check and infer them exactly.

A rule maps a handful of cells above (or to the left of) a South cell to its
value::

    South = sum(coefficient * entry(South + offset)) + constant

Coefficients are ``Fraction`` throughout; nothing here touches floats.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import IntegralityError, ParseError, RuleApplicabilityError
from .linalg import rref, solve_exact
from .triangle import Cell, Triangle, _check_rows


@dataclass(frozen=True, order=True)
class RelativeOffset:
    drow: int
    dcol: int

    def __post_init__(self):
        if self.drow > 0:
            raise ValueError(f"offset {self} points below South")
        if (self.drow, self.dcol) == (0, 0):
            raise ValueError("offset (0,0) is South itself")

    def __str__(self) -> str:
        return DIRECTION_NAMES.get(self, f"({self.drow},{self.dcol})")

    def apply(self, cell: Cell) -> tuple[int, int]:
        return cell.row + self.drow, cell.col + self.dcol

    @property
    def precedes_south(self) -> bool:
        """True when row-major generation has already filled the target."""
        return self.drow < 0 or self.dcol < 0


E = RelativeOffset(-1, 0)
W = RelativeOffset(-1, -1)
N = RelativeOffset(-2, -1)
NW = RelativeOffset(-3, -1)

DIRECTIONS = {"E": E, "W": W, "N": N, "NW": NW}
DIRECTION_NAMES = {v: k for k, v in DIRECTIONS.items()}


@dataclass(frozen=True)
class AffineDiamondRule:
    terms: Mapping[RelativeOffset, Fraction]
    constant: Fraction = Fraction(0)

    def __post_init__(self):
        terms = {}
        for off, coef in dict(self.terms).items():
            if not isinstance(off, RelativeOffset):
                off = RelativeOffset(*off)
            if isinstance(coef, float):
                raise TypeError("rule coefficients must be exact (int or Fraction)")
            terms[off] = terms.get(off, Fraction(0)) + Fraction(coef)
        if isinstance(self.constant, float):
            raise TypeError("rule constant must be exact (int or Fraction)")
        const = Fraction(self.constant)
        if not terms and const == 0:
            raise ValueError("a rule needs at least one term or a nonzero constant")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "constant", const)

    __hash__ = None  # type: ignore[assignment]

    @property
    def offsets(self) -> tuple[RelativeOffset, ...]:
        return tuple(self.terms)

    def coefficient(self, offset: RelativeOffset) -> Fraction:
        return self.terms.get(offset, Fraction(0))

    def evaluate(self, t: Triangle, cell: Cell) -> Fraction:
        total = self.constant
        for off, coef in self.terms.items():
            total += coef * t.entry(*off.apply(cell))
        return total

    def applies_at(self, t: Triangle, cell: Cell) -> bool:
        return not cell.is_edge and all(t.contains(*off.apply(cell)) for off in self.terms)

    def to_text(self) -> str:
        parts = [f"{coef}*{off}" for off, coef in self.terms.items()]
        parts.append(str(self.constant))
        return " + ".join(parts)

    def to_dict(self) -> dict:
        return {
            "terms": [[off.drow, off.dcol, str(coef)] for off, coef in self.terms.items()],
            "constant": str(self.constant),
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "AffineDiamondRule":
        try:
            terms = {RelativeOffset(int(dr), int(dc)): Fraction(str(c))
                     for dr, dc, c in data["terms"]}
            return cls(terms, Fraction(str(data.get("constant", "0"))))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"malformed rule document: {exc}") from exc

    def __str__(self) -> str:
        return self.to_text()


PASCAL_RULE = AffineDiamondRule({E: 1, W: 1})
RASCAL_ADDITIVE_RULE = AffineDiamondRule({E: 1, W: 1, N: -1}, 1)


_TOKEN = re.compile(r"\(-?\d+,-?\d+\)|\d+(?:/\d+)?|[A-Za-z]+|\S")


def _offset_token(tok: str) -> RelativeOffset:
    if tok.startswith("("):
        dr, dc = (int(x) for x in tok[1:-1].split(","))
        try:
            return RelativeOffset(dr, dc)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    if tok.upper() in DIRECTIONS:
        return DIRECTIONS[tok.upper()]
    raise ParseError(f"unknown direction {tok!r}; expected one of {', '.join(DIRECTIONS)}")


def parse_rule(text: str) -> AffineDiamondRule:
    """Parse the text form, e.g. ``"E+W-N+1"`` or ``"1*E + 1*W + -1*N + 1"``.

    Directions are E, W, N, NW or an explicit ``(drow,dcol)``; coefficients
    may be rationals ``p/q``.  A bare number is the constant.
    """
    compact = "".join(text.split())
    if compact.upper().startswith(("S=", "SOUTH=")):
        compact = compact.split("=", 1)[1]
    tokens = _TOKEN.findall(compact)
    if not tokens:
        raise ParseError("empty rule text")
    terms: dict[RelativeOffset, Fraction] = {}
    constant = Fraction(0)
    pos = 0

    def take_signs() -> int:
        nonlocal pos
        sign = 1
        while pos < len(tokens) and tokens[pos] in "+-":
            if tokens[pos] == "-":
                sign = -sign
            pos += 1
        return sign

    first = True
    while pos < len(tokens):
        if not first and tokens[pos] not in "+-":
            raise ParseError(f"expected '+' or '-' before {tokens[pos]!r} in {text!r}")
        first = False
        sign = take_signs()
        if pos == len(tokens):
            raise ParseError(f"rule text ends with a dangling sign: {text!r}")
        coef = None
        if tokens[pos][0].isdigit():
            try:
                coef = Fraction(tokens[pos])
            except ZeroDivisionError as exc:
                raise ParseError(f"zero denominator in {tokens[pos]!r}") from exc
            pos += 1
            if pos < len(tokens) and tokens[pos] == "*":
                pos += 1
                sign *= take_signs()
                if pos == len(tokens):
                    raise ParseError(f"missing direction after '*' in {text!r}")
            elif pos == len(tokens) or tokens[pos] in "+-":
                constant += sign * coef
                continue
        off = _offset_token(tokens[pos])
        pos += 1
        terms[off] = terms.get(off, Fraction(0)) + sign * (coef if coef is not None else 1)
    try:
        return AffineDiamondRule(terms, constant)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_template(text: str) -> tuple[RelativeOffset, ...]:
    """Comma-separated direction list, e.g. ``"E,W,N"``."""
    offsets: list[RelativeOffset] = []
    for tok in re.findall(r"\(-?\d+,-?\d+\)|[^,()]+", "".join(text.split())):
        off = _offset_token(tok)
        if off not in offsets:
            offsets.append(off)
    if not offsets:
        raise ParseError(f"empty template {text!r}")
    return tuple(offsets)


def generate_with_rule(rule: AffineDiamondRule, num_rows: int, name: str | None = None) -> Triangle:
    """Edges fixed to 1, interior cells filled row-major by ``rule``."""
    _check_rows(num_rows)
    for off in rule.terms:
        if not off.precedes_south:
            raise RuleApplicabilityError(f"offset {off} is not filled before South in row-major order")
    rows: list[list[int]] = []
    for n in range(num_rows):
        r = [1] * (n + 1)
        rows.append(r)
        for k in range(1, n):
            value = rule.constant
            for off, coef in rule.terms.items():
                rr, cc = n + off.drow, k + off.dcol
                if not (0 <= rr and 0 <= cc <= rr):
                    raise RuleApplicabilityError(
                        f"offset {off} from cell ({n},{k}) reaches ({rr},{cc}), outside the triangle")
                value += coef * rows[rr][cc]
            if value.denominator != 1:
                raise IntegralityError(Cell(n, k), f"rule gives {value} at cell ({n},{k})")
            r[k] = int(value)
    return Triangle(name or f"rule:{rule.to_text()}", rows)


@dataclass(frozen=True)
class Violation:
    cell: Cell
    expected: Fraction
    actual: int

    def __str__(self) -> str:
        return f"cell {self.cell}: expected {self.expected}, found {self.actual}"


@dataclass
class RuleReport:
    holds: bool
    violations: list[Violation] = field(default_factory=list)
    cells_checked: int = 0


def applicable_cells(t: Triangle, offsets: Iterable[RelativeOffset]) -> list[Cell]:
    offsets = tuple(offsets)
    return [c for c in t.cells(interior_only=True)
            if all(t.contains(*off.apply(c)) for off in offsets)]


def check_rule(rule: AffineDiamondRule, t: Triangle) -> RuleReport:
    cells = applicable_cells(t, rule.terms)
    if not cells:
        raise RuleApplicabilityError(f"rule {rule} applies at no cell of {t.name!r} ({len(t)} rows)")
    violations = []
    for c in cells:
        expected = rule.evaluate(t, c)
        actual = t.entry(c.row, c.col)
        if expected != actual:
            violations.append(Violation(c, expected, actual))
    return RuleReport(not violations, violations, len(cells))


def infer_affine_rule(t: Triangle, template: Iterable[RelativeOffset],
                      use_constant: bool = True) -> AffineDiamondRule | None:
    """Fit an affine rule over ``template`` exactly, then validate it everywhere.

    Sample cells are taken in row-major order, skipping any whose equation is
    linearly dependent on those already chosen, until the system is square
    and nonsingular.  The unique solution is accepted only if it reproduces
    every applicable cell.
    """
    template = tuple(template)
    if not template:
        raise RuleApplicabilityError("template is empty")
    cells = applicable_cells(t, template)
    if len(cells) < len(template) + 1:
        raise RuleApplicabilityError(
            f"{len(cells)} applicable cells in {t.name!r}; need at least {len(template) + 1}")
    unknowns = len(template) + (1 if use_constant else 0)

    def equation(c: Cell) -> list[Fraction]:
        xs = [Fraction(t.entry(*off.apply(c))) for off in template]
        return xs + [Fraction(1)] if use_constant else xs

    a: list[list[Fraction]] = []
    b: list[int] = []
    for c in cells:
        candidate = a + [equation(c)]
        if len(rref(candidate)[1]) == len(candidate):
            a, b = candidate, b + [t.entry(c.row, c.col)]
            if len(a) == unknowns:
                break
    if len(a) < unknowns:
        return None
    x = solve_exact(a, b)
    if x is None:
        return None
    rule = AffineDiamondRule(dict(zip(template, x)), x[-1] if use_constant else Fraction(0))
    return rule if check_rule(rule, t).holds else None
