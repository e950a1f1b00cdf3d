"""Filtration schemes and sifted sums.

A scheme is a decreasing chain of left classes ``C_0 >= C_1 >= ... >= C_n``
with one binary sum per level.  A term splits into level parts: ``L'_k`` is
its longest initial segment in ``C_k``, the part at level ``k`` is ``L'_k``
with ``L'_{k+1}`` removed from the front, and the residue is what lies
outside ``C_0``.  The sifted sum joins the two level parts with the level
sum, concatenates levels from the top down, then appends both residues.
"""
from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import ShapeError
from .ordinal import ZERO, Ordinal, hessenberg, lcm_sum
from .orderterm import OrderTerm, has_least_element, lift_ordinal_sum, normalize, term_add
from .sgc import Descriptor, W, membership, principal, split


@dataclass(frozen=True)
class Level:
    descriptor: Descriptor
    op: Callable
    name: str = "usual"


@dataclass(frozen=True)
class FiltrationScheme:
    levels: tuple
    name: str = ""


@dataclass(frozen=True)
class LevelParts:
    parts: tuple  # parts[k] belongs to level k
    residue: OrderTerm


def swapped_add(a: OrderTerm, b: OrderTerm) -> OrderTerm:
    return term_add(b, a)


LEVEL_SUMS = {
    "usual": term_add,
    "reversed": swapped_add,
    "hessenberg": lift_ordinal_sum(hessenberg),
    "lcm": lift_ordinal_sum(lcm_sum),
}


def hessenberg_scheme(exponents: Iterable = range(6)) -> FiltrationScheme:
    """Levels <w^e> for the given exponents (0 always included), usual sum on each."""
    exps = sorted({Ordinal.of(e) if isinstance(e, int) else e for e in exponents} | {ZERO})
    return FiltrationScheme(tuple(Level(principal(e), term_add) for e in exps), "hess")


def hessenberg_scheme_for(*terms: OrderTerm) -> FiltrationScheme:
    """The Hessenberg scheme with a level for every exponent occurring in the terms."""
    exps = {ZERO}
    for t in terms:
        if has_least_element(t):
            exps.update(e for e, _ in t.blocks[0].length.terms)
    levels = tuple(Level(principal(e), term_add) for e in sorted(exps))
    return FiltrationScheme(levels, "hess")


def level_parts(s: FiltrationScheme, t: OrderTerm) -> LevelParts:
    top, residue = split(s.levels[0].descriptor, t)
    parts = []
    for level in s.levels[1:]:
        top, below = split(level.descriptor, top)
        parts.append(below)
    parts.append(top)
    return LevelParts(tuple(parts), residue)


def sifted_sum(s: FiltrationScheme, a: OrderTerm, b: OrderTerm) -> OrderTerm:
    pa, pb = level_parts(s, a), level_parts(s, b)
    pieces = [level.op(x, y) for level, x, y in zip(s.levels, pa.parts, pb.parts)]
    return normalize(list(reversed(pieces)) + [pa.residue, pb.residue])


@dataclass(frozen=True)
class EffectivenessReport:
    ok: bool
    checked: int
    violations: tuple = ()


def effectiveness_check(s: FiltrationScheme, sample: Iterable) -> EffectivenessReport:
    """Per level, the part of a sifted sum is the level sum of the parts."""
    bad = []
    count = 0
    for a, b in sample:
        count += 1
        pa, pb = level_parts(s, a), level_parts(s, b)
        total = sifted_sum(s, a, b)
        pt = level_parts(s, total)
        pieces = [level.op(x, y) for level, x, y in zip(s.levels, pa.parts, pb.parts)]
        for k, expected in enumerate(pieces):
            if pt.parts[k] != expected:
                bad.append((a, b, k, pt.parts[k], expected))
        inner = normalize(list(reversed(pieces)))
        if not membership(s.levels[0].descriptor, inner):
            bad.append((a, b, "inner", inner, None))
    return EffectivenessReport(not bad, count, tuple(bad))


def parse_scheme(text: str, name: str = "") -> FiltrationScheme:
    """One level per line, ``DESCRIPTOR SUM``, widest class first; ``#`` starts a comment."""
    from .syntax import parse_descriptor
    levels = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            desc_text, sum_name = line.rsplit(None, 1)
        except ValueError:
            raise ShapeError(f"line {lineno}: expected 'DESCRIPTOR SUM'")
        if sum_name not in LEVEL_SUMS:
            raise ShapeError(f"line {lineno}: unknown level sum {sum_name!r}")
        levels.append(Level(parse_descriptor(desc_text), LEVEL_SUMS[sum_name], sum_name))
    if not levels:
        raise ShapeError("a scheme needs at least one level")
    return FiltrationScheme(tuple(levels), name)


def scheme_inclusion_check(s: FiltrationScheme, sample: Iterable[OrderTerm]) -> list:
    """Sample terms that sit in a level but not in the level above it."""
    sample = list(sample)
    return [(k, t) for k in range(1, len(s.levels)) for t in sample
            if membership(s.levels[k].descriptor, t)
            and not membership(s.levels[k - 1].descriptor, t)]


SINGLE_W = FiltrationScheme((Level(W, term_add),), "w")
W_THEN_OMEGA = FiltrationScheme((Level(W, term_add), Level(principal(1), term_add)), "w-omega")
