"""Sum-generating classes, their decompositions and simple sums.

A descriptor names a class of orders.  Every descriptor ``d`` comes with a
``split(d, t) -> (L, R)``: for a left class, ``L`` is the longest initial
segment of ``t`` in the class and ``R`` lies in the complement; for a right
class, ``R`` is the longest final segment in the class.  Membership, the
rigidity decomposition and the simple sum are all read off that split.

Involutions: ``perp`` (complement), ``dual`` and ``inverse``.  Any two
distinct ones compose to the third, and each squares to the identity.
"""
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import CapacityError, ShapeError
from .ordinal import ONE, ZERO, Ordinal, render_ordinal
from .orderterm import (
    EMPTY, ONE_TERM, OMEGA_TERM, Ord, OrderTerm, Shuffle,
    normalize, reversed_ordinal_term, scattered_prefix, shuffle_term, term_reverse,
)

SEARCH_DEPTH = 8

LEFT, RIGHT = "left", "right"

_BASE_NAMES = {
    "zero": "0",
    "all": "LO",
    "w": "W",
    "wstar": "W*",
    "scattered": "S",
    "genq": "genQ",
    "genwq": "genwQ",
    "genq1": "genQ1",
}


class Descriptor:
    chirality = LEFT


@dataclass(frozen=True)
class Base(Descriptor):
    kind: str
    chirality: str = LEFT
    exponent: Optional[Ordinal] = None  # generator w^exponent, for kind "principal"

    def __str__(self):
        if self.kind == "principal":
            name = f"P({render_ordinal(Ordinal.omega_power(self.exponent))})"
        else:
            name = _BASE_NAMES[self.kind]
        return name if self.chirality == LEFT else f"inv({name})"


@dataclass(frozen=True)
class Involution(Descriptor):
    kind: str  # perp | dual | inverse
    inner: Descriptor

    @property
    def chirality(self):
        if self.kind == "dual":
            return self.inner.chirality
        return _flip(self.inner.chirality)

    def __str__(self):
        return f"{_INVOLUTION_NAMES[self.kind]}({self.inner})"


@dataclass(frozen=True)
class Plus(Descriptor):
    left: Descriptor
    right: Descriptor

    def __post_init__(self):
        _same_chirality(self.left, self.right)

    @property
    def chirality(self):
        return self.left.chirality

    def __str__(self):
        return f"plus({self.left},{self.right})"


@dataclass(frozen=True)
class Times(Descriptor):
    left: Descriptor
    right: Descriptor

    def __post_init__(self):
        _same_chirality(self.left, self.right)

    @property
    def chirality(self):
        return self.left.chirality

    def __str__(self):
        return f"times({self.left},{self.right})"


_INVOLUTION_NAMES = {"perp": "perp", "dual": "dual", "inverse": "inv"}


def _flip(chirality: str) -> str:
    return RIGHT if chirality == LEFT else LEFT


def _same_chirality(l: Descriptor, r: Descriptor):
    if l.chirality != r.chirality:
        raise ShapeError(f"{l} and {r} have different chirality")


ZERO_CLASS = Base("zero")
ALL = Base("all")
W = Base("w")
WSTAR = Base("wstar")
SCATTERED = Base("scattered")
GEN_Q = Base("genq")
GEN_OMEGA_Q = Base("genwq")
GEN_Q_PLUS_1 = Base("genq1")


def principal(exponent) -> Base:
    """The class generated by w^exponent; the exponent 0 gives the well-orders."""
    if isinstance(exponent, int):
        exponent = Ordinal.of(exponent)
    return W if not exponent else Base("principal", LEFT, exponent)


def principal_exponent(d: Descriptor) -> Optional[Ordinal]:
    if d == W:
        return ZERO
    if isinstance(d, Base) and d.kind == "principal" and d.chirality == LEFT:
        return d.exponent
    return None


@dataclass(frozen=True)
class Decomposition:
    left: OrderTerm
    right: OrderTerm


# base splits, all for left chirality

_Q = Shuffle((ONE_TERM,))
_ONE_BLOCK = Ord(ONE)


def _cut(blocks, i) -> tuple:
    return OrderTerm(tuple(blocks[:i])), OrderTerm(tuple(blocks[i:]))


def _split_w(t: OrderTerm) -> tuple:
    return _cut(t.blocks, 1 if t.blocks and isinstance(t.blocks[0], Ord) else 0)


def _split_wstar(t: OrderTerm) -> tuple:
    # the final ordinal part of the reversal carries every maximum
    l, r = _split_w(term_reverse(t))
    return term_reverse(r), term_reverse(l)


def _split_principal(t: OrderTerm, exponent: Ordinal) -> tuple:
    if not t.blocks or not isinstance(t.blocks[0], Ord):
        return EMPTY, t
    terms = t.blocks[0].length.terms
    high = tuple(p for p in terms if p[0] >= exponent)
    low = terms[len(high):]
    left = normalize([Ord(Ordinal._raw(high))])
    return left, normalize([Ord(Ordinal._raw(low))] + list(t.blocks[1:]))


def _split_genq(t: OrderTerm) -> tuple:
    b = t.blocks
    if b[:1] == (_Q,):
        return _cut(b, 1)
    if b[:2] == (_ONE_BLOCK, _Q):
        return _cut(b, 2)
    return EMPTY, t


def _split_genwq(t: OrderTerm) -> tuple:
    # pieces: limit ordinals, Q, and 1 + Q
    b = t.blocks
    i = 0
    while i < len(b):
        if b[i] == _Q:
            i += 1
            continue
        if not isinstance(b[i], Ord):
            break
        n = b[i].length.finite_part()
        if n == 0:
            i += 1
            continue
        if n == 1 and b[i + 1:i + 2] == (_Q,):
            i += 2
            continue
        limit = b[i].length.limit_part()
        return (normalize(list(b[:i]) + [Ord(limit)]),
                normalize([Ord(Ordinal.of(n))] + list(b[i + 1:])))
    return _cut(b, i)


def _split_genq1(t: OrderTerm) -> tuple:
    i = 0
    while i < len(t.blocks) and (isinstance(t.blocks[i], Ord) or t.blocks[i] == _Q):
        i += 1
    return _cut(t.blocks, i)


_BASE_SPLITS = {
    "zero": lambda t: (EMPTY, t),
    "all": lambda t: (t, EMPTY),
    "w": _split_w,
    "wstar": _split_wstar,
    "scattered": scattered_prefix,
    "genq": _split_genq,
    "genwq": _split_genwq,
    "genq1": _split_genq1,
}


def _split_base(d: Base, t: OrderTerm) -> tuple:
    if d.chirality == RIGHT:
        l, r = _split_base(Base(d.kind, LEFT, d.exponent), term_reverse(t))
        return term_reverse(r), term_reverse(l)
    if d.kind == "principal":
        return _split_principal(t, d.exponent)
    return _BASE_SPLITS[d.kind](t)


def _class_part(d: Descriptor, t: OrderTerm) -> tuple:
    # (part of t in d, remainder), whichever side d works from
    l, r = split(d, t)
    return (l, r) if d.chirality == LEFT else (r, l)


def _attach(d: Descriptor, inner: OrderTerm, outer: OrderTerm) -> OrderTerm:
    # put outer back on the far side of inner
    return normalize([inner, outer] if d.chirality == LEFT else [outer, inner])


def split(d: Descriptor, t: OrderTerm) -> tuple:
    if isinstance(d, Base):
        return _split_base(d, t)
    if isinstance(d, Involution):
        if d.kind == "perp":
            return split(d.inner, t)
        l, r = split(d.inner, term_reverse(t))
        return term_reverse(r), term_reverse(l)
    if isinstance(d, Times):
        return _split_times(d, t)
    if isinstance(d, Plus):
        return _split_plus(d, t)
    raise TypeError(f"not a descriptor: {d!r}")


def _split_times(d: Times, t: OrderTerm) -> tuple:
    inside, outside = t, EMPTY
    while True:
        before = inside
        for c in (d.left, d.right):
            inside, extra = _class_part(c, inside)
            outside = _attach(d, extra, outside)
        if inside == before:
            break
    return (inside, outside) if d.chirality == LEFT else (outside, inside)


def _split_plus(d: Plus, t: OrderTerm) -> tuple:
    inside, rest = EMPTY, t
    for _ in range(SEARCH_DEPTH):
        grown = False
        for c in (d.left, d.right):
            part, rest = _class_part(c, rest)
            if part:
                grown = True
                inside = _attach(d, inside, part)
        if not grown or not rest:
            return (inside, rest) if d.chirality == LEFT else (rest, inside)
    raise CapacityError(f"membership search for {d} exceeded depth {SEARCH_DEPTH}")


# public operations

def membership(c: Descriptor, t: OrderTerm) -> bool:
    l, r = split(c, t)
    return not r if c.chirality == LEFT else not l


def decompose(c: Descriptor, t: OrderTerm) -> Decomposition:
    return Decomposition(*split(c, t))


def _require_left(c: Descriptor):
    if c.chirality != LEFT:
        raise ShapeError(f"simple sums need a left class, {c} is right")


def simple_sum(c: Descriptor, a: OrderTerm, b: OrderTerm) -> OrderTerm:
    """b_L + a + b_R over the decomposition of b."""
    _require_left(c)
    bl, br = split(c, b)
    return normalize([bl, a, br])


def sgc_extend(c: Descriptor, inner: Callable) -> Callable:
    """(a, b) -> inner(a_L, b_L) + a_R + b_R."""
    _require_left(c)

    def extended(a: OrderTerm, b: OrderTerm) -> OrderTerm:
        al, ar = split(c, a)
        bl, br = split(c, b)
        return normalize([inner(al, bl), ar, br])
    extended.__name__ = f"extended_{getattr(inner, '__name__', 'sum')}"
    return extended


_THIRD = {
    frozenset({"perp", "dual"}): "inverse",
    frozenset({"perp", "inverse"}): "dual",
    frozenset({"dual", "inverse"}): "perp",
}

_BASE_TABLE = {
    ("dual", "w"): "wstar",
    ("dual", "wstar"): "w",
    ("dual", "zero"): "all",
    ("dual", "all"): "zero",
    ("perp", "zero"): "all",
    ("perp", "all"): "zero",
    ("inverse", "zero"): "zero",
    ("inverse", "all"): "all",
    ("inverse", "scattered"): "scattered",
}


def involution(kind: str, c: Descriptor) -> Descriptor:
    if kind not in _INVOLUTION_NAMES:
        raise ValueError(f"unknown involution {kind!r}")
    if isinstance(c, Involution):
        if c.kind == kind:
            return c.inner
        return involution(_THIRD[frozenset({kind, c.kind})], c.inner)
    if isinstance(c, Base):
        if (kind, c.kind) in _BASE_TABLE:
            return _table_base(kind, c)
        # k(c) = third(other(c)); pick one spelling so equal classes compare equal
        spellings = [Involution(kind, c)] + [
            Involution(_THIRD[frozenset({kind, other})], _table_base(other, c))
            for other in _INVOLUTION_NAMES if other != kind and (other, c.kind) in _BASE_TABLE]
        return min(spellings, key=lambda d: (len(str(d)), str(d)))
    return Involution(kind, c)


def _table_base(kind: str, c: Base) -> Base:
    chirality = c.chirality if kind == "dual" else _flip(c.chirality)
    return Base(_BASE_TABLE[(kind, c.kind)], chirality, c.exponent)


def lattice_op(kind: str, l: Descriptor, r: Descriptor) -> Descriptor:
    """Join (plus), meet (times) or shuffle-join of two classes."""
    el, er = principal_exponent(l), principal_exponent(r)
    if el is not None and er is not None:
        if kind == "plus":
            return principal(min(el, er))
        if kind in ("times", "shuffle"):
            return principal(max(el, er))
    if kind == "shuffle":
        raise ShapeError("the shuffle join is only computed for principal classes")
    if kind == "plus":
        for x, y in ((l, r), (r, l)):
            if isinstance(x, Base) and x.kind == "zero" and x.chirality == y.chirality:
                return y
        return Plus(l, r)
    if kind == "times":
        for x, y in ((l, r), (r, l)):
            if isinstance(x, Base) and x.kind == "all" and x.chirality == y.chirality:
                return y
        return Times(l, r)
    raise ValueError(f"unknown lattice operation {kind!r}")


_OMEGA_STAR = reversed_ordinal_term(Ordinal.omega_power(1))
_Q_TERM = shuffle_term(ONE_TERM)


def commutativity_witness(c: Descriptor) -> tuple:
    """A pair (x, y) with simple_sum(c, x, y) != simple_sum(c, y, x)."""
    candidates = [(ONE_TERM, OMEGA_TERM), (ONE_TERM, _OMEGA_STAR),
                  (ONE_TERM, _Q_TERM), (OMEGA_TERM, _Q_TERM)]
    if membership(c, _OMEGA_STAR):
        candidates.insert(0, (_OMEGA_STAR, ONE_TERM))
    for x, y in candidates:
        if simple_sum(c, x, y) != simple_sum(c, y, x):
            return x, y
    raise ShapeError(f"no witness among the candidate pairs for {c}")
