"""Block-sequence terms for countable linear orders.

A term is a finite sequence of blocks: ``Ord(a)`` (a well-order), ``RevOrd(a)``
(a reversed well-order, carried only for limit ``a``) and ``Shuffle(members)``
(the rational shuffle by a canonical member list).  ``normalize`` rewrites a
raw sequence to a normal form; two terms are treated as isomorphic exactly
when their normal forms coincide.

Rewrite rules, applied to a fixpoint:

* empty blocks are dropped;
* ``Ord(a) + Ord(b) -> Ord(a + b)``;
* ``RevOrd(a) + RevOrd(b) -> RevOrd(b + a)``;
* ``RevOrd(b + n) -> Ord(n) + RevOrd(b)`` for limit ``b`` and finite ``n``;
* ``RevOrd(b) + Ord(n) -> RevOrd(b)`` for finite ``n`` (``w* + 1`` is ``w*``);
* shuffle member lists are canonicalized;
* ``Shuffle(S) + T + Shuffle(S) -> Shuffle(S)`` when ``T`` is empty or a member of ``S``.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Union

from .errors import ShapeError
from .ordinal import ONE, OMEGA, ZERO, Ordinal, hessenberg, left_subtract, ord_add, render_ordinal


@dataclass(frozen=True)
class Ord:
    length: Ordinal


@dataclass(frozen=True)
class RevOrd:
    length: Ordinal


@dataclass(frozen=True)
class Shuffle:
    members: tuple


Block = Union[Ord, RevOrd, Shuffle]


@dataclass(frozen=True)
class OrderTerm:
    blocks: tuple = ()

    def __bool__(self):
        return bool(self.blocks)

    def __add__(self, other):
        return term_add(self, other)

    def __str__(self):
        return render_term(self)

    def __repr__(self):
        return f"OrderTerm({render_term(self)!r})"


EMPTY = OrderTerm()


def ordinal_term(a: Union[Ordinal, int]) -> OrderTerm:
    if isinstance(a, int):
        a = Ordinal.of(a)
    return OrderTerm((Ord(a),)) if a else EMPTY


def reversed_ordinal_term(a: Union[Ordinal, int]) -> OrderTerm:
    if isinstance(a, int):
        a = Ordinal.of(a)
    return normalize([RevOrd(a)])


def shuffle_term(*members: OrderTerm) -> OrderTerm:
    return normalize([Shuffle(tuple(members))])


ONE_TERM = ordinal_term(ONE)
OMEGA_TERM = ordinal_term(OMEGA)


# structural order, used to sort shuffle members

@lru_cache(maxsize=None)
def structural_key(t: OrderTerm) -> tuple:
    return tuple(_block_key(b) for b in t.blocks)


def _block_key(b: Block):
    if isinstance(b, Ord):
        return (0, b.length)
    if isinstance(b, RevOrd):
        return (1, b.length)
    return (2, tuple(structural_key(m) for m in b.members))


# normalization

def normalize(raw: Iterable) -> OrderTerm:
    """Normal form of a raw sequence of blocks and terms."""
    flat = []
    for item in raw:
        if isinstance(item, OrderTerm):
            flat.extend(item.blocks)
        else:
            flat.extend(_normal_block(item))
    while True:
        merged = _merge_adjacent(flat)
        collapsed = _collapse_between_shuffles(merged)
        if collapsed == merged:
            return OrderTerm(tuple(collapsed))
        flat = collapsed


def _normal_block(b: Block) -> list:
    if isinstance(b, Ord):
        return [b] if b.length else []
    if isinstance(b, RevOrd):
        n = b.length.finite_part()
        out = [Ord(Ordinal.of(n))] if n else []
        limit = b.length.limit_part()
        if limit:
            out.append(RevOrd(limit))
        return out
    if isinstance(b, Shuffle):
        from .shuffle import canonical_minimal_list
        return [Shuffle(canonical_minimal_list(b.members).members)]
    raise TypeError(f"not a block: {b!r}")


def _merge_pair(x: Block, y: Block):
    # replacement for the adjacent pair, or None when no rule applies
    if isinstance(x, Ord) and isinstance(y, Ord):
        return [Ord(ord_add(x.length, y.length))]
    if isinstance(x, RevOrd) and isinstance(y, RevOrd):
        return [RevOrd(ord_add(y.length, x.length))]
    if isinstance(x, RevOrd) and isinstance(y, Ord) and y.length.is_finite():
        return [x]
    if isinstance(x, Shuffle) and x == y:
        return [x]
    return None


def _merge_adjacent(blocks: list) -> list:
    out = []
    for b in blocks:
        out.append(b)
        while len(out) >= 2:
            merged = _merge_pair(out[-2], out[-1])
            if merged is None:
                break
            out[-2:] = merged
    return out


def _collapse_between_shuffles(blocks: list) -> list:
    for i, left in enumerate(blocks):
        if not isinstance(left, Shuffle):
            continue
        for j in range(i + 2, len(blocks)):
            if blocks[j] == left and OrderTerm(tuple(blocks[i + 1:j])) in left.members:
                return blocks[:i + 1] + blocks[j + 1:]
    return blocks


# basic operations

def term_add(a: OrderTerm, b: OrderTerm) -> OrderTerm:
    return normalize([a, b])


def sum_all(terms: Iterable[OrderTerm]) -> OrderTerm:
    return normalize(list(terms))


def term_reverse(a: OrderTerm) -> OrderTerm:
    out = []
    for b in reversed(a.blocks):
        if isinstance(b, Ord):
            out.append(RevOrd(b.length))
        elif isinstance(b, RevOrd):
            out.append(Ord(b.length))
        else:
            out.append(Shuffle(tuple(term_reverse(m) for m in b.members)))
    return normalize(out)


def term_eq(a: OrderTerm, b: OrderTerm) -> bool:
    return a == b


def as_ordinal(t: OrderTerm):
    """The ordinal denoted by t, or None when t is not a well-order."""
    if not t.blocks:
        return ZERO
    if len(t.blocks) == 1 and isinstance(t.blocks[0], Ord):
        return t.blocks[0].length
    return None


def has_least_element(t: OrderTerm) -> bool:
    return bool(t.blocks) and isinstance(t.blocks[0], Ord)


def ordinal_prefix(t: OrderTerm) -> tuple:
    """Split t as tau + rest with tau an ordinal and rest without a least element."""
    if has_least_element(t):
        return t.blocks[0].length, OrderTerm(t.blocks[1:])
    return ZERO, t


def scattered_prefix(t: OrderTerm) -> tuple:
    """Split t before its first shuffle block."""
    for i, b in enumerate(t.blocks):
        if isinstance(b, Shuffle):
            return OrderTerm(t.blocks[:i]), OrderTerm(t.blocks[i:])
    return t, EMPTY


# a ladder of non-standard sums

def wlike_sum(level: int, a: OrderTerm, b: OrderTerm) -> OrderTerm:
    """Move an ordinal initial piece of b in front of a.

    Level 0 moves a single least point, level 1 moves a finite or ``w``
    prefix whose remainder has no least element, level 2 moves the whole
    ordinal prefix.
    """
    if level == 0:
        if not has_least_element(b):
            return term_add(a, b)
        first = b.blocks[0].length
        rest = normalize([Ord(left_subtract(ONE, first))] + list(b.blocks[1:]))
        return normalize([ONE_TERM, a, rest])
    if level not in (1, 2):
        raise ValueError("level must be 0, 1 or 2")
    tau, rest = ordinal_prefix(b)
    if level == 1 and not (tau.is_finite() or tau == OMEGA):
        return term_add(a, b)
    return normalize([ordinal_term(tau), a, rest])


def sum_w(a: OrderTerm, b: OrderTerm) -> OrderTerm:
    return wlike_sum(2, a, b)


def sum_s(a: OrderTerm, b: OrderTerm) -> OrderTerm:
    head, rest = scattered_prefix(b)
    return normalize([head, a, rest])


def sum_h(a: OrderTerm, b: OrderTerm) -> OrderTerm:
    gamma, a_rest = ordinal_prefix(a)
    tau, b_rest = ordinal_prefix(b)
    return normalize([ordinal_term(hessenberg(tau, gamma)), a_rest, b_rest])


def lift_ordinal_sum(op: Callable) -> Callable:
    """A sum on well-order terms from a sum on ordinals."""
    def lifted(a: OrderTerm, b: OrderTerm) -> OrderTerm:
        x, y = as_ordinal(a), as_ordinal(b)
        if x is None or y is None:
            raise ShapeError(f"{op.__name__} is defined on well-orders only, got {a} and {b}")
        return ordinal_term(op(x, y))
    lifted.__name__ = f"lifted_{op.__name__}"
    return lifted


def _wo_wostar_parts(t: OrderTerm) -> tuple:
    # t = alpha' + n + beta'* with alpha', beta' limit
    blocks = list(t.blocks)
    alpha = beta = ZERO
    if blocks and isinstance(blocks[0], Ord):
        alpha = blocks.pop(0).length
    if blocks and isinstance(blocks[0], RevOrd):
        beta = blocks.pop(0).length
    if blocks:
        raise ShapeError(f"{t} embeds Z or a dense order")
    return alpha.limit_part(), alpha.finite_part(), beta


def wo_wostar_sum(inner: Callable, a: OrderTerm, b: OrderTerm) -> OrderTerm:
    """Extend a good sum on ordinals to orders of the form alpha + beta*."""
    a_lim, a_fin, a_rev = _wo_wostar_parts(a)
    b_lim, b_fin, b_rev = _wo_wostar_parts(b)
    return normalize([
        Ord(inner(a_lim, b_lim)),
        Ord(Ordinal.of(a_fin + b_fin)),
        RevOrd(inner(b_rev, a_rev)),
    ])


def reverse_combinator(s: Callable) -> Callable:
    def reversed_sum(a: OrderTerm, b: OrderTerm) -> OrderTerm:
        return term_reverse(s(term_reverse(b), term_reverse(a)))
    reversed_sum.__name__ = f"reversed_{getattr(s, '__name__', 'sum')}"
    return reversed_sum


# rendering

def render_term(t: OrderTerm) -> str:
    if not t.blocks:
        return "0"
    return " + ".join(_render_block(b) for b in t.blocks)


def _render_block(b: Block) -> str:
    if isinstance(b, Ord):
        return render_ordinal(b.length)
    if isinstance(b, RevOrd):
        return f"rev({render_ordinal(b.length)})"
    if b.members == (ONE_TERM,):
        return "Q"
    return "Q(" + ",".join(render_term(m) for m in b.members) + ")"
