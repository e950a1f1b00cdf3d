"""Instances of sums built from rational shuffles.

Binary words are encoded as ``Q + code(b1) + Q + ... + code(bk) + Q`` with
``Q(2)`` for 0 and ``Q(1,2)`` for 1.  Each encoding is an instance of a sum
of ``Q`` with ``Q``, and a ``PieceWitness`` records how: every block of the
target is cut into pieces, each piece is handed to one summand, and each
summand's pieces must reassemble to it.

A piece is a block index plus a path of split steps.  Convex steps keep the
pieces in sequence:

* ``("cut", "lower" | "upper")``: a shuffle cut at an irrational; both halves
  have the type of the shuffle.
* ``("open", "lower" | k | "upper")``: a shuffle opened at a rational whose
  block is member ``k``: ``Q(S) = Q(S) + S[k] + Q(S)``.

Interleaving steps leave pieces dense in one another:

* ``("index", (k, n))``: the blocks sitting over one of ``n`` dense classes
  of rationals; each is again ``Q(S)``.
* ``("members", positions)``: the blocks of the listed member types.
* ``("pairs", "pred" | "succ")``: first or second points of ``Q(2)``, each ``Q``.
* ``("isolated", "pred_single" | "succ")``: for ``Q(1,2)``, the first points
  of pairs together with the singletons, or the second points; each ``Q``.

Pieces of one summand that differ only by index or members steps are
merged into the shuffle over the union of their member lists.
"""
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Callable, Iterable, Optional

from .errors import ShapeError
from .instances import enumerate_instances
from .orderterm import ONE_TERM, OrderTerm, Shuffle, normalize, ordinal_term, shuffle_term, structural_key, term_add
from .shuffle import canonical_minimal_list

Q = shuffle_term(ONE_TERM)
Q2 = shuffle_term(ordinal_term(2))
Q12 = shuffle_term(ONE_TERM, ordinal_term(2))

CODES = {"0": Q2, "1": Q12}
_DECODE = {v: k for k, v in CODES.items()}


def _bits(word) -> str:
    word = "".join(str(b) for b in word)
    if set(word) - {"0", "1"}:
        raise ShapeError(f"not a binary word: {word!r}")
    return word


def encode_word(word) -> OrderTerm:
    parts = [Q]
    for bit in _bits(word):
        parts += [CODES[bit], Q]
    return normalize(parts)


def decode_word(t: OrderTerm) -> str:
    blocks = t.blocks
    if len(blocks) % 2 == 0:
        raise ShapeError(f"{t} does not alternate spacers and codes")
    out = []
    for i, b in enumerate(blocks):
        term = OrderTerm((b,))
        if i % 2 == 0:
            if term != Q:
                raise ShapeError(f"block {i} of {t} should be the spacer Q")
        elif term in _DECODE:
            out.append(_DECODE[term])
        else:
            raise ShapeError(f"block {i} of {t} is not a code")
    return "".join(out)


# piece witnesses

@dataclass(frozen=True)
class Piece:
    block: int
    path: tuple = ()


@dataclass(frozen=True)
class PieceWitness:
    left: tuple
    right: tuple


@dataclass(frozen=True)
class WitnessReport:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "ok" if self.ok else self.reason


_CONVEX = {"cut", "open"}
_MERGEABLE = {"index", "members"}
_HALVES = {"cut": {"lower", "upper"}, "pairs": {"pred", "succ"}, "isolated": {"pred_single", "succ"}}


def _shuffle_members(t: OrderTerm) -> tuple:
    if len(t.blocks) != 1 or not isinstance(t.blocks[0], Shuffle):
        raise ShapeError(f"{t} is not a shuffle block")
    return t.blocks[0].members


def _step_type(t: OrderTerm, step) -> OrderTerm:
    rule, part = step
    if rule in ("cut", "index"):
        _shuffle_members(t)
        return t
    if rule == "open":
        members = _shuffle_members(t)
        if part in ("lower", "upper"):
            return t
        if not isinstance(part, int) or not 0 <= part < len(members):
            raise ShapeError(f"no member {part!r} in {t}")
        return members[part]
    if rule == "members":
        members = _shuffle_members(t)
        chosen = sorted(part)
        if not chosen or len(chosen) == len(members) or chosen[-1] >= len(members) or chosen[0] < 0:
            raise ShapeError(f"bad member selection {part!r} for {t}")
        return shuffle_term(*(members[i] for i in chosen))
    if rule == "pairs":
        if t != Q2:
            raise ShapeError(f"the pairs rule needs Q(2), got {t}")
        return Q
    if rule == "isolated":
        if t != Q12:
            raise ShapeError(f"the isolated rule needs Q(1,2), got {t}")
        return Q
    raise ShapeError(f"unknown split rule {rule!r}")


def piece_type(c: OrderTerm, piece: Piece) -> OrderTerm:
    t = OrderTerm((c.blocks[piece.block],))
    for step in piece.path:
        t = _step_type(t, step)
    return t


def _cover_error(paths: list, t: OrderTerm) -> Optional[str]:
    # paths must partition the region of type t exactly
    if len(set(paths)) != len(paths):
        return "overlap: a piece is used twice"
    if () in paths:
        return None if len(paths) == 1 else "overlap: a whole region is also split"
    rules = {p[0][0] for p in paths}
    if len(rules) != 1:
        return f"overlap: one region split by several rules {sorted(rules)}"
    rule = rules.pop()
    groups = {}
    for p in paths:
        groups.setdefault(p[0][1], []).append(p[1:])
    parts = set(groups)
    if rule in _HALVES:
        if parts != _HALVES[rule]:
            return f"gap: {rule} needs parts {sorted(_HALVES[rule])}"
    elif rule == "open":
        ints = [x for x in parts if isinstance(x, int)]
        if len(ints) != 1 or parts != {"lower", "upper", ints[0]}:
            return "gap: open needs lower, one member and upper"
    elif rule == "index":
        sizes = {n for _, n in parts}
        if len(sizes) != 1 or parts != {(k, n) for n in sizes for k in range(n)} or min(sizes) < 2:
            return "gap: index classes must be 0..n-1 of a single n >= 2"
    elif rule == "members":
        positions = [i for part in parts for i in part]
        if len(positions) != len(set(positions)) or set(positions) != set(range(len(_shuffle_members(t)))):
            return "gap: member selections must partition the member list"
    else:
        return f"unknown split rule {rule!r}"
    for part, rests in groups.items():
        try:
            sub = _step_type(t, (rule, part))
        except ShapeError as e:
            return str(e)
        err = _cover_error(rests, sub)
        if err:
            return err
    return None


_POSITION = {"lower": 0, "upper": 2}


def _convex_key(piece: Piece) -> tuple:
    key = []
    for i, (rule, part) in enumerate(piece.path):
        if rule not in _CONVEX:
            if any(r in _CONVEX for r, _ in piece.path[i:]):
                raise ShapeError("a convex cut below an interleaving step is not representable")
            break
        key.append(_POSITION.get(part, 1))
    return (piece.block, tuple(key))


def _assemble(c: OrderTerm, pieces: tuple) -> OrderTerm:
    groups = []
    for piece in pieces:
        key = _convex_key(piece)
        if groups and groups[-1][0] == key:
            groups[-1][1].append(piece)
        elif groups and groups[-1][0] > key:
            raise ShapeError("pieces of a summand are out of order")
        else:
            groups.append((key, [piece]))
    types = []
    for _, group in groups:
        if len(group) == 1:
            types.append(piece_type(c, group[0]))
            continue
        for p, q in zip(group, group[1:]):
            for s, r in zip(p.path, q.path):
                if s != r:
                    if s[0] not in _MERGEABLE:
                        raise ShapeError(f"one summand takes both sides of a {s[0]} split")
                    break
        members = [m for p in group for m in _shuffle_members(piece_type(c, p))]
        types.append(OrderTerm((Shuffle(canonical_minimal_list(members).members),)))
    return normalize(types)


def verify_piece_witness(a: OrderTerm, b: OrderTerm, c: OrderTerm, wit: PieceWitness) -> WitnessReport:
    """Check that wit exhibits c as an instance of a sum of a and b."""
    by_block = {}
    for piece in wit.left + wit.right:
        if not 0 <= piece.block < len(c.blocks):
            return WitnessReport(False, f"piece refers to missing block {piece.block}")
        by_block.setdefault(piece.block, []).append(tuple(piece.path))
    for i, block in enumerate(c.blocks):
        if i not in by_block:
            return WitnessReport(False, f"gap: block {i} is not used")
        err = _cover_error(by_block[i], OrderTerm((block,)))
        if err:
            return WitnessReport(False, f"block {i}: {err}")
    for name, want, pieces in (("left", a, wit.left), ("right", b, wit.right)):
        try:
            got = _assemble(c, pieces)
        except ShapeError as e:
            return WitnessReport(False, f"{name}: {e}")
        if got != want:
            return WitnessReport(False, f"type mismatch: {name} pieces give {got}, expected {want}")
    return WitnessReport(True)


_WORD_SPLITS = {
    Q: (("cut", "lower"), ("cut", "upper")),
    Q2: (("pairs", "succ"), ("pairs", "pred")),
    Q12: (("isolated", "pred_single"), ("isolated", "succ")),
}


def make_word_witness(word) -> PieceWitness:
    """encode_word(word) as an instance of Q with Q."""
    c = encode_word(word)
    left, right = [], []
    for i, b in enumerate(c.blocks):
        red, blue = _WORD_SPLITS[OrderTerm((b,))]
        left.append(Piece(i, (red,)))
        right.append(Piece(i, (blue,)))
    return PieceWitness(tuple(left), tuple(right))


# good-sum tables

@dataclass(frozen=True)
class SumTable:
    carrier: tuple
    entries: dict = field(hash=False)

    @classmethod
    def from_rows(cls, rows: Iterable) -> "SumTable":
        carrier, entries = [], {}
        for lhs, rhs, result in rows:
            for t in (lhs, rhs):
                if t not in carrier:
                    carrier.append(t)
            key = frozenset((lhs, rhs))
            if key in entries and entries[key] != result:
                raise ShapeError(f"conflicting entries for {lhs} and {rhs}")
            entries[key] = result
        return cls(tuple(carrier), entries)

    def lookup(self, x: OrderTerm, y: OrderTerm) -> OrderTerm:
        try:
            return self.entries[frozenset((x, y))]
        except KeyError:
            raise ShapeError(f"no entry for {x} and {y}")


def table_sum(table: SumTable) -> Callable:
    return table.lookup


@dataclass(frozen=True)
class TableReport:
    ok: bool
    triples: int
    violations: tuple = ()

    def __str__(self):
        if self.ok:
            return f"table ok ({self.triples} triples checked)"
        return "\n".join(self.violations)


def check_good_table(table: SumTable, witnesses: Optional[dict] = None) -> TableReport:
    """Totality, associativity where defined, and attached instance witnesses."""
    bad = []
    carrier = table.carrier
    for x, y in combinations_with_replacement(carrier, 2):
        if frozenset((x, y)) not in table.entries:
            bad.append(f"missing entry: {x} with {y}")
    if bad:
        return TableReport(False, 0, tuple(bad))
    triples = 0
    for x, y, z in product(carrier, repeat=3):
        xy, yz = table.lookup(x, y), table.lookup(y, z)
        if xy not in carrier or yz not in carrier:
            continue
        triples += 1
        left, right = table.lookup(xy, z), table.lookup(x, yz)
        if left != right:
            bad.append(f"not associative: ({x}, {y}, {z}) gives {left} and {right}")
    for key, (a, b, wit) in (witnesses or {}).items():
        if frozenset((a, b)) != key:
            bad.append(f"witness for {sorted(map(str, key))} names the pair {a}, {b}")
            continue
        report = verify_piece_witness(a, b, table.lookup(a, b), wit)
        if not report:
            bad.append(f"witness for {a} with {b}: {report.reason}")
    return TableReport(not bad, triples, tuple(bad))


def _w(left, right) -> PieceWitness:
    def pieces(spec):
        return tuple(Piece(i, tuple(path)) for i, *path in spec)
    return PieceWitness(pieces(left), pieces(right))


CUT_LO, CUT_HI = ("cut", "lower"), ("cut", "upper")
OPEN_LO, OPEN_HI = ("open", "lower"), ("open", "upper")

Z2_ZERO = term_add(Q2, Q)
Z2_ONE = term_add(Q12, Q)


def z2_table() -> tuple:
    """The table of Z/2Z on Q(2) + Q and Q(1,2) + Q, with instance witnesses."""
    rows = [(Z2_ZERO, Z2_ZERO, Z2_ZERO), (Z2_ZERO, Z2_ONE, Z2_ONE), (Z2_ONE, Z2_ONE, Z2_ZERO)]
    witnesses = {
        frozenset((Z2_ZERO,)): (Z2_ZERO, Z2_ZERO, _w(
            [(0, CUT_LO), (1, CUT_LO)],
            [(0, CUT_HI), (1, CUT_HI)])),
        # the 2-blocks of the upper half of Q(1,2) carry the Q(2) summand
        frozenset((Z2_ZERO, Z2_ONE)): (Z2_ZERO, Z2_ONE, _w(
            [(0, CUT_HI, ("members", (1,))), (1, CUT_LO)],
            [(0, CUT_LO), (0, CUT_HI, ("members", (0,))), (1, CUT_HI)])),
        # three dense classes of pairs: whole pairs, split pairs, whole pairs
        frozenset((Z2_ONE,)): (Z2_ONE, Z2_ONE, _w(
            [(0, ("index", (0, 3))), (0, ("index", (1, 3)), ("pairs", "pred")), (1, CUT_LO)],
            [(0, ("index", (2, 3))), (0, ("index", (1, 3)), ("pairs", "succ")), (1, CUT_HI)])),
    }
    return SumTable.from_rows(rows), witnesses


E_TWO = normalize([ordinal_term(2), Q2, Q])
E_ONE = normalize([ONE_TERM, Q, Q2, Q])


def e_table() -> tuple:
    """A good sum on {2 + Q(2) + Q, Q, 1 + Q + Q(2) + Q}, with instance witnesses."""
    rows = [
        (E_TWO, Q, E_ONE), (E_TWO, E_TWO, E_TWO), (E_TWO, E_ONE, E_ONE),
        (E_ONE, Q, E_ONE), (E_ONE, E_ONE, E_ONE), (Q, Q, Q),
    ]
    witnesses = {
        # Q is opened at a rational; its point completes the leading 2
        frozenset((E_TWO, Q)): (E_TWO, Q, _w(
            [(0,), (1, ("open", 0)), (2,), (3, CUT_LO)],
            [(1, OPEN_LO), (1, OPEN_HI), (3, CUT_HI)])),
        frozenset((E_TWO,)): (E_TWO, E_TWO, _w(
            [(0,), (1, OPEN_LO), (2, CUT_LO)],
            [(1, ("open", 0)), (1, OPEN_HI), (2, CUT_HI)])),
        frozenset((E_TWO, E_ONE)): (E_TWO, E_ONE, _w(
            [(1, ("open", 0)), (1, OPEN_HI, ("open", 0)), (2, ("index", (0, 2))), (3, CUT_LO)],
            [(0,), (1, OPEN_LO), (1, OPEN_HI, OPEN_LO), (1, OPEN_HI, OPEN_HI),
             (2, ("index", (1, 2))), (3, CUT_HI)])),
        frozenset((E_ONE, Q)): (E_ONE, Q, _w(
            [(0,), (1,), (2,), (3, CUT_LO)],
            [(3, CUT_HI)])),
        frozenset((E_ONE,)): (E_ONE, E_ONE, _w(
            [(0,), (1, OPEN_LO), (2, ("index", (0, 2))), (3, CUT_LO)],
            [(1, ("open", 0)), (1, OPEN_HI), (2, ("index", (1, 2))), (3, CUT_HI)])),
        frozenset((Q,)): (Q, Q, _w([(0, CUT_LO)], [(0, CUT_HI)])),
    }
    return SumTable.from_rows(rows), witnesses


def semi_standard_classify(a: OrderTerm, b: OrderTerm, c: OrderTerm) -> str:
    usual, reversed_ = c == term_add(a, b), c == term_add(b, a)
    if usual and reversed_:
        return "both"
    return "usual" if usual else "reversed" if reversed_ else "neither"


# group representations

@dataclass(frozen=True)
class GroupRep:
    elements: tuple
    table: dict = field(hash=False)  # (g, h) -> g*h
    phi: dict = field(hash=False)


def z2_rep(zero: OrderTerm = Z2_ZERO, one: OrderTerm = Z2_ONE) -> GroupRep:
    table = {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0}
    return GroupRep((0, 1), table, {0: zero, 1: one})


def verify_group_rep(rep: GroupRep, op: Callable) -> bool:
    images = [rep.phi[g] for g in rep.elements]
    if len(set(images)) != len(images):
        return False
    for g, h in product(rep.elements, repeat=2):
        try:
            if op(rep.phi[g], rep.phi[h]) != rep.phi[rep.table[(g, h)]]:
                return False
        except ShapeError:
            return False
    return True


def two_element_representations(op: Callable, sample: Iterable[OrderTerm]) -> list:
    """All (e, a) in the sample, e != a, that represent Z/2Z under op."""
    sample = list(dict.fromkeys(sample))
    return [(e, a) for e, a in product(sample, repeat=2)
            if e != a and verify_group_rep(z2_rep(e, a), op)]


@dataclass(frozen=True)
class NoGroupReport:
    ok: bool
    pairs: int
    below_max: tuple = ()
    representations: tuple = ()


def no_group_ordinals_check(sample) -> NoGroupReport:
    """Instances never drop below the larger summand, so no Z/2Z fits."""
    sample = sorted(set(sample))
    inst = {(x, y): enumerate_instances(x, y) for x, y in product(sample, repeat=2)}
    low = tuple((x, y, g) for (x, y), s in inst.items() for g in s if g < max(x, y))
    reps = tuple((e, a) for e, a in product(sample, repeat=2)
                 if e != a and e in inst[(e, e)] and a in inst[(e, a)]
                 and a in inst[(a, e)] and e in inst[(a, a)])
    return NoGroupReport(not low and not reps, len(inst), low, reps)


# free multisets of generators

def _check_generators(gens) -> tuple:
    out = []
    for g in gens:
        if len(g.blocks) != 1 or not isinstance(g.blocks[0], Shuffle) or g == Q:
            raise ShapeError(f"generator {g} must be a single shuffle other than Q")
        out.append(g)
    return tuple(sorted(out, key=structural_key))


def encode_multiset(m) -> OrderTerm:
    gens = _check_generators(m)
    parts = [Q]
    for g in gens:
        parts += [g, Q]
    t = normalize(parts)
    if len(t.blocks) != 2 * len(gens) + 1:
        raise ShapeError("spacers merged with generators; the encoding is not faithful")
    return t


def free_multiset_sum(m1, m2) -> tuple:
    """encode(m1 + m2), with a witness handing each generator group to its source."""
    g1, g2 = _check_generators(m1), _check_generators(m2)
    total = encode_multiset(g1 + g2)
    remaining = {}
    for g in g1:
        remaining[g] = remaining.get(g, 0) + 1
    left, right = [Piece(0, (CUT_LO,))], [Piece(0, (CUT_HI,))]
    for i in range(1, len(total.blocks), 2):
        g = OrderTerm((total.blocks[i],))
        side = left if remaining.get(g, 0) else right
        if side is left:
            remaining[g] -= 1
        side += [Piece(i), Piece(i + 1)]
    return total, PieceWitness(tuple(left), tuple(right))
