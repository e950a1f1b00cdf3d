"""Instances of a sum of two ordinals.

``g`` is an instance of a sum of ``a`` and ``b`` when ``g`` splits into two
disjoint suborders of types ``a`` and ``b``.  Every ordinal is a finite
non-increasing sum of powers ``w^e``, and a power ``w^e`` splits only as
``(w^e, d)`` or ``(d, w^e)`` with ``d <= w^e`` (``d = 0`` when ``e = 0``).
``enumerate_instances`` walks that description piece by piece;
``merge_plan_instances`` is a slot-by-slot brute force for degree <= 1 used
as an independent check.
"""
import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .errors import CapacityError
from .ordinal import ONE, ZERO, Ordinal, hessenberg, left_subtract, min_sum, ord_add

DEFAULT_CAPACITY = (5, 6)


def capacity():
    """(max exponent, max coefficient), overridable through ORDSUM_CAPACITY="E,C"."""
    raw = os.environ.get("ORDSUM_CAPACITY")
    if not raw:
        return DEFAULT_CAPACITY
    try:
        e, c = (int(x) for x in raw.split(","))
    except ValueError:
        raise CapacityError(f"ORDSUM_CAPACITY must look like '5,6', got {raw!r}")
    return e, c


def _check_capacity(a: Ordinal):
    max_e, max_c = capacity()
    for e, k in a.terms:
        if not e.is_finite() or int(e) > max_e:
            raise CapacityError(f"exponent {e} of {a} exceeds the limit {max_e}")
        if k > max_c:
            raise CapacityError(f"coefficient {k} of {a} exceeds the limit {max_c}")


@dataclass(frozen=True)
class InstanceSet:
    pair: tuple
    types: tuple = field(default=())

    def __iter__(self):
        return iter(self.types)

    def __len__(self):
        return len(self.types)

    def __contains__(self, g):
        return g in self.types


def _cuts(o: Ordinal):
    """(least initial segment, remaining final segment) for every distinct tail of o."""
    pieces = o.expanded()
    out = []
    prefix = ZERO
    for i, e in enumerate(pieces):
        out.append((prefix, Ordinal._raw(_collect(pieces[i:]))))
        prefix = ord_add(prefix, Ordinal.omega_power(e))
    out.append((prefix, ZERO))
    return out


def _collect(exps):
    terms = []
    for e in exps:
        if terms and terms[-1][0] == e:
            terms[-1] = (e, terms[-1][1] + 1)
        else:
            terms.append((e, 1))
    return terms


@lru_cache(maxsize=None)
def _tails(a: Ordinal, b: Ordinal, cap: int) -> frozenset:
    # ordinals g, built from pieces w^e with e <= cap, that split into a and b
    if not a and not b:
        return frozenset([ZERO])
    out = set()
    top = max(int(a.degree()), int(b.degree()))
    if top > cap:
        return frozenset()
    for e in range(top + 1):
        piece = Ordinal.omega_power(e)
        for full, other in ((a, b), (b, a)):
            if full < piece:
                continue
            rest = left_subtract(piece, full)
            if int(rest.degree()) > e:
                continue
            for prefix, remainder in _cuts(other):
                if prefix > piece or (e == 0 and prefix):
                    break
                if remainder and int(remainder.degree()) > e:
                    continue
                x, y = sorted((rest, remainder))
                for tail in _tails(x, y, e):
                    out.add(ord_add(piece, tail))
    return frozenset(out)


def enumerate_instances(a: Ordinal, b: Ordinal) -> InstanceSet:
    _check_capacity(a)
    _check_capacity(b)
    x, y = sorted((a, b))
    cap = max(int(a.degree()), int(b.degree()))
    return InstanceSet((a, b), tuple(sorted(_tails(x, y, cap))))


def merge_plan_instances(a: Ordinal, b: Ordinal) -> set:
    """Brute force over slot assignments, for a, b below w^2.

    The instance is w*r + s: r slots of type w, each split between the two
    summands as (w, k), (k, w) or (w, w) with k finite, followed by s single
    points handed to either side.  Ordinals below w^2 are handled here as
    pairs (omegas, units) with their own addition, independent of ``Ordinal``.
    """
    for o in (a, b):
        if o.degree() > ONE:
            raise CapacityError("the merge-plan oracle only handles degree <= 1")
    target = ((_omega_count(a), a.finite_part()), (_omega_count(b), b.finite_part()))
    (p, m), (q, n) = target
    w = (1, 0)
    choices = [(w, w)]
    for k in range(max(m, n) + 1):
        choices += [(w, (0, k)), ((0, k), w)]
    found = set()
    states = {((0, 0), (0, 0))}
    for r in range(p + q + 1):
        for x, y in states:
            for c, d in product(range(m + 1), range(n + 1)):
                if (_plus(x, (0, c)), _plus(y, (0, d))) == target:
                    found.add(ord_add(Ordinal.omega_power(1, r), Ordinal.of(c + d)))
        states = {(_plus(x, u), _plus(y, v))
                  for x, y in states for u, v in choices
                  if _plus(x, u) <= target[0] and _plus(y, v) <= target[1]}
    return found


def _plus(x, y):
    # ordinal addition on pairs (omegas, units)
    return (x[0] + y[0], y[1]) if y[0] else (x[0], x[1] + y[1])


def _omega_count(o: Ordinal) -> int:
    return o.terms[0][1] if o.terms and o.terms[0][0] == ONE else 0


@dataclass(frozen=True)
class BoundsReport:
    ok: bool
    lower: Ordinal
    upper: Ordinal
    lower_attained: bool
    upper_attained: bool
    outside: tuple = ()

    def __str__(self):
        status = "ok" if self.ok else "FAIL"
        return (f"bounds: {self.lower} <= g <= {self.upper} "
                f"(min {'attained' if self.lower_attained else 'missing'}, "
                f"max {'attained' if self.upper_attained else 'missing'}) {status}")


def check_bounds(a: Ordinal, b: Ordinal) -> BoundsReport:
    inst = enumerate_instances(a, b)
    lo, hi = min_sum(a, b), hessenberg(a, b)
    outside = tuple(g for g in inst if not lo <= g <= hi)
    lo_hit, hi_hit = lo in inst, hi in inst
    return BoundsReport(not outside and lo_hit and hi_hit, lo, hi, lo_hit, hi_hit, outside)


@dataclass(frozen=True)
class IndecomposableReport:
    ok: bool
    violations: tuple = ()


def strong_indecomposable_check(g: Ordinal, pairs) -> IndecomposableReport:
    """Whenever g is an instance of a sum of (a, b), one of a, b equals g."""
    if not g or len(g.terms) != 1 or g.terms[0][1] != 1:
        raise ValueError(f"{g} is not additively indecomposable")
    bad = tuple((a, b) for a, b in pairs
                if g in enumerate_instances(a, b) and g not in (a, b))
    return IndecomposableReport(not bad, bad)
