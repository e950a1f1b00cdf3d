"""Ordinals below epsilon_0 in hereditary Cantor normal form.

An ordinal is a tuple of ``(exponent, coefficient)`` pairs with strictly
decreasing exponents, each exponent itself an ``Ordinal``.  Besides the usual
addition the module carries five commutative sums (Hessenberg, lcm, dynamic,
min and finite-split) and a checker for the natural-operation axioms.
"""
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Optional


class Ordinal:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable = ()):
        terms = tuple((e, k) for e, k in terms)
        prev = None
        for e, k in terms:
            if not isinstance(e, Ordinal):
                raise TypeError("exponent must be an Ordinal")
            if not isinstance(k, int) or isinstance(k, bool) or k < 1:
                raise ValueError("coefficients must be positive integers")
            if prev is not None and not _cmp(e, prev) < 0:
                raise ValueError("exponents must strictly decrease")
            prev = e
        self.terms = terms
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = tuple(terms)
        obj._hash = None
        return obj

    @classmethod
    def of(cls, n: int) -> "Ordinal":
        if n < 0:
            raise ValueError("ordinals are non-negative")
        return ZERO if n == 0 else cls._raw(((ZERO, n),))

    @classmethod
    def omega_power(cls, exponent, coefficient: int = 1) -> "Ordinal":
        if not isinstance(exponent, Ordinal):
            exponent = cls.of(exponent)
        if coefficient == 0:
            return ZERO
        return cls((( exponent, coefficient),))

    # structure

    def __bool__(self):
        return bool(self.terms)

    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0])

    def __int__(self):
        if not self.is_finite():
            raise ValueError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    def degree(self) -> "Ordinal":
        """Leading exponent; the degree of 0 is taken to be 0."""
        return self.terms[0][0] if self.terms else ZERO

    def finite_part(self) -> int:
        if self.terms and not self.terms[-1][0]:
            return self.terms[-1][1]
        return 0

    def limit_part(self) -> "Ordinal":
        if self.terms and not self.terms[-1][0]:
            return Ordinal._raw(self.terms[:-1])
        return self

    def is_limit(self) -> bool:
        return bool(self.terms) and bool(self.terms[-1][0])

    def is_successor(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0]

    def expanded(self):
        """Exponents of the CNF with multiplicity, in decreasing order."""
        return [e for e, k in self.terms for _ in range(k)]

    # order and arithmetic

    def __eq__(self, other):
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __lt__(self, other):
        return _cmp(self, other) < 0

    def __le__(self, other):
        return _cmp(self, other) <= 0

    def __gt__(self, other):
        return _cmp(self, other) > 0

    def __ge__(self, other):
        return _cmp(self, other) >= 0

    def __add__(self, other):
        if isinstance(other, int):
            other = Ordinal.of(other)
        return ord_add(self, other)

    def __radd__(self, other):
        if isinstance(other, int):
            return ord_add(Ordinal.of(other), self)
        return NotImplemented

    def __str__(self):
        return render_ordinal(self)

    def __repr__(self):
        return f"Ordinal({render_ordinal(self)!r})"


def _cmp(a: Ordinal, b: Ordinal) -> int:
    if a is b:
        return 0
    for (ea, ka), (eb, kb) in zip(a.terms, b.terms):
        c = _cmp(ea, eb)
        if c:
            return c
        if ka != kb:
            return -1 if ka < kb else 1
    return (len(a.terms) > len(b.terms)) - (len(a.terms) < len(b.terms))


ZERO = Ordinal._raw(())
ONE = Ordinal._raw(((ZERO, 1),))
OMEGA = Ordinal._raw(((ONE, 1),))


def ord_cmp(a: Ordinal, b: Ordinal) -> str:
    return ("less", "equal", "greater")[_cmp(a, b) + 1]


def ord_add(a: Ordinal, b: Ordinal) -> Ordinal:
    if not b.terms:
        return a
    if not a.terms:
        return b
    lead, k = b.terms[0]
    out = []
    for e, c in a.terms:
        s = _cmp(e, lead)
        if s > 0:
            out.append((e, c))
        elif s == 0:
            k += c
            break
        else:
            break
    out.append((lead, k))
    out.extend(b.terms[1:])
    return Ordinal._raw(out)


def left_subtract(a: Ordinal, b: Ordinal) -> Ordinal:
    """The unique r with a + r == b, for a <= b."""
    i = 0
    for (ea, ka), (eb, kb) in zip(a.terms, b.terms):
        if ea == eb and ka == kb:
            i += 1
            continue
        s = _cmp(ea, eb)
        if s < 0:
            return Ordinal._raw(b.terms[i:])
        if s == 0 and ka < kb:
            return Ordinal._raw(((eb, kb - ka),) + b.terms[i + 1:])
        raise ValueError(f"{a} exceeds {b}")
    if len(a.terms) > len(b.terms):
        raise ValueError(f"{a} exceeds {b}")
    return Ordinal._raw(b.terms[i:])


def _from_coefficients(coeffs: dict) -> Ordinal:
    return Ordinal._raw(sorted(((e, k) for e, k in coeffs.items() if k),
                               key=_SortKey, reverse=True))


class _SortKey:
    __slots__ = ("e",)

    def __init__(self, pair):
        self.e = pair[0]

    def __lt__(self, other):
        return _cmp(self.e, other.e) < 0


# generalized sums

def hessenberg(a: Ordinal, b: Ordinal) -> Ordinal:
    coeffs = dict(a.terms)
    for e, k in b.terms:
        coeffs[e] = coeffs.get(e, 0) + k
    return _from_coefficients(coeffs)


def lcm_sum(a: Ordinal, b: Ordinal) -> Ordinal:
    """Coefficient-wise maximum above degree 0; finite parts are added."""
    coeffs = dict(a.terms)
    for e, k in b.terms:
        if e:
            coeffs[e] = max(coeffs.get(e, 0), k)
        else:
            coeffs[e] = coeffs.get(e, 0) + k
    return _from_coefficients(coeffs)


def _leading_recursion(a, b, combine):
    # shared skeleton of the dynamic and finite-split sums
    out = []
    i = j = 0
    while i < len(a.terms) and j < len(b.terms):
        (ea, ka), (eb, kb) = a.terms[i], b.terms[j]
        s = _cmp(ea, eb)
        if s > 0:
            return Ordinal._raw(out + list(a.terms[i:]))
        if s < 0:
            return Ordinal._raw(out + list(b.terms[j:]))
        out.append((ea, combine(ea, ka, kb)))
        i += 1
        j += 1
    out.extend(a.terms[i:])
    out.extend(b.terms[j:])
    return Ordinal._raw(out)


def dynamic_sum(a: Ordinal, b: Ordinal) -> Ordinal:
    return _leading_recursion(a, b, lambda e, k, l: max(k, l) if e else k + l)


def fsplit_sum(a: Ordinal, b: Ordinal) -> Ordinal:
    return _leading_recursion(a, b, lambda e, k, l: k + l)


def min_sum(a: Ordinal, b: Ordinal) -> Ordinal:
    # writing a = w*a' + n, the quotients agree iff the limit parts agree
    if a.limit_part() != b.limit_part():
        return max(a, b)
    return ord_add(a, Ordinal.of(b.finite_part()))


SUMS = {
    "hess": hessenberg,
    "lcm": lcm_sum,
    "dyn": dynamic_sum,
    "min": min_sum,
    "fsplit": fsplit_sum,
}


def is_additively_indecomposable(a: Ordinal) -> bool:
    if not a:
        raise ValueError("additive indecomposability is defined for non-zero ordinals")
    return len(a.terms) == 1 and a.terms[0][1] == 1


@dataclass(frozen=True)
class CarruthReport:
    ok: bool
    axiom: Optional[int] = None
    witness: Optional[dict] = None

    def __str__(self):
        if self.ok:
            return "pass"
        parts = ", ".join(f"{k}={v}" for k, v in self.witness.items())
        return f"axiom {self.axiom} violated ({parts})"


def carruth_check(op: Callable, sample: Iterable[Ordinal]) -> CarruthReport:
    """Check the natural-operation axioms on every pair and triple of ``sample``.

    Axioms: 1 commutativity, 2 associativity, 3 zero is neutral, 4 strict
    monotonicity ``g op a > g op b`` iff ``a > b``.  A pass only speaks for
    the sample.
    """
    xs = sorted(set(sample))
    for a, b in product(xs, repeat=2):
        if op(a, b) != op(b, a):
            return CarruthReport(False, 1, {"alpha": a, "beta": b})
    for a, b, c in product(xs, repeat=3):
        if op(op(a, b), c) != op(a, op(b, c)):
            return CarruthReport(False, 2, {"alpha": a, "beta": b, "gamma": c})
    for a in xs:
        if op(a, ZERO) != a or op(ZERO, a) != a:
            return CarruthReport(False, 3, {"alpha": a})
    for g in reversed(xs):
        for a, b in product(xs, repeat=2):
            if (op(g, a) > op(g, b)) != (a > b):
                return CarruthReport(False, 4, {"gamma": g, "alpha": a, "beta": b})
    return CarruthReport(True)


def _interleave(left, right):
    # strict positional alternation, left operand first
    while True:
        yield next(left)
        yield next(right)


def _constant(label):
    while True:
        yield label


def lcm_merge_labels(association: str, k: int) -> tuple:
    """Labels of the first ``k`` points of (w+w)+w or w+(w+w) under +lcm.

    Each copy of w is labelled A, B, C from left to right; the two inner w's
    are merged by alternating their points.
    """
    if association == "left":
        stream = _interleave(_interleave(_constant("A"), _constant("B")), _constant("C"))
    elif association == "right":
        stream = _interleave(_constant("A"), _interleave(_constant("B"), _constant("C")))
    else:
        raise ValueError("association must be 'left' or 'right'")
    return tuple(next(stream) for _ in range(k))


# rendering

def render_ordinal(a: Ordinal) -> str:
    if not a:
        return "0"
    return " + ".join(_render_term(e, k) for e, k in a.terms)


def _render_term(e: Ordinal, k: int) -> str:
    if not e:
        return str(k)
    if e == ONE:
        base = "w"
    elif e.is_finite() or e == OMEGA:
        base = f"w^{render_ordinal(e)}"
    else:
        base = f"w^({render_ordinal(e)})"
    return base if k == 1 else f"{base}*{k}"
