"""Product bi-colorings of finite orders.

A bi-coloring of ``m x n`` says, for every cross pair, whether ``a`` precedes
``b`` in a sum of ``m`` and ``n`` (1) or follows it (0).  Valid colorings are
monotone: rows never drop from 1 to 0 as ``b`` grows, and columns never rise
as ``a`` grows.
"""
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .errors import CapacityError, ShapeError
from .orderterm import OrderTerm, ordinal_term, term_add

MAX_CELLS = 36


@dataclass(frozen=True)
class BiColoring:
    m: int
    n: int
    rows: tuple  # rows[a][b] is p(a, b)

    def p(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def render(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows)


def make_bicoloring(rows: Sequence[Sequence[int]], n: int = None) -> BiColoring:
    rows = tuple(tuple(int(v) for v in row) for row in rows)
    if n is None:
        n = len(rows[0]) if rows else 0
    return BiColoring(len(rows), n, rows)


def validate_bicoloring(c: BiColoring) -> bool:
    if len(c.rows) != c.m or any(len(row) != c.n or set(row) - {0, 1} for row in c.rows):
        return False
    rows_rise = all(row[b] <= row[b + 1] for row in c.rows for b in range(c.n - 1))
    cols_fall = all(c.rows[a + 1][b] <= c.rows[a][b] for a in range(c.m - 1) for b in range(c.n))
    return rows_rise and cols_fall


def realize(c: BiColoring) -> list:
    """The sum order on m + n as a list of labels ("a", i) and ("b", j)."""
    if not validate_bicoloring(c):
        raise ShapeError("not a valid bi-coloring")
    out, i, j = [], 0, 0
    while i < c.m or j < c.n:
        if i < c.m and (j == c.n or c.p(i, j)):
            out.append(("a", i))
            i += 1
        else:
            out.append(("b", j))
            j += 1
    if coloring_of_sum(c.m, c.n, out) != c:
        raise ShapeError("the merge does not realize the coloring")
    return out


def sum_from_bicoloring(c: BiColoring) -> OrderTerm:
    return ordinal_term(len(realize(c)))


def coloring_of_sum(m: int, n: int, order: Sequence) -> BiColoring:
    """Read p(a, b) off a total order on the labels ("a", i), ("b", j)."""
    pos = {label: k for k, label in enumerate(order)}
    rows = tuple(tuple(int(pos[("a", a)] < pos[("b", b)]) for b in range(n)) for a in range(m))
    return BiColoring(m, n, rows)


def iter_bicolorings(m: int, n: int) -> Iterator[BiColoring]:
    """Valid colorings in row-major lexicographic order of the map."""
    if m * n > MAX_CELLS:
        raise CapacityError(f"{m}x{n} exceeds {MAX_CELLS} cells")
    cells = [0] * (m * n)

    def fill(k):
        if k == m * n:
            yield BiColoring(m, n, tuple(tuple(cells[a * n:(a + 1) * n]) for a in range(m)))
            return
        a, b = divmod(k, n)
        low = cells[k - 1] if b else 0
        high = cells[k - n] if a else 1
        for v in range(low, high + 1):
            cells[k] = v
            yield from fill(k + 1)

    yield from fill(0)


def enumerate_bicolorings(m: int, n: int) -> tuple:
    """(count, colorings) for m x n."""
    colorings = list(iter_bicolorings(m, n))
    return len(colorings), colorings


# finite standardness

_SIDES = {
    "right": lambda op, x, a: (op(x, a), term_add(x, a)),
    "left": lambda op, x, a: (op(a, x), term_add(a, x)),
    "right*": lambda op, x, a: (op(x, a), term_add(a, x)),
    "left*": lambda op, x, a: (op(a, x), term_add(x, a)),
}


@dataclass(frozen=True)
class StandardnessReport:
    side: str
    one_standard: bool
    failures: tuple  # finite sizes that are not standard on the sample

    @property
    def ok(self) -> bool:
        return not self.one_standard or not self.failures


def is_standard(op: Callable, x: OrderTerm, side: str, sample: Iterable[OrderTerm]) -> bool:
    check = _SIDES[side]
    return all(got == want for got, want in (check(op, x, a) for a in sample))


def finite_standardness_check(op: Callable, sample: Iterable[OrderTerm], side: str = "right",
                              max_n: int = 6) -> StandardnessReport:
    """If 1 is standard on the sample, so is every n <= max_n."""
    if side not in _SIDES:
        raise ValueError(f"side must be one of {sorted(_SIDES)}")
    finite = [ordinal_term(k) for k in range(max_n + 1)]
    sample = list(dict.fromkeys(list(sample) + finite))
    one = is_standard(op, finite[1], side, sample)
    failures = tuple(k for k in range(1, max_n + 1) if not is_standard(op, finite[k], side, sample))
    return StandardnessReport(side, one, failures)
