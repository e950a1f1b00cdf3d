import pytest
from hypothesis import given, strategies as st

from ordsum.errors import ShapeError
from ordsum.ordinal import OMEGA, hessenberg, ord_add
from ordsum.orderterm import (
    EMPTY, ONE_TERM, RevOrd, lift_ordinal_sum, normalize, ordinal_prefix, ordinal_term, reverse_combinator,
    reversed_ordinal_term, sum_h, sum_s, sum_w, term_add, term_eq, term_reverse, wlike_sum, wo_wostar_sum,
)
from ordsum.syntax import parse_expr as T, parse_ordinal
from strategies import ordinals, raw_sequences, terms


def test_normalize_examples():
    assert T("w + w") == T("w*2")
    assert reversed_ordinal_term(3) == ordinal_term(3)
    assert T("Q + 1 + Q") == T("Q")
    assert T("Q(Q)") == T("Q")


def test_addition_examples():
    assert T("Q") + T("Q") == T("Q")
    assert ONE_TERM + ordinal_term(OMEGA) == T("w")
    assert T("w + Q(2)") + T("Q(2) + 1") == T("w + Q(2) + 1")


def test_reverse_examples():
    assert term_reverse(T("w + Q")) == T("Q + rev(w)")
    assert term_reverse(T("w*2")) == normalize([RevOrd(parse_ordinal("w*2"))])
    assert str(term_reverse(T("w*2"))) == "rev(w*2)"
    assert term_reverse(T("Q(1,2)")) == T("Q(1,2)")


# hand-verified pairs: (left, right, isomorphic, reason)
ISO_LIBRARY = [
    ("w + w", "w*2", True, "ordinal addition"),
    ("1 + Q", "Q", False, "least element on the left only"),
    ("Q + Q(2) + Q(2)", "Q + Q(2)", True, "adjacent equal shuffles merge"),
    ("rev(w) + 5", "rev(w)", True, "reversing gives 5 + w = w"),
    ("5 + rev(w)", "rev(w)", False, "least element on the left only"),
    ("w + rev(w)", "rev(w) + w", False, "least element on the left only"),
    ("Q(2) + Q(2)", "Q(2)", True, "a cut of Q(2) between pairs"),
    ("Q + Q(2)", "Q(2)", False, "every point of Q(2) has a neighbour"),
    ("Q(2) + 1 + Q(2)", "Q(1,2)", False, "exactly one point without neighbours on the left"),
    ("Q(1,2) + 2 + Q(1,2)", "Q(1,2)", True, "the middle 2 is one more rational's block"),
    ("Q(1,1 + Q + 1)", "Q", True, "dense, countable, no endpoints"),
    ("Q(2,Q)", "Q(2)", False, "Q(2) has no dense convex subset"),
    ("rev(w*2)", "rev(w) + rev(w)", True, "(w*2)* = w* + w*"),
    ("rev(w^2) + 3", "rev(w^2)", True, "reversing gives 3 + w^2 = w^2"),
    ("Q(w,rev(w))", "Q(rev(w),w)", True, "member lists are sets"),
    ("1 + Q(2)", "Q(2)", False, "least element on the left only"),
]


@pytest.mark.parametrize("left, right, iso, reason", ISO_LIBRARY)
def test_isomorphism_library(left, right, iso, reason):
    assert term_eq(T(left), T(right)) == iso, reason


def test_level_zero_is_not_associative():
    q, w, one = T("Q"), T("w"), ONE_TERM
    left = wlike_sum(0, wlike_sum(0, q, w), one)
    right = wlike_sum(0, q, wlike_sum(0, w, one))
    assert left == T("2 + Q + w")
    assert right == T("1 + Q + w")
    assert left != right


def test_level_one_is_not_associative():
    q, ww, w = T("Q"), T("w^2"), T("w")
    left = wlike_sum(1, wlike_sum(1, q, ww), w)
    right = wlike_sum(1, q, wlike_sum(1, ww, w))
    assert left == T("w + Q + w^2")
    assert right == T("Q + w^2")
    assert left != right


def test_w_sum_moves_whole_ordinal_prefix():
    assert wlike_sum(2, T("Q"), T("w^2")) == T("w^2 + Q")
    assert sum_w(ONE_TERM, T("w")) == T("w + 1")
    assert sum_w(T("w"), ONE_TERM) == T("w")


def test_scattered_prefix_sum():
    assert sum_s(T("rev(w)"), T("w + Q")) == T("w + rev(w) + Q")
    assert sum_s(T("w^2 + 1"), T("Q")) == T("w^2 + 1 + Q")
    assert sum_s(T("Q(2)"), T("w")) == T("w + Q(2)")


def test_hessenberg_prefix_sum():
    assert sum_h(T("w^2 + Q"), T("w*3 + Q(2)")) == T("w^2 + w*3 + Q + Q(2)")
    assert sum_h(T("w"), T("w")) == T("w*2")
    assert sum_h(T("Q"), T("Q")) == T("Q")


def test_ordinal_plus_reversed_extension():
    hess = hessenberg
    assert wo_wostar_sum(hess, T("w + rev(w)"), T("3")) == T("w + 3 + rev(w)")
    assert wo_wostar_sum(hess, T("w + rev(w)"), T("w*2 + rev(w)")) == T("w*3 + rev(w*2)")
    assert wo_wostar_sum(hess, EMPTY, T("w + 2 + rev(w^2)")) == T("w + 2 + rev(w^2)")
    with pytest.raises(ShapeError):
        wo_wostar_sum(hess, T("rev(w) + w"), T("1"))
    with pytest.raises(ShapeError):
        wo_wostar_sum(hess, T("Q"), T("1"))


def test_reverse_combinator():
    hess = lift_ordinal_sum(hessenberg)
    rev_hess = reverse_combinator(hess)
    assert rev_hess(T("rev(w)"), T("rev(w)")) == T("rev(w*2)")
    assert reverse_combinator(term_add)(T("w"), T("Q")) == T("w + Q")


def test_lifted_sum_rejects_non_well_orders():
    with pytest.raises(ShapeError):
        lift_ordinal_sum(hessenberg)(T("Q"), T("1"))


@given(raw_sequences())
def test_normalize_idempotent(raw):
    t = normalize(raw)
    assert normalize([t]) == t
    assert normalize(list(t.blocks)) == t


@given(raw_sequences(6), st.data())
def test_normalizing_a_part_first_gives_the_same_form(raw, data):
    i = data.draw(st.integers(0, len(raw)))
    j = data.draw(st.integers(i, len(raw)))
    assert normalize(raw[:i] + [normalize(raw[i:j])] + raw[j:]) == normalize(raw)


@given(terms(), terms(), terms())
def test_addition_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + EMPTY == a == EMPTY + a
    assert term_reverse(a + b) == term_reverse(b) + term_reverse(a)
    assert term_reverse(term_reverse(a)) == a


@pytest.mark.parametrize("op", [sum_w, sum_s, sum_h], ids=["w", "s", "h"])
@given(a=terms(4), b=terms(4), c=terms(4))
def test_prefix_sums_associative(op, a, b, c):
    assert op(op(a, b), c) == op(a, op(b, c))


@given(ordinals(), ordinals())
def test_prefix_hessenberg_matches_ordinals(a, b):
    assert sum_h(ordinal_term(a), ordinal_term(b)) == ordinal_term(hessenberg(a, b))


@given(ordinals(), terms(3))
def test_w_sum_keeps_the_moved_prefix(a, b):
    # the output's ordinal prefix is b's ordinal prefix followed by a
    tau, _ = ordinal_prefix(b)
    assert ordinal_prefix(sum_w(ordinal_term(a), b))[0] == ord_add(tau, a)


@given(terms(), terms())
def test_reverse_combinator_is_an_involution(a, b):
    twice = reverse_combinator(reverse_combinator(sum_s))
    assert twice(a, b) == sum_s(a, b)
