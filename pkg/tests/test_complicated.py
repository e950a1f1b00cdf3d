from itertools import combinations_with_replacement, product

import pytest

from ordsum.errors import ShapeError
from ordsum.ordinal import hessenberg
from ordsum.orderterm import EMPTY, lift_ordinal_sum, term_add
from ordsum.complicated import (
    E_ONE, E_TWO, Q, Q12, Q2, Z2_ONE, Z2_ZERO, GroupRep, Piece, PieceWitness, SumTable, check_good_table,
    decode_word, e_table, encode_multiset, encode_word, free_multiset_sum, make_word_witness, no_group_ordinals_check,
    semi_standard_classify, table_sum, two_element_representations, verify_group_rep, verify_piece_witness, z2_rep,
    z2_table,
)
from ordsum.sgc import ALL, W, ZERO_CLASS, simple_sum
from ordsum.syntax import parse_expr as T, parse_ordinal as O

_CODE_TEXT = {"0": "Q(2)", "1": "Q(1,2)"}


def words(max_len):
    for n in range(max_len + 1):
        for bits in product("01", repeat=n):
            yield "".join(bits)


def expected_encoding(word):
    return T(" + ".join(["Q"] + [f"{_CODE_TEXT[b]} + Q" for b in word]))


def test_encode_examples():
    assert encode_word("") == T("Q")
    assert encode_word("0") == T("Q + Q(2) + Q")
    assert encode_word("01") == T("Q + Q(2) + Q + Q(1,2) + Q")
    assert encode_word([1, 0]) == T("Q + Q(1,2) + Q + Q(2) + Q")
    with pytest.raises(ShapeError):
        encode_word("012")


def test_decode_examples():
    assert decode_word(T("Q")) == ""
    assert decode_word(T("Q + Q(1,2) + Q")) == "1"
    for bad in ["w + Q", "Q + Q(2)", "Q + Q(3) + Q", "Q(2) + Q + Q(2)"]:
        with pytest.raises(ShapeError):
            decode_word(T(bad))


def test_encoding_round_trips_and_is_injective():
    seen = {}
    for w in words(10):
        t = encode_word(w)
        assert t == expected_encoding(w)
        assert decode_word(t) == w
        seen[t] = w
    assert len(seen) == 2 ** 11 - 1


def test_word_witnesses_verify():
    for w in words(8):
        report = verify_piece_witness(Q, Q, encode_word(w), make_word_witness(w))
        assert report.ok, (w, report.reason)


def test_word_witness_shapes():
    assert make_word_witness("") == PieceWitness((Piece(0, (("cut", "lower"),)),), (Piece(0, (("cut", "upper"),)),))
    wit = make_word_witness("0")
    assert wit.left[1].path == (("pairs", "succ"),) and wit.right[1].path == (("pairs", "pred"),)
    wit = make_word_witness("1")
    assert wit.left[1].path == (("isolated", "pred_single"),) and wit.right[1].path == (("isolated", "succ"),)


def test_witness_rejections():
    omega = T("w")
    assert not verify_piece_witness(Q, Q, omega, make_word_witness(""))
    wit = make_word_witness("01")
    c = encode_word("01")
    assert not verify_piece_witness(Q, Q2, c, wit)
    gap = PieceWitness(wit.left[:-1], wit.right[:-1])
    assert "gap" in verify_piece_witness(Q, Q, c, gap).reason
    overlap = PieceWitness(wit.left + (Piece(0),), wit.right)
    assert not verify_piece_witness(Q, Q, c, overlap)
    missing = PieceWitness(wit.left + (Piece(9),), wit.right)
    assert "missing block" in verify_piece_witness(Q, Q, c, missing).reason


def associativity_violations(op, carrier):
    out = []
    for x, y, z in product(carrier, repeat=3):
        xy, yz = op(x, y), op(y, z)
        if xy in carrier and yz in carrier and op(xy, z) != op(x, yz):
            out.append((x, y, z))
    return out


def test_z2_table_is_good():
    table, witnesses = z2_table()
    report = check_good_table(table, witnesses)
    assert report.ok, str(report)
    assert report.triples == 8
    assert associativity_violations(table_sum(table), table.carrier) == []


def test_e_table_is_good():
    table, witnesses = e_table()
    assert set(table.carrier) == {E_TWO, Q, E_ONE}
    assert E_TWO == T("2 + Q(2) + Q") and E_ONE == T("1 + Q + Q(2) + Q")
    report = check_good_table(table, witnesses)
    assert report.ok, str(report)
    assert report.triples == 27
    assert associativity_violations(table_sum(table), table.carrier) == []


def test_constant_variant_table():
    table = SumTable.from_rows([(Z2_ZERO, Z2_ONE, Z2_ONE), (Z2_ONE, Z2_ONE, Z2_ONE), (Z2_ZERO, Z2_ZERO, Z2_ONE)])
    report = check_good_table(table)
    assert report.ok and report.triples == 8
    assert associativity_violations(table_sum(table), table.carrier) == []


def test_table_problems_are_reported():
    partial = SumTable.from_rows([(Z2_ZERO, Z2_ONE, Z2_ONE)])
    assert any("missing entry" in v for v in check_good_table(partial).violations)
    # a commutative table on three points that is not associative
    a, b, c = T("1"), T("2"), T("3")
    bad = SumTable.from_rows([(a, a, b), (a, b, c), (a, c, a), (b, b, a), (b, c, c), (c, c, b)])
    report = check_good_table(bad)
    assert not report.ok
    assert len(report.violations) == len(associativity_violations(table_sum(bad), bad.carrier))
    with pytest.raises(ShapeError):
        SumTable.from_rows([(a, b, c), (b, a, a)])
    table, witnesses = z2_table()
    broken = dict(witnesses)
    key = frozenset((Z2_ONE,))
    broken[key] = (Z2_ONE, Z2_ONE, make_word_witness("1"))
    assert not check_good_table(table, broken).ok


@pytest.mark.parametrize("a, b, c, expected", [
    ("1", "w", "w + 1", "reversed"),
    ("w", "1", "w + 1", "usual"),
    ("2 + Q(2) + Q", "Q", "1 + Q + Q(2) + Q", "neither"),
    ("Q", "Q", "Q", "both"),
])
def test_semi_standard_classification(a, b, c, expected):
    assert semi_standard_classify(T(a), T(b), T(c)) == expected


def test_e_case_standard_sums():
    assert term_add(E_TWO, Q) == T("2 + Q(2) + Q")
    assert term_add(Q, E_TWO) == T("Q + 2 + Q(2) + Q")


def test_group_representations():
    table, _ = z2_table()
    assert verify_group_rep(z2_rep(), table_sum(table))
    trivial = GroupRep(("e",), {("e", "e"): "e"}, {"e": Q})
    assert verify_group_rep(trivial, term_add)
    hess = lift_ordinal_sum(hessenberg)
    assert not verify_group_rep(z2_rep(T("0"), T("w")), hess)
    assert not verify_group_rep(z2_rep(Q, Q), term_add)


def test_z2_is_the_only_two_element_rep_in_its_table():
    table, _ = z2_table()
    assert two_element_representations(table_sum(table), table.carrier) == [(Z2_ZERO, Z2_ONE)]


@pytest.mark.parametrize("sample", [
    ["1", "2", "w", "w + 1", "w*2"],
    ["0"],
    [f"w^{k}*{c}" for k in range(3) for c in range(1, 4)],
])
def test_no_group_among_ordinals(sample):
    report = no_group_ordinals_check([O(s) for s in sample])
    assert report.ok and report.pairs == len(set(sample)) ** 2
    assert report.below_max == () and report.representations == ()


_SIMPLE_SAMPLE = [T(s) for s in [
    "0", "1", "2", "w", "w + 1", "w*2", "w^2", "rev(w)", "1 + rev(w)", "Q", "1 + Q", "Q + 1", "Q(2)",
    "Q(1,2)", "w + Q", "Q + w", "rev(w) + w", "w + rev(w)", "Q(2) + Q", "Q(1,2) + Q",
]]


@pytest.mark.parametrize("c", [W, ZERO_CLASS, ALL], ids=str)
def test_simple_sums_represent_no_two_element_group(c):
    assert len(set(_SIMPLE_SAMPLE)) == 20
    assert two_element_representations(lambda x, y: simple_sum(c, x, y), _SIMPLE_SAMPLE) == []


GENS = [Q2, Q12, T("Q(3)")]


def test_free_multiset_examples():
    total, wit = free_multiset_sum([Q2], [Q12])
    # generators are listed in structural order
    assert total == encode_multiset([Q2, Q12]) == T("Q + Q(1,2) + Q + Q(2) + Q")
    assert verify_piece_witness(encode_multiset([Q2]), encode_multiset([Q12]), total, wit)
    total, wit = free_multiset_sum([Q2, Q12], [])
    assert total == encode_multiset([Q2, Q12])
    assert verify_piece_witness(encode_multiset([Q2, Q12]), Q, total, wit)
    total, _ = free_multiset_sum([Q2], [Q2])
    assert total == T("Q + Q(2) + Q + Q(2) + Q")
    assert encode_multiset([]) == Q


def test_generators_are_checked():
    for bad in [Q, T("w"), T("Q(2) + Q")]:
        with pytest.raises(ShapeError):
            encode_multiset([bad])


def multisets(max_size):
    for n in range(max_size + 1):
        yield from combinations_with_replacement(GENS, n)


def test_free_multisets_are_injective():
    seen = {encode_multiset(m): m for m in multisets(5)}
    assert len(seen) == sum(1 for _ in multisets(5)) == 56


def test_free_multiset_sums_verify_and_commute():
    small = list(multisets(3))
    for m1, m2 in product(small, repeat=2):
        total, wit = free_multiset_sum(m1, m2)
        assert total == encode_multiset(m1 + m2) == free_multiset_sum(m2, m1)[0]
        report = verify_piece_witness(encode_multiset(m1), encode_multiset(m2), total, wit)
        assert report.ok, (m1, m2, report.reason)


def test_free_multiset_sum_associative():
    small = list(multisets(2))
    for m1, m2, m3 in product(small, repeat=3):
        via_left = free_multiset_sum(m1 + m2, m3)[0]
        via_right = free_multiset_sum(m1, m2 + m3)[0]
        assert via_left == via_right == encode_multiset(m1 + m2 + m3)


def test_empty_is_not_an_encoding():
    assert EMPTY != encode_word("")
