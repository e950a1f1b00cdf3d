"""
Shuffles, word encodings and small good sums
============================================

Encode binary words as sums of shuffles, check that each encoding is an
instance of Q with Q, and verify two small sum tables.
"""

from ordsum.complicated import (
    Q, check_good_table, decode_word, e_table, encode_word, make_word_witness, verify_group_rep,
    verify_piece_witness, table_sum, z2_rep, z2_table,
)
from ordsum.shuffle import canonical_minimal_list, shuffle_sum
from ordsum.syntax import parse_expr as T

# members that already contain the whole shuffle drop out
print(canonical_minimal_list([T("2"), T("2"), T("1"), T("1 + Q(1,2) + 2")]).members)
print(shuffle_sum(T("Q(2)"), T("Q(3)")))

# every word gets its own normal form
for word in ["", "0", "01", "0110"]:
    t = encode_word(word)
    ok = verify_piece_witness(Q, Q, t, make_word_witness(word))
    print(f"{word!r:>7} -> {t}   decodes to {decode_word(t)!r}, witness {ok}")

# the two-element group as a table of sums, with instance witnesses
table, witnesses = z2_table()
print("\n", check_good_table(table, witnesses))
print("Z/2Z representation verifies:", verify_group_rep(z2_rep(), table_sum(table)))

table, witnesses = e_table()
print(check_good_table(table, witnesses))
