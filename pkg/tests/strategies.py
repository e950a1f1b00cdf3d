"""Hypothesis strategies for ordinals and order terms."""
from hypothesis import strategies as st

from ordsum.ordinal import OMEGA, ONE, Ordinal, ord_add
from ordsum.orderterm import ONE_TERM, Ord, RevOrd, Shuffle, normalize, ordinal_term, reversed_ordinal_term

FINITE_EXPONENTS = [Ordinal.of(e) for e in range(4)]
EXPONENTS = FINITE_EXPONENTS + [OMEGA, ord_add(OMEGA, ONE)]


@st.composite
def ordinals(draw, exponents=FINITE_EXPONENTS, max_coef: int = 4, max_terms: int = 3):
    chosen = draw(st.lists(st.sampled_from(exponents), unique=True, max_size=max_terms))
    chosen.sort(reverse=True)
    return Ordinal((e, draw(st.integers(1, max_coef))) for e in chosen)


def small_ordinals():
    return ordinals(FINITE_EXPONENTS[:3], max_coef=3)


MEMBER_POOL = [
    ordinal_term(1), ordinal_term(2), ordinal_term(3), ordinal_term(OMEGA),
    reversed_ordinal_term(OMEGA), normalize([Ord(ONE), Shuffle((ordinal_term(2),)), Ord(ONE)]),
]


@st.composite
def blocks(draw):
    kind = draw(st.sampled_from(["ord", "ord", "rev", "shuffle"]))
    if kind == "ord":
        return Ord(draw(ordinals(max_terms=2).filter(bool)))
    if kind == "rev":
        return RevOrd(draw(ordinals(FINITE_EXPONENTS[1:], max_terms=2).filter(bool)))
    members = draw(st.lists(st.sampled_from(MEMBER_POOL), min_size=1, max_size=3))
    return Shuffle(tuple(members))


def raw_sequences(max_size: int = 5):
    return st.lists(blocks(), max_size=max_size)


def terms(max_size: int = 5):
    return raw_sequences(max_size).map(normalize)


def shuffle_terms():
    return st.lists(st.sampled_from(MEMBER_POOL), min_size=1, max_size=3).map(
        lambda ms: normalize([Shuffle(tuple(ms))]))


Q_TERM = normalize([Shuffle((ONE_TERM,))])
