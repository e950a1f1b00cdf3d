"""Quick property suites runnable from the command line without pytest."""
import random
from itertools import product
from math import comb

from .bicolor import enumerate_bicolorings, realize, sum_from_bicoloring
from .complicated import Q, check_good_table, decode_word, e_table, encode_word, make_word_witness, verify_piece_witness, z2_table
from .instances import check_bounds, enumerate_instances, merge_plan_instances
from .ordinal import SUMS, Ordinal, carruth_check, hessenberg, lcm_merge_labels
from .orderterm import ordinal_term, sum_h
from .sgc import ALL, SCATTERED, W, WSTAR, ZERO_CLASS, involution, membership, simple_sum
from .shuffle import canonical_minimal_list, shuffle_sum
from .sift import hessenberg_scheme_for, sifted_sum
from .syntax import parse_expr

SEED = 20240601


def random_ordinal(rng: random.Random, max_exp: int = 3, max_coef: int = 4) -> Ordinal:
    exps = sorted(rng.sample(range(max_exp + 1), rng.randint(0, max_exp + 1)), reverse=True)
    return Ordinal((Ordinal.of(e), rng.randint(1, max_coef)) for e in exps)


_TERM_POOL = ["0", "1", "2", "w", "w*2 + 3", "w^2 + w", "rev(w)", "3 + rev(w)", "Q", "Q(2)",
              "Q(1,2)", "1 + Q", "Q + w", "w + Q(2) + 1", "rev(w) + w", "Q(w,rev(w))"]


def _terms():
    return [parse_expr(s) for s in _TERM_POOL]


def suite_ordinal(rng):
    xs = [random_ordinal(rng) for _ in range(60)]
    for name, op in SUMS.items():
        yield f"{name} commutative", all(op(a, b) == op(b, a) for a, b in zip(xs, xs[1:]))
        yield f"{name} associative", all(op(op(a, b), c) == op(a, op(b, c))
                                         for a, b, c in zip(xs, xs[1:], xs[2:]))
    yield "lcm axiom-4 witness flagged", not carruth_check(SUMS["lcm"], xs[:8]).ok
    yield "point tracking patterns differ", lcm_merge_labels("left", 12) != lcm_merge_labels("right", 12)


def suite_instances(rng):
    pairs = [(random_ordinal(rng, 2, 3), random_ordinal(rng, 2, 3)) for _ in range(40)]
    yield "bounds attained", all(check_bounds(a, b).ok for a, b in pairs)
    small = [(a, b) for a, b in pairs if all(e <= Ordinal.of(1) for e, _ in a.terms + b.terms)]
    yield "merge plan agrees", all(set(enumerate_instances(a, b)) == merge_plan_instances(a, b) for a, b in small)


def suite_orderterm(rng):
    ts = _terms()
    yield "render round trip", all(parse_expr(str(t)) == t for t in ts)
    yield "addition associative", all((a + b) + c == a + (b + c) for a, b, c in product(ts[:8], repeat=3))


def suite_shuffle(rng):
    ts = _terms()
    raw = [[rng.choice(ts) for _ in range(rng.randint(1, 3))] for _ in range(80)]
    raw = [r for r in raw if any(r)]
    yield "canonical idempotent", all(canonical_minimal_list(canonical_minimal_list(r)) == canonical_minimal_list(r) for r in raw)
    qs = [t for t in ts if len(t.blocks) == 1 and str(t).startswith("Q")]
    yield "shuffle sum commutative", all(shuffle_sum(a, b) == shuffle_sum(b, a) for a, b in product(qs, repeat=2))


def suite_sgc(rng):
    ts = _terms()
    for c in (ZERO_CLASS, W, WSTAR, SCATTERED, ALL):
        yield f"simple sum {c} associative", all(
            simple_sum(c, simple_sum(c, a, b), d) == simple_sum(c, a, simple_sum(c, b, d))
            for a, b, d in (rng.sample(ts, 3) for _ in range(40)))
        yield f"perp of perp is {c}", involution("perp", involution("perp", c)) == c
    yield "W membership", membership(W, parse_expr("w^2 + 3")) and not membership(W, parse_expr("rev(w)"))


def suite_sift(rng):
    pairs = [(ordinal_term(random_ordinal(rng)), ordinal_term(random_ordinal(rng))) for _ in range(60)]
    yield "hessenberg scheme", all(sifted_sum(hessenberg_scheme_for(a, b), a, b) == ordinal_term(hessenberg(a.blocks[0].length, b.blocks[0].length))
                                   for a, b in pairs if a and b)
    ts = _terms()
    yield "matches sum_h", all(sifted_sum(hessenberg_scheme_for(a, b), a, b) == sum_h(a, b) for a, b in product(ts, repeat=2))


def suite_complicated(rng):
    words = ["".join(w) for n in range(5) for w in product("01", repeat=n)]
    yield "round trip", all(decode_word(encode_word(w)) == w for w in words)
    yield "word witnesses", all(verify_piece_witness(Q, Q, encode_word(w), make_word_witness(w)).ok for w in words)
    yield "group table", check_good_table(*z2_table()).ok
    yield "canonical-regularity table", check_good_table(*e_table()).ok


def suite_bicolor(rng):
    yield "binomial counts", all(enumerate_bicolorings(m, n)[0] == comb(m + n, n) for m in range(5) for n in range(5))
    _, cs = enumerate_bicolorings(3, 3)
    yield "sums have size m+n", all(sum_from_bicoloring(c) == ordinal_term(6) and len(realize(c)) == 6 for c in cs)


SUITES = {
    "ordinal": suite_ordinal,
    "instances": suite_instances,
    "orderterm": suite_orderterm,
    "shuffle": suite_shuffle,
    "sgc": suite_sgc,
    "sift": suite_sift,
    "complicated": suite_complicated,
    "bicolor": suite_bicolor,
}


def run_suites(names) -> list:
    """[(suite, check, ok)] for the named suites, each with its own seeded generator."""
    results = []
    for name in names:
        rng = random.Random(SEED)
        results += [(name, check, bool(ok)) for check, ok in SUITES[name](rng)]
    return results
