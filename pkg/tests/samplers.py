"""Seeded plain-random samplers for fixed-size sample runs."""
import random

from ordsum.ordinal import OMEGA, Ordinal
from ordsum.orderterm import normalize, ordinal_term, reversed_ordinal_term, shuffle_term

SEED = 20240601


def rng(offset: int = 0) -> random.Random:
    return random.Random(SEED + offset)


def random_ordinal(r, max_exp=3, max_coef=4, transfinite=0.1):
    exps = sorted(r.sample(range(max_exp + 1), r.randint(0, max_exp + 1)), reverse=True)
    terms = [(Ordinal.of(e), r.randint(1, max_coef)) for e in exps]
    if r.random() < transfinite:
        terms.insert(0, (OMEGA, 1))
    return Ordinal(terms)


def random_term(r, depth=0, max_blocks=4):
    blocks = []
    for _ in range(r.randint(1, max_blocks)):
        kind = r.choice(["ord", "ord", "rev", "shuffle"] if depth < 2 else ["ord", "rev"])
        if kind == "ord":
            blocks.append(ordinal_term(random_ordinal(r)))
        elif kind == "rev":
            blocks.append(reversed_ordinal_term(random_ordinal(r)))
        else:
            members = [m for m in (random_term(r, depth + 1, 2) for _ in range(r.randint(1, 3))) if m.blocks]
            if members:
                blocks.append(shuffle_term(*members))
    return normalize(blocks)
