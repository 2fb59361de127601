"""Shared generators for randomized tests."""

import random

from bsquandle.words import concat, free_reduce, invert, letter_length

LETTERS = (("a", 1), ("a", -1), ("b", 1), ("b", -1))


def random_letters(rng: random.Random, max_len: int):
    return free_reduce(rng.choice(LETTERS) for _ in range(rng.randint(0, max_len)))


def random_relator_product(rng: random.Random, p, max_len: int):
    """A random conjugate of the relator (or its inverse), so trivial in BS(m, n)."""
    m, n = p
    relator = free_reduce((("b", -1), ("a", m), ("b", 1), ("a", -n)))
    if letter_length(relator) > max_len:
        raise ValueError("max_len is shorter than the relator")
    while True:
        g = random_letters(rng, max_len)
        r = relator if rng.random() < 0.5 else invert(relator)
        w = concat(invert(g), r, g)
        if letter_length(w) <= max_len:
            return w


def random_bs_word(rng: random.Random, p, max_len: int = 20):
    """Half plain random words, half words that are trivial in the group.

    Mixing in relator conjugates makes both verdicts of the word problem
    show up in every sample.
    """
    if rng.random() < 0.5 or max_len < 2 + abs(p[0]) + abs(p[1]):
        return random_letters(rng, max_len)
    w = random_relator_product(rng, p, max_len)
    # optionally perturb so that some near-misses appear
    if rng.random() < 0.3 and letter_length(w) < max_len:
        w = concat(w, (rng.choice(LETTERS),))
    return w
