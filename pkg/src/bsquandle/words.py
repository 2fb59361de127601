"""Free-group words over {a, b} in run-length (syllable) form.

A word is a tuple of ``(generator, exponent)`` pairs.  Reduced words have no
zero exponents and no two adjacent syllables on the same generator; the empty
tuple is the identity.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence, Tuple

Syllable = Tuple[str, int]
Word = Tuple[Syllable, ...]

GENERATORS = ("a", "b")
IDENTITY: Word = ()


class WordSyntaxError(ValueError):
    """Malformed word or term text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


def free_reduce(syllables: Iterable[Syllable]) -> Word:
    """Return the free-reduced form of a syllable sequence.

    Works for any generator names, which lets the free-quandle code reuse it
    over arbitrary atom alphabets.
    """
    out: list[Syllable] = []
    for gen, exp in syllables:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            total = out[-1][1] + exp
            if total:
                out[-1] = (gen, total)
            else:
                out.pop()
        else:
            out.append((gen, exp))
    return tuple(out)


def invert(w: Sequence[Syllable]) -> Word:
    return tuple((gen, -exp) for gen, exp in reversed(w))


def concat(*words: Sequence[Syllable]) -> Word:
    return free_reduce(s for w in words for s in w)


def conjugate(x: Sequence[Syllable], y: Sequence[Syllable]) -> Word:
    """``x * y = y^-1 x y``."""
    return concat(invert(y), x, y)


def conjugate_inv(x: Sequence[Syllable], y: Sequence[Syllable]) -> Word:
    """``x *^-1 y = y x y^-1``."""
    return concat(y, x, invert(y))


def letter_length(w: Sequence[Syllable]) -> int:
    return sum(abs(e) for _, e in w)


def exponent_sum(w: Sequence[Syllable], gen: str) -> int:
    return sum(e for g, e in w if g == gen)


def word(*syllables: Syllable) -> Word:
    """Build a reduced word from syllables, e.g. ``word(("b", -1), ("a", 2))``."""
    return free_reduce(syllables)


_WORD_TOKEN = re.compile(r"\s*([ab])(?:\s*\^\s*(-?\d+))?")


def parse_word(text: str) -> Word:
    """Parse ``"b^-1 a^2 b"``-style text into a reduced word.

    Whitespace is insignificant.  ``1`` (or empty text) denotes the identity.
    """
    if text.strip() == "1":
        return IDENTITY
    syllables: list[Syllable] = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        match = _WORD_TOKEN.match(text, pos)
        if not match:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise WordSyntaxError("unexpected character", text, bad)
        gen, exp = match.groups()
        syllables.append((gen, int(exp) if exp is not None else 1))
        pos = match.end()
    return free_reduce(syllables)


def render_word(w: Sequence[Syllable]) -> str:
    if not w:
        return "1"
    return " ".join(gen if exp == 1 else f"{gen}^{exp}" for gen, exp in w)
