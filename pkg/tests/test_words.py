import pytest
from hypothesis import given
from hypothesis import strategies as st

from bsquandle.words import (
    WordSyntaxError,
    concat,
    free_reduce,
    invert,
    letter_length,
    parse_word,
    render_word,
)

syllables = st.lists(st.tuples(st.sampled_from("ab"), st.integers(-5, 5)), max_size=12)


def is_reduced(w):
    return all(e != 0 for _, e in w) and all(x[0] != y[0] for x, y in zip(w, w[1:]))


@pytest.mark.parametrize(
    "text, expected",
    [
        ("b^-1 a^2 b", (("b", -1), ("a", 2), ("b", 1))),
        ("a a^-1", ()),
        (
            "b a^-1 b^-1 a b a b^-1",
            (("b", 1), ("a", -1), ("b", -1), ("a", 1), ("b", 1), ("a", 1), ("b", -1)),
        ),
        ("", ()),
        ("1", ()),
        ("  a^ 3b^-2 ", (("a", 3), ("b", -2))),
        ("a^0 b", (("b", 1),)),
        ("aab", (("a", 2), ("b", 1))),
    ],
)
def test_parse_word(text, expected):
    assert parse_word(text) == expected


@pytest.mark.parametrize("text, position", [("a^", 1), ("c", 0), ("a + b", 2), ("a^-x", 1), ("a 1", 2)])
def test_parse_word_reports_position(text, position):
    with pytest.raises(WordSyntaxError) as info:
        parse_word(text)
    assert info.value.position == position


@pytest.mark.parametrize(
    "raw, expected",
    [
        ([("a", 2), ("a", -2)], ()),
        ([("a", 1), ("b", 1), ("b", -1), ("a", 1)], (("a", 2),)),
        ([("b", -1), ("a", 0), ("b", 1)], ()),
    ],
)
def test_free_reduce_examples(raw, expected):
    assert free_reduce(raw) == expected


def test_invert_and_concat_examples():
    assert invert((("b", -1), ("a", 2), ("b", 1))) == (("b", -1), ("a", -2), ("b", 1))
    assert concat((("a", 1),), (("a", -1),)) == ()
    assert concat((("a", 1),), (("b", 2),)) == (("a", 1), ("b", 2))


def test_render():
    assert render_word(()) == "1"
    assert render_word((("b", -1), ("a", 2), ("b", 1))) == "b^-1 a^2 b"


@given(syllables)
def test_free_reduce_idempotent_and_shrinking(raw):
    once = free_reduce(raw)
    assert is_reduced(once)
    assert free_reduce(once) == once
    assert letter_length(once) <= sum(abs(e) for _, e in raw)


@given(syllables, syllables, syllables)
def test_concat_associative(u, v, w):
    assert concat(concat(u, v), w) == concat(u, concat(v, w))


@given(syllables)
def test_inverse_cancels(w):
    assert concat(w, invert(w)) == ()
    assert concat(invert(w), w) == ()


@given(syllables)
def test_render_parse_round_trip(raw):
    w = free_reduce(raw)
    assert parse_word(render_word(w)) == w
