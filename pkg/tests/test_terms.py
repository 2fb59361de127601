import pytest
from hypothesis import given
from hypothesis import strategies as st

from bsquandle.terms import QuandleTerm, UnassignedAtomError, expand_term, left_chains, parse_term, render_term
from bsquandle.words import WordSyntaxError, free_reduce, parse_word

IDENT = {"a": (("a", 1),), "b": (("b", 1),)}


def fold_letters(term, sigma):
    """Letter-level reference fold, independent of the syllable code."""

    def letters(w):
        out = []
        for g, e in w:
            out += [(g, 1 if e > 0 else -1)] * abs(e)
        return out

    def inverse(ls):
        return [(g, -e) for g, e in reversed(ls)]

    def cancel(ls):
        stack = []
        for x in ls:
            if stack and stack[-1][0] == x[0] and stack[-1][1] == -x[1]:
                stack.pop()
            else:
                stack.append(x)
        return stack

    value = letters(sigma[term.head])
    for operand, sign in term.tail:
        y = letters(sigma[operand])
        value = cancel(inverse(y) + value + y) if sign == 1 else cancel(y + value + inverse(y))
    return free_reduce(value)


@pytest.mark.parametrize(
    "text, head, tail",
    [
        ("a * b * a *^-1 b", "a", (("b", 1), ("a", 1), ("b", -1))),
        ("a^m *^-1 b * a", "a^m", (("b", -1), ("a", 1))),
        ("x", "x", ()),
        ("a *-1 b", "a", (("b", -1),)),
        ("(a * b) * c", "a", (("b", 1), ("c", 1))),
        ("((x))", "x", ()),
    ],
)
def test_parse_term(text, head, tail):
    t = parse_term(text)
    assert t.head == head
    assert t.tail == tail


def test_parentheses_override_association():
    t = parse_term("a * (b *^-1 c)")
    assert t.tail == ((QuandleTerm("b", (("c", -1),)), 1),)
    assert render_term(t) == "a * (b *^-1 c)"
    assert t.depth() == 2


@pytest.mark.parametrize("text", ["a *", "* a", "a b", "a *^2 b", "a ** b", "(a * b", "a * )", ""])
def test_parse_term_errors(text):
    with pytest.raises(WordSyntaxError):
        parse_term(text)


def test_unknown_operator_message():
    with pytest.raises(WordSyntaxError, match="unknown operator"):
        parse_term("a *^2 b")


def test_canonical_rendering_uses_caret_form():
    assert render_term(parse_term("a*-1b")) == "a *^-1 b"


def test_expand_case1_term():
    w = expand_term(parse_term("a * b * a *^-1 b"), IDENT)
    assert w == parse_word("b a^-1 b^-1 a b a b^-1")


def test_expand_idempotence():
    w = parse_word("a^3 b^-2 a")
    assert expand_term(parse_term("x * x"), {"x": w}) == w


def test_expand_inverse_operation():
    sigma = {"a^m": (("a", 5),), "b": (("b", 1),)}
    t = parse_term("a^m *^-1 b")
    expected = fold_letters(t, sigma)
    assert expected == (("b", 1), ("a", 5), ("b", -1))
    assert expand_term(t, sigma) == expected


def test_unassigned_atom():
    with pytest.raises(UnassignedAtomError):
        expand_term(parse_term("a * c"), IDENT)


words = st.lists(st.tuples(st.sampled_from("ab"), st.integers(-3, 3)), max_size=6).map(free_reduce)


@given(words, words)
def test_star_then_inverse_star_recovers(x, y):
    sigma = {"x": x, "y": y}
    xy = expand_term(parse_term("x * y"), sigma)
    assert expand_term(parse_term("z *^-1 y"), {"z": xy, "y": y}) == x
    assert expand_term(parse_term("(x *^-1 y) * y"), sigma) == x


@given(words, words, words)
def test_expand_agrees_with_letter_fold(x, y, z):
    sigma = {"x": x, "y": y, "z": z}
    for t in left_chains(["x", "y", "z"], 2):
        assert expand_term(t, sigma) == fold_letters(t, sigma)


def test_left_chains_count():
    assert len(left_chains(["a", "b", "c"], 2)) == 3 + 18 + 108
