"""Quandle terms in left-associated notation.

``x1 *^e1 x2 *^e2 ... x_k`` stands for ``(...((x1 *^e1 x2) *^e2 x3) ...) x_k``.
Parentheses override the default association, so an operand may itself be a
term.  Atom names are identifiers optionally followed by ``^exponent``
(``a^m`` and ``a^2`` are single atoms, bound to words through an assignment).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Sequence, Tuple, Union

from .words import Word, WordSyntaxError, conjugate, conjugate_inv

Operand = Union[str, "QuandleTerm"]


@dataclass(frozen=True)
class QuandleTerm:
    head: Operand
    tail: Tuple[Tuple[Operand, int], ...] = ()

    def __post_init__(self):
        for _, sign in self.tail:
            if sign not in (1, -1):
                raise ValueError(f"operation sign must be +1 or -1, got {sign}")

    def __str__(self) -> str:
        return render_term(self)

    def star(self, other: Operand, sign: int = 1) -> "QuandleTerm":
        return QuandleTerm(self.head, self.tail + ((other, sign),))

    def atoms(self) -> set[str]:
        found = set()
        for operand in (self.head, *(o for o, _ in self.tail)):
            if isinstance(operand, QuandleTerm):
                found |= operand.atoms()
            else:
                found.add(operand)
        return found

    def depth(self) -> int:
        """Number of quandle operations in the term."""
        total = len(self.tail)
        for operand in (self.head, *(o for o, _ in self.tail)):
            if isinstance(operand, QuandleTerm):
                total += operand.depth()
        return total


def atom(name: str) -> QuandleTerm:
    return QuandleTerm(name)


class UnassignedAtomError(KeyError):
    pass


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<op>\*(?:\^-1|-1)?(?![\^\d-]))
      | (?P<badop>\*\S*)
      | (?P<atom>[A-Za-z_][A-Za-z0-9_]*(?:\^-?[A-Za-z0-9_]+)?)
      | (?P<lpar>\()
      | (?P<rpar>\))
    )""",
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        match = _TOKEN.match(text, pos)
        start = pos + len(text[pos:]) - len(text[pos:].lstrip())
        if not match:
            raise WordSyntaxError("unexpected character", text, start)
        kind = match.lastgroup
        if kind == "badop":
            raise WordSyntaxError(f"unknown operator {match.group(kind)!r}", text, start)
        tokens.append((kind, match.group(kind), start))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def fail(self, message: str):
        tok = self.peek()
        raise WordSyntaxError(message, self.text, tok[2] if tok else len(self.text))

    def operand(self) -> Operand:
        tok = self.peek()
        if tok is None:
            self.fail("expected atom or '('")
        kind, value, _ = tok
        if kind == "atom":
            self.i += 1
            return value
        if kind == "lpar":
            self.i += 1
            inner = self.term()
            if self.peek() is None or self.peek()[0] != "rpar":
                self.fail("expected ')'")
            self.i += 1
            return inner.head if not inner.tail else inner
        self.fail("expected atom or '('")

    def term(self) -> QuandleTerm:
        head = self.operand()
        if isinstance(head, QuandleTerm):
            # (x * y) * z is the same left-associated chain as x * y * z
            head, tail = head.head, list(head.tail)
        else:
            tail = []
        while (tok := self.peek()) is not None and tok[0] == "op":
            self.i += 1
            sign = 1 if tok[1] == "*" else -1
            tail.append((self.operand(), sign))
        return QuandleTerm(head, tuple(tail))


def parse_term(text: str) -> QuandleTerm:
    """Parse ``"a * b * a *^-1 b"`` into a left-associated term."""
    parser = _Parser(text)
    result = parser.term()
    if parser.peek() is not None:
        parser.fail("unexpected token")
    return result


def _render_operand(op: Operand) -> str:
    if isinstance(op, QuandleTerm):
        return f"({render_term(op)})" if op.tail else _render_operand(op.head)
    return op


def render_term(t: QuandleTerm) -> str:
    parts = [_render_operand(t.head)]
    for operand, sign in t.tail:
        parts.append("*" if sign == 1 else "*^-1")
        parts.append(_render_operand(operand))
    return " ".join(parts)


def expand_term(t: Operand, assignment: Mapping[str, Word]) -> Word:
    """Evaluate a term in the conjugation quandle of the free group.

    ``u * v -> v^-1 u v`` and ``u *^-1 v -> v u v^-1``; the result is
    free-reduced.
    """
    if isinstance(t, str):
        try:
            return tuple(assignment[t])
        except KeyError:
            raise UnassignedAtomError(f"atom {t!r} has no assigned word") from None
    value = expand_term(t.head, assignment)
    for operand, sign in t.tail:
        rhs = expand_term(operand, assignment)
        value = conjugate(value, rhs) if sign == 1 else conjugate_inv(value, rhs)
    return value


def left_chains(atoms: Sequence[str], max_ops: int) -> list[QuandleTerm]:
    """All left-associated terms with at most ``max_ops`` operations.

    Atom operands only; ordering is deterministic (by length, then by the
    order of ``atoms`` with ``*`` before ``*^-1``).
    """
    terms = [QuandleTerm(x) for x in atoms]
    frontier = list(terms)
    for _ in range(max_ops):
        frontier = [t.star(y, s) for t in frontier for y in atoms for s in (1, -1)]
        terms.extend(frontier)
    return terms
