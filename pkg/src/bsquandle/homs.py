"""Finite quotients of BS(m, n) in symmetric groups and quandle homomorphism search."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .bs import _as_presentation, equal
from .quandles import FiniteQuandle, inverse_table, perm_inv, perm_mul
from .terms import Operand, QuandleTerm
from .words import Syllable

Perm = tuple[int, ...]

DEFAULT_MAX_DEGREE = 7


class PreconditionError(ValueError):
    pass


def perm_identity(d: int) -> Perm:
    return tuple(range(d))


def perm_pow(p: Perm, k: int) -> Perm:
    base = p if k >= 0 else perm_inv(p)
    result = perm_identity(len(p))
    for _ in range(abs(k)):
        result = perm_mul(result, base)
    return result


def cycle_type(p: Perm) -> tuple[int, ...]:
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))


def format_perm(p: Perm) -> str:
    """One-line notation, 1-based."""
    return " ".join(str(v + 1) for v in p)


def parse_perm(text: str) -> Perm:
    images = tuple(int(v) - 1 for v in text.split())
    if sorted(images) != list(range(len(images))):
        raise ValueError(f"not a permutation in one-line notation: {text!r}")
    return images


def format_cycles(p: Perm) -> str:
    seen = set()
    cycles = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cycle, i = [], start
        while i not in seen:
            seen.add(i)
            cycle.append(str(i + 1))
            i = p[i]
        cycles.append("(" + " ".join(cycle) + ")")
    return "".join(cycles) or "()"


@dataclass(frozen=True)
class PermutationPair:
    """Images of ``a`` and ``b`` in Sym(d) satisfying ``beta^-1 alpha^m beta = alpha^n``."""

    m: int
    n: int
    alpha: Perm
    beta: Perm

    def __post_init__(self):
        if len(self.alpha) != len(self.beta):
            raise ValueError("alpha and beta must have the same degree")
        if not relation_holds(self.alpha, self.beta, self.m, self.n):
            raise ValueError("pair does not satisfy the BS relation")

    @property
    def degree(self) -> int:
        return len(self.alpha)

    def render(self) -> str:
        return (
            f"degree={self.degree}\n"
            f"alpha={format_perm(self.alpha)}\n"
            f"beta={format_perm(self.beta)}"
        )


def relation_holds(alpha: Perm, beta: Perm, m: int, n: int) -> bool:
    lhs = perm_mul(perm_mul(perm_inv(beta), perm_pow(alpha, m)), beta)
    return lhs == perm_pow(alpha, n)


def eval_word_perm(w: Sequence[Syllable], alpha: Perm, beta: Perm) -> Perm:
    images = {"a": alpha, "b": beta}
    result = perm_identity(len(alpha))
    for gen, e in w:
        result = perm_mul(result, perm_pow(images[gen], e))
    return result


def _conjugators(x: Perm, y: Perm) -> Iterator[Perm]:
    """All ``beta`` with ``beta^-1 x beta = y``, lexicographically.

    Equivalent pointwise condition: ``beta[x[j]] == y[beta[j]]``.
    """
    d = len(x)
    beta = [-1] * d
    used = [False] * d

    def consistent(j: int) -> bool:
        # every constraint touching j whose endpoints are both assigned
        for i in (j, perm_inv_cache[j]):
            xi = x[i]
            if beta[i] >= 0 and beta[xi] >= 0 and beta[xi] != y[beta[i]]:
                return False
        return True

    perm_inv_cache = perm_inv(x)

    def extend(j: int) -> Iterator[Perm]:
        if j == d:
            yield tuple(beta)
            return
        for v in range(d):
            if used[v]:
                continue
            beta[j], used[v] = v, True
            if consistent(j):
                yield from extend(j + 1)
            beta[j], used[v] = -1, False

    yield from extend(0)


def iter_perm_quotients(p, d: int) -> Iterator[PermutationPair]:
    """Pairs ``(alpha, beta)`` in Sym(d) satisfying the BS(m, n) relation,
    in lexicographic order of their one-line notations."""
    p = _as_presentation(p)
    if d < 1:
        raise ValueError("degree must be >= 1")
    for alpha in itertools.permutations(range(d)):
        x, y = perm_pow(alpha, p.m), perm_pow(alpha, p.n)
        if cycle_type(x) != cycle_type(y):
            continue
        for beta in _conjugators(x, y):
            yield PermutationPair(p.m, p.n, alpha, beta)


def find_perm_quotients(p, d: int, limit: int | None = None) -> list[PermutationPair]:
    """At most ``limit`` quotient pairs of degree ``d`` (all of them if ``None``)."""
    return list(itertools.islice(iter_perm_quotients(p, d), limit))


def separate(u: Sequence[Syllable], v: Sequence[Syllable], p, dmax: int = DEFAULT_MAX_DEGREE) -> PermutationPair | None:
    """First quotient (by degree, then enumeration order) separating ``u`` from ``v``.

    A returned pair gives a homomorphism BS(m, n) -> Sym(d), hence a quandle
    homomorphism Conj(BS(m, n)) -> Conj(Sym(d)), with distinct images of
    ``u`` and ``v``.
    """
    p = _as_presentation(p)
    if equal(u, v, p):
        raise PreconditionError("the words are equal in the group; nothing to separate")
    for d in range(1, dmax + 1):
        for pair in iter_perm_quotients(p, d):
            if eval_word_perm(u, pair.alpha, pair.beta) != eval_word_perm(v, pair.alpha, pair.beta):
                return pair
    return None


# --- quandle homomorphisms ----------------------------------------------------


def eval_term_in(t: Operand, assignment: Mapping[str, int], q: FiniteQuandle, inv=None) -> int:
    """Value of a term in a finite quandle under an atom assignment."""
    if inv is None:
        inv = inverse_table(q)
    if isinstance(t, str):
        return assignment[t]
    value = eval_term_in(t.head, assignment, q, inv)
    for operand, sign in t.tail:
        rhs = eval_term_in(operand, assignment, q, inv)
        value = q.table[value][rhs] if sign == 1 else inv[value][rhs]
    return value


def quandle_homs(
    generators: Sequence[str],
    relations: Sequence[tuple[QuandleTerm, QuandleTerm]],
    target: FiniteQuandle,
    limit: int | None = None,
) -> list[dict[str, int]]:
    """Assignments of target elements to ``generators`` respecting ``relations``.

    Backtracking in generator order; a relation is checked as soon as all
    of its atoms are assigned.  Soundness for separation relies on the
    caller certifying each relation in the source.
    """
    if limit is not None and limit <= 0:
        return []
    inv = inverse_table(target)
    position = {g: i for i, g in enumerate(generators)}
    ready: list[list[tuple[QuandleTerm, QuandleTerm]]] = [[] for _ in generators]
    for lhs, rhs in relations:
        atoms = _atoms(lhs) | _atoms(rhs)
        missing = atoms - position.keys()
        if missing:
            raise ValueError(f"relation uses unknown generators {sorted(missing)}")
        ready[max(position[a] for a in atoms)].append((lhs, rhs))

    results: list[dict[str, int]] = []
    assignment: dict[str, int] = {}

    def extend(i: int) -> bool:
        if i == len(generators):
            results.append(dict(assignment))
            return limit is not None and len(results) >= limit
        for value in range(target.size):
            assignment[generators[i]] = value
            if all(
                eval_term_in(lhs, assignment, target, inv) == eval_term_in(rhs, assignment, target, inv)
                for lhs, rhs in ready[i]
            ):
                if extend(i + 1):
                    return True
        del assignment[generators[i]]
        return False

    extend(0)
    return results


def _atoms(t: Operand) -> set[str]:
    return {t} if isinstance(t, str) else t.atoms()
