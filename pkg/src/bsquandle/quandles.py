"""Finite quandles as operation tables, plus quandle constructions over groups.

Elements of a finite quandle are the indices ``0..n-1`` and
``table[x][y] = x * y``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO

from .bs import ResourceLimitError, _as_presentation, equal, normal_form, pinch_reduce
from .words import Syllable, Word, conjugate, conjugate_inv, free_reduce

Table = tuple[tuple[int, ...], ...]


class TableFormatError(ValueError):
    pass


def _as_table(rows: Iterable[Iterable[int]]) -> Table:
    table = tuple(tuple(int(v) for v in row) for row in rows)
    n = len(table)
    if n == 0:
        raise TableFormatError("table must be non-empty")
    for x, row in enumerate(table):
        if len(row) != n:
            raise TableFormatError(f"row {x} has {len(row)} entries, expected {n}")
        for y, v in enumerate(row):
            if not 0 <= v < n:
                raise TableFormatError(f"entry ({x}, {y}) = {v} out of range [0, {n})")
    return table


@dataclass(frozen=True)
class FiniteQuandle:
    """Operation table of a (candidate) quandle; construction checks shape only."""

    table: Table

    def __post_init__(self):
        object.__setattr__(self, "table", _as_table(self.table))

    @property
    def size(self) -> int:
        return len(self.table)

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inverse(self) -> Table:
        return inverse_table(self)


@dataclass
class AxiomReport:
    size: int
    failures: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def failed_axioms(self) -> set[str]:
        return {axiom for axiom, _ in self.failures}

    def render(self) -> str:
        lines = [f"size={self.size}", f"result={'pass' if self.passed else 'fail'}"]
        for axiom, witness in self.failures:
            lines.append(f"failure axiom={axiom} witness={','.join(map(str, witness))}")
        return "\n".join(lines)


def check_axioms(q: FiniteQuandle | Sequence[Sequence[int]]) -> AxiomReport:
    """Exhaustively check idempotence (i), right-bijectivity (ii) and
    right self-distributivity (iii); every violation is reported.

    Witnesses: (i) ``(x,)``; (ii) ``(x1, x2, y)`` with ``x1*y == x2*y``;
    (iii) ``(x, y, z)``.
    """
    table = q.table if isinstance(q, FiniteQuandle) else _as_table(q)
    n = len(table)
    report = AxiomReport(n)
    for x in range(n):
        if table[x][x] != x:
            report.failures.append(("i", (x,)))
    for y in range(n):
        seen: dict[int, int] = {}
        for x in range(n):
            v = table[x][y]
            if v in seen:
                report.failures.append(("ii", (seen[v], x, y)))
            else:
                seen[v] = x
    for x in range(n):
        row = table[x]
        for y in range(n):
            xy = row[y]
            for z in range(n):
                if table[xy][z] != table[row[z]][table[y][z]]:
                    report.failures.append(("iii", (x, y, z)))
    return report


def inverse_table(q: FiniteQuandle) -> Table:
    """``inv[x][y]`` is the unique ``z`` with ``z * y = x``."""
    n = q.size
    inv = [[0] * n for _ in range(n)]
    for y in range(n):
        hit = [False] * n
        for z in range(n):
            x = q.table[z][y]
            if hit[x]:
                raise ValueError(f"column {y} is not a bijection; axiom (ii) fails")
            hit[x] = True
            inv[x][y] = z
    return tuple(tuple(row) for row in inv)


def trivial_quandle(k: int) -> FiniteQuandle:
    if k < 1:
        raise ValueError("trivial quandle needs k >= 1")
    return FiniteQuandle(tuple(tuple([x] * k) for x in range(k)))


@dataclass(frozen=True)
class FiniteGroupTable:
    """Multiplication table of a finite group; the group laws are checked."""

    product: Table
    identity: int
    labels: tuple = ()

    def __post_init__(self):
        table = _as_table(self.product)
        object.__setattr__(self, "product", table)
        n = len(table)
        e = self.identity
        if not 0 <= e < n:
            raise TableFormatError(f"identity index {e} out of range")
        for x in range(n):
            if table[e][x] != x or table[x][e] != x:
                raise TableFormatError(f"{e} is not a two-sided identity (fails at {x})")
        for x, y, z in itertools.product(range(n), repeat=3):
            if table[table[x][y]][z] != table[x][table[y][z]]:
                raise TableFormatError(f"associativity fails at ({x}, {y}, {z})")
        inverse = []
        for x in range(n):
            row = table[x]
            try:
                inverse.append(row.index(e))
            except ValueError:
                raise TableFormatError(f"element {x} has no inverse") from None
        object.__setattr__(self, "inverse", tuple(inverse))

    @property
    def size(self) -> int:
        return len(self.product)

    def mul(self, x: int, y: int) -> int:
        return self.product[x][y]


def cyclic_group(k: int) -> FiniteGroupTable:
    return FiniteGroupTable(tuple(tuple((x + y) % k for y in range(k)) for x in range(k)), 0, tuple(range(k)))


def perm_mul(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """``p`` then ``q`` (right actions): ``i^(pq) = (i^p)^q``."""
    return tuple(q[i] for i in p)


def perm_inv(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def symmetric_group(d: int) -> FiniteGroupTable:
    """Sym(d) with elements in lexicographic order of one-line notation."""
    perms = list(itertools.permutations(range(d)))
    index = {p: i for i, p in enumerate(perms)}
    product = tuple(tuple(index[perm_mul(p, q)] for q in perms) for p in perms)
    return FiniteGroupTable(product, 0, tuple(perms))


def conj_quandle(g: FiniteGroupTable) -> FiniteQuandle:
    """``x * y = y^-1 x y``."""
    mul, inv = g.mul, g.inverse
    return FiniteQuandle(
        tuple(tuple(mul(inv[y], mul(x, y)) for y in range(g.size)) for x in range(g.size))
    )


def dehn_quandle_finite(g: FiniteGroupTable, generators: Iterable[int]) -> tuple[FiniteQuandle, list[int]]:
    """Dehn quandle on all conjugates of ``generators``.

    Returns the quandle (re-indexed densely) and the carrier: ``carrier[i]``
    is the group element standing for quandle element ``i``.
    """
    seeds = set(generators)
    if not seeds:
        raise ValueError("generator set must be non-empty")
    mul, inv = g.mul, g.inverse
    carrier = sorted({mul(inv[h], mul(x, h)) for x in seeds for h in range(g.size)})
    index = {x: i for i, x in enumerate(carrier)}
    table = tuple(tuple(index[mul(inv[y], mul(x, y))] for y in carrier) for x in carrier)
    return FiniteQuandle(table), carrier


def subquandle_closure(q: FiniteQuandle, seeds: Iterable[int]) -> set[int]:
    """Smallest subset containing ``seeds`` and closed under ``*`` and ``*^-1``."""
    closed = set(seeds)
    if not closed:
        raise ValueError("seed set must be non-empty")
    inv = inverse_table(q)
    frontier = set(closed)
    while frontier:
        new = set()
        for x in closed:
            for y in closed:
                if x in frontier or y in frontier:
                    new.add(q.table[x][y])
                    new.add(inv[x][y])
        frontier = new - closed
        closed |= frontier
    return closed


def restrict(q: FiniteQuandle, subset: Iterable[int]) -> tuple[FiniteQuandle, list[int]]:
    """Restriction of ``q`` to a closed subset, re-indexed densely."""
    carrier = sorted(subset)
    index = {x: i for i, x in enumerate(carrier)}
    try:
        table = tuple(tuple(index[q.table[x][y]] for y in carrier) for x in carrier)
    except KeyError:
        raise ValueError("subset is not closed under the quandle operation") from None
    return FiniteQuandle(table), carrier


# --- file formats -----------------------------------------------------------


def _read_rows(lines: list[str], what: str) -> tuple[int, list[list[int]], list[str]]:
    lines = [ln for ln in lines if ln.strip()]
    if not lines:
        raise TableFormatError(f"empty {what} file")
    try:
        n = int(lines[0])
        rows = [[int(v) for v in ln.split()] for ln in lines[1 : n + 1]]
    except ValueError as exc:
        raise TableFormatError(f"non-integer entry in {what} file: {exc}") from None
    if n < 1 or len(rows) != n:
        raise TableFormatError(f"{what} file declares {n} rows but has {len(rows)}")
    return n, rows, lines[n + 1 :]


def read_quandle(stream: TextIO) -> FiniteQuandle:
    _, rows, rest = _read_rows(stream.read().splitlines(), "quandle")
    if rest:
        raise TableFormatError("trailing content after quandle table")
    return FiniteQuandle(rows)


def format_table(table: Table) -> str:
    return "\n".join([str(len(table))] + [" ".join(map(str, row)) for row in table]) + "\n"


def write_quandle(q: FiniteQuandle) -> str:
    return format_table(q.table)


def read_group(stream: TextIO) -> FiniteGroupTable:
    _, rows, rest = _read_rows(stream.read().splitlines(), "group")
    if len(rest) != 1:
        raise TableFormatError("group file needs exactly one trailing identity line")
    try:
        identity = int(rest[0])
    except ValueError:
        raise TableFormatError(f"bad identity line {rest[0]!r}") from None
    return FiniteGroupTable(rows, identity)


def write_group(g: FiniteGroupTable) -> str:
    return format_table(g.product) + f"{g.identity}\n"


# --- free quandle -------------------------------------------------------------


@dataclass(frozen=True)
class FreeQuandleElement:
    """The conjugate ``conjugator^-1 · atom · conjugator`` in the free group."""

    atom: str
    conjugator: Word


def free_quandle_canonical(atom: str, conjugator: Sequence[Syllable]) -> FreeQuandleElement:
    reduced = free_reduce(conjugator)
    if reduced and reduced[0][0] == atom:
        reduced = reduced[1:]
    return FreeQuandleElement(atom, reduced)


# --- closures inside Conj(BS(m, n)) --------------------------------------------

DEFAULT_CLOSURE_DEPTH = 4
DEFAULT_CLOSURE_LIMIT = 200_000


def bounded_closure_bs(
    p,
    generators: Sequence[Word],
    depth: int = DEFAULT_CLOSURE_DEPTH,
    *,
    max_elements: int = DEFAULT_CLOSURE_LIMIT,
) -> list[Word]:
    """Elements reachable from ``generators`` by at most ``depth`` operations
    ``x * g`` / ``x *^-1 g`` with ``g`` a generator.

    Each element is stored pinch-reduced.  Candidates are bucketed by Britton
    normal form and every duplicate is confirmed with :func:`equal`.
    """
    p = _as_presentation(p)
    if not generators:
        raise ValueError("generator list must be non-empty")
    if depth < 0:
        raise ValueError("depth must be non-negative")
    found: list[Word] = []
    buckets: dict[Word, list[Word]] = {}

    def admit(w: Word) -> bool:
        w = pinch_reduce(w, p)
        bucket = buckets.setdefault(normal_form(w, p), [])
        if any(equal(w, other, p) for other in bucket):
            return False
        if len(found) >= max_elements:
            raise ResourceLimitError(f"closure exceeds {max_elements} elements")
        bucket.append(w)
        found.append(w)
        return True

    level = [g for g in map(tuple, generators) if admit(g)]
    gens = [pinch_reduce(g, p) for g in generators]
    for _ in range(depth):
        nxt = []
        for x in level:
            for g in gens:
                for candidate in (conjugate(x, g), conjugate_inv(x, g)):
                    if admit(candidate):
                        nxt.append(found[-1])
        level = nxt
    return found


def closure_contains(p, elements: Sequence[Word], target: Word) -> bool:
    return any(equal(w, target, p) for w in elements)


__all__ = [
    "AxiomReport",
    "FiniteGroupTable",
    "FiniteQuandle",
    "FreeQuandleElement",
    "TableFormatError",
    "bounded_closure_bs",
    "check_axioms",
    "closure_contains",
    "conj_quandle",
    "cyclic_group",
    "dehn_quandle_finite",
    "free_quandle_canonical",
    "inverse_table",
    "perm_inv",
    "perm_mul",
    "read_group",
    "read_quandle",
    "restrict",
    "subquandle_closure",
    "symmetric_group",
    "trivial_quandle",
    "write_group",
    "write_quandle",
]
