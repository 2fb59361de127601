"""Machine checks of explicit non-Hopfian endomorphism witnesses.

For the Dehn quandle D of BS(m, n) generated by the atoms ``a``, ``b`` and
``a^m``, an endomorphism is given by images of the three atoms.  A report
records

* surjectivity evidence: the generators are recovered from the images by a
  bounded closure;
* non-injectivity: two terms with equal images whose preimages differ
  (Britton's Lemma decides both);
* consistency: for pairs of sampled terms that are equal in D, whether the
  images are equal too.  A failure here means the map on generators does
  not extend to a well-defined map on D.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping

from .bs import BsPresentation, _as_presentation, equal, normal_form, pinch_reduce
from .classify import prime_support
from .homs import PreconditionError
from .quandles import bounded_closure_bs, closure_contains
from .terms import QuandleTerm, expand_term, left_chains, parse_term
from .words import Word, render_word

CONSISTENCY_DEPTH = 2


@dataclass
class ConsistencyCheck:
    lhs: QuandleTerm
    rhs: QuandleTerm
    source_equal: bool
    images_equal: bool

    @property
    def ok(self) -> bool:
        return not self.source_equal or self.images_equal


@dataclass
class WitnessReport:
    case_id: str
    presentation: BsPresentation
    generators: dict[str, Word]
    images: dict[str, Word]
    surjectivity: list[tuple[str, str, bool]]
    noninjective_terms: tuple[QuandleTerm, QuandleTerm]
    image_words: tuple[Word, Word]
    images_equal: bool
    preimage_words: tuple[Word, Word]
    preimages_distinct: bool
    extra: list[tuple[str, str]] = field(default_factory=list)
    consistency: list[ConsistencyCheck] = field(default_factory=list)

    @property
    def surjective(self) -> bool:
        return all(ok for _, _, ok in self.surjectivity)

    @property
    def verified(self) -> bool:
        """Images coincide, preimages differ, and the generators are recovered."""
        return self.images_equal and self.preimages_distinct and self.surjective

    @property
    def consistency_failures(self) -> list[ConsistencyCheck]:
        return [c for c in self.consistency if not c.ok]

    def render(self) -> str:
        p = self.presentation
        s, t = self.noninjective_terms
        lines = [
            f"case={self.case_id}",
            f"m={p.m}",
            f"n={p.n}",
        ]
        for name, w in self.generators.items():
            lines.append(f"map {name} -> {render_word(self.images[name])}")
        for target, how, ok in self.surjectivity:
            lines.append(f"surjectivity {target} via {how} {'ok' if ok else 'missing'}")
        lines += [
            f"noninjective_lhs={s}",
            f"noninjective_rhs={t}",
            f"image_lhs={render_word(self.image_words[0])}",
            f"image_rhs={render_word(self.image_words[1])}",
            f"images_equal={_flag(self.images_equal)}",
            f"preimage_lhs={render_word(self.preimage_words[0])}",
            f"preimage_rhs={render_word(self.preimage_words[1])}",
            f"preimages_distinct={_flag(self.preimages_distinct)}",
        ]
        lines += [f"{k}={v}" for k, v in self.extra]
        failures = self.consistency_failures
        lines += [
            f"consistency_checked={len(self.consistency)}",
            f"consistency_failures={len(failures)}",
        ]
        if failures:
            first = failures[0]
            lines.append(f"consistency_counterexample={first.lhs} == {first.rhs}")
        lines.append(f"witness_verified={_flag(self.verified)}")
        lines.append(f"well_defined_on_sample={_flag(not failures)}")
        return "\n".join(lines)


def _flag(value: bool) -> str:
    return "true" if value else "false"


def consistency_checks(
    p: BsPresentation,
    source: Mapping[str, Word],
    images: Mapping[str, Word],
    depth: int = CONSISTENCY_DEPTH,
) -> list[ConsistencyCheck]:
    """Compare images of all pairs of sampled terms that are equal in the source.

    Terms are the left-associated chains over the atoms with at most
    ``depth`` operations.  Source values are bucketed by Britton normal form;
    each bucket member is compared with the bucket's first term, and the
    source equality is re-confirmed with :func:`equal`.
    """
    buckets: dict[Word, list[tuple[QuandleTerm, Word]]] = defaultdict(list)
    for term in left_chains(list(source), depth):
        value = pinch_reduce(expand_term(term, source), p)
        buckets[normal_form(value, p)].append((term, value))
    checks = []
    for members in buckets.values():
        first_term, first_value = members[0]
        first_image = expand_term(first_term, images)
        for term, value in members[1:]:
            checks.append(
                ConsistencyCheck(
                    first_term,
                    term,
                    equal(first_value, value, p),
                    equal(first_image, expand_term(term, images), p),
                )
            )
    return checks


def _noninjectivity(p, source, images, lhs: QuandleTerm, rhs: QuandleTerm):
    image_words = (
        pinch_reduce(expand_term(lhs, images), p),
        pinch_reduce(expand_term(rhs, images), p),
    )
    preimage_words = (expand_term(lhs, source), expand_term(rhs, source))
    return (
        image_words,
        equal(*image_words, p),
        preimage_words,
        not equal(*preimage_words, p),
    )


def _recover(p, images: Mapping[str, Word], source: Mapping[str, Word], depth: int):
    """Closure of the image words; report which source generators it contains."""
    elements = bounded_closure_bs(p, list(images.values()), depth)
    return [
        (name, f"depth-{depth} closure", closure_contains(p, elements, w))
        for name, w in source.items()
    ]


def _require_nonunit(p: BsPresentation, case: str):
    if abs(p.m) == 1 or abs(p.n) == 1:
        raise PreconditionError(f"{case} needs |m| != 1 != |n|, got {p}")


def verify_case1_witness(p, *, consistency_depth: int = CONSISTENCY_DEPTH) -> WitnessReport:
    """The swap ``a -> a^m, b -> b, a^m -> a`` when the prime supports differ.

    Non-injectivity: ``a * b * a *^-1 b`` and ``a`` both map to ``a^m`` while
    ``b a^-1 b^-1 a b a b^-1 != a``.
    """
    p = _as_presentation(p)
    _require_nonunit(p, "Case 1")
    if prime_support(p.m) == prime_support(p.n):
        raise PreconditionError(f"Case 1 needs different prime supports of m and n, got {p}")
    source = {"a": (("a", 1),), "b": (("b", 1),), "a^m": (("a", p.m),)}
    images = {"a": (("a", p.m),), "b": (("b", 1),), "a^m": (("a", 1),)}
    lhs, rhs = parse_term("a * b * a *^-1 b"), parse_term("a")
    image_words, images_equal, preimage_words, distinct = _noninjectivity(p, source, images, lhs, rhs)
    return WitnessReport(
        case_id="Case1",
        presentation=p,
        generators=source,
        images=images,
        surjectivity=_recover(p, images, source, 0),
        noninjective_terms=(lhs, rhs),
        image_words=image_words,
        images_equal=images_equal,
        preimage_words=preimage_words,
        preimages_distinct=distinct,
        consistency=consistency_checks(p, source, images, consistency_depth),
    )


def verify_case2_witness(p, *, consistency_depth: int = CONSISTENCY_DEPTH) -> WitnessReport:
    """``a -> a, b -> b, a^m -> a^m * b`` when ``n = l m`` with ``|l| >= 2``.

    When instead ``m = l n`` the mirrored witness is used: the third atom is
    ``a^n`` with image ``a^n *^-1 b`` and the operations in the test terms
    are inverted (BS(m, n) and BS(n, m) are isomorphic via ``b -> b^-1``).
    """
    p = _as_presentation(p)
    _require_nonunit(p, "Case 2")
    if prime_support(p.m) != prime_support(p.n):
        raise PreconditionError(f"Case 2 needs equal prime supports of m and n, got {p}")
    if p.n % p.m == 0 and abs(p.n) != abs(p.m):
        power, op, inv_op, third = p.m, "*", "*^-1", "a^m"
    elif p.m % p.n == 0 and abs(p.n) != abs(p.m):
        power, op, inv_op, third = p.n, "*^-1", "*", "a^n"
    else:
        raise PreconditionError(f"Case 2 needs m | n or n | m with |m| != |n|, got {p}")

    source = {"a": (("a", 1),), "b": (("b", 1),), third: (("a", power),)}
    image_term = parse_term(f"{third} {op} b")
    images = {"a": (("a", 1),), "b": (("b", 1),), third: expand_term(image_term, source)}
    lhs = parse_term(f"{third} {inv_op} b * a")
    rhs = parse_term(f"{third} {inv_op} b")
    image_words, images_equal, preimage_words, distinct = _noninjectivity(p, source, images, lhs, rhs)

    # the commonly quoted form of the inequality, with b a^-m b^-1 on the right
    printed_lhs = (("a", -1), ("b", 1), ("a", p.m), ("b", -1), ("a", 1))
    printed_rhs = (("b", 1), ("a", -p.m), ("b", -1))
    extra = [("printed_inequality", "a^-1 b a^m b^-1 a != b a^-m b^-1")]
    if third == "a^m":
        extra.append(("printed_inequality_holds", _flag(not equal(printed_lhs, printed_rhs, p))))
    else:
        extra.append(("printed_inequality_holds", "n/a (mirrored witness)"))

    return WitnessReport(
        case_id="Case2",
        presentation=p,
        generators=source,
        images=images,
        surjectivity=[(name, f"{how} of images", ok) for name, how, ok in _recover(p, images, source, 1)],
        noninjective_terms=(lhs, rhs),
        image_words=image_words,
        images_equal=images_equal,
        preimage_words=preimage_words,
        preimages_distinct=distinct,
        extra=extra,
        consistency=consistency_checks(p, source, images, consistency_depth),
    )


# --- Conj(Z) -------------------------------------------------------------------


@dataclass
class ConjZReport:
    radius: int
    homomorphism_pairs: int
    homomorphism_ok: bool
    collision: tuple[int, int] | None
    image_range: tuple[int, int]
    surjective_on_inner_window: bool
    identity_preimages: tuple[int, ...] = ()

    def render(self) -> str:
        lines = [
            "case=ConjZ",
            f"N={self.radius}",
            f"homomorphism_pairs_checked={self.homomorphism_pairs}",
            f"homomorphism={_flag(self.homomorphism_ok)}",
        ]
        if self.collision:
            x, y = self.collision
            lines.append(f"noninjective_at={x},{y} -> {shift_toward_zero(x)}")
        else:
            lines.append("noninjective_at=none")
        lines.append(f"preimages_of_0={','.join(map(str, self.identity_preimages))}")
        lines += [
            f"image_window={self.image_range[0]}..{self.image_range[1]}",
            f"inner_window_surjective={_flag(self.surjective_on_inner_window)}",
            f"witness_verified={_flag(self.verified)}",
        ]
        return "\n".join(lines)

    @property
    def verified(self) -> bool:
        return self.homomorphism_ok and self.collision is not None and self.surjective_on_inner_window


def shift_toward_zero(e: int) -> int:
    """``a^e -> a^(e-1)`` for ``e > 0``, ``a^e -> a^(e+1)`` for ``e < 0``, ``1 -> 1``."""
    return e - 1 if e > 0 else e + 1 if e < 0 else 0


def conj_z_demo(radius: int) -> ConjZReport:
    """Check the shift map on the exponent window ``[-N, N]`` of Conj(Z).

    Elements are exponents of the generator; ``x * y = -y + x + y`` is
    computed in the group, not assumed trivial.
    """
    if radius < 2:
        raise ValueError("window radius must be >= 2")
    window = range(-radius, radius + 1)
    op = lambda x, y: -y + x + y  # noqa: E731
    homomorphism_ok = all(
        shift_toward_zero(op(x, y)) == op(shift_toward_zero(x), shift_toward_zero(y))
        for x in window
        for y in window
    )
    preimages: dict[int, list[int]] = defaultdict(list)
    for x in window:
        preimages[shift_toward_zero(x)].append(x)
    collision = (0, 1) if shift_toward_zero(0) == shift_toward_zero(1) else None
    inner = range(-radius + 1, radius)
    return ConjZReport(
        radius=radius,
        homomorphism_pairs=len(window) ** 2,
        homomorphism_ok=homomorphism_ok,
        collision=collision,
        image_range=(min(preimages), max(preimages)),
        surjective_on_inner_window=all(e in preimages for e in inner),
        identity_preimages=tuple(preimages[0]),
    )
