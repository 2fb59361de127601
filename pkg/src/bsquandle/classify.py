"""Residual finiteness and Hopf property for BS(m, n) and Conj(BS(m, n))."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd


def _nonzero(*values: int) -> None:
    for v in values:
        if v == 0:
            raise ValueError("m and n must be nonzero")


def prime_support(k: int) -> frozenset[int]:
    """Primes dividing ``k`` (trial division); empty for ``±1``."""
    _nonzero(k)
    k = abs(k)
    primes = set()
    d = 2
    while d * d <= k:
        while k % d == 0:
            primes.add(d)
            k //= d
        d += 1
    if k > 1:
        primes.add(k)
    return frozenset(primes)


def bs_residually_finite(m: int, n: int) -> bool:
    _nonzero(m, n)
    return abs(m) == 1 or abs(n) == 1 or abs(m) == abs(n)


def bs_hopfian(m: int, n: int) -> bool:
    _nonzero(m, n)
    return bs_residually_finite(m, n) or prime_support(m) == prime_support(n)


def conj_bs_residually_finite(m: int, n: int) -> bool:
    """Same predicate as :func:`bs_residually_finite`, for the quandle."""
    _nonzero(m, n)
    return abs(m) == 1 or abs(n) == 1 or abs(m) == abs(n)


class HopfStatus(enum.Enum):
    NON_HOPFIAN = "NonHopfian"
    OPEN_Q1 = "Open(Q1)"
    OPEN_Q2 = "Open(Q2)"

    def __str__(self) -> str:
        return self.value

    @property
    def is_open(self) -> bool:
        return self is not HopfStatus.NON_HOPFIAN


def conj_bs_hopf_status(m: int, n: int) -> HopfStatus:
    """NonHopfian exactly when the group is non-Hopfian; otherwise open.

    Open(Q1) covers the residually finite cases, Open(Q2) the remaining
    cases with equal prime supports.  No positive verdict is ever given.
    """
    if not bs_hopfian(m, n):
        return HopfStatus.NON_HOPFIAN
    return HopfStatus.OPEN_Q1 if bs_residually_finite(m, n) else HopfStatus.OPEN_Q2


class Route(enum.Enum):
    RF = "RF"
    CASE1 = "Case1"
    CASE2 = "Case2"
    CASE3 = "Case3"

    def __str__(self) -> str:
        return self.value


def route_case(m: int, n: int) -> tuple[Route, tuple[int, int] | None]:
    """Which branch of the residual-finiteness proof handles ``(m, n)``.

    Case3 comes with the reduced pair ``(m/k, n/k)``, ``k = gcd(|m|, |n|)``,
    which always routes to Case1.
    """
    _nonzero(m, n)
    if bs_residually_finite(m, n):
        return Route.RF, None
    if prime_support(m) != prime_support(n):
        return Route.CASE1, None
    if abs(n) % abs(m) == 0 or abs(m) % abs(n) == 0:
        return Route.CASE2, None
    k = gcd(abs(m), abs(n))
    return Route.CASE3, (m // k, n // k)


@dataclass(frozen=True)
class Classification:
    m: int
    n: int
    group_rf: bool
    group_hopf: bool
    conj_rf: bool
    conj_hopf: HopfStatus
    case_route: Route
    case_data: tuple[int, int] | None
    # Conj(BS(m, n)) is never finitely generated
    conj_finitely_generated: bool = False

    def render(self) -> str:
        flag = lambda v: "true" if v else "false"  # noqa: E731
        lines = [
            f"m={self.m}",
            f"n={self.n}",
            f"prime_support_m={_fmt_primes(prime_support(self.m))}",
            f"prime_support_n={_fmt_primes(prime_support(self.n))}",
            f"group_rf={flag(self.group_rf)}",
            f"group_hopf={flag(self.group_hopf)}",
            f"conj_rf={flag(self.conj_rf)}",
            f"conj_hopf={self.conj_hopf}",
            f"conj_finitely_generated={flag(self.conj_finitely_generated)}",
            f"route={self.case_route}",
        ]
        if self.case_data is not None:
            lines.append(f"reduced=({self.case_data[0]},{self.case_data[1]})")
        return "\n".join(lines)


def _fmt_primes(primes) -> str:
    return "{" + ",".join(map(str, sorted(primes))) + "}"


def classify(m: int, n: int) -> Classification:
    route, data = route_case(m, n)
    return Classification(
        m=m,
        n=n,
        group_rf=bs_residually_finite(m, n),
        group_hopf=bs_hopfian(m, n),
        conj_rf=conj_bs_residually_finite(m, n),
        conj_hopf=conj_bs_hopf_status(m, n),
        case_route=route,
        case_data=data,
    )
