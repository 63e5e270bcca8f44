"""Divisor sets of supernatural numbers and their maximal subsets.

The divisor set T of a supernatural number S is exactly the set of degrees
of finite subfields of an absolutely algebraic field: it contains 1, is
closed under divisors, and is closed under lcm.  Sets with these three
properties are the field-generating sets (FG-sets) of the subfield
correspondence, and every operation here is phrased on the compact
exceptions-plus-default encoding, so nothing ever enumerates primes.

The order of t in T is the largest n with t**n in T.  Primes of finite
nonzero order (the set T_f) are in bijection with the maximal subrings of
the corresponding field; primes of infinite order (T_inf) survive into
every maximal member and are the obstruction to embedding arbitrary
subrings into maximal ones.
"""

from __future__ import annotations

from dataclasses import dataclass

import sympy

from .errors import BoundExceededError, UniverseMismatchError
from .supernat import (
    FACTOR_LIMIT,
    INF,
    Exponent,
    SupernaturalNumber,
    divides,
)

__all__ = [
    "ExtendedCount",
    "ALEPH_NULL",
    "PrimeFamily",
    "PartsReport",
    "FGSet",
    "AxiomCheck",
    "MaximalFGSubsets",
    "member",
    "order",
    "parts",
    "verify_axioms",
    "decrement_at",
    "maximal_fg_subsets",
    "is_maximal_fg_subset",
]


@dataclass(frozen=True)
class ExtendedCount:
    """A cardinality that is either a natural number or countably infinite."""

    value: int | None  # None encodes countably infinite

    @classmethod
    def finite(cls, n: int) -> "ExtendedCount":
        if n < 0:
            raise ValueError("counts are nonnegative")
        return cls(n)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        return str(self.value) if self.is_finite else "countably infinite"


ALEPH_NULL = ExtendedCount(None)


@dataclass(frozen=True)
class PrimeFamily:
    """A set of primes described by a default membership plus finitely many flips.

    ``generic_member`` says whether a prime outside ``flips`` belongs; the
    primes in ``flips`` deviate from that default.  This is enough to carry
    the finite and infinite parts of any representable divisor set.
    """

    generic_member: bool
    flips: frozenset[int]
    universe: frozenset[int] | None

    def contains(self, q: int) -> bool:
        if self.universe is not None and q not in self.universe:
            return False
        return self.generic_member != (q in self.flips)

    @property
    def count(self) -> ExtendedCount:
        if self.universe is not None:
            n = sum(1 for q in self.universe if self.contains(q))
            return ExtendedCount.finite(n)
        if self.generic_member:
            return ALEPH_NULL
        return ExtendedCount.finite(len(self.flips))

    def explicit(self) -> tuple[int, ...] | None:
        """The members as a sorted tuple, or None when the family is infinite."""
        if self.universe is not None:
            return tuple(sorted(q for q in self.universe if self.contains(q)))
        if self.generic_member:
            return None
        return tuple(sorted(self.flips))

    def describe(self) -> str:
        if not self.generic_member or self.universe is not None:
            return "{" + ",".join(map(str, self.explicit() or ())) + "}"
        if self.flips:
            return "all primes except {" + ",".join(map(str, sorted(self.flips))) + "}"
        return "all primes"


@dataclass(frozen=True)
class PartsReport:
    finite: PrimeFamily
    infinite: PrimeFamily

    @property
    def finite_count(self) -> ExtendedCount:
        return self.finite.count

    @property
    def infinite_count(self) -> ExtendedCount:
        return self.infinite.count


@dataclass(frozen=True)
class FGSet:
    """The divisor set of a supernatural number, viewed as an FG-set."""

    steinitz: SupernaturalNumber

    def exponent(self, q: int) -> Exponent:
        return self.steinitz.exponent(q)

    def __str__(self) -> str:
        return f"divisors({self.steinitz})"


def _factor(n: int, what: str) -> dict[int, int]:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"{what} must be a positive integer, got {n!r}")
    if n > FACTOR_LIMIT:
        raise BoundExceededError(f"{n} exceeds the factorization limit {FACTOR_LIMIT}")
    return sympy.factorint(n)


def member(T: FGSet, n: int) -> bool:
    """Whether the natural number n lies in T.

    Primes of n outside a finite universe make the answer False, matching
    the truncated-world reading of the encoding.
    """
    return all(T.exponent(q) >= v for q, v in _factor(n, "member").items())


def order(T: FGSet, t: int) -> Exponent:
    """Largest n with t**n in T; INF when every power stays inside.

    Equals min over primes q dividing t of floor(e_q / v_q(t)), where an
    infinite e_q contributes no constraint.
    """
    if t < 2:
        raise ValueError("order is defined for t >= 2")
    best: Exponent = INF
    for q, v in _factor(t, "order").items():
        e = T.exponent(q)
        if e is INF:
            continue
        best = min(best, e // v)
    return best


def parts(T: FGSet) -> PartsReport:
    """Split the primes into T_f (finite nonzero order) and T_inf."""
    sn = T.steinitz
    d = sn.default
    generic_fin = d is not INF and d != 0
    generic_inf = d is INF
    fin_flips = set()
    inf_flips = set()
    for q, e in sn.exceptions:
        if ((e is not INF) and e != 0) != generic_fin:
            fin_flips.add(q)
        if (e is INF) != generic_inf:
            inf_flips.add(q)
    return PartsReport(
        finite=PrimeFamily(generic_fin, frozenset(fin_flips), sn.universe),
        infinite=PrimeFamily(generic_inf, frozenset(inf_flips), sn.universe),
    )


@dataclass(frozen=True)
class AxiomCheck:
    ok: bool
    axiom: str | None = None
    witness: tuple | None = None


def verify_axioms(S) -> AxiomCheck:
    """Check an explicit finite set of naturals against the three axioms.

    Returns the first failure with a witness: ("contains-one", (1,)),
    ("divisor-closed", (n, d)) for a missing divisor d of a member n, or
    ("lcm-closed", (m, n, lcm)) for a missing pairwise lcm.
    """
    values = sorted(set(S))
    for n in values:
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"members must be positive integers, got {n!r}")
    if 1 not in values:
        return AxiomCheck(False, "contains-one", (1,))
    members = set(values)
    for n in values:
        for d in sympy.divisors(n):
            if d not in members:
                return AxiomCheck(False, "divisor-closed", (n, d))
    for i, m in enumerate(values):
        for n in values[i:]:
            l = sympy.lcm(m, n)
            if l not in members:
                return AxiomCheck(False, "lcm-closed", (m, n, int(l)))
    return AxiomCheck(True)


def decrement_at(T: FGSet, q: int) -> FGSet:
    """Drop the exponent at q by one; q must have finite nonzero order.

    This is the unique maximal FG-subset of T that loses q-divisibility;
    infinite exponents are never touched.
    """
    e = T.exponent(q)
    if e is INF or e < 1:
        raise ValueError(f"prime {q} does not have finite nonzero order")
    sn = T.steinitz
    table = dict(sn.exceptions)
    table[q] = e - 1
    return FGSet(SupernaturalNumber(table, sn.default, sn.universe))


@dataclass(frozen=True)
class MaximalFGSubsets:
    """The maximal FG-subsets of a parent set, one per prime in T_f."""

    count: ExtendedCount
    subsets: tuple[FGSet, ...] | None
    parent: FGSet

    def at(self, q: int) -> FGSet:
        return decrement_at(self.parent, q)


def maximal_fg_subsets(T: FGSet) -> MaximalFGSubsets:
    """All maximal FG-subsets; a finite listing exactly when T_f is finite.

    When T_f is infinite the listing is omitted and ``at(q)`` yields the
    subset for any requested prime of finite nonzero order.
    """
    fam = parts(T).finite
    cnt = fam.count
    if cnt.is_finite:
        qs = fam.explicit()
        return MaximalFGSubsets(cnt, tuple(decrement_at(T, q) for q in qs), T)
    return MaximalFGSubsets(cnt, None, T)


def is_maximal_fg_subset(T1: FGSet, T2: FGSet) -> bool:
    """Whether T1 is a maximal FG-subset of T2 (both over the same universe).

    True exactly when the exponent functions agree everywhere except at a
    single prime q where T2 is finite nonzero and T1 is one lower; that
    q loses one step of divisibility and the infinite parts coincide.
    """
    a, b = T1.steinitz, T2.steinitz
    if a.universe != b.universe:
        raise UniverseMismatchError("FG-sets live over different prime universes")
    if a.default != b.default:
        # Defaults apply to infinitely many primes (the universe is not
        # finite here: finite universes store default 0 canonically).
        return False
    diffs = [
        q
        for q in {p for p, _ in a.exceptions} | {p for p, _ in b.exceptions}
        if a.exponent(q) != b.exponent(q)
    ]
    if len(diffs) != 1:
        return False
    q = diffs[0]
    e2 = b.exponent(q)
    return e2 is not INF and e2 >= 1 and a.exponent(q) == e2 - 1
