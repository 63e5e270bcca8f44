"""Absolutely algebraic fields as (characteristic, supernatural content) pairs.

A field descriptor names the subfield of the algebraic closure of F_p whose
finite subfields are F_{p^n} for exactly the naturals n dividing the
content.  On this encoding the whole calculus of maximal subrings is exact
exponent bookkeeping: the maximal subrings correspond one-to-one to the
primes of finite nonzero order in the content, each obtained by dropping
one exponent step; zeroing every finite exponent yields the largest
subfield containing no maximal subring of anything above it; and all
saturated descending chains of maximal subrings have the same length, the
sum of the finite orders, terminating at that subfield.

Counting operations work straight off the exceptions table and never
enumerate primes; listing operations raise ``InfiniteCountError`` with a
finite description when the collection is countably infinite.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import sympy

from .errors import (
    ChainOverflowError,
    InfiniteCountError,
    NonFiniteExtensionError,
    ParseError,
)
from .fgset import (
    ExtendedCount,
    FGSet,
    decrement_at,
    is_maximal_fg_subset,
    maximal_fg_subsets,
    parts,
)
from .supernat import (
    INF,
    SupernaturalNumber,
    divides,
    from_natural,
    join,
    meet,
    natural_value,
    parse_content,
    quotient,
    render_content,
)

__all__ = [
    "FieldDescriptor",
    "ChainReport",
    "EmbedResult",
    "finite_field",
    "algebraic_closure",
    "rgmax_count",
    "rgmax_list",
    "largest_nonsubmaximal",
    "degree",
    "compositum",
    "intersection",
    "chain_stats",
    "intermediate_count",
    "embeds_all",
    "embed_in_maximal",
    "is_subfield",
    "finiteness_transfer",
    "parse_field",
    "render_field",
    "MAX_CHAINS",
]

MAX_CHAINS = 10**6


@dataclass(frozen=True)
class FieldDescriptor:
    """An absolutely algebraic field of prime characteristic."""

    characteristic: int
    content: SupernaturalNumber

    def __post_init__(self):
        p = self.characteristic
        if not isinstance(p, int) or isinstance(p, bool) or not sympy.isprime(p):
            raise ValueError(f"characteristic must be prime, got {p!r}")

    @property
    def fg(self) -> FGSet:
        return FGSet(self.content)

    def __str__(self) -> str:
        return render_field(self)


def finite_field(p: int, n: int) -> FieldDescriptor:
    """The descriptor of F_{p^n} (content = the natural number n)."""
    return FieldDescriptor(p, from_natural(n))


def algebraic_closure(p: int) -> FieldDescriptor:
    """The descriptor of the algebraic closure of F_p (every exponent infinite)."""
    return FieldDescriptor(p, SupernaturalNumber(default=INF))


def _require_comparable(E: FieldDescriptor, F: FieldDescriptor, what: str) -> None:
    if E.characteristic != F.characteristic:
        raise ValueError(f"{what} requires equal characteristics")


def is_subfield(F: FieldDescriptor, E: FieldDescriptor) -> bool:
    """Whether F embeds into E; False across characteristics or universes."""
    if F.characteristic != E.characteristic:
        return False
    if F.content.universe != E.content.universe:
        return False
    return divides(F.content, E.content)


def degree(E: FieldDescriptor, F: FieldDescriptor) -> SupernaturalNumber:
    """The extension degree [E : F] as a supernatural number; needs F <= E."""
    _require_comparable(E, F, "degree")
    return quotient(E.content, F.content)


def compositum(E: FieldDescriptor, F: FieldDescriptor) -> FieldDescriptor:
    _require_comparable(E, F, "compositum")
    return FieldDescriptor(E.characteristic, join(E.content, F.content))


def intersection(E: FieldDescriptor, F: FieldDescriptor) -> FieldDescriptor:
    _require_comparable(E, F, "intersection")
    return FieldDescriptor(E.characteristic, meet(E.content, F.content))


def rgmax_count(E: FieldDescriptor) -> ExtendedCount:
    """Number of maximal subrings: the size of the finite part of the content."""
    return parts(E.fg).finite_count


def rgmax_list(E: FieldDescriptor) -> tuple[FieldDescriptor, ...]:
    """The maximal subrings, sorted by their distinguished prime.

    Raises InfiniteCountError with a finite description of the prime family
    when there are countably many.
    """
    subs = maximal_fg_subsets(E.fg)
    if subs.subsets is None:
        fam = parts(E.fg).finite
        raise InfiniteCountError(
            "countably many maximal subrings", description=fam.describe()
        )
    return tuple(FieldDescriptor(E.characteristic, s.steinitz) for s in subs.subsets)


def largest_nonsubmaximal(E: FieldDescriptor) -> FieldDescriptor:
    """Zero out every finite exponent, keeping the infinite ones.

    The result is the largest subfield that is contained in no maximal
    subring of any of its finite extensions inside E; it is idempotent and
    every saturated descending chain of maximal subrings lands on it.
    """
    sn = E.content
    exc = {q: (INF if e is INF else 0) for q, e in sn.exceptions}
    default = INF if sn.default is INF else 0
    return FieldDescriptor(
        E.characteristic, SupernaturalNumber(exc, default, sn.universe)
    )


def embeds_all(E: FieldDescriptor) -> bool:
    """Whether every proper subring of E embeds into a maximal subring.

    Holds exactly when no prime has infinite order in the content.
    """
    return parts(E.fg).infinite_count == ExtendedCount.finite(0)


@dataclass(frozen=True)
class EmbedResult:
    maximal: FieldDescriptor | None
    blocking_prime: int | None


def embed_in_maximal(E: FieldDescriptor, F: FieldDescriptor) -> EmbedResult:
    """Find one maximal subring of E containing the proper subfield F.

    Ties (several admissible primes) break toward the smallest prime.  When
    F sits in no maximal subring, the result carries a witness prime of
    infinite order in E at which F is strictly smaller.
    """
    if not is_subfield(F, E) or F == E:
        raise ValueError("F must be a proper subfield of E over the same universe")
    cE, cF = E.content, F.content
    exc_primes = sorted(
        {q for q, _ in cE.exceptions} | {q for q, _ in cF.exceptions}
    )

    def admissible(q: int) -> bool:
        e = cE.exponent(q)
        return e is not INF and e >= 1 and cF.exponent(q) < e

    candidates = [q for q in exc_primes if admissible(q)]
    generic_gap = (
        cE.universe is None
        and cE.default is not INF
        and cE.default >= 1
        and cF.default < cE.default
    )
    if generic_gap:
        g = 2
        while g in exc_primes:
            g = sympy.nextprime(g)
        candidates.append(g)
    if candidates:
        q = min(candidates)
        M = FieldDescriptor(
            E.characteristic, decrement_at(E.fg, q).steinitz
        )
        return EmbedResult(M, None)

    # No admissible prime: the strict gap between F and E happens at a
    # prime of infinite order, which blocks every maximal subring.
    witnesses = [
        q for q in exc_primes if cE.exponent(q) is INF and cF.exponent(q) is not INF
    ]
    if cE.universe is None and cE.default is INF and cF.default is not INF:
        g = 2
        while g in exc_primes:
            g = sympy.nextprime(g)
        witnesses.append(g)
    return EmbedResult(None, min(witnesses))


@dataclass(frozen=True)
class ChainReport:
    length: int
    chain_count: int
    terminus: FieldDescriptor
    chains: tuple[tuple[FieldDescriptor, ...], ...] | None


def _multiset_words(first: tuple[int, ...]):
    # Ascending lexicographic enumeration of the distinct rearrangements.
    word = list(first)
    n = len(word)
    while True:
        yield tuple(word)
        i = n - 2
        while i >= 0 and word[i] >= word[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while word[j] <= word[i]:
            j -= 1
        word[i], word[j] = word[j], word[i]
        word[i + 1 :] = reversed(word[i + 1 :])


def chain_stats(
    E: FieldDescriptor, list_chains: bool = False, max_chains: int = MAX_CHAINS
) -> ChainReport:
    """Length and count of saturated descending chains of maximal subrings.

    Every chain starts at E, steps through maximal subrings one exponent
    decrement at a time, and ends at largest_nonsubmaximal(E); the length
    is the sum of the finite orders.  Counting is by explicit enumeration
    of decrement orders, capped at ``max_chains``.
    """
    fam = parts(E.fg).finite
    if not fam.count.is_finite:
        raise InfiniteCountError(
            "chains are only enumerable when the finite part is finite",
            description=fam.describe(),
        )
    pairs = [(q, E.content.exponent(q)) for q in fam.explicit()]
    length = sum(e for _, e in pairs)
    terminus = largest_nonsubmaximal(E)
    start = tuple(q for q, e in pairs for _ in range(e))

    count = 0
    chains: list[tuple[FieldDescriptor, ...]] | None = [] if list_chains else None
    for word in _multiset_words(start):
        count += 1
        if count > max_chains:
            raise ChainOverflowError(f"more than {max_chains} chains")
        if chains is None:
            continue
        fields = [E]
        cur = E.fg
        for q in word:
            nxt = decrement_at(cur, q)
            assert is_maximal_fg_subset(nxt, cur)
            fields.append(FieldDescriptor(E.characteristic, nxt.steinitz))
            cur = nxt
        assert fields[-1] == terminus
        chains.append(tuple(fields))
    return ChainReport(
        length=length,
        chain_count=count,
        terminus=terminus,
        chains=None if chains is None else tuple(chains),
    )


def intermediate_count(E: FieldDescriptor, F: FieldDescriptor) -> ExtendedCount:
    """Number of fields between F and E; finite extensions only.

    Intermediate fields correspond to exponent choices inside the per-prime
    windows, so the count is the divisor count of the natural degree.
    """
    deg = degree(E, F)
    if natural_value(deg) is None:
        raise NonFiniteExtensionError("intermediate_count requires a finite extension")
    n = 1
    for _, e in deg.exceptions:
        n *= e + 1
    return ExtendedCount.finite(n)


def finiteness_transfer(E: FieldDescriptor, K: FieldDescriptor) -> bool:
    """Check that a finite extension preserves finiteness of the count.

    Requires E <= K with natural degree; returns the biconditional
    rgmax_count(E) finite iff rgmax_count(K) finite (always True for
    representable fields, so a False return flags an encoding bug).
    """
    if not is_subfield(E, K):
        raise ValueError("finiteness_transfer requires E to be a subfield of K")
    if natural_value(degree(K, E)) is None:
        raise NonFiniteExtensionError("finiteness_transfer requires a finite extension")
    return rgmax_count(E).is_finite == rgmax_count(K).is_finite


# ---------------------------------------------------------------------------
# Text grammar:  char=<p>; <content>
# ---------------------------------------------------------------------------


def parse_field(text: str) -> FieldDescriptor:
    m = re.match(r"char=(\d+);\s*", text)
    if not m:
        raise ParseError("expected char=<p>; <content>", 0)
    p = int(m.group(1))
    if not sympy.isprime(p):
        raise ParseError(f"{p} is not prime", len("char="))
    content = parse_content(text[m.end():], base_offset=m.end())
    return FieldDescriptor(p, content)


def render_field(E: FieldDescriptor) -> str:
    return f"char={E.characteristic}; {render_content(E.content)}"
