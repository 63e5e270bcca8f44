"""Exact arithmetic on supernatural (Steinitz) numbers.

A supernatural number is a formal product  prod_q q**e_q  over primes q,
with exponents in N union {inf}.  Divisibility between supernatural numbers
mirrors containment between subfields of the algebraic closure of a prime
field, which makes this module the arithmetic core of the package: joins
are composita, meets are intersections, quotients are extension degrees.

Representation.  A number stores a finite ``exceptions`` table of primes
whose exponent differs from a shared ``default`` exponent, plus a prime
``universe``: either ``None`` (all primes) or an explicit finite set used
for truncated experiments.  Values are immutable and kept in a canonical
normal form, so ``==`` on descriptors is equality of the encoded objects.
For a finite universe the canonical default is 0 and every prime with a
nonzero exponent is listed explicitly; without that extra rule two distinct
(exceptions, default) pairs could describe the same exponent function.

Conventions.  ``quotient`` uses inf - finite = inf and inf - inf = 0, which
is the right reading for extension degrees: the quotient is the smallest
supernatural number that multiplies the denominator back up to the
numerator.  Binary operations require identical universes and raise
``UniverseMismatchError`` otherwise; nothing is ever coerced silently.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Union

import sympy

from .errors import (
    BoundExceededError,
    NotDivisibleError,
    ParseError,
    UniverseMismatchError,
)

__all__ = [
    "INF",
    "Exponent",
    "SupernaturalNumber",
    "ONE",
    "FULL",
    "from_natural",
    "divides",
    "join",
    "meet",
    "quotient",
    "natural_value",
    "parse_content",
    "render_content",
    "FACTOR_LIMIT",
    "MAX_EXPONENT",
]

# Inputs to from_natural and to membership/order tests are factored with
# sympy; reject anything past this bound rather than stall.
FACTOR_LIMIT = 2**64

# Cap on exponents accepted by the text grammar.
MAX_EXPONENT = 10**6


class _Infinity:
    """The exponent ``inf``.  A singleton ordered above every natural number."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"

    def __lt__(self, other):
        if other is self or isinstance(other, int):
            return False
        return NotImplemented

    def __le__(self, other):
        if other is self:
            return True
        if isinstance(other, int):
            return False
        return NotImplemented

    def __gt__(self, other):
        if other is self:
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __ge__(self, other):
        if other is self or isinstance(other, int):
            return True
        return NotImplemented


INF = _Infinity()

Exponent = Union[int, _Infinity]


def _check_exponent(e) -> Exponent:
    if e is INF:
        return e
    if isinstance(e, int) and not isinstance(e, bool) and e >= 0:
        return e
    raise ValueError(f"exponent must be a natural number or INF, got {e!r}")


def _check_prime(q) -> int:
    if not isinstance(q, int) or isinstance(q, bool) or not sympy.isprime(q):
        raise ValueError(f"{q!r} is not a prime number")
    return q


@dataclass(frozen=True)
class SupernaturalNumber:
    """A supernatural number in canonical normal form.

    ``exceptions`` may be given as a mapping or an iterable of
    ``(prime, exponent)`` pairs; it is stored as a sorted tuple with every
    value distinct from ``default``.
    """

    exceptions: tuple[tuple[int, Exponent], ...] = ()
    default: Exponent = 0
    universe: frozenset[int] | None = None
    _map: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        raw = self.exceptions
        pairs = raw.items() if isinstance(raw, Mapping) else tuple(raw)
        default = _check_exponent(self.default)
        universe = self.universe
        if universe is not None:
            universe = frozenset(_check_prime(q) for q in universe)
            if not universe:
                raise ValueError("a finite universe must contain at least one prime")
        table: dict[int, Exponent] = {}
        for q, e in pairs:
            _check_prime(q)
            if q in table:
                raise ValueError(f"duplicate prime {q} in exceptions")
            if universe is not None and q not in universe:
                raise ValueError(f"prime {q} lies outside the universe")
            table[q] = _check_exponent(e)
        if universe is not None:
            # Canonical form over a finite universe: default 0, every prime
            # with a nonzero exponent listed.  Uniqueness needs this.
            expanded = {q: table.get(q, default) for q in universe}
            default = 0
            items = tuple(sorted((q, e) for q, e in expanded.items() if e != 0))
        else:
            items = tuple(sorted((q, e) for q, e in table.items() if e != default))
        object.__setattr__(self, "exceptions", items)
        object.__setattr__(self, "default", default)
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "_map", dict(items))

    def exponent(self, q: int) -> Exponent:
        """Exponent at the prime q (0 for primes outside a finite universe)."""
        if self.universe is not None and q not in self.universe:
            return 0
        return self._map.get(q, self.default)

    @property
    def exception_primes(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.exceptions)

    def __str__(self) -> str:
        return render_content(self)


ONE = SupernaturalNumber()
FULL = SupernaturalNumber(default=INF)


def _require_same_universe(a: SupernaturalNumber, b: SupernaturalNumber) -> None:
    if a.universe != b.universe:
        raise UniverseMismatchError(
            "operands live over different prime universes; convert explicitly"
        )


def from_natural(n: int) -> SupernaturalNumber:
    """Embed a positive natural number via its prime factorization."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"expected a positive integer, got {n!r}")
    if n > FACTOR_LIMIT:
        raise BoundExceededError(f"{n} exceeds the factorization limit {FACTOR_LIMIT}")
    return SupernaturalNumber(sympy.factorint(n))


def natural_value(a: SupernaturalNumber) -> int | None:
    """The encoded natural number, or None when the value is not finite."""
    if a.universe is None and a.default != 0:
        return None
    n = 1
    for q, e in a.exceptions:
        if e is INF:
            return None
        n *= q**e
    return n


def divides(a: SupernaturalNumber, b: SupernaturalNumber) -> bool:
    """Pointwise exponent comparison; never enumerates primes."""
    _require_same_universe(a, b)
    if not a.default <= b.default:
        return False
    keys = {q for q, _ in a.exceptions} | {q for q, _ in b.exceptions}
    return all(a.exponent(q) <= b.exponent(q) for q in keys)


def _pointwise(a: SupernaturalNumber, b: SupernaturalNumber, op) -> SupernaturalNumber:
    keys = {q for q, _ in a.exceptions} | {q for q, _ in b.exceptions}
    exc = {q: op(a.exponent(q), b.exponent(q)) for q in keys}
    return SupernaturalNumber(exc, op(a.default, b.default), a.universe)


def join(a: SupernaturalNumber, b: SupernaturalNumber) -> SupernaturalNumber:
    """Least common multiple (pointwise max); the compositum on field contents."""
    _require_same_universe(a, b)
    return _pointwise(a, b, max)


def meet(a: SupernaturalNumber, b: SupernaturalNumber) -> SupernaturalNumber:
    """Greatest common divisor (pointwise min); the intersection on contents."""
    _require_same_universe(a, b)
    return _pointwise(a, b, min)


def _exp_sub(en: Exponent, ed: Exponent) -> Exponent:
    # inf - inf = 0 and inf - finite = inf: the quotient is the smallest
    # supernatural number whose product with the denominator is the numerator.
    if en is INF:
        return 0 if ed is INF else INF
    if ed is INF:  # unreachable when divides() holds; keep the guard honest
        raise NotDivisibleError("finite exponent cannot absorb an infinite one")
    return en - ed


def quotient(num: SupernaturalNumber, den: SupernaturalNumber) -> SupernaturalNumber:
    """Exponent-wise difference num / den; requires divides(den, num)."""
    _require_same_universe(num, den)
    if not divides(den, num):
        raise NotDivisibleError("quotient requires the denominator to divide the numerator")
    return _pointwise(num, den, _exp_sub)


# ---------------------------------------------------------------------------
# Text grammar:  FACTORS [; rest=EXPO] [; universe=p1,p2,...]
# FACTORS is a comma-separated list of prime^EXPO (with ^1 omitted); the
# empty factor list is written 1.  EXPO is a decimal natural or "inf".
# ---------------------------------------------------------------------------


def _parse_exponent_token(tok: str, pos: int) -> Exponent:
    if tok == "inf":
        return INF
    if not re.fullmatch(r"\d+", tok or ""):
        raise ParseError("expected a natural number or inf", pos)
    e = int(tok)
    if e > MAX_EXPONENT:
        raise ParseError("exponent overflow", pos)
    return e


def _parse_factor(piece: str, pos0: int) -> tuple[int, Exponent]:
    lead = len(piece) - len(piece.lstrip())
    core = piece.strip()
    pos = pos0 + lead
    m = re.match(r"\d+", core)
    if not m:
        raise ParseError("expected a prime", pos)
    p = int(m.group())
    if not sympy.isprime(p):
        raise ParseError(f"{p} is not prime", pos)
    rest = core[m.end():]
    rpos = pos + m.end()
    if rest == "":
        return p, 1
    if not rest.startswith("^"):
        raise ParseError("expected '^' or ','", rpos)
    return p, _parse_exponent_token(rest[1:], rpos + 1)


def _segments(text: str) -> Iterator[tuple[int, str]]:
    pos = 0
    for part in text.split(";"):
        yield pos, part
        pos += len(part) + 1


def parse_content(text: str, base_offset: int = 0) -> SupernaturalNumber:
    """Parse the supernatural-number grammar; offsets in errors are absolute."""
    segs = list(_segments(text))
    off0, factors = segs[0]
    exceptions: dict[int, Exponent] = {}
    default: Exponent = 0
    universe = None
    seen_rest = seen_universe = False

    stripped = factors.strip()
    if stripped == "":
        raise ParseError("empty factor list (write 1)", base_offset + off0)
    if stripped != "1":
        fpos = off0
        for piece in factors.split(","):
            p, e = _parse_factor(piece, base_offset + fpos)
            if p in exceptions:
                raise ParseError(f"duplicate prime {p}", base_offset + fpos)
            exceptions[p] = e
            fpos += len(piece) + 1

    for pos, part in segs[1:]:
        lead = base_offset + pos + (len(part) - len(part.lstrip()))
        body = part.strip()
        if body.startswith("rest="):
            if seen_rest:
                raise ParseError("duplicate rest clause", lead)
            seen_rest = True
            default = _parse_exponent_token(body[len("rest="):], lead + len("rest="))
        elif body.startswith("universe="):
            if seen_universe:
                raise ParseError("duplicate universe clause", lead)
            seen_universe = True
            listing = body[len("universe="):]
            upos = lead + len("universe=")
            primes = []
            for piece in listing.split(","):
                core = piece.strip()
                if not re.fullmatch(r"\d+", core or ""):
                    raise ParseError("expected a prime", upos)
                p = int(core)
                if not sympy.isprime(p):
                    raise ParseError(f"{p} is not prime", upos)
                primes.append(p)
                upos += len(piece) + 1
            universe = primes
        else:
            raise ParseError("expected rest= or universe=", lead)

    try:
        return SupernaturalNumber(exceptions, default, universe)
    except ValueError as err:
        raise ParseError(str(err), base_offset + off0) from err


def _factor_str(q: int, e: Exponent) -> str:
    return str(q) if e == 1 else f"{q}^{e}"


def render_content(a: SupernaturalNumber) -> str:
    """Canonical text form; parse_content(render_content(a)) == a."""
    parts = [",".join(_factor_str(q, e) for q, e in a.exceptions) or "1"]
    if a.default != 0:
        parts.append(f"rest={a.default}")
    if a.universe is not None:
        parts.append("universe=" + ",".join(map(str, sorted(a.universe))))
    return "; ".join(parts)
