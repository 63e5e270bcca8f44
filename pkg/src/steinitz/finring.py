"""Brute-force laboratory for small commutative rings.

Everything here works on explicit Cayley tables, so the results are
independent of the descriptor calculus in :mod:`steinitz.field` and can be
used to cross-check it.  The three constructors build the rings the theory
makes predictions about: finite fields F_{p^n} (lexicographically smallest
irreducible modulus), direct products, and dual numbers K[x]/(x^2).

Subring enumeration is a breadth-first saturation: starting from the prime
subring, every known subring is extended by every outside element through
the closure kernel.  Any subring R is reached because each maximal chain of
subrings below R is climbed one generator at a time.  Element sets are kept
as bitmasks so set comparisons stay cheap, and the lattice output is
canonically ordered (by size, then mask value) regardless of search order.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

import numpy as np
import sympy

from . import kernel
from .errors import BoundExceededError, LatticeOverflowError, RingConstructionError

__all__ = [
    "FiniteRing",
    "SubringLattice",
    "ComparisonReport",
    "make_gf",
    "make_product",
    "make_dual",
    "closure",
    "enumerate_subrings",
    "maximal_subrings",
    "saturated_chains",
    "predict_and_compare",
    "DEFAULT_SIZE_BOUND",
    "DEFAULT_MAX_SUBRINGS",
]

DEFAULT_SIZE_BOUND = 4096
DEFAULT_MAX_SUBRINGS = 100_000

# uint16 tables; nothing in this package wants rings anywhere near this big.
_HARD_SIZE_CAP = 65535

_AXIOM_SAMPLES = 100_000
_EXHAUSTIVE_LIMIT = 64


class FiniteRing:
    """A commutative unital ring given by explicit add/mul tables.

    Tables are verified at construction: exhaustively for everything
    quadratic, and for the three cubic laws (both associativities and
    distributivity) exhaustively up to 64 elements, by 10^5 random triples
    above that.  Arrays are frozen after construction.
    """

    __slots__ = ("size", "add", "mul", "neg", "zero", "one", "labels",
                 "provenance", "_prep", "_field")

    def __init__(self, add, mul, zero, one, labels=None, provenance="tables"):
        add = np.ascontiguousarray(add, dtype=np.uint16)
        mul = np.ascontiguousarray(mul, dtype=np.uint16)
        size = add.shape[0]
        if add.shape != (size, size) or mul.shape != (size, size):
            raise RingConstructionError("tables must be square and equal-sized")
        self.size = int(size)
        self.zero = int(zero)
        self.one = int(one)
        self.add = add
        self.mul = mul
        _verify_tables(self)
        self.neg = np.argmax(add == self.zero, axis=1).astype(np.uint16)
        self.labels = tuple(labels) if labels is not None else tuple(
            str(i) for i in range(size)
        )
        if len(self.labels) != size:
            raise RingConstructionError("need one label per element")
        self.provenance = provenance
        add.setflags(write=False)
        mul.setflags(write=False)
        self.neg.setflags(write=False)
        self._prep = {}
        self._field = None

    @property
    def elements(self) -> range:
        return range(self.size)

    def is_field(self) -> bool:
        """Every element outside zero has a multiplicative inverse."""
        if self._field is None:
            hits = (self.mul == self.one).any(axis=1)
            hits[self.zero] = True
            self._field = bool(hits.all()) and self.size >= 2
        return self._field

    def __repr__(self) -> str:
        return f"FiniteRing({self.provenance}, size={self.size})"


def _verify_tables(r: FiniteRing) -> None:
    n, A, M = r.size, r.add, r.mul
    if n < 2:
        raise RingConstructionError("a unital ring needs at least two elements")
    if not (0 <= r.zero < n and 0 <= r.one < n) or r.zero == r.one:
        raise RingConstructionError("zero and one must be distinct element indices")
    if int(A.max()) >= n or int(M.max()) >= n:
        raise RingConstructionError("table entries out of range")
    if not np.array_equal(A, A.T):
        raise RingConstructionError("addition is not commutative")
    if not np.array_equal(M, M.T):
        raise RingConstructionError("multiplication is not commutative")
    idx = np.arange(n, dtype=np.uint16)
    if not np.array_equal(A[r.zero], idx):
        raise RingConstructionError("zero is not an additive identity")
    if not np.array_equal(M[r.one], idx):
        raise RingConstructionError("one is not a multiplicative identity")
    if not np.array_equal((A == r.zero).sum(axis=1), np.ones(n, dtype=np.int64)):
        raise RingConstructionError("additive inverses missing or ambiguous")
    if n <= _EXHAUSTIVE_LIMIT:
        if not np.array_equal(A[A], np.take(A, A, axis=1)):
            raise RingConstructionError("addition is not associative")
        if not np.array_equal(M[M], np.take(M, M, axis=1)):
            raise RingConstructionError("multiplication is not associative")
        lhs = np.take(M, A, axis=1)
        rhs = A[M[:, :, None], M[:, None, :]]
        if not np.array_equal(lhs, rhs):
            raise RingConstructionError("distributivity fails")
    else:
        rng = np.random.default_rng(0xA11CE)
        i, j, k = rng.integers(0, n, size=(3, _AXIOM_SAMPLES))
        if not np.array_equal(A[A[i, j], k], A[i, A[j, k]]):
            raise RingConstructionError("addition is not associative")
        if not np.array_equal(M[M[i, j], k], M[i, M[j, k]]):
            raise RingConstructionError("multiplication is not associative")
        if not np.array_equal(M[i, A[j, k]], A[M[i, j], M[i, k]]):
            raise RingConstructionError("distributivity fails")


# ---------------------------------------------------------------------------
# Polynomial arithmetic over F_p on base-p integer encodings (low digit =
# constant coefficient).  Only used at construction time.
# ---------------------------------------------------------------------------


def _digits(a: int, p: int) -> list[int]:
    out = []
    while a:
        out.append(a % p)
        a //= p
    return out


def _undigits(ds, p: int) -> int:
    v = 0
    for d in reversed(ds):
        v = v * p + d
    return v


def _poly_mul(a: int, b: int, p: int) -> int:
    da, db = _digits(a, p), _digits(b, p)
    if not da or not db:
        return 0
    out = [0] * (len(da) + len(db) - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                out[i + j] = (out[i + j] + x * y) % p
    return _undigits(out, p)


def _poly_mod(a: int, m: int, p: int) -> int:
    dm = _digits(m, p)
    deg_m = len(dm) - 1
    da = _digits(a, p)
    while len(da) - 1 >= deg_m and da:
        lead = da[-1]
        if lead:
            shift = len(da) - 1 - deg_m
            for i, c in enumerate(dm):
                da[shift + i] = (da[shift + i] - lead * c) % p
        da.pop()
    return _undigits(da, p)


def _poly_mulmod(a: int, b: int, m: int, p: int) -> int:
    return _poly_mod(_poly_mul(a, b, p), m, p)


def _poly_pow(a: int, e: int, m: int, p: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = _poly_mulmod(r, a, m, p)
        a = _poly_mulmod(a, a, m, p)
        e >>= 1
    return r


def _poly_is_irreducible(m: int, p: int, n: int) -> bool:
    # Exhaustive trial division by monic polynomials of degree <= n/2.
    for d in range(1, n // 2 + 1):
        base = p**d
        for low in range(base):
            if _poly_mod(m, base + low, p) == 0:
                return False
    return True


def _smallest_irreducible(p: int, n: int) -> int:
    # Smallest coefficient tuple read from the leading term down, which is
    # the smallest integer encoding among monic degree-n candidates.
    top = p**n
    for low in range(top):
        if _poly_is_irreducible(top + low, p, n):
            return top + low
    raise AssertionError("irreducible polynomials of every degree exist")


def _poly_label(code: int, p: int) -> str:
    ds = _digits(code, p)
    if not ds:
        return "0"
    terms = []
    for k in range(len(ds) - 1, -1, -1):
        c = ds[k]
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            var = "t" if k == 1 else f"t^{k}"
            terms.append(var if c == 1 else f"{c}{var}")
    return "+".join(terms)


def _check_size(size: int, bound: int, what: str) -> None:
    if size > min(bound, _HARD_SIZE_CAP):
        raise BoundExceededError(
            f"{what} would have {size} elements, above the bound {min(bound, _HARD_SIZE_CAP)}"
        )


def make_gf(p: int, n: int, bound: int = DEFAULT_SIZE_BOUND) -> FiniteRing:
    """The field F_{p^n} modulo the smallest monic irreducible of degree n.

    Elements are base-p encodings of polynomials in the residue class
    generator t; index 0 is zero and index 1 is one.
    """
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("the extension degree must be at least 1")
    q = p**n
    _check_size(q, bound, f"gf({p},{n})")
    modulus = _smallest_irreducible(p, n)

    idx = np.arange(q, dtype=np.int64)
    add = np.zeros((q, q), dtype=np.int64)
    for i in range(n):
        d = (idx // p**i) % p
        add += ((d[:, None] + d[None, :]) % p) * p**i
    add = add.astype(np.uint16)

    if q == 2:
        mul = np.array([[0, 0], [0, 1]], dtype=np.uint16)
    else:
        g = _find_generator(p, modulus, q)
        exp = [1]
        for _ in range(q - 2):
            exp.append(_poly_mulmod(exp[-1], g, modulus, p))
        exp_arr = np.array(exp, dtype=np.uint16)
        log = np.zeros(q, dtype=np.int64)
        log[exp_arr] = np.arange(q - 1)
        mul = exp_arr[(log[:, None] + log[None, :]) % (q - 1)]
        mul[0, :] = 0
        mul[:, 0] = 0

    labels = tuple(_poly_label(i, p) for i in range(q))
    return FiniteRing(add, mul, 0, 1, labels, f"gf({p},{n})")


def _find_generator(p: int, modulus: int, q: int) -> int:
    cofactors = [(q - 1) // r for r in sympy.primefactors(q - 1)]
    for g in range(2, q):
        if all(_poly_pow(g, c, modulus, p) != 1 for c in cofactors):
            return g
    raise AssertionError("the multiplicative group of a finite field is cyclic")


def make_product(r: FiniteRing, s: FiniteRing, bound: int = DEFAULT_SIZE_BOUND) -> FiniteRing:
    """Componentwise direct product; element (i, j) has index i*|s| + j."""
    size = r.size * s.size
    _check_size(size, bound, "product")
    left = np.repeat(np.arange(r.size, dtype=np.int64), s.size)
    right = np.tile(np.arange(s.size, dtype=np.int64), r.size)
    ss = np.uint16(s.size)

    def combine(tr, ts):
        out = tr[left[:, None], left[None, :]] * ss
        out += ts[right[:, None], right[None, :]]
        return out

    add = combine(r.add, s.add)
    mul = combine(r.mul, s.mul)
    labels = tuple(
        f"({r.labels[i]},{s.labels[j]})" for i in range(r.size) for j in range(s.size)
    )
    return FiniteRing(
        add,
        mul,
        r.zero * s.size + s.zero,
        r.one * s.size + s.one,
        labels,
        f"product({r.provenance},{s.provenance})",
    )


def make_dual(k: FiniteRing, bound: int = DEFAULT_SIZE_BOUND) -> FiniteRing:
    """Dual numbers k[x]/(x^2) over a field; (a, b) = a + b*e has index a + b*|k|."""
    if not k.is_field():
        raise ValueError("dual numbers are built over a field")
    size = k.size * k.size
    _check_size(size, bound, "dual")
    q = k.size
    const = np.tile(np.arange(q, dtype=np.int64), q)       # index % q
    slope = np.repeat(np.arange(q, dtype=np.int64), q)     # index // q
    qq = np.uint16(q)

    a1, a2 = const[:, None], const[None, :]
    b1, b2 = slope[:, None], slope[None, :]
    add = k.add[a1, a2] + k.add[b1, b2] * qq
    cross = k.add[k.mul[a1, b2], k.mul[a2, b1]]
    mul = k.mul[a1, a2] + cross * qq

    def label(i):
        a, b = k.labels[i % q], k.labels[i // q]
        if i // q == k.zero:
            return a
        be = f"({b})e" if len(b) > 1 else f"{b}e"
        return be if i % q == k.zero else f"{a}+{be}"

    labels = tuple(label(i) for i in range(size))
    return FiniteRing(
        add,
        mul,
        k.zero + k.zero * q,
        k.one + k.zero * q,
        labels,
        f"dual({k.provenance})",
    )


# ---------------------------------------------------------------------------
# Subring enumeration
# ---------------------------------------------------------------------------


def _prepared(ring: FiniteRing):
    impl = kernel.backend()
    name = kernel.backend_name()
    prep = ring._prep.get(name)
    if prep is None:
        prep = impl.prepare(ring.add, ring.mul)
        ring._prep[name] = prep
    return impl, prep


def closure(ring: FiniteRing, seed=()) -> frozenset[int]:
    """Smallest unital subring containing the seed elements."""
    seeds = []
    for a in seed:
        a = int(a)
        if not 0 <= a < ring.size:
            raise ValueError(f"element index {a} out of range")
        seeds.append(a)
    impl, prep = _prepared(ring)
    base = bytearray(ring.size)
    base[ring.zero] = 1
    seeds = tuple(dict.fromkeys([*seeds, ring.one]))
    mask, _ = impl.closure(prep, ring.size, bytes(base), (), seeds)
    return frozenset(i for i in range(ring.size) if mask[i])


def _mask_to_int(mask: bytes) -> int:
    packed = np.packbits(np.frombuffer(mask, dtype=np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def _set_to_int(members, size: int) -> int:
    mask = 0
    for i in members:
        if not 0 <= i < size:
            raise ValueError(f"element index {i} out of range")
        mask |= 1 << i
    return mask


def enumerate_subrings(
    ring: FiniteRing, max_subrings: int = DEFAULT_MAX_SUBRINGS
) -> "SubringLattice":
    """All unital subrings, as a lattice under inclusion.

    Single-threaded breadth-first saturation; the output ordering is
    canonical, so reruns and both kernels produce identical lattices.
    """
    impl, prep = _prepared(ring)
    size = ring.size
    base = bytearray(size)
    base[ring.zero] = 1
    mask0, gens0 = impl.closure(prep, size, bytes(base), (), (ring.one,))
    found: dict[bytes, tuple] = {mask0: gens0}
    frontier = [mask0]
    while frontier:
        mask = frontier.pop()
        gens = found[mask]
        for a in range(size):
            if mask[a]:
                continue
            grown, gens2 = impl.closure(prep, size, mask, gens, (a,))
            if grown not in found:
                if len(found) >= max_subrings:
                    raise LatticeOverflowError(
                        f"more than {max_subrings} subrings; raise max_subrings to continue"
                    )
                found[grown] = gens2
                frontier.append(grown)
    masks = sorted((_mask_to_int(m) for m in found), key=lambda v: (v.bit_count(), v))
    return SubringLattice(ring, tuple(masks), _covering_pairs(masks))


def _covering_pairs(masks) -> tuple[tuple[int, int], ...]:
    # Transitive reduction of inclusion.  Masks come sorted by popcount,
    # so a strict subset always sits at a smaller index.
    n = len(masks)
    below = [[False] * n for _ in range(n)]
    for i in range(n):
        mi = masks[i]
        row = below[i]
        for j in range(i + 1, n):
            row[j] = (mi & masks[j]) == mi
    pairs = []
    for j in range(n):
        for i in range(j):
            if below[i][j] and not any(
                below[i][k] and below[k][j] for k in range(i + 1, j)
            ):
                pairs.append((i, j))
    return tuple(pairs)


@dataclass(frozen=True, eq=False)
class SubringLattice:
    """Subrings as bitmasks (size order, then mask value) plus covers.

    ``subrings[0]`` is the prime subring and ``subrings[-1]`` is the whole
    ring; ``covers`` holds (lower, upper) index pairs of the covering
    relation.
    """

    ring: FiniteRing
    subrings: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]

    @property
    def top_index(self) -> int:
        return len(self.subrings) - 1

    @property
    def prime_index(self) -> int:
        return 0

    def members(self, i: int) -> tuple[int, ...]:
        mask = self.subrings[i]
        return tuple(b for b in range(self.ring.size) if mask >> b & 1)

    def member_set(self, i: int) -> frozenset[int]:
        return frozenset(self.members(i))

    def labels(self, i: int) -> tuple[str, ...]:
        return tuple(self.ring.labels[b] for b in self.members(i))

    def index_of(self, members) -> int:
        mask = _set_to_int(members, self.ring.size)
        return self.subrings.index(mask)


def maximal_subrings(lattice: SubringLattice) -> list[frozenset[int]]:
    """The co-atoms of the lattice, in canonical order."""
    top = lattice.top_index
    return [lattice.member_set(i) for i, j in lattice.covers if j == top]


def saturated_chains(lattice: SubringLattice):
    """All maximal chains from the whole ring down to the prime subring.

    Returns (chains, uniform) where each chain is a tuple of subring
    indices starting at the top.  The uniform-length flag is only
    meaningful for fields and is None for other provenances.
    """
    down = defaultdict(list)
    for i, j in lattice.covers:
        down[j].append(i)
    for lows in down.values():
        lows.sort()
    chains: list[tuple[int, ...]] = []

    def walk(node: int, path: tuple[int, ...]) -> None:
        if node == lattice.prime_index:
            chains.append(path)
            return
        for nxt in down[node]:
            walk(nxt, path + (nxt,))

    walk(lattice.top_index, (lattice.top_index,))
    uniform: bool | None = None
    if lattice.ring.provenance.startswith("gf("):
        uniform = len({len(c) for c in chains}) == 1
    return tuple(chains), uniform


# ---------------------------------------------------------------------------
# Theory predictions for the three families, cross-checked against the
# brute-force enumeration.
# ---------------------------------------------------------------------------


def _vector_pow(ring: FiniteRing, exponent: int) -> np.ndarray:
    """x -> x**exponent for every element, read off the mul table."""
    res = np.full(ring.size, ring.one, dtype=np.int64)
    base = np.arange(ring.size, dtype=np.int64)
    mul = ring.mul
    e = exponent
    while e:
        if e & 1:
            res = mul[res, base].astype(np.int64)
        e >>= 1
        if e:
            base = mul[base, base].astype(np.int64)
    return res


def _gf_predicted(K: FiniteRing, p: int, n: int) -> list[frozenset[int]]:
    # Maximal subrings of F_{p^n}: fixed fields of x -> x**(p**(n/q)) for
    # the primes q dividing n.
    out = []
    idx = np.arange(K.size)
    for q in sorted(sympy.primefactors(n)):
        perm = _vector_pow(K, p ** (n // q))
        out.append(frozenset(int(i) for i in np.flatnonzero(perm == idx)))
    return out


def _dual_predicted(K: FiniteRing, p: int, n: int) -> list[frozenset[int]]:
    # Constants K, plus S + K*e for each maximal subring S of K.
    q = K.size
    out = [frozenset(a + K.zero * q for a in range(q))]
    for S in _gf_predicted(K, p, n):
        out.append(frozenset(a + b * q for a in S for b in range(q)))
    return out


def _product_predicted(K: FiniteRing, p: int, n: int) -> list[frozenset[int]]:
    # S x K and K x S for maximal S, plus the graphs of the n automorphisms.
    q = K.size
    out = []
    for S in _gf_predicted(K, p, n):
        out.append(frozenset(a * q + y for a in S for y in range(q)))
        out.append(frozenset(x * q + a for x in range(q) for a in S))
    for j in range(n):
        perm = _vector_pow(K, p**j)
        out.append(frozenset(x * q + int(perm[x]) for x in range(q)))
    return out


@dataclass(frozen=True, eq=False)
class ComparisonReport:
    """Predicted versus enumerated maximal subrings of one ring."""

    family: str
    p: int
    n: int
    size: int
    predicted: tuple[int, ...]
    observed: tuple[int, ...]

    @property
    def predicted_count(self) -> int:
        return len(self.predicted)

    @property
    def observed_count(self) -> int:
        return len(self.observed)

    @property
    def matches(self) -> bool:
        return self.predicted == self.observed


def predict_and_compare(
    family: str,
    p: int,
    n: int,
    bound: int | None = None,
    lattice: SubringLattice | None = None,
) -> ComparisonReport:
    """Compare the classified maximal subrings against brute force.

    ``family`` is one of gf, dual, product (the latter two over F_{p^n}).
    A precomputed lattice of the same ring may be passed to avoid repeating
    the enumeration.
    """
    bound = DEFAULT_SIZE_BOUND if bound is None else bound
    if family == "gf":
        ring = lattice.ring if lattice is not None else make_gf(p, n, bound)
        predicted = _gf_predicted(ring, p, n)
    elif family == "dual":
        K = make_gf(p, n, bound)
        ring = lattice.ring if lattice is not None else make_dual(K, bound)
        predicted = _dual_predicted(K, p, n)
    elif family == "product":
        K = make_gf(p, n, bound)
        ring = lattice.ring if lattice is not None else make_product(K, K, bound)
        predicted = _product_predicted(K, p, n)
    else:
        raise ValueError(f"unknown family {family!r}")
    if lattice is None:
        lattice = enumerate_subrings(ring)
    observed = tuple(
        sorted(
            (_set_to_int(s, ring.size) for s in maximal_subrings(lattice)),
            key=lambda v: (v.bit_count(), v),
        )
    )
    predicted_masks = tuple(
        sorted(
            (_set_to_int(s, ring.size) for s in predicted),
            key=lambda v: (v.bit_count(), v),
        )
    )
    return ComparisonReport(
        family=family,
        p=p,
        n=n,
        size=ring.size,
        predicted=predicted_masks,
        observed=observed,
    )
