"""Verification suites: theory predictions versus brute-force enumeration.

Each suite builds a batch of instances, runs the relevant comparison, and
returns one plain-dict record per instance.  Records are JSON-friendly and
deterministically ordered so the CLI's machine output is byte-stable.
Instances above the size bound produce a skip record instead of failing
the whole run.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator

from . import finring
from .errors import BoundExceededError
from .field import (
    FieldDescriptor,
    chain_stats,
    degree,
    finite_field,
    render_field,
    rgmax_count,
)
from .fgset import parts
from .supernat import INF, SupernaturalNumber, natural_value

__all__ = [
    "DEFAULT_SEED",
    "SUITES",
    "VerifyReport",
    "run_verify",
    "random_field_descriptors",
    "random_finite_extensions",
]

DEFAULT_SEED = 1729
SUITES = ("gf", "dual", "product", "chains", "all")

_GF_PRIMES = (2, 3)
# Base fields F_{p^n} by ascending size: 2,3,4,5,8,9,16 and 2,3,4,8,9.
_DUAL_BASES = ((2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (2, 4))
_PRODUCT_BASES = ((2, 1), (3, 1), (2, 2), (2, 3), (3, 2))

_CHAIN_DESCRIPTORS = 100
_MATERIALIZE_LIMIT = 200


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    seed: int
    records: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return all(r.get("match", True) for r in self.records)


def run_verify(
    suite: str,
    max_size: int | None = None,
    seed: int = DEFAULT_SEED,
    lattices: dict | None = None,
) -> VerifyReport:
    """Run one named suite (or ``all``) and collect its records.

    ``lattices`` may map (family, p, n) to a precomputed SubringLattice to
    avoid repeating enumerations the caller already has.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choices: {SUITES}")
    bound = finring.DEFAULT_SIZE_BOUND if max_size is None else max_size
    records: list[dict] = []
    if suite in ("gf", "all"):
        for p in _GF_PRIMES:
            n = 1
            while p**n <= bound:
                records.append(_family_record("gf", p, n, bound, lattices))
                n += 1
    if suite in ("dual", "all"):
        for p, n in _DUAL_BASES:
            records.append(_family_record("dual", p, n, bound, lattices))
    if suite in ("product", "all"):
        for p, n in _PRODUCT_BASES:
            records.append(_family_record("product", p, n, bound, lattices))
    if suite in ("chains", "all"):
        records.extend(_chain_records(seed))
        records.append(_lattice_chain_record(bound, lattices))
    return VerifyReport(suite=suite, seed=seed, records=tuple(records))


def _family_record(family, p, n, bound, lattices) -> dict:
    instance = f"{family}({p},{n})"
    size = p**n if family == "gf" else p ** (2 * n)
    if size > bound:
        return {
            "suite": family,
            "instance": instance,
            "status": "skipped",
            "reason": f"size {size} above bound {bound}",
        }
    lattice = (lattices or {}).get((family, p, n))
    try:
        report = finring.predict_and_compare(family, p, n, bound=bound, lattice=lattice)
    except BoundExceededError as exc:
        return {
            "suite": family,
            "instance": instance,
            "status": "skipped",
            "reason": str(exc),
        }
    return {
        "suite": family,
        "instance": instance,
        "status": "ok",
        "size": report.size,
        "predicted": report.predicted_count,
        "observed": report.observed_count,
        "match": report.matches,
    }


def random_field_descriptors(
    count: int,
    seed: int = DEFAULT_SEED,
    max_primes: int = 4,
    max_exponent: int = 3,
    allow_finite_default: bool = False,
) -> Iterator[FieldDescriptor]:
    """Seeded stream of absolutely algebraic field descriptors.

    Exceptions use at most ``max_primes`` primes with finite exponents up
    to ``max_exponent`` (a quarter of them infinite instead).  The default
    exponent is 0 or infinity; pass ``allow_finite_default`` to also emit
    descriptors whose tail exponent is 1 or 2, which have infinitely many
    maximal subrings.
    """
    rng = random.Random(seed)
    pool = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    defaults = [0, 0, 0, INF]
    if allow_finite_default:
        defaults = [0, 0, 1, 2, INF]
    for _ in range(count):
        p = rng.choice((2, 3, 5, 7))
        table = {}
        for q in rng.sample(pool, rng.randint(0, max_primes)):
            if rng.random() < 0.25:
                table[q] = INF
            else:
                table[q] = rng.randint(1, max_exponent)
        default = rng.choice(defaults)
        yield FieldDescriptor(p, SupernaturalNumber(table, default=default))


def random_finite_extensions(
    count: int, seed: int = DEFAULT_SEED
) -> Iterator[tuple[FieldDescriptor, FieldDescriptor]]:
    """Seeded pairs (E, K) with K a subfield of E of natural degree."""
    rng = random.Random(seed ^ 0x5EED)
    for E in random_field_descriptors(count, rng.randrange(2**31), allow_finite_default=True):
        table = {}
        for q, e in E.content.exceptions:
            if e is not INF and e >= 1 and rng.random() < 0.5:
                table[q] = e - rng.randint(0, e)
            else:
                table[q] = e
        default = E.content.default
        if default is not INF and default >= 1 and rng.random() < 0.5:
            extra = rng.choice((41, 43, 47))
            if extra not in table:
                table[extra] = default - rng.randint(0, default)
        K = FieldDescriptor(
            E.characteristic,
            SupernaturalNumber(table, default=default, universe=E.content.universe),
        )
        yield E, K


def _chain_records(seed: int) -> list[dict]:
    records = []
    for E in random_field_descriptors(_CHAIN_DESCRIPTORS, seed):
        fam = parts(E.fg).finite
        exponents = [E.content.exponent(q) for q in fam.explicit()]
        expected_length = sum(exponents)
        expected_count = math.factorial(expected_length)
        for e in exponents:
            expected_count //= math.factorial(e)
        st = chain_stats(E)
        checks = [
            st.length == expected_length,
            st.chain_count == expected_count,
            rgmax_count(st.terminus).value == 0,
            natural_value(degree(E, st.terminus))
            == math.prod(q**e for q, e in zip(fam.explicit(), exponents)),
        ]
        if st.chain_count <= _MATERIALIZE_LIMIT:
            listed = chain_stats(E, list_chains=True)
            checks.append(all(c[0] == E and c[-1] == st.terminus for c in listed.chains))
            checks.append(len(listed.chains) == st.chain_count)
        records.append(
            {
                "suite": "chains",
                "instance": render_field(E),
                "status": "ok",
                "length": st.length,
                "expected_length": expected_length,
                "chain_count": st.chain_count,
                "expected_count": expected_count,
                "match": all(checks),
            }
        )
    return records


def _lattice_chain_record(bound: int, lattices) -> dict:
    # The one brute-force cross-check: chains in the subring lattice of
    # F_{2^12} versus the descriptor-level count.
    if bound < 4096:
        return {
            "suite": "chains",
            "instance": "gf(2,12)",
            "status": "skipped",
            "reason": f"size 4096 above bound {bound}",
        }
    lattice = (lattices or {}).get(("gf", 2, 12))
    if lattice is None:
        lattice = finring.enumerate_subrings(finring.make_gf(2, 12, bound))
    chains, uniform = finring.saturated_chains(lattice)
    lengths = sorted({len(c) - 1 for c in chains})
    st = chain_stats(finite_field(2, 12))
    match = (
        uniform is True
        and lengths == [st.length]
        and len(chains) == st.chain_count
    )
    return {
        "suite": "chains",
        "instance": "gf(2,12)",
        "status": "ok",
        "lattice_chain_count": len(chains),
        "lattice_lengths": lengths,
        "stats_chain_count": st.chain_count,
        "stats_length": st.length,
        "uniform": uniform,
        "match": match,
    }
