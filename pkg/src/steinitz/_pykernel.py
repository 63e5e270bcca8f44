"""Pure-Python closure kernel.

Same contract as the compiled kernel in ``_ckernel``; used as the fallback
when the extension is not built and as the reference half of the kernel
benchmark.  This will be much slower than the compiled version, but the
algorithm and the returned values are identical byte for byte.

The closure algorithm never saturates element-by-element.  It maintains the
additive subgroup H spanned by a small generating list B.  Adding a new
generator x extends H by whole cosets H + j*x (each coset is disjoint from
what came before, so the extension is linear in the number of new
elements), and by distributivity the ring closure only ever needs the
pairwise products of B, not of all of H.  Per call this costs
O(|result| * rank + rank**2) table lookups instead of O(|result|**2).
"""

from __future__ import annotations

__all__ = ["prepare", "closure"]


def prepare(add, mul):
    """Convert numpy tables to nested lists; scalar indexing is faster."""
    return add.tolist(), mul.tolist()


def closure(prep, size, base_mask, base_gens, seeds):
    """Smallest unital subring containing a base subring and some seeds.

    ``base_mask`` is a bytes membership vector of an additively closed set
    containing zero (at minimum {0}); ``base_gens`` additively generates it
    and has all pairwise products inside it.  Returns the new membership
    vector as bytes plus the extended generator tuple, suitable for reuse
    as a base in later calls.
    """
    add, mul = prep
    H = bytearray(base_mask)
    members = [i for i, flag in enumerate(H) if flag]
    gens = list(base_gens)
    queue = list(seeds)
    while queue:
        x = queue.pop()
        if H[x]:
            continue
        limit = len(members)  # snapshot: cosets are taken over the old H
        y = x
        while not H[y]:
            row = add[y]
            for j in range(limit):
                t = row[members[j]]
                H[t] = 1
                members.append(t)
            y = row[x]
        gens.append(x)
        row = mul[x]
        for g in gens:
            t = row[g]
            if not H[t]:
                queue.append(t)
    return bytes(H), tuple(gens)
