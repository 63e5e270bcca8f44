import itertools
import random

import pytest
import sympy

from steinitz.errors import (
    ChainOverflowError,
    InfiniteCountError,
    NonFiniteExtensionError,
    NotDivisibleError,
)
from steinitz.fgset import ALEPH_NULL, ExtendedCount, is_maximal_fg_subset
from steinitz.field import (
    FieldDescriptor,
    algebraic_closure,
    chain_stats,
    compositum,
    degree,
    embed_in_maximal,
    embeds_all,
    finite_field,
    finiteness_transfer,
    intermediate_count,
    intersection,
    is_subfield,
    largest_nonsubmaximal,
    render_field,
    rgmax_count,
    rgmax_list,
)
from steinitz.supernat import (
    FULL,
    INF,
    ONE,
    SupernaturalNumber,
    divides,
    from_natural,
    natural_value,
)
from steinitz.verify import random_field_descriptors, random_finite_extensions

F2_12 = finite_field(2, 12)


def test_descriptor_validation():
    with pytest.raises(ValueError):
        FieldDescriptor(4, ONE)
    with pytest.raises(ValueError):
        FieldDescriptor(True, ONE)
    assert finite_field(2, 1).content == ONE
    assert algebraic_closure(5).content == FULL


def test_rgmax_count_examples():
    assert rgmax_count(F2_12) == ExtendedCount.finite(2)
    assert rgmax_count(algebraic_closure(5)) == ExtendedCount.finite(0)
    assert rgmax_count(FieldDescriptor(3, SupernaturalNumber(default=1))) == ALEPH_NULL


def test_rgmax_list_examples():
    assert set(rgmax_list(F2_12)) == {finite_field(2, 6), finite_field(2, 4)}

    E = FieldDescriptor(7, SupernaturalNumber({2: INF, 3: 2}))
    assert rgmax_list(E) == (FieldDescriptor(7, SupernaturalNumber({2: INF, 3: 1})),)

    E = FieldDescriptor(3, SupernaturalNumber({2: 2}, default=INF))
    assert len(rgmax_list(E)) == 1

    with pytest.raises(InfiniteCountError) as exc:
        rgmax_list(FieldDescriptor(3, SupernaturalNumber(default=1)))
    assert exc.value.description == "all primes"


def test_rgmax_list_consistency():
    for E in random_field_descriptors(80, seed=5):
        subs = rgmax_list(E)
        assert len(subs) == rgmax_count(E).value
        assert len(set(subs)) == len(subs)
        for M in subs:
            assert is_maximal_fg_subset(M.fg, E.fg)
            d = natural_value(degree(E, M))
            assert d is not None and sympy.isprime(d)


def test_largest_nonsubmaximal_examples():
    assert largest_nonsubmaximal(F2_12) == finite_field(2, 1)
    E = FieldDescriptor(2, SupernaturalNumber({2: 3, 3: INF, 7: INF}))
    assert largest_nonsubmaximal(E) == FieldDescriptor(
        2, SupernaturalNumber({3: INF, 7: INF})
    )
    closure5 = algebraic_closure(5)
    assert largest_nonsubmaximal(closure5) == closure5


def test_largest_nonsubmaximal_keeps_finite_exceptions_under_inf_default():
    # a finite exception below an infinite default must be pinned at zero,
    # not swallowed back into the default
    E = FieldDescriptor(3, SupernaturalNumber({2: 3, 19: 2}, default=INF))
    L = largest_nonsubmaximal(E)
    assert L.content.exponent(2) == 0
    assert L.content.exponent(19) == 0
    assert L.content.default is INF
    assert divides(L.content, E.content)
    st = chain_stats(E)
    assert st.length == 5 and st.terminus == L


def test_largest_nonsubmaximal_properties():
    for E in random_field_descriptors(60, seed=11, allow_finite_default=True):
        L = largest_nonsubmaximal(E)
        assert rgmax_count(L) == ExtendedCount.finite(0)
        assert is_subfield(L, E)
        assert largest_nonsubmaximal(L) == L


def test_largest_nonsubmaximal_is_extremal():
    # within a small finite universe, L(E) contains every subfield that
    # has no maximal subrings
    grid = (0, 1, 2, INF)
    universe = (2, 3)
    contents = [
        SupernaturalNumber({2: a, 3: b}, 0, universe) for a in grid for b in grid
    ]
    for cE in contents:
        E = FieldDescriptor(2, cE)
        L = largest_nonsubmaximal(E)
        assert rgmax_count(L) == ExtendedCount.finite(0)
        for cF in contents:
            if divides(cF, cE) and rgmax_count(FieldDescriptor(2, cF)).value == 0:
                assert divides(cF, L.content)


def test_largest_nonsubmaximal_invariant_under_finite_extension():
    for E, K in random_finite_extensions(40, seed=3):
        assert largest_nonsubmaximal(E) == largest_nonsubmaximal(K)


def test_degree_examples():
    assert degree(F2_12, finite_field(2, 1)) == from_natural(12)
    E = FieldDescriptor(2, SupernaturalNumber({2: 2, 3: 1, 5: INF}))
    assert natural_value(degree(E, largest_nonsubmaximal(E))) == 12
    assert degree(algebraic_closure(5), algebraic_closure(5)) == ONE
    with pytest.raises(ValueError):
        degree(finite_field(2, 4), finite_field(3, 2))
    with pytest.raises(NotDivisibleError):
        degree(finite_field(2, 4), finite_field(2, 3))


def test_compositum_intersection():
    assert compositum(finite_field(2, 2), finite_field(2, 3)) == finite_field(2, 6)
    assert intersection(F2_12, finite_field(2, 8)) == finite_field(2, 4)
    assert compositum(F2_12, algebraic_closure(2)) == algebraic_closure(2)
    with pytest.raises(ValueError):
        compositum(finite_field(2, 2), finite_field(3, 2))


def chains_oracle(E):
    """Recursive descent through rgmax_list; independent of chain_stats."""
    if rgmax_count(E).value == 0:
        return [(E,)]
    out = []
    for M in rgmax_list(E):
        out.extend([(E,) + rest for rest in chains_oracle(M)])
    return out


def test_chain_stats_examples():
    st = chain_stats(F2_12)
    assert st.length == 3
    assert st.chain_count == 3
    assert st.terminus == finite_field(2, 1)
    assert st.chains is None

    st = chain_stats(algebraic_closure(3), list_chains=True)
    assert st.length == 0
    assert st.chain_count == 1
    assert st.terminus == algebraic_closure(3)
    assert st.chains == ((algebraic_closure(3),),)


@pytest.mark.parametrize(
    "content",
    [
        {2: 2, 3: 1},
        {2: 3},
        {2: 1, 3: 1, 5: 1},
        {2: 2, 3: 2},
        {2: 2, 5: INF},
        {2: 1, 3: 1, 7: INF, 11: INF},
    ],
)
def test_chain_stats_against_descent_oracle(content):
    E = FieldDescriptor(2, SupernaturalNumber(content))
    st = chain_stats(E, list_chains=True)
    expected = chains_oracle(E)
    assert st.chain_count == len(expected)
    assert sorted(st.chains, key=str) == sorted(expected, key=str)
    finite_sum = sum(e for _, e in content.items() if e is not INF)
    for chain in st.chains:
        assert len(chain) - 1 == st.length == finite_sum
        assert chain[0] == E
        assert chain[-1] == largest_nonsubmaximal(E)
        for upper, lower in zip(chain, chain[1:]):
            assert is_maximal_fg_subset(lower.fg, upper.fg)


def test_chain_stats_errors():
    with pytest.raises(InfiniteCountError):
        chain_stats(FieldDescriptor(2, SupernaturalNumber(default=1)))
    with pytest.raises(ChainOverflowError):
        chain_stats(F2_12, max_chains=2)


def test_intermediate_count_examples():
    assert intermediate_count(F2_12, finite_field(2, 1)) == ExtendedCount.finite(6)
    assert intermediate_count(F2_12, F2_12) == ExtendedCount.finite(1)
    E = FieldDescriptor(2, SupernaturalNumber({2: 1, 3: 1, 5: INF}))
    L = largest_nonsubmaximal(E)
    assert intermediate_count(E, L) == ExtendedCount.finite(4)
    with pytest.raises(NonFiniteExtensionError):
        intermediate_count(algebraic_closure(2), finite_field(2, 1))


def test_intermediate_count_is_divisor_count():
    rng = random.Random(31)
    for _ in range(60):
        n = rng.randrange(1, 400)
        E = finite_field(3, n)
        assert intermediate_count(E, finite_field(3, 1)).value == sympy.divisor_count(n)


def test_embeds_all():
    assert embeds_all(F2_12)
    assert not embeds_all(FieldDescriptor(7, SupernaturalNumber({2: INF, 3: 2})))
    assert not embeds_all(algebraic_closure(7))


def test_embed_in_maximal_examples():
    result = embed_in_maximal(F2_12, finite_field(2, 2))
    assert result.maximal == finite_field(2, 6)
    assert result.blocking_prime is None

    # 2 has infinite order and the subfield exhausts the cap at 3
    E = FieldDescriptor(7, SupernaturalNumber({2: INF, 3: 2}))
    F = FieldDescriptor(7, SupernaturalNumber({3: 2}))
    result = embed_in_maximal(E, F)
    assert result.maximal is None
    assert result.blocking_prime == 2

    for M in rgmax_list(F2_12):
        assert embed_in_maximal(F2_12, M).maximal == M


def test_embed_in_maximal_generic_cases():
    # a uniform finite default leaves every prime admissible; the smallest
    # unused prime is decremented
    E = FieldDescriptor(2, SupernaturalNumber(default=2))
    F = FieldDescriptor(2, SupernaturalNumber(default=1))
    result = embed_in_maximal(E, F)
    assert result.maximal == FieldDescriptor(2, SupernaturalNumber({2: 1}, default=2))

    result = embed_in_maximal(algebraic_closure(2), finite_field(2, 1))
    assert result.maximal is None
    assert result.blocking_prime == 2


def test_embed_in_maximal_soundness():
    rng = random.Random(17)
    for E in random_field_descriptors(60, seed=23):
        if E.content == ONE:
            continue
        table = {
            q: (e if e is INF and rng.random() < 0.5 else 0)
            for q, e in E.content.exceptions
        }
        F = FieldDescriptor(E.characteristic, SupernaturalNumber(table))
        if F == E:
            continue
        result = embed_in_maximal(E, F)
        if result.maximal is not None:
            assert result.maximal in rgmax_list(E)
            assert is_subfield(F, result.maximal)
        else:
            assert not embeds_all(E)
            assert E.content.exponent(result.blocking_prime) is INF
            assert F.content.exponent(result.blocking_prime) is not INF


def test_embed_in_maximal_rejects():
    with pytest.raises(ValueError):
        embed_in_maximal(F2_12, F2_12)
    with pytest.raises(ValueError):
        embed_in_maximal(F2_12, finite_field(2, 5))
    with pytest.raises(ValueError):
        embed_in_maximal(F2_12, finite_field(3, 2))


def test_is_subfield():
    assert is_subfield(finite_field(2, 2), F2_12)
    assert is_subfield(finite_field(2, 3), F2_12)
    assert not is_subfield(finite_field(2, 8), F2_12)
    assert not is_subfield(finite_field(2, 2), finite_field(3, 2))
    over_universe = FieldDescriptor(2, SupernaturalNumber({2: 1}, universe=(2, 3)))
    assert not is_subfield(over_universe, F2_12)


def test_finiteness_transfer():
    assert finiteness_transfer(finite_field(2, 1), F2_12)
    for E in random_field_descriptors(30, seed=77):
        assert finiteness_transfer(largest_nonsubmaximal(E), E)
    with pytest.raises(ValueError):
        finiteness_transfer(finite_field(2, 5), F2_12)
    with pytest.raises(NonFiniteExtensionError):
        finiteness_transfer(finite_field(2, 1), algebraic_closure(2))


def test_finiteness_equivalence():
    # finitely many maximal subrings exactly when the degree over the
    # largest nonsubmaximal subfield is a natural number
    for E in random_field_descriptors(200, seed=13, allow_finite_default=True):
        fin = rgmax_count(E).is_finite
        deg = degree(E, largest_nonsubmaximal(E))
        assert fin == (natural_value(deg) is not None)


def test_saturated_chain_lengths_exhaustive():
    # every saturated descending chain has the same length and terminus,
    # exhausted over all exponent vectors with sum <= 6 on three primes
    for exps in itertools.product(range(4), repeat=3):
        if not 0 < sum(exps) <= 6:
            continue
        content = {q: e for q, e in zip((2, 3, 5), exps) if e}
        E = FieldDescriptor(2, SupernaturalNumber(content))
        chains = chains_oracle(E)
        assert {len(c) - 1 for c in chains} == {sum(exps)}
        assert {c[-1] for c in chains} == {largest_nonsubmaximal(E)}
        st = chain_stats(E)
        assert st.chain_count == len(chains)


def test_render_is_stable():
    assert render_field(F2_12) == "char=2; 2^2,3"
    assert render_field(algebraic_closure(5)) == "char=5; 1; rest=inf"
    assert str(F2_12) == render_field(F2_12)
