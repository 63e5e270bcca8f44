import pytest
from hypothesis import given, strategies as st

from steinitz.affine import (
    CHAR_ZERO,
    FINITELY_MANY,
    INFINITELY_MANY,
    NECESSARY_CONDITIONS_HOLD,
    NOT_ABSOLUTELY_ALGEBRAIC,
    TRANSCENDENTAL,
    VIOLATED,
    AffineDescriptor,
    Algebraic,
    AlgebraicallyClosed,
    decide,
    decide_domain,
    decide_field_extension,
    decide_reduced_product,
    decide_variety,
)
from steinitz.fgset import ALEPH_NULL, ExtendedCount
from steinitz.field import FieldDescriptor, algebraic_closure, finite_field
from steinitz.supernat import INF, SupernaturalNumber

F2 = finite_field(2, 1)
F4 = finite_field(2, 2)
E_INF = FieldDescriptor(2, SupernaturalNumber({3: 2}, INF))


def test_domain_example():
    d = AffineDescriptor(F2, "domain", (Algebraic(4), Algebraic(6)))
    v = decide_domain(d)
    assert v.outcome == FINITELY_MANY
    assert v.resulting_field == finite_field(2, 12)
    assert v.count == ExtendedCount(2)


def test_marker_bases_sink_domains():
    v = decide_domain(AffineDescriptor(CHAR_ZERO, "domain"))
    assert v.outcome == INFINITELY_MANY and v.reason == "zero-characteristic"

    v = decide_domain(AffineDescriptor(NOT_ABSOLUTELY_ALGEBRAIC, "domain"))
    assert v.outcome == INFINITELY_MANY and v.reason == "not-absolutely-algebraic"

    v = decide_domain(AffineDescriptor(AlgebraicallyClosed(), "domain"))
    assert v.outcome == INFINITELY_MANY and v.reason == "not-absolutely-algebraic"


def test_closed_absolutely_algebraic_base():
    base = AlgebraicallyClosed(algebraic_closure(2))
    v = decide_domain(AffineDescriptor(base, "domain", (Algebraic(5),)))
    assert v.outcome == FINITELY_MANY
    assert v.resulting_field == algebraic_closure(2)
    assert v.count == ExtendedCount(0)


def test_transcendental_generator_sinks():
    d = AffineDescriptor(F2, "domain", (Algebraic(4), TRANSCENDENTAL))
    v = decide_domain(d)
    assert v.outcome == INFINITELY_MANY and v.reason == "transcendental-generator"
    assert v.resulting_field is None and v.count is None


def test_field_extension_examples():
    base = FieldDescriptor(5, SupernaturalNumber({}, 1))
    v = decide_field_extension(AffineDescriptor(base, "field", (Algebraic(2),)))
    assert v.outcome == INFINITELY_MANY and v.reason == "infinite-maximal-subrings"

    v = decide_field_extension(AffineDescriptor(finite_field(5, 1), "field"))
    assert v.outcome == FINITELY_MANY and v.count == ExtendedCount(0)


def test_kind_mismatch_rejected():
    d = AffineDescriptor(F2, "domain")
    with pytest.raises(ValueError):
        decide_field_extension(d)
    with pytest.raises(ValueError):
        decide_reduced_product(d)
    with pytest.raises(ValueError):
        decide_domain(AffineDescriptor(F2, "field"))


@given(
    st.sampled_from((2, 3, 5)),
    st.lists(
        st.one_of(st.integers(1, 12).map(Algebraic), st.just(TRANSCENDENTAL)),
        max_size=3,
    ),
)
def test_domain_and_field_verdicts_agree(p, gens):
    # F[alpha...] and F(alpha...) always land on the same verdict
    dom = decide_domain(AffineDescriptor(finite_field(p, 1), "domain", gens))
    fld = decide_field_extension(AffineDescriptor(finite_field(p, 1), "field", gens))
    assert dom == fld
    if any(g is TRANSCENDENTAL for g in gens):
        assert dom.outcome == INFINITELY_MANY
    else:
        assert dom.outcome == FINITELY_MANY


@given(st.lists(st.integers(1, 10).map(Algebraic), min_size=1, max_size=3))
def test_adding_generators_never_shrinks_the_count(gens):
    base = decide_domain(AffineDescriptor(F2, "domain", gens[:-1]))
    more = decide_domain(AffineDescriptor(F2, "domain", gens))
    assert more.count.value >= base.count.value


def test_reduced_product_necessary_conditions_hold():
    d = AffineDescriptor(F2, "reduced_product", components=(F4, F4))
    v = decide_reduced_product(d)
    assert v.outcome == NECESSARY_CONDITIONS_HOLD
    assert v.reason is None and v.witness is None


def test_reduced_product_duplicate_infinite_component():
    d = AffineDescriptor(E_INF, "reduced_product", components=(E_INF, E_INF))
    v = decide_reduced_product(d)
    assert v.outcome == VIOLATED
    assert v.reason == "duplicate-infinite-component"
    assert v.witness == (1, 2)


def test_reduced_product_distinct_infinite_components():
    base = FieldDescriptor(2, SupernaturalNumber({3: 1}, INF))
    other = FieldDescriptor(2, SupernaturalNumber({3: 3}, INF))
    d = AffineDescriptor(base, "reduced_product", components=(E_INF, other))
    assert decide_reduced_product(d).outcome == NECESSARY_CONDITIONS_HOLD


def test_reduced_product_component_with_infinitely_many_maximal():
    bad = FieldDescriptor(2, SupernaturalNumber({}, 1))
    d = AffineDescriptor(F2, "reduced_product", components=(bad, F4))
    v = decide_reduced_product(d)
    assert v.outcome == VIOLATED
    assert v.reason == "infinite-maximal-subrings"
    assert v.witness == (1,)


def test_reduced_product_infinite_degree_component():
    closure2 = algebraic_closure(2)
    d = AffineDescriptor(F2, "reduced_product", components=(closure2, closure2))
    v = decide_reduced_product(d)
    assert v.outcome == VIOLATED
    assert v.reason == "infinite-degree-component"
    assert v.witness == (1,)


def test_reduced_product_singleton_delegates():
    d = AffineDescriptor(F2, "reduced_product", components=(F4,))
    v = decide_reduced_product(d)
    assert v == decide_field_extension(AffineDescriptor(F4, "field"))
    assert v.resulting_field == F4


def test_reduced_product_rejects_bad_shapes():
    with pytest.raises(ValueError):
        AffineDescriptor(F2, "reduced_product", components=(finite_field(3, 1),))
    with pytest.raises(ValueError):
        AffineDescriptor(F2, "reduced_product")
    with pytest.raises(ValueError):
        AffineDescriptor(CHAR_ZERO, "reduced_product", components=(F2,))
    d = AffineDescriptor(F4, "reduced_product", components=(F2, F2))
    with pytest.raises(ValueError):
        decide_reduced_product(d)  # components do not contain the base


def test_variety_finite_field():
    v = decide_variety(F4, ExtendedCount(3))
    assert v.outcome == FINITELY_MANY
    assert v.resulting_field is None and v.count is None


def test_variety_single_point_over_infinite_field():
    v = decide_variety(E_INF, ExtendedCount(1))
    assert v.outcome == FINITELY_MANY
    assert v.resulting_field == E_INF
    assert v.count == ExtendedCount(1)


def test_variety_rejections_and_sinks():
    v = decide_variety(E_INF, ExtendedCount(2))
    assert v.outcome == INFINITELY_MANY
    assert v.reason == "multiple-points-over-infinite-field"

    v = decide_variety(F4, ALEPH_NULL)
    assert v.outcome == INFINITELY_MANY and v.reason == "infinite-point-set"

    with pytest.raises(ValueError):
        decide_variety(F4, ExtendedCount(0))

    v = decide_variety(CHAR_ZERO, ExtendedCount(1))
    assert v.outcome == INFINITELY_MANY and v.reason == "zero-characteristic"

    v = decide_variety(AlgebraicallyClosed(algebraic_closure(3)), ExtendedCount(1))
    assert v.outcome == FINITELY_MANY and v.count == ExtendedCount(0)

    v = decide_variety(AlgebraicallyClosed(), ExtendedCount(1))
    assert v.outcome == INFINITELY_MANY and v.reason == "not-absolutely-algebraic"


def test_decide_routes_by_kind():
    assert decide(AffineDescriptor(F2, "domain")).outcome == FINITELY_MANY
    assert decide(AffineDescriptor(F2, "field")).outcome == FINITELY_MANY
    prod = AffineDescriptor(F2, "reduced_product", components=(F4, F4))
    assert decide(prod).outcome == NECESSARY_CONDITIONS_HOLD
    var = AffineDescriptor(F4, "variety", points=ExtendedCount(5))
    assert decide(var).outcome == FINITELY_MANY


def test_descriptor_validation():
    with pytest.raises(ValueError):
        AffineDescriptor(F2, "module")
    with pytest.raises(ValueError):
        AffineDescriptor(F2, "variety", (Algebraic(2),), points=ExtendedCount(1))
    with pytest.raises(ValueError):
        AffineDescriptor(F2, "variety")  # no point count
    with pytest.raises(ValueError):
        AffineDescriptor(F2, "domain", points=ExtendedCount(1))
    with pytest.raises(ValueError):
        AffineDescriptor(F2, "domain", components=(F4,))
    with pytest.raises(ValueError):
        AffineDescriptor(F2, "domain", ("alg(4)",))
    with pytest.raises(ValueError):
        Algebraic(0)
    with pytest.raises(ValueError):
        AlgebraicallyClosed(F4)  # content is not full


def test_generators_respect_base_universe():
    base = FieldDescriptor(2, SupernaturalNumber({2: 1}, universe=(2, 3)))
    v = decide_domain(AffineDescriptor(base, "domain", (Algebraic(12),)))
    assert v.outcome == FINITELY_MANY
    assert v.resulting_field.content == SupernaturalNumber(
        {2: 2, 3: 1}, universe=(2, 3)
    )
    with pytest.raises(ValueError):
        decide_domain(AffineDescriptor(base, "domain", (Algebraic(5),)))
