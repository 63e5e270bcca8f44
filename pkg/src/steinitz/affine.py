"""Finiteness verdicts for affine algebras over described fields.

The decision procedures answer one question: does the described algebra
have finitely many maximal subrings?  Domains and field extensions get a
definitive answer.  For reduced products with two or more components only
the necessary conditions are decidable here, so the verdict is
NecessaryConditionsHold or Violated rather than an overclaimed
FinitelyMany.

Bases that cannot be represented by a field descriptor at all (zero
characteristic, fields that are not absolutely algebraic, abstract
algebraically closed fields) are explicit markers; they always force
infinitely many maximal subrings, and the marker keeps those verdicts
reachable without modeling such fields.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce

from .errors import ParseError
from .fgset import ALEPH_NULL, ExtendedCount, _factor
from .field import (
    FieldDescriptor,
    algebraic_closure,
    degree,
    is_subfield,
    parse_field,
    render_field,
    rgmax_count,
)
from .supernat import FULL, SupernaturalNumber, join, natural_value

__all__ = [
    "CHAR_ZERO",
    "NOT_ABSOLUTELY_ALGEBRAIC",
    "TRANSCENDENTAL",
    "Algebraic",
    "AlgebraicallyClosed",
    "AffineDescriptor",
    "Verdict",
    "FINITELY_MANY",
    "INFINITELY_MANY",
    "NECESSARY_CONDITIONS_HOLD",
    "VIOLATED",
    "decide",
    "decide_domain",
    "decide_field_extension",
    "decide_reduced_product",
    "decide_variety",
    "parse_affine",
    "render_affine",
]


class _Marker:
    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name

    def __repr__(self) -> str:
        return self.name


CHAR_ZERO = _Marker("CharZero")
NOT_ABSOLUTELY_ALGEBRAIC = _Marker("NotAbsolutelyAlgebraic")
TRANSCENDENTAL = _Marker("Transcendental")


@dataclass(frozen=True)
class AlgebraicallyClosed:
    """An algebraically closed base; ``field`` names F̄_p, None is abstract.

    The abstract form covers closed fields that are not algebraic over a
    prime field (those always have infinitely many maximal subrings).
    """

    field: FieldDescriptor | None = None

    def __post_init__(self):
        if self.field is not None and self.field.content != FULL:
            raise ValueError("a closed absolutely algebraic field has full content")


@dataclass(frozen=True)
class Algebraic:
    """A generator lying in (and generating) F_{p^k} over the prime field."""

    container_exponent: int

    def __post_init__(self):
        if not isinstance(self.container_exponent, int) or self.container_exponent < 1:
            raise ValueError("the container exponent must be a natural number >= 1")


_KINDS = ("domain", "field", "reduced_product", "variety")


@dataclass(frozen=True)
class AffineDescriptor:
    """A symbolically described affine algebra: base, generators, shape.

    ``components`` is used only by reduced products and ``points`` only by
    varieties; the constructor rejects mismatched combinations.
    """

    base: object
    kind: str
    generators: tuple = ()
    components: tuple[FieldDescriptor, ...] = ()
    points: ExtendedCount | None = None

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "components", tuple(self.components))
        if self.kind not in _KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; choices: {_KINDS}")
        for g in self.generators:
            if g is not TRANSCENDENTAL and not isinstance(g, Algebraic):
                raise ValueError(f"bad generator {g!r}")
        if self.kind == "reduced_product":
            if not self.components:
                raise ValueError("a reduced product needs at least one component")
            if not isinstance(self.base, FieldDescriptor):
                raise ValueError("a reduced product needs a field descriptor base")
            for c in self.components:
                if c.characteristic != self.base.characteristic:
                    raise ValueError("mixed characteristics in reduced product")
        elif self.components:
            raise ValueError("components are only meaningful for reduced products")
        if self.kind == "variety":
            if self.points is None:
                raise ValueError("a variety descriptor needs a point count")
            if self.generators:
                raise ValueError("a variety descriptor takes no generators")
        elif self.points is not None:
            raise ValueError("point counts are only meaningful for varieties")


FINITELY_MANY = "finitely-many"
INFINITELY_MANY = "infinitely-many"
NECESSARY_CONDITIONS_HOLD = "necessary-conditions-hold"
VIOLATED = "violated"


@dataclass(frozen=True)
class Verdict:
    """Structured answer of a decision procedure.

    ``reason`` is a stable slug: zero-characteristic,
    not-absolutely-algebraic, transcendental-generator,
    infinite-maximal-subrings, infinite-degree-component,
    duplicate-infinite-component, infinite-point-set,
    multiple-points-over-infinite-field.  ``witness`` holds 1-based
    component indices for Violated verdicts.
    """

    outcome: str
    resulting_field: FieldDescriptor | None = None
    count: ExtendedCount | None = None
    reason: str | None = None
    witness: tuple[int, ...] | None = None


def _field_verdict(E: FieldDescriptor) -> Verdict:
    n = rgmax_count(E)
    if n.is_finite:
        return Verdict(FINITELY_MANY, resulting_field=E, count=n)
    return Verdict(INFINITELY_MANY, reason="infinite-maximal-subrings")


def _decide_field_like(d: AffineDescriptor) -> Verdict:
    if d.base is CHAR_ZERO:
        return Verdict(INFINITELY_MANY, reason="zero-characteristic")
    if d.base is NOT_ABSOLUTELY_ALGEBRAIC:
        return Verdict(INFINITELY_MANY, reason="not-absolutely-algebraic")
    if isinstance(d.base, AlgebraicallyClosed) and d.base.field is None:
        return Verdict(INFINITELY_MANY, reason="not-absolutely-algebraic")
    if any(g is TRANSCENDENTAL for g in d.generators):
        return Verdict(INFINITELY_MANY, reason="transcendental-generator")
    base = d.base.field if isinstance(d.base, AlgebraicallyClosed) else d.base
    if not isinstance(base, FieldDescriptor):
        raise ValueError(f"bad base {d.base!r}")
    content = reduce(
        join,
        (
            SupernaturalNumber(
                _factor(g.container_exponent, "container exponent"),
                universe=base.content.universe,
            )
            for g in d.generators
        ),
        base.content,
    )
    return _field_verdict(FieldDescriptor(base.characteristic, content))


def decide_domain(d: AffineDescriptor) -> Verdict:
    """Does F[α_1,…,α_n] have finitely many maximal subrings?

    Yes exactly when the base does and every generator is algebraic; the
    resulting field is the compositum of the base with the containers.
    """
    if d.kind != "domain":
        raise ValueError("decide_domain expects kind=domain")
    return _decide_field_like(d)


def decide_field_extension(d: AffineDescriptor) -> Verdict:
    """Does F(α_1,…,α_n) have finitely many maximal subrings?

    Identical to the domain decision: with algebraic generators the two
    algebras coincide, and a transcendental generator sinks both.
    """
    if d.kind != "field":
        raise ValueError("decide_field_extension expects kind=field")
    return _decide_field_like(d)


def decide_reduced_product(d: AffineDescriptor) -> Verdict:
    """Check the necessary conditions for a reduced product K_1×…×K_m.

    A single component delegates to the field decision.  With several
    components: every component must have finitely many maximal subrings
    and finite degree over the base, and no two infinite components may
    coincide.  Passing all checks is still only NecessaryConditionsHold;
    sufficiency is not decided here.
    """
    if d.kind != "reduced_product":
        raise ValueError("decide_reduced_product expects kind=reduced_product")
    if len(d.components) == 1:
        return _field_verdict(d.components[0])
    for i, K in enumerate(d.components, start=1):
        if not is_subfield(d.base, K):
            raise ValueError(f"component {i} does not contain the base field")
        if not rgmax_count(K).is_finite:
            return Verdict(VIOLATED, reason="infinite-maximal-subrings", witness=(i,))
        if natural_value(degree(K, d.base)) is None:
            return Verdict(VIOLATED, reason="infinite-degree-component", witness=(i,))
    for i in range(len(d.components)):
        if natural_value(d.components[i].content) is not None:
            continue
        for j in range(i + 1, len(d.components)):
            if d.components[i] == d.components[j]:
                return Verdict(
                    VIOLATED,
                    reason="duplicate-infinite-component",
                    witness=(i + 1, j + 1),
                )
    return Verdict(NECESSARY_CONDITIONS_HOLD)


def decide_variety(F, point_count: ExtendedCount) -> Verdict:
    """Finiteness of maximal subrings of a coordinate ring F[V].

    A finite point set over a finite field gives a finite ring; over an
    infinite field only a single point can work, and then F[V] = F.
    """
    if point_count.is_finite and point_count.value < 1:
        raise ValueError("a variety has at least one point")
    if not point_count.is_finite:
        return Verdict(INFINITELY_MANY, reason="infinite-point-set")
    if isinstance(F, FieldDescriptor) and natural_value(F.content) is not None:
        return Verdict(FINITELY_MANY)
    # Infinite base field from here on.
    if point_count.value > 1:
        return Verdict(INFINITELY_MANY, reason="multiple-points-over-infinite-field")
    if F is CHAR_ZERO:
        return Verdict(INFINITELY_MANY, reason="zero-characteristic")
    if F is NOT_ABSOLUTELY_ALGEBRAIC:
        return Verdict(INFINITELY_MANY, reason="not-absolutely-algebraic")
    if isinstance(F, AlgebraicallyClosed):
        if F.field is None:
            return Verdict(INFINITELY_MANY, reason="not-absolutely-algebraic")
        return _field_verdict(F.field)
    if isinstance(F, FieldDescriptor):
        return _field_verdict(F)
    raise ValueError(f"bad base {F!r}")


def decide(d: AffineDescriptor) -> Verdict:
    """Route a descriptor to the decision procedure for its kind."""
    if d.kind == "domain":
        return decide_domain(d)
    if d.kind == "field":
        return decide_field_extension(d)
    if d.kind == "reduced_product":
        return decide_reduced_product(d)
    return decide_variety(d.base, d.points)


# ---------------------------------------------------------------------------
# Grammar:
#   affine: base=<B>; gens=alg(4),alg(6),transc; kind=domain
#   affine: base=<B>; kind=reduced_product; comps=<fd>|<fd>
#   affine: base=<B>; kind=variety; points=<N|inf>
# where <B> is a field descriptor, char0, nonabsalg, closed or closed(p).
# Keys after base may come in any order; base must come first because
# field descriptors contain semicolons themselves.
# ---------------------------------------------------------------------------

_PREFIX = re.compile(r"affine:\s*")
_KEY_SPLIT = re.compile(r";\s*(gens|kind|comps|points)=")
_CLOSED = re.compile(r"closed\((\d+)\)\Z")
_ALG = re.compile(r"alg\((\d+)\)\Z")


def _parse_base(text: str, pos: int):
    if text == "char0":
        return CHAR_ZERO
    if text == "nonabsalg":
        return NOT_ABSOLUTELY_ALGEBRAIC
    if text == "closed":
        return AlgebraicallyClosed()
    m = _CLOSED.match(text)
    if m:
        return AlgebraicallyClosed(algebraic_closure(int(m.group(1))))
    try:
        return parse_field(text)
    except ParseError as exc:
        raise ParseError(exc.args[0].rsplit(" (position", 1)[0], pos + exc.position) from None


def _parse_generators(text: str, pos: int) -> tuple:
    if not text:
        return ()
    gens = []
    offset = 0
    for tok in text.split(","):
        stripped = tok.strip()
        if stripped == "transc":
            gens.append(TRANSCENDENTAL)
        else:
            m = _ALG.match(stripped)
            if not m:
                raise ParseError(f"bad generator {stripped!r}", pos + offset)
            gens.append(Algebraic(int(m.group(1))))
        offset += len(tok) + 1
    return tuple(gens)


def parse_affine(text: str) -> AffineDescriptor:
    m = _PREFIX.match(text)
    if not m:
        raise ParseError("an affine descriptor starts with 'affine:'", 0)
    body_start = m.end()
    body = text[body_start:]
    if not body.startswith("base="):
        raise ParseError("expected base=", body_start)
    fields = _KEY_SPLIT.split(body)
    seen: dict[str, tuple[str, int]] = {}
    cursor = body_start + len(fields[0])
    base_text = fields[0][len("base=") :]
    base_pos = body_start + len("base=")
    for i in range(1, len(fields), 2):
        key, value = fields[i], fields[i + 1]
        sep = _KEY_SPLIT.match(body[cursor - body_start :])
        # position of the value: after '; key='
        value_pos = cursor + (sep.end() if sep else 0)
        if key in seen:
            raise ParseError(f"duplicate key {key}", value_pos)
        seen[key] = (value, value_pos)
        cursor = value_pos + len(value)
    base = _parse_base(base_text.strip(), base_pos)
    gens = ()
    if "gens" in seen:
        gens = _parse_generators(seen["gens"][0].strip(), seen["gens"][1])
    if "kind" not in seen:
        raise ParseError("missing kind=", len(text))
    kind, kind_pos = seen["kind"]
    kind = kind.strip()
    if kind not in _KINDS:
        raise ParseError(f"unknown kind {kind!r}", kind_pos)
    comps: tuple[FieldDescriptor, ...] = ()
    if "comps" in seen:
        value, pos = seen["comps"]
        offset = 0
        out = []
        for piece in value.split("|"):
            try:
                out.append(parse_field(piece.strip()))
            except ParseError as exc:
                raise ParseError(
                    exc.args[0].rsplit(" (position", 1)[0], pos + offset + exc.position
                ) from None
            offset += len(piece) + 1
        comps = tuple(out)
    points = None
    if "points" in seen:
        value, pos = seen["points"]
        value = value.strip()
        if value == "inf":
            points = ALEPH_NULL
        elif value.isdigit():
            points = ExtendedCount.finite(int(value))
        else:
            raise ParseError(f"bad point count {value!r}", pos)
    try:
        return AffineDescriptor(
            base=base, kind=kind, generators=gens, components=comps, points=points
        )
    except ValueError as exc:
        raise ParseError(str(exc), body_start) from None


def _render_base(base) -> str:
    if base is CHAR_ZERO:
        return "char0"
    if base is NOT_ABSOLUTELY_ALGEBRAIC:
        return "nonabsalg"
    if isinstance(base, AlgebraicallyClosed):
        if base.field is None:
            return "closed"
        return f"closed({base.field.characteristic})"
    return render_field(base)


def render_affine(d: AffineDescriptor) -> str:
    parts = [f"base={_render_base(d.base)}"]
    if d.generators:
        parts.append(
            "gens="
            + ",".join(
                "transc" if g is TRANSCENDENTAL else f"alg({g.container_exponent})"
                for g in d.generators
            )
        )
    parts.append(f"kind={d.kind}")
    if d.components:
        parts.append("comps=" + "|".join(render_field(c) for c in d.components))
    if d.points is not None:
        parts.append("points=" + ("inf" if not d.points.is_finite else str(d.points.value)))
    return "affine: " + "; ".join(parts)
