"""Supernatural-number arithmetic, subfield lattices of F̄_p, and a
brute-force finite-ring oracle for cross-checking the theory.

The calculus half (supernat, fgset, field, affine) answers questions about
maximal subrings of absolutely algebraic fields symbolically; the oracle
half (finring, verify) enumerates subring lattices of small explicit rings
and compares them with the symbolic predictions.
"""

from .errors import (
    BoundExceededError,
    ChainOverflowError,
    InfiniteCountError,
    LatticeOverflowError,
    NonFiniteExtensionError,
    NotDivisibleError,
    ParseError,
    RingConstructionError,
    SteinitzError,
    UniverseMismatchError,
)
from .supernat import (
    FULL,
    INF,
    ONE,
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
from .fgset import (
    ALEPH_NULL,
    ExtendedCount,
    FGSet,
    PrimeFamily,
    is_maximal_fg_subset,
    maximal_fg_subsets,
    member,
    order,
    parts,
    verify_axioms,
)
from .field import (
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
    parse_field,
    render_field,
    rgmax_count,
    rgmax_list,
)
from .affine import (
    AffineDescriptor,
    Algebraic,
    AlgebraicallyClosed,
    CHAR_ZERO,
    NOT_ABSOLUTELY_ALGEBRAIC,
    TRANSCENDENTAL,
    Verdict,
    decide,
    decide_domain,
    decide_field_extension,
    decide_reduced_product,
    decide_variety,
    parse_affine,
    render_affine,
)
from .finring import (
    FiniteRing,
    SubringLattice,
    closure,
    enumerate_subrings,
    make_dual,
    make_gf,
    make_product,
    maximal_subrings,
    predict_and_compare,
    saturated_chains,
)
from .verify import run_verify

__version__ = "0.1.0"
