"""Exact two-variable invariants of 2-bridge knots from 4-plat braid words.

The pipeline: parse a standard braid word, trace the orientation classes of
its syllables, multiply the eight 3x3 transfer matrices over the Laurent
ring Z[a^-1, a, m^-1, m], read the tangle coefficients off the product and
close the plat.  An independent Kauffman bracket state sum provides the
one-variable (Jones) oracle every result is checked against.
"""

from .braid import (
    Perm3,
    Syllable,
    Word,
    WordParseError,
    component_count,
    format_word,
    insert_canceling_pair,
    is_alternating_standard,
    is_knot,
    parse_word,
    permutation_of,
)
from .kauffman import (
    MAX_STATE_SUM_CROSSINGS,
    Diagram,
    SpecializationReport,
    StateSumBudgetError,
    bracket,
    diagram_of,
    jones_equal,
    kauffman_x,
    verify_specialization,
    x_of_connected_sum,
)
from .laurent import (
    BracketPoly,
    GaussInt,
    Poly2,
    PolyParseError,
    format_bracket,
    format_poly2,
    parse_bracket,
    parse_poly2,
    specialize_to_A,
)
from .orient import (
    Crossing,
    NotAKnotError,
    OrientedDiagram,
    RSequenceResult,
    k_sequence,
    r_sequence_method,
    trace_orientation,
    writhe,
)
from .rational import (
    ContinuedFraction,
    KnotTableEntry,
    UnknownKnotError,
    cf_to_word,
    lookup,
    table,
)
from .transfer import (
    DELTA,
    Matrix3,
    PlatEvaluation,
    TangleVector,
    close_plat,
    connected_sum,
    evaluate,
    fgh,
    generator_matrix,
    homfly,
    mirror,
    split_union,
    transfer_matrix,
)

__version__ = "0.1.0"
