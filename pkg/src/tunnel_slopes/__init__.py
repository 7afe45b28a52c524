"""Exact slope-sequence invariants of (1,1)-knot tunnels.

A knot drawn as a 2-strand braid in a thickened torus has an upper and a
lower tunnel, and each tunnel is classified by a finite sequence of
rational slopes.  This package converts braid words to slope sequences and
back with exact arithmetic, and provides closed forms and recognizers for
the 2-bridge and torus knot families.
"""

from .braid import (
    GENERATORS,
    BraidWord,
    double_coset_trim,
    format_word,
    parse_word,
    reverse_word,
    segment,
    subgroup_normal_form,
    subgroup_slope,
    winding_number,
    word,
)
from .errors import DomainError, ParseError
from .exact_arith import (
    INFINITY,
    MAT_IDENTITY,
    MAT_L,
    MAT_U,
    Mat2,
    SimpleSlope,
    cf_eval,
    expand_all_even,
    expand_odd_numerator,
    mod_inverse,
)
from .knot_families import (
    REJECTION_I,
    REJECTION_II,
    REJECTION_III,
    REJECTION_IV,
    Rejection,
    TwoBridge,
    TwoBridgeReport,
    find_two_bridge,
    is_toroidal,
    lower_simple_word,
    semisimple_slopes_closed_form,
    staircase,
    toroidal_braid_word,
    torus_braid_word,
    torus_lower_slopes,
    torus_upper_slopes,
    two_bridge_tunnels,
    upper_semisimple_word,
)
from .slope_engine import (
    SlopeSequence,
    braid_from_slopes,
    dual_slopes,
    format_slopes,
    lower_slopes,
    parse_slopes,
    peephole,
    upper_slopes,
)

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "DomainError",
    "GENERATORS",
    "INFINITY",
    "MAT_IDENTITY",
    "MAT_L",
    "MAT_U",
    "Mat2",
    "ParseError",
    "REJECTION_I",
    "REJECTION_II",
    "REJECTION_III",
    "REJECTION_IV",
    "Rejection",
    "SimpleSlope",
    "SlopeSequence",
    "TwoBridge",
    "TwoBridgeReport",
    "braid_from_slopes",
    "cf_eval",
    "double_coset_trim",
    "dual_slopes",
    "expand_all_even",
    "expand_odd_numerator",
    "find_two_bridge",
    "format_slopes",
    "format_word",
    "is_toroidal",
    "lower_simple_word",
    "lower_slopes",
    "mod_inverse",
    "parse_slopes",
    "parse_word",
    "peephole",
    "reverse_word",
    "segment",
    "semisimple_slopes_closed_form",
    "staircase",
    "subgroup_normal_form",
    "subgroup_slope",
    "toroidal_braid_word",
    "torus_braid_word",
    "torus_lower_slopes",
    "torus_upper_slopes",
    "two_bridge_tunnels",
    "upper_semisimple_word",
    "upper_slopes",
    "winding_number",
    "word",
    "__version__",
]
