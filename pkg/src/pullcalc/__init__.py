"""pullcalc: exact arithmetic for taffy pulls and rational tangles."""

from .analysis import (
    alternating_layers,
    alternating_word,
    cw_row,
    effectiveness_report,
    fibonacci,
    four_way_children,
    max_total_layers,
)
from .diagrams import (
    build_taffy,
    build_tangle,
    format_tangle,
    parse_tangle,
    render_taffy_svg,
    render_tangle_svg,
    rotate_taffy,
    tangle_number,
    verify_taffy,
)
from .kernel import USING_COMPILED
from .rationals import (
    ExtRational,
    apply_turn_rule,
    cf_eval,
    cf_expand,
    format_cf,
    make,
    neg_recip,
    parse_fraction,
    recip,
)
from .treewalk import (
    INFINITY,
    INITIAL,
    CanonicalClass,
    LayerCounts,
    canonical_word,
    canonicalize_arith,
    canonicalize_rewrite,
    equivalent,
    layer_counts,
    number_trace,
    rotate_canonical,
    slow_euclid_trace,
    taffy_number,
    word_to_cf,
)
from .words import (
    L,
    L_INV,
    R,
    R_INV,
    WordSyntaxError,
    format_word,
    invert_word,
    parse_word,
    reduce,
    to_run_form,
)

__version__ = "0.1.0"

__all__ = [
    "ExtRational",
    "CanonicalClass",
    "LayerCounts",
    "WordSyntaxError",
    "INITIAL",
    "INFINITY",
    "R",
    "L",
    "R_INV",
    "L_INV",
    "USING_COMPILED",
    "alternating_layers",
    "alternating_word",
    "apply_turn_rule",
    "build_taffy",
    "build_tangle",
    "canonical_word",
    "canonicalize_arith",
    "canonicalize_rewrite",
    "cf_eval",
    "cf_expand",
    "cw_row",
    "effectiveness_report",
    "equivalent",
    "fibonacci",
    "format_cf",
    "format_tangle",
    "format_word",
    "four_way_children",
    "invert_word",
    "layer_counts",
    "make",
    "max_total_layers",
    "neg_recip",
    "number_trace",
    "parse_fraction",
    "parse_tangle",
    "parse_word",
    "recip",
    "reduce",
    "render_taffy_svg",
    "render_tangle_svg",
    "rotate_canonical",
    "rotate_taffy",
    "slow_euclid_trace",
    "taffy_number",
    "tangle_number",
    "to_run_form",
    "verify_taffy",
    "word_to_cf",
]
