"""Roots of Gaussian-integer polynomials by sequence replacement and symbol
counting, with an exact matrix-iteration engine and a compass-and-straightedge
rendering of the one final division."""

from .construction import (
    ConstructionStep,
    ConstructionTrace,
    MalformedTrace,
    Point,
    StepKind,
    ZeroDenominator,
    evaluate_trace,
    plan_quotient_construction,
    render_svg,
)
from .gaussian import (
    DivisionByZero,
    GaussInt,
    GaussRational,
    gauss_divide,
    gauss_to_text,
    to_float,
)
from .iteration import (
    DegenerateDenominator,
    DimensionMismatch,
    IterationRecord,
    RootEstimate,
    ScanHit,
    ShiftParams,
    SolveOptions,
    SolveStatus,
    estimate_root,
    scan_shifts,
    solve,
    step_counts,
)
from .matrices import (
    RealBlockMatrix,
    ReplacementMatrix,
    ZeroBeta,
    companion,
    complexify,
    shift,
)
from .polynomial import (
    DegreeZero,
    LeadingZero,
    ParseError,
    Polynomial,
    evaluate_residual,
    parse_gauss_literal,
    parse_polynomial,
    polynomial_to_text,
)
from .rewriting import (
    CapExceeded,
    CountVector,
    RuleTable,
    Word,
    cancel_conjugates,
    conjugate_symbol,
    count,
    derive_rules,
    iterate_words,
    rewrite_word,
    word_from_counts,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "ConstructionStep",
    "ConstructionTrace",
    "CountVector",
    "DegenerateDenominator",
    "DegreeZero",
    "DimensionMismatch",
    "DivisionByZero",
    "GaussInt",
    "GaussRational",
    "IterationRecord",
    "LeadingZero",
    "MalformedTrace",
    "ParseError",
    "Point",
    "Polynomial",
    "RealBlockMatrix",
    "ReplacementMatrix",
    "RootEstimate",
    "RuleTable",
    "ScanHit",
    "ShiftParams",
    "SolveOptions",
    "SolveStatus",
    "StepKind",
    "Word",
    "ZeroBeta",
    "ZeroDenominator",
    "cancel_conjugates",
    "companion",
    "complexify",
    "conjugate_symbol",
    "count",
    "derive_rules",
    "estimate_root",
    "evaluate_residual",
    "evaluate_trace",
    "gauss_divide",
    "gauss_to_text",
    "iterate_words",
    "parse_gauss_literal",
    "parse_polynomial",
    "plan_quotient_construction",
    "polynomial_to_text",
    "render_svg",
    "rewrite_word",
    "scan_shifts",
    "shift",
    "solve",
    "step_counts",
    "to_float",
    "word_from_counts",
]
