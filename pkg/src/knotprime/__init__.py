"""Certification of knot primality from knot Floer rank data."""

from .barred import (
    Bar,
    BarComplex,
    BarCounts,
    ComplexError,
    FilteredComplex,
    Generator,
    corollary_test,
    counts,
    graded_ranks,
    mirror,
    predict_sum_counts,
    reduce_to_bars,
    tensor,
    validate,
)
from .engine import (
    CONDITIONALLY_PRIME,
    INCONCLUSIVE,
    INVALID,
    PRIME,
    UNKNOT,
    KnotFileError,
    KnotInput,
    Verdict,
    analyze,
    batch,
    batch_files,
    build_omega,
    connected_sum,
    describe_verdict,
    fixtures_dir,
    load_knot_file,
    summary_csv,
    write_knot_file,
)
from .factor import (
    InvalidInputError,
    factor_laurent,
    is_symmetrically_irreducible,
    known_class_names,
    known_knot_matches,
    maximal_symmetric_factorizations,
)
from .laurent import (
    BivariateLaurent,
    CanonicalForm,
    LaurentError,
    MonomialUnit,
    canonicalize,
    symmetric_placement,
)

__version__ = "0.1.0"

__all__ = [
    "Bar",
    "BarComplex",
    "BarCounts",
    "BivariateLaurent",
    "CONDITIONALLY_PRIME",
    "CanonicalForm",
    "ComplexError",
    "FilteredComplex",
    "Generator",
    "INCONCLUSIVE",
    "INVALID",
    "InvalidInputError",
    "KnotFileError",
    "KnotInput",
    "LaurentError",
    "MonomialUnit",
    "PRIME",
    "UNKNOT",
    "Verdict",
    "analyze",
    "batch",
    "batch_files",
    "build_omega",
    "canonicalize",
    "connected_sum",
    "corollary_test",
    "counts",
    "describe_verdict",
    "factor_laurent",
    "fixtures_dir",
    "graded_ranks",
    "is_symmetrically_irreducible",
    "known_class_names",
    "known_knot_matches",
    "load_knot_file",
    "maximal_symmetric_factorizations",
    "mirror",
    "predict_sum_counts",
    "reduce_to_bars",
    "summary_csv",
    "symmetric_placement",
    "tensor",
    "validate",
    "write_knot_file",
    "__version__",
]
