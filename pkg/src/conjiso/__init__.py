"""Edge-isoperimetry of conjugation-invariant sets in the transposition graph on S_n."""

from .bounds import (
    claim10_check,
    jensen_chain_check,
    lemma9_lhs,
    main_theorem_ratio,
    solve_K,
    solve_kappa,
    w_bound_ingredients,
)
from .characters import (
    ClassFunction,
    character_table,
    chi_via_determinantal,
    determinantal_expansion,
    xi_bruteforce,
    xi_on_class,
    xi_two_row,
)
from .combinatorics import (
    Partition,
    class_size,
    cycle_count_census,
    cycle_type,
    derangement_count,
    dominates,
    partitions_of,
    perm_rank_lex,
    perm_unrank_lex,
)
from .optimizer import ben_efraim_check, conclusion_conjecture_check, xi_min
from .sets import (
    ConjClassSet,
    ExplicitSet,
    appendix_bound,
    boundary_bruteforce,
    boundary_via_classes,
    interaction_matrix,
    lex_segment_boundary,
    make_A_s,
    make_block_fixing,
)
from .spectral import (
    diaconis_lower_bound,
    laplacian_eigenvalue,
    spectral_boundary,
    two_row_eigenvalue,
    verify_eigenvector,
    weights,
)

__version__ = "0.1.0"

__all__ = [
    "appendix_bound",
    "ben_efraim_check",
    "boundary_bruteforce",
    "boundary_via_classes",
    "character_table",
    "chi_via_determinantal",
    "claim10_check",
    "class_size",
    "ClassFunction",
    "conclusion_conjecture_check",
    "ConjClassSet",
    "cycle_count_census",
    "cycle_type",
    "derangement_count",
    "determinantal_expansion",
    "diaconis_lower_bound",
    "dominates",
    "ExplicitSet",
    "interaction_matrix",
    "jensen_chain_check",
    "laplacian_eigenvalue",
    "lemma9_lhs",
    "lex_segment_boundary",
    "main_theorem_ratio",
    "make_A_s",
    "make_block_fixing",
    "Partition",
    "partitions_of",
    "perm_rank_lex",
    "perm_unrank_lex",
    "solve_K",
    "solve_kappa",
    "spectral_boundary",
    "two_row_eigenvalue",
    "verify_eigenvector",
    "w_bound_ingredients",
    "weights",
    "xi_bruteforce",
    "xi_min",
    "xi_on_class",
    "xi_two_row",
]
