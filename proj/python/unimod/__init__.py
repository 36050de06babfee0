"""Exact unimodularity, Hermite/Smith normal forms, and natural densities of integer matrices."""

from ._core import (
    BudgetExceeded,
    NotUnimodular,
    complete_to_gl,
    convergence_sweep,
    count_full_rank_mod_p,
    density_exact,
    density_limit,
    determinant,
    divisibility_defect,
    estimate_density,
    exhaustive_density,
    format_matrix_file,
    full_rank_minor_gcd,
    hnf,
    is_trivial_hnf,
    is_unimodular,
    local_density,
    minors,
    parse_matrix_file,
    run_cli,
    snf,
    verify_local_density,
    zeta,
)

__all__ = [name for name in dir() if not name.startswith("_")]
