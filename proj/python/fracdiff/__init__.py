"""Time-fractional diffusion solver (Volterra form) with convergence tooling."""

from ._fracdiff import (
    ConvergenceError,
    UsageError,
    apply_delta_x2,
    apply_hh,
    gamma,
    mittag_leffler,
    norm_a,
    norm_h1_semi,
    norm_l2h,
    problem_labels,
    run_sweep,
    solve,
    solve_tridiagonal,
    time_mesh,
    weights_row,
)

__all__ = [
    "ConvergenceError",
    "UsageError",
    "apply_delta_x2",
    "apply_hh",
    "gamma",
    "mittag_leffler",
    "norm_a",
    "norm_h1_semi",
    "norm_l2h",
    "problem_labels",
    "run_sweep",
    "solve",
    "solve_tridiagonal",
    "time_mesh",
    "weights_row",
]
