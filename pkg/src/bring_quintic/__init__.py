"""Real root of the Bring quintic x**5 + x = a.

The main route reduces the quintic to a quartic in x/a whose coefficients
are series in a**-4 (valid for |a| > 1). Reference solvers for checking it
live alongside.
"""

__version__ = "0.1.0"

from .coefficients import CoefficientTable, coefficient_closed_form, generate_coefficients
from .diagnostics import (
    PartialSumTable,
    ScanPoint,
    TermTable,
    accuracy_scan,
    k0_term_table,
    partial_sums,
    terms_vs_error,
)
from .errors import (
    BringQuinticError,
    CapacityError,
    ConvergenceError,
    DegenerateNormalizationError,
    DivergenceError,
    DomainError,
    SelectionError,
)
from .polysolve import (
    PolynomialRealCoeffs,
    RootSet,
    real_roots_in_open_interval,
    solve_cubic,
    solve_quadratic,
    solve_quartic,
)
from .solver import (
    Method,
    SolveReport,
    SolveRequest,
    residual,
    solve,
    solve_bisection,
    solve_bring_radical,
    solve_newton,
    solve_series,
)
from .ultraradicals import (
    StopReason,
    TruncationPolicy,
    UltraradicalSet,
    evaluate_ultraradicals,
    inner_alternating_sum,
    k0_term,
)
