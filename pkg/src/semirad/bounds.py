"""Certified brackets around the weighted numerical radius.

Lower bounds combine the seminorm of one rotation component with the
Crawford number of the other; the upper bound minimizes the two-term
rotation functional over the quarter period.  For 2x2 operator matrices
under the doubled weight diag(A, A), four closed-form upper bounds are
provided, two of them carrying a free parameter t in [0, 1] that is
optimized by golden section.

Report builders package the bounds together with the reference radius of
the same operator so every bracket is checkable in isolation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .arange import DEFAULT_THETA_GRID, a_crawford, a_numerical_radius
from .errors import TOutOfRange
from .scan import golden_section_min
from .semihilbert import (
    SemiOperator,
    _require_same_context,
    a_operator_seminorm,
    im_a,
    make_context,
    make_operator,
    re_a,
    scale_operator,
)

DEFAULT_PHI_GRID = 64


def lower_bound_21(op: SemiOperator, theta_grid: int = DEFAULT_THETA_GRID) -> float:
    """sqrt(||real part||^2 + crawford(imag part)^2), a lower bound on the
    radius that refines the plain ||real part|| bound."""
    norm_re = a_operator_seminorm(re_a(op))
    craw_im = a_crawford(im_a(op), theta_grid=theta_grid)
    return sqrt(norm_re * norm_re + craw_im * craw_im)


def lower_bound_22(op: SemiOperator, theta_grid: int = DEFAULT_THETA_GRID) -> float:
    """Mirror image of lower_bound_21 with the two parts swapped."""
    norm_im = a_operator_seminorm(im_a(op))
    craw_re = a_crawford(re_a(op), theta_grid=theta_grid)
    return sqrt(norm_im * norm_im + craw_re * craw_re)


def upper_bound_hphi(
    op: SemiOperator, phi_grid: int = DEFAULT_PHI_GRID
) -> tuple[float, float]:
    """Upper bound min over phi of sqrt(||H_phi||^2 + ||H_{phi+pi/2}||^2).

    H_phi is the weighted real part of exp(i*phi) T.  H_{phi+pi} = -H_phi
    and the two terms swap under phi -> phi+pi/2, so the objective has
    period pi/2 and the scan runs over [0, pi/2).  Returns (value, phi).
    """

    def f(phi: float) -> float:
        h1 = a_operator_seminorm(re_a(scale_operator(op, np.exp(1j * phi))))
        h2 = a_operator_seminorm(
            re_a(scale_operator(op, np.exp(1j * (phi + 0.5 * np.pi))))
        )
        return h1 * h1 + h2 * h2

    period = 0.5 * np.pi
    phis = np.linspace(0.0, period, phi_grid, endpoint=False)
    values = [f(p) for p in phis]
    k = int(np.argmin(values))
    step = period / phi_grid
    phi_ref, refined = golden_section_min(
        f, phis[k] - step, phis[k] + step, tol=1e-10
    )
    if refined <= values[k]:
        best, phi_star = refined, phi_ref
    else:
        best, phi_star = values[k], float(phis[k])
    return sqrt(best), phi_star % period


def _require_shared_context(*ops: SemiOperator) -> None:
    first = ops[0]
    for other in ops[1:]:
        _require_same_context(first, other)


def block_bound_lemma24(t11: SemiOperator, t12: SemiOperator) -> float:
    """Closed-form radius bound for the block matrix [[T11, T12], [0, 0]]
    under the doubled weight."""
    _require_shared_context(t11, t12)
    w11 = a_numerical_radius(t11)
    n12 = a_operator_seminorm(t12)
    return 0.5 * (w11 + sqrt(w11 * w11 + n12 * n12))


def block_bound_th25(
    t11: SemiOperator, t12: SemiOperator, t21: SemiOperator, t22: SemiOperator
) -> float:
    """Closed-form radius bound for a full 2x2 block matrix."""
    _require_shared_context(t11, t12, t21, t22)
    w11 = a_numerical_radius(t11)
    w22 = a_numerical_radius(t22)
    n12 = a_operator_seminorm(t12)
    n21 = a_operator_seminorm(t21)
    return 0.5 * (
        w11 + w22 + sqrt(w11 * w11 + n12 * n12) + sqrt(w22 * w22 + n21 * n21)
    )


def _check_t(t: float) -> float:
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise TOutOfRange(f"parameter t must lie in [0, 1], got {t}")
    return t


def _split_value(w_lead: float, w_other: float, n_up: float, n_down: float, t: float) -> float:
    # Leading radius split t : (1-t) between the two radicals.
    return (
        0.5 * w_lead
        + w_other
        + 0.5 * sqrt(t * t * w_lead * w_lead + n_up * n_up)
        + 0.5 * sqrt((1.0 - t) * (1.0 - t) * w_lead * w_lead + n_down * n_down)
    )


def _block_scalars(
    t11: SemiOperator, t12: SemiOperator, t21: SemiOperator, t22: SemiOperator
) -> tuple[float, float, float, float]:
    _require_shared_context(t11, t12, t21, t22)
    return (
        a_numerical_radius(t11),
        a_numerical_radius(t22),
        a_operator_seminorm(t12),
        a_operator_seminorm(t21),
    )


def block_bound_th27(
    t11: SemiOperator,
    t12: SemiOperator,
    t21: SemiOperator,
    t22: SemiOperator,
    t: float,
) -> float:
    """Parametric block bound splitting the (1,1) radius across radicals."""
    t = _check_t(t)
    w11, w22, n12, n21 = _block_scalars(t11, t12, t21, t22)
    return _split_value(w11, w22, n12, n21, t)


def block_bound_th28(
    t11: SemiOperator,
    t12: SemiOperator,
    t21: SemiOperator,
    t22: SemiOperator,
    t: float,
) -> float:
    """Parametric block bound splitting the (2,2) radius across radicals."""
    t = _check_t(t)
    w11, w22, n12, n21 = _block_scalars(t11, t12, t21, t22)
    return _split_value(w22, w11, n21, n12, t)


def optimize_t(
    which: int,
    t11: SemiOperator,
    t12: SemiOperator,
    t21: SemiOperator,
    t22: SemiOperator,
) -> tuple[float, float]:
    """Best t in [0, 1] for the parametric bound 27 or 28.

    The objective is a sum of convex functions of t, so golden section
    suffices; the endpoints and midpoint are compared as well.  Returns
    (t_star, value).
    """
    if which not in (27, 28):
        raise ValueError(f"which must be 27 or 28, got {which}")
    w11, w22, n12, n21 = _block_scalars(t11, t12, t21, t22)
    if which == 27:
        args = (w11, w22, n12, n21)
    else:
        args = (w22, w11, n21, n12)

    def f(t: float) -> float:
        return _split_value(*args, t)

    t_best, v_best = golden_section_min(f, 0.0, 1.0, tol=1e-10)
    for t_cand in (0.0, 0.5, 1.0):
        v_cand = f(t_cand)
        if v_cand < v_best:
            t_best, v_best = t_cand, v_cand
    return t_best, v_best


def assemble_blocks(
    t11: SemiOperator, t12: SemiOperator, t21: SemiOperator, t22: SemiOperator
) -> SemiOperator:
    """The 2n x 2n block matrix as an operator under the weight diag(A, A).

    No special-cased block algebra: the doubled weight goes through the
    ordinary context constructor and the block matrix through the
    ordinary operator constructor.
    """
    _require_shared_context(t11, t12, t21, t22)
    ctx = t11.context
    zero = np.zeros_like(ctx.matrix)
    doubled = make_context(
        np.block([[ctx.matrix, zero], [zero, ctx.matrix]]),
        herm_tol=ctx.herm_tol,
        rank_tol=ctx.rank_tol,
    )
    block = np.block(
        [[t11.matrix, t12.matrix], [t21.matrix, t22.matrix]]
    )
    return make_operator(doubled, block)


@dataclass(frozen=True)
class BoundReport:
    """Bracket around the radius of a single operator."""

    w_exact: float
    lower_21: float
    lower_22: float
    upper_hphi: float
    phi_star: float
    sandwich_lower: float
    sandwich_upper: float


def bound_report(
    op: SemiOperator,
    theta_grid: int = DEFAULT_THETA_GRID,
    phi_grid: int = DEFAULT_PHI_GRID,
) -> BoundReport:
    norm = a_operator_seminorm(op)
    upper, phi_star = upper_bound_hphi(op, phi_grid=phi_grid)
    return BoundReport(
        w_exact=a_numerical_radius(op, theta_grid=theta_grid),
        lower_21=lower_bound_21(op, theta_grid=theta_grid),
        lower_22=lower_bound_22(op, theta_grid=theta_grid),
        upper_hphi=upper,
        phi_star=phi_star,
        sandwich_lower=0.5 * norm,
        sandwich_upper=norm,
    )


@dataclass(frozen=True)
class MatrixBoundReport:
    """Bracket around the radius of an assembled 2x2 block matrix.

    ``lemma24`` is only a valid bound when the bottom row of blocks is
    zero; it is None otherwise.
    """

    w_b_exact: float
    lemma24: float | None
    th25: float
    th27: float
    th28: float
    t_star_27: float
    t_star_28: float


def matrix_bound_report(
    t11: SemiOperator,
    t12: SemiOperator,
    t21: SemiOperator,
    t22: SemiOperator,
    theta_grid: int = DEFAULT_THETA_GRID,
) -> MatrixBoundReport:
    assembled = assemble_blocks(t11, t12, t21, t22)
    t_star_27, v27 = optimize_t(27, t11, t12, t21, t22)
    t_star_28, v28 = optimize_t(28, t11, t12, t21, t22)
    bottom_row_zero = (
        np.count_nonzero(t21.matrix) == 0 and np.count_nonzero(t22.matrix) == 0
    )
    lemma = block_bound_lemma24(t11, t12) if bottom_row_zero else None
    return MatrixBoundReport(
        w_b_exact=a_numerical_radius(assembled, theta_grid=theta_grid),
        lemma24=lemma,
        th25=block_bound_th25(t11, t12, t21, t22),
        th27=v27,
        th28=v28,
        t_star_27=t_star_27,
        t_star_28=t_star_28,
    )
