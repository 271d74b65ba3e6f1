"""Upper bounds on the moduli of polynomial zeros.

A monic polynomial is represented by its low-order coefficients; its
zeros are the eigenvalues of the Frobenius companion matrix.  Three
classical bounds (Cauchy, Carmichael-Mason, Fujii-Kubo) come as closed
forms.  The weighted bound takes a strictly positive weight vector d,
forms the per-row quantities alpha_1..alpha_n, and certifies
max |zero| <= max_k alpha_k; the weights are free, so a derivative-free
optimizer searches log-space for the smallest certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .arange import general_eig
from .errors import DegreeZero, InvalidMatrix, NonPositiveWeight, WeightDimensionMismatch


@dataclass(frozen=True)
class PolynomialSpec:
    """Monic polynomial z^n + a_{n-1} z^{n-1} + ... + a_0.

    ``coefficients`` holds a_0..a_{n-1}.  Non-monic input is normalized
    at ingestion; the divisor is kept in ``leading_coefficient``.
    """

    coefficients: np.ndarray
    degree: int
    leading_coefficient: complex = 1.0 + 0.0j


def make_polynomial(low_coefficients, leading_coefficient: complex = 1.0) -> PolynomialSpec:
    """Build a PolynomialSpec from a_0..a_{n-1} (and an optional leading
    coefficient to divide out)."""
    arr = np.atleast_1d(np.asarray(low_coefficients, dtype=np.complex128))
    if arr.ndim != 1:
        raise InvalidMatrix(f"coefficients must form a 1-D sequence, got ndim={arr.ndim}")
    if arr.size == 0:
        raise DegreeZero("polynomial must have degree >= 1")
    if not (np.all(np.isfinite(arr.real)) and np.all(np.isfinite(arr.imag))):
        raise InvalidMatrix("coefficients must be finite")
    lead = complex(leading_coefficient)
    if lead == 0:
        raise DegreeZero("leading coefficient must be nonzero")
    if lead != 1.0 + 0.0j:
        arr = arr / lead
    return PolynomialSpec(
        coefficients=arr, degree=int(arr.size), leading_coefficient=lead
    )


def validate_weights(d, degree: int) -> np.ndarray:
    """Check a weight vector: real, strictly positive, one entry per row."""
    arr = np.atleast_1d(np.asarray(d, dtype=np.float64))
    if arr.ndim != 1:
        raise InvalidMatrix(f"weights must form a 1-D sequence, got ndim={arr.ndim}")
    if arr.size != degree:
        raise WeightDimensionMismatch(
            f"{arr.size} weights for a degree-{degree} polynomial"
        )
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
        raise NonPositiveWeight("weights must be finite and strictly positive")
    return arr


def companion(p: PolynomialSpec) -> np.ndarray:
    """Frobenius companion matrix: negated coefficients across the first
    row (highest order first), ones on the subdiagonal."""
    n = p.degree
    mat = np.zeros((n, n), dtype=np.complex128)
    mat[0, :] = -p.coefficients[::-1]
    for i in range(n - 1):
        mat[i + 1, i] = 1.0
    return mat


def bound_cauchy(p: PolynomialSpec) -> float:
    """1 + max |a_i|."""
    return 1.0 + float(np.max(np.abs(p.coefficients)))


def bound_carmichael_mason(p: PolynomialSpec) -> float:
    """sqrt(1 + sum |a_i|^2)."""
    return float(np.sqrt(1.0 + np.sum(np.abs(p.coefficients) ** 2)))


def bound_fujii_kubo(p: PolynomialSpec) -> float:
    """(sqrt(sum |a_i|^2) + |a_{n-1}|) / 2 + cos(pi / (n+1))."""
    mags = np.abs(p.coefficients)
    return float(
        0.5 * (np.sqrt(np.sum(mags**2)) + mags[-1]) + np.cos(np.pi / (p.degree + 1))
    )


def alphas(p: PolynomialSpec, d) -> np.ndarray:
    """Per-row certificate values alpha_1..alpha_n for weights d.

    Row 1 collects all coefficient magnitudes; middle rows see one
    coefficient plus the two adjacent weights; the last row sees a_0.
    Each alpha is homogeneous of degree 0 in d.  For degree 1 the single
    alpha is |a_0| (the absent trailing weight term is dropped).
    """
    w = validate_weights(d, p.degree)
    mags = np.abs(p.coefficients)
    n = p.degree
    out = np.empty(n, dtype=np.float64)
    head = mags[n - 1] + float(np.sum(mags))
    out[0] = (0.5 * w[0] * head + (0.5 * w[1] if n >= 2 else 0.0)) / w[0]
    for k in range(2, n):
        out[k - 1] = (0.5 * w[0] * mags[n - k] + 0.5 * w[k - 1] + 0.5 * w[k]) / w[k - 1]
    if n >= 2:
        out[n - 1] = (0.5 * w[0] * mags[0] + 0.5 * w[n - 1]) / w[n - 1]
    return out


def bound_prk(p: PolynomialSpec, d) -> float:
    """The weighted certificate max_k alpha_k(d)."""
    return float(np.max(alphas(p, d)))


def max_root_modulus(p: PolynomialSpec) -> float:
    """Largest zero modulus, via companion-matrix eigenvalues."""
    return float(np.max(np.abs(general_eig(companion(p)))))


def optimize_weights(
    p: PolynomialSpec,
    restarts: int = 8,
    iters: int = 2000,
    seed: int = 0,
) -> tuple[np.ndarray, float]:
    """Search for weights minimizing the certificate max_k alpha_k.

    The alphas are scale-invariant in d, so the search runs in log-space
    with the first coordinate pinned at 0.  Each restart is a
    Nelder-Mead descent from a seeded random start (the first start is
    the all-ones point).  The all-ones certificate itself is always a
    candidate, so the result never exceeds the unweighted baseline.
    Deterministic for a fixed seed.  Returns (d_star, value).
    """
    ones = np.ones(p.degree, dtype=np.float64)
    best_d = ones
    best_val = bound_prk(p, ones)
    if p.degree == 1:
        # A single alpha equal to |a_0| regardless of the weight.
        return best_d, best_val

    def objective(u: np.ndarray) -> float:
        d = np.exp(np.concatenate(([0.0], u)))
        return float(np.max(alphas(p, d)))

    rng = np.random.default_rng(seed)
    m = p.degree - 1
    starts = [np.zeros(m)]
    for _ in range(max(0, restarts - 1)):
        starts.append(rng.normal(0.0, 1.5, size=m))
    for u0 in starts:
        res = minimize(
            objective,
            u0,
            method="Nelder-Mead",
            options={
                "maxiter": iters,
                "maxfev": iters,
                "xatol": 1e-9,
                "fatol": 1e-12,
            },
        )
        d_cand = np.exp(np.concatenate(([0.0], res.x)))
        val = bound_prk(p, d_cand)
        if val < best_val:
            best_val = val
            best_d = d_cand
    return best_d, best_val


@dataclass(frozen=True)
class ZeroBoundReport:
    """All four zero bounds for one polynomial, with the weights used and
    the true extreme zero modulus for reference."""

    r_c: float
    r_cm: float
    r_fk: float
    r_prk: float
    d_star: np.ndarray
    alphas: np.ndarray
    max_root_modulus: float


def zero_bound_report(
    p: PolynomialSpec,
    d=None,
    restarts: int = 8,
    iters: int = 2000,
    seed: int = 0,
) -> ZeroBoundReport:
    """Evaluate every bound; optimize the weights unless d is supplied."""
    if d is None:
        d_star, _ = optimize_weights(p, restarts=restarts, iters=iters, seed=seed)
    else:
        d_star = validate_weights(d, p.degree)
    alpha_vals = alphas(p, d_star)
    return ZeroBoundReport(
        r_c=bound_cauchy(p),
        r_cm=bound_carmichael_mason(p),
        r_fk=bound_fujii_kubo(p),
        r_prk=float(np.max(alpha_vals)),
        d_star=d_star,
        alphas=alpha_vals,
        max_root_modulus=max_root_modulus(p),
    )
