"""Extremal eigenvalues of symmetric matrices and Rayleigh quotients.

Small matrices are fully diagonalized (LAPACK); above ``dense_cutoff`` the two
extremal eigenvalues come from Lanczos iterations on shifted operators, with
the shift chosen so the target eigenvalue is extremal and the iteration
provably convergent.  Either way the result is deterministic for a fixed
input and tolerance, and an iterative solve that cannot certify its residual
raises instead of returning a best-effort value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.sparse.linalg import ArpackError, ArpackNoConvergence, LinearOperator, eigsh

from .errors import ConvergenceError

__all__ = ["SpectralSummary", "extremal_eigenvalues", "rayleigh_quotient", "DEFAULT_EIG_TOL"]

DEFAULT_EIG_TOL = 1e-9
DEFAULT_DENSE_CUTOFF = 1024

# Fixed seed for the Lanczos start vector: deterministic, and generically
# non-orthogonal to the extremal eigenvectors (the all-ones vector is not,
# e.g. for regular graphs).
_LANCZOS_SEED = 0x5EED5


@dataclass(frozen=True)
class SpectralSummary:
    """Extremal eigenvalues of one symmetric matrix, plus context."""

    lambda_min: float
    lambda_max: float
    tolerance: float
    n: int
    average_degree: Fraction

    def to_json_dict(self) -> dict:
        return {
            "lambdaMin": self.lambda_min,
            "lambdaMax": self.lambda_max,
            "tolerance": self.tolerance,
            "n": self.n,
            "averageDegree": float(self.average_degree),
            "averageDegreeExact": str(self.average_degree),
        }


def _average_row_sum(matrix: np.ndarray) -> Fraction:
    n = matrix.shape[0]
    if n == 0:
        return Fraction(0)
    if issubclass(matrix.dtype.type, np.integer):
        return Fraction(int(matrix.sum()), n)
    return Fraction(float(matrix.sum())) / n


def _check_symmetric(matrix: np.ndarray) -> np.ndarray:
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {matrix.shape}")
    if matrix.shape[0] == 0:
        raise ValueError("matrix dimension must be at least 1")
    if not np.array_equal(matrix, matrix.T):
        raise ValueError("matrix must be exactly symmetric")
    return matrix


def _extremal_dense(matrix: np.ndarray) -> tuple[float, float]:
    values = np.linalg.eigvalsh(matrix.astype(np.float64))
    return float(values[0]), float(values[-1])


def _extremal_lanczos(matrix: np.ndarray, tol: float, maxiter: int) -> tuple[float, float]:
    n = matrix.shape[0]
    m = matrix.astype(np.float64)
    # Row-sum bound on the spectral radius; shifting by c makes the wanted
    # eigenvalue the largest of a positive-semidefinite operator.
    c = float(max(1.0, np.abs(m).sum(axis=1).max()))
    v0 = np.random.default_rng(_LANCZOS_SEED).standard_normal(n)
    arpack_tol = tol / (4.0 * c)

    def top_of(matvec) -> tuple[float, np.ndarray]:
        op = LinearOperator((n, n), matvec=matvec, dtype=np.float64)
        try:
            vals, vecs = eigsh(op, k=1, which="LA", v0=v0, tol=arpack_tol, maxiter=maxiter)
        except ArpackNoConvergence as exc:
            raise ConvergenceError(f"Lanczos did not converge within {maxiter} iterations") from exc
        except ArpackError as exc:
            raise ConvergenceError(f"Lanczos iteration failed: {exc}") from exc
        return float(vals[0]), vecs[:, 0]

    mu_hi, vec_hi = top_of(lambda x: m @ x + c * x)
    mu_lo, vec_lo = top_of(lambda x: c * x - m @ x)
    lam_max, lam_min = mu_hi - c, c - mu_lo

    for lam, vec in ((lam_max, vec_hi), (lam_min, vec_lo)):
        residual = float(np.linalg.norm(m @ vec - lam * vec) / np.linalg.norm(vec))
        # For symmetric operators the residual norm bounds the distance to the
        # nearest true eigenvalue.
        if residual > tol:
            raise ConvergenceError(
                f"eigenpair residual {residual:.3e} exceeds requested tolerance {tol:.3e}"
            )
    return lam_min, lam_max


def extremal_eigenvalues(
    matrix: np.ndarray,
    tol: float = DEFAULT_EIG_TOL,
    dense_cutoff: int = DEFAULT_DENSE_CUTOFF,
    maxiter: int | None = None,
) -> SpectralSummary:
    """Smallest and largest eigenvalues of an exactly symmetric real matrix.

    Both values are within ``tol`` of the true extremes.  ``dense_cutoff``
    selects full diagonalization below and Lanczos above; matrices with fewer
    than 8 rows are always diagonalized directly.
    """
    matrix = _check_symmetric(matrix)
    n = matrix.shape[0]
    if not matrix.any():
        lam_min, lam_max = 0.0, 0.0
    elif n <= max(dense_cutoff, 8):
        lam_min, lam_max = _extremal_dense(matrix)
    else:
        lam_min, lam_max = _extremal_lanczos(matrix, tol, maxiter or 100 * n)
    return SpectralSummary(
        lambda_min=lam_min,
        lambda_max=lam_max,
        tolerance=tol,
        n=n,
        average_degree=_average_row_sum(matrix),
    )


def rayleigh_quotient(matrix: np.ndarray, x: np.ndarray) -> float:
    """``(x* M x) / (x* x)`` for symmetric M; real for any complex vector x."""
    matrix = _check_symmetric(matrix)
    x = np.asarray(x)
    if x.shape != (matrix.shape[0],):
        raise ValueError(f"vector shape {x.shape} does not match matrix dimension {matrix.shape[0]}")
    denom = np.vdot(x, x)
    if denom == 0:
        raise ValueError("Rayleigh quotient of the zero vector is undefined")
    return float((np.vdot(x, matrix @ x) / denom).real)
