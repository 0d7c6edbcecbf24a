"""Dense complex linear solves and eigen-decompositions.

Both kernels delegate to LAPACK through :mod:`scipy.linalg` and add the
guarantees the rest of the package relies on: explicit singularity
detection with the offending pivot, unit-norm eigenvectors with a fixed
phase, and a deterministic eigenpair ordering.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

MAX_EIGEN_DIM = 4096


class SingularMatrixError(np.linalg.LinAlgError):
    """Matrix is singular to working precision."""

    def __init__(self, message: str, pivot: float):
        super().__init__(message)
        self.pivot = pivot


class ConvergenceError(np.linalg.LinAlgError):
    """Eigenvalue iteration did not converge."""


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenpairs sorted by real part, then imaginary part.

    ``eigenvectors[:, i]`` pairs with ``eigenvalues[i]`` and has unit
    Euclidean norm; its largest-magnitude component is real and positive.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __len__(self):
        return len(self.eigenvalues)

    def nearest(self, value: complex) -> int:
        """Index of the eigenvalue closest to ``value``."""
        return int(np.argmin(np.abs(self.eigenvalues - value)))


def _as_square(a) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def solve_linear(a, b) -> np.ndarray:
    """Solve ``a @ x = b`` by LU factorization with partial pivoting.

    Raises
    ------
    SingularMatrixError
        If the smallest pivot of ``U`` is below ``n * eps * max|a|``.
    """
    a = _as_square(a)
    b = np.asarray(b, dtype=complex)
    if b.shape[0] != a.shape[0]:
        raise ValueError(f"dimension mismatch: matrix {a.shape}, rhs {b.shape}")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", sla.LinAlgWarning)
        lu, piv = sla.lu_factor(a, check_finite=False)
    pivots = np.abs(np.diag(lu))
    smallest = float(pivots.min())
    scale = float(np.abs(a).max())
    if smallest <= a.shape[0] * np.finfo(float).eps * scale:
        raise SingularMatrixError(
            f"matrix is singular to working precision (smallest pivot {smallest:.3e})",
            smallest,
        )
    return sla.lu_solve((lu, piv), b, check_finite=False)


def _fix_phase(vectors: np.ndarray) -> np.ndarray:
    idx = np.argmax(np.abs(vectors), axis=0)
    lead = vectors[idx, np.arange(vectors.shape[1])]
    return vectors * (np.abs(lead) / lead)


def eigen(a) -> EigenDecomposition:
    """Eigen-decomposition of a dense complex matrix.

    Hermitian input (exactly equal to its conjugate transpose) goes through
    the Hermitian driver so eigenvalues come out exactly real.
    """
    a = _as_square(a)
    if a.shape[0] > MAX_EIGEN_DIM:
        raise ValueError(f"dimension {a.shape[0]} exceeds {MAX_EIGEN_DIM}")
    try:
        if np.array_equal(a, a.conj().T):
            w, v = sla.eigh(a, check_finite=False)
            w = w.astype(complex)
        else:
            w, v = sla.eig(a, check_finite=False)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigensolver did not converge: {exc}") from exc
    v = v / np.linalg.norm(v, axis=0)
    order = np.lexsort((w.imag, w.real))
    return EigenDecomposition(w[order], _fix_phase(v[:, order]))
