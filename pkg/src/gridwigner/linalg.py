"""Dense complex linear algebra helpers shared by the whole package.

Operators are plain square complex numpy arrays and kets are 1-D complex
arrays.  Grids of interest stay below a few hundred points per axis, so
dense storage and raw double precision are used throughout.
"""

from __future__ import annotations

import numpy as np

#: Global tolerance for equality, Hermiticity and unitarity checks.
TOL = 1e-10


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a square complex matrix."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def as_vector(v) -> np.ndarray:
    """Coerce ``v`` to a 1-D complex vector."""
    u = np.asarray(v, dtype=complex)
    if u.ndim != 1:
        raise ValueError(f"expected a vector, got shape {u.shape}")
    return u


def _same_shape(a, b):
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")


def matmul(a, b) -> np.ndarray:
    """Product of two square matrices of equal dimension."""
    a, b = as_matrix(a), as_matrix(b)
    _same_shape(a, b)
    return a @ b


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(a).conj().T


def trace(a) -> complex:
    """Sum of the diagonal entries."""
    return complex(np.trace(as_matrix(a)))


def outer(u, v) -> np.ndarray:
    """Dyad |u><v|, entries ``u[i] * conj(v[j])``."""
    u, v = as_vector(u), as_vector(v)
    _same_shape(u, v)
    return np.outer(u, v.conj())


def frob_dist(a, b) -> float:
    """Frobenius norm of ``a - b``; the library-wide equality metric."""
    a, b = as_matrix(a), as_matrix(b)
    _same_shape(a, b)
    return float(np.linalg.norm(a - b))


def is_hermitian(a, tol: float = TOL) -> bool:
    a = as_matrix(a)
    return frob_dist(a, adjoint(a)) <= tol


def is_unitary(a, tol: float = TOL) -> bool:
    a = as_matrix(a)
    return frob_dist(a @ a.conj().T, np.eye(a.shape[0])) <= tol


def min_diag_pivot(a) -> float:
    """Smallest diagonal pivot met while eliminating a Hermitian matrix.

    Runs diagonal-pivoted symmetric (Cholesky-style) elimination.  All
    pivots of a positive semidefinite matrix are nonnegative up to
    roundoff, so a return value below roughly ``-1e-8`` rules PSD out.
    No eigendecomposition is involved.
    """
    m = as_matrix(a).copy()
    active = list(range(m.shape[0]))
    smallest = np.inf
    while active:
        diag = np.array([m[j, j].real for j in active])
        i = int(np.argmax(diag))
        pivot = float(diag[i])
        if pivot <= 1e-14:
            # No usable pivot left; the remaining diagonal entries are the
            # final pivot candidates.
            return float(min(smallest, diag.min()))
        smallest = min(smallest, pivot)
        j = active.pop(i)
        col = m[:, j].copy()
        m -= np.outer(col, col.conj()) / pivot
        m[j, :] = 0.0
        m[:, j] = 0.0
    return float(smallest)


def is_positive_semidefinite(a, slack: float = 1e-8) -> bool:
    """PSD check with tolerance ``-slack`` on the smallest pivot."""
    return min_diag_pivot(a) >= -slack
