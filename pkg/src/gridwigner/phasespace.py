"""Finite number-phase grids, their bases, and the operators living on them.

A grid of dimension ``d`` couples ``d`` equally spaced phase angles with
``d`` number levels.  This module provides both orthonormal bases (number
and phase), the number and phase operators, the clock/shift unitaries,
the discrete displacement operators and the grid Fourier transform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PhaseGrid:
    """A ``dim x dim`` phase-space grid with reference angle ``phi0``.

    Phase values are ``phi0 + 2*pi*m/dim`` for ``m = 0 .. dim-1``.
    """

    dim: int
    phi0: float = 0.0

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("grid dimension must be a positive integer")

    @property
    def phis(self) -> np.ndarray:
        """The ``dim`` phase angles of the grid."""
        return self.phi0 + 2.0 * np.pi * np.arange(self.dim) / self.dim

    def phi(self, m) -> float:
        """Phase angle for an arbitrary (also non-integer) index ``m``."""
        return self.phi0 + 2.0 * np.pi * m / self.dim


def number_ket(grid: PhaseGrid, n: int) -> np.ndarray:
    """Standard basis vector |n>."""
    if not 0 <= n < grid.dim:
        raise ValueError(f"number index {n} outside 0..{grid.dim - 1}")
    e = np.zeros(grid.dim, dtype=complex)
    e[n] = 1.0
    return e


def phase_ket(grid: PhaseGrid, r: int) -> np.ndarray:
    """Uniform-modulus phase ket |phi_r>.

    Any integer index is accepted; the ket is periodic in ``r`` with
    period ``grid.dim``.
    """
    phi = grid.phi(r)
    n = np.arange(grid.dim)
    return np.exp(1j * n * phi) / np.sqrt(grid.dim)


def phase_basis(grid: PhaseGrid) -> np.ndarray:
    """Matrix ``P`` with ``P[n, m] = <n|phi_m>`` (columns are phase kets)."""
    n = np.arange(grid.dim)[:, None]
    return np.exp(1j * n * grid.phis[None, :]) / np.sqrt(grid.dim)


def number_op(grid: PhaseGrid) -> np.ndarray:
    """The number operator, diagonal in the number basis."""
    return np.diag(np.arange(grid.dim)).astype(complex)


def phase_op(grid: PhaseGrid) -> np.ndarray:
    """The phase operator, diagonal in the phase basis."""
    p = phase_basis(grid)
    return (p * grid.phis[None, :]) @ p.conj().T


def phase_function_op(grid: PhaseGrid, values) -> np.ndarray:
    """Spectral function of the phase operator with eigenvalues ``values``.

    ``values[m]`` is attached to the eigenvector |phi_m>.
    """
    v = np.asarray(values, dtype=complex)
    if v.shape != (grid.dim,):
        raise ValueError("need one value per phase angle")
    p = phase_basis(grid)
    return (p * v[None, :]) @ p.conj().T


def v_op(grid: PhaseGrid) -> np.ndarray:
    """Clock unitary exp(2*pi*i*number_op/dim); its dim-th power is 1."""
    return np.diag(np.exp(2j * np.pi * np.arange(grid.dim) / grid.dim))


def u_op(grid: PhaseGrid) -> np.ndarray:
    """Shift unitary: lowers the number index, with a corner phase.

    Equals ``exp(i * phase_op)``; its dim-th power is
    ``exp(i*dim*phi0)`` times the identity.
    """
    d = grid.dim
    u = np.zeros((d, d), dtype=complex)
    for n in range(d - 1):
        u[n, n + 1] = 1.0
    u[d - 1, 0] = np.exp(1j * d * grid.phi0)
    return u


def u_op_spectral(grid: PhaseGrid) -> np.ndarray:
    """The shift unitary built spectrally from the phase basis."""
    return phase_function_op(grid, np.exp(1j * grid.phis))


def _unitary_power(u: np.ndarray, k: int) -> np.ndarray:
    if k >= 0:
        return np.linalg.matrix_power(u, k)
    return np.linalg.matrix_power(u.conj().T, -k)


def displacement(grid: PhaseGrid, k: int, l: int) -> np.ndarray:
    """Discrete displacement operator for any integers ``k``, ``l``.

    Built as ``exp(-i*pi*k*l/dim) * U^k * V^l`` with the literal product
    ``k*l`` in the phase, so shifting an index by ``dim`` changes the
    operator by a sign in general.
    """
    d = grid.dim
    uk = _unitary_power(u_op(grid), k)
    vl = np.exp(2j * np.pi * np.arange(d) * l / d)
    return np.exp(-1j * np.pi * k * l / d) * (uk * vl[None, :])


def displacement_phase_form(grid: PhaseGrid, k: int, l: int) -> np.ndarray:
    """Displacement operator assembled from phase-basis dyads.

    Independent construction used to cross-check :func:`displacement`.
    """
    d = grid.dim
    out = np.zeros((d, d), dtype=complex)
    for m in range(d):
        out += np.exp(1j * k * grid.phi(m)) * np.outer(
            phase_ket(grid, m + l), phase_ket(grid, m).conj()
        )
    return np.exp(1j * np.pi * k * l / d) * out


def _fourier_factors(grid: PhaseGrid):
    """Return ``E[k, m] = exp(-i*k*phi_m)`` and ``F[l, n] = exp(-2pi*i*l*n/d)``."""
    d = grid.dim
    k = np.arange(d)[:, None]
    e = np.exp(-1j * k * grid.phis[None, :])
    f = np.exp(-2j * np.pi * k * np.arange(d)[None, :] / d)
    return e, f


def fourier_coeffs(grid: PhaseGrid, values) -> np.ndarray:
    """Grid Fourier coefficients with the symmetric ``1/dim`` prefactor."""
    v = np.asarray(values, dtype=complex)
    if v.shape != (grid.dim, grid.dim):
        raise ValueError("grid function shape does not match the grid")
    e, f = _fourier_factors(grid)
    return e @ v @ f.T / grid.dim


def inverse_fourier(grid: PhaseGrid, coeffs) -> np.ndarray:
    """Invert :func:`fourier_coeffs`; the round trip is exact."""
    c = np.asarray(coeffs, dtype=complex)
    if c.shape != (grid.dim, grid.dim):
        raise ValueError("coefficient table shape does not match the grid")
    e, f = _fourier_factors(grid)
    return e.conj().T @ c @ f.conj() / grid.dim
