"""Wigner functions of states, expectations, marginals and reconstruction.

The Wigner grid of a state is the normalised table of phase-point
overlaps.  Computed values are asserted real before the imaginary part
is dropped, so kernel bugs cannot hide behind a silent truncation.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass

import numpy as np

from .linalg import TOL, is_hermitian, is_positive_semidefinite
from .kernels import Kernel, is_unimodular
from .phasespace import PhaseGrid, fourier_coeffs, phase_basis, u_op
from .quantizer import CONDITION_TOL, Quantizer

#: Slack allowed on the smallest pivot of a density operator.
PSD_SLACK = 1e-8


class ReconstructionError(ValueError):
    """Raised when a Wigner grid does not determine a valid state."""


def check_density(rho, tol: float = TOL, psd_slack: float = PSD_SLACK) -> np.ndarray:
    """Validate a density operator: Hermitian, unit trace, PSD."""
    r = np.asarray(rho, dtype=complex)
    if r.ndim != 2 or r.shape[0] != r.shape[1]:
        raise ValueError(f"density operator must be square, got shape {r.shape}")
    if not is_hermitian(r, tol=tol):
        raise ValueError("density operator is not Hermitian")
    if abs(np.trace(r) - 1.0) > tol:
        raise ValueError("density operator trace differs from 1")
    if not is_positive_semidefinite(r, slack=psd_slack):
        raise ValueError("density operator is not positive semidefinite")
    return r


@dataclass(frozen=True)
class WignerGrid:
    """Real Wigner table on a grid, tagged with the kernel that made it."""

    grid: PhaseGrid
    kernel_label: str
    values: np.ndarray
    epsilon: float | None = None

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.shape != (self.grid.dim, self.grid.dim):
            raise ValueError("Wigner table shape does not match the grid")
        object.__setattr__(self, "values", v)

    @property
    def dim(self) -> int:
        return self.grid.dim


def _real_or_raise(values: np.ndarray, tol: float = TOL) -> np.ndarray:
    resid = float(np.max(np.abs(values.imag)))
    if resid > tol:
        raise ValueError(
            f"Wigner values have imaginary residue {resid:.3e} beyond tolerance"
        )
    return values.real


def wigner(q: Quantizer, rho, validate_state: bool = True) -> WignerGrid:
    """Wigner function of a state through the cached phase-point operators."""
    r = check_density(rho) if validate_state else np.asarray(rho, dtype=complex)
    d = q.grid.dim
    if r.shape != (d, d):
        raise ValueError("state dimension does not match the quantizer grid")
    raw = np.einsum("ab,mnba->mn", r, q.omega) / d
    return WignerGrid(
        grid=q.grid,
        kernel_label=q.kernel.label,
        values=_real_or_raise(raw),
        epsilon=q.kernel.eps,
    )


def wigner_grid(grid: PhaseGrid, kernel: Kernel, rho, validate_state: bool = True) -> WignerGrid:
    """Wigner function without materialising the phase-point cache.

    Same map as :func:`wigner`, organised through displacement traces of
    the state; memory stays quadratic in the dimension.
    """
    r = check_density(rho) if validate_state else np.asarray(rho, dtype=complex)
    d = grid.dim
    if kernel.dim != d:
        raise ValueError("kernel dimension does not match the grid")
    if r.shape != (d, d):
        raise ValueError("state dimension does not match the grid")

    idx = np.arange(d)
    # t[k, l] = trace of rho * D(k, l), via running powers of the shift unitary
    t = np.empty((d, d), dtype=complex)
    u = u_op(grid)
    m = r.copy()
    dft = np.exp(2j * np.pi * np.outer(idx, idx) / d)  # dft[a, l]
    for k in range(d):
        t[k] = np.diagonal(m) @ dft
        m = m @ u
    t *= np.exp(-1j * np.pi * np.outer(idx, idx) / d)

    phis = grid.phis
    em = np.exp(-1j * np.outer(idx, phis))  # em[k, m]
    fn = np.exp(-2j * np.pi * np.outer(idx, idx) / d)  # fn[l, n]
    raw = np.einsum("kl,km,ln->mn", kernel.values * t, em, fn) / d**2
    return WignerGrid(
        grid=grid,
        kernel_label=kernel.label,
        values=_real_or_raise(raw),
        epsilon=kernel.eps,
    )


def _phase_overlap_table(grid: PhaseGrid, rho) -> np.ndarray:
    """Table ``z[m, n] = <n|rho|phi_m><phi_m|n>``."""
    p = phase_basis(grid)
    return ((np.asarray(rho, dtype=complex) @ p) * p.conj()).T


def wigner_symmetric(grid: PhaseGrid, rho) -> WignerGrid:
    """Closed form of the symmetric-kernel Wigner function."""
    vals = _phase_overlap_table(grid, rho).real
    return WignerGrid(grid=grid, kernel_label="symmetric", values=vals)


def wigner_almost_symmetric(grid: PhaseGrid, rho, eps: float) -> WignerGrid:
    """Closed form of the even-dimension skewed Wigner function."""
    z = _phase_overlap_table(grid, rho)
    vals = np.real(np.exp(1j * eps) * z) / np.cos(eps)
    return WignerGrid(
        grid=grid, kernel_label="almost-symmetric", values=vals, epsilon=float(eps)
    )


def wigner_wootters(grid: PhaseGrid, rho) -> WignerGrid:
    """Closed form of the sign-kernel Wigner function (odd dimensions).

    Sums the state's anti-diagonals: the pair ``(n', n'')`` contributes
    at level ``n`` when ``n' + n''`` is congruent to ``2n`` mod dim.
    """
    d = grid.dim
    if d % 2 == 0:
        raise ValueError("sign kernel requires an odd dimension")
    r = np.asarray(rho, dtype=complex)
    raw = np.zeros((d, d), dtype=complex)
    for n in range(d):
        acc = np.zeros(d, dtype=complex)
        for a in range(d):
            b = (2 * n - a) % d
            acc += r[a, b] * np.exp(1j * (b - a) * grid.phis)
        raw[:, n] = acc / d
    return WignerGrid(grid=grid, kernel_label="wootters", values=_real_or_raise(raw))


def expectation(w: WignerGrid, values) -> complex:
    """Grid average of a function against the Wigner table."""
    v = np.asarray(values, dtype=complex)
    if v.shape != w.values.shape:
        raise ValueError("grid function shape does not match the Wigner grid")
    return complex(np.sum(v * w.values))


def marginals(w: WignerGrid):
    """Phase marginal (sum over levels) and number marginal (sum over angles)."""
    return w.values.sum(axis=1), w.values.sum(axis=0)


def phase_matrix_elements(w: WignerGrid, kernel: Kernel) -> np.ndarray:
    """Phase-basis matrix elements of the state behind a Wigner grid.

    Entry ``[r', r]`` is ``<phi_r'|rho|phi_r>``.  The upper triangle
    (``r >= r'``) comes from the kernel-division inversion; the lower
    one is filled by conjugation.  A diagonal imaginary residue signals
    an inconsistent input grid.
    """
    d = w.dim
    if kernel.dim != d:
        raise ValueError("kernel dimension does not match the Wigner grid")
    if kernel.label != w.kernel_label:
        raise ValueError(
            f"kernel {kernel.label!r} does not match grid kernel {w.kernel_label!r}"
        )
    mn = float(np.min(np.abs(kernel.values)))
    if mn < CONDITION_TOL:
        warnings.warn(
            f"kernel inversion is ill-conditioned (min |K| = {mn:.3e})",
            stacklevel=2,
        )

    idx = np.arange(d)
    dft = np.exp(2j * np.pi * np.outer(idx, idx) / d)
    s = dft @ w.values @ dft.T  # s[k, l] = sum_{m,n} e^{2pi i(km+ln)/d} W[m,n]

    elements = np.zeros((d, d), dtype=complex)
    for r in range(d):
        for rp in range(r + 1):  # r' <= r
            l = r - rp
            k_phase = np.exp(-1j * np.pi * idx * (r + rp) / d)
            elements[rp, r] = np.sum(k_phase * s[:, l] / kernel.values[:, l]) / d

    diag_resid = float(np.max(np.abs(np.diagonal(elements).imag)))
    if diag_resid > 10 * TOL:
        raise ReconstructionError(
            f"inconsistent Wigner grid: diagonal residue {diag_resid:.3e}"
        )
    lower = np.tril_indices(d, -1)
    elements[lower] = elements.T[lower].conj()
    np.fill_diagonal(elements, np.diagonal(elements).real)
    return elements


def reconstruct(w: WignerGrid, kernel: Kernel, validate_state: bool = True) -> np.ndarray:
    """Recover the density operator behind a Wigner grid.

    Inverts the quantization map pair-by-pair in the phase basis and
    rotates back to the number basis.  The result must satisfy the
    density-operator invariants within ``10 * TOL``.
    """
    elements = phase_matrix_elements(w, kernel)
    p = phase_basis(w.grid)
    rho = p @ elements @ p.conj().T
    if validate_state:
        try:
            check_density(rho, tol=10 * TOL)
        except ValueError as exc:
            raise ReconstructionError(str(exc)) from exc
    return rho


def reconstruct_unimodular(w: WignerGrid, kernel: Kernel) -> np.ndarray:
    """Shortcut reconstruction for unimodular kernels.

    The state is the Wigner-weighted sum of phase-point operators,
    assembled here through the displacement expansion so no operator
    cache is required.
    """
    if not is_unimodular(kernel):
        raise ValueError("shortcut requires a unimodular kernel")
    if kernel.dim != w.dim:
        raise ValueError("kernel dimension does not match the Wigner grid")
    grid = w.grid
    d = grid.dim
    coeffs = kernel.values * fourier_coeffs(grid, w.values.astype(complex))
    idx = np.arange(d)
    u = u_op(grid)
    rho = np.zeros((d, d), dtype=complex)
    uk = np.eye(d, dtype=complex)
    for k in range(d):
        # D(k, l) = e^{-i pi k l / d} U^k diag(e^{2 pi i n l / d})
        pref = np.exp(-1j * np.pi * k * idx / d) * coeffs[k]
        cols = np.exp(2j * np.pi * np.outer(idx, idx) / d) @ pref  # over l, per n
        rho += uk * cols[None, :]
        uk = uk @ u
    return rho


def _symmetric_k_range(d: int) -> np.ndarray:
    half = (d - 1) // 2
    return np.arange(-half, half + 1)


def phase_matrix_elements_symmetric(w: WignerGrid) -> np.ndarray:
    """Phase-basis elements via the symmetric-kernel closed inversion.

    Uses the two-exponential expansion of the cosine kernel.  Near-zero
    denominators (possible only off the principal branch) fall back to
    the generic inversion for that entry.
    """
    if w.kernel_label != "symmetric":
        raise ValueError("closed inversion applies to the symmetric kernel only")
    d = w.dim
    grid = w.grid
    ks = _symmetric_k_range(d)
    phis = grid.phis
    ekm = np.exp(1j * np.outer(ks, phis))  # ekm[k, m]

    generic = None
    elements = np.zeros((d, d), dtype=complex)
    for r in range(d):
        for rp in range(d):
            den = np.exp(1j * ks * grid.phi(r)) + np.exp(1j * ks * grid.phi(rp))
            if np.min(np.abs(den)) < 1e-9:
                if generic is None:
                    from .kernels import symmetric_kernel

                    generic = phase_matrix_elements(w, symmetric_kernel((d - 1) // 2))
                elements[rp, r] = generic[rp, r]
                continue
            coef = (ekm / den[:, None]).sum(axis=0)  # over k, per m
            nphase = np.exp(1j * np.arange(d) * (grid.phi(r) - grid.phi(rp)))
            elements[rp, r] = 2.0 / d * np.sum(coef[:, None] * nphase[None, :] * w.values)
    return elements


def reconstruct_symmetric(w: WignerGrid) -> np.ndarray:
    """Closed-form reconstruction for the symmetric kernel."""
    p = phase_basis(w.grid)
    return p @ phase_matrix_elements_symmetric(w) @ p.conj().T


def wigner_to_json(w: WignerGrid, path) -> None:
    """Write a Wigner grid as JSON with dim/phi0/kernel/values fields."""
    obj: dict = {
        "dim": w.dim,
        "phi0": w.grid.phi0,
        "kernel": w.kernel_label,
        "values": [[float(x) for x in row] for row in w.values],
    }
    if w.epsilon is not None:
        obj["epsilon"] = w.epsilon
    with open(path, "w") as fh:
        json.dump(obj, fh)


def load_wigner(path) -> WignerGrid:
    """Read a Wigner grid from its JSON format."""
    with open(path) as fh:
        obj = json.load(fh)
    grid = PhaseGrid(int(obj["dim"]), float(obj.get("phi0", 0.0)))
    values = np.array(obj["values"], dtype=float)
    eps = obj.get("epsilon")
    return WignerGrid(
        grid=grid,
        kernel_label=str(obj["kernel"]),
        values=values,
        epsilon=None if eps is None else float(eps),
    )


def wigner_to_csv(w: WignerGrid, path) -> None:
    """Write a Wigner grid as CSV rows ``m,n,phi,value`` (17 digits)."""
    phis = w.grid.phis
    with open(path, "w") as fh:
        fh.write("m,n,phi,value\n")
        for m in range(w.dim):
            for n in range(w.dim):
                fh.write(f"{m},{n},{phis[m]:.17g},{w.values[m, n]:.17g}\n")
