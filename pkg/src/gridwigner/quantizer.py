"""Phase-point operators, quantization of grid functions and their symbols.

The phase-point operators (Stratonovich-Weyl quantizer) turn functions on
the grid into operators and back.  They are cached on construction:
``(dim**2)`` matrices of size ``dim x dim`` are cheap at desk scale and
make the identity checks below inexpensive.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .linalg import TOL, frob_dist, is_hermitian
from .kernels import Kernel, is_unimodular, validate
from .phasespace import (
    PhaseGrid,
    _fourier_factors,
    number_ket,
    phase_basis,
    phase_function_op,
    phase_ket,
    u_op,
)

#: Kernel moduli below this trigger a conditioning warning on inversion.
CONDITION_TOL = 1e-6


def _displacement_tensor(grid: PhaseGrid) -> np.ndarray:
    """All displacement operators for ``0 <= k, l < dim`` as a 4-D array."""
    d = grid.dim
    upow = np.empty((d, d, d), dtype=complex)
    upow[0] = np.eye(d)
    u = u_op(grid)
    for k in range(1, d):
        upow[k] = upow[k - 1] @ u
    idx = np.arange(d)
    vph = np.exp(2j * np.pi * np.outer(idx, idx) / d)  # vph[l, b]
    pref = np.exp(-1j * np.pi * np.outer(idx, idx) / d)  # pref[k, l]
    return (
        pref[:, :, None, None]
        * upow[:, None, :, :]
        * vph[None, :, None, :]
    )


@dataclass(frozen=True)
class Quantizer:
    """Cached phase-point operators for one grid/kernel pair.

    ``omega[m, n]`` is the operator attached to the grid point
    ``(phi_m, n)``; ``dtensor[k, l]`` holds the displacement operators
    the cache was built from.
    """

    grid: PhaseGrid
    kernel: Kernel
    omega: np.ndarray
    dtensor: np.ndarray


def build_quantizer(grid: PhaseGrid, kernel: Kernel, check: bool = True) -> Quantizer:
    """Assemble the phase-point operators from a kernel.

    Each operator is the kernel-weighted displacement sum carrying the
    plane-wave factor of its grid point.  With ``check`` the kernel is
    validated first and the Hermiticity/unit-trace invariants of the
    result are asserted.
    """
    if kernel.dim != grid.dim:
        raise ValueError(
            f"kernel dimension {kernel.dim} does not match grid dimension {grid.dim}"
        )
    if check and not validate(kernel).valid:
        raise ValueError("kernel does not satisfy the validity conditions")

    d = grid.dim
    dtensor = _displacement_tensor(grid)
    e, f = _fourier_factors(grid)  # e[k, m], f[l, n]
    omega = np.einsum(
        "kl,klab,km,ln->mnab", kernel.values, dtensor, e, f, optimize=True
    ) / d

    if check:
        for m in range(d):
            for n in range(d):
                if not is_hermitian(omega[m, n], tol=10 * TOL):
                    raise ValueError("phase-point operator is not Hermitian")
                if abs(np.trace(omega[m, n]) - 1.0) > 10 * TOL:
                    raise ValueError("phase-point operator has non-unit trace")
    return Quantizer(grid=grid, kernel=kernel, omega=omega, dtensor=dtensor)


def symmetric_phase_point_op(grid: PhaseGrid, m: int, n: int) -> np.ndarray:
    """Closed form of the symmetric-kernel phase-point operator.

    ``(dim/2) * (|phi_m><phi_m|n><n| + |n><n|phi_m><phi_m|)`` -- an
    independent construction used to cross-check the generic build.
    """
    pm = phase_ket(grid, m)
    en = number_ket(grid, n)
    half = np.outer(pm, pm.conj()) @ np.outer(en, en.conj())
    return grid.dim / 2.0 * (half + half.conj().T)


def almost_symmetric_phase_point_op(
    grid: PhaseGrid, m: int, n: int, eps: float
) -> np.ndarray:
    """Closed form of the even-dimension skewed phase-point operator."""
    if grid.dim % 2:
        raise ValueError("almost-symmetric construction needs an even dimension")
    half_n = grid.dim // 2
    pm = phase_ket(grid, m)
    en = number_ket(grid, n)
    p = np.outer(pm, pm.conj()) @ np.outer(en, en.conj())
    pd = p.conj().T
    return half_n * (p + pd) + 1j * half_n * np.tan(eps) * (p - pd)


def quantize(q: Quantizer, values) -> np.ndarray:
    """Map a grid function to its operator.

    The operator is the phase-point-operator average of the function;
    real functions give Hermitian operators for any valid kernel.
    """
    v = np.asarray(values, dtype=complex)
    if v.shape != (q.grid.dim, q.grid.dim):
        raise ValueError("grid function shape does not match the quantizer grid")
    return np.einsum("mn,mnab->ab", v, q.omega) / q.grid.dim


def _warn_if_ill_conditioned(kernel: Kernel):
    mn = float(np.min(np.abs(kernel.values)))
    if mn < CONDITION_TOL:
        warnings.warn(
            f"kernel inversion is ill-conditioned (min |K| = {mn:.3e})",
            stacklevel=3,
        )


def symbol(q: Quantizer, op) -> np.ndarray:
    """Inverse of :func:`quantize`: the grid function of an operator.

    Uses the kernel-division form: displacement traces of the operator
    are divided by the kernel and Fourier-summed back onto the grid.
    """
    a = np.asarray(op, dtype=complex)
    d = q.grid.dim
    if a.shape != (d, d):
        raise ValueError("operator dimension does not match the quantizer grid")
    _warn_if_ill_conditioned(q.kernel)
    t = np.einsum("ab,klab->kl", a, q.dtensor.conj())
    e, f = _fourier_factors(q.grid)
    return np.einsum(
        "kl,km,ln->mn", t / q.kernel.values, e.conj(), f.conj()
    ) / d


def symbol_via_overlaps(q: Quantizer, op) -> np.ndarray:
    """Symbol computed from phase-point-operator overlaps.

    Cross-check path: validates the squared-modulus kernel algebra
    against the primary kernel-division route.
    """
    a = np.asarray(op, dtype=complex)
    d = q.grid.dim
    g = np.einsum("ab,mnba->mn", a, q.omega)
    e, f = _fourier_factors(q.grid)
    h = np.einsum("mn,km,ln->kl", g, e, f)
    w = np.abs(q.kernel.values) ** 2
    return np.einsum("kl,km,ln->mn", h / w, e.conj(), f.conj()) / d**2


def symbol_unimodular(q: Quantizer, op) -> np.ndarray:
    """Shortcut symbol for unimodular kernels: plain overlap traces."""
    if not is_unimodular(q.kernel):
        raise ValueError("shortcut requires a unimodular kernel")
    a = np.asarray(op, dtype=complex)
    return np.einsum("ab,mnba->mn", a, q.omega)


def displacement_from_quantizer(q: Quantizer, k: int, l: int) -> np.ndarray:
    """Rebuild a displacement operator from the phase-point operators.

    Identity check: inverts the kernel-weighted sum defining the cache.
    Valid for ``0 <= k, l < dim``.
    """
    d = q.grid.dim
    if not (0 <= k < d and 0 <= l < d):
        raise ValueError("indices must lie in the principal range")
    e, f = _fourier_factors(q.grid)
    acc = np.einsum("m,n,mnab->ab", e[k].conj(), f[l].conj(), q.omega)
    return acc / (d * q.kernel.values[k, l])


@dataclass(frozen=True)
class QuantizerReport:
    """Maximum deviations of the phase-point-operator identities."""

    hermiticity_dev: float
    trace_dev: float
    phase_sum_dev: float
    number_sum_dev: float
    completeness_dev: float
    overlap_dev: float
    orthogonality_dev: float
    unimodular: bool

    def core_pass(self, tol: float = TOL) -> bool:
        """All kernel-generic identities within ``tol``."""
        return (
            self.hermiticity_dev <= tol
            and self.trace_dev <= tol
            and self.phase_sum_dev <= tol
            and self.number_sum_dev <= tol
            and self.completeness_dev <= tol
            and self.overlap_dev <= tol
        )

    def orthogonality_pass(self, tol: float = TOL) -> bool:
        """Overlap orthogonality; expected only for unimodular kernels."""
        return self.orthogonality_dev <= tol


def verify_quantizer(q: Quantizer) -> QuantizerReport:
    """Measure every phase-point-operator identity on the cache.

    Checks Hermiticity, unit traces, the two axis sums that reproduce
    basis projectors, completeness, the overlap-trace formula, and the
    overlap orthogonality that holds exactly when the kernel is
    unimodular.
    """
    d = q.grid.dim
    omega = q.omega

    herm = max(
        frob_dist(omega[m, n], omega[m, n].conj().T)
        for m in range(d)
        for n in range(d)
    )
    tr = max(
        abs(np.trace(omega[m, n]) - 1.0) for m in range(d) for n in range(d)
    )

    p = phase_basis(q.grid)
    phase_sum = max(
        frob_dist(omega[m].sum(axis=0) / d, np.outer(p[:, m], p[:, m].conj()))
        for m in range(d)
    )
    number_sum = 0.0
    for n in range(d):
        proj = np.zeros((d, d), dtype=complex)
        proj[n, n] = 1.0
        number_sum = max(number_sum, frob_dist(omega[:, n].sum(axis=0) / d, proj))
    completeness = frob_dist(omega.sum(axis=(0, 1)) / d, np.eye(d))

    overlaps = np.einsum("mnab,pqba->mnpq", omega, omega)
    e, f = _fourier_factors(q.grid)
    w = np.abs(q.kernel.values) ** 2
    predicted = np.einsum(
        "kl,km,kp,ln,lq->mnpq", w, e, e.conj(), f, f.conj(), optimize=True
    ) / d
    overlap_dev = float(np.max(np.abs(overlaps - predicted)))

    delta = np.einsum("mp,nq->mnpq", np.eye(d), np.eye(d)) * d
    orth_dev = float(np.max(np.abs(overlaps - delta)))

    return QuantizerReport(
        hermiticity_dev=float(herm),
        trace_dev=float(tr),
        phase_sum_dev=float(phase_sum),
        number_sum_dev=float(number_sum),
        completeness_dev=float(completeness),
        overlap_dev=overlap_dev,
        orthogonality_dev=orth_dev,
        unimodular=is_unimodular(q.kernel),
    )


@dataclass(frozen=True)
class OrderingReport:
    """Deviation of a product quantization from its ordered target."""

    deviation: float
    tan_eps: float

    def ok(self, tol: float = TOL) -> bool:
        return self.deviation <= tol


def ordering_check(q: Quantizer, f1, f2) -> OrderingReport:
    """Check the operator ordering produced by a separable function.

    ``f1`` samples a phase-only factor on the grid angles and ``f2`` a
    number-only factor on the levels.  For the symmetric kernel the
    quantized product must equal the symmetrized operator product; for
    the almost-symmetric kernel an extra ``(i/2)tan(eps)`` commutator
    term appears.
    """
    label = q.kernel.label
    if label not in ("symmetric", "almost-symmetric"):
        raise ValueError(f"ordering check undefined for kernel family {label!r}")
    f1 = np.asarray(f1, dtype=complex)
    f2 = np.asarray(f2, dtype=complex)
    d = q.grid.dim
    if f1.shape != (d,) or f2.shape != (d,):
        raise ValueError("factor samples must have one value per grid line")

    op = quantize(q, np.outer(f1, f2))
    a = phase_function_op(q.grid, f1)
    b = np.diag(f2)
    target = (a @ b + b @ a) / 2.0
    tan_eps = 0.0
    if label == "almost-symmetric":
        tan_eps = float(np.tan(q.kernel.eps))
        target = target + 0.5j * tan_eps * (a @ b - b @ a)
    return OrderingReport(deviation=frob_dist(op, target), tan_eps=tan_eps)
