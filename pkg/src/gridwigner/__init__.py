"""Discrete Wigner functions on finite number-phase grids.

Kernel-parameterized phase-point operators, quantization and symbols,
Wigner functions with full state reconstruction, phase-space line
projectors, the even-dimension half-integer construction, and
continuum-limit studies toward the number-phase Wigner function.
"""

from .linalg import (
    TOL,
    adjoint,
    frob_dist,
    is_hermitian,
    is_positive_semidefinite,
    is_unitary,
    matmul,
    min_diag_pivot,
    outer,
    trace,
)
from .phasespace import (
    PhaseGrid,
    displacement,
    displacement_phase_form,
    fourier_coeffs,
    inverse_fourier,
    number_ket,
    number_op,
    phase_basis,
    phase_function_op,
    phase_ket,
    phase_op,
    u_op,
    u_op_spectral,
    v_op,
)
from .kernels import (
    Kernel,
    KernelValidity,
    almost_symmetric_kernel,
    default_epsilon,
    is_unimodular,
    kernel_from_table,
    load_kernel,
    save_kernel,
    symmetric_kernel,
    validate,
    wootters_kernel,
)
from .quantizer import (
    OrderingReport,
    Quantizer,
    QuantizerReport,
    almost_symmetric_phase_point_op,
    build_quantizer,
    displacement_from_quantizer,
    ordering_check,
    quantize,
    symbol,
    symbol_unimodular,
    symbol_via_overlaps,
    symmetric_phase_point_op,
    verify_quantizer,
)
from .wigner import (
    ReconstructionError,
    WignerGrid,
    check_density,
    expectation,
    load_wigner,
    marginals,
    phase_matrix_elements,
    phase_matrix_elements_symmetric,
    reconstruct,
    reconstruct_symmetric,
    reconstruct_unimodular,
    wigner,
    wigner_almost_symmetric,
    wigner_grid,
    wigner_symmetric,
    wigner_to_csv,
    wigner_to_json,
    wigner_wootters,
)
from .tomography import (
    ConvergenceReport,
    ConvergenceRow,
    EmbeddingError,
    HalfIntegerWignerGrid,
    Line,
    continuum_study,
    displacement_zero_phase,
    embed_state,
    half_phase_ket,
    halfgrid_to_json,
    leonhardt_phase_point_op,
    leonhardt_reconstruct,
    leonhardt_wigner,
    leonhardt_wigner_phase_form,
    leonhardt_wigner_via_ops,
    line_points,
    line_projector,
    load_halfgrid,
    number_phase_target,
    phase_density,
    relate_even,
    relate_odd,
    wootters_matrix_element,
    wootters_omega,
    wootters_target,
)
from .states import (
    fock_state,
    load_density_json,
    maximally_mixed,
    phase_state,
    qubit_state,
    random_density,
    save_density_json,
    superposition01,
)

__version__ = "0.1.0"
