#!/usr/bin/env python3
"""Numerical check of every phase-point-operator identity.

Walks the built-in kernels over small grids and prints the worst
deviation of each identity: Hermiticity, unit traces, axis sums,
completeness, the overlap-trace formula, and the orthogonality that only
unimodular kernels enjoy.  Also shows the operator orderings produced by
separable functions.
"""

import numpy as np

import gridwigner as gw

rng = np.random.default_rng(1)

cases = [
    ("symmetric", 3, gw.symmetric_kernel(1)),
    ("symmetric", 5, gw.symmetric_kernel(2)),
    ("wootters", 3, gw.wootters_kernel(1)),
    ("wootters", 5, gw.wootters_kernel(2)),
    ("almost-symmetric", 4, gw.almost_symmetric_kernel(2)),
    ("almost-symmetric", 6, gw.almost_symmetric_kernel(3)),
]

for label, dim, kernel in cases:
    q = gw.build_quantizer(gw.PhaseGrid(dim), kernel)
    rep = gw.verify_quantizer(q)
    print(f"{label} kernel, dim {dim}:")
    print(f"  hermiticity        {rep.hermiticity_dev:.2e}")
    print(f"  unit trace         {rep.trace_dev:.2e}")
    print(f"  phase-axis sums    {rep.phase_sum_dev:.2e}")
    print(f"  number-axis sums   {rep.number_sum_dev:.2e}")
    print(f"  completeness       {rep.completeness_dev:.2e}")
    print(f"  overlap formula    {rep.overlap_dev:.2e}")
    if rep.unimodular:
        print(f"  orthogonality      {rep.orthogonality_dev:.2e} (unimodular)")
    else:
        print(f"  orthogonality      {rep.orthogonality_dev:.2e} (expected nonzero)")

print("\noperator ordering of separable functions:")
q = gw.build_quantizer(gw.PhaseGrid(7), gw.symmetric_kernel(3))
f1 = np.exp(1j * q.grid.phis)
f2 = np.arange(7.0) ** 2
print(f"  symmetric, dim 7:        {gw.ordering_check(q, f1, f2).deviation:.2e}")

q = gw.build_quantizer(gw.PhaseGrid(4), gw.almost_symmetric_kernel(2))
rep = gw.ordering_check(
    q,
    rng.standard_normal(4) + 1j * rng.standard_normal(4),
    rng.standard_normal(4) + 1j * rng.standard_normal(4),
)
print(f"  almost-symmetric, dim 4: {rep.deviation:.2e} (commutator weight {rep.tan_eps:.4f})")
