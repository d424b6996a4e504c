#!/usr/bin/env python3
"""Phase-space lines and their projectors on odd grids.

With the sign kernel every parallel family of lines yields orthogonal
projectors resolving the identity; axis-parallel families reproduce the
basis projectors for any valid kernel, but tilted lines lose
projectivity once the kernel is not unimodular.
"""

import math

import numpy as np

import gridwigner as gw

dim = 5
grid = gw.PhaseGrid(dim)
q_sign = gw.build_quantizer(grid, gw.wootters_kernel(2))
q_cos = gw.build_quantizer(grid, gw.symmetric_kernel(2))

line = gw.Line(1, 2, 0, dim)
print(f"points of the line m + 2n = 0 (mod {dim}): {gw.line_points(line)}")

print("\nsign kernel: projectivity and completeness per family")
for n1 in range(dim):
    for n2 in range(dim):
        if (n1 == 0 and n2 == 0) or math.gcd(math.gcd(n1, n2), dim) > 1:
            continue
        total = np.zeros((dim, dim), dtype=complex)
        worst = 0.0
        for n3 in range(dim):
            p = gw.line_projector(q_sign, gw.Line(n1, n2, n3, dim))
            worst = max(worst, gw.frob_dist(p @ p, p))
            total += p
        print(
            f"  family ({n1},{n2}): ||P^2 - P|| <= {worst:.1e}, "
            f"||sum P - 1|| = {gw.frob_dist(total, np.eye(dim)):.1e}"
        )

print("\naxis families reproduce basis projectors (any kernel):")
pm = gw.phase_ket(grid, 2)
p = gw.line_projector(q_cos, gw.Line(1, 0, 2, dim))
print(f"  vertical line vs |phi_2><phi_2|: {gw.frob_dist(p, np.outer(pm, pm.conj())):.1e}")

print("\ncosine kernel on a tilted line (projectivity is sacrificed):")
p = gw.line_projector(q_cos, gw.Line(1, 1, 0, dim))
print(f"  ||P^2 - P|| = {gw.frob_dist(p @ p, p):.3f}")
