"""
The two Riemann-Hilbert problems, checked numerically
=====================================================

Boundary values of Cauchy transforms are spectral: with g_k the Fourier
coefficients of f w, C+ sums k >= 0 and C- sums k < 0, so the jump is exact
up to rounding.
"""

import numpy as np

from circleorth import bernstein_szego, build_context, build_opuc_rhp, build_otp_rhp
from circleorth.rhp import (growth_deviation, jump_residual, opuc_cauchy_identity_check, origin_residual,
                            reflection_identity_check, sample_points)

m = bernstein_szego([0.3, -0.2j])
ctx = build_context(m, 4)

for n in (1, 2, 3):
    Y = build_opuc_rhp(ctx.opuc, m, n)
    print(f"OPUC n={n}: jump {jump_residual(Y):.1e}  R|Y diag - I| at R=20, 50:"
          f" {growth_deviation(Y, 20)[0]:.3f}, {growth_deviation(Y, 50)[0]:.3f}")

# OLP solution; at n = 1 the level-0 convention needs lambda_(3,0) = -1
for n in (1, 2, 3):
    Y = build_otp_rhp(ctx, m, n, "edge" if n == 1 else "literal")
    print(f"OLP  n={n}: jump {jump_residual(Y):.1e}  origin {origin_residual(Y):.1e}  det Delta"
          f" {np.linalg.det(Y.delta).real:.15f}")

z = sample_points()
sols = [build_opuc_rhp(ctx.opuc, m, n) for n in range(1, 6)]
print(reflection_identity_check(sols, z))

# the printed constant in the Phi^* equation leaves a residual of size kappa^-2; the corrected one holds
for r in opuc_cauchy_identity_check(ctx.opuc, m, points=z):
    print(r)
