"""
OPUC and first-class OLP side by side
=====================================

Build both families for a Bernstein-Szego measure, then rebuild each from
the other and compare coefficients.
"""

import numpy as np

from circleorth import bernstein_szego, build_context, opuc_to_otp, otp_to_opuc

m = bernstein_szego([0.4, 0.3 + 0.1j, -0.2])
ctx = build_context(m, N=5)
opuc, otp = ctx.opuc, ctx.otp

# Verblunsky coefficients come from the Szego recursion
print("alpha:", np.round(opuc.alpha[:8], 6))

# the OLP data (a, b, beta) per level; beta_n != 0 since the alphas are complex
for n in range(1, 4):
    print(f"n={n}  a={otp.a[n]:.6f}  b={otp.b[n]:.6f}  beta={otp.beta[n]:+.6f}")

# Phi_{2n-1} and the reversed Phi_{2n}^* rebuilt from sigma_n, pi_n
for n in range(1, 4):
    odd, even = otp_to_opuc(otp, n)
    e1 = np.max(np.abs((odd - opuc.phi[2 * n - 1]).coeffs))
    e2 = np.max(np.abs((even - opuc.reversed(2 * n) * opuc.kappa[2 * n] ** 2).coeffs))
    print(f"n={n}  OLP -> OPUC residuals {e1:.1e} {e2:.1e}")

# and back: sigma_n, pi_n from Phi_{2n-1}, Phi_{2n}^*
for n in range(1, 4):
    sig, pi = opuc_to_otp(opuc, ctx.lam, otp.a, otp.b, otp.beta, n)
    e = max(np.max(np.abs((sig - otp.monic_sigma(n)).coeffs)), np.max(np.abs((pi - otp.monic_pi(n)).coeffs)))
    print(f"n={n}  OPUC -> OLP residual {e:.1e}")

# kappa_{2n}^2 and alpha_{2n-1} read off from (a, b, beta)
n = 2
a, b, be = otp.a[n], otp.b[n], otp.beta[n]
k2 = 0.25 * (a ** -2 * (1 + be ** 2) + b ** -2)
print("kappa_4^2:", k2, "vs", opuc.kappa[4] ** 2)
