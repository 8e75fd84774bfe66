"""
Schur parameters, the Szego function and finite-n trends
========================================================
"""

import numpy as np

from circleorth import build_context, caratheodory, fourier, geometric, schur_iterate, szego_function
from circleorth.analytic import asymptotic_diagnostics, geronimus_otp_check

m = fourier([1.0, 0.3, -0.1j])

# Schur's algorithm on the Caratheodory series reproduces the Verblunsky coefficients
st = schur_iterate(caratheodory(m, 40), 10)
ctx = build_context(m, 5)
print("max |gamma_n - alpha_n|:", np.max(np.abs(np.array(st.gamma) - ctx.opuc.alpha[:10])))

# the same parameters written through the OLP data
for r in geronimus_otp_check(ctx.otp, st):
    print(r)

# Szego function from log w; exp of the Szego integral is the limit of kappa_n^-2
sz = szego_function(m)
print("exp(S) =", sz.geometric_mean)
print("kappa_n^-2 =", np.round(ctx.opuc.kappa[:10] ** -2.0, 8))

# for a non-finite alpha sequence only trends make sense
g = geometric(0.5)
t = asymptotic_diagnostics(build_context(g, 8), szego_function(g))
for q in ("Q_n", "a_n*b_n", "szego_partial"):
    last = t.series(q)[-1]
    print(f"{q:14s} n={last[0]}  value={last[2]:.10f}  reference={last[3]:.10f}  monotone={t.monotone(q)}")
