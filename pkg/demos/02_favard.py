"""
Reconstructing a measure from OLP coefficients
==============================================

Read the seven coefficient sequences off a measure, forget the measure, and
recover the Verblunsky coefficients.  Then look at what the three-sequence
data (a, b, beta) alone can and cannot determine.
"""

import numpy as np

from circleorth import SevenSeq, TripleSeq, build_opuc, build_otp, geometric, strong_favard, uniform, validate
from circleorth import weak_favard
from circleorth.errors import AdmissibilityError

m = geometric(0.5)
s = SevenSeq.from_measure(m, 4)
res = strong_favard(s)

print("recovered:", np.round(res.alphas.real, 10))
print("true:     ", np.round(build_opuc(m, 8).alpha[:8].real, 10))
for r in res.report:
    print(r)

# Strict validation also reports the ratio Q_n Q_{n+1} / (4 a_n^2 b_n^2) = 1 - |alpha_{2n}|^2
rep = validate(s)
print("kappa ratios:", {n: round(v, 6) for n, v in rep.kappa_ratio.items()})

# (a, b, beta) fix every odd alpha and only |alpha_{2n}|; the phases are a choice
t = TripleSeq.from_otp(build_otp(m, 4))
for policy in ("positive-real", ("fixed-angle", np.pi / 3)):
    print(policy, np.round(weak_favard(t, policy).alphas, 6))

# Lebesgue sits on the boundary |alpha_{2n}| = 0: strict mode refuses, closed mode returns zeros
leb = TripleSeq.from_otp(build_otp(uniform(), 3))
try:
    weak_favard(leb)
except AdmissibilityError as e:
    print("strict:", e)
print("closed:", weak_favard(leb, mode="closed").alphas)
