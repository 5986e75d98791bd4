"""Closed-form spectra versus the numeric pipeline.

The analytic module knows the partial-transpose spectrum and the realignment
singular values of the evolved Horodecki state for every (alpha, t).  Here
they are set against the Jacobi eigensolver, then used to locate the largest
alpha that never becomes free.
"""
# %%
import math

import numpy as np

from boundent import analytic, linalg
from boundent.criteria import partial_transpose, realign
from boundent.model import evolve, horodecki_state
from boundent.validation import run_agreement

alpha, t = 3.9, math.pi / 4
rho = evolve(horodecki_state(alpha), t)
print("PT spectrum, numeric:", np.round(linalg.hermitian_eigenvalues(partial_transpose(rho)), 8))
print("PT spectrum, closed: ", np.round(analytic.pt_spectrum_closed(alpha, t), 8))
print("singular values of R, numeric:", np.round(linalg.singular_values(realign(rho)), 8))
print("singular values of R, closed: ", np.round(analytic.realign_singular_spectrum_closed(alpha, t), 8))

# %% Full grid
result = run_agreement()
for name, dev in result.max_dev.items():
    print(f"{name:>24s}: max deviation {dev:.2e}")

# %% Where free entanglement first appears
threshold = analytic.n1_vanishing_threshold()
ts = np.linspace(0, math.pi, 401)
for a in (threshold - 0.01, threshold, threshold + 0.01):
    worst = max(analytic.negativity_closed(a, s) for s in ts)
    print(f"alpha={a:.4f}: max_t N1 = {worst:.2e}")
