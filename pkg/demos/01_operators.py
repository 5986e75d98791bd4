"""Two spin-1 particles: swap, singlet projector and the exact propagator.

Run with ``python demos/01_operators.py``.
"""
# %%
import math

import numpy as np

from boundent import linalg
from boundent.model import (evolution_operator, hamiltonian, singlet_projector, spin1_operators,
                            swap_operator, swap_permutation)

sx, sy, sz = spin1_operators()
print("[sx, sy] == i sz:", np.allclose(sx @ sy - sy @ sx, 1j * sz))
print("Casimir s(s+1) = 2:", np.allclose(sx @ sx + sy @ sy + sz @ sz, 2 * np.eye(3)))

# %% The swap is a polynomial in s1.s2, and it matches the plain permutation.
S = swap_operator()
P = singlet_projector()
print("S built from spins == permutation:", np.allclose(S, swap_permutation()))
print("S^2 = 1:", np.allclose(S @ S, np.eye(9)), " P^2 = P:", np.allclose(P @ P, P))
print("spectrum of S:", linalg.hermitian_eigenvalues(S))
# the two-spin-1 singlet is symmetric under exchange
print("S P = +P:", np.allclose(S @ P, P))

# %% Bilinear-biquadratic Hamiltonian for a few couplings
for beta in (-1.0, 0.0, 0.5):
    print(f"beta={beta:+.1f}  spectrum of H:", np.round(linalg.hermitian_eigenvalues(hamiltonian(beta)), 6))

# %% The closed-form propagator agrees with brute-force exponentiation.
t, beta = 0.83, 0.4
w, v = np.linalg.eigh(hamiltonian(beta))
brute = v @ np.diag(np.exp(-1j * w * t)) @ v.conj().T
print("closed form U(t) == expm(-iHt):", np.allclose(evolution_operator(t, beta).mat, brute))

# At beta = -1 the propagator is the swap (up to phase) after a quarter turn.
u = evolution_operator(math.pi / 2, -1.0).mat
print("U(pi/2) ~ -i S:", np.allclose(u * np.exp(1j * math.pi / 2), -1j * S))
