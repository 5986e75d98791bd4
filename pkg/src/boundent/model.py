"""Two-qutrit operators, initial states and exact unitary dynamics.

Composite basis index is ``dim_b * a + b`` for the product state ``|a>|b>``.
Single-site levels ``|0>, |1>, |2>`` are identified with spin projections
``m = +1, 0, -1``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import AlphaOutOfRange, DimensionMismatch, InvalidState

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
ALPHA_MIN, ALPHA_MAX = 2.0, 5.0

I3 = np.eye(3, dtype=np.complex128)
I9 = np.eye(9, dtype=np.complex128)


def basis_index(a: int, b: int, dim_b: int = 3) -> int:
    return dim_b * a + b


def ket(*levels: int, dim: int = 3) -> np.ndarray:
    """Product basis vector ``|levels[0] levels[1] ...>``."""
    v = np.ones(1, dtype=np.complex128)
    for lv in levels:
        e = np.zeros(dim, dtype=np.complex128)
        e[lv] = 1.0
        v = np.kron(v, e)
    return v


def projector(v) -> np.ndarray:
    v = np.asarray(v, dtype=np.complex128)
    return np.outer(v, v.conj())


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Validated bipartite state; construction fails on invalid input."""

    mat: np.ndarray
    dim_a: int = 3
    dim_b: int = 3

    def __post_init__(self):
        m = linalg.as_matrix(self.mat).copy()
        n = self.dim_a * self.dim_b
        if m.shape != (n, n):
            raise DimensionMismatch(
                f"matrix shape {m.shape} does not match dims {self.dim_a}x{self.dim_b}")
        herm = float(np.max(np.abs(m - m.conj().T)))
        if herm > HERMITIAN_TOL:
            raise InvalidState(f"not Hermitian: max deviation {herm:.3e}")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > TRACE_TOL:
            raise InvalidState(f"trace {tr} differs from 1")
        lo = linalg.hermitian_eigenvalues(m, HERMITIAN_TOL)[0]
        if lo < -PSD_TOL:
            raise InvalidState(f"negative eigenvalue {lo:.3e}")
        m.setflags(write=False)
        object.__setattr__(self, "mat", m)

    @property
    def dim(self) -> int:
        return self.dim_a * self.dim_b


@dataclass(frozen=True, eq=False)
class UnitaryOperator:
    mat: np.ndarray
    t: float
    beta: float

    def __post_init__(self):
        m = linalg.as_matrix(self.mat).copy()
        dev = np.max(np.abs(m @ m.conj().T - np.eye(m.shape[0])))
        if dev > 1e-12:
            raise ValueError(f"operator is not unitary: max |UU^H - I| = {dev:.3e}")
        m.setflags(write=False)
        object.__setattr__(self, "mat", m)


@dataclass(frozen=True)
class ModelParams:
    alpha: float
    beta: float = -1.0
    t: float = 0.0

    def __post_init__(self):
        check_alpha(self.alpha)


def check_alpha(alpha: float) -> float:
    if not ALPHA_MIN <= alpha <= ALPHA_MAX:
        raise AlphaOutOfRange(f"alpha must lie in [2, 5], got {alpha}")
    return float(alpha)


# -- operators ---------------------------------------------------------------

def spin1_operators():
    """Return ``(sx, sy, sz)`` for spin 1."""
    r = 1.0 / math.sqrt(2.0)
    sx = np.array([[0, r, 0], [r, 0, r], [0, r, 0]], dtype=np.complex128)
    sy = np.array([[0, -1j * r, 0], [1j * r, 0, -1j * r], [0, 1j * r, 0]],
                  dtype=np.complex128)
    sz = np.diag([1.0, 0.0, -1.0]).astype(np.complex128)
    return sx, sy, sz


def spin_dot() -> np.ndarray:
    """Heisenberg coupling s1 . s2 on the 9-dimensional space."""
    return sum(linalg.kron(s, s) for s in spin1_operators())


def swap_permutation() -> np.ndarray:
    """Swap operator built directly from ``S|ab> = |ba>``."""
    s = np.zeros((9, 9), dtype=np.complex128)
    for a in range(3):
        for b in range(3):
            s[basis_index(b, a), basis_index(a, b)] = 1.0
    return s


def swap_operator() -> np.ndarray:
    """Swap as the polynomial ``(s1.s2)^2 + s1.s2 - 1`` in the spin coupling."""
    x = spin_dot()
    return x @ x + x - I9


def singlet_projector() -> np.ndarray:
    x = spin_dot()
    return (x @ x - I9) / 3.0


def singlet_vector() -> np.ndarray:
    return (ket(0, 2) - ket(1, 1) + ket(2, 0)) / math.sqrt(3.0)


def hamiltonian(beta: float) -> np.ndarray:
    """Bilinear-biquadratic coupling ``s1.s2 - beta (s1.s2)^2``."""
    x = spin_dot()
    return x - beta * (x @ x)


def evolution_operator(t: float, beta: float) -> UnitaryOperator:
    """Closed-form ``exp(-iHt)``.

    Uses ``H = S - 3(1 + beta) P - beta`` with commuting ``S`` (``S^2 = 1``)
    and ``P`` (``P^2 = P``), so each exponential is a two-term polynomial.
    """
    s = swap_operator()
    p = singlet_projector()
    swap_part = math.cos(t) * I9 - 1j * math.sin(t) * s
    singlet_part = I9 + (cmath.exp(3j * (1.0 + beta) * t) - 1.0) * p
    u = cmath.exp(1j * beta * t) * (swap_part @ singlet_part)
    return UnitaryOperator(u, float(t), float(beta))


def evolve(rho: DensityMatrix, t: float, beta: float = -1.0) -> DensityMatrix:
    if rho.dim_a != 3 or rho.dim_b != 3:
        raise DimensionMismatch(f"evolution needs a 3x3 state, got {rho.dim_a}x{rho.dim_b}")
    u = evolution_operator(t, beta).mat
    return DensityMatrix(u @ rho.mat @ u.conj().T, 3, 3)


# -- states ------------------------------------------------------------------

def max_entangled_vector() -> np.ndarray:
    return (ket(0, 0) + ket(1, 1) + ket(2, 2)) / math.sqrt(3.0)


def max_entangled_projector() -> DensityMatrix:
    return DensityMatrix(projector(max_entangled_vector()))


def varrho_plus() -> np.ndarray:
    """(|01><01| + |12><12| + |20><20|) / 3"""
    return sum(projector(ket(a, b)) for a, b in ((0, 1), (1, 2), (2, 0))) / 3.0


def varrho_minus() -> np.ndarray:
    """(|10><10| + |21><21| + |02><02|) / 3"""
    return sum(projector(ket(a, b)) for a, b in ((1, 0), (2, 1), (0, 2))) / 3.0


def horodecki_matrix(alpha: float) -> np.ndarray:
    alpha = check_alpha(alpha)
    p_plus = projector(max_entangled_vector())
    return (2.0 * p_plus + alpha * varrho_plus() + (5.0 - alpha) * varrho_minus()) / 7.0


def horodecki_state(alpha: float) -> DensityMatrix:
    return DensityMatrix(horodecki_matrix(alpha))


def horodecki_closed_evolution(alpha: float, a: float, b: float, c: float) -> np.ndarray:
    """``(2 P+ + a rho+ + b rho- + i c [S, rho-]) / 7`` for given coefficients."""
    check_alpha(alpha)
    s = swap_permutation()
    rm = varrho_minus()
    p_plus = projector(max_entangled_vector())
    return (2.0 * p_plus + a * varrho_plus() + b * rm + 1j * c * (s @ rm - rm @ s)) / 7.0


def tiles_vectors() -> list[np.ndarray]:
    e0, e1, e2 = np.eye(3, dtype=np.complex128)
    r = 1.0 / math.sqrt(2.0)
    ones = e0 + e1 + e2
    return [
        r * np.kron(e0, e0 - e1),
        r * np.kron(e0 - e1, e2),
        r * np.kron(e2, e1 - e2),
        r * np.kron(e1 - e2, e0),
        np.kron(ones, ones) / 3.0,
    ]


def pyramid_site_vector(j: int) -> np.ndarray:
    s5 = math.sqrt(5.0)
    h = math.sqrt(1.0 + s5) / 2.0
    ang = 2.0 * math.pi * j / 5.0
    return (2.0 / math.sqrt(5.0 + s5)) * np.array(
        [math.cos(ang), math.sin(ang), h], dtype=np.complex128)


def pyramid_vectors() -> list[np.ndarray]:
    return [np.kron(pyramid_site_vector(j), pyramid_site_vector((2 * j) % 5)) for j in range(5)]


def upb_state(vectors) -> DensityMatrix:
    """Normalised projector onto the complement of an unextendible product basis."""
    occupied = sum(projector(v) for v in vectors)
    n = len(vectors)
    return DensityMatrix((I9 - occupied) / (9 - n))


def upb_tiles_state() -> DensityMatrix:
    return upb_state(tiles_vectors())


def upb_pyramid_state() -> DensityMatrix:
    return upb_state(pyramid_vectors())
