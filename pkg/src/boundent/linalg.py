"""Dense complex linear algebra for small operators.

Matrices are plain ``numpy`` arrays of dtype ``complex128``.  The spectral
routines are cyclic Jacobi methods, compiled with numba:

* ``hermitian_eigenvalues`` runs two-sided Jacobi rotations on a Hermitian
  matrix until the off-diagonal mass is negligible.
* ``singular_values`` runs one-sided (Hestenes) Jacobi on the columns of the
  matrix, so singular values close to zero keep full absolute accuracy.

Both sweep the upper triangle in row-major order, which makes the results
bit-for-bit deterministic.
"""
from __future__ import annotations

import math

import numba
import numpy as np

from .errors import DimensionMismatch, NoConvergence, NotHermitian

MAX_SWEEPS = 50
EIG_REL_TOL = 1e-14
SVD_ORTH_TOL = 1e-14
HERMITIAN_TOL = 1e-12


def as_matrix(a) -> np.ndarray:
    """Return ``a`` as a 2-D complex128 array (no copy if already one)."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D matrix, got shape {m.shape}")
    return m


def _require_square(m: np.ndarray) -> None:
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")


def conjugate_transpose(a) -> np.ndarray:
    return as_matrix(a).conj().T.copy()


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


@numba.njit(cache=True)
def _rotation(app, aqq, apq):
    # Unitary 2x2 rotation [[c, s], [-s*conj(ph), c*conj(ph)]] that zeroes
    # apq in G^H [[app, apq], [conj(apq), aqq]] G.
    g = abs(apq)
    ph = apq / g
    tau = (aqq - app) / (2.0 * g)
    sign = 1.0 if tau >= 0.0 else -1.0
    t = sign / (abs(tau) + math.sqrt(1.0 + tau * tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    return c, t * c, ph


@numba.njit(cache=True)
def _jacobi_eig(a, max_sweeps, rel_tol):
    n = a.shape[0]
    fro = 0.0
    for i in range(n):
        for j in range(n):
            fro += a[i, j].real ** 2 + a[i, j].imag ** 2
    fro = math.sqrt(fro)
    out = np.empty(n)
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += a[i, j].real ** 2 + a[i, j].imag ** 2
        if math.sqrt(off) <= rel_tol * fro:
            for i in range(n):
                out[i] = a[i, i].real
            return out, True
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                c, s, ph = _rotation(a[p, p].real, a[q, q].real, apq)
                phc = ph.conjugate()
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * phc * akq
                    a[k, q] = s * akp + c * phc * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * ph * aqk
                    a[q, k] = s * apk + c * ph * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
    return out, False


@numba.njit(cache=True)
def _hestenes_svd(u, max_sweeps, orth_tol):
    n_rows, n = u.shape
    out = np.empty(n)
    fro2 = 0.0
    for i in range(n_rows):
        for j in range(n):
            fro2 += u[i, j].real ** 2 + u[i, j].imag ** 2
    # columns below this squared norm are numerically null; skip them
    null2 = (orth_tol * orth_tol) * fro2
    for sweep in range(max_sweeps):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                alpha = 0.0
                beta = 0.0
                gamma = 0.0j
                for k in range(n_rows):
                    alpha += u[k, p].real ** 2 + u[k, p].imag ** 2
                    beta += u[k, q].real ** 2 + u[k, q].imag ** 2
                    gamma += u[k, p].conjugate() * u[k, q]
                g = abs(gamma)
                if alpha <= null2 or beta <= null2:
                    continue
                if g == 0.0 or g <= orth_tol * math.sqrt(alpha * beta):
                    continue
                rotated = True
                c, s, ph = _rotation(alpha, beta, gamma)
                phc = ph.conjugate()
                for k in range(n_rows):
                    ukp = u[k, p]
                    ukq = u[k, q]
                    u[k, p] = c * ukp - s * phc * ukq
                    u[k, q] = s * ukp + c * phc * ukq
        if not rotated:
            for j in range(n):
                acc = 0.0
                for k in range(n_rows):
                    acc += u[k, j].real ** 2 + u[k, j].imag ** 2
                out[j] = math.sqrt(acc)
            return out, True
    return out, False


def hermitian_eigenvalues(a, tol: float = HERMITIAN_TOL, *,
                          max_sweeps: int = MAX_SWEEPS,
                          rel_tol: float = EIG_REL_TOL) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, ascending.

    ``tol`` bounds the largest entry of ``A - A^H``; anything beyond it raises
    :class:`NotHermitian`.  Iteration stops once the off-diagonal Frobenius
    norm drops below ``rel_tol * ||A||_F``.
    """
    m = as_matrix(a)
    _require_square(m)
    dev = np.max(np.abs(m - m.conj().T)) if m.size else 0.0
    if dev > tol:
        raise NotHermitian(f"max |A - A^H| = {dev:.3e} exceeds {tol:.1e}")
    work = 0.5 * (m + m.conj().T)
    vals, ok = _jacobi_eig(work, max_sweeps, rel_tol)
    if not ok:
        raise NoConvergence(f"Jacobi eigensolver did not converge in {max_sweeps} sweeps")
    return np.sort(vals)


def singular_values(a, *, max_sweeps: int = MAX_SWEEPS,
                    orth_tol: float = SVD_ORTH_TOL) -> np.ndarray:
    """Singular values of a square matrix, descending."""
    m = as_matrix(a)
    _require_square(m)
    vals, ok = _hestenes_svd(m.copy(), max_sweeps, orth_tol)
    if not ok:
        raise NoConvergence(f"one-sided Jacobi SVD did not converge in {max_sweeps} sweeps")
    return np.sort(vals)[::-1].copy()


def trace_norm(a) -> float:
    """Sum of singular values, ``tr sqrt(A A^H)``."""
    return float(np.sum(singular_values(a)))
