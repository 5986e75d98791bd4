"""Partial-transpose and realignment entanglement detectors."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DimensionMismatch
from .model import DensityMatrix

CLASSIFY_TOL = 1e-9


class Classification(str, enum.Enum):
    FREE = "FREE"
    BOUND = "BOUND"
    UNDETECTED = "UNDETECTED"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CriteriaReport:
    n1: float
    n2: float
    pt_trace_norm: float
    realign_trace_norm: float
    concurrence_lb: float
    concurrence_lb_raw: float
    classification: Classification


def _as_state_matrix(rho) -> tuple[np.ndarray, int, int]:
    if isinstance(rho, DensityMatrix):
        return rho.mat, rho.dim_a, rho.dim_b
    m = linalg.as_matrix(rho)
    d = math.isqrt(m.shape[0])
    if d * d != m.shape[0] or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"cannot infer bipartite dims from shape {m.shape}")
    return m, d, d


def partial_transpose(rho) -> np.ndarray:
    """Transpose on the second factor: ``out[(i,j),(k,l)] = rho[(i,l),(k,j)]``.

    Accepts a :class:`DensityMatrix` or a square array of size ``d^2``.
    """
    m, da, db = _as_state_matrix(rho)
    return m.reshape(da, db, da, db).transpose(0, 3, 2, 1).reshape(da * db, da * db).copy()


def realign(rho) -> np.ndarray:
    """Realignment: ``out[(i,j),(k,l)] = rho[(i,k),(j,l)]``."""
    m, da, db = _as_state_matrix(rho)
    if da != db:
        raise DimensionMismatch(f"realignment needs equal subsystem dims, got {da}x{db}")
    d = da
    return m.reshape(d, d, d, d).transpose(0, 2, 1, 3).reshape(d * d, d * d).copy()


def negativity(rho) -> float:
    return (linalg.trace_norm(partial_transpose(rho)) - 1.0) / 2.0


def realignment_measure(rho) -> float:
    """Signed ``(||rho^R|| - 1) / 2``; negative values are kept."""
    return (linalg.trace_norm(realign(rho)) - 1.0) / 2.0


def classify_values(n1: float, n2: float, tol: float = CLASSIFY_TOL) -> Classification:
    if n1 > tol:
        return Classification.FREE
    if n2 > tol:
        return Classification.BOUND
    return Classification.UNDETECTED


def classify(rho, tol: float = CLASSIFY_TOL) -> Classification:
    return classify_values(negativity(rho), realignment_measure(rho), tol)


def _concurrence_prefactor(n: int) -> float:
    return math.sqrt(2.0 / (n * (n - 1)))


def concurrence_bound_from_norms(pt_norm: float, realign_norm: float, n: int) -> tuple[float, float]:
    raw = _concurrence_prefactor(n) * (max(pt_norm, realign_norm) - 1.0)
    return max(0.0, raw), raw


def concurrence_lower_bound(rho) -> tuple[float, float]:
    """Lower bound on the concurrence of an ``n x n`` state.

    Returns ``(clamped, raw)`` where
    ``raw = sqrt(2 / (n (n - 1))) * (max(||rho^T2||, ||rho^R||) - 1)``.
    """
    _, da, db = _as_state_matrix(rho)
    if da != db:
        raise DimensionMismatch(f"concurrence bound needs an n x n state, got {da}x{db}")
    return concurrence_bound_from_norms(
        linalg.trace_norm(partial_transpose(rho)), linalg.trace_norm(realign(rho)), da)


def report(rho, tol: float = CLASSIFY_TOL) -> CriteriaReport:
    """All detector outputs for one state, sharing the two trace norms."""
    _, da, db = _as_state_matrix(rho)
    if da != db:
        raise DimensionMismatch(f"report needs an n x n state, got {da}x{db}")
    pt_norm = linalg.trace_norm(partial_transpose(rho))
    r_norm = linalg.trace_norm(realign(rho))
    n1 = (pt_norm - 1.0) / 2.0
    n2 = (r_norm - 1.0) / 2.0
    clamped, raw = concurrence_bound_from_norms(pt_norm, r_norm, da)
    return CriteriaReport(
        n1=n1,
        n2=n2,
        pt_trace_norm=pt_norm,
        realign_trace_norm=r_norm,
        concurrence_lb=clamped,
        concurrence_lb_raw=raw,
        classification=classify_values(n1, n2, tol),
    )
