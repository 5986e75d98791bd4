"""Closed-form results for the swap-evolved Horodecki family.

Everything here is scalar arithmetic on ``alpha`` and ``t`` and never touches
:mod:`boundent.linalg`, so it can serve as an independent check on the numeric
pipeline.  All formulas assume ``beta = -1`` (Hamiltonian equal to the swap up
to a constant), the only case with closed forms.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import AlphaOutOfRange

SQRT3 = math.sqrt(3.0)


def _check_alpha(alpha: float) -> float:
    if not 2.0 <= alpha <= 5.0:
        raise AlphaOutOfRange(f"alpha must lie in [2, 5], got {alpha}")
    return float(alpha)


@dataclass(frozen=True)
class EvolutionCoefficients:
    a: float
    b: float
    c: float


def abc_coefficients(alpha: float, t: float) -> EvolutionCoefficients:
    """Weights of rho+, rho- and i[S, rho-] in the evolved state (times 7)."""
    alpha = _check_alpha(alpha)
    cos2, sin2 = math.cos(t) ** 2, math.sin(t) ** 2
    return EvolutionCoefficients(
        a=alpha * cos2 + (5.0 - alpha) * sin2,
        b=alpha * sin2 + (5.0 - alpha) * cos2,
        c=0.5 * math.sin(2.0 * t) * (2.0 * alpha - 5.0),
    )


def pt_block_eigenvalues(alpha: float, t: float) -> tuple[list[float], list[float]]:
    """Eigenvalues of the 3x3 and 2x2 diagonal blocks of ``21 rho^T2(t)``."""
    k = abc_coefficients(alpha, t)
    a_block = [2.0, 2.0 + SQRT3 * k.c, 2.0 - SQRT3 * k.c]
    root = math.sqrt((k.a - k.b) ** 2 + 16.0)
    b_block = [(k.a + k.b + root) / 2.0, (k.a + k.b - root) / 2.0]
    return a_block, b_block


def pt_spectrum_closed(alpha: float, t: float) -> list[float]:
    """All nine eigenvalues of ``rho^T2(t)``, ascending."""
    a_block, b_block = pt_block_eigenvalues(alpha, t)
    return sorted([x / 21.0 for x in a_block] + [x / 21.0 for x in b_block] * 3)


def pt_min_eigenvalues(alpha: float, t: float) -> tuple[float, float]:
    """The two possibly negative PT eigenvalues ``(lambda1, lambda2)``.

    ``lambda2`` is triply degenerate.
    """
    alpha = _check_alpha(alpha)
    x = 2.0 * alpha - 5.0
    lam1 = (4.0 - SQRT3 * abs(math.sin(2.0 * t) * x)) / 42.0
    lam2 = (5.0 - math.sqrt(16.0 + x * x * math.cos(2.0 * t) ** 2)) / 42.0
    return lam1, lam2


def negativity_closed(alpha: float, t: float) -> float:
    lam1, lam2 = pt_min_eigenvalues(alpha, t)
    return max(0.0, -lam1) + 3.0 * max(0.0, -lam2)


def realign_singulars_closed(alpha: float, t: float) -> tuple[float, float, float, float, float]:
    """``(xi1, xi2, xi3, zeta1, zeta2)``: singular values of the blocks of ``21 (S rho)^T2``.

    The 2x2 block appears three times, so each zeta is triply degenerate in
    the full spectrum.
    """
    alpha = _check_alpha(alpha)
    x = 2.0 * alpha - 5.0
    xi2 = 0.5 * math.sqrt(1.0 + 3.0 * x * x * math.cos(2.0 * t) ** 2)
    sx = math.sin(2.0 * t) * x
    return 7.0, xi2, xi2, 0.5 * abs(4.0 + sx), 0.5 * abs(4.0 - sx)


def realign_singular_spectrum_closed(alpha: float, t: float) -> list[float]:
    """All nine singular values of ``rho^R(t)``, descending."""
    xi1, xi2, xi3, z1, z2 = realign_singulars_closed(alpha, t)
    return sorted([xi1 / 21.0, xi2 / 21.0, xi3 / 21.0] + [z1 / 21.0, z2 / 21.0] * 3, reverse=True)


def realign_norm_closed(alpha: float, t: float) -> float:
    alpha = _check_alpha(alpha)
    x = 2.0 * alpha - 5.0
    sx = math.sin(2.0 * t) * x
    return (1.0 / 3.0
            + math.sqrt(1.0 + 3.0 * x * x * math.cos(2.0 * t) ** 2) / 21.0
            + (abs(4.0 + sx) + abs(4.0 - sx)) / 14.0)


def realign_norm_simplified(alpha: float, t: float) -> float:
    """Short form of :func:`realign_norm_closed`; only valid for ``alpha <= 4.5``."""
    alpha = _check_alpha(alpha)
    x = 2.0 * alpha - 5.0
    return (19.0 + math.sqrt(1.0 + 3.0 * x * x * math.cos(2.0 * t) ** 2)) / 21.0


def t0_norms_closed(alpha: float) -> tuple[float, float]:
    """``(||rho^T2||, ||rho^R||)`` of the initial state."""
    alpha = _check_alpha(alpha)
    root = math.sqrt(41.0 - 4.0 * alpha * (5.0 - alpha))
    pt_norm = (2.0 + 0.5 * (5.0 + root + abs(5.0 - root))) / 7.0
    realign_norm = (19.0 + 2.0 * math.sqrt(19.0 - 3.0 * alpha * (5.0 - alpha))) / 21.0
    return pt_norm, realign_norm


def n1_vanishing_threshold() -> float:
    """Largest alpha for which the negativity stays zero at every time."""
    return 2.5 + 2.0 / SQRT3
