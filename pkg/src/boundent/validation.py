"""Agreement suite: numeric pipeline versus the closed forms in :mod:`analytic`."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import analytic, linalg
from .criteria import negativity, partial_transpose, realign
from .model import evolve, horodecki_closed_evolution, horodecki_state

CHECKS = (
    "pt_spectrum",
    "realign_norm",
    "negativity",
    "realign_singular_values",
    "evolved_state",
)


def default_alpha_grid() -> np.ndarray:
    return np.linspace(2.0, 5.0, 13)


def default_t_grid() -> np.ndarray:
    return np.linspace(0.0, math.pi, 201)


@dataclass
class AgreementResult:
    max_dev: dict = field(default_factory=lambda: {name: 0.0 for name in CHECKS})
    worst_point: dict = field(default_factory=dict)
    n_points: int = 0

    def record(self, name: str, dev: float, alpha: float, t: float) -> None:
        if name not in self.worst_point or dev > self.max_dev[name]:
            self.max_dev[name] = dev
            self.worst_point[name] = (alpha, t)

    def passed(self, tol: float) -> bool:
        return all(v < tol for v in self.max_dev.values())


def compare_point(alpha: float, t: float) -> dict:
    """Deviation of each numeric quantity from its closed form at one grid point."""
    rho_t = evolve(horodecki_state(alpha), t, -1.0)
    pt = partial_transpose(rho_t)
    r = realign(rho_t)

    eig = linalg.hermitian_eigenvalues(pt)
    sv = linalg.singular_values(r)
    k = analytic.abc_coefficients(alpha, t)
    closed_state = horodecki_closed_evolution(alpha, k.a, k.b, k.c)
    return {
        "pt_spectrum": float(np.max(np.abs(eig - analytic.pt_spectrum_closed(alpha, t)))),
        "realign_norm": abs(float(np.sum(sv)) - analytic.realign_norm_closed(alpha, t)),
        "negativity": abs(negativity(rho_t) - analytic.negativity_closed(alpha, t)),
        "realign_singular_values": float(np.max(np.abs(
            sv - analytic.realign_singular_spectrum_closed(alpha, t)))),
        "evolved_state": float(np.max(np.abs(rho_t.mat - closed_state))),
    }


def run_agreement(alpha_grid=None, t_grid=None) -> AgreementResult:
    alphas = default_alpha_grid() if alpha_grid is None else alpha_grid
    times = default_t_grid() if t_grid is None else t_grid
    result = AgreementResult()
    for alpha in alphas:
        for t in times:
            for name, dev in compare_point(float(alpha), float(t)).items():
                result.record(name, dev, float(alpha), float(t))
            result.n_points += 1
    return result
