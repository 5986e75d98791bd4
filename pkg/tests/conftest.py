import numpy as np
import pytest

from boundent.model import DensityMatrix

SEED = 20240917


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


def random_unitary(rng, n):
    z = (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_density(rng, dim=9, rank=None) -> np.ndarray:
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real


def random_state(rng, rank=None) -> DensityMatrix:
    return DensityMatrix(random_density(rng, 9, rank))


def random_pure_product(rng) -> DensityMatrix:
    a = rng.normal(size=3) + 1j * rng.normal(size=3)
    b = rng.normal(size=3) + 1j * rng.normal(size=3)
    v = np.kron(a / np.linalg.norm(a), b / np.linalg.norm(b))
    m = np.outer(v, v.conj())
    m = 0.5 * (m + m.conj().T)
    return DensityMatrix(m / np.trace(m).real)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
