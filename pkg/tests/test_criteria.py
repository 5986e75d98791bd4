import math

import numpy as np
import pytest

from boundent import linalg
from boundent.criteria import (
    Classification, classify, classify_values, concurrence_lower_bound, negativity,
    partial_transpose, realign, realignment_measure, report,
)
from boundent.errors import DimensionMismatch
from boundent.model import (
    DensityMatrix, horodecki_state, max_entangled_projector, swap_permutation, upb_tiles_state,
)

from conftest import random_pure_product, random_state, random_unitary

MIXED = DensityMatrix(np.eye(9) / 9)


def brute_partial_transpose(m, d=3):
    out = np.zeros_like(m)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                for l in range(d):
                    out[d * i + j, d * k + l] = m[d * i + l, d * k + j]
    return out


def brute_realign(m, d=3):
    out = np.zeros_like(m)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                for l in range(d):
                    out[d * i + j, d * k + l] = m[d * i + k, d * j + l]
    return out


def test_index_conventions_match_brute_force(rng):
    rho = random_state(rng)
    assert np.array_equal(partial_transpose(rho), brute_partial_transpose(rho.mat))
    assert np.array_equal(realign(rho), brute_realign(rho.mat))


def test_partial_transpose_unequal_dims(rng):
    g = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
    m = g @ g.conj().T
    rho = DensityMatrix(m / np.trace(m).real, 2, 3)
    pt = partial_transpose(rho)
    t4 = rho.mat.reshape(2, 3, 2, 3)
    for i, j, k, l in np.ndindex(2, 3, 2, 3):
        assert pt[3 * i + j, 3 * k + l] == t4[i, l, k, j]
    with pytest.raises(DimensionMismatch):
        realign(rho)
    with pytest.raises(DimensionMismatch):
        concurrence_lower_bound(rho)


def test_partial_transpose_examples():
    np.testing.assert_array_equal(partial_transpose(MIXED), np.eye(9) / 9)
    np.testing.assert_allclose(partial_transpose(max_entangled_projector()),
                               swap_permutation() / 3, atol=1e-15)


def test_partial_transpose_involution(rng):
    for _ in range(20):
        rho = random_state(rng)
        assert np.array_equal(partial_transpose(partial_transpose(rho)), rho.mat)


def test_partial_transpose_preserves_trace_and_hermiticity(rng):
    for _ in range(20):
        pt = partial_transpose(random_state(rng))
        assert np.array_equal(pt, pt.conj().T)
        assert abs(linalg.hermitian_eigenvalues(pt).sum() - 1) < 1e-12


def test_realign_examples():
    r = realign(MIXED)
    assert linalg.trace_norm(r) == pytest.approx(1 / 3, abs=1e-14)
    np.testing.assert_allclose(realign(max_entangled_projector()), np.eye(9) / 3, atol=1e-15)
    assert realignment_measure(max_entangled_projector()) == pytest.approx(1.0, abs=1e-12)
    assert realignment_measure(MIXED) == pytest.approx(-1 / 3, abs=1e-14)


def test_realign_equals_swap_then_pt(rng):
    s = swap_permutation()
    for _ in range(20):
        rho = random_state(rng)
        lhs = linalg.trace_norm(realign(rho))
        rhs = linalg.trace_norm(partial_transpose(s @ rho.mat))
        assert lhs == pytest.approx(rhs, abs=1e-10)


def test_negativity_examples():
    assert negativity(horodecki_state(3.5)) == pytest.approx(0.0, abs=1e-10)
    closed = ((2 + math.sqrt(32)) / 7 - 1) / 2
    assert negativity(horodecki_state(4.5)) == pytest.approx(closed, abs=1e-12)
    assert negativity(horodecki_state(4.5)) == pytest.approx(0.0469182, abs=1e-7)
    assert negativity(max_entangled_projector()) == pytest.approx(1.0, abs=1e-10)


def test_negativity_equals_negative_eigenvalue_sum(rng):
    for _ in range(20):
        rho = random_state(rng, rank=int(rng.integers(1, 4)))
        eig = linalg.hermitian_eigenvalues(partial_transpose(rho))
        assert negativity(rho) == pytest.approx(np.sum(np.maximum(0, -eig)), abs=1e-10)


def test_realignment_measure_examples():
    closed = ((19 + 2 * math.sqrt(3.25)) / 21 - 1) / 2
    assert realignment_measure(horodecki_state(3.5)) == pytest.approx(closed, abs=1e-12)
    assert closed == pytest.approx(0.0382274, abs=1e-7)
    assert realignment_measure(upb_tiles_state()) == pytest.approx(0.0435, abs=5e-4)


@pytest.mark.parametrize("alpha, label", [
    (2.8, Classification.UNDETECTED),
    (3.9, Classification.BOUND),
    (4.5, Classification.FREE),
])
def test_classify_examples(alpha, label):
    assert classify(horodecki_state(alpha)) is label


def test_classify_rules():
    assert classify_values(1e-3, -1.0) is Classification.FREE
    assert classify_values(0.0, 1e-3) is Classification.BOUND
    assert classify_values(1e-10, 1e-10) is Classification.UNDETECTED
    assert classify_values(0.0, 1e-3, tol=1e-2) is Classification.UNDETECTED
    assert str(Classification.BOUND) == "BOUND"


def test_concurrence_lower_bound_examples():
    clamped, raw = concurrence_lower_bound(max_entangled_projector())
    assert raw == pytest.approx(2 / math.sqrt(3), abs=1e-12)
    assert clamped == raw
    clamped, raw = concurrence_lower_bound(upb_tiles_state())
    assert raw == pytest.approx(0.087 / math.sqrt(3), abs=1e-3)
    clamped, raw = concurrence_lower_bound(MIXED)
    assert clamped == 0.0
    assert raw == pytest.approx(0.0, abs=1e-14)


def test_concurrence_bound_below_pure_maximum():
    _, raw = concurrence_lower_bound(max_entangled_projector())
    assert raw <= math.sqrt(2 * (1 - 1 / 3)) + 1e-10


def test_concurrence_raw_nonnegative_for_states(rng):
    # ||rho^T2|| >= |tr rho^T2| = 1, so the raw bound cannot go below zero for a state
    for _ in range(20):
        clamped, raw = concurrence_lower_bound(random_state(rng))
        assert raw >= -1e-12
        assert clamped == max(0.0, raw)


def test_ppt_states_have_zero_negativity(rng):
    # separable mixtures of product states are PPT
    for _ in range(10):
        weights = rng.dirichlet(np.ones(4))
        m = sum(w * random_pure_product(rng).mat for w in weights)
        rho = DensityMatrix(0.5 * (m + m.conj().T))
        assert linalg.hermitian_eigenvalues(partial_transpose(rho))[0] >= -1e-12
        assert negativity(rho) == pytest.approx(0.0, abs=1e-10)


def test_pure_product_realignment_norm_one(rng):
    for _ in range(20):
        assert linalg.trace_norm(realign(random_pure_product(rng))) == pytest.approx(1.0, abs=1e-10)


def test_local_unitary_invariance(rng):
    for _ in range(20):
        rho = random_state(rng, rank=int(rng.integers(1, 9)))
        w = np.kron(random_unitary(rng, 3), random_unitary(rng, 3))
        m = w @ rho.mat @ w.conj().T
        moved = DensityMatrix(0.5 * (m + m.conj().T))
        assert negativity(moved) == pytest.approx(negativity(rho), abs=1e-10)
        assert realignment_measure(moved) == pytest.approx(realignment_measure(rho), abs=1e-10)


def test_swap_covariance(rng):
    s = swap_permutation()
    for _ in range(20):
        rho = random_state(rng, rank=int(rng.integers(1, 9)))
        swapped = DensityMatrix(s @ rho.mat @ s)
        assert negativity(swapped) == pytest.approx(negativity(rho), abs=1e-10)
        assert realignment_measure(swapped) == pytest.approx(realignment_measure(rho), abs=1e-10)


def test_report_invariants(rng):
    for rho in [random_state(rng) for _ in range(10)] + [horodecki_state(3.9), upb_tiles_state()]:
        rep = report(rho)
        assert rep.n1 == pytest.approx((rep.pt_trace_norm - 1) / 2, abs=1e-15)
        assert rep.n2 == pytest.approx((rep.realign_trace_norm - 1) / 2, abs=1e-15)
        assert rep.n1 >= -1e-12
        assert rep.concurrence_lb >= 0
        assert rep.classification is classify_values(rep.n1, rep.n2)
        assert rep.n1 == pytest.approx(negativity(rho), abs=1e-15)


def test_raw_arrays_accepted():
    assert negativity(max_entangled_projector().mat) == pytest.approx(1.0, abs=1e-10)
    with pytest.raises(DimensionMismatch):
        negativity(np.eye(5) / 5)
