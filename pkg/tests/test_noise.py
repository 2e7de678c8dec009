import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qwsearch import coherence_at, make_instance, state_at, success_probability
from qwsearch.fullsim import extract_subspace_operator
from qwsearch.noise import (
    NoiseConfig,
    depolarize,
    noisy_coherence,
    noisy_evolution,
    noisy_series,
    noisy_state_closed_form,
    noisy_success_probability,
)
from qwsearch.resources import l1_coherence

ALPHAS = (0.0, 0.25, 0.5, 0.9, 1.0)


def projector(v):
    v = np.asarray(v, dtype=float)
    return np.outer(v, v)


def test_noise_config_range():
    NoiseConfig(0)
    NoiseConfig(1)
    for bad in (-0.1, 1.1):
        with pytest.raises(ValueError):
            NoiseConfig(bad)


def test_depolarize_limits():
    rho = projector([0.6, 0.8, 0, 0])
    assert np.allclose(depolarize(rho, NoiseConfig(1)), rho)
    assert np.allclose(depolarize(rho, NoiseConfig(0)), np.eye(4) / 4)
    out = depolarize(projector([1, 0, 0, 0]), NoiseConfig(0.5))
    assert np.allclose(np.diag(out), [5 / 8, 1 / 8, 1 / 8, 1 / 8])


@given(st.floats(0, 1), st.integers(2, 6))
def test_depolarize_preserves_density_matrix(alpha, d):
    rng = np.random.default_rng(d)
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    rho = a @ a.conj().T
    rho /= np.trace(rho)
    out = depolarize(rho, NoiseConfig(alpha))
    assert abs(np.trace(out) - 1) < 1e-12
    assert np.allclose(out, out.conj().T)
    assert np.linalg.eigvalsh(out)[0] > -1e-12


def test_noiseless_evolution_is_pure(k44):
    for t, rho in enumerate(noisy_evolution(k44, NoiseConfig(1), 20)):
        assert np.allclose(rho, projector(state_at(k44, t)), atol=1e-12)


def test_full_depolarization_fixed_point(k44):
    rhos = noisy_evolution(k44, NoiseConfig(0), 10)
    for rho in rhos[1:]:
        assert np.allclose(rho, np.eye(4) / 4, atol=1e-15)


def test_two_step_hand_expansion(k44):
    alpha = 0.5
    u = extract_subspace_operator(k44)
    d0 = projector(state_at(k44, 0))
    d1 = u @ ((1 - alpha) / 4 * np.eye(4) + alpha * d0) @ u.T
    d2 = u @ ((1 - alpha) / 4 * np.eye(4) + alpha * d1) @ u.T
    expected = (1 - alpha**2) / 4 * np.eye(4) + alpha**2 * u @ u @ d0 @ u.T @ u.T
    assert np.allclose(d2, expected, atol=1e-15)
    assert np.allclose(noisy_evolution(k44, NoiseConfig(alpha), 2)[2], expected, atol=1e-12)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_recursion_matches_closed_form_matrix(k44, alpha):
    cfg = NoiseConfig(alpha)
    for t, rho in enumerate(noisy_evolution(k44, cfg, 200)):
        assert np.max(np.abs(rho - noisy_state_closed_form(k44, cfg, t))) < 1e-12


@pytest.mark.parametrize("alpha", ALPHAS)
def test_noise_laws(k44, alpha):
    cfg = NoiseConfig(alpha)
    for t, rho in enumerate(noisy_evolution(k44, cfg, 200)):
        assert abs(rho[0, 0].real - noisy_success_probability(k44, cfg, t)) < 1e-12
        assert abs(l1_coherence(rho) - noisy_coherence(k44, cfg, t)) < 1e-10


def test_noisy_success_examples(k44):
    for t in range(10):
        assert noisy_success_probability(k44, NoiseConfig(1), t) == pytest.approx(success_probability(k44, t))
    assert noisy_success_probability(k44, NoiseConfig(0.5), 2) == pytest.approx(5 / 16, abs=1e-15)
    assert noisy_success_probability(k44, NoiseConfig(0.5), 120) == pytest.approx(0.25, abs=1e-12)


def test_noisy_coherence_examples(k44):
    assert noisy_coherence(k44, NoiseConfig(1), 7) == pytest.approx(coherence_at(k44, 7))
    assert noisy_coherence(k44, NoiseConfig(0.5), 10) == pytest.approx(coherence_at(k44, 10) / 1024)
    assert noisy_coherence(k44, NoiseConfig(0.5), 10) < 3e-3
    assert all(noisy_coherence(k44, NoiseConfig(0), t) == 0 for t in range(1, 10))


@pytest.mark.parametrize("alpha", (0.1, 0.5, 0.9))
def test_envelope(alpha):
    inst = make_instance(8, 5, 2)
    cfg = NoiseConfig(alpha)
    for t in range(100):
        q = noisy_success_probability(inst, cfg, t)
        assert abs(q - 0.25) <= alpha**t * abs(success_probability(inst, t) - 0.25) + 1e-12


def test_noisy_series_agrees_for_sigma_start():
    inst = make_instance(6, 3, 2, "sigma")
    rows = noisy_series(inst, NoiseConfig(0.7), 50)
    assert all(r.agrees for r in rows)
    assert all(0 <= r.Q_t <= 1 and r.C_noisy >= 0 for r in rows)
