import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from lorentz_entanglement import entanglement as ent
from lorentz_entanglement.linalg import (
    SIGMA_Y,
    dagger,
    eig_hermitian,
    kron,
    partial_trace_B,
    partial_transpose_B,
)

BELL_ALPHA = 1 / math.sqrt(2)
alphas = st.floats(0.001, 0.999)
ns = st.floats(0.0, 1.0)


def random_density(seed, rank=4):
    rng = np.random.default_rng(seed)
    x = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    r = x @ dagger(x)
    return r / np.trace(r).real


def wootters_by_char_poly(rho, dps=50):
    """Independent route: roots of the characteristic polynomial of rho yy rho* yy.

    Evaluated in extended precision so rank-deficient states keep their
    tiny roots accurate before the square root.
    """
    with mp.workdps(dps):
        m = mp.matrix(rho.tolist())
        yy = mp.matrix(np.kron(SIGMA_Y, SIGMA_Y).tolist())
        mc = mp.matrix([[mp.conj(m[i, j]) for j in range(4)] for i in range(4)])
        r = m * yy * mc * yy
        # coefficients of det(x I - r) via Faddeev-LeVerrier
        coeffs, mk = [mp.mpf(1)], mp.zeros(4, 4)
        for k in range(1, 5):
            mk = r * mk + coeffs[-1] * mp.eye(4)
            coeffs.append(-sum((r * mk)[i, i] for i in range(4)) / k)
        roots = mp.polyroots(coeffs, maxsteps=200, extraprec=200)
        lam = sorted((mp.sqrt(abs(z)) for z in roots), reverse=True)
        return max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3]))


def test_state_parameter_validation():
    for bad in (0.0, 1.0, -0.3, 1.2):
        with pytest.raises(ValueError):
            ent.StateParameter(bad)
    p = ent.StateParameter(0.6)
    assert p.beta_partner == pytest.approx(0.8, abs=1e-15)
    assert p.alpha**2 + p.beta_partner**2 == pytest.approx(1, abs=1e-14)


def test_coefficient_table():
    c = ent.coefficient_table(0.6)
    assert np.count_nonzero(c) == 4
    assert c[0, 0, 0, 0] == pytest.approx(0.36)
    assert c[1, 1, 1, 1] == pytest.approx(0.64)
    assert c[0, 0, 1, 1] == c[1, 1, 0, 0] == pytest.approx(0.48)
    assert c[0, 0, 0, 0] + c[1, 1, 1, 1] == pytest.approx(1)


def test_initial_state():
    assert np.allclose(ent.initial_state(BELL_ALPHA), [math.sqrt(2) / 2, 0, 0, math.sqrt(2) / 2])
    assert np.allclose(ent.initial_state(0.6), [0.6, 0, 0, 0.8])
    assert np.linalg.norm(ent.initial_state(0.1)) == pytest.approx(1)


def test_boosted_pure_state():
    assert np.allclose(ent.boosted_pure_state(0.6, 0.0), ent.initial_state(0.6))
    assert np.allclose(ent.boosted_pure_state(BELL_ALPHA, 1.234), ent.initial_state(BELL_ALPHA))
    s = ent.boosted_pure_state(0.6, math.pi / 2)
    assert np.allclose(s, [0.7, -0.1, -0.1, 0.7], atol=1e-15)


def test_boosted_state_is_local_rotation():
    theta = 0.77
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    rot = np.array([[c, -s], [s, c]])
    expected = kron(rot, rot) @ ent.initial_state(0.3)
    assert np.allclose(ent.boosted_pure_state(0.3, theta), expected, atol=1e-15)


def test_concurrence_pure_examples():
    assert ent.concurrence_pure(ent.initial_state(0.6)) == pytest.approx(0.96)
    assert ent.concurrence_pure([1, 0, 0, 0]) == 0
    assert ent.concurrence_pure(ent.boosted_pure_state(0.6, math.pi / 2)) == pytest.approx(0.96, abs=1e-15)
    with pytest.raises(ValueError):
        ent.concurrence_pure([1, 1, 0, 0])


@settings(max_examples=100, deadline=None)
@given(alphas, st.floats(0, math.pi))
def test_concurrence_lorentz_invariant(alpha, theta):
    c = ent.concurrence_pure(ent.boosted_pure_state(alpha, theta))
    assert abs(c - 2 * alpha * math.sqrt(1 - alpha**2)) < 1e-12


def test_concurrence_wootters_examples():
    bell = ent.tau_closed_form(BELL_ALPHA, 1.0)
    assert ent.concurrence_wootters(bell) == pytest.approx(1, abs=1e-12)
    assert ent.concurrence_wootters(np.eye(4) / 4) == 0
    assert ent.concurrence_wootters(ent.tau_closed_form(BELL_ALPHA, 0.0)) == pytest.approx(0, abs=1e-12)


@pytest.mark.parametrize("seed", range(20))
def test_concurrence_wootters_matches_char_poly(seed):
    rho = random_density(seed, rank=2 + seed % 3)
    assert ent.concurrence_wootters(rho) == pytest.approx(wootters_by_char_poly(rho), abs=1e-10)


def test_concurrence_wootters_pure_states():
    rng = np.random.default_rng(8)
    for _ in range(20):
        psi = rng.normal(size=4) + 1j * rng.normal(size=4)
        psi /= np.linalg.norm(psi)
        rho = np.outer(psi, psi.conj())
        assert ent.concurrence_wootters(rho) == pytest.approx(ent.concurrence_pure(psi), abs=1e-12)


def test_concurrence_wootters_rejects_non_density():
    with pytest.raises(ValueError):
        ent.concurrence_wootters(np.eye(4))
    with pytest.raises(ValueError):
        ent.concurrence_wootters(np.diag([1.5, -0.5, 0, 0]))
    with pytest.raises(ValueError):
        ent.concurrence_wootters(np.triu(np.ones((4, 4))) / 4)


def test_spin_blocks():
    b = ent.spin_blocks(1.0)
    assert np.array_equal(b.b11, np.diag([1.0, 0.0]))
    assert np.array_equal(b.b22, np.diag([0.0, 1.0]))
    assert np.array_equal(b.b12, [[0, 1], [0, 0]])
    b = ent.spin_blocks(0.0)
    assert np.array_equal(b.b11, np.eye(2) / 2)
    assert np.array_equal(b.b22, np.eye(2) / 2)
    assert np.array_equal(ent.spin_blocks(0.5).b11, np.diag([0.75, 0.25]))
    for bad in (-0.1, 1.1):
        with pytest.raises(ValueError):
            ent.spin_blocks(bad)


@settings(max_examples=100, deadline=None)
@given(ns)
def test_spin_block_structure(n):
    b = ent.spin_blocks(n)
    for blk in (b.b11, b.b22):
        assert np.trace(blk) == pytest.approx(1)
        assert np.all(np.linalg.eigvalsh(blk) >= -1e-15)
    assert np.array_equal(b.b21, dagger(b.b12))


def test_assemble_tau_examples():
    p = ent.StateParameter(0.6)
    psi = ent.initial_state(p)
    assert np.allclose(ent.assemble_tau(p, 1.0).matrix, np.outer(psi, psi.conj()), atol=1e-15)
    t = ent.assemble_tau(BELL_ALPHA, 0.0).matrix
    assert np.allclose(np.diag(t), 0.25)
    assert t[0, 3] == pytest.approx(0.25)
    assert t[1, 2] == pytest.approx(-0.25)
    assert np.trace(ent.assemble_tau(0.3, 0.7).matrix) == pytest.approx(1, abs=1e-15)


def test_assemble_tau_matches_kron_sum():
    p, n = ent.StateParameter(0.3), 0.4
    b = ent.spin_blocks(n)
    c = ent.coefficient_table(p)
    expected = sum(
        c[i, j, k, l] * kron(b.block(i + 1, k + 1), b.block(j + 1, l + 1))
        for i, j, k, l in zip(*np.nonzero(c))
    )
    assert np.allclose(ent.assemble_tau(p, n).matrix, expected, atol=0)


def test_assemble_tau_equals_closed_form_grid():
    worst = 0.0
    for a in np.linspace(0.01, 0.99, 20):
        for n in np.linspace(0, 1, 20):
            d = ent.assemble_tau(a, n).matrix - ent.tau_closed_form(a, n)
            worst = max(worst, np.abs(d).max())
    assert worst < 1e-12


@settings(max_examples=200, deadline=None)
@given(alphas, ns)
def test_tau_is_density_matrix(alpha, n):
    t = ent.assemble_tau(alpha, n).matrix
    assert np.allclose(t, dagger(t), atol=1e-12)
    assert abs(np.trace(t) - 1) < 1e-12
    assert eig_hermitian(t)[-1] >= -1e-12
    mask = np.array([[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 1, 0], [1, 0, 0, 1]], bool)
    assert np.all(t[~mask] == 0)


def test_pt_eigenvalues_examples():
    assert ent.pt_eigenvalues_closed(BELL_ALPHA, 1.0).as_tuple() == pytest.approx((0.5, -0.5, 0.5, 0.5))
    lam = ent.pt_eigenvalues_closed(0.6, 0.5).as_tuple()
    assert lam == pytest.approx((0.4875, -0.1125, 0.50563, 0.11937), abs=1e-5)
    numeric = eig_hermitian(partial_transpose_B(ent.assemble_tau(0.6, 0.5).matrix))
    assert sorted(lam, reverse=True) == pytest.approx(list(numeric), abs=1e-12)
    lam0 = ent.pt_eigenvalues_closed(0.3, 0.0)
    ab = 0.3 * math.sqrt(1 - 0.09)
    assert lam0.lambda1 == pytest.approx(0.25 + ab / 2)
    assert lam0.lambda2 == pytest.approx(0.25 - ab / 2)
    assert sum(lam0.as_tuple()) == pytest.approx(1)


@settings(max_examples=300, deadline=None)
@given(alphas, ns)
def test_pt_spectrum_properties(alpha, n):
    lam = ent.pt_eigenvalues_closed(alpha, n)
    assert abs(sum(lam.as_tuple()) - 1) < 1e-12
    assert min(lam.lambda1, lam.lambda3, lam.lambda4) >= -1e-12
    numeric = eig_hermitian(partial_transpose_B(ent.assemble_tau(alpha, n).matrix))
    assert np.max(np.abs(np.sort(lam.as_tuple())[::-1] - numeric)) < 1e-10
    ab, r = alpha * math.sqrt(1 - alpha**2), ent.ppt_threshold(n)
    assume(abs(ab - r) > 1e-10)
    assert (lam.lambda2 < 0) == (ab > r)


def test_ppt_threshold():
    assert ent.ppt_threshold(1.0) == 0
    assert ent.ppt_threshold(0.0) == 0.5
    assert ent.ppt_threshold(0.5) == pytest.approx(0.3)


def test_log_negativity_examples():
    assert ent.log_negativity_closed(BELL_ALPHA, 1.0) == pytest.approx(1, abs=1e-12)
    assert ent.log_negativity_closed(0.6, 0.5) == pytest.approx(math.log2(1.225), abs=1e-14)
    assert ent.log_negativity_closed(0.6, 0.5) == pytest.approx(0.29278, abs=1e-5)
    for a in (0.05, 0.5, BELL_ALPHA, 0.9):
        assert ent.log_negativity_closed(a, 0.0) == 0


def test_log_negativity_numeric_examples():
    product = kron(np.diag([0.3, 0.7]), np.diag([0.5, 0.5]))
    assert ent.log_negativity_numeric(product) == 0
    assert ent.log_negativity_numeric(ent.tau_closed_form(BELL_ALPHA, 1.0)) == pytest.approx(1, abs=1e-12)
    tau = ent.assemble_tau(0.6, 0.5).matrix
    assert ent.log_negativity_numeric(tau) == pytest.approx(0.29278174922784594, abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(alphas, ns)
def test_log_negativity_closed_vs_numeric(alpha, n):
    tau = ent.assemble_tau(alpha, n).matrix
    assert abs(ent.log_negativity_closed(alpha, n) - ent.log_negativity_numeric(tau)) < 1e-10


@pytest.mark.parametrize("alpha", [0.05, 0.3, 0.6, BELL_ALPHA, 0.95])
def test_log_negativity_monotone_in_n(alpha):
    vals = [ent.log_negativity_closed(alpha, n) for n in np.linspace(0, 1, 101)]
    assert np.all(np.diff(vals) >= 0)


def test_reduced_density():
    tau = ent.assemble_tau(0.6, 1.0)
    assert np.allclose(ent.reduced_density(tau), np.diag([0.36, 0.64]))
    assert np.allclose(ent.reduced_density(ent.assemble_tau(0.6, 0.0)), np.eye(2) / 2)
    assert np.allclose(ent.reduced_density(ent.assemble_tau(0.6, 0.5)), np.diag([0.43, 0.57]))


@settings(max_examples=100, deadline=None)
@given(alphas, ns)
def test_reduced_density_is_partial_trace(alpha, n):
    tau = ent.assemble_tau(alpha, n)
    assert np.max(np.abs(ent.reduced_density(tau) - partial_trace_B(tau.matrix))) < 1e-12


def test_concurrence_reduced():
    for a in (0.1, 0.6, 0.9):
        c = ent.concurrence_reduced(a, 1.0)
        assert c.value == pytest.approx(2 * a * math.sqrt(1 - a * a), abs=1e-12)
        assert c.is_true_concurrence
    for n in np.linspace(0, 1, 11):
        assert ent.concurrence_reduced(BELL_ALPHA, n).value == pytest.approx(1, abs=1e-12)
    c = ent.concurrence_reduced(0.6, 0.5)
    assert c.value == pytest.approx(math.sqrt(0.86 * 1.14), abs=1e-14)
    assert c.value == pytest.approx(0.99016, abs=1e-5)
    assert not c.is_true_concurrence
    tau = ent.assemble_tau(0.6, 0.5)
    assert c.value == pytest.approx(2 * math.sqrt(np.linalg.det(ent.reduced_density(tau)).real), abs=1e-14)
    assert ent.concurrence_reduced_as_printed(0.6, 1.0) == pytest.approx(0.48)


@settings(max_examples=200, deadline=None)
@given(alphas, ns)
def test_partner_symmetry(alpha, n):
    beta = math.sqrt(1 - alpha**2)
    assume(0 < beta < 1)

    def outputs(a):
        return np.array(
            ent.pt_eigenvalues_closed(a, n).as_tuple()
            + (
                ent.log_negativity_closed(a, n),
                ent.concurrence_reduced(a, n).value,
                ent.concurrence_pure(ent.initial_state(a)),
                ent.concurrence_wootters(ent.assemble_tau(a, n).matrix),
            )
        )

    assert np.max(np.abs(outputs(alpha) - outputs(beta))) < 1e-12


@settings(max_examples=200, deadline=None)
@given(alphas, ns)
def test_wootters_sandwich_and_ppt_agreement(alpha, n):
    tau = ent.assemble_tau(alpha, n).matrix
    cw = ent.concurrence_wootters(tau)
    c0 = ent.concurrence_pure(ent.initial_state(alpha))
    assert cw <= c0 + 1e-10
    if n == 1.0:
        assert cw == pytest.approx(c0, abs=1e-10)
    assert abs(cw - ent.concurrence_x_state(tau)) < 1e-10
    l2 = ent.pt_eigenvalues_closed(alpha, n).lambda2
    assume(abs(l2) > 1e-10)
    assert (cw > 1e-10) == (l2 < -1e-10)
