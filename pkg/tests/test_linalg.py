import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from anyonbell import linalg
from anyonbell.models import get_model
from anyonbell.observables import build_W


def _random_hermitian(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return a + a.conj().T


def test_matmul_identity_and_mismatch():
    a = np.arange(6.0).reshape(2, 3)
    assert np.array_equal(linalg.matmul(linalg.identity(2), a), a)
    with pytest.raises(ValueError):
        linalg.matmul(a, a)


def test_su2_f_is_involutory():
    f = get_model("su2").f
    assert linalg.max_abs(linalg.matmul(f, f) - np.eye(2)) <= 1e-12


def test_sign_squared():
    s = np.diag([-1.0, 1.0])
    assert np.array_equal(linalg.matmul(s, s), np.eye(2))


def test_kron_conventions():
    s = np.diag([-1.0, 1.0])
    assert np.array_equal(linalg.kron(np.eye(2), np.eye(2)), np.eye(4))
    assert np.array_equal(np.diag(linalg.kron(s, s)).real, [1, -1, -1, 1])
    a, b = np.array([[1, 2], [3, 4]]), np.arange(9).reshape(3, 3)
    k = linalg.kron(a, b)
    assert k.shape == (6, 6)
    # left factor is the slow index: block (i, j) is a_ij * B
    assert np.array_equal(k[3:6, 0:3], 3 * b)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 3), st.integers(0, 2**32 - 1))
def test_kron_associative(n1, n2, n3, seed):
    rng = np.random.default_rng(seed)
    a, b, c = (rng.normal(size=(n, n)) for n in (n1, n2, n3))
    lhs = linalg.kron(linalg.kron(a, b), c)
    rhs = linalg.kron(a, linalg.kron(b, c))
    assert linalg.max_abs(lhs - rhs) <= 1e-12


def test_direct_sum():
    a = np.array([[1, 2], [3, 4]])
    assert np.array_equal(linalg.direct_sum([a]), a)
    d = linalg.direct_sum([np.eye(4), 2.0])
    assert d.shape == (5, 5) and d[4, 4] == 2 and linalg.max_abs(d[:4, :4] - np.eye(4)) == 0
    m = linalg.direct_sum([np.exp(7j * np.pi / 5), np.ones((2, 2))])
    assert m.shape == (3, 3) and m[0, 1] == 0 and m[1, 2] == 1
    with pytest.raises(ValueError):
        linalg.direct_sum([np.ones((2, 3))])


def test_eigensystem_examples():
    assert np.allclose(linalg.hermitian_eigensystem(np.diag([1.0, -1.0]))[0], [-1, 1])
    assert np.allclose(linalg.hermitian_eigensystem([[0, 1], [1, 0]])[0], [-1, 1])
    vals = linalg.hermitian_eigensystem(build_W(get_model("su2")).matrix)[0]
    assert abs(vals[-1] - np.sqrt(7)) <= 1e-10


def test_eigensystem_rejects_non_hermitian_and_large():
    with pytest.raises(ValueError):
        linalg.hermitian_eigensystem([[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        linalg.hermitian_eigensystem(np.eye(65))


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 64), st.integers(0, 2**32 - 1))
def test_eigensystem_contract(n, seed):
    a = _random_hermitian(np.random.default_rng(seed), n)
    vals, vecs = linalg.hermitian_eigensystem(a)
    assert np.all(np.diff(vals) >= 0)
    assert linalg.max_abs(vecs.conj().T @ vecs - np.eye(n)) <= 1e-10
    assert np.max(np.linalg.norm(a @ vecs - vecs * vals, axis=0)) <= 1e-10 * max(1, np.abs(vals).max())
    assert linalg.max_abs(a - vecs @ np.diag(vals) @ vecs.conj().T) <= 1e-9 * max(1, np.abs(vals).max())


def test_states_equal_up_to_phase():
    v = linalg.normalize(np.array([1, 2j, 3]))
    assert linalg.states_equal_up_to_phase(v, np.exp(0.7j) * v, 1e-9)
    assert not linalg.states_equal_up_to_phase(np.array([1, 0]), np.array([0, 1]), 1e-9)
    with pytest.raises(ValueError):
        linalg.states_equal_up_to_phase(np.ones(2), np.ones(3))


def test_phase_residual_and_expm():
    u = np.array([[0, 1], [1, 0]], dtype=complex)
    assert linalg.equal_up_to_phase_residual(1j * u, u) <= 1e-15
    assert linalg.is_unitary(linalg.expm_hermitian(u, 0.3))
    with pytest.raises(ValueError):
        linalg.normalize(np.zeros(3))
