import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from anyonbell import models
from anyonbell.models import (DS3_IRREPS, GOLDEN, UnknownLabelError, f_matrix, fusion_multiply,
                              get_model, quantum_dimension, quantum_integer, r_symbol, su2k_fusion)

ALL = ("su2", "su2k:2", "su2k:3", "su2k:5", "fib", "ds3")
H = Fraction(1, 2)


def test_fusion_examples():
    assert set(fusion_multiply(get_model("fib"), "tau", "tau")) == {"1", "tau"}
    assert fusion_multiply(get_model("su2k:2"), "sigma", "psi") == (H,)
    assert set(fusion_multiply(get_model("ds3"), "Phi", "Phi")) == {"1", "Lambda", "Phi"}
    for mid in ALL:
        m = get_model(mid)
        for a in m.labels[:4]:
            assert fusion_multiply(m, m.vacuum, a) == (a,)


def test_su2k_fusion_examples():
    assert su2k_fusion(2, H, H) == (0, 1)
    assert su2k_fusion(3, H, 1) == (H, Fraction(3, 2))
    assert su2k_fusion(100, H, H) == (0, 1)
    assert su2k_fusion(2, 1, 1) == (0,)
    with pytest.raises(UnknownLabelError):
        su2k_fusion(2, Fraction(3, 2), H)


def test_unknown_labels():
    with pytest.raises(UnknownLabelError):
        fusion_multiply(get_model("fib"), "tau", "sigma")
    with pytest.raises(UnknownLabelError):
        get_model("su2k:2").label(Fraction(3, 2))
    with pytest.raises(UnknownLabelError):
        quantum_dimension(get_model("ds3"), "Omega")


def test_model_ids():
    assert get_model("su2_2") is get_model("su2k:2") is get_model("ising")
    for bad in ("su3", "su2k:x", "su2k:0"):
        with pytest.raises(ValueError):
            get_model(bad)


@pytest.mark.parametrize("mid", ["su2k:2", "su2k:3", "fib", "ds3"])
def test_fusion_multiplicity_free_and_associative(mid):
    m = get_model(mid)
    labels = m.labels
    for a, b in itertools.product(labels, repeat=2):
        out = m.fuse(a, b)
        assert len(set(out)) == len(out)
        assert set(out) == set(m.fuse(b, a))
    for a, b, c, d in itertools.product(labels, repeat=4):
        lhs = sum(m.N(a, b, e) * m.N(e, c, d) for e in labels)
        rhs = sum(m.N(b, c, f) * m.N(a, f, d) for f in labels)
        assert lhs == rhs


@pytest.mark.parametrize("mid", ["su2k:2", "su2k:3", "su2k:7", "fib", "ds3"])
def test_qdim_consistency(mid):
    m = get_model(mid)
    for a, b in itertools.product(m.labels, repeat=2):
        lhs = m.quantum_dimension(a) * m.quantum_dimension(b)
        rhs = sum(m.quantum_dimension(c) for c in m.fuse(a, b))
        assert abs(lhs - rhs) <= 1e-12


def test_quantum_dimensions():
    assert quantum_dimension(get_model("fib"), "tau") == pytest.approx(GOLDEN, abs=1e-15)
    assert quantum_dimension(get_model("fib"), "1") == 1
    assert quantum_dimension(get_model("ds3"), "Phi") == 2
    assert quantum_dimension(get_model("su2k:2"), "sigma") == pytest.approx(math.sqrt(2))


def test_ds3_irrep_sum_rule():
    assert len(DS3_IRREPS) == 8
    assert sum(d * d for d in DS3_IRREPS.values()) == models.S3_ORDER ** 2


def test_quantum_integers():
    assert quantum_integer(2, 2) == pytest.approx(math.sqrt(2))
    assert quantum_integer(3, 2) == pytest.approx(1.0)
    for m in range(1, 5):
        assert abs(quantum_integer(m, 10**4) - m) <= 1e-6
        assert quantum_integer(m, None) == m


def test_f_matrices_exact():
    s3 = math.sqrt(3)
    assert np.allclose(f_matrix(get_model("su2"), H, H, H, H), 0.5 * np.array([[1, s3], [s3, -1]]),
                       atol=1e-15)
    assert np.allclose(f_matrix(get_model("su2k:2"), "sigma", "sigma", "sigma", "sigma"),
                       np.array([[1, 1], [1, -1]]) / math.sqrt(2), atol=1e-15)
    p = GOLDEN
    assert np.allclose(f_matrix(get_model("fib"), "tau", "tau", "tau", "tau"),
                       [[1 / p, p ** -0.5], [p ** -0.5, -1 / p]], atol=1e-15)
    r = 1 / math.sqrt(2)
    assert np.allclose(f_matrix(get_model("ds3"), "Phi", "Phi", "Phi", "Phi"),
                       [[0.5, 0.5, -r], [0.5, 0.5, r], [-r, r, 0]], atol=1e-15)


@pytest.mark.parametrize("mid", ALL)
def test_f_unitary_real_symmetric_involutory(mid):
    f = get_model(mid).f
    n = len(f)
    assert np.max(np.abs(f.imag)) == 0
    assert np.max(np.abs(f - f.T)) <= 1e-15
    assert np.max(np.abs(f @ f - np.eye(n))) <= 1e-12
    assert np.max(np.abs(f.conj().T @ f - np.eye(n))) <= 1e-12


def test_su2k_f_converges_to_su2():
    assert np.max(np.abs(get_model("su2k:100000").f - get_model("su2").f)) <= 1e-4


def test_f_matrix_gauge_and_errors():
    ds3 = get_model("ds3")
    assert f_matrix(ds3, "Lambda", "Phi", "Lambda", "Phi").tolist() == [[1]]
    with pytest.raises(ValueError):
        f_matrix(ds3, "Lambda", "Lambda", "Lambda", "1")
    with pytest.raises(NotImplementedError):
        f_matrix(get_model("su2k:3"), H, H, 1, 1)


def test_r_symbols():
    assert r_symbol(get_model("su2k:2"), "sigma", "sigma", "psi") == 1j
    assert r_symbol(get_model("fib"), "tau", "tau", "1") == pytest.approx(np.exp(4j * np.pi / 5))
    assert r_symbol(get_model("fib"), "tau", "tau", "tau") == pytest.approx(np.exp(7j * np.pi / 5))
    assert r_symbol(get_model("ds3"), "Phi", "Phi", "Lambda") == -1
    with pytest.raises(ValueError):
        r_symbol(get_model("fib"), "tau", "1", "1")
    with pytest.raises(NotImplementedError):
        r_symbol(get_model("su2"), H, H, 0)


def test_self_duality():
    for mid in ("su2k:2", "fib", "ds3"):
        m = get_model(mid)
        for a in m.labels:
            assert m.vacuum in m.fuse(a, a)
