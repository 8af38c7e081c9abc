import math

import numpy as np
import pytest

from anyonbell.models import GOLDEN, get_model
from anyonbell.sector import (build_sector_basis, phi0_state, phi_basis_matrix,
                              phi_power_multiplicities, primed_change_matrix, sector_dimension)

MODELS = {"su2k:2": 4, "su2": 5, "su2k:3": 5, "su2k:7": 5, "fib": 5, "ds3": 11}


@pytest.mark.parametrize("mid,dim", MODELS.items())
def test_dimension_matches_chain_count(mid, dim):
    m = get_model(mid)
    assert build_sector_basis(m).dim == dim
    assert sector_dimension(m, [m.generator] * 6, m.vacuum) == dim


def test_sector_dimension_examples():
    assert sector_dimension(get_model("fib"), ["tau"] * 6, "1") == 5
    assert sector_dimension(get_model("ds3"), ["Phi"] * 6, "1") == 11
    assert sector_dimension(get_model("su2k:2"), ["sigma"] * 6, "1") == 4
    for mid in ("fib", "ds3", "su2k:2"):
        m = get_model(mid)
        assert sector_dimension(m, [m.generator] * 2, m.vacuum) == 1
    assert sector_dimension(get_model("fib"), [], "1") == 1


def test_fibonacci_recursion():
    fib = get_model("fib")
    f = [sector_dimension(fib, ["tau"] * (m + 1), "1") for m in range(1, 13)]
    assert all(f[i] == f[i - 1] + f[i - 2] for i in range(2, len(f)))


def test_phi_power_multiplicities():
    assert phi_power_multiplicities(2) == (1, 1, 1)
    assert phi_power_multiplicities(3) == (1, 1, 3)
    assert phi_power_multiplicities(6) == (11, 11, 21)
    ds3 = get_model("ds3")
    for n in range(1, 13):
        counts = tuple(sector_dimension(ds3, ["Phi"] * n, c) for c in ("1", "Lambda", "Phi"))
        assert counts == phi_power_multiplicities(n)
    with pytest.raises(ValueError):
        phi_power_multiplicities(0)


def test_basis_order_and_paired_states():
    su2 = build_sector_basis(get_model("su2"))
    last = su2.elements[-1]
    assert (last.x, last.y, last.beta) == (1, 1, 1.5)
    assert all(e.beta == 0.5 for e in su2.elements[:4])
    assert [(e.x, e.y) for e in su2.elements[:4]] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert build_sector_basis(get_model("su2k:2")).paired == ()
    ds3 = build_sector_basis(get_model("ds3"))
    assert [e.beta for e in ds3.elements[9:]] == ["Lambda", "1"]
    assert [(e.x, e.y) for e in ds3.elements[9:]] == [("Phi", "Phi"), ("Phi", "Phi")]
    assert [(e.x, e.y) for e in ds3.elements[:3]] == [("1", "1"), ("1", "Lambda"), ("1", "Phi")]


def test_render():
    b = build_sector_basis(get_model("su2"))
    assert b.elements[2].render(b.model) == "|1(1/2,1/2)>_A |0(1/2,1/2)>_B"
    assert len(b.labels()) == 5


def test_unsupported_model():
    from anyonbell.models import AnyonModel
    fake = AnyonModel(name="toy", labels=("1",), generator="1", channels=("1",), qdims={}, f=None)
    with pytest.raises(ValueError):
        build_sector_basis(fake)


def test_phi0_amplitudes():
    assert np.allclose(phi0_state(get_model("su2")), [0.5, 0, math.sqrt(3) / 2, 0, 0], atol=1e-15)
    assert np.allclose(phi0_state(get_model("fib")),
                       [1 / GOLDEN, 0, GOLDEN ** -0.5, 0, 0], atol=1e-15)
    for mid in MODELS:
        assert abs(np.linalg.norm(phi0_state(get_model(mid))) - 1) <= 1e-12


@pytest.mark.parametrize("mid", MODELS)
def test_change_matrix_orthogonal(mid):
    m = get_model(mid)
    o = primed_change_matrix(m)
    n = o.shape[0]
    assert np.max(np.abs(o.imag)) == 0
    assert np.max(np.abs(o.T @ o - np.eye(n))) <= 1e-12
    assert np.max(np.abs(o @ phi_basis_matrix(m) - np.eye(n))) <= 1e-12


def test_change_matrix_structure():
    # phi ordering puts the primed A index fast: columns are F[:, x'] (x) e_y
    m = get_model("su2")
    p = phi_basis_matrix(m)
    f = m.f
    for xp in range(2):
        for y in range(2):
            assert np.allclose(p[:4, xp + 2 * y], np.kron(f[:, xp], np.eye(2)[y]))
    assert p[4, 4] == 1
    # the A-slow alternative F (x) 1 differs from it, so O is not an involution here
    alt = np.kron(f, np.eye(2))
    assert np.max(np.abs(alt @ alt - np.eye(4))) <= 1e-12
    assert np.max(np.abs(p[:4, :4] - alt)) > 0.1
