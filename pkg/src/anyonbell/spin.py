"""Six distinguishable spin-1/2 particles: a brute-force check of the SU(2) witness.

Sites are numbered 1..6; site 1 is the slowest Kronecker index of the
64-dimensional space.  Pair observables are U_ij = (s_i + s_j)^2 - 1, which
is +1 on the pair triplet and -1 on the singlet.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import itertools
import math

import numpy as np

from . import linalg
from .models import get_model
from .observables import build_W
from .sector import build_sector_basis, phi0_state

N_SITES = 6
HALF = Fraction(1, 2)

_S = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex) / 2,
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex) / 2,
    "z": np.array([[1, 0], [0, -1]], dtype=complex) / 2,
}
_UP = np.array([1, 0], dtype=complex)
_DOWN = np.array([0, 1], dtype=complex)


@lru_cache(maxsize=None)
def site_operator(i, axis, n=N_SITES):
    """s_i^axis on n spins (hbar = 1)."""
    if not 1 <= i <= n:
        raise ValueError(f"site {i} out of range 1..{n}")
    out = np.ones((1, 1), dtype=complex)
    for k in range(1, n + 1):
        out = np.kron(out, _S[axis] if k == i else np.eye(2))
    out.setflags(write=False)
    return out


def total_spin_squared(sites=tuple(range(1, N_SITES + 1))):
    tot = 0
    for axis in "xyz":
        s = sum(site_operator(i, axis) for i in sites)
        tot = tot + s @ s
    return tot


def total_spin_projector(sector):
    """Projector onto the S_tot = ``sector`` eigenspace of all six spins."""
    if sector not in (0, 1, 2, 3):
        raise ValueError(f"total spin of six spin-1/2 is 0, 1, 2 or 3, got {sector!r}")
    vals, vecs = linalg.hermitian_eigensystem(total_spin_squared())
    target = sector * (sector + 1)
    cols = vecs[:, np.abs(vals - target) < 1e-8]
    return cols @ cols.conj().T


def spin_upsilon(i, j):
    """(s_i + s_j)^2 - 1."""
    if i == j:
        raise ValueError("U_ij needs two different sites")
    return total_spin_squared((i, j)) - np.eye(2 ** N_SITES)


def _singlet():
    return (np.kron(_UP, _DOWN) - np.kron(_DOWN, _UP)) / math.sqrt(2)


def spin_phi0():
    """Singlets on (1,2), (3,4) and (5,6)."""
    s = _singlet()
    return np.kron(np.kron(s, s), s)


def spin_witness():
    u = {p: spin_upsilon(*p) for p in ((1, 2), (2, 3), (4, 5), (5, 6))}
    return (u[1, 2] @ u[4, 5] + u[1, 2] @ u[5, 6]
            - u[2, 3] @ u[5, 6] + u[2, 3] @ u[4, 5])


# ---- Clebsch-Gordan coupling with a spin 1/2 -----------------------------------------

def _cg_with_half(j, m, ms, J, M):
    """<j m; 1/2 ms | J M> for J = j +- 1/2."""
    if m + ms != M:
        return 0.0
    d = 2 * j + 1
    if J == j + HALF:
        num = j + M + HALF if ms == HALF else j - M + HALF
        return math.sqrt(num / d)
    if J == j - HALF:
        if ms == HALF:
            return -math.sqrt((j - M + HALF) / d)
        return math.sqrt((j + M + HALF) / d)
    return 0.0


def _ms(j):
    return [j - k for k in range(int(2 * j) + 1)]


def _half_states():
    return {HALF: _UP, -HALF: _DOWN}


def couple_half_left(J, states):
    """Couple a new spin-1/2 site (placed to the left) with a multiplet.

    ``states`` maps m -> vector for a spin-j multiplet; the result maps M ->
    vector for total spin J.  Uses <1/2 ms; j m|J M> =
    (-1)^(j + 1/2 - J) <j m; 1/2 ms|J M>.
    """
    j = max(states)
    sign = (-1) ** int(j + HALF - J)
    half = _half_states()
    out = {}
    for M in _ms(J):
        vec = 0
        for ms, m in itertools.product((HALF, -HALF), _ms(j)):
            c = _cg_with_half(j, m, ms, J, M)
            if c:
                vec = vec + sign * c * np.kron(half[ms], states[m])
        out[M] = vec
    return out


def pair_multiplet(x):
    """Two spins coupled to total spin x in {0, 1}."""
    return couple_half_left(Fraction(x), _half_states())


def triple_multiplet(x, beta):
    """Spins (a, b, c): (b, c) coupled to x, then a added to reach beta."""
    return couple_half_left(Fraction(beta), pair_multiplet(x))


def vacuum_pair(a_states, b_states):
    """sum_m (-1)^(j-m) |j m>_A |j -m>_B / sqrt(2j+1)."""
    j = max(a_states)
    return sum((-1) ** int(j - m) * np.kron(a_states[m], b_states[-m])
               for m in _ms(j)) / math.sqrt(2 * j + 1)


def fusion_tree_isometry(gauge=None):
    """64 x 5 matrix whose columns realise the abstract SU(2) basis with spins.

    Column (x, y, beta): pair (2,3) in spin x, pair (5,6) in spin y, each
    triple in spin beta, the two triples coupled to total spin 0.
    ``gauge`` optionally multiplies each column by a sign.
    """
    basis = build_sector_basis(get_model("su2"))
    cols = []
    for e in basis.elements:
        a = triple_multiplet(e.x, e.beta)
        b = triple_multiplet(e.y, e.beta)
        cols.append(vacuum_pair(a, b))
    v = np.array(cols).T
    if gauge is not None:
        v = v * np.asarray(gauge)
    return v


@dataclass
class OracleReport:
    spin_eigenvalues: np.ndarray
    abstract_eigenvalues: np.ndarray
    spectrum_residual: float
    charpoly_residual: float
    isometry_residual: float
    entrywise_residual: float
    gauge: tuple
    max_eigenvalue: float
    phi0_spin: float
    phi0_abstract: float
    phi0_overlap: float
    sector_leakage: float
    paired_upsilon_values: dict

    @property
    def passed(self):
        return (self.spectrum_residual <= 1e-9 and self.entrywise_residual <= 1e-9
                and abs(self.max_eigenvalue - math.sqrt(7)) <= 1e-9
                and abs(self.phi0_spin - self.phi0_abstract) <= 1e-9)


def oracle_equivalence_report():
    w_spin = spin_witness()
    w_abs = build_W(get_model("su2")).matrix

    vals, vecs = linalg.hermitian_eigensystem(total_spin_squared())
    singlet = vecs[:, np.abs(vals) < 1e-8]
    restricted = singlet.conj().T @ w_spin @ singlet
    ev_spin = linalg.hermitian_eigensystem(restricted)[0]
    ev_abs = linalg.hermitian_eigensystem(w_abs)[0]
    charpoly = linalg.max_abs(np.poly(ev_spin) - np.poly(ev_abs))

    v0 = fusion_tree_isometry()
    iso = linalg.max_abs(v0.conj().T @ v0 - np.eye(v0.shape[1]))
    # column signs depend on coupling-order conventions; pick the matching ones
    best = None
    for signs in itertools.product((1, -1), repeat=v0.shape[1] - 1):
        gauge = (1,) + signs
        v = v0 * np.asarray(gauge)
        res = linalg.max_abs(v.conj().T @ w_spin @ v - w_abs)
        if best is None or res < best[0]:
            best = (res, gauge)
    entry, gauge = best
    v = v0 * np.asarray(gauge)

    p0 = total_spin_projector(0)
    leak = max(linalg.max_abs(p0 @ spin_upsilon(*p) - spin_upsilon(*p) @ p0)
               for p in ((1, 2), (2, 3), (4, 5), (5, 6)))
    phi0 = spin_phi0()
    abstract_phi0 = phi0_state(get_model("su2"))
    paired = v[:, -1]
    upsilons = {f"{i},{j}": linalg.expectation(spin_upsilon(i, j), paired)
                for i, j in ((1, 2), (2, 3), (4, 5), (5, 6))}
    return OracleReport(
        spin_eigenvalues=ev_spin,
        abstract_eigenvalues=ev_abs,
        spectrum_residual=float(np.max(np.abs(ev_spin - ev_abs))),
        charpoly_residual=charpoly,
        isometry_residual=iso,
        entrywise_residual=entry,
        gauge=gauge,
        max_eigenvalue=float(ev_spin[-1]),
        phi0_spin=linalg.expectation(w_spin, phi0),
        phi0_abstract=linalg.expectation(w_abs, abstract_phi0),
        phi0_overlap=float(abs(np.vdot(v.conj().T @ phi0, abstract_phi0))),
        sector_leakage=leak,
        paired_upsilon_values=upsilons,
    )
