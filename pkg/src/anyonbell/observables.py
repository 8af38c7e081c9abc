"""Pair-charge measurements, the Bell witnesses W and I3, and LHV bounds."""

from dataclasses import dataclass
import itertools
import math

import numpy as np

from . import linalg
from .sector import build_sector_basis, phi_basis_matrix

PAIRS = ((1, 2), (2, 3), (4, 5), (5, 6))
TSIRELSON = 2 * math.sqrt(2)


def pair_projectors(model, pair):
    """Projectors onto each fusion channel of an adjacent pair, on the sector.

    (2,3) and (5,6) are diagonal in the product basis; (1,2) and (4,5) are
    diagonal in the primed basis, i.e. conjugated by F.  On the paired
    states the channel is fixed by the state.
    """
    pair = tuple(pair)
    if pair not in PAIRS:
        raise ValueError(f"unsupported pair {pair}; expected one of {PAIRS}")
    basis = build_sector_basis(model)
    n = model.n_channels
    f = np.asarray(model.f, dtype=complex)
    eye = np.eye(n, dtype=complex)
    out = {}
    for i, c in enumerate(model.channels):
        local = np.outer(eye[i], eye[i])
        if pair in ((1, 2), (4, 5)):
            local = f @ local @ f.conj().T
        block = np.kron(local, eye) if pair[0] < 4 else np.kron(eye, local)
        tail = [1.0 if x == c else 0.0 for _, x in basis.paired]
        out[c] = linalg.direct_sum([block] + tail)
    return out


def upsilon(model, pair):
    """Pair-charge observable.

    Two-channel models: the +-1 operator (-1 on the vacuum channel).
    Three-channel models: the dict of channel projectors.
    """
    projs = pair_projectors(model, pair)
    if model.n_channels != 2:
        return projs
    return sum((-1.0 if c == model.vacuum else 1.0) * p for c, p in projs.items())


@dataclass(eq=False)
class WitnessOperator:
    model: object
    matrix: np.ndarray
    kind: str
    lhv_bound: float
    quantum_bound: float

    def expectation(self, v):
        return linalg.expectation(self.matrix, v)

    def eigenvalues(self):
        return linalg.hermitian_eigensystem(self.matrix)[0]

    @property
    def max_eigenvalue(self):
        return float(self.eigenvalues()[-1])

    @property
    def min_eigenvalue(self):
        return float(self.eigenvalues()[0])


def build_W(model):
    """W = U12 U45 + U12 U56 - U23 U56 + U23 U45."""
    if model.n_channels != 2:
        raise ValueError(f"W needs two-outcome measurements; use build_I3 for {model.name}")
    u12, u23 = upsilon(model, (1, 2)), upsilon(model, (2, 3))
    u45, u56 = upsilon(model, (4, 5)), upsilon(model, (5, 6))
    w = u12 @ u45 + u12 @ u56 - u23 @ u56 + u23 @ u45
    return WitnessOperator(model, w, "W", 2.0, TSIRELSON)


def build_W_block_form(model, sign=None):
    """W written directly from F and the channel sign on the product block.

    ``sign`` defaults to diag(-1, +1) (vacuum first); any diagonal +-1
    choice applied to all four measurements gives the same operator.
    """
    s = model.sign_operator if sign is None else np.asarray(sign, dtype=complex)
    f = np.asarray(model.f, dtype=complex)
    u = f @ s @ f.conj().T
    k = np.kron
    w4 = k(u, u) + k(u, s) + k(s, u) - k(s, s)
    npaired = len(build_sector_basis(model).paired)
    return linalg.direct_sum([w4] + [2.0] * npaired)


# CGLMP witness for the quorum A1 = (1,2), A2 = (2,3), B1 = (4,5), B2 = (5,6),
# outcomes indexed 0, 1, 2 <-> 1, Lambda, Phi.  Entries: (sign, A pair, a, B pair, b).
_A1, _A2, _B1, _B2 = (1, 2), (2, 3), (4, 5), (5, 6)
I3_TERMS = (
    (+1, _A1, 0, _B1, 0), (+1, _A1, 1, _B1, 1), (+1, _A1, 2, _B1, 2),
    (+1, _A2, 2, _B1, 0), (+1, _A2, 0, _B1, 1), (+1, _A2, 1, _B1, 2),
    (+1, _A2, 0, _B2, 0), (+1, _A2, 1, _B2, 1), (+1, _A2, 2, _B2, 2),
    (+1, _A1, 0, _B2, 0), (+1, _A1, 1, _B2, 1), (+1, _A1, 2, _B2, 2),
    (-1, _A1, 0, _B1, 1), (-1, _A1, 1, _B1, 2), (-1, _A1, 2, _B1, 0),
    (-1, _A2, 0, _B1, 0), (-1, _A2, 1, _B1, 1), (-1, _A2, 2, _B1, 2),
    (-1, _A2, 0, _B2, 1), (-1, _A2, 1, _B2, 2), (-1, _A2, 2, _B2, 0),
    (-1, _A1, 1, _B2, 0), (-1, _A1, 2, _B2, 1), (-1, _A1, 0, _B2, 2),
)


def _local_projectors(model, pair):
    n = model.n_channels
    eye = np.eye(n, dtype=complex)
    f = np.asarray(model.f, dtype=complex)
    out = []
    for i in range(n):
        p = np.outer(eye[i], eye[i])
        if pair in (_A1, _B1):
            p = f @ p @ f.conj().T
        out.append(p)
    return out


def build_I3(model):
    """The three-outcome witness on the 11-dimensional D(S3) sector.

    Product block: the 24 projector products of ``I3_TERMS``; each paired
    state contributes +2 on the diagonal.
    """
    if model.name != "ds3":
        raise ValueError(f"I3 is defined for ds3 only, not {model.name}")
    local = {pair: _local_projectors(model, pair) for pair in PAIRS}
    block = sum(s * np.kron(local[pa][a], local[pb][b]) for s, pa, a, pb, b in I3_TERMS)
    npaired = len(build_sector_basis(model).paired)
    mat = linalg.direct_sum([block] + [2.0] * npaired)
    return WitnessOperator(model, mat, "I3", 2.0, 4.0)


def build_I3_from_measurements(model):
    """Same witness assembled from the full-sector pair projectors."""
    projs = {pair: pair_projectors(model, pair) for pair in PAIRS}
    chans = model.channels
    return sum(s * projs[pa][chans[a]] @ projs[pb][chans[b]]
               for s, pa, a, pb, b in I3_TERMS)


def r_state(model, a):
    """(a/sqrt2)(phi0 + phi3) + (sqrt(1-a^2)/sqrt2)(phi1 - phi2)."""
    if model.n_channels != 2:
        raise ValueError("the r(a) family is defined for two-channel models")
    if abs(a) > 1:
        raise ValueError(f"|a| must not exceed 1, got {a}")
    p = phi_basis_matrix(model)
    b = math.sqrt(max(0.0, 1.0 - a * a))
    return (a * (p[:, 0] + p[:, 3]) + b * (p[:, 1] - p[:, 2])) / math.sqrt(2)


def w_curve(model, a_values):
    w = build_W(model).matrix
    return np.array([linalg.expectation(w, r_state(model, a)) for a in a_values])


def a_plus_closed_form(k=None):
    """Amplitude a_+ maximising <r(a)|W|r(a)> at level k (None: SU(2))."""
    if k is None:
        return -math.sqrt((7 + 2 * math.sqrt(7)) / 14)
    c = lambda m: math.cos(m * math.pi / (k + 2))
    s = 8 * c(2) + c(4) + 5
    inner = c(2) ** 2 + 4 * c(2) + math.sqrt(2 * c(1) ** 4 * s) + 2
    return -math.sqrt(inner) / math.sqrt(s)


def a_minus_closed_form(k=None):
    if k is None:
        return math.sqrt((7 - 2 * math.sqrt(7)) / 14)
    return math.sqrt(1 - a_plus_closed_form(k) ** 2)


def su2k_max_violation(k=None):
    """sec^2(pi/(k+2)) sqrt(4cos(2pi/(k+2)) + cos(4pi/(k+2))/2 + 5/2); sqrt7 for SU(2)."""
    if k is None:
        return math.sqrt(7)
    t = math.pi / (k + 2)
    return math.sqrt(4 * math.cos(2 * t) + 0.5 * math.cos(4 * t) + 2.5) / math.cos(t) ** 2


def _w_correlator(a12, a23, b45, b56):
    return a12 * b45 + a12 * b56 - a23 * b56 + a23 * b45


def _cglmp_correlator(a1, a2, b1, b2):
    # outcomes taken mod 3; A1=(1,2), A2=(2,3), B1=(4,5), B2=(5,6)
    eq = lambda u, v: 1 if (u - v) % 3 == 0 else 0
    return (eq(a1, b1) + eq(b1, a2 + 1) + eq(a2, b2) + eq(b2, a1)
            - eq(a1, b1 - 1) - eq(b1, a2) - eq(a2, b2 - 1) - eq(b2, a1 - 1))


def i3_term_polynomial(a12, a23, b45, b56):
    """Evaluate ``I3_TERMS`` on one deterministic outcome assignment."""
    out = {_A1: a12, _A2: a23, _B1: b45, _B2: b56}
    return sum(s for s, pa, a, pb, b in I3_TERMS if out[pa] == a and out[pb] == b)


@dataclass
class LHVBound:
    max: float
    min: float
    n_strategies: int
    argmax: tuple
    argmin: tuple


def lhv_bound_oracle(witness="W", outcomes=None):
    """Extremes of a correlator over deterministic local strategies.

    ``witness`` is "W" (outcomes +-1), "I3" (outcomes 0, 1, 2) or a
    callable ``f(a12, a23, b45, b56)``; mixtures of deterministic
    strategies cannot exceed these extremes.
    """
    if witness == "W":
        f, outcomes = _w_correlator, outcomes or (-1, 1)
    elif witness == "I3":
        f, outcomes = _cglmp_correlator, outcomes or (0, 1, 2)
    elif callable(witness):
        f = witness
        if outcomes is None:
            raise ValueError("outcomes are required for a custom correlator")
    else:
        raise ValueError(f"unknown witness {witness!r}")
    vals = {s: f(*s) for s in itertools.product(outcomes, repeat=4)}
    smax = max(vals, key=vals.get)
    smin = min(vals, key=vals.get)
    return LHVBound(vals[smax], vals[smin], len(vals), smax, smin)
