"""Interaction phase gates, the SU(2)_2 Tsirelson routes, the D(S3) phase
family, and search drivers for large witness values."""

from dataclasses import dataclass, field
from functools import lru_cache
import json
import math

import numpy as np
from scipy.linalg import expm
from scipy.optimize import minimize

from . import linalg
from .braiding import (DS3_FAMILY_PREFIX, N_GENERATORS, SU2_2_PHI0_PRIME, BraidWord,
                       apply_word, braid_generators, random_word)
from .models import get_model
from .observables import build_I3, build_W, pair_projectors
from .sector import phi0_state, phi_basis_matrix, straddling_operator

ADJACENT_PAIRS = ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6))

# Interaction angles (alpha_1 .. alpha_6) reported for the D(S3) family.
DS3_REFERENCE_ANGLES = (0.7943, 0.3989, 3.5531, 0.9257, -0.8525, 0.1036)

_SX = np.array([[0, 1], [1, 0]], dtype=complex)
_SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
_SZ = np.diag([1.0, -1.0]).astype(complex)


@dataclass(eq=False)
class PhaseGate:
    pair: tuple
    phases: dict
    matrix: np.ndarray


def phase_gate(model, pair, phases, paired_states_phase=False):
    """Gate letting the pair interact: channel c picks up exp(i phases[c]).

    The vacuum channel never acquires a phase.  Channels missing from
    ``phases`` get angle 0.  For the side pairs, the paired states outside
    the product block are left untouched unless ``paired_states_phase``.
    """
    if isinstance(model, str):
        model = get_model(model)
    pair = tuple(pair)
    if pair not in ADJACENT_PAIRS:
        raise ValueError(f"phase gates act on adjacent pairs {ADJACENT_PAIRS}, got {pair}")
    angles = {c: 0.0 for c in model.channels}
    for c, theta in phases.items():
        c = model.label(c)
        if c not in angles:
            raise ValueError(f"{c} is not a fusion channel of the pair in {model.name}")
        angles[c] = float(theta)
    if angles[model.vacuum] != 0.0:
        raise ValueError("the vacuum channel phase is fixed to 0")
    values = {c: np.exp(1j * t) for c, t in angles.items()}
    if pair == (3, 4):
        mat = straddling_operator(model, values)
    else:
        projs = pair_projectors(model, pair)
        mat = sum(values[c] * p for c, p in projs.items())
        if not paired_states_phase:
            n = model.n_channels ** 2
            for j in range(n, mat.shape[0]):
                mat[j, j] = 1.0
    return PhaseGate(pair, angles, mat)


# ---- SU(2)_2 ----------------------------------------------------------------

def _su2_2():
    model = get_model("su2k:2")
    return model, braid_generators(model)


def su2_2_cp():
    """CP = e^{i pi/4} B2 B1 B2 B3^-1 B2^-1 B1^-1 B5."""
    _, rep = _su2_2()
    word = BraidWord.parse("b2 b1 b2 b3' b2' b1' b5")
    return np.exp(1j * np.pi / 4) * rep.word_matrix(word)


def su2_2_d_gate():
    """The non-Clifford gate D = exp(-i pi/8 sz) (x) 1."""
    return np.kron(expm(-1j * np.pi / 8 * _SZ), np.eye(2))


def su2_2_cp_route():
    """-CP B3 B4 D B2 B3 |phi0>: returns (state, <W>)."""
    model, rep = _su2_2()
    v = apply_word(rep, "b2 b3", phi0_state(model))
    v = su2_2_d_gate() @ v
    v = apply_word(rep, "b3 b4", v)
    v = -su2_2_cp() @ v
    return v, build_W(model).expectation(v)


def su2_2_bell_pair():
    """(|0'>_A |0>_B + |1'>_A |1>_B)/sqrt2 in product coordinates."""
    p = phi_basis_matrix(get_model("su2k:2"))
    return (p[:, 0] + p[:, 3]) / math.sqrt(2)


def su2_2_phi0_prime():
    model, rep = _su2_2()
    return apply_word(rep, SU2_2_PHI0_PRIME, phi0_state(model))


def su2_2_y_rotation_gates():
    """The three phase gates whose product is exp(-i pi/8 sy) on Alice's side.

    Returned in application order: exp(+i pi/4 sz) first, then
    exp(-i pi/8 sx), then exp(-i pi/4 sz).
    """
    model = get_model("su2k:2")
    return (
        phase_gate(model, (2, 3), {"psi": -np.pi / 2}),
        phase_gate(model, (1, 2), {"psi": np.pi / 4}),
        phase_gate(model, (2, 3), {"psi": np.pi / 2}),
    )


def su2_2_local_rotation_route():
    """Braid |phi0> to |phi0'>, then rotate Alice's qubit: (state, <W>)."""
    model, _ = _su2_2()
    v = su2_2_phi0_prime()
    for gate in su2_2_y_rotation_gates():
        v = gate.matrix @ v
    return v, build_W(model).expectation(v)


def su2_2_y_rotation_target():
    return np.kron(expm(-1j * np.pi / 8 * _SY), np.eye(2))


def pauli_euler_residual():
    """|| e^{-i pi/4 sz} e^{-i pi/8 sx} e^{i pi/4 sz} - e^{-i pi/8 sy} ||_max."""
    lhs = expm(-1j * np.pi / 4 * _SZ) @ expm(-1j * np.pi / 8 * _SX) @ expm(1j * np.pi / 4 * _SZ)
    return linalg.max_abs(lhs - expm(-1j * np.pi / 8 * _SY))


# ---- D(S3) phase family ---------------------------------------------------------

@lru_cache(maxsize=None)
def _ds3_setup():
    model = get_model("ds3")
    rep = braid_generators(model)
    start = apply_word(rep, DS3_FAMILY_PREFIX, phi0_state(model))
    start.setflags(write=False)
    return model, rep, start, build_I3(model)


def ds3_interaction_gate(pair, alpha, beta):
    """D_{i,j}(alpha, beta): phase alpha on channel Lambda, beta on Phi."""
    model = _ds3_setup()[0]
    return phase_gate(model, pair, {"Lambda": alpha, "Phi": beta}).matrix


def ds3_phase_family(angles):
    """D34(a1,a2) D12(a3,a4) D23(a5,a6) B1 B5 B3 B2 B3 B4 |phi0>."""
    a = [float(t) for t in angles]
    if len(a) != 6:
        raise ValueError(f"expected 6 angles, got {len(a)}")
    _, _, v, _ = _ds3_setup()
    v = ds3_interaction_gate((2, 3), a[4], a[5]) @ v
    v = ds3_interaction_gate((1, 2), a[2], a[3]) @ v
    return ds3_interaction_gate((3, 4), a[0], a[1]) @ v


def ds3_family_value(angles):
    return _ds3_setup()[3].expectation(ds3_phase_family(angles))


# ---- optimisation -------------------------------------------------------------------

@dataclass
class OptimizationResult:
    angles: np.ndarray
    value: float
    evaluations: int
    converged: bool
    trace: list = field(default_factory=list)

    def trace_json(self):
        return json.dumps(self.trace, indent=2)


def optimize_phases(objective, dim=6, restarts=50, seed=0, x0=None, maxfev=20000,
                    xatol=1e-10, fatol=1e-12):
    """Maximise ``objective`` with Nelder-Mead from random starts in [-pi, pi]^dim.

    ``x0``, if given, replaces the first random start.  The best restart is
    chosen by value, ties broken by lexicographic angle order, so the result
    does not depend on the order restarts finish in.
    """
    if restarts < 1:
        raise ValueError("restarts must be at least 1")
    rng = np.random.default_rng(seed)
    starts = rng.uniform(-np.pi, np.pi, size=(restarts, dim))
    if x0 is not None:
        starts[0] = np.asarray(x0, dtype=float)
    runs = []
    total = 0
    for i, s in enumerate(starts):
        res = minimize(lambda x: -objective(x), s, method="Nelder-Mead",
                       options={"maxfev": maxfev, "xatol": xatol, "fatol": fatol})
        total += res.nfev
        value = float(objective(res.x))
        runs.append((value, tuple(float(t) for t in res.x), res.nfev, bool(res.success)))
    trace = [{"restart": i, "value": v, "evaluations": n, "converged": ok}
             for i, (v, _, n, ok) in enumerate(runs)]
    value, angles, _, ok = min(runs, key=lambda r: (-r[0], r[1]))
    return OptimizationResult(np.array(angles), value, total, ok, trace)


def optimize_ds3_family(restarts=50, seed=0, x0=None, maxfev=20000):
    """Maximise |<I3>| over the six interaction angles."""
    return optimize_phases(lambda x: abs(ds3_family_value(x)), 6, restarts, seed, x0, maxfev)


# ---- braid-word search ----------------------------------------------------------------

@dataclass
class SearchResult:
    word: BraidWord
    value: float
    evaluations: int


def best_violation_search(rep, witness, start, word_length_bound, sample_budget, seed=0,
                          extra_words=()):
    """Random search over braid words, maximising |<witness>|.

    Each sampled word has a uniform random length in [1, word_length_bound];
    every suffix of it (the states produced on the way) is scored as well.
    ``extra_words`` are scored on top of the budget.  Deterministic for a
    fixed seed.
    """
    if sample_budget < 0 or word_length_bound < 0:
        raise ValueError("budget and length bound must be non-negative")
    start = linalg.as_vector(start)
    best_word, best_value = BraidWord(), witness.expectation(start)
    evaluations = 1

    def consider(word):
        nonlocal best_word, best_value, evaluations
        v = start
        for i in range(len(word) - 1, -1, -1):
            g, e = word.letters[i]
            v = rep.matrix(g, e) @ v
            val = witness.expectation(v)
            evaluations += 1
            if abs(val) > abs(best_value) + 1e-12:
                best_word, best_value = BraidWord(word.letters[i:]), val

    for w in extra_words:
        consider(BraidWord.parse(w) if isinstance(w, str) else w)
    if word_length_bound > 0:
        rng = np.random.default_rng(seed)
        for _ in range(sample_budget):
            length = int(rng.integers(1, word_length_bound + 1))
            consider(random_word(rng, length, N_GENERATORS))
    return SearchResult(best_word, float(best_value), evaluations)

