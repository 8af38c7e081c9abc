"""Braid-group generators on the six-anyon vacuum sector, words, and orbits.

Words are written in operator notation: ``b3 b4' b1'`` is the product
B3 B4^-1 B1^-1, so the *rightmost* letter acts on the state first.
"""

from collections import deque
from dataclasses import dataclass, field
import itertools
import re

import numpy as np
from scipy.linalg import expm

from . import linalg
from .models import r_matrix
from .sector import (build_sector_basis, phi0_state, straddling_channels,
                     straddling_operator)

N_GENERATORS = 5

_TOKEN = re.compile(r"\(|\)|x\d+|b[1-9]'?|B[1-9]'?")


@dataclass(frozen=True)
class BraidWord:
    """Sequence of (generator index, exponent) in operator order."""

    letters: tuple = ()

    def __post_init__(self):
        for g, e in self.letters:
            if not 1 <= g <= N_GENERATORS or e not in (1, -1):
                raise ValueError(f"bad braid letter ({g}, {e})")

    @classmethod
    def parse(cls, text):
        """Parse ``b3 b4' ( b1 b2' ) x5``; a prime denotes the inverse."""
        tokens = _TOKEN.findall(text)
        if "".join(tokens) != re.sub(r"\s+", "", text):
            raise ValueError(f"cannot parse braid word {text!r}")
        stack = [[]]
        i = 0
        while i < len(tokens):
            tok = tokens[i]
            if tok == "(":
                stack.append([])
            elif tok == ")":
                if len(stack) == 1:
                    raise ValueError(f"unbalanced ')' in {text!r}")
                group = stack.pop()
                reps = 1
                if i + 1 < len(tokens) and tokens[i + 1].startswith("x"):
                    reps = int(tokens[i + 1][1:])
                    i += 1
                stack[-1].extend(group * reps)
            elif tok.startswith("x"):
                raise ValueError(f"repetition must follow a ')' in {text!r}")
            else:
                stack[-1].append((int(tok[1]), -1 if tok.endswith("'") else 1))
            i += 1
        if len(stack) != 1:
            raise ValueError(f"unbalanced '(' in {text!r}")
        return cls(tuple(stack[0]))

    @classmethod
    def of(cls, *gens):
        """``BraidWord.of(3, -4, 1)`` is B3 B4^-1 B1."""
        return cls(tuple((abs(g), 1 if g > 0 else -1) for g in gens))

    def inverse(self):
        return BraidWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __mul__(self, other):
        return BraidWord(self.letters + other.letters)

    def __pow__(self, n):
        return BraidWord(self.letters * n)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(f"b{g}" + ("'" if e < 0 else "") for g, e in self.letters)


@dataclass(eq=False)
class BraidRep:
    model: object
    generators: tuple
    inverses: tuple = field(init=False)

    def __post_init__(self):
        self.inverses = tuple(linalg.dagger(b) for b in self.generators)

    @property
    def dim(self):
        return self.generators[0].shape[0]

    def matrix(self, g, e=1):
        return self.generators[g - 1] if e > 0 else self.inverses[g - 1]

    def word_matrix(self, word):
        m = linalg.identity(self.dim)
        for g, e in word.letters:
            m = m @ self.matrix(g, e)
        return m


def _su2_2_generators():
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sz = np.diag([1.0, -1.0]).astype(complex)
    one = np.eye(2, dtype=complex)
    q = -1j * np.pi / 4
    return (
        np.kron(expm(q * sx), one),
        np.kron(expm(q * sz), one),
        expm(q * np.kron(sx, sz)),
        np.kron(one, expm(q * sx)),
        np.kron(one, expm(q * sz)),
    )


def exchange_generators(model):
    """Generators assembled from F and R: pair exchanges on each side and the
    straddling exchange of anyons 3 and 4."""
    basis = build_sector_basis(model)
    f = np.asarray(model.f, dtype=complex)
    r = r_matrix(model)
    one = np.eye(model.n_channels, dtype=complex)
    tail = [model.r[x] for _, x in basis.paired]
    outer = f @ r @ f.conj().T
    return (
        linalg.direct_sum([np.kron(outer, one)] + tail),
        linalg.direct_sum([np.kron(r, one)] + tail),
        straddling_operator(model, model.r),
        linalg.direct_sum([np.kron(one, outer)] + tail),
        linalg.direct_sum([np.kron(one, r)] + tail),
    )


def braid_generators(model):
    """B1..B5 for su2k:2, fib or ds3."""
    if model.name == "su2k:2":
        return BraidRep(model, _su2_2_generators())
    if model.name in ("fib", "ds3"):
        return BraidRep(model, exchange_generators(model))
    raise ValueError(f"no braid representation available for {model.name}")


def straddling_assignment(model):
    """Channel of the (3,4) pair per phi-basis index, as used for B3."""
    scalars, block = straddling_channels(model)
    return {"scalars": {j: str(c) for j, c in sorted(scalars.items())}, "block": block}


def apply_word(rep, word, v):
    """word|v>, with the rightmost letter acting first."""
    if isinstance(word, str):
        word = BraidWord.parse(word)
    v = linalg.as_vector(v)
    if v.shape[0] != rep.dim:
        raise ValueError(f"state has dimension {v.shape[0]}, expected {rep.dim}")
    for g, e in reversed(word.letters):
        v = rep.matrix(g, e) @ v
    return v


@dataclass
class RelationReport:
    unitarity: float
    yang_baxter: float
    far_commutation: float
    involution: float | None
    tol: float

    @property
    def passed(self):
        ok = max(self.unitarity, self.yang_baxter, self.far_commutation) <= self.tol
        return ok and (self.involution is None or self.involution <= self.tol)


def verify_braid_relations(rep, tol=linalg.UNITARY_TOL, check_involution=None):
    b = rep.generators
    uni = max(linalg.unitarity_residual(m) for m in b)
    yb = max(linalg.max_abs(b[i] @ b[i + 1] @ b[i] - b[i + 1] @ b[i] @ b[i + 1])
             for i in range(N_GENERATORS - 1))
    far = max(linalg.max_abs(b[i] @ b[j] - b[j] @ b[i])
              for i in range(N_GENERATORS) for j in range(i + 2, N_GENERATORS))
    if check_involution is None:
        check_involution = rep.model.name == "ds3"
    inv = None
    if check_involution:
        eye = linalg.identity(rep.dim)
        inv = max(linalg.max_abs(m @ m - eye) for m in b)
    return RelationReport(uni, yb, far, inv, tol)


class OrbitTooLarge(RuntimeError):
    pass


@dataclass
class Orbit:
    states: list
    words: list

    def __len__(self):
        return len(self.states)

    def contains(self, v, tol=1e-8):
        stack = np.array(self.states)
        return bool(np.max(np.abs(stack.conj() @ v)) >= 1 - tol)


def orbit_states(rep, start, max_states=10**6, tol=1e-8, generators=None):
    """Breadth-first closure of ``start`` under the generators and inverses,
    identifying states that differ by a global phase."""
    if generators is None:
        generators = [(g, e) for g in range(1, N_GENERATORS + 1) for e in (1, -1)]
    start = linalg.as_vector(start)
    states = [start]
    words = [BraidWord()]
    stack = np.array([start])
    queue = deque([0])
    while queue:
        i = queue.popleft()
        v = states[i]
        for g, e in generators:
            w = rep.matrix(g, e) @ v
            if np.max(np.abs(stack.conj() @ w)) >= 1 - tol:
                continue
            if len(states) >= max_states:
                raise OrbitTooLarge(f"orbit exceeds {max_states} states")
            states.append(w)
            words.append(BraidWord(((g, e),)) * words[i])
            stack = np.vstack([stack, w])
            queue.append(len(states) - 1)
    return Orbit(states, words)


@dataclass
class PermutationScan:
    perms: list
    words: list
    values: np.ndarray
    states: list

    @property
    def max_abs(self):
        return float(np.max(np.abs(self.values)))

    @property
    def is_constant(self):
        return bool(np.ptp(self.values) <= 1e-9)


def permutation_words(n=6):
    """One shortest adjacent-transposition word for each permutation of S_n."""
    ident = tuple(range(n))
    seen = {ident: BraidWord()}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for g in range(1, n):
            q = list(p)
            q[g - 1], q[g] = q[g], q[g - 1]
            q = tuple(q)
            if q not in seen:
                seen[q] = BraidWord(((g, 1),)) * seen[p]
                queue.append(q)
    return seen


def word_permutation(word, n=6):
    p = list(range(n))
    for g, _ in reversed(word.letters):
        p[g - 1], p[g] = p[g], p[g - 1]
    return tuple(p)


def ds3_permutation_scan(rep, witness, start=None):
    """Witness value on w|start> for one word per element of S6."""
    if start is None:
        start = phi0_state(rep.model)
    table = permutation_words(N_GENERATORS + 1)
    perms = sorted(table)
    words = [table[p] for p in perms]
    states = [apply_word(rep, w, start) for w in words]
    values = np.array([witness.expectation(s) for s in states])
    return PermutationScan(perms, words, values, states)


def random_word(rng, length, n_generators=N_GENERATORS):
    gens = rng.integers(1, n_generators + 1, size=length)
    exps = rng.choice((-1, 1), size=length)
    return BraidWord(tuple((int(g), int(e)) for g, e in zip(gens, exps)))


# Named reference words.
FIB_WORD_25 = BraidWord.parse("( b3 b4' b1' b3' b2' ) x5")
SU2_2_PHI0_PRIME = BraidWord.parse("b2' b3' b5 b4 b3 b2")
DS3_OTHER_PAIRING = BraidWord.parse("b3 b4 b2 b1")
DS3_FAMILY_PREFIX = BraidWord.parse("b1 b5 b3 b2 b3 b4")
