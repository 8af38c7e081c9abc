"""The total-charge-vacuum sector of six identical anyons.

Anyons 1-3 belong to Alice (A) and 4-6 to Bob (B).  Each triple is
expanded in a local fusion basis |x(g, beta)>: ``x`` is the fusion channel
of the pair (2,3) on A, resp. (5,6) on B, and ``beta`` the total charge of
the triple.  Vacuum total charge forces both triples to share ``beta``.

Two orderings are used and kept apart on purpose:

* the *product* basis, ``{|x>_A |y>_B} ⊔ paired states``, with A the slow
  index.  Braid generators, measurement operators and witnesses are
  matrices in this basis.
* the *phi* basis ``|phi_j> = |x'>_A |y>_B`` with the primed A-index fast
  (j = x' + n*y), followed by the paired states.  This is the order in
  which the one-parameter state families and the straddling exchange are
  written down.
"""

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction

import numpy as np

from .models import format_label


def sector_dimension(model, anyons, total):
    """Number of fusion paths of ``anyons`` (in order) ending in ``total``."""
    anyons = [model.label(a) for a in anyons]
    total = model.label(total)
    if not anyons:
        return 1 if total == model.vacuum else 0
    counts = {anyons[0]: 1}
    for a in anyons[1:]:
        nxt = defaultdict(int)
        for b, n in counts.items():
            for c in model.fuse(b, a):
                nxt[c] += n
        counts = nxt
    return counts.get(total, 0)


def phi_power_multiplicities(n):
    """Multiplicities of (1, Lambda, Phi) in Phi^{x n} for D(S3), closed form."""
    if n < 1:
        raise ValueError("n must be at least 1")
    m1 = (2 ** (n - 1) + (-1) ** n) // 3
    mphi = (2 ** n + (-1) ** (n - 1)) // 3
    return m1, m1, mphi


@dataclass(frozen=True)
class BasisElement:
    x: object
    y: object
    beta: object

    def render(self, model, primed=False):
        g = format_label(model.generator)
        b = format_label(self.beta)
        p = "'" if primed else ""
        return (f"|{format_label(self.x)}{p}({g},{b})>_A "
                f"|{format_label(self.y)}({g},{b})>_B")


@dataclass(eq=False)
class SectorBasis:
    model: object
    elements: tuple
    # (beta, x) for the states outside the product block, in basis order
    paired: tuple

    @property
    def dim(self):
        return len(self.elements)

    @property
    def n_channels(self):
        return self.model.n_channels

    @property
    def product_dim(self):
        return self.n_channels ** 2

    def index(self, element):
        return self.elements.index(element)

    def labels(self):
        return [e.render(self.model) for e in self.elements]

    def __len__(self):
        return self.dim


def paired_states(model):
    """(beta, x) pairs with beta != generator, in the order they are appended.

    Each such beta must admit exactly one channel x; this is checked.
    """
    g = model.generator
    out = []
    for beta in reversed(model.labels):
        if beta == g:
            continue
        xs = [x for x in model.channels if model.N(x, g, beta)]
        if not xs:
            continue
        if len(xs) != 1:
            raise ValueError(f"beta={beta} admits {len(xs)} channels in {model.name}")
        out.append((beta, xs[0]))
    return tuple(out)


@lru_cache(maxsize=None)
def _build_sector_basis(model):
    g = model.generator
    for x in model.channels:
        if not model.N(x, g, g):
            raise ValueError(f"{x} is not a channel of {g} x {g}")
    elems = [BasisElement(x, y, g) for x in model.channels for y in model.channels]
    pairs = paired_states(model)
    elems += [BasisElement(x, x, beta) for beta, x in pairs]
    return SectorBasis(model=model, elements=tuple(elems), paired=pairs)


def build_sector_basis(model):
    if model.name not in ("su2", "fib", "ds3") and not model.name.startswith("su2k:"):
        raise ValueError(f"unsupported model {model.name}")
    return _build_sector_basis(model)


def phi_index(model, xp, y):
    """Position of |x'>_A |y>_B in the phi basis (primed A index fast)."""
    n = model.n_channels
    return model.channel_index(xp) + n * model.channel_index(y)


def phi_basis_matrix(model):
    """Columns are the phi-basis states written in product coordinates."""
    return _phi_basis_matrix(model).copy()


@lru_cache(maxsize=None)
def _phi_basis_matrix(model):
    basis = build_sector_basis(model)
    n = model.n_channels
    f = np.asarray(model.f, dtype=complex)
    p = np.zeros((basis.dim, basis.dim), dtype=complex)
    eye = np.eye(n)
    for y in range(n):
        for xp in range(n):
            # |x'> = sum_x F[x, x'] |x>
            p[:n * n, xp + n * y] = np.kron(f[:, xp], eye[y])
    for j in range(n * n, basis.dim):
        p[j, j] = 1.0
    return p


def primed_change_matrix(model):
    """O: product-basis coordinates -> phi-basis coordinates (O = P^dagger)."""
    return phi_basis_matrix(model).conj().T


def phi_state(model, j):
    return phi_basis_matrix(model)[:, j].copy()


def phi0_state(model):
    """Three vacuum pairs on (1,2), (3,4), (5,6): |0'>_A |0>_B."""
    return phi_state(model, 0)


@lru_cache(maxsize=None)
def straddling_channels(model):
    """Fusion channels of the pair (3,4) for each phi-basis state.

    Returns ``(scalars, block)``: ``scalars`` lists, for each phi index
    whose (3,4) channel is definite, that channel; ``block`` lists the phi
    indices (product states with an indefinite channel, then the paired
    states) that mix under the straddling exchange.
    """
    g = model.generator
    n = model.n_channels
    basis = build_sector_basis(model)
    scalars = {}
    block = []
    for y in model.channels:
        for xp in model.channels:
            ws = [w for w in model.channels if model.N(xp, w, y)]
            j = phi_index(model, xp, y)
            if len(ws) == 1:
                scalars[j] = ws[0]
            else:
                block.append(j)
    block += list(range(n * n, basis.dim))
    if block and len(block) != n:
        raise ValueError(f"straddling block of {model.name} is not {n}-dimensional")
    return scalars, block


def straddling_block_vectors(model):
    """Eigenvectors of the (3,4) channel inside the mixing block.

    The block states are labelled by the triple charge beta (generator
    first, then the paired states); the channel-w vector has components
    F[beta, w].
    """
    _, block = straddling_channels(model)
    if not block:
        return {}
    g = model.generator
    betas = [g] + [beta for beta, _ in paired_states(model)]
    if any(b not in model.channels for b in betas):
        raise NotImplementedError(
            f"straddling recoupling for {model.name} needs F-symbols that are not stored")
    rows = [model.channel_index(b) for b in betas]
    f = np.asarray(model.f, dtype=complex)
    return {w: f[rows, model.channel_index(w)] for w in model.channels}


@lru_cache(maxsize=None)
def _block_vectors(model):
    return straddling_block_vectors(model)


def straddling_operator(model, channel_values):
    """Operator diagonal in the (3,4) fusion channel, in product coordinates.

    ``channel_values`` maps each channel to the scalar it multiplies
    (an exchange phase, an interaction phase, or a projector indicator).
    """
    scalars, block = straddling_channels(model)
    p = _phi_basis_matrix(model)
    mid = np.zeros(p.shape, dtype=complex)
    for j, w in scalars.items():
        mid[j, j] = channel_values[w]
    if block:
        vecs = _block_vectors(model)
        sub = sum(channel_values[w] * np.outer(v, v.conj()) for w, v in vecs.items())
        mid[np.ix_(block, block)] = sub
    return p @ mid @ p.conj().T


def is_spin_model(model):
    return isinstance(model.generator, Fraction)
