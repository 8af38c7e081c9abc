"""Anyon theories as data: labels, fusion rules, quantum dimensions, F and R.

Four theories are supported, addressed by string id:

``"su2"``
    ordinary SU(2) spins (the k -> infinity limit), generated by spin 1/2.
``"su2k:<k>"``
    SU(2)_k, generated by spin 1/2.  ``"su2k:2"`` is the Ising-type theory
    {1, sigma, psi}; ``"su2_2"`` and ``"ising"`` are accepted as aliases.
``"fib"``
    Fibonacci anyons {1, tau}, the integer-spin part of SU(2)_3.
``"ds3"``
    the {1, Lambda, Phi} fusion subalgebra of the quantum double D(S3).

Only the recoupling and exchange data that the six-anyon Bell protocol
consumes are stored.  Every F-symbol with a single admissible intermediate
channel is the 1x1 matrix [[1]] in the gauge used here; multi-channel
F-symbols other than F^g_{ggg} (g the generating charge) are not available.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
import math

import numpy as np

HALF = Fraction(1, 2)
GOLDEN = (1 + math.sqrt(5)) / 2


class UnknownLabelError(KeyError):
    pass


def quantum_integer(m, k):
    """[m]_q at q = exp(2 pi i / (k + 2)), i.e. sin(m pi/(k+2)) / sin(pi/(k+2)).

    ``k=None`` gives the classical limit [m] = m.
    """
    if k is None:
        return float(m)
    t = math.pi / (k + 2)
    return math.sin(m * t) / math.sin(t)


def _spin(j):
    s = Fraction(j)
    if s < 0 or s.denominator not in (1, 2):
        raise UnknownLabelError(f"{j!r} is not a spin")
    return s


def su2k_fusion(k, j1, j2):
    """Allowed total spins of j1 x j2 at level k (``k=None`` for plain SU(2))."""
    j1, j2 = _spin(j1), _spin(j2)
    if k is not None:
        if j1 > Fraction(k, 2) or j2 > Fraction(k, 2):
            raise UnknownLabelError(f"spin above k/2 at level {k}: {j1}, {j2}")
    out = []
    j = abs(j1 - j2)
    while j <= j1 + j2:
        if k is None or (j <= Fraction(k, 2) and j1 + j2 + j <= k):
            out.append(j)
        j += 1
    return tuple(out)


def format_label(a):
    if isinstance(a, Fraction):
        return str(a)
    return str(a)


@dataclass(eq=False)
class AnyonModel:
    """One anyon theory.

    ``channels`` lists the fusion channels of two generating anyons in the
    basis order used by ``f`` and ``r`` (vacuum first).
    """

    name: str
    labels: tuple
    generator: object
    channels: tuple
    qdims: dict
    f: np.ndarray
    r: dict | None = None
    k: int | None = None
    fusion_table: dict | None = None
    aliases: dict = field(default_factory=dict)
    # spins above this are not enumerated for plain SU(2)
    max_label: object = None

    @property
    def vacuum(self):
        return self.labels[0]

    @property
    def is_su2_family(self):
        return self.fusion_table is None

    @property
    def n_channels(self):
        return len(self.channels)

    def label(self, a):
        """Canonical label for ``a`` (accepts aliases and spin strings)."""
        if a in self.aliases:
            return self.aliases[a]
        if self.is_su2_family:
            try:
                s = _spin(a)
            except (ValueError, TypeError, ZeroDivisionError, UnknownLabelError):
                raise UnknownLabelError(f"{a!r} is not a label of {self.name}") from None
            if self.k is not None and s > Fraction(self.k, 2):
                raise UnknownLabelError(f"{a!r} is not a label of {self.name}")
            return s
        if a in self.labels:
            return a
        raise UnknownLabelError(f"{a!r} is not a label of {self.name}")

    def fuse(self, a, b):
        a, b = self.label(a), self.label(b)
        if self.is_su2_family:
            return su2k_fusion(self.k, a, b)
        return self.fusion_table[(a, b)]

    def N(self, a, b, c):
        return 1 if self.label(c) in self.fuse(a, b) else 0

    def channel_index(self, c):
        return self.channels.index(self.label(c))

    def quantum_dimension(self, a):
        a = self.label(a)
        if self.is_su2_family:
            return quantum_integer(int(2 * a + 1), self.k)
        return self.qdims[a]

    @cached_property
    def sign_operator(self):
        """Diagonal pair-charge sign over ``channels``: -1 on vacuum, +1 otherwise."""
        return np.diag([-1.0 if c == self.vacuum else 1.0 for c in self.channels]).astype(complex)

    def __repr__(self):
        return f"AnyonModel({self.name!r})"


def fusion_multiply(model, a, b):
    """Multiset (as a tuple) of channels c with N_ab^c = 1."""
    return model.fuse(a, b)


def quantum_dimension(model, a):
    return model.quantum_dimension(a)


def _intermediates(model, a, b, c, d):
    left = [x for x in model.fuse(a, b) if model.N(x, c, d)]
    right = [x for x in model.fuse(b, c) if model.N(a, x, d)]
    return left, right


def f_matrix(model, a, b, c, d):
    """(F^d_{abc}) over admissible intermediate charges.

    Rows are indexed by the (ab) channel x, columns by the (bc) channel x',
    both in the model's label order.
    """
    a, b, c, d = (model.label(t) for t in (a, b, c, d))
    left, right = _intermediates(model, a, b, c, d)
    if not left:
        raise ValueError(f"F^{d}_{a}{b}{c} is not admissible in {model.name}")
    g = model.generator
    if (a, b, c, d) == (g, g, g, g):
        return model.f.copy()
    if len(left) == 1 and len(right) == 1:
        return np.ones((1, 1), dtype=complex)
    raise NotImplementedError(
        f"F^{d}_{a}{b}{c} with {len(left)} channels is not stored for {model.name}")


def r_symbol(model, a, b, c):
    """Exchange phase R^{ab}_c for two generating anyons in channel c."""
    a, b, c = (model.label(t) for t in (a, b, c))
    if c not in model.fuse(a, b):
        raise ValueError(f"{c} is not a fusion channel of {a} x {b} in {model.name}")
    if model.r is None:
        raise NotImplementedError(f"no exchange data stored for {model.name}")
    g = model.generator
    if (a, b) != (g, g):
        raise NotImplementedError(f"R^{{{a}{b}}} is not stored for {model.name}")
    return model.r[c]


def r_matrix(model):
    """diag(R_c) over ``model.channels``."""
    return np.diag([r_symbol(model, model.generator, model.generator, c)
                    for c in model.channels]).astype(complex)


def su2k_f(k):
    """F^{1/2}_{1/2 1/2 1/2} at level k, (1/[2]) [[1, sqrt[3]], [sqrt[3], -1]]."""
    q2 = quantum_integer(2, k)
    q3 = quantum_integer(3, k)
    s = math.sqrt(q3)
    return np.array([[1.0, s], [s, -1.0]], dtype=complex) / q2


def _su2(k):
    labels = tuple(Fraction(n, 2) for n in range((k if k is not None else 6) + 1))
    aliases = {}
    r = None
    name = "su2" if k is None else f"su2k:{k}"
    if k == 2:
        aliases = {"1": Fraction(0), "sigma": HALF, "psi": Fraction(1),
                   "σ": HALF, "ψ": Fraction(1)}
        # counterclockwise exchange of two sigmas: 1 (+) i over {1, psi}
        r = {Fraction(0): 1.0 + 0j, Fraction(1): 1j}
    qd = {j: quantum_integer(int(2 * j + 1), k) for j in labels}
    return AnyonModel(
        name=name, labels=labels, generator=HALF,
        channels=(Fraction(0), Fraction(1)), qdims=qd, f=su2k_f(k), r=r, k=k,
        aliases=aliases)


def _fib():
    one, tau = "1", "tau"
    table = {
        (one, one): (one,), (one, tau): (tau,), (tau, one): (tau,),
        (tau, tau): (one, tau),
    }
    p = GOLDEN
    f = np.array([[1 / p, p ** -0.5], [p ** -0.5, -1 / p]], dtype=complex)
    r = {one: np.exp(4j * np.pi / 5), tau: np.exp(7j * np.pi / 5)}
    return AnyonModel(
        name="fib", labels=(one, tau), generator=tau, channels=(one, tau),
        qdims={one: 1.0, tau: GOLDEN}, f=f, r=r, fusion_table=table,
        aliases={"τ": tau})


def _ds3():
    one, lam, phi = "1", "Lambda", "Phi"
    table = {
        (one, one): (one,), (one, lam): (lam,), (one, phi): (phi,),
        (lam, one): (lam,), (lam, lam): (one,), (lam, phi): (phi,),
        (phi, one): (phi,), (phi, lam): (phi,), (phi, phi): (one, lam, phi),
    }
    s = 1 / math.sqrt(2)
    f = np.array([[0.5, 0.5, -s], [0.5, 0.5, s], [-s, s, 0.0]], dtype=complex)
    r = {one: 1.0 + 0j, lam: -1.0 + 0j, phi: 1.0 + 0j}
    return AnyonModel(
        name="ds3", labels=(one, lam, phi), generator=phi,
        channels=(one, lam, phi), qdims={one: 1.0, lam: 1.0, phi: 2.0},
        f=f, r=r, fusion_table=table, aliases={"Λ": lam, "Φ": phi, "L": lam})


# Full D(S3) particle table: (magnetic class, electric label) -> quantum dimension.
DS3_IRREPS = {
    ("[e]", "R1+"): 1,
    ("[c]", "beta0"): 2,
    ("[t]", "gamma0"): 3,
    ("[e]", "R1-"): 1,
    ("[e]", "R2"): 2,
    ("[c]", "beta1"): 2,
    ("[c]", "beta2"): 2,
    ("[t]", "gamma1"): 3,
}
S3_ORDER = 6


def canonical_model_id(model_id):
    """Normalise a model id; raises ``ValueError`` for unknown ids."""
    mid = model_id.strip().lower()
    if mid in ("su2_2", "ising"):
        return "su2k:2"
    if mid in ("fibonacci", "so3_3"):
        return "fib"
    if mid == "d(s3)":
        return "ds3"
    if mid.startswith("su2k:"):
        try:
            k = int(mid.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad level in model id {model_id!r}") from None
        if k < 1:
            raise ValueError(f"level must be positive, got {k}")
        return f"su2k:{k}"
    if mid in ("su2", "fib", "ds3"):
        return mid
    raise ValueError(f"unknown model id {model_id!r}")


def get_model(model_id):
    """Model for an id ("su2", "su2k:<k>", "fib", "ds3" or an alias); cached."""
    return _build_model(canonical_model_id(model_id))


@lru_cache(maxsize=None)
def _build_model(mid):
    if mid == "su2":
        return _su2(None)
    if mid.startswith("su2k:"):
        return _su2(int(mid.split(":")[1]))
    return _fib() if mid == "fib" else _ds3()


MODEL_IDS = ("su2", "su2k:<k>", "fib", "ds3")
