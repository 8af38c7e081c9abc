"""Small dense complex linear algebra used throughout the package.

Everything here is a thin, checked wrapper around numpy.  Matrices are
plain ``numpy.ndarray`` objects with ``complex128`` entries; the helpers
exist to pin down conventions (Kronecker ordering, block order, eigenvalue
ordering) and to fail loudly on shape errors.
"""

import numpy as np

UNITARY_TOL = 1e-10
HERMITIAN_TOL = 1e-12
MAX_DIM = 64


def as_matrix(a):
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {m.shape}")
    return m


def as_vector(v):
    x = np.asarray(v, dtype=complex)
    if x.ndim != 1:
        raise ValueError(f"expected a 1-d vector, got shape {x.shape}")
    return x


def identity(n):
    return np.eye(n, dtype=complex)


def dagger(a):
    return as_matrix(a).conj().T


def matmul(a, b):
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    return a @ b


def kron(a, b):
    """Kronecker product; the left factor is the slow (most significant) index."""
    return np.kron(as_matrix(a), as_matrix(b))


def direct_sum(blocks):
    """Block-diagonal matrix with the blocks in list order.

    Scalars are accepted as 1x1 blocks.
    """
    mats = [np.atleast_2d(np.asarray(b, dtype=complex)) for b in blocks]
    for m in mats:
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"direct_sum blocks must be square, got {m.shape}")
    n = sum(m.shape[0] for m in mats)
    out = np.zeros((n, n), dtype=complex)
    i = 0
    for m in mats:
        k = m.shape[0]
        out[i:i + k, i:i + k] = m
        i += k
    return out


def max_abs(a):
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def unitarity_residual(u):
    u = as_matrix(u)
    return max_abs(dagger(u) @ u - identity(u.shape[0]))


def hermiticity_residual(a):
    a = as_matrix(a)
    return max_abs(a - dagger(a))


def is_unitary(u, tol=UNITARY_TOL):
    return unitarity_residual(u) <= tol


def is_hermitian(a, tol=HERMITIAN_TOL):
    return hermiticity_residual(a) <= tol


def hermitian_eigensystem(a, tol=HERMITIAN_TOL):
    """Eigenvalues (ascending) and orthonormal eigenvectors (as columns).

    Raises ``ValueError`` if ``a`` is not Hermitian to ``tol`` or exceeds
    the supported dimension.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got {a.shape}")
    if a.shape[0] > MAX_DIM:
        raise ValueError(f"dimension {a.shape[0]} exceeds {MAX_DIM}")
    if not is_hermitian(a, tol):
        raise ValueError(
            f"matrix is not Hermitian (residual {hermiticity_residual(a):.3e})")
    # symmetrize so that roundoff-level anti-Hermitian parts are dropped
    vals, vecs = np.linalg.eigh(0.5 * (a + dagger(a)))
    return vals, vecs


def expectation(op, v):
    """Real part of <v|op|v> for a Hermitian ``op``."""
    v = as_vector(v)
    return float(np.real(np.vdot(v, as_matrix(op) @ v)))


def normalize(v):
    v = as_vector(v)
    n = np.linalg.norm(v)
    if n == 0:
        raise ValueError("cannot normalize the zero vector")
    return v / n


def states_equal_up_to_phase(u, v, tol=1e-9):
    """True iff |<u|v>| >= 1 - tol for two normalized vectors."""
    u, v = as_vector(u), as_vector(v)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    return abs(np.vdot(u, v)) >= 1.0 - tol


def global_phase_between(a, b):
    """Phase ``c`` (|c| = 1) minimising ||a - c b||, for matrices or vectors."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    ov = np.vdot(b.ravel(), a.ravel())
    if abs(ov) == 0:
        return 1.0 + 0j
    return ov / abs(ov)


def equal_up_to_phase_residual(a, b):
    """max |a - c b| over entries, with the best global phase c."""
    c = global_phase_between(a, b)
    return max_abs(np.asarray(a) - c * np.asarray(b))


def expm_hermitian(h, t=1.0):
    """exp(-i t h) for Hermitian ``h`` via its eigendecomposition."""
    vals, vecs = hermitian_eigensystem(h)
    return vecs @ np.diag(np.exp(-1j * t * vals)) @ dagger(vecs)
