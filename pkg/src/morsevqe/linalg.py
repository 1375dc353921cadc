"""Dense Hermitian linear algebra used by every model builder.

Eigendecompositions are delegated to LAPACK through :func:`numpy.linalg.eigh`;
matrix functions are evaluated in the eigenbasis, never by series expansion.
"""

from typing import NamedTuple

import numpy as np

from ._validation import as_matrix, check_hermitian


class EigenDecomposition(NamedTuple):
    """Ascending eigenvalues with the matching unit eigenvectors as columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermitian_eigen(M):
    """Eigendecomposition of a Hermitian matrix.

    Parameters
    ----------
    M : array_like, shape (d, d)
        Hermitian matrix. Rejected with the measured asymmetry otherwise.

    Returns
    -------
    EigenDecomposition
        ``eigenvalues`` sorted ascending; column ``k`` of ``eigenvectors`` is
        paired with ``eigenvalues[k]``. Ordering inside a degenerate cluster is
        not specified.
    """
    M = check_hermitian(M)
    w, V = np.linalg.eigh(M)
    return EigenDecomposition(w, V)


def eigvalsh(M):
    return np.linalg.eigvalsh(check_hermitian(M))


def ground_energy(M):
    return float(eigvalsh(M)[0])


def hermitian_matrix_function(M, f):
    """Apply a real scalar function to a Hermitian matrix, ``V f(L) V^H``.

    ``f`` receives the array of eigenvalues and must return an array of the same
    shape. A non-finite value (e.g. overflow of ``exp``) is rejected and the
    offending eigenvalue reported.
    """
    M = check_hermitian(M)
    w, V = np.linalg.eigh(M)
    with np.errstate(over="ignore", invalid="ignore"):
        fw = np.asarray(f(w), dtype=float)
    if fw.shape != w.shape:
        raise ValueError("matrix function must map eigenvalues elementwise")
    bad = ~np.isfinite(fw)
    if np.any(bad):
        raise ValueError(
            f"matrix function is not finite at eigenvalue {float(w[bad][0])!r}"
        )
    R = (V * fw) @ V.conj().T
    return 0.5 * (R + R.conj().T)


def kron(A, B):
    """Kronecker product with row index ``iB*p + q`` for ``A[p, r] * B[q, s]``."""
    return np.kron(as_matrix(A, "A"), as_matrix(B, "B"))


def kron_all(*mats):
    out = np.ones((1, 1))
    for m in mats:
        out = np.kron(out, m)
    return out


def frobenius(M):
    return float(np.linalg.norm(M, "fro"))


def commutator(A, B):
    return A @ B - B @ A
