"""Input validation helpers shared across the package."""

import numpy as np

HERMITIAN_RTOL = 1e-12


def as_matrix(M, name="matrix"):
    """Return ``M`` as a finite 2-D ndarray (float64 if real, else complex128)."""
    M = np.asarray(M)
    if M.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {M.shape}")
    if M.size == 0:
        raise ValueError(f"{name} has dimension 0")
    if not np.all(np.isfinite(M)):
        raise ValueError(f"{name} contains non-finite entries")
    if np.iscomplexobj(M):
        return M.astype(np.complex128, copy=False)
    return M.astype(np.float64, copy=False)


def hermitian_asymmetry(M):
    return float(np.max(np.abs(M - M.conj().T)))


def check_hermitian(M, name="matrix"):
    """Validate that ``M`` is square and Hermitian.

    The tolerance is ``1e-12 * (1 + max|M|)``. Complex inputs whose imaginary
    part is exactly zero are returned as real arrays.
    """
    M = as_matrix(M, name)
    if M.shape[0] != M.shape[1]:
        raise ValueError(f"{name} must be square, got shape {M.shape}")
    asym = hermitian_asymmetry(M)
    tol = HERMITIAN_RTOL * (1.0 + float(np.max(np.abs(M))))
    if asym > tol:
        raise ValueError(
            f"{name} is not Hermitian: max |M - M^H| = {asym:.3e} exceeds {tol:.3e}"
        )
    if np.iscomplexobj(M) and not np.any(M.imag):
        M = M.real.copy()
    return M


def num_qubits(dim):
    """Number of qubits for a ``dim``-dimensional space; ``dim`` must be 2**n, n >= 1."""
    dim = int(dim)
    if dim < 2 or dim & (dim - 1):
        raise ValueError(f"dimension {dim} is not a power of two (>= 2)")
    return dim.bit_length() - 1


def check_statevector(state, n_qubits=None, atol=1e-10):
    state = np.asarray(state)
    if state.ndim != 1:
        raise ValueError(f"state must be 1-D, got shape {state.shape}")
    if n_qubits is not None and state.shape[0] != 2**n_qubits:
        raise ValueError(
            f"state has dimension {state.shape[0]}, expected {2**n_qubits}"
        )
    norm = float(np.linalg.norm(state))
    if abs(norm - 1.0) > atol:
        raise ValueError(f"state is not normalized (norm = {norm!r})")
    return state


def check_positive(value, name):
    value = float(value)
    if not np.isfinite(value) or value <= 0:
        raise ValueError(f"{name} must be positive, got {value!r}")
    return value


def realify(M, rtol=1e-14):
    """Drop an imaginary part that is pure round-off."""
    if np.iscomplexobj(M):
        scale = max(1.0, float(np.max(np.abs(M))))
        if float(np.max(np.abs(M.imag))) <= rtol * scale:
            return np.ascontiguousarray(M.real)
    return M
