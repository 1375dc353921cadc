"""Statevector simulation of the Ry variational form with full entanglement.

Amplitude index bit ``n-1-q`` belongs to qubit ``q``, so qubit 0 is the most
significant bit (the leftmost Pauli label symbol). Every gate is real, so the
simulated states are real ``float64`` vectors.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

ENTANGLEMENTS = ("full",)


@dataclass(frozen=True)
class AnsatzConfig:
    """Ry variational form: ``depth`` blocks of [Ry layer, CNOT block] plus a final Ry layer.

    Parameters are laid out layer-major: ``params[layer * n_qubits + qubit]``.
    """

    n_qubits: int
    depth: int = 3
    entanglement: str = "full"

    def __post_init__(self):
        if int(self.n_qubits) != self.n_qubits or self.n_qubits < 1:
            raise ValueError(f"n_qubits must be a positive integer, got {self.n_qubits!r}")
        if int(self.depth) != self.depth or self.depth < 0:
            raise ValueError(f"depth must be a non-negative integer, got {self.depth!r}")
        if self.entanglement not in ENTANGLEMENTS:
            raise ValueError(
                f"entanglement {self.entanglement!r} not supported; use one of {ENTANGLEMENTS}"
            )

    @property
    def parameter_count(self):
        return self.n_qubits * (self.depth + 1)

    @property
    def dim(self):
        return 2**self.n_qubits


def ry_matrix(theta):
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -s], [s, c]])


def entangler_pairs(n_qubits):
    """CNOT (control, target) pairs of the full entangler, lexicographic."""
    return [(i, j) for i in range(n_qubits) for j in range(i + 1, n_qubits)]


@lru_cache(maxsize=None)
def _entangler_permutation(n_qubits):
    """Index map ``out = state[perm]`` equivalent to the whole CNOT block."""
    d = 2**n_qubits
    perm = np.arange(d)
    for control, target in entangler_pairs(n_qubits):
        cbit = 1 << (n_qubits - 1 - control)
        tbit = 1 << (n_qubits - 1 - target)
        idx = np.arange(d)
        src = np.where(idx & cbit, idx ^ tbit, idx)
        # applying this CNOT after the earlier ones composes as perm[src]
        perm = perm[src]
    perm.setflags(write=False)
    return perm


def apply_ry_layer(state, angles):
    n = len(angles)
    psi = state
    for q, theta in enumerate(angles):
        c, s = np.cos(0.5 * theta), np.sin(0.5 * theta)
        v = psi.reshape(2**q, 2, 2 ** (n - q - 1))
        a, b = v[:, 0, :], v[:, 1, :]
        out = np.empty_like(v)
        out[:, 0, :] = c * a - s * b
        out[:, 1, :] = s * a + c * b
        psi = out.reshape(-1)
    return psi


def apply_entangler(state, n_qubits):
    return state[_entangler_permutation(n_qubits)]


def ansatz_state(config, params):
    """Prepare the ansatz state from ``|0...0>``."""
    params = np.asarray(params, dtype=float)
    if params.shape != (config.parameter_count,):
        raise ValueError(
            f"expected {config.parameter_count} parameters, got shape {params.shape}"
        )
    if not np.all(np.isfinite(params)):
        raise ValueError("parameters must be finite")
    n = config.n_qubits
    psi = np.zeros(2**n)
    psi[0] = 1.0
    layers = params.reshape(config.depth + 1, n)
    for layer in range(config.depth):
        psi = apply_ry_layer(psi, layers[layer])
        psi = apply_entangler(psi, n)
    return apply_ry_layer(psi, layers[-1])
