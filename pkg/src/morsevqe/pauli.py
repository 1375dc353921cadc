"""Pauli-string expansion of Hermitian matrices.

Qubit 0 is the leftmost label symbol and the most significant tensor factor
(bit ``n-1`` of a basis index), the same order as ``np.kron``.

A string is encoded by two bit masks: ``x`` marks X/Y positions and ``z`` marks
Z/Y positions. Its only non-zero entry in row ``r`` sits in column ``r ^ x``
and equals ``i**(#Y) * (-1)**popcount(z & (r ^ x))``, so all ``4**n``
coefficients follow from one Walsh-Hadamard transform per ``x`` mask.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ._validation import check_hermitian, check_statevector, num_qubits

DEFAULT_THRESHOLD = 1e-10
ORDERING_NOTE = "qubit 0 = leftmost symbol = most significant tensor factor"

_SYMBOLS = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}
_BITS = {v: k for k, v in _SYMBOLS.items()}
_PAULI = {
    "I": np.eye(2),
    "X": np.array([[0.0, 1.0], [1.0, 0.0]]),
    "Y": np.array([[0.0, -1j], [1j, 0.0]]),
    "Z": np.diag([1.0, -1.0]),
}


def _popcount(a):
    a = np.asarray(a, dtype=np.int64)
    out = np.zeros_like(a)
    while np.any(a):
        out += a & 1
        a = a >> 1
    return out


def label_to_masks(label):
    n = len(label)
    x = z = 0
    for q, s in enumerate(label):
        try:
            bx, bz = _BITS[s]
        except KeyError:
            raise ValueError(f"invalid Pauli symbol {s!r} in {label!r}") from None
        x |= bx << (n - 1 - q)
        z |= bz << (n - 1 - q)
    return x, z


def masks_to_label(x, z, n):
    return "".join(
        _SYMBOLS[((x >> (n - 1 - q)) & 1, (z >> (n - 1 - q)) & 1)] for q in range(n)
    )


def pauli_matrix(label):
    out = np.ones((1, 1))
    for s in label:
        out = np.kron(out, _PAULI[s])
    return out


def _walsh_hadamard(U):
    """Unnormalized WHT along the last axis (length a power of two)."""
    U = np.array(U, copy=True)
    rows, d = U.shape
    h = 1
    while h < d:
        V = U.reshape(rows, d // (2 * h), 2, h)
        a = V[:, :, 0, :].copy()
        V[:, :, 0, :] += V[:, :, 1, :]
        V[:, :, 1, :] = a - V[:, :, 1, :]
        h *= 2
    return U


def pauli_coefficient_table(H):
    """Real coefficients ``C[x, z] = tr(P_{x,z} H) / 2**n`` for a Hermitian ``H``."""
    H = check_hermitian(H)
    d = H.shape[0]
    num_qubits(d)
    c = np.arange(d)
    # U[x, c] = H[c, c ^ x]
    U = H[c[None, :], c[None, :] ^ c[:, None]]
    T = _walsh_hadamard(U.astype(np.complex128))
    n_y = _popcount(c[:, None] & c[None, :])
    C = (1j ** n_y) * T / d
    return C.real


@dataclass(frozen=True)
class PauliExpansion:
    """Real-weighted sum of Pauli strings, sorted lexicographically by label."""

    n_qubits: int
    terms: Tuple[Tuple[str, float], ...]
    threshold: float = 0.0

    def __post_init__(self):
        labels = [lab for lab, _ in self.terms]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate Pauli strings in expansion")
        for lab, _ in self.terms:
            if len(lab) != self.n_qubits:
                raise ValueError(f"label {lab!r} does not act on {self.n_qubits} qubits")
            label_to_masks(lab)

    def __len__(self):
        return len(self.terms)

    def as_dict(self):
        return dict(self.terms)

    def to_matrix(self):
        return pauli_reconstruct(self)

    def to_text(self):
        lines = [
            f"# n_qubits = {self.n_qubits}",
            f"# threshold = {self.threshold!r}",
            f"# ordering: {ORDERING_NOTE}",
            f"# terms = {len(self)}",
        ]
        lines += [f"{lab} {coef!r}" for lab, coef in self.terms]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        header, terms = {}, []
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, sep, value = line[1:].partition("=")
                if sep:
                    header[key.strip()] = value.strip()
                continue
            lab, coef = line.split()
            terms.append((lab, float(coef)))
        if "n_qubits" in header:
            n = int(header["n_qubits"])
        elif terms:
            n = len(terms[0][0])
        else:
            raise ValueError("expansion text has neither terms nor an n_qubits header")
        threshold = float(header.get("threshold", 0.0))
        return cls(n, tuple(sorted(terms)), threshold)


def pauli_decompose(H, n_qubits=None, threshold=DEFAULT_THRESHOLD):
    """Expand ``H`` in Pauli strings, dropping terms with ``|c| <= threshold``."""
    H = check_hermitian(H)
    n = num_qubits(H.shape[0])
    if n_qubits is not None and n_qubits != n:
        raise ValueError(
            f"matrix dimension {H.shape[0]} does not match {n_qubits} qubits"
        )
    if threshold < 0:
        raise ValueError("threshold must be >= 0")
    C = pauli_coefficient_table(H)
    xs, zs = np.nonzero(np.abs(C) > threshold)
    terms = sorted(
        (masks_to_label(int(x), int(z), n), float(C[x, z])) for x, z in zip(xs, zs)
    )
    return PauliExpansion(n, tuple(terms), float(threshold))


def _string_action(x, z, n):
    """Column index and phase of the single non-zero entry in each row."""
    r = np.arange(2**n)
    cols = r ^ x
    n_y = bin(x & z).count("1")
    phase = (1j**n_y) * (1 - 2 * (_popcount(z & cols) & 1))
    return cols, phase


def pauli_reconstruct(expansion):
    n = expansion.n_qubits
    d = 2**n
    out = np.zeros((d, d), dtype=np.complex128)
    rows = np.arange(d)
    for lab, coef in expansion.terms:
        x, z = label_to_masks(lab)
        cols, phase = _string_action(x, z, n)
        out[rows, cols] += coef * phase
    if not np.any(out.imag):
        return out.real
    return out


def expectation_from_expansion(expansion, state):
    """``sum_k c_k <state|P_k|state>`` evaluated string by string."""
    state = check_statevector(state, expansion.n_qubits)
    conj = np.conj(state)
    total = 0.0
    for lab, coef in expansion.terms:
        x, z = label_to_masks(lab)
        cols, phase = _string_action(x, z, expansion.n_qubits)
        total += coef * np.real(np.sum(conj * phase * state[cols]))
    return float(total)


def write_expansion(expansion, path):
    with open(path, "w") as fh:
        fh.write(expansion.to_text())


def read_expansion(path):
    with open(path) as fh:
        return PauliExpansion.from_text(fh.read())
