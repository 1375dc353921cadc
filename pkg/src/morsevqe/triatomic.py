"""Two-coordinate Morse Hamiltonians for a symmetric triatomic molecule.

``H1`` couples the two bond coordinates through ``-p_x p_y / M``; ``H2`` is the
same system after rotating to ``x1, x2`` with effective masses ``m1, m2``.
Operators on the two coordinates are ``X (x) I`` and ``I (x) X``.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._validation import check_positive, realify
from .basis import BasisKind
from .linalg import hermitian_matrix_function, kron


@dataclass(frozen=True)
class TriatomicSpec:
    m: float = 1.0
    M: float = 2.0
    C: float = 10.0
    b: float = math.sqrt(20.0)
    form: str = "H1"

    def __post_init__(self):
        for name in ("m", "M", "b"):
            check_positive(getattr(self, name), name)
        if not np.isfinite(self.C) or self.C < 0:
            raise ValueError(f"C must be non-negative, got {self.C!r}")
        form = str(self.form).upper()
        if form not in ("H1", "H2"):
            raise ValueError(f"form must be 'H1' or 'H2', got {self.form!r}")
        object.__setattr__(self, "form", form)
        if form == "H2" and self.M <= self.m:
            raise ValueError(
                f"H2 needs M > m (m1 = m/(1 - m/M) is undefined or negative for m={self.m}, M={self.M})"
            )

    @property
    def m1(self):
        return self.m / (1.0 - self.m / self.M)

    @property
    def m2(self):
        return self.m / (1.0 + self.m / self.M)


def tensor_operators(pair):
    """``(X1, X2, P1, P2)`` with ``P1, P2`` set to ``None`` if the basis has no ``p``."""
    I = np.eye(pair.dim)
    X1, X2 = kron(pair.x, I), kron(I, pair.x)
    if pair.p is None:
        return X1, X2, None, None
    return X1, X2, kron(pair.p, I), kron(I, pair.p)


def _morse_term(arg, C):
    def well(w):
        t = 1.0 - np.exp(-w)
        return C * t * t

    return hermitian_matrix_function(arg, well)


def build_triatomic_hamiltonian(spec, pair):
    """Dense ``N**2 x N**2`` matrix of ``H1`` or ``H2``.

    ``H1`` needs first-order momenta and so rejects the finite-difference
    basis. ``H2`` only uses ``p**2`` and works in every basis.
    """
    I = np.eye(pair.dim)
    X1, X2, P1, P2 = tensor_operators(pair)
    C, b = spec.C, spec.b
    if spec.form == "H1":
        if P1 is None:
            raise ValueError(
                f"H1 needs a first-order momentum; the {BasisKind(pair.kind).value} basis has none"
            )
        kinetic = (
            kron(pair.p2, I) / (2 * spec.m)
            + kron(I, pair.p2) / (2 * spec.m)
            - (P1 @ P2) / spec.M
        )
        potential = _morse_term(X1 / b, C) + _morse_term(X2 / b, C)
    else:
        kinetic = kron(pair.p2, I) / (2 * spec.m1) + kron(I, pair.p2) / (2 * spec.m2)
        s = math.sqrt(2.0) * b
        potential = _morse_term((X1 + X2) / s, C) + _morse_term((X1 - X2) / s, C)
    H = kinetic + potential
    return realify(0.5 * (H + H.conj().T))
