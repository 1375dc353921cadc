"""Discrete position/momentum operators.

Three discretizations are provided: the truncated harmonic-oscillator number
basis, a uniform position grid whose momentum operator is obtained by a
Fourier-type (Sylvester) conjugation, and a finite-difference grid that only
defines ``p**2``.

The closed-form matrix elements are written with 1-based indices ``j, k`` and
stored at ``[j - 1, k - 1]``.

Every constructor takes an optional ``frequency``. The operators are then
rescaled as ``x -> x / sqrt(frequency)`` and ``p -> p * sqrt(frequency)``, which
keeps ``[x, p]`` unchanged and matches the oscillator basis to a well of
curvature ``frequency**2``.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from ._validation import check_positive


class BasisKind(str, Enum):
    OSCILLATOR = "oscillator"
    POSITION = "position"
    FINITE_DIFFERENCE = "fd"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        aliases = {"osc": "oscillator", "pos": "position", "finite-difference": "fd",
                   "finite_difference": "fd"}
        key = str(value).strip().lower()
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            names = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown basis {value!r}; expected one of {names}") from None


@dataclass(frozen=True)
class OperatorPair:
    """Position and momentum matrices for one discretization.

    ``p`` is ``None`` for the finite-difference basis, where only ``p2`` exists.
    """

    kind: BasisKind
    dim: int
    x: np.ndarray
    p: Optional[np.ndarray]
    p2: np.ndarray
    frequency: float = 1.0

    def require_momentum(self):
        if self.p is None:
            raise ValueError(
                f"the {self.kind.value} basis defines only p**2, not a first-order momentum"
            )
        return self.p

    @property
    def identity(self):
        return np.eye(self.dim)


def _check_dim(N):
    if int(N) != N or N < 2:
        raise ValueError(f"basis dimension must be an integer >= 2, got {N!r}")
    return int(N)


def _rescale(x, p, p2, frequency):
    s = np.sqrt(check_positive(frequency, "frequency"))
    return x / s, (None if p is None else p * s), p2 * s * s


def oscillator_basis(N, frequency=1.0):
    """Truncated number-basis ``x`` and ``p`` of dimension ``N``.

    ``x`` has ``sqrt(k)/sqrt(2)`` on both neighbours of the diagonal and ``p`` is
    ``i/sqrt(2)`` times the antisymmetric pattern with ``-sqrt(k)`` above the
    diagonal.
    """
    N = _check_dim(N)
    k = np.sqrt(np.arange(1, N, dtype=float))
    x = (np.diag(k, 1) + np.diag(k, -1)) / np.sqrt(2.0)
    p = (1j / np.sqrt(2.0)) * (np.diag(-k, 1) + np.diag(k, -1))
    # p @ p is real: (i A)(i A) = -A A with A real
    p2 = np.real(p @ p)
    x, p, p2 = _rescale(x, p, p2, frequency)
    return OperatorPair(BasisKind.OSCILLATOR, N, x, p, p2, float(frequency))


def _grid_index(N):
    j = np.arange(1, N + 1, dtype=float)
    return 2.0 * j - (N + 1)


def sylvester_matrix(N):
    """Unitary ``F[j,k] = exp(2 pi i (2j-N-1)(2k-N-1) / 4N) / sqrt(N)``."""
    N = _check_dim(N)
    g = _grid_index(N)
    return np.exp((2j * np.pi / (4 * N)) * np.outer(g, g)) / np.sqrt(N)


def position_basis(N, frequency=1.0):
    """Diagonal grid ``x`` with a dense momentum ``p = F^H x F``."""
    N = _check_dim(N)
    x = np.diag(np.sqrt(2.0 * np.pi / (4 * N)) * _grid_index(N))
    F = sylvester_matrix(N)
    p = F.conj().T @ x @ F
    p = 0.5 * (p + p.conj().T)
    p2 = p @ p
    p2 = 0.5 * (p2 + p2.conj().T)
    x, p, p2 = _rescale(x, p, p2, frequency)
    return OperatorPair(BasisKind.POSITION, N, x, p, p2, float(frequency))


def finite_difference_basis(N, frequency=1.0):
    """Diagonal grid ``x`` and the tridiagonal ``(N/2) * (2, -1)`` matrix for ``p**2``."""
    N = _check_dim(N)
    x = np.diag(np.sqrt(1.0 / (2 * N)) * _grid_index(N))
    off = -np.ones(N - 1)
    p2 = (N / 2.0) * (2.0 * np.eye(N) + np.diag(off, 1) + np.diag(off, -1))
    x, _, p2 = _rescale(x, None, p2, frequency)
    return OperatorPair(BasisKind.FINITE_DIFFERENCE, N, x, None, p2, float(frequency))


_BUILDERS = {
    BasisKind.OSCILLATOR: oscillator_basis,
    BasisKind.POSITION: position_basis,
    BasisKind.FINITE_DIFFERENCE: finite_difference_basis,
}


def make_basis(kind, N, frequency=1.0):
    return _BUILDERS[BasisKind.parse(kind)](N, frequency=frequency)
