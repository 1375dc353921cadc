"""Morse potential in its supersymmetric form.

Units have ``2m = 1`` unless a ``scale`` is applied, so ``H = p**2 + V(x)``.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._validation import check_positive, realify
from .linalg import hermitian_matrix_function


def superpotential(A, x):
    """``W(x) = A - exp(-x)``."""
    return A - np.exp(-np.asarray(x, dtype=float)) if np.ndim(x) else A - math.exp(-x)


def _morse_form(x, linear, constant):
    e = np.exp(-np.asarray(x, dtype=float))
    return e * e - linear * e + constant


def hierarchy_shift(A, level):
    """Constant added to the level-``level`` partner potential.

    ``sum_{j=1}^{level-1} (2(A - j) + 1)``, accumulated exactly.
    """
    A = Fraction(A)
    return float(sum((2 * (A - j) + 1 for j in range(1, level)), Fraction(0)))


@dataclass(frozen=True)
class SusyMorseSpec:
    """One member of the Morse partner/hierarchy family.

    Level 0 is ``V-`` (or ``V+`` when ``sign == "plus"``). Level ``k >= 1`` is
    ``V+`` at parameter ``A - (k - 1)`` plus :func:`hierarchy_shift`; its ground
    energy is the ``k``-th bound state of level 0. ``sign`` is only consulted at
    level 0.
    """

    A: float
    sign: str = "minus"
    scale: float = 1.0
    hierarchy_level: int = 0

    def __post_init__(self):
        check_positive(self.A, "A")
        check_positive(self.scale, "scale")
        if self.sign not in ("minus", "plus"):
            raise ValueError(f"sign must be 'minus' or 'plus', got {self.sign!r}")
        level = self.hierarchy_level
        if int(level) != level or level < 0:
            raise ValueError(f"hierarchy_level must be a non-negative integer, got {level!r}")
        if level > math.floor(self.A):
            raise ValueError(
                f"hierarchy_level {level} exceeds floor(A) = {math.floor(self.A)}; "
                "no bound state remains"
            )

    def coefficients(self):
        """``(linear, constant)`` with ``V = scale*(exp(-2x) - linear*exp(-x) + constant)``."""
        A, k = self.A, int(self.hierarchy_level)
        if k == 0:
            linear = 2 * A + 1 if self.sign == "minus" else 2 * A - 1
            return linear, A * A
        Ak = A - (k - 1)
        return 2 * Ak - 1, Ak * Ak + hierarchy_shift(A, k)

    def potential(self, x):
        linear, constant = self.coefficients()
        return self.scale * _morse_form(x, linear, constant)


def susy_potential(spec, x):
    return spec.potential(x)


def exact_energy(A, n):
    """Bound-state energy ``A**2 - (A - n)**2`` of ``H-``."""
    if int(n) != n or n < 0 or n >= A:
        raise ValueError(f"n = {n!r} is not a bound state for A = {A!r} (need 0 <= n < A)")
    return A * A - (A - n) ** 2


def associated_laguerre(n, alpha, y):
    """Generalized Laguerre polynomial by the three-term recurrence."""
    y = np.asarray(y, dtype=float)
    prev = np.ones_like(y)
    if n == 0:
        return prev
    cur = 1.0 + alpha - y
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + alpha - y) * cur - (k + alpha) * prev) / (k + 1)
    return cur


def exact_wavefunction(A, n, x):
    """Unnormalized eigenfunction ``exp(-x(A-n)) exp(-e^-x) L_n^(2A-2n)(2 e^-x)``."""
    exact_energy(A, n)
    x = np.asarray(x, dtype=float)
    e = np.exp(-x)
    return np.exp(-x * (A - n)) * np.exp(-e) * associated_laguerre(n, 2 * A - 2 * n, 2 * e)


def apply_potential(x_op, f):
    """Matrix ``f(X)`` for a potential ``f`` evaluated on the spectrum of ``X``."""
    return hermitian_matrix_function(x_op, f)


def build_susy_hamiltonian(spec, pair):
    """``scale * (p**2 + V(X))`` for the family member described by ``spec``.

    ``V(X)`` is formed in the eigenbasis of ``X``, which is the same as summing
    the matrix exponentials ``Exp(-2X)`` and ``Exp(-X)`` term by term.
    """
    linear, constant = spec.coefficients()
    V = apply_potential(pair.x, lambda w: _morse_form(w, linear, constant))
    return realify(spec.scale * (pair.p2 + V))


def rescaled_susy_hamiltonian(A, pair):
    """``p**2/2 + (A+1/2)**2/2 (e^-2x - 2e^-x + 1) - (A+1/4)/2``."""
    check_positive(A, "A")
    lam2 = (A + 0.5) ** 2
    V = apply_potential(pair.x, lambda w: 0.5 * lam2 * _morse_form(w, 2.0, 1.0))
    H = 0.5 * pair.p2 + V - 0.5 * (A + 0.25) * np.eye(pair.dim)
    return realify(H)


def ladder_operators(A, pair):
    """``a = iP + W(X)`` and its adjoint; ``a^H a`` is ``H-`` up to truncation."""
    P = pair.require_momentum()
    W = hermitian_matrix_function(pair.x, lambda w: A - np.exp(-w))
    a = 1j * P + W
    return a, a.conj().T
