import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from morsevqe import SusyMorseSpec, build_susy_hamiltonian, oscillator_basis  # noqa: E402


@pytest.fixture(scope="session")
def osc16():
    return oscillator_basis(16)


@pytest.fixture(scope="session")
def h_minus(osc16):
    """Scaled SUSY H- for A=5 on the 4-qubit oscillator basis."""
    return build_susy_hamiltonian(SusyMorseSpec(5.0, "minus", 0.5), osc16)


@pytest.fixture(scope="session")
def h_plus(osc16):
    return build_susy_hamiltonian(SusyMorseSpec(5.0, "plus", 0.5), osc16)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def random_hermitian(rng, dim, real=False):
    A = rng.normal(size=(dim, dim))
    if not real:
        A = A + 1j * rng.normal(size=(dim, dim))
    return 0.5 * (A + A.conj().T)
