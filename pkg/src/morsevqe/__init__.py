"""Morse-potential Hamiltonians, Pauli mapping and a simulated VQE."""

from .basis import (
    BasisKind,
    OperatorPair,
    finite_difference_basis,
    make_basis,
    oscillator_basis,
    position_basis,
    sylvester_matrix,
)
from .circuit import AnsatzConfig, ansatz_state
from .linalg import EigenDecomposition, hermitian_eigen, hermitian_matrix_function, kron
from .molecules import (
    MOLECULES,
    MoleculeRecord,
    build_molecule_hamiltonian,
    derive_molecule,
    get_molecule,
    molecule_basis,
    reduced_mass,
)
from .morse import (
    SusyMorseSpec,
    build_susy_hamiltonian,
    exact_energy,
    exact_wavefunction,
    rescaled_susy_hamiltonian,
    superpotential,
    susy_potential,
)
from .pauli import (
    PauliExpansion,
    expectation_from_expansion,
    pauli_decompose,
    pauli_reconstruct,
)
from .triatomic import TriatomicSpec, build_triatomic_hamiltonian
from .vqe import (
    VQE,
    ExactDiagonalization,
    OptimizerSpec,
    VqeResult,
    energy_expectation,
    optimizer_comparison,
    vqe_minimize,
)

__version__ = "0.1.0"
