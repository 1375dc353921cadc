"""Diatomic Morse molecules: parameter pipeline and dimensionless Hamiltonian."""

import math
from dataclasses import dataclass, field

import numpy as np

from ._validation import check_positive, realify
from .basis import make_basis
from .morse import apply_potential

# Rest energy of one atomic mass unit (eV) and hbar*c (eV * Angstrom). 931.5 MeV
# is the rounded value that reproduces the published molecular table digit for
# digit; CODATA 931.49410242 MeV is off in the sixth figure.
AMU_EV = 931.5e6
HBARC_EV_ANGSTROM = 1973.269804


def reduced_mass(m1, m2):
    check_positive(m1, "m1")
    check_positive(m2, "m2")
    return m1 * m2 / (m1 + m2)


@dataclass(frozen=True)
class MoleculeRecord:
    """Morse parameters of a diatomic molecule with derived dimensionless data.

    Inputs are the reduced mass (amu), well depth (eV) and width
    (1/Angstrom, i.e. 10**10 / m). Everything else is filled on construction.
    """

    name: str
    reduced_mass: float
    well_depth: float
    width: float
    lambda_squared: float = field(init=False)
    e_mult: float = field(init=False)
    epsilon0: float = field(init=False)
    epsilon_inf: float = field(init=False)
    ground_energy: float = field(init=False)
    n_bound: int = field(init=False)

    def __post_init__(self):
        mr = check_positive(self.reduced_mass, "reduced_mass")
        D = check_positive(self.well_depth, "well_depth")
        a = check_positive(self.width, "width")
        rest = mr * AMU_EV
        a2hc2 = (a * HBARC_EV_ANGSTROM) ** 2
        lam2 = 2.0 * rest * D / a2hc2
        lam = math.sqrt(lam2)
        eps0 = (lam - 0.25) / 2.0
        e_mult = a2hc2 / rest
        derived = dict(
            lambda_squared=lam2,
            e_mult=e_mult,
            epsilon0=eps0,
            epsilon_inf=lam2 / 2.0,
            ground_energy=(eps0 - lam2 / 2.0) * e_mult,
            n_bound=int(math.floor(lam + 0.5)),
        )
        for k, v in derived.items():
            object.__setattr__(self, k, v)

    @property
    def lam(self):
        return math.sqrt(self.lambda_squared)

    @property
    def energy_ratio(self):
        """``epsilon0 / epsilon_inf``."""
        return self.epsilon0 / self.epsilon_inf

    def to_ev(self, epsilon):
        """Convert a dimensionless eigenvalue to a molecular energy in eV."""
        return (epsilon - self.epsilon_inf) * self.e_mult


def derive_molecule(reduced_mass, well_depth, width, name="custom"):
    return MoleculeRecord(name, reduced_mass, well_depth, width)


MOLECULES = {
    rec.name: rec
    for rec in (
        MoleculeRecord("H2", 0.50391, 4.7446, 1.9426),
        MoleculeRecord("HCl", 0.9796, 4.618, 1.869),
        MoleculeRecord("LiH", 0.8801221, 2.515287, 1.1280),
        MoleculeRecord("CO", 6.8606719, 11.2256, 2.2994),
        MoleculeRecord("O2", 8.0, 5.214, 2.655),
        MoleculeRecord("N2", 7.0, 9.905, 2.691),
    )
}


def get_molecule(name):
    for key, rec in MOLECULES.items():
        if key.lower() == str(name).strip().lower():
            return rec
    raise ValueError(
        f"unknown molecule {name!r}; known molecules: {', '.join(MOLECULES)}"
    )


def build_molecule_hamiltonian(lam, pair):
    """``p**2/2 + (lam**2/2) (e^-2x - 2e^-x + 1)`` on the given operator pair."""
    lam = check_positive(lam, "lambda")
    half = 0.5 * lam * lam

    def well(w):
        e = np.exp(-w)
        return half * (e * e - 2.0 * e + 1.0)

    return realify(0.5 * pair.p2 + apply_potential(pair.x, well))


def molecule_basis(record, dim, kind="oscillator"):
    """Operator pair matched to the molecular well (frequency ``lambda``).

    Near its minimum the dimensionless well is ``lam**2 x**2 / 2``, so an
    oscillator basis of frequency ``lam`` places the ground state in the first
    few basis functions regardless of how deep the well is.
    """
    return make_basis(kind, dim, frequency=record.lam)
