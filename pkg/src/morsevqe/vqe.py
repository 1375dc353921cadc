"""Variational quantum eigensolver on a simulated statevector.

The functional entry point is :func:`vqe_minimize`. :class:`VQE` and
:class:`ExactDiagonalization` wrap the same machinery in the scikit-learn
estimator protocol (``fit`` on a Hamiltonian, fitted attributes with a
trailing underscore, ``get_params``/``set_params``).
"""

import csv
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._validation import check_hermitian, check_statevector, num_qubits
from .circuit import AnsatzConfig, ansatz_state
from .linalg import hermitian_eigen
from .optimizers import METHODS, resolve_method


def energy_expectation(H, state):
    """``<state|H|state>``; rejects an imaginary part above 1e-10."""
    H = np.asarray(H)
    state = check_statevector(state)
    if H.shape != (state.size, state.size):
        raise ValueError(f"Hamiltonian shape {H.shape} does not match state of size {state.size}")
    value = np.vdot(state, H @ state)
    if abs(value.imag) > 1e-10:
        raise ValueError(f"expectation has imaginary part {value.imag!r}; H is not Hermitian")
    return float(value.real)


def energy_function(H, config):
    """Return ``theta -> <psi(theta)|H|psi(theta)>`` for a validated ``H``."""
    H = check_hermitian(H)
    if H.shape[0] != config.dim:
        raise ValueError(
            f"Hamiltonian dimension {H.shape[0]} != 2**{config.n_qubits}"
        )

    if np.iscomplexobj(H):
        def energy(theta):
            psi = ansatz_state(config, theta)
            return float(np.real(psi @ (H @ psi)))
    else:
        def energy(theta):
            psi = ansatz_state(config, theta)
            return float(psi @ (H @ psi))

    return energy


def parameter_shift_gradient(H, config, params):
    """Exact gradient from the Ry shift rule ``[E(t + pi/2) - E(t - pi/2)] / 2``."""
    energy = energy_function(H, config)
    params = np.asarray(params, dtype=float)
    g = np.empty_like(params)
    for k in range(params.size):
        e = np.zeros_like(params)
        e[k] = np.pi / 2
        g[k] = 0.5 * (energy(params + e) - energy(params - e))
    return g


def initial_parameters(config, seed):
    rng = np.random.default_rng(seed)
    return rng.uniform(-np.pi, np.pi, config.parameter_count)


@dataclass(frozen=True)
class OptimizerSpec:
    """Optimizer choice. ``options`` are passed through as keyword arguments.

    ``n_restarts > 1`` reruns the optimizer from fresh random angles and keeps
    the best run; ``max_iterations`` applies to each run.
    """

    method: str = "quasinewton"
    max_iterations: int = 600
    seed: int = 0
    options: Dict[str, float] = field(default_factory=dict)
    n_restarts: int = 1

    def __post_init__(self):
        object.__setattr__(self, "method", resolve_method(self.method))
        if int(self.max_iterations) != self.max_iterations or self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations!r}")
        if int(self.n_restarts) != self.n_restarts or self.n_restarts < 1:
            raise ValueError(f"n_restarts must be >= 1, got {self.n_restarts!r}")


@dataclass
class VqeResult:
    energy: float
    parameters: np.ndarray
    trace: List[Tuple[int, float]]
    evaluations: int
    iterations: int = 0
    method: str = ""

    def running_minimum(self):
        return np.minimum.accumulate([e for _, e in self.trace])


class _TracedObjective:
    """Records every evaluation and remembers the best point seen."""

    def __init__(self, fun):
        self.fun = fun
        self.trace = []
        self.best_energy = np.inf
        self.best_x = None

    def __call__(self, x):
        value = self.fun(x)
        self.trace.append((len(self.trace), value))
        if value < self.best_energy:
            self.best_energy = value
            self.best_x = np.array(x, dtype=float)
        return value


def _restart_parameters(config, seed, restart):
    rng = np.random.default_rng([seed, 2, restart])
    return rng.uniform(-np.pi, np.pi, config.parameter_count)


def vqe_minimize(H, config, opt=None, x0=None):
    """Minimize the ansatz energy of ``H``.

    The returned energy is the lowest value evaluated anywhere during the
    run, with the parameters that produced it; it can never fall below the
    ground energy of ``H``. With restarts the trace runs on across runs.
    """
    opt = opt or OptimizerSpec()
    objective = _TracedObjective(energy_function(H, config))
    if x0 is None:
        x0 = initial_parameters(config, opt.seed)
    x0 = np.asarray(x0, dtype=float)
    if x0.shape != (config.parameter_count,):
        raise ValueError(f"x0 must have {config.parameter_count} entries")
    iterations = 0
    for restart in range(opt.n_restarts):
        start = x0 if restart == 0 else _restart_parameters(config, opt.seed, restart)
        kwargs = dict(opt.options)
        if opt.method == "spsa":
            # perturbations come from a stream independent of the x0 draw
            kwargs.setdefault("rng", np.random.default_rng([opt.seed, 1, restart]))
        outcome = METHODS[opt.method](objective, start, max_iterations=opt.max_iterations,
                                      **kwargs)
        iterations += outcome.iterations
    return VqeResult(
        energy=float(objective.best_energy),
        parameters=objective.best_x,
        trace=objective.trace,
        evaluations=len(objective.trace),
        iterations=iterations,
        method=opt.method,
    )


def optimizer_comparison(H, config, methods=("quasinewton", "nelder-mead", "spsa"),
                         seed=0, max_iterations=600):
    """Run several optimizers from the same seeded starting point."""
    x0 = initial_parameters(config, seed)
    results = {}
    for method in methods:
        spec = OptimizerSpec(method, max_iterations=max_iterations, seed=seed)
        results[spec.method] = vqe_minimize(H, config, spec, x0=x0)
    return results


def write_trace(result, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["evaluation", "energy"])
        for idx, energy in result.trace:
            w.writerow([idx, repr(float(energy))])


class ExactDiagonalization(BaseEstimator):
    """Classical reference solver: full Hermitian eigendecomposition.

    Parameters
    ----------
    n_states : int, default=5
        Number of lowest eigenvalues kept in ``eigenvalues_``.
    """

    def __init__(self, n_states=5):
        self.n_states = n_states

    def fit(self, H, y=None):
        H = check_hermitian(H, "Hamiltonian")
        dec = hermitian_eigen(H)
        self.eigenvalues_ = dec.eigenvalues[: self.n_states]
        self.ground_energy_ = float(dec.eigenvalues[0])
        self.ground_state_ = dec.eigenvectors[:, 0]
        self.n_features_in_ = H.shape[0]
        return self


class VQE(BaseEstimator):
    """Ry full-entanglement VQE as an estimator.

    Parameters
    ----------
    depth : int, default=3
        Number of [Ry layer, CNOT block] repetitions before the final Ry layer.
    optimizer : {"quasinewton", "gradient-descent", "nelder-mead", "spsa"}
    max_iterations : int, default=600
    seed : int, default=0
        Seeds the initial angles (uniform in [-pi, pi)) and SPSA perturbations.
    optimizer_options : dict or None
        Extra keyword arguments for the optimizer.
    n_restarts : int, default=1
        Independent random starts; the lowest energy wins.

    Attributes
    ----------
    energy_ : float
    parameters_ : ndarray
    state_ : ndarray
    trace_ : list of (evaluation, energy)
    result_ : VqeResult
    """

    def __init__(self, depth=3, optimizer="quasinewton", max_iterations=600, seed=0,
                 optimizer_options=None, n_restarts=1):
        self.depth = depth
        self.optimizer = optimizer
        self.max_iterations = max_iterations
        self.seed = seed
        self.optimizer_options = optimizer_options
        self.n_restarts = n_restarts

    def fit(self, H, y=None, x0=None):
        H = check_hermitian(H, "Hamiltonian")
        n = num_qubits(H.shape[0])
        self.config_ = AnsatzConfig(n, self.depth)
        spec = OptimizerSpec(self.optimizer, self.max_iterations, self.seed,
                             dict(self.optimizer_options or {}), self.n_restarts)
        res = vqe_minimize(H, self.config_, spec, x0=x0)
        self.result_ = res
        self.energy_ = res.energy
        self.parameters_ = res.parameters
        self.trace_ = res.trace
        self.n_evaluations_ = res.evaluations
        self.n_iter_ = res.iterations
        self.n_features_in_ = H.shape[0]
        return self

    @property
    def state_(self):
        check_is_fitted(self, "parameters_")
        return ansatz_state(self.config_, self.parameters_)

    def predict(self, H):
        """Energy of the fitted ansatz state under another Hamiltonian."""
        check_is_fitted(self, "parameters_")
        return energy_expectation(check_hermitian(H, "Hamiltonian"), self.state_)
