"""Classical minimizers driving the variational loop.

All four share one calling convention, ``method(fun, x0, max_iterations, ...)``,
and return an :class:`OptimizeOutcome`. Early stopping happens when the energy
changes by less than ``tol`` for ``patience`` consecutive accepted steps.
"""

from dataclasses import dataclass

import numpy as np


@dataclass
class OptimizeOutcome:
    x: np.ndarray
    fun: float
    iterations: int
    converged: bool


class _StallMonitor:
    def __init__(self, tol, patience):
        self.tol, self.patience = tol, patience
        self.last = None
        self.count = 0

    def update(self, value):
        if self.last is not None and abs(value - self.last) < self.tol:
            self.count += 1
        else:
            self.count = 0
        self.last = value
        return self.count >= self.patience


def finite_difference_gradient(fun, x, step=1e-6):
    """Central-difference gradient."""
    x = np.asarray(x, dtype=float)
    g = np.empty_like(x)
    for k in range(x.size):
        e = np.zeros_like(x)
        e[k] = step
        g[k] = (fun(x + e) - fun(x - e)) / (2 * step)
    return g


def _backtrack(fun, x, f, g, direction, step=1.0, shrink=0.5, c1=1e-4, max_halvings=40):
    slope = float(g @ direction)
    for _ in range(max_halvings):
        trial = x + step * direction
        ft = fun(trial)
        if ft <= f + c1 * step * slope:
            return trial, ft, step
        step *= shrink
    return None, f, 0.0


def quasi_newton_fd(fun, x0, max_iterations=600, fd_step=1e-6, tol=1e-9, patience=10,
                    gtol=1e-8):
    """BFGS with central-difference gradients and Armijo backtracking."""
    x = np.array(x0, dtype=float)
    n = x.size
    f = fun(x)
    g = finite_difference_gradient(fun, x, fd_step)
    Hinv = np.eye(n)
    stall = _StallMonitor(tol, patience)
    it = 0
    converged = False
    for it in range(1, max_iterations + 1):
        if np.linalg.norm(g) < gtol:
            converged = True
            break
        d = -Hinv @ g
        if g @ d >= 0:
            Hinv = np.eye(n)
            d = -g
        x_new, f_new, _ = _backtrack(fun, x, f, g, d)
        if x_new is None:
            if np.allclose(Hinv, np.eye(n)):
                converged = True
                break
            Hinv = np.eye(n)
            continue
        g_new = finite_difference_gradient(fun, x_new, fd_step)
        s, y = x_new - x, g_new - g
        sy = float(s @ y)
        if sy > 1e-12:
            if it == 1:
                Hinv = np.eye(n) * (sy / float(y @ y))
            rho = 1.0 / sy
            V = np.eye(n) - rho * np.outer(s, y)
            Hinv = V @ Hinv @ V.T + rho * np.outer(s, s)
        x, f, g = x_new, f_new, g_new
        if stall.update(f):
            converged = True
            break
    return OptimizeOutcome(x, float(f), it, converged)


def gradient_descent_fd(fun, x0, max_iterations=600, learning_rate=0.1, fd_step=1e-6,
                        tol=1e-9, patience=10):
    """Steepest descent with backtracking from a step of ``learning_rate``."""
    x = np.array(x0, dtype=float)
    f = fun(x)
    stall = _StallMonitor(tol, patience)
    it = 0
    for it in range(1, max_iterations + 1):
        g = finite_difference_gradient(fun, x, fd_step)
        x_new, f_new, _ = _backtrack(fun, x, f, g, -g, step=learning_rate)
        if x_new is None:
            return OptimizeOutcome(x, float(f), it, True)
        x, f = x_new, f_new
        if stall.update(f):
            return OptimizeOutcome(x, float(f), it, True)
    return OptimizeOutcome(x, float(f), it, False)


def nelder_mead(fun, x0, max_iterations=600, initial_step=0.5, adaptive=True, tol=1e-9,
                patience=10):
    """Nelder-Mead simplex; ``adaptive`` uses dimension-dependent coefficients.

    Stops once the spread of simplex values stays below ``tol`` for
    ``patience`` iterations.
    """
    x0 = np.asarray(x0, dtype=float)
    n = x0.size
    if adaptive and n > 1:
        alpha, gamma, rho, sigma = 1.0, 1 + 2 / n, 0.75 - 1 / (2 * n), 1 - 1 / n
    else:
        alpha, gamma, rho, sigma = 1.0, 2.0, 0.5, 0.5
    simplex = np.vstack([x0] + [x0 + initial_step * np.eye(n)[k] for k in range(n)])
    values = np.array([fun(v) for v in simplex])
    stall = _StallMonitor(tol, patience)
    it = 0
    for it in range(1, max_iterations + 1):
        order = np.argsort(values, kind="stable")
        simplex, values = simplex[order], values[order]
        centroid = simplex[:-1].mean(axis=0)
        worst = simplex[-1]
        xr = centroid + alpha * (centroid - worst)
        fr = fun(xr)
        if fr < values[0]:
            xe = centroid + gamma * (xr - centroid)
            fe = fun(xe)
            if fe < fr:
                simplex[-1], values[-1] = xe, fe
            else:
                simplex[-1], values[-1] = xr, fr
        elif fr < values[-2]:
            simplex[-1], values[-1] = xr, fr
        else:
            if fr < values[-1]:
                xc = centroid + rho * (xr - centroid)
            else:
                xc = centroid + rho * (worst - centroid)
            fc = fun(xc)
            if fc < min(fr, values[-1]):
                simplex[-1], values[-1] = xc, fc
            else:
                best = simplex[0]
                for k in range(1, n + 1):
                    simplex[k] = best + sigma * (simplex[k] - best)
                    values[k] = fun(simplex[k])
        # the best vertex can sit still while the simplex moves, so watch the spread
        if stall.update(float(values.max() - values.min())) and stall.last < tol:
            break
    k = int(np.argmin(values))
    return OptimizeOutcome(simplex[k].copy(), float(values[k]), it, it < max_iterations)


def spsa(fun, x0, max_iterations=600, a=0.2, c=0.1, A=None, alpha=0.602, gamma=0.101,
         rng=None):
    """Simultaneous-perturbation stochastic approximation with the standard gain decay.

    Gains are ``a / (k + 1 + A)**alpha`` and ``c / (k + 1)**gamma``; ``A``
    defaults to ``0.1 * max_iterations``. Only the two probe evaluations are
    made per iteration, so there is no stall test and every run takes the full
    ``max_iterations`` steps.
    """
    rng = np.random.default_rng(rng)
    x = np.array(x0, dtype=float)
    if A is None:
        A = 0.1 * max_iterations
    for k in range(max_iterations):
        ak = a / (k + 1 + A) ** alpha
        ck = c / (k + 1) ** gamma
        delta = rng.choice([-1.0, 1.0], size=x.size)
        fp = fun(x + ck * delta)
        fm = fun(x - ck * delta)
        x = x - ak * (fp - fm) / (2 * ck) * delta
    return OptimizeOutcome(x, float(fun(x)), max_iterations, False)


METHODS = {
    "quasinewton": quasi_newton_fd,
    "gradient-descent": gradient_descent_fd,
    "nelder-mead": nelder_mead,
    "spsa": spsa,
}

_ALIASES = {
    "quasi-newton": "quasinewton",
    "quasinewtonfd": "quasinewton",
    "bfgs": "quasinewton",
    "gradientdescentfd": "gradient-descent",
    "gd": "gradient-descent",
    "neldermead": "nelder-mead",
    "nelder_mead": "nelder-mead",
}


def resolve_method(name):
    key = str(name).strip().lower()
    key = _ALIASES.get(key, key)
    if key not in METHODS:
        raise ValueError(f"unknown optimizer {name!r}; choose from {', '.join(METHODS)}")
    return key
