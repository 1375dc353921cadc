import numpy as np
import pytest

from morsevqe.optimizers import (
    finite_difference_gradient,
    gradient_descent_fd,
    nelder_mead,
    quasi_newton_fd,
    resolve_method,
    spsa,
)


def quadratic(x):
    return float(np.sum((np.arange(1, x.size + 1) * (x - 1.0)) ** 2))


def rosenbrock(x):
    return float(100 * (x[1] - x[0] ** 2) ** 2 + (1 - x[0]) ** 2)


def test_fd_gradient():
    x = np.array([0.3, -0.2, 2.0])
    g = finite_difference_gradient(quadratic, x)
    np.testing.assert_allclose(g, 2 * np.arange(1, 4) ** 2 * (x - 1), atol=1e-6)


def test_quasi_newton_rosenbrock():
    out = quasi_newton_fd(rosenbrock, np.array([-1.2, 1.0]), max_iterations=600)
    np.testing.assert_allclose(out.x, [1, 1], atol=1e-4)


@pytest.mark.parametrize("method", [quasi_newton_fd, gradient_descent_fd, nelder_mead])
def test_quadratic(method):
    out = method(quadratic, np.zeros(4), max_iterations=2000)
    assert out.fun < 1e-5


def test_spsa_makes_progress():
    out = spsa(quadratic, np.zeros(3), max_iterations=2000, a=0.05, rng=0)
    assert out.fun < 0.05 * quadratic(np.zeros(3))


def test_spsa_deterministic():
    a = spsa(quadratic, np.zeros(3), max_iterations=50, rng=7)
    b = spsa(quadratic, np.zeros(3), max_iterations=50, rng=7)
    np.testing.assert_array_equal(a.x, b.x)


def test_stall_stop():
    out = quasi_newton_fd(lambda x: 1.0, np.zeros(2), max_iterations=600)
    assert out.converged and out.iterations < 600


def test_resolve_method():
    assert resolve_method("BFGS") == "quasinewton"
    assert resolve_method("Nelder_Mead") == "nelder-mead"
    with pytest.raises(ValueError, match="unknown optimizer"):
        resolve_method("cobyla")
