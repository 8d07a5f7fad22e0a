import math

import numpy as np
import pytest

from hsqm.quadrature import QuadratureScheme


def test_validation():
    with pytest.raises(ValueError):
        QuadratureScheme(0, 5)
    with pytest.raises(ValueError):
        QuadratureScheme(4, 2)


def test_defaults_and_adequacy():
    q = QuadratureScheme.default(10)
    assert len(q.radial_nodes) == 20
    assert q.angular_count == 41
    assert q.adequate_for(10)
    assert not q.adequate_for(11)


def test_plane_gaussian():
    q = QuadratureScheme.default(8)
    vals = np.exp(-np.abs(q.z_nodes) ** 2)  # e^{-(x^2+y^2)/2}
    assert np.sum(q.weights * vals) == pytest.approx(2 * math.pi, rel=1e-13)


@pytest.mark.parametrize("k", [0, 1, 3, 6])
def test_radial_moments(k):
    # integral over the plane of t^k e^{-t} dt dphi = 2 pi k!
    q = QuadratureScheme(12, 9)
    t = np.abs(q.z_nodes) ** 2
    got = np.sum(q.weights * t**k * np.exp(-t))
    assert got == pytest.approx(2 * math.pi * math.factorial(k), rel=1e-12)


def test_angular_exactness():
    q = QuadratureScheme(6, 9)
    t = np.abs(q.z_nodes) ** 2
    base = np.exp(-t)
    for k in range(1, 9):
        phase = (q.z_nodes / np.abs(q.z_nodes)) ** k
        assert abs(np.sum(q.weights * base * phase)) <= 1e-12


def test_xy_convention():
    q = QuadratureScheme(4, 5)
    x, y = q.xy_nodes()
    z = (y - 1j * x) / math.sqrt(2)
    assert np.allclose(z, q.z_nodes)
