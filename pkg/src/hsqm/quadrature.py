"""Phase-plane quadrature: radial Gauss-Laguerre x uniform angular rule.

With z = (y - ix)/sqrt(2) and t = |z|^2 = (x^2 + y^2)/2 the plane measure
is dx dy = dt dphi, so integrands of the Fock-overlap kind
e^(-t) * poly(t) * e^(i k phi) are integrated exactly once the radial
rule has enough nodes for the polynomial degree and the angular count
exceeds |k|.  All quadrature "error" in this package is therefore
truncation error of the operators, not of the rule.
"""

from __future__ import annotations

import numpy as np
from scipy.special import roots_laguerre

__all__ = ["QuadratureScheme"]


class QuadratureScheme:
    """Product rule over the phase plane.

    ``weights`` are normalized so that  sum_k weights[k] * f(z_k)
    approximates the plain plane integral  integral f dx dy
    (equivalently 2 * integral f d^2 z).
    """

    __slots__ = ("radial_nodes", "radial_weights", "angular_count", "z_nodes", "weights")

    def __init__(self, radial_count: int, angular_count: int):
        if radial_count < 1:
            raise ValueError("need at least one radial node")
        if angular_count < 3:
            raise ValueError("need at least three angular nodes")
        t, w = roots_laguerre(radial_count)
        if not np.all(w > 0):
            raise ValueError("radial weights must be positive")
        self.radial_nodes = t
        self.radial_weights = w
        self.angular_count = int(angular_count)

        phi = 2.0 * np.pi * np.arange(angular_count) / angular_count
        # undo the e^{-t} Laguerre weight; stable through logs
        radial = np.exp(np.log(w) + t) * (2.0 * np.pi / angular_count)
        self.z_nodes = (np.sqrt(t)[:, None] * np.exp(1j * phi)[None, :]).ravel()
        self.weights = np.repeat(radial, angular_count)

    @classmethod
    def default(cls, n_levels: int) -> "QuadratureScheme":
        """2N radial and 4N+1 angular nodes: exact for overlaps of the
        first N levels with plenty of margin."""
        return cls(2 * n_levels, 4 * n_levels + 1)

    def adequate_for(self, n_levels: int) -> bool:
        """True if the rule meets the minimum sizes for dimension N."""
        return len(self.radial_nodes) >= 2 * n_levels and self.angular_count >= 2 * n_levels + 1

    def xy_nodes(self) -> tuple[np.ndarray, np.ndarray]:
        """Cartesian nodes under the z = (y - ix)/sqrt(2) convention."""
        x = -np.sqrt(2.0) * self.z_nodes.imag
        y = np.sqrt(2.0) * self.z_nodes.real
        return x, y

    def __repr__(self) -> str:
        return f"QuadratureScheme(radial={len(self.radial_nodes)}, angular={self.angular_count})"
