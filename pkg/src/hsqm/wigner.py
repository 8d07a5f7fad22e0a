"""Weyl operators and the Wigner map between B2(H_N) and phase space.

The Weyl operator is U(x, y) = exp(-i(xQ + yP)), which coincides with
the displacement D(alpha) at alpha = (y - ix)/sqrt(2); that convention
is fixed once here and shared with the quadrature module.

The Wigner map

    (W X)(x, y) = (2 pi)^(-1/2) Tr[U(x, y)† X]

is unitary from B2(H_N) onto its image in L^2 of the plane, with inverse
W^(-1) f = (2 pi)^(-1/2) * integral U(x, y) f(x, y) dx dy (weakly).
Pointwise values reduce to entries of the displacement closed form, so
evaluation on a quadrature grid amounts to one displacement stack.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .fock import FockSpace, Operator, displacement_stack, identity
from .hs_space import SuperOp, hs_inner, vee
from .quadrature import QuadratureScheme

__all__ = [
    "PhasePoint",
    "PhaseFunction",
    "weyl_operator",
    "wigner_transform",
    "wigner_function",
    "wigner_inverse",
    "unitarity_residual",
    "lifted_unitaries",
]

#: Signature of phase-space functions: f(x, y) -> complex, vectorized over
#: equal-shaped coordinate arrays.
PhaseFunction = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class PhasePoint:
    """Point of the phase plane; carries the Weyl label z = (y - ix)/sqrt(2)."""

    x: float
    y: float

    def __post_init__(self):
        if not (np.isfinite(self.x) and np.isfinite(self.y)):
            raise ValueError("phase coordinates must be finite")

    @property
    def z(self) -> complex:
        return (self.y - 1j * self.x) / math.sqrt(2.0)


def _z_of_xy(x, y):
    return (np.asarray(y) - 1j * np.asarray(x)) / math.sqrt(2.0)


def weyl_operator(space: FockSpace, p: PhasePoint) -> Operator:
    """U(x, y) = exp(-i(xQ + yP)) = D((y - ix)/sqrt(2))."""
    return Operator(space, displacement_stack(space, np.array([p.z]))[0])


def wigner_transform(x: Operator, p: PhasePoint) -> complex:
    """(W X)(x, y), a single pointwise value."""
    u = displacement_stack(x.space, np.array([p.z]))[0]
    return complex(np.vdot(u, x.mat)) / math.sqrt(2.0 * math.pi)


def wigner_function(x: Operator) -> PhaseFunction:
    """The whole map W X as a vectorized phase-space function."""
    mat = x.mat.copy()
    space = x.space

    def f(xs, ys):
        zs = np.atleast_1d(_z_of_xy(xs, ys)).ravel()
        stack = displacement_stack(space, zs)
        vals = np.einsum("kmn,mn->k", stack.conj(), mat) / math.sqrt(2.0 * math.pi)
        return vals.reshape(np.shape(np.asarray(xs))) if np.ndim(xs) else vals[0]

    return f


def _grid_values(f: PhaseFunction, scheme: QuadratureScheme) -> np.ndarray:
    xs, ys = scheme.xy_nodes()
    vals = f(xs, ys)
    vals = np.asarray(vals, dtype=complex)
    if vals.shape != xs.shape:
        # scalar-only evaluator; fall back to a loop
        vals = np.array([f(float(a), float(b)) for a, b in zip(xs, ys)], dtype=complex)
    return vals


def wigner_inverse(f: PhaseFunction, scheme: QuadratureScheme, space: FockSpace) -> Operator:
    """Quadrature evaluation of W^(-1) f.

    Exact (to rounding) whenever f is the W-image of an operator whose
    support fits the scheme; for anything else the round-trip residual
    is the diagnostic, nothing fails silently.
    """
    vals = _grid_values(f, scheme)
    zs = scheme.z_nodes
    stack = displacement_stack(space, zs)
    mat = np.einsum("k,kmn->mn", scheme.weights * vals, stack) / math.sqrt(2.0 * math.pi)
    return Operator(space, mat)


def unitarity_residual(x: Operator, y: Operator, scheme: QuadratureScheme) -> float:
    """| integral conj(W X) (W Y) dx dy  -  <X|Y> |."""
    if x.space != y.space:
        raise ValueError("operators live on different Fock spaces")
    stack = displacement_stack(x.space, scheme.z_nodes)
    vx = np.einsum("kmn,mn->k", stack.conj(), x.mat) / math.sqrt(2.0 * math.pi)
    vy = np.einsum("kmn,mn->k", stack.conj(), y.mat) / math.sqrt(2.0 * math.pi)
    quad = np.sum(scheme.weights * vx.conj() * vy)
    return float(abs(quad - hs_inner(x, y)))


def lifted_unitaries(space: FockSpace, p: PhasePoint) -> tuple[SuperOp, SuperOp]:
    """The two commuting unitaries U(x,y) induces on B2(H_N).

    In the operator picture they are left multiplication by U and right
    multiplication by U: (U ∨ I)(X) = U X and (I ∨ U†)(X) = X U.
    """
    u = weyl_operator(space, p)
    return vee(u, identity(space)), vee(identity(space), u.dag())
