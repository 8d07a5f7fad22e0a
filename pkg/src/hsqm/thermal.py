"""Coherent states displaced from the oscillator Gibbs purification.

The Gibbs density rho_beta purifies to Phi_beta = rho_beta^(1/2), a unit
vector of B2(H_N) that is cyclic and separating for the left algebra.
Displacing it gives the thermal coherent family

    |z> = D(z) Phi_beta,

which is the left-lifted Weyl orbit of the purification.  The family is
total, and its frame operator under (1/2pi) dx dy is *right
multiplication by rho_beta*, not the identity: by Schur's lemma the
frame operator of a reducible Weyl action lands in the commutant of the
left algebra, and the weight picked out by Phi_beta is the Gibbs
density itself.  Both residuals are exposed: the deviation from the
identity (large, by the above) and the deviation from the Gibbs-weighted
frame operator (truncation-level small).

The Tomita map of the thermal state reflects the family through the
origin: S(|z>) = |-z>, exactly, since D(z)† = D(-z).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fock import FockSpace, Operator, ThermalSpec, displacement, displacement_stack, gibbs_density
from .hs_space import SuperOp, hs_norm
from .modular import ModularData, tomita_s
from .quadrature import QuadratureScheme

__all__ = [
    "ThermalCS",
    "thermal_vector",
    "thermal_cs",
    "safe_radius",
    "resolution_operator",
    "resolution_residual",
    "frame_operator_residual",
    "s_beta_reflection",
    "cs_overlap",
]


@dataclass(frozen=True)
class ThermalCS:
    """A displaced Gibbs purification with unit HS norm (up to truncation)."""

    spec: ThermalSpec
    z: complex
    state: Operator


def thermal_vector(space: FockSpace, spec: ThermalSpec) -> Operator:
    """Phi_beta = rho_beta^(1/2): diagonal, positive, unit HS norm."""
    rho = gibbs_density(space, spec)
    return Operator(space, np.diag(np.sqrt(np.diag(rho.mat).real)).astype(complex))


def safe_radius(space: FockSpace) -> float:
    """Largest |z| at which a displaced low state keeps its column mass
    inside the truncation (empirical sqrt(N)/4 rule)."""
    return math.sqrt(space.dim) / 4.0


def thermal_cs(space: FockSpace, spec: ThermalSpec, z: complex) -> ThermalCS:
    """|z> = D(z) Phi_beta.

    Rejects labels outside the safe disc, where truncation would make
    the norm contract unverifiable.
    """
    if abs(z) > safe_radius(space):
        raise ValueError(
            f"|z| = {abs(z):.3f} exceeds the safe displacement radius "
            f"{safe_radius(space):.3f} for dim {space.dim}"
        )
    state = displacement(space, z) @ thermal_vector(space, spec)
    return ThermalCS(spec, complex(z), state)


def _state_vectors(space: FockSpace, spec: ThermalSpec, scheme: QuadratureScheme, mirrored: bool) -> np.ndarray:
    """vec(D(±z_k) Phi_beta) for every quadrature node, shape (K, N^2)."""
    zs = -scheme.z_nodes if mirrored else scheme.z_nodes
    stack = displacement_stack(space, zs)
    sqrt_lam = np.sqrt(np.diag(gibbs_density(space, spec).mat).real)
    states = stack * sqrt_lam[None, None, :]  # D(z) @ diag(sqrt(lambda))
    return states.reshape(len(zs), space.dim**2)


def resolution_operator(
    space: FockSpace, spec: ThermalSpec, scheme: QuadratureScheme, mirrored: bool = False
) -> SuperOp:
    """Quadrature assembly of (1/2pi) * integral |z><z| dx dy as a dense
    superoperator on B2(H_N); ``mirrored`` uses the reflected family |-z>."""
    vecs = _state_vectors(space, spec, scheme, mirrored)
    w = scheme.weights / (2.0 * math.pi)
    dense = (vecs.T * w) @ vecs.conj()
    return SuperOp.from_dense(space, dense)


def _block_indices(space: FockSpace, max_level: int) -> np.ndarray:
    n = space.dim
    keep = np.arange(max_level + 1)
    return (keep[:, None] * n + keep[None, :]).ravel()


def _restricted_deviation(dense: np.ndarray, reference: np.ndarray, space: FockSpace, max_level: int) -> float:
    cols = _block_indices(space, max_level)
    diff = (dense - reference)[:, cols]
    return float(np.linalg.norm(diff, 2))


def resolution_residual(
    space: FockSpace,
    spec: ThermalSpec,
    scheme: QuadratureScheme,
    mirrored: bool = False,
    max_level: int | None = None,
) -> float:
    """Operator-norm deviation of the assembled family from the identity,
    restricted to inputs supported on levels <= max_level (default N/4).

    The mathematical value of the assembled integral is right
    multiplication by rho_beta, so this residual is of order
    max |lambda_b - 1| over the block: order one.  It is reported as a
    diagnostic; see :func:`frame_operator_residual` for the residual
    against the true frame operator.
    """
    if max_level is None:
        max_level = space.dim // 4
    dense = resolution_operator(space, spec, scheme, mirrored).to_dense()
    eye = np.eye(space.dim**2)
    return _restricted_deviation(dense, eye, space, max_level)


def frame_operator_residual(
    space: FockSpace,
    spec: ThermalSpec,
    scheme: QuadratureScheme,
    mirrored: bool = False,
    max_level: int | None = None,
) -> float:
    """Deviation of the assembled family from its closed-form frame
    operator, right multiplication by the Gibbs density (dense form
    kron(I, rho_beta)); truncation-level small on the restricted block."""
    if max_level is None:
        max_level = space.dim // 4
    dense = resolution_operator(space, spec, scheme, mirrored).to_dense()
    lam = np.diag(gibbs_density(space, spec).mat).real
    reference = np.kron(np.eye(space.dim), np.diag(lam))
    return _restricted_deviation(dense, reference, space, max_level)


def s_beta_reflection(space: FockSpace, spec: ThermalSpec, z: complex) -> float:
    """HS distance between S(|z>) and |-z>; zero up to truncation since
    S(D(z) Phi_beta) = D(z)† Phi_beta = D(-z) Phi_beta."""
    md = ModularData.from_thermal(space, spec)
    s_map = tomita_s(md)
    plus = thermal_cs(space, spec, z).state
    minus = thermal_cs(space, spec, -z).state
    return hs_norm(s_map(plus) - minus)


def cs_overlap(space: FockSpace, spec: ThermalSpec, z1: complex, z2: complex) -> complex:
    """<z1|z2> computed directly from the two states."""
    a = thermal_cs(space, spec, z1).state
    b = thermal_cs(space, spec, z2).state
    return complex(np.vdot(a.mat, b.mat))
