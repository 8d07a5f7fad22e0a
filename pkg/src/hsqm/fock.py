"""Truncated Fock space primitives.

A single bosonic mode is kept on its lowest ``N`` number states
|0>, ..., |N-1>.  Everything downstream (the Hilbert-Schmidt calculus,
modular objects, phase-space maps) is built from the dense operators
returned here: ladder operators, quadratures, the oscillator
Hamiltonian, Weyl displacement operators, and Gibbs densities.

Truncation discipline: a ladder operator of level-raising degree ``k``
is only trustworthy on the block of levels ``0 .. N-1-k``; identities
are asserted on such "safe blocks" throughout the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import eval_genlaguerre, gammaln

__all__ = [
    "FockSpace",
    "Operator",
    "ThermalSpec",
    "annihilation",
    "creation",
    "position",
    "momentum",
    "number",
    "identity",
    "osc_hamiltonian",
    "displacement",
    "displacement_stack",
    "gibbs_density",
]


@dataclass(frozen=True)
class FockSpace:
    """Truncated single-mode Fock space with levels |0> .. |dim-1>."""

    dim: int

    def __post_init__(self) -> None:
        if not isinstance(self.dim, (int, np.integer)) or self.dim < 2:
            raise ValueError(f"Fock space needs dim >= 2, got {self.dim!r}")


class Operator:
    """Dense complex square matrix attached to a :class:`FockSpace`.

    Doubles as an element of the Hilbert-Schmidt space B2(H_N); the
    inner product lives in :mod:`hsqm.hs_space`.
    """

    __slots__ = ("space", "mat")

    def __init__(self, space: FockSpace, mat: np.ndarray):
        mat = np.ascontiguousarray(mat, dtype=complex)
        if mat.shape != (space.dim, space.dim):
            raise ValueError(f"expected {(space.dim, space.dim)} matrix, got {mat.shape}")
        if not np.all(np.isfinite(mat.view(float))):
            raise ValueError("operator entries must be finite")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "mat", mat)

    def __setattr__(self, name, value):  # immutable after construction
        raise AttributeError("Operator is immutable")

    def dag(self) -> "Operator":
        """Hermitian adjoint."""
        return Operator(self.space, self.mat.conj().T)

    def trace(self) -> complex:
        return complex(np.trace(self.mat))

    def _same_space(self, other: "Operator") -> None:
        if self.space != other.space:
            raise ValueError("operators live on different Fock spaces")

    def __matmul__(self, other: "Operator") -> "Operator":
        self._same_space(other)
        return Operator(self.space, self.mat @ other.mat)

    def __add__(self, other: "Operator") -> "Operator":
        self._same_space(other)
        return Operator(self.space, self.mat + other.mat)

    def __sub__(self, other: "Operator") -> "Operator":
        self._same_space(other)
        return Operator(self.space, self.mat - other.mat)

    def __mul__(self, c: complex) -> "Operator":
        return Operator(self.space, self.mat * c)

    __rmul__ = __mul__

    def __neg__(self) -> "Operator":
        return Operator(self.space, -self.mat)

    def __repr__(self) -> str:
        return f"Operator(dim={self.space.dim})"


@dataclass(frozen=True)
class ThermalSpec:
    """Oscillator frequency and inverse temperature of a Gibbs state.

    ``beta`` may be ``math.inf`` (ground-state limit).
    """

    omega: float
    beta: float

    def __post_init__(self) -> None:
        if not (self.omega > 0):
            raise ValueError("omega must be positive")
        if not (self.beta > 0):
            raise ValueError("beta must be positive")


def identity(space: FockSpace) -> Operator:
    return Operator(space, np.eye(space.dim))


def annihilation(space: FockSpace) -> Operator:
    """Ladder-down operator: a|n> = sqrt(n)|n-1> on retained levels."""
    return Operator(space, np.diag(np.sqrt(np.arange(1.0, space.dim)), k=1))


def creation(space: FockSpace) -> Operator:
    """Adjoint of :func:`annihilation`."""
    return annihilation(space).dag()


def number(space: FockSpace) -> Operator:
    return Operator(space, np.diag(np.arange(float(space.dim))))


def position(space: FockSpace) -> Operator:
    """Q = (a + a†)/sqrt(2); Hermitian."""
    a = annihilation(space).mat
    return Operator(space, (a + a.conj().T) / math.sqrt(2.0))


def momentum(space: FockSpace) -> Operator:
    """P = (a - a†)/(i sqrt(2)); Hermitian."""
    a = annihilation(space).mat
    return Operator(space, -1j * (a - a.conj().T) / math.sqrt(2.0))


def osc_hamiltonian(space: FockSpace, omega: float) -> Operator:
    """Harmonic oscillator Hamiltonian, diagonal with levels omega*(n + 1/2)."""
    if not (omega > 0):
        raise ValueError("omega must be positive")
    return Operator(space, np.diag(omega * (np.arange(space.dim) + 0.5)))


def displacement_stack(space: FockSpace, alphas: np.ndarray) -> np.ndarray:
    """Matrices of D(alpha) for a whole array of labels, shape (K, N, N).

    Entries come from the associated-Laguerre closed form

        <m|D(a)|n> = sqrt(n!/m!) a^(m-n) e^(-|a|^2/2) L_n^(m-n)(|a|^2),  m >= n,

    with the m < n entries filled from D(a)† = D(-a).  Each entry is the
    exact (untruncated) matrix element, so there is no exponential
    truncation artifact per entry.
    """
    alphas = np.atleast_1d(np.asarray(alphas, dtype=complex))
    n_levels = space.dim
    idx = np.arange(n_levels)
    row = idx[:, None]  # m
    col = idx[None, :]  # n
    lo = np.minimum(row, col)
    d = row - col

    # sqrt(min!/max!) <= 1, stable through log-gamma
    ratio = np.exp(0.5 * (gammaln(lo + 1) - gammaln(np.maximum(row, col) + 1)))

    t = np.abs(alphas) ** 2
    lag = eval_genlaguerre(lo[None, :, :], np.abs(d)[None, :, :], t[:, None, None])

    a = alphas[:, None, None]
    power = np.where(
        d[None, :, :] >= 0,
        a ** np.maximum(d, 0)[None, :, :],
        (-a.conj()) ** np.maximum(-d, 0)[None, :, :],
    )
    gauss = np.exp(-t / 2.0)[:, None, None]
    return ratio[None, :, :] * power * gauss * lag


def displacement(space: FockSpace, alpha: complex) -> Operator:
    """Weyl displacement operator D(alpha) = exp(alpha a† - conj(alpha) a).

    Unitary up to truncation; see :func:`displacement_stack` for the
    entrywise closed form used.
    """
    if not np.isfinite(alpha):
        raise ValueError("displacement label must be finite")
    return Operator(space, displacement_stack(space, np.array([alpha]))[0])


def gibbs_density(space: FockSpace, spec: ThermalSpec) -> Operator:
    """Oscillator Gibbs density, diagonal with weights prop. to e^(-n w b).

    The weights are renormalized over the retained levels so the trace
    is 1 at any truncation; the analytic prefactor (1 - e^(-w b)) is
    recovered as N grows.
    """
    exponents = np.zeros(space.dim)
    exponents[1:] = -np.arange(1, space.dim) * spec.omega * spec.beta
    weights = np.exp(exponents)
    weights /= weights.sum()
    return Operator(space, np.diag(weights).astype(complex))
