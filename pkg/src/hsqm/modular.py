"""Tomita-Takesaki modular objects for a faithful density on H_N.

A faithful density rho turns B2(H_N) into a standard form with cyclic
and separating vector Phi = rho^(1/2).  The objects realized here:

* the Tomita map       S(X) = rho^(-1/2) X† rho^(1/2),  S(A Phi) = A† Phi,
* modular conjugation  J(X) = X†,
* modular operator     Delta(X) = rho X rho^(-1), with S = J Delta^(1/2),
* the auxiliary map    F(X) = rho^(1/2) X† rho^(-1/2) = J Delta^(-1/2),
* modular flow         sigma_t(A) = rho^(it) A rho^(-it),
* the KMS boundary condition of the Heisenberg flow of the stored
  Hamiltonian at the stored inverse temperature.

Complex powers of rho use its spectral decomposition; eigenvalues are
real and strictly positive (faithfulness is enforced), so there is no
branch ambiguity.
"""

from __future__ import annotations

import numpy as np

from .fock import FockSpace, Operator, ThermalSpec, gibbs_density, osc_hamiltonian
from .hs_space import SuperOp, basis_element, hs_norm, vee

__all__ = [
    "ModularData",
    "AntilinearMap",
    "modular_operator",
    "modular_conjugation",
    "tomita_s",
    "tomita_f",
    "delta_power",
    "polar_check",
    "modular_flow",
    "kms_residual",
    "state_eval",
]

_FAITHFUL_FLOOR = 1e-14


class AntilinearMap:
    """Conjugate-linear map on B2(H_N) of the sandwich form X -> L X† R.

    Carried as the linear part Y -> L Y^T R together with the entrywise
    conjugation flag (the two compose to the adjoint inside).  Checks
    map(cX) = conj(c) map(X) by construction.
    """

    __slots__ = ("space", "left", "right")

    def __init__(self, space: FockSpace, left: np.ndarray, right: np.ndarray):
        self.space = space
        self.left = np.ascontiguousarray(left, dtype=complex)
        self.right = np.ascontiguousarray(right, dtype=complex)
        n = space.dim
        if self.left.shape != (n, n) or self.right.shape != (n, n):
            raise ValueError("sandwich factors have wrong shape")

    def __call__(self, x: Operator) -> Operator:
        if x.space != self.space:
            raise ValueError("operator lives on a different Fock space")
        return Operator(self.space, self.left @ x.mat.conj().T @ self.right)

    # Explicit composition rules; each returns the closed form.

    def after_linear(self, sup: SuperOp) -> "AntilinearMap":
        """self ∘ (A ∨ B): antilinear with factors (L B, A† R)."""
        if sup.pairs is None or len(sup.pairs) != 1:
            raise ValueError("composition implemented for single-pair superoperators")
        a, b = sup.pairs[0]
        return AntilinearMap(self.space, self.left @ b, a.conj().T @ self.right)

    def before_linear(self, sup: SuperOp) -> "AntilinearMap":
        """(A ∨ B) ∘ self: antilinear with factors (A L, R B†)."""
        if sup.pairs is None or len(sup.pairs) != 1:
            raise ValueError("composition implemented for single-pair superoperators")
        a, b = sup.pairs[0]
        return AntilinearMap(self.space, a @ self.left, self.right @ b.conj().T)

    def compose(self, other: "AntilinearMap") -> SuperOp:
        """self ∘ other is linear: X -> (L1 R2†) X (L2† R1)."""
        if self.space != other.space:
            raise ValueError("maps live on different spaces")
        a = self.left @ other.right.conj().T
        b = self.right.conj().T @ other.left
        # X -> a X b = vee(a, b†)(X)
        return SuperOp(self.space, pairs=[(a, b.conj().T)])

    def __repr__(self) -> str:
        return f"AntilinearMap(dim={self.space.dim})"


class ModularData:
    """Faithful density with its inverse temperature and Hamiltonian.

    The spectral decomposition of rho is cached at construction and the
    object is immutable afterwards.  Densities with an eigenvalue below
    1e-14 of the largest are rejected as non-faithful rather than
    regularized: the modular objects need rho invertible, and silently
    flooring eigenvalues would mask modeling errors.
    """

    __slots__ = ("space", "rho", "beta", "hamiltonian", "_evals", "_evecs", "_ham_evals", "_ham_evecs")

    def __init__(self, rho: Operator, beta: float, hamiltonian: Operator | None = None):
        if not (beta > 0) or not np.isfinite(beta):
            raise ValueError("beta must be positive and finite")
        mat = rho.mat
        scale = np.linalg.norm(mat)
        if np.linalg.norm(mat - mat.conj().T) > 1e-12 * max(scale, 1.0):
            raise ValueError("density must be Hermitian")
        if abs(np.trace(mat).real - 1.0) > 1e-10 or abs(np.trace(mat).imag) > 1e-12:
            raise ValueError("density must have unit trace")

        off = mat - np.diag(np.diag(mat))
        if np.all(off == 0):
            evals = np.diag(mat).real.copy()
            evecs = None
        else:
            evals, evecs = np.linalg.eigh(mat)
        if np.min(evals) < _FAITHFUL_FLOOR * np.max(evals):
            raise ValueError(
                "density is not faithful at working precision "
                f"(min/max eigenvalue ratio {np.min(evals) / np.max(evals):.3e})"
            )

        self.space = rho.space
        self.rho = rho
        self.beta = float(beta)
        self._evals = evals
        self._evecs = evecs

        if hamiltonian is None:
            # Gibbs convention: H = -(1/beta) ln(rho), so e^{-beta H} = rho.
            logw = -np.log(evals) / beta
            if evecs is None:
                ham = Operator(rho.space, np.diag(logw).astype(complex))
            else:
                ham = Operator(rho.space, (evecs * logw) @ evecs.conj().T)
            hamiltonian = ham
        elif hamiltonian.space != rho.space:
            raise ValueError("Hamiltonian lives on a different Fock space")
        self.hamiltonian = hamiltonian

        hmat = hamiltonian.mat
        hoff = hmat - np.diag(np.diag(hmat))
        if np.all(hoff == 0):
            self._ham_evals = np.diag(hmat).real.copy()
            self._ham_evecs = None
        else:
            self._ham_evals, self._ham_evecs = np.linalg.eigh(hmat)

    @classmethod
    def from_thermal(cls, space: FockSpace, spec: ThermalSpec) -> "ModularData":
        """Oscillator Gibbs data at the given frequency and temperature."""
        return cls(gibbs_density(space, spec), spec.beta, osc_hamiltonian(space, spec.omega))

    # -- spectral helpers ---------------------------------------------

    def rho_power(self, z: complex) -> np.ndarray:
        """Principal power rho^z through the cached eigendecomposition."""
        w = self._evals.astype(complex) ** z
        if self._evecs is None:
            return np.diag(w)
        return (self._evecs * w) @ self._evecs.conj().T

    def ham_phase(self, z: complex) -> np.ndarray:
        """e^{i z H} for complex time z."""
        w = np.exp(1j * z * self._ham_evals.astype(complex))
        if self._ham_evecs is None:
            return np.diag(w)
        return (self._ham_evecs * w) @ self._ham_evecs.conj().T

    @property
    def sqrt_rho(self) -> Operator:
        """Phi = rho^(1/2), the cyclic and separating vector in B2."""
        return Operator(self.space, self.rho_power(0.5))


def modular_operator(md: ModularData) -> SuperOp:
    """Delta : X -> rho X rho^(-1); positive with spectrum {l_n / l_m}."""
    return vee(Operator(md.space, md.rho_power(1.0)), Operator(md.space, md.rho_power(-1.0)))


def delta_power(md: ModularData, s: float) -> SuperOp:
    """Delta^s : X -> rho^s X rho^(-s)."""
    left = Operator(md.space, md.rho_power(s))
    right = Operator(md.space, md.rho_power(-np.conj(s)))  # adjoint inside vee
    return vee(left, right)


def modular_conjugation(space: FockSpace) -> AntilinearMap:
    """J(X) = X†; antiunitary with J^2 = id and J(rho^(1/2)) = rho^(1/2)."""
    eye = np.eye(space.dim)
    return AntilinearMap(space, eye, eye)


def tomita_s(md: ModularData) -> AntilinearMap:
    """S(X) = rho^(-1/2) X† rho^(1/2); satisfies S(A Phi) = A† Phi."""
    return AntilinearMap(md.space, md.rho_power(-0.5), md.rho_power(0.5))


def tomita_f(md: ModularData) -> AntilinearMap:
    """F(X) = rho^(1/2) X† rho^(-1/2) = J Delta^(-1/2)."""
    return AntilinearMap(md.space, md.rho_power(0.5), md.rho_power(-0.5))


def polar_check(md: ModularData) -> float:
    """Max basis-wise HS distance between S and J Delta^(1/2).

    Both sides are evaluated independently on every |n><l|; the polar
    decomposition S = J Delta^(1/2) makes the result vanish to rounding.
    """
    s_map = tomita_s(md)
    j_map = modular_conjugation(md.space)
    half = delta_power(md, 0.5)
    n = md.space.dim
    worst = 0.0
    for a in range(n):
        for b in range(n):
            x = basis_element(md.space, a, b)
            diff = s_map(x) - j_map(half(x))
            worst = max(worst, hs_norm(diff))
    return worst


def modular_flow(md: ModularData, t: float) -> SuperOp:
    """sigma_t : A -> rho^(it) A rho^(-it).

    A one-parameter group that leaves the state Tr[rho .] invariant.
    """
    u = Operator(md.space, md.rho_power(1j * t))
    return vee(u, u)


def kms_residual(md: ModularData, a: Operator, b: Operator, t: float) -> float:
    """Deviation from the thermal boundary condition at time t.

    With the Heisenberg flow alpha_z(B) = e^{izH} B e^{-izH} of the
    stored Hamiltonian, a Gibbs density e^{-beta H}/Z satisfies

        Tr[rho A alpha_{t + i beta}(B)] = Tr[rho alpha_t(B) A]

    exactly; the returned residual is the absolute difference of the two
    traces.  Raises if the stored density and Hamiltonian disagree.
    """
    if a.space != md.space or b.space != md.space:
        raise ValueError("operators live on a different Fock space")
    boltz = np.exp(-md.beta * md._ham_evals.astype(complex))
    if md._ham_evecs is not None:
        gibbs = (md._ham_evecs * (boltz / boltz.sum())) @ md._ham_evecs.conj().T
    else:
        gibbs = np.diag(boltz / boltz.sum())
    if np.linalg.norm(md.rho.mat - gibbs) > 1e-10:
        raise ValueError("density is not the Gibbs state of the stored Hamiltonian")

    rho = md.rho.mat

    def flow(mat: np.ndarray, z: complex) -> np.ndarray:
        u = md.ham_phase(z)
        uinv = md.ham_phase(-z)
        return u @ mat @ uinv

    lhs = np.trace(rho @ a.mat @ flow(b.mat, t + 1j * md.beta))
    rhs = np.trace(rho @ flow(b.mat, t) @ a.mat)
    return float(abs(lhs - rhs))


def state_eval(md: ModularData, a: Operator) -> complex:
    """Tr[rho A]; equals <Phi | (A ∨ I)(Phi)> for Phi = rho^(1/2)."""
    if a.space != md.space:
        raise ValueError("operator lives on a different Fock space")
    return complex(np.trace(md.rho.mat @ a.mat))
