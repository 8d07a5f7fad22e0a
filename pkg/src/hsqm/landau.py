"""Charged particle on the noncommutative plane with a harmonic trap.

The model is a constant perpendicular magnetic field plus an isotropic
harmonic potential, with position commutators [x^i, x^j] = i theta e^ij.
A chiral decomposition turns it into two commuting oscillators with
dressed frequencies Omega~_± = Omega~ ± omega~_c / 2, realized on the
tensor product of two quantum (Hilbert-Schmidt) spaces with basis
|n+, n-; m+, m-) = |n+><m+| (x) |n-><m-|.

Provided here: the dressed frequencies and spectrum, the chiral ladder
action, tensor coherent states, the thermal Husimi distribution and
partition functions, the lowest-level projector with its reproducing
kernel e^(z conj(z')), holomorphic projection, and the position /
momentum uncertainty table of the right-action quadratures.

Conventions: hbar is explicit in the dynamical quantities; the
lowest-level wavefunctions use the magnetic length l0 = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .fock import FockSpace, Operator, annihilation, identity, osc_hamiltonian
from .hs_space import SuperOp, basis_element, hs_inner, vee
from .quadrature import QuadratureScheme

__all__ = [
    "LandauParams",
    "ChiralFrequencies",
    "TensorState",
    "chiral_frequencies",
    "spectrum",
    "hamiltonian_op",
    "apply_hamiltonian",
    "tensor_basis_state",
    "tensor_cs",
    "apply_chiral_ladder",
    "husimi",
    "partition",
    "husimi_trace_residual",
    "lll_state",
    "lll_overlap",
    "lll_projector",
    "reproducing_kernel",
    "project_hol",
    "uncertainty_report",
    "classical_frame",
    "sector_resolution_operator",
    "tensor_resolution_residual",
    "diagonal_cs_channel",
]


@dataclass(frozen=True)
class LandauParams:
    """Physical inputs: mass, trap and cyclotron frequencies,
    noncommutativity area theta, and hbar."""

    mass: float
    omega0: float
    omega_c: float
    theta: float
    hbar: float = 1.0

    def __post_init__(self):
        if not (self.mass > 0):
            raise ValueError("mass must be positive")
        if self.omega0 < 0:
            raise ValueError("omega0 must be nonnegative")
        if not (self.omega_c > 0):
            raise ValueError("omega_c must be positive")
        if self.theta < 0:
            raise ValueError("theta must be nonnegative")
        if not (self.hbar > 0):
            raise ValueError("hbar must be positive")


@dataclass(frozen=True)
class ChiralFrequencies:
    """Derived frequencies of the chiral decomposition.

    Omega_plus/Omega_minus satisfy Omega_± = Omega_tilde ± omega_c_tilde/2
    exactly; zeta is the inverse-length scale of the chiral ladders.
    """

    Omega: float
    zeta: float
    Omega_tilde: float
    omega_c_tilde: float
    Omega_plus: float
    Omega_minus: float


def chiral_frequencies(p: LandauParams) -> ChiralFrequencies:
    """Closed forms of the dressed frequencies.

    The discriminant 1 - M w_c theta/2 + (M Omega theta/4)^2 must be
    positive for the ladder scale to be real.  omega_c_tilde is the
    first-order-in-theta dressing of the cyclotron frequency; for large
    theta it can push Omega_minus negative, which downstream operations
    guard against rather than re-derive.
    """
    omega_sq = p.omega0**2 + p.omega_c**2 / 4.0
    omega = math.sqrt(omega_sq)
    disc = 1.0 - p.mass * p.omega_c * p.theta / 2.0 + (p.mass * omega * p.theta / 4.0) ** 2
    if disc <= 0:
        raise ValueError(f"parameters outside model validity (discriminant {disc:.3e} <= 0)")
    zeta = ((p.mass * omega / p.hbar) ** 2 / disc) ** 0.25
    omega_tilde = omega * math.sqrt(disc)
    omega_c_tilde = p.omega_c * (1.0 - (p.omega_c / 4.0 + p.omega0**2 / p.omega_c) * p.mass * p.theta)
    return ChiralFrequencies(
        Omega=omega,
        zeta=zeta,
        Omega_tilde=omega_tilde,
        omega_c_tilde=omega_c_tilde,
        Omega_plus=omega_tilde + omega_c_tilde / 2.0,
        Omega_minus=omega_tilde - omega_c_tilde / 2.0,
    )


def spectrum(p: LandauParams, n_max: int) -> np.ndarray:
    """Energy grid E[n+, n-] = hbar O+ (n+ + 1/2) + hbar O- (n- + 1/2)."""
    freq = chiral_frequencies(p)
    n = np.arange(n_max)
    e_plus = p.hbar * freq.Omega_plus * (n + 0.5)
    e_minus = p.hbar * freq.Omega_minus * (n + 0.5)
    return e_plus[:, None] + e_minus[None, :]


# -- tensor quantum space -------------------------------------------------


class TensorState:
    """Coefficients c[n+, m+, n-, m-] on the two-sector quantum basis."""

    __slots__ = ("space", "coeffs")

    def __init__(self, space: FockSpace, coeffs: np.ndarray):
        n = space.dim
        coeffs = np.ascontiguousarray(coeffs, dtype=complex)
        if coeffs.shape != (n, n, n, n):
            raise ValueError(f"expected coefficient shape {(n,) * 4}, got {coeffs.shape}")
        if not np.all(np.isfinite(coeffs.view(float))):
            raise ValueError("coefficients must be finite")
        self.space = space
        self.coeffs = coeffs

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def inner(self, other: "TensorState") -> complex:
        if self.space != other.space:
            raise ValueError("states live on different spaces")
        return complex(np.vdot(self.coeffs, other.coeffs))

    def __sub__(self, other: "TensorState") -> "TensorState":
        return TensorState(self.space, self.coeffs - other.coeffs)

    def __repr__(self) -> str:
        return f"TensorState(dim={self.space.dim})"


def tensor_basis_state(space: FockSpace, n_plus: int, n_minus: int, m_plus: int = 0, m_minus: int = 0) -> TensorState:
    c = np.zeros((space.dim,) * 4, dtype=complex)
    c[n_plus, m_plus, n_minus, m_minus] = 1.0
    return TensorState(space, c)


_KET_AXIS = {"+": 0, "-": 2}


def apply_chiral_ladder(state: TensorState, sector: str, raising: bool) -> TensorState:
    """Chiral ladder on the ket index of one sector.

    A_± lowers n_± with sqrt(n); its adjoint raises with sqrt(n+1); the
    top level truncates.
    """
    axis = _KET_AXIS[sector]
    n = state.space.dim
    c = np.moveaxis(state.coeffs, axis, 0)
    out = np.zeros_like(c)
    root = np.sqrt(np.arange(1.0, n))
    if raising:
        out[1:] = root[:, None, None, None] * c[:-1]
    else:
        out[:-1] = root[:, None, None, None] * c[1:]
    return TensorState(state.space, np.moveaxis(out, 0, axis))


def hamiltonian_op(p: LandauParams, space: FockSpace) -> tuple[SuperOp, SuperOp]:
    """Number-operator realization on the two sector quantum spaces.

    Each factor is left multiplication by hbar O_± (N + 1/2); basis
    states |n±><m±| are exact eigenvectors, independent of m±.
    """
    freq = chiral_frequencies(p)
    h_plus = p.hbar * freq.Omega_plus * osc_hamiltonian(space, 1.0).mat
    h_minus = p.hbar * freq.Omega_minus * osc_hamiltonian(space, 1.0).mat
    eye = identity(space)
    return (
        vee(Operator(space, h_plus), eye),
        vee(Operator(space, h_minus), eye),
    )


def apply_hamiltonian(p: LandauParams, state: TensorState) -> TensorState:
    """(H+ (x) 1 + 1 (x) H-) applied through the sector operators."""
    h_plus, h_minus = hamiltonian_op(p, state.space)
    hp = h_plus.pairs[0][0]
    hm = h_minus.pairs[0][0]
    out = np.einsum("xn,nmab->xmab", hp, state.coeffs) + np.einsum("xa,nmab->nmxb", hm, state.coeffs)
    return TensorState(state.space, out)


def tensor_cs(space: FockSpace, z_plus: complex, z_minus: complex) -> TensorState:
    """Coherent state of the chiral pair.

    Coefficients factor into per-sector terms
    z^n conj(z)^m / sqrt(n! m!) with the double Gaussian prefactor
    e^(-(|z+|^2 + |z-|^2)); unit norm in exact arithmetic.
    """
    bound = math.sqrt(space.dim) / 4.0
    if abs(z_plus) > bound or abs(z_minus) > bound:
        raise ValueError(f"coherent labels must stay inside the safe disc |z| <= {bound:.3f}")
    n = np.arange(space.dim)
    scale = np.exp(-0.5 * gammaln(n + 1))

    def sector(z: complex) -> np.ndarray:
        u = (complex(z) ** n) * scale
        return np.outer(u, u.conj())

    g_plus = sector(z_plus)
    g_minus = sector(z_minus)
    pref = math.exp(-(abs(z_plus) ** 2 + abs(z_minus) ** 2))
    coeffs = pref * g_plus[:, :, None, None] * g_minus[None, None, :, :]
    return TensorState(space, coeffs)


# -- thermal phase-space density ------------------------------------------


def _sector_gaps(p: LandauParams, beta: float) -> tuple[float, float]:
    if not (beta > 0) or not np.isfinite(beta):
        raise ValueError("beta must be positive and finite")
    freq = chiral_frequencies(p)
    if freq.Omega_minus <= 0 or freq.Omega_plus <= 0:
        raise ValueError("both chiral frequencies must be positive (flat sector diverges)")
    return beta * p.hbar * freq.Omega_plus, beta * p.hbar * freq.Omega_minus


def husimi(p: LandauParams, beta: float, z_plus: complex, z_minus: complex) -> float:
    """Diagonal coherent-state element of the Gibbs density:

        [1 - e^(-b h O+)] e^(-(1 - e^(-b h O+)) |z+|^2) * (same with -),

    equivalently the product of two oscillator Husimi distributions with
    mean occupations n_± = 1/(e^(b h O_±) - 1)."""
    g_plus, g_minus = _sector_gaps(p, beta)
    s_plus = -math.expm1(-g_plus)
    s_minus = -math.expm1(-g_minus)
    return (
        s_plus
        * math.exp(-s_plus * abs(z_plus) ** 2)
        * s_minus
        * math.exp(-s_minus * abs(z_minus) ** 2)
    )


def partition(p: LandauParams, beta: float) -> tuple[float, float]:
    """Geometric-series partition functions of the two sectors."""
    g_plus, g_minus = _sector_gaps(p, beta)
    z_plus = math.exp(-g_plus / 2.0) / -math.expm1(-g_plus)
    z_minus = math.exp(-g_minus / 2.0) / -math.expm1(-g_minus)
    return z_plus, z_minus


def husimi_trace_residual(p: LandauParams, beta: float, scheme: QuadratureScheme) -> float:
    """|(1/pi^2) double-integral of the Husimi density - 1|.

    The radial variable of each sector is rescaled by its Gaussian width
    so the Gauss-Laguerre rule integrates the factor exactly; the two
    sector integrals multiply because the density factorizes.
    """
    g_plus, g_minus = _sector_gaps(p, beta)
    s = (-math.expm1(-g_plus), -math.expm1(-g_minus))
    t = scheme.radial_nodes
    w = scheme.radial_weights
    m = scheme.angular_count
    phases = np.exp(2j * np.pi * np.arange(m) / m)
    sector_vals = []
    for which, scale in enumerate(s):
        zs = np.sqrt(t / scale)[:, None] * phases[None, :]
        other = s[1 - which]
        vals = np.empty(zs.shape)
        for i in range(zs.shape[0]):
            for k in range(zs.shape[1]):
                pair = (zs[i, k], 0.0) if which == 0 else (0.0, zs[i, k])
                vals[i, k] = husimi(p, beta, *pair) / other
        weights = (np.exp(np.log(w) + t) / (scale * m))[:, None]
        sector_vals.append(float(np.sum(weights * vals)))
    return abs(sector_vals[0] * sector_vals[1] - 1.0)


# -- lowest level and reproducing kernel ----------------------------------


def lll_state(m: int, z_plus: complex) -> complex:
    """Lowest-level wavefunction of angular index m at the point z_plus,
    with magnetic length 1:  (2 pi m!)^(-1/2) (z/sqrt(2))^m e^(-|z|^2/4)."""
    if m < 0:
        raise ValueError("angular index must be nonnegative")
    z = complex(z_plus) / math.sqrt(2.0)
    amp = math.exp(-abs(z_plus) ** 2 / 4.0 - 0.5 * gammaln(m + 1)) / math.sqrt(2.0 * math.pi)
    return amp * z**m


def lll_overlap(m: int, z_tilde: complex) -> complex:
    """Coherent overlap form: e^(-|z|^2/2) z^m / sqrt(m!)."""
    if m < 0:
        raise ValueError("angular index must be nonnegative")
    return math.exp(-abs(z_tilde) ** 2 / 2.0 - 0.5 * gammaln(m + 1)) * complex(z_tilde) ** m


def lll_projector(space: FockSpace) -> SuperOp:
    """Orthogonal projector onto the n=0 row of the quantum space:
    X -> |0><0| X; rank N on the truncation."""
    e00 = basis_element(space, 0, 0)
    return vee(e00, identity(space))


def reproducing_kernel(space: FockSpace, z: complex, z_prime: complex) -> complex:
    """Kernel from the projector matrix elements.

    Equals the truncated exponential series sum_(m<N) (z conj(z'))^m / m!,
    the Gaussian-weight reproducing kernel e^(z conj(z')) up to the
    truncation tail.
    """
    w = complex(z) * np.conj(z_prime)
    total = 0.0 + 0.0j
    term = 1.0 + 0.0j
    for m in range(space.dim):
        total += term
        term *= w / (m + 1)
    return total


def project_hol(f, scheme: QuadratureScheme, z: complex) -> complex:
    """Holomorphic projection (1/pi) integral e^(z conj(w)) f(w) e^(-|w|^2) d^2w.

    Reproduces holomorphic polynomials of degree within the scheme's
    exactness range: project_hol(w -> w^k)(z) = z^k.
    """
    ws = scheme.z_nodes
    vals = np.asarray(f(ws), dtype=complex)
    kernel = np.exp(z * ws.conj()) * np.exp(-np.abs(ws) ** 2)
    return complex(np.sum(scheme.weights / (2.0 * math.pi) * kernel * vals))


# -- uncertainties of the right-action quadratures ------------------------


def uncertainty_report(p: LandauParams, state: Operator) -> dict:
    """Means, variances and uncertainty products of the noncommutative
    position and momentum quadratures in the given quantum state.

    Positions act by right multiplication with the ladder combination,
    momenta by the commutator (right minus left action):

        X = sqrt(theta/2) (a_R + a_R†),     P_X = -i hbar/sqrt(2 theta) [a_R - a_R†, .],
        Y = i sqrt(theta/2) (a_R† - a_R),   P_Y = -hbar/sqrt(2 theta) [a_R + a_R†, .].

    theta = 0 makes the momentum scale singular and is rejected.
    """
    if p.theta <= 0:
        raise ValueError("theta must be positive for the uncertainty table")
    psi = state.mat / np.linalg.norm(state.mat)
    a = annihilation(state.space).mat
    adag = a.conj().T
    sq = math.sqrt(p.theta / 2.0)
    sp = p.hbar / math.sqrt(2.0 * p.theta)

    def op_x(m):
        return sq * (m @ a + m @ adag)

    def op_y(m):
        return 1j * sq * (m @ adag - m @ a)

    def op_px(m):
        c = a - adag
        return -1j * sp * (m @ c - c @ m)

    def op_py(m):
        d = a + adag
        return -sp * (m @ d - d @ m)

    report: dict[str, float] = {}
    variances = {}
    for name, op in (("X", op_x), ("Y", op_y), ("PX", op_px), ("PY", op_py)):
        first = op(psi)
        mean = np.vdot(psi, first)
        second = np.vdot(psi, op(first))
        var = second.real - mean.real**2
        report[f"mean_{name}"] = float(mean.real)
        report[f"var_{name}"] = float(var)
        variances[name] = var
    for a_name, b_name in (("X", "Y"), ("X", "PX"), ("Y", "PY"), ("PX", "PY")):
        report[f"product_{a_name}_{b_name}"] = float(
            math.sqrt(max(variances[a_name], 0.0) * max(variances[b_name], 0.0))
        )
    return report


# -- coherent-state completeness on the quantum space ---------------------


def _coherent_vectors(space: FockSpace, zs: np.ndarray) -> np.ndarray:
    """Rows <n|z> = e^(-|z|^2/2) z^n / sqrt(n!); nodes are never zero."""
    n = np.arange(space.dim)
    scale = np.exp(-0.5 * gammaln(n + 1))
    return (zs[:, None] ** n[None, :]) * scale[None, :] * np.exp(-np.abs(zs) ** 2 / 2.0)[:, None]


def classical_frame(space: FockSpace, scheme: QuadratureScheme) -> np.ndarray:
    """(1/2 pi) integral |z><z| dx dy over normalized coherent vectors of
    the configuration space; the identity up to truncation tails."""
    coh = _coherent_vectors(space, scheme.z_nodes)
    w = scheme.weights / (2.0 * math.pi)
    return (coh.T * w) @ coh.conj()


def sector_resolution_operator(space: FockSpace, scheme: QuadratureScheme) -> np.ndarray:
    """Dense resolution superoperator of one quantum sector.

    The completeness of the sector coherent family holds in the
    Gaussian-smeared (off-diagonal) form: its endpoint is the sandwich
    of the classical frame operator, X -> P X P with
    P = (1/2 pi) int |z><z| dx dy; dense form kron(P, conj(P))."""
    p = classical_frame(space, scheme)
    return np.kron(p, p.conj())


def tensor_resolution_residual(space: FockSpace, scheme: QuadratureScheme, max_level: int | None = None) -> float:
    """Deviation of the two-sector resolution from the identity on the
    block of states with all four indices <= max_level (default N/4).

    For small spaces the full tensor operator is formed; otherwise the
    sector deviations are combined into the exact triangle bound
    r+ (1 + r-) + r-."""
    if max_level is None:
        max_level = space.dim // 4
    n = space.dim
    keep = np.arange(max_level + 1)
    sector = sector_resolution_operator(space, scheme)
    eye = np.eye(n * n)
    cols = (keep[:, None] * n + keep[None, :]).ravel()
    diff = (sector - eye)[:, cols]
    r = float(np.linalg.norm(diff, 2))
    if n**4 <= 4096:
        total = np.kron(sector, sector)
        eye4 = np.eye(n**4)
        cols4 = (cols[:, None] * (n * n) + cols[None, :]).ravel()
        return float(np.linalg.norm((total - eye4)[:, cols4], 2))
    return r * (1.0 + r) + r


def diagonal_cs_channel(space: FockSpace, scheme: QuadratureScheme) -> np.ndarray:
    """Frame operator of the diagonal coherent family |z><z| viewed as
    vectors of the quantum space: a Husimi-smoothing channel, not the
    identity (its |0><0| diagonal element is 1/2)."""
    coh = _coherent_vectors(space, scheme.z_nodes)
    vecs = np.einsum("kn,km->knm", coh, coh.conj()).reshape(len(scheme.z_nodes), -1)
    w = scheme.weights / (2.0 * math.pi)
    return (vecs.T * w) @ vecs.conj()
