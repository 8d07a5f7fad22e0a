#
# The noncommutative Landau problem with a harmonic trap: dressed
# frequencies, spectrum, thermal Husimi density, lowest-level kernel,
# and the position/momentum uncertainty table.
#
import math

import numpy as np

from hsqm import FockSpace, LandauParams, QuadratureScheme, basis_element
from hsqm.landau import (
    chiral_frequencies,
    husimi,
    husimi_trace_residual,
    lll_state,
    partition,
    project_hol,
    reproducing_kernel,
    spectrum,
    uncertainty_report,
)

params = LandauParams(mass=1.0, omega0=1.0, omega_c=2.0, theta=0.1)
freq = chiral_frequencies(params)

print("Noncommutative Landau model, theta = 0.1")
print("=" * 60)
print(f"  Omega        = {freq.Omega:.6f}")
print(f"  Omega~       = {freq.Omega_tilde:.6f}")
print(f"  omega_c~     = {freq.omega_c_tilde:.6f}")
print(f"  Omega~_+/-   = {freq.Omega_plus:.6f} / {freq.Omega_minus:.6f}")
print(f"  ladder scale = {freq.zeta:.6f}")

print("\nSpectrum E[n+, n-] (first 4x4):")
table = spectrum(params, 4)
for row in table:
    print("  " + "  ".join(f"{e:7.4f}" for e in row))

flat = LandauParams(mass=1.0, omega0=0.0, omega_c=2.0, theta=0.0)
print("\nWithout the trap (theta = 0): flat degenerate levels")
for row in spectrum(flat, 3):
    print("  " + "  ".join(f"{e:7.4f}" for e in row))

beta = 1.0
print(f"\nThermal Husimi density at beta = {beta}:")
print("  value at the origin:", f"{husimi(params, beta, 0, 0):.6f}")
zp, zm = partition(params, beta)
print(f"  partition functions Z+ = {zp:.4f}, Z- = {zm:.4f}")
res = husimi_trace_residual(params, beta, QuadratureScheme.default(12))
print(f"  normalization residual: {res:.2e}")

print("\nHusimi profile along the + sector (|z-| = 0):")
for r in (0.0, 0.5, 1.0, 1.5, 2.0):
    v = husimi(params, beta, r, 0)
    print(f"  |z+|={r:.1f}: {v:.4f} " + "#" * int(100 * v))

print("\nLowest level: holomorphic structure")
print("  wavefunction at the origin:", f"{abs(lll_state(0, 0)):.6f}",
      f"[(2 pi)^-1/2 = {1 / math.sqrt(2 * math.pi):.6f}]")
space = FockSpace(32)
z, w = 0.8 - 0.2j, 0.5 + 0.4j
print("  kernel from projector elements:", f"{reproducing_kernel(space, z, w):.6f}")
print("  exp(z conj(w))               :", f"{np.exp(z * np.conj(w)):.6f}")
scheme = QuadratureScheme.default(16)
print("  holomorphic projection fixes w^4:",
      f"{project_hol(lambda u: u**4, scheme, z):.6f} vs {z**4:.6f}")

print("\nUncertainties in the vacuum-sector state:")
rep = uncertainty_report(params, basis_element(FockSpace(12), 0, 0))
print(f"  (dX)^2  = {rep['var_X']:.4f}   [theta/2     = {params.theta / 2:.4f}]")
print(f"  (dPX)^2 = {rep['var_PX']:.4f}  [hbar^2/theta = {1 / params.theta:.4f}]")
print(f"  dX dY   = {rep['product_X_Y']:.4f}   [theta/2     = {params.theta / 2:.4f}]")
print(f"  dX dPX  = {rep['product_X_PX']:.4f}  [hbar/sqrt2  = {1 / math.sqrt(2):.4f}]")
