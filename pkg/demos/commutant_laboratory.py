#
# Finite-dimensional von Neumann algebra checks: the left and right
# multiplication algebras on B2(H) are each other's commutants, form
# factors, and share the Gibbs purification as a cyclic and separating
# vector.
#
import numpy as np

from hsqm import FockSpace, annihilation, creation, identity, vee
from hsqm.commutant import (
    AlgebraGens,
    algebra_span,
    check_cyclic,
    check_separating,
    commutant_basis,
    intersection_dimension,
    is_factor,
    span_contains,
)

N = 3
space = FockSpace(N)
eye = identity(space)
print(f"Operator space: B2(H_{N}) = C^{N * N}; ambient algebra M_{N * N}")
print("=" * 60)

left = algebra_span(
    AlgebraGens(N * N, [vee(annihilation(space), eye).to_dense(), vee(creation(space), eye).to_dense()])
)
right = algebra_span(
    AlgebraGens(N * N, [vee(eye, annihilation(space)).to_dense(), vee(eye, creation(space)).to_dense()])
)
print(f"\nLeft algebra span dim:  {left.size}   (expected {N * N})")
print(f"Right algebra span dim: {right.size}   (expected {N * N})")

comm = commutant_basis(left)
inside = all(span_contains(right, m) for m in comm.basis)
print(f"\nCommutant of the left algebra: dim {comm.size}; contained in the right algebra: {inside}")
print(f"Center dimension: {intersection_dimension(left, comm)}  -> factor: {is_factor(left)}")

double = commutant_basis(comm)
print(f"Double commutant dim: {double.size}  (bicommutant fixed point)")

weights = np.exp(-0.8 * np.arange(N))
weights /= weights.sum()
phi = np.diag(np.sqrt(weights)).ravel()
print("\nGibbs purification as a vector of C^9:")
print(f"  cyclic for the left algebra:     {check_cyclic(left, phi)}")
print(f"  separating for the left algebra: {check_separating(left, phi)}")

deficient = np.diag(np.sqrt([0.7, 0.3, 0.0])).ravel()
print("  a weight set to zero breaks both:",
      check_cyclic(left, deficient), "/", check_separating(left, deficient))

print("\nContrast: the diagonal algebra is its own commutant (not a factor)")
diag = algebra_span(AlgebraGens(3, [np.diag([1.0, 2.0, 3.0])]))
print(f"  span dim {diag.size}, commutant dim {commutant_basis(diag).size}, factor: {is_factor(diag)}")
