"""
Operator matrices in the monomial basis
=======================================

Operators are dense (N+1) x (N+1) matrices acting on coefficient
vectors.  Weights enter only through norms, adjoints, and singular
values, so one matrix serves every space.
"""

import numpy as np

from holospace import (
    MoebiusMap,
    PolynomialMap,
    SpaceSpec,
    TruncatedSeries,
    build_D_phi,
    build_DC_phi,
    build_composition,
    build_multiplication,
    operator_norm,
    singular_values,
    spectrum,
)

N = 64
s2 = SpaceSpec.s2()
m = MoebiusMap(2, 1, 0, 4)           # phi(z) = (2z+1)/4

# D_phi f = f'(phi): differentiate, then substitute
D = build_D_phi(m, N, domain=s2)
f = TruncatedSeries.monomial(3, N)   # f = z^3
print("D_phi z^3 =", np.round(D.apply(f).coeffs[:4], 6), "... = 3 phi^2")

# the product rule connects the two operator orders:
# (f o phi)' = phi' * f'(phi)
DC = build_DC_phi(m, N, domain=s2)
phi_prime = m.series(N + 1).derivative().truncate(N)
T = build_multiplication(phi_prime, N, domain=s2)
lhs = DC.entries
rhs = (T @ D).entries
print("Leibniz identity drift:", float(np.max(np.abs(lhs - rhs))))

# norms depend on the space through the weights
print("\n||D_phi|| on S2   =", operator_norm(D))
print("||C_phi|| H2->S2  =", operator_norm(
    build_composition(m, N, domain=SpaceSpec.hardy(), codomain=s2)))

# a strictly upper triangular matrix: affine symbols have spectrum {0}
affine = MoebiusMap(0.4, 0.2, 0, 1)
eig = spectrum(build_D_phi(affine, N, domain=s2))
print("\naffine symbol spectrum radius:", float(np.max(np.abs(eig))))

# at the boundary the operator stops being bounded: for phi = z the
# truncated norm is exactly N - 1 and grows without limit
identity = PolynomialMap([0, 1])
for n in (32, 64, 128):
    val = operator_norm(build_D_phi(identity, n, domain=s2))
    print(f"phi = z, N = {n:3d}: ||D_phi|| = {val:.1f}")

# compact operators show the opposite signature: fast singular decay
s = singular_values(build_D_phi(m, 128, domain=s2))
print("\nsigma_1, sigma_10, sigma_30 for phi = (2z+1)/4:",
      [float(f"{v:.3e}") for v in (s[0], s[9], s[29])])
