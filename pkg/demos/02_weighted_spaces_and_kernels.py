"""
Weighted Hardy spaces and their kernels
=======================================

A space is just a weight sequence beta(n); the monomials are orthogonal
with norm beta(n).  Kernels come from the one generic formula
K_w = sum conj(w)^n z^n / beta(n)^2, so every space gets reproducing
and derivative-evaluation kernels for free.
"""

import numpy as np

from holospace import (
    KernelKind,
    SpaceSpec,
    TruncatedSeries,
    inner_product,
    kernel,
    norm,
)

N = 32

# the catalog: plain Hardy, the derivative Hardy space S2, its
# renorming with closed-form kernels, Dirichlet, and weighted Bergman
for sp in (SpaceSpec.hardy(), SpaceSpec.s2(), SpaceSpec.s2tilde(),
           SpaceSpec.dirichlet(), SpaceSpec.bergman(0.0)):
    print(f"{sp.spelling():12s} beta(0..4) =", np.round(sp.weights(4), 4))

# the reproducing property: pairing f against K_w evaluates f at w
sp = SpaceSpec.s2()
rng = np.random.default_rng(7)
f = TruncatedSeries(rng.standard_normal(N + 1) * 0.5 ** np.arange(N + 1))
w = 0.4 + 0.3j

k_point = kernel(sp, KernelKind.POINT_EVAL, w, N)
k_deriv = kernel(sp, KernelKind.DERIV_EVAL, w, N)
print("\n<f, K_w>  =", inner_product(f, k_point, sp))
print("f(w)      =", f(w))
print("<f, K'_w> =", inner_product(f, k_deriv, sp))
print("f'(w)     =", f.derivative()(w))

# in S2 the derivative kernel has the Szego-type norm identity
got = inner_product(k_deriv, k_deriv, sp).real
print("\n||K'_w||^2     =", got)
print("1/(1 - |w|^2)  =", 1 / (1 - abs(w) ** 2), " (difference is the geometric tail)")

# norms are plain weighted l2 norms of the coefficients
print("\n||f||_S2 =", norm(f, sp))
