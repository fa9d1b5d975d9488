"""
Adjoint identities across the space family
==========================================

The weighted adjoint of D_phi intertwines with the operator of the
Krein symbol sigma through explicit multipliers.  On the kernel-form
spaces the identity is exact; on the derivative Hardy space only a
compact residual survives, and the renormed space pins that residual
down to rank two with a closed-form kernel action.
"""

import numpy as np

from holospace import MoebiusMap, SpaceSpec
from holospace.verify import (
    check_adjoint_intertwine,
    check_adjoint_s2_compact,
    check_adjoint_s2tilde,
    check_factorization,
)

m = MoebiusMap(2, 1, 1, 4)          # (2z+1)/(z+4)
print("phi  :", m.spelling())
print("sigma:", m.krein_adjoint().spelling())

# exact regime: weighted Bergman for alpha > -1, and the
# norm-equivalent weight family down to alpha = -2 (alpha = -1 is the
# Hardy space, alpha = -2 the Dirichlet space)
print("\nexact intertwining, relative block Frobenius:")
for alpha in (1.0, 0.0, -1.0, -2.0):
    r = check_adjoint_intertwine(m, alpha, trunc=96)
    print(f"  alpha = {alpha:4.1f}: {r.discrepancy:.2e}  "
          f"({'pass' if r.passed else 'FAIL'})")

# between the integer points the equivalent weight is only equivalent:
# the identity is genuinely false there and the check says so
r = check_adjoint_intertwine(m, -1.5, trunc=96)
print(f"  alpha = -1.5: {r.discrepancy:.2e}  "
      f"({'pass' if r.passed else 'FAIL, honest'})")

# the renormed derivative space: residual of rank exactly two whose
# action on point kernels is -conj(w) z (log mu(z) + log conj(eta(w)))
r = check_adjoint_s2tilde(m, trunc=96)
print("\nrenormed residual rank:", r.computed["numerical_rank"])
print("kernel action vs closed form:", f"{r.computed['kernel_action_worst']:.2e}")

# true S2 weights: the residual is merely compact; the truncations can
# only certify a decay signature, and the report says exactly that
r = check_adjoint_s2_compact(m, truncs=(64, 128))
print("\ncompact signature sigma20/sigma1:",
      f"{r.computed['sigma20_over_sigma1']:.2e}")
print("note:", r.note)

# behind all of it sits one series identity with matched log branches
r = check_factorization(m)
print("\nfactorization worst coefficient error:", f"{r.discrepancy:.2e}")
