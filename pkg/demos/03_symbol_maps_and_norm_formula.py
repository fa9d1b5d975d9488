"""
Disk self-maps and the closed-form operator norm
================================================

Symbols are certified before any operator is built: a Moebius map gets
an exact sup-norm from disk geometry, a monomial a z^M carries the
closed-form operator norm max(1, M (nu-1) |a|^(nu-1)).
"""

import numpy as np

from holospace import (
    CertificationError,
    MoebiusMap,
    MonomialMap,
    SpaceSpec,
    build_D_phi,
    operator_norm,
)

# (2z+1)/(z+4) maps the disk onto a disk; center/radius give the sup
m = MoebiusMap(2, 1, 1, 4)
print("phi = (2z+1)/(z+4)   sup|phi| =", m.sup_norm())
m.certify_strict()
print("strict self-map: certified")

# the certificate is exact, so a boundary case is caught immediately
try:
    MoebiusMap(1, 0.5, 0, 1).certify_self_map()   # z + 0.5 leaves the disk
except CertificationError as e:
    print("rejected:", e)

# monomial symbols a z^M: nu picks the basis direction where the
# operator norm of f -> f'(a z^M) is attained
s2 = SpaceSpec.s2()
for a in (0.3, 0.5, 0.8, 0.9):
    mm = MonomialMap(a, 2)
    n = mm.required_trunc_degree()
    svd = operator_norm(build_D_phi(mm, n, domain=s2))
    print(f"|a| = {a}: nu = {mm.nu}, formula = {mm.norm_formula():.12g}, "
          f"svd = {svd:.12g}")

# below |a| = 1/M the norm sits exactly at 1, then leaves the plateau;
# the same sweep drives the `holospace figure` CSV
print("\nsweep around the M = 2 threshold 1/2:")
for a in np.arange(0.46, 0.56, 0.02):
    mm = MonomialMap(round(float(a), 2), 2)
    print(f"  |a| = {a:.2f}  norm = {mm.norm_formula():.6f}")
