"""
Truncated power series arithmetic
=================================

Every analytic computation in the library runs on plain coefficient
vectors: a TruncatedSeries holds f_0 ... f_N and all operations stay
exact through degree N.
"""

import numpy as np

from holospace import TruncatedSeries, exp_series, log_series

N = 12

# build f(z) = 1/(2 - z) from its geometric coefficients 2^(-k-1)
f = TruncatedSeries([0.5 ** (k + 1) for k in range(N + 1)])
print("f      :", np.round(f.coeffs[:5], 6))

# multiplication is the Cauchy product; (2 - z) * f must give 1
two_minus_z = 2 - TruncatedSeries.z(N)
print("(2-z)*f:", np.round((two_minus_z * f).coeffs[:5], 6))

# division inverts that product exactly
print("1/(2-z):", np.round((1 / two_minus_z).coeffs[:5], 6))

# composition g(f(z)) needs f(0) = 0 for the Horner sweep to stay
# inside the truncation, so compose with z/(2 - z) instead
g = TruncatedSeries.monomial(3, N)        # g(z) = z^3
h = TruncatedSeries.z(N) / two_minus_z    # h(z) = z/(2 - z), h(0) = 0
print("g(h)   :", np.round(g.compose(h).coeffs[:8], 6))

# log and exp are inverse up to machine rounding; the branch constant
# pins log at the constant term
lg = log_series(two_minus_z, np.log(2))
back = exp_series(lg)
print("exp(log(2-z)) drift:", float(np.max(np.abs(back.coeffs - two_minus_z.coeffs))))

# the calculus pair: derivative drops one degree of information and the
# series remembers that through top_dropped
d = f.derivative()
print("f' top_dropped:", d.top_dropped)
print("f'(0.3) =", d(0.3), "  (exact 1/(2-0.3)^2 =", 1 / (2 - 0.3) ** 2, ")")
