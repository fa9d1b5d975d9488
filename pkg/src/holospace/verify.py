"""Theorem-level verification harness.

Each check binds one mathematical claim to a computation, an oracle, a
tolerance, and a structured CheckReport.  Multi-part checks normalize
each part by its own tolerance and report the worst part against a
tolerance of 1.0, so passed is always discrepancy <= tolerance.

Block discipline: products of truncated operator matrices are compared
on the top-left (N/2+1) square block.  Every multiplier matrix involved
is triangular, which confines truncation contamination to the excluded
band; inside the block the products agree with the infinite matrices
entrywise.

Compactness has no finite-truncation certificate.  The residual checks
that stand in for it are decay signatures (geometric singular-value
decay, stable across truncation sizes), and their reports say so.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import PreconditionError, UnsupportedOperationError
from .maps import MoebiusMap, MonomialMap, random_strict_moebius
from .operators import (
    build_composition,
    build_D_phi,
    build_DC_phi,
    build_multiplication,
    cross_norm,
    operator_norm,
    singular_values,
    spectrum,
    weighted_adjoint,
)
from .series import TruncatedSeries, exp_series, log_series
from .spaces import (
    KernelKind,
    SpaceSpec,
    inner_product,
    kernel,
    multiplier_g_alpha,
    multiplier_h_alpha,
)

DEFAULT_SEED = 0x5EED

_S2 = SpaceSpec.s2()
_HARDY = SpaceSpec.hardy()


@dataclass(frozen=True)
class CheckReport:
    """Structured outcome of one verification."""

    check_id: str
    claim: str
    computed: dict
    reference: dict
    discrepancy: float
    tolerance: float
    passed: bool
    trunc_degree: int
    runtime_ms: float
    seed: int | None = None
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "claim": self.claim,
            "computed": self.computed,
            "reference": self.reference,
            "discrepancy": self.discrepancy,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "trunc_degree": self.trunc_degree,
            "runtime_ms": self.runtime_ms,
            "seed": self.seed,
            "note": self.note,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_dict())


def _finish(check_id, claim, computed, reference, discrepancy, tolerance,
            trunc, started, seed=None, note="") -> CheckReport:
    disc = float(discrepancy)
    return CheckReport(
        check_id=check_id,
        claim=claim,
        computed=computed,
        reference=reference,
        discrepancy=disc,
        tolerance=float(tolerance),
        passed=bool(disc <= tolerance),
        trunc_degree=int(trunc),
        runtime_ms=(time.perf_counter() - started) * 1000.0,
        seed=seed,
        note=note,
    )


def _pair(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def _hausdorff(pts_a, pts_b) -> float:
    a = np.asarray(list(pts_a), dtype=complex).ravel()
    b = np.asarray(list(pts_b), dtype=complex).ravel()
    d = np.abs(a[:, None] - b[None, :])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


def _collapse(values, tol=1e-9) -> list:
    """Distinct complex values up to tol, sorted by modulus then angle."""
    out: list[complex] = []
    for v in sorted(values, key=lambda z: (abs(z), np.angle(z))):
        if not out or abs(v - out[-1]) > tol:
            out.append(complex(v))
    return out


def _random_point(rng, radius: float) -> complex:
    return radius * rng.uniform() * np.exp(2j * np.pi * rng.uniform())


# ---------------------------------------------------------------------
# Norm and spectrum
# ---------------------------------------------------------------------


def check_norm_formula(a: complex, power: int, trunc: int | None = None) -> CheckReport:
    """Operator norm of f -> f'(a z^M) on the derivative Hardy space
    against the closed form max(1, M (nu-1) |a|^(nu-1)).

    The supremum over basis directions is attained at index nu, so once
    the truncation contains the image of z^nu the truncated norm is the
    exact operator norm; that needs trunc >= M(nu-1) + 2.
    """
    started = time.perf_counter()
    m = MonomialMap(a, power)
    need = m.required_trunc_degree()
    if trunc is None:
        trunc = need
    if trunc < need:
        raise PreconditionError(
            f"norm check for a={a}, M={power} needs trunc >= {need}, got {trunc}")
    computed = operator_norm(build_D_phi(m, trunc, domain=_S2))
    ref = m.norm_formula()
    return _finish(
        check_id=f"norm-formula[a={a:g},M={power}]",
        claim="the operator norm of f -> f'(a z^M) on the derivative Hardy "
              "space equals max(1, M(nu-1)|a|^(nu-1)) with "
              "nu = floor((2-|a|)/(1-|a|))",
        computed={"svd_norm": computed, "nu": m.nu},
        reference={"formula_norm": ref},
        discrepancy=abs(computed - ref),
        tolerance=1e-10,
        trunc=trunc,
        started=started,
    )


def check_spectrum(symbol, trunc: int = 32) -> CheckReport:
    """Eigenvalues of the truncated operator against the exact spectrum.

    Exact only for the two symbol classes whose truncations provably
    carry the infinite spectrum: monomials a z^M (single nonzero per
    column) and strict affine maps (strictly upper triangular).
    """
    started = time.perf_counter()
    if trunc < 8:
        raise PreconditionError(f"spectrum check needs trunc >= 8, got {trunc}")
    if isinstance(symbol, MonomialMap):
        ref = symbol.exact_spectrum()
        label = symbol.spelling()
    elif isinstance(symbol, MoebiusMap):
        if symbol.c != 0:
            raise UnsupportedOperationError(
                "exact spectrum is only known for monomial and affine "
                "symbols; use spectral diagnostics for general maps")
        symbol.certify_strict()
        ref = {0.0}
        label = symbol.spelling()
    else:
        raise UnsupportedOperationError(
            "exact spectrum requires a monomial or affine symbol")
    eig = spectrum(build_D_phi(symbol, trunc, domain=_S2))
    disc = _hausdorff(eig, ref)
    return _finish(
        check_id=f"spectrum[{label}]",
        claim="the spectrum of f -> f'(phi) is {0, 2a} for phi = a z^2 and "
              "{0} for other monomial and affine strict symbols",
        computed={"distinct_eigenvalues": [_pair(v) for v in _collapse(eig)],
                  "count": len(eig)},
        reference={"spectrum": [_pair(v) for v in sorted(ref, key=abs)]},
        discrepancy=disc,
        tolerance=1e-9,
        trunc=trunc,
        started=started,
        note="multiplicity of 0 grows with truncation by design; sets are "
             "compared, not multisets",
    )


# ---------------------------------------------------------------------
# Adjoint identities
# ---------------------------------------------------------------------


def _adjoint_sides(m: MoebiusMap, sp: SpaceSpec, g, h, trunc: int):
    sig = m.krein_adjoint()
    lhs = (weighted_adjoint(build_D_phi(m, trunc, domain=sp))
           @ weighted_adjoint(build_multiplication(h, trunc, domain=sp)))
    rhs = (build_multiplication(g, trunc, domain=sp)
           @ build_D_phi(sig, trunc, domain=sp))
    return lhs, rhs


def check_adjoint_intertwine(m: MoebiusMap, alpha: float,
                             trunc: int = 128) -> CheckReport:
    """adj(D_phi) adj(T_h) = T_g D_sigma with the derivative-kernel
    multipliers g, h anchored at phi(0) and sigma(0).

    Exact identity regime: alpha > -1 on the weighted Bergman scale, and
    alpha in [-2, -1] through the norm-equivalent weight family, which
    matches a genuine kernel structure at the integer points alpha = -1
    and alpha = -2.  At alpha = -3 both multipliers collapse to z and
    the identity holds only modulo a compact residual, so that case is
    reported as a decay signature instead of an equality.
    """
    started = time.perf_counter()
    alpha = float(alpha)
    if alpha < -2 and alpha != -3:
        raise UnsupportedOperationError(
            f"alpha = {alpha} is outside the identity regime "
            "(alpha >= -2 or alpha = -3)")
    if alpha == -3 and trunc < 40:
        raise PreconditionError(
            f"the alpha = -3 decay signature needs trunc >= 40, got {trunc}")
    m.certify_strict()
    sp = SpaceSpec.bergman(alpha) if alpha > -1 else SpaceSpec.equivalent_weight(alpha)
    sig = m.krein_adjoint()
    g = multiplier_g_alpha(m(0), alpha, trunc)
    h = multiplier_h_alpha(sig(0), alpha, trunc)
    lhs, rhs = _adjoint_sides(m, sp, g, h, trunc)
    k = trunc // 2 + 1
    lb = lhs.top_left(k)
    rb = rhs.top_left(k)

    if alpha == -3:
        s = np.linalg.svd(lb - rb, compute_uv=False)
        ratio = float(s[19] / s[0]) if s[0] > 1e-13 else 0.0
        return _finish(
            check_id=f"adjoint-intertwine[alpha={alpha:g},{m.spelling()}]",
            claim="at alpha = -3 the multipliers reduce to z and the "
                  "intertwining holds modulo a compact residual",
            computed={"sigma20_over_sigma1": ratio,
                      "leading_singular_values": [float(v) for v in s[:8]]},
            reference={"decay_bound": 1e-3},
            discrepancy=ratio / 1e-3,
            tolerance=1.0,
            trunc=trunc,
            started=started,
            note="decay signature, not an equality: compactness is not "
                 "decidable at fixed truncation",
        )

    denom = np.linalg.norm(rb)
    disc = float(np.linalg.norm(lb - rb) / denom)
    return _finish(
        check_id=f"adjoint-intertwine[alpha={alpha:g},{m.spelling()}]",
        claim="adj(D_phi) adj(T_h) = T_g D_sigma for the Krein symbol "
              "sigma and multipliers g, h built from the derivative kernels "
              "at phi(0), sigma(0)",
        computed={"relative_block_frobenius": disc, "block_size": k},
        reference={"identity": 0.0},
        discrepancy=disc,
        tolerance=1e-9,
        trunc=trunc,
        started=started,
    )


def check_adjoint_s2tilde(m: MoebiusMap, trunc: int = 128, trials: int = 10,
                          seed: int = DEFAULT_SEED) -> CheckReport:
    """Finite-rank residual on the renormed derivative space.

    R = adj(D_phi) adj(T_z) - T_z D_sigma has rank at most 2; exactly 1
    when exactly one of b, c vanishes; identically 0 when b = c = 0.
    On point kernels, R K_w = -conj(w) z (log mu(z) + log conj(eta(w))).
    """
    started = time.perf_counter()
    m.certify_strict()
    sp = SpaceSpec.s2tilde()
    sig = m.krein_adjoint()
    z1 = TruncatedSeries.z(trunc)
    tz = build_multiplication(z1, trunc, domain=sp)
    lhs = weighted_adjoint(build_D_phi(m, trunc, domain=sp)) @ weighted_adjoint(tz)
    rhs = tz @ build_D_phi(sig, trunc, domain=sp)
    resid = lhs - rhs
    # rank is read off the weighted top-left block, per the block
    # comparison discipline
    k = trunc // 2 + 1
    wts = sp.weights(trunc)[:k]
    block = resid.top_left(k) * wts[:, None] / wts[None, :]
    s = np.linalg.svd(block, compute_uv=False)

    b_zero, c_zero = m.b == 0, m.c == 0
    if b_zero and c_zero:
        expected_rank = 0
    elif b_zero or c_zero:
        expected_rank = 1
    else:
        expected_rank = 2

    parts = {}
    if expected_rank == 0:
        parts["residual_norm"] = float(s[0]) / 1e-12
        rank = 0 if s[0] <= 1e-12 else int(np.count_nonzero(s > 1e-10 * s[0]))
        note = "degenerate symbol (b = c = 0): mu and eta are constant and " \
               "their branch constants cancel, so the residual vanishes"
    else:
        rank = int(np.count_nonzero(s > 1e-10 * s[0]))
        parts["sigma3_over_sigma1"] = float(s[2] / s[0]) / 1e-10
        parts["rank_matches"] = 0.0 if rank == expected_rank else 2.0
        note = ""

    # kernel action against the closed form
    rng = np.random.default_rng([seed, 0x5711])
    log_mu = m.log_mu(trunc)
    z_log_mu = z1 * log_mu
    worst = 0.0
    for _ in range(trials):
        w = _random_point(rng, 0.8)
        got = resid.apply(kernel(sp, KernelKind.POINT_EVAL, w, trunc))
        want = -np.conj(w) * (z_log_mu + m.log_eta_conj_at(w) * z1)
        worst = max(worst, float(np.max(np.abs(got.coeffs - want.coeffs))))
    parts["kernel_action"] = worst / 1e-10

    return _finish(
        check_id=f"adjoint-residual-renormed[{m.spelling()}]",
        claim="adj(D_phi) adj(T_z) - T_z D_sigma has rank at most 2 and "
              "acts on point kernels by -conj(w) z (log mu(z) + "
              "log conj(eta(w)))",
        computed={"numerical_rank": rank,
                  "leading_singular_values": [float(v) for v in s[:5]],
                  "kernel_action_worst": worst,
                  "block_size": k,
                  "parts": {key: float(v) for key, v in parts.items()}},
        reference={"expected_rank": expected_rank},
        discrepancy=max(parts.values()),
        tolerance=1.0,
        trunc=trunc,
        started=started,
        seed=seed,
        note=note,
    )


def check_adjoint_s2_compact(m: MoebiusMap,
                             truncs=(64, 128, 256)) -> CheckReport:
    """Compact-residual signature on the true derivative Hardy weights.

    The same residual as the renormed check, but with weights beta(n) = n
    it is only compact, not finite rank.  Compactness is not decidable at
    fixed truncation; this check records the substitute signature: the
    singular values of the residual decay (sigma_20/sigma_1 below 1e-3 at
    the largest truncation) and the leading profile is stable in N
    (sigma_5 drifts under 5 percent between the two largest truncations).
    """
    started = time.perf_counter()
    m.certify_strict()
    truncs = sorted(truncs)
    if len(truncs) < 2:
        raise PreconditionError("need at least two truncation sizes")
    if truncs[-1] < 20:
        raise PreconditionError(
            f"the decay signature reads sigma_20, so the largest "
            f"truncation must be >= 20, got {truncs[-1]}")
    sig = m.krein_adjoint()
    profiles = {}
    for n in truncs:
        z1 = TruncatedSeries.z(n)
        tz = build_multiplication(z1, n, domain=_S2)
        lhs = weighted_adjoint(build_D_phi(m, n, domain=_S2)) @ weighted_adjoint(tz)
        rhs = tz @ build_D_phi(sig, n, domain=_S2)
        profiles[n] = singular_values(lhs - rhs)
    n_hi, n_lo = truncs[-1], truncs[-2]
    s_hi, s_lo = profiles[n_hi], profiles[n_lo]

    if s_hi[0] < 1e-13:
        return _finish(
            check_id=f"adjoint-residual-compact[{m.spelling()}]",
            claim="adj(D_phi) adj(T_z) - T_z D_sigma is compact on the "
                  "derivative Hardy space",
            computed={"residual_norm": float(s_hi[0])},
            reference={"decay_bound": 1e-3, "drift_bound": 0.05},
            discrepancy=0.0,
            tolerance=1.0,
            trunc=n_hi,
            started=started,
            note="residual vanishes identically (b = c = 0); decay "
                 "signature trivially satisfied",
        )

    ratio = float(s_hi[19] / s_hi[0])
    drift = float(abs(s_hi[4] - s_lo[4]) / s_lo[4])
    nonincreasing = bool(np.all(np.diff(s_hi) <= 1e-12 * s_hi[0]))
    parts = {"sigma20_over_sigma1": ratio / 1e-3,
             "sigma5_drift": drift / 0.05,
             "nonincreasing": 0.0 if nonincreasing else 2.0}
    return _finish(
        check_id=f"adjoint-residual-compact[{m.spelling()}]",
        claim="adj(D_phi) adj(T_z) - T_z D_sigma is compact on the "
              "derivative Hardy space",
        computed={"sigma20_over_sigma1": ratio,
                  "sigma5_drift": drift,
                  "nonincreasing": nonincreasing,
                  "profiles": {str(n): [float(v) for v in profiles[n]]
                               for n in truncs},
                  "parts": parts},
        reference={"decay_bound": 1e-3, "drift_bound": 0.05},
        discrepancy=max(parts.values()),
        tolerance=1.0,
        trunc=n_hi,
        started=started,
        note="singular-value decay signature at fixed truncation; "
             "consistent with compactness but not a proof of it",
    )


# ---------------------------------------------------------------------
# Boundedness and kernels
# ---------------------------------------------------------------------


def check_bounded_trio(symbol, truncs=(64, 128, 256)) -> CheckReport:
    """Joint boundedness signature for the three companion operators.

    Computes f -> f'(phi) on the derivative space, f -> f(phi) from the
    plain Hardy space into the derivative space, and f -> (f(phi))' on
    the plain Hardy space, at each truncation.  For a strict symbol all
    three stabilize; for sup-norm 1 symbols they grow jointly without
    bound, and this check fails by construction.
    """
    started = time.perf_counter()
    truncs = sorted(truncs)
    if len(truncs) < 2:
        raise PreconditionError("need at least two truncation sizes")
    table = {}
    for n in truncs:
        table[str(n)] = {
            "diff_compose": operator_norm(build_D_phi(symbol, n, domain=_S2)),
            "compose_cross": cross_norm(build_composition(
                symbol, n, domain=_HARDY, codomain=_S2)),
            "compose_then_diff": operator_norm(build_DC_phi(
                symbol, n, domain=_HARDY)),
        }
    hi, lo = table[str(truncs[-1])], table[str(truncs[-2])]
    # a constant symbol makes DC_phi the zero operator; zero norms at
    # every truncation count as perfectly stable, not as 0/0
    drifts = {k: abs(hi[k] - lo[k]) / max(lo[k], 1e-300) for k in hi}
    worst = max(drifts.values())
    try:
        label = symbol.spelling()
    except AttributeError:
        label = "series"
    return _finish(
        check_id=f"bounded-trio[{label}]",
        claim="the three companion operators are bounded together: each "
              "truncated norm stabilizes as the truncation grows",
        computed={"norms": table, "drifts": drifts},
        reference={"drift_bound": 0.01},
        discrepancy=worst / 0.01,
        tolerance=1.0,
        trunc=truncs[-1],
        started=started,
        note="norm equivalence is qualitative: joint finiteness, not "
             "equality of the three norms",
    )


def check_kernels(sp: SpaceSpec, trials: int = 10, trunc: int = 64,
                  seed: int = DEFAULT_SEED) -> CheckReport:
    """Reproducing identities of the point and derivative kernels, plus
    the closed forms the particular space admits."""
    started = time.perf_counter()
    if trials < 10:
        raise PreconditionError(f"kernel check needs trials >= 10, got {trials}")
    rng = np.random.default_rng([seed, 0x4EF])
    parts = {}

    worst_point = worst_deriv = 0.0
    for _ in range(trials):
        c = np.zeros(trunc + 1, dtype=complex)
        c[: trunc // 2 + 1] = (rng.standard_normal(trunc // 2 + 1)
                               + 1j * rng.standard_normal(trunc // 2 + 1))
        f = TruncatedSeries(c)
        w = _random_point(rng, 0.8)
        kp = kernel(sp, KernelKind.POINT_EVAL, w, trunc)
        kd = kernel(sp, KernelKind.DERIV_EVAL, w, trunc)
        worst_point = max(worst_point, abs(inner_product(f, kp, sp) - f(w)))
        worst_deriv = max(worst_deriv,
                          abs(inner_product(f, kd, sp) - f.derivative()(w)))
    parts["point_eval"] = worst_point / 1e-12
    parts["deriv_eval"] = worst_deriv / 1e-12

    if sp.kind == "s2":
        # The squared norm of the derivative kernel is 1/(1-|w|^2) up to
        # the explicit geometric tail of the truncation.  The truncated
        # sum telescopes to exactly (closed form - tail), so the honest
        # bound is the tail itself; the 1 percent headroom absorbs
        # rounding in the dot product.
        worst = 0.0
        for _ in range(trials):
            w = _random_point(rng, 0.9)
            kd = kernel(sp, KernelKind.DERIV_EVAL, w, trunc)
            got = inner_product(kd, kd, sp).real
            want = 1.0 / (1.0 - abs(w) ** 2)
            tail = abs(w) ** (2 * trunc) / (1.0 - abs(w) ** 2)
            worst = max(worst, abs(got - want) / (1.01 * tail + 1e-13))
        parts["deriv_kernel_norm_identity"] = worst

    if sp.kind == "s2tilde":
        worst = 0.0
        z1 = TruncatedSeries.z(trunc)
        for _ in range(trials):
            w = _random_point(rng, 0.85)
            cw = np.conj(w)
            one_minus = TruncatedSeries(
                np.concatenate([[1.0, -cw], np.zeros(trunc - 1, dtype=complex)]))
            lg = log_series(one_minus, 0.0)
            point_closed = 1 + 2 * cw * z1 + one_minus * lg
            deriv_closed = z1 - z1 * lg
            dp = np.max(np.abs(kernel(sp, KernelKind.POINT_EVAL, w, trunc).coeffs
                               - point_closed.coeffs))
            dd = np.max(np.abs(kernel(sp, KernelKind.DERIV_EVAL, w, trunc).coeffs
                               - deriv_closed.coeffs))
            worst = max(worst, float(dp), float(dd))
        parts["closed_forms"] = worst / 1e-12

    return _finish(
        check_id=f"kernels[{sp.spelling()}]",
        claim="pairing against the point and derivative kernels returns "
              "f(w) and f'(w); the space's closed kernel forms match the "
              "generic weighted coefficients",
        computed={"parts": {k: float(v) for k, v in parts.items()}},
        reference={"per_part_tolerance": "normalized to 1.0"},
        discrepancy=max(parts.values()),
        tolerance=1.0,
        trunc=trunc,
        started=started,
        seed=seed,
        note="on s2 the derivative-kernel norm part sits near 0.99 by "
             "construction: the truncation error equals the geometric tail "
             "exactly, and the denominator only grants 1 percent headroom"
        if sp.kind == "s2" else "",
    )


def check_multiplier_bounded(psi: TruncatedSeries, sp: SpaceSpec | None = None,
                             truncs=(64, 128, 256)) -> CheckReport:
    """Polynomial multipliers are bounded: truncated norms of f -> psi f
    stabilize in the truncation size."""
    started = time.perf_counter()
    sp = sp or _S2
    truncs = sorted(truncs)
    norms = {}
    for n in truncs:
        norms[str(n)] = operator_norm(build_multiplication(psi, n, domain=sp))
    hi, lo = norms[str(truncs[-1])], norms[str(truncs[-2])]
    drift = abs(hi - lo) / lo
    return _finish(
        check_id=f"multiplier-bounded[{sp.spelling()},deg={psi.trunc_degree}]",
        claim="multiplication by a polynomial with continuous derivative "
              "on the closed disk is a bounded operator",
        computed={"norms": norms, "drift": drift},
        reference={"drift_bound": 0.01},
        discrepancy=drift / 0.01,
        tolerance=1.0,
        trunc=truncs[-1],
        started=started,
    )


def check_factorization(m: MoebiusMap, trials: int = 20, trunc: int = 16,
                        seed: int = DEFAULT_SEED) -> CheckReport:
    """Kernel factorization with matched branches:
    1 - conj(phi(w)) z = exp(log mu(z) + log(1 - conj(w) sigma(z))
    + log conj(eta(w))), coefficientwise in z."""
    started = time.perf_counter()
    m.certify_strict()
    sig = m.krein_adjoint()
    sigma_series = sig.series(trunc)
    log_mu = m.log_mu(trunc)
    rng = np.random.default_rng([seed, 0xFAC])
    worst = 0.0
    for _ in range(trials):
        w = _random_point(rng, 0.85)
        inner = 1 - np.conj(w) * sigma_series
        total = (log_mu + log_series(inner, np.log(inner[0]))
                 + m.log_eta_conj_at(w))
        got = exp_series(total)
        want = np.zeros(trunc + 1, dtype=complex)
        want[0] = 1.0
        want[1] = -np.conj(m(w))
        worst = max(worst, float(np.max(np.abs(got.coeffs - want))))
    return _finish(
        check_id=f"factorization[{m.spelling()}]",
        claim="1 - conj(phi(w)) z factors as mu(z) (1 - conj(w) sigma(z)) "
              "conj(eta(w)) with branch constants that cancel",
        computed={"worst_coefficient_error": worst, "trials": trials},
        reference={"identity": 0.0},
        discrepancy=worst,
        tolerance=1e-12,
        trunc=trunc,
        started=started,
        seed=seed,
    )


# ---------------------------------------------------------------------
# Suite
# ---------------------------------------------------------------------


def default_suite(seed: int = DEFAULT_SEED, threads: int | None = None,
                  quick: bool = False) -> list[CheckReport]:
    """Run every check at default parameters.

    Deterministic for a fixed seed: random symbols and sample points are
    drawn from per-job seeded streams.  With threads > 1 the independent
    jobs run concurrently; the report order is fixed either way.
    """
    rng = np.random.default_rng([seed, 0xD0])
    m_shift = MoebiusMap(2, 1, 0, 4)
    m_full = MoebiusMap(2, 1, 1, 4)
    m_half = MoebiusMap(1, 0, 0, 2)
    m_b0 = MoebiusMap(1, 0, -0.3, 2)
    m_rand1 = random_strict_moebius(rng, sup_bound=0.75)
    m_rand2 = random_strict_moebius(rng, sup_bound=0.7)

    trio_truncs = (32, 64, 128) if quick else (64, 128, 256)
    compact_truncs = (32, 64, 128) if quick else (64, 128, 256)
    inter_trunc = 64 if quick else 128

    jobs = [
        lambda: check_norm_formula(0.5, 2),
        lambda: check_norm_formula(0.8, 1, trunc=32),
        lambda: check_norm_formula(0.9, 3),
        lambda: check_spectrum(MonomialMap(0.3, 2)),
        lambda: check_spectrum(MonomialMap(0.5, 3)),
        lambda: check_spectrum(MoebiusMap(0.4, 0.2, 0, 1)),
    ]
    for alpha in (1.0, 0.0, -1.0, -2.0):
        jobs.append(lambda a=alpha: check_adjoint_intertwine(m_shift, a, inter_trunc))
        jobs.append(lambda a=alpha: check_adjoint_intertwine(m_rand1, a, inter_trunc))
    jobs += [
        lambda: check_adjoint_intertwine(m_shift, -3.0, inter_trunc),
        lambda: check_adjoint_s2tilde(m_full, inter_trunc, seed=seed),
        lambda: check_adjoint_s2tilde(m_b0, inter_trunc, seed=seed),
        lambda: check_adjoint_s2tilde(m_half, inter_trunc, seed=seed),
        lambda: check_adjoint_s2_compact(m_shift, compact_truncs),
        lambda: check_adjoint_s2_compact(m_half, compact_truncs),
        lambda: check_bounded_trio(m_half, trio_truncs),
        lambda: check_bounded_trio(m_rand2, trio_truncs),
        lambda: check_kernels(SpaceSpec.hardy(), seed=seed),
        lambda: check_kernels(SpaceSpec.s2(), seed=seed),
        lambda: check_kernels(SpaceSpec.s2tilde(), seed=seed),
        lambda: check_kernels(SpaceSpec.dirichlet(), seed=seed),
        lambda: check_kernels(SpaceSpec.bergman(0.0), seed=seed),
        lambda: check_multiplier_bounded(TruncatedSeries.z(8)),
        lambda: check_multiplier_bounded(TruncatedSeries([0.5, 0.25, 0.125])),
        lambda: check_factorization(m_shift, seed=seed),
        lambda: check_factorization(m_full, seed=seed),
        lambda: check_factorization(m_rand1, seed=seed),
    ]

    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda job: job(), jobs))
    return [job() for job in jobs]


def reports_to_json_lines(reports) -> str:
    return "\n".join(r.to_json_line() for r in reports)


def reports_to_table(reports) -> str:
    """Fixed-width table, one row per report."""
    rows = [("check", "status", "discrepancy", "tolerance", "N", "ms")]
    for r in reports:
        rows.append((
            r.check_id,
            "pass" if r.passed else "FAIL",
            f"{r.discrepancy:.3e}",
            f"{r.tolerance:.1e}",
            str(r.trunc_degree),
            f"{r.runtime_ms:.1f}",
        ))
    widths = [max(len(row[i]) for row in rows) for i in range(6)]
    lines = []
    for i, row in enumerate(rows):
        lines.append("  ".join(cell.ljust(widths[j]) for j, cell in enumerate(row)))
        if i == 0:
            lines.append("  ".join("-" * widths[j] for j in range(6)))
    return "\n".join(lines)
