"""Self-checks that cross closed forms against independent numeric routes.

Each suite returns a :class:`SuiteResult`. Hard suites decide the exit status
of ``verify``; informational suites only report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import entanglement as ent
from . import kinematics as kin
from .linalg import eig_hermitian, partial_trace_B, partial_transpose_B


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str
    hard: bool = True
    counterexample: tuple | None = None
    labels: tuple[str, str] = ("alpha", "n")

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        if not self.hard:
            tag = "INFO"
        out = f"[{tag}] {self.name}: {self.detail}"
        if self.counterexample is not None:
            a, n, obs, exp = self.counterexample
            la, ln = self.labels
            out += f" (first counterexample {la}={a!r} {ln}={n!r} observed={obs!r} expected={exp!r})"
        return out


def grid(density: int) -> tuple[np.ndarray, np.ndarray]:
    return np.linspace(0.01, 0.99, density), np.linspace(0.0, 1.0, density)


def _worst(name, alphas, ns, observed, expected, tol) -> SuiteResult:
    observed, expected = np.asarray(observed), np.asarray(expected)
    err = np.abs(observed - expected)
    err = err.reshape(len(alphas), len(ns), -1).max(axis=-1)
    worst = float(err.max())
    result = SuiteResult(name, worst < tol, f"max |diff| = {worst:.3e} (tol {tol:g})")
    if not result.passed:
        i, j = np.argwhere(err >= tol)[0]
        obs = observed.reshape(err.shape + (-1,))[i, j]
        exp = expected.reshape(err.shape + (-1,))[i, j]
        result.counterexample = (float(alphas[i]), float(ns[j]), obs.tolist(), exp.tolist())
    return result


def construction_equality(alphas, ns, tol=1e-12) -> SuiteResult:
    built = np.array([[ent.assemble_tau(a, n).matrix for n in ns] for a in alphas])
    aa, nn = np.meshgrid(alphas, ns, indexing="ij")
    return _worst("construction equality", alphas, ns, built, ent.tau_closed_form(aa, nn), tol)


def spectrum_equality(alphas, ns, tol=1e-10) -> SuiteResult:
    aa, nn = np.meshgrid(alphas, ns, indexing="ij")
    numeric = eig_hermitian(partial_transpose_B(ent.tau_closed_form(aa, nn)))
    closed = np.array(
        [[sorted(ent.pt_eigenvalues_closed(a, n).as_tuple(), reverse=True) for n in ns] for a in alphas]
    )
    return _worst("spectrum equality", alphas, ns, numeric, closed, tol)


def negativity_equality(alphas, ns, tol=1e-10) -> SuiteResult:
    aa, nn = np.meshgrid(alphas, ns, indexing="ij")
    numeric = ent.log_negativity_numeric(ent.tau_closed_form(aa, nn))
    closed = np.array([[ent.log_negativity_closed(a, n) for n in ns] for a in alphas])
    return _worst("negativity closed vs numeric", alphas, ns, numeric, closed, tol)


def sign_structure(alphas, ns) -> SuiteResult:
    for a in alphas:
        ab = a * math.sqrt(1 - a * a)
        for n in ns:
            lam = ent.pt_eigenvalues_closed(a, n)
            r = ent.ppt_threshold(n)
            if abs(sum(lam.as_tuple()) - 1) > 1e-12:
                return SuiteResult("PT sign structure", False, "trace identity broken",
                                   counterexample=(a, n, sum(lam.as_tuple()), 1.0))
            if min(lam.lambda1, lam.lambda3, lam.lambda4) < -1e-12:
                return SuiteResult("PT sign structure", False, "negative lambda1/3/4",
                                   counterexample=(a, n, lam.as_tuple(), ">= 0"))
            if abs(ab - r) > 1e-10 and (lam.lambda2 < 0) != (ab > r):
                return SuiteResult("PT sign structure", False, "lambda2 sign disagrees with threshold",
                                   counterexample=(a, n, lam.lambda2, r))
    return SuiteResult("PT sign structure", True, "trace 1, lambda1/3/4 >= 0, lambda2 < 0 iff above threshold")


def lorentz_invariance(seed: int, count: int = 100, tol=1e-12) -> SuiteResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for a, theta in zip(rng.uniform(0.001, 0.999, count), rng.uniform(0, math.pi / 2, count)):
        c = ent.concurrence_pure(ent.boosted_pure_state(a, theta))
        exp = 2 * a * math.sqrt(1 - a * a)
        if abs(c - exp) >= tol:
            return SuiteResult("pure-state concurrence invariance", False, "mismatch",
                               counterexample=(float(a), float(theta), c, exp), labels=("alpha", "theta"))
        worst = max(worst, abs(c - exp))
    return SuiteResult("pure-state concurrence invariance", True, f"max |diff| = {worst:.3e} over {count} draws")


def monotonicity(alphas, steps: int = 101) -> SuiteResult:
    ns = np.linspace(0.0, 1.0, steps)
    for a in alphas:
        vals = np.array([ent.log_negativity_closed(a, n) for n in ns])
        bad = np.flatnonzero(np.diff(vals) < 0)
        if bad.size:
            k = bad[0]
            return SuiteResult("degradation monotonicity", False, "log-negativity decreases with n",
                               counterexample=(float(a), float(ns[k + 1]), vals[k + 1], f">= {vals[k]}"))
    return SuiteResult("degradation monotonicity", True, "log-negativity non-decreasing in n for every alpha")


def _scalar_outputs(a: float, n: float) -> np.ndarray:
    lam = ent.pt_eigenvalues_closed(a, n)
    return np.array(
        lam.as_tuple()
        + (
            ent.log_negativity_closed(a, n),
            ent.concurrence_reduced(a, n).value,
            ent.concurrence_pure(ent.initial_state(a)),
            ent.concurrence_wootters(ent.assemble_tau(a, n).matrix),
        )
    )


def partner_symmetry(alphas, ns, tol=1e-12) -> SuiteResult:
    worst, where = 0.0, None
    for a in alphas:
        b = math.sqrt(1 - a * a)
        for n in ns:
            d = float(np.max(np.abs(_scalar_outputs(a, n) - _scalar_outputs(b, n))))
            if d > worst:
                worst, where = d, (float(a), float(n))
    ok = worst < tol
    res = SuiteResult("alpha-partner symmetry", ok, f"max |diff| = {worst:.3e} (tol {tol:g})")
    if not ok:
        res.counterexample = (*where, worst, 0.0)
    return res


def wootters_agreement(alphas, ns, tol=1e-10) -> SuiteResult:
    aa, nn = np.meshgrid(alphas, ns, indexing="ij")
    taus = ent.tau_closed_form(aa, nn)
    cw = ent.concurrence_wootters(taus)
    res = _worst("Wootters vs X-state formula", alphas, ns, cw, ent.concurrence_x_state(taus), tol)
    if not res.passed:
        return res
    for i, a in enumerate(alphas):
        for j, n in enumerate(ns):
            l2 = ent.pt_eigenvalues_closed(a, n).lambda2
            if abs(l2) > 1e-10 and (cw[i, j] > 1e-10) != (l2 < -1e-10):
                return SuiteResult("Wootters vs X-state formula", False, "concurrence/PPT disagreement",
                                   counterexample=(float(a), float(n), float(cw[i, j]), l2))
    res.detail += "; concurrence > 0 exactly where lambda2 < 0"
    return res


def wigner_oracle(points: int = 20, tol=1e-9) -> SuiteResult:
    worst = 0.0
    for xi in np.linspace(0, 5, points):
        for delta in np.linspace(0, 5, points):
            d = abs(kin.wigner_angle(xi, delta) - kin.wigner_angle_by_composition(xi, delta))
            if d >= tol:
                return SuiteResult("Wigner angle vs boost composition", False, "mismatch",
                                   counterexample=(float(xi), float(delta), kin.wigner_angle(xi, delta),
                                                   kin.wigner_angle_by_composition(xi, delta)),
                                   labels=("xi", "delta"))
            worst = max(worst, d)
    return SuiteResult("Wigner angle vs boost composition", True, f"max |diff| = {worst:.3e} on {points}x{points} grid")


def concurrence_limits(alphas, ns, tol=1e-12) -> SuiteResult:
    for a in alphas:
        c = ent.concurrence_reduced(a, 1.0).value
        exp = 2 * a * math.sqrt(1 - a * a)
        if abs(c - exp) >= tol:
            return SuiteResult("reduced concurrence limits", False, "n=1 limit",
                               counterexample=(float(a), 1.0, c, exp))
    for n in ns:
        c = ent.concurrence_reduced(1 / math.sqrt(2), n).value
        if abs(c - 1) >= tol:
            return SuiteResult("reduced concurrence limits", False, "alpha=1/sqrt(2) value",
                               counterexample=(1 / math.sqrt(2), float(n), c, 1.0))
    return SuiteResult(
        "reduced concurrence limits",
        True,
        "n=1 gives 2*alpha*sqrt(1-alpha^2); alpha=1/sqrt(2) gives 1 for all n. "
        "The quoted n=0 value 1/2 is NOT reproducible: 2*sqrt(det rho_A) gives 1 at n=0, "
        "and the half-prefactor variant gives 1/2 there but breaks both other limits",
    )


def reduced_marginal(alphas, ns, tol=1e-12) -> SuiteResult:
    worst = 0.0
    for a in alphas:
        for n in ns:
            tau = ent.assemble_tau(a, n)
            worst = max(worst, float(np.max(np.abs(ent.reduced_density(tau) - partial_trace_B(tau.matrix)))))
    return SuiteResult("reduced density vs partial trace", worst < tol, f"max |diff| = {worst:.3e}")


def polarization_models(ratio: float = 0.01, xi: float = 1.0) -> list[SuiteResult]:
    wp = kin.WavePacket(w=ratio, m=1.0)
    quad = kin.polarization_quadrature(wp, xi)
    taylor = kin.polarization_taylor_isotropic(ratio, xi)
    closed = kin.polarization_leading_order(wp, xi)
    rel = abs((1 - quad) - (1 - taylor)) / (1 - taylor)
    scale = ratio**2 * math.tanh(xi / 2) ** 2
    hard = SuiteResult(
        "polarization quadrature vs its expansion",
        rel < 0.01,
        f"w/m={ratio}, xi={xi}: relative error of 1-n is {rel:.2e} (tol 1e-2)",
    )
    info = SuiteResult(
        "polarization coefficient comparison",
        True,
        f"w/m={ratio}, xi={xi}: (1-n)/((w/m)^2 tanh^2(xi/2)) is {(1 - closed) / scale:.6f} for the "
        f"leading-order closed form (1/4) and {(1 - quad) / scale:.6f} for the isotropic quadrature (3/4)",
        hard=False,
    )
    return [hard, info]


def _guarded(name, fn, *args) -> list[SuiteResult]:
    try:
        out = fn(*args)
    except Exception as exc:  # a suite that crashes counts as failed
        return [SuiteResult(name, False, f"raised {type(exc).__name__}: {exc}")]
    return out if isinstance(out, list) else [out]


def run_all(grid_density: int = 20, seed: int = 42) -> list[SuiteResult]:
    if grid_density < 10:
        raise ValueError("grid density must be >= 10")
    alphas, ns = grid(grid_density)
    suites = [
        ("construction equality", construction_equality, alphas, ns),
        ("spectrum equality", spectrum_equality, alphas, ns),
        ("negativity closed vs numeric", negativity_equality, alphas, ns),
        ("PT sign structure", sign_structure, alphas, ns),
        ("pure-state concurrence invariance", lorentz_invariance, seed),
        ("degradation monotonicity", monotonicity, alphas),
        ("alpha-partner symmetry", partner_symmetry, alphas, ns),
        ("Wootters vs X-state formula", wootters_agreement, alphas, ns),
        ("Wigner angle vs boost composition", wigner_oracle),
        ("reduced concurrence limits", concurrence_limits, alphas, ns),
        ("reduced density vs partial trace", reduced_marginal, alphas, ns),
        ("polarization models", polarization_models),
    ]
    results = []
    for name, fn, *args in suites:
        results.extend(_guarded(name, fn, *args))
    return results
