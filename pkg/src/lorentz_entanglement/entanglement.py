"""Boosted two-qubit state ``alpha|00> + sqrt(1-alpha^2)|11>`` and its entanglement measures.

The momentum-traced two-particle spin state is an X-shaped 4x4 density
matrix ``tau(alpha, n)`` that depends on the boost only through the
single-particle polarization ``n``. Each measure comes as a closed form
and, where it makes sense, a numeric route through :mod:`.linalg`.

Scalar helpers take plain floats; ``alpha`` and ``n`` may also be numpy
arrays where noted, which is how grid sweeps are evaluated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import SIGMA_Y, dagger, jacobi_eigh, partial_transpose_B, trace_norm

YY = np.kron(SIGMA_Y, SIGMA_Y)


@dataclass(frozen=True)
class StateParameter:
    alpha: float

    def __post_init__(self):
        if not 0 < self.alpha < 1:
            raise ValueError(f"alpha must lie strictly inside (0, 1), got {self.alpha}")

    @property
    def beta_partner(self) -> float:
        return math.sqrt(1.0 - self.alpha**2)

    @property
    def product(self) -> float:
        """alpha * sqrt(1 - alpha^2), the only way most measures see alpha."""
        return self.alpha * self.beta_partner

    def partner(self) -> "StateParameter":
        return StateParameter(self.beta_partner)


@dataclass(frozen=True)
class SpinBlockSet:
    """Momentum-traced spin blocks ``Tr_p{L psi_i (L psi_k)^dagger}``, keyed by (i, k)."""

    b11: np.ndarray
    b22: np.ndarray
    b12: np.ndarray
    b21: np.ndarray

    def block(self, i: int, k: int) -> np.ndarray:
        return {(1, 1): self.b11, (2, 2): self.b22, (1, 2): self.b12, (2, 1): self.b21}[(i, k)]


@dataclass(frozen=True)
class TauDensity:
    matrix: np.ndarray
    alpha: StateParameter
    n: float


@dataclass(frozen=True)
class PTSpectrum:
    """Partial-transpose eigenvalues in their closed-form labelling (not sorted)."""

    lambda1: float
    lambda2: float
    lambda3: float
    lambda4: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.lambda1, self.lambda2, self.lambda3, self.lambda4)

    @property
    def npt(self) -> bool:
        return self.lambda2 < 0


def _param(p) -> StateParameter:
    return p if isinstance(p, StateParameter) else StateParameter(float(p))


def _check_n(n: float) -> float:
    n = float(n)
    if not 0 <= n <= 1:
        raise ValueError(f"polarization must lie in [0, 1], got {n}")
    return n


def coefficient_table(p) -> np.ndarray:
    """C[i, j, k, l] (0-based) of rho = sum C psi_i (x) psi_j [psi_k (x) psi_l]^dagger."""
    p = _param(p)
    c = np.zeros((2, 2, 2, 2))
    c[0, 0, 0, 0] = p.alpha**2
    c[1, 1, 1, 1] = p.beta_partner**2
    c[0, 0, 1, 1] = c[1, 1, 0, 0] = p.product
    return c


def initial_state(p) -> np.ndarray:
    p = _param(p)
    return np.array([p.alpha, 0.0, 0.0, p.beta_partner], dtype=complex)


def boosted_pure_state(p, theta: float) -> np.ndarray:
    """Two-qubit amplitudes over |00>, |01>, |10>, |11> after both spins rotate by ``theta``."""
    p = _param(p)
    a, b = p.alpha, p.beta_partner
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    cross = s * c * (a - b)
    return np.array([a * c * c + b * s * s, cross, cross, a * s * s + b * c * c], dtype=complex)


def concurrence_pure(state) -> float:
    a, b, c, d = np.asarray(state, dtype=complex)
    if abs(abs(a) ** 2 + abs(b) ** 2 + abs(c) ** 2 + abs(d) ** 2 - 1) > 1e-12:
        raise ValueError("state is not normalized")
    return float(2 * abs(a * d - b * c))


def _require_density(rho, tol: float = 1e-10) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape[-2:] != (4, 4):
        raise ValueError(f"expected 4x4 density matrices, got shape {rho.shape}")
    if np.any(np.abs(rho - dagger(rho)) > 1e-12):
        raise ValueError("density matrix is not Hermitian")
    if np.any(np.abs(np.einsum("...ii->...", rho) - 1) > tol):
        raise ValueError("density matrix does not have unit trace")
    return rho


def wootters_lambdas(rho) -> np.ndarray:
    """Square roots of the eigenvalues of rho (sy x sy) rho* (sy x sy), descending.

    With ``rho = V V^dagger`` (columns of V are eigenvectors scaled by the
    square roots of their weights), these are the singular values of the
    symmetric matrix ``V^T (sy x sy) V``. Singular values are taken as the
    positive half of the spectrum of the Hermitian dilation [[0, T], [T^H, 0]],
    which keeps small lambdas accurate to machine precision.
    """
    rho = _require_density(rho)
    w, v = jacobi_eigh(rho)
    if np.any(w < -1e-10):
        raise ValueError("density matrix is not positive semidefinite")
    vs = v * np.sqrt(np.clip(w, 0.0, None))[..., None, :]
    t = np.swapaxes(vs, -1, -2) @ YY @ vs
    dil = np.zeros(t.shape[:-2] + (8, 8), dtype=complex)
    dil[..., :4, 4:] = t
    dil[..., 4:, :4] = dagger(t)
    sv = jacobi_eigh(dil)[0][..., :4]
    return np.clip(sv, 0.0, None)


def concurrence_wootters(rho):
    lam = wootters_lambdas(rho)
    c = np.maximum(0.0, lam[..., 0] - lam[..., 1] - lam[..., 2] - lam[..., 3])
    return float(c) if np.ndim(c) == 0 else c


def concurrence_x_state(rho):
    """Closed-form concurrence of an X-shaped two-qubit density matrix."""
    r = np.asarray(rho)
    d = np.abs(np.einsum("...ii->...i", r))
    c = 2 * np.maximum(
        0.0,
        np.maximum(
            np.abs(r[..., 0, 3]) - np.sqrt(d[..., 1] * d[..., 2]),
            np.abs(r[..., 1, 2]) - np.sqrt(d[..., 0] * d[..., 3]),
        ),
    )
    return float(c) if np.ndim(c) == 0 else c


def spin_blocks(n: float) -> SpinBlockSet:
    n = _check_n(n)
    up, dn = 1 + n, 1 - n
    return SpinBlockSet(
        b11=0.5 * np.array([[up, 0.0], [0.0, dn]]),
        b22=0.5 * np.array([[dn, 0.0], [0.0, up]]),
        b12=0.5 * np.array([[0.0, up], [-dn, 0.0]]),
        b21=0.5 * np.array([[0.0, -dn], [up, 0.0]]),
    )


def assemble_tau(p, n: float) -> TauDensity:
    """Sum the coefficient table against Kronecker products of the traced spin blocks.

    ``tau = sum_{ijkl} C[i,j,k,l] kron(B[i,k], B[j,l])``, evaluated as one contraction.
    """
    p = _param(p)
    blocks = spin_blocks(n)
    stacked = np.array([[blocks.b11, blocks.b12], [blocks.b21, blocks.b22]])
    tau = np.einsum("ijkl,ikac,jlbd->abcd", coefficient_table(p), stacked, stacked)
    return TauDensity(matrix=tau.reshape(4, 4).astype(complex), alpha=p, n=float(n))


def tau_closed_form(alpha, n) -> np.ndarray:
    """Explicit X-shaped tau; ``alpha`` and ``n`` broadcast, output shape (..., 4, 4)."""
    alpha, n = np.broadcast_arrays(np.asarray(alpha, float), np.asarray(n, float))
    ab = alpha * np.sqrt(1 - alpha**2)
    out = np.zeros(alpha.shape + (4, 4), dtype=complex)
    out[..., 0, 0] = 4 * alpha**2 * n + (1 - n) ** 2
    out[..., 3, 3] = -4 * alpha**2 * n + (1 + n) ** 2
    out[..., 1, 1] = out[..., 2, 2] = 1 - n**2
    out[..., 0, 3] = out[..., 3, 0] = 2 * ab * (1 + n**2)
    out[..., 1, 2] = out[..., 2, 1] = -2 * ab * (1 - n**2)
    return out / 4


def pt_eigenvalues_closed(p, n: float) -> PTSpectrum:
    p = _param(p)
    n = _check_n(n)
    ab, a2 = p.product, p.alpha**2
    radicand = n**2 + a2 * (1 - a2) * (n**4 - 6 * n**2 + 1)
    root = 0.5 * math.sqrt(max(0.0, radicand))
    return PTSpectrum(
        lambda1=0.25 * (1 - n**2) + 0.5 * ab * (1 + n**2),
        lambda2=0.25 * (1 - n**2) - 0.5 * ab * (1 + n**2),
        lambda3=0.25 * (1 + n**2) + root,
        lambda4=0.25 * (1 + n**2) - root,
    )


def ppt_threshold(n: float) -> float:
    """Value of alpha*sqrt(1-alpha^2) above which tau has a negative partial transpose."""
    n = _check_n(n)
    return (1 - n**2) / (2 * (1 + n**2))


def log_negativity_closed(p, n: float) -> float:
    p = _param(p)
    if p.product <= ppt_threshold(n):
        return 0.0
    return math.log2(0.5 * (1 + n**2) * (1 + 2 * p.product))


def log_negativity_numeric(rho):
    """log2 of the trace norm of the partial transpose, floored at 0."""
    tn = trace_norm(partial_transpose_B(_require_density(rho)))
    out = np.where(tn <= 1 + 1e-12, 0.0, np.log2(np.maximum(tn, 1.0)))
    return float(out) if np.ndim(out) == 0 else out


def reduced_density(tau: TauDensity) -> np.ndarray:
    a2, n = tau.alpha.alpha ** 2, tau.n
    return np.diag([a2 * n + (1 - n) / 2, -a2 * n + (1 + n) / 2]).astype(complex)


@dataclass(frozen=True)
class ReducedConcurrence:
    value: float
    # 2 sqrt(det rho_A) is a concurrence only for pure states, i.e. at n = 1
    is_true_concurrence: bool


def concurrence_reduced(p, n: float) -> ReducedConcurrence:
    """``2 sqrt(det rho_A) = sqrt((1 - n + 2 a^2 n)(1 + n - 2 a^2 n))``."""
    p = _param(p)
    n = _check_n(n)
    x = 2 * p.alpha**2 * n
    value = math.sqrt(max(0.0, (1 - n + x) * (1 + n - x)))
    return ReducedConcurrence(value=value, is_true_concurrence=n == 1.0)


def concurrence_reduced_as_printed(p, n: float) -> float:
    """Same product with a leading factor 1/2, kept for side-by-side comparison."""
    return 0.5 * concurrence_reduced(p, n).value
