"""Single-particle relativistic kinematics: rapidities, Wigner angles, spin polarization.

The Wigner angle of a particle with rapidity ``delta`` seen from a frame
boosted by ``xi`` perpendicular to its momentum is

    tan(theta) = sinh(xi) sinh(delta) / (cosh(xi) + cosh(delta)).

For a Gaussian wavepacket the angle is taken to depend on ``|p|`` only
(isotropic model), and the momentum-averaged spin polarization is
``n = <cos theta>``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import polar

QUADRATURE_TOL = 1e-10
MAX_NODES = 2**14
P_MAX_OVER_W = 8.0


@dataclass(frozen=True)
class BoostRapidity:
    xi: float
    beta: float

    def __post_init__(self):
        if self.xi < 0 or not 0 <= self.beta < 1:
            raise ValueError(f"invalid boost: xi={self.xi}, beta={self.beta}")

    @classmethod
    def from_xi(cls, xi: float) -> "BoostRapidity":
        if not (math.isfinite(xi) and xi >= 0):
            raise ValueError(f"rapidity must be finite and >= 0, got {xi}")
        return cls(xi=xi, beta=math.tanh(xi))


@dataclass(frozen=True)
class ParticleRapidity:
    delta: float

    def __post_init__(self):
        if not self.delta >= 0:
            raise ValueError(f"particle rapidity must be >= 0, got {self.delta}")

    @classmethod
    def from_momentum(cls, p: float, m: float) -> "ParticleRapidity":
        """From ``cosh(delta) = p0/m`` with ``p0 = sqrt(m^2 + p^2)``."""
        if m <= 0 or p < 0:
            raise ValueError(f"need m > 0 and |p| >= 0, got m={m}, p={p}")
        # asinh(p/m) equals acosh(p0/m) without cancellation near p = 0
        return cls(delta=math.asinh(p / m))


@dataclass(frozen=True)
class WavePacket:
    """Isotropic Gaussian amplitude g(p) = pi^(-3/4) w^(-3/2) exp(-|p|^2 / 2w^2)."""

    w: float
    m: float

    def __post_init__(self):
        if not (self.w > 0 and self.m > 0):
            raise ValueError(f"need w > 0 and m > 0, got w={self.w}, m={self.m}")

    @property
    def ratio(self) -> float:
        return self.w / self.m

    def amplitude(self, p):
        p = np.asarray(p, dtype=float)
        return np.pi ** -0.75 * self.w ** -1.5 * np.exp(-(p**2) / (2 * self.w**2))


@dataclass(frozen=True)
class BlochVector:
    nx: float
    ny: float
    nz: float

    def __post_init__(self):
        if self.nx**2 + self.ny**2 + self.nz**2 > 1 + 1e-12:
            raise ValueError("Bloch vector longer than 1")

    def density_matrix(self) -> np.ndarray:
        return 0.5 * np.array(
            [
                [1 + self.nz, self.nx - 1j * self.ny],
                [self.nx + 1j * self.ny, 1 - self.nz],
            ]
        )


def rapidity_from_beta(beta: float) -> BoostRapidity:
    if not 0 <= beta < 1:
        raise ValueError(f"boost speed must satisfy 0 <= beta < 1, got {beta}")
    return BoostRapidity(xi=math.atanh(beta), beta=beta)


def _xi(xi) -> float:
    return xi.xi if isinstance(xi, BoostRapidity) else float(xi)


def _delta(delta) -> float:
    return delta.delta if isinstance(delta, ParticleRapidity) else float(delta)


def wigner_angle(xi, delta):
    """Wigner rotation angle in radians; accepts floats, arrays or rapidity objects."""
    x = _xi(xi) if isinstance(xi, BoostRapidity) else np.asarray(xi, dtype=float)
    d = _delta(delta) if isinstance(delta, ParticleRapidity) else np.asarray(delta, dtype=float)
    if np.any(np.asarray(x) < 0) or np.any(np.asarray(d) < 0):
        raise ValueError("rapidities must be non-negative")
    theta = np.arctan2(np.sinh(x) * np.sinh(d), np.cosh(x) + np.cosh(d))
    return float(theta) if np.ndim(theta) == 0 else theta


def _boost(rapidity: float, axis: int) -> np.ndarray:
    lam = np.eye(4)
    lam[0, 0] = lam[axis, axis] = math.cosh(rapidity)
    lam[0, axis] = lam[axis, 0] = math.sinh(rapidity)
    return lam


def wigner_angle_by_composition(xi: float, delta: float) -> float:
    """Wigner angle from an explicit product of perpendicular boosts.

    The particle's standard boost runs along z, the observer's along x. The
    Lorentz product is split as (pure boost) x (rotation) by a Euclidean
    polar decomposition, and the rotation angle is read off its trace.
    """
    composed = _boost(xi, 1) @ _boost(delta, 3)
    rotation, _ = polar(composed, side="left")
    spatial = rotation[1:, 1:]
    # sin from the antisymmetric part keeps precision at small angles
    axis = np.array(
        [spatial[2, 1] - spatial[1, 2], spatial[0, 2] - spatial[2, 0], spatial[1, 0] - spatial[0, 1]]
    )
    sin_t = 0.5 * np.linalg.norm(axis)
    cos_t = 0.5 * (np.trace(spatial) - 1.0)
    return float(math.atan2(sin_t, cos_t))


def wigner_rotate_spinor(s, theta: float, which: int | None = None) -> np.ndarray:
    """Rotate a spin amplitude pair by the Wigner angle.

    ``which`` selects a basis state (1 -> up, 2 -> down) and ignores ``s``;
    otherwise the general pair ``s`` is rotated.
    """
    c, sn = math.cos(theta / 2), math.sin(theta / 2)
    rot = np.array([[c, -sn], [sn, c]])
    if which is not None:
        if which not in (1, 2):
            raise ValueError(f"basis index must be 1 or 2, got {which}")
        return rot[:, which - 1].astype(complex)
    s = np.asarray(s, dtype=complex)
    if s.shape != (2,) or abs(np.vdot(s, s).real - 1) > 1e-12:
        raise ValueError("spinor must be a normalized pair of amplitudes")
    return rot @ s


def bloch_from_amplitudes(samples, weights) -> BlochVector:
    """Bloch vector of a weighted ensemble of spin amplitude pairs.

    This is the discrete version of the momentum integral over a spinor
    field: ``nz = sum w (|a1|^2 - |a2|^2)`` and ``nx - i ny = 2 sum w a1 conj(a2)``.
    """
    a = np.asarray(samples, dtype=complex).reshape(-1, 2)
    w = np.asarray(weights, dtype=float).reshape(-1)
    if len(w) != len(a):
        raise ValueError("one weight per sample required")
    if np.any(w < 0) or abs(w.sum() - 1) > 1e-10:
        raise ValueError("weights must be non-negative and sum to 1")
    nz = float(np.sum(w * (np.abs(a[:, 0]) ** 2 - np.abs(a[:, 1]) ** 2)))
    off = 2 * np.sum(w * a[:, 0] * np.conj(a[:, 1]))
    return BlochVector(nx=float(off.real), ny=float(-off.imag), nz=nz)


def polarization_leading_order(wp: WavePacket, xi) -> float:
    """Closed-form small-packet polarization ``1 - ((w/2m) tanh(xi/2))^2``, clamped to [0, 1]."""
    if wp.ratio >= 1:
        raise ValueError(f"w/m = {wp.ratio} outside the small-packet regime")
    if wp.ratio > 0.3:
        warnings.warn(f"w/m = {wp.ratio} is large for a leading-order estimate", stacklevel=2)
    n = 1.0 - (0.5 * wp.ratio * math.tanh(_xi(xi) / 2)) ** 2
    return min(1.0, max(0.0, n))


def polarization_taylor_isotropic(ratio: float, xi) -> float:
    """Small-packet expansion of the quadrature model, ``1 - (3/4)(w/m)^2 tanh^2(xi/2)``."""
    return 1.0 - 0.75 * ratio**2 * math.tanh(_xi(xi) / 2) ** 2


def _polarization_rule(ratio: float, xi: float, nodes: int) -> float:
    x, wts = np.polynomial.legendre.leggauss(nodes)
    u = 0.5 * P_MAX_OVER_W * (x + 1.0)
    wts = 0.5 * P_MAX_OVER_W * wts
    theta = wigner_angle(xi, np.arcsinh(u * ratio))
    # 4 pi p^2 |g|^2 dp in units u = p/w
    radial = 4.0 / math.sqrt(math.pi) * u**2 * np.exp(-(u**2))
    return float(np.sum(wts * radial * np.cos(theta)))


def polarization_quadrature(wp: WavePacket, xi, nodes: int = 32) -> float:
    """Momentum-averaged polarization ``<cos theta>`` by radial Gauss-Legendre quadrature.

    Doubles the node count until successive estimates agree to 1e-10.
    """
    if nodes < 32:
        raise ValueError(f"need at least 32 nodes, got {nodes}")
    x = _xi(xi)
    prev = _polarization_rule(wp.ratio, x, nodes)
    while nodes < MAX_NODES:
        nodes *= 2
        cur = _polarization_rule(wp.ratio, x, nodes)
        if abs(cur - prev) < QUADRATURE_TOL:
            return min(1.0, max(0.0, cur))
        prev = cur
    raise RuntimeError(f"polarization quadrature did not converge within {MAX_NODES} nodes")
