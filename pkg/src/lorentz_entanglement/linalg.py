"""Dense complex linear algebra for one- and two-qubit operators.

Every function accepts either a single ``(d, d)`` matrix or a stack of them
with shape ``(..., d, d)``; leading axes are treated as a batch. Subsystem A
is the slow (left) index of a two-qubit operator and B the fast (right) one.
"""

from __future__ import annotations

import numpy as np

HERMITIAN_TOL = 1e-12
JACOBI_TOL = 1e-14
MAX_SWEEPS = 60
NEGLIGIBLE = 1e-18

SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])


def _as_square(m, dims=(2, 4)) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim < 2 or m.shape[-1] != m.shape[-2]:
        raise ValueError(f"expected square matrix, got shape {m.shape}")
    if dims is not None and m.shape[-1] not in dims:
        raise ValueError(f"matrix dimension {m.shape[-1]} not in {dims}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(np.swapaxes(m, -1, -2))


def is_hermitian(m, tol: float = HERMITIAN_TOL) -> bool:
    m = _as_square(m, dims=None)
    return bool(np.all(np.abs(m - dagger(m)) <= tol))


def _require_hermitian(m, dims=(2, 4)) -> np.ndarray:
    m = _as_square(m, dims)
    if not is_hermitian(m):
        raise ValueError("matrix is not Hermitian within tolerance")
    return m


def kron(a, b) -> np.ndarray:
    """Kronecker product of two single-qubit operators, A on the slow index."""
    a = _as_square(a, dims=(2,))
    b = _as_square(b, dims=(2,))
    out = a[..., :, None, :, None] * b[..., None, :, None, :]
    return out.reshape(out.shape[:-4] + (4, 4))


def _split(m: np.ndarray) -> np.ndarray:
    # (..., 4, 4) -> (..., iA, iB, jA, jB)
    return m.reshape(m.shape[:-2] + (2, 2, 2, 2))


def partial_transpose_B(m) -> np.ndarray:
    m = _as_square(m, dims=(4,))
    t = np.swapaxes(_split(m), -3, -1)
    return np.ascontiguousarray(t).reshape(m.shape)


def partial_trace_B(m) -> np.ndarray:
    m = _as_square(m, dims=(4,))
    return np.einsum("...ikjk->...ij", _split(m))


def partial_trace_A(m) -> np.ndarray:
    m = _as_square(m, dims=(4,))
    return np.einsum("...kikj->...ij", _split(m))


def jacobi_eigh(m, tol: float = JACOBI_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi diagonalization of a stack of Hermitian matrices.

    Returns ``(w, v)`` with eigenvalues ``w`` sorted descending and
    eigenvectors in the columns of ``v``, so ``m = v @ diag(w) @ v^H``.
    No restriction on the matrix dimension is imposed here; callers do that.
    The input is symmetrized as ``(m + m^H)/2`` first.
    """
    a = np.asarray(m, dtype=complex)
    batch_shape, d = a.shape[:-2], a.shape[-1]
    a = a.reshape((-1, d, d))
    a = 0.5 * (a + dagger(a))
    nb = a.shape[0]
    v = np.broadcast_to(np.eye(d, dtype=complex), (nb, d, d)).copy()
    # convergence is judged relative to the matrix scale, floored at 1
    scale = np.maximum(1.0, np.linalg.norm(a, axis=(-2, -1)))
    idx = np.arange(nb)

    def off_norm(x):
        offd = x - np.einsum("...ii->...i", x)[..., None] * np.eye(d)
        return np.linalg.norm(offd, axis=(-2, -1))

    for _ in range(MAX_SWEEPS):
        if np.all(off_norm(a) < tol * scale):
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = a[:, p, q]
                r = np.abs(apq)
                # entries this small cannot move the off-diagonal norm
                active = r > NEGLIGIBLE * scale
                if not np.any(active):
                    continue
                r = np.where(active, r, 0.0)
                phase = np.where(active, apq / np.where(active, r, 1.0), 1.0)
                diff = (a[:, q, q] - a[:, p, p]).real
                sgn = np.where(diff >= 0, 1.0, -1.0)
                denom = np.abs(diff) + np.sqrt(diff * diff + 4.0 * r * r)
                t = np.where(denom > 0, 2.0 * r * sgn / np.where(denom > 0, denom, 1.0), 0.0)
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                rot = np.broadcast_to(np.eye(d, dtype=complex), (nb, d, d)).copy()
                rot[idx, p, p] = c
                rot[idx, p, q] = s
                rot[idx, q, p] = -s * np.conj(phase)
                rot[idx, q, q] = c * np.conj(phase)
                a = dagger(rot) @ a @ rot
                a[idx, p, q] = 0.0
                a[idx, q, p] = 0.0
                v = v @ rot
        a = 0.5 * (a + dagger(a))
    w = np.einsum("...ii->...i", a).real
    order = np.argsort(-w, axis=-1, kind="stable")
    w = np.take_along_axis(w, order, axis=-1)
    v = np.take_along_axis(v, order[:, None, :], axis=-1)
    return w.reshape(batch_shape + (d,)), v.reshape(batch_shape + (d, d))


def eig_hermitian(m) -> np.ndarray:
    """Real eigenvalues of a Hermitian 2x2 or 4x4 matrix (or stack), descending."""
    m = _require_hermitian(m)
    return jacobi_eigh(m)[0]


def trace_norm(m) -> np.ndarray | float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    w = eig_hermitian(m)
    out = np.sum(np.abs(w), axis=-1)
    return float(out) if np.ndim(out) == 0 else out


def trace(m):
    out = np.einsum("...ii->...", np.asarray(m))
    return complex(out) if np.ndim(out) == 0 else out
