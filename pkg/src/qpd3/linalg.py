"""Dense complex linear algebra for 2- and 8-dimensional states and operators.

Everything here is a thin, validating layer over numpy: the Hilbert spaces in
this package are one qubit (dim 2) and three qubits (dim 8), so dense
``complex128`` arrays are both exact enough and fast enough.  Basis ordering
for dim 8 is fixed package-wide: index ``b`` encodes the outcome ``|lmn>``
with ``l`` (Alice) the most significant bit and ``n`` (Charlie) the least
significant, i.e. ``b = 4l + 2m + n``.

All functions are pure and never mutate their inputs.
"""

from __future__ import annotations

import numpy as np

#: Tolerance for algebraic identities (unitarity, normalization, projector laws).
ATOL = 1e-12

_DIMS = (2, 8)


def _ascomplex(a, ndim: int, name: str) -> np.ndarray:
    arr = np.asarray(a, dtype=complex)
    if arr.ndim != ndim:
        raise ValueError(f"{name} must be {ndim}-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def asvector(v, dim: int | None = None) -> np.ndarray:
    """Validate and return ``v`` as a finite complex vector of dim 2 or 8."""
    arr = _ascomplex(v, 1, "state vector")
    if arr.shape[0] not in _DIMS:
        raise ValueError(f"state vector must have dim 2 or 8, got {arr.shape[0]}")
    if dim is not None and arr.shape[0] != dim:
        raise ValueError(f"expected dim {dim}, got {arr.shape[0]}")
    return arr


def asoperator(m, dim: int | None = None) -> np.ndarray:
    """Validate and return ``m`` as a finite complex square matrix of dim 2 or 8."""
    arr = _ascomplex(m, 2, "operator")
    if arr.shape[0] != arr.shape[1] or arr.shape[0] not in _DIMS:
        raise ValueError(f"operator must be square of dim 2 or 8, got shape {arr.shape}")
    if dim is not None and arr.shape[0] != dim:
        raise ValueError(f"expected dim {dim}, got {arr.shape[0]}")
    return arr


def is_normalized(v, atol: float = ATOL) -> bool:
    v = asvector(v)
    return abs(np.vdot(v, v).real - 1.0) <= atol


def is_unitary(m, atol: float = ATOL) -> bool:
    m = asoperator(m)
    return bool(np.max(np.abs(m @ m.conj().T - np.eye(m.shape[0]))) <= atol)


def is_projector(m, atol: float = ATOL) -> bool:
    m = asoperator(m)
    return bool(
        np.max(np.abs(m @ m - m)) <= atol and np.max(np.abs(m - m.conj().T)) <= atol
    )


def tensor3(a, b, c) -> np.ndarray:
    """Kronecker product of three single-qubit operators, Alice slot first.

    Entry ``[(l,m,n), (l',m',n')]`` equals ``a[l,l'] * b[m,m'] * c[n,n']``
    under the fixed bit ordering.
    """
    a = asoperator(a, 2)
    b = asoperator(b, 2)
    c = asoperator(c, 2)
    return np.kron(np.kron(a, b), c)


def adjoint(m) -> np.ndarray:
    """Conjugate transpose."""
    return asoperator(m).conj().T.copy()


def outer(v) -> np.ndarray:
    """Rank-1 projector ``|v><v|`` of a normalized vector.

    Raises:
        ValueError: if ``v`` is not normalized to within ``ATOL``.
    """
    v = asvector(v)
    if not is_normalized(v):
        raise ValueError("outer() requires a normalized vector")
    return np.outer(v, v.conj())


def mat_apply(m, v) -> np.ndarray:
    """Matrix-vector product ``m @ v`` with dimension agreement enforced."""
    m = asoperator(m)
    v = asvector(v)
    if m.shape[0] != v.shape[0]:
        raise ValueError(f"dimension mismatch: operator {m.shape[0]}, vector {v.shape[0]}")
    return m @ v


def mat_mul(a, b) -> np.ndarray:
    """Matrix product ``a @ b`` with dimension agreement enforced."""
    a = asoperator(a)
    b = asoperator(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b


def trace(m) -> complex:
    return complex(np.trace(asoperator(m)))
