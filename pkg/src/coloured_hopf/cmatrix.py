"""Dense complex matrices and tensor-leg operations.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Tensor legs use
row-major flat indexing: the basis vector ``(i, j, k)`` of ``V1 (x) V2 (x) V3``
sits at ``i*d2*d3 + j*d3 + k``, which is what ``numpy.kron`` produces.
"""

from __future__ import annotations

import warnings

import numpy as np
import scipy.linalg

from coloured_hopf.errors import DimensionMismatch, NonConvergence, Singular

DEFAULT_TOL = 1e-10
SERIES_CAP = 200
PIVOT_FLOOR = 1e-14


def cmat(a) -> np.ndarray:
    """Coerce ``a`` to a 2-d complex128 array with finite entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim == 0:
        m = m.reshape(1, 1)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.complex128)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(cmat(a), cmat(b))


def max_abs(a: np.ndarray) -> float:
    return float(np.max(np.abs(a))) if a.size else 0.0


def max_abs_diff(a: np.ndarray, b: np.ndarray) -> float:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes differ: {a.shape} vs {b.shape}")
    return max_abs(a - b)


def scaled_diff(a: np.ndarray, b: np.ndarray, scale: float | None = None) -> float:
    """``max_abs_diff(a, b) / max(1, scale)``.

    ``scale`` defaults to the larger max-abs entry of ``a`` and ``b``; callers
    comparing a product against its expected value pass the product of the
    factors' max-abs entries instead. The result equals the absolute difference
    whenever the scale is at most 1, so double-precision round-off on large
    entries is not mistaken for a broken identity.
    """
    if scale is None:
        scale = max(max_abs(a), max_abs(b))
    return max_abs_diff(a, b) / max(1.0, scale)


def _square(a: np.ndarray, what: str = "matrix") -> int:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"{what} must be square, got shape {a.shape}")
    return a.shape[0]


def _series(a: np.ndarray, tol: float) -> np.ndarray:
    n = a.shape[0]
    result = identity(n)
    term = identity(n)
    for k in range(1, SERIES_CAP + 1):
        term = term @ a / k
        if not term.any():
            # nilpotent input: the series has terminated exactly
            return result
        result = result + term
        if max_abs(term) < tol * (1.0 + max_abs(result)):
            return result
    raise NonConvergence(f"exponential series did not reach tol={tol} in {SERIES_CAP} terms")


def matexp(a: np.ndarray, tol: float = 1e-17) -> np.ndarray:
    """Matrix exponential by a scaled Taylor series.

    Inputs with max-abs norm above 1/2 are scaled by a power of two, summed,
    then squared back. Nilpotent inputs are detected by an exactly vanishing
    term, in which case the finite sum is returned without scaling.
    """
    a = np.asarray(a, dtype=np.complex128)
    n = _square(a)
    if n == 0:
        return a.copy()
    norm = max_abs(a) * n
    if norm <= 0.5:
        return _series(a, tol)
    # try the unscaled power sequence first; cheap and exact for nilpotents
    power = a
    for _ in range(n):
        power = power @ a
        if not power.any():
            return _series(a, tol)
    squarings = int(np.ceil(np.log2(norm / 0.5)))
    result = _series(a / 2.0**squarings, tol)
    for _ in range(squarings):
        result = result @ result
    return result


def inverse(a: np.ndarray) -> np.ndarray:
    """Inverse by LU with partial pivoting; raises ``Singular`` on a tiny pivot."""
    a = np.asarray(a, dtype=np.complex128)
    n = _square(a)
    with warnings.catch_warnings():
        # an exactly zero pivot is reported through Singular below
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(a, check_finite=True)
    pivots = np.abs(np.diag(lu))
    if pivots.min() < PIVOT_FLOOR:
        raise Singular(f"pivot magnitude {pivots.min():.3e} below {PIVOT_FLOOR}")
    return scipy.linalg.lu_solve((lu, piv), identity(n))


def embed(x: np.ndarray, legs: tuple[int, int], dims: tuple[int, int, int]) -> np.ndarray:
    """Place a two-leg operator on legs ``legs`` of ``V1 (x) V2 (x) V3``.

    ``x`` acts on ``V_a (x) V_b`` for ``(a, b) = legs`` (in that order) and the
    remaining leg gets the identity.
    """
    a, b = legs
    if a == b or {a, b} - {1, 2, 3}:
        raise DimensionMismatch(f"invalid leg pair {legs}")
    da, db = dims[a - 1], dims[b - 1]
    x = np.asarray(x, dtype=np.complex128)
    if x.shape != (da * db, da * db):
        raise DimensionMismatch(
            f"operator of shape {x.shape} does not act on legs {legs} with dims {dims}"
        )
    (c,) = {1, 2, 3} - {a, b}
    dc = dims[c - 1]
    t = x.reshape(da, db, da, db)
    out = "ijkIJK"
    rows = {1: "i", 2: "j", 3: "k"}
    cols = {1: "I", 2: "J", 3: "K"}
    subs = f"{rows[a]}{rows[b]}{cols[a]}{cols[b]},{rows[c]}{cols[c]}->{out}"
    full = np.einsum(subs, t, identity(dc))
    d = dims[0] * dims[1] * dims[2]
    return full.reshape(d, d)


def rev1_product(x: np.ndarray, y: np.ndarray, d1: int, d2: int) -> np.ndarray:
    """Product on ``V1 (x) V2`` that is opposite on leg 1 and direct on leg 2.

    For pure tensors ``(A1 (x) B1, A2 (x) B2)`` the result is ``A2 A1 (x) B1 B2``.
    """
    n = d1 * d2
    if np.shape(x) != (n, n) or np.shape(y) != (n, n):
        raise DimensionMismatch(f"operands must be {n}x{n}")
    xt = np.asarray(x).reshape(d1, d2, d1, d2)
    yt = np.asarray(y).reshape(d1, d2, d1, d2)
    out = np.einsum("malc,kcmb->kalb", xt, yt)
    return out.reshape(n, n)


def rev2_product(x: np.ndarray, y: np.ndarray, d1: int, d2: int) -> np.ndarray:
    """Mirror of :func:`rev1_product`: direct on leg 1, opposite on leg 2."""
    n = d1 * d2
    if np.shape(x) != (n, n) or np.shape(y) != (n, n):
        raise DimensionMismatch(f"operands must be {n}x{n}")
    xt = np.asarray(x).reshape(d1, d2, d1, d2)
    yt = np.asarray(y).reshape(d1, d2, d1, d2)
    out = np.einsum("abcl,cmdb->amdl", xt, yt)
    return out.reshape(n, n)


def swap(d1: int, d2: int) -> np.ndarray:
    """Permutation matrix ``V1 (x) V2 -> V2 (x) V1``, ``u (x) v -> v (x) u``."""
    p = np.zeros((d1 * d2, d1 * d2), dtype=np.complex128)
    for i in range(d1):
        for j in range(d2):
            p[j * d1 + i, i * d2 + j] = 1.0
    return p
