"""Hermite-polynomial machinery: asymptotic nodes, exact zeros, eigenvectors.

The symmetric tridiagonal matrix H with off-diagonal entries sqrt(m/2) has the
zeros of the degree-n Hermite polynomial as eigenvalues.  Its orthonormal
eigenvectors, evaluated through a rescaled three-term recurrence, provide the
dense transform kernels.  For large n the zeros near the center approach the
uniform grid t_k = pi*(k - (n-1)/2)/sqrt(2n), which is the working grid of the
fast transform path.
"""

from dataclasses import dataclass

import numpy as np

from .errors import CapabilityError, ConvergenceFailure, InvalidSizeError

# Largest n for which dense eigenvector computations are offered.  Intermediate
# Hermite values reach ~exp(t^2/2) <= exp(512) here, safely below overflow.
DENSE_ORACLE_LIMIT = 512

_NEWTON_CAP = 100


@dataclass(frozen=True)
class Grid:
    """Uniform asymptotic Hermite-zero grid.

    nodes[k] = spacing * (k - (n-1)/2) with spacing = pi/sqrt(2n); the nodes
    are bitwise antisymmetric about 0.
    """

    n: int
    nodes: np.ndarray
    spacing: float


@dataclass(frozen=True)
class EigenBasis:
    """Exact zeros of H_n and the orthonormal eigenvector matrix.

    Column k of u is the unit eigenvector of the Jacobi matrix for eigenvalue
    zeros[k]; the first component of every column is positive.
    """

    n: int
    zeros: np.ndarray
    u: np.ndarray


def asymptotic_grid(n: int) -> Grid:
    """Return the n uniformly spaced asymptotic Hermite zeros.

    The symmetric index k - (n-1)/2 is exactly representable (integer or
    half-integer), so negation symmetry of the nodes is exact.
    """
    if n < 1:
        raise InvalidSizeError("grid size must be >= 1")
    spacing = np.pi / np.sqrt(2 * n)
    k_sym = np.arange(n) - (n - 1) / 2
    return Grid(n=n, nodes=spacing * k_sym, spacing=spacing)


def scaled_hermite_sequence(n_max: int, t):
    """Evaluate h_0(t)..h_{n_max}(t), the orthonormally scaled Hermite values.

    h_m = H_m / sqrt(2^m m! sqrt(pi)) satisfies
    h_{m+1} = t*sqrt(2/(m+1))*h_m - sqrt(m/(m+1))*h_{m-1},  h_0 = pi^(-1/4).

    Accepts a scalar or an array t; returns shape (n_max+1,) + shape(t).
    Values grow like exp(t^2/2), so doubles overflow only for |t| beyond ~37.
    """
    if n_max < 0:
        raise InvalidSizeError("n_max must be >= 0")
    t = np.asarray(t, dtype=np.float64)
    out = np.empty((n_max + 1,) + t.shape)
    out[0] = np.pi ** -0.25
    if n_max >= 1:
        out[1] = t * np.sqrt(2.0) * out[0]
    for m in range(1, n_max):
        out[m + 1] = t * np.sqrt(2.0 / (m + 1)) * out[m] - np.sqrt(m / (m + 1)) * out[m - 1]
    return out


def _hermite_last_two(n: int, t: np.ndarray):
    """Return (h_{n-1}(t), h_n(t)) without storing the whole sequence."""
    prev = np.full_like(t, np.pi ** -0.25)
    if n == 0:
        return None, prev
    cur = t * np.sqrt(2.0) * prev
    for m in range(1, n):
        prev, cur = cur, t * np.sqrt(2.0 / (m + 1)) * cur - np.sqrt(m / (m + 1)) * prev
    return prev, cur


def _sturm_count(x: np.ndarray, b_sq: np.ndarray) -> np.ndarray:
    """Number of eigenvalues of the Jacobi matrix strictly below each x.

    Counts negative pivots of the LDL^T factorization of H - xI.  The diagonal
    of H is zero, so the pivot recurrence is d <- -x - b^2/d.
    """
    tiny = np.finfo(np.float64).tiny
    d = -x.astype(np.float64)
    d = np.where(d == 0.0, -tiny, d)
    count = (d < 0).astype(np.int64)
    for m in range(1, b_sq.size + 1):
        d = -x - b_sq[m - 1] / d
        d = np.where(d == 0.0, -tiny, d)
        count += d < 0
    return count


def exact_hermite_zeros(n: int, tol: float = 1e-14) -> np.ndarray:
    """Compute the n real zeros of the degree-n Hermite polynomial, ascending.

    Each positive zero is bracketed by Sturm-count bisection on the Jacobi
    matrix (a guaranteed enclosure), then polished by Newton iteration using
    h_n'(t) = sqrt(2n) h_{n-1}(t).  The negative zeros are the mirror image,
    and for odd n the middle zero is exactly 0.

    Raises ConvergenceFailure if some Newton step is still larger than tol
    after the iteration cap.
    """
    if n < 1:
        raise InvalidSizeError("need n >= 1")
    if not 0 < tol < 1e-6:
        raise ValueError("tol must lie in (0, 1e-6)")
    if n == 1:
        return np.zeros(1)

    m = n // 2
    b_sq = np.arange(1, n, dtype=np.float64) / 2.0
    radius = np.sqrt(2.0 * n) + 1.0

    # Bracket the positive zeros, eigenvalue indices n-m .. n-1.
    want = np.arange(n - m, n)
    lo = np.zeros(m)
    hi = np.full(m, radius)
    for _ in range(40):
        mid = 0.5 * (lo + hi)
        above = _sturm_count(mid, b_sq) > want
        hi = np.where(above, mid, hi)
        lo = np.where(above, lo, mid)

    t = 0.5 * (lo + hi)
    sqrt2n = np.sqrt(2.0 * n)
    worst = np.inf
    for _ in range(_NEWTON_CAP):
        h_prev, h_n = _hermite_last_two(n, t)
        step = h_n / (sqrt2n * h_prev)
        t = t - step
        worst = np.abs(step).max()
        if worst <= tol:
            break
    else:
        raise ConvergenceFailure("Hermite zero refinement did not converge", worst)

    if n % 2:
        return np.concatenate([-t[::-1], [0.0], t])
    return np.concatenate([-t[::-1], t])


def orthonormal_basis(n: int) -> EigenBasis:
    """Exact zeros plus the orthonormal eigenvector matrix of the Jacobi matrix.

    Column k is proportional to (h_0(t_k), ..., h_{n-1}(t_k)) and is
    renormalized to unit length; h_0 > 0 makes the first component positive.
    Only offered for n <= DENSE_ORACLE_LIMIT.
    """
    if n < 1:
        raise InvalidSizeError("need n >= 1")
    if n > DENSE_ORACLE_LIMIT:
        raise CapabilityError(
            f"dense basis limited to n <= {DENSE_ORACLE_LIMIT}; use the fast transform path"
        )
    zeros = exact_hermite_zeros(n)
    u = scaled_hermite_sequence(n - 1, zeros)
    u /= np.linalg.norm(u, axis=0)
    return EigenBasis(n=n, zeros=zeros, u=u)
