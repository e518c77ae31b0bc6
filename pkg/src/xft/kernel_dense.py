"""Dense transform kernels used as slow ground-truth oracles.

Two constructions of the discretized fractional Fourier kernel: the exact one,
sqrt(2pi) U^T diag(1, z, ..., z^{n-1}) U on the exact Hermite zeros, and the
large-n Gaussian (Mehler) limit on the uniform asymptotic grid.  Both are
symmetric n x n matrices applied by plain matrix-vector products.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .dft_engine import as_complex_signal
from .errors import (
    AbsentScalingError,
    CapabilityError,
    InvalidSizeError,
    OutOfDomainError,
    SingularParameterError,
)
from .hermite import DENSE_ORACLE_LIMIT, asymptotic_grid, orthonormal_basis

SQRT_2PI = np.sqrt(2.0 * np.pi)

# z must stay this far from +-1 for mu, nu and the prefactor to be usable.
SINGULARITY_EPS = 1e-6

_DISK_TOL = 1e-12
_ZERO_TOL = 1e-6


@dataclass(frozen=True)
class TransformParams:
    """Validated transform parameter z with its derived quantities.

    mu = (1+z^2)/(2(1-z^2)), nu = 2z/(1-z^2), a = 2i(1-z^2)/(pi z) (None when
    z = 0), prefactor = principal sqrt(2/(1-z^2)).
    """

    z: complex
    mu: complex
    nu: complex
    a: Optional[complex]
    prefactor: complex

    def require_a(self) -> complex:
        if self.a is None:
            raise AbsentScalingError("output scaling undefined at z = 0")
        return self.a


@dataclass(frozen=True)
class KernelMatrix:
    """Dense symmetric kernel; kind is 'exact' or 'asymptotic'.

    params is None only for exact kernels at z = +-1, where the derived
    mu/nu/prefactor do not exist but the kernel itself is regular.
    """

    n: int
    entries: np.ndarray
    kind: str
    params: Optional[TransformParams]


def make_params(z: complex) -> TransformParams:
    """Validate z (closed unit disk, away from +-1) and derive mu, nu, a."""
    z = complex(z)
    if abs(z) > 1.0 + _DISK_TOL:
        raise OutOfDomainError(f"|z| = {abs(z):.6f} lies outside the unit disk")
    one_minus = 1.0 - z * z
    if abs(one_minus) < SINGULARITY_EPS:
        raise SingularParameterError("z too close to +-1: 1 - z^2 is singular")
    mu = (1.0 + z * z) / (2.0 * one_minus)
    nu = 2.0 * z / one_minus
    a = 2j * one_minus / (np.pi * z) if abs(z) >= _ZERO_TOL else None
    prefactor = complex(np.sqrt(np.complex128(2.0 / one_minus)))
    return TransformParams(z=z, mu=mu, nu=nu, a=a, prefactor=prefactor)


def exact_kernel(n: int, z: complex) -> KernelMatrix:
    """Kernel sqrt(2pi) U^T diag(z^m) U on the exact zeros of H_n.

    Polynomial in z, so z = +-1 is allowed (identity and parity kernels).
    Stable for all n up to the dense limit; the literal closed-form entry
    formula would overflow past n of about 20.
    """
    if n < 1:
        raise InvalidSizeError("need n >= 1")
    if n > DENSE_ORACLE_LIMIT:
        raise CapabilityError(f"dense kernel limited to n <= {DENSE_ORACLE_LIMIT}")
    z = complex(z)
    if abs(z) > 1.0 + _DISK_TOL:
        raise OutOfDomainError(f"|z| = {abs(z):.6f} lies outside the unit disk")
    basis = orthonormal_basis(n)
    d = np.complex128(z) ** np.arange(n)
    entries = SQRT_2PI * ((basis.u.T * d) @ basis.u)
    entries = (entries + entries.T) / 2.0
    try:
        params = make_params(z)
    except SingularParameterError:
        params = None
    return KernelMatrix(n=n, entries=entries, kind="exact", params=params)


def asymptotic_kernel(n: int, z: complex) -> KernelMatrix:
    """Mehler-limit kernel on the uniform grid, with the node spacing as weight.

    entries[j,k] = sqrt(2/(1-z^2)) exp(-mu t_j^2) exp(nu t_j t_k)
                   exp(-mu t_k^2) dt.

    The upper triangle is mirrored onto the lower one, so the symmetry
    invariant holds bitwise even where fused complex multiplies round
    a*b and b*a differently.
    """
    if n < 1:
        raise InvalidSizeError("need n >= 1")
    params = make_params(z)
    grid = asymptotic_grid(n)
    t = grid.nodes
    edge = np.exp(-params.mu * t * t)
    cross = np.exp(params.nu * np.outer(t, t))
    entries = (params.prefactor * grid.spacing) * (np.outer(edge, edge) * cross)
    lower = np.tril_indices(n, -1)
    entries[lower] = entries.T[lower]
    return KernelMatrix(n=n, entries=entries, kind="asymptotic", params=params)


def apply_kernel(kernel: KernelMatrix, g) -> np.ndarray:
    """Matrix-vector product: the quadrature approximation at the nodes."""
    x = as_complex_signal(g)
    if x.size != kernel.n:
        raise InvalidSizeError(f"signal length {x.size} != kernel size {kernel.n}")
    return kernel.entries @ x
