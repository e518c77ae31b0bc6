"""Built-in test-signal corpus with closed-form reference transforms.

Six signal families: a quadratic-phase cosine, a singular exponential ratio, a
pure harmonic on the symmetric index grid, a shifted Gaussian, the constant
one, and the unit rectangle.  Where a closed form exists, reference_transform
evaluates it under either of the two normalization conventions of the
transform; resolve_convention picks the one the dense exact kernel realizes.
"""

from dataclasses import dataclass, field

import numpy as np

from .dft_engine import as_complex_signal
from .errors import NoClosedFormError, SignalSpecError
from .hermite import Grid
from .kernel_dense import SQRT_2PI, apply_kernel, exact_kernel

CORPUS_NAMES = ("chirp_cos", "cauchy_exp", "harmonic", "gauss_beta", "constant_one", "rect")

CONVENTIONS = ("paper", "namias")

_BOUNDARY_TOL = 1e-9


@dataclass(frozen=True)
class SignalSpec:
    """A corpus entry name plus its named real parameters."""

    name: str
    params: dict = field(default_factory=dict)


def _param(spec: SignalSpec, key: str, default=None) -> float:
    if key in spec.params:
        try:
            return float(spec.params[key])
        except (TypeError, ValueError):
            raise SignalSpecError(f"parameter {key!r} of {spec.name!r} must be a real number")
    if default is None:
        raise SignalSpecError(f"signal {spec.name!r} requires parameter {key!r}")
    return default


def _harmonic_m(spec: SignalSpec, n: int) -> float:
    """Accept either m directly or omega0 (angular frequency on the t axis)."""
    has_m = "m" in spec.params
    has_w = "omega0" in spec.params
    if has_m == has_w:
        raise SignalSpecError("harmonic requires exactly one of parameters 'm', 'omega0'")
    if has_m:
        return _param(spec, "m")
    return _param(spec, "omega0") * np.sqrt(2 * n) / 4.0


def sample(spec: SignalSpec, grid: Grid) -> np.ndarray:
    """Evaluate the signal at the grid nodes (symmetric indices for harmonic)."""
    if spec.name not in CORPUS_NAMES:
        raise SignalSpecError(f"unknown signal {spec.name!r}; choose from {CORPUS_NAMES}")
    t = grid.nodes
    if spec.name == "chirp_cos":
        out = np.cos(t * t)
    elif spec.name == "cauchy_exp":
        b = _param(spec, "b", default=1.0)
        if b <= 0:
            raise SignalSpecError("cauchy_exp requires b > 0")
        # a node may hit the pole at t = -log(b); the finiteness check below
        # turns that into a typed error, so suppress the transient warning
        with np.errstate(divide="ignore", invalid="ignore"):
            out = np.exp(-t / 2) / (b - np.exp(-t))
    elif spec.name == "harmonic":
        m = _harmonic_m(spec, grid.n)
        k_sym = np.arange(grid.n) - (grid.n - 1) / 2
        out = np.cos(k_sym * (2 * np.pi * m / grid.n))
    elif spec.name == "gauss_beta":
        beta = _param(spec, "beta")
        out = np.exp(-t * t / 2 + beta * t)
    elif spec.name == "constant_one":
        out = np.ones(grid.n)
    else:
        out = np.where(np.abs(t) < 0.5, 1.0, np.where(np.abs(t) == 0.5, 0.5, 0.0))
    return as_complex_signal(out)


def _boundary_phi(z: complex, name: str) -> float:
    if abs(abs(z) - 1.0) > _BOUNDARY_TOL:
        raise NoClosedFormError(f"{name} has a closed form only on |z| = 1")
    return float(np.angle(z))


def _require_z_i(z: complex, name: str):
    if abs(z - 1j) > _BOUNDARY_TOL:
        raise NoClosedFormError(f"{name} has a closed form only at z = i")


def reference_transform(spec: SignalSpec, z: complex, omega, convention: str = "paper"):
    """Closed-form transform value(s) at omega for the supported (spec, z) pairs.

    The 'paper' convention is the scale the transforms in this package
    produce; 'namias' divides by sqrt(2pi).  omega may be a scalar or array.
    """
    if convention not in CONVENTIONS:
        raise SignalSpecError(f"unknown convention {convention!r}")
    if spec.name not in CORPUS_NAMES:
        raise SignalSpecError(f"unknown signal {spec.name!r}; choose from {CORPUS_NAMES}")
    w = np.asarray(omega, dtype=np.complex128)
    z = complex(z)

    if spec.name == "chirp_cos":
        _require_z_i(z, spec.name)
        val = np.sqrt(np.pi) * np.cos((w * w - np.pi) / 4)
    elif spec.name == "cauchy_exp":
        _require_z_i(z, spec.name)
        b = _param(spec, "b", default=1.0)
        arg = np.pi / 2 - 1j * np.pi * w
        val = np.pi * b ** (-0.5 - 1j * w) * (np.cos(arg) / np.sin(arg))
    elif spec.name == "rect":
        _require_z_i(z, spec.name)
        small = np.abs(w) < 1e-8
        safe = np.where(small, 1.0, w)
        val = np.where(small, 1.0 - w * w / 24, 2 * np.sin(safe / 2) / safe)
    elif spec.name == "gauss_beta":
        beta = _param(spec, "beta")
        phi = _boundary_phi(z, spec.name)
        e = np.exp(1j * phi)
        val = SQRT_2PI * np.exp(-w * w / 2 - 0.5j * beta * beta * e * np.sin(phi) + beta * w * e)
    elif spec.name == "constant_one":
        phi = _boundary_phi(z, spec.name)
        c = np.cos(phi)
        if abs(c) < 1e-12:
            raise NoClosedFormError("constant_one closed form degenerates at phi = pi/2")
        val = SQRT_2PI * np.exp(0.5j * (w * w * np.tan(phi) - phi)) / np.sqrt(np.complex128(c))
    else:
        raise NoClosedFormError("harmonic has no pointwise closed form; use the pulse metrics")

    if convention == "namias":
        val = val / SQRT_2PI
    if np.isscalar(omega) or np.ndim(omega) == 0:
        return complex(val)
    return val


def resolve_convention(n: int = 64) -> str:
    """Pick the normalization the dense exact kernel realizes on a Gaussian.

    Applies the exact kernel at z = i to samples of e^{-t^2/2} at the exact
    zeros and compares against both candidate scales of the self-transform.
    """
    from .hermite import orthonormal_basis

    basis = orthonormal_basis(n)
    g = np.exp(-basis.zeros ** 2 / 2)
    got = apply_kernel(exact_kernel(n, 1j), g)
    err_paper = np.abs(got - SQRT_2PI * g).max()
    err_namias = np.abs(got - g).max()
    return "paper" if err_paper <= err_namias else "namias"
