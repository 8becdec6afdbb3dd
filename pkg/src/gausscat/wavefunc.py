"""Coordinate-space realization: Hermite eigenfunctions, closed-form cat
wavefunctions, the Mehler kernel, and the quadrature fractional Fourier
transform.

The oscillator eigenfunctions psi_n are generated by the normalized
three-term recurrence (never via raw Hermite polynomials, which overflow),
wavefunctions of kitten states are synthesized from their truncated Fock
series, and the fractional Fourier transform

    [F_phi psi](x) = integral K(x, y; phi) psi(y) dy

is evaluated by trapezoid quadrature on a uniform grid.  The kernel's
eigenvalue property F_phi psi_n = exp(-i*phi*n) psi_n is the decisive test
of the normalization mu(phi); derivatives are always taken analytically
through the ladder action (d/dx + x) psi_n = sqrt(2n) psi_{n-1}.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .fock import kitten_vector_series
from .gauss_sums import CoprimeFraction
from .superposition import KittenDescriptor

__all__ = [
    "AliasingWarning",
    "GridSpec",
    "WaveSample",
    "frac_fourier",
    "geneq_residual",
    "hermite_basis",
    "hermite_values",
    "kitten_wave_sample",
    "mehler_kernel",
    "psi_cat_F",
    "psi_cat_F_inverse",
    "psi_cat_P",
    "psi_coherent",
    "psi_n",
    "reduce_angle",
    "superposition_wavefunction",
]


class AliasingWarning(UserWarning):
    """The sampled function does not decay below 1e-12 at the grid boundary."""


@dataclass(frozen=True)
class GridSpec:
    """Uniform symmetric grid on [-half_width, +half_width].

    The point count must be odd (>= 3) so the grid contains x = 0 and is
    exactly symmetric, which lets the parity operator act by reversal.
    """

    half_width: float
    points: int

    def __post_init__(self) -> None:
        if self.half_width <= 0:
            raise ValueError("half_width must be positive")
        if self.points < 3 or self.points % 2 == 0:
            raise ValueError("points must be an odd integer >= 3")

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / (self.points - 1)

    def x(self) -> np.ndarray:
        return np.linspace(-self.half_width, self.half_width, self.points)

    def trapezoid_weights(self) -> np.ndarray:
        w = np.full(self.points, self.spacing)
        w[0] = w[-1] = 0.5 * self.spacing
        return w


@dataclass(frozen=True)
class WaveSample:
    """A complex wavefunction sampled on a grid."""

    grid: GridSpec
    values: np.ndarray

    def __post_init__(self) -> None:
        if self.values.shape != (self.grid.points,):
            raise ValueError("values must match the grid point count")

    def norm(self) -> float:
        """Trapezoid estimate of the L2 norm."""
        return math.sqrt(float(self.grid.trapezoid_weights() @ np.abs(self.values) ** 2))


def hermite_values(n_max: int, x: float) -> np.ndarray:
    """Hermite polynomials H_0(x) .. H_{n_max}(x) by the recurrence
    H_{n+1} = 2x H_n - 2n H_{n-1}.  Raises on overflow instead of silently
    returning infinities."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    out = np.empty(n_max + 1)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = 2.0 * x
    with np.errstate(over="ignore", invalid="ignore"):
        for n in range(1, n_max):
            out[n + 1] = 2.0 * x * out[n] - 2.0 * n * out[n - 1]
    if not np.all(np.isfinite(out)):
        raise OverflowError(f"Hermite recurrence overflowed at n_max={n_max}, x={x}")
    return out


def hermite_basis(n_max: int, x: np.ndarray) -> np.ndarray:
    """Orthonormal oscillator eigenfunctions psi_0 .. psi_{n_max} sampled on
    x, returned as an (n_max+1, len(x)) array.

    Uses the normalized recurrence
        psi_{n+1} = sqrt(2/(n+1)) x psi_n - sqrt(n/(n+1)) psi_{n-1}
    so no factorials or large polynomial values ever appear.
    """
    x = np.asarray(x, dtype=float)
    basis = np.zeros((n_max + 1, x.size))
    basis[0] = math.pi ** -0.25 * np.exp(-0.5 * x * x)
    if n_max >= 1:
        basis[1] = math.sqrt(2.0) * x * basis[0]
    for n in range(1, n_max):
        basis[n + 1] = (math.sqrt(2.0 / (n + 1)) * x * basis[n]
                        - math.sqrt(n / (n + 1)) * basis[n - 1])
    return basis


def psi_n(n: int, x: float) -> float:
    """The n-th oscillator eigenfunction at a single point."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return float(hermite_basis(n, np.array([x]))[n, 0])


def psi_coherent(alpha: complex, x) -> np.ndarray | complex:
    """Coherent-state wavefunction
    pi^{-1/4} exp(-|a|^2/2 - a^2/2 + sqrt(2) a x - x^2/2)."""
    x = np.asarray(x, dtype=float)
    out = math.pi ** -0.25 * np.exp(
        -0.5 * abs(alpha) ** 2 - 0.5 * alpha * alpha
        + math.sqrt(2.0) * alpha * x - 0.5 * x * x
    )
    return out if out.ndim else complex(out)


def psi_cat_P(alpha: complex, x) -> np.ndarray | complex:
    """Closed form of the two-component parity cat wavefunction:
    sqrt(2)/pi^{1/4} exp((a^2 - |a|^2 - x^2)/2) cos(sqrt(2) a x - pi/4).

    Substituting alpha -> -i*alpha gives the Yurke-Stoler state.
    """
    x = np.asarray(x, dtype=float)
    out = (math.sqrt(2.0) / math.pi ** 0.25
           * np.exp(0.5 * (alpha * alpha - abs(alpha) ** 2 - x * x))
           * np.cos(math.sqrt(2.0) * alpha * x - math.pi / 4.0))
    return out if out.ndim else complex(out)


def psi_cat_F(alpha: complex, x) -> np.ndarray | complex:
    """Closed form of the four-component Fourier cat wavefunction:
    e^{-(|a|^2+x^2)/2} (e^{-i a^2/2} cosh((1+i) a x)
                        + e^{i a^2/2 + i pi/4} sinh((1-i) a x)).

    Note this expression is a constant pi^{1/4} times the normalized
    superposition; comparisons are therefore made up to one global factor.
    """
    x = np.asarray(x, dtype=float)
    out = np.exp(-0.5 * (abs(alpha) ** 2 + x * x)) * (
        np.exp(-0.5j * alpha * alpha) * np.cosh((1.0 + 1.0j) * alpha * x)
        + np.exp(0.5j * alpha * alpha + 0.25j * math.pi) * np.sinh((1.0 - 1.0j) * alpha * x)
    )
    return out if out.ndim else complex(out)


def psi_cat_F_inverse(alpha: complex, x) -> np.ndarray | complex:
    """Inverse-Fourier variant via the conjugation rule
    psi^{(F^-1)}_alpha(x) = conj(psi^{(F)}_{conj(alpha)}(x))."""
    return np.conj(psi_cat_F(complex(alpha).conjugate(), x))


def superposition_wavefunction(alpha: complex, desc: KittenDescriptor, x) -> np.ndarray:
    """Sum of rotated coherent wavefunctions with the descriptor's exact
    coefficients: sum_k c_k psi_coherent(rot_k * alpha, x)."""
    x = np.asarray(x, dtype=float)
    out = np.zeros(x.shape, dtype=complex)
    for comp in desc.components:
        out += comp.coefficient.to_complex() * psi_coherent(
            comp.rotation.to_complex() * alpha, x)
    return out


def reduce_angle(phi: float) -> float:
    """Reduce an angle mod 2*pi into (-pi, pi].

    The Mehler normalization mu(phi) = exp(i*(phi/2 - (pi/4) sgn(sin phi)))
    is 4*pi-periodic as written, so the branch matters: the analytic
    continuation of the kernel from |q| < 1 (and the eigenvalue property
    on psi_n) selects the representative in (-pi, pi].
    """
    reduced = math.remainder(phi, 2.0 * math.pi)
    return math.pi if reduced == -math.pi else reduced


def mehler_kernel(x, y, phi: float) -> np.ndarray | complex:
    """Fractional Fourier kernel
    K(x, y; phi) = mu(phi)/sqrt(2*pi*|sin phi|)
                   * exp(i ((x^2+y^2) cos phi - 2 x y)/(2 sin phi)),
    mu(phi) = exp(i (phi/2 - (pi/4) sgn(sin phi))), phi reduced to (-pi, pi].

    At phi = -pi/2 this is the ordinary Fourier kernel e^{ixy}/sqrt(2*pi).
    Raises for phi a multiple of pi, where the kernel degenerates to the
    identity or parity delta; callers handle those as special cases.
    """
    phi = reduce_angle(phi)
    s = math.sin(phi)
    if abs(s) < 1e-9:
        raise ValueError("kernel is singular for phi a multiple of pi")
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    mu = np.exp(1j * (0.5 * phi - 0.25 * math.pi * math.copysign(1.0, s)))
    out = (mu / math.sqrt(2.0 * math.pi * abs(s))
           * np.exp(1j * ((x * x + y * y) * math.cos(phi) - 2.0 * x * y) / (2.0 * s)))
    return out if out.ndim else complex(out)


def frac_fourier(ws: WaveSample, phi: float, out_grid: GridSpec | None = None) -> WaveSample:
    """Fractional Fourier transform by trapezoid quadrature of the Mehler
    kernel.  Warns when the input does not decay below 1e-12 at the grid
    boundary (aliasing risk)."""
    boundary = max(abs(ws.values[0]), abs(ws.values[-1]))
    if boundary >= 1e-12:
        warnings.warn(
            f"boundary magnitude {boundary:.3g} >= 1e-12; widen the grid",
            AliasingWarning,
            stacklevel=2,
        )
    out_grid = out_grid or ws.grid
    kernel = mehler_kernel(out_grid.x()[:, None], ws.grid.x()[None, :], phi)
    weighted = ws.grid.trapezoid_weights() * ws.values
    return WaveSample(out_grid, kernel @ weighted)


def kitten_wave_sample(alpha: complex, f: CoprimeFraction | None, grid: GridSpec,
                       dim: int) -> WaveSample:
    """Kitten wavefunction synthesized from its truncated Fock series."""
    coeffs = kitten_vector_series(alpha, f, dim)
    return WaveSample(grid, coeffs @ hermite_basis(dim - 1, grid.x()))


def _ladder_applied(coeffs: np.ndarray, x: np.ndarray) -> np.ndarray:
    """(d/dx + x) applied to sum_n c_n psi_n, computed analytically via
    (d/dx + x) psi_n = sqrt(2n) psi_{n-1}.  Drops the top row, which would
    need the truncated coefficient c_D."""
    dim = coeffs.size
    lowered = np.sqrt(2.0 * np.arange(1, dim)) * coeffs[1:]
    return lowered @ hermite_basis(dim - 2, x)


def geneq_residual(alpha: complex, f: CoprimeFraction, grid: GridSpec, dim: int) -> float:
    """Residual of the integro-differential eigen-equation

        (d/dx + x) psi(x) = sqrt(2) alpha [F_phi psi](x)

    for the kitten wavefunction at truncation dim, as a max over interior
    grid points.  The derivative side is exact (ladder action on the
    series); the right side is quadrature for sin(phi) != 0, and the parity
    functional equation  (d/dx + x) psi(x) = sqrt(2) alpha psi(-x)  when
    phi = pi (N = 2), which needs no integration at all.
    """
    x = grid.x()
    coeffs = kitten_vector_series(alpha, f, dim)
    lhs = _ladder_applied(coeffs, x)
    sample = WaveSample(grid, coeffs @ hermite_basis(dim - 1, x))
    if f.N == 2:
        rhs = math.sqrt(2.0) * alpha * sample.values[::-1]
    else:
        rhs = math.sqrt(2.0) * alpha * frac_fourier(sample, f.angle_radians).values
    return float(np.abs(lhs - rhs)[1:-1].max())
