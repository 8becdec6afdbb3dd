"""Verification sweeps: every defining identity of the construction, each
reported as a named check with a measured residual and a pinned tolerance.

The checks are grouped by subject so they can be run selectively:

    gauss     exact reference states, the three coefficient routes, and
              the forward transform identity
    fock      eigen-equation, series vs. superposition, operator identities
    wavefunc  kernel spectral property, integro-differential residuals,
              closed-form wavefunctions

``run_checks`` returns the results in a fixed order; the CLI renders them
and the acceptance test suite asserts them one by one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from . import fock, wavefunc
from .gauss_sums import CoprimeFraction, closed_coefficients, direct_coefficients
from .superposition import (
    build_descriptor,
    coefficients_by_inverse_dft,
    reference_state_table,
    verify_forward_dft,
)
from .wavefunc import GridSpec, WaveSample, hermite_basis, mehler_kernel

__all__ = [
    "CheckResult",
    "GROUPS",
    "TOLERANCES",
    "VerifyConfig",
    "coprime_fractions",
    "run_checks",
]

GROUPS = ("gauss", "fock", "wavefunc")

# Pinned acceptance tolerances, keyed by check name.
TOLERANCES = {
    "golden-states-exact": 0.0,
    "closed-vs-direct": 1e-12,
    "closed-vs-inverse-dft": 1e-12,
    "closed-magnitude-exact": 0.0,
    "forward-dft-identity": 1e-10,
    "eigen-equation": 1e-9,
    "series-vs-superposition": 1e-10,
    "lowering-power-identity": 1e-12,
    "kerr-vector-identity": 1e-12,
    "kerr-matrix-identity": 1e-12,
    "time-evolution": 1e-10,
    "kernel-spectral": 1e-6,
    "integro-differential": 1e-5,
    "integro-differential-parity": 1e-10,
    "cat-wavefunction-parity": 1e-12,
    "cat-wavefunction-fourier": 1e-10,
}


@dataclass(frozen=True)
class CheckResult:
    group: str
    name: str
    value: float
    tolerance: float
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerifyConfig:
    """Sweep sizes and numerical parameters; defaults reproduce the full
    acceptance run."""

    coeff_n_max: int = 200
    fock_n_max: int = 12
    power_n_max: int = 8
    dim: int = 64
    power_dim: int = 32
    grid: GridSpec = GridSpec(12.0, 2001)
    alphas: tuple[complex, ...] = (0.5, 1.0, 1.5 + 0.5j)
    times: tuple[float, ...] = (0.3, 0.7, 2.0 * math.pi)
    spectral_angles: tuple[float, ...] = (-math.pi / 2, math.pi / 2,
                                          2.0 * math.pi / 3, 2.0 * math.pi / 5)
    spectral_n_max: int = 10
    geneq_fractions: tuple[tuple[int, int], ...] = ((1, 4), (3, 4), (1, 3))
    cat_x_max: float = 6.0
    cat_x_points: int = 481


def coprime_fractions(n_max: int, n_min: int = 2) -> Iterator[CoprimeFraction]:
    """All reduced fractions M/N with n_min <= N <= n_max, ordered by (N, M)."""
    for n in range(n_min, n_max + 1):
        for m in range(1, n):
            if math.gcd(m, n) == 1:
                yield CoprimeFraction(m, n)


def _result(group: str, name: str, value: float, detail: str = "") -> CheckResult:
    tol = TOLERANCES[name]
    return CheckResult(group, name, value, tol, value <= tol, detail)


def check_golden_states() -> CheckResult:
    """Exact rational-phase equality of built descriptors against the
    hand-derived reference table (zero tolerance)."""
    mismatches = 0
    for f, reference in reference_state_table():
        if build_descriptor(f) != reference:
            mismatches += 1
    return _result("gauss", "golden-states-exact", float(mismatches),
                   f"{len(reference_state_table())} reference states")


def check_coefficient_routes(cfg: VerifyConfig) -> list[CheckResult]:
    """One sweep over all coprime fractions with N <= coeff_n_max comparing
    the closed form against the direct sum and the inverse DFT, checking
    the exact magnitude of the closed route, and verifying the forward
    transform identity."""
    worst_direct = 0.0
    worst_idft = 0.0
    worst_forward = 0.0
    magnitude_violations = 0
    count = 0
    for f in coprime_fractions(cfg.coeff_n_max):
        closed = closed_coefficients(f)
        magnitude_violations += sum(c.inv_sqrt_n != f.N for c in closed)
        closed_vals = np.array([c.to_complex() for c in closed])
        worst_direct = max(worst_direct,
                           float(np.abs(closed_vals - direct_coefficients(f)).max()))
        worst_idft = max(worst_idft,
                         float(np.abs(closed_vals - coefficients_by_inverse_dft(f)).max()))
        worst_forward = max(worst_forward, verify_forward_dft(f, closed_vals))
        count += 1
    detail = f"{count} fractions, N <= {cfg.coeff_n_max}"
    return [
        _result("gauss", "closed-vs-direct", worst_direct, detail),
        _result("gauss", "closed-vs-inverse-dft", worst_idft, detail),
        _result("gauss", "closed-magnitude-exact", float(magnitude_violations), detail),
        _result("gauss", "forward-dft-identity", worst_forward, detail),
    ]


def check_eigen_equation(cfg: VerifyConfig) -> CheckResult:
    worst = 0.0
    for f in coprime_fractions(cfg.fock_n_max):
        for alpha in cfg.alphas:
            worst = max(worst, fock.eigen_residual(alpha, f, cfg.dim))
    return _result("fock", "eigen-equation", worst,
                   f"N <= {cfg.fock_n_max}, dim {cfg.dim}")


def check_series_vs_superposition(cfg: VerifyConfig) -> CheckResult:
    worst = 0.0
    for f in coprime_fractions(cfg.fock_n_max):
        desc = build_descriptor(f)
        for alpha in cfg.alphas:
            series = fock.kitten_vector_series(alpha, f, cfg.dim)
            summed = fock.kitten_vector_superposition(alpha, desc, cfg.dim)
            worst = max(worst, float(np.linalg.norm(series - summed)))
    return _result("fock", "series-vs-superposition", worst,
                   f"N <= {cfg.fock_n_max}, dim {cfg.dim}")


def check_lowering_power(cfg: VerifyConfig) -> CheckResult:
    worst = 0.0
    for f in coprime_fractions(cfg.power_n_max):
        worst = max(worst, fock.aN_identity_residual(f, cfg.power_dim))
    return _result("fock", "lowering-power-identity", worst,
                   f"N <= {cfg.power_n_max}, dim {cfg.power_dim}")


def check_kerr(cfg: VerifyConfig) -> list[CheckResult]:
    worst_vec = 0.0
    worst_mat = 0.0
    for f in coprime_fractions(cfg.fock_n_max):
        worst_mat = max(worst_mat, fock.kerr_conjugation_residual(f, cfg.dim))
        for alpha in cfg.alphas:
            worst_vec = max(worst_vec, fock.kerr_identity_residual(alpha, f, cfg.dim))
    detail = f"N <= {cfg.fock_n_max}, dim {cfg.dim}"
    return [
        _result("fock", "kerr-vector-identity", worst_vec, detail),
        _result("fock", "kerr-matrix-identity", worst_mat, detail),
    ]


def check_time_evolution(cfg: VerifyConfig) -> CheckResult:
    worst = 0.0
    for f in coprime_fractions(cfg.fock_n_max):
        for alpha in cfg.alphas:
            for t in cfg.times:
                worst = max(worst, fock.time_evolution_residual(alpha, f, t, cfg.dim))
    times = ", ".join(f"{t:g}" for t in cfg.times)
    return _result("fock", "time-evolution", worst, f"t in {{{times}}}")


def check_kernel_spectral(cfg: VerifyConfig) -> CheckResult:
    """frac_fourier must act on psi_n as multiplication by exp(-i*phi*n);
    the single strongest probe of the kernel normalization."""
    x = cfg.grid.x()
    weights = cfg.grid.trapezoid_weights()
    basis = hermite_basis(cfg.spectral_n_max, x)
    worst = 0.0
    for phi in cfg.spectral_angles:
        kernel = mehler_kernel(x[:, None], x[None, :], phi)
        transformed = (weights * basis) @ kernel.T
        expected = np.exp(-1j * phi * np.arange(cfg.spectral_n_max + 1))[:, None] * basis
        worst = max(worst, float(np.abs(transformed - expected).max()))
    angles = ", ".join(f"{p:.4f}" for p in cfg.spectral_angles)
    return _result("wavefunc", "kernel-spectral", worst,
                   f"n <= {cfg.spectral_n_max}, phi in {{{angles}}}")


def check_integro_differential(cfg: VerifyConfig) -> list[CheckResult]:
    worst = 0.0
    for m, n in cfg.geneq_fractions:
        worst = max(worst, wavefunc.geneq_residual(
            1.0, CoprimeFraction(m, n), cfg.grid, cfg.dim))
    parity = wavefunc.geneq_residual(1.0, CoprimeFraction(1, 2), cfg.grid, cfg.dim)
    cases = ", ".join(f"{m}/{n}" for m, n in cfg.geneq_fractions)
    return [
        _result("wavefunc", "integro-differential", worst, f"alpha=1, M/N in {{{cases}}}"),
        _result("wavefunc", "integro-differential-parity", parity, "alpha=1, M/N = 1/2"),
    ]


def check_cat_wavefunctions(cfg: VerifyConfig) -> list[CheckResult]:
    """Closed-form cat wavefunctions against their coherent-state
    superpositions: exact for the parity cat, up to one global constant
    (fixed at x = 0) for the Fourier cat."""
    x = np.linspace(-cfg.cat_x_max, cfg.cat_x_max, cfg.cat_x_points)
    mid = cfg.cat_x_points // 2
    desc_p = build_descriptor(CoprimeFraction(1, 2))
    desc_f = build_descriptor(CoprimeFraction(3, 4))
    worst_p = 0.0
    worst_f = 0.0
    for alpha in cfg.alphas:
        sup_p = wavefunc.superposition_wavefunction(alpha, desc_p, x)
        worst_p = max(worst_p, float(np.abs(sup_p - wavefunc.psi_cat_P(alpha, x)).max()))
        sup_f = wavefunc.superposition_wavefunction(alpha, desc_f, x)
        closed_f = wavefunc.psi_cat_F(alpha, x)
        scale = sup_f[mid] / closed_f[mid]
        worst_f = max(worst_f, float(np.abs(sup_f - scale * closed_f).max()))
    detail = f"|x| <= {cfg.cat_x_max:g}"
    return [
        _result("wavefunc", "cat-wavefunction-parity", worst_p, detail),
        _result("wavefunc", "cat-wavefunction-fourier", worst_f, detail),
    ]


def run_checks(cfg: VerifyConfig | None = None,
               groups: Iterable[str] | None = None) -> list[CheckResult]:
    """Run every check (or only the requested groups) in a fixed order."""
    cfg = cfg or VerifyConfig()
    wanted = set(GROUPS if groups is None else groups)
    unknown = wanted - set(GROUPS)
    if unknown:
        raise ValueError(f"unknown check groups: {sorted(unknown)}")
    results: list[CheckResult] = []
    if "gauss" in wanted:
        results.append(check_golden_states())
        results.extend(check_coefficient_routes(cfg))
    if "fock" in wanted:
        results.append(check_eigen_equation(cfg))
        results.append(check_series_vs_superposition(cfg))
        results.append(check_lowering_power(cfg))
        results.extend(check_kerr(cfg))
        results.append(check_time_evolution(cfg))
    if "wavefunc" in wanted:
        results.append(check_kernel_spectral(cfg))
        results.extend(check_integro_differential(cfg))
        results.extend(check_cat_wavefunctions(cfg))
    return results
