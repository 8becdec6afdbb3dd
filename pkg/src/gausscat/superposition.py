"""Kitten-state descriptors: which rotated coherent states are superposed,
with which exact coefficients.

For a fraction M/N the state is a sum of N coherent states whose amplitudes
are alpha rotated by

    2*pi*k/N              (N odd)
    2*pi*k/N + pi*M/N     (N even)

for k = 0 .. N-1, with coefficients given by the closed-form Gauss sums.
The same coefficients are recovered here by an independent O(N^2) inverse
discrete Fourier transform of the quadratic phase sequence, and the forward
transform identity can be checked for any candidate coefficient list.

A small table of hand-derived reference states (N = 2, 3, 4, 5) is kept
as golden data; ``build_descriptor`` must reproduce it exactly at the
rational-phase level.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .gauss_sums import (
    CoprimeFraction,
    ExactCoefficient,
    RationalAngle,
    closed_coefficients,
)

__all__ = [
    "KittenComponent",
    "KittenDescriptor",
    "build_descriptor",
    "coefficients_by_inverse_dft",
    "descriptor_from_json",
    "descriptor_to_json",
    "reference_state_table",
    "phase_sequence",
    "verify_forward_dft",
]


@dataclass(frozen=True, slots=True)
class KittenComponent:
    """One branch of the superposition: coefficient * |exp(i*rotation)*alpha>."""

    k: int
    coefficient: ExactCoefficient
    rotation: RationalAngle


@dataclass(frozen=True)
class KittenDescriptor:
    """The full finite superposition for a fraction M/N.

    Exactly N components ordered by the derivation index k (not by angle);
    every coefficient has magnitude 1/sqrt(N) so the weights sum to one by
    construction, and the rotations are pairwise distinct mod 2*pi.
    """

    fraction: CoprimeFraction
    parity: str  # "even" | "odd" (parity of N)
    components: tuple[KittenComponent, ...]

    def __post_init__(self) -> None:
        n = self.fraction.N
        if self.parity not in ("even", "odd"):
            raise ValueError("parity must be 'even' or 'odd'")
        if self.parity != ("even" if n % 2 == 0 else "odd"):
            raise ValueError("parity does not match N")
        if len(self.components) != n:
            raise ValueError(f"expected {n} components, got {len(self.components)}")
        if [c.k for c in self.components] != list(range(n)):
            raise ValueError("components must be ordered k = 0 .. N-1")
        if any(c.coefficient.inv_sqrt_n != n for c in self.components):
            raise ValueError("every coefficient must have magnitude 1/sqrt(N)")
        rotations = {(c.rotation.num, c.rotation.den) for c in self.components}
        if len(rotations) != n:
            raise ValueError("rotations must be distinct mod 2*pi")

    def rotations(self) -> list[RationalAngle]:
        return [c.rotation for c in self.components]

    def coefficient_values(self) -> np.ndarray:
        return np.array([c.coefficient.to_complex() for c in self.components])


def component_rotation(f: CoprimeFraction, k: int) -> RationalAngle:
    """Rotation of alpha for branch k: 2*pi*k/N, shifted by pi*M/N for even N."""
    if f.n_even:
        return RationalAngle(2 * k + f.M, f.N)
    return RationalAngle(2 * k, f.N)


def build_descriptor(f: CoprimeFraction) -> KittenDescriptor:
    """Descriptor with closed-form coefficients and parity-correct rotations."""
    coeffs = closed_coefficients(f)
    components = tuple(
        KittenComponent(k, coeffs[k], component_rotation(f, k))
        for k in range(f.N)
    )
    return KittenDescriptor(f, "even" if f.n_even else "odd", components)


def phase_sequence(f: CoprimeFraction) -> tuple[RationalAngle, ...]:
    """The target phases exp(-i*pi*M*n*(n-1)/N) (N odd) or exp(-i*pi*M*n^2/N)
    (N even) for n = 0 .. N-1, as exact angles."""
    m, n = f.M, f.N
    if f.n_even:
        return tuple(RationalAngle(-m * j * j, n) for j in range(n))
    return tuple(RationalAngle(-m * j * (j - 1), n) for j in range(n))


def _target_values(f: CoprimeFraction) -> np.ndarray:
    """Complex values of the phase sequence, with the same exact mod-2*pi
    integer reduction but vectorized (the sweeps call this in bulk)."""
    m, n = f.M, f.N
    j = np.arange(n, dtype=np.int64)
    quad = (-m * j * j) % (2 * n) if f.n_even else (-m * j * (j - 1)) % (2 * n)
    return np.exp(1j * np.pi * quad / n)


@lru_cache(maxsize=16)
def _dft_matrix(n: int) -> np.ndarray:
    """The inverse-transform matrix exp(-2*pi*i*k*l/n) with exponents reduced
    mod n before evaluation; cached per order.  Callers must not mutate."""
    idx = np.outer(np.arange(n, dtype=np.int64), np.arange(n, dtype=np.int64)) % n
    return np.exp(-2j * np.pi * np.arange(n) / n)[idx]


def coefficients_by_inverse_dft(f: CoprimeFraction) -> np.ndarray:
    """Coefficients by the inverse discrete Fourier transform of the phase
    sequence: c_k = (1/N) sum_n target_n exp(-2*pi*i*k*n/N).

    Deliberately the naive O(N^2) transform with target and twiddle kept as
    separate complex factors; this is an independent cross-check of both the
    direct summation and the closed forms.
    """
    return (_dft_matrix(f.N) @ _target_values(f)) / f.N


def verify_forward_dft(f: CoprimeFraction, coefficients: Sequence[complex]) -> float:
    """Max over n of |sum_k c_k exp(2*pi*i*k*n/N) - target_phase(n)|.

    Zero (up to rounding) exactly when the coefficient list solves the
    defining linear system; a perturbed list produces an O(1) error.
    """
    n = f.N
    c = np.asarray(coefficients, dtype=complex)
    if c.shape != (n,):
        raise ValueError(f"expected {n} coefficients, got shape {c.shape}")
    return float(np.abs(_dft_matrix(n).conj() @ c - _target_values(f)).max())


# pentagonal rotations: 1, e^{2 pi i/5}, ..., e^{8 pi i/5}
_PENTAGON_ROTS = [(0, 1), (2, 5), (4, 5), (6, 5), (8, 5)]


def _reference_state(m: int, n: int,
                     phases: Iterable[tuple[int, int]],
                     rotations: Iterable[tuple[int, int]],
                     signs: Iterable[int] | None = None) -> tuple[CoprimeFraction, KittenDescriptor]:
    f = CoprimeFraction(m, n)
    signs = list(signs) if signs is not None else [1] * n
    components = tuple(
        KittenComponent(k, ExactCoefficient(signs[k], n, RationalAngle(pn, pd)),
                        RationalAngle(rn, rd))
        for k, ((pn, pd), (rn, rd)) in enumerate(zip(phases, rotations))
    )
    return f, KittenDescriptor(f, "even" if n % 2 == 0 else "odd", components)


def reference_state_table() -> list[tuple[CoprimeFraction, KittenDescriptor]]:
    """Hand-checked reference states, frozen as golden data.

    Each entry was worked out independently of ``build_descriptor`` (by
    completing the square in the defining sums by hand) and is stored
    literally; a bare -1 coefficient is kept as sign = -1 and folded into
    the phase by normalization.  Covered: the two-component parity cat
    (M=1, N=2), the four-component Fourier compass state (M=3, N=4) and
    its inverse-Fourier mirror (M=1, N=4), both triangular states (N=3),
    and the full pentagonal family (N=5).
    """
    table = [
        # M=1, N=2: (e^{-i pi/4} |i a> + e^{+i pi/4} |-i a>)/sqrt 2
        _reference_state(1, 2, [(-1, 4), (1, 4)], [(1, 2), (3, 2)]),
        # M=1, N=3
        _reference_state(1, 3, [(-1, 6), (-1, 6), (1, 2)],
                         [(0, 1), (2, 3), (4, 3)]),
        # M=2, N=3
        _reference_state(2, 3, [(1, 6), (-1, 2), (1, 6)],
                         [(0, 1), (2, 3), (4, 3)]),
        # M=1, N=4: inverse-Fourier state (i -> -i mirror of M=3)
        _reference_state(1, 4, [(-1, 4), (0, 1), (3, 4), (0, 1)],
                         [(1, 4), (3, 4), (5, 4), (7, 4)]),
        # M=3, N=4: compass state, unit coefficients at rotations 5pi/4 and pi/4
        _reference_state(3, 4, [(5, 4), (0, 1), (1, 4), (0, 1)],
                         [(3, 4), (5, 4), (7, 4), (1, 4)]),
        # N=5 pentagonal family
        _reference_state(1, 5, [(-1, 5), (-1, 5), (1, 5), (0, 1), (1, 5)],
                         _PENTAGON_ROTS, signs=[1, 1, 1, -1, 1]),
        _reference_state(2, 5, [(-2, 5), (0, 1), (-2, 5), (2, 5), (2, 5)],
                         _PENTAGON_ROTS),
        _reference_state(3, 5, [(2, 5), (-2, 5), (-2, 5), (2, 5), (0, 1)],
                         _PENTAGON_ROTS),
        _reference_state(4, 5, [(1, 5), (-1, 5), (0, 1), (-1, 5), (1, 5)],
                         _PENTAGON_ROTS, signs=[1, 1, -1, 1, 1]),
    ]
    return table


def descriptor_to_json(desc: KittenDescriptor) -> str:
    """Serialize a descriptor to the stable JSON wire format.

    Phases mean exp(i*pi*num/den); rotations are the multiplier of alpha in
    the same convention.
    """
    obj = {
        "M": desc.fraction.M,
        "N": desc.fraction.N,
        "parity": desc.parity,
        "components": [
            {
                "k": c.k,
                "coeff": {
                    "sign": c.coefficient.sign,
                    "phase_num": c.coefficient.phase.num,
                    "phase_den": c.coefficient.phase.den,
                    "inv_sqrt": c.coefficient.inv_sqrt_n,
                },
                "rotation": {"num": c.rotation.num, "den": c.rotation.den},
            }
            for c in desc.components
        ],
    }
    return json.dumps(obj, indent=2)


def descriptor_from_json(text: str) -> KittenDescriptor:
    obj = json.loads(text)
    f = CoprimeFraction(obj["M"], obj["N"])
    components = tuple(
        KittenComponent(
            entry["k"],
            ExactCoefficient(entry["coeff"]["sign"], entry["coeff"]["inv_sqrt"],
                             RationalAngle(entry["coeff"]["phase_num"],
                                           entry["coeff"]["phase_den"])),
            RationalAngle(entry["rotation"]["num"], entry["rotation"]["den"]),
        )
        for entry in obj["components"]
    )
    return KittenDescriptor(f, obj["parity"], components)
