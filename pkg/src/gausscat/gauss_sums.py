"""Quadratic Gauss sums and their closed-form evaluation.

The coefficients of the coherent-state superpositions built in this package
are normalized quadratic Gauss sums

    c_k = (1/N) sum_{l=0}^{N-1} exp(-i*pi*(M*l*(l-1) + 2*k*l)/N)   (N odd)
    c_k = (1/N) sum_{l=0}^{N-1} exp(-i*pi*(M*l^2     + 2*k*l)/N)   (N even)

for coprime 0 < M < N.  Completing the square with the modular inverse
d = M^{-1} mod N collapses each sum to a single root of unity of magnitude
1/sqrt(N), with the residual sign given by a Legendre-Jacobi symbol.  This
module provides the integer number theory (gcd, modular inverse, Jacobi
symbol), an exact carrier for rational multiples of pi, and the three
evaluation routes: term-by-term summation, the alternating-sign variant,
and the closed forms.

Every phase that is known exactly is kept as a reduced rational multiple
of pi (:class:`RationalAngle`) and converted to a complex number only at
the boundary, so root-of-unity identities can be tested as integer
equalities instead of float comparisons.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from math import gcd as _int_gcd

import numpy as np

__all__ = [
    "CoprimeFraction",
    "ExactCoefficient",
    "RationalAngle",
    "closed_coefficients",
    "direct_coefficients",
    "gauss_coefficient_closed",
    "gauss_coefficient_direct",
    "gauss_sum_alternating",
    "gcd",
    "jacobi_symbol",
    "mod_inverse",
]


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative integers.

    Unlike ``math.gcd`` this rejects the degenerate (0, 0) input, for which
    no greatest divisor exists.
    """
    if a < 0 or b < 0:
        raise ValueError("gcd expects nonnegative integers")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return _int_gcd(a, b)


def mod_inverse(m: int, n: int) -> int:
    """The unique d with 1 <= d <= n and m*d = 1 (mod n).

    Requires gcd(m, n) = 1.  For n = 1 the inverse is taken to be 1.
    """
    if n < 1:
        raise ValueError("modulus must be a positive integer")
    if n == 1:
        return 1
    g = _int_gcd(m % n, n)
    if g != 1:
        raise ValueError(f"{m} has no inverse mod {n} (gcd = {g})")
    return pow(m, -1, n)


def jacobi_symbol(a: int, b: int) -> int:
    """Legendre-Jacobi symbol (a/b) for odd positive b.

    Multiplicative in both arguments; equals the product of Legendre
    symbols over the prime factorization of b, but is computed here by
    quadratic-reciprocity reduction so no factorization is needed.
    Returns 0 exactly when gcd(a, b) > 1, and (a/1) = 1 by convention.
    """
    if b <= 0 or b % 2 == 0:
        raise ValueError("Jacobi symbol needs an odd positive denominator")
    a %= b
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if b % 8 in (3, 5):
                result = -result
        a, b = b, a
        if a % 4 == 3 and b % 4 == 3:
            result = -result
        a %= b
    return result if b == 1 else 0


@dataclass(frozen=True, slots=True)
class RationalAngle:
    """An exact phase exp(i*pi*num/den).

    Canonical form: den >= 1, gcd(num, den) = 1, and 0 <= num < 2*den
    (phases are identified mod 2*pi); the zero angle is stored as (0, 1).
    Construction normalizes any integer pair, so ``RationalAngle(-1, 4)``
    becomes ``RationalAngle(7, 4)``.
    """

    num: int
    den: int = 1

    def __post_init__(self) -> None:
        if self.den <= 0:
            raise ValueError("denominator must be positive")
        num = self.num % (2 * self.den)
        g = _int_gcd(num, self.den) if num else self.den
        object.__setattr__(self, "num", num // g)
        object.__setattr__(self, "den", self.den // g)

    def __add__(self, other: "RationalAngle") -> "RationalAngle":
        return RationalAngle(self.num * other.den + other.num * self.den,
                             self.den * other.den)

    def __neg__(self) -> "RationalAngle":
        return RationalAngle(-self.num, self.den)

    def __sub__(self, other: "RationalAngle") -> "RationalAngle":
        return self + (-other)

    def scaled(self, k: int) -> "RationalAngle":
        """The angle multiplied by an integer k."""
        return RationalAngle(self.num * k, self.den)

    @property
    def radians(self) -> float:
        return math.pi * self.num / self.den

    def to_complex(self) -> complex:
        """exp(i*pi*num/den), exact at quarter-turn multiples.

        After reduction den == 1 means the angle is 0 or pi and den == 2
        means +-pi/2; those four values are returned as exact units so
        that identities landing on them incur no rounding at all.
        """
        if self.den == 1:
            return 1.0 + 0.0j if self.num == 0 else -1.0 + 0.0j
        if self.den == 2:
            return 1.0j if self.num == 1 else -1.0j
        return cmath.exp(1j * math.pi * self.num / self.den)

    def __str__(self) -> str:
        if self.num == 0:
            return "0"
        if self.den == 1:
            return "π"  # num can only be 1 here
        if self.num == 1:
            return f"π/{self.den}"
        return f"{self.num}π/{self.den}"


@dataclass(frozen=True, slots=True)
class CoprimeFraction:
    """A reduced fraction M/N with 0 < M < N, encoding the angle 2*pi*M/N."""

    M: int
    N: int

    def __post_init__(self) -> None:
        if not isinstance(self.M, int) or not isinstance(self.N, int):
            raise TypeError("M and N must be integers")
        if not 0 < self.M < self.N:
            raise ValueError(f"need 0 < M < N, got M={self.M}, N={self.N}")
        g = _int_gcd(self.M, self.N)
        if g != 1:
            raise ValueError(f"M and N must be coprime (gcd = {g})")

    @property
    def n_even(self) -> bool:
        return self.N % 2 == 0

    @property
    def angle(self) -> RationalAngle:
        """2*pi*M/N as a multiple of pi."""
        return RationalAngle(2 * self.M, self.N)

    @property
    def angle_radians(self) -> float:
        return 2.0 * math.pi * self.M / self.N


@dataclass(frozen=True, slots=True)
class ExactCoefficient:
    """An exact superposition coefficient sign * exp(i*pi*phase) / sqrt(n).

    Normalized on construction: a -1 sign is folded into the phase (adding
    pi), so equality of coefficients is plain field equality.  ``inv_sqrt_n``
    stores the integer n whose inverse square root is the magnitude.
    """

    sign: int
    inv_sqrt_n: int
    phase: RationalAngle

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.inv_sqrt_n < 1:
            raise ValueError("inv_sqrt_n must be a positive integer")
        if self.sign == -1:
            object.__setattr__(self, "phase", self.phase + RationalAngle(1))
            object.__setattr__(self, "sign", 1)

    @property
    def magnitude(self) -> float:
        return 1.0 / math.sqrt(self.inv_sqrt_n)

    def to_complex(self) -> complex:
        return self.sign * self.phase.to_complex() / math.sqrt(self.inv_sqrt_n)

    def __str__(self) -> str:
        root = f"√{self.inv_sqrt_n}"
        if self.phase.num == 0:
            return f"1/{root}"
        if self.phase.den == 1:
            return f"-1/{root}"
        return f"exp(i·{self.phase})/{root}"


def gauss_coefficient_direct(f: CoprimeFraction, k: int) -> complex:
    """Coefficient c_k by plain summation.

    Each summand's exponent is reduced exactly mod 2*pi as a RationalAngle
    before the single complex evaluation, so the only floating-point error
    is the final N-term accumulation.  k is reduced mod N (c_k is periodic).
    """
    m, n = f.M, f.N
    k %= n
    total = 0.0 + 0.0j
    for ell in range(n):
        quad = m * ell * ell if f.n_even else m * ell * (ell - 1)
        total += RationalAngle(-(quad + 2 * k * ell), n).to_complex()
    return total / n


def gauss_sum_alternating(m: int, n: int) -> complex:
    """The alternating Gauss sum  sum_l (-1)^l exp(-i*pi*m*l^2/n).

    Defined for coprime odd m, n >= 1 (this is the sum that appears when
    both the numerator and the denominator of the fraction are odd).  Its
    modulus is sqrt(n).
    """
    if n < 1 or m % 2 == 0 or n % 2 == 0:
        raise ValueError("alternating sum needs odd m and odd positive n")
    if _int_gcd(m, n) != 1:
        raise ValueError("m and n must be coprime")
    total = 0.0 + 0.0j
    for ell in range(n):
        # (-1)^l folded into the exponent as n*l over the same denominator
        total += RationalAngle(-(m * ell * ell + n * ell), n).to_complex()
    return total


def _closed_term(m: int, n: int, d: int, sign0: int, k: int) -> ExactCoefficient:
    """One closed-form coefficient given d = m^{-1} mod n and the Jacobi sign."""
    if n % 2 == 0:
        # (1/sqrt N) e^{i pi (M/N)(d^2 k^2 - N/4)} (N/M)
        num = m * (4 * d * d * k * k - n)
        sign = sign0
    elif m % 2 == 0:
        # (1/sqrt N) e^{i pi (d^2 (k - M/2)^2 M/N + (N-1)/4)} (M/N)
        j = k - m // 2
        num = 4 * m * d * d * j * j + n * (n - 1)
        sign = sign0
    else:
        # ((-1)^{d (k + (N-M)/2)}/sqrt N) e^{same exponent with k + (N-M)/2} (M/N)
        j = k + (n - m) // 2
        num = 4 * m * d * d * j * j + n * (n - 1)
        sign = sign0 if (d * j) % 2 == 0 else -sign0
    if sign == -1:  # fold the sign here; saves a phase re-normalization
        num += 4 * n
        sign = 1
    return ExactCoefficient(sign, n, RationalAngle(num, 4 * n))


def gauss_coefficient_closed(f: CoprimeFraction, k: int) -> ExactCoefficient:
    """Coefficient c_k in closed form, dispatching on the parity of N and M.

    All phase arithmetic is exact: the quarter-integer terms N/4 and
    (N-1)/4 are carried over the common denominator 4N and reduced as
    integers.  k is reduced mod N.
    """
    m, n = f.M, f.N
    d = mod_inverse(m, n)
    sign0 = jacobi_symbol(n, m) if n % 2 == 0 else jacobi_symbol(m, n)
    return _closed_term(m, n, d, sign0, k % n)


def closed_coefficients(f: CoprimeFraction) -> list[ExactCoefficient]:
    """All N closed-form coefficients c_0 .. c_{N-1}.

    Same formula as :func:`gauss_coefficient_closed` with the modular
    inverse and Jacobi symbol hoisted out of the loop.
    """
    m, n = f.M, f.N
    d = mod_inverse(m, n)
    sign0 = jacobi_symbol(n, m) if n % 2 == 0 else jacobi_symbol(m, n)
    return [_closed_term(m, n, d, sign0, k) for k in range(n)]


@lru_cache(maxsize=16)
def _direct_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-denominator tables for the vectorized direct sum: the cross terms
    2*k*l mod 2n and the 2n-th roots e^{-i*pi*j/n}.  Callers must not mutate."""
    ell = np.arange(n, dtype=np.int64)
    cross = (2 * np.outer(ell, ell)) % (2 * n)
    roots = np.exp(-1j * np.pi * np.arange(2 * n) / n)
    return cross, roots


def direct_coefficients(f: CoprimeFraction) -> np.ndarray:
    """All N direct-sum coefficients at once (vectorized).

    Same summation as :func:`gauss_coefficient_direct`: every exponent is
    an exact integer multiple of pi/N, looked up in one table of the 2N-th
    roots of unity.
    """
    m, n = f.M, f.N
    ell = np.arange(n, dtype=np.int64)
    quad = (m * ell * ell) % (2 * n) if f.n_even else (m * ell * (ell - 1)) % (2 * n)
    cross, roots = _direct_tables(n)
    exponents = (quad[None, :] + cross) % (2 * n)
    return roots[exponents].sum(axis=1) / n
