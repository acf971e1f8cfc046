"""Exact arithmetic in Z[i].

Everything here is integer-exact: norms, unit normalization, factorization
into Gaussian primes, enumeration of ideals of a given norm, and the
angular characters

    xi_k(a) = (alpha/|alpha|)^k = e^{i k theta_a},   k = 0 mod 4,

which are well defined on ideals precisely because k is a multiple of 4.

Ideals of Z[i] are represented by their canonical generator: the unique
unit multiple with re > 0 and im >= 0.  That convention is fixed
project-wide so that enumerations sort deterministically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

__all__ = [
    "GaussianElement",
    "CanonicalIdeal",
    "GaussianFactorization",
    "ZERO",
    "ONE",
    "I",
    "UNITS",
    "norm",
    "canonicalize",
    "theta",
    "xi_k",
    "factor_gaussian",
    "ideals_of_norm",
    "ideals_of_norm_from_factorization",
    "gaussian_prime_above",
    "factorize",
    "primes_up_to",
]

# Factorization machinery: a primes table grown on demand.  Trial division
# by primes <= 1e7 certifies factorizations of inputs up to 1e14; beyond
# that we refuse rather than silently degrade.
_SIEVE_CAP = 10**7
_FACTOR_CAP = 10**14

_primes: np.ndarray = np.array([], dtype=np.int64)
_sieve_limit = 0


def primes_up_to(limit: int) -> np.ndarray:
    """All primes <= limit, cached and grown geometrically."""
    global _primes, _sieve_limit
    if limit > _SIEVE_CAP:
        raise ValueError(f"prime table capped at {_SIEVE_CAP}, requested {limit}")
    if limit > _sieve_limit:
        new_limit = min(_SIEVE_CAP, max(limit, 4 * _sieve_limit, 10**5))
        sieve = np.ones(new_limit + 1, dtype=bool)
        sieve[:2] = False
        for p in range(2, math.isqrt(new_limit) + 1):
            if sieve[p]:
                sieve[p * p :: p] = False
        _primes = np.nonzero(sieve)[0].astype(np.int64)
        _sieve_limit = new_limit
    return _primes[: np.searchsorted(_primes, limit, side="right")]


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {p: exponent}, by trial division.

    Certified for n <= 1e14 (primes up to 1e7 are tried); larger inputs
    raise rather than return a possibly incomplete factorization.
    """
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    if n > _FACTOR_CAP:
        raise ValueError(f"factorization input {n} exceeds supported bound {_FACTOR_CAP}")
    out: dict[int, int] = {}
    if n == 1:
        return out
    limit = min(math.isqrt(n), _SIEVE_CAP)
    for p in primes_up_to(max(limit, 2)):
        p = int(p)
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
        if n == 1:
            break
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class GaussianElement:
    """A Gaussian integer re + im*i with arbitrary-precision coordinates."""

    re: int
    im: int

    def __add__(self, other: "GaussianElement") -> "GaussianElement":
        return GaussianElement(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianElement") -> "GaussianElement":
        return GaussianElement(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianElement") -> "GaussianElement":
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianElement(a * c - b * d, a * d + b * c)

    def __neg__(self) -> "GaussianElement":
        return GaussianElement(-self.re, -self.im)

    def __pow__(self, k: int) -> "GaussianElement":
        if k < 0:
            raise ValueError("negative powers leave Z[i]")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "GaussianElement":
        return GaussianElement(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @property
    def norm(self) -> int:
        return self.re * self.re + self.im * self.im


ZERO = GaussianElement(0, 0)
ONE = GaussianElement(1, 0)
I = GaussianElement(0, 1)
UNITS = (ONE, I, -ONE, -I)


def norm(alpha: GaussianElement) -> int:
    """N(alpha) = re^2 + im^2, exactly."""
    return alpha.norm


def _is_canonical(alpha: GaussianElement) -> bool:
    return alpha.re > 0 and alpha.im >= 0


@dataclass(frozen=True)
class CanonicalIdeal:
    """A nonzero ideal of Z[i], held by its canonical generator.

    gen is the unique unit multiple of any generator with re > 0, im >= 0;
    norm is cached.  Two Gaussian integers generate the same CanonicalIdeal
    iff they differ by a unit.
    """

    gen: GaussianElement
    norm: int

    def __post_init__(self):
        if not _is_canonical(self.gen):
            raise ValueError(f"generator {self.gen} is not canonical")
        if self.norm != self.gen.norm:
            raise ValueError("cached norm disagrees with generator")

    @staticmethod
    def of(alpha: GaussianElement) -> "CanonicalIdeal":
        ideal, _ = canonicalize(alpha)
        return ideal

    def conjugate(self) -> "CanonicalIdeal":
        return CanonicalIdeal.of(self.gen.conjugate())

    def __mul__(self, other: "CanonicalIdeal") -> "CanonicalIdeal":
        return CanonicalIdeal.of(self.gen * other.gen)

    def sort_key(self) -> tuple[int, int]:
        return (self.gen.re, self.gen.im)


def canonicalize(alpha: GaussianElement) -> tuple[CanonicalIdeal, GaussianElement]:
    """Canonical ideal of alpha together with the unit u such that u*gen = alpha.

    Raises ValueError on zero: (0) is not counted among the ideals here.
    """
    if alpha.is_zero():
        raise ValueError("zero generates no ideal")
    for unit in UNITS:
        candidate = unit * alpha  # unit^{-1} * alpha as unit runs over all units
        if _is_canonical(candidate):
            # candidate = unit * alpha, so alpha = unit^{-1} * candidate.
            inverse = unit.conjugate()  # units have norm 1
            return CanonicalIdeal(candidate, candidate.norm), inverse
    raise AssertionError("exactly one unit multiple must be canonical")


def theta(ideal: CanonicalIdeal) -> float:
    """Argument of the canonical generator, in [0, pi/2).  Plain float."""
    return math.atan2(ideal.gen.im, ideal.gen.re)


def xi_k(ideal: CanonicalIdeal, k: int) -> complex:
    """e^{i k theta} for k = 0 mod 4, via exact integer powering.

    gen^k is computed exactly and normalized by N(gen)^{k/2} (an exact
    integer since k is even) in a single floating division, so no angular
    round-off compounds with k.
    """
    if k % 4 != 0:
        raise ValueError("xi_k is defined on ideals only for k = 0 mod 4")
    if k == 0:
        return complex(1.0, 0.0)
    if k < 0:
        return xi_k(ideal, -k).conjugate()
    power = ideal.gen ** k
    denom = ideal.norm ** (k // 2)
    return complex(
        float(Fraction(power.re, denom)),
        float(Fraction(power.im, denom)),
    )


def _sqrt_minus_one_mod(p: int) -> int:
    """A square root of -1 mod p for p = 1 mod 4."""
    for a in range(2, p):
        z = pow(a, (p - 1) // 4, p)
        if (z * z) % p == p - 1:
            return z
    raise AssertionError(f"no sqrt(-1) found mod {p}; is {p} = 1 mod 4 prime?")


@lru_cache(maxsize=None)
def gaussian_prime_above(p: int) -> CanonicalIdeal:
    """The canonical Gaussian prime of norm p, for p = 2 or p = 1 mod 4.

    Split primes are found by Cornacchia descent: run the Euclidean
    algorithm on (p, sqrt(-1) mod p) down to the first remainder below
    sqrt(p); that remainder and its partner are the two squares.
    """
    if p == 2:
        return CanonicalIdeal.of(GaussianElement(1, 1))
    if p % 4 != 1:
        raise ValueError(f"{p} is not split in Z[i]")
    x = _sqrt_minus_one_mod(p)
    a, b = p, x
    bound = math.isqrt(p)
    while b > bound:
        a, b = b, a % b
    c2 = p - b * b
    c = math.isqrt(c2)
    if c * c != c2:
        raise AssertionError(f"Cornacchia descent failed for {p}")
    return CanonicalIdeal.of(GaussianElement(b, c))


def _exact_divide(alpha: GaussianElement, d: GaussianElement) -> GaussianElement | None:
    """alpha/d if d | alpha in Z[i], else None."""
    n = d.norm
    prod = alpha * d.conjugate()
    if prod.re % n or prod.im % n:
        return None
    return GaussianElement(prod.re // n, prod.im // n)


@dataclass(frozen=True)
class GaussianFactorization:
    """unit * prod(prime^exponent) = the factored element, exactly.

    Primes are canonical generators, sorted by (norm, re, im); split primes
    and their conjugates appear as separate entries.
    """

    unit: GaussianElement
    factors: tuple[tuple[CanonicalIdeal, int], ...]

    def expand(self) -> GaussianElement:
        out = self.unit
        for prime, e in self.factors:
            out = out * prime.gen ** e
        return out


def factor_gaussian(alpha: GaussianElement) -> GaussianFactorization:
    """Complete factorization of alpha != 0 into canonical Gaussian primes."""
    if alpha.is_zero():
        raise ValueError("cannot factor zero")
    n = alpha.norm
    rational = factorize(n)
    beta = alpha
    factors: list[tuple[CanonicalIdeal, int]] = []
    for p in sorted(rational):
        e_norm = rational[p]
        if p == 2:
            pi = gaussian_prime_above(2)
            for _ in range(e_norm):
                beta = _exact_divide(beta, pi.gen)
                assert beta is not None
            factors.append((pi, e_norm))
        elif p % 4 == 3:
            if e_norm % 2:
                raise AssertionError(f"odd exponent of inert prime {p} in a norm")
            q = CanonicalIdeal.of(GaussianElement(p, 0))
            for _ in range(e_norm // 2):
                beta = _exact_divide(beta, q.gen)
                assert beta is not None
            factors.append((q, e_norm // 2))
        else:
            pi = gaussian_prime_above(p)
            pibar = pi.conjugate()
            e1 = 0
            while True:
                nxt = _exact_divide(beta, pi.gen)
                if nxt is None:
                    break
                beta = nxt
                e1 += 1
            e2 = e_norm - e1
            for _ in range(e2):
                beta = _exact_divide(beta, pibar.gen)
                assert beta is not None
            if e1:
                factors.append((pi, e1))
            if e2:
                factors.append((pibar, e2))
    assert beta in UNITS, "a unit must remain after removing all primes"
    factors.sort(key=lambda pe: (pe[0].norm, pe[0].gen.re, pe[0].gen.im))
    return GaussianFactorization(unit=beta, factors=tuple(factors))


def ideals_of_norm_from_factorization(fac: dict[int, int]) -> tuple[CanonicalIdeal, ...]:
    """All canonical ideals whose norm has the given prime factorization.

    Split-prime exponents distribute freely between the two conjugate
    primes; ramified and inert exponents are forced (inert must be even,
    else there is no ideal).  Sorted lexicographically on (re, im).
    """
    gens = [ONE]
    for p in sorted(fac):
        e = fac[p]
        if p % 4 == 3:
            if e % 2:
                return ()
            q = GaussianElement(p, 0) ** (e // 2)
            gens = [g * q for g in gens]
        elif p == 2:
            r = gaussian_prime_above(2).gen ** e
            gens = [g * r for g in gens]
        else:
            pi = gaussian_prime_above(p).gen
            pibar = pi.conjugate()
            choices = [pi**j * pibar ** (e - j) for j in range(e + 1)]
            gens = [g * ch for g in gens for ch in choices]
    ideals = [CanonicalIdeal.of(g) for g in gens]
    ideals.sort(key=CanonicalIdeal.sort_key)
    return tuple(ideals)


def ideals_of_norm(n: int) -> tuple[CanonicalIdeal, ...]:
    """All canonical ideals of norm exactly n, sorted on (re, im) of gen."""
    if n < 1:
        raise ValueError("ideal norms are positive")
    return ideals_of_norm_from_factorization(factorize(n))
