"""Fermat triples a^2 + b^2 = c^4, minimality predicates, and the counting
functions attached to them.

Two minimality notions drive everything:

  * (4,4,2)-minimal ("minimal"): no prime l with l^4 | a, l^4 | b, l^2 | c.
  * (2,2,1)-minimal; "twist minimal" adds c > 0.

Every minimal triple is uniquely a twist (e^2 a, e^2 b, e c) of a twist
minimal triple by a squarefree integer e (of either sign), which is why the
per-c counts below carry the whole enumeration.

Counting functions (per-c / per-|c| triple counts):

  * f(c)   - twist minimal triples with this exact c;
  * g(n)   - minimal triples with |c| = n, both signs of c;
  * f_t(c) - twist minimal triples with given twist-minimality defect t.

Each has a brute enumeration path (the oracle) and an arithmetic fast path;
the two must agree exactly, and tests enforce that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Literal

from . import gaussian
from .gaussian import CanonicalIdeal, GaussianElement, factorize, ideals_of_norm_from_factorization

__all__ = [
    "TMD",
    "FermatTriple",
    "MinimalityFlags",
    "ArithFnTable",
    "is_fermat",
    "is_weighted_minimal",
    "is_twist_minimal",
    "is_minimal",
    "twist_minimal_for_c",
    "twist_minimal_ideals_for_c",
    "minimal_triples_abs_c",
    "minimal_ideals_abs_c",
    "f_count",
    "g_count",
    "g_count_formula",
    "f_t_count",
    "squarefree",
    "twist_decomposition",
    "brute_force_twist_minimal_for_c",
]

# The eight possible twist-minimality defects of a twist minimal triple.
TMD = (1, 2, 5, 10, 25, 50, 125, 250)


@dataclass(frozen=True)
class FermatTriple:
    """An integer solution of a^2 + b^2 = c^4 with c != 0 (checked)."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.c == 0 or self.a * self.a + self.b * self.b != self.c**4:
            raise ValueError(f"({self.a}, {self.b}, {self.c}) is not a Fermat triple")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def twist(self, e: int) -> "FermatTriple":
        return FermatTriple(e * e * self.a, e * e * self.b, e * self.c)


@dataclass(frozen=True)
class MinimalityFlags:
    is_442_minimal: bool
    is_221_minimal: bool
    is_twist_minimal: bool

    @staticmethod
    def of(tr: FermatTriple) -> "MinimalityFlags":
        m221 = is_weighted_minimal(tr.a, tr.b, tr.c, (2, 2, 1))
        return MinimalityFlags(
            is_442_minimal=is_weighted_minimal(tr.a, tr.b, tr.c, (4, 4, 2)),
            is_221_minimal=m221,
            is_twist_minimal=m221 and tr.c > 0,
        )


def is_fermat(a: int, b: int, c: int) -> bool:
    return c != 0 and a * a + b * b == c**4


def _divides_at(prime: int, exponent: int, value: int) -> bool:
    """prime^exponent | value, with 0 divisible by everything."""
    if value == 0:
        return True
    return value % prime**exponent == 0


def is_weighted_minimal(a: int, b: int, c: int, weights: tuple[int, int, int]) -> bool:
    """No prime l has l^wa | a, l^wb | b and l^wc | c.

    Zero coordinates count as divisible by everything, so e.g.
    (0, 625, 25) fails (4,4,2)-minimality at l = 5.
    """
    wa, wb, wc = weights
    if a == 0 and b == 0 and c == 0:
        return False
    if c != 0:
        candidates = [p for p, e in factorize(abs(c)).items() if e >= wc]
    else:
        g = math.gcd(a, b)  # not both zero here unless a = b = 0 handled above
        if g == 0:
            return False
        candidates = list(factorize(g))
    for p in candidates:
        if _divides_at(p, wa, a) and _divides_at(p, wb, b):
            return False
    return True


def is_twist_minimal(a: int, b: int, c: int) -> bool:
    return c > 0 and is_fermat(a, b, c) and is_weighted_minimal(a, b, c, (2, 2, 1))


def is_minimal(a: int, b: int, c: int) -> bool:
    return is_fermat(a, b, c) and is_weighted_minimal(a, b, c, (4, 4, 2))


def _unit_orbit(alpha: GaussianElement) -> list[tuple[int, int]]:
    pairs = []
    beta = alpha
    for _ in range(4):
        pairs.append((beta.re, beta.im))
        beta = gaussian.I * beta
    return pairs


def twist_minimal_ideals_for_c(c: int) -> tuple[CanonicalIdeal, ...]:
    """Canonical ideals of norm c^4 whose triples are twist minimal.

    (2,2,1)-minimality is unit-invariant, so this is well defined on
    ideals.  Built from the factorization of c, never of c^4.
    """
    if c < 1:
        raise ValueError("c must be positive")
    fac = {p: 4 * e for p, e in factorize(c).items()}
    out = []
    for ideal in ideals_of_norm_from_factorization(fac):
        if is_weighted_minimal(ideal.gen.re, ideal.gen.im, c, (2, 2, 1)):
            out.append(ideal)
    return tuple(out)


def twist_minimal_for_c(c: int) -> tuple[FermatTriple, ...]:
    """All twist minimal triples with this exact c, sorted by (a, b)."""
    triples = []
    for ideal in twist_minimal_ideals_for_c(c):
        for a, b in _unit_orbit(ideal.gen):
            triples.append(FermatTriple(a, b, c))
    triples.sort(key=lambda t: (t.a, t.b))
    return tuple(triples)


def brute_force_twist_minimal_for_c(c: int) -> tuple[FermatTriple, ...]:
    """Independent oracle: scan all (a, b) on the circle a^2 + b^2 = c^4."""
    n4 = c**4
    triples = []
    for a in range(-math.isqrt(n4), math.isqrt(n4) + 1):
        b2 = n4 - a * a
        b = math.isqrt(b2)
        if b * b != b2:
            continue
        for bb in {b, -b}:
            if is_weighted_minimal(a, bb, c, (2, 2, 1)):
                triples.append(FermatTriple(a, bb, c))
    triples.sort(key=lambda t: (t.a, t.b))
    return tuple(triples)


def minimal_ideals_abs_c(n: int) -> tuple[CanonicalIdeal, ...]:
    """Canonical ideals of norm n^4 whose triples are (4,4,2)-minimal."""
    if n < 1:
        raise ValueError("n must be positive")
    fac = {p: 4 * e for p, e in factorize(n).items()}
    out = []
    for ideal in ideals_of_norm_from_factorization(fac):
        if is_weighted_minimal(ideal.gen.re, ideal.gen.im, n, (4, 4, 2)):
            out.append(ideal)
    return tuple(out)


def minimal_triples_abs_c(n: int) -> tuple[FermatTriple, ...]:
    """All (4,4,2)-minimal triples with |c| = n, both signs of c.

    Sorted by (c, a, b).  Each qualifying ideal contributes its 4 unit
    multiples for each sign of c, 8 triples in all.
    """
    triples = []
    for ideal in minimal_ideals_abs_c(n):
        for a, b in _unit_orbit(ideal.gen):
            for c in (-n, n):
                triples.append(FermatTriple(a, b, c))
    triples.sort(key=lambda t: (t.c, t.a, t.b))
    return tuple(triples)


def _all_factors_1_mod_4(fac: dict[int, int]) -> bool:
    return all(p % 4 == 1 for p in fac)


def f_count(c: int, method: Literal["fast", "enumerate"] = "fast") -> int:
    """Number of twist minimal triples with this c.

    Fast path: f(c)/4 is multiplicative with f(p^r)/4 = 4 at every prime
    power of a prime p = 1 mod 4, and f vanishes as soon as c has a prime
    factor not 1 mod 4.  Oracle path: enumerate.
    """
    if c < 1:
        raise ValueError("c must be positive")
    if method == "enumerate":
        return len(twist_minimal_for_c(c))
    fac = factorize(c)
    if not _all_factors_1_mod_4(fac):
        return 0
    return 4 ** (len(fac) + 1)


def squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for e in factorize(abs(n)).values())


def g_count(n: int, method: Literal["enumerate", "twist"] = "enumerate") -> int:
    """Number of minimal triples with |c| = n (direct enumeration).

    The 'twist' method counts pairs (twist minimal triple, squarefree e of
    either sign) with |e| c0 = n; it agrees with enumeration and is the
    faster route for bulk counts.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if method == "enumerate":
        return len(minimal_triples_abs_c(n))
    total = 0
    for e in range(1, n + 1):
        if n % e == 0 and squarefree(e):
            total += 2 * f_count(n // e)
    return total


def g_count_formula(n: int) -> int:
    """The convolution value 4 * (mu^2 star f)(n).

    Kept as a comparison path only: it disagrees with direct enumeration by
    a factor of 2 (g(1) = 8 by enumeration, 16 by this formula), so counts
    never rely on it.
    """
    total = 0
    for e in range(1, n + 1):
        if n % e == 0 and squarefree(e):
            total += f_count(n // e)
    return 4 * total


def f_t_count(c: int, t: int, method: Literal["fast", "enumerate"] = "fast") -> int:
    """Twist minimal triples with this c whose curve has defect exactly t.

    Oracle path classifies enumerated triples by the defect of their
    Weierstrass model.  Fast path is the arithmetic of the defect: writing
    w for the number of distinct prime factors of c,

      t in {1, 2}:     needs all p = 1 mod 4; value 2 * 4^(w - [5|c]) * 2^[5|c]
      t in {5, 10}:    needs ord_5(c) = 1;    value 2 * f_{t/5}(c / 5)
      t in {25..250}:  needs ord_5(c) >= 2;   value f_{t/5^v}(c / 5^ord_5(c))

    The defect splits each ideal's four unit triples two against two by
    the parity of b, which is where the leading 2 comes from.
    """
    if t not in TMD:
        raise ValueError(f"t must lie in {TMD}")
    if c < 1:
        raise ValueError("c must be positive")
    if method == "enumerate":
        from . import curves  # deferred: curves imports this module

        return sum(1 for tr in twist_minimal_for_c(c) if curves.twmind(tr.a, tr.b, tr.c) == t)

    fac = factorize(c)
    if not _all_factors_1_mod_4(fac):
        return 0
    k5 = fac.get(5, 0)
    w_rest = len(fac) - (1 if k5 else 0)
    if t in (1, 2):
        return 2 * 4**w_rest * (2 if k5 else 1)
    if t in (5, 10):
        if k5 != 1:
            return 0
        return 2 * (2 * 4**w_rest)
    # t in {25, 50, 125, 250}
    if k5 < 2:
        return 0
    return 2 * 4**w_rest


def twist_decomposition(tr: FermatTriple) -> tuple[FermatTriple, int]:
    """The unique (twist minimal triple, squarefree e) with tr = triple.twist(e).

    e carries the sign of c; its squarefreeness is forced by
    (4,4,2)-minimality of minimal inputs (non-minimal inputs still
    decompose, with e the full (2,2,1) content).
    """
    m = 1
    for p, e in factorize(abs(tr.c)).items():
        k = 0
        while (
            k < e
            and tr.a % p ** (2 * (k + 1)) == 0
            and tr.b % p ** (2 * (k + 1)) == 0
        ):
            k += 1
        m *= p**k
    e_signed = m if tr.c > 0 else -m
    base = FermatTriple(tr.a // (m * m), tr.b // (m * m), tr.c // e_signed)
    return base, e_signed


@dataclass
class ArithFnTable:
    """Evaluated arithmetic counting function over a range of arguments.

    kind is 'f', 'g', 'f_t' or 'g_t_u'; values maps argument -> count;
    provenance records which path produced each entry.  Where both paths
    were run for one argument they must agree exactly (enforced on insert).
    """

    kind: str
    values: dict[int, int] = field(default_factory=dict)
    provenance: dict[int, str] = field(default_factory=dict)

    def insert(self, arg: int, value: int, provenance: str) -> None:
        if arg in self.values and self.values[arg] != value:
            raise ValueError(
                f"{self.kind}({arg}): {provenance} path gives {value}, "
                f"{self.provenance[arg]} path gave {self.values[arg]}"
            )
        if arg not in self.values:
            self.values[arg] = value
            self.provenance[arg] = provenance
        elif self.provenance[arg] != provenance:
            self.provenance[arg] = "both"

    @staticmethod
    def for_f(args: Iterable[int], oracle_up_to: int = 0) -> "ArithFnTable":
        table = ArithFnTable(kind="f")
        for c in args:
            table.insert(c, f_count(c), "multiplicative-fast-path")
            if c <= oracle_up_to:
                table.insert(c, f_count(c, "enumerate"), "oracle-enumeration")
        return table
