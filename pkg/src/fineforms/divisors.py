"""
Divisor-class counts and the divisor-side coefficients of Fine's two products.

Single values go through trial division. The ``*_sequence`` functions are the
sweep path: they walk arithmetic progressions of divisors once for a whole
range of n instead of factoring each argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .params import FineParams, InvariantError, Level, ParameterError


@dataclass(frozen=True)
class DivisorClassQuery:
    n: int
    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ParameterError(f"n must be >= 1, got {self.n}")
        if self.modulus < 1:
            raise ParameterError(f"modulus must be >= 1, got {self.modulus}")


def divisors(n: int) -> list[int]:
    """Positive divisors of n in ascending order."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def class_count(q: DivisorClassQuery) -> int:
    """Number of positive divisors of q.n congruent to q.residue mod q.modulus."""
    target = q.residue % q.modulus
    return sum(1 for d in divisors(q.n) if d % q.modulus == target)


def excess(n: int, r: int, m: int) -> int:
    """Divisors of n that are r mod m, minus those that are -r mod m."""
    return class_count(DivisorClassQuery(n, r, m)) - class_count(
        DivisorClassQuery(n, -r, m)
    )


def fine1_argument(params: FineParams, n: int) -> int:
    p, r = params.p, params.r
    return 2 * p * n + r * (p - r)


def fine1_coefficient(params: FineParams, n: int) -> int:
    params.require(Level.STRONG)
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    return excess(fine1_argument(params, n), params.r, 2 * params.p)


def fine2_discriminant(params: FineParams, n: int) -> int:
    disc = params.p * n - params.r**2
    if disc == 0:
        # p | r^2 contradicts gcd(r, p) = 1
        raise InvariantError(f"pn - r^2 vanished at p={params.p}, r={params.r}, n={n}")
    return disc


def fine2_terms(params: FineParams, n: int) -> list[tuple[int, int]]:
    """Pairs (d, delta): d > 0, d = r mod p, d * delta = pn - r^2.

    When pn - r^2 < 0 the divisor d still runs over positive values and
    delta is negative.
    """
    params.require(Level.WEAK)
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    disc = fine2_discriminant(params, n)
    p, r = params.p, params.r
    return [(d, disc // d) for d in divisors(abs(disc)) if d % p == r]


def fine2_coefficient(params: FineParams, n: int) -> int:
    """(1/p) * sum of d + delta over :func:`fine2_terms`."""
    total = 0
    for d, delta in fine2_terms(params, n):
        if d + delta <= 0:
            raise InvariantError(
                f"non-positive summand d + delta = {d} + {delta} at {params}, n={n}"
            )
        total += d + delta
    q, rem = divmod(total, params.p)
    if rem:
        raise InvariantError(f"p={params.p} does not divide {total} at {params}, n={n}")
    return q


def fine1_sequence(params: FineParams, n_max: int) -> list[int]:
    """fine1_coefficient for n = 0..n_max without per-n factoring."""
    params.require(Level.STRONG)
    p, r = params.p, params.r
    m = 2 * p
    base = r * (p - r)
    top = m * n_max + base
    out = [0] * (n_max + 1)
    for residue, sign in ((r, 1), (m - r, -1)):
        for d in range(residue, top + 1, m):
            for v in range(d, top + 1, d):
                if (v - base) % m == 0:
                    out[(v - base) // m] += sign
    return out


def fine2_sequence(params: FineParams, n_max: int) -> list[int]:
    """fine2_coefficient for n = 1..n_max (index 0 is unused and holds 0).

    Positive discriminants are handled by pairing d = r (mod p) with every
    cofactor; the few n with pn < r^2 fall back to :func:`fine2_terms`.
    """
    params.require(Level.WEAK)
    p, r = params.p, params.r
    sums = [0] * (n_max + 1)
    top = p * n_max - r * r
    for d in range(r, top + 1, p):
        for v in range(d, top + 1, d):
            if (v + r * r) % p == 0:
                delta = v // d
                sums[(v + r * r) // p] += d + delta
    for n in range(1, n_max + 1):
        if p * n < r * r:
            sums[n] = sum(d + delta for d, delta in fine2_terms(params, n))
    out = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        q, rem = divmod(sums[n], p)
        if rem:
            raise InvariantError(f"p={p} does not divide {sums[n]} at {params}, n={n}")
        out[n] = q
    return out
