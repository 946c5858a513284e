"""
The indefinite form Q(k, l) = p(k^2 - l^2)/2 + p(k + l)/2 - l r on k >= |l|.

Everything runs in cone coordinates s = k + l, t = k - l (s, t >= 0, same
parity), where

    2 Q = s (p - r) + t (p s + r),

so Q is increasing in both s and t and the search region for Q <= N is the
finite triangle-like set s (p - r) + t (p s + r) <= 2N.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .params import FineParams, InvariantError, Level, ParameterError
from .series import PowerSeries, checked, shifted_square


@dataclass(frozen=True)
class Representation:
    k: int
    l: int
    sign: int

    def __post_init__(self) -> None:
        if self.k < abs(self.l):
            raise ValueError(f"({self.k}, {self.l}) is outside the cone k >= |l|")
        if self.sign != (1 if (self.k + self.l) % 2 == 0 else -1):
            raise ValueError(f"sign {self.sign} does not match (-1)^(k+l)")

    @classmethod
    def at(cls, k: int, l: int) -> Representation:
        return cls(k, l, 1 if (k + l) % 2 == 0 else -1)


@dataclass(frozen=True)
class ParityCounts:
    even: int
    odd: int

    @property
    def total(self) -> int:
        return self.even + self.odd

    @property
    def signed(self) -> int:
        return self.even - self.odd


def to_cone(k: int, l: int) -> tuple[int, int]:
    return k + l, k - l


def from_cone(s: int, t: int) -> tuple[int, int]:
    if s < 0 or t < 0 or (s - t) % 2:
        raise ValueError(f"({s}, {t}) is not a same-parity non-negative pair")
    return (s + t) // 2, (s - t) // 2


def q_value(params: FineParams, k: int, l: int) -> int:
    p, r = params.p, params.r
    twice = p * (k * k - l * l) + p * (k + l) - 2 * l * r
    if twice % 2:
        raise InvariantError(f"odd 2Q at (k, l) = ({k}, {l})")
    return checked(twice // 2)


def representations(params: FineParams, n: int) -> list[Representation]:
    """All cone points with Q(k, l) = n, sorted by (k, l).

    Since p*s*t <= 2n, one of s, t is at most isqrt(2n/p); scan both small
    coordinates and solve the linear equation for the other.
    """
    if n < 0:
        return []
    p, r = params.p, params.r
    twice = 2 * n
    bound = isqrt(twice // p)
    points = set()
    for s in range(min(bound, twice // (p - r)) + 1):
        t, rem = divmod(twice - s * (p - r), p * s + r)
        if rem == 0 and (s - t) % 2 == 0:
            points.add((s, t))
    for t in range(min(bound, twice // r) + 1):
        s, rem = divmod(twice - t * r, p * t + p - r)
        if rem == 0 and (s - t) % 2 == 0:
            points.add((s, t))
    found = [Representation.at(*from_cone(s, t)) for s, t in points]
    return sorted(found, key=lambda rep: (rep.k, rep.l))


def parity_counts(params: FineParams, n: int) -> ParityCounts:
    even = odd = 0
    for rep in representations(params, n):
        if rep.sign > 0:
            even += 1
        else:
            odd += 1
    return ParityCounts(even, odd)


def signed_series(params: FineParams, order: int) -> PowerSeries:
    """Sum of (-1)^(k+l) q^Q(k,l) over the cone, truncated at ``order``.

    One sweep over the (s, t) region; the sign is (-1)^s since k + l = s.
    """
    if order < 0:
        raise ParameterError(f"order must be >= 0, got {order}")
    p, r = params.p, params.r
    coeffs = [0] * (order + 1)
    limit = 2 * order
    s = 0
    while s * (p - r) <= limit:
        sign = -1 if s % 2 else 1
        step = p * s + r
        twice = s * (p - r) + (s % 2) * step
        while twice <= limit:
            if twice % 2:
                raise InvariantError(f"odd 2Q in sweep at s={s}")
            coeffs[twice // 2] += sign
            twice += 2 * step
        s += 1
    return PowerSeries(order, tuple(coeffs))


def quaternary_series(params: FineParams, order: int) -> PowerSeries:
    """q^r times the square of :func:`signed_series`."""
    params.require(Level.WEAK)
    return shifted_square(signed_series(params, order), params.r)


def quaternary_signed_count(params: FineParams, n: int) -> int:
    """Signed count of cone-pair quadruples with Q1 + Q2 + r = n (series route)."""
    params.require(Level.WEAK)
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if n < params.r:
        return 0
    return quaternary_series(params, n)[n]


def quaternary_parity_direct(params: FineParams, n: int) -> ParityCounts:
    """Enumerate the quadruples one by one and tally them by parity.

    Small-n oracle for the series route: cost grows like the square of the
    number of cone points below n.
    """
    params.require(Level.WEAK)
    target = n - params.r
    if target < 0:
        return ParityCounts(0, 0)
    reps = [representations(params, m) for m in range(target + 1)]
    even = odd = 0
    for m1 in range(target + 1):
        for a in reps[m1]:
            for b in reps[target - m1]:
                if (a.k + a.l + b.k + b.l) % 2 == 0:
                    even += 1
                else:
                    odd += 1
    return ParityCounts(even, odd)


@dataclass(frozen=True)
class BivariateSeries:
    """Coefficients c[i][j] of q^i z^(j - half_width), 0 <= i <= q_order.

    Exponents with |z-exponent| <= trusted_half_width are certified exact.
    """

    q_order: int
    half_width: int
    coeffs: tuple[tuple[int, ...], ...]
    trusted_half_width: int

    def __post_init__(self) -> None:
        if self.trusted_half_width + self.q_order > self.half_width:
            raise ValueError("trusted half-width exceeds the contamination bound")
        if len(self.coeffs) != self.q_order + 1 or any(
            len(row) != 2 * self.half_width + 1 for row in self.coeffs
        ):
            raise ValueError("coefficient grid has the wrong shape")

    def coefficient(self, q_exp: int, z_exp: int) -> int:
        if not 0 <= q_exp <= self.q_order or abs(z_exp) > self.half_width:
            raise IndexError(f"q^{q_exp} z^{z_exp} is outside the tracked window")
        return self.coeffs[q_exp][z_exp + self.half_width]

    def trusted_items(self):
        """Yield ((q_exp, z_exp), coefficient) over the certified region."""
        t = self.trusted_half_width
        for i in range(self.q_order + 1):
            for e in range(-t, t + 1):
                yield (i, e), self.coeffs[i][e + self.half_width]


def _check_window(order: int, half_width: int) -> None:
    if order < 0:
        raise ParameterError(f"q-order must be >= 0, got {order}")
    if half_width < 2 * order + 2:
        raise ParameterError(
            f"z half-width {half_width} too small for q-order {order}; need >= {2 * order + 2}"
        )


def _freeze(grid: np.ndarray, order: int, half_width: int) -> BivariateSeries:
    rows = tuple(tuple(checked(int(x)) for x in row) for row in grid)
    return BivariateSeries(order, half_width, rows, half_width - order)


def andrews_product(order: int, half_width: int) -> BivariateSeries:
    """prod_{n>=1} (1-q^n)^2 / ((1 - z q^n)(1 - z^-1 q^(n-1))) in a z-window.

    The n = 1 term of the second denominator is the pure-z factor
    1 / (1 - z^-1), expanded in non-positive powers of z. Anything pushed below
    the window can climb back by at most ``order`` z-steps (each costs a power
    of q), hence the trusted half-width ``half_width - order``.
    """
    _check_window(order, half_width)
    width = 2 * half_width + 1
    c = np.zeros((order + 1, width), dtype=object)
    c[0, half_width] = 1
    # 1 / (1 - z^-1): running sum from the top of the window downward
    c = np.cumsum(c[:, ::-1], axis=1)[:, ::-1]
    for n in range(1, order + 1):
        for _ in range(2):  # (1 - q^n)^2
            c[n:] = c[n:] - c[:-n]
        for i in range(n, order + 1):  # 1 / (1 - z q^n)
            c[i, 1:] += c[i - n, :-1]
        for i in range(n, order + 1):  # 1 / (1 - z^-1 q^n)
            c[i, :-1] += c[i - n, 1:]
    return _freeze(c, order, half_width)


def andrews_sum(order: int, half_width: int) -> BivariateSeries:
    """Sum of (-1)^(k+l) z^l q^((k^2-l^2)/2 + (k+l)/2) over k >= |l|.

    In cone coordinates the q-exponent is s(t+1)/2 and the z-exponent (s-t)/2.
    With s = 0 the q-exponent vanishes for every t, so t is cut by the window.
    """
    _check_window(order, half_width)
    c = np.zeros((order + 1, 2 * half_width + 1), dtype=object)
    for t in range(0, 2 * half_width + 1, 2):
        c[0, half_width - t // 2] += 1
    s = 1
    while s <= 2 * order:
        sign = -1 if s % 2 else 1
        t = s % 2
        while s * (t + 1) <= 2 * order:
            z = (s - t) // 2
            if abs(z) <= half_width:
                c[s * (t + 1) // 2, z + half_width] += sign
            t += 2
        s += 1
    return _freeze(c, order, half_width)
