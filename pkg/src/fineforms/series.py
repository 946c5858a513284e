"""
Truncated integer power series in q.

Coefficients are exact and confined to the signed 64-bit range. Arithmetic
runs on numpy int64 whenever an a-priori bound proves it cannot wrap, and
otherwise falls back to Python integers; either way a true coefficient outside
the range raises :class:`CoefficientOverflow`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .params import FineParams

INT64_MAX = 2**63 - 1


class CoefficientOverflow(OverflowError):
    pass


def checked(x: int) -> int:
    if not -INT64_MAX <= x <= INT64_MAX:
        raise CoefficientOverflow(f"coefficient {x} leaves the signed 64-bit range")
    return x


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients of q^0 .. q^order."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be >= 0, got {self.order}")
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(coeffs)}"
            )
        for c in coeffs:
            checked(c)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_list(cls, coeffs: Sequence[int]) -> PowerSeries:
        return cls(len(coeffs) - 1, tuple(coeffs))

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return PowerSeries(order, self.coeffs[: order + 1])

    def to_list(self) -> list[int]:
        return list(self.coeffs)


@dataclass(frozen=True)
class ProductFactor:
    """The factor (1 - q^stride) ** exponent."""

    stride: int
    exponent: int

    def __post_init__(self) -> None:
        if self.stride < 1:
            raise ValueError(f"stride must be >= 1, got {self.stride}")


def _array(s: PowerSeries) -> np.ndarray:
    return np.array(s.coeffs, dtype=np.int64)


def _peak(a: np.ndarray) -> int:
    return int(np.abs(a).max()) if a.size else 0


def _from_array(order: int, a: Iterable[int]) -> PowerSeries:
    return PowerSeries(order, tuple(int(x) for x in a))


def constant(c: int, order: int) -> PowerSeries:
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    return PowerSeries(order, (c,) + (0,) * order)


def multiply(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to the common order."""
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    n = a.order
    x, y = _array(a), _array(b)
    if _peak(x) * _peak(y) * (n + 1) <= INT64_MAX:
        return _from_array(n, np.convolve(x, y)[: n + 1])
    ca, cb = a.coeffs, b.coeffs
    out = [sum(ca[i] * cb[k - i] for i in range(k + 1)) for k in range(n + 1)]
    return PowerSeries(n, tuple(checked(c) for c in out))


def square(s: PowerSeries) -> PowerSeries:
    return multiply(s, s)


def _times_binomial(c: np.ndarray, a: int) -> np.ndarray:
    # c * (1 - q^a)
    if 2 * _peak(c) > INT64_MAX:
        out = [int(v) for v in c]
        for i in range(len(out) - 1, a - 1, -1):
            out[i] = checked(out[i] - int(c[i - a]))
        return np.array(out, dtype=np.int64)
    out = c.copy()
    out[a:] -= c[:-a]
    return out


def _divide_binomial(c: np.ndarray, a: int) -> np.ndarray:
    # c / (1 - q^a): running sums along each residue class mod a
    size = len(c)
    rows = -(-size // a)
    if _peak(c) * rows > INT64_MAX:
        out = [int(v) for v in c]
        for i in range(a, size):
            out[i] = checked(out[i] + out[i - a])
        return np.array(out, dtype=np.int64)
    padded = np.zeros(rows * a, dtype=np.int64)
    padded[:size] = c
    return np.cumsum(padded.reshape(rows, a), axis=0).reshape(-1)[:size]


def apply_factor(s: PowerSeries, f: ProductFactor) -> PowerSeries:
    """Multiply ``s`` by (1 - q^stride) ** exponent."""
    return apply_factors(s, [f])


def apply_factors(s: PowerSeries, factors: Iterable[ProductFactor]) -> PowerSeries:
    c = _array(s)
    for f in factors:
        if f.stride > s.order:
            continue
        step = _times_binomial if f.exponent > 0 else _divide_binomial
        for _ in range(abs(f.exponent)):
            c = step(c, f.stride)
    return _from_array(s.order, c)


def fine_factors(params: FineParams, order: int) -> list[ProductFactor]:
    """Every factor of the Fine product whose stride is at most ``order``.

    For n = 1, 2, ...: (1-q^{pn})^2, (1-q^{pn-r})^{-1}, (1-q^{pn-p+r})^{-1}.
    """
    p, r = params.p, params.r
    out = []
    n = 1
    while p * n - max(r, p - r) <= order:
        for stride, e in ((p * n, 2), (p * n - r, -1), (p * n - p + r, -1)):
            if stride <= order:
                out.append(ProductFactor(stride, e))
        n += 1
    return out


def fine_product(params: FineParams, order: int) -> PowerSeries:
    """Expansion of prod_{n>=1} (1-q^{pn})^2 / ((1-q^{pn-r})(1-q^{pn-p+r})).

    Only 0 < r < p is needed for the formal product; gcd conditions belong to
    whoever reads the coefficients arithmetically.
    """
    return apply_factors(constant(1, order), fine_factors(params, order))


def shift(s: PowerSeries, r: int) -> PowerSeries:
    """Multiply by q^r, dropping what falls past the order."""
    if r < 0 or r > s.order:
        raise ValueError(f"shift {r} outside 0..{s.order}")
    return PowerSeries(s.order, (0,) * r + s.coeffs[: s.order + 1 - r])


def shifted_square(s: PowerSeries, r: int) -> PowerSeries:
    """q^r * s^2; all zero when r exceeds the order."""
    if r > s.order:
        return constant(0, s.order)
    return shift(square(s), r)
