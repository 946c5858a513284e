"""Parameter pairs (p, r) and the error types shared across the package."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd


class ParameterError(ValueError):
    """Inputs violate a hypothesis (range or gcd condition)."""


class InvariantError(RuntimeError):
    """An internal invariant failed. Always a bug, never a domain error."""


class Level(enum.IntEnum):
    """How much of the arithmetic hypothesis a pair (p, r) satisfies.

    Ordered so that ``params.level >= Level.WEAK`` reads naturally.
    """

    FORMAL = 0  # only 0 < r < p; the products still exist as formal series
    WEAK = 1  # gcd(r, p) == 1
    STRONG = 2  # gcd(r, 2p) == 1


def level_of(p: int, r: int) -> Level:
    if gcd(r, 2 * p) == 1:
        return Level.STRONG
    if gcd(r, p) == 1:
        return Level.WEAK
    return Level.FORMAL


@dataclass(frozen=True)
class FineParams:
    """A pair (p, r) with 0 < r < p, tagged with its hypothesis level.

    The level defaults to the strongest one the pair satisfies. Asking for a
    level the pair does not meet raises :class:`ParameterError`.
    """

    p: int
    r: int
    level: Level = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        p, r = self.p, self.r
        if not isinstance(p, int) or not isinstance(r, int):
            raise ParameterError(f"p and r must be integers, got {p!r}, {r!r}")
        if p < 2:
            raise ParameterError(f"p must be >= 2, got {p}")
        if not 0 < r < p:
            raise ParameterError(f"need 0 < r < p, got p={p}, r={r}")
        actual = level_of(p, r)
        if self.level is None:
            object.__setattr__(self, "level", actual)
        else:
            wanted = Level(self.level)
            object.__setattr__(self, "level", wanted)
            if actual < wanted:
                raise ParameterError(_violation(p, r, wanted))

    def require(self, level: Level) -> None:
        if self.level < level:
            raise ParameterError(_violation(self.p, self.r, level))

    @property
    def strong(self) -> bool:
        return self.level >= Level.STRONG

    def as_dict(self) -> dict:
        return {"p": self.p, "r": self.r, "level": self.level.name.lower()}


def _violation(p: int, r: int, level: Level) -> str:
    if level >= Level.STRONG:
        return f"gcd(r, 2p) = gcd({r}, {2 * p}) = {gcd(r, 2 * p)}, need 1"
    return f"gcd(r, p) = gcd({r}, {p}) = {gcd(r, p)}, need 1"


def valid_pairs(p_max: int, level: Level, p_min: int = 2) -> list[FineParams]:
    """All pairs with p_min <= p <= p_max meeting ``level``, ordered by (p, r)."""
    out = []
    for p in range(max(p_min, 2), p_max + 1):
        for r in range(1, p):
            if level_of(p, r) >= level:
                out.append(FineParams(p, r))
    return out
