"""
Multi-route verification of the Fine identities over finite ranges.

Each ``verify_*`` function compares independently computed integer sequences
index by index and returns a :class:`VerificationReport`. Mismatches do not
stop the sweep; the report keeps the first one and a total.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import divisors as dv
from . import quadform as qf
from . import series as ps
from .params import FineParams, InvariantError, Level, ParameterError, valid_pairs

IDENTITIES = ("fine1", "fine2", "thm1", "thm2", "cor1", "cor2", "andrews")

DIRECT_ORACLE_LIMIT = 60


@dataclass(frozen=True)
class VerificationReport:
    identity_id: str
    params: FineParams | str
    n_range: tuple[int, int]
    order: int
    checked_count: int
    failures: int = 0
    first_failure: dict | None = None
    notes: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if self.failures == 0 else "fail"

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def as_dict(self) -> dict:
        params = self.params if isinstance(self.params, str) else self.params.as_dict()
        return {
            "identity": self.identity_id,
            "params": params,
            "range": list(self.n_range),
            "order": self.order,
            "status": self.status,
            "checked_count": self.checked_count,
            "failures": self.failures,
            "first_failure": self.first_failure,
            "notes": self.notes,
        }


class Verdict(enum.Enum):
    BALANCED = "balanced"
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class Classification:
    n: int
    parity: qf.ParityCounts
    excess_value: int
    verdict: Verdict

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "even": self.parity.even,
            "odd": self.parity.odd,
            "excess": self.excess_value,
            "verdict": self.verdict.value,
        }


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


_VERDICTS = {0: Verdict.BALANCED, 1: Verdict.POSITIVE, -1: Verdict.NEGATIVE}


def _compare(
    identity: str,
    params: FineParams | str,
    lo: int,
    hi: int,
    routes: dict[str, Sequence[int] | Callable[[int], int]],
    notes: dict | None = None,
) -> VerificationReport:
    failures = 0
    first = None
    for n in range(lo, hi + 1):
        values = {
            name: (route(n) if callable(route) else route[n])
            for name, route in routes.items()
        }
        if len(set(values.values())) > 1:
            failures += 1
            if first is None:
                first = {"n": n, **values}
    return VerificationReport(
        identity, params, (lo, hi), hi, hi - lo + 1, failures, first, notes or {}
    )


def verify_fine1(params: FineParams, n_max: int) -> VerificationReport:
    params.require(Level.STRONG)
    product = ps.fine_product(params, n_max)
    return _compare(
        "fine1", params, 0, n_max,
        {"product": product, "divisor": lambda n: dv.fine1_coefficient(params, n)},
    )


def verify_thm1(params: FineParams, n_max: int) -> VerificationReport:
    params.require(Level.STRONG)
    return _compare(
        "thm1", params, 0, n_max,
        {
            "divisor": lambda n: dv.fine1_coefficient(params, n),
            "divisor_sieve": dv.fine1_sequence(params, n_max),
            "cone": qf.signed_series(params, n_max),
            "product": ps.fine_product(params, n_max),
        },
    )


def _negative_discriminants(params: FineParams, n_max: int) -> list[int]:
    # the only n where a signed reading of d * delta = pn - r^2 could differ
    return [n for n in range(1, n_max + 1) if params.p * n < params.r**2]


def verify_fine2(params: FineParams, n_max: int) -> VerificationReport:
    params.require(Level.WEAK)
    if n_max < 1:
        raise ParameterError(f"n-max must be >= 1, got {n_max}")
    lhs = ps.shifted_square(ps.fine_product(params, n_max), params.r)
    return _compare(
        "fine2", params, 1, n_max,
        {"product": lhs, "divisor": lambda n: dv.fine2_coefficient(params, n)},
        {"negative_discriminant_n": _negative_discriminants(params, n_max)},
    )


def verify_thm2(params: FineParams, n_max: int) -> VerificationReport:
    """Divisor sum == q^r F^2 == quaternary cone count (plus direct oracle for small n)."""
    params.require(Level.WEAK)
    if n_max < params.r:
        raise ParameterError(f"n-max must be >= r = {params.r}, got {n_max}")
    product_side = ps.shifted_square(ps.fine_product(params, n_max), params.r)
    cone_side = qf.quaternary_series(params, n_max)
    oracle_limit = min(n_max, DIRECT_ORACLE_LIMIT)
    routes = {
        "divisor": lambda n: dv.fine2_coefficient(params, n),
        "divisor_sieve": dv.fine2_sequence(params, n_max),
        "product": product_side,
        "cone": cone_side,
        "cone_direct": lambda n: (
            qf.quaternary_parity_direct(params, n).signed
            if n <= oracle_limit else cone_side[n]
        ),
    }
    return _compare(
        "thm2", params, 1, n_max, routes,
        {
            "direct_oracle_up_to": oracle_limit,
            "negative_discriminant_n": _negative_discriminants(params, n_max),
        },
    )


def classify(params: FineParams, n: int) -> Classification:
    params.require(Level.STRONG)
    parity = qf.parity_counts(params, n)
    value = dv.fine1_coefficient(params, n)
    if parity.signed != value:
        raise InvariantError(
            f"even - odd = {parity.signed} but excess = {value} at {params}, n={n}"
        )
    return Classification(n, parity, value, _VERDICTS[_sign(value)])


def verify_cor1(params: FineParams, n_max: int) -> VerificationReport:
    """Verdict, parity balance and excess sign must tell the same story."""
    params.require(Level.STRONG)
    failures = 0
    first = None
    balanced = 0
    for n in range(n_max + 1):
        parity = qf.parity_counts(params, n)
        value = dv.fine1_coefficient(params, n)
        verdict = _VERDICTS[_sign(value)]
        ok = (
            parity.signed == value
            and _VERDICTS[_sign(parity.signed)] is verdict
            and (verdict is Verdict.BALANCED) == (parity.total == 0 or parity.even == parity.odd)
        )
        balanced += verdict is Verdict.BALANCED
        if not ok:
            failures += 1
            if first is None:
                first = {"n": n, "even": parity.even, "odd": parity.odd, "excess": value}
    return VerificationReport(
        "cor1", params, (0, n_max), n_max, n_max + 1, failures, first,
        {"balanced_count": balanced},
    )


def verify_cor2(params: FineParams, n_max: int) -> VerificationReport:
    """Quaternary signed count is non-negative and every d + delta is positive."""
    params.require(Level.WEAK)
    counts = qf.quaternary_series(params, n_max)
    failures = 0
    first = None
    for n in range(1, n_max + 1):
        problem = None
        if counts[n] < 0:
            problem = {"n": n, "quaternary": counts[n]}
        else:
            bad = [t for t in dv.fine2_terms(params, n) if t[0] + t[1] <= 0]
            if bad:
                problem = {"n": n, "non_positive_terms": bad}
        if problem:
            failures += 1
            first = first or problem
    zeros = [n for n in range(1, n_max + 1) if counts[n] == 0]
    return VerificationReport(
        "cor2", params, (1, n_max), n_max, n_max, failures, first,
        {"zero_n": zeros[:20], "zero_count": len(zeros)},
    )


def verify_andrews(order: int, half_width: int) -> VerificationReport:
    product = qf.andrews_product(order, half_width)
    total = qf.andrews_sum(order, half_width)
    failures = 0
    first = None
    checked = 0
    for (i, e), value in product.trusted_items():
        checked += 1
        other = total.coefficient(i, e)
        if value != other:
            failures += 1
            if first is None:
                first = {"q_exp": i, "z_exp": e, "product": value, "sum": other}
    return VerificationReport(
        "andrews", "bivariate", (0, order), order, checked, failures, first,
        {"half_width": half_width, "trusted_half_width": product.trusted_half_width},
    )


def verify(identity: str, params: FineParams | None, n_max: int) -> VerificationReport:
    """Dispatch by identity name; ``andrews`` ignores params and uses L = 2N + 2."""
    if identity == "andrews":
        return verify_andrews(n_max, 2 * n_max + 2)
    if params is None:
        raise ParameterError(f"identity {identity!r} needs --p and --r")
    table = {
        "fine1": verify_fine1,
        "fine2": verify_fine2,
        "thm1": verify_thm1,
        "thm2": verify_thm2,
        "cor1": verify_cor1,
        "cor2": verify_cor2,
    }
    if identity not in table:
        raise ParameterError(f"unknown identity {identity!r}")
    return table[identity](params, n_max)


STRONG_IDENTITIES = ("fine1", "thm1", "cor1")
WEAK_IDENTITIES = ("fine2", "thm2", "cor2")


def sweep(p_max: int, n_max: int, andrews_order: int = 20) -> dict[str, VerificationReport]:
    """Every identity over every valid (p, r) with p <= p_max, keyed by cell."""
    reports: dict[str, VerificationReport] = {}
    for params in valid_pairs(p_max, Level.WEAK):
        names = WEAK_IDENTITIES + (STRONG_IDENTITIES if params.strong else ())
        for name in names:
            if name == "thm2" and n_max < params.r:
                continue
            reports[f"{name}:p={params.p},r={params.r}"] = verify(name, params, n_max)
    reports["andrews"] = verify_andrews(andrews_order, 2 * andrews_order + 2)
    return reports
