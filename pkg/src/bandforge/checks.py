"""Structural invariants of an instance, evaluated exhaustively.

Each check returns a :class:`CheckResult`; ``run_all`` is what ``bandforge
check`` prints.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bands as bd
from .cone import LambdaSet
from .satcore import (
    IndexSet,
    enumerate_bisaturated,
    enumerate_saturated,
    is_bisaturated_pair,
    partner,
    saturate,
)

# subsets of Lambda are enumerated in full only up to this size
SUBSET_LIMIT = 12


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def bound_exponent(dim: int):
    """``e`` with ``2^e = 2^(2^dim) / 4``, the band-count bound for ``dim >= 2``; ``None`` below."""
    if dim < 2:
        return None
    return 2 ** dim - 2


def within_bound(count: int, dim: int) -> bool:
    e = bound_exponent(dim)
    if e is None:
        return True
    bl = count.bit_length()
    return bl <= e or (bl == e + 1 and count == 1 << e)


def bound_text(dim: int) -> str:
    e = bound_exponent(dim)
    if e is None:
        return "n/a"
    return str(1 << e) if e <= 64 else f"2^{e}"


def _subsets(lam: LambdaSet):
    size = len(lam)
    if size <= SUBSET_LIMIT:
        return [IndexSet.from_mask(x, size) for x in range(1 << size)]
    return list(enumerate_saturated(lam))


def _first_failure(name, items, pred, fmt=lambda m: str(m.one_based())):
    for item in items:
        if not pred(item):
            return CheckResult(name, False, f"fails at {fmt(item)}")
    return CheckResult(name, True)


def check_closure_laws(lam: LambdaSet) -> CheckResult:
    subsets = _subsets(lam)

    def ok(m):
        s = saturate(m, lam)
        if not m.issubset(s) or saturate(s, lam) != s:
            return False
        return all(
            s.issubset(saturate(m | IndexSet.of([j], m.size), lam)) for j in range(m.size) if j not in m
        )

    return _first_failure("closure laws (extensive, idempotent, monotone)", subsets, ok)


def check_galois(lam: LambdaSet) -> CheckResult:
    return _first_failure(
        "N(Z(M)) = sat(M)", _subsets(lam), lambda m: bd.n_of(bd.zero_set(m, lam), lam) == saturate(m, lam)
    )


def check_zero_set_of_saturation(lam: LambdaSet) -> CheckResult:
    return _first_failure(
        "Z(sat(M)) = Z(M)", _subsets(lam), lambda m: bd.zero_set(saturate(m, lam), lam) == bd.zero_set(m, lam)
    )


def check_oracle_equivalence(lam: LambdaSet) -> CheckResult:
    def ok(m):
        b = bd.zero_set(m, lam)
        return bd.is_band(b, lam) == bd.is_band_via_bisaturation(b, lam)

    return _first_failure("B^dd = B agrees with bisaturation", enumerate_saturated(lam), ok)


def check_pairs(lam: LambdaSet) -> CheckResult:
    full = IndexSet.full(len(lam))

    def ok(m):
        p = partner(m, lam)
        return (m | p) == full and partner(p, lam) == m and is_bisaturated_pair(m, p, lam)

    return _first_failure("partner involution and M1 ∪ M2 = Lambda", enumerate_bisaturated(lam), ok)


def check_complement_duality(lam: LambdaSet) -> CheckResult:
    def ok(m):
        lhs = bd.disjoint_complement(bd.zero_set(m, lam), lam)
        return lhs == bd.zero_set(saturate(m.complement(), lam), lam)

    return _first_failure("B^d = Z(sat(N(B)^c))", enumerate_bisaturated(lam), ok)


def check_band_pairing(lam: LambdaSet) -> CheckResult:
    by_space = {bd.zero_set(m, lam): m for m in enumerate_bisaturated(lam)}

    def ok(item):
        space, m = item
        comp = bd.disjoint_complement(space, lam)
        return by_space.get(comp) == partner(m, lam) and bd.disjoint_complement(comp, lam) == space

    return _first_failure(
        "B -> B^d is an involution on bands", by_space.items(), ok, fmt=lambda it: str(it[1].one_based())
    )


def check_bound(lam: LambdaSet) -> CheckResult:
    count = len(enumerate_bisaturated(lam))
    if bound_exponent(lam.dim) is None:
        return CheckResult("band count bound", True, f"{count} bands; no bound below dimension 2")
    return CheckResult("band count bound", within_bound(count, lam.dim), f"{count} <= {bound_text(lam.dim)}")


ALL_CHECKS = (
    check_closure_laws,
    check_galois,
    check_zero_set_of_saturation,
    check_oracle_equivalence,
    check_pairs,
    check_complement_duality,
    check_band_pairing,
    check_bound,
)


def run_all(lam: LambdaSet) -> list[CheckResult]:
    return [check(lam) for check in ALL_CHECKS]
