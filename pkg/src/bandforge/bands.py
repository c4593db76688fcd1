"""Bands of a polyhedral ordered space, computed from index sets of extreme points.

Two ways to decide bandhood are kept apart on purpose: :func:`is_band` uses the
double disjoint complement directly, :func:`is_band_via_bisaturation` uses the
zero-set/bisaturation characterization.  They must agree on every subspace.

Directedness: a band is directed exactly when ``B = (B ∩ K) - (B ∩ K)``, i.e.
when the polyhedral cone ``B ∩ K`` spans ``B``.  The span of ``B ∩ K`` is cut
out of ``B`` by the implicit equalities of the cone (functionals that vanish on
all of ``B ∩ K``), which are found by one LP per functional.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import ratmath
from .cone import LambdaSet
from .ratmath import dot, vec
from .satcore import (
    IndexSet,
    enumerate_bisaturated,
    is_bisaturated,
    partner,
    saturate,
)


@dataclass(frozen=True)
class Subspace:
    """Linear subspace stored by its RREF basis; the empty basis is ``{0}``."""

    basis: tuple
    ambient_dim: int

    @classmethod
    def span(cls, vectors: Sequence[Sequence], ambient_dim: int) -> "Subspace":
        return cls(tuple(ratmath.canonical_basis([vec(v) for v in vectors], ambient_dim)), ambient_dim)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls.span([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls((), n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, x: Sequence) -> bool:
        return ratmath.RowSpace(self.basis, self.ambient_dim).contains(vec(x))

    def issubset(self, other: "Subspace") -> bool:
        space = ratmath.RowSpace(other.basis, other.ambient_dim)
        return all(space.contains(b) for b in self.basis)


@dataclass(frozen=True)
class Band:
    space: Subspace
    n_set: IndexSet
    carrier: IndexSet
    directed: bool
    partner_n_set: IndexSet

    @property
    def dim(self) -> int:
        return self.space.dim


def zero_set(m: IndexSet, lam: LambdaSet) -> Subspace:
    """Joint kernel of the functionals indexed by ``m``."""
    rows = [lam.functionals[i] for i in m]
    return Subspace(tuple(ratmath.kernel_basis(rows, lam.dim)), lam.dim)


def n_of(b: Subspace, lam: LambdaSet) -> IndexSet:
    """Indices of the functionals vanishing on all of ``b``."""
    return IndexSet.of(
        (j for j, f in enumerate(lam.functionals) if all(dot(f, v) == 0 for v in b.basis)),
        len(lam),
    )


def carrier(b: Subspace, lam: LambdaSet) -> IndexSet:
    return n_of(b, lam).complement()


def disjoint_complement(b: Subspace, lam: LambdaSet) -> Subspace:
    """``b^d``: vectors on which every functional of the carrier of ``b`` vanishes."""
    return zero_set(carrier(b, lam), lam)


def is_band(b: Subspace, lam: LambdaSet) -> bool:
    """``b^dd == b``, compared as canonical bases."""
    return disjoint_complement(disjoint_complement(b, lam), lam) == b


def is_band_via_bisaturation(b: Subspace, lam: LambdaSet) -> bool:
    n = n_of(b, lam)
    return zero_set(n, lam) == b and is_bisaturated(n, lam)


def is_directed(b: Subspace, cone) -> bool:
    """Whether ``b ∩ K`` spans ``b``.

    ``cone`` is anything with ``functionals`` describing K (a ConeSpec or a
    LambdaSet; both define the same cone).
    """
    k = b.dim
    if k == 0:
        return True
    # restrict each functional to coordinates w.r.t. the basis of b
    restricted = [tuple(dot(f, v) for v in b.basis) for f in cone.functionals]
    implicit = [
        r for r in restricted
        if any(r) and ratmath.lp_feasible(None, None, [r], restricted, dim=k) is None
    ]
    span_dim = k - (ratmath.rank(implicit) if implicit else 0)
    return span_dim == k


def vectors_disjoint(x: Sequence, y: Sequence, lam: LambdaSet) -> bool:
    x, y = vec(x), vec(y)
    if len(x) != lam.dim or len(y) != lam.dim:
        raise ValueError("vector dimension does not match the space")
    return all(dot(f, x) == 0 or dot(f, y) == 0 for f in lam.functionals)


def make_band(n_set: IndexSet, lam: LambdaSet) -> Band:
    """Band record for a bisaturated index set."""
    space = zero_set(n_set, lam)
    return Band(
        space=space,
        n_set=n_set,
        carrier=n_set.complement(),
        directed=is_directed(space, lam),
        partner_n_set=partner(n_set, lam),
    )


def all_bands(lam: LambdaSet, cap=None) -> list[Band]:
    return [make_band(s, lam) for s in enumerate_bisaturated(lam, cap)]


def extension_carriers(b: Band, lam: LambdaSet) -> tuple[IndexSet, IndexSet]:
    """Carriers of the two extensions of ``b`` to the lattice ``R^|Lambda|``.

    Returns ``(proc_i, proc_ii)``: extending via ``(B^d)^d`` gives the carrier
    ``sat(car B)``; extending via the double complement of ``B`` itself gives
    ``car B`` unchanged, since every subset of a finite set is regularly open.
    """
    return saturate(b.carrier, lam), b.carrier

