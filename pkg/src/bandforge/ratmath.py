"""Exact rational linear algebra and LP feasibility.

Scalars are :class:`fractions.Fraction`; vectors are tuples of fractions and
matrices are sequences of such tuples (row order is meaningful).  Every
routine here is exact, so rank and membership decisions are never ambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

Rational = Fraction
RatVector = tuple  # tuple[Fraction, ...]
RatMatrix = Sequence[Sequence[Fraction]]

ZERO = Fraction(0)
ONE = Fraction(1)


def vec(values) -> RatVector:
    return tuple(Fraction(v) for v in values)


def mat(rows) -> tuple:
    return tuple(vec(r) for r in rows)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), ZERO)


def matvec(m: RatMatrix, x: Sequence[Fraction]) -> RatVector:
    return tuple(dot(row, x) for row in m)


def transpose(m: RatMatrix, ncols: Optional[int] = None) -> tuple:
    if not m:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*m))


def rref(m: RatMatrix, ncols: Optional[int] = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form of ``m``.

    Returns the nonzero rows of the RREF and the list of pivot columns.
    """
    rows = [[Fraction(v) for v in r] for r in m]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [v / piv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank(m: RatMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: RatMatrix, ncols: Optional[int] = None) -> list[RatVector]:
    """Canonical basis of ``{x : m x = 0}``.

    The basis is returned in reduced row-echelon form (leading entry 1), so two
    matrices with the same kernel give identical lists.  ``ncols`` is required
    when ``m`` has no rows.
    """
    if ncols is None:
        if not m:
            raise ValueError("ncols is required for a matrix without rows")
        ncols = len(m[0])
    red, pivots = rref(m, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    raw = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        raw.append(x)
    return canonical_basis(raw, ncols)


def canonical_basis(vectors, ncols: int) -> list[RatVector]:
    """RREF basis of the span of ``vectors``; empty list for the zero space."""
    red, _ = rref(vectors, ncols)
    return [tuple(r) for r in red]


class RowSpace:
    """Row space of a matrix, reduced once, with fast membership tests."""

    def __init__(self, rows: RatMatrix, ncols: int):
        self.ncols = ncols
        self.rows, self.pivots = rref(rows, ncols)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v: Sequence[Fraction]) -> bool:
        v = [Fraction(x) for x in v]
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return not any(v)


def affine_hull_contains(points: Sequence[Sequence[Fraction]], q: Sequence[Fraction]) -> bool:
    """Whether ``q`` is an affine combination of ``points``.

    Decided by linear solvability of the homogenized system: ``(q, 1)`` must lie
    in the span of the rows ``(p, 1)``.
    """
    if not points:
        raise ValueError("affine hull of an empty point set is empty")
    n = len(q)
    if any(len(p) != n for p in points):
        raise ValueError("all points must have the dimension of q")
    space = RowSpace([tuple(p) + (ONE,) for p in points], n + 1)
    return space.contains(tuple(q) + (ONE,))


# ---------------------------------------------------------------------------
# simplex

class _Tableau:
    """Dense simplex tableau for ``max c.z  s.t.  A z = b, z >= 0`` with b >= 0."""

    def __init__(self, A: list[list[Fraction]], b: list[Fraction]):
        self.A = A
        self.b = b
        self.basis: list[int] = []

    def pivot(self, r: int, c: int, obj: list[list[Fraction]]) -> None:
        A, b = self.A, self.b
        piv = A[r][c]
        A[r] = [v / piv for v in A[r]]
        b[r] /= piv
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
                b[i] -= f * b[r]
        for row in obj:
            # row = [reduced costs..., -value]
            f = row[c]
            if f != 0:
                for j in range(len(row) - 1):
                    row[j] -= f * A[r][j]
                row[-1] -= f * b[r]
        self.basis[r] = c

    def run(self, obj: list[Fraction], allowed: int, extra: list[list[Fraction]] = ()) -> str:
        """Maximize with Bland's rule; ``obj`` holds reduced costs (positive = improving)."""
        rows = [obj] + list(extra)
        while True:
            enter = next((j for j in range(allowed) if obj[j] > 0), None)
            if enter is None:
                return "optimal"
            best = None
            for i in range(len(self.A)):
                a = self.A[i][enter]
                if a > 0:
                    ratio = self.b[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], enter, rows)


def _simplex_max(A: list[list[Fraction]], b: list[Fraction], c: list[Fraction]):
    """Two-phase simplex on ``max c.z, A z = b, z >= 0``.

    Returns ``(status, z)`` with status in {"optimal", "infeasible", "unbounded"}.
    """
    m = len(A)
    nv = len(c)
    A = [list(r) for r in A]
    b = list(b)
    for i in range(m):
        if b[i] < 0:
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]
    # phase 1: artificials nv..nv+m-1
    for i in range(m):
        A[i] = A[i] + [ONE if k == i else ZERO for k in range(m)]
    t = _Tableau(A, b)
    t.basis = [nv + i for i in range(m)]
    # maximize -sum(artificials); reduced cost of column j = sum_i A[i][j] for non-artificials
    ph1 = [sum((A[i][j] for i in range(m)), ZERO) if j < nv else ZERO for j in range(nv + m)]
    ph1.append(sum(b, ZERO))
    ph2 = [Fraction(v) for v in c] + [ZERO] * m + [ZERO]
    t.run(ph1, nv, [ph2])
    if ph1[-1] != 0:
        return "infeasible", None
    # drive remaining artificials out of the basis
    for r in range(m):
        if t.basis[r] >= nv:
            c_in = next((j for j in range(nv) if t.A[r][j] != 0), None)
            if c_in is not None:
                t.pivot(r, c_in, [ph1, ph2])
    status = t.run(ph2, nv)
    z = [ZERO] * nv
    for r, j in enumerate(t.basis):
        if j < nv:
            z[j] = t.b[r]
    return status, z


def _as_rows(m, n):
    rows = [vec(r) for r in m] if m is not None else []
    for r in rows:
        if len(r) != n:
            raise ValueError(f"row has dimension {len(r)}, expected {n}")
    return rows


def lp_feasible(
    eq: Optional[RatMatrix],
    eq_rhs: Optional[Sequence[Fraction]],
    strict_rows: Optional[RatMatrix],
    nonneg_rows: Optional[RatMatrix],
    dim: Optional[int] = None,
) -> Optional[RatVector]:
    """Find ``x`` with ``eq x = eq_rhs``, ``strict_rows x > 0``, ``nonneg_rows x >= 0``.

    Returns an exact witness or ``None`` when the system is infeasible.  Strict
    rows are handled by the usual homogenization: add ``t`` with
    ``row.x >= t``, ``t <= 1`` and maximize ``t``.
    """
    if dim is None:
        for m in (eq, strict_rows, nonneg_rows):
            if m:
                dim = len(m[0])
                break
        else:
            raise ValueError("dim is required when no constraint rows are given")
    E = _as_rows(eq, dim)
    rhs = vec(eq_rhs) if eq_rhs is not None else ()
    if len(rhs) != len(E):
        raise ValueError("eq_rhs length must match eq rows")
    S = _as_rows(strict_rows, dim)
    N = _as_rows(nonneg_rows, dim)

    # variables: x+ (dim), x- (dim), t, slacks for S, slacks for N, slack for t<=1
    has_t = bool(S)
    nt = 1 if has_t else 0
    ns, nn = len(S), len(N)
    nvar = 2 * dim + nt + ns + nn + nt
    A: list[list[Fraction]] = []
    b: list[Fraction] = []

    def row(coeffs_x, t_coef=ZERO, slack=None):
        r = [ZERO] * nvar
        for j, v in enumerate(coeffs_x):
            r[j] = v
            r[dim + j] = -v
        if has_t:
            r[2 * dim] = t_coef
        if slack is not None:
            r[slack] = -ONE
        return r

    for e, v in zip(E, rhs):
        A.append(row(e))
        b.append(v)
    base = 2 * dim + nt
    for i, s in enumerate(S):
        A.append(row(s, -ONE, base + i))  # s.x - t - slack = 0
        b.append(ZERO)
    for i, r_ in enumerate(N):
        A.append(row(r_, ZERO, base + ns + i))
        b.append(ZERO)
    c = [ZERO] * nvar
    if has_t:
        r = [ZERO] * nvar
        r[2 * dim] = ONE
        r[nvar - 1] = ONE  # t + slack = 1
        A.append(r)
        b.append(ONE)
        c[2 * dim] = ONE
    if not A:
        return tuple([ZERO] * dim)
    status, z = _simplex_max(A, b, c)
    if status != "optimal":
        return None
    if has_t and z[2 * dim] <= 0:
        return None
    return tuple(z[j] - z[dim + j] for j in range(dim))


@dataclass(frozen=True)
class FarkasCertificate:
    """Multipliers proving infeasibility of ``eq x = b, S x > 0, N x >= 0``.

    ``eq_mult`` is free, ``strict_mult`` and ``nonneg_mult`` are nonnegative,
    the combination ``E^T y + S^T s + N^T v`` vanishes and either ``b.y > 0``
    or ``b.y >= 0`` with ``s`` nonzero.
    """

    eq_mult: RatVector
    strict_mult: RatVector
    nonneg_mult: RatVector


def infeasibility_certificate(eq, eq_rhs, strict_rows, nonneg_rows, dim: int) -> Optional[FarkasCertificate]:
    """Solve the alternative system (Motzkin transposition) for a certificate.

    Returns ``None`` if no certificate exists, i.e. the primal system is feasible.
    """
    E = _as_rows(eq, dim)
    rhs = vec(eq_rhs) if eq_rhs is not None else ()
    S = _as_rows(strict_rows, dim)
    N = _as_rows(nonneg_rows, dim)
    ne, ns, nn = len(E), len(S), len(N)
    k = ne + ns + nn
    if k == 0:
        return None
    # unknowns (y, s, v); equations: sum of multiplied rows = 0 componentwise
    cols = [E[i] for i in range(ne)] + [S[i] for i in range(ns)] + [N[i] for i in range(nn)]
    combo = [tuple(cols[i][j] for i in range(k)) for j in range(dim)]
    sign_rows = [tuple(ONE if i == ne + t else ZERO for i in range(k)) for t in range(ns + nn)]
    by = tuple(list(rhs) + [ZERO] * (ns + nn))

    def split(w):
        return FarkasCertificate(tuple(w[:ne]), tuple(w[ne:ne + ns]), tuple(w[ne + ns:]))

    # case b.y = 1
    w = lp_feasible(list(combo) + [by], [ZERO] * dim + [ONE], None, sign_rows, dim=k)
    if w is not None:
        return split(w)
    if ns:
        ssum = tuple(ONE if ne <= i < ne + ns else ZERO for i in range(k))
        w = lp_feasible(list(combo) + [ssum], [ZERO] * dim + [ONE], None, sign_rows + [by], dim=k)
        if w is not None:
            return split(w)
    return None


def check_certificate(cert: FarkasCertificate, eq, eq_rhs, strict_rows, nonneg_rows, dim: int) -> bool:
    """Recheck a certificate by substitution."""
    E = _as_rows(eq, dim)
    rhs = vec(eq_rhs) if eq_rhs is not None else ()
    S = _as_rows(strict_rows, dim)
    N = _as_rows(nonneg_rows, dim)
    if (len(cert.eq_mult), len(cert.strict_mult), len(cert.nonneg_mult)) != (len(E), len(S), len(N)):
        return False
    if any(v < 0 for v in cert.strict_mult) or any(v < 0 for v in cert.nonneg_mult):
        return False
    for j in range(dim):
        total = sum((y * r[j] for y, r in zip(cert.eq_mult, E)), ZERO)
        total += sum((s * r[j] for s, r in zip(cert.strict_mult, S)), ZERO)
        total += sum((v * r[j] for v, r in zip(cert.nonneg_mult, N)), ZERO)
        if total != 0:
            return False
    by = dot(cert.eq_mult, rhs) if E else ZERO
    return by > 0 or (by >= 0 and any(cert.strict_mult))


def check_witness(x, eq, eq_rhs, strict_rows, nonneg_rows) -> bool:
    dim = len(x)
    E = _as_rows(eq, dim)
    rhs = vec(eq_rhs) if eq_rhs is not None else ()
    return (
        all(dot(r, x) == v for r, v in zip(E, rhs))
        and all(dot(r, x) > 0 for r in _as_rows(strict_rows, dim))
        and all(dot(r, x) >= 0 for r in _as_rows(nonneg_rows, dim))
    )
