"""Built-in instances: lattices, the five-functional R^4 example, the cube with
an apex, and random point sets in general linear position.

Random instances use NumPy's PCG64 bit generator, so a given ``(n, seed)``
always produces the same cone.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import ratmath
from .cone import ConeSpec, is_extreme

COORD_RANGE = 10_000
COORD_DENOM = 10_000
DEFAULT_RETRIES = 1000


class GenerationFailed(RuntimeError):
    pass


class Kind(str, Enum):
    STANDARD_LATTICE = "standard_lattice"
    EXAMPLE49 = "example49"
    CUBE_APEX = "cube_apex"
    GENERAL_POSITION = "general_position"


@dataclass(frozen=True)
class GeneratorRecipe:
    kind: Kind
    n: int = 0
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.kind in (Kind.STANDARD_LATTICE, Kind.GENERAL_POSITION) and self.n < 1:
            raise ValueError(f"{self.kind.value} needs n >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")

    def build(self) -> ConeSpec:
        if self.kind is Kind.STANDARD_LATTICE:
            return standard_lattice(self.n)
        if self.kind is Kind.EXAMPLE49:
            return example49()
        if self.kind is Kind.CUBE_APEX:
            return cube_apex()
        return general_position(self.n, self.seed)


def standard_lattice(n: int) -> ConeSpec:
    """``R^n`` with the positive orthant and unit ``(1, ..., 1)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    return ConeSpec(n, (1,) * n, rows)


def example49() -> ConeSpec:
    return ConeSpec(
        4,
        (Fraction(1, 4),) * 4,
        [
            (0, 2, 1, 1),
            (2, 0, 1, 1),
            (1, 1, 0, 2),
            (1, 1, 2, 0),
            (4, 0, 0, 0),
        ],
    )


CUBE_APEX_VERTICES = (
    (0, 0, 0),
    (1, 0, 0),
    (1, 1, 0),
    (0, 1, 0),
    (0, 0, 1),
    (1, 0, 1),
    (1, 1, 1),
    (0, 1, 1),
    (Fraction(1, 2), Fraction(1, 2), 2),
)


def cube_apex() -> ConeSpec:
    """Cone over the unit cube with a pyramid on top (apex above the top face's centre).

    Functionals are ``(v_i, 1)`` for the nine vertices, unit ``(0, 0, 0, 1)``.
    """
    return ConeSpec(
        4,
        (0, 0, 0, 1),
        [tuple(v) + (1,) for v in CUBE_APEX_VERTICES],
        tuple(f"v{i + 1}" for i in range(9)),
    )


def in_general_position(points) -> bool:
    """No ``k + 2`` points in a common ``k``-flat for ``k`` below the ambient dimension.

    Equivalent to: every ``min(len, n + 1)``-subset is affinely independent.
    """
    n = len(points[0])
    size = min(len(points), n + 1)
    for sub in combinations(points, size):
        if ratmath.rank([tuple(p) + (1,) for p in sub]) < size:
            return False
    return True


def in_convex_position(points) -> bool:
    """Whether every point is a vertex of the convex hull."""
    return all(is_extreme(i, points) for i in range(len(points)))


def origin_interior(points) -> bool:
    """Whether 0 is a strictly positive convex combination of ``points``.

    Together with affine spanning this puts 0 in the interior of the hull.
    """
    n = len(points[0])
    k = len(points)
    eq = [tuple(p[c] for p in points) for c in range(n)] + [(1,) * k]
    rhs = (0,) * n + (1,)
    strict = [tuple(int(a == b) for b in range(k)) for a in range(k)]
    return ratmath.lp_feasible(eq, rhs, strict, None, dim=k) is not None


def general_position(n: int, seed: int, retries: int = DEFAULT_RETRIES) -> ConeSpec:
    """``2n`` random rational points in ``R^n`` lifted to functionals ``(v_i, 1)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    for _ in range(retries):
        raw = rng.integers(-COORD_RANGE, COORD_RANGE, size=(2 * n, n), endpoint=True)
        points = [tuple(Fraction(int(v), COORD_DENOM) for v in row) for row in raw]
        if len(set(points)) < len(points):
            continue
        if in_general_position(points) and in_convex_position(points) and origin_interior(points):
            return ConeSpec(
                n + 1,
                (0,) * n + (1,),
                [p + (1,) for p in points],
                tuple(f"w{i + 1}" for i in range(2 * n)),
            )
    raise GenerationFailed(f"no admissible configuration for n={n}, seed={seed} in {retries} draws")
