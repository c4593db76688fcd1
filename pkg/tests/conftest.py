import random
from fractions import Fraction

import pytest

from bandforge import cone, gen, ratmath


def random_cone(rng: random.Random, max_dim=4, max_m=8):
    """A valid random cone with small integer functionals (many coincidences)."""
    while True:
        n = rng.randint(1, max_dim)
        m = rng.randint(n, max_m)
        unit = tuple(Fraction(rng.randint(1, 3)) for _ in range(n))
        funcs = [tuple(rng.choice((-1, 0, 0, 1, 1, 2)) for _ in range(n)) for _ in range(m)]
        funcs = [f for f in funcs if ratmath.dot(f, unit) > 0]
        if not funcs or ratmath.rank(funcs) < n:
            continue
        return cone.ConeSpec(n, unit, funcs)


def random_subspace(rng: random.Random, n: int):
    from bandforge.bands import Subspace

    k = rng.randint(0, n)
    return Subspace.span([[rng.randint(-2, 2) for _ in range(n)] for _ in range(k)], n)


@pytest.fixture(scope="session")
def ex49():
    return cone.extreme_points(gen.example49())


@pytest.fixture(scope="session")
def cube():
    return cone.extreme_points(gen.cube_apex())


def lattice(n):
    return cone.extreme_points(gen.standard_lattice(n))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        ok, detail = RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}  ({detail})")
