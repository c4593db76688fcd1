import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bandforge import cone, gen
from bandforge.cone import (
    ConeSpec,
    ParseError,
    SomeFunctionalNonpositiveOnUnit,
    dumps_cone,
    extreme_points,
    loads_cone,
    normalize,
    validate,
)
from bandforge.ratmath import dot

from conftest import random_cone

Q = Fraction(1, 4)


def test_normalize_example49_unchanged():
    spec = gen.example49()
    assert normalize(spec).functionals == spec.functionals


def test_normalize_rescales():
    spec = ConeSpec(4, (Q,) * 4, [(8, 0, 0, 0)])
    assert normalize(spec).functionals == ((4, 0, 0, 0),)


def test_normalize_collapses_projective_duplicates():
    spec = ConeSpec(2, (1, 1), [(1, 0), (2, 0), (0, 1)])
    out = normalize(spec)
    assert out.functionals == ((1, 0), (0, 1))
    assert out.source_indices == (0, 2)
    assert out.labels == ("phi1", "phi3")


def test_normalize_rejects_nonpositive():
    with pytest.raises(SomeFunctionalNonpositiveOnUnit) as exc:
        normalize(ConeSpec(2, (1, 1), [(1, 0), (-1, 0)]))
    assert exc.value.index == 1


def test_validate_examples():
    assert validate(gen.example49()).valid
    assert validate(gen.example49()).rank == 4
    bad = validate(ConeSpec(2, (1, 1), [(1, 0)]))
    assert not bad.valid and bad.rank == 1
    assert bad.line_certificate is not None and dot((1, 0), bad.line_certificate) == 0
    for n in (1, 2, 5):
        assert validate(gen.standard_lattice(n)).valid


def test_validate_empty_interior_certificate():
    # x1 >= 0 and -x1 >= 0: rank 2 with x2 rows, but no interior point
    spec = ConeSpec(2, (1, 1), [(1, 0), (-1, 0), (0, 1)])
    report = validate(spec)
    assert not report.valid
    assert report.nonpositive == [(1, -1)]
    cert = report.interior_certificate
    assert cert is not None
    combo = [sum(s * f[j] for s, f in zip(cert.strict_mult, spec.functionals)) for j in range(2)]
    assert combo == [0, 0] and any(cert.strict_mult)


def test_extreme_points_examples():
    lam = extreme_points(gen.example49())
    assert len(lam) == 5
    assert lam.labels == ("phi1", "phi2", "phi3", "phi4", "phi5")
    f = gen.example49().functionals
    mid = tuple((a + b) / 2 for a, b in zip(f[0], f[1]))
    lam6 = extreme_points(ConeSpec(4, (Q,) * 4, list(f) + [mid]))
    assert lam6.functionals == lam.functionals
    assert len(extreme_points(gen.standard_lattice(4))) == 4


def test_cube_apex_all_vertices_survive():
    assert len(extreme_points(gen.cube_apex())) == 9


def _sample(rng, n):
    return tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(n))


@pytest.mark.parametrize("seed", range(25))
def test_extreme_points_properties(seed):
    rng = random.Random(seed)
    spec = random_cone(rng)
    lam = extreme_points(spec)
    # idempotent
    again = extreme_points(cone.lambda_as_spec(lam))
    assert again.functionals == lam.functionals
    # same cone on 200 samples
    for _ in range(200):
        x = _sample(rng, spec.dim)
        assert all(dot(f, x) >= 0 for f in spec.functionals) == all(dot(f, x) >= 0 for f in lam.functionals)
    # relabeling: permuting the input permutes the output the same way
    perm = list(range(spec.m))
    rng.shuffle(perm)
    shuffled = extreme_points(ConeSpec(spec.dim, spec.unit, [spec.functionals[i] for i in perm]))
    assert set(shuffled.functionals) == set(lam.functionals)
    order = [spec.functionals[i] for i in perm]
    normed = [tuple(v / dot(f, spec.unit) for v in f) for f in order]
    assert list(shuffled.functionals) == [g for g in dict.fromkeys(normed) if g in set(lam.functionals)]
    # rescaling any raw functional leaves Lambda unchanged
    scaled = []
    for f in spec.functionals:
        c = Fraction(rng.randint(1, 7), rng.randint(1, 7))
        scaled.append(tuple(v * c for v in f))
    assert extreme_points(ConeSpec(spec.dim, spec.unit, scaled)).functionals == lam.functionals


def test_example49_cone_from_lambda_matches_on_samples():
    rng = random.Random(7)
    spec = gen.example49()
    lam = extreme_points(spec)
    for _ in range(200):
        x = _sample(rng, 4)
        assert all(dot(f, x) >= 0 for f in spec.functionals) == all(dot(f, x) >= 0 for f in lam.functionals)


# -- file format


def test_roundtrip_example49():
    text = dumps_cone(gen.example49())
    assert loads_cone(text) == gen.example49()
    assert dumps_cone(loads_cone(text)) == text


rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 10**6)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(rationals, min_size=n, max_size=n),
    st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=1, max_size=5),
)))
def test_roundtrip_is_identity(data):
    n, unit, funcs = data
    spec = ConeSpec(n, unit, funcs)
    once = loads_cone(dumps_cone(spec))
    assert once == spec
    assert loads_cone(dumps_cone(once)) == once


@pytest.mark.parametrize("text", [
    "not json",
    '{"dim": 2, "unit": ["1", "1"]}',
    '{"dim": 2, "unit": ["1", "1"], "functionals": [["1", "0.5"]]}',
    '{"dim": 2, "unit": ["1", "1"], "functionals": [["1", "1/0"]]}',
    '{"dim": 2, "unit": ["1", "1"], "functionals": [[1, 0]]}',
    '{"dim": 2, "unit": ["1"], "functionals": [["1", "0"]]}',
    '{"dim": 0, "unit": [], "functionals": []}',
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        loads_cone(text)


def test_labels_are_kept():
    spec = loads_cone('{"dim": 1, "unit": ["2"], "functionals": [["3"]], "labels": ["a"]}')
    assert spec.labels == ("a",)
    assert extreme_points(spec).functionals == ((Fraction(1, 2),),)
