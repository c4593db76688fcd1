"""Polyhedral ordered vector spaces ``K = {x : phi_i(x) >= 0}`` with an order unit.

A :class:`ConeSpec` is the raw input (functionals plus unit); a
:class:`LambdaSet` is the set of extreme points of the dual base, i.e. the
normalized, irredundant functionals.  The cone JSON file format lives here too.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import ratmath
from .ratmath import FarkasCertificate, RatVector, dot, vec


class ConeError(Exception):
    pass


class SomeFunctionalNonpositiveOnUnit(ConeError):
    def __init__(self, index: int, value: Fraction):
        super().__init__(f"functional {index + 1} takes value {value} <= 0 on the unit")
        self.index = index
        self.value = value


class ParseError(ConeError):
    pass


@dataclass(frozen=True)
class ConeSpec:
    dim: int
    unit: RatVector
    functionals: tuple
    labels: tuple = ()
    # position of each functional in the originally supplied list
    source_indices: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "unit", vec(self.unit))
        object.__setattr__(self, "functionals", tuple(vec(f) for f in self.functionals))
        if self.dim < 1:
            raise ConeError("dim must be positive")
        if len(self.unit) != self.dim:
            raise ConeError(f"unit has dimension {len(self.unit)}, expected {self.dim}")
        for i, f in enumerate(self.functionals):
            if len(f) != self.dim:
                raise ConeError(f"functional {i + 1} has dimension {len(f)}, expected {self.dim}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"phi{i + 1}" for i in range(len(self.functionals))))
        if len(self.labels) != len(self.functionals):
            raise ConeError("labels must match functionals")
        if not self.source_indices:
            object.__setattr__(self, "source_indices", tuple(range(len(self.functionals))))

    @property
    def m(self) -> int:
        return len(self.functionals)


@dataclass(frozen=True)
class LambdaSet:
    """Extreme points of the dual base, each normalized to take value 1 on the unit."""

    dim: int
    functionals: tuple
    labels: tuple
    source_indices: tuple
    unit: RatVector
    _memo: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __len__(self) -> int:
        return len(self.functionals)

    def label_of(self, i: int) -> str:
        return self.labels[i]

    def index_of(self, token: str) -> int:
        """Resolve a label or a 1-based position to a 0-based index."""
        if token in self.labels:
            return self.labels.index(token)
        if re.fullmatch(r"\d+", token):
            k = int(token)
            if 1 <= k <= len(self):
                return k - 1
        raise KeyError(token)


def normalize(spec: ConeSpec) -> ConeSpec:
    """Rescale every functional to value 1 on the unit and drop exact duplicates."""
    seen: dict = {}
    funcs, labels, src = [], [], []
    for i, f in enumerate(spec.functionals):
        val = dot(f, spec.unit)
        if val <= 0:
            raise SomeFunctionalNonpositiveOnUnit(spec.source_indices[i], val)
        g = tuple(v / val for v in f)
        if g in seen:
            continue
        seen[g] = i
        funcs.append(g)
        labels.append(spec.labels[i])
        src.append(spec.source_indices[i])
    return ConeSpec(spec.dim, spec.unit, tuple(funcs), tuple(labels), tuple(src))


@dataclass
class ValidationReport:
    dim: int
    rank: int
    nonpositive: list = field(default_factory=list)
    # nonzero x with phi_i(x) = 0 for all i: the line contained in K
    line_certificate: Optional[RatVector] = None
    # nonnegative multipliers with sum_i s_i phi_i = 0: K has empty interior
    interior_certificate: Optional[FarkasCertificate] = None

    @property
    def rank_ok(self) -> bool:
        return self.rank == self.dim

    @property
    def unit_ok(self) -> bool:
        return not self.nonpositive

    @property
    def valid(self) -> bool:
        return self.rank_ok and self.unit_ok

    def messages(self) -> list[str]:
        out = []
        if not self.rank_ok:
            out.append(
                f"functionals have rank {self.rank} < {self.dim}: K contains the line spanned by "
                + format_vector(self.line_certificate)
            )
        for i, v in self.nonpositive:
            out.append(f"functional {i + 1} is {v} on the unit (must be > 0)")
        if self.interior_certificate is not None:
            mult = ", ".join(str(s) for s in self.interior_certificate.strict_mult)
            out.append(f"K has empty interior: nonnegative combination ({mult}) of functionals vanishes")
        return out


def validate(spec: ConeSpec) -> ValidationReport:
    """Check that K is pointed (rank = dim) and that the unit is interior.  Never raises."""
    r = ratmath.rank(spec.functionals) if spec.functionals else 0
    report = ValidationReport(dim=spec.dim, rank=r)
    if r < spec.dim:
        report.line_certificate = ratmath.kernel_basis(spec.functionals, spec.dim)[0]
    for i, f in enumerate(spec.functionals):
        v = dot(f, spec.unit)
        if v <= 0:
            report.nonpositive.append((spec.source_indices[i], v))
    if report.nonpositive and spec.functionals:
        w = ratmath.lp_feasible(None, None, spec.functionals, None, dim=spec.dim)
        if w is None:
            report.interior_certificate = ratmath.infeasibility_certificate(
                None, None, spec.functionals, None, spec.dim
            )
    return report


def suggest_unit(spec: ConeSpec) -> Optional[RatVector]:
    """An interior point of K found by LP, or ``None`` if K has empty interior."""
    return ratmath.lp_feasible(None, None, spec.functionals, None, dim=spec.dim)


def is_extreme(i: int, points: Sequence[RatVector]) -> bool:
    """Whether ``points[i]`` is not a convex combination of the other points."""
    others = [p for j, p in enumerate(points) if j != i]
    if not others:
        return True
    n = len(points[i])
    k = len(others)
    # unknown alpha (k): sum_j alpha_j p_j = p_i, sum alpha = 1, alpha >= 0
    eq = [tuple(p[c] for p in others) for c in range(n)] + [(Fraction(1),) * k]
    rhs = tuple(points[i]) + (Fraction(1),)
    nonneg = [tuple(Fraction(int(a == b)) for b in range(k)) for a in range(k)]
    return ratmath.lp_feasible(eq, rhs, None, nonneg, dim=k) is None


def extreme_points(spec: ConeSpec) -> LambdaSet:
    """The extreme points of the dual base; order and labels of survivors are kept."""
    spec = normalize(spec)
    report = validate(spec)
    if not report.valid:
        raise ConeError("; ".join(report.messages()))
    keep = [i for i in range(spec.m) if is_extreme(i, spec.functionals)]
    return LambdaSet(
        dim=spec.dim,
        functionals=tuple(spec.functionals[i] for i in keep),
        labels=tuple(spec.labels[i] for i in keep),
        source_indices=tuple(spec.source_indices[i] for i in keep),
        unit=spec.unit,
    )


def lambda_as_spec(lam: LambdaSet) -> ConeSpec:
    return ConeSpec(lam.dim, lam.unit, lam.functionals, lam.labels, lam.source_indices)


# ---------------------------------------------------------------------------
# cone file format

_RATIONAL = re.compile(r"-?\d+(/\d+)?")


def parse_rational(s) -> Fraction:
    if not isinstance(s, str) or not _RATIONAL.fullmatch(s):
        raise ParseError(f"not a rational string: {s!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator: {s!r}") from None


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def format_vector(v) -> str:
    if v is None:
        return "()"
    return "(" + ", ".join(format_rational(x) for x in v) + ")"


def cone_from_dict(doc) -> ConeSpec:
    if not isinstance(doc, dict):
        raise ParseError("cone document must be a JSON object")
    for key in ("dim", "unit", "functionals"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError("dim must be a positive integer")
    if not isinstance(doc["unit"], list) or not isinstance(doc["functionals"], list):
        raise ParseError("unit and functionals must be lists")
    unit = tuple(parse_rational(s) for s in doc["unit"])
    funcs = []
    for row in doc["functionals"]:
        if not isinstance(row, list):
            raise ParseError("each functional must be a list")
        funcs.append(tuple(parse_rational(s) for s in row))
    labels = doc.get("labels") or ()
    if not isinstance(labels, (list, tuple)) or not all(isinstance(x, str) for x in labels):
        raise ParseError("labels must be a list of strings")
    if labels and len(set(labels)) != len(labels):
        raise ParseError("labels must be distinct")
    try:
        return ConeSpec(dim, unit, tuple(funcs), tuple(labels))
    except ConeError as exc:
        raise ParseError(str(exc)) from None


def cone_to_dict(spec: ConeSpec) -> dict:
    return {
        "dim": spec.dim,
        "unit": [format_rational(x) for x in spec.unit],
        "functionals": [[format_rational(x) for x in f] for f in spec.functionals],
        "labels": list(spec.labels),
    }


def loads_cone(text: str) -> ConeSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return cone_from_dict(doc)


def dumps_cone(spec: ConeSpec) -> str:
    return json.dumps(cone_to_dict(spec), indent=2) + "\n"


def load_cone(path) -> ConeSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return loads_cone(text)


def save_cone(spec: ConeSpec, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_cone(spec))
