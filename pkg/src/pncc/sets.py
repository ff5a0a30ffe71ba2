"""Projective nested cartesian sets ``[A_0 x ... x A_n]`` and affine products."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Sequence

import numpy as np

from .gf import GF, FieldError, prime_power


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class CartesianSpec:
    """The tuple of subsets ``A_0, ..., A_n`` of one ambient field.

    Each set is stored sorted by encoding and without duplicates.
    """

    field: GF
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.sets:
            raise SpecError("a cartesian spec needs at least one set")
        clean = []
        for A in self.sets:
            A = tuple(sorted({int(a) for a in A}))
            if not A:
                raise SpecError("sets must be nonempty")
            if A[0] < 0 or A[-1] >= self.field.q:
                raise SpecError(f"set {list(A)} has elements outside GF({self.field.q})")
            clean.append(A)
        object.__setattr__(self, "sets", tuple(clean))

    @property
    def n(self) -> int:
        return len(self.sets) - 1

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(A) for A in self.sets)

    def with_sets(self, sets) -> "CartesianSpec":
        return CartesianSpec(self.field, tuple(sets))


@dataclass(frozen=True)
class Violation:
    condition: str  # zero-membership | size-order | closure
    indices: tuple[int, ...]
    witness: tuple[int, ...] = ()

    def __str__(self):
        idx = ",".join(map(str, self.indices))
        wit = f" witness={list(self.witness)}" if self.witness else ""
        return f"{self.condition}[{idx}]{wit}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations


def validate(spec: CartesianSpec) -> ValidationReport:
    """Collect every violated condition; never raises for bad specs."""
    F = spec.field
    out: list[Violation] = []
    for i, A in enumerate(spec.sets):
        if 0 not in A:
            out.append(Violation("zero-membership", (i,)))
    # A_j * A_{i-1} must stay inside A_j for 1 <= i <= j <= n
    for i in range(1, spec.n + 1):
        left = np.array(spec.sets[i - 1], dtype=np.int64)
        for j in range(i, spec.n + 1):
            right = np.array(spec.sets[j], dtype=np.int64)
            prod = np.asarray(F.mul(right[:, None], left[None, :]))
            bad = np.argwhere(~np.isin(prod, spec.sets[j]))
            if len(bad):
                r, c = bad[0]
                out.append(Violation("closure", (j, i - 1),
                                     (int(right[r]), int(left[c]), int(prod[r, c]))))
    sizes = spec.sizes
    lead = 0
    while lead < len(sizes) and sizes[lead] == 1:
        lead += 1
    if lead == len(sizes):
        out.append(Violation("size-order", tuple(range(len(sizes)))))
    for i in range(lead, len(sizes)):
        if sizes[i] < 2:
            out.append(Violation("size-order", (i,)))
        elif i + 1 < len(sizes) and sizes[i] > sizes[i + 1] and sizes[i + 1] >= 2:
            out.append(Violation("size-order", (i, i + 1)))
    return ValidationReport(tuple(out))


def normalize(spec: CartesianSpec) -> CartesianSpec:
    """Drop leading ``{0}`` sets; they do not change the code."""
    sizes = spec.sizes
    lead = 0
    while lead < len(sizes) and sizes[lead] == 1:
        lead += 1
    if lead == len(sizes):
        raise SpecError("empty projective set: every A_i is a singleton")
    if any(s == 1 for s in sizes[lead:]):
        raise SpecError("a singleton set follows a non-singleton set")
    if lead == 0:
        return spec
    return spec.with_sets(spec.sets[lead:])


def scale_spec(spec: CartesianSpec, scalars: Sequence[int]) -> CartesianSpec:
    """Replace each ``A_j`` by ``a_j^{-1} A_j``."""
    if len(scalars) != len(spec.sets):
        raise SpecError("need one scalar per set")
    F = spec.field
    out = []
    for a, A in zip(scalars, spec.sets):
        a = int(a)
        if a == 0:
            raise SpecError("scalars must be nonzero")
        if a not in A:
            raise SpecError(f"scalar {a} is not in its set {list(A)}")
        out.append(tuple(np.asarray(F.mul(F.inv(a), np.array(A))).tolist()))
    return spec.with_sets(out)


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    """``(0 : ... : 0 : 1 : tail)`` with the 1 in coordinate ``pivot``."""

    pivot: int
    tail: tuple[int, ...] = ()

    def coords(self) -> tuple[int, ...]:
        return (0,) * self.pivot + (1,) + tuple(self.tail)

    def __str__(self):
        return "(" + ":".join(map(str, self.coords())) + ")"


def canonical(field: GF, coords: Sequence[int]) -> ProjectivePoint:
    """Scale a nonzero vector so its first nonzero entry is 1."""
    coords = [int(c) for c in coords]
    for i, c in enumerate(coords):
        if c:
            inv = field.inv(c)
            return ProjectivePoint(i, tuple(field.mul(inv, x) for x in coords[i + 1:]))
    raise SpecError("the zero vector is not a projective point")


def enumerate_projective_points(spec: CartesianSpec) -> list[ProjectivePoint]:
    """Canonical points, pivot-major then lexicographic tails."""
    pts = []
    for i in range(spec.n + 1):
        for tail in itertools.product(*spec.sets[i + 1:]):
            pts.append(ProjectivePoint(i, tuple(tail)))
    return pts


def point_array(points: Sequence[ProjectivePoint], n: int) -> np.ndarray:
    """Coordinates as an ``(m, n+1)`` integer array."""
    arr = np.zeros((len(points), n + 1), dtype=np.int64)
    for r, P in enumerate(points):
        arr[r] = P.coords()
    return arr


def scaled_point_array(spec: CartesianSpec, scalars: Sequence[int]) -> np.ndarray:
    """Images ``(a_0^{-1} x_0, ..., a_n^{-1} x_n)`` of the canonical points of ``spec``.

    These are the (generally non-canonical) representatives under which the
    code of ``scale_spec(spec, scalars)`` coincides with the code of ``spec``.
    """
    F = spec.field
    inv = np.array([F.inv(int(a)) for a in scalars], dtype=np.int64)
    pts = point_array(enumerate_projective_points(spec), spec.n)
    return np.asarray(F.mul(pts, inv[None, :]))


def enumerate_affine_points(sets: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    return [tuple(t) for t in itertools.product(*[sorted(set(A)) for A in sets])]


@dataclass(frozen=True)
class Classification:
    kind: str  # product_of_fields | nested_general
    exponents: tuple[int, ...] = dc_field(default=())

    @property
    def is_product_of_fields(self) -> bool:
        return self.kind == "product_of_fields"

    def __str__(self):
        if self.is_product_of_fields:
            return f"product_of_fields(r={list(self.exponents)})"
        return self.kind


def classify(spec: CartesianSpec) -> Classification:
    """Decide whether every ``A_i`` is a subfield, forming a tower.

    On success the exponents are ``r_0, ..., r_n`` with ``d_{i+1} = d_i**r_i``
    and ``q = d_n**r_n``.
    """
    F = spec.field
    degs = []
    for A in spec.sets:
        pr = prime_power(len(A))
        if pr is None or pr[0] != F.p or F.m % pr[1]:
            return Classification("nested_general")
        if list(A) != F.subfield_elements(len(A)):
            return Classification("nested_general")
        degs.append(pr[1])
    degs.append(F.m)
    if any(b % a for a, b in zip(degs, degs[1:])):
        return Classification("nested_general")
    return Classification("product_of_fields", tuple(b // a for a, b in zip(degs, degs[1:])))


# -- spec config files -------------------------------------------------------

def cyclic_subgroup(field: GF, g: int) -> list[int]:
    if g == 0:
        raise SpecError("0 does not generate a multiplicative subgroup")
    out, x = [], 1
    while True:
        out.append(x)
        x = field.mul(x, g)
        if x == 1:
            return sorted(out)


def parse_set(field: GF, item) -> tuple[int, ...]:
    """Explicit encoding list, ``"subfield:d"`` or ``"subgroup:g,withzero"``."""
    if isinstance(item, (list, tuple)):
        return tuple(int(x) for x in item)
    if not isinstance(item, str):
        raise SpecError(f"cannot read set {item!r}")
    kind, _, arg = item.partition(":")
    kind = kind.strip()
    try:
        if kind == "subfield":
            return tuple(field.subfield_elements(int(arg)))
        if kind == "subgroup":
            parts = [s.strip() for s in arg.split(",")]
            elems = cyclic_subgroup(field, int(parts[0]))
            if "withzero" in parts[1:]:
                elems = [0] + elems
            return tuple(elems)
        if kind == "all":
            return tuple(range(field.q))
    except (FieldError, ValueError) as exc:
        raise SpecError(f"bad set shorthand {item!r}: {exc}") from exc
    raise SpecError(f"unknown set shorthand {item!r}")


def spec_from_dict(cfg: dict) -> CartesianSpec:
    try:
        fcfg = cfg["field"]
        field = GF(int(fcfg["p"]), int(fcfg.get("m", 1)), fcfg.get("modulus"))
        sets = cfg["sets"]
    except (KeyError, TypeError) as exc:
        raise SpecError(f"spec config is missing {exc}") from exc
    except FieldError as exc:
        raise SpecError(str(exc)) from exc
    if not isinstance(sets, list) or not sets:
        raise SpecError("'sets' must be a nonempty list")
    return CartesianSpec(field, tuple(parse_set(field, s) for s in sets))


def load_spec(path) -> CartesianSpec:
    """Read a YAML (or JSON) spec config file.

    Example::

        field: {p: 5, m: 2}
        sets: ["subfield:5", "subfield:5", "subfield:25"]
    """
    import yaml

    text = Path(path).read_text()
    try:
        cfg = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise SpecError(f"cannot parse {path}: {exc}") from exc
    if not isinstance(cfg, dict):
        raise SpecError(f"{path} does not hold a mapping")
    return spec_from_dict(cfg)


def spec_to_dict(spec: CartesianSpec) -> dict:
    F = spec.field
    return {"field": {"p": F.p, "m": F.m, "modulus": list(F.modulus)},
            "sets": [list(A) for A in spec.sets]}


def dump_spec(spec: CartesianSpec) -> str:
    return json.dumps(spec_to_dict(spec), sort_keys=True)
