"""Sparse polynomials in ``X_0, ..., X_n`` over one field, and the footprint.

A monomial is its exponent tuple ``(a_0, ..., a_n)``.  The monomial order is
graded lexicographic with ``X_0 < X_1 < ... < X_n``: compare total degree,
then the exponent of ``X_n``, then of ``X_{n-1}``, and so on.
"""
from __future__ import annotations

import itertools
import re
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .formulas import kl_decompose
from .gf import GF
from .sets import CartesianSpec, ProjectivePoint

Monomial = tuple[int, ...]


def grlex_key(mono: Monomial):
    return (sum(mono),) + tuple(reversed(mono))


def monomials_of_degree(nvars: int, d: int) -> Iterable[Monomial]:
    if nvars == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - first):
            yield (first,) + rest


def monomial_basis(n: int, d: int) -> list[Monomial]:
    """Degree-d monomials in ``X_0..X_n``, largest first in grlex order."""
    return list(_monomial_basis(n, d))


@lru_cache(maxsize=512)
def _monomial_basis(n: int, d: int) -> tuple[Monomial, ...]:
    return tuple(sorted(monomials_of_degree(n + 1, d), key=grlex_key, reverse=True))


def affine_monomial_basis(n: int, d: int) -> list[Monomial]:
    """Monomials of degree <= d in ``n`` variables, largest first in grlex order."""
    if n == 0:
        return [()]
    out = [m for e in range(d + 1) for m in monomials_of_degree(n, e)]
    return sorted(out, key=grlex_key, reverse=True)


def mono_str(mono: Monomial) -> str:
    return "*".join(f"X{i}^{e}" for i, e in enumerate(mono))


def evaluate_monomials(field: GF, monos: Sequence[Monomial], coords: np.ndarray) -> np.ndarray:
    """Row r holds monomial r evaluated at every row of ``coords``."""
    coords = np.asarray(coords, dtype=np.int64)
    npts = coords.shape[0]
    if not monos:
        return np.zeros((0, npts), dtype=np.int64)
    exps = np.array(monos, dtype=np.int64).reshape(len(monos), -1)
    if field._exp is not None:
        logs = np.where(coords == 0, -1, field._log[coords])
        return _kernels.eval_monomials(exps, logs, field._exp, field.q - 1)
    out = np.ones((len(monos), npts), dtype=np.int64)
    for i in range(exps.shape[1]):
        top = int(exps[:, i].max())
        if top == 0:
            continue
        powers = np.ones((top + 1, npts), dtype=np.int64)
        for e in range(1, top + 1):
            powers[e] = field.mul(powers[e - 1], coords[:, i])
        out = np.asarray(field.mul(out, powers[exps[:, i]]))
    return out


class Polynomial:
    """Immutable sparse polynomial: a map monomial -> nonzero coefficient."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: GF, nvars: int, terms=None):
        self.field = field
        self.nvars = nvars
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} does not have {nvars} variables")
            c = int(c)
            if c:
                clean[mono] = c
        self.terms = clean

    @classmethod
    def variable(cls, field: GF, nvars: int, i: int) -> "Polynomial":
        mono = [0] * nvars
        mono[i] = 1
        return cls(field, nvars, {tuple(mono): 1})

    @classmethod
    def constant(cls, field: GF, nvars: int, c: int) -> "Polynomial":
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def binomial_form(cls, field: GF, nvars: int, j: int, a: int, i: int) -> "Polynomial":
        """``X_j - a X_i``."""
        return cls.variable(field, nvars, j) - cls.variable(field, nvars, i).scale(a)

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.field == other.field
                and self.nvars == other.nvars and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    @property
    def homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def leading_monomial(self) -> Monomial:
        return max(self.terms, key=grlex_key)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        F = self.field
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = F.scalar_add(terms.get(mono, 0), c)
        return Polynomial(F, self.nvars, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, self.nvars,
                          {m: self.field.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c: int) -> "Polynomial":
        return Polynomial(self.field, self.nvars,
                          {m: self.field.scalar_mul(c, v) for m, v in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        F = self.field
        add, mul = F.scalar_add, F.scalar_mul
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                terms[mono] = add(terms.get(mono, 0), mul(c1, c2))
        return Polynomial(F, self.nvars, terms)

    def evaluate_many(self, coords: np.ndarray) -> np.ndarray:
        """Evaluate at each row of an ``(m, nvars)`` coordinate array."""
        F = self.field
        coords = np.asarray(coords, dtype=np.int64)
        if coords.ndim != 2 or coords.shape[1] != self.nvars:
            raise ValueError(f"points need {self.nvars} coordinates")
        if not self.terms:
            return np.zeros(coords.shape[0], dtype=np.int64)
        monos = list(self.terms)
        coefs = np.array([self.terms[m] for m in monos], dtype=np.int64)
        vals = evaluate_monomials(F, monos, coords)
        return np.asarray(F.sum(F.mul(coefs[:, None], vals), axis=0), dtype=np.int64)

    def to_text(self) -> str:
        """``coef*X0^a0*...*Xn^an`` terms joined by ``+``, largest monomial first."""
        if not self.terms:
            return "0"
        monos = sorted(self.terms, key=grlex_key, reverse=True)
        return "+".join(f"{self.terms[m]}*{mono_str(m)}" for m in monos)

    __str__ = to_text

    def __repr__(self):
        return f"Polynomial({self.to_text()})"


_TERM = re.compile(r"^\s*(\d+)((?:\s*\*\s*X\d+\^\d+)*)\s*$")


def parse_polynomial(text: str, field: GF, nvars: int) -> Polynomial:
    """Inverse of :meth:`Polynomial.to_text`."""
    text = text.strip()
    if text == "0":
        return Polynomial(field, nvars)
    terms: dict = {}
    for chunk in text.split("+"):
        match = _TERM.match(chunk)
        if not match:
            raise ValueError(f"cannot parse term {chunk!r}")
        mono = [0] * nvars
        for var, exp in re.findall(r"X(\d+)\^(\d+)", match.group(2)):
            mono[int(var)] += int(exp)
        key = tuple(mono)
        terms[key] = field.add(terms.get(key, 0), int(match.group(1)))
    return Polynomial(field, nvars, terms)


def evaluate(f: Polynomial, P: ProjectivePoint) -> int:
    coords = P.coords()
    if len(coords) != f.nvars:
        raise ValueError(f"point {P} has {len(coords)} coordinates, polynomial has {f.nvars} variables")
    return int(f.evaluate_many(np.array([coords]))[0])


def product(factors: Sequence[Polynomial], field: GF, nvars: int) -> Polynomial:
    out = Polynomial.constant(field, nvars, 1)
    for g in factors:
        out = out * g
    return out


def ideal_generators(spec: CartesianSpec) -> list[Polynomial]:
    """``X_i * prod_{a in A_j} (X_j - a X_i)`` for every ``i < j``."""
    F, nv = spec.field, spec.n + 1
    gens = []
    for i, j in itertools.combinations(range(nv), 2):
        factors = [Polynomial.variable(F, nv, i)]
        factors += [Polynomial.binomial_form(F, nv, j, a, i) for a in spec.sets[j]]
        gens.append(product(factors, F, nv))
    return gens


def witness_polynomial(spec: CartesianSpec, d: int, choices: Sequence[int] | None = None,
                       b_set: Sequence[int] | None = None) -> Polynomial:
    """Product of linear forms vanishing on all but a prescribed set of points.

    ``choices`` gives ``a_1..a_n`` (default all 0); ``b_set`` is the
    ``ell``-subset of ``A_{k+1}`` (default: its first ``ell`` nonzero
    elements).  Above the top degree ``sum(d_i - 1) + 1`` the weight-one
    polynomial is padded with powers of ``X_0``.
    """
    F, n, sizes = spec.field, spec.n, spec.sizes
    nv = n + 1
    top = sum(s - 1 for s in sizes[1:]) + 1
    if d < 0:
        raise ValueError(f"witness polynomials need degree >= 0, got {d}")
    if d == 0:
        return Polynomial.constant(F, nv, 1)
    if choices is None:
        choices = [0] * n
    choices = [int(a) for a in choices]
    if len(choices) != n or any(a not in A for a, A in zip(choices, spec.sets[1:])):
        raise ValueError("choices must pick a_i from A_i for i = 1..n")
    if d >= top:
        k, ell = n, 0
    else:
        kl = kl_decompose(d, sizes)
        k, ell = kl.k, kl.ell
    X0 = Polynomial.variable(F, nv, 0)
    factors = [X0] * (1 + max(0, d - top))
    for i in range(1, k + 1):
        factors += [Polynomial.binomial_form(F, nv, i, a, 0)
                    for a in spec.sets[i] if a != choices[i - 1]]
    if ell:
        A = spec.sets[k + 1]
        if b_set is None:
            b_set = [a for a in A if a != 0][:ell]
        b_set = sorted({int(b) for b in b_set})
        if len(b_set) != ell or any(b not in A for b in b_set):
            raise ValueError(f"b_set must be {ell} distinct elements of A_{k + 1}")
        factors += [Polynomial.binomial_form(F, nv, k + 1, b, 0) for b in b_set]
    return product(factors, F, nv)


def footprint_count_direct(spec_or_sizes, d: int) -> int:
    """Count degree-d monomials not divisible by any ``X_i X_j^{d_j}`` (i < j).

    Such a monomial has at most one exponent at or above its threshold, and
    only on its first variable that occurs.  So, for each choice of that
    leading variable ``X_t``, enumerate the later exponents inside the box
    ``0 <= a_j < d_j`` and give ``X_t`` the remaining degree.
    """
    sizes = spec_or_sizes.sizes if isinstance(spec_or_sizes, CartesianSpec) else tuple(spec_or_sizes)
    n = len(sizes) - 1
    if d < 0:
        return 0
    if d == 0:
        return 1
    count = 0
    for t in range(n + 1):
        for rest in itertools.product(*[range(min(s, d)) for s in sizes[t + 1:]]):
            if sum(rest) <= d - 1:
                count += 1
    return count


def footprint_count_naive(spec: CartesianSpec, d: int) -> int:
    """Filter every degree-d monomial against the generators' leading monomials."""
    lms = [g.leading_monomial() for g in ideal_generators(spec)]
    count = 0
    for mono in monomials_of_degree(spec.n + 1, d):
        if not any(all(a >= b for a, b in zip(mono, lm)) for lm in lms):
            count += 1
    return count
