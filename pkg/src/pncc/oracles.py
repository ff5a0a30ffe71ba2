"""Brute-force checks of the closed-form parameters.

The exhaustive minimum-distance search walks the whole row space of a code,
``q**rank - 1`` nonzero codewords, in odometer order of the coefficient
vector over the reduced echelon basis.  The trailing coefficients are
expanded into a table once; each leading-coefficient prefix then costs one
vectorized table addition.  Prefix blocks can be split across workers and
merged by (weight, index), so the result does not depend on the split.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from .codes import GeneratorMatrix, affine_generator_matrix, generator_matrix, rank
from .formulas import EXACT, TRIVIAL_ONE, projective_min_distance
from .gf import GF
from .poly import witness_polynomial
from .sets import CartesianSpec, classify, spec_to_dict

TABLE_CELLS = 1 << 21
CHEAP_CODEWORDS = 10 ** 5


@dataclass(frozen=True)
class SearchBudget:
    max_codewords: int = 10 ** 7
    max_seconds: float = 60.0

    def __post_init__(self):
        if self.max_codewords <= 0 or self.max_seconds <= 0:
            raise ValueError("search budgets must be positive")


@dataclass(frozen=True)
class MinDistanceResult:
    """Outcome of an exhaustive search.

    When ``complete`` is false the distance is only the best weight seen,
    an upper bound on the true minimum.
    """

    distance: int
    message: tuple[int, ...]
    witness: tuple[int, ...]
    complete: bool
    enumerated: int
    total: int

    @property
    def status(self) -> str:
        return "exact" if self.complete else "budget-exceeded"


def _index_to_message(index: int, q: int, k: int) -> tuple[int, ...]:
    digits = []
    for _ in range(k):
        index, r = divmod(index, q)
        digits.append(r)
    return tuple(reversed(digits))


def _suffix_table(rows: np.ndarray, add: np.ndarray, mul: np.ndarray) -> np.ndarray:
    """All combinations of ``rows`` in lexicographic coefficient order."""
    q = add.shape[0]
    table = np.zeros((1, rows.shape[1]), dtype=add.dtype)
    coeffs = np.arange(q)
    for g in rows:
        multiples = mul[coeffs[:, None], g[None, :]]
        table = add[table[:, None, :], multiples[None, :, :]].reshape(-1, rows.shape[1])
    return table


def _scan(prefix_rows, table, add, mul, start, stop, deadline):
    """Best (weight, index) over prefixes ``start..stop-1``; index is global."""
    q = add.shape[0]
    kp = len(prefix_rows)
    width = table.shape[0]
    best_w, best_i, done = None, None, 0
    for P in range(start, stop):
        v = np.zeros(table.shape[1], dtype=add.dtype)
        for c, g in zip(_index_to_message(P, q, kp), prefix_rows):
            if c:
                v = add[v, mul[c, g]]
        w = np.count_nonzero(add[table, v[None, :]], axis=1)
        if P == 0:
            w[0] = table.shape[1] + 1
        i = int(np.argmin(w))
        if best_w is None or w[i] < best_w:
            best_w, best_i = int(w[i]), P * width + i
        done += width
        if deadline is not None and time.monotonic() > deadline:
            return best_w, best_i, done, False
    return best_w, best_i, done, True


def min_weight_search(basis: np.ndarray, field: GF, budget: SearchBudget | None = None,
                      workers: int = 1) -> MinDistanceResult:
    """Exact minimum weight of the row space of an independent ``basis``."""
    budget = budget or SearchBudget()
    basis = np.asarray(basis, dtype=np.int64)
    k, m = basis.shape
    if k == 0:
        raise ValueError("the zero code has no minimum distance")
    q = field.q
    total = q ** k - 1
    add, mul, _, _ = field.tables
    rows = basis.astype(add.dtype)

    if total > budget.max_codewords:
        # best-so-far: the basis rows themselves
        w = np.count_nonzero(rows, axis=1)
        i = int(np.argmin(w))
        msg = tuple(int(j == i) for j in range(k))
        return MinDistanceResult(int(w[i]), msg, tuple(basis[i].tolist()), False, k, total)

    t = 1
    while t < k and q ** (t + 1) * m <= TABLE_CELLS:
        t += 1
    table = _suffix_table(rows[k - t:], add, mul)
    prefix_rows = rows[:k - t]
    nprefix = q ** (k - t)
    deadline = time.monotonic() + budget.max_seconds

    workers = max(1, min(int(workers), nprefix))
    bounds = [nprefix * w // workers for w in range(workers + 1)]
    jobs = [(bounds[w], bounds[w + 1]) for w in range(workers) if bounds[w] < bounds[w + 1]]
    if len(jobs) == 1:
        parts = [_scan(prefix_rows, table, add, mul, *jobs[0], deadline)]
    else:
        with ThreadPoolExecutor(max_workers=len(jobs)) as pool:
            parts = list(pool.map(lambda j: _scan(prefix_rows, table, add, mul, *j, deadline), jobs))
    parts = [p for p in parts if p[0] is not None]
    best_w, best_i = min((p[0], p[1]) for p in parts)
    done = sum(p[2] for p in parts)
    complete = all(p[3] for p in parts)
    msg = _index_to_message(best_i, q, k)
    word = np.zeros(m, dtype=np.int64)
    for c, g in zip(msg, basis):
        if c:
            word = np.asarray(field.add(word, field.mul(c, g)))
    enumerated = min(done, total + 1) - 1 if complete else done
    return MinDistanceResult(best_w, msg, tuple(word.tolist()), complete, enumerated, total)


def exhaustive_min_distance(spec: CartesianSpec, d: int, budget: SearchBudget | None = None,
                            workers: int = 1, matrix: GeneratorMatrix | None = None
                            ) -> MinDistanceResult:
    if d < 0:
        raise ValueError("degree must be >= 0")
    G = matrix if matrix is not None else generator_matrix(spec, d)
    return min_weight_search(G.echelon.rows, spec.field, budget, workers)


def affine_exhaustive_min_distance(field: GF, sets: Sequence[Sequence[int]], d: int,
                                   budget: SearchBudget | None = None,
                                   workers: int = 1) -> MinDistanceResult:
    G = affine_generator_matrix(field, sets, d)
    return min_weight_search(G.echelon.rows, field, budget, workers)


def hilbert_by_rank(spec: CartesianSpec, d: int) -> int:
    if d < 0:
        return 0
    G = generator_matrix(spec, d)
    return rank(G.rows, spec.field)


def affine_rank(field: GF, sets: Sequence[Sequence[int]], d: int) -> int:
    if d < 0:
        return 0
    return rank(affine_generator_matrix(field, sets, d).rows, field)


def recursion_check(spec: CartesianSpec, d: int) -> bool:
    """Rank of the full code equals the tail projective rank plus the affine rank at d-1."""
    if spec.n < 1 or d < 1:
        raise ValueError("recursion needs n >= 1 and d >= 1")
    tail = spec.with_sets(spec.sets[1:])
    return hilbert_by_rank(spec, d) == (hilbert_by_rank(tail, d)
                                        + affine_rank(spec.field, spec.sets[1:], d - 1))


def witness_weight(spec: CartesianSpec, d: int, **choices) -> int:
    G = generator_matrix(spec, 0)
    f = witness_polynomial(spec, d, **choices)
    return int(np.count_nonzero(f.evaluate_many(G.points)))


# -- conjecture harness ------------------------------------------------------

@dataclass
class ConjectureEntry:
    degree: int
    conjectured: int
    formula_status: str
    witness_weight: int
    measured: int | None
    status: str  # verified | refuted | exact-theorem | skipped-budget
    witness: str | None = None
    oracle_upper_bound: int | None = None


@dataclass
class ConjectureReport:
    spec: CartesianSpec
    classification: str
    entries: list[ConjectureEntry] = dc_field(default_factory=list)

    @property
    def refuted(self) -> list[ConjectureEntry]:
        return [e for e in self.entries if e.status == "refuted"]

    def to_dict(self) -> dict:
        return {"spec": spec_to_dict(self.spec), "classification": self.classification,
                "entries": [asdict(e) for e in self.entries]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def check_conjecture(spec: CartesianSpec, degrees: Iterable[int],
                     budget: SearchBudget | None = None, workers: int = 1) -> ConjectureReport:
    """Compare the conjectured minimum distance with exhaustive search, degree by degree.

    The weight of the explicit witness polynomial is measured first; it must
    equal the conjectured value, which makes that value an upper bound.
    """
    budget = budget or SearchBudget()
    cls = classify(spec)
    report = ConjectureReport(spec, str(cls))
    for d in degrees:
        formula = projective_min_distance(spec.sizes, d, cls)
        ww = witness_weight(spec, d)
        if ww != formula.value:
            raise RuntimeError(f"witness polynomial at d={d} has weight {ww}, "
                               f"expected {formula.value}")
        G = generator_matrix(spec, d)
        proven = formula.status in (EXACT, TRIVIAL_ONE)
        run_oracle = True
        if proven:
            run_oracle = spec.field.q ** G.rank - 1 <= min(CHEAP_CODEWORDS, budget.max_codewords)
        entry = ConjectureEntry(d, formula.value, formula.status, ww, None,
                                "exact-theorem" if proven else "skipped-budget")
        if run_oracle:
            res = exhaustive_min_distance(spec, d, budget, workers, matrix=G)
            if res.complete:
                if res.distance > ww:
                    raise RuntimeError(f"exhaustive minimum {res.distance} exceeds the "
                                       f"weight {ww} of an explicit codeword")
                entry.measured = res.distance
                if res.distance < formula.value:
                    entry.status = "refuted"
                    entry.witness = G.polynomial_for(res.message).to_text()
                elif not proven:
                    entry.status = "verified"
            else:
                entry.oracle_upper_bound = res.distance
        report.entries.append(entry)
    return report
