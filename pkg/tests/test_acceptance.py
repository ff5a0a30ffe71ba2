"""Acceptance gate: one test group per criterion.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints one
PASS/FAIL line per criterion.
"""
import itertools
import json
import math
import time
from functools import lru_cache

import numpy as np
import pytest

from catalogue import nested_specs
from pncc import cli
from pncc.codes import affine_generator_matrix, code_equal, generator_matrix, rank
from pncc.formulas import (affine_dimension, affine_min_distance, binomial, dimension_formula,
                           footprint_count_formula, kl_decompose, length_formula,
                           prm_parameters, projective_min_distance)
from pncc.gf import GF
from pncc.oracles import (SearchBudget, affine_exhaustive_min_distance, check_conjecture,
                          exhaustive_min_distance, hilbert_by_rank, witness_weight)
from pncc.poly import footprint_count_direct
from pncc.sets import (CartesianSpec, classify, load_spec, scale_spec, scaled_point_array,
                       validate)

F25_DEGREES = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 25]
F25_DIMS = [3, 6, 10, 15, 21, 27, 33, 39, 45, 51, 141]
F25_DISTS = [125, 100, 75, 50, 25, 24, 23, 22, 21, 20, 5]
CODEWORD_CAP = 10 ** 6


@lru_cache(maxsize=None)
def sweep_specs():
    return tuple(nested_specs(max_n=3, max_len=400))


@lru_cache(maxsize=None)
def rank_of(spec, d):
    return hilbert_by_rank(spec, d)


def top_degree(spec):
    return sum(s - 1 for s in spec.sizes[1:]) + 1


def run_cli(argv):
    return cli.main([str(a) for a in argv])


# -- criterion 1 -------------------------------------------------------------

def test_criterion_1_f25_table(specs_dir, tmp_path):
    out = tmp_path / "f25.json"
    t0 = time.monotonic()
    code = run_cli(["table", "--spec", specs_dir / "f25.yaml", "--degrees", "1-10,25",
                    "--format", "json", "--out", out])
    elapsed = time.monotonic() - t0
    assert code == 0
    rows = json.loads(out.read_text())["rows"]
    assert [r["d"] for r in rows] == F25_DEGREES
    assert {r["length"] for r in rows} == {151}
    assert [r["dimension"] for r in rows] == F25_DIMS
    assert [r["distance"] for r in rows] == F25_DISTS
    assert {r["status"] for r in rows} == {"exact-theorem"}
    assert elapsed < 10


# -- criterion 2 -------------------------------------------------------------

def test_criterion_2_three_way_dimension():
    specs = sweep_specs()
    assert len(specs) > 1000
    assert {s.field.q for s in specs} == {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}
    t0 = time.monotonic()
    failures = []
    for spec in specs:
        assert validate(spec).valid and spec.n <= 3 and length_formula(spec.sizes) <= 400
        for d in range(0, top_degree(spec) + 2):
            values = (dimension_formula(spec.sizes, d), footprint_count_formula(spec.sizes, d),
                      footprint_count_direct(spec, d), rank_of(spec, d))
            if len(set(values)) != 1:
                failures.append((spec.field.q, spec.sets, d, values))
    elapsed = time.monotonic() - t0
    assert not failures, failures[:5]
    assert elapsed < 120


# -- criterion 3 -------------------------------------------------------------

def full_space(p, m, n):
    F = GF(p, m)
    return CartesianSpec(F, tuple([tuple(range(F.q))] * (n + 1)))


def tower(p, m, degrees):
    F = GF(p, m)
    return CartesianSpec(F, tuple(tuple(F.subfield_elements(p ** e)) for e in degrees))


def product_of_fields_specs():
    return [
        full_space(2, 1, 1), full_space(3, 1, 1), full_space(2, 2, 1), full_space(5, 1, 1),
        full_space(2, 3, 1), full_space(2, 1, 2), full_space(3, 1, 2), full_space(2, 2, 2),
        full_space(2, 1, 3), full_space(3, 1, 3),
        tower(2, 2, [1, 2]), tower(2, 2, [1, 1, 2]), tower(2, 2, [1, 2, 2]),
        tower(2, 2, [1, 1, 1]), tower(2, 2, [1, 1, 1, 2]),
        tower(2, 3, [1, 3]), tower(2, 3, [1, 1, 3]), tower(3, 2, [1, 2]), tower(3, 2, [1, 1, 2]),
        tower(2, 4, [1, 2, 4]), tower(2, 4, [2, 4]), tower(5, 2, [1, 1, 2]),
    ]


def admissible_cases():
    for spec in product_of_fields_specs():
        for d in range(1, top_degree(spec) + 1):
            if spec.field.q ** rank_of(spec, d) <= CODEWORD_CAP:
                yield spec, d


def test_criterion_3_exhaustive_distance_matches_theorem():
    t0 = time.monotonic()
    cases = list(admissible_cases())
    assert len(cases) > 50
    failures = []
    for spec, d in cases:
        cls = classify(spec)
        assert cls.is_product_of_fields
        formula = projective_min_distance(spec.sizes, d, cls)
        res = exhaustive_min_distance(spec, d, SearchBudget(CODEWORD_CAP, 600))
        if not res.complete or res.distance != formula.value:
            failures.append((spec.sets, d, res.distance, formula.value))
    assert not failures, failures[:5]
    assert time.monotonic() - t0 < 180


def test_criterion_3_classical_simplex():
    spec = full_space(2, 1, 2)
    assert prm_parameters(2, 2, 1) == (7, 3, 4)
    G = generator_matrix(spec, 1)
    assert (G.ncols, G.rank, exhaustive_min_distance(spec, 1).distance) == (7, 3, 4)


# -- criterion 4 -------------------------------------------------------------

def test_criterion_4_witness_attains_bound():
    failures = []
    for spec in sweep_specs():
        top = top_degree(spec)
        for d in range(1, top + 1):
            w = witness_weight(spec, d)
            bound = projective_min_distance(spec.sizes, d).value
            if w != bound or (d == top and w != 1):
                failures.append((spec.field.q, spec.sets, d, w, bound))
    assert not failures, failures[:5]


# -- criterion 5 -------------------------------------------------------------

def affine_family():
    rng = np.random.default_rng(20240501)
    for p, m in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3)]:
        F = GF(p, m)
        for n in (1, 2, 3):
            for sizes in itertools.combinations_with_replacement(range(2, F.q + 1), n):
                if math.prod(sizes) > 256:
                    continue
                sets = [tuple(sorted(rng.choice(F.q, s, replace=False).tolist())) for s in sizes]
                yield F, sets


def test_criterion_5_affine_formulas():
    failures, exhaustive = [], 0
    for F, sets in affine_family():
        sizes = [len(A) for A in sets]
        for d in range(0, sum(s - 1 for s in sizes) + 2):
            G = affine_generator_matrix(F, sets, d)
            r = rank(G.rows, F)
            if r != affine_dimension(sizes, d):
                failures.append(("rank", F.q, sets, d, r))
            if F.q ** r <= CODEWORD_CAP:
                exhaustive += 1
                res = affine_exhaustive_min_distance(F, sets, d, SearchBudget(CODEWORD_CAP, 600))
                if not res.complete or res.distance != affine_min_distance(sizes, d):
                    failures.append(("distance", F.q, sets, d, res.distance))
    assert not failures, failures[:5]
    assert exhaustive > 500


def test_criterion_5_reed_muller_1_2():
    F = GF(2)
    G = affine_generator_matrix(F, [(0, 1), (0, 1)], 1)
    res = affine_exhaustive_min_distance(F, [(0, 1), (0, 1)], 1)
    assert (G.ncols, G.rank, res.distance) == (4, 3, 2)


# -- criterion 6 -------------------------------------------------------------

def test_criterion_6_hockey_stick():
    for a in range(61):
        for b in range(1, 61):
            assert sum(binomial(j + b - 1, j) for j in range(a + 1)) == binomial(a + b, a)
        # b = 0: only the j = 0 term C(-1, 0) = 1 survives in the ordinary
        # (upper-negation) binomial; the library's vanishing convention is for
        # negative tops inside the footprint formula and does not apply here
        assert 1 + sum(binomial(j - 1, j) for j in range(1, a + 1)) == binomial(a, a)


def test_criterion_6_kl_round_trip():
    for n in range(1, 5):
        for tail in itertools.combinations_with_replacement([2, 3, 5, 8, 13, 21, 32], n):
            sizes = (2,) + tail
            for d in range(1, sum(s - 1 for s in tail) + 1):
                kl = kl_decompose(d, sizes)
                assert sum(s - 1 for s in tail[:kl.k]) + kl.ell + 1 == d
                assert 0 <= kl.ell < tail[kl.k] - 1


def test_criterion_6_hilbert_recursion():
    failures = []
    for spec in sweep_specs():
        tail = spec.with_sets(spec.sets[1:])
        for d in range(1, top_degree(spec) + 2):
            lhs = rank_of(spec, d)
            affine = rank(affine_generator_matrix(spec.field, spec.sets[1:], d - 1).rows, spec.field)
            rhs = rank_of(tail, d) + affine
            formula = dimension_formula(tail.sizes, d) + affine_dimension(tail.sizes, d - 1)
            if not lhs == rhs == formula == dimension_formula(spec.sizes, d):
                failures.append((spec.sets, d, lhs, rhs, formula))
    assert not failures, failures[:5]


def test_criterion_6_saturation():
    for n in (1, 2, 3):
        for tail in itertools.combinations_with_replacement(range(2, 30), n):
            sizes = (2,) + tail
            m = length_formula(sizes)
            if m > 200:
                continue
            for d in range(m - 1, m + 2):
                assert dimension_formula(sizes, d) == m
    for spec in sweep_specs():
        m = length_formula(spec.sizes)
        if math.comb(spec.n + m - 1, spec.n) * m <= 2_000_000:
            assert rank_of(spec, m - 1) == m


def product_of_fields_sizes(max_size=25, max_n=3):
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23]
    for p in primes:
        exps = [e for e in range(1, 6) if p ** e <= max_size]
        for n in range(1, max_n + 1):
            for chain in itertools.product(exps, repeat=n + 1):
                if all(b % a == 0 for a, b in zip(chain, chain[1:])):
                    yield tuple(p ** e for e in chain)


def test_criterion_6_relation_corollary():
    count = 0
    for sizes in product_of_fields_sizes():
        n = len(sizes) - 1
        tails = [sizes[n + 1 - i:] if i else () for i in range(n + 1)]
        assert length_formula(sizes) == sum(math.prod(t) for t in tails)
        assert affine_min_distance(sizes[1:], 0) == math.prod(sizes[1:])
        for d in range(1, sum(s - 1 for s in sizes[1:]) + 3):
            assert dimension_formula(sizes, d) == sum(affine_dimension(t, d - 1) for t in tails)
            expect = affine_min_distance(sizes[1:], d - 1)
            assert projective_min_distance(sizes, d, "product_of_fields").value == expect
            count += 1
    assert count > 1000


def test_criterion_6_prm_equals_general():
    for q in (2, 3, 4, 5):
        for n in (1, 2, 3):
            sizes = (q,) * (n + 1)
            for d in range(1, n * (q - 1) + 2):
                general = (length_formula(sizes), dimension_formula(sizes, d),
                           projective_min_distance(sizes, d, "product_of_fields").value)
                assert prm_parameters(n, q, d) == general


# -- criterion 7 -------------------------------------------------------------

def random_code_equality_cases(count=20, seed=7):
    rng = np.random.default_rng(seed)
    pool = [s for s in sweep_specs() if length_formula(s.sizes) <= 300 and s.field.q > 2]
    picks = rng.choice(len(pool), count, replace=False)
    for i in picks:
        spec = pool[int(i)]
        scalars = [int(rng.choice([a for a in A if a])) for A in spec.sets]
        d = int(rng.integers(1, top_degree(spec) + 1))
        yield spec, scalars, d


def test_criterion_7_scaling_lemma():
    cases = list(random_code_equality_cases())
    assert len(cases) == 20
    nontrivial = 0
    for spec, scalars, d in cases:
        scaled = scale_spec(spec, scalars)
        assert validate(scaled).valid
        nontrivial += scaled.sets != spec.sets
        assert code_equal(spec, scaled, d, points_b=scaled_point_array(spec, scalars))
    assert nontrivial >= 10


def alternative_a0(spec):
    """Another valid A_0 for the same A_1..A_n, or None."""
    A1 = spec.sets[1]
    for r in range(len(A1), 1, -1):
        for cand in itertools.combinations(A1, r):
            if 0 not in cand or cand == spec.sets[0]:
                continue
            other = spec.with_sets((cand,) + spec.sets[1:])
            if validate(other).valid:
                return other
    return None


def test_criterion_7_a0_independence():
    rng = np.random.default_rng(11)
    pool = [s for s in sweep_specs() if length_formula(s.sizes) <= 300]
    pairs = []
    for i in rng.permutation(len(pool)):
        other = alternative_a0(pool[int(i)])
        if other is not None:
            pairs.append((pool[int(i)], other))
        if len(pairs) == 20:
            break
    assert len(pairs) == 20
    for spec, other in pairs:
        assert spec.sets[0] != other.sets[0]
        for d in (1, top_degree(spec) // 2 + 1):
            assert code_equal(spec, other, d)


# -- criterion 8 -------------------------------------------------------------

def test_criterion_8_conjecture_harness(specs_dir):
    spec = load_spec(specs_dir / "gf7_subgroup.yaml")
    assert spec.sizes == (2, 4, 4)
    assert not classify(spec).is_product_of_fields
    report = check_conjecture(spec, [1, 2])
    assert [e.degree for e in report.entries] == [1, 2]
    for e in report.entries:
        assert e.status in ("verified", "refuted")
        assert e.measured is not None
        assert e.measured <= e.witness_weight == e.conjectured
    assert [e.conjectured for e in report.entries] == [16, 12]


# -- criterion 9 -------------------------------------------------------------

def criterion_1_outputs(specs_dir, tmp_path, tag, workers):
    outs = []
    for fmt in ("table", "csv", "json"):
        out = tmp_path / f"c1_{tag}.{fmt}"
        assert run_cli(["table", "--spec", specs_dir / "f25.yaml", "--degrees", "1-10,25",
                        "--format", fmt, "--out", out, "--workers", workers]) == 0
        outs.append(out.read_bytes())
    return outs


def criterion_3_outputs(tmp_path, tag, workers):
    from pncc.sets import dump_spec
    outs = []
    by_spec = {}
    for spec, d in admissible_cases():
        by_spec.setdefault(spec, []).append(d)
    for i, (spec, degrees) in enumerate(by_spec.items()):
        cfg = tmp_path / f"spec{i}.json"
        cfg.write_text(dump_spec(spec))
        out = tmp_path / f"c3_{i}_{tag}.json"
        assert run_cli(["mindist", "--spec", cfg, "--degrees", ",".join(map(str, degrees)),
                        "--budget-codewords", CODEWORD_CAP, "--budget-seconds", 600,
                        "--format", "json", "--out", out, "--workers", workers]) == 0
        outs.append(out.read_bytes())
    return outs


def test_criterion_9_table_determinism(specs_dir, tmp_path):
    first = criterion_1_outputs(specs_dir, tmp_path, "a", 1)
    assert first == criterion_1_outputs(specs_dir, tmp_path, "b", 1)
    assert first == criterion_1_outputs(specs_dir, tmp_path, "c", 8)


def test_criterion_9_mindist_determinism(tmp_path):
    one = criterion_3_outputs(tmp_path, "w1", 1)
    eight = criterion_3_outputs(tmp_path, "w8", 8)
    assert one == eight
    for blob in one:
        rows = json.loads(blob)["rows"]
        assert all(r["oracle_status"] == "exact" and r["agree"] for r in rows)


def test_criterion_9_search_witness_independent_of_workers():
    spec = full_space(3, 1, 2)
    results = {w: exhaustive_min_distance(spec, 3, workers=w) for w in (1, 2, 3, 8)}
    assert len({(r.distance, r.message, r.witness) for r in results.values()}) == 1


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(pytest.main([__file__, "-q"]))
