"""
A code over F25 built on the tower F5, F5, F25
==============================================

Length, dimension and minimum distance for a handful of degrees, with every
dimension checked against the rank of an actual generator matrix.
"""
from pathlib import Path

from pncc import (classify, dimension_formula, hilbert_by_rank, length_formula, load_spec,
                  projective_min_distance, witness_weight)

spec = load_spec(Path(__file__).resolve().parent.parent / "specs" / "f25.yaml")
print("sets sizes:", spec.sizes, "classification:", classify(spec))

# the point set has 1 + 5*25 + 25 points
print("length:", length_formula(spec.sizes))

cls = classify(spec)
print(f"{'d':>3} {'dim':>5} {'rank':>5} {'delta':>6} {'witness':>8}")
for d in [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 25]:
    dim = dimension_formula(spec.sizes, d)
    r = hilbert_by_rank(spec, d)          # Gaussian elimination over GF(25)
    delta = projective_min_distance(spec.sizes, d, cls).value
    w = witness_weight(spec, d)           # weight of an explicit codeword
    print(f"{d:>3} {dim:>5} {r:>5} {delta:>6} {w:>8}")

# delta is a theorem here (a tower of subfields), and the witness shows the
# bound is attained, so the table is complete without enumerating 25**6 words
