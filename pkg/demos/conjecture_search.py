"""
Looking for counterexamples off the subfield towers
===================================================

When the coordinate sets are not subfields, the closed-form minimum
distance is only conjectured.  Here the harness is run on a few sets built
from multiplicative subgroups; every verdict comes with the exact measured
distance or an honest "skipped-budget".
"""
import json

from pncc import CartesianSpec, GF, SearchBudget, check_conjecture, validate
from pncc.sets import cyclic_subgroup

budget = SearchBudget(max_codewords=2 * 10 ** 6, max_seconds=30)

cases = []
F7 = GF(7)
cube_roots = (0,) + tuple(cyclic_subgroup(F7, 2))          # {0, 1, 2, 4}
cases.append(CartesianSpec(F7, ((0, 1), cube_roots, cube_roots)))
cases.append(CartesianSpec(F7, ((0, 1), cube_roots, tuple(range(7)))))
F13 = GF(13)
fourth_roots = (0,) + tuple(cyclic_subgroup(F13, 5))       # {0, 1, 5, 8, 12}
cases.append(CartesianSpec(F13, ((0, 1), fourth_roots)))
F16 = GF(2, 4)
fifth_roots = (0,) + tuple(cyclic_subgroup(F16, 8))              # order 5 in GF(16)*
cases.append(CartesianSpec(F16, ((0, 1), fifth_roots)))

for spec in cases:
    assert validate(spec).valid
    top = sum(s - 1 for s in spec.sizes[1:])
    report = check_conjecture(spec, range(1, top + 1), budget)
    print(spec.sizes, report.classification)
    for e in report.entries:
        print(f"  d={e.degree}: conjectured {e.conjectured}, measured {e.measured}, {e.status}")
    if report.refuted:
        print(json.dumps(report.to_dict(), indent=2))
