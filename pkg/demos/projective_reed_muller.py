"""
Projective Reed-Muller codes by brute force
===========================================

For small q every codeword can be listed, so the minimum distance from the
closed form is compared with an exhaustive search.
"""
from pncc import CartesianSpec, GF, exhaustive_min_distance, generator_matrix, prm_parameters

for n, q in [(1, 4), (2, 2), (2, 3), (3, 2)]:
    F = GF(*{2: (2, 1), 3: (3, 1), 4: (2, 2)}[q])
    spec = CartesianSpec(F, (tuple(range(q)),) * (n + 1))
    print(f"P^{n}(F_{q})")
    for d in range(1, n * (q - 1) + 2):
        length, dim, dist = prm_parameters(n, q, d)
        G = generator_matrix(spec, d)
        if q ** G.rank > 10 ** 6:
            print(f"  d={d}: [{length}, {dim}, {dist}]  (too many codewords to list)")
            continue
        found = exhaustive_min_distance(spec, d, matrix=G)
        print(f"  d={d}: [{length}, {dim}, {dist}]  rank {G.rank}, search finds {found.distance}")

# the simplex code shows up as P^2(F_2) at d=1: seven points, every nonzero word of weight 4
G = generator_matrix(CartesianSpec(GF(2), ((0, 1),) * 3), 1)
print(G.echelon.rows)
