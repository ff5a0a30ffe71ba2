"""Table-driven Gaussian elimination over GF(q), compiled with numba.

Field elements are indices into the ``add``/``mul``/``neg``/``inv`` tables
produced by :attr:`pncc.gf.GF.tables`.
"""
import numba
import numpy as np


@numba.njit(cache=True)
def echelon_insert(rows, add, mul, neg, inv):
    """Insert rows one by one into a growing echelon basis.

    Returns ``(rank, basis, pivots, chosen)``: basis row ``b`` is monic at
    column ``pivots[b]``, zero at every earlier pivot column, and spans the
    same space as original rows ``chosen[:b+1]``.
    """
    R, C = rows.shape
    cap = min(R, C)
    basis = np.zeros((cap, C), dtype=rows.dtype)
    pivots = np.zeros(cap, dtype=np.int64)
    chosen = np.zeros(cap, dtype=np.int64)
    work = np.zeros(C, dtype=rows.dtype)
    rank = 0
    for r in range(R):
        if rank == C:
            break
        for col in range(C):
            work[col] = rows[r, col]
        for b in range(rank):
            pc = pivots[b]
            c = work[pc]
            if c != 0:
                f = neg[c]
                for col in range(pc, C):
                    x = basis[b, col]
                    if x != 0:
                        work[col] = add[work[col], mul[f, x]]
        pc = -1
        for col in range(C):
            if work[col] != 0:
                pc = col
                break
        if pc < 0:
            continue
        s = inv[work[pc]]
        for col in range(pc, C):
            basis[rank, col] = mul[s, work[col]]
        pivots[rank] = pc
        chosen[rank] = r
        rank += 1
    return rank, basis[:rank], pivots[:rank], chosen[:rank]


@numba.njit(cache=True)
def back_substitute(basis, pivots, add, mul, neg):
    """Clear every pivot column above and below its pivot (in place)."""
    k, C = basis.shape
    for b in range(k - 1, -1, -1):
        pc = pivots[b]
        for o in range(k):
            if o == b:
                continue
            c = basis[o, pc]
            if c != 0:
                f = neg[c]
                for col in range(pc, C):
                    x = basis[b, col]
                    if x != 0:
                        basis[o, col] = add[basis[o, col], mul[f, x]]
    return basis


@numba.njit(cache=True)
def eval_monomials(exps, logs, exp_table, order):
    """Evaluate monomials at points given by discrete logs (-1 marks a zero coordinate)."""
    M, nv = exps.shape
    P = logs.shape[0]
    out = np.zeros((M, P), dtype=np.int64)
    for r in range(M):
        for c in range(P):
            s = 0
            zero = False
            for i in range(nv):
                e = exps[r, i]
                if e != 0:
                    lg = logs[c, i]
                    if lg < 0:
                        zero = True
                        break
                    s += e * lg
            if not zero:
                out[r, c] = exp_table[s % order]
    return out
