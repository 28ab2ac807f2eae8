"""Pure-Python elimination kernels (fallback for the compiled module).

Same calling convention as ``_kernels``: rows are lists of ints in ``[0, p)``.
The generic variants take the field object and handle rationals.
"""


def _support(row):
    return [j for j, c in enumerate(row) if c]


def rref_modp(rows, ncols, p):
    rows = [list(r) for r in rows]
    nrows = len(rows)
    pivots = []
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = pow(prow[col], p - 2, p)
        if inv != 1:
            prow = rows[rank] = [(c * inv) % p for c in prow]
        supp = [j for j in range(col, ncols) if prow[j]]
        for i in range(nrows):
            if i == rank:
                continue
            ri = rows[i]
            f = ri[col]
            if f:
                for j in supp:
                    ri[j] = (ri[j] - f * prow[j]) % p
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def reduce_modp(vecs, basis, pivots, ncols, p):
    supports = [_support(b) for b in basis]
    out = []
    for vec in vecs:
        v = list(vec)
        for b, pc, supp in zip(basis, pivots, supports):
            c = v[pc]
            if c:
                for j in supp:
                    v[j] = (v[j] - c * b[j]) % p
        out.append(v)
    return out


def rref_generic(rows, ncols, field):
    """Row reduction using only the field protocol (norm/inv/zero test)."""
    norm, inv = field.norm, field.inv
    rows = [list(r) for r in rows]
    nrows = len(rows)
    pivots = []
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        c = prow[col]
        if c != 1:
            ic = inv(c)
            prow = rows[rank] = [norm(e * ic) for e in prow]
        supp = [j for j in range(col, ncols) if prow[j] != 0]
        for i in range(nrows):
            if i == rank:
                continue
            ri = rows[i]
            f = ri[col]
            if f != 0:
                for j in supp:
                    ri[j] = norm(ri[j] - f * prow[j])
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def reduce_generic(vecs, basis, pivots, ncols, field):
    norm = field.norm
    supports = [[j for j, c in enumerate(b) if c != 0] for b in basis]
    out = []
    for vec in vecs:
        v = list(vec)
        for b, pc, supp in zip(basis, pivots, supports):
            c = v[pc]
            if c != 0:
                for j in supp:
                    v[j] = norm(v[j] - c * b[j])
        out.append(v)
    return out
