"""Independent reference computations for the tests.

Nothing here imports the package's linear algebra or ideal code: polynomials
are plain dicts {(i, j): c}, scalars are ints mod P, and the elimination is a
textbook Gaussian elimination written out again.
"""

from itertools import permutations, product

P = 32003


# -- scalars and elimination mod p --------------------------------------------

def rank_mod(rows, p=P):
    rows = [[c % p for c in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [c * inv % p for c in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


# -- polynomials as dicts -------------------------------------------------------

def pmul(f, g, D, p=P):
    out = {}
    for (a, b), c in f.items():
        for (u, v), d in g.items():
            if a + b + u + v < D:
                k = (a + u, b + v)
                out[k] = (out.get(k, 0) + c * d) % p
    return {k: c for k, c in out.items() if c}


def padd(f, g, p=P):
    out = dict(f)
    for k, c in g.items():
        out[k] = (out.get(k, 0) + c) % p
    return {k: c for k, c in out.items() if c}


def pscale(f, c, p=P):
    return {k: v * c % p for k, v in f.items() if v * c % p}


def from_trunc(poly, p=P):
    return {(m.i, m.j): int(c) % p for m, c in poly.terms()}


def det(M, D, p=P):
    """Determinant of a square matrix of dict polys by the permutation expansion."""
    n = len(M)
    if n == 0:
        return {(0, 0): 1}
    total = {}
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = {(0, 0): 1}
        for i in range(n):
            term = pmul(term, M[i][perm[i]], D, p)
            if not term:
                break
        total = padd(total, pscale(term, sign % p, p), p)
    return total


# -- monomial ideals from partitions -------------------------------------------

def standard_set(parts):
    """Boxes x^c y^r with c < parts[r]."""
    return {(c, r) for r, row in enumerate(parts) for c in range(row)}


def integer_partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - k, k):
            yield (k,) + rest


def monomial_min_gens(S):
    """Minimal monomial generators: corners of the complement of S."""
    gens = 0
    top = max(j for _, j in S) + 2
    right = max(i for i, _ in S) + 2
    for i in range(right + 1):
        for j in range(top + 1):
            if (i, j) in S:
                continue
            if (i == 0 or (i - 1, j) in S) and (j == 0 or (i, j - 1) in S):
                gens += 1
    return gens


def _in_ideal(m, S):
    return m not in S


def _in_square(m, S):
    """Is x^m in I^2, I the monomial ideal with standard set S?"""
    i, j = m
    for a in range(i + 1):
        for b in range(j + 1):
            if _in_ideal((a, b), S) and _in_ideal((i - a, j - b), S):
                return True
    return False


def _cotangent_basis(S):
    """Monomials of I not in I^2 (a basis of I/I^2)."""
    n = len(S)
    out = []
    for d in range(2 * n + 2):
        for i in range(d + 1):
            m = (i, d - i)
            if _in_ideal(m, S) and not _in_square(m, S):
                out.append(m)
    return out


def monomial_chain_tangent_dim(chain, p=P):
    """Tangent dimension at a chain of monomial ideals given by standard sets.

    Unknowns are linear maps f_k: I_k/I_k^2 -> O/I_k. Constraints are
    O-linearity (commuting with x and y) and f_k(v) = proj(f_{k+1}(v)) for
    v in I_{k+1}.
    """
    blocks = []
    offset = 0
    for S in chain:
        B = _cotangent_basis(S)
        Sl = sorted(S)
        blocks.append((offset, B, Sl, {b: k for k, b in enumerate(B)},
                       {s: k for k, s in enumerate(Sl)}))
        offset += len(B) * len(Sl)
    N = offset
    rows = []

    def var(blk, b, s):
        off, B, Sl, bi, si = blk
        return off + bi[b] * len(Sl) + si[s]

    for S, blk in zip(chain, blocks):
        off, B, Sl, bi, si = blk
        for b in B:
            for dx, dy in ((1, 0), (0, 1)):
                vb = (b[0] + dx, b[1] + dy)
                for s in Sl:
                    row = [0] * N
                    if not _in_square(vb, S):
                        row[var(blk, vb, s)] += 1
                    for t in Sl:
                        if (t[0] + dx, t[1] + dy) == s:
                            row[var(blk, b, t)] -= 1
                    if any(row):
                        rows.append(row)
    for k in range(len(chain) - 1):
        Sk, Sn = chain[k], chain[k + 1]
        blk_k, blk_n = blocks[k], blocks[k + 1]
        for b in blk_n[1]:
            for s in blk_k[2]:
                row = [0] * N
                if not _in_square(b, Sk):
                    row[var(blk_k, b, s)] += 1
                row[var(blk_n, b, s)] -= 1
                rows.append(row)
    return N - (rank_mod(rows, p) if rows else 0)


def count_standard_tableaux(parts):
    """Hook length formula."""
    from math import factorial
    n = sum(parts)
    conj = [sum(1 for r in parts if r > c) for c in range(parts[0])] if parts else []
    hooks = 1
    for r, row in enumerate(parts):
        for c in range(row):
            hooks *= (row - c - 1) + (conj[c] - r - 1) + 1
    return factorial(n) // hooks


def point_count_punctual(n, q):
    """Points of the punctual Hilbert scheme over F_q: sum of q^(n - parts)."""
    return sum(q ** (n - len(lam)) for lam in integer_partitions(n))


# -- brute force over F_2 -----------------------------------------------------

def _mons(D):
    return [(i, d - i) for d in range(D) for i in range(d, -1, -1)]


def _span_mod2(vectors):
    """Closed span of bitmask vectors (as a set of ints)."""
    basis = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    span = {0}
    for b in basis:
        span |= {s ^ b for s in span}
    return span


def _times(v, var, D, index):
    mons = _mons(D)
    out = 0
    for k, m in enumerate(mons):
        if v >> k & 1:
            nm = (m[0] + var[0], m[1] + var[1])
            if sum(nm) < D:
                out ^= 1 << index[nm]
    return out


def _closed(span, D, index, gens=None):
    gens = span if gens is None else gens
    return all(_times(v, var, D, index) in span for v in gens for var in ((1, 0), (0, 1)))


def ideals_of_colength_f2(n):
    """All punctual ideals of colength n over F_2, as spans inside O/m^(n+1).

    Enumerated as multiplication-closed subspaces of m/m^(n+1) of the right
    dimension that contain m^n.
    """
    D = n + 1
    mons = _mons(D)
    index = {m: k for k, m in enumerate(mons)}
    top = [1 << index[m] for m in mons if sum(m) == n]
    free = [1 << index[m] for m in mons if 0 < sum(m) < n]
    need = len(free) - (n - 1) if n >= 1 else 0
    found = set()
    if n == 0:
        return [frozenset(_span_mod2([1 << k for k in range(len(mons))]))]
    # choose the subspace of m/m^n by a reduced echelon basis
    for rows in _echelon_bases(len(free), need):
        vecs = [sum(free[k] for k in range(len(free)) if r >> k & 1) for r in rows] + top
        span = frozenset(_span_mod2(vecs))
        if _closed(span, D, index, vecs):
            found.add(span)
    return sorted(found, key=sorted)


def _echelon_bases(n, k):
    """Every k-dimensional subspace of F_2^n, once, as reduced echelon rows."""
    from itertools import combinations
    for pivots in combinations(range(n), k):
        free_slots = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, n)
                      if c not in pivots]
        for bits in product((0, 1), repeat=len(free_slots)):
            rows = [1 << pc for pc in pivots]
            for (r, c), b in zip(free_slots, bits):
                if b:
                    rows[r] |= 1 << c
            yield rows


def codim_one_closed_subspaces_f2(span, n):
    """Colength-(n+1) ideals inside the ideal ``span`` (given mod m^(n+1)).

    Any such ideal contains m^(n+1), so it is a hyperplane of ``span`` that is
    closed under x and y; every hyperplane is tried.
    """
    D = n + 1
    index = {m: k for k, m in enumerate(_mons(D))}
    basis = []
    for v in sorted(span):
        r = v
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
    out = set()
    for coeffs in product((0, 1), repeat=len(basis)):
        if not any(coeffs):
            continue
        pivot = next(b for b, c in zip(basis, coeffs) if c)
        hyper = [b for b, c in zip(basis, coeffs) if not c]
        hyper += [b ^ pivot for b, c in zip(basis, coeffs) if c and b != pivot]
        span2 = frozenset(_span_mod2(hyper))
        if _closed(span2, D, index, hyper):
            out.add(span2)
    return out


# -- ideals by spanning sets -------------------------------------------------

def ideal_span_dim(gens, N, extra_power=None, min_shift=0, p=P):
    """dim of (m^min_shift * (gens) + m^extra_power) modulo m^N, by a direct span."""
    mons = _mons(N)
    index = {m: k for k, m in enumerate(mons)}
    rows = []
    for g in gens:
        for a, b in mons:
            if a + b < min_shift:
                continue
            prod = pmul({(a, b): 1}, g, N, p)
            row = [0] * len(mons)
            for k, c in prod.items():
                row[index[k]] = c
            rows.append(row)
    if extra_power is not None:
        for m in mons:
            if sum(m) >= extra_power + min_shift:
                row = [0] * len(mons)
                row[index[m]] = 1
                rows.append(row)
    return rank_mod(rows, p) if rows else 0


def colength_and_min_gens(gens, extra_power, N, p=P):
    """(colength, dim I/mI) for I = (gens) + m^extra_power, working mod m^N."""
    total = len(_mons(N))
    dI = ideal_span_dim(gens, N, extra_power, 0, p)
    dmI = ideal_span_dim(gens, N, extra_power, 1, p)
    return total - dI, dI - dmI
