"""Minimal free resolutions of punctual quotients and the Ext comparison map.

For an m-primary ideal I of colength c with minimal generators g_1..g_r the
resolution is 0 -> R^(r-1) --M--> R^r --g--> R -> 0. Syzygies are found as the
kernel of (c_i) -> sum c_i g_i on truncated coefficient vectors.

Truncation soundness: if sum c_i g_i lies in m^N then, since m^N ⊆ m^(N-c) I,
c differs from a true syzygy by an element of m^(N-c) R^r. With work degree
W = 2c+2 and N = W + min order of the g_i, the kernel projected to degree
T = c+2 is exactly the true syzygy module mod m^T. All generators have order at
most c, so a unimodular combination of syzygy columns vanishing mod m^T would
force every maximal minor into m^T, which Hilbert-Burch rules out; hence the
projected module has exactly r-1 minimal generators.
"""

from dataclasses import dataclass, field as dc_field

from .errors import ResolutionUnstable
from .exactcore.linalg import Subspace, kernel_rows, rank_rows, solve_rows
from .exactcore.poly import TruncPoly, basis_size, monomial_index, monomials_below, trunc_mul
from .ideal import PunctualIdeal, shift_vector


def minimal_generator_polys(I):
    return list(I.minimal_generators())


@dataclass
class FreeResolution:
    ideal: PunctualIdeal
    gens: list
    syz: list  # r rows of r-1 TruncPoly entries
    work_degree: int
    unit: TruncPoly = None
    minor_degree: int = 0
    _minors: list = dc_field(default=None, repr=False)

    @property
    def r(self):
        return len(self.gens)

    @property
    def betti(self):
        return [1, self.r, self.r - 1]

    def column(self, j):
        return [row[j] for row in self.syz]

    def minors(self):
        """Signed maximal minors: (-1)^i det(M with row i removed)."""
        if self._minors is None:
            self._minors = signed_minors(self.syz, self.ideal.field, self.minor_degree)
        return self._minors

    def minor_identity_holds(self):
        """True iff minors equal unit * g_i (mod m^minor_degree) for the stored unit."""
        if self.unit is None or self.unit.constant_term() == 0:
            return False
        T = self.minor_degree
        return all((d - trunc_mul(self.unit, g.with_degree(T), T)).is_zero()
                   for d, g in zip(self.minors(), self.gens))

    def syzygies_vanish(self):
        """Each column is a syzygy of the generators mod m^minor_degree (+ generator order)."""
        T = self.minor_degree
        for j in range(self.r - 1):
            acc = TruncPoly.zero(self.ideal.field, T)
            for i in range(self.r):
                acc = acc + trunc_mul(self.syz[i][j], self.gens[i].with_degree(T), T)
            if not acc.is_zero():
                return False
        return True

    def to_json(self):
        return {
            "generators": [str(g) for g in self.gens],
            "syzygy_matrix": [[str(e) for e in row] for row in self.syz],
            "betti": self.betti,
            "work_degree": self.work_degree,
            "unit_constant": self.ideal.field.signed(self.unit.constant_term())
            if self.unit is not None else None,
        }


def signed_minors(M, field, D):
    """(-1)^i det of M with row i removed, for an r x (r-1) matrix of TruncPoly."""
    r = len(M)
    if r == 0:
        return []
    ncols = r - 1
    memo = {}

    def det(rows, col):
        # determinant of the submatrix on ``rows`` (a tuple) and columns col..ncols-1
        if col == ncols:
            return TruncPoly.monomial(field, D, 0, 0)
        key = (rows, col)
        if key in memo:
            return memo[key]
        acc = TruncPoly.zero(field, D)
        for k, i in enumerate(rows):
            e = M[i][col]
            if e.is_zero():
                continue
            sub = det(rows[:k] + rows[k + 1:], col + 1)
            term = trunc_mul(e.with_degree(D), sub, D)
            acc = acc - term if k % 2 else acc + term
        memo[key] = acc
        return acc

    out = []
    for i in range(r):
        d = det(tuple(k for k in range(r) if k != i), 0)
        out.append(-d if i % 2 else d)
    return out


def _vec_index(mon_idx, comp, r):
    return mon_idx * r + comp


def _syzygy_space(gens, field, W, T):
    """Syzygies (mod m^T) of the generators, as a subspace of k^(r * basis_size(T))."""
    r = len(gens)
    d_min = min(g.order() for g in gens)
    E = W + d_min
    nW = basis_size(W)
    ncols = r * nW
    neq = basis_size(E)
    # columns of the evaluation map; unknown c_i's coefficient at monomial m
    cols = [None] * ncols
    mons = monomials_below(W)
    gvecs = [g.with_degree(E).to_vector(E) for g in gens]
    for k, m in enumerate(mons):
        for i in range(r):
            cols[_vec_index(k, i, r)] = shift_vector(gvecs[i], E, m.i, m.j)
    rows = [[cols[c][e] for c in range(ncols)] for e in range(neq)]
    rows = [row for row in rows if any(row)]
    K = kernel_rows(field, rows, ncols)
    nT = r * basis_size(T)
    return Subspace(field, nT, [v[:nT] for v in K])


def _shift_module_vector(vec, r, T, a, b):
    out = [0] * len(vec)
    n = basis_size(T)
    for comp in range(r):
        comp_vec = [vec[_vec_index(k, comp, r)] for k in range(n)]
        sh = shift_vector(comp_vec, T, a, b)
        for k, c in enumerate(sh):
            if c:
                out[_vec_index(k, comp, r)] = c
    return out


def hilbert_burch(I):
    """Minimal resolution of R/I with its Hilbert-Burch matrix."""
    cache = I._cache
    if "hb" in cache:
        return cache["hb"]
    field = I.field
    gens = minimal_generator_polys(I)
    c = I.colength
    if c == 0:
        res = FreeResolution(I, gens, [[]], 0, TruncPoly.monomial(field, 1, 0, 0), 1)
        cache["hb"] = res
        return res
    r = len(gens)
    W = 2 * c + 2
    T = c + 2
    S = _syzygy_space(gens, field, W, T)
    mS = Subspace(field, S.n, [_shift_module_vector(v, r, T, a, b)
                               for v in S.rows for a, b in ((1, 0), (0, 1))])
    chosen = mS
    columns = []
    for row in S.rows:
        if not chosen.contains(row):
            columns.append(row)
            chosen = chosen.extended([row])
    if len(columns) != r - 1:
        raise ResolutionUnstable(
            f"found {len(columns)} minimal syzygies, expected {r - 1} (colength {c})")
    mons = monomials_below(T)
    n = len(mons)
    syz = [[TruncPoly(field, T, {mons[k]: col[_vec_index(k, i, r)] for k in range(n)})
            for col in columns] for i in range(r)]
    res = FreeResolution(I, gens, syz, W, None, T)
    res.unit = _solve_unit(res.minors(), gens, field, T)
    if res.unit is None:
        raise ResolutionUnstable("maximal minors are not a unit multiple of the generators")
    cache["hb"] = res
    return res


def _solve_unit(minors, gens, field, T):
    """A unit u with minor_i = u * g_i mod m^T, or None."""
    nT = basis_size(T)
    mons = monomials_below(T)
    # unknown u on monomials; equations: coefficient of every monomial of u*g_i - minor_i
    rows, rhs = [], []
    for d, g in zip(minors, gens):
        gv = g.with_degree(T).to_vector(T)
        cols = [shift_vector(gv, T, m.i, m.j) for m in mons]
        dv = d.to_vector(T)
        for e in range(nT):
            rows.append([cols[u][e] for u in range(nT)])
            rhs.append(dv[e])
    sol = solve_rows(field, rows, rhs, nT)
    if sol is None or sol[0] == 0:
        return None
    return TruncPoly.from_vector(field, T, sol)


def transpose_action(res, J):
    """Matrix (rows) of M^T : (O/J)^r -> (O/J)^(r-1), with J ⊇ the ideal."""
    r = res.r
    n = J.colength
    ncols = r * n
    out_rows = [[0] * ncols for _ in range((r - 1) * n)]
    for i in range(r):
        for j in range(r - 1):
            e = res.syz[i][j]
            if e.is_zero():
                continue
            mult = J.multiplication_matrix(e)  # mult[s] = NF(e * s)
            for s, colvec in enumerate(mult):
                for t, v in enumerate(colvec):
                    if v:
                        out_rows[j * n + t][i * n + s] = v
    return out_rows


def ext_quotient_dims(I):
    """(dim Ext^0, dim Ext^1, dim Ext^2) of (O_xi, O_xi)."""
    res = hilbert_burch(I)
    n = I.colength
    if n == 0:
        return (0, 0, 0)
    r = res.r
    rk = rank_rows(I.field, transpose_action(res, I), r * n)
    # d1 multiplies by the g_i, which is zero on O/I
    return (n, r * n - rk, (r - 1) * n - rk)


def rho_surjective(I):
    """True iff Ext^2(O_xi, O_xi') -> Ext^2(O_xi, O_xi) is injective, where I_xi' = m I."""
    if I.is_unit():
        return True
    res = hilbert_burch(I)
    field = I.field
    r = res.r
    Ip = I.times_max_ideal()
    n, n2 = I.colength, Ip.colength
    big = transpose_action(res, Ip)
    small = transpose_action(res, I)
    img_big = Subspace(field, (r - 1) * n2, _columns(big, r * n2))
    img_small = Subspace(field, (r - 1) * n, _columns(small, r * n))
    dim_coker_big = (r - 1) * n2 - img_big.dim
    # projection O/mI -> O/I on each standard monomial of mI
    std = Ip.standard_monomials()
    proj = I.normal_forms([TruncPoly.monomial(field, Ip.D, m.i, m.j) for m in std])
    # for a basis of coker(big), pick the unit vectors of the free columns of img_big
    induced = []
    for fc in img_big.free_columns():
        j, s = divmod(fc, n2)
        v = [0] * ((r - 1) * n)
        for t, c in enumerate(proj[s]):
            v[j * n + t] = c
        induced.append(v)
    image = img_small.extended(induced)
    return image.dim - img_small.dim == dim_coker_big


def _columns(rows, ncols):
    return [[row[c] for row in rows] for c in range(ncols)]


def resolution_report(I):
    res = hilbert_burch(I)
    report = res.to_json()
    report["colength"] = I.colength
    report["minor_identity"] = res.minor_identity_holds()
    report["ext_dims"] = list(ext_quotient_dims(I))
    report["rho_surjective"] = rho_surjective(I)
    return report
