"""Tangent spaces of Hilbert schemes and nested Hilbert schemes at explicit points.

At a chain I_1 ⊇ I_2 ⊇ ... the tangent space is the set of tuples
phi_k ∈ Hom(I_k, O/I_k) such that phi_k restricted to I_{k+1} agrees with
phi_{k+1} followed by O/I_{k+1} -> O/I_k. Each Hom is parametrized as the kernel
of M^T on (O/I_k)^r_k, M the Hilbert-Burch matrix. Both sides of the
compatibility condition are R-linear, so it is imposed on generators of I_{k+1}.
All of this is local, so it is computed separately at each support point.
"""

from dataclasses import dataclass, field as dc_field

from .errors import NotNested
from .exactcore.linalg import rank_rows, solve_rows
from .exactcore.poly import TruncPoly, basis_size, monomials_below
from .ideal import ZeroDimIdeal, shift_vector
from .nest import NestChain, validate_chain
from .resolution import hilbert_burch, transpose_action
from .strata import monomial_ideal_of, nested_partition_chains


def express_in_generators(f, gens, E):
    """Coefficients h with f = sum h_i g_i mod m^E, or None."""
    field = f.field
    mons = monomials_below(E)
    n = basis_size(E)
    gv = [g.with_degree(E).to_vector(E) for g in gens]
    cols = [shift_vector(v, E, m.i, m.j) for v in gv for m in mons]
    rows = [[col[e] for col in cols] for e in range(n)]
    sol = solve_rows(field, rows, f.with_degree(E).to_vector(E), len(cols))
    if sol is None:
        return None
    return [TruncPoly.from_vector(field, E, sol[i * n:(i + 1) * n]) for i in range(len(gens))]


def _local_system(ideals):
    """Unknown count and constraint rows for the tangent space at one point."""
    field = ideals[0].field
    blocks = []
    offset = 0
    for I in ideals:
        if I.is_unit():
            blocks.append(None)
            continue
        res = hilbert_burch(I)
        blocks.append((offset, res, I))
        offset += res.r * I.colength
    N = offset
    rows = []
    hom_dims = []
    for b in blocks:
        if b is None:
            hom_dims.append(0)
            continue
        off, res, I = b
        mt = transpose_action(res, I)
        width = res.r * I.colength
        hom_dims.append(width - rank_rows(field, mt, width) if mt else width)
        for row in mt:
            full = [0] * N
            full[off:off + width] = row
            rows.append(full)
    for k in range(len(ideals) - 1):
        lo, hi = blocks[k], blocks[k + 1]
        if lo is None:
            continue
        off_k, res_k, Ik = lo
        off_n, res_n, In = hi
        ck, cn = Ik.colength, In.colength
        # projection O/I_{k+1} -> O/I_k on standard monomials of I_{k+1}
        proj = Ik.normal_forms([TruncPoly.monomial(field, In.D, m.i, m.j)
                                for m in In.standard_monomials()])
        for j, g in enumerate(res_n.gens):
            h = express_in_generators(g, res_k.gens, 2 * ck)
            if h is None:
                raise NotNested("a generator of the smaller ideal is not in the larger one")
            block = [[0] * N for _ in range(ck)]
            for i, hi_poly in enumerate(h):
                if hi_poly.is_zero():
                    continue
                mult = Ik.multiplication_matrix(hi_poly.with_degree(Ik.D))
                for s, colvec in enumerate(mult):
                    for t, v in enumerate(colvec):
                        if v:
                            row = block[t]
                            c = off_k + i * ck + s
                            row[c] = field.norm(row[c] + v)
            for s, colvec in enumerate(proj):
                for t, v in enumerate(colvec):
                    if v:
                        row = block[t]
                        c = off_n + j * cn + s
                        row[c] = field.norm(row[c] - v)
            rows.extend(block)
    return N, rows, hom_dims


@dataclass
class TangentReport:
    description: str
    lengths: list
    hom_dims: list
    constrained_dim: int
    expected_dim: int
    extra: dict = dc_field(default_factory=dict)

    @property
    def excess(self):
        return self.constrained_dim - self.expected_dim

    def to_json(self):
        out = {"fixed_point": self.description, "lengths": self.lengths,
               "hom_dims": self.hom_dims, "tangent_dim": self.constrained_dim,
               "expected_dim": self.expected_dim, "excess": self.excess}
        out.update(self.extra)
        return out


def tangent_dim_point(xi):
    """dim Hom(I, O/I), summed over the support."""
    total = 0
    for I in xi.pieces.values():
        N, rows, _ = _local_system([I])
        total += N - (rank_rows(I.field, rows, N) if rows else 0)
    return total


def expected_dim(lengths):
    # the locus of chains of distinct reduced points has dimension 2 * n_max
    return 2 * max(lengths) if lengths else 0


def tangent_dim_chain(chain, description=None):
    if isinstance(chain, ZeroDimIdeal):
        chain = NestChain([chain])
    report = validate_chain(chain)
    if not report.valid and report.failure == "containment":
        raise NotNested(report.detail)
    ideals = chain.ideals
    field = chain.field
    hom = [0] * len(ideals)
    total = 0
    for q in ideals[-1].support():
        local = [I.localize(q) for I in ideals]
        N, rows, hd = _local_system(local)
        total += N - (rank_rows(field, rows, N) if rows else 0)
        hom = [a + b for a, b in zip(hom, hd)]
    return TangentReport(description or repr(chain), report.lengths, hom, total,
                         expected_dim(report.lengths))


def monomial_chain(partitions_chain, field):
    return NestChain([ZeroDimIdeal.punctual(monomial_ideal_of(lam, field))
                      for lam in partitions_chain])


def _describe(pchain):
    return " ⊂ ".join(str(lam) for lam in pchain)


def census(offsets, n_max, field, n_min=1):
    """Tangent reports at every torus-fixed chain with lengths n + offsets."""
    offsets = list(offsets)
    reports = []
    for n in range(n_min, n_max + 1):
        lengths = [n + o for o in offsets]
        for pc in nested_partition_chains(lengths):
            rep = tangent_dim_chain(monomial_chain(pc, field), _describe(pc))
            rep.extra.update({"pattern": pattern_string(offsets), "n": n})
            reports.append(rep)
    reports.sort(key=lambda r: (r.extra["n"], r.description))
    return reports


def pattern_string(offsets):
    return ",".join("n" if o == 0 else f"n+{o}" for o in offsets)


def parse_pattern(text):
    """'n,n+1,n+2' -> [0, 1, 2]."""
    offsets = []
    for part in text.replace(" ", "").split(","):
        if part == "n":
            offsets.append(0)
        elif part.startswith("n+") and part[2:].isdigit():
            offsets.append(int(part[2:]))
        else:
            raise ValueError(f"bad pattern element {part!r}")
    if any(a >= b for a, b in zip(offsets, offsets[1:])):
        raise ValueError("pattern must be strictly increasing")
    return offsets


def summarize(reports):
    by_n = {}
    for r in reports:
        by_n.setdefault(r.extra["n"], []).append(r)
    rows = []
    for n, rs in sorted(by_n.items()):
        rows.append({
            "n": n, "fixed_points": len(rs),
            "min_tangent_dim": min(r.constrained_dim for r in rs),
            "max_tangent_dim": max(r.constrained_dim for r in rs),
            "expected_dim": rs[0].expected_dim,
            "max_excess": max(r.excess for r in rs),
            "excess_points": [r.description for r in rs if r.excess > 0],
        })
    return rows
