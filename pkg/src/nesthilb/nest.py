"""Nested chains of zero-dimensional ideals.

Chains are listed by increasing colength, so the ideals decrease:
ideals[k+1] ⊆ ideals[k].
"""

import itertools
from dataclasses import dataclass

from .errors import InvariantViolation, NotNested, ZeroFunctional
from .exactcore.linalg import Subspace, kernel_rows
from .exactcore.poly import basis_size
from .ideal import PunctualIdeal, ZeroDimIdeal, _norm_point, shift_vector


class NestChain:
    __slots__ = ("ideals",)

    def __init__(self, ideals):
        self.ideals = list(ideals)
        if not self.ideals:
            raise ValueError("a chain needs at least one ideal")
        f = self.ideals[0].field
        for I in self.ideals:
            f.check(I.field)

    @classmethod
    def checked(cls, ideals):
        """Build a chain, raising InvariantViolation if it is not nested."""
        chain = cls(ideals)
        report = validate_chain(chain)
        if not report.valid:
            raise InvariantViolation(report.failure, report.detail)
        return chain

    @property
    def field(self):
        return self.ideals[0].field

    @property
    def lengths(self):
        return [I.colength for I in self.ideals]

    def __len__(self):
        return len(self.ideals)

    def __getitem__(self, k):
        return self.ideals[k]

    def __repr__(self):
        return f"NestChain(lengths={self.lengths})"


@dataclass
class ChainReport:
    valid: bool
    lengths: list
    links: list
    supports: list
    strictly_increasing: bool
    failure: str = None
    detail: str = ""

    def to_json(self):
        return {
            "valid": self.valid,
            "lengths": self.lengths,
            "links": self.links,
            "strictly_increasing": self.strictly_increasing,
            "supports": [[list(map(str, p)) for p in s] for s in self.supports],
            "failure": self.failure,
        }


def validate_chain(chain):
    ideals = chain.ideals
    lengths = [I.colength for I in ideals]
    links = [ideals[k].contains(ideals[k + 1]) for k in range(len(ideals) - 1)]
    strict = all(a < b for a, b in zip(lengths, lengths[1:]))
    failure, detail = None, ""
    if not all(links):
        k = links.index(False)
        failure, detail = "containment", f"link {k}: ideal {k + 1} is not contained in ideal {k}"
    elif not strict:
        failure, detail = "lengths", f"colengths not strictly increasing: {lengths}"
    return ChainReport(failure is None, lengths, links, [I.support() for I in ideals], strict,
                       failure, detail)


@dataclass(frozen=True)
class ResidualCycle:
    points: tuple  # ((point, multiplicity), ...), sorted by point

    @property
    def total(self):
        return sum(m for _, m in self.points)

    def as_dict(self):
        return dict(self.points)

    def to_json(self):
        return [{"point": [str(c) for c in p], "multiplicity": m} for p, m in self.points]


def residual(I, J):
    """Support with multiplicity of the difference of the subschemes (I ⊇ J)."""
    if not I.contains(J):
        raise NotNested("residual needs J ⊆ I")
    pts = []
    for p in J.support():
        d = J.local_colength(p) - I.local_colength(p)
        if d:
            pts.append((p, d))
    return ResidualCycle(tuple(pts))


def fiber_basis(I, p):
    """A basis of I ⊗ k(p), written in local coordinates at p."""
    return list(I.localize(p).minimal_generators())


def elementary_transform(I, p, phi):
    """Kernel of the surjection I -> k(p) given by the functional phi on fiber_basis(I, p)."""
    field = I.field
    p = _norm_point(field, p)
    basis = fiber_basis(I, p)
    phi = [field(c) for c in phi]
    if len(phi) != len(basis):
        raise ValueError(f"functional has {len(phi)} entries, fiber has dimension {len(basis)}")
    if all(c == 0 for c in phi):
        raise ZeroFunctional("phi must be nonzero")
    L = I.localize(p)
    if L.is_unit():
        return I.with_piece(p, PunctualIdeal.maximal(field))
    c = L.colength
    D = c + 2
    mL = L.times_max_ideal()
    k0 = next(k for k, v in enumerate(phi) if v != 0)
    inv = field.inv(phi[k0])
    extra = []
    for k, g in enumerate(basis):
        if k == k0:
            continue
        t = field.norm(-phi[k] * inv)
        extra.append((g.with_degree(D) + basis[k0].with_degree(D).scale(t)).to_vector(D))
    rows = mL.at_degree(D).rows + extra
    J = PunctualIdeal.from_subspace(field, D, rows)
    if J.colength != c + 1:
        raise InvariantViolation("colength", "elementary transform changed colength by "
                                             f"{J.colength - c}")
    return I.with_piece(p, J)


def _grow_locally(Iq, Jq):
    """Ideal J + (f), with f ∈ Iq ∩ (Jq : m) not in Jq, one colength smaller than Jq."""
    field = Jq.field
    D = Jq.D
    VJ = Jq.space
    A = Iq.at_degree(D).rows
    # f = sum lam_k A_k must satisfy x f, y f ∈ J
    shifted = [shift_vector(a, D, 1, 0) for a in A] + [shift_vector(a, D, 0, 1) for a in A]
    nf = VJ.quotient_coords(shifted)
    na = len(A)
    m = len(nf[0]) if nf else 0
    cons = []
    for half in (0, 1):
        for t in range(m):
            cons.append([nf[half * na + k][t] for k in range(na)])
    lams = kernel_rows(field, cons, na) if cons else [[int(i == k) for i in range(na)]
                                                      for k in range(na)]
    cands = []
    for lam in lams:
        v = [0] * VJ.n
        for k, c in enumerate(lam):
            if c:
                for idx, a in enumerate(A[k]):
                    if a:
                        v[idx] = field.norm(v[idx] + c * a)
        cands.append(v)
    rem = Subspace(field, VJ.n, VJ.reduce(cands))
    if rem.dim == 0:
        raise InvariantViolation("interpolation", "no socle element of J lies in I (internal error)")
    f = rem.rows[0]
    return PunctualIdeal.from_subspace(field, D, VJ.rows + [f])


def intermediate_chain(I, J, targets=()):
    """A chain from I to J passing through every colength in ``targets``."""
    if not I.contains(J):
        raise NotNested("intermediate_chain needs J ⊆ I")
    targets = list(targets)
    lo, hi = I.colength, J.colength
    if any(t <= lo or t >= hi for t in targets) or any(
            a >= b for a, b in zip(targets, targets[1:])):
        raise ValueError(f"targets must increase strictly between {lo} and {hi}")
    by_length = {hi: J}
    cur = J
    while cur.colength > lo:
        q = next(p for p in cur.support() if cur.local_colength(p) > I.local_colength(p))
        new_local = _grow_locally(I.localize(q), cur.localize(q))
        cur = cur.with_piece(q, new_local)
        by_length[cur.colength] = cur
    return NestChain([I] + [by_length[t] for t in targets] + [J])


@dataclass(frozen=True)
class Membership:
    in_W1: bool
    in_W2: bool

    def to_json(self):
        return {"in_W1": self.in_W1, "in_W2": self.in_W2}


def classify_universal_point(p, xi_n, xi_np1):
    """Which components of the universal family over S^[n,n+1] contain (p, xi_n, xi_np1)."""
    if xi_np1.colength - xi_n.colength != 1:
        raise NotNested("classification needs a colength gap of exactly 1")
    res = residual(xi_n, xi_np1)
    p = _norm_point(xi_n.field, p)
    (q, _), = res.points
    return Membership(xi_n.local_colength(p) > 0, p == q)



def codim_one_subideals(I):
    """Every ideal J ⊂ I at the origin with colength(J) = colength(I) + 1, by brute force.

    Runs over all hyperplanes of I/m^(c+1) and keeps the ones closed under x and
    y. Only sensible over a small prime field.
    """
    field = I.field
    if not field.is_prime:
        raise ValueError("brute-force enumeration needs a finite field")
    c = I.colength
    D = c + 2
    W = I.at_degree(c + 1).rows
    d = len(W)
    p = field.p
    if (p ** d - 1) // (p - 1) > 1 << 20:
        raise ValueError("too many hyperplanes to enumerate")
    n = basis_size(D)
    top = list(_unit_rows_of_degree(c + 1, D))
    found = []
    for phi in itertools.product(range(p), repeat=d):
        k0 = next((k for k, v in enumerate(phi) if v), None)
        if k0 is None or phi[k0] != 1:
            continue
        H = []
        for k in range(d):
            if k != k0:
                t = field.norm(-phi[k])
                H.append([field.norm(a + t * b) for a, b in zip(W[k], W[k0])] +
                         [0] * (n - len(W[k])))
        space = Subspace(field, n, H + top)
        if all(space.contains_all([shift_vector(r, D, a, b) for r in space.rows])
               for a, b in ((1, 0), (0, 1))):
            found.append(PunctualIdeal.from_subspace(field, D, space.rows))
    return found


def _unit_rows_of_degree(d, D):
    n = basis_size(D)
    for k in range(basis_size(d), basis_size(d + 1)):
        r = [0] * n
        r[k] = 1
        yield r


def punctual_ideals_bruteforce(field, n_max):
    """All punctual ideals of colength <= n_max at the origin, by repeated brute force."""
    levels = [[PunctualIdeal.unit(field)]]
    for _ in range(n_max):
        seen = {}
        for I in levels[-1]:
            for J in codim_one_subideals(I):
                seen.setdefault(J, J)
        levels.append(list(seen))
    return levels
