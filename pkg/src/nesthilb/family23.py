"""An explicit 46-parameter family of complete punctual chains of lengths 1..23.

Between m^k (colength T_k = k(k+1)/2) and m^(k+1), the ideal of colength t is
U_t + m^(k+1) with U_t a subspace of the degree-k forms S_k of dimension
g = T_(k+1) - t. Writing e_s = x^(k-s) y^s, U_t is spanned by

    e_s + a * e_g + sum_{j > g} b_j e_j      (s = 0..g-1)

where a is a free parameter and the b_j are forced by the containment
U_t ⊆ U_(t-1). The chain stops at colength 23, inside the k = 6 block.

By default every U_t comes with its m^(k+1) summand, and then no containment
system is ever singular. With ``literal_i4=True`` the colength-4 ideal is
built from its two quadrics alone; that ideal has colength 4 unless
a_3 + a_2^2 = 0, the one degeneracy of the family.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import DegenerateParameters, NotFiniteColength
from .exactcore.dual import Dual
from .exactcore.linalg import rank_rows
from .exactcore.poly import TruncPoly
from .ideal import PunctualIdeal, ZeroDimIdeal
from .nest import NestChain, validate_chain

N_PARAMS = 46
LENGTH = 23
CURVILINEAR_DIM = 2 * LENGTH


def _T(k):
    return k * (k + 1) // 2


def _levels():
    """(t, k, g) for each colength t = 1..23; g = 0 marks a power of m."""
    out = []
    for t in range(1, LENGTH + 1):
        k = max(k for k in range(1, 8) if _T(k) <= t)
        out.append((t, k, _T(k + 1) - t if _T(k) != t else 0))
    return out


LEVELS = _levels()


def _labels():
    """a-index for each (t, s) and b-indices for each (t, s, j); 0-based."""
    a_lab, b_lab = {}, {}
    na = nb = 0
    for t, k, g in LEVELS:
        if g == 0:
            continue
        order = list(range(g))
        if k == 2 and g == 2:
            # xy + a_2 y^2 comes first, then x^2 + a_3 y^2
            order = [1, 0]
        for s in order:
            a_lab[(t, s)] = na
            na += 1
        for s in range(g):
            for j in range(g + 1, k + 1):
                b_lab[(t, s, j)] = nb
                nb += 1
    return a_lab, b_lab, na, nb


A_LABELS, B_LABELS, _NA, N_SOLVED = _labels()
assert _NA == N_PARAMS


@dataclass(frozen=True)
class ParameterVector:
    field: object
    a: tuple

    def __post_init__(self):
        if len(self.a) != N_PARAMS:
            raise ValueError(f"need exactly {N_PARAMS} parameters, got {len(self.a)}")
        object.__setattr__(self, "a", tuple(self.field(c) for c in self.a))

    @classmethod
    def zeros(cls, field):
        return cls(field, (0,) * N_PARAMS)

    @classmethod
    def random(cls, field, rng, bound=None):
        if field.is_prime:
            return cls(field, tuple(field.random(rng, bound) for _ in range(N_PARAMS)))
        b = bound or 20
        return cls(field, tuple(Fraction(rng.randint(-b, b), rng.randint(1, b))
                                for _ in range(N_PARAMS)))

    def scaled(self, c):
        return ParameterVector(self.field, tuple(self.field.norm(x * c) for x in self.a))

    def with_entry(self, k, value):
        a = list(self.a)
        a[k] = value
        return ParameterVector(self.field, tuple(a))


def graded_pieces(a, zero, one):
    """Coefficient rows of each U_t on e_0..e_k, plus the solved b values.

    Works for any scalar type with + and * (field elements or dual numbers).
    Returns (pieces, b) where pieces[t-1] is None for powers of m.
    """
    pieces = [None] * LENGTH
    b = [zero] * N_SOLVED
    prev = None  # rows of the previous subspace in the same block
    for t, k, g in LEVELS:
        if g == 0:
            prev = None
            continue
        rows = []
        for s in range(g):
            row = [zero] * (k + 1)
            row[s] = one
            row[g] = a[A_LABELS[(t, s)]]
            if prev is not None:
                # unique solution of the containment in prev = span of rows
                # e_s' + (tail beyond s' >= g+1), echelon on e_0..e_g:
                # v = prev[s] + a * prev[g]
                for j in range(g + 1, k + 1):
                    val = prev[s][j] + row[g] * prev[g][j]
                    row[j] = val
                    b[B_LABELS[(t, s, j)]] = val
            rows.append(row)
        pieces[t - 1] = rows
        prev = rows
    return pieces, b


def _poly_of_row(row, k, field):
    return TruncPoly(field, k + 1, {(k - s, s): c for s, c in enumerate(row) if c != 0})


@dataclass
class SolvedFamily:
    a: ParameterVector
    b: list
    chain: NestChain = None
    genericity_ok: bool = True
    diagnostics: list = dc_field(default_factory=list)

    def to_json(self):
        f = self.a.field
        return {
            "a": [str(f.signed(x)) for x in self.a.a],
            "b": [str(f.signed(x)) for x in self.b],
            "lengths": self.chain.lengths if self.chain is not None else None,
            "genericity_ok": self.genericity_ok,
            "diagnostics": self.diagnostics,
        }


def build_ideals(a, literal_i4=False):
    """The 23 punctual ideals; raises DegenerateParameters on the degenerate locus."""
    field = a.field
    pieces, b = graded_pieces(a.a, 0, 1)
    ideals = []
    for (t, k, g), rows in zip(LEVELS, pieces):
        if g == 0:
            ideals.append(PunctualIdeal.max_power(field, k))
            continue
        gens = [_poly_of_row([field.norm(c) for c in r], k, field) for r in rows]
        if literal_i4 and k == 2 and g == 2:
            try:
                I = PunctualIdeal.from_generators(gens)
            except NotFiniteColength:
                raise DegenerateParameters(t, "generators share a common factor "
                                              "(a_3 + a_2^2 = 0)") from None
        else:
            I = PunctualIdeal.from_generators(gens, extra_power=k + 1)
        if I.colength != t:
            raise DegenerateParameters(t, f"colength {I.colength} instead of {t}")
        ideals.append(I)
    return ideals, [field.norm(x) for x in b]


def build_chain(a, strict=True, literal_i4=False):
    """Build I_1..I_23; with strict=False degeneracy is reported instead of raised."""
    try:
        ideals, b = build_ideals(a, literal_i4)
    except DegenerateParameters as exc:
        if strict:
            raise
        _, b = graded_pieces(a.a, 0, 1)
        return SolvedFamily(a, [a.field.norm(x) for x in b], None, False,
                            [{"index": exc.index, "reason": exc.reason}])
    chain = NestChain([ZeroDimIdeal.punctual(I) for I in ideals])
    report = validate_chain(chain)
    fam = SolvedFamily(a, b, chain, report.valid and report.lengths == list(range(1, LENGTH + 1)))
    if not fam.genericity_ok:
        k = report.links.index(False) if False in report.links else None
        fam.diagnostics.append({"index": None if k is None else k + 2,
                                "reason": report.detail or "unexpected colengths"})
        if strict:
            raise DegenerateParameters(fam.diagnostics[0]["index"], fam.diagnostics[0]["reason"])
    return fam


def verify_family(a, literal_i4=False):
    """Build, validate and check punctuality; failures are reported, not raised."""
    field = a.field
    fam = build_chain(a, strict=False, literal_i4=literal_i4)
    out = {"genericity_ok": fam.genericity_ok, "diagnostics": fam.diagnostics}
    if fam.chain is None:
        out.update({"valid": False, "lengths": None, "lengths_ok": False, "punctual": False,
                    "m7_contained": False, "ok": False})
        return out
    report = validate_chain(fam.chain)
    m7 = PunctualIdeal.max_power(field, 7)
    out.update({
        "valid": report.valid,
        "lengths": report.lengths,
        "lengths_ok": report.lengths == list(range(1, LENGTH + 1)),
        "links": report.links,
        "punctual": all(I.support() == [(0, 0)] for I in fam.chain.ideals),
        "m7_contained": all(I.localize((0, 0)).contains(m7) for I in fam.chain.ideals),
        "b": [str(field.signed(x)) for x in fam.b],
    })
    out["ok"] = bool(out["valid"] and out["lengths_ok"] and out["punctual"]
                     and out["m7_contained"])
    return out


def chart_coordinates(a_values, zero, one):
    """Non-pivot entries of every U_t (affine chart coordinates of the chain)."""
    pieces, _ = graded_pieces(a_values, zero, one)
    coords = []
    for (t, k, g), rows in zip(LEVELS, pieces):
        if rows is None:
            continue
        for row in rows:
            coords.extend(row[g:])
    return coords


def differential_rank(a, active=None, literal_i4=False):
    """Rank of the Jacobian of a -> chart coordinates, by dual-number evaluation.

    ``active`` restricts to a subset of parameters, the others frozen.
    """
    field = a.field
    build_ideals(a, literal_i4)  # raises on the degenerate locus
    active = list(range(N_PARAMS)) if active is None else list(active)
    n = len(active)
    pos = {k: i for i, k in enumerate(active)}
    duals = [Dual.variable(x, pos[k], n, field) if k in pos else Dual.constant(x, n, field)
             for k, x in enumerate(a.a)]
    zero = Dual.constant(0, n, field)
    one = Dual.constant(1, n, field)
    coords = chart_coordinates(duals, zero, one)
    jac = [list(c.grad) for c in coords]
    return rank_rows(field, jac, n)


def padded_bound(ns):
    """Component-dimension bound from padding the 23-step family with general points."""
    k = len(ns)
    total = 48 + 2 * (ns[0] - 1)
    total += sum(2 * (ns[i] - ns[i - 1] - 1) for i in range(1, min(LENGTH, k)))
    total += sum(2 * (ns[i] - ns[i - 1]) for i in range(LENGTH, k))
    return total


def reducibility_criterion(ns):
    ns = list(ns)
    if any(a >= b for a, b in zip(ns, ns[1:])) or not ns or ns[0] < 1:
        raise ValueError("lengths must be positive and strictly increasing")
    k = len(ns)
    criteria = []
    bound = None
    if k > 22:
        criteria.append("k>22")
        bound = padded_bound(ns)
    if k > 21 and ns[0] > 1:
        criteria.append("k>21,n_1>1")
        bound = padded_bound([1] + ns)
    return {
        "lengths": ns, "criteria": criteria, "component_bound": bound,
        "curvilinear_dim": 2 * ns[-1],
        "reducible": (bound > 2 * ns[-1]) if bound is not None else None,
    }


def reducibility_summary(tuples=()):
    punctual = N_PARAMS
    global_dim = punctual + 2  # moving the support point
    out = {
        "punctual_family_dim": punctual,
        "global_component_dim": global_dim,
        "curvilinear_dim": CURVILINEAR_DIM,
        "reducible": global_dim > CURVILINEAR_DIM,
        "tuples": [reducibility_criterion(ns) for ns in tuples],
    }
    return out
