"""Zero-dimensional ideals of k[x,y], stored exactly.

A :class:`PunctualIdeal` is an m-primary ideal at the origin, held as its image
in k[x,y]/m^D with D = colength + 1. Because m^colength is always contained in
such an ideal, the truncation determines it. A :class:`ZeroDimIdeal` is a
finite set of punctual pieces at distinct rational points, each written in local
coordinates centred at its point.
"""

from functools import lru_cache

from .errors import InvariantViolation, NotFiniteColength
from .exactcore.linalg import Subspace
from .exactcore.poly import (Monomial, TruncPoly, basis_size, monomial_index, monomials_below,
                             trunc_mul)

#: largest truncation degree tried before declaring an ideal not of finite colength
DEFAULT_DEGREE_CAP = 40


@lru_cache(maxsize=None)
def _shift_map(D, a, b):
    """For each column index below D, the index of its product with x^a y^b (or -1)."""
    out = []
    for m in monomials_below(D):
        t = (m.i + a, m.j + b)
        out.append(monomial_index(t) if t[0] + t[1] < D else -1)
    return tuple(out)


def shift_vector(vec, D, a, b):
    smap = _shift_map(D, a, b)
    out = [0] * len(vec)
    for k, c in enumerate(vec):
        if c != 0:
            tk = smap[k]
            if tk >= 0:
                out[tk] = c
    return out


def _unit_rows(lo, hi):
    """Unit vectors (length basis_size(hi)) for every monomial of degree lo..hi-1."""
    n = basis_size(hi)
    rows = []
    for k in range(basis_size(lo), n):
        r = [0] * n
        r[k] = 1
        rows.append(r)
    return rows


def _retruncate(field, D, space, D2):
    """Image of the ideal in degree D2, given that it contains m^(D-1)."""
    if D2 == D:
        return space
    n2 = basis_size(D2)
    if D2 < D:
        keep = [(r[:n2], pc) for r, pc in zip(space.rows, space.pivots) if pc < n2]
        return Subspace.from_echelon(field, n2, [r for r, _ in keep], [pc for _, pc in keep])
    pad = n2 - space.n
    rows = [r + [0] * pad for r in space.rows]
    pivots = list(space.pivots)
    for k in range(space.n, n2):
        r = [0] * n2
        r[k] = 1
        rows.append(r)
        pivots.append(k)
    return Subspace.from_echelon(field, n2, rows, pivots)


def _saturated(space, D):
    """True if every monomial of degree D-1 lies in the space.

    In rref with degree-ascending columns, a pivot at every column of the top
    degree forces those rows to be unit vectors.
    """
    piv = space._pivset
    return all(k in piv for k in range(basis_size(D - 1), space.n))


class PunctualIdeal:
    """An m-primary ideal (or the unit ideal) at the origin of the plane."""

    __slots__ = ("field", "D", "space", "_cache")

    def __init__(self, field, D, space, *, check=True):
        self.field = field
        self.D = D
        self.space = space
        self._cache = {}
        if check:
            self.check_invariants()

    # construction

    @classmethod
    def _from_closed_space(cls, field, D, space):
        if not _saturated(space, D):
            raise InvariantViolation("saturation", f"m^{D - 1} not contained at truncation {D}")
        colength = space.n - space.dim
        return cls(field, colength + 1, _retruncate(field, D, space, colength + 1))

    @classmethod
    def from_subspace(cls, field, D, rows):
        """Ideal whose image in k[x,y]/m^D is spanned by ``rows``; must be closed and saturated."""
        space = Subspace(field, basis_size(D), rows)
        for a, b in ((1, 0), (0, 1)):
            if not space.contains_all([shift_vector(r, D, a, b) for r in space.rows]):
                raise InvariantViolation("closure", "subspace is not an ideal")
        return cls._from_closed_space(field, D, space)

    @classmethod
    def unit(cls, field):
        return cls(field, 1, Subspace.from_echelon(field, 1, [[1]], [0]))

    @classmethod
    def max_power(cls, field, k):
        """m^k."""
        if k <= 0:
            return cls.unit(field)
        colength = basis_size(k)
        D = colength + 1
        return cls(field, D, Subspace.from_echelon(field, basis_size(D), _unit_rows(k, D),
                                                   list(range(basis_size(k), basis_size(D)))))

    @classmethod
    def maximal(cls, field):
        return cls.max_power(field, 1)

    @classmethod
    def monomial(cls, field, standard):
        """Monomial ideal with the given set of standard monomials (an order ideal)."""
        standard = {Monomial(*m) for m in standard}
        for m in standard:
            if (m.i and Monomial(m.i - 1, m.j) not in standard) or (
                    m.j and Monomial(m.i, m.j - 1) not in standard):
                raise InvariantViolation("closure", "standard monomials must form a staircase")
        D = len(standard) + 1
        rows, pivots = [], []
        n = basis_size(D)
        for k, m in enumerate(monomials_below(D)):
            if m not in standard:
                r = [0] * n
                r[k] = 1
                rows.append(r)
                pivots.append(k)
        return cls(field, D, Subspace.from_echelon(field, n, rows, pivots))

    @classmethod
    def from_generators(cls, gens, extra_power=None, *, field=None, degree_cap=DEFAULT_DEGREE_CAP):
        """Smallest ideal containing ``gens`` (and m^extra_power, if given)."""
        gens = list(gens)
        if field is None:
            if not gens:
                raise ValueError("field is required when there are no generators")
            field = gens[0].field
        for g in gens:
            field.check(g.field)
        gens = [g for g in gens if not g.is_zero()]
        if not gens and extra_power is None:
            raise ValueError("an ideal needs generators or an extra power of m")
        if any(g.constant_term() != 0 for g in gens):
            raise ValueError("generators must vanish at the origin (zero constant term)")
        if extra_power is not None:
            if extra_power < 0:
                raise ValueError("extra_power must be non-negative")
            if extra_power == 0:
                return cls.unit(field)
            D = extra_power + 1
            space = cls._closure(field, gens, D, extra_power)
            return cls._from_closed_space(field, D, space)
        D = max(g.degree() for g in gens) + 2
        while True:
            space = cls._closure(field, gens, D, None)
            if _saturated(space, D):
                return cls._from_closed_space(field, D, space)
            if D >= degree_cap:
                raise NotFiniteColength(
                    f"closure at truncation degree {D} does not contain m^{D - 1}; "
                    "the generators do not cut out a finite scheme at the origin")
            D = min(2 * D, degree_cap)

    @staticmethod
    def _closure(field, gens, D, power):
        n = basis_size(D)
        rows = []
        for g in gens:
            vec = g.to_vector(D)
            order = g.with_degree(D).order()
            if order is None:
                continue
            for a in range(D - order):
                for b in range(D - order - a):
                    rows.append(shift_vector(vec, D, a, b))
        if power is not None:
            rows.extend(_unit_rows(power, D))
        return Subspace(field, n, rows)

    # invariants

    def check_invariants(self):
        D, space = self.D, self.space
        if space.n != basis_size(D):
            raise InvariantViolation("shape", "subspace dimension does not match truncation")
        for a, b in ((1, 0), (0, 1)):
            if not space.contains_all([shift_vector(r, D, a, b) for r in space.rows]):
                raise InvariantViolation("closure", f"not closed under multiplication by "
                                                    f"{'x' if a else 'y'}")
        if not _saturated(space, D):
            raise InvariantViolation("saturation", f"m^{D - 1} not contained")
        if self.colength > D - 1:
            raise InvariantViolation("colength", "colength exceeds truncation degree - 1")
        if self.colength >= 1 and any(r[0] != 0 for r in space.rows):
            raise InvariantViolation("punctual", "ideal contains a unit")

    # queries

    @property
    def colength(self):
        return self.space.n - self.space.dim

    def is_unit(self):
        return self.colength == 0

    def is_monomial(self):
        return all(sum(1 for c in r if c != 0) == 1 for r in self.space.rows)

    def at_degree(self, D2):
        """Image subspace in k[x,y]/m^D2."""
        return _retruncate(self.field, self.D, self.space, D2)

    def contains(self, other):
        """True if ``other`` (a PunctualIdeal) is contained in this ideal."""
        self.field.check(other.field)
        if other.colength < self.colength:
            return False
        return self.space.contains_all(other.at_degree(self.D).rows)

    def contains_poly(self, f):
        self.field.check(f.field)
        return self.space.contains(f.to_vector(self.D))

    def __eq__(self, other):
        if not isinstance(other, PunctualIdeal):
            return NotImplemented
        return self.field == other.field and self.D == other.D and self.space == other.space

    def __hash__(self):
        return hash((self.field, self.D, self.space))

    def standard_monomials(self):
        mons = monomials_below(self.D)
        return [mons[j] for j in self.space.free_columns()]

    def normal_forms(self, polys):
        """Coordinates in O/I (on the standard monomials) of each polynomial."""
        return self.space.quotient_coords([f.to_vector(self.D) for f in polys])

    def multiplication_matrix(self, h):
        """Matrix (list of columns) of multiplication by ``h`` on O/I."""
        D = self.D
        cols = [trunc_mul(h, TruncPoly.monomial(self.field, D, m.i, m.j), D)
                for m in self.standard_monomials()]
        return self.normal_forms(cols)

    def times_max_ideal(self):
        """The ideal m * I."""
        if "mI" in self._cache:
            return self._cache["mI"]
        D = self.D + 1
        lifted = self.at_degree(D)
        rows = [shift_vector(r, D, a, b) for r in lifted.rows for a, b in ((1, 0), (0, 1))]
        space = Subspace(self.field, basis_size(D), rows)
        if not _saturated(space, D):
            raise InvariantViolation("saturation", "m*I lost m^colength+1 (internal error)")
        result = PunctualIdeal._from_closed_space(self.field, D, space)
        self._cache["mI"] = result
        return result

    def min_gens(self):
        """dim I / mI."""
        return self.times_max_ideal().colength - self.colength

    def minimal_generators(self):
        """Minimal generators, lowest leading monomials first, reduced against each other."""
        if "gens" in self._cache:
            return self._cache["gens"]
        field = self.field
        if self.is_unit():
            gens = [TruncPoly.monomial(field, 1, 0, 0)]
        else:
            mI = self.times_max_ideal()
            D = mI.D
            chosen = mI.space
            picked = []
            for row in self.at_degree(D).rows:
                if not chosen.contains(row):
                    picked.append(row)
                    chosen = chosen.extended([row])
            gens = [TruncPoly.from_vector(field, D, r).with_degree(self.D) for r in picked]
        self._cache["gens"] = gens
        return gens

    def generator_strings(self):
        return [str(g) for g in sorted(self.minimal_generators(),
                                       key=lambda g: g.leading_monomial().grlex_key(),
                                       reverse=True)]

    def __repr__(self):
        if self.is_unit():
            return "PunctualIdeal(unit)"
        return f"PunctualIdeal(({', '.join(self.generator_strings())}), colength={self.colength})"


def ideal_product(I, J):
    """I * J for punctual ideals."""
    I.field.check(J.field)
    # m^(cI+cJ) lies in I*J
    D = I.colength + J.colength + 1
    gens = [trunc_mul(g.with_degree(D), h.with_degree(D), D)
            for g in I.minimal_generators() for h in J.minimal_generators()]
    return PunctualIdeal.from_generators(gens, extra_power=I.colength + J.colength)


def _norm_point(field, p):
    if len(p) != 2:
        raise ValueError("points have two coordinates")
    return (field(p[0]), field(p[1]))


class ZeroDimIdeal:
    """A finite-colength ideal: punctual pieces at distinct points (local coordinates)."""

    __slots__ = ("field", "pieces")

    def __init__(self, field, pieces=None):
        self.field = field
        clean = {}
        for p, I in (pieces or {}).items():
            field.check(I.field)
            p = _norm_point(field, p)
            if p in clean:
                raise InvariantViolation("support", f"point {p} given twice")
            if I.colength > 0:
                clean[p] = I
        self.pieces = dict(sorted(clean.items()))

    @classmethod
    def unit(cls, field):
        return cls(field, {})

    @classmethod
    def punctual(cls, I, point=(0, 0)):
        return cls(I.field, {point: I})

    @classmethod
    def reduced_points(cls, field, points):
        m = PunctualIdeal.maximal(field)
        pieces = {}
        for p in points:
            p = _norm_point(field, p)
            if p in pieces:
                raise InvariantViolation("support", f"point {p} given twice")
            pieces[p] = m
        return cls(field, pieces)

    @property
    def colength(self):
        return sum(I.colength for I in self.pieces.values())

    def support(self):
        return list(self.pieces)

    def localize(self, p):
        p = _norm_point(self.field, p)
        return self.pieces.get(p) or PunctualIdeal.unit(self.field)

    def local_colength(self, p):
        return self.localize(p).colength

    def contains(self, other):
        """True if ``other`` is contained in this ideal (``other`` is the bigger scheme)."""
        self.field.check(other.field)
        for p, I in self.pieces.items():
            J = other.pieces.get(p)
            if J is None or not I.contains(J):
                return False
        return True

    def with_piece(self, p, I):
        pieces = dict(self.pieces)
        p = _norm_point(self.field, p)
        pieces.pop(p, None)
        if I.colength > 0:
            pieces[p] = I
        return ZeroDimIdeal(self.field, pieces)

    def __eq__(self, other):
        if not isinstance(other, ZeroDimIdeal):
            return NotImplemented
        return self.field == other.field and self.pieces == other.pieces

    def __hash__(self):
        return hash((self.field, tuple(self.pieces.items())))

    def __repr__(self):
        inner = ", ".join(f"{p}: {I!r}" for p, I in self.pieces.items())
        return f"ZeroDimIdeal({{{inner}}}, colength={self.colength})"


def colength(I):
    return I.colength


def contains(I, J):
    """True iff J ⊆ I (as ideals), for punctual or zero-dimensional ideals."""
    if isinstance(I, PunctualIdeal) and isinstance(J, PunctualIdeal):
        return I.contains(J)
    if isinstance(I, PunctualIdeal):
        I = ZeroDimIdeal.punctual(I)
    if isinstance(J, PunctualIdeal):
        J = ZeroDimIdeal.punctual(J)
    return I.contains(J)


def min_gens(I):
    return I.min_gens()


def times_max_ideal(I):
    return I.times_max_ideal()


def localize(I, p):
    return I.localize(p)


def from_generators(gens, extra_power=None, **kw):
    return PunctualIdeal.from_generators(gens, extra_power, **kw)
