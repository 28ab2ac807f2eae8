"""Truncated bivariate polynomials, i.e. elements of k[x,y]/m^D.

Monomials are compared in graded lex order with x > y. Dense vectors use the
column order "degree ascending, then x-power descending", so the pivot of a
row-reduced vector is its lowest-degree, then x-heaviest, term.
"""

import re
from fractions import Fraction
from typing import NamedTuple

from ..errors import ParseError


class Monomial(NamedTuple):
    i: int  # exponent of x
    j: int  # exponent of y

    @property
    def degree(self):
        return self.i + self.j

    def grlex_key(self):
        return (self.i + self.j, self.i)

    def __str__(self):
        parts = []
        for var, e in (("x", self.i), ("y", self.j)):
            if e == 1:
                parts.append(var)
            elif e > 1:
                parts.append(f"{var}^{e}")
        return "*".join(parts) if parts else "1"


def basis_size(D):
    """Number of monomials of total degree < D."""
    return D * (D + 1) // 2


def monomial_index(m):
    d = m[0] + m[1]
    return d * (d + 1) // 2 + m[1]


def monomials_below(D):
    """Monomials of degree < D in column order."""
    return [Monomial(d - j, j) for d in range(D) for j in range(d + 1)]


def monomials_of_degree(d):
    return [Monomial(d - j, j) for j in range(d + 1)]


class TruncPoly:
    """A polynomial with all terms of degree >= D discarded."""

    __slots__ = ("field", "D", "coeffs", "_hash")

    def __init__(self, field, D, coeffs=None):
        if D < 0:
            raise ValueError("truncation degree must be non-negative")
        self.field = field
        self.D = D
        clean = {}
        if coeffs:
            norm = field.norm
            for m, c in coeffs.items():
                m = Monomial(*m)
                if m.i < 0 or m.j < 0:
                    raise ValueError(f"negative exponent in {m}")
                if m.degree >= D:
                    continue
                c = norm(c)
                if c != 0:
                    clean[m] = c
        self.coeffs = clean
        self._hash = None

    # construction

    @classmethod
    def zero(cls, field, D):
        return cls(field, D)

    @classmethod
    def monomial(cls, field, D, i, j, c=1):
        return cls(field, D, {Monomial(i, j): field(c)})

    @classmethod
    def from_vector(cls, field, D, vec):
        mons = monomials_below(D)
        return cls(field, D, {mons[k]: c for k, c in enumerate(vec) if c != 0})

    @classmethod
    def parse(cls, text, field, D=None):
        coeffs = parse_terms(text, field)
        if D is None:
            D = max((m.degree for m in coeffs), default=0) + 1
        return cls(field, D, coeffs)

    # inspection

    def to_vector(self, D=None):
        D = self.D if D is None else D
        vec = [0] * basis_size(D)
        for m, c in self.coeffs.items():
            if m.degree < D:
                vec[monomial_index(m)] = c
        return vec

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def order(self):
        """Lowest degree of a term (``None`` for zero)."""
        return min((m.degree for m in self.coeffs), default=None)

    def degree(self):
        return max((m.degree for m in self.coeffs), default=None)

    def terms(self):
        """Terms in descending graded lex order."""
        return sorted(self.coeffs.items(), key=lambda t: t[0].grlex_key(), reverse=True)

    def leading_monomial(self):
        """Graded-lex largest monomial."""
        if not self.coeffs:
            return None
        return max(self.coeffs, key=Monomial.grlex_key)

    def initial_monomial(self):
        """Lowest-degree, x-heaviest monomial (the pivot in column order)."""
        if not self.coeffs:
            return None
        return min(self.coeffs, key=monomial_index)

    def constant_term(self):
        return self.coeffs.get(Monomial(0, 0), 0)

    def coefficient(self, i, j):
        return self.coeffs.get(Monomial(i, j), 0)

    # arithmetic

    def _check(self, other):
        if not isinstance(other, TruncPoly):
            return NotImplemented
        self.field.check(other.field)
        return None

    def with_degree(self, D):
        """Re-truncate at ``D`` (raising ``D`` keeps the same representative)."""
        return TruncPoly(self.field, D, self.coeffs)

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return TruncPoly(self.field, min(self.D, other.D), out)

    def __neg__(self):
        return TruncPoly(self.field, self.D, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        return TruncPoly(self.field, self.D, {m: v * c for m, v in self.coeffs.items()})

    def shift(self, a, b):
        """Multiply by the monomial x^a y^b."""
        return TruncPoly(self.field, self.D,
                         {Monomial(m.i + a, m.j + b): c for m, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, TruncPoly):
            return trunc_mul(self, other, min(self.D, other.D))
        if isinstance(other, (int, Fraction)):
            return self.scale(self.field(other))
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncPoly):
            return NotImplemented
        return self.field == other.field and self.D == other.D and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.D, frozenset(self.coeffs.items())))
        return self._hash

    def __str__(self):
        return format_terms(self.terms(), self.field)

    def __repr__(self):
        return f"TruncPoly({str(self)!r}, D={self.D}, field={self.field!r})"


def trunc_mul(p, q, D):
    """Product of ``p`` and ``q`` in k[x,y]/m^D."""
    if D < 1:
        raise ValueError("truncation degree must be at least 1")
    p.field.check(q.field)
    field = p.field
    out = {}
    for m1, c1 in p.coeffs.items():
        d1 = m1.i + m1.j
        if d1 >= D:
            continue
        for m2, c2 in q.coeffs.items():
            if d1 + m2.i + m2.j >= D:
                continue
            key = (m1.i + m2.i, m1.j + m2.j)
            out[key] = out.get(key, 0) + c1 * c2
    return TruncPoly(field, D, out)


def series_inverse(u, D):
    """Inverse of a unit (nonzero constant term) in k[x,y]/m^D."""
    field = u.field
    c0 = u.constant_term()
    if c0 == 0:
        raise ZeroDivisionError("not a unit: zero constant term")
    ic = field.inv(c0)
    one = TruncPoly.monomial(field, D, 0, 0)
    # u = c0 (1 - n) with n nilpotent; u^-1 = ic * sum n^k
    n = one - u.with_degree(D).scale(ic)
    acc = one
    power = one
    for _ in range(1, D):
        power = trunc_mul(power, n, D)
        if power.is_zero():
            break
        acc = acc + power
    return acc.scale(ic)


# printing and parsing

def format_scalar(c, field):
    c = field.signed(c)
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)


def format_terms(terms, field):
    out = []
    for m, c in terms:
        cs = format_scalar(c, field)
        neg = cs.startswith("-")
        mag = cs[1:] if neg else cs
        if m == (0, 0):
            body = mag
        elif mag == "1":
            body = str(m)
        else:
            body = f"{mag}*{m}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("-" if neg else "+") + body)
    return "".join(out) if out else "0"


_FACTOR = re.compile(r"(?:(\d+)(?:/(\d+))?|([xy])(?:\^(\d+))?)$")


def parse_terms(text, field):
    """Parse the polynomial grammar into a monomial -> scalar dict."""
    if not isinstance(text, str):
        raise ParseError(f"polynomial must be a string, got {type(text).__name__}")
    s = "".join(text.split())
    if not s:
        raise ParseError("empty polynomial", position=0)
    out = {}
    pos = 0
    n = len(s)
    while pos < n:
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif pos > 0:
            raise ParseError(f"expected '+' or '-' in {text!r}", position=pos)
        end = pos
        while end < n and s[end] not in "+-":
            end += 1
        term = s[pos:end]
        if not term:
            raise ParseError(f"missing term in {text!r}", position=pos)
        coeff = Fraction(sign)
        i = j = 0
        offset = pos
        for factor in term.split("*"):
            mt = _FACTOR.match(factor)
            if not factor or mt is None:
                raise ParseError(f"bad factor {factor!r} in {text!r}", position=offset)
            num, den, var, exp = mt.groups()
            if num is not None:
                if den is not None and int(den) == 0:
                    raise ParseError(f"zero denominator in {text!r}", position=offset)
                coeff *= Fraction(int(num), int(den) if den else 1)
            else:
                e = int(exp) if exp is not None else 1
                if var == "x":
                    i += e
                else:
                    j += e
            offset += len(factor) + 1
        try:
            c = field(coeff)
        except ZeroDivisionError:
            raise ParseError(f"denominator not invertible in {field!r}", position=pos) from None
        key = Monomial(i, j)
        out[key] = field.norm(out.get(key, 0) + c)
        pos = end
    return {m: c for m, c in out.items() if c != 0}
