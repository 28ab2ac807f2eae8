"""Exact coefficient fields: the rationals and prime fields.

Scalars are plain Python numbers. Over ``Q`` they are ``int`` or
``fractions.Fraction``; over ``F_p`` they are ints in ``[0, p)``. Code that is
generic in the field combines scalars with the ordinary operators and passes the
result through :meth:`Field.norm`.
"""

from fractions import Fraction

from ..errors import FieldMismatch, ParseError
from . import kernels

DEFAULT_PRIME = 32003


class Field:
    __slots__ = ("p",)

    def __init__(self, p=None):
        if p is not None:
            p = int(p)
            if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
                raise ValueError(f"{p} is not prime")
            if p >= 2**31:
                raise ValueError("prime must be below 2**31")
        self.p = p

    @classmethod
    def rationals(cls):
        return cls(None)

    @classmethod
    def prime(cls, p=DEFAULT_PRIME):
        return cls(p)

    @classmethod
    def parse(cls, spec):
        """Parse ``q`` or ``fp:<prime>`` (``fp`` alone means the default prime)."""
        s = spec.strip().lower()
        if s in ("q", "qq", "rational", "rationals"):
            return cls.rationals()
        if s in ("fp", "p"):
            return cls.prime()
        if s.startswith("fp:"):
            try:
                return cls.prime(int(s[3:]))
            except ValueError as exc:
                raise ParseError(f"bad field spec {spec!r}: {exc}", field="field") from None
        raise ParseError(f"bad field spec {spec!r}", field="field")

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "type" not in obj:
            raise ParseError("field must be an object with a 'type'", field="field")
        if obj["type"] in ("rational", "q"):
            return cls.rationals()
        if obj["type"] == "prime":
            try:
                return cls.prime(int(obj.get("p", DEFAULT_PRIME)))
            except (TypeError, ValueError) as exc:
                raise ParseError(str(exc), field="field.p") from None
        raise ParseError(f"unknown field type {obj['type']!r}", field="field.type")

    def to_json(self):
        return {"type": "rational"} if self.p is None else {"type": "prime", "p": self.p}

    @property
    def is_prime(self):
        return self.p is not None

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Q" if self.p is None else f"F_{self.p}"

    def check(self, other):
        if self != other:
            raise FieldMismatch(f"cannot mix {self!r} and {other!r}")

    # scalars

    zero = 0
    one = 1

    def norm(self, x):
        return x if self.p is None else x % self.p

    def __call__(self, value):
        """Coerce an int, Fraction or ``"a/b"`` string into this field."""
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            if self.p is None:
                return value.numerator if value.denominator == 1 else value
            return (value.numerator * self.inv(value.denominator % self.p)) % self.p
        if isinstance(value, int):
            return value if self.p is None else value % self.p
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("division by zero in field")
        if self.p is None:
            return Fraction(1) / x
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("division by zero in field")
        return pow(x, self.p - 2, self.p)

    def div(self, a, b):
        return self.norm(a * self.inv(b))

    def signed(self, x):
        """Representative used for printing (symmetric range over F_p)."""
        if self.p is None:
            return x
        x %= self.p
        return x - self.p if x > self.p // 2 else x

    def random(self, rng, bound=None):
        """Uniform element of F_p, or an integer in ``[-bound, bound]`` over Q."""
        if self.p is None:
            b = 50 if bound is None else bound
            return rng.randint(-b, b)
        if bound is None:
            return rng.randrange(self.p)
        return rng.randint(-bound, bound) % self.p

    def random_nonzero(self, rng, bound=None):
        while True:
            x = self.random(rng, bound)
            if x != 0:
                return x

    # dense linear algebra on lists of rows

    def rref_rows(self, rows, ncols):
        if self.p is None:
            return kernels.rref_generic(rows, ncols, self)
        return kernels.rref_modp(rows, ncols, self.p)

    def reduce_rows(self, vecs, basis, pivots, ncols):
        if self.p is None:
            return kernels.reduce_generic(vecs, basis, pivots, ncols, self)
        return kernels.reduce_modp(vecs, basis, pivots, ncols, self.p)


QQ = Field.rationals()
