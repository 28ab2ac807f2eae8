"""First-order multi-dual numbers a + sum_k g_k e_k with e_j e_k = 0.

The real part and the gradient live in an exact base field, so evaluating a
rational function on ``Dual`` inputs yields its value and all first partial
derivatives exactly.
"""


class Dual:
    __slots__ = ("val", "grad", "field")

    def __init__(self, val, grad, field):
        self.val = val
        self.grad = grad
        self.field = field

    @classmethod
    def constant(cls, c, n, field):
        return cls(field.norm(c), (0,) * n, field)

    @classmethod
    def variable(cls, c, k, n, field):
        g = [0] * n
        g[k] = 1
        return cls(field.norm(c), tuple(g), field)

    def _lift(self, other):
        if isinstance(other, Dual):
            return other
        return Dual(self.field.norm(other), (0,) * len(self.grad), self.field)

    def __add__(self, other):
        o = self._lift(other)
        norm = self.field.norm
        return Dual(norm(self.val + o.val), tuple(norm(a + b) for a, b in zip(self.grad, o.grad)),
                    self.field)

    __radd__ = __add__

    def __neg__(self):
        norm = self.field.norm
        return Dual(norm(-self.val), tuple(norm(-a) for a in self.grad), self.field)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        norm = self.field.norm
        a, b = self.val, o.val
        return Dual(norm(a * b), tuple(norm(a * gb + b * ga) for ga, gb in zip(self.grad, o.grad)),
                    self.field)

    __rmul__ = __mul__

    def inverse(self):
        if self.val == 0:
            raise ZeroDivisionError("dual number with zero real part is not invertible")
        field = self.field
        iv = field.inv(self.val)
        s = field.norm(-iv * iv)
        return Dual(iv, tuple(field.norm(s * g) for g in self.grad), field)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def is_unit(self):
        return self.val != 0

    def __eq__(self, other):
        o = self._lift(other)
        return self.val == o.val and tuple(self.grad) == tuple(o.grad)

    def __hash__(self):
        return hash((self.val, tuple(self.grad)))

    def __repr__(self):
        return f"Dual({self.val}, {list(self.grad)})"
