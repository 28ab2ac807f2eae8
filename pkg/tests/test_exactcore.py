from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nesthilb.exactcore.dual import Dual
from nesthilb.exactcore.field import Field
from nesthilb.exactcore.linalg import (DenseMatrix, Subspace, kernel_rows, rank, rank_rows,
                                       rref, solve_rows)
from nesthilb.exactcore.poly import TruncPoly, basis_size, monomial_index, monomials_below, trunc_mul

import oracles

FP = Field.prime()
QQ = Field.rationals()


def P(text, field=FP, D=None):
    return TruncPoly.parse(text, field, D)


class TestTruncMul:
    def test_difference_of_squares(self):
        assert trunc_mul(P("x+y", D=3), P("x-y", D=3), 3) == P("x^2-y^2", D=3)

    def test_truncated_away(self):
        assert trunc_mul(P("x", D=3), P("y^2", D=3), 3).is_zero()

    def test_square_of_unit(self):
        assert trunc_mul(P("1+x", D=2), P("1+x", D=2), 2) == P("1+2*x", D=2)

    def test_rational_coefficients(self):
        p = P("1/2*x+y", QQ, 3)
        assert trunc_mul(p, p, 3) == P("1/4*x^2+x*y+y^2", QQ, 3)


def polys(field, D):
    coeff = st.integers(-30, 30)
    return st.dictionaries(st.sampled_from([(m.i, m.j) for m in monomials_below(D)]), coeff,
                           max_size=8).map(lambda d: TruncPoly(field, D, d))


@given(st.data(), st.integers(1, 6), st.sampled_from([FP, QQ]))
@settings(max_examples=60, deadline=None)
def test_ring_laws(data, D, field):
    p, q, r = (data.draw(polys(field, D)) for _ in range(3))
    assert trunc_mul(p, q, D) == trunc_mul(q, p, D)
    assert trunc_mul(trunc_mul(p, q, D), r, D) == trunc_mul(p, trunc_mul(q, r, D), D)
    assert trunc_mul(p, q + r, D) == trunc_mul(p, q, D) + trunc_mul(p, r, D)


@given(st.data(), st.integers(1, 6))
@settings(max_examples=40, deadline=None)
def test_trunc_mul_matches_dict_oracle(data, D):
    p, q = data.draw(polys(FP, D)), data.draw(polys(FP, D))
    assert oracles.from_trunc(trunc_mul(p, q, D)) == oracles.pmul(
        oracles.from_trunc(p), oracles.from_trunc(q), D)


def test_monomial_order():
    # degree ascending, then x-power descending
    assert [str(m) for m in monomials_below(3)] == ["1", "x", "y", "x^2", "x*y", "y^2"]
    assert basis_size(4) == 10
    assert [monomial_index(m) for m in monomials_below(4)] == list(range(10))


class TestRref:
    def test_identity(self):
        M = DenseMatrix.identity(FP, 3)
        R, r = rref(M)
        assert r == 3 and R.rows == M.rows

    def test_zero(self):
        M = DenseMatrix.zeros(FP, 2, 4)
        R, r = rref(M)
        assert r == 0 and R.rows == M.rows

    def test_dependent_rows(self, field):
        R, r = rref(DenseMatrix.from_rows(field, [[1, 2], [2, 4]]))
        assert r == 1 and [list(row) for row in R.rows] == [[1, 2], [0, 0]]


small_matrices = st.integers(1, 4).flatmap(
    lambda n: st.integers(1, 5).flatmap(
        lambda m: st.lists(st.lists(st.integers(-3, 3), min_size=m, max_size=m),
                           min_size=n, max_size=n)))


@given(small_matrices)
@settings(max_examples=80, deadline=None)
def test_rank_agrees_over_q_and_fp(rows):
    # |det| of any minor is at most 4! * 3^4 < 32003, so the ranks must agree
    ncols = len(rows[0])
    rq = rank_rows(QQ, [[Fraction(c) for c in r] for r in rows], ncols)
    assert rq == rank_rows(FP, [[FP(c) for c in r] for r in rows], ncols)
    assert rq == oracles.rank_mod(rows)
    assert rq == rank(DenseMatrix.from_rows(QQ, rows))


def test_kernel_and_solve(field):
    rows = [[1, 1, 0], [0, 1, 1]]
    ker = kernel_rows(field, rows, 3)
    assert len(ker) == 1
    v = ker[0]
    assert all(field.norm(sum(a * b for a, b in zip(r, v))) == 0 for r in rows)
    sol = solve_rows(field, rows, [2, 3], 3)
    assert [field.norm(sum(a * b for a, b in zip(r, sol))) for r in rows] == [2, 3]
    assert solve_rows(field, [[1, 0], [1, 0]], [1, 2], 2) is None


def test_subspace_membership(fp):
    S = Subspace(fp, 3, [[1, 1, 0], [0, 0, 1]])
    assert S.dim == 2
    assert S.contains([2, 2, 5])
    assert not S.contains([1, 0, 0])
    assert S == Subspace(fp, 3, [[1, 1, 1], [0, 0, 3]])


class TestField:
    def test_parse(self):
        assert Field.parse("q").is_prime is False
        assert Field.parse("fp").p == 32003
        assert Field.parse("fp:7").p == 7
        with pytest.raises(ValueError):
            Field.parse("fp:8")

    def test_arithmetic(self):
        f = Field.prime(7)
        assert f.inv(3) == 5
        assert f.signed(6) == -1
        assert QQ("3/6") == Fraction(1, 2)

    def test_json_roundtrip(self):
        for f in (FP, QQ, Field.prime(5)):
            assert Field.from_json(f.to_json()) == f


class TestDual:
    def test_product_rule(self, fp):
        x = Dual.variable(3, 0, 2, fp)
        y = Dual.variable(5, 1, 2, fp)
        z = x * y + x * x
        assert z.val == 24 and list(z.grad) == [5 + 6, 3]

    def test_inverse(self, qq):
        x = Dual.variable(Fraction(2), 0, 1, qq)
        inv = x.inverse()
        assert inv.val == Fraction(1, 2) and list(inv.grad) == [Fraction(-1, 4)]
