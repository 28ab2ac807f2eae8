from fractions import Fraction

import pytest

from nesthilb.errors import DegenerateParameters
from nesthilb.exactcore.dual import Dual
from nesthilb.exactcore.field import Field
from nesthilb.exactcore.linalg import Subspace
from nesthilb.exactcore.poly import TruncPoly
from nesthilb.family23 import (A_LABELS, B_LABELS, LEVELS, N_PARAMS, N_SOLVED, ParameterVector,
                               build_chain, build_ideals, padded_bound, differential_rank,
                               graded_pieces, reducibility_criterion, reducibility_summary,
                               verify_family)
from nesthilb.ideal import PunctualIdeal
from nesthilb.sampling import make_rng

import oracles

FP = Field.prime()
QQ = Field.rationals()

# positions of a_1..a_4 and b_1 in the 0-based parameter vectors
A1, A2, A3, A4 = (A_LABELS[(2, 0)], A_LABELS[(4, 1)], A_LABELS[(4, 0)], A_LABELS[(5, 0)])
B1 = B_LABELS[(5, 0, 2)]


@pytest.fixture(scope="module")
def sample():
    return ParameterVector.random(FP, make_rng(7))


def test_counts():
    assert N_PARAMS == 46 and len(A_LABELS) == 46
    assert N_SOLVED == 40 and len(B_LABELS) == 40
    assert [t for t, k, g in LEVELS if g == 0] == [1, 3, 6, 10, 15, 21]
    assert (A1, A2, A3, A4, B1) == (0, 1, 2, 3, 0)


def test_first_solved_coefficient(sample):
    a = sample.a
    _, b = graded_pieces(a, 0, 1)
    assert FP.norm(b[B1]) == FP.norm(a[A3] + a[A2] * a[A4])
    # oracle: x^2 + a4 xy + b y^2 minus the two quadrics leaves (b - a3 - a2 a4) y^2
    q = {(2, 0): 1, (1, 1): a[A4], (0, 2): FP.norm(b[B1])}
    rem = oracles.padd(q, oracles.pscale({(2, 0): 1, (0, 2): a[A3]}, oracles.P - 1))
    rem = oracles.padd(rem, oracles.pscale({(1, 1): 1, (0, 2): a[A2]}, oracles.P - a[A4]))
    assert rem == {}


def test_first_solved_gradient(sample):
    n = N_PARAMS
    duals = [Dual.variable(x, k, n, FP) for k, x in enumerate(sample.a)]
    _, b = graded_pieces(duals, Dual.constant(0, n, FP), Dual.constant(1, n, FP))
    grad = b[B1].grad
    assert (grad[A2], grad[A3], grad[A4]) == (sample.a[A4], 1, sample.a[A2])
    assert all(grad[k] == 0 for k in range(n) if k not in (A2, A3, A4))


def test_graded_pieces_are_the_ideals(sample):
    pieces, _ = graded_pieces(sample.a, 0, 1)
    ideals, _ = build_ideals(sample)
    for (t, k, g), rows, I in zip(LEVELS, pieces, ideals):
        assert I.colength == t
        if rows is None:
            assert I == PunctualIdeal.max_power(FP, k)
            continue
        # degree-k block of the ideal modulo m^(k+1) is the span of the rows
        sub = I.at_degree(k + 1)
        lo = k * (k + 1) // 2
        block = Subspace(FP, k + 1, [r[lo:lo + k + 1] for r in sub.rows])
        assert block == Subspace(FP, k + 1, [[FP.norm(c) for c in r] for r in rows])


@pytest.mark.parametrize("k", range(5))
def test_random_members_over_fp(k):
    rep = verify_family(ParameterVector.random(FP, make_rng(300 + k)))
    assert rep["ok"] and rep["lengths"] == list(range(1, 24)) and rep["m7_contained"]


def test_random_member_over_q():
    a = ParameterVector.random(QQ, make_rng(11))
    assert any(isinstance(x, Fraction) and x.denominator > 1 for x in a.a)
    rep = verify_family(a)
    assert rep["ok"] and rep["punctual"]


def test_all_zero_parameters():
    a = ParameterVector.zeros(FP)
    fam = build_chain(a)
    assert fam.genericity_ok and all(x == 0 for x in fam.b)
    assert fam.chain.lengths == list(range(1, 24))
    assert all(I.localize((0, 0)).is_monomial() for I in fam.chain.ideals)
    assert verify_family(a)["ok"]


def test_degenerate_literal_colength_four():
    a = ParameterVector.random(FP, make_rng(5))
    a = a.with_entry(A3, FP.norm(-a.a[A2] * a.a[A2]))
    with pytest.raises(DegenerateParameters) as exc:
        build_chain(a, literal_i4=True)
    assert exc.value.index == 4
    rep = verify_family(a, literal_i4=True)
    assert not rep["ok"] and rep["diagnostics"][0]["index"] == 4
    # the default reading keeps m^3 and is not degenerate there
    assert verify_family(a)["ok"]


def test_literal_reading_agrees_generically(sample):
    assert build_ideals(sample, literal_i4=True)[0] == build_ideals(sample)[0]


@pytest.mark.parametrize("field", [FP, QQ], ids=["fp", "q"])
def test_differential_rank(field):
    a = ParameterVector.random(field, make_rng(21))
    assert differential_rank(a) == 46


def test_rank_at_five_rational_samples():
    rng = make_rng(31)
    assert [differential_rank(ParameterVector.random(QQ, rng)) for _ in range(5)] == [46] * 5


def test_rank_invariant_under_scaling(sample):
    assert differential_rank(sample.scaled(5)) == differential_rank(sample) == 46


def test_rank_of_first_ten(sample):
    assert differential_rank(sample, active=range(10)) == 10


def test_injectivity(sample):
    other = sample.with_entry(17, FP.norm(sample.a[17] + 1))
    a_ideals, _ = build_ideals(sample)
    b_ideals, _ = build_ideals(other)
    assert any(I != J for I, J in zip(a_ideals, b_ideals))


def test_determinism(sample):
    assert build_ideals(sample) == build_ideals(ParameterVector(FP, sample.a))


def test_wrong_length_rejected():
    with pytest.raises(ValueError):
        ParameterVector(FP, (0,) * 45)


class TestReducibility:
    def test_base_case(self):
        s = reducibility_summary()
        assert (s["punctual_family_dim"], s["global_component_dim"], s["curvilinear_dim"]) == (
            46, 48, 46)
        assert s["reducible"]

    def test_shifted_tuple(self):
        rep = reducibility_criterion(range(2, 25))
        assert "k>21,n_1>1" in rep["criteria"] and rep["reducible"]

    def test_short_tuple(self):
        rep = reducibility_criterion([1, 2, 3])
        assert rep["criteria"] == [] and rep["reducible"] is None

    def test_complete_chain_bound(self):
        assert padded_bound(list(range(1, 24))) == 48
        assert padded_bound(list(range(1, 30))) == 2 * 29 + 2

    def test_rejects_non_increasing(self):
        with pytest.raises(ValueError):
            reducibility_criterion([1, 1, 2])
