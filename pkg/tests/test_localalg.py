import random
from fractions import Fraction

import pytest

from conftest import random_nonzero_poly
from folgerm.localalg import (
    LOCAL_ORDER,
    QuotientOperator,
    TruncationError,
    kernel_rank,
    macaulay_dim,
    mult_operator,
    normal_form,
    quotient_dim,
    stabilized_macaulay_dim,
    standard_basis,
)
from folgerm.polynomials import Poly, parse_poly


def P(text, **params):
    return parse_poly(text, 2, {k: Fraction(v) for k, v in params.items()})


def fk_components(k, lam=1):
    params = {"lambda": Fraction(lam), "k": None}
    p = parse_poly(
        f"y*(2*x^{2 * k - 2}+2*(lambda+1)*x^2*y^{k - 2}-y^{k - 1})", 2,
        {"lambda": Fraction(lam)},
    )
    q = parse_poly(
        f"x*(y^{k - 1}-(lambda+1)*x^2*y^{k - 2}-x^{2 * k - 2})", 2,
        {"lambda": Fraction(lam)},
    )
    return p, q


class TestLocalOrder:
    def test_one_is_maximal(self):
        assert LOCAL_ORDER.greater((0, 0), (1, 0))
        assert LOCAL_ORDER.greater((0, 0), (0, 5))

    def test_lower_degree_wins(self):
        assert LOCAL_ORDER.greater((1, 0), (1, 1))
        assert LOCAL_ORDER.greater((0, 2), (5, 3))

    def test_tie_break_prefers_x(self):
        assert LOCAL_ORDER.greater((1, 0), (0, 1))
        assert LOCAL_ORDER.greater((2, 1), (1, 2))

    def test_total_and_multiplicative(self):
        rng = random.Random(3)
        monos = [(rng.randint(0, 4), rng.randint(0, 4)) for _ in range(40)]
        for m1 in monos:
            for m2 in monos:
                if m1 != m2:
                    assert LOCAL_ORDER.greater(m1, m2) != LOCAL_ORDER.greater(m2, m1)
                    shift = (1, 2)
                    shifted = (
                        tuple(a + b for a, b in zip(m1, shift)),
                        tuple(a + b for a, b in zip(m2, shift)),
                    )
                    assert LOCAL_ORDER.greater(m1, m2) == LOCAL_ORDER.greater(*shifted)

    def test_leading_term(self):
        lm, lc = LOCAL_ORDER.leading_term(P("x - x^2"))
        assert lm == (1, 0) and lc == 1
        lm, _ = LOCAL_ORDER.leading_term(P("x^2*y + x*y^2 + y^5"))
        assert lm == (2, 1)


class TestStandardBasis:
    def test_maximal_ideal(self):
        sb = standard_basis([P("x"), P("y")])
        assert sb.leading_ideal == ((1, 0), (0, 1))
        assert sb.quotient_basis == ((0, 0),)
        assert quotient_dim(sb) == 1

    def test_unit_factor_is_invisible_locally(self):
        sb = standard_basis([P("x - x^2"), P("y")])
        assert sb.leading_ideal == ((1, 0), (0, 1))
        assert quotient_dim(sb) == 1

    def test_cusp_jacobian(self):
        sb = standard_basis([P("-3*x^2"), P("2*y")])
        assert sb.quotient_basis == ((0, 0), (1, 0))
        assert quotient_dim(sb) == 2

    def test_infinite_quotient(self):
        sb = standard_basis([P("x")])
        assert sb.quotient_basis is None
        assert quotient_dim(sb) is None

    def test_unit_ideal(self):
        sb = standard_basis([P("1 + x")])
        assert quotient_dim(sb) == 0
        assert sb.quotient_basis == ()

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            standard_basis([Poly.zero(2)])

    def test_fk5_tjurina_staircase(self):
        p, q = fk_components(5)
        sb = standard_basis([P("x*y"), p, q])
        assert quotient_dim(sb) == 13

    def test_completion_example_needing_spolys(self):
        # (y^2 - x^3, x*y): s-pair produces x^4 and friends.
        sb = standard_basis([P("y^2 - x^3"), P("x*y")])
        dim = quotient_dim(sb)
        assert dim == macaulay_dim([P("y^2 - x^3"), P("x*y")], 12)


class TestNormalForm:
    def test_member_reduces_to_zero(self):
        sb = standard_basis([P("x"), P("y^2")])
        assert normal_form(P("x^2 + y^3"), sb).is_zero

    def test_radial_square_membership(self):
        sb = standard_basis([P("-y"), P("x")])
        assert normal_form(P("(x*y*(x-y))^2"), sb).is_zero

    def test_fk5_square_not_member(self):
        p, q = fk_components(5)
        sb = standard_basis([p, q])
        assert not normal_form(P("(x*y)^2"), sb).is_zero

    def test_normal_form_respects_ideal(self):
        rng = random.Random(11)
        sb = standard_basis([P("y^2 - x^3"), P("x*y")])
        for _ in range(10):
            z = random_nonzero_poly(rng, max_degree=3)
            member = z * P("y^2 - x^3") + random_nonzero_poly(rng, max_degree=2) * P(
                "x*y"
            )
            assert normal_form(member, sb).is_zero


class TestCanonicalCoordinates:
    def test_difference_lies_in_ideal(self):
        rng = random.Random(19)
        sb = standard_basis([P("y^2 - x^3"), P("x*y")])
        staircase = set(sb.quotient_basis)
        for _ in range(10):
            p = random_nonzero_poly(rng, max_degree=5)
            coords = sb.reduce_to_coordinates(p)
            assert set(coords) <= staircase
            representative = Poly(2, coords)
            assert sb.contains(p - representative)

    def test_members_have_zero_coordinates(self):
        sb = standard_basis([P("-3*x^2"), P("2*y")])
        assert sb.reduce_to_coordinates(P("y^2 - x^3")) == {}


class TestMultOperator:
    def test_radial_zero_operator(self):
        sb = standard_basis([P("-y"), P("x")])
        op = mult_operator(sb, P("x*y*(x-y)"))
        assert op.basis == ((0, 0),)
        assert op.matrix == [[0]]

    def test_cusp_zero_operator(self):
        sb = standard_basis([P("-3*x^2"), P("2*y")])
        op = mult_operator(sb, P("y^2 - x^3"))
        assert op.basis == ((0, 0), (1, 0))
        assert op.is_zero()

    def test_shift_operator(self):
        sb = standard_basis([P("x"), P("y^3")])
        op = mult_operator(sb, P("y"))
        assert op.basis == ((0, 0), (0, 1), (0, 2))
        assert op.matrix == [
            [0, 0, 0],
            [1, 0, 0],
            [0, 1, 0],
        ]
        assert kernel_rank(op) == (1, 2)
        assert op.compose(op).compose(op).is_zero()

    def test_rejects_infinite_quotient(self):
        sb = standard_basis([P("x")])
        with pytest.raises(ValueError):
            mult_operator(sb, P("y"))


class TestKernelRank:
    def test_zero_operator(self):
        op = QuotientOperator(((0, 0), (1, 0)), [[Fraction(0)] * 2 for _ in range(2)])
        assert kernel_rank(op) == (2, 0)

    def test_identity(self):
        n = 4
        matrix = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        op = QuotientOperator(tuple((i, 0) for i in range(n)), matrix)
        assert kernel_rank(op) == (0, 4)

    def test_empty(self):
        op = QuotientOperator((), [])
        assert kernel_rank(op) == (0, 0)


class TestMacaulayOracle:
    def test_point_values(self):
        assert macaulay_dim([P("x"), P("y")], 4) == 1
        assert macaulay_dim([P("-3*x^2"), P("2*y")], 6) == 2
        assert macaulay_dim([P("y^2 - x^3"), P("y^2 + x^3")], 8) == 6

    def test_stabilized_values(self):
        assert stabilized_macaulay_dim([P("x"), P("y")]) == 1
        assert stabilized_macaulay_dim([P("-3*x^2"), P("2*y")]) == 2
        assert stabilized_macaulay_dim([P("y^2 - x^3"), P("y^2 + x^3")]) == 6

    def test_infinite_colength_hits_cap(self):
        with pytest.raises(TruncationError):
            stabilized_macaulay_dim([P("x")], cap=16)

    def test_matches_standard_basis_on_small_corpus(self):
        rng = random.Random(29)
        checked = 0
        while checked < 8:
            f = random_nonzero_poly(rng, max_degree=3, min_order=1)
            g = random_nonzero_poly(rng, max_degree=3, min_order=1)
            try:
                sb = standard_basis([f, g])
            except ValueError:
                continue
            dim = quotient_dim(sb)
            if dim is None:
                continue
            assert stabilized_macaulay_dim([f, g]) == dim
            checked += 1
