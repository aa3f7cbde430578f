import random
from fractions import Fraction

import pytest

from rankone.classify import (
    Abelian,
    AlmostAbelian,
    HypothesisViolated,
    NotClosedOutcome,
    Sl2,
    classify_abstract,
    classify_rank_one,
    find_sl2_triple,
    find_sl2_triple_abstract,
    is_sl2_triple,
    killing_form,
    lie_bracket,
    validate_structure,
    verify_abelian_centralizers,
)
from rankone.construct import almost_abelian_example, random_rank_one_span, sl2_example
from rankone.deriv import bracket
from rankone.errors import InvalidStructure, PreconditionError
from rankone.span import close_and_structure, span

from conftest import D

import oracles


def combine(basis, P):
    return [sum((Fraction(c) * b for c, b in zip(row[1:], basis[1:])), Fraction(row[0]) * basis[0]) for row in P]


class TestAbstract:
    def test_sl2(self):
        out = classify_abstract(oracles.sl2_tensor())
        assert isinstance(out, Sl2)

    def test_two_dim_non_abelian(self):
        out = classify_abstract([[[0, 0], [0, 1]], [[0, -1], [0, 0]]])
        assert isinstance(out, AlmostAbelian)
        assert out.ideal == ((0, 1),)
        assert out.b == (1, 0)

    def test_abelian(self):
        out = classify_abstract(oracles.abelian_tensor(4))
        assert out == Abelian(4)

    def test_heisenberg_violates_hypothesis(self):
        c = oracles.heisenberg_tensor()
        out = classify_abstract(c)
        assert isinstance(out, HypothesisViolated)
        # z is central, so its centralizer is everything, which is not abelian
        z = (0, 0, 1)
        assert oracles.centralizer_dim(c, z) == 3
        assert any(lie_bracket(c, (1, 0, 0), (0, 1, 0)))

    def test_invalid_tensors(self):
        bad = oracles.abelian_tensor(2)
        bad[0][1][0] = 1
        with pytest.raises(InvalidStructure):
            validate_structure(bad)
        with pytest.raises(InvalidStructure):
            classify_abstract([[[0, 0]], [[0, 0]]])

    def test_jacobi_failure(self):
        c = oracles.abelian_tensor(3)
        c[0][1][2], c[1][0][2] = 1, -1
        c[1][2][0], c[2][1][0] = 1, -1
        c[0][2][0], c[2][0][0] = 1, -1
        with pytest.raises(InvalidStructure):
            validate_structure(c)

    @pytest.mark.parametrize(
        "tensor, variant",
        [
            (oracles.abelian_tensor(4), "Abelian"),
            (oracles.almost_abelian_tensor(3), "AlmostAbelian"),
            (oracles.sl2_tensor(), "Sl2"),
        ],
    )
    def test_basis_change(self, tensor, variant):
        rng = random.Random(11)
        for _ in range(5):
            P = oracles.random_invertible(rng, len(tensor))
            assert classify_abstract(oracles.transform_tensor(tensor, P)).variant == variant

    def test_killing_form_sl2(self):
        c = oracles.sl2_tensor()
        assert killing_form(c, (0, 1, 0), (0, 1, 0)) == 8
        assert killing_form(c, (1, 0, 0), (0, 0, 1)) == 4

    def test_abstract_triple(self):
        c = oracles.sl2_tensor()
        e, h, f = find_sl2_triple_abstract(c)
        assert lie_bracket(c, e, f) == list(h)
        assert lie_bracket(c, h, e) == [2 * x for x in e]
        assert lie_bracket(c, h, f) == [-2 * x for x in f]


class TestRankOne:
    def test_sl2_triple(self):
        out = classify_rank_one([D(s, 1) for s in ("d/dx", "x*d/dx", "x^2*d/dx")])
        assert out.triple == (D("x^2*d/dx", 1), D("2*x*d/dx", 1), D("-d/dx", 1))

    def test_sl2_in_second_variable(self):
        A = close_and_structure([D("d/dy"), D("y*d/dy"), D("y^2*d/dy")])
        assert find_sl2_triple(A) == (D("y^2*d/dy"), D("2*y*d/dy"), D("-d/dy"))

    def test_almost_abelian(self):
        out = classify_rank_one([D("x*d/dx", 1), D("x^3*d/dx", 1)])
        assert isinstance(out, AlmostAbelian)
        assert out.ideal == (D("x^3*d/dx", 1),)
        assert out.b == D("1/2*x*d/dx", 1)
        assert bracket(out.b, out.ideal[0]) == out.ideal[0]

    def test_affine_pair(self):
        out = classify_rank_one([D("d/dx", 1), D("x*d/dx", 1)])
        assert out.b == D("-x*d/dx", 1)
        assert out.eigenvalues == (-1,)

    def test_abelian(self):
        out = classify_rank_one([D("d/dy"), D("x*d/dy"), D("x^2*d/dy")])
        assert out == Abelian(3, out.basis)

    def test_not_closed(self):
        out = classify_rank_one([D(s, 1) for s in ("d/dx", "x*d/dx", "x^2*d/dx", "x^3*d/dx")])
        assert isinstance(out, NotClosedOutcome)
        assert out.escape == D("x^4*d/dx", 1)

    def test_not_rank_one(self):
        out = classify_rank_one([D("x*d/dx"), D("y*d/dy")])
        assert isinstance(out, HypothesisViolated)
        assert out.reason == "NotRankOne"

    def test_empty(self):
        assert classify_rank_one([]) == Abelian(0)

    def test_dependent_generators_are_dropped(self):
        out = classify_rank_one([D("x*d/dx", 1), D("2*x*d/dx", 1), D("x^2*d/dx", 1)])
        assert out.dim == 2

    @pytest.mark.parametrize("seed", range(6))
    def test_basis_change_sl2(self, seed):
        rng = random.Random(seed)
        basis = list(sl2_example(2).basis)
        P = oracles.random_invertible(rng, 3)
        out = classify_rank_one(combine(basis, P))
        assert isinstance(out, Sl2)
        assert out.triple is not None and is_sl2_triple(*out.triple)

    @pytest.mark.parametrize("seed", range(6))
    def test_basis_change_almost_abelian(self, seed):
        rng = random.Random(seed)
        basis = list(almost_abelian_example(3, 2).basis)
        P = oracles.random_invertible(rng, 4)
        out = classify_rank_one(combine(basis, P))
        assert isinstance(out, AlmostAbelian)
        assert all(bracket(out.b, a) == a for a in out.ideal)


class TestCentralizerVerification:
    def test_random_spans(self):
        for seed in range(5):
            A = span(random_rank_one_span(2, 4, 3, seed))
            rep = verify_abelian_centralizers(A, 10, seed)
            assert rep.ok and rep.trials == 10

    def test_requires_rank_one(self):
        with pytest.raises(PreconditionError):
            verify_abelian_centralizers(span([D("d/dx"), D("d/dy")]), 3, 0)

    def test_deterministic(self):
        A = span(random_rank_one_span(3, 5, 4, 99))
        assert verify_abelian_centralizers(A, 5, 1) == verify_abelian_centralizers(A, 5, 1)
