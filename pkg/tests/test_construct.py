import random

import pytest

from rankone.classify import AlmostAbelian, Sl2, classify_rank_one, is_sl2_triple
from rankone.construct import (
    abelian_example,
    almost_abelian_example,
    f_k_beta,
    f_of_beta,
    random_poly,
    random_rank_one_span,
    sl2_example,
)
from rankone.deriv import bracket, common_direction, multiplier
from rankone.errors import PreconditionError
from rankone.poly import Poly
from rankone.span import close_and_structure

from conftest import D


def test_abelian_examples():
    assert list(abelian_example(3, 2).basis) == [D("d/dy"), D("x*d/dy"), D("x^2*d/dy")]
    assert list(abelian_example(1, 2).basis) == [D("d/dy")]
    with pytest.raises(PreconditionError):
        abelian_example(2, 1)


def test_almost_abelian_examples():
    assert list(almost_abelian_example(1, 2).basis) == [D("d/dy"), D("-y*d/dy")]
    A = almost_abelian_example(3, 2)
    assert list(A.basis) == [D("d/dy"), D("x*d/dy"), D("x^2*d/dy"), D("-y*d/dy")]
    for m in (1, 3):
        out = classify_rank_one(almost_abelian_example(m, 2).basis)
        assert isinstance(out, AlmostAbelian)
        assert out.b == D("-y*d/dy")


def test_sl2_examples():
    assert list(sl2_example(1).basis) == [D(s, 1) for s in ("x^2*d/dx", "2*x*d/dx", "-d/dx")]
    assert list(sl2_example(2).basis) == [D("y^2*d/dy"), D("2*y*d/dy"), D("-d/dy")]
    for n in (1, 2, 3):
        e, h, f = sl2_example(n).basis
        assert is_sl2_triple(e, h, f)


def test_custom_parameters_checked():
    with pytest.raises(PreconditionError):
        sl2_example(2, D0=D("d/dx"), q=Poly.var(1, 2))
    with pytest.raises(PreconditionError):
        abelian_example(2, 2, D0=D("d/dx"), p=Poly.var(0, 2))
    A = sl2_example(2, D0=D("d/dx + d/dy"), q=Poly.var(0, 2))
    assert is_sl2_triple(*A.basis)


@pytest.mark.parametrize(
    "k, beta, expected",
    [(2, 0, ["x*d/dx", "x^2*d/dx"]), (0, 1, ["(x + 1)*d/dx", "d/dx"]), (3, -2, ["(x - 2)*d/dx", "(x - 2)^3*d/dx"])],
)
def test_f_k_beta(k, beta, expected):
    A = f_k_beta(k, beta)
    assert list(A.basis) == [D(s, 1) for s in expected]
    assert A.closed


def test_f_k_beta_bracket_law():
    for k in (0, 2, 3, 4, 5, 6):
        for beta in (0, 1, -2):
            u, v = f_k_beta(k, beta).basis
            assert bracket(u, v) == (k - 1) * v
    with pytest.raises(PreconditionError):
        f_k_beta(1)


def test_f_of_beta():
    assert list(f_of_beta(0).basis) == [D(s, 1) for s in ("d/dx", "x*d/dx", "x^2*d/dx")]
    for beta in (0, 1, "-3/2"):
        A = f_of_beta(beta)
        assert A.closed
        out = classify_rank_one(A.basis)
        assert isinstance(out, Sl2) and out.triple is not None


def test_constructions_close():
    for A in (abelian_example(4, 3), almost_abelian_example(4, 3), sl2_example(3), f_k_beta(4, 1), f_of_beta(1)):
        B = close_and_structure(A.basis)
        assert B.dim == A.dim


class TestRandomSpans:
    def test_rank_one_by_construction(self):
        for seed in range(10):
            Ds = random_rank_one_span(3, 4, 4, seed)
            D0 = common_direction(Ds)
            for a in Ds:
                for b in Ds:
                    assert multiplier(bracket(a, b), D0) is not None or bracket(a, b).is_zero()

    def test_seed_repeatability(self):
        assert random_rank_one_span(2, 3, 3, 5) == random_rank_one_span(2, 3, 3, 5)
        assert random_rank_one_span(2, 3, 3, 5) != random_rank_one_span(2, 3, 3, 6)

    def test_random_poly_bounds(self):
        rng = random.Random(0)
        for _ in range(50):
            p = random_poly(rng, 2, 3)
            assert p.degree() <= 3
            assert all(abs(c) <= 5 for _, c in p.items())
