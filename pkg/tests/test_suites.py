import time
from fractions import Fraction

from rankone import suites
from rankone.classify import AlmostAbelian
from rankone.poly import Poly

from conftest import D

x = Poly.var(0, 1)


def test_lattice_finds_closed_pairs_when_they_exist():
    # in x K[x] d/dx with degree <= 3 the closed planes are <x, x^2> d/dx and <x, x^3> d/dx;
    # each holds 4 lattice points up to sign, so 6 spanning pairs apiece
    res = suites.lattice_two_dim_check(x, coeff_bound=1, max_degree=3)
    assert len(res.closed) == 12
    assert (D("x^2*d/dx", 1), D("x*d/dx", 1)) in res.closed


def test_lattice_constant_q_positive_control():
    res = suites.lattice_two_dim_check(Poly.one(1), coeff_bound=1, max_degree=2)
    assert res.closed and not res.ok


def test_lattice_small_q_squared():
    res = suites.lattice_two_dim_check(x**2, coeff_bound=1, max_degree=4)
    assert res.ok and res.pairs == res.elements * (res.elements - 1) // 2


def test_check_outcome_flags_inconsistencies():
    good = AlmostAbelian(2, (D("x^3*d/dx", 1),), D("1/2*x*d/dx", 1), (Fraction(2),))
    assert suites.check_outcome(good, "AlmostAbelian", 2) is None
    bad = AlmostAbelian(2, (D("x^3*d/dx", 1),), D("x*d/dx", 1), (Fraction(2),))
    assert suites.check_outcome(bad, "AlmostAbelian", 2) == "[b, a] != a"
    assert suites.check_outcome(good, "Sl2", 2) == "got AlmostAbelian"


def test_centralizer_suite_counts():
    rep = suites.centralizer_suite(25, seed=4)
    assert rep.total == 25 and rep.ok and rep.seed == 4


def test_round_trip_suite_consistent():
    rep = suites.round_trip_suite(max_dim=4, max_vars=3)
    assert rep.ok, rep.failures


def test_univariate_suite_without_lattice():
    start = time.perf_counter()
    rep = suites.univariate_suite(lattice=False)
    assert rep.ok, rep.failures
    assert time.perf_counter() - start < 10


