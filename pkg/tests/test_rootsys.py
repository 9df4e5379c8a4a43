from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cytkit import DomainError
from cytkit import _exact
from cytkit.rootsys import (
    Series,
    Weight,
    cartan_matrix,
    coroot_pairing,
    dynkin_edges,
    from_simple_root_coefficients,
    fundamental_weight,
    positive_roots,
    simple_root_coefficients,
    simple_roots,
    sum_positive_roots,
)

GRID = (
    [(Series.A, n) for n in range(1, 11)]
    + [(Series.B, n) for n in range(2, 8)]
    + [(Series.C, n) for n in range(2, 8)]
    + [(Series.D, n) for n in range(3, 8)]
)


def reflect(v: Weight, a: Weight) -> Weight:
    return v - coroot_pairing(v, a) * a


def weyl_closure(series, rank):
    """All roots generated by reflecting the simple roots; independent of the closed forms."""
    simple = simple_roots(series, rank)
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for a in simple:
                w = reflect(v, a)
                if w not in roots:
                    roots.add(w)
                    nxt.append(w)
        frontier = nxt
    return roots


def is_positive(v, series, rank):
    c = simple_root_coefficients(v, series, rank)
    return all(x >= 0 for x in c)


@pytest.mark.parametrize("series,rank", GRID)
def test_positive_roots_match_weyl_closure(series, rank):
    closure = weyl_closure(series, rank)
    pos = {r for r in closure if is_positive(r, series, rank)}
    assert pos == set(positive_roots(series, rank))
    assert len(closure) == 2 * len(pos)


@pytest.mark.parametrize("series,rank", GRID)
def test_closed_form_sum_matches_enumeration(series, rank):
    dim = len(simple_roots(series, rank)[0])
    total = Weight.zero(dim)
    for r in positive_roots(series, rank):
        total = total + r
    assert sum_positive_roots(series, rank) == total


@pytest.mark.parametrize("series,rank", GRID)
def test_twice_weyl_vector_pairs_to_two(series, rank):
    rho2 = sum_positive_roots(series, rank)
    assert all(coroot_pairing(rho2, a) == 2 for a in simple_roots(series, rank))


@pytest.mark.parametrize("series,rank", GRID)
def test_fundamental_weights_dual_to_coroots(series, rank):
    alphas = simple_roots(series, rank)
    for k in range(1, rank + 1):
        w = fundamental_weight(series, rank, k)
        assert [coroot_pairing(w, a) for a in alphas] == [int(j == k - 1) for j in range(rank)]


def test_sum_a3_and_c7_row():
    assert sum_positive_roots("A", 3) == Weight([3, 1, -1, -3])
    c7 = simple_root_coefficients(sum_positive_roots("C", 7), "C", 7)
    assert c7 == [14, 26, 36, 44, 50, 54, 28]


def test_small_sums():
    assert sum_positive_roots("A", 1) == Weight([1, -1])
    assert sum_positive_roots("B", 2) == Weight([3, 1])
    assert sum_positive_roots("C", 2) == Weight([4, 2])
    assert sum_positive_roots("D", 3) == Weight([4, 2, 0])


def test_a_fundamental_weights_closed_form():
    n = 11
    for k in range(1, n):
        expected = Weight([Fraction(int(i < k)) - Fraction(k, n) for i in range(n)])
        assert fundamental_weight("A", n - 1, k) == expected


def test_c_fundamental_weights():
    for k in range(1, 6):
        assert fundamental_weight("C", 5, k) == Weight([1] * k + [0] * (5 - k))


@pytest.mark.parametrize("n", range(1, 9))
def test_cartan_determinant_type_a(n):
    assert _exact.det(cartan_matrix("A", n)) == n + 1


def test_cartan_small():
    assert cartan_matrix("C", 2) == [[2, -1], [-2, 2]]
    assert cartan_matrix("B", 2) == [[2, -2], [-1, 2]]
    assert _exact.det(cartan_matrix("C", 2)) == 2
    assert _exact.det(cartan_matrix("D", 5)) == 4


def test_d3_is_a3():
    # same root count and Cartan matrix up to relabelling 2 <-> 1 (middle node)
    assert len(positive_roots("D", 3)) == len(positive_roots("A", 3))
    d3 = cartan_matrix("D", 3)
    perm = [1, 0, 2]
    a3 = cartan_matrix("A", 3)
    assert [[d3[perm[i]][perm[j]] for j in range(3)] for i in range(3)] == a3


def test_dynkin_edges():
    assert dynkin_edges("A", 4) == {(1, 2), (2, 3), (3, 4)}
    assert dynkin_edges("D", 5) == {(1, 2), (2, 3), (3, 4), (3, 5)}
    assert dynkin_edges("C", 3) == {(1, 2), (2, 3)}


@pytest.mark.parametrize(
    "series,rank", [("A", 0), ("B", 1), ("C", 1), ("D", 2), ("E", 6)]
)
def test_rank_bounds(series, rank):
    with pytest.raises(DomainError):
        simple_roots(series, rank)


def test_out_of_span():
    with pytest.raises(DomainError):
        simple_root_coefficients(Weight([1, 0, 0]), "A", 2)


def test_weight_immutable_and_arith():
    w = Weight([1, 2])
    with pytest.raises(AttributeError):
        w.coords = (0,)
    assert 2 * w - w == w
    assert (-w).dot(w) == -5
    with pytest.raises(DomainError):
        w + Weight([1, 2, 3])


@given(
    st.sampled_from(GRID),
    st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=9), min_size=10, max_size=10),
)
def test_coefficient_round_trip(sr, cs):
    series, rank = sr
    cs = cs[:rank]
    w = from_simple_root_coefficients(cs, series, rank)
    assert simple_root_coefficients(w, series, rank) == cs
