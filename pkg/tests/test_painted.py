import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from cytkit import DomainError, PreconditionError
from cytkit.intlat import IntMatrix, complete_to_sl, vector_gcd
from cytkit.painted import (
    BlockStructure,
    PaintedDiagram,
    block_structure,
    c1_condition_matrix,
    c1_vanishes,
    chain_multipliers,
    diagonal_embedding,
    enumerate_embeddings,
    fundamental_weight_coordinates,
    koszul_coefficients,
    koszul_form,
    koszul_form_a_chain,
    quotient_dimension,
    su_n_u1_check,
    su_n_u1_identity_coefficients,
    white_components,
)
from cytkit.rootsys import Series, Weight, positive_roots, simple_root_coefficients, sum_positive_roots

SU11 = PaintedDiagram.parse("A10:1,2,6,9")
SU11_BLOCKS = BlockStructure.parse("blocks=1,1,su4,su3,su2")
SP7 = PaintedDiagram.parse("C7:1,3,4,5")
SP7_BLOCKS = BlockStructure.parse("blocks=1,su2,1,1,sp2")


def all_paintings(series, rank):
    for bits in itertools.product([0, 1], repeat=rank):
        yield PaintedDiagram(series, rank, frozenset(i + 1 for i, b in enumerate(bits) if b))


def koszul_by_root_support(d):
    """sigma_G minus the sum of the positive roots supported on white nodes."""
    white = set(d.white)
    total = sum_positive_roots(d.series, d.rank)
    for r in positive_roots(d.series, d.rank):
        c = simple_root_coefficients(r, d.series, d.rank)
        if all(x == 0 for i, x in enumerate(c) if i + 1 not in white):
            total = total - r
    return total


def test_parse_and_format():
    assert str(SU11) == "A10:1,2,6,9"
    assert PaintedDiagram.parse("A2:").black == frozenset()
    for bad in ["A10", "X3:1", "A3:5", "B1:1", "A3:1;2"]:
        with pytest.raises(DomainError):
            PaintedDiagram.parse(bad)


def test_white_components_examples():
    comps = white_components(SU11)
    assert [(c.series, c.nodes) for c in comps] == [
        (Series.A, (3, 4, 5)),
        (Series.A, (7, 8)),
        (Series.A, (10,)),
    ]
    comps = white_components(SP7)
    assert [(c.series, c.rank, c.nodes) for c in comps] == [(Series.A, 1, (2,)), (Series.C, 2, (6, 7))]
    assert white_components(PaintedDiagram.parse("B4:1,2,3,4")) == []
    d = white_components(PaintedDiagram.parse("D6:1,2"))
    assert [(c.series, c.rank) for c in d] == [(Series.D, 4)]
    d = white_components(PaintedDiagram.parse("D6:5"))
    assert [(c.series, c.nodes) for c in d] == [(Series.A, (1, 2, 3, 4, 6))]


def test_koszul_examples():
    assert koszul_form(SU11) == Weight([10, 8, 3, 3, 3, 3, -4, -4, -4, -9, -9])
    assert koszul_form(SP7) == Weight([14, 11, 11, 8, 6, 0, 0])
    assert koszul_coefficients(SP7) == [14, 25, 36, 44, 50, 50, 25]
    assert koszul_form(PaintedDiagram.parse("A2:1,2")) == sum_positive_roots("A", 2)
    assert koszul_form(PaintedDiagram.parse("A5:1,2,3,4,5")) == sum_positive_roots("A", 5)


def test_a_chain_multipliers():
    assert chain_multipliers(SU11) == {1: 2, 2: 5, 6: 7, 9: 5}
    assert koszul_form_a_chain(SU11) == koszul_form(SU11)
    with pytest.raises(DomainError):
        koszul_form_a_chain(SP7)


@pytest.mark.parametrize("rank", [3, 4, 5, 6])
def test_chain_formula_agrees_on_all_paintings(rank):
    for d in all_paintings("A", rank):
        assert koszul_form(d) == koszul_form_a_chain(d), d


@pytest.mark.parametrize("series,rank", [("A", 5), ("B", 4), ("C", 4), ("D", 5)])
def test_koszul_matches_root_support_and_tits_positivity(series, rank):
    for d in all_paintings(series, rank):
        if series == "D" and not d.black:
            continue
        sigma = koszul_form(d)
        assert sigma == koszul_by_root_support(d), d
        coords = fundamental_weight_coordinates(sigma, d)
        for i, x in enumerate(coords, start=1):
            assert x.denominator == 1
            assert (x > 0) if i in d.black else (x == 0), (d, coords)


def test_block_structures():
    assert block_structure(SU11) == SU11_BLOCKS
    assert block_structure(SP7) == SP7_BLOCKS
    assert str(block_structure(PaintedDiagram.parse("D7:2,4"))) == "blocks=su2,su2,so6"
    assert str(block_structure(PaintedDiagram.parse("B5:2,4"))) == "blocks=su2,su2,so3"
    with pytest.raises(DomainError):
        block_structure(PaintedDiagram.parse("D5:4"))
    with pytest.raises(DomainError):
        BlockStructure.parse("blocks=1,xx3")


def test_c1_matrix_examples():
    assert c1_condition_matrix(SU11, SU11_BLOCKS).tolist() == [[1, 1, 4, 3, 2], [10, 8, 12, -12, -18]]
    assert c1_condition_matrix(SP7, SP7_BLOCKS).tolist() == [[14, 22, 8, 6]]
    with pytest.raises(DomainError):
        c1_condition_matrix(SU11, BlockStructure.parse("blocks=1,1,su4,su4,su1"))


def test_c1_vanishes_examples():
    lat = enumerate_embeddings(SU11, SU11_BLOCKS, 2)
    assert lat.kernel_rank == 3
    assert c1_vanishes(SU11, SU11_BLOCKS, lat.basis)
    assert c1_vanishes(SU11, SU11_BLOCKS, [])
    # trace-free, Koszul row gives 10 - 8 = 2
    assert not c1_vanishes(SU11, SU11_BLOCKS, [(1, -1, 0, 0, 0)])
    with pytest.raises(PreconditionError, match=r"\[1, 0, 0, 0, 0\]"):
        c1_vanishes(SU11, SU11_BLOCKS, [(1, 0, 0, 0, 0)])
    with pytest.raises(PreconditionError):
        c1_vanishes(SU11, SU11_BLOCKS, [(1, 2)])


def test_sp7_embeddings():
    lat = enumerate_embeddings(SP7, SP7_BLOCKS, 2)
    assert lat.kernel_rank == 3 and len(lat.basis) == 2
    assert c1_vanishes(SP7, SP7_BLOCKS, [(3, 0, 0, -7)])
    with pytest.raises(DomainError, match="kernel rank 3"):
        enumerate_embeddings(SP7, SP7_BLOCKS, 4)
    for v in lat.kernel:
        assert vector_gcd(v) == 1


def test_su11_embedding_diagonal():
    v = enumerate_embeddings(SU11, SU11_BLOCKS, 1).basis[0]
    diag = diagonal_embedding(SU11_BLOCKS, v)
    assert len(diag) == 11 and sum(diag) == 0
    assert Weight(diag).dot(koszul_form(SU11)) == 0


def test_all_black_su4_kernel():
    d = PaintedDiagram.parse("A3:1,2,3")
    blocks = BlockStructure.parse("1,1,1,1")
    lat = enumerate_embeddings(d, blocks, 1)
    m = sympy.Matrix([[1, 1, 1, 1], [3, 1, -1, -3]])
    assert lat.kernel_rank == 4 - m.rank() == 2
    for v in lat.kernel:
        assert su_n_u1_check(v)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-30, 30), min_size=3, max_size=3).filter(lambda v: vector_gcd(v) == 1))
def test_c1_vanishes_invariant_under_sl_recombination(v):
    kernel = enumerate_embeddings(SU11, SU11_BLOCKS, 3).kernel
    u = complete_to_sl(v)
    recombined = [list(row) for row in (u @ IntMatrix(kernel)).tolist()]
    assert c1_vanishes(SU11, SU11_BLOCKS, recombined)
    bad = [list(kernel[0]), [4, 0, -1, 0, 0]]
    assert not c1_vanishes(SU11, SU11_BLOCKS, bad)


def test_su_n_u1_examples():
    assert su_n_u1_check([1, 0, -3, 2])
    assert su_n_u1_check([1, 1, -5, 3])
    assert not su_n_u1_check([1, 0, 0, -1])
    with pytest.raises(PreconditionError):
        su_n_u1_check([1, 1, 1, 1])
    with pytest.raises(PreconditionError):
        su_n_u1_check([1, 0, -1])


@pytest.mark.parametrize("n", [4, 6, 8])
def test_su_n_u1_identity_symbolic(n):
    th = sympy.symbols(f"t1:{n}")
    full = list(th) + [-sum(th)]
    lhs = sum((n - 2 * k + 1) * t for k, t in enumerate(full, start=1))
    rhs = 2 * sum((n - k) * t for k, t in enumerate(th, start=1))
    assert sympy.expand(lhs - rhs) == 0
    a, b = su_n_u1_identity_coefficients(n)
    assert a == b


@pytest.mark.parametrize("n", [4, 6])
@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_su_n_u1_agrees_with_c1(n, data):
    head = data.draw(st.lists(st.integers(-6, 6), min_size=n - 1, max_size=n - 1))
    theta = head + [-sum(head)]
    d = PaintedDiagram("A", n - 1, frozenset(range(1, n)))
    blocks = BlockStructure.parse(",".join(["1"] * n))
    assert su_n_u1_check(theta) == c1_vanishes(d, blocks, [theta])


def test_quotient_dimension():
    assert quotient_dimension(SU11, 2) == 120 - 15 - 8 - 3 - 2
    assert quotient_dimension(PaintedDiagram.parse("A3:1,2,3"), 1) == 14
