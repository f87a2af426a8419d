from fractions import Fraction

import pytest

import goldenring as gr
from goldenring import BoundExceeded, GoldenInt, MPoly, VARS_BASE
from goldenring.ringalg import BASIS_TOTAL_BOUND, COORD_INDEX_BOUND


def germ_values(system, k):
    # assignment for the six coordinates: offset-0 germ, then offset -1
    a, b = system.x(2 * k), system.x(2 * k - 1)
    return [a.x0, a.x1, a.x2, b.x0, b.x1, b.x2]


def test_coordinate_polys_evaluate_to_window(small_system, matrix):
    for k in (3, 4):
        vals = germ_values(small_system, k)
        for i in range(-4, 5):
            polys = gr.coordinate_polys(i, matrix)
            target = small_system.x(2 * k + i)
            for e in range(3):
                assert polys[e].evaluate(vals) == target.coord(e), (i, e)


def test_coordinate_polys_base_cases(matrix):
    p0 = gr.coordinate_polys(0, matrix)
    assert p0[0] == MPoly.variable(VARS_BASE, "X0")
    pm1 = gr.coordinate_polys(-1, matrix)
    assert pm1[2] == MPoly.variable(VARS_BASE, "X2*")


def test_coordinate_polys_bound(matrix):
    with pytest.raises(BoundExceeded):
        gr.coordinate_polys(COORD_INDEX_BOUND + 1, matrix)
    with pytest.raises(BoundExceeded):
        gr.coordinate_polys(-COORD_INDEX_BOUND - 2, matrix)


def test_symmetry_defect_poly_vanishes_on_germs(small_system, matrix):
    phi = gr.symmetry_defect_poly(matrix)
    assert phi.total_degree() == 2
    for k in (2, 3, 5):
        assert phi.evaluate(germ_values(small_system, k)) == 0


def test_evaluation_ideal_kinds(matrix, small_system):
    plain = gr.evaluation_ideal("plain", matrix)
    assert len(plain.generators) == 3
    assert plain.degrees == (2, 2, 2)
    for g in plain.generators:
        for k in (2, 4):
            assert g.evaluate(germ_values(small_system, k)) == 0

    total = gr.evaluation_ideal("total", matrix)
    assert all(g.is_homogeneous() and g.total_degree() == 2 for g in total.generators)

    bi = gr.evaluation_ideal("bi", matrix)
    assert bi.degrees == ((2, 0), (0, 2), (1, 1))
    for g, d in zip(bi.generators, bi.degrees):
        got, homogeneous = g.block_degrees((0, 1, 2, 3), (4, 5, 6, 7))
        assert homogeneous and got == d

    with pytest.raises(ValueError):
        gr.evaluation_ideal("other", matrix)


def test_hilbert_matches_closed_forms(matrix):
    for d in range(4):
        assert gr.hilbert_total(d, matrix) == gr.hilbert_total_closed(d)
    for d1 in range(3):
        for d2 in range(3):
            assert gr.hilbert_bi(d1, d2, matrix) == gr.hilbert_bi_closed(d1, d2)


def test_hilbert_closed_frozen_values():
    assert [gr.hilbert_total_closed(d) for d in range(6)] == [1, 7, 25, 63, 129, 231]
    assert [gr.hilbert_bi_closed(1, d2) for d2 in range(5)] == [4, 15, 32, 55, 84]
    assert gr.hilbert_bi_closed(2, 1) == 32
    assert gr.hilbert_bi_closed(4, 4) == 369


def test_hilbert_bounds(matrix):
    with pytest.raises(BoundExceeded):
        gr.hilbert_total(6, matrix)
    with pytest.raises(BoundExceeded):
        gr.hilbert_bi(5, 0, matrix)


def test_basis_family_layout(matrix):
    fam1 = gr.basis_family(1, matrix)
    assert len(fam1) == gr.hilbert_total_closed(1) == 7
    fam2 = gr.basis_family(2, matrix)
    assert len(fam2) == gr.hilbert_total_closed(2) == 25
    # zero element contributes the constant monomial
    zero_members = [m for m in fam2 if m.alpha.is_zero()]
    assert len(zero_members) == 1
    assert zero_members[0].poly == MPoly.const(VARS_BASE, 1)
    # per element, split positions run over 0..2s
    for m in fam2:
        assert 0 <= m.j <= 2 * m.size
        assert sum(m.exponents) == m.j
        assert all(0 <= e <= 2 for e in m.exponents)


def test_basis_family_bi_cardinality(matrix):
    fam = gr.basis_family((1, 1), matrix)
    assert len(fam) == gr.hilbert_bi_closed(1, 1) == 15
    for m in fam:
        assert m.block_degrees() is not None


def test_basis_monomial(matrix):
    alpha = GoldenInt(1, 1)
    m = gr.basis_monomial(alpha, 2, 3, matrix)
    assert m.alpha == alpha and m.j == 2
    with pytest.raises(ValueError):
        gr.basis_monomial(alpha, 99, 3, matrix)


def test_family_germ_values_match_polys(small_system, matrix):
    fam = gr.basis_family(2, matrix)
    for k in (3, 4, 5):
        vals = germ_values(small_system, k)
        for m in fam:
            assert m.poly.evaluate(vals) == m.germ_value(small_system, k)


def test_check_basis_rank_total(matrix):
    rep1 = gr.check_basis_rank(1, matrix)
    assert rep1.ambient_dim == 7
    assert rep1.ideal_rank == 0
    assert rep1.quotient_dim == rep1.expected_dim == 7
    assert rep1.cardinality == rep1.quotient_rank == 7
    assert rep1.spans and rep1.dependency is None

    rep2 = gr.check_basis_rank(2, matrix)
    assert rep2.ambient_dim == 28
    assert rep2.quotient_dim == rep2.expected_dim == 25
    assert rep2.cardinality == rep2.quotient_rank == 25
    assert rep2.spans

    summary = rep2.summary()
    assert summary["spans"] is True
    assert summary["bound"] == 2


def test_check_basis_rank_bi(matrix):
    rep = gr.check_basis_rank((1, 1), matrix)
    assert rep.quotient_dim == rep.expected_dim == 15
    assert rep.cardinality == rep.quotient_rank == 15
    assert rep.spans
    assert rep.summary()["bound"] == [1, 1]


def test_check_basis_rank_bounds(matrix):
    with pytest.raises(BoundExceeded):
        gr.check_basis_rank(4, matrix)
    with pytest.raises(BoundExceeded):
        gr.check_basis_rank((3, 1), matrix)


def test_quotient_coordinates_of_generators(matrix):
    for g in gr.evaluation_ideal("plain", matrix).generators:
        red = gr.quotient_coordinates(g, 2, matrix)
        assert red.in_ideal()
        assert red.coords == ()


def test_quotient_coordinates_frozen(matrix):
    # the first seed matrix (-3, 1, -1, 0) sends X1 to two split-1 members
    x1 = MPoly.variable(VARS_BASE, "X1")
    red = gr.quotient_coordinates(x1, 3, matrix)
    got = {((a.m, a.n), j): c for (a, j), c in red.coords}
    assert got == {((-1, 2), 1): Fraction(-1), ((1, 0), 1): Fraction(-3)}
    assert red.coefficient(GoldenInt(1, 0), 1) == -3
    assert red.coefficient(GoldenInt(5, 5), 0) == 0


def test_reduction_preserves_germ_values(small_system, matrix):
    x0, x1 = (MPoly.variable(VARS_BASE, n) for n in ("X0", "X1"))
    s2 = MPoly.variable(VARS_BASE, "X2*")
    poly = x0 * x1 - 2 * s2 + 5
    red = gr.quotient_coordinates(poly, 2, matrix)
    assert not red.in_ideal()
    for k in (3, 4, 5):
        vals = germ_values(small_system, k)
        assert red.germ_value(small_system, k) == poly.evaluate(vals)


def test_quotient_coordinates_errors(matrix):
    x0 = MPoly.variable(VARS_BASE, "X0")
    with pytest.raises(ValueError):
        gr.quotient_coordinates(x0**3, 2, matrix)  # degree above the bound
    with pytest.raises(BoundExceeded):
        gr.quotient_coordinates(x0, BASIS_TOTAL_BOUND + 1, matrix)
    from goldenring import VARS_TOTAL

    with pytest.raises(ValueError):
        gr.quotient_coordinates(MPoly.variable(VARS_TOTAL, "U"), 2, matrix)


def test_leading_form_frozen(matrix):
    x1 = MPoly.variable(VARS_BASE, "X1")
    lf = gr.leading_form(x1 * x1, 3, matrix)
    assert (lf.alpha.m, lf.alpha.n) == (2, 0)
    assert lf.size == 2
    assert lf.coefficients == (0, 0, 1, 0, 0)


def test_leading_form_rejects_ideal_elements(matrix):
    g = gr.evaluation_ideal("plain", matrix).generators[0]
    with pytest.raises(ValueError, match="no leading form"):
        gr.leading_form(g, 2, matrix)


def test_leading_form_picks_largest_element(matrix):
    x0 = MPoly.variable(VARS_BASE, "X0")
    s0 = MPoly.variable(VARS_BASE, "X0*")
    lf = gr.leading_form(x0 + s0, 2, matrix)
    # X0 carries alpha = 1, X0* carries alpha = 1/gamma; 1 is larger
    assert (lf.alpha.m, lf.alpha.n) == (1, 0)
