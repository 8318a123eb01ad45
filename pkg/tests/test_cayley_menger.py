import random
from fractions import Fraction

import pytest

from volmatroid.cayley_menger import (
    all_variable_names,
    cayley_menger_poly,
    defining_residuals,
    edge_variable_names,
    heron_system,
    jacobian,
    jacobian_rows,
    parametrize,
    volume_scale,
)
from volmatroid.faces import ground_set
from volmatroid.polynomials import MultiPoly, poly_det

F = Fraction


def test_triangle_formula_golden():
    # (1/16)(2 x12 x13 + 2 x12 x23 + 2 x13 x23 - x12^2 - x13^2 - x23^2)
    names = edge_variable_names(2)
    expected = MultiPoly(names, {
        (1, 1, 0): F(1, 8), (1, 0, 1): F(1, 8), (0, 1, 1): F(1, 8),
        (2, 0, 0): F(-1, 16), (0, 2, 0): F(-1, 16), (0, 0, 2): F(-1, 16),
    })
    assert cayley_menger_poly(2, (1, 2, 3)) == expected


def test_edge_is_identity():
    p = cayley_menger_poly(3, (1, 3))
    names = edge_variable_names(3)
    assert p == MultiPoly.variable(names, "x13")
    # the general minor formula agrees with the shortcut on an edge
    from volmatroid.cayley_menger import _bordered_distance_matrix
    det = poly_det(_bordered_distance_matrix((1, 3), names))
    assert det.scalar_mul(F(1, 2)) == p


def test_volume_scales():
    assert volume_scale((1, 2, 3)) == 16
    assert volume_scale((1, 2, 3, 4)) == 288
    assert volume_scale((1, 2, 3, 4, 5)) == 9216


def test_heron_system_shapes():
    assert len(heron_system(2)) == 1
    assert len(heron_system(3)) == 5
    assert len(heron_system(4)) == 16  # 26 - 10


def test_f123_golden():
    # 16 x123 - 2 x12 x13 - 2 x12 x23 - 2 x13 x23 + x12^2 + x13^2 + x23^2
    names = all_variable_names(2)
    expected = MultiPoly(names, {
        (0, 0, 0, 1): 16,
        (1, 1, 0, 0): -2, (1, 0, 1, 0): -2, (0, 1, 1, 0): -2,
        (2, 0, 0, 0): 1, (0, 2, 0, 0): 1, (0, 0, 2, 0): 1,
    })
    assert heron_system(2)[0] == expected


F1234_TERMS = [
    # the integer-cleared degree-3 relation for the solid tetrahedron volume
    (+2, "12,13,23"), (-2, "12,14,23"), (-2, "13,14,23"), (+2, "14,14,23"),
    (+2, "14,23,23"), (-2, "12,13,24"), (+2, "13,13,24"), (+2, "12,14,24"),
    (-2, "13,14,24"), (-2, "13,23,24"), (-2, "14,23,24"), (+2, "13,24,24"),
    (+2, "12,12,34"), (-2, "12,13,34"), (-2, "12,14,34"), (+2, "13,14,34"),
    (-2, "12,23,34"), (-2, "14,23,34"), (-2, "12,24,34"), (-2, "13,24,34"),
    (+2, "23,24,34"), (+2, "12,34,34"),
]


def test_f1234_golden():
    names = all_variable_names(3)
    pos = {nm: i for i, nm in enumerate(names)}
    terms = {}
    for coeff, mono in F1234_TERMS:
        e = [0] * len(names)
        for part in mono.split(","):
            e[pos["x" + part]] += 1
        terms[tuple(e)] = coeff
    terms[tuple(0 if nm != "x1234" else 1 for nm in names)] = 288
    expected = MultiPoly(names, terms)
    assert heron_system(3)[4] == expected


def test_parametrize_equilateral_triangle():
    pt = parametrize(2, [1, 1, 1])
    assert pt[(1, 2, 3)] == F(3, 16)


def test_parametrize_known_nonrealizable_vector_evaluates():
    e = [40, 90, 80, 243.1370849898476, 40, 30]
    pt = parametrize(3, e)
    assert len(pt) == 11
    assert pt[(1, 2)] == 40


def test_heron_identity_on_random_rational_edges():
    rng = random.Random(20240601)
    for n in (2, 3):
        gs = ground_set(n)
        for _ in range(500):
            e = [F(rng.randint(-40, 40), rng.randint(1, 9))
                 for _ in range(gs.num_edges)]
            pt = parametrize(n, e)
            assert all(r == 0 for r in defining_residuals(n, pt))


def test_jacobian_shape_and_edge_block():
    for n in (2, 3):
        gs = ground_set(n)
        jac = jacobian(n)
        assert jac.shape == (gs.num_faces, gs.num_edges)
        names = edge_variable_names(n)
        for i in range(gs.num_edges):
            for j in range(gs.num_edges):
                if i == j:
                    assert jac[i, j] == MultiPoly.constant(names, 1)
                else:
                    assert jac[i, j].is_zero()


def test_jacobian_triangle_column_golden():
    # the classic column: (1/8)(-x12+x13+x23), (1/8)(x12-x13+x23), (1/8)(x12+x13-x23)
    jac = jacobian(2)
    names = edge_variable_names(2)

    def lin(c12, c13, c23):
        return MultiPoly(names, {(1, 0, 0): F(c12, 8), (0, 1, 0): F(c13, 8),
                                 (0, 0, 1): F(c23, 8)})

    assert jac[3, 0] == lin(-1, 1, 1)
    assert jac[3, 1] == lin(1, -1, 1)
    assert jac[3, 2] == lin(1, 1, -1)


def test_jacobian_submatrix_determinant_factors():
    # det of the rows {12,13,14,123,124,134} is +/- (1/8^3) times the
    # product of the three triangle factors
    B = [(1, 2), (1, 3), (1, 4), (1, 2, 3), (1, 2, 4), (1, 3, 4)]
    det = poly_det(jacobian_rows(3, B))
    names = edge_variable_names(3)

    def lin(parts):
        terms = {}
        for sgn, nm in parts:
            e = [0] * 6
            e[names.index(nm)] = 1
            terms[tuple(e)] = sgn
        return MultiPoly(names, terms)

    prod = (lin([(1, "x13"), (1, "x14"), (-1, "x34")])
            * lin([(1, "x12"), (1, "x14"), (-1, "x24")])
            * lin([(1, "x12"), (1, "x13"), (-1, "x23")]))
    scaled = prod.scalar_mul(F(-1, 512))
    assert det == scaled or det == -scaled


def test_jacobian_matches_finite_differences():
    rng = random.Random(99)
    jac = jacobian(3)
    gs = ground_set(3)
    h = 1e-6
    for _ in range(20):
        e = [rng.uniform(0.5, 2.0) for _ in range(6)]
        num = jac.evaluate(e)
        for r, f in enumerate(gs.faces):
            p = cayley_menger_poly(3, f)
            for c in range(6):
                up = list(e)
                dn = list(e)
                up[c] += h
                dn[c] -= h
                fd = (p.evaluate(up) - p.evaluate(dn)) / (2 * h)
                ref = num[r][c]
                assert abs(fd - ref) <= 1e-6 * max(1.0, abs(ref))


def test_parametrize_rejects_bad_length():
    with pytest.raises(ValueError):
        parametrize(2, [1, 1])
