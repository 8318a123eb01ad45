import random
from fractions import Fraction

import pytest

from volmatroid.polynomials import (
    MultiPoly,
    PolyMatrix,
    fraction_matrix_det,
    poly_det,
)

NAMES = ("x", "y", "z")


def P(terms):
    return MultiPoly(NAMES, terms)


def var(nm):
    return MultiPoly.variable(NAMES, nm)


def rand_poly(rng, deg=2, nterms=4):
    terms = {}
    for _ in range(nterms):
        e = tuple(rng.randint(0, deg) for _ in NAMES)
        terms[e] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return P(terms)


def det_oracle(mat):
    """Independent cofactor-expansion determinant used as the test oracle."""
    n = mat.shape[0]
    if n == 1:
        return mat[0, 0]
    total = MultiPoly.zero(mat.names)
    sign = 1
    for j in range(n):
        minor = mat.submatrix(range(1, n), [c for c in range(n) if c != j])
        term = mat[0, j] * det_oracle(minor)
        total = total + term.scalar_mul(sign)
        sign = -sign
    return total


def test_ring_identity():
    x, y = var("x"), var("y")
    assert ((x + y) * (x - y)).text() == (x * x - y * y).text()


def test_zero_terms_dropped():
    p = P({(1, 0, 0): Fraction(0)})
    assert p.is_zero()
    q = var("x") - var("x")
    assert q.is_zero() and q.total_degree() == -1


def test_universe_mismatch_raises():
    p = var("x")
    q = MultiPoly.variable(("a", "b"), "a")
    with pytest.raises(ValueError):
        _ = p + q


def test_partial_derivative():
    # d/dx (x^2 y + 3x) = 2xy + 3
    p = P({(2, 1, 0): 1, (1, 0, 0): 3})
    assert p.partial_derivative("x") == P({(1, 1, 0): 2, (0, 0, 0): 3})


def test_evaluate_exact_and_floating():
    p = P({(2, 0, 0): Fraction(1, 2), (0, 1, 1): -3})
    assert p.evaluate([Fraction(2), Fraction(1, 3), Fraction(3)]) == Fraction(-1)
    assert abs(p.evaluate([2.0, 1 / 3, 3.0]) - (-1.0)) < 1e-12
    assert abs(p.evaluate([2j, 0.0, 0.0]) - (-2.0)) < 1e-12


def test_exact_div_round_trip():
    rng = random.Random(7)
    for _ in range(25):
        a = rand_poly(rng)
        b = rand_poly(rng)
        if b.is_zero():
            continue
        assert (a * b).exact_div(b) == a


def test_text_canonical_order():
    p = P({(0, 0, 0): 1, (2, 0, 0): 1, (1, 1, 0): 2})
    assert p.text() == "x^2 + 2 * x y + 1"


def test_identity_det():
    one = MultiPoly.constant(NAMES, 1)
    zero = MultiPoly.zero(NAMES)
    mat = PolyMatrix(NAMES, [[one if i == j else zero for j in range(6)]
                             for i in range(6)])
    assert poly_det(mat) == one


def test_poly_det_agrees_with_cofactor_oracle():
    rng = random.Random(11)
    for size in (3, 4):
        for _ in range(100):
            mat = PolyMatrix(NAMES, [[rand_poly(rng, deg=1, nterms=3)
                                      for _ in range(size)]
                                     for _ in range(size)])
            assert poly_det(mat) == det_oracle(mat)


def test_det_multiplicative():
    rng = random.Random(13)
    for size in (2, 3):
        for _ in range(10):
            m = PolyMatrix(NAMES, [[rand_poly(rng, deg=1, nterms=2)
                                    for _ in range(size)] for _ in range(size)])
            n = PolyMatrix(NAMES, [[rand_poly(rng, deg=1, nterms=2)
                                    for _ in range(size)] for _ in range(size)])
            assert poly_det(m.matmul(n)) == poly_det(m) * poly_det(n)


def test_det_commutes_with_evaluation():
    rng = random.Random(17)
    for _ in range(50):
        size = rng.choice([3, 4])
        mat = PolyMatrix(NAMES, [[rand_poly(rng, deg=2, nterms=3)
                                  for _ in range(size)] for _ in range(size)])
        pt = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in NAMES]
        sym = poly_det(mat).evaluate(pt)
        num = fraction_matrix_det(mat.evaluate(pt))
        assert sym == num


def test_zero_determinant_of_dependent_rows():
    rng = random.Random(19)
    row = [rand_poly(rng) for _ in range(4)]
    other = [rand_poly(rng) for _ in range(4)]
    third = [a + b for a, b in zip(row, other)]
    fourth = [rand_poly(rng) for _ in range(4)]
    mat = PolyMatrix(NAMES, [row, other, third, fourth])
    assert poly_det(mat).is_zero()


def test_fraction_matrix_det_known():
    assert fraction_matrix_det([[1, 2], [3, 4]]) == -2
    assert fraction_matrix_det(
        [[Fraction(1, 2), 1], [1, 2]]) == 0
