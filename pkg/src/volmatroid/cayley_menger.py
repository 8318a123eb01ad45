"""Squared face volumes of a simplex as polynomials in squared edge lengths.

The squared volume of the face on vertex set S is, up to the classical
constant (-1)^m / ((m-1)!^2 * 2^(m-1)) with m = |S|, the principal minor of
the bordered distance matrix indexed by {0} u S.  This module builds those
polynomials exactly, the induced parametrization of all face volumes by the
edge block, the integer-cleared defining system, and its Jacobian.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial

from .faces import Face, face_label, ground_set
from .polynomials import MultiPoly, PolyMatrix


def edge_variable_names(n: int):
    gs = ground_set(n)
    return tuple("x" + face_label(e) for e in gs.edges)


def all_variable_names(n: int):
    gs = ground_set(n)
    return tuple("x" + face_label(f) for f in gs.faces)


def volume_scale(f: Face) -> int:
    """Integer clearing the constant in the minor formula: (m!)^2 * 2^m
    for an m-dimensional face (16 for triangles, 288 for tetrahedra)."""
    m = len(f) - 1
    return factorial(m) ** 2 * 2 ** m


def _bordered_distance_matrix(f: Face, names):
    """The (m+2) x (m+2) matrix whose determinant carries the squared volume."""
    k = len(f)
    one = MultiPoly.constant(names, 1)
    zero = MultiPoly.zero(names)

    def var(i, j):
        a, b = f[i], f[j]
        return MultiPoly.variable(names, "x" + face_label((min(a, b), max(a, b))))

    rows = [[zero] + [one] * k]
    for i in range(k):
        row = [one]
        for j in range(k):
            row.append(zero if i == j else var(i, j))
        rows.append(row)
    return PolyMatrix(names, rows)


@lru_cache(maxsize=None)
def _cm_poly_cached(n: int, f: Face) -> MultiPoly:
    names = edge_variable_names(n)
    if len(f) == 2:
        return MultiPoly.variable(names, "x" + face_label(f))
    from .polynomials import poly_det
    m = len(f) - 1
    det = poly_det(_bordered_distance_matrix(f, names))
    const = Fraction((-1) ** (m + 1), factorial(m) ** 2 * 2 ** m)
    return det.scalar_mul(const)


def cayley_menger_poly(n: int, f: Face) -> MultiPoly:
    """Squared volume of face f as an exact polynomial in the edge variables.

    For edges this is the variable itself; on the parametrized set the
    polynomial's value equals the face's squared-volume coordinate.
    """
    gs = ground_set(n)
    if f not in gs.index:
        raise ValueError(f"{f} is not a face of the {n}-simplex")
    return _cm_poly_cached(n, tuple(f))


def parametrize(n: int, e):
    """Map an edge vector (length e(n), edge order) to all face coordinates.

    Returns {face: value}; exact when the input is exact.
    """
    gs = ground_set(n)
    e = list(e)
    if len(e) != gs.num_edges:
        raise ValueError(f"expected {gs.num_edges} edge values, got {len(e)}")
    out = {}
    for i, edge in enumerate(gs.edges):
        out[edge] = e[i]
    for f in gs.faces[gs.num_edges:]:
        out[f] = cayley_menger_poly(n, f).evaluate(e)
    return out


def point_vector(n: int, point: dict):
    """Flatten a {face: value} point into ground-set order."""
    gs = ground_set(n)
    return [point[f] for f in gs.faces]


@lru_cache(maxsize=None)
def heron_system(n: int):
    """The integer-cleared defining polynomials, one per non-edge face.

    f_S = scale * x_S - scale * (minor polynomial), scale = (m!)^2 * 2^m,
    in the full variable universe (all face coordinates, ground-set order).
    The common zero set contains the image of the parametrization.
    """
    gs = ground_set(n)
    full = all_variable_names(n)
    edge_names = edge_variable_names(n)
    mapping = [full.index(nm) for nm in edge_names]
    polys = []
    for f in gs.faces[gs.num_edges:]:
        scale = volume_scale(f)
        cm_full = cayley_menger_poly(n, f).rename(full, mapping)
        x_s = MultiPoly.variable(full, "x" + face_label(f))
        polys.append(x_s.scalar_mul(scale) - cm_full.scalar_mul(scale))
    return tuple(polys)


@lru_cache(maxsize=None)
def jacobian(n: int) -> PolyMatrix:
    """Jacobian of the parametrization: N(n) x e(n), entries in edge variables.

    Row S, column ij holds the partial of the face-S minor polynomial with
    respect to x_ij; the edge rows form an identity block.
    """
    gs = ground_set(n)
    names = edge_variable_names(n)
    rows = []
    for f in gs.faces:
        p = cayley_menger_poly(n, f)
        rows.append([p.partial_derivative(nm) for nm in names])
    return PolyMatrix(names, rows)


def jacobian_rows(n: int, faces):
    """Submatrix of the Jacobian for the given faces (in the given order)."""
    gs = ground_set(n)
    jac = jacobian(n)
    return jac.submatrix([gs.index[f] for f in faces])


def evaluate_jacobian(n: int, point):
    """Evaluate the full Jacobian at an edge point (exact for Fractions)."""
    return jacobian(n).evaluate(point)


def defining_residuals(n: int, point: dict):
    """Values of every defining polynomial at a {face: value} point."""
    vec = point_vector(n, point)
    return [p.evaluate(vec) for p in heron_system(n)]
