"""Basis classification, rank, circuits, and non-basis explanations.

Three tests are combined into a certified pipeline:
  * exact: the symbolic determinant of the Jacobian submatrix decides
    basis/non-basis outright;
  * monte carlo: exact rational evaluation of that determinant at random
    rational points; a nonzero value is a sound basis certificate, all-zero
    is only evidence of dependence;
  * bkk: zero mixed volume of the fibre system certifies a non-basis.

classify_all runs monte carlo first (amplified), certifies the negatives by
the bkk test, and sends whatever survives to the symbolic determinant, so
every final verdict carries an exact certificate.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

from .cayley_menger import cayley_menger_poly, jacobian, jacobian_rows
from .faces import ground_set
from .newton_polytopes import NewtonPolytope, zero_mixed_volume
from .orbits import (
    OrbitRep,
    admissible_fvectors,
    apply_perm,
    canonical_form,
    face_set,
    fvector,
    orbit_size,
    orbits_with_fvector,
    vertex_perms,
)
from .polynomials import (
    fraction_matrix_det,
    fraction_matrix_rank,
    poly_det,
)

BASIS = "basis"
NONBASIS = "nonbasis"


@dataclass(frozen=True)
class BasisVerdict:
    subset: tuple
    verdict: str  # BASIS or NONBASIS
    method: str  # "monte_carlo" | "bkk_zero" | "exact_det"
    witness: object = None  # (point, det value) for bases; "symbolic_zero"
    # for exact non-bases; None when one-sided

    @property
    def is_basis(self):
        return self.verdict == BASIS


def random_rational_point(rng: random.Random, count: int):
    """Random rationals with numerator and denominator uniform in [1, 10^6]."""
    return [Fraction(rng.randint(1, 10 ** 6), rng.randint(1, 10 ** 6))
            for _ in range(count)]


def _check_size(n, B):
    gs = ground_set(n)
    B = face_set(B)
    if len(B) != gs.num_edges:
        raise ValueError(
            f"candidate must have e({n}) = {gs.num_edges} faces, got {len(B)}")
    for f in B:
        if f not in gs.index:
            raise ValueError(f"{f} is not a face of the {n}-simplex")
    return B


def _witness_point(n, B, det_poly, rng):
    """A rational point where the determinant provably does not vanish."""
    gs = ground_set(n)
    for _ in range(64):
        p = random_rational_point(rng, gs.num_edges)
        val = det_poly.evaluate(p)
        if val:
            return tuple(p), val
    raise RuntimeError("could not hit a nonzero of a nonzero determinant")


def _monomials_up_to(nvars, deg):
    from itertools import combinations_with_replacement
    out = []
    for d in range(deg + 1):
        for combo in combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def _verify_syzygy(sub, coeffs) -> bool:
    """Exact check that sum_s coeffs[s] * row_s of sub vanishes identically."""
    names = sub.names
    from .polynomials import MultiPoly
    for col in range(sub.shape[1]):
        acc = MultiPoly.zero(names)
        for s in range(sub.shape[0]):
            c = coeffs[s]
            if c.is_zero():
                continue
            acc = acc + c * sub[s, col]
        if not acc.is_zero():
            return False
    return True


def _syzygy_certificate(n, B, dmax=3, seed=0):
    """Search for a polynomial left null vector of the Jacobian submatrix.

    A verified identity sum_s c_s(x) * row_s(x) = 0 with some c_s nonzero
    proves the rows dependent over the function field, hence the symbolic
    determinant zero.  The candidate is found numerically (least singular
    vector of the stacked evaluation constraints), rationalized, and
    verified exactly; only the exact verification is trusted.
    """
    from .polynomials import MultiPoly

    gs = ground_set(n)
    sub = jacobian_rows(n, B)
    k = len(B)
    names = sub.names
    rng = np.random.default_rng(seed + 20240814)
    for deg in range(dmax + 1):
        monos = _monomials_up_to(gs.num_edges, deg)
        m = len(monos)
        npts = (k * m) // k + 12  # a few more point-blocks than unknowns
        blocks = []
        for _ in range(npts):
            pt = rng.uniform(0.5, 2.0, size=gs.num_edges)
            jrow = np.array([[float(sub[s, c].evaluate(list(pt)))
                              for c in range(k)] for s in range(k)])
            mvals = np.array([float(np.prod(pt ** np.array(mo)))
                              for mo in monos])
            blocks.append(np.einsum("m,sc->csm", mvals, jrow).reshape(k, k * m))
        A = np.vstack(blocks)
        _, sv, vt = np.linalg.svd(A)
        if sv[-1] > 1e-8 * sv[0]:
            continue
        vec = vt[-1]
        vec = vec / vec[np.argmax(np.abs(vec))]
        for bound in (1, 12, 10 ** 3, 10 ** 6):
            coeffs = []
            for s in range(k):
                terms = {}
                for j, mo in enumerate(monos):
                    x = vec[s * m + j]
                    q = Fraction(float(x)).limit_denominator(bound)
                    if q:
                        terms[mo] = q
                coeffs.append(MultiPoly(names, terms))
            if all(c.is_zero() for c in coeffs):
                continue
            if _verify_syzygy(sub, coeffs):
                return coeffs
    return None


def is_basis_exact(n: int, B, seed: int = 0) -> BasisVerdict:
    """Symbolic determinant test: deterministic and exact.

    Small submatrices (after the unit edge rows are discounted) go straight
    through the fraction-free determinant.  Larger ones are first probed
    numerically; dependent-looking rows are certified by an exactly
    verified polynomial null vector, independent-looking ones by a nonzero
    exact evaluation of the symbolic determinant, with the full symbolic
    determinant as the fallback for anything unresolved.
    """
    B = _check_size(n, B)
    core = sum(1 for f in B if len(f) > 2)
    sub = jacobian_rows(n, B)
    if core <= 5:
        det = poly_det(sub)
        if det.is_zero():
            return BasisVerdict(B, NONBASIS, "exact_det", "symbolic_zero")
        point, val = _witness_point(n, B, det, random.Random(seed))
        return BasisVerdict(B, BASIS, "exact_det", (point, val))

    rng = random.Random(seed)
    gs = ground_set(n)
    for _ in range(3):
        p = random_rational_point(rng, gs.num_edges)
        val = fraction_matrix_det(sub.evaluate(p))
        if val:
            return BasisVerdict(B, BASIS, "exact_det", (tuple(p), val))
    syz = _syzygy_certificate(n, B, seed=seed)
    if syz is not None:
        return BasisVerdict(B, NONBASIS, "exact_det",
                            ("syzygy", tuple(c.text() for c in syz)))
    det = poly_det(sub)  # complete but slow; unresolved cases only
    if det.is_zero():
        return BasisVerdict(B, NONBASIS, "exact_det", "symbolic_zero")
    point, val = _witness_point(n, B, det, random.Random(seed))
    return BasisVerdict(B, BASIS, "exact_det", (point, val))


def is_basis_mc(n: int, B, trials: int = 3, seed: int = 0) -> BasisVerdict:
    """One-sided Monte Carlo test via exact evaluation at random points.

    A nonzero determinant value is a sound basis certificate; an all-zero
    run reports a non-basis with confidence only.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    B = _check_size(n, B)
    rng = random.Random(seed)
    gs = ground_set(n)
    sub = jacobian_rows(n, B)
    for _ in range(trials):
        p = random_rational_point(rng, gs.num_edges)
        val = fraction_matrix_det(sub.evaluate(p))
        if val:
            return BasisVerdict(B, BASIS, "monte_carlo", (tuple(p), val))
    return BasisVerdict(B, NONBASIS, "monte_carlo", None)


@lru_cache(maxsize=None)
def _equation_polytope(n: int, f) -> NewtonPolytope:
    """Newton polytope of the fibre-system equation for one subset member.

    Edge members give x_e - b_e; others give (squared-volume minor) - b_s.
    The generic constant -b contributes the origin to every support.
    """
    gs = ground_set(n)
    k = gs.num_edges
    if len(f) == 2:
        e = [0] * k
        e[gs.index[f]] = 1
        pts = {tuple(e), (0,) * k}
    else:
        pts = set(cayley_menger_poly(n, f).support())
        pts.add((0,) * k)
    return NewtonPolytope(frozenset(pts), k)


def fibre_system_polytopes(n: int, B):
    """Newton polytopes of the square system cutting out a fibre over B."""
    B = _check_size(n, B)
    return [_equation_polytope(n, f) for f in B]


def is_nonbasis_bkk(n: int, B) -> BasisVerdict | None:
    """One-sided BKK test: zero mixed volume certifies a non-basis."""
    B = _check_size(n, B)
    if zero_mixed_volume(fibre_system_polytopes(n, B), affine=True):
        return BasisVerdict(B, NONBASIS, "bkk_zero", "bkk")
    return None


def classify_all(n: int, seed: int = 0, progress=None) -> list:
    """Certified verdict for every orbit representative, in catalog order.

    Monte Carlo (3 exact rational trials, shared points across candidates)
    -> BKK on the negatives -> symbolic determinant on what remains.
    """
    from .catalog import orbit_catalog

    gs = ground_set(n)
    cat = orbit_catalog(n)
    rng = random.Random(seed)
    k = gs.num_edges
    points = [random_rational_point(rng, k) for _ in range(3)]
    exact_jacs = [jacobian(n).evaluate(p) for p in points]
    float_jacs = [np.array([[float(x) for x in row] for row in jac])
                  for jac in exact_jacs]

    rows_per_rep = np.array(
        [[gs.index[f] for f in entry.rep.faces] for entry in cat],
        dtype=np.int64)
    # float prefilter: det of every candidate submatrix at every trial point
    float_dets = np.stack(
        [np.linalg.det(fj[rows_per_rep]) for fj in float_jacs], axis=1)
    scales = np.stack(
        [np.abs(fj[rows_per_rep]).max(axis=(1, 2)) ** k for fj in float_jacs],
        axis=1)
    decisive = np.abs(float_dets) > 1e-9 * np.maximum(scales, 1e-300)

    verdicts = []
    for pos, entry in enumerate(cat):
        B = entry.rep.faces
        rows = rows_per_rep[pos]
        verdict = None
        for t in range(3):
            if decisive[pos, t]:
                val = fraction_matrix_det(
                    [exact_jacs[t][i] for i in rows])
                if val:
                    verdict = BasisVerdict(B, BASIS, "monte_carlo",
                                           (tuple(points[t]), val))
                    break
        if verdict is None:
            # float said zero everywhere (or lied): exact trials
            mc_zero = True
            for t in range(3):
                if decisive[pos, t]:
                    continue
                val = fraction_matrix_det([exact_jacs[t][i] for i in rows])
                if val:
                    verdict = BasisVerdict(B, BASIS, "monte_carlo",
                                           (tuple(points[t]), val))
                    mc_zero = False
                    break
            if mc_zero:
                verdict = is_nonbasis_bkk(n, B)
                if verdict is None:
                    verdict = is_basis_exact(n, B, seed=seed)
        verdicts.append(verdict)
        if progress and (pos + 1) % 1000 == 0:
            progress(pos + 1, len(cat))
    return verdicts


# -- rank and circuits -----------------------------------------------------


def subset_rank(n: int, faces, seed: int = 0, trials: int = 3) -> int:
    """Rank of a face subset: max Jacobian row rank over random rational
    points (a sound lower bound; stable across trials generically)."""
    faces = face_set(faces)
    gs = ground_set(n)
    rng = random.Random(seed)
    sub = jacobian_rows(n, faces)
    best = 0
    for _ in range(trials):
        p = random_rational_point(rng, gs.num_edges)
        best = max(best, fraction_matrix_rank(sub.evaluate(p)))
        if best == min(len(faces), gs.num_edges):
            break
    return best


def _is_dependent_exact(n: int, faces) -> bool:
    """Symbolically certified dependence: every maximal minor vanishes."""
    gs = ground_set(n)
    sub = jacobian_rows(n, faces)
    size = len(faces)
    if size > gs.num_edges:
        return True
    for cols in combinations(range(gs.num_edges), size):
        if not poly_det(sub.submatrix(range(size), cols)).is_zero():
            return False
    return True


def _orbit_images(n: int, faces):
    return {apply_perm(g, faces) for g in vertex_perms(n)}


def all_orbits_of_size(n: int, size: int):
    out = []
    for fvec in admissible_fvectors(n, size):
        out.extend(orbits_with_fvector(n, fvec))
    return out


def circuits_up_to(n: int, max_size: int, seed: int = 0) -> list:
    """Orbits of circuits (minimal dependent sets) of size <= max_size.

    Candidates are scanned by size; supersets of found circuits are pruned;
    claimed circuits are confirmed symbolically (dependence of the set,
    independence witnesses for all one-element-smaller subsets).
    """
    gs = ground_set(n)
    if max_size > gs.num_edges + 1:
        raise ValueError(
            f"circuits have at most e(n)+1 = {gs.num_edges + 1} elements")
    found = []
    found_images = []
    for size in range(2, max_size + 1):
        for rep in all_orbits_of_size(n, size):
            S = set(rep.faces)
            if any(img <= S for images in found_images for img in images):
                continue
            if subset_rank(n, rep.faces, seed=seed) == size:
                continue  # independent
            if not _is_dependent_exact(n, rep.faces):
                continue  # rank trial was unlucky; certified independent
            minimal = True
            for drop in range(size):
                sub = rep.faces[:drop] + rep.faces[drop + 1:]
                if subset_rank(n, sub, seed=seed) != size - 1:
                    minimal = False
                    break
            if minimal:
                found.append(rep)
                found_images.append(
                    [set(img) for img in _orbit_images(n, rep.faces)])
    return found


# -- non-basis explanations ------------------------------------------------


@lru_cache(maxsize=None)
def independent_subsets(m: int) -> frozenset:
    """All independent subsets of the matroid for dimension m (m <= 3),
    as frozensets of faces, from the certified basis classification."""
    if m > 3:
        raise ValueError("independence tables are materialized for m <= 3")
    bases = [v.subset for v in classify_all(m) if v.is_basis]
    expanded = set()
    for b in bases:
        expanded.update(frozenset(img) for img in _orbit_images(m, b))
    independent = set()
    for b in expanded:
        fb = sorted(b)
        for r in range(len(fb) + 1):
            for sub in combinations(fb, r):
                independent.add(frozenset(sub))
    return frozenset(independent)


def _relabel(faces, verts):
    """Relabel faces living on the vertex subset `verts` to 1..|verts|."""
    pos = {v: i + 1 for i, v in enumerate(sorted(verts))}
    return tuple(tuple(sorted(pos[v] for v in f)) for f in faces)


def has_embedded_dependence(n: int, D) -> bool:
    """Does D restrict to a dependent set of a lower-dimensional face?"""
    D = face_set(D)
    verts = range(1, n + 2)
    for m in range(2, n):
        table = independent_subsets(m)
        for sub in combinations(verts, m + 1):
            vs = set(sub)
            inside = [f for f in D if set(f) <= vs]
            if len(inside) < 2:
                continue
            if frozenset(_relabel(inside, sub)) not in table:
                return True
    return False


EMBEDDED = "embedded_lower_circuit"
BKK_ZERO = "bkk_zero"
EXACT_ONLY = "exact_only"


def explain_nonbasis(n: int, D) -> str:
    """Why a non-basis is a non-basis, by cheapest certificate first."""
    D = _check_size(n, D)
    if has_embedded_dependence(n, D):
        return EMBEDDED
    if is_nonbasis_bkk(n, D) is not None:
        return BKK_ZERO
    if not is_basis_exact(n, D).is_basis:
        return EXACT_ONLY
    raise ValueError(f"{D} is a basis, not a non-basis")
