"""Vertex-relabeling action on sets of faces and orbit enumeration.

The symmetric group on the n+1 vertices acts on face sets by relabeling.
Canonical form of a face set = the lexicographically smallest orbit element
under the face total order (cardinality, then lex); at this scale the group
has at most 120 elements, so the minimum is taken over the whole group,
vectorized with numpy when many sets are canonicalized at once.

Enumeration of all orbit representatives of e(n)-subsets is stratified by
f-vector: for each admissible f-vector, subsets of the dimension with the
largest binomial count are canonicalized first and only their
representatives are extended by the remaining dimensions.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb, factorial

import numpy as np

from .faces import Face, face_key, ground_set

FaceSet = tuple  # faces sorted by face_key, no duplicates


def face_set(faces) -> FaceSet:
    faces = [tuple(f) for f in faces]
    fs = tuple(sorted(set(faces), key=face_key))
    if len(fs) != len(faces):
        raise ValueError("duplicate faces in face set")
    return fs


def apply_perm(g, faces) -> FaceSet:
    """Relabel every vertex of every face by g and re-sort.

    g is a mapping vertex -> vertex (dict, or sequence with g[i-1] = image
    of vertex i).
    """
    if not isinstance(g, dict):
        g = {i + 1: v for i, v in enumerate(g)}
    return tuple(sorted((tuple(sorted(g[v] for v in f)) for f in faces),
                        key=face_key))


def cycle(n: int, *verts):
    """The cyclic permutation (verts[0] verts[1] ...) on vertices 1..n+1."""
    images = list(range(1, n + 2))
    for a, b in zip(verts, verts[1:]):
        images[a - 1] = b
    if verts:
        images[verts[-1] - 1] = verts[0]
    return tuple(images)


@lru_cache(maxsize=None)
def vertex_perms(n: int):
    """All permutations of the vertices 1..n+1, identity first."""
    return tuple(permutations(range(1, n + 2)))


@lru_cache(maxsize=None)
def _perm_face_table(n: int):
    """For every vertex permutation, the induced map on face indices.

    Returned as a numpy array of shape (group order, N(n)) so whole batches
    of face sets can be relabeled at once.
    """
    gs = ground_set(n)
    perms = vertex_perms(n)
    table = np.empty((len(perms), gs.num_faces), dtype=np.int16)
    for gi, g in enumerate(perms):
        mapping = {i + 1: v for i, v in enumerate(g)}
        for fi, f in enumerate(gs.faces):
            img = tuple(sorted(mapping[v] for v in f))
            table[gi, fi] = gs.index[img]
    return table


def _code_weights(n: int, k: int):
    """Place-value weights packing a sorted index k-tuple into one integer."""
    base = ground_set(n).num_faces + 1
    if base ** k > 2 ** 62:
        return None  # fall back to python tuples (n >= 5 territory)
    return np.array([base ** (k - 1 - j) for j in range(k)], dtype=np.int64)


def canonical_codes(n: int, sets: np.ndarray, want_stab=False):
    """Canonical (minimal) packed code of each row of an (M, k) index array.

    Optionally also counts, per row, how many group elements fix the set,
    which gives orbit sizes by orbit-stabilizer.
    """
    table = _perm_face_table(n)
    weights = _code_weights(n, sets.shape[1])
    sets = np.sort(sets, axis=1)
    if weights is None:
        return _canonical_codes_py(n, sets, want_stab)
    own = sets @ weights
    best = own.copy()
    stab = np.zeros(len(sets), dtype=np.int64)
    for gi in range(len(table)):
        codes = np.sort(table[gi][sets], axis=1) @ weights
        np.minimum(best, codes, out=best)
        if want_stab:
            stab += codes == own
    return (best, stab) if want_stab else (best, None)


def _canonical_codes_py(n: int, sets, want_stab):
    # arbitrary-precision packing once k * log2(N+1) overflows int64
    table = _perm_face_table(n)
    base = ground_set(n).num_faces + 1
    best = []
    stab = []
    for row in sets:
        row = tuple(int(i) for i in row)

        def pack(tup):
            c = 0
            for i in tup:
                c = c * base + i
            return c

        own = pack(row)
        mn = own
        fixed = 0
        for gi in range(len(table)):
            img = pack(sorted(int(table[gi][i]) for i in row))
            if img < mn:
                mn = img
            if img == own:
                fixed += 1
        best.append(mn)
        stab.append(fixed)
    return (np.array(best, dtype=object),
            np.array(stab) if want_stab else None)


def decode(n: int, code, k: int) -> FaceSet:
    """Inverse of the packed-code encoding, back to a face tuple."""
    gs = ground_set(n)
    base = gs.num_faces + 1
    idx = []
    c = int(code)
    for _ in range(k):
        c, r = divmod(c, base)
        idx.append(r)
    return tuple(gs.faces[i] for i in reversed(idx))


def canonical_form(faces, n=None) -> FaceSet:
    """Lexicographically minimal orbit element of a face set.

    The minimum is the same for every ambient group containing the used
    vertices (relabeling into an initial segment never hurts), so n may be
    omitted and is then inferred from the largest vertex present.
    """
    faces = face_set(faces)
    if n is None:
        n = max(2, max(v for f in faces for v in f) - 1)

    def set_key(fs):
        return tuple(face_key(f) for f in fs)

    return min((apply_perm(g, faces) for g in vertex_perms(n)), key=set_key)


def stabilizer_order(n: int, faces) -> int:
    faces = face_set(faces)
    return sum(1 for g in vertex_perms(n) if apply_perm(g, faces) == faces)


def orbit_size(n: int, faces) -> int:
    return factorial(n + 1) // stabilizer_order(n, faces)


def fvector(n: int, faces) -> tuple:
    """(f_1, ..., f_n): number of faces of each dimension."""
    counts = [0] * n
    for f in faces:
        counts[len(f) - 2] += 1
    return tuple(counts)


@dataclass(frozen=True)
class OrbitRep:
    """One orbit of face sets: canonical representative plus invariants."""
    faces: FaceSet
    orbit_size: int
    fvec: tuple


def admissible_fvectors(n: int, k: int):
    """All (f_1..f_n) with sum k and f_i bounded by the face counts of the
    simplex, ordered by integer partition (reverse lex), then composition."""
    bounds = [comb(n + 1, d + 2) for d in range(n)]

    def partitions(total, mx):
        if total == 0:
            yield ()
            return
        for head in range(min(total, mx), 0, -1):
            for rest in partitions(total - head, head):
                yield (head,) + rest

    out = []
    seen = set()
    for part in partitions(k, k):
        if len(part) > n:
            continue
        comps = sorted(set(permutations(part + (0,) * (n - len(part)))),
                       reverse=True)
        for comp in comps:
            if comp in seen:
                continue
            seen.add(comp)
            if all(c <= b for c, b in zip(comp, bounds)):
                out.append(comp)
    return out


def _combo_indices(gs, dim, size):
    faces = [gs.index[f] for f in gs.faces_of_dim(dim)]
    return [tuple(c) for c in combinations(faces, size)]


_CHUNK = 200_000


def _unique_canonical(n, rows, k, want_stab=False):
    """Canonicalize an iterable of index tuples; return sorted unique codes
    (and matching stabilizer counts computed on the canonical reps)."""
    codes = []
    rows = list(rows)
    for lo in range(0, len(rows), _CHUNK):
        arr = np.array(rows[lo:lo + _CHUNK], dtype=np.int16).reshape(-1, k)
        c, _ = canonical_codes(n, arr)
        codes.append(np.unique(c))
    uniq = np.unique(np.concatenate(codes)) if codes else np.array([], dtype=np.int64)
    if not want_stab:
        return uniq, None
    reps = np.array([[ground_set(n).index[f] for f in decode(n, c, k)]
                     for c in uniq], dtype=np.int16).reshape(-1, k)
    _, stab = canonical_codes(n, reps, want_stab=True)
    return uniq, stab


def orbits_with_fvector(n: int, fvec) -> list:
    """Orbit representatives of face sets with the given f-vector.

    Subsets of the dimension maximizing C(#i-faces, f_i) are canonicalized
    first; each representative is then extended by all choices in the other
    dimensions and the extensions are canonicalized and deduplicated.
    """
    gs = ground_set(n)
    fvec = tuple(fvec)
    k = sum(fvec)
    if k == 0:
        return []
    counts = [comb(n + 1, d + 2) for d in range(n)]
    if any(c > b for c, b in zip(fvec, counts)):
        raise ValueError(f"f-vector {fvec} exceeds the simplex face counts")
    active = [d for d in range(n) if fvec[d] > 0]
    pivot = max(active, key=lambda d: comb(counts[d], fvec[d]))

    stage1, _ = _unique_canonical(
        n, _combo_indices(gs, pivot + 1, fvec[pivot]), fvec[pivot])
    others = [_combo_indices(gs, d + 1, fvec[d])
              for d in range(n) if d != pivot]

    def extensions():
        for code in stage1:
            rep = tuple(gs.index[f] for f in decode(n, code, fvec[pivot]))
            for choice in product(*others):
                yield rep + tuple(i for combo in choice for i in combo)

    uniq, stab = _unique_canonical(n, extensions(), k, want_stab=True)
    order = factorial(n + 1)
    return [OrbitRep(decode(n, c, k), order // int(s), fvec)
            for c, s in zip(uniq, stab)]


def all_candidate_orbits(n: int) -> list:
    """One representative per orbit of e(n)-subsets of the ground set.

    Representatives are grouped by f-vector (admissible_fvectors order) and
    sorted by canonical code inside each group; for n = 3 the catalog module
    re-indexes them to the frozen published order.
    """
    gs = ground_set(n)
    out = []
    for fvec in admissible_fvectors(n, gs.num_edges):
        out.extend(orbits_with_fvector(n, fvec))
    return out
