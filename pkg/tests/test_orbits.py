import random
from itertools import combinations, permutations
from math import comb, factorial

import numpy as np
import pytest

from volmatroid.catalog import (
    N3_NONBASIS_INDICES,
    catalog_entry,
    catalog_index,
    orbit_catalog,
    published_face_set,
    weighted_orbit_total,
)
from volmatroid.faces import face_key, ground_set
from volmatroid.orbits import (
    admissible_fvectors,
    all_candidate_orbits,
    apply_perm,
    canonical_codes,
    canonical_form,
    cycle,
    face_set,
    fvector,
    orbit_size,
    orbits_with_fvector,
    stabilizer_order,
    vertex_perms,
)


def brute_min_image(n, faces):
    """Independent oracle: min over all vertex bijections, own relabeling."""
    best = None
    for img in permutations(range(1, n + 2)):
        mapping = dict(zip(range(1, n + 2), img))
        moved = tuple(sorted(
            (tuple(sorted(mapping[v] for v in f)) for f in faces),
            key=face_key))
        key = tuple(face_key(f) for f in moved)
        if best is None or key < best[0]:
            best = (key, moved)
    return best[1]


def test_apply_perm_examples():
    S = face_set([(1, 2), (1, 3), (1, 2, 3)])
    swap12 = (2, 1, 3)
    assert apply_perm(swap12, S) == face_set([(1, 2), (2, 3), (1, 2, 3)])
    ident = (1, 2, 3)
    assert apply_perm(ident, S) == S
    four_cycle = cycle(3, 1, 2, 3, 4)
    S2 = face_set([(1, 2), (1, 3), (1, 4), (1, 2, 3), (1, 2, 4), (1, 3, 4)])
    assert apply_perm(four_cycle, S2) == face_set(
        [(1, 2), (2, 3), (2, 4), (1, 2, 3), (1, 2, 4), (2, 3, 4)])


def test_canonical_form_merges_orbit():
    triples = [
        face_set([(1, 2), (1, 3), (1, 2, 3)]),
        face_set([(1, 2), (2, 3), (1, 2, 3)]),
        face_set([(1, 3), (2, 3), (1, 2, 3)]),
    ]
    forms = {canonical_form(t, n=2) for t in triples}
    assert len(forms) == 1
    sym = face_set([(1, 2), (1, 3), (2, 3)])
    assert canonical_form(sym, n=2) == sym


def test_canonical_form_orbit_invariance_random():
    rng = random.Random(4242)
    gs = ground_set(3)
    perms = vertex_perms(3)
    for _ in range(1000):
        size = rng.randint(1, 8)
        S = face_set(rng.sample(gs.faces, size))
        g = rng.choice(perms)
        assert canonical_form(apply_perm(g, S), n=3) == canonical_form(S, n=3)


def test_canonical_form_matches_brute_oracle():
    rng = random.Random(77)
    gs = ground_set(3)
    for _ in range(200):
        S = face_set(rng.sample(gs.faces, rng.randint(1, 7)))
        assert canonical_form(S, n=3) == brute_min_image(3, S)


def test_batch_codes_agree_with_single():
    rng = random.Random(5)
    gs = ground_set(3)
    sets = [sorted(gs.index[f] for f in rng.sample(gs.faces, 6))
            for _ in range(300)]
    codes, stab = canonical_codes(3, np.array(sets, dtype=np.int16),
                                  want_stab=True)
    for row, code, st in zip(sets, codes, stab):
        S = face_set(gs.faces[i] for i in row)
        canon = canonical_form(S, n=3)
        packed = 0
        for f in canon:
            packed = packed * (gs.num_faces + 1) + gs.index[f]
        assert packed == int(code)
        assert int(st) == stabilizer_order(3, S)


def test_admissible_fvectors_tables():
    got = admissible_fvectors(3, 6)
    assert len(got) == 10
    assert got == [(6, 0, 0), (5, 1, 0), (5, 0, 1), (4, 2, 0), (2, 4, 0),
                   (4, 1, 1), (1, 4, 1), (3, 3, 0), (3, 2, 1), (2, 3, 1)]
    assert admissible_fvectors(2, 3) == [(3, 0), (2, 1)]
    # n=4: exhaustive integer enumeration oracle
    bounds = [10, 10, 5, 1]
    expect = 0
    for a in range(11):
        for b in range(11):
            for c in range(6):
                for d in range(2):
                    if a + b + c + d == 10:
                        expect += 1
    assert len(admissible_fvectors(4, 10)) == expect


def test_orbits_with_fvector_counts():
    assert len(orbits_with_fvector(3, (3, 2, 1))) == 8
    assert len(orbits_with_fvector(3, (6, 0, 0))) == 1
    assert len(orbits_with_fvector(3, (5, 1, 0))) == 2
    # stratification first stage: 20 edge triples fall into 3 orbits
    gs = ground_set(3)
    triples = {canonical_form(t, n=3) for t in combinations(gs.edges, 3)}
    assert len(triples) == 3


def test_all_candidate_orbit_counts():
    assert len(all_candidate_orbits(2)) == 2
    all3 = all_candidate_orbits(3)
    assert len(all3) == 35
    assert sum(r.orbit_size for r in all3) == comb(11, 6)


def test_orbit_stabilizer_identity():
    for rep in all_candidate_orbits(3):
        assert rep.orbit_size * stabilizer_order(3, rep.faces) == factorial(4)
        assert rep.faces == canonical_form(rep.faces, n=3)
        assert sum(rep.fvec) == 6


def test_partition_property_exhaustive_n3():
    gs = ground_set(3)
    reps = {r.faces for r in all_candidate_orbits(3)}
    hits = {}
    for sub in combinations(gs.faces, 6):
        c = canonical_form(sub, n=3)
        assert c in reps
        hits[c] = hits.get(c, 0) + 1
    assert len(hits) == 35
    assert sum(hits.values()) == comb(11, 6)


def test_catalog_pinning():
    cat = orbit_catalog(3)
    assert [e.index for e in cat] == list(range(1, 36))
    assert weighted_orbit_total(3) == comb(11, 6)
    enum = {r.faces for r in all_candidate_orbits(3)}
    assert {e.rep.faces for e in cat} == enum
    # published representatives land on their own indices
    for idx in range(1, 36):
        assert catalog_index(3, published_face_set(idx)) == idx
    assert catalog_entry(3, 9).rep.faces == canonical_form(
        published_face_set(9), n=3)
    assert N3_NONBASIS_INDICES < set(range(1, 36))


def test_catalog_rejects_bad_index():
    with pytest.raises(KeyError):
        catalog_entry(3, 36)


def test_fvector():
    assert fvector(3, published_face_set(31)) == (3, 2, 1)
    assert fvector(3, published_face_set(17)) == (1, 4, 1)


def test_orbit_size_examples():
    # the all-edges set is fixed by the whole group
    assert orbit_size(3, published_face_set(1)) == 1
