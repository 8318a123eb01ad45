"""Published orbit numbering for the tetrahedron case, frozen as data.

The 35 orbits of 6-subsets of tetrahedron faces carry a conventional index
1..35 in the published catalog; downstream tables (degrees, groups,
experiments) are keyed to it.  The enumeration in orbits.py produces the
same 35 orbits in its own deterministic order, so this module stores the
published set for each index and re-indexes the enumeration accordingly.
For every other n the indices are simply the enumeration order.
"""

from dataclasses import dataclass
from functools import lru_cache

from .faces import ground_set, parse_face
from .orbits import (
    OrbitRep,
    all_candidate_orbits,
    canonical_form,
    fvector,
    orbit_size,
)

_N3_FIGURE = {
    1: "12 13 14 23 24 34",
    2: "12 13 14 23 24 123",
    3: "12 13 14 24 34 123",
    4: "12 13 14 23 24 1234",
    5: "12 13 14 23 123 124",
    6: "12 13 23 34 123 124",
    7: "12 13 14 34 123 124",
    8: "12 13 14 24 123 234",
    9: "12 13 24 34 123 124",
    10: "12 13 24 34 123 234",
    11: "12 13 123 124 134 234",
    12: "12 34 123 124 134 234",
    13: "12 13 14 23 123 1234",
    14: "12 13 14 24 123 1234",
    15: "12 14 24 34 123 1234",
    16: "12 13 24 34 123 1234",
    17: "12 123 124 134 234 1234",
    18: "12 13 14 123 124 134",
    19: "12 13 14 123 124 234",
    20: "12 13 23 123 124 134",
    21: "12 14 24 123 134 234",
    22: "12 13 24 123 124 134",
    23: "12 13 34 123 124 234",
    24: "12 13 14 123 124 1234",
    25: "12 13 14 123 234 1234",
    26: "12 13 23 123 124 1234",
    27: "12 14 24 123 134 1234",
    28: "12 13 24 123 124 1234",
    29: "12 13 34 123 124 1234",
    30: "12 13 24 123 234 1234",
    31: "12 24 34 123 134 1234",
    32: "12 13 123 124 134 1234",
    33: "12 13 123 124 234 1234",
    34: "12 34 123 124 134 1234",
    35: "12 14 123 134 234 1234",
}

# catalog indices that are not bases (the "grey" orbits)
N3_NONBASIS_INDICES = frozenset({2, 5, 6, 10, 13, 20, 26})


def published_face_set(index: int):
    """The published representative for a tetrahedron orbit index."""
    return tuple(parse_face(tok) for tok in _N3_FIGURE[index].split())


@dataclass(frozen=True)
class CatalogEntry:
    index: int  # 1-based catalog index
    rep: OrbitRep


@lru_cache(maxsize=None)
def orbit_catalog(n: int):
    """Indexed orbit catalog: published order for n=3, enumeration order else."""
    if n == 3:
        entries = []
        for idx in sorted(_N3_FIGURE):
            faces = canonical_form(published_face_set(idx), n=3)
            entries.append(CatalogEntry(idx, OrbitRep(
                faces, orbit_size(3, faces), fvector(3, faces))))
        return tuple(entries)
    return tuple(CatalogEntry(i + 1, rep)
                 for i, rep in enumerate(all_candidate_orbits(n)))


def catalog_entry(n: int, index: int) -> CatalogEntry:
    cat = orbit_catalog(n)
    if not 1 <= index <= len(cat):
        raise KeyError(f"orbit index {index} out of range 1..{len(cat)}")
    entry = cat[index - 1]
    assert entry.index == index
    return entry


def catalog_index(n: int, faces) -> int:
    """Catalog index of the orbit containing the given face set."""
    canon = canonical_form(faces, n=n)
    for entry in orbit_catalog(n):
        if entry.rep.faces == canon:
            return entry.index
    raise KeyError(f"face set {faces} has no catalog entry (wrong size?)")


def weighted_orbit_total(n: int) -> int:
    """Sum of orbit sizes over the catalog (should count all e(n)-subsets)."""
    return sum(e.rep.orbit_size for e in orbit_catalog(n))
