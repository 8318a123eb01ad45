"""Face lattice of the n-simplex and the coordinate order used everywhere else.

A face of the n-simplex on vertices {1, ..., n+1} is any vertex subset of
size >= 2, written as a sorted tuple of ints.  Faces are ordered by
(cardinality, lexicographic), which puts the e(n) = C(n+1, 2) edges first;
every matrix, vector and serialized record in this package uses that order.
"""

from functools import lru_cache
from itertools import combinations
from math import comb

Face = tuple  # sorted tuple of distinct ints in 1..n+1, length >= 2


def face(vertices) -> Face:
    """Validate and normalize a face given as any iterable of vertices."""
    f = tuple(sorted(vertices))
    if len(f) < 2:
        raise ValueError(f"a face needs at least 2 vertices, got {f}")
    if len(set(f)) != len(f):
        raise ValueError(f"repeated vertices in face {f}")
    if f[0] < 1:
        raise ValueError(f"vertices are 1-based, got {f}")
    return f


def face_key(f: Face):
    """Sort key realizing the (cardinality, lexicographic) total order."""
    return (len(f), f)


def face_label(f: Face) -> str:
    """Serialize a face: digit string like "1234" while all vertices fit."""
    if f[-1] <= 9:
        return "".join(str(v) for v in f)
    return ".".join(str(v) for v in f)


def parse_face(label: str) -> Face:
    if "." in label:
        return face(int(v) for v in label.split("."))
    return face(int(ch) for ch in label)


def num_faces(n: int) -> int:
    """N(n) = 2^(n+1) - (n+1) - 1 positive-dimensional faces."""
    return 2 ** (n + 1) - (n + 1) - 1


def num_edges(n: int) -> int:
    """e(n) = C(n+1, 2)."""
    return comb(n + 1, 2)


class GroundSet:
    """All positive-dimensional faces of the n-simplex, in canonical order.

    Attributes:
        n: simplex dimension
        faces: ordered tuple of all N(n) faces, edges occupying the first
            e(n) positions
        index: face -> position in `faces`
    """

    def __init__(self, n: int):
        if n < 2:
            raise ValueError(f"simplex dimension must be >= 2, got n={n}")
        self.n = n
        verts = range(1, n + 2)
        faces = []
        for size in range(2, n + 2):
            faces.extend(combinations(verts, size))
        self.faces = tuple(faces)
        self.index = {f: i for i, f in enumerate(self.faces)}
        self.num_edges = num_edges(n)
        self.num_faces = len(self.faces)

    @property
    def edges(self):
        return self.faces[: self.num_edges]

    @property
    def vertices(self):
        return tuple(range(1, self.n + 2))

    def dim(self, f: Face) -> int:
        """Dimension of a face (vertices minus one)."""
        return len(f) - 1

    def faces_of_dim(self, d: int):
        """All faces of dimension d, in order."""
        return tuple(f for f in self.faces if len(f) == d + 1)

    def edge_positions(self, f: Face):
        """Positions (within the edge block) of the edges spanned by f."""
        return tuple(self.index[e] for e in combinations(f, 2))

    def labels(self):
        return tuple(face_label(f) for f in self.faces)

    def __repr__(self):
        return f"GroundSet(n={self.n}, N={self.num_faces}, e={self.num_edges})"


@lru_cache(maxsize=None)
def ground_set(n: int) -> GroundSet:
    """The shared, immutable ground set for dimension n."""
    return GroundSet(n)
