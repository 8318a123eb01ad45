"""Permutation groups on [d]: stabilizer chains, orders, transitivity,
block systems, solvability, partition stabilizers, and structure labels.

Permutations are tuples of 0-based images; composition is left-to-right:
mult(p, q) maps x to q[p[x]].  Groups are built from generators with a
deterministic Schreier-Sims (all Schreier generators sifted, no random
elements), which is ample at the degrees that occur here (d <= 64).
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import factorial


def identity(d):
    return tuple(range(d))


def mult(p, q):
    """Apply p, then q."""
    return tuple(q[i] for i in p)


def inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def perm_order(p):
    n = 1
    q = p
    ident = identity(len(p))
    while q != ident:
        q = mult(q, p)
        n += 1
    return n


def from_cycles(d, *cycles):
    """Permutation from 0-based cycles, e.g. from_cycles(4, (0, 1), (2, 3))."""
    images = list(range(d))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:]):
            images[a] = b
        if cyc:
            images[cyc[-1]] = cyc[0]
    return tuple(images)


def cycle_string(p):
    """Cycle notation with 1-based points, identity as 'e'."""
    seen = set()
    parts = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        j = p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        parts.append("(" + " ".join(str(x + 1) for x in cyc) + ")")
    return "".join(parts) if parts else "e"


def parse_cycle_string(s, d):
    """Inverse of cycle_string."""
    if s == "e":
        return identity(d)
    cycles = []
    for part in s.replace(")", ")|").split("|"):
        part = part.strip().strip("()")
        if part:
            cycles.append(tuple(int(x) - 1 for x in part.split()))
    return from_cycles(d, *cycles)


class _ChainLevel:
    __slots__ = ("base", "transversal", "gens")

    def __init__(self, base):
        self.base = base
        self.transversal = {base: None}  # point -> coset rep moving base there
        self.gens = []


class PermGroup:
    """Group generated by permutations, with a lazily built stabilizer chain."""

    def __init__(self, degree, generators=()):
        self.degree = degree
        gens = []
        for g in generators:
            g = tuple(g)
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise ValueError(f"not a permutation of 0..{degree - 1}: {g}")
            if g != identity(degree) and g not in gens:
                gens.append(g)
        self.generators = tuple(gens)
        self._chain = None

    # -- stabilizer chain --------------------------------------------------
    # Level i stores the strong generators first placed there; the group
    # stabilizing bases 0..i-1 is generated by the gens of levels >= i, and
    # every orbit/transversal is computed with that full set.

    def _sift(self, chain, p):
        """Reduce p through the chain; returns (residue, failure level)."""
        for li, level in enumerate(chain):
            x = p[level.base]
            if x == level.base:
                continue
            rep = level.transversal.get(x)
            if rep is None:
                return p, li
            p = mult(p, inverse(rep))
        return p, len(chain)

    def _build_chain(self):
        d = self.degree
        ident = identity(d)
        chain = []

        def place(p):
            """Attach a nonidentity element at the first level whose base
            it moves, appending levels as needed."""
            li = 0
            while True:
                if li == len(chain):
                    moved = next(i for i in range(d) if p[i] != i)
                    chain.append(_ChainLevel(moved))
                level = chain[li]
                if p[level.base] == level.base:
                    li += 1
                    continue
                level.gens.append(p)
                return

        for g in self.generators:
            res, _ = self._sift(chain, g)
            if res != ident:
                place(res)

        def strong_gens(i):
            return [g for level in chain[i:] for g in level.gens]

        def extend_orbit(i):
            level = chain[i]
            gens = strong_gens(i)
            queue = list(level.transversal)
            while queue:
                x = queue.pop()
                rep = level.transversal[x]
                for g in gens:
                    y = g[x]
                    if y not in level.transversal:
                        level.transversal[y] = mult(rep, g) if rep else g
                        queue.append(y)

        def try_close(i):
            """Close level i assuming deeper levels are closed.

            Returns None when every Schreier generator sifts to the
            identity, else the level where a residue was newly placed.
            """
            extend_orbit(i)
            gens = strong_gens(i)
            level = chain[i]
            for x in sorted(level.transversal):
                rep = level.transversal[x]
                for g in gens:
                    r2 = level.transversal[g[x]]
                    sg = mult(rep, g) if rep else g
                    if r2:
                        sg = mult(sg, inverse(r2))
                    if sg == ident:
                        continue
                    res, _ = self._sift(chain, sg)
                    if res != ident:
                        li = 0
                        while res[chain[li].base] == chain[li].base:
                            li += 1
                            if li == len(chain):
                                break
                        place(res)
                        return min(li, len(chain) - 1)
            return None

        # close levels bottom-up; a new residue at level j reopens j..i
        i = len(chain) - 1
        while i >= 0:
            j = try_close(i)
            i = i - 1 if j is None else j
        return chain

    @property
    def chain(self):
        if self._chain is None:
            self._chain = self._build_chain()
        return self._chain

    def order(self) -> int:
        o = 1
        for level in self.chain:
            o *= len(level.transversal)
        return o

    def contains(self, p) -> bool:
        p = tuple(p)
        if len(p) != self.degree:
            return False
        res, _ = self._sift(self.chain, p)
        return res == identity(self.degree)

    def elements(self):
        """Iterate all elements (only sensible for modest orders)."""
        d = self.degree
        chain = self.chain

        def rec(li):
            if li == len(chain):
                yield identity(d)
                return
            for tail in rec(li + 1):
                for rep in chain[li].transversal.values():
                    yield tail if rep is None else mult(tail, rep)

        yield from rec(0)

    def orbits(self):
        seen = [False] * self.degree
        out = []
        for s in range(self.degree):
            if seen[s]:
                continue
            orb = {s}
            queue = [s]
            while queue:
                x = queue.pop()
                for g in self.generators:
                    y = g[x]
                    if y not in orb:
                        orb.add(y)
                        queue.append(y)
            for x in orb:
                seen[x] = True
            out.append(tuple(sorted(orb)))
        return out

    def __repr__(self):
        return (f"PermGroup(degree={self.degree}, "
                f"generators={len(self.generators)})")


def group_from_generators(perms, degree=None) -> PermGroup:
    perms = [tuple(p) for p in perms]
    if degree is None:
        if not perms:
            raise ValueError("need a degree for the trivial group")
        degree = len(perms[0])
    return PermGroup(degree, perms)


def symmetric_group(d) -> PermGroup:
    if d <= 1:
        return PermGroup(d, ())
    if d == 2:
        return PermGroup(2, [(1, 0)])
    return PermGroup(d, [from_cycles(d, (0, 1)), from_cycles(d, tuple(range(d)))])


def is_transitive(G: PermGroup) -> bool:
    return len(G.orbits()) == 1 or G.degree == 1


# -- block systems -----------------------------------------------------------


def _finest_blocks_joining(G: PermGroup, a, b):
    """Finest G-invariant partition with a and b in one block (union-find)."""
    parent = list(range(G.degree))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return None
        parent[rx] = ry
        return (rx, ry)

    queue = [(a, b)]
    union(a, b)
    while queue:
        x, y = queue.pop()
        for g in G.generators:
            merged = union(g[x], g[y])
            if merged:
                queue.append(merged)
    blocks = {}
    for x in range(G.degree):
        blocks.setdefault(find(x), []).append(x)
    return tuple(sorted(tuple(sorted(bl)) for bl in blocks.values()))


def block_systems(G: PermGroup):
    """All distinct proper block systems of the form 'finest joining {0,k}'."""
    if not is_transitive(G):
        raise ValueError("block systems are defined for transitive groups")
    out = set()
    for k in range(1, G.degree):
        bs = _finest_blocks_joining(G, 0, k)
        if 1 < len(bs) < G.degree:
            out.add(bs)
    return sorted(out, key=lambda bs: (len(bs[0]), bs))


def minimal_block_systems(G: PermGroup):
    """The minimal nontrivial block systems (finest under refinement)."""
    systems = block_systems(G)

    def refines(p, q):
        return all(any(set(b) <= set(c) for c in q) for b in p)

    return [p for p in systems
            if not any(q != p and refines(q, p) for q in systems)]


def is_primitive(G: PermGroup) -> bool:
    if G.degree <= 2:
        return True
    return not block_systems(G)


# -- solvability -------------------------------------------------------------


def derived_subgroup(G: PermGroup) -> PermGroup:
    """Commutator subgroup: normal closure of generator commutators."""
    d = G.degree
    gens = list(G.generators)
    comms = []
    H = PermGroup(d, ())
    queue = []
    for a, b in combinations(gens, 2):
        c = mult(mult(inverse(a), inverse(b)), mult(a, b))
        if c != identity(d) and not H.contains(c):
            comms.append(c)
            H = PermGroup(d, comms)
            queue.append(c)
    while queue:
        h = queue.pop()
        for g in gens:
            c = mult(mult(inverse(g), h), g)
            if not H.contains(c):
                comms.append(c)
                H = PermGroup(d, comms)
                queue.append(c)
    return H


def is_solvable(G: PermGroup) -> bool:
    order = G.order()
    while order > 1:
        G = derived_subgroup(G)
        new_order = G.order()
        if new_order == order:
            return False  # perfect and nontrivial
        order = new_order
    return True


def derived_length(G: PermGroup) -> int:
    length = 0
    order = G.order()
    while order > 1:
        G = derived_subgroup(G)
        new_order = G.order()
        if new_order == order:
            return -1  # not solvable
        order = new_order
        length += 1
    return length


# -- partition stabilizers ----------------------------------------------------


def _normalize_partition(partition, d):
    blocks = [tuple(sorted(b)) for b in partition]
    seen = sorted(x for b in blocks for x in b)
    if seen != list(range(d)):
        raise ValueError("not a partition of 0..d-1")
    return sorted(blocks)


def partition_stabilizer_intersection(partitions, degree) -> PermGroup:
    """The full subgroup of S_d preserving every partition (blocks map onto
    blocks), via backtracking over images with block-size pruning."""
    d = degree
    useful = []
    for part in partitions:
        blocks = _normalize_partition(part, d)
        if len(blocks) == 1 or len(blocks) == d:
            continue  # no constraint
        useful.append(blocks)
    if not useful:
        return symmetric_group(d)

    # per partition: block id and size of every point
    block_of = []
    size_of = []
    block_members = []
    for blocks in useful:
        bo = [0] * d
        for bi, b in enumerate(blocks):
            for x in b:
                bo[x] = bi
        block_of.append(bo)
        size_of.append([len(b) for b in blocks])
        block_members.append(blocks)

    elements = []
    images = [-1] * d
    used = [False] * d
    # per partition: tentative block->block image map and its taken targets
    maps = [dict() for _ in useful]
    taken = [set() for _ in useful]
    budget = [4_000_000]

    def backtrack(x):
        if x == d:
            elements.append(tuple(images))
            return
        budget[0] -= 1
        if budget[0] < 0:
            raise RuntimeError(
                "partition stabilizer search exceeded its node budget; "
                "the constrained group is too large to enumerate")
        for y in range(d):
            if used[y]:
                continue
            commits = []
            ok = True
            for pi, bo in enumerate(block_of):
                bx, by = bo[x], bo[y]
                cur = maps[pi].get(bx)
                if cur is None:
                    if size_of[pi][bx] != size_of[pi][by] or by in taken[pi]:
                        ok = False
                        break
                    maps[pi][bx] = by
                    taken[pi].add(by)
                    commits.append((pi, bx, by))
                elif cur != by:
                    ok = False
                    break
            if ok:
                images[x] = y
                used[y] = True
                backtrack(x + 1)
                used[y] = False
                images[x] = -1
            for pi, bx, by in commits:
                del maps[pi][bx]
                taken[pi].discard(by)

    backtrack(0)
    return PermGroup(d, [e for e in elements if e != identity(d)])

# -- structure labels ---------------------------------------------------------


def is_abelian(G: PermGroup) -> bool:
    gens = G.generators
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            if mult(a, b) != mult(b, a):
                return False
    return True


_ENUM_CAP = 200_000


def _invariants(G: PermGroup):
    """Isomorphism-invariant fingerprint for catalog matching.

    (order, abelian, derived length, element-order multiset, center order);
    the last two require enumerating the elements, so groups past the cap
    get no fingerprint and fall through to the generic label.
    """
    o = G.order()
    if o > _ENUM_CAP:
        return None
    elems = list(G.elements())
    orders = tuple(sorted(perm_order(e) for e in elems))
    gens = G.generators
    center = sum(1 for e in elems
                 if all(mult(e, g) == mult(g, e) for g in gens))
    return (o, is_abelian(G), derived_length(G), orders, center)


def _wreath_gens(bottom_gens, bottom_deg, copies, top_gens):
    """Generators of (bottom wr top) acting on copies * bottom_deg points."""
    d = copies * bottom_deg
    out = []
    for g in bottom_gens:  # bottom acting in the first copy
        img = list(range(d))
        for x in range(bottom_deg):
            img[x] = g[x]
        out.append(tuple(img))
    for t in top_gens:  # top permuting the copies
        img = [t[x // bottom_deg] * bottom_deg + (x % bottom_deg)
               for x in range(d)]
        out.append(tuple(img))
    return out


@lru_cache(maxsize=None)
def _label_catalog():
    v4 = [(1, 0, 3, 2), (2, 3, 0, 1)]
    d8 = [from_cycles(4, (0, 1, 2, 3)), from_cycles(4, (0, 2))]
    s4 = [from_cycles(4, (0, 1)), from_cycles(4, (0, 1, 2, 3))]
    z2 = [(1, 0)]
    swap2 = [(1, 0)]

    def shift(gens, k, d):
        return [tuple(list(range(k)) + [x + k for x in g]) + tuple(
            range(k + len(g), d)) for g in gens]

    defs = [
        ("1", PermGroup(1, ())),
        ("Z/2", PermGroup(2, z2)),
        ("Z/4", PermGroup(4, [from_cycles(4, (0, 1, 2, 3))])),
        ("V", PermGroup(4, v4)),
        ("S_3", symmetric_group(3)),
        ("D_8", PermGroup(4, d8)),
        ("Z/2 x Z/4", PermGroup(6, [from_cycles(6, (0, 1, 2, 3)),
                                    from_cycles(6, (4, 5))])),
        ("(Z/2)^3", PermGroup(8, [from_cycles(8, (0, 1), (2, 3), (4, 5), (6, 7)),
                                  from_cycles(8, (0, 2), (1, 3), (4, 6), (5, 7)),
                                  from_cycles(8, (0, 4), (1, 5), (2, 6), (3, 7))])),
        ("Z/2 x D_8", PermGroup(6, [from_cycles(6, (0, 1, 2, 3)),
                                    from_cycles(6, (0, 2)),
                                    from_cycles(6, (4, 5))])),
        ("S_4", PermGroup(4, s4)),
        ("Z/2 x S_4", PermGroup(6, [from_cycles(6, (0, 1)),
                                    from_cycles(6, (0, 1, 2, 3)),
                                    from_cycles(6, (4, 5))])),
        ("Z/2 wr V", PermGroup(8, _wreath_gens(z2, 2, 4, v4))),
        ("V wr Z/2", PermGroup(8, _wreath_gens(v4, 4, 2, swap2))),
        ("Z/2 wr D_8", PermGroup(8, _wreath_gens(z2, 2, 4, d8))),
        ("D_8 wr Z/2", PermGroup(8, _wreath_gens(d8, 4, 2, swap2))),
        ("S_4 wr Z/2", PermGroup(8, _wreath_gens(s4, 4, 2, swap2))),
    ]
    catalog = []
    for label, G in defs:
        catalog.append((label, _invariants(G)))
    return tuple(catalog)


def describe(G: PermGroup) -> str:
    """Human-readable structure label from cheap isomorphism invariants.

    Only the handful of types that occur in practice are named; everything
    else gets a generic order/transitivity/solvability tag.
    """
    o = G.order()
    if o == 1:
        return "1"
    d = G.degree
    if o == factorial(d) and is_transitive(G):
        return f"S_{d}"
    inv = _invariants(G)
    if inv is not None:
        matches = [label for label, ref in _label_catalog() if ref == inv]
        if len(matches) == 1:
            return matches[0]
    trans = "transitive" if is_transitive(G) else "intransitive"
    solv = "solvable" if is_solvable(G) else "nonsolvable"
    return f"order-{o} {trans} {solv}"
