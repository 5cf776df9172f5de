"""Finite topologies, preorders, and loop-free digraphs on 0..n-1.

The three views are interchangeable: a preorder's up-sets generate a
topology, every open set containing x also containing y recovers the
preorder, and dropping the diagonal from a preorder leaves a transitive
digraph.  Vertex subsets and relation rows are int bitmasks throughout.
"""

import itertools

from . import canon
from .errors import (
    GroundSetMismatch,
    InternalCheckError,
    NotAPreorder,
    NotATopology,
    NotTransitive,
    SizeBoundExceeded,
    VertexOutOfRange,
)
from .graphs import Graph, components

# Families of arbitrary subsets are only accepted up to this ground-set
# size; everything built from enumerated preorders stays far below it.
MAX_GROUND_SET = 12


def _mask_to_list(mask):
    return [b for b in range(mask.bit_length()) if mask >> b & 1]


def _iter_bits(mask):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class Preorder:
    """Reflexive transitive relation; rel[x] is the bitmask of R(x)."""

    __slots__ = ("n", "rel")

    def __init__(self, n, rel):
        rel = tuple(rel)
        if len(rel) != n:
            raise NotAPreorder("relation rows must equal ground-set size")
        full = (1 << n) - 1
        for x, row in enumerate(rel):
            if row & ~full:
                raise NotAPreorder(f"row {x} mentions a point >= {n}")
            if not row >> x & 1:
                raise NotAPreorder(f"not reflexive at {x}")
        for x in range(n):
            reach = 0
            for y in _iter_bits(rel[x]):
                reach |= rel[y]
            if reach & ~rel[x]:
                raise NotAPreorder(f"not transitive at {x}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rel", rel)

    def __setattr__(self, name, value):
        raise AttributeError("Preorder is immutable")

    @classmethod
    def from_pairs(cls, n, pairs):
        rel = [0] * n
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise VertexOutOfRange(f"pair ({x},{y}) outside 0..{n - 1}")
            rel[x] |= 1 << y
        return cls(n, rel)

    @classmethod
    def diagonal(cls, n):
        return cls(n, [1 << x for x in range(n)])

    @classmethod
    def full(cls, n):
        return cls(n, [(1 << n) - 1] * n)

    def up_set(self, x):
        """R(x) as a bitmask."""
        return self.rel[x]

    def pairs(self):
        return sorted((x, y) for x in range(self.n) for y in _mask_to_list(self.rel[x]))

    def __eq__(self, other):
        return (
            isinstance(other, Preorder) and self.n == other.n and self.rel == other.rel
        )

    def __hash__(self):
        return hash((self.n, self.rel))

    def __repr__(self):
        return f"Preorder({self.n}, pairs={self.pairs()})"


class Topology:
    """Family of open vertex subsets, each stored as a bitmask.

    Instances coming from the converters are valid by construction; use
    validate_topology as the entry point for arbitrary families.
    """

    __slots__ = ("n", "opens")

    def __init__(self, n, opens):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "opens", frozenset(opens))

    def __setattr__(self, name, value):
        raise AttributeError("Topology is immutable")

    @classmethod
    def from_sets(cls, n, sets):
        opens = set()
        for s in sets:
            mask = 0
            for x in s:
                if not (0 <= x < n):
                    raise VertexOutOfRange(f"point {x} outside 0..{n - 1}")
                mask |= 1 << x
            opens.add(mask)
        return cls(n, opens)

    @classmethod
    def discrete(cls, n):
        return cls(n, range(1 << n))

    @classmethod
    def indiscrete(cls, n):
        return cls(n, (0, (1 << n) - 1))

    def opens_as_lists(self):
        """Sorted list of sorted vertex lists (the JSON rendering)."""
        return sorted(_mask_to_list(m) for m in self.opens)

    def __eq__(self, other):
        return (
            isinstance(other, Topology)
            and self.n == other.n
            and self.opens == other.opens
        )

    def __hash__(self):
        return hash((self.n, self.opens))

    def __repr__(self):
        return f"Topology({self.n}, {self.opens_as_lists()})"


class Digraph:
    """Loop-free directed graph; out[u] is the bitmask of heads of u."""

    __slots__ = ("n", "out")

    def __init__(self, n, out):
        out = tuple(out)
        if len(out) != n:
            raise ValueError("out-neighbor rows must equal vertex count")
        full = (1 << n) - 1
        for u, row in enumerate(out):
            if row & ~full:
                raise VertexOutOfRange(f"vertex {u} has an arc head >= {n}")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "out", out)

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    @classmethod
    def from_arcs(cls, n, arcs):
        out = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"arc ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            out[u] |= 1 << v
        return cls(n, out)

    def arcs(self):
        return sorted((u, v) for u in range(self.n) for v in _mask_to_list(self.out[u]))

    @property
    def arc_count(self):
        return sum(bin(row).count("1") for row in self.out)

    def reverse(self):
        rev = [0] * self.n
        for u in range(self.n):
            for v in _iter_bits(self.out[u]):
                rev[v] |= 1 << u
        return Digraph(self.n, rev)

    def relabel(self, perm):
        new = [0] * self.n
        for u in range(self.n):
            acc = 0
            for v in _iter_bits(self.out[u]):
                acc |= 1 << perm[v]
            new[perm[u]] = acc
        return Digraph(self.n, new)

    def __eq__(self, other):
        return (
            isinstance(other, Digraph) and self.n == other.n and self.out == other.out
        )

    def __hash__(self):
        return hash((self.n, self.out))

    def __repr__(self):
        return f"Digraph({self.n}, arcs={self.arcs()})"


def transitive_masks(n, out):
    """True iff arcs a->b, b->c (a != c) always come with a->c."""
    for b in range(n):
        row = out[b]
        for a in range(n):
            if a != b and out[a] >> b & 1:
                if row & ~(1 << a) & ~out[a]:
                    return False
    return True


# ---------------------------------------------------------------------------
# conversions


def topology_from_preorder(r):
    """Open sets are exactly the up-closed subsets of the preorder."""
    if r.n > MAX_GROUND_SET:
        raise SizeBoundExceeded(f"n={r.n} exceeds the bound {MAX_GROUND_SET}")
    opens = []
    for mask in range(1 << r.n):
        ok = True
        for x in _iter_bits(mask):
            if r.rel[x] & ~mask:
                ok = False
                break
        if ok:
            opens.append(mask)
    return Topology(r.n, opens)


def preorder_from_topology(t):
    """(x, y) related iff every open set containing x also contains y."""
    _validate_masks(t.n, t.opens)
    full = (1 << t.n) - 1
    rel = []
    for x in range(t.n):
        acc = full
        for m in t.opens:
            if m >> x & 1:
                acc &= m
        rel.append(acc)
    return Preorder(t.n, rel)


def preorder_to_digraph(r):
    return Digraph(r.n, [r.rel[x] & ~(1 << x) for x in range(r.n)])


def digraph_to_preorder(d):
    if not transitive_masks(d.n, d.out):
        raise NotTransitive("digraph is not transitive")
    return Preorder(d.n, [d.out[x] | 1 << x for x in range(d.n)])


def underlying_graph(obj):
    """Simple graph with an edge wherever either arc direction exists."""
    if isinstance(obj, Topology):
        obj = preorder_to_digraph(preorder_from_topology(obj))
    elif isinstance(obj, Preorder):
        obj = preorder_to_digraph(obj)
    if not isinstance(obj, Digraph):
        raise TypeError(f"cannot take the underlying graph of {type(obj).__name__}")
    adj = list(obj.out)
    for u in range(obj.n):
        for v in _iter_bits(obj.out[u]):
            adj[v] |= 1 << u
    return Graph(obj.n, adj)


# ---------------------------------------------------------------------------
# validation and structure


def validate_topology(sets, n):
    """Check the axioms for an arbitrary family; returns the Topology.

    Raises NotATopology with a code (missing-empty, missing-full,
    not-closed-under-union, not-closed-under-intersection) and, for the
    closure failures, a witness pair of member sets.
    """
    if n > MAX_GROUND_SET:
        raise SizeBoundExceeded(f"n={n} exceeds the bound {MAX_GROUND_SET}")
    t = Topology.from_sets(n, sets)
    _validate_masks(n, t.opens)
    return t


def _validate_masks(n, opens):
    full = (1 << n) - 1
    if 0 not in opens:
        raise NotATopology("missing-empty")
    if full not in opens:
        raise NotATopology("missing-full")
    members = sorted(opens)
    for a, b in itertools.combinations(members, 2):
        if a | b not in opens:
            raise NotATopology(
                "not-closed-under-union", (_mask_to_list(a), _mask_to_list(b))
            )
        if a & b not in opens:
            raise NotATopology(
                "not-closed-under-intersection", (_mask_to_list(a), _mask_to_list(b))
            )


def minimal_basis(r):
    """The up-sets {R(x)}; every open set is a union of these."""
    return frozenset(r.rel)


def is_continuous(point_map, tx, ty):
    """Preimage-of-open test, cross-checked against relation preservation.

    The two routes must agree; a disagreement is an internal error, not
    a property of the input.
    """
    point_map = tuple(point_map)
    if len(point_map) != tx.n:
        raise GroundSetMismatch(f"map has {len(point_map)} points, space has {tx.n}")
    for y in point_map:
        if not (0 <= y < ty.n):
            raise GroundSetMismatch(f"image point {y} outside 0..{ty.n - 1}")

    by_preimage = True
    for m in ty.opens:
        pre = 0
        for x in range(tx.n):
            if m >> point_map[x] & 1:
                pre |= 1 << x
        if pre not in tx.opens:
            by_preimage = False
            break

    rx = preorder_from_topology(tx)
    ry = preorder_from_topology(ty)
    by_relation = True
    for x in range(tx.n):
        for y in _iter_bits(rx.rel[x]):
            if not ry.rel[point_map[x]] >> point_map[y] & 1:
                by_relation = False
                break
        if not by_relation:
            break

    if by_preimage != by_relation:
        raise InternalCheckError(
            f"continuity routes disagree: preimage={by_preimage} relation={by_relation}"
        )
    return by_preimage


def canonical_code_digraph(d):
    """Total order on digraphs; equal codes iff digraph-isomorphic."""
    return canon.digraph_code(d.n, d.out)


def are_homeomorphic(t1, t2):
    if t1.n != t2.n:
        return False
    d1 = preorder_to_digraph(preorder_from_topology(t1))
    d2 = preorder_to_digraph(preorder_from_topology(t2))
    return canonical_code_digraph(d1) == canonical_code_digraph(d2)


def component_count(t):
    """Number of components of the underlying graph (= of the space)."""
    return len(components(underlying_graph(t)))


def dual_topology(t):
    """The topology whose opens are exactly t's closed sets."""
    full = (1 << t.n) - 1
    return Topology(t.n, (full & ~m for m in t.opens))


def reverse_digraph(d):
    return d.reverse()


def all_preorders(n):
    """Every preorder on 0..n-1 by brute force (small n only)."""
    if n > 6:
        raise SizeBoundExceeded("brute-force preorder listing is capped at n=6")
    offdiag = [(x, y) for x in range(n) for y in range(n) if x != y]
    found = []
    for picks in itertools.product((0, 1), repeat=len(offdiag)):
        rel = [1 << x for x in range(n)]
        for bit, (x, y) in zip(picks, offdiag):
            if bit:
                rel[x] |= 1 << y
        try:
            found.append(Preorder(n, rel))
        except NotAPreorder:
            continue
    return found
