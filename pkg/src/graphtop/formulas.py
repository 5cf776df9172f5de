"""Closed-form counting rules, each guarded by its exact hypotheses.

Every rule returns a FormulaResult; a count of None means the rule's
hypotheses do not cover the input (not-applicable), which is distinct
from a genuine count of zero.  All arithmetic is exact.
"""

from dataclasses import dataclass
from math import comb

from .enumeration import counts_for, h_sink, tau_sink
from .errors import NotConnected
from .graphs import (
    canonical_code,
    complete_graph,
    components,
    cycle_graph,
    has_triangle,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_cut_vertex,
    is_reflexible,
    rooted_code,
    wheel_graph,
)


@dataclass(frozen=True)
class FormulaResult:
    """Counts from one closed form; None marks not-applicable."""

    tau: int | None
    h: int | None
    theorem: str

    def as_json_dict(self):
        def show(x):
            return "not-applicable" if x is None else x

        return {"tau": show(self.tau), "h": show(self.h), "theorem": self.theorem}


def stirling2(n, k):
    """Partitions of an n-set into exactly k nonempty blocks, exactly.

    Python integers do not wrap, so the arithmetic cannot overflow; the
    n <= 64 cap just keeps inputs at the intended scale.
    """
    if not (0 <= k <= n <= 64):
        raise ValueError(f"stirling2 needs 0 <= k <= n <= 64, got ({n},{k})")
    row = [1] + [0] * k  # S(0, 0..k)
    for _ in range(n):
        new = [0] * (k + 1)
        for j in range(1, k + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[k]


def complete_counts(n):
    """Counts over the complete graph: ordered set partitions, compositions."""
    if not (1 <= n <= 20):
        raise ValueError(f"complete_counts needs 1 <= n <= 20, got {n}")
    fact = 1
    total = 0
    for k in range(1, n + 1):
        fact *= k
        total += stirling2(n, k) * fact
    return FormulaResult(total, 2 ** (n - 1), "complete")


def cycle_counts(n):
    if n < 3:
        raise ValueError(f"cycle_counts needs n >= 3, got {n}")
    if n == 3:
        return FormulaResult(13, 4, "cycle")
    if n % 2:
        return FormulaResult(0, 0, "cycle")
    return FormulaResult(2, 1, "cycle")


def wheel_counts(n):
    """Counts for the wheel on n vertices (hub joined to an (n-1)-cycle).

    Caution on n=5: tables in circulation give (8, 4) there, but direct
    enumeration over all 3^8 edge orientations, Burnside averaging over
    the dihedral symmetries, and a sweep of all 6942 preorders on five
    points agree on (6, 3); the verified values are returned.
    """
    if n < 4:
        raise ValueError(f"wheel_counts needs n >= 4, got {n}")
    if n == 4:
        return FormulaResult(75, 8, "wheel")
    if n == 5:
        return FormulaResult(6, 3, "wheel")
    if n % 2 == 0:
        return FormulaResult(0, 0, "wheel")
    return FormulaResult(4, 2, "wheel")


def bipartite_counts(g):
    """Counts for connected triangle-free graphs.

    Inputs containing a triangle are outside the rule's scope and get
    not-applicable.
    """
    if g.n < 2:
        raise ValueError("bipartite_counts needs at least 2 vertices")
    if not is_connected(g):
        raise NotConnected("bipartite_counts needs a connected graph")
    if has_triangle(g):
        return FormulaResult(None, None, "bipartite")
    if not is_bipartite(g):
        return FormulaResult(0, 0, "bipartite")
    if g.n == 2:
        return FormulaResult(3, 2, "bipartite")
    return FormulaResult(2, 1 if is_reflexible(g) else 2, "bipartite")


def union_counts(parts, budget_edges=None, cache=None):
    """Counts for a disjoint union of connected parts with multiplicities.

    parts is a list of (graph, multiplicity) with pairwise non-isomorphic
    connected graphs.  Per-part counts come from the enumeration engine's
    shared memo.
    """
    if not parts:
        raise ValueError("union_counts needs at least one part")
    codes = set()
    for g, mult in parts:
        if mult < 1:
            raise ValueError("part multiplicity must be >= 1")
        if not is_connected(g):
            raise NotConnected("union parts must be connected")
        code = canonical_code(g)
        if code in codes:
            raise ValueError("union parts must be pairwise non-isomorphic")
        codes.add(code)
    tau_total = 1
    h_total = 1
    for g, mult in parts:
        t, h = counts_for(g, budget_edges, cache)
        tau_total *= t**mult
        h_total *= comb(h + mult - 1, mult)
    return FormulaResult(tau_total, h_total, "disjoint-union")


def product_counts(g, h):
    """Counts for a box product of nontrivial connected factors.

    Zero as soon as one factor is non-bipartite; otherwise two digraphs,
    one class when either factor is reflexible.  Disconnected bipartite
    factors fall outside the rule (the bipartite case relies on the
    product being connected) and get not-applicable.
    """
    if g.n < 2 or h.n < 2:
        raise ValueError("product factors must be nontrivial (>= 2 vertices)")
    if not (is_bipartite(g) and is_bipartite(h)):
        return FormulaResult(0, 0, "cartesian-product")
    if not (is_connected(g) and is_connected(h)):
        return FormulaResult(None, None, "cartesian-product")
    one_class = is_reflexible(g) or is_reflexible(h)
    return FormulaResult(2, 1 if one_class else 2, "cartesian-product")


def amalgam_counts(g, u, h, v, budget_edges=None):
    """Counts for the graph glued from g and h at u = v.

    The class count additionally needs both parts cut-vertex-free; when a
    part has a cut vertex the h field is not-applicable.
    """
    if not is_connected(g) or not is_connected(h):
        raise NotConnected("amalgam parts must be connected")
    t = 2 * tau_sink(g, u, budget_edges) * tau_sink(h, v, budget_edges)
    if any(is_cut_vertex(g, w) for w in range(g.n)) or any(
        is_cut_vertex(h, w) for w in range(h.n)
    ):
        return FormulaResult(t, None, "amalgamation")
    hs_g = h_sink(g, u, budget_edges)
    if rooted_code(g, u) == rooted_code(h, v):
        hh = (hs_g + 1) * hs_g
    else:
        hh = 2 * hs_g * h_sink(h, v, budget_edges)
    return FormulaResult(t, hh, "amalgamation")


def formula_for_graph(g, budget_edges=None, cache=None):
    """The first closed form whose hypotheses cover g, or None.

    Tried in order: disjoint-union decomposition for disconnected
    graphs, then complete/cycle/wheel recognition, then the connected
    triangle-free rule.  Used by the CLI to cross-check enumeration.
    """
    if g.n == 0:
        return None
    if not is_connected(g):
        grouped = {}
        for comp in components(g):
            part = induced_subgraph(g, comp)
            grouped.setdefault(canonical_code(part), [part, 0])[1] += 1
        return union_counts(
            [(part, mult) for part, mult in grouped.values()], budget_edges, cache
        )
    code = canonical_code(g)
    if g.n <= 20 and code == canonical_code(complete_graph(g.n)):
        return complete_counts(g.n)
    if g.n >= 3 and code == canonical_code(cycle_graph(g.n)):
        return cycle_counts(g.n)
    if g.n >= 4 and code == canonical_code(wheel_graph(g.n)):
        return wheel_counts(g.n)
    if g.n >= 2 and not has_triangle(g):
        return bipartite_counts(g)
    return None


def cut_vertex_counts(g, v, budget_edges=None):
    """Counts for a graph split by a cut vertex.

    The class count holds only when v is the unique cut vertex; otherwise
    the h field is not-applicable.
    """
    if not is_cut_vertex(g, v):
        raise ValueError(f"vertex {v} is not a cut vertex")
    t = 2 * tau_sink(g, v, budget_edges)
    unique = all(w == v or not is_cut_vertex(g, w) for w in range(g.n))
    hh = 2 * h_sink(g, v, budget_edges) if unique else None
    return FormulaResult(t, hh, "cut-vertex")
