"""All isomorphism classes of n-vertex graphs and the counting sums.

Classes are generated by vertex extension: every n-vertex graph contains
an (n-1)-vertex induced subgraph, so attaching a new vertex with every
possible neighborhood to each (n-1)-class representative reaches every
class, and canonical codes deduplicate.  The labeled-count identity
sum over classes of n!/|Aut| = 2^C(n,2) is checked in the test suite and
guards the generation end to end.
"""

import time
from dataclasses import dataclass
from math import factorial
from multiprocessing import Pool

from . import formulas
from .enumeration import h_burnside, h_classes, tau
from .errors import InternalCheckError, SizeBoundExceeded
from .graphs import (
    Graph,
    automorphism_group,
    canonical_code,
    canonical_graph,
    components,
    induced_subgraph,
)

MAX_CLASS_VERTICES = 7


@dataclass
class ClassEntry:
    graph: Graph
    aut_order: int | None = None
    tau: int | None = None
    h: int | None = None


@dataclass
class IsoClassTable:
    n: int
    entries: list

    def __len__(self):
        return len(self.entries)


def graphs_up_to_iso(n, keep=None, max_vertices=MAX_CLASS_VERTICES):
    """One canonical representative per isomorphism class, sorted by code.

    With keep, generation is restricted to graphs satisfying it; the
    predicate must be hereditary (closed under deleting a vertex), e.g.
    bipartiteness, or classes will be missed.
    """
    if n > max_vertices:
        raise SizeBoundExceeded(
            f"class generation is capped at n={max_vertices}, got {n}"
        )
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n == 0:
        return IsoClassTable(0, [ClassEntry(Graph(0, ()))])
    reps = [Graph(1, (0,))]
    for k in range(2, n + 1):
        codes = set()
        for base in reps:
            for mask in range(1 << (k - 1)):
                adj = [row | ((mask >> u & 1) << (k - 1)) for u, row in enumerate(base.adj)]
                adj.append(mask)
                cand = Graph(k, adj)
                if keep is not None and not keep(cand):
                    continue
                codes.add(canonical_code(cand))
        reps = [canonical_graph(code) for code in sorted(codes)]
    return IsoClassTable(n, [ClassEntry(g) for g in reps])


def class_counts(g, budget_edges=None):
    """(aut_order, tau, h) for one class, with built-in cross-checks.

    h is computed both by orbit averaging and by canonical digraph codes;
    for disconnected graphs the multiplicative component rule is checked
    as well.  Any disagreement raises, never resolves silently.
    """
    aut_order = len(automorphism_group(g))
    t = tau(g, budget_edges)
    h_avg = h_burnside(g, budget_edges)
    h_codes = h_classes(g, budget_edges)
    if h_avg != h_codes:
        raise InternalCheckError(
            f"class counts disagree on {g!r}: burnside={h_avg} codes={h_codes}"
        )
    comps = components(g)
    if len(comps) > 1:
        grouped = {}
        for comp in comps:
            part = induced_subgraph(g, comp)
            grouped.setdefault(canonical_code(part), [part, 0])[1] += 1
        parts = [(part, mult) for part, mult in grouped.values()]
        by_parts = formulas.union_counts(parts, budget_edges)
        if (by_parts.tau, by_parts.h) != (t, h_avg):
            raise InternalCheckError(
                f"component rule disagrees on {g!r}: "
                f"parts=({by_parts.tau},{by_parts.h}) direct=({t},{h_avg})"
            )
    return aut_order, t, h_avg


def _class_task(args):
    n, adj, budget = args
    return class_counts(Graph(n, adj), budget)


def aggregate_counts(n, budget_edges=None, workers=1, timing=None):
    """(tau_n, h_n, table) summed over all isomorphism classes.

    tau_n weights each class by its number of labelings n!/|Aut|; h_n is
    the plain sum of class counts.  With timing, per-class wall times are
    appended to it as (index, seconds).
    """
    if n < 1:
        raise ValueError("aggregate_counts needs n >= 1")
    table = graphs_up_to_iso(n)
    if workers > 1:
        tasks = [(n, e.graph.adj, budget_edges) for e in table.entries]
        with Pool(workers) as pool:
            results = pool.map(_class_task, tasks)
        for entry, (aut_order, t, h) in zip(table.entries, results):
            entry.aut_order, entry.tau, entry.h = aut_order, t, h
    else:
        for idx, entry in enumerate(table.entries):
            t0 = time.perf_counter()
            entry.aut_order, entry.tau, entry.h = class_counts(
                entry.graph, budget_edges
            )
            if timing is not None:
                timing.append((idx, time.perf_counter() - t0))
    nfact = factorial(n)
    tau_n = sum(nfact // e.aut_order * e.tau for e in table.entries)
    h_n = sum(e.h for e in table.entries)
    return tau_n, h_n, table


def labeled_copies(n, aut_order):
    """Number of labeled graphs on n vertices in a class with that group."""
    return factorial(n) // aut_order
