"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately avoid the package's search engine and
canonical-form machinery: digraphs are generated by iterating all 3^m
edge states, transitivity is the naive triple loop, and isomorphism is
checked by trying every permutation.  Small n only.
"""

import itertools

from graphtop import Graph, amalgamate, complete_graph


def naive_transitive(arcs):
    arcs = set(arcs)
    for a, b in arcs:
        for c, d in arcs:
            if b == c and a != d and (a, d) not in arcs:
                return False
    return True


def brute_transitive_digraphs(g):
    """All transitive orientations-with-doubling of g, as arc frozensets."""
    edges = g.edges()
    found = []
    for states in itertools.product((1, 2, 3), repeat=len(edges)):
        arcs = set()
        for (u, v), s in zip(edges, states):
            if s & 1:
                arcs.add((u, v))
            if s & 2:
                arcs.add((v, u))
        if naive_transitive(arcs):
            found.append(frozenset(arcs))
    return found


def brute_digraph_isomorphic(n, arcs1, arcs2):
    arcs1, arcs2 = set(arcs1), set(arcs2)
    if len(arcs1) != len(arcs2):
        return False
    for perm in itertools.permutations(range(n)):
        if {(perm[u], perm[v]) for u, v in arcs1} == arcs2:
            return True
    return False


def brute_graph_isomorphic(g, h):
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    e2 = set(h.edges())
    for perm in itertools.permutations(range(g.n)):
        mapped = {tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()}
        if mapped == e2:
            return True
    return False


def brute_automorphisms(g):
    """Every adjacency-preserving permutation, found by trying all n!."""
    edges = set(g.edges())
    auts = []
    for perm in itertools.permutations(range(g.n)):
        mapped = {tuple(sorted((perm[u], perm[v]))) for u, v in edges}
        if mapped == edges:
            auts.append(perm)
    return auts


def relabel_graph(g, perm):
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def paw():
    return amalgamate(complete_graph(3), 0, complete_graph(2), 0)


def bowtie():
    return amalgamate(complete_graph(3), 0, complete_graph(3), 0)
