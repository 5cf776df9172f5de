"""Canonical forms and automorphism groups over adjacency bitmasks.

Everything here works on raw per-vertex neighbor masks so the same
machinery serves simple graphs (symmetric masks) and digraphs (out
masks).  Codes are produced by iterated color refinement plus vertex
individualization: refinement partitions the vertices into cells that
any isomorphism must respect, and the code is the lexicographically
least adjacency encoding over all cell-respecting vertex orders.  When
refinement gets stuck, one vertex of the first non-singleton cell is
split off (every choice is tried), which keeps the number of explored
orders tiny for the sizes this package handles.
"""

from .errors import SizeBoundExceeded

MAX_VERTICES = 16


def _check_size(n):
    if n > MAX_VERTICES:
        raise SizeBoundExceeded(f"n={n} exceeds the supported bound {MAX_VERTICES}")


def _bits(mask):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _refine(n, out, inn, colors):
    """Refine colors until stable; ids are ranks of sorted signatures."""
    ncolors = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            out_sig = sorted(colors[w] for w in _bits(out[v]))
            if inn is None:
                sigs.append((colors[v], tuple(out_sig)))
            else:
                in_sig = sorted(colors[w] for w in _bits(inn[v]))
                sigs.append((colors[v], tuple(out_sig), tuple(in_sig)))
        rank = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        colors = [rank[sigs[v]] for v in range(n)]
        if len(rank) == ncolors:
            return colors
        ncolors = len(rank)


def _cells(n, colors):
    """Vertex cells grouped by color, ordered by color id."""
    by_color = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)
    return [by_color[c] for c in sorted(by_color)]


def _homogeneous(cells, out):
    """True when every within-cell order yields the same adjacency bits."""
    masks = [sum(1 << v for v in cell) for cell in cells]
    for i, cell in enumerate(cells):
        u = cell[0]
        for j, other in enumerate(cells):
            want = len(other) - 1 if i == j else len(other)
            cnt = bin(out[u] & masks[j]).count("1")
            if cnt != 0 and cnt != want:
                return False
    return True


def _encode_undirected(n, adj, order):
    code = 0
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            code = code << 1 | (row >> order[j] & 1)
    return code


def _encode_directed(n, out, order):
    code = 0
    for i in range(n):
        row = out[order[i]]
        for j in range(n):
            if j != i:
                code = code << 1 | (row >> order[j] & 1)
    return code


def _canonical_bits(n, out, inn, colors, encode):
    best = None

    def recurse(colors):
        nonlocal best
        colors = _refine(n, out, inn, colors)
        cells = _cells(n, colors)
        if all(len(c) == 1 for c in cells) or _homogeneous(cells, out):
            order = [v for cell in cells for v in cell]
            cand = encode(n, out, order)
            if best is None or cand < best:
                best = cand
            return
        target = next(c for c in cells if len(c) > 1)
        for v in target:
            split = [2 * c for c in colors]
            for w in target:
                if w != v:
                    split[w] += 1
            recurse(split)

    recurse(colors)
    return best


def _seed(n, seed_colors):
    if seed_colors is None:
        return [0] * n
    rank = {c: i for i, c in enumerate(sorted(set(seed_colors)))}
    return [rank[c] for c in seed_colors]


def graph_code(n, adj, seed_colors=None):
    """Canonical code (n, bits) of a simple graph; equal iff isomorphic.

    With seed_colors, isomorphisms are restricted to color-preserving
    ones, which gives rooted/colored canonical forms.
    """
    _check_size(n)
    bits = _canonical_bits(n, adj, None, _seed(n, seed_colors), _encode_undirected)
    return (n, bits if bits is not None else 0)


def digraph_code(n, out, seed_colors=None):
    """Canonical code (n, bits) of a loop-free digraph."""
    _check_size(n)
    inn = [0] * n
    for u in range(n):
        for v in _bits(out[u]):
            inn[v] |= 1 << u
    bits = _canonical_bits(n, out, inn, _seed(n, seed_colors), _encode_directed)
    return (n, bits if bits is not None else 0)


def decode_graph_code(code):
    """Adjacency masks of the canonical representative behind a graph code."""
    n, bits = code
    length = n * (n - 1) // 2
    adj = [0] * n
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            if bits >> (length - 1 - idx) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    return n, tuple(adj)


def automorphisms(n, adj):
    """All adjacency-preserving permutations of 0..n-1, sorted.

    Vertices are matched within refinement cells only, most-constrained
    cells first, with incremental adjacency checks pruning the search.
    """
    _check_size(n)
    if n == 0:
        return [()]
    colors = _refine(n, adj, None, [0] * n)
    cells = _cells(n, colors)
    cell_size = {}
    for cell in cells:
        for v in cell:
            cell_size[v] = len(cell)
    order = sorted(range(n), key=lambda v: (cell_size[v], colors[v], v))

    image = [-1] * n
    used = [False] * n
    placed = []
    found = []

    def place(k):
        if k == n:
            found.append(tuple(image))
            return
        v = order[k]
        for w in range(n):
            if used[w] or colors[w] != colors[v]:
                continue
            ok = True
            for u in placed:
                if (adj[v] >> u & 1) != (adj[w] >> image[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used[w] = True
            placed.append(v)
            place(k + 1)
            placed.pop()
            used[w] = False
            image[v] = -1

    place(0)
    found.sort()
    return found
