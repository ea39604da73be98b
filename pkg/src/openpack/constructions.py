"""Constructive optimal tree partitions and the extremal families.

Family constructors follow the 1-indexed naming v1..vn of the underlying
constructions by mapping vi to index i - 1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import (
    Graph,
    GraphError,
    complete,
    cycle,
    from_edge_list,
    iter_bits,
    max_degree,
)
from .products import cartesian
from .solvers import VertexLabeling


def tree_opp(t: Graph) -> VertexLabeling:
    """Open packing partition of a tree into exactly max_degree(t) classes.

    Root at a maximum-degree vertex r and label it 1; r's children take the
    labels 1..Delta, one each.  Below that, the children of v take ascending
    labels distinct from the label of v's parent, so no vertex ever sees the
    same label twice in its neighborhood.  Linear time.
    """
    if t.n < 2:
        raise GraphError("tree labeling needs at least two vertices")
    if t.m != t.n - 1:
        raise GraphError("input is not a tree")
    delta = max_degree(t)
    root = min(v for v in range(t.n) if t.degree(v) == delta)
    labels = [0] * t.n
    labels[root] = 1
    parent = [-1] * t.n
    parent[root] = root
    adj = t.adj
    queue: deque[int] = deque()
    for c, u in enumerate(iter_bits(adj[root]), start=1):
        labels[u] = c
        parent[u] = root
        queue.append(u)
    while queue:
        v = queue.popleft()
        p = parent[v]
        banned = labels[p]
        c = 1
        mask = adj[v] & ~(1 << p)
        while mask:
            low = mask & -mask
            mask ^= low
            u = low.bit_length() - 1
            if parent[u] >= 0:
                raise GraphError("input is not a tree")
            if c == banned:
                c += 1
            labels[u] = c
            parent[u] = v
            queue.append(u)
            c += 1
    # with m = n - 1, full BFS coverage is exactly connectedness
    if any(p < 0 for p in parent):
        raise GraphError("input is not a tree")
    return VertexLabeling(tuple(labels), delta)


@dataclass(frozen=True)
class PsiSpec:
    """Parameters of the matching-regular family: r parts of even size s."""

    r: int
    s: int

    def __post_init__(self):
        if self.r < 2:
            raise GraphError("need at least two parts")
        if self.s < 2 or self.s % 2:
            raise GraphError("part size must be even and at least two")

    @property
    def n(self) -> int:
        return self.r * self.s


def psi_graph(spec: PsiSpec) -> Graph:
    """Identity matchings between every two parts plus an internal perfect
    matching per part; the result is r-regular and the parts are
    simultaneously open packings and total dominating sets.

    Part i occupies indices [i*s, (i+1)*s); the cross matchings join equal
    offsets, the internal matching pairs consecutive offsets (2t, 2t+1).
    """
    r, s = spec.r, spec.s
    edges = []
    for i in range(r):
        for j in range(i + 1, r):
            for k in range(s):
                edges.append((i * s + k, j * s + k))
    for i in range(r):
        for k in range(0, s, 2):
            edges.append((i * s + k, i * s + k + 1))
    return from_edge_list(spec.n, edges)


def ng_extremal(k: int) -> Graph:
    """2k vertices with every even index joined to every odd index (a K_{k,k}
    drawing whose complement is two disjoint K_k); the consecutive pairs
    {2i, 2i+1} form an optimal open packing partition."""
    if k < 3:
        raise GraphError("family starts at k=3")
    n = 2 * k
    evens = sum(1 << v for v in range(0, n, 2))
    odds = sum(1 << v for v in range(1, n, 2))
    return Graph(n, [odds if v % 2 == 0 else evens for v in range(n)])


def cart_sharp_instance(m: int, n: int) -> Graph:
    """cycle(4m) x complete(n) in the Cartesian sense; the instance family on
    which the Cartesian upper bound is tight."""
    if m < 1:
        raise GraphError("need m >= 1")
    if n < 3:
        raise GraphError("need n >= 3")
    g, _ = cartesian(cycle(4 * m), complete(n))
    return g
