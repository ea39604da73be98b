"""The four standard graph products and the corona.

Product vertices are laid out row-major with the first factor major:
``(gi, hi)`` sits at index ``gi * |V(H)| + hi``, so certificates computed on a
product can be mapped back to factor coordinates.  The corona places the base
graph on indices ``0..|V(G)|-1`` followed by one contiguous copy of H per base
vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, iter_bits

PRODUCT_MAX_VERTICES = 4096


@dataclass(frozen=True)
class ProductVertexMap:
    """Bijection between product indices and (g-index, h-index) pairs."""

    g_size: int
    h_size: int

    def index(self, gi: int, hi: int) -> int:
        return gi * self.h_size + hi

    def pair(self, idx: int) -> tuple[int, int]:
        return divmod(idx, self.h_size)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(divmod(i, self.h_size) for i in range(self.g_size * self.h_size))

    def to_json_obj(self) -> dict:
        return {"kind": "product", "g_size": self.g_size, "h_size": self.h_size,
                "pairs": [list(p) for p in self.pairs]}


@dataclass(frozen=True)
class CoronaLayout:
    """Index layout of a corona: base vertex i at index i, its copy of H at
    ``copy_range(i)``."""

    g_size: int
    h_size: int

    def copy_range(self, i: int) -> tuple[int, int]:
        start = self.g_size + i * self.h_size
        return start, start + self.h_size

    def to_json_obj(self) -> dict:
        return {"kind": "corona", "g_size": self.g_size, "h_size": self.h_size,
                "copy_ranges": [list(self.copy_range(i)) for i in range(self.g_size)]}


def _check_size(total: int) -> None:
    if total > PRODUCT_MAX_VERTICES:
        raise GraphError(f"product would have {total} vertices, cap is {PRODUCT_MAX_VERTICES}")


def cartesian(g: Graph, h: Graph) -> tuple[Graph, ProductVertexMap]:
    """Adjacent iff adjacent in one coordinate and equal in the other."""
    _check_size(g.n * h.n)
    adj = [0] * (g.n * h.n)
    for a in range(g.n):
        base = a * h.n
        for b in range(h.n):
            row = h.adj[b] << base
            for u in iter_bits(g.adj[a]):
                row |= 1 << (u * h.n + b)
            adj[base + b] = row
    return Graph(g.n * h.n, adj), ProductVertexMap(g.n, h.n)


def direct(g: Graph, h: Graph) -> tuple[Graph, ProductVertexMap]:
    """Adjacent iff adjacent in both coordinates."""
    _check_size(g.n * h.n)
    adj = [0] * (g.n * h.n)
    for a in range(g.n):
        base = a * h.n
        for b in range(h.n):
            row = 0
            for u in iter_bits(g.adj[a]):
                row |= h.adj[b] << (u * h.n)
            adj[base + b] = row
    return Graph(g.n * h.n, adj), ProductVertexMap(g.n, h.n)


def strong(g: Graph, h: Graph) -> tuple[Graph, ProductVertexMap]:
    """Edge set is the union of the Cartesian and direct edge sets."""
    cart, vmap = cartesian(g, h)
    dirp, _ = direct(g, h)
    adj = [cart.adj[i] | dirp.adj[i] for i in range(cart.n)]
    return Graph(cart.n, adj), vmap


def lexicographic(g: Graph, h: Graph) -> tuple[Graph, ProductVertexMap]:
    """(a,b) ~ (u,v) iff au is an edge of g, or a = u and bv is an edge of h."""
    _check_size(g.n * h.n)
    h_full = (1 << h.n) - 1
    adj = [0] * (g.n * h.n)
    for a in range(g.n):
        base = a * h.n
        blocks = 0
        for u in iter_bits(g.adj[a]):
            blocks |= h_full << (u * h.n)
        for b in range(h.n):
            adj[base + b] = blocks | (h.adj[b] << base)
    return Graph(g.n * h.n, adj), ProductVertexMap(g.n, h.n)


def corona(g: Graph, h: Graph) -> tuple[Graph, CoronaLayout]:
    """g plus one copy of h per base vertex, that vertex joined to its whole copy."""
    total = g.n * (1 + h.n)
    _check_size(total)
    adj = [0] * total
    for v in range(g.n):
        adj[v] = g.adj[v]
    h_full = (1 << h.n) - 1
    for i in range(g.n):
        start = g.n + i * h.n
        adj[i] |= h_full << start
        for b in range(h.n):
            adj[start + b] = (h.adj[b] << start) | (1 << i)
    return Graph(total, adj), CoronaLayout(g.n, h.n)


def isolated_vertex_count(h: Graph) -> int:
    return sum(1 for mask in h.adj if mask == 0)
