"""Independent brute-force oracles used to pin the solvers' expected values.

Everything here works straight from the definitions (subset enumeration,
exhaustive labelings, permutation search) and never calls the code paths it
is used to check.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations, permutations

from openpack.graph import Graph


def neighbors(g: Graph, v: int) -> set[int]:
    return {u for u in range(g.n) if g.adj[v] >> u & 1}


def brute_chromatic(g: Graph) -> int:
    nbrs = [neighbors(g, v) for v in range(g.n)]
    for k in range(1, g.n + 1):
        colors = [0] * g.n

        def assignable(i: int) -> bool:
            if i == g.n:
                return True
            for c in range(1, k + 1):
                if all(colors[u] != c for u in nbrs[i]):
                    colors[i] = c
                    if assignable(i + 1):
                        return True
                    colors[i] = 0
            return False

        if assignable(0):
            return k
    raise AssertionError("unreachable")


def brute_max_independent_set(g: Graph) -> int:
    best = 0
    for mask in range(1 << g.n):
        ok = True
        m = mask
        while m and ok:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            ok = not (g.adj[v] & mask)
        if ok:
            best = max(best, mask.bit_count())
    return best


def set_is_open_packing(g: Graph, members: tuple[int, ...]) -> bool:
    return all(
        not (g.adj[u] & g.adj[v]) for u, v in combinations(members, 2)
    )


def set_is_packing(g: Graph, members: tuple[int, ...]) -> bool:
    closed = {v: g.adj[v] | 1 << v for v in members}
    return all(
        not (closed[u] & closed[v]) for u, v in combinations(members, 2)
    )


def brute_open_packing_number(g: Graph) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        for members in combinations(range(g.n), size):
            if set_is_open_packing(g, members):
                return size
    return best


def brute_packing_number(g: Graph) -> int:
    for size in range(g.n, 0, -1):
        for members in combinations(range(g.n), size):
            if set_is_packing(g, members):
                return size
    return 0


def brute_open_packing_partition_number(g: Graph) -> int:
    """Smallest k admitting a labeling where no vertex has two same-labeled
    neighbors; exhaustive over labelings with pruning."""
    nbrs = [neighbors(g, v) for v in range(g.n)]
    for k in range(1, g.n + 1):
        labels = [0] * g.n

        def ok_prefix(i: int) -> bool:
            # only the constraint windows touching vertex i need rechecking
            for v in range(g.n):
                seen = set()
                for u in nbrs[v]:
                    if labels[u] == 0:
                        continue
                    if labels[u] in seen:
                        return False
                    seen.add(labels[u])
            return True

        def assign(i: int) -> bool:
            if i == g.n:
                return True
            for c in range(1, k + 1):
                labels[i] = c
                if ok_prefix(i) and assign(i + 1):
                    return True
            labels[i] = 0
            return False

        if assign(0):
            return k
    raise AssertionError("unreachable")


def brute_two_distance_chromatic(g: Graph) -> int:
    """Smallest k so that vertices at distance <= 2 get distinct labels."""
    dist = [bfs_distances(g, v) for v in range(g.n)]
    conflict = [
        {u for u in range(g.n) if u != v and 0 <= dist[v][u] <= 2}
        for v in range(g.n)
    ]
    for k in range(1, g.n + 1):
        labels = [0] * g.n

        def assign(i: int) -> bool:
            if i == g.n:
                return True
            for c in range(1, k + 1):
                if all(labels[u] != c for u in conflict[i]):
                    labels[i] = c
                    if assign(i + 1):
                        return True
                    labels[i] = 0
            return False

        if assign(0):
            return k
    raise AssertionError("unreachable")


def brute_domination(g: Graph) -> int:
    closed = [g.adj[v] | 1 << v for v in range(g.n)]
    for size in range(0, g.n + 1):
        for members in combinations(range(g.n), size):
            mask = sum(1 << v for v in members)
            if all(closed[v] & mask for v in range(g.n)):
                return size
    raise AssertionError("unreachable")


def brute_total_domination(g: Graph) -> int | None:
    if any(mask == 0 for mask in g.adj):
        return None
    for size in range(1, g.n + 1):
        for members in combinations(range(g.n), size):
            mask = sum(1 << v for v in members)
            if all(g.adj[v] & mask for v in range(g.n)):
                return size
    raise AssertionError("unreachable")


def brute_clique_number(g: Graph) -> int:
    for size in range(g.n, 1, -1):
        for members in combinations(range(g.n), size):
            if all(g.adj[u] >> v & 1 for u, v in combinations(members, 2)):
                return size
    return 1


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in neighbors(g, v):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def brute_has_even_cycle(g: Graph) -> bool:
    """Enumerate all simple cycles by DFS from each smallest vertex."""
    nbrs = [sorted(neighbors(g, v)) for v in range(g.n)]
    found = False

    def walk(start: int, v: int, visited: set[int], length: int) -> None:
        nonlocal found
        if found:
            return
        for u in nbrs[v]:
            if u == start and length >= 3:
                if length % 2 == 0:
                    found = True
                    return
            elif u > start and u not in visited:
                visited.add(u)
                walk(start, u, visited, length + 1)
                visited.remove(u)

    for s in range(g.n):
        walk(s, s, {s}, 1)
        if found:
            return True
    return False


def brute_is_chordal(g: Graph) -> bool:
    """No vertex subset induces a cycle of length >= 4."""
    for size in range(4, g.n + 1):
        for members in combinations(range(g.n), size):
            inside = sum(1 << v for v in members)
            degs = [(g.adj[v] & inside).bit_count() for v in members]
            if any(d != 2 for d in degs):
                continue
            # 2-regular induced subgraph; connected means a single cycle
            seen = {members[0]}
            stack = [members[0]]
            while stack:
                v = stack.pop()
                for u in neighbors(g, v):
                    if inside >> u & 1 and u not in seen:
                        seen.add(u)
                        stack.append(u)
            if len(seen) == size:
                return False
    return True


def permutation_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    g_edges = {frozenset(e) for e in g.edges()}
    h_edges = {frozenset(e) for e in h.edges()}
    if len(g_edges) != len(h_edges):
        return False
    for perm in permutations(range(g.n)):
        if all(frozenset((perm[u], perm[v])) in h_edges for u, v in g_edges):
            return True
    return False
