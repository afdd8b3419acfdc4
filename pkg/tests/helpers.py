"""Shared test utilities: independent brute-force value computation and
exhaustive enumeration of small structures.

naive_dc deliberately re-implements the objective from scratch (permutations,
inline abs differences) so it can serve as an independent check on the
package's exact solver.
"""

import heapq
import itertools

from diffcolor import Tree


def naive_dc(t: Tree) -> int:
    """Best achievable minimum edge difference, by trying all n! labelings."""
    if not t.edges:
        return t.n
    best = 0
    for perm in itertools.permutations(range(1, t.n + 1)):
        worst = min(abs(perm[u] - perm[v]) for u, v in t.edges)
        if worst > best:
            best = worst
    return best


def pruefer_to_edges(seq, n):
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def canonical_code(n, edges):
    """Isomorphism-invariant encoding of a tree (rooted at its centers)."""
    if n == 1:
        return "()"
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        nxt = []
        for v in layer:
            deg[v] = 0
            for u in adj[v]:
                if deg[u] > 1:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        remaining -= len(layer)
        layer = nxt
    centers = [v for v in range(n) if deg[v] >= 1]

    def code(root, parent):
        return "(" + "".join(sorted(code(u, root) for u in adj[root] if u != parent)) + ")"

    return min(code(c, -1) for c in centers)


def all_trees(n):
    """All non-isomorphic connected trees on n vertices (one representative each)."""
    if n == 1:
        return [Tree(1, ())]
    if n == 2:
        return [Tree(2, ((0, 1),))]
    seen = {}
    for seq in itertools.product(range(n), repeat=n - 2):
        edges = pruefer_to_edges(seq, n)
        key = canonical_code(n, edges)
        if key not in seen:
            seen[key] = Tree(n, tuple(edges))
    return list(seen.values())


def partitions(total, max_part=None):
    """All multisets of positive integers summing to total (non-increasing)."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def length_multisets(values, max_paths, max_n):
    """Multisets over the given path lengths, up to max_paths paths, with
    total vertex count 1 + sum <= max_n."""
    for p in range(1, max_paths + 1):
        for combo in itertools.combinations_with_replacement(values, p):
            if 1 + sum(combo) <= max_n:
                yield combo


def path_graph(n):
    return Tree(n, tuple((i, i + 1) for i in range(n - 1)))
