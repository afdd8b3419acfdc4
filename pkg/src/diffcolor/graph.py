"""Graph container, graph-file I/O, tree-class recognition, and generators.

Vertices are integers 0..n-1 internally; graph files are 1-based.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass


class GraphParseError(ValueError):
    """Malformed graph file; carries the offending 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class NotATreeError(ValueError):
    pass


@dataclass(frozen=True)
class Tree:
    """A simple undirected graph.

    Despite the name, arbitrary simple graphs are representable; operations
    that need a connected tree (or forest) check and raise explicitly.
    Edges are normalized to (min, max) at construction.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count must be positive")
        seen: set[tuple[int, int]] = set()
        norm = []
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge ({e[0]}, {e[1]})")
            seen.add(e)
            norm.append(e)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def component_count(self) -> int:
        adj = self.adjacency()
        seen = [False] * self.n
        count = 0
        for root in range(self.n):
            if seen[root]:
                continue
            count += 1
            seen[root] = True
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for u in adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        queue.append(u)
        return count

    def is_connected(self) -> bool:
        return self.component_count() == 1

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and self.is_connected()

    def is_forest(self) -> bool:
        return self.m == self.n - self.component_count()


def parse_graph(text: str) -> Tree:
    """Parse the graph file format: comments "c ...", one header "p <n> <m>",
    then m edge lines "e <u> <v>" with 1-based endpoints.

    Raises GraphParseError (with line number) on any format violation.
    """
    n = None
    m = None
    header_line = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, line in enumerate(text.splitlines(), start=1):
        if line == "c" or line.startswith("c "):
            continue
        fields = line.split(" ")
        if fields[0] == "p":
            if n is not None:
                raise GraphParseError(line_no, "duplicate header")
            if len(fields) != 3 or not all(f.isdigit() for f in fields[1:]):
                raise GraphParseError(line_no, f"malformed header {line!r}")
            n, m = int(fields[1]), int(fields[2])
            header_line = line_no
            if n < 1:
                raise GraphParseError(line_no, "vertex count must be positive")
        elif fields[0] == "e":
            if n is None:
                raise GraphParseError(line_no, "edge line before header")
            if len(fields) != 3 or not all(f.isdigit() for f in fields[1:]):
                raise GraphParseError(line_no, f"malformed edge line {line!r}")
            u, v = int(fields[1]), int(fields[2])
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(line_no, f"endpoint out of range 1..{n}: {line!r}")
            if u == v:
                raise GraphParseError(line_no, f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphParseError(line_no, f"duplicate edge ({key[0]}, {key[1]})")
            if len(edges) == m:
                raise GraphParseError(line_no, f"more than the declared {m} edges")
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise GraphParseError(line_no, f"malformed line {line!r}")
    if n is None:
        raise GraphParseError(1, "missing header")
    if len(edges) != m:
        raise GraphParseError(header_line, f"header declares {m} edges, found {len(edges)}")
    return Tree(n, tuple(edges))


def write_graph(t: Tree) -> str:
    """Serialize to the graph file format (1-based, newline-terminated)."""
    lines = [f"p {t.n} {t.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in t.edges)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CaterpillarShape:
    """A caterpillar: spine vertices in path order, each with its legs.

    Canonical form: when the spine has length >= 2, both spine endpoints carry
    at least one leg (a legless endpoint would itself be a leaf).
    """

    leg_counts: tuple[int, ...]
    spine_vertices: tuple[int, ...]
    leg_vertices: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        s = len(self.leg_counts)
        if s == 0:
            raise ValueError("caterpillar needs at least one spine vertex")
        if len(self.spine_vertices) != s or len(self.leg_vertices) != s:
            raise ValueError("spine and leg sequences must have equal length")
        for count, legs in zip(self.leg_counts, self.leg_vertices):
            if count < 0 or count != len(legs):
                raise ValueError("leg counts must match leg vertex lists")
        if s >= 2 and (self.leg_counts[0] < 1 or self.leg_counts[-1] < 1):
            raise ValueError("spine endpoints must have at least one leg")
        ids = list(self.spine_vertices)
        for legs in self.leg_vertices:
            ids.extend(legs)
        if sorted(ids) != list(range(self.n)):
            raise ValueError("shape vertices must be exactly 0..n-1")

    @property
    def s(self) -> int:
        return len(self.leg_counts)

    @property
    def n(self) -> int:
        return self.s + sum(self.leg_counts)

    @property
    def delta(self) -> int:
        return max(self.leg_counts)

    @property
    def is_regular(self) -> bool:
        return len(set(self.leg_counts)) == 1

    def to_tree(self) -> Tree:
        edges = []
        for i in range(self.s - 1):
            edges.append((self.spine_vertices[i], self.spine_vertices[i + 1]))
        for v, legs in zip(self.spine_vertices, self.leg_vertices):
            edges.extend((v, leg) for leg in legs)
        return Tree(self.n, tuple(edges))


@dataclass(frozen=True)
class SpiderShape:
    """A spider: a center vertex joined to vertex-disjoint paths.

    path_vertices[i] lists path i's vertices at levels 1..path_lengths[i],
    level = distance from the center.
    """

    path_lengths: tuple[int, ...]
    center: int
    path_vertices: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.path_lengths) == 0:
            raise ValueError("spider needs at least one path")
        if len(self.path_vertices) != len(self.path_lengths):
            raise ValueError("path length and vertex sequences must match")
        for length, verts in zip(self.path_lengths, self.path_vertices):
            if length < 1 or length != len(verts):
                raise ValueError("path lengths must be positive and match vertex lists")
        ids = [self.center]
        for verts in self.path_vertices:
            ids.extend(verts)
        if sorted(ids) != list(range(self.n)):
            raise ValueError("shape vertices must be exactly 0..n-1")

    @property
    def p(self) -> int:
        return len(self.path_lengths)

    @property
    def n(self) -> int:
        return 1 + sum(self.path_lengths)

    def level_count(self, level: int) -> int:
        """Number of vertices at the given level (paths long enough to reach it)."""
        return sum(1 for length in self.path_lengths if length >= level)

    @property
    def max_level(self) -> int:
        return max(self.path_lengths)

    @property
    def n_even(self) -> int:
        return sum(self.level_count(l) for l in range(2, self.max_level + 1, 2))

    @property
    def n_odd(self) -> int:
        return sum(self.level_count(l) for l in range(1, self.max_level + 1, 2))

    def to_tree(self) -> Tree:
        edges = []
        for verts in self.path_vertices:
            prev = self.center
            for v in verts:
                edges.append((prev, v))
                prev = v
        return Tree(self.n, tuple(edges))


def _require_connected_tree(t: Tree) -> None:
    if not t.is_tree():
        raise NotATreeError("input is not a connected tree")


def recognize_caterpillar(t: Tree) -> CaterpillarShape | None:
    """Return the caterpillar shape of t, or None if removing all leaves does
    not leave a path.

    The spine is oriented so the endpoint with the smaller vertex id comes
    first. Degenerate cases: n=1 -> one spine vertex with no legs; n=2 -> the
    smaller id is the spine vertex, the other its leg.
    """
    _require_connected_tree(t)
    if t.n == 1:
        return CaterpillarShape((0,), (0,), ((),))
    if t.n == 2:
        return CaterpillarShape((1,), (0,), ((1,),))
    adj = t.adjacency()
    deg = [len(a) for a in adj]
    spine_set = {v for v in range(t.n) if deg[v] >= 2}
    inner_deg = {v: sum(1 for u in adj[v] if u in spine_set) for v in spine_set}
    if any(d > 2 for d in inner_deg.values()):
        return None
    if len(spine_set) == 1:
        spine = [next(iter(spine_set))]
    else:
        ends = sorted(v for v in spine_set if inner_deg[v] == 1)
        spine = [ends[0]]
        prev = -1
        while len(spine) < len(spine_set):
            cur = spine[-1]
            nxt = next(u for u in adj[cur] if u in spine_set and u != prev)
            spine.append(nxt)
            prev = cur
    legs = tuple(tuple(sorted(u for u in adj[v] if deg[u] == 1)) for v in spine)
    return CaterpillarShape(tuple(len(l) for l in legs), tuple(spine), legs)


def recognize_spider(t: Tree) -> SpiderShape | None:
    """Return the spider shape of t, or None.

    Accepted: exactly one vertex of degree >= 3 (the center) with all others
    of degree <= 2; additionally, a path with n >= 3 counts as a spider with
    p=2, centered at a most-balanced interior vertex (ties -> smaller id).
    Single vertices and single edges are rejected.
    """
    _require_connected_tree(t)
    adj = t.adjacency()
    deg = [len(a) for a in adj]
    big = [v for v in range(t.n) if deg[v] >= 3]
    if len(big) > 1:
        return None
    if len(big) == 1:
        center = big[0]
        arms = []
        for first in sorted(adj[center]):
            arm = [first]
            prev = center
            while deg[arm[-1]] == 2:
                cur = arm[-1]
                arm.append(next(u for u in adj[cur] if u != prev))
                prev = cur
            arms.append(tuple(arm))
        return SpiderShape(tuple(len(a) for a in arms), center, tuple(arms))
    # No branch vertex: t is a path. Accept it with p=2 when long enough.
    if t.n < 3:
        return None
    start = min(v for v in range(t.n) if deg[v] == 1)
    path = [start]
    prev = -1
    while len(path) < t.n:
        cur = path[-1]
        path.append(next(u for u in adj[cur] if u != prev))
        prev = cur
    best = min(range(1, t.n - 1), key=lambda i: (abs((t.n - 1 - i) - i), path[i]))
    left = tuple(reversed(path[:best]))
    right = tuple(path[best + 1:])
    arms = sorted((left, right), key=lambda a: a[0])
    return SpiderShape(tuple(len(a) for a in arms), path[best],
                       (tuple(arms[0]), tuple(arms[1])))


def gen_regular_caterpillar(s: int, delta: int) -> tuple[Tree, CaterpillarShape]:
    """Caterpillar with s spine vertices, each carrying exactly delta legs."""
    if s < 1:
        raise ValueError("spine length must be positive")
    if delta < 1:
        raise ValueError("leg count must be positive")
    return gen_caterpillar([delta] * s)


def gen_caterpillar(leg_counts) -> tuple[Tree, CaterpillarShape]:
    """Caterpillar from per-spine-vertex leg counts (canonical shape required:
    with two or more spine vertices both endpoints need at least one leg).

    Spine vertices are 0..s-1 in path order; legs follow in spine order.
    """
    counts = tuple(int(c) for c in leg_counts)
    if not counts:
        raise ValueError("leg counts must be non-empty")
    if any(c < 0 for c in counts):
        raise ValueError("leg counts must be non-negative")
    s = len(counts)
    if s >= 2 and (counts[0] < 1 or counts[-1] < 1):
        raise ValueError("spine endpoints must have at least one leg")
    legs = []
    nxt = s
    for c in counts:
        legs.append(tuple(range(nxt, nxt + c)))
        nxt += c
    shape = CaterpillarShape(counts, tuple(range(s)), tuple(legs))
    return shape.to_tree(), shape


def gen_spider(path_lengths) -> tuple[Tree, SpiderShape]:
    """Spider with the given path lengths; center is vertex 0, paths follow
    in input order. A radius-k star is gen_spider([k] * p).
    """
    lengths = tuple(int(x) for x in path_lengths)
    if not lengths:
        raise ValueError("path lengths must be non-empty")
    if any(x < 1 for x in lengths):
        raise ValueError("path lengths must be positive")
    paths = []
    nxt = 1
    for length in lengths:
        paths.append(tuple(range(nxt, nxt + length)))
        nxt += length
    shape = SpiderShape(lengths, 0, tuple(paths))
    return shape.to_tree(), shape


def gen_random_caterpillar(rng: random.Random, max_spine: int = 30,
                           max_legs: int = 8) -> tuple[Tree, CaterpillarShape]:
    """Random canonical caterpillar: spine length in 1..max_spine, interior
    leg counts in 0..max_legs, endpoint leg counts in 1..max_legs.
    """
    if max_spine < 1 or max_legs < 1:
        raise ValueError("bounds must be positive")
    s = rng.randint(1, max_spine)
    counts = []
    for i in range(s):
        endpoint = i == 0 or i == s - 1
        counts.append(rng.randint(1 if endpoint else 0, max_legs))
    return gen_caterpillar(counts)


def two_coloring(t: Tree) -> tuple[list[int], int]:
    """2-color each component (the smallest vertex of a component gets color
    0). Returns (colors, component count); raises on an odd cycle.
    """
    adj = t.adjacency()
    color = [-1] * t.n
    components = 0
    for root in range(t.n):
        if color[root] != -1:
            continue
        components += 1
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    raise ValueError("graph contains an odd cycle and is not bipartite")
    return color, components


def bipartition_sizes(t: Tree) -> tuple[int, int]:
    """Sizes of the two color classes of a bipartite graph, larger first."""
    color, _ = two_coloring(t)
    ones = sum(color)
    sizes = (t.n - ones, ones)
    return (max(sizes), min(sizes))
