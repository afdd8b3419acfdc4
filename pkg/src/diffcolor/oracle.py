"""Exact computation of the maximum differential value at desk scale.

The decision procedure assigns the numbers 1..n to vertices in increasing
order; number t may land on a vertex only when every already-numbered
neighbor carries a number <= t - d. Completeness makes the results ground
truth: a returned witness achieves d, and infeasible means no labeling does.

Intended for small graphs; exact_dc refuses inputs above a configurable size
instead of hanging, and honors an optional wall-clock budget.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .bounds import upper_bound_report
from .graph import Tree
from .labeling import Labeling

DEFAULT_LIMIT_N = 14

_TIMEOUT_CHECK_MASK = 255


class OracleLimitError(Exception):
    """Input exceeds the configured exact-solver size limit."""


class OracleTimeoutError(Exception):
    """Time budget exhausted; carries the still-open bracket for the result."""

    def __init__(self, message: str, bracket: tuple[int, int], nodes: int):
        super().__init__(message)
        self.bracket = bracket
        self.nodes = nodes


class _Timeout(Exception):
    pass


@dataclass(frozen=True)
class ExactResult:
    dc: int
    witness: Labeling
    nodes: int
    millis: int

    def to_json(self) -> dict:
        return {"dc": self.dc, "nodes": self.nodes, "millis": self.millis}


def _search(n: int, adj: list[list[int]], d: int, first_vertex: int | None,
            deadline: float | None) -> tuple[tuple[int, ...] | None, int]:
    """Backtracking core. Returns (labels or None, nodes explored).

    Complement symmetry (x -> n+1-x preserves the value) is broken by never
    letting vertex 0 take a number above ceil(n/2), halving the search.
    The deterministic vertex order makes the witness reproducible.
    """
    label_of = [0] * n
    half = (n + 1) // 2
    nodes = 0

    def place(t: int) -> bool:
        nonlocal nodes
        if t > n:
            return True
        if deadline is not None and (nodes & _TIMEOUT_CHECK_MASK) == 0 \
                and time.monotonic() > deadline:
            raise _Timeout
        if label_of[0] == 0 and t > half:
            return False
        room = t + d <= n
        for v in range(n):
            if label_of[v]:
                continue
            ok = True
            unlabeled_nb = False
            for u in adj[v]:
                lu = label_of[u]
                if lu == 0:
                    unlabeled_nb = True
                elif t - lu < d:
                    ok = False
                    break
            if not ok or (unlabeled_nb and not room):
                continue
            label_of[v] = t
            nodes += 1
            if place(t + 1):
                return True
            label_of[v] = 0
        return False

    if first_vertex is None:
        found = place(1)
    else:
        label_of[first_vertex] = 1
        nodes = 1
        found = place(2)
    return (tuple(label_of) if found else None), nodes


def _branch_worker(args) -> tuple[str, tuple[int, ...] | None, int]:
    n, edges, d, first_vertex, remaining_ms = args
    tree = Tree(n, edges)
    deadline = None
    if remaining_ms is not None:
        deadline = time.monotonic() + remaining_ms / 1000.0
    try:
        labels, nodes = _search(n, tree.adjacency(), d, first_vertex, deadline)
    except _Timeout:
        return "timeout", None, 0
    return "done", labels, nodes


def _decide(t: Tree, d: int, deadline: float | None,
            threads: int) -> tuple[tuple[int, ...] | None, int]:
    if threads <= 1 or t.n <= 2:
        return _search(t.n, t.adjacency(), d, None, deadline)
    remaining_ms = None
    if deadline is not None:
        remaining_ms = max(0.0, (deadline - time.monotonic()) * 1000.0)
    jobs = [(t.n, t.edges, d, v, remaining_ms) for v in range(t.n)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(_branch_worker, jobs))
    nodes = sum(r[2] for r in results)
    for status, labels, _ in results:
        if status == "done" and labels is not None:
            return labels, nodes
    if any(status == "timeout" for status, _, _ in results):
        raise _Timeout
    return None, nodes


def decision_dc_at_least(t: Tree, d: int, *, timeout_ms: int | None = None,
                         threads: int = 1) -> Labeling | None:
    """Witness labeling of value >= d, or None if none exists (complete)."""
    if not 1 <= d <= t.n:
        raise ValueError(f"d must lie in 1..{t.n}, got {d}")
    deadline = None
    if timeout_ms is not None:
        deadline = time.monotonic() + timeout_ms / 1000.0
    try:
        labels, _ = _decide(t, d, deadline, threads)
    except _Timeout:
        raise OracleTimeoutError(f"decision at d={d} timed out", (1, d), 0) from None
    return Labeling(labels) if labels is not None else None


def exact_dc(t: Tree, *, limit_n: int = DEFAULT_LIMIT_N,
             timeout_ms: int | None = None, threads: int = 1) -> ExactResult:
    """Maximum differential value with an optimal witness, by descending
    search from the best applicable upper bound (the bounds are tight on the
    tree classes of interest, so the first test usually succeeds).

    Edgeless graphs evaluate to the sentinel n. Disconnected graphs are
    supported (numbers range over the whole graph, components constrain
    independently); the descent then starts from n - 1.
    """
    if t.n > limit_n:
        raise OracleLimitError(
            f"n={t.n} exceeds the exact-solver limit {limit_n}; raise limit_n to override")
    started = time.monotonic()
    deadline = started + timeout_ms / 1000.0 if timeout_ms is not None else None
    if t.m == 0:
        return ExactResult(t.n, Labeling.identity(t.n), 0, 0)
    if t.n >= 2 and t.is_connected():
        start = upper_bound_report(t).best
    else:
        start = t.n - 1
    total_nodes = 0
    for d in range(start, 0, -1):
        try:
            labels, nodes = _decide(t, d, deadline, threads)
        except _Timeout:
            raise OracleTimeoutError(
                f"timed out while testing d={d}; result lies in [1, {d}]",
                (1, d), total_nodes) from None
        total_nodes += nodes
        if labels is not None:
            millis = int((time.monotonic() - started) * 1000)
            return ExactResult(d, Labeling(labels), total_nodes, millis)
    raise AssertionError("d=1 is always feasible for a graph with edges")
