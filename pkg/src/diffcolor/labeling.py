"""Vertex labelings and their differential value.

A labeling assigns the numbers 1..n bijectively to the vertices; its value is
the minimum |difference| across edges. Everything here is exact integer
arithmetic on immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Tree


@dataclass(frozen=True)
class Labeling:
    """labels[v] is the number assigned to vertex v, from {1..n}."""

    labels: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    @staticmethod
    def identity(n: int) -> "Labeling":
        return Labeling(tuple(range(1, n + 1)))

    def complement(self) -> "Labeling":
        """Mirror labeling x -> n+1-x; it has the same differential value."""
        n = self.n
        return Labeling(tuple(n + 1 - x for x in self.labels))


def is_valid_labeling(t: Tree, labeling: Labeling) -> tuple[bool, str | None]:
    """Check bijectivity onto {1..n}; returns (ok, first violation or None)."""
    labels = labeling.labels
    if len(labels) != t.n:
        return False, f"expected {t.n} labels, got {len(labels)}"
    seen = set()
    for v, x in enumerate(labels):
        if not 1 <= x <= t.n:
            return False, f"label {x} of vertex {v} out of range 1..{t.n}"
        if x in seen:
            return False, f"duplicate label {x} at vertex {v}"
        seen.add(x)
    return True, None


def differential_value(t: Tree, labeling: Labeling) -> int:
    """Minimum |label difference| over edges; n for an edgeless graph (one
    more than any value an edge could constrain to).
    """
    ok, why = is_valid_labeling(t, labeling)
    if not ok:
        raise ValueError(f"invalid labeling: {why}")
    if not t.edges:
        return t.n
    labels = labeling.labels
    return min(abs(labels[u] - labels[v]) for u, v in t.edges)


@dataclass(frozen=True)
class EvaluatedLabeling:
    labeling: Labeling
    value: int

    def to_json(self) -> dict:
        return {
            "n": self.labeling.n,
            "labels": list(self.labeling.labels),
            "value": self.value,
        }


def evaluate(t: Tree, labeling: Labeling) -> EvaluatedLabeling:
    return EvaluatedLabeling(labeling, differential_value(t, labeling))


def labeling_from_json(obj: dict) -> Labeling:
    """Read the labeling interchange object {"n": int, "labels": [int, ...]};
    an included "value" field is ignored (it is recomputed on evaluation).
    """
    try:
        n = obj["n"]
        labels = obj["labels"]
    except (TypeError, KeyError) as exc:
        raise ValueError(f"labeling object must contain 'n' and 'labels': {exc}") from exc
    if not isinstance(labels, list) or not all(isinstance(x, int) for x in labels):
        raise ValueError("'labels' must be a list of integers")
    if n != len(labels):
        raise ValueError(f"'n' is {n} but 'labels' has {len(labels)} entries")
    return Labeling(tuple(labels))
