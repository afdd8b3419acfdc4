"""Upper bounds on the maximum achievable differential value.

Three bounds are implemented:
  thm1  floor(n/2), valid for every connected graph,
  thm2  ceil((n - delta)/2) for regular caterpillars with an odd spine
        (with an even spine the bound coincides with thm1, so no entry),
  thm3  N_e + 1 for spiders, where N_e counts even-level vertices.

Class bounds are emitted exactly when the recognizer accepts the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Tree, recognize_caterpillar, recognize_spider


@dataclass(frozen=True)
class BoundReport:
    entries: tuple[tuple[str, int], ...]

    @property
    def best(self) -> int:
        return min(value for _, value in self.entries)

    def __getitem__(self, name: str) -> int:
        for key, value in self.entries:
            if key == name:
                return value
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(key == name for key, _ in self.entries)

    def to_json(self) -> dict:
        return {"bounds": {name: value for name, value in self.entries},
                "best": self.best}


def upper_bound_report(t: Tree) -> BoundReport:
    """All applicable upper bounds for a connected graph with n >= 2."""
    if t.n < 2:
        raise ValueError("bounds are defined for n >= 2")
    if not t.is_connected():
        raise ValueError("input graph is disconnected")
    entries = [("thm1", t.n // 2)]
    if t.is_tree():
        cat = recognize_caterpillar(t)
        if cat is not None and cat.is_regular and cat.s % 2 == 1:
            entries.append(("thm2", (t.n - cat.delta + 1) // 2))
        spider = recognize_spider(t)
        if spider is not None:
            entries.append(("thm3", spider.n_even + 1))
    return BoundReport(tuple(entries))
