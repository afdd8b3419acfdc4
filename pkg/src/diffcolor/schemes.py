"""Constructive labeling schemes for caterpillars and spiders.

Four schemes are provided:

  label_regular_caterpillar  optimal for caterpillars whose spine vertices all
                             carry the same number of legs,
  label_spider_all_even      optimal for spiders whose paths all have even length,
  label_spider_all_odd       optimal for spiders whose paths all have odd length,
  label_general_caterpillar  any caterpillar; guarantees value >= ceil(n/2)-delta-2.

mp_value computes the differential value the classic forest bipartition scheme
guarantees, min(|U|, |V|); no labeling is constructed for it.

All schemes are deterministic: identical shapes yield identical labelings.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import CaterpillarShape, SpiderShape, Tree, bipartition_sizes
from .labeling import EvaluatedLabeling, Labeling, differential_value


class SchemeError(RuntimeError):
    """A scheme produced an inconsistent state; indicates a bug, not bad input."""


class Optimality(enum.Enum):
    PROVED = "proved"
    NOT_PROVED = "not-proved"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SchemeResult:
    scheme: str
    labeling: EvaluatedLabeling
    guarantee: int
    optimal: Optimality

    @property
    def value(self) -> int:
        return self.labeling.value

    def to_json(self) -> dict:
        return {
            "scheme": self.scheme,
            "labels": list(self.labeling.labeling.labels),
            "value": self.value,
            "guarantee": self.guarantee,
            "optimal": "proved" if self.optimal is Optimality.PROVED else "unknown",
        }


def _finish(scheme: str, tree: Tree, labels: dict[int, int], guarantee: int,
            expected_value: int | None, optimal: Optimality) -> SchemeResult:
    """Assemble and evaluate a scheme's labels, trapping inconsistencies."""
    if len(labels) != tree.n:
        raise SchemeError(f"{scheme}: assigned {len(labels)} labels for {tree.n} vertices")
    arr = [0] * tree.n
    for v, x in labels.items():
        arr[v] = x
    labeling = Labeling(tuple(arr))
    try:
        value = differential_value(tree, labeling)
    except ValueError as exc:
        raise SchemeError(f"{scheme}: non-bijective output: {exc}") from exc
    if expected_value is not None and value != expected_value:
        raise SchemeError(f"{scheme}: achieved {value}, expected {expected_value}")
    if value < guarantee:
        raise SchemeError(f"{scheme}: achieved {value}, below guarantee {guarantee}")
    return SchemeResult(scheme, EvaluatedLabeling(labeling, value), guarantee, optimal)


def label_regular_caterpillar(shape: CaterpillarShape) -> SchemeResult:
    """Optimal labeling for a regular caterpillar.

    The spine alternates between the lowest and highest numbers left to right;
    each spine vertex's legs get a block of consecutive mid-range numbers on
    the opposite end from its own. Achieves n/2 for an even spine and
    ceil((n - delta)/2) for an odd one, matching the upper bound.
    """
    if not shape.is_regular:
        raise ValueError("shape is not a regular caterpillar")
    delta = shape.delta
    if delta < 1:
        raise ValueError("regular caterpillar scheme needs at least one leg per spine vertex")
    s, n = shape.s, shape.n
    labels: dict[int, int] = {}
    if s % 2 == 0:
        k = s // 2
        target = n // 2
        for idx in range(s):
            pos = idx + 1
            if pos % 2 == 1:
                i = (pos + 1) // 2
                labels[shape.spine_vertices[idx]] = i
                base = n // 2 + (i - 1) * delta
            else:
                i = pos // 2
                labels[shape.spine_vertices[idx]] = n - k + i
                base = k + (i - 1) * delta
            for j, leg in enumerate(shape.leg_vertices[idx], start=1):
                labels[leg] = base + j
    else:
        k = (s - 1) // 2
        target = (n - delta + 1) // 2
        for idx in range(s):
            pos = idx + 1
            if pos % 2 == 1:
                i = (pos + 1) // 2
                labels[shape.spine_vertices[idx]] = i
                base = target + (i - 1) * delta
            else:
                i = pos // 2
                labels[shape.spine_vertices[idx]] = n - k + i
                base = k + (i - 1) * delta + 1
            for j, leg in enumerate(shape.leg_vertices[idx], start=1):
                labels[leg] = base + j
    return _finish("regular-cat", shape.to_tree(), labels, target, target,
                   Optimality.PROVED)


def _sorted_path_order(shape: SpiderShape) -> list[int]:
    """Path indices by non-increasing length, stable on ties."""
    return sorted(range(shape.p), key=lambda i: (-shape.path_lengths[i], i))


def label_spider_all_even(shape: SpiderShape) -> SchemeResult:
    """Optimal labeling for a spider whose paths all have even length.

    The center gets 1; even-level vertices get 2..N_e+1 by increasing level,
    odd-level vertices get N_e+2..n likewise, each level ordered by
    non-increasing path length. Achieves N_e, which here equals floor(n/2).
    """
    if any(length % 2 for length in shape.path_lengths):
        raise ValueError("all path lengths must be even")
    n_even = shape.n_even
    evens = [shape.level_count(l) for l in range(2, shape.max_level + 1, 2)]
    odds = [shape.level_count(l) for l in range(1, shape.max_level + 1, 2)]
    labels: dict[int, int] = {shape.center: 1}
    for rank, pi in enumerate(_sorted_path_order(shape), start=1):
        for level, v in enumerate(shape.path_vertices[pi], start=1):
            if level % 2 == 0:
                i = level // 2
                labels[v] = 1 + sum(evens[:i - 1]) + rank
            else:
                i = (level - 1) // 2
                labels[v] = n_even + 1 + sum(odds[:i]) + rank
    return _finish("spider-even", shape.to_tree(), labels, n_even, n_even,
                   Optimality.PROVED)


def label_spider_all_odd(shape: SpiderShape) -> SchemeResult:
    """Optimal labeling for a spider whose paths all have odd length.

    The center gets ceil(n/2). Paths are sorted by non-increasing length and
    split alternately into two groups: odd sorted positions form the outer
    group (odd levels take the highest numbers, even levels sit just below
    the center), even sorted positions form the inner group (odd levels take
    the lowest numbers, even levels sit just above the center). Achieves
    N_e + 1 = ceil((n - p)/2).
    """
    if any(length % 2 == 0 for length in shape.path_lengths):
        raise ValueError("all path lengths must be odd")
    n = shape.n
    n_even = shape.n_even
    ceil_half = (n + 1) // 2
    odds = [shape.level_count(l) for l in range(1, shape.max_level + 1, 2)]
    evens = [shape.level_count(l) for l in range(2, shape.max_level + 1, 2)]

    def prefix(xs, f):
        acc = [0]
        for x in xs:
            acc.append(acc[-1] + f(x))
        return acc

    odd_floor = prefix(odds, lambda x: x // 2)
    odd_ceil = prefix(odds, lambda x: (x + 1) // 2)
    even_floor = prefix(evens, lambda x: x // 2)
    even_ceil = prefix(evens, lambda x: (x + 1) // 2)

    labels: dict[int, int] = {shape.center: ceil_half}
    for rank, pi in enumerate(_sorted_path_order(shape), start=1):
        inner = rank % 2 == 0
        q = rank // 2 if inner else (rank + 1) // 2
        for level, v in enumerate(shape.path_vertices[pi], start=1):
            if level % 2 == 1:
                i = (level + 1) // 2
                if inner:
                    labels[v] = odd_floor[i - 1] + q
                else:
                    labels[v] = n - odd_ceil[i] + q
            else:
                i = level // 2
                if inner:
                    labels[v] = ceil_half + even_floor[i - 1] + q
                else:
                    labels[v] = ceil_half - even_ceil[i] + q - 1
    return _finish("spider-odd", shape.to_tree(), labels, n_even + 1, n_even + 1,
                   Optimality.PROVED)


@dataclass(frozen=True)
class MarkingState:
    """Marking-phase outcome for the general caterpillar scheme.

    The seven groups partition the vertices. middle receives ceil(n/2);
    low_spine / low_legs / middle_low_legs receive the numbers below it and
    high_spine / high_legs / middle_high_legs the numbers above it. Legless
    spine vertices appear in pseudo_leg_owner, mapped to the spine vertex
    that adopted them.
    """

    low_spine: frozenset[int]
    high_spine: frozenset[int]
    middle: int
    low_legs: frozenset[int]
    high_legs: frozenset[int]
    middle_low_legs: tuple[int, ...]
    middle_high_legs: tuple[int, ...]
    pseudo_leg_owner: tuple[tuple[int, int], ...]

    def validate(self, shape: CaterpillarShape) -> None:
        n = shape.n
        groups = [set(self.low_spine), set(self.high_spine), {self.middle},
                  set(self.low_legs), set(self.high_legs),
                  set(self.middle_low_legs), set(self.middle_high_legs)]
        if sum(len(g) for g in groups) != n or set().union(*groups) != set(range(n)):
            raise SchemeError("marking groups do not partition the vertices")
        lows = len(self.low_spine) + len(self.low_legs)
        highs = len(self.high_spine) + len(self.high_legs)
        if not (2 * lows < n and 2 * highs <= n):
            raise SchemeError("marking violates the balance condition")
        if lows + len(self.middle_low_legs) + 1 != (n + 1) // 2:
            raise SchemeError("low-side total is not ceil(n/2)")
        if highs + len(self.middle_high_legs) != n // 2:
            raise SchemeError("high-side total is not floor(n/2)")


@dataclass
class _Marking:
    """Position-level marking data (spine indices, not vertex ids)."""

    mid: int                      # spine position receiving the middle label
    low_side: list[bool]          # spine position -> destined-low side
    in_spine: list[bool]          # False once a position became another's pseudo-leg
    pseudo_owner: dict[int, int]  # pseudo-leg position -> owner position
    low_mid_count: int            # of the middle vertex's legs, how many go low


def _mark_positions(shape: CaterpillarShape) -> _Marking:
    s, n = shape.s, shape.n
    counts = shape.leg_counts
    # Alternate sides along the spine, then scan right to left for the vertex
    # whose removal balances the two sides (its legs fill the remainder).
    low_side = [i % 2 == 0 for i in range(s)]
    lows = sum(1 if low_side[i] else counts[i] for i in range(s))
    highs = sum(counts[i] if low_side[i] else 1 for i in range(s))
    mid = -1
    for i in range(s - 1, -1, -1):
        excl_lows = lows - (1 if low_side[i] else counts[i])
        excl_highs = highs - (counts[i] if low_side[i] else 1)
        if 2 * excl_lows < n and 2 * excl_highs <= n:
            mid = i
            lows, highs = excl_lows, excl_highs
            break
        low_side[i] = not low_side[i]
        lows = excl_lows + (1 if low_side[i] else counts[i])
        highs = excl_highs + (counts[i] if low_side[i] else 1)
    if mid == -1:
        raise SchemeError("balance condition never achieved along the spine")

    # Legless spine vertices become pseudo-legs of their right neighbor; a
    # pseudo-leg keeps its side but moves from the spine group to the legs.
    in_spine = [True] * s
    pseudo_owner: dict[int, int] = {}
    owns_pseudo = [False] * s
    for i in range(s - 1):
        if i == mid:
            continue
        if counts[i] == 0 and not owns_pseudo[i]:
            owner = i + 1
            pseudo_owner[i] = owner
            owns_pseudo[owner] = True
            if owner != mid:
                in_spine[i] = False

    # The right spine neighbor of the middle vertex, if it became a pseudo-leg,
    # is re-adopted by the middle vertex and returns to its spine group so the
    # middle vertex's two neighbors occupy one low and one high spine slot.
    j = mid + 1
    if j < s and j in pseudo_owner and not in_spine[j]:
        owns_pseudo[pseudo_owner[j]] = False
        pseudo_owner[j] = mid
        owns_pseudo[mid] = True
        in_spine[j] = True
        if mid - 1 >= 0 and low_side[mid - 1] == low_side[j]:
            low_side[j] = not low_side[j]

    low_count = sum(1 for i in range(s) if i != mid and in_spine[i] and low_side[i])
    high_count = sum(1 for i in range(s) if i != mid and in_spine[i] and not low_side[i])
    low_leg_count = sum(counts[i] for i in range(s)
                        if i != mid and in_spine[i] and not low_side[i])
    low_leg_count += sum(1 for i, o in pseudo_owner.items()
                         if not in_spine[i] and not low_side[o])
    high_leg_count = sum(counts[i] for i in range(s)
                         if i != mid and in_spine[i] and low_side[i])
    high_leg_count += sum(1 for i, o in pseudo_owner.items()
                          if not in_spine[i] and low_side[o])

    low_mid_count = (n + 1) // 2 - low_count - low_leg_count - 1
    high_mid_count = n // 2 - high_count - high_leg_count
    if not (0 <= low_mid_count and 0 <= high_mid_count
            and low_mid_count + high_mid_count == counts[mid]):
        raise SchemeError("middle-leg split sizes fall outside 0..legs(middle)")
    return _Marking(mid, low_side, in_spine, pseudo_owner, low_mid_count)


def mark_caterpillar(shape: CaterpillarShape) -> MarkingState:
    """Run the marking phase and return the vertex-level group assignment."""
    pm = _mark_positions(shape)
    s = shape.s
    spine = shape.spine_vertices
    low_spine, high_spine, low_legs, high_legs = set(), set(), set(), set()
    for i in range(s):
        if i == pm.mid:
            continue
        if pm.in_spine[i]:
            (low_spine if pm.low_side[i] else high_spine).add(spine[i])
        else:
            owner = pm.pseudo_owner[i]
            (high_legs if pm.low_side[owner] else low_legs).add(spine[i])
    for i in range(s):
        if i == pm.mid or not pm.in_spine[i]:
            continue
        dest = high_legs if pm.low_side[i] else low_legs
        dest.update(shape.leg_vertices[i])
    mid_legs = shape.leg_vertices[pm.mid]
    state = MarkingState(
        low_spine=frozenset(low_spine),
        high_spine=frozenset(high_spine),
        middle=spine[pm.mid],
        low_legs=frozenset(low_legs),
        high_legs=frozenset(high_legs),
        middle_low_legs=tuple(mid_legs[:pm.low_mid_count]),
        middle_high_legs=tuple(mid_legs[pm.low_mid_count:]),
        pseudo_leg_owner=tuple(sorted((spine[i], spine[o])
                                      for i, o in pm.pseudo_owner.items())),
    )
    state.validate(shape)
    return state


def label_general_caterpillar(shape: CaterpillarShape) -> SchemeResult:
    """Label any caterpillar with guaranteed value >= ceil(n/2) - delta - 2.

    Marking picks a middle spine vertex splitting the rest evenly, turns
    legless spine vertices into pseudo-legs of their right neighbors, and
    splits the middle vertex's legs between the extreme low and extreme high
    numbers. Labeling walks the spine cyclically leftward from the middle
    vertex, handing low spine slots ascending low numbers and high spine
    slots ascending high numbers, then fills the mid-range with the legs,
    grouped by owner.
    """
    if shape.n < 2:
        raise ValueError("general caterpillar scheme needs n >= 2")
    n, s = shape.n, shape.s
    spine = shape.spine_vertices
    pm = _mark_positions(shape)
    mark_caterpillar(shape)  # group-level invariant check; raises on violation
    mid = pm.mid
    ceil_half = (n + 1) // 2

    labels: dict[int, int] = {spine[mid]: ceil_half}
    mid_legs = shape.leg_vertices[mid]
    lm = pm.low_mid_count
    hm = len(mid_legs) - lm
    for idx, v in enumerate(mid_legs[:lm]):
        labels[v] = 1 + idx
    for idx, v in enumerate(mid_legs[lm:]):
        labels[v] = n - hm + 1 + idx

    spine_positions = [i for i in range(s) if i != mid and pm.in_spine[i]]
    low_count = sum(1 for i in spine_positions if pm.low_side[i])
    high_count = len(spine_positions) - low_count
    low_values = list(range(lm + 1, lm + low_count + 1))
    high_values = list(range(n - hm - high_count + 1, n - hm + 1))

    # The middle vertex's spine neighbors take the innermost spine numbers:
    # the low neighbor the lowest low value, the high neighbor the highest high.
    neighbors = [j for j in (mid - 1, mid + 1) if 0 <= j < s]
    if len(neighbors) == 2 and pm.low_side[neighbors[0]] == pm.low_side[neighbors[1]]:
        raise SchemeError("middle vertex's spine neighbors landed on one side")
    for j in neighbors:
        if not pm.in_spine[j]:
            raise SchemeError("middle vertex's spine neighbor lost its spine slot")
        if pm.low_side[j]:
            labels[spine[j]] = low_values.pop(0)
        else:
            labels[spine[j]] = high_values.pop()

    # Walk the spine cyclically away from the middle vertex, oriented so the
    # pinned low neighbor is the walk's first vertex and the pinned high
    # neighbor its last; then low/high ranks stay aligned along the spine
    # (in particular across pseudo-legs, whose two spine neighbors share a
    # side) and every adjacent difference meets the guarantee.
    if neighbors:
        if mid - 1 >= 0:
            leftward = pm.low_side[mid - 1]
        else:
            leftward = not pm.low_side[mid + 1]
    else:
        leftward = True
    if leftward:
        walk = list(range(mid - 1, -1, -1)) + list(range(s - 1, mid, -1))
    else:
        walk = list(range(mid + 1, s)) + list(range(0, mid))
    low_iter = iter(low_values)
    high_iter = iter(high_values)
    for j in walk:
        if not pm.in_spine[j] or spine[j] in labels:
            continue
        labels[spine[j]] = next(low_iter) if pm.low_side[j] else next(high_iter)

    def leg_group(owner: int) -> list[int]:
        group = list(shape.leg_vertices[owner])
        group.extend(spine[i] for i, o in pm.pseudo_owner.items()
                     if o == owner and not pm.in_spine[i])
        return group

    low_owners = [j for j in spine_positions if pm.low_side[j]]
    low_owners.sort(key=lambda j: labels[spine[j]])
    high_value = ceil_half + 1
    for owner in low_owners:
        for v in leg_group(owner):
            labels[v] = high_value
            high_value += 1

    high_owners = [j for j in spine_positions if not pm.low_side[j]]
    high_owners.sort(key=lambda j: labels[spine[j]], reverse=True)
    low_value = ceil_half - 1
    for owner in high_owners:
        for v in leg_group(owner):
            labels[v] = low_value
            low_value -= 1

    guarantee = ceil_half - shape.delta - 2
    return _finish("general-cat", shape.to_tree(), labels, guarantee, None,
                   Optimality.NOT_PROVED)


def mp_value(t: Tree) -> int:
    """Differential value the bipartition scheme for forests guarantees:
    min(|U|, |V|) over the 2-coloring. No labeling is produced.
    """
    if not t.is_forest():
        raise ValueError("input is not a forest")
    return bipartition_sizes(t)[1]


def label_auto(t: Tree) -> SchemeResult:
    """Pick the best applicable scheme: regular caterpillar, then
    parity-uniform spider, then general caterpillar. Raises ValueError when
    no scheme applies (mixed-parity spiders that are not caterpillars).
    """
    from .graph import recognize_caterpillar, recognize_spider

    if t.n < 2:
        raise ValueError("no scheme applies to a single vertex")
    cat = recognize_caterpillar(t)
    if cat is not None and cat.is_regular and cat.delta >= 1:
        return label_regular_caterpillar(cat)
    spider = recognize_spider(t)
    if spider is not None:
        if all(length % 2 == 0 for length in spider.path_lengths):
            return label_spider_all_even(spider)
        if all(length % 2 == 1 for length in spider.path_lengths):
            return label_spider_all_odd(spider)
    if cat is not None:
        return label_general_caterpillar(cat)
    raise ValueError("no scheme applies: not a caterpillar and not a parity-uniform spider")
