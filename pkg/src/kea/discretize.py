"""Supervised entropy/MDL discretization of real-valued features.

Cut points are chosen by recursive binary splitting: at each step the
boundary point with the lowest weighted class entropy is proposed, and it
is accepted only if its information gain beats the minimum-description-
length cost of encoding the split (Fayyad & Irani, IJCAI 1993).
"""

from __future__ import annotations

import math
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Sequence

# entropies closer than this are treated as equal, so that the smallest
# cut wins regardless of floating-point summation order
TIE_EPS = 1e-12


def entropy(counts: Counter | Sequence[int]) -> float:
    values = counts.values() if isinstance(counts, Counter) else counts
    total = sum(values)
    if total == 0:
        return 0.0
    return -sum(c / total * math.log2(c / total) for c in values if c)


def mdl_accepts(whole: Counter, left: Counter, right: Counter) -> bool:
    """True iff splitting ``whole`` into ``left``/``right`` passes the MDL test."""
    n = sum(whole.values())
    n1, n2 = sum(left.values()), sum(right.values())
    e, e1, e2 = entropy(whole), entropy(left), entropy(right)
    k = sum(1 for c in whole.values() if c)
    k1 = sum(1 for c in left.values() if c)
    k2 = sum(1 for c in right.values() if c)
    gain = e - (n1 * e1 + n2 * e2) / n
    delta = math.log2(3**k - 2) - (k * e - k1 * e1 - k2 * e2)
    return gain > (math.log2(n - 1) + delta) / n


def _midpoint(lo: float, hi: float) -> float:
    mid = (lo + hi) / 2
    # adjacent floats: keep lo strictly below the cut
    return mid if lo < mid <= hi else hi


def fit_discretization(values: Sequence[float], labels: Sequence[Hashable]) -> list[float]:
    """Learn sorted cut points for one feature from labeled values."""
    if len(values) != len(labels):
        raise ValueError("values and labels differ in length")
    if any(math.isnan(v) for v in values):
        raise ValueError("cannot discretize NaN")
    grouped: dict[float, Counter] = {}
    for v, y in zip(values, labels):
        grouped.setdefault(v, Counter())[y] += 1
    points = sorted(grouped)
    groups = [grouped[v] for v in points]

    cuts: list[float] = []
    # explicit stack of [lo, hi) group ranges
    stack = [(0, len(groups))]
    while stack:
        lo, hi = stack.pop()
        if hi - lo < 2:
            continue
        whole = Counter()
        for g in groups[lo:hi]:
            whole.update(g)
        if sum(1 for c in whole.values() if c) < 2:
            continue
        n = sum(whole.values())
        left = Counter()
        best = None
        for split in range(lo + 1, hi):
            prev = groups[split - 1]
            left.update(prev)
            nxt = groups[split]
            if len(prev) == 1 and len(nxt) == 1 and prev.keys() == nxt.keys():
                # both neighbours pure in the same class: not a boundary point
                continue
            right = whole - left
            n1 = sum(left.values())
            score = (n1 * entropy(left) + (n - n1) * entropy(right)) / n
            if best is None or score < best[0] - TIE_EPS:
                best = (score, split, Counter(left), right)
        if best is None:
            continue
        _, split, best_left, best_right = best
        if mdl_accepts(whole, best_left, best_right):
            cuts.append(_midpoint(points[split - 1], points[split]))
            stack.append((lo, split))
            stack.append((split, hi))
    return sorted(cuts)


@dataclass(frozen=True)
class Discretization:
    """Cut points of one feature; level ``i`` (1-based) covers
    ``[cuts[i-2], cuts[i-1])`` with open ends at the extremes."""

    cuts: tuple[float, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cuts", tuple(float(c) for c in self.cuts))
        if any(a >= b for a, b in zip(self.cuts, self.cuts[1:])):
            raise ValueError(f"cut points not strictly increasing: {self.cuts}")
        if any(math.isnan(c) for c in self.cuts):
            raise ValueError("NaN cut point")

    @property
    def num_levels(self) -> int:
        return len(self.cuts) + 1

    def level(self, value: float) -> int:
        return apply_discretization(self.cuts, value)

    @classmethod
    def fit(cls, values: Sequence[float], labels: Sequence[Hashable]) -> "Discretization":
        return cls(tuple(fit_discretization(values, labels)))


def apply_discretization(cuts: Sequence[float], value: float) -> int:
    """1-based level of ``value``; a value equal to a cut falls in the upper level."""
    if math.isnan(value):
        raise ValueError("cannot discretize NaN")
    return bisect_right(cuts, value) + 1
