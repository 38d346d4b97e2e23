"""Inversions diagrams: shaded subsets of the staircase {(i, j) : 1 <= i < j <= n}.

Row ``i`` of the diagram of ``w`` holds ``lehmer_code(w)[i-1]`` shaded boxes and
column ``j`` holds ``column_lehmer_code(w)[j-1]``.  Containment of diagrams is
the left weak order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .exceptions import InvalidDiagramError
from .perm import Permutation, inversions

__all__ = [
    "InversionsDiagram", "staircase", "diagram_of", "permutation_of", "is_valid",
    "is_downward_closed", "is_dominant_shape", "removable_boxes", "render",
]


def staircase(n: int) -> list:
    """All staircase boxes, row-major."""
    return [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


@dataclass(frozen=True)
class InversionsDiagram:
    n: int
    shaded: tuple = field(default=())

    def __post_init__(self):
        boxes = tuple(sorted(set(map(tuple, self.shaded))))
        for i, j in boxes:
            if not 1 <= i < j <= self.n:
                raise InvalidDiagramError(f"box {(i, j)} outside the staircase of size {self.n}")
        object.__setattr__(self, "shaded", boxes)
        object.__setattr__(self, "_set", frozenset(boxes))

    def __contains__(self, box) -> bool:
        return tuple(box) in self._set

    def __len__(self) -> int:
        return len(self.shaded)

    def __iter__(self):
        return iter(self.shaded)

    def __le__(self, other: "InversionsDiagram") -> bool:
        return self.n == other.n and self._set <= other._set

    @property
    def boxes(self) -> frozenset:
        return self._set

    def row(self, i: int) -> list:
        return [b for b in self.shaded if b[0] == i]

    def column(self, j: int) -> list:
        """Shaded boxes of column ``j`` from the bottom (row 1) up."""
        return sorted(b for b in self.shaded if b[1] == j)

    def is_valid(self) -> bool:
        return is_valid(self._set, self.n)

    def permutation(self) -> Permutation:
        return permutation_of(self)

    def to_json(self) -> dict:
        return {"n": self.n, "shaded": [list(b) for b in self.shaded]}

    @classmethod
    def from_json(cls, data: dict) -> "InversionsDiagram":
        return cls(int(data["n"]), tuple(tuple(b) for b in data["shaded"]))


def diagram_of(w: Iterable[int]) -> InversionsDiagram:
    w = Permutation(w)
    return InversionsDiagram(len(w), tuple(inversions(w)))


def is_valid(boxes, n: int) -> bool:
    """Rectangle rule on shading: for ``i < j < k`` the base box ``(i, k)`` is
    shaded whenever both ``(i, j)`` and ``(j, k)`` are, and unshaded whenever
    neither is."""
    s = set(map(tuple, boxes))
    for i, j, k in combinations(range(1, n + 1), 3):
        a, c, b = (i, j) in s, (j, k) in s, (i, k) in s
        if a and c and not b:
            return False
        if not a and not c and b:
            return False
    return True


def permutation_of(d: InversionsDiagram) -> Permutation:
    """``w_i = i + #(row i) - #(column i)``."""
    if not d.is_valid():
        raise InvalidDiagramError("shaded boxes are not the inversion set of a permutation")
    rows = [0] * (d.n + 1)
    cols = [0] * (d.n + 1)
    for i, j in d.shaded:
        rows[i] += 1
        cols[j] += 1
    return Permutation(i + rows[i] - cols[i] for i in range(1, d.n + 1))


def removable_boxes(w: Permutation) -> list:
    """Boxes whose removal from the diagram of ``w`` is a weak-order down-step.

    These are the pairs ``(pos(a+1), pos(a))`` with ``a + 1`` left of ``a``.
    """
    pos = {v: p for p, v in enumerate(w, 1)}
    return [(pos[a + 1], pos[a]) for a in range(1, len(w)) if pos[a + 1] < pos[a]]


def is_downward_closed(d: InversionsDiagram) -> bool:
    return all((i - 1, j) in d for i, j in d.shaded if i > 1)


def is_dominant_shape(d: InversionsDiagram) -> bool:
    """Every column-topmost shaded box ``(i, j)`` sits on a full rectangle
    ``{(r, c) : r <= i, i + 1 <= c <= j}``."""
    tops = {}
    for i, j in d.shaded:
        tops[j] = max(tops.get(j, 0), i)
    for j, i in tops.items():
        for r in range(1, i + 1):
            for c in range(i + 1, j + 1):
                if (r, c) not in d:
                    return False
    return True


def render(d: InversionsDiagram, entries=None) -> str:
    """ASCII picture with row ``n - 1`` on top; ``#`` marks a shaded box."""
    entries = entries or {}
    width = max([len(str(v)) for v in entries.values()] + [1])
    lines = []
    for i in range(d.n - 1, 0, -1):
        cells = []
        for j in range(2, d.n + 1):
            if j <= i:
                cells.append(" " * width)
            elif (i, j) in d:
                cells.append(str(entries.get((i, j), "#")).rjust(width))
            else:
                cells.append(".".rjust(width))
        lines.append(f"{i:>2} | " + " ".join(cells))
    lines.append("     " + " ".join(str(j).rjust(width) for j in range(2, d.n + 1)))
    return "\n".join(lines)
