"""Reduced pipe dreams and the weight-preserving bijection with inversions tableaux.

Cells are ``(r, c)`` in matrix coordinates.  Crosses live in ``r + c <= n``;
the anti-diagonal ``r + c = n + 1`` holds elbow caps.  Pipe ``i`` enters row
``i`` from the left and leaves through the top of column ``w_i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .diagram import diagram_of
from .exceptions import ConsistencyError, InvtabError
from .perm import Permutation, length, reduced_word_product, swap_positions
from .tableau import InversionsTableau, balanced_extension

__all__ = [
    "PipeDream", "CompatiblePair", "trace", "permutation_of", "weight",
    "is_reduced", "crossing_rows", "enumerate_RP", "phi", "phi_inverse",
    "pipe_dream_from_rows", "compatible_pair", "reading_pair",
    "balanced_labelling_of",
]


@dataclass(frozen=True, order=True)
class PipeDream:
    n: int
    crosses: tuple = field(default=())

    def __post_init__(self):
        cells = tuple(sorted(set(map(tuple, self.crosses))))
        for r, c in cells:
            if r < 1 or c < 1 or r + c > self.n:
                raise InvtabError(f"cross {(r, c)} outside the region r + c <= {self.n}")
        object.__setattr__(self, "crosses", cells)

    def __contains__(self, cell) -> bool:
        return tuple(cell) in set(self.crosses)

    def __len__(self) -> int:
        return len(self.crosses)

    def permutation(self) -> Permutation:
        return permutation_of(self)

    def weight(self) -> tuple:
        return weight(self)

    def is_reduced(self) -> bool:
        return is_reduced(self)

    def with_crosses(self, cells) -> "PipeDream":
        return PipeDream(self.n, tuple(cells))

    def to_json(self) -> dict:
        return {"n": self.n, "crosses": [list(c) for c in self.crosses]}

    @classmethod
    def from_json(cls, data: dict) -> "PipeDream":
        return cls(int(data["n"]), tuple(tuple(c) for c in data["crosses"]))

    def render(self) -> str:
        s = set(self.crosses)
        lines = []
        for r in range(1, self.n + 1):
            row = []
            for c in range(1, self.n + 2 - r):
                if r + c == self.n + 1:
                    row.append("/")
                else:
                    row.append("+" if (r, c) in s else "·")
            lines.append(" ".join(row))
        return "\n".join(lines)


def trace(P: PipeDream) -> tuple:
    """Follow every pipe.

    Returns ``(ends, tiles)`` where ``ends[i]`` is the exit column of pipe
    ``i`` and ``tiles[(r, c)] = (h, v)`` records the pipe entering cell
    ``(r, c)`` from the left and the one entering from below.
    """
    n = P.n
    s = set(P.crosses)
    ends = {}
    tiles = {}
    for i in range(1, n + 1):
        r, c, from_left = i, 1, True
        while r >= 1:
            h, v = tiles.get((r, c), (None, None))
            tiles[(r, c)] = (i, v) if from_left else (h, i)
            if (r, c) in s:
                if from_left:
                    c += 1
                else:
                    r -= 1
            elif from_left:
                r -= 1
                from_left = False
            else:
                c += 1
                from_left = True
        ends[i] = c
    return ends, tiles


def permutation_of(P: PipeDream) -> Permutation:
    ends, _ = trace(P)
    return Permutation(ends[i] for i in range(1, P.n + 1))


def weight(P: PipeDream) -> tuple:
    wt = [0] * P.n
    for r, _ in P.crosses:
        wt[r - 1] += 1
    return tuple(wt)


def crossing_rows(P: PipeDream) -> dict:
    """``(i, j) -> [rows]`` for each pair of pipes ``i < j`` that cross."""
    _, tiles = trace(P)
    out = {}
    for r, c in P.crosses:
        h, v = tiles[(r, c)]
        out.setdefault((min(h, v), max(h, v)), []).append(r)
    return out


def is_reduced(P: PipeDream) -> bool:
    return len(P.crosses) == length(permutation_of(P))


@lru_cache(maxsize=None)
def _compatible_cells(u: Permutation, bound: int, nxt: int) -> tuple:
    """Cross sets for reduced words of ``u`` whose row labels are capped by
    ``bound`` (strictly, when the last letter is below ``nxt``)."""
    if all(u[k] < u[k + 1] for k in range(len(u) - 1)):
        return ((),)
    out = []
    for d in range(1, len(u)):
        if u[d - 1] < u[d]:
            continue
        top = min(d, bound if d >= nxt else bound - 1)
        v = swap_positions(u, d, d + 1)
        for alpha in range(1, top + 1):
            cell = (alpha, d - alpha + 1)
            for rest in _compatible_cells(v, alpha, d):
                out.append(rest + (cell,))
    return tuple(out)


def enumerate_RP(w: Sequence[int]) -> list:
    """All reduced pipe dreams of ``w`` via reduced words and compatible row labels."""
    w = Permutation(w)
    n = len(w)
    found = {frozenset(cells) for cells in _compatible_cells(w, n, 0)}
    return sorted(PipeDream(n, tuple(c)) for c in found)


def phi(P: PipeDream) -> InversionsTableau:
    """``T(i, j)`` is the row where pipes ``i`` and ``j`` cross."""
    rows = crossing_rows(P)
    if any(len(v) > 1 for v in rows.values()) or not is_reduced(P):
        raise InvtabError("pipe dream is not reduced")
    w = permutation_of(P)
    return InversionsTableau(diagram_of(w), {pair: rs[0] for pair, rs in rows.items()})


def _insertion_order(T: InversionsTableau) -> list:
    shaded = T.diagram.boxes
    return [b for b in reversed(balanced_extension(T)) if b in shaded]


def phi_inverse(T: InversionsTableau) -> PipeDream:
    """Grow the pipe dream one crossing at a time.

    Crossings are added in decreasing order of their entries, leftmost
    crossing first among equal entries.  Each step turns the bump tile in
    row ``T(i, j)`` shared by pipes ``i`` and ``j`` into a cross.
    """
    n = T.n
    crosses = set()
    for i, j in _insertion_order(T):
        r = T[(i, j)]
        _, tiles = trace(PipeDream(n, tuple(crosses)))
        spot = None
        for c in range(1, n + 1 - r):
            if (r, c) not in crosses and set(tiles.get((r, c), ())) == {i, j}:
                spot = (r, c)
                break
        if spot is None:
            raise ConsistencyError(f"pipes {i} and {j} do not touch in row {r}")
        crosses.add(spot)
    P = PipeDream(n, tuple(crosses))
    if permutation_of(P) != T.permutation():
        raise ConsistencyError("inserted crossings do not produce the tableau's permutation")
    return P


def pipe_dream_from_rows(T: InversionsTableau) -> PipeDream:
    """Rebuild the pipe dream row by row from the bottom.

    A tile is a cross exactly when the two pipes meeting there are recorded
    in ``T`` as crossing in that row.
    """
    n = T.n
    below = {}
    crosses = []
    for r in range(n, 0, -1):
        h = r
        top = {}
        last = n + 1 - r
        for c in range(1, last + 1):
            v = below.get(c)
            if c < last and v is not None and T[(min(h, v), max(h, v))] == r:
                crosses.append((r, c))
                top[c] = v
            else:
                top[c] = h
                h = v
        below = top
    return PipeDream(n, tuple(crosses))


@dataclass(frozen=True)
class CompatiblePair:
    word: tuple
    rows: tuple

    def is_compatible(self, w: Sequence[int]) -> bool:
        a, alpha = self.word, self.rows
        w = Permutation(w)
        if len(a) != len(alpha) or len(a) != length(w):
            return False
        if reduced_word_product(a, len(w)) != w:
            return False
        for k in range(len(a)):
            if not 1 <= alpha[k] <= a[k]:
                return False
            if k + 1 < len(a):
                if alpha[k] > alpha[k + 1]:
                    return False
                if a[k] < a[k + 1] and alpha[k] == alpha[k + 1]:
                    return False
        return True

    def cells(self) -> tuple:
        return tuple((r, a - r + 1) for a, r in zip(self.word, self.rows))


def compatible_pair(T: InversionsTableau) -> CompatiblePair:
    """Record the letter swapped at each insertion step together with its row."""
    n = T.n
    u = list(range(1, n + 1))
    letters, rows = [], []
    for i, j in _insertion_order(T):
        a, b = u[i - 1], u[j - 1]
        if b != a + 1:
            raise ConsistencyError(f"box {(i, j)} is not a weak-order step here")
        u[i - 1], u[j - 1] = b, a
        letters.append(a)
        rows.append(T[(i, j)])
    return CompatiblePair(tuple(reversed(letters)), tuple(reversed(rows)))


def reading_pair(P: PipeDream) -> CompatiblePair:
    """Read crosses top to bottom, right to left, recording ``(r + c - 1, r)``."""
    cells = sorted(P.crosses, key=lambda rc: (rc[0], -rc[1]))
    return CompatiblePair(tuple(r + c - 1 for r, c in cells), tuple(r for r, _ in cells))


def balanced_labelling_of(T: InversionsTableau) -> dict:
    """Relabel columns by values: ``(i, w_j) -> T(i, j)``."""
    w = T.permutation()
    return {(i, w[j - 1]): v for (i, j), v in T.entries.items()}
