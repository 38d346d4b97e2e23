"""Staircase fillings and inversions tableaux.

A *filling* is any mapping from staircase boxes ``(i, j)`` to non-negative
integers; boxes missing from the mapping read as 0.  An inversions tableau
is a filling supported on the diagram of ``w`` that is weakly balanced
(IT1), has distinct entries down each column (IT2) and satisfies
``T(i, i+1) <= i`` (IT3).
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Iterator, Mapping, Sequence

from .diagram import InversionsDiagram, diagram_of, render, staircase
from .exceptions import ConsistencyError, InvtabError
from .perm import Permutation, inversions, longest, swap_values

__all__ = [
    "hook", "is_weakly_balanced", "is_balanced", "satisfies_rectangle_rule",
    "InversionsTableau", "is_inversions_tableau", "iter_IT", "enumerate_IT",
    "enumerate_IT_bruteforce", "enumerate_UIT", "lex_max_tableau",
    "lex_min_tableau", "balanced_extension", "chain_to_balanced",
    "balanced_to_chain", "maximal_chains", "balanced_tableaux",
]


def hook(n: int, i: int, j: int) -> list:
    """Box ``(i, j)`` plus the boxes above it in its column and left of it in its row."""
    if not 1 <= i < j <= n:
        raise InvtabError(f"box {(i, j)} is outside the staircase of size {n}")
    return [(i, j)] + [(r, j) for r in range(i + 1, j)] + [(i, c) for c in range(i + 1, j)]


def _get(filling: Mapping, box) -> int:
    return filling.get(box, 0)


def is_weakly_balanced(filling: Mapping, n: int) -> bool:
    """Every box holds the median (with multiplicity) of its hook."""
    for i, j in staircase(n):
        values = sorted(_get(filling, b) for b in hook(n, i, j))
        if values[(len(values) - 1) // 2] != _get(filling, (i, j)):
            return False
    return True


def is_balanced(filling: Mapping, n: int) -> bool:
    """Distinct labels ``1..n(n-1)/2`` with every corner the median of its hook."""
    boxes = staircase(n)
    if sorted(_get(filling, b) for b in boxes) != list(range(1, len(boxes) + 1)):
        return False
    return is_weakly_balanced(filling, n)


def satisfies_rectangle_rule(filling: Mapping, n: int) -> bool:
    """``T(i, k)`` lies weakly between ``T(i, j)`` and ``T(j, k)`` for all ``i < j < k``."""
    for i, j, k in combinations(range(1, n + 1), 3):
        a, c, b = _get(filling, (i, j)), _get(filling, (j, k)), _get(filling, (i, k))
        if not min(a, c) <= b <= max(a, c):
            return False
    return True


class InversionsTableau:
    """Positive entries on the shaded boxes of an inversions diagram.

    Validity is not enforced on construction; use :func:`is_inversions_tableau`.
    """

    __slots__ = ("diagram", "_entries", "_key")

    def __init__(self, diagram: InversionsDiagram, entries: Mapping):
        self.diagram = diagram
        self._entries = {tuple(b): int(v) for b, v in entries.items()}
        self._key = (diagram.n, tuple(sorted(self._entries.items())))

    @property
    def n(self) -> int:
        return self.diagram.n

    @property
    def entries(self) -> dict:
        return dict(self._entries)

    def __getitem__(self, box) -> int:
        return self._entries.get(tuple(box), 0)

    def __eq__(self, other):
        return type(other) is type(self) and self._key == other._key

    def __lt__(self, other):
        return self._key < other._key

    def __hash__(self):
        return hash((type(self).__name__, self._key))

    def __repr__(self):
        body = ", ".join(f"{b}: {v}" for b, v in sorted(self._entries.items()))
        return f"{type(self).__name__}(n={self.n}, {{{body}}})"

    def filling(self) -> dict:
        """Entries on every staircase box, 0 off the diagram."""
        full = dict.fromkeys(staircase(self.n), 0)
        full.update(self._entries)
        return full

    def permutation(self) -> Permutation:
        return self.diagram.permutation()

    def weight(self) -> tuple:
        """``(m_1, ..., m_n)`` with ``m_r`` the number of entries equal to ``r``."""
        wt = [0] * self.n
        for v in self._entries.values():
            wt[v - 1] += 1
        return tuple(wt)

    def column_word(self, c: int) -> tuple:
        """Entries of column ``c`` read from the bottom row up."""
        return tuple(self._entries[b] for b in self.diagram.column(c))

    def render(self) -> str:
        return render(self.diagram, self._entries)

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [[i, j, v] for (i, j), v in sorted(self._entries.items())]}

    @classmethod
    def from_json(cls, data: dict):
        n = int(data["n"])
        entries = {(int(i), int(j)): int(v) for i, j, v in data["entries"]}
        return cls(InversionsDiagram(n, tuple(entries)), entries)


def _check_support(diagram: InversionsDiagram, entries: Mapping):
    for box, v in entries.items():
        if tuple(box) not in diagram:
            raise InvtabError(f"entry on unshaded box {box}")
        if v <= 0:
            raise InvtabError(f"non-positive entry {v} at {box}")


def is_inversions_tableau(diagram: InversionsDiagram, entries: Mapping, variant: str = "IT3") -> bool:
    """IT1 and IT2 together with IT3 (diagonal bound) or IT3' (row bound).

    ``variant`` selects between the two forms of the third rule; they define
    the same set of tableaux.
    """
    _check_support(diagram, entries)
    if set(map(tuple, entries)) != set(diagram.shaded):
        return False
    n = diagram.n
    if variant == "IT3":
        if any(v > i for (i, j), v in entries.items() if j == i + 1):
            return False
    elif variant == "IT3'":
        if any(v > i for (i, j), v in entries.items()):
            return False
    else:
        raise ValueError(f"unknown variant {variant!r}")
    for j in range(2, n + 1):
        col = [v for (r, c), v in entries.items() if c == j]
        if len(col) != len(set(col)):
            return False
    return satisfies_rectangle_rule(entries, n)


def _search(n: int, domains: Mapping, fixed: Mapping) -> Iterator[dict]:
    """Backtracking over the whole staircase.

    ``domains`` maps each free box to its candidate values; ``fixed`` maps
    the remaining boxes to their value (missing boxes are 0).  Free entries
    are pairwise distinct within a column.  Boxes are visited column by
    column, top row first, so that each base box ``(i, k)`` is the last of
    its rectangle triples to be assigned.
    """
    order = [(i, k) for k in range(2, n + 1) for i in range(k - 1, 0, -1)]
    T = [[0] * (n + 1) for _ in range(n + 1)]
    used = [set() for _ in range(n + 1)]
    free = [b for b in order if b in domains]

    def rec(pos: int):
        if pos == len(order):
            yield {b: T[b[0]][b[1]] for b in free}
            return
        i, k = order[pos]
        lo, hi = 0, float("inf")
        for j in range(i + 1, k):
            a, c = T[i][j], T[j][k]
            if a > c:
                a, c = c, a
            if a > lo:
                lo = a
            if c < hi:
                hi = c
        if (i, k) in domains:
            for v in domains[(i, k)]:
                if lo <= v <= hi and v not in used[k]:
                    T[i][k] = v
                    used[k].add(v)
                    yield from rec(pos + 1)
                    used[k].discard(v)
            T[i][k] = 0
        else:
            v = fixed.get((i, k), 0)
            if lo <= v <= hi:
                T[i][k] = v
                yield from rec(pos + 1)
                T[i][k] = 0

    yield from rec(0)


def iter_IT(w: Sequence[int]) -> Iterator[InversionsTableau]:
    """Lazily generate the inversions tableaux of ``w``."""
    d = diagram_of(w)
    domains = {(i, j): range(1, i + 1) for i, j in d.shaded}
    for entries in _search(d.n, domains, {}):
        yield InversionsTableau(d, entries)


def enumerate_IT(w: Sequence[int]) -> list:
    return sorted(iter_IT(w))


def enumerate_IT_bruteforce(w: Sequence[int]) -> list:
    """Filter every filling with entries bounded by the row index (small n only)."""
    d = diagram_of(w)
    boxes = list(d.shaded)
    out = []
    for values in product(*[range(1, i + 1) for i, _ in boxes]):
        entries = dict(zip(boxes, values))
        if is_inversions_tableau(d, entries):
            out.append(InversionsTableau(d, entries))
    return sorted(out)


def enumerate_UIT(w: Sequence[int], max_entry: int) -> list:
    """Unbounded inversions tableaux (IT1 and IT2 only) with entries ``<= max_entry``."""
    if max_entry < 1:
        raise ValueError("max_entry must be at least 1")
    d = diagram_of(w)
    domains = {b: range(1, max_entry + 1) for b in d.shaded}
    return sorted(InversionsTableau(d, e) for e in _search(d.n, domains, {}))


def lex_max_tableau(w: Sequence[int]) -> InversionsTableau:
    """Each shaded box holds its row index; weight ``x^code(w)``."""
    d = diagram_of(w)
    return InversionsTableau(d, {(i, j): i for i, j in d.shaded})


def lex_min_tableau(w: Sequence[int]) -> InversionsTableau:
    """Each column numbered ``1, 2, ...`` from the bottom up."""
    d = diagram_of(w)
    entries = {}
    for j in range(2, d.n + 1):
        for t, box in enumerate(d.column(j), 1):
            entries[box] = t
    return InversionsTableau(d, entries)


def balanced_extension(T) -> list:
    """Total order on all staircase boxes refining the entries of ``T``.

    Returns the boxes in increasing order (unshaded boxes first).  Labelling
    the boxes ``1, 2, ...`` in this order gives a balanced tableau.  Built
    from the top: starting at ``w_0`` we repeatedly strip a box that is a
    weak-order down-step and carries the largest remaining entry, taking the
    leftmost crossing first among ties (largest swapped value ``a`` on the
    way down, i.e. smallest letter on the way up).
    """
    n = T.n
    values = T.filling()
    u = longest(n)
    remaining = set(values)
    stripped = []
    while remaining:
        top = max(values[b] for b in remaining)
        pos = {v: p for p, v in enumerate(u, 1)}
        candidates = [(a, (pos[a + 1], pos[a])) for a in range(1, n)
                      if pos[a + 1] < pos[a] and values[(pos[a + 1], pos[a])] == top]
        if not candidates:
            raise ConsistencyError("filling is not weakly balanced; no extension exists")
        a, box = max(candidates)
        stripped.append(box)
        remaining.discard(box)
        u = swap_values(u, a)
    return stripped[::-1]


def maximal_chains(n: int) -> list:
    """Saturated chains from the identity to ``w_0`` in left weak order."""
    chains = []

    def rec(chain):
        w = chain[-1]
        pos = {v: p for p, v in enumerate(w, 1)}
        ups = [a for a in range(1, n) if pos[a] < pos[a + 1]]
        if not ups:
            chains.append(list(chain))
            return
        for a in ups:
            chain.append(swap_values(w, a))
            rec(chain)
            chain.pop()

    rec([Permutation(range(1, n + 1))])
    return chains


def chain_to_balanced(chain: Sequence) -> dict:
    """Label each box by the step at which it enters the inversion set."""
    chain = [Permutation(w) for w in chain]
    n = len(chain[0])
    if inversions(chain[0]) or inversions(chain[-1]) != frozenset(staircase(n)):
        raise InvtabError("chain must run from the identity to w0")
    labels = {}
    for step in range(1, len(chain)):
        new = inversions(chain[step]) - inversions(chain[step - 1])
        if len(new) != 1 or not inversions(chain[step - 1]) <= inversions(chain[step]):
            raise InvtabError(f"step {step} is not a weak-order cover")
        labels[next(iter(new))] = step
    return labels


def balanced_to_chain(labels: Mapping) -> list:
    boxes = sorted(labels, key=labels.get)
    n = max(j for _, j in boxes) if boxes else 1
    current = set()
    chain = [Permutation(range(1, n + 1))]
    for box in boxes:
        current.add(box)
        d = InversionsDiagram(n, tuple(current))
        if not d.is_valid():
            raise InvtabError("labels do not describe a chain of inversion sets")
        chain.append(d.permutation())
    return chain


def balanced_tableaux(n: int) -> list:
    """Brute force over all bijective labellings of the staircase."""
    boxes = staircase(n)
    out = []
    for labels in permutations(range(1, len(boxes) + 1)):
        filling = dict(zip(boxes, labels))
        if is_balanced(filling, n):
            out.append(filling)
    return out
