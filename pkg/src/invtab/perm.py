"""Permutations in one-line notation, inversion sets, Lehmer codes and the
orders used on them (weak, mediocre and strong Bruhat).

Positions and values are 1-indexed throughout.  A permutation is stored as a
tuple subclass, so ``w[0]`` is the value at position 1.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations, permutations
from typing import Iterable, Iterator, Optional, Sequence

from .exceptions import DimensionError, InvalidCodeError, NoCoverError

__all__ = [
    "Permutation", "identity", "longest", "all_permutations", "parse_permutation",
    "inversions", "length", "lehmer_code", "lehmer_code_by_values",
    "from_lehmer_code", "column_lehmer_code", "descents", "is_dominant",
    "is_grassmannian", "is_vexillary", "avoids_pattern", "weak_leq",
    "mediocre_covers", "mediocre_leq", "mediocre_leq_closure",
    "mediocre_cover_target", "bruhat_leq", "one_m_times", "swap_positions",
    "swap_values", "reduced_word_product",
]


class Permutation(tuple):
    """A permutation of ``1..n`` in one-line notation."""

    def __new__(cls, window: Iterable[int]):
        if isinstance(window, Permutation):
            return window
        w = tuple(int(x) for x in window)
        if not w or sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation of 1..n: {w!r}")
        return super().__new__(cls, w)

    @property
    def n(self) -> int:
        return len(self)

    def value(self, i: int) -> int:
        """Value at (1-indexed) position ``i``."""
        return self[i - 1]

    def position(self, v: int) -> int:
        return self.index(v) + 1

    def length(self) -> int:
        return length(self)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self, 1):
            inv[v - 1] = i
        return Permutation(inv)

    def __str__(self):
        if len(self) <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def __repr__(self):
        return f"Permutation({str(self)!r})"


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def longest(n: int) -> Permutation:
    return Permutation(range(n, 0, -1))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    for p in permutations(range(1, n + 1)):
        yield Permutation(p)


def parse_permutation(text: str) -> Permutation:
    """Parse ``"431562"`` (digits, n <= 9) or ``"4,3,1,5,6,2"``."""
    text = text.strip()
    if "," in text:
        return Permutation(int(t) for t in text.split(",") if t.strip())
    if not text.isdigit():
        raise ValueError(f"cannot parse permutation {text!r}")
    w = Permutation(int(ch) for ch in text)
    if len(w) > 9:
        raise ValueError("use comma-separated form for n > 9")
    return w


def inversions(w: Sequence[int]) -> frozenset:
    """Pairs of positions ``(i, j)``, ``i < j``, with ``w_i > w_j``."""
    n = len(w)
    return frozenset(
        (i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if w[i] > w[j]
    )


def length(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def lehmer_code(w: Sequence[int]) -> tuple:
    """``c_i = #{j > i : w_i > w_j}``; the last entry is always 0."""
    n = len(w)
    return tuple(sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n))


def lehmer_code_by_values(w: Sequence[int]) -> tuple:
    """Same code, counted as values below ``w_i`` not used by ``w_1..w_{i-1}``.

    Also valid for partial permutations (distinct positive integers), which is
    how column words of inversions tableaux are encoded.
    """
    seen = set()
    code = []
    for v in w:
        code.append(sum(1 for m in range(1, v) if m not in seen))
        seen.add(v)
    return tuple(code)


def from_lehmer_code(code: Sequence[int]) -> Permutation:
    n = len(code)
    for i, c in enumerate(code):
        if c < 0 or c > n - 1 - i:
            raise InvalidCodeError(f"entry {c} at position {i + 1} exceeds {n - 1 - i}")
    remaining = list(range(1, n + 1))
    return Permutation(remaining.pop(c) for c in code)


def column_lehmer_code(w: Sequence[int]) -> tuple:
    """``c_j = #{i < j : w_i > w_j}``: the number of shaded boxes in column j."""
    n = len(w)
    return tuple(sum(1 for i in range(j) if w[i] > w[j]) for j in range(n))


def descents(w: Sequence[int]) -> list:
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def avoids_pattern(w: Sequence[int], pattern: Sequence[int]) -> bool:
    """Naive subsequence scan."""
    k = len(pattern)
    if k > len(w):
        return True
    order = sorted(range(k), key=lambda t: pattern[t])
    for idx in combinations(range(len(w)), k):
        vals = [w[t] for t in idx]
        if all(vals[order[t]] < vals[order[t + 1]] for t in range(k - 1)):
            return False
    return True


def is_dominant(w: Sequence[int]) -> bool:
    """Lehmer code weakly decreasing (equivalently 132-avoiding)."""
    c = lehmer_code(w)
    return all(c[i] >= c[i + 1] for i in range(len(c) - 1))


def is_grassmannian(w: Sequence[int]) -> Optional[int]:
    """The unique descent ``k`` if ``w`` has exactly one, else ``None``."""
    d = descents(w)
    return d[0] if len(d) == 1 else None


def is_vexillary(w: Sequence[int]) -> bool:
    return avoids_pattern(w, (2, 1, 4, 3))


def _same_n(u, w):
    if len(u) != len(w):
        raise DimensionError(f"permutations of different sizes: {len(u)} and {len(w)}")


def weak_leq(u: Sequence[int], w: Sequence[int]) -> bool:
    """Left weak order: containment of inversion sets."""
    _same_n(u, w)
    return inversions(u) <= inversions(w)


def swap_positions(w: Sequence[int], i: int, j: int) -> Permutation:
    """``w t_{ij}``: exchange the entries at positions ``i`` and ``j``."""
    v = list(w)
    v[i - 1], v[j - 1] = v[j - 1], v[i - 1]
    return Permutation(v)


def swap_values(w: Sequence[int], a: int) -> Permutation:
    """``s_a w``: exchange the values ``a`` and ``a + 1``."""
    return Permutation(a + 1 if v == a else a if v == a + 1 else v for v in w)


def reduced_word_product(word: Sequence[int], n: int) -> Permutation:
    """``s_{a_1} s_{a_2} ... s_{a_l}`` as a permutation of ``1..n``.

    The rightmost generator acts first (left multiplication on values).
    """
    w = identity(n)
    for a in reversed(word):
        w = swap_values(w, a)
    return w


def mediocre_covers(u: Sequence[int], w: Sequence[int]) -> bool:
    """Covering relation of mediocre Bruhat order, checked from its definition."""
    _same_n(u, w)
    diff = [p for p in range(len(u)) if u[p] != w[p]]
    if len(diff) != 2:
        return False
    i, j = diff
    if w[i] != u[j] or w[j] != u[i] or not u[i] < u[j]:
        return False
    earlier = set(u[:i])
    return all(x in earlier for x in range(u[i] + 1, u[j]))


def mediocre_cover_target(u: Sequence[int], i: int) -> Permutation:
    """The unique cover ``u t_{ij}`` obtained by raising position ``i``.

    ``u_j`` is the smallest value to the right of position ``i`` that exceeds
    ``u_i``; the Lehmer code of the result is ``code(u) + e_i``.
    """
    u = Permutation(u)
    if not 1 <= i <= len(u):
        raise ValueError(f"position {i} out of range")
    later = [(u[k], k + 1) for k in range(i, len(u)) if u[k] > u[i - 1]]
    if not later:
        raise NoCoverError(f"no value to the right of position {i} exceeds {u[i - 1]}")
    _, j = min(later)
    return swap_positions(u, i, j)


def mediocre_leq(u: Sequence[int], w: Sequence[int]) -> bool:
    """Mediocre Bruhat comparison via componentwise Lehmer codes."""
    _same_n(u, w)
    return all(c <= d for c, d in zip(lehmer_code(u), lehmer_code(w)))


def mediocre_leq_closure(u: Sequence[int], w: Sequence[int]) -> bool:
    """Mediocre Bruhat comparison as reachability through covers.

    Independent of the Lehmer-code characterisation: every candidate
    ``v t_{ij}`` is tested against the covering definition.
    """
    _same_n(u, w)
    u, w = Permutation(u), Permutation(w)
    return w in mediocre_upset(u)


def mediocre_upset(u: Sequence[int]) -> frozenset:
    u = Permutation(u)
    n = len(u)
    seen = {u}
    queue = deque([u])
    while queue:
        v = queue.popleft()
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                t = swap_positions(v, i, j)
                if t not in seen and mediocre_covers(v, t):
                    seen.add(t)
                    queue.append(t)
    return frozenset(seen)


def bruhat_leq(u: Sequence[int], w: Sequence[int]) -> bool:
    """Strong Bruhat order by the rank-matrix criterion."""
    _same_n(u, w)
    n = len(u)
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            if sum(1 for a in range(i) if u[a] >= k) > sum(1 for a in range(i) if w[a] >= k):
                return False
    return True


def one_m_times(w: Sequence[int], m: int) -> Permutation:
    """``1^m x w = 1 2 ... m (w_1 + m) ... (w_n + m)``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return Permutation(list(range(1, m + 1)) + [v + m for v in w])
