"""Chute moves on pipe dreams, inversions tableaux and Lehmer tableaux, and the
chute-move poset.

A chute move ``C_ij`` pushes the crossing of pipes ``i < j`` from row ``a``
down to row ``b`` across a rectangle whose interior is all crosses.  Edges of
the poset point from ``P`` to ``C_ij P``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from hashlib import sha1
from typing import Sequence

from .exceptions import ConsistencyError, InvtabError, NoMoveError
from .perm import Permutation, lehmer_code, lehmer_code_by_values
from .pipedream import PipeDream, trace
from .pipedream import weight as pd_weight
from .tableau import InversionsTableau, is_inversions_tableau

__all__ = [
    "word_c", "extend_to_sn", "chute_moves_pd", "apply_chute_pd",
    "chute_moves_it", "apply_chute_it", "chute_target", "column_change",
    "LehmerTableau", "lehmer_tableau", "inverse_lehmer_tableau",
    "apply_chute_lehmer", "row_bound_equivalence", "code_to_partial_word",
    "top_pipe_dream", "enumerate_RP_by_chutes", "ChutePoset",
    "build_chute_poset", "is_lattice",
]


def word_c(T, c: int) -> tuple:
    """Entries of column ``c`` read bottom to top."""
    return T.column_word(c)


def extend_to_sn(u: Sequence[int], n: int) -> Permutation:
    """Append the values of ``1..n`` missing from ``u`` in increasing order."""
    u = tuple(u)
    if len(set(u)) != len(u):
        raise InvtabError(f"repeated entries in {u}")
    if any(not 1 <= v <= n for v in u):
        raise InvtabError(f"entries of {u} must lie in 1..{n}")
    seen = set(u)
    return Permutation(u + tuple(v for v in range(1, n + 1) if v not in seen))


# pipe dreams

def _pd_moves(P: PipeDream) -> dict:
    """``(i, j) -> (a, d, b, c)`` for every available move."""
    n = P.n
    s = set(P.crosses)
    _, tiles = trace(P)
    out = {}
    for a, d in P.crosses:
        c = d - 1
        while c >= 1 and (a, c) in s:
            c -= 1
        if c < 1:
            continue
        b = a + 1
        while (b, d) in s:
            b += 1
        if b + d > n + 1 or b + c > n or (b, c) in s:
            continue
        if all((r, col) in s for r in range(a + 1, b) for col in range(c, d + 1)) and \
                all((b, col) in s for col in range(c + 1, d)):
            h, v = tiles[(a, d)]
            out[(min(h, v), max(h, v))] = (a, d, b, c)
    return out


def chute_moves_pd(P: PipeDream) -> list:
    return sorted(_pd_moves(P))


def apply_chute_pd(P: PipeDream, i: int, j: int) -> PipeDream:
    moves = _pd_moves(P)
    if (i, j) not in moves:
        raise NoMoveError(f"no chute move on pipes {i}, {j}")
    a, d, b, c = moves[(i, j)]
    cells = set(P.crosses)
    cells.remove((a, d))
    cells.add((b, c))
    return PipeDream(P.n, tuple(cells))


def top_pipe_dream(w: Sequence[int]) -> PipeDream:
    """Crosses pushed to the top: column ``c`` holds rows ``1..code(w^-1)_c``."""
    w = Permutation(w)
    code = lehmer_code(w.inverse())
    return PipeDream(len(w), tuple((r, c) for c, k in enumerate(code, 1) for r in range(1, k + 1)))


def enumerate_RP_by_chutes(w: Sequence[int]) -> list:
    """Closure of the top pipe dream under chute moves."""
    start = top_pipe_dream(w)
    seen = {start}
    queue = deque([start])
    while queue:
        P = queue.popleft()
        for i, j in chute_moves_pd(P):
            Q = apply_chute_pd(P, i, j)
            if Q not in seen:
                seen.add(Q)
                queue.append(Q)
    return sorted(seen)


# inversions tableaux

def chute_target(T: InversionsTableau, i: int, j: int) -> dict:
    """Entries of the candidate ``C_ij T``, valid or not.

    ``T(i, j) = a`` becomes the least ``b > a`` absent from column ``j``
    below row ``i``; in every later column ``k`` with ``T(i, k) = a`` and
    ``T(j, k) = b`` the two entries trade places.
    """
    if (i, j) not in T.diagram:
        raise NoMoveError(f"box {(i, j)} is not shaded")
    a = T[(i, j)]
    below = {T[(r, j)] for r in range(1, i) if (r, j) in T.diagram}
    b = a + 1
    while b in below:
        b += 1
    entries = T.entries
    entries[(i, j)] = b
    for k in range(j + 1, T.n + 1):
        if (i, k) in T.diagram and (j, k) in T.diagram and T[(i, k)] == a and T[(j, k)] == b:
            entries[(i, k)], entries[(j, k)] = b, a
    return entries


def chute_moves_it(T: InversionsTableau) -> list:
    out = []
    for i, j in T.diagram.shaded:
        if is_inversions_tableau(T.diagram, chute_target(T, i, j)):
            out.append((i, j))
    return out


def apply_chute_it(T: InversionsTableau, i: int, j: int) -> InversionsTableau:
    entries = chute_target(T, i, j)
    if not is_inversions_tableau(T.diagram, entries):
        raise NoMoveError(f"no chute move C_{i}{j} on this tableau")
    return InversionsTableau(T.diagram, entries)


def column_change(before: Sequence[int], after: Sequence[int]):
    """Classify how a column word changed.

    Returns ``"same"``, ``("raise", p)`` when one letter ``u_p`` rose to an
    unused value with every value strictly between already used earlier,
    ``("trade", p, q)`` when ``u_p < u_q`` swapped with every value strictly
    between used before position ``p``, or ``None`` for anything else.
    Positions are 1-indexed.
    """
    before, after = tuple(before), tuple(after)
    if before == after:
        return "same"
    diff = [p for p in range(len(before)) if before[p] != after[p]]
    if len(before) != len(after):
        return None
    if len(diff) == 1:
        p = diff[0]
        u, b = before[p], after[p]
        if b > u and b not in before and all(x in before[:p] for x in range(u + 1, b)):
            return ("raise", p + 1)
        return None
    if len(diff) == 2:
        p, q = diff
        u, v = before[p], before[q]
        if after[p] == v and after[q] == u and u < v and all(x in before[:p] for x in range(u + 1, v)):
            return ("trade", p + 1, q + 1)
    return None


# Lehmer tableaux

class LehmerTableau(InversionsTableau):
    """Column words are Lehmer codes of the column words of an inversions tableau."""

    def __init__(self, diagram, entries):
        super().__init__(diagram, entries)
        if any(v < 0 for v in self._entries.values()):
            raise InvtabError("Lehmer tableau entries are non-negative")


def lehmer_tableau(T: InversionsTableau) -> LehmerTableau:
    entries = {}
    for c in range(2, T.n + 1):
        boxes = T.diagram.column(c)
        code = lehmer_code_by_values([T[b] for b in boxes])
        entries.update(zip(boxes, code))
    return LehmerTableau(T.diagram, entries)


def code_to_partial_word(code: Sequence[int]) -> tuple:
    """Inverse of the partial-permutation Lehmer code: each letter is the
    ``(c + 1)``-th smallest positive integer not used earlier."""
    used = set()
    word = []
    for c in code:
        if c < 0:
            raise InvtabError("code entries are non-negative")
        v, free = 0, -1
        while free < c:
            v += 1
            if v not in used:
                free += 1
        used.add(v)
        word.append(v)
    return tuple(word)


def inverse_lehmer_tableau(L: LehmerTableau) -> InversionsTableau:
    entries = {}
    for c in range(2, L.n + 1):
        boxes = L.diagram.column(c)
        entries.update(zip(boxes, code_to_partial_word([L[b] for b in boxes])))
    return InversionsTableau(L.diagram, entries)


def apply_chute_lehmer(L: LehmerTableau, i: int, j: int) -> LehmerTableau:
    return lehmer_tableau(apply_chute_it(inverse_lehmer_tableau(L), i, j))


def row_bound_equivalence(L: LehmerTableau, c: int) -> bool:
    """Whether ``L(i_p, c) <= i_p - p`` along column ``c`` (rows ``i_1 < i_2 < ...``).

    The same answer is recomputed on the code-inverted column (``T(i_p, c) <= i_p``);
    disagreement raises :class:`ConsistencyError`.
    """
    boxes = L.diagram.column(c)
    rows = [i for i, _ in boxes]
    if rows and c <= rows[-1]:
        raise InvtabError(f"column {c} must lie right of every shaded row")
    codes = [L[b] for b in boxes]
    lehmer_side = all(v <= i - p for p, (i, v) in enumerate(zip(rows, codes), 1))
    word = code_to_partial_word(codes)
    tableau_side = all(v <= i for i, v in zip(rows, word))
    if lehmer_side != tableau_side:
        raise ConsistencyError(f"row bounds disagree on column {c}")
    return lehmer_side


# poset

@dataclass
class ChutePoset:
    vertices: list
    edges: list  # (source index, target index, i, j)

    def __post_init__(self):
        m = len(self.vertices)
        succ = [[] for _ in range(m)]
        for s, t, _, _ in self.edges:
            succ[s].append(t)
        up = [0] * m
        for v in range(m):
            mask = 1 << v
            stack = [v]
            while stack:
                x = stack.pop()
                for y in succ[x]:
                    if not mask >> y & 1:
                        mask |= 1 << y
                        stack.append(y)
            up[v] = mask
        self._up = up

    def __len__(self):
        return len(self.vertices)

    def leq(self, x: int, y: int) -> bool:
        return bool(self._up[x] >> y & 1)

    def upset(self, x: int) -> int:
        return self._up[x]

    def to_json(self) -> dict:
        return {"vertices": [P.to_json() for P in self.vertices],
                "edges": [list(e) for e in self.edges]}

    def to_dot(self) -> str:
        lines = ["digraph chute {"]
        for k, P in enumerate(self.vertices):
            mono = "*".join(f"x{r}^{e}" if e > 1 else f"x{r}"
                            for r, e in enumerate(pd_weight(P), 1) if e) or "1"
            tag = sha1(json.dumps(P.to_json(), sort_keys=True).encode()).hexdigest()[:8]
            lines.append(f'  v{k} [label="{mono}\\n{tag}"];')
        for s, t, i, j in self.edges:
            lines.append(f'  v{s} -> v{t} [label="C_{{{i},{j}}}"];')
        lines.append("}")
        return "\n".join(lines)


def build_chute_poset(w: Sequence[int]) -> ChutePoset:
    from .pipedream import enumerate_RP

    vertices = enumerate_RP(w)
    index = {P: k for k, P in enumerate(vertices)}
    edges = []
    for k, P in enumerate(vertices):
        for i, j in chute_moves_pd(P):
            Q = apply_chute_pd(P, i, j)
            if Q not in index:
                raise ConsistencyError("chute move left the set of reduced pipe dreams")
            edges.append((k, index[Q], i, j))
    return ChutePoset(vertices, edges)


def is_lattice(poset: ChutePoset) -> bool:
    """Every pair has a least upper bound and a greatest lower bound."""
    m = len(poset)
    if m == 0:
        return False
    up = [poset.upset(x) for x in range(m)]
    down = [sum(1 << y for y in range(m) if up[y] >> x & 1) for x in range(m)]
    for x in range(m):
        for y in range(m):
            if x != y and up[x] >> y & 1 and up[y] >> x & 1:
                return False  # a cycle: not even a poset
    for x in range(m):
        for y in range(x + 1, m):
            for bounds, other in ((up[x] & up[y], up), (down[x] & down[y], down)):
                if not any(bounds >> z & 1 and bounds & other[z] == bounds for z in range(m)):
                    return False
    return True
