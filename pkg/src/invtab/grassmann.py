"""Grassmannian and inverse-Grassmannian permutations.

For a ``k``-Grassmannian ``w = a_1 ... a_k b_1 ... b_{n-k}`` the shaded boxes
of an inversions tableau of ``w`` form a reverse SSYT of shape ``lambda_w``
hanging from box ``(k, k+1)``; for ``w^{-1}`` they form a flagged SSYT.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .diagram import diagram_of
from .exceptions import InvtabError, NotGrassmannianError
from .perm import Permutation, inversions, is_grassmannian
from .poly import SparsePolynomial, partition, ssyt
from .tableau import InversionsTableau, _search

__all__ = [
    "Tableau", "grassmannian_descent", "lambda_of", "enumerate_reverse_ssyt",
    "it_to_reverse_ssyt", "reverse_ssyt_to_it", "inverse_shape",
    "inverse_grassmannian_to_flagged", "flagged_to_inverse_grassmannian",
    "enumerate_skew_IT", "skew_schubert_G",
]


@dataclass(frozen=True, order=True)
class Tableau:
    """Filling of ``outer / inner``; ``reverse`` flips both row and column order."""
    outer: tuple
    entries: tuple  # sorted ((r, c), value) pairs
    inner: tuple = ()
    reverse: bool = False
    flags: Optional[tuple] = None

    @classmethod
    def build(cls, outer, entries: dict, inner=(), reverse=False, flags=None) -> "Tableau":
        return cls(partition(outer), tuple(sorted(entries.items())), partition(inner),
                   reverse, None if flags is None else tuple(flags))

    def as_dict(self) -> dict:
        return dict(self.entries)

    def rows(self) -> list:
        d = self.as_dict()
        inner = list(self.inner) + [0] * len(self.outer)
        return [[d[(r, c)] for c in range(inner[r - 1] + 1, lam + 1)]
                for r, lam in enumerate(self.outer, 1)]

    def weight(self, arity: int) -> tuple:
        e = [0] * arity
        for _, v in self.entries:
            e[v - 1] += 1
        return tuple(e)

    def is_valid(self) -> bool:
        d = self.as_dict()
        for (r, c), v in d.items():
            if v < 1:
                return False
            if self.flags is not None and v > self.flags[r - 1]:
                return False
            left, up = d.get((r, c - 1)), d.get((r - 1, c))
            if self.reverse:
                if (left is not None and left < v) or (up is not None and up <= v):
                    return False
            elif (left is not None and left > v) or (up is not None and up >= v):
                return False
        return True

    def to_json(self) -> dict:
        out = {"outer": list(self.outer), "inner": list(self.inner), "rows": self.rows()}
        if self.flags is not None:
            out["flags"] = list(self.flags)
        return out


def grassmannian_descent(w: Sequence[int], k: Optional[int] = None) -> int:
    d = is_grassmannian(w)
    if d is None or (k is not None and d != k):
        raise NotGrassmannianError(f"{Permutation(w)} is not Grassmannian" +
                                   ("" if k is None else f" with descent {k}"))
    return d


def lambda_of(w: Sequence[int], k: Optional[int] = None) -> tuple:
    """``(a_k - k, ..., a_2 - 2, a_1 - 1)``."""
    k = grassmannian_descent(w, k)
    return partition(w[i - 1] - i for i in range(k, 0, -1))


def enumerate_reverse_ssyt(lam: Sequence[int], k: int) -> list:
    out = [Tableau.build(lam, {cell: k + 1 - v for cell, v in T.items()}, reverse=True)
           for T in ssyt(lam, (), k)]
    return sorted(out)


def it_to_reverse_ssyt(T: InversionsTableau) -> Tableau:
    """Cell ``(r, c)`` of the shape holds the entry of box ``(k+1-r, k+c)``."""
    w = T.permutation()
    k = grassmannian_descent(w)
    lam = lambda_of(w, k)
    entries = {(r, c): T[(k + 1 - r, k + c)] for r, row in enumerate(lam, 1) for c in range(1, row + 1)}
    return Tableau.build(lam, entries, reverse=True)


def reverse_ssyt_to_it(R: Tableau, w: Sequence[int], k: int) -> InversionsTableau:
    w = Permutation(w)
    lam = lambda_of(w, k)
    if tuple(R.outer) != lam:
        raise InvtabError(f"shape {R.outer} does not match {lam}")
    entries = {(k + 1 - r, k + c): v for (r, c), v in R.entries}
    return InversionsTableau(diagram_of(w), entries)


def inverse_shape(w: Sequence[int], k: Optional[int] = None) -> tuple:
    """Shape ``(k + i - b_i)`` and flags ``b`` (trimmed to its length) for ``w^{-1}``."""
    k = grassmannian_descent(w, k)
    b = list(w[k:])
    lam = partition(max(k + i - bi, 0) for i, bi in enumerate(b, 1))
    return lam, tuple(b[:len(lam)])


def inverse_grassmannian_to_flagged(T: InversionsTableau, w: Sequence[int], k: Optional[int] = None) -> Tableau:
    """Cell ``(i, c)`` holds the entry of box ``(b_i, a_{k+1-c})`` of ``T``."""
    w = Permutation(w)
    k = grassmannian_descent(w, k)
    if T.permutation() != w.inverse():
        raise InvtabError("tableau does not belong to the inverse permutation")
    a, b = w[:k], w[k:]
    lam, flags = inverse_shape(w, k)
    entries = {(i, c): T[(b[i - 1], a[k - c])] for i, row in enumerate(lam, 1) for c in range(1, row + 1)}
    return Tableau.build(lam, entries, flags=flags)


def flagged_to_inverse_grassmannian(F: Tableau, w: Sequence[int], k: Optional[int] = None) -> InversionsTableau:
    w = Permutation(w)
    k = grassmannian_descent(w, k)
    a, b = w[:k], w[k:]
    lam, _ = inverse_shape(w, k)
    if tuple(F.outer) != lam:
        raise InvtabError(f"shape {F.outer} does not match {lam}")
    entries = {(b[i - 1], a[k - c]): v for (i, c), v in F.entries}
    return InversionsTableau(diagram_of(w.inverse()), entries)


def _check_pair(w, u, k):
    w, u = Permutation(w), Permutation(u)
    if len(w) != len(u):
        raise InvtabError("permutations of different sizes")
    grassmannian_descent(w, k)
    if u != Permutation(range(1, len(u) + 1)):
        grassmannian_descent(u, k)
    if not inversions(u) <= inversions(w):
        raise InvtabError(f"{u} is not below {w} in weak order")
    return w, u


def enumerate_skew_IT(w: Sequence[int], u: Sequence[int], k: int) -> list:
    """Fillings of ``Inv(w) - Inv(u)`` with entries ``1..k``.

    The boxes of ``Inv(u)`` are pinned to ``k``.  The composite filling must
    obey the rectangle rule, and the free entries must be distinct within
    each column.  Returns ``{box: entry}`` dicts over the free boxes.
    """
    w, u = _check_pair(w, u, k)
    pinned = inversions(u)
    free = sorted(inversions(w) - pinned)
    domains = {b: range(1, k + 1) for b in free}
    return sorted(_search(len(w), domains, {b: k for b in pinned}), key=lambda d: sorted(d.items()))


def skew_schubert_G(w: Sequence[int], u: Sequence[int], k: int) -> SparsePolynomial:
    exps = []
    for filling in enumerate_skew_IT(w, u, k):
        e = [0] * k
        for v in filling.values():
            e[v - 1] += 1
        exps.append(e)
    return SparsePolynomial.from_exponents(k, exps)
