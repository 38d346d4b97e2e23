"""Schubert polynomials by three routes, extremal monomials and Stanley truncations."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .perm import Permutation, column_lehmer_code, lehmer_code, one_m_times, swap_positions
from .pipedream import enumerate_RP, weight as pd_weight
from .poly import SparsePolynomial, divided_difference
from .tableau import enumerate_IT, enumerate_UIT

__all__ = [
    "schubert_dd", "schubert_from_tableaux", "schubert_from_pipedreams",
    "lex_max_monomial", "lex_min_monomial", "stanley_truncated",
    "stanley_via_schubert", "monomial_order_key", "extreme_terms",
]


@lru_cache(maxsize=None)
def _dd(w: Permutation, last: bool) -> SparsePolynomial:
    n = len(w)
    ascents = [i for i in range(1, n) if w[i - 1] < w[i]]
    if not ascents:
        return SparsePolynomial.monomial(tuple(range(n - 1, -1, -1)))
    i = ascents[-1] if last else ascents[0]
    return divided_difference(_dd(swap_positions(w, i, i + 1), last), i)


def schubert_dd(w: Sequence[int], path: str = "first") -> SparsePolynomial:
    """``S_w`` from ``S_{w_0} = x_1^{n-1} ... x_{n-1}`` by divided differences.

    ``S_w = d_i S_{w s_i}`` for an ascent ``i`` of ``w``; ``path`` picks the
    first or last ascent at every step, giving two different routes.
    """
    if path not in ("first", "last"):
        raise ValueError("path must be 'first' or 'last'")
    return _dd(Permutation(w), path == "last")


def schubert_from_tableaux(w: Sequence[int]) -> SparsePolynomial:
    w = Permutation(w)
    return SparsePolynomial.from_exponents(len(w), (T.weight() for T in enumerate_IT(w)))


def schubert_from_pipedreams(w: Sequence[int]) -> SparsePolynomial:
    w = Permutation(w)
    return SparsePolynomial.from_exponents(len(w), (pd_weight(P) for P in enumerate_RP(w)))


def monomial_order_key(exp: Sequence[int]) -> tuple:
    """Lexicographic comparison starting from the last variable.

    This is the order in which ``x^code(w)`` is the top monomial of ``S_w``;
    for ``S_132 = x_1 + x_2`` it ranks ``x_2`` above ``x_1``.
    """
    return tuple(reversed(exp))


def extreme_terms(f: SparsePolynomial) -> tuple:
    """``((top exponent, coefficient), (bottom exponent, coefficient))``."""
    terms = f.terms
    if not terms:
        raise ValueError("zero polynomial has no extreme terms")
    hi = max(terms, key=monomial_order_key)
    lo = min(terms, key=monomial_order_key)
    return (hi, terms[hi]), (lo, terms[lo])


def lex_max_monomial(w: Sequence[int]) -> tuple:
    return tuple(lehmer_code(w))


def lex_min_monomial(w: Sequence[int]) -> tuple:
    cc = column_lehmer_code(w)
    return tuple(sum(1 for c in cc if c >= i) for i in range(1, len(cc) + 1))


def stanley_truncated(w: Sequence[int], m: int) -> SparsePolynomial:
    """``F_w(x_1, ..., x_m)`` summed over unbounded inversions tableaux."""
    if m < 1:
        raise ValueError("m must be at least 1")
    exps = []
    for T in enumerate_UIT(w, m):
        e = [0] * m
        for v in T.entries.values():
            e[v - 1] += 1
        exps.append(e)
    return SparsePolynomial.from_exponents(m, exps)


def stanley_via_schubert(w: Sequence[int], m: int, shift: int) -> SparsePolynomial:
    """``S_{1^shift x w}`` with ``x_{m+1}, ...`` set to zero."""
    return schubert_dd(one_m_times(w, shift)).truncate(m)
