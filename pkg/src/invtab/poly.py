"""Exact sparse polynomials with integer coefficients, divided differences and
the Schur family (straight, flagged and skew), plus Schur expansion.

Exponent vectors have a fixed arity; arithmetic between different arities is
an error.  Use :meth:`SparsePolynomial.truncate` or :meth:`extend` to move
between them.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .exceptions import DimensionError, ExpansionError, InvtabError

__all__ = [
    "SparsePolynomial", "partition", "divided_difference", "ssyt", "schur",
    "flagged_schur", "skew_schur", "schur_expand", "lr_coefficient",
]


class SparsePolynomial:
    __slots__ = ("arity", "_terms", "_hash")

    def __init__(self, arity: int, terms: Optional[Mapping] = None):
        if arity < 0:
            raise ValueError("arity must be non-negative")
        self.arity = arity
        clean = {}
        for exp, coef in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != arity or any(e < 0 for e in exp):
                raise DimensionError(f"exponent {exp} does not have arity {arity}")
            coef = int(coef)
            if coef:
                clean[exp] = clean.get(exp, 0) + coef
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    # construction
    @classmethod
    def zero(cls, arity: int) -> "SparsePolynomial":
        return cls(arity)

    @classmethod
    def one(cls, arity: int) -> "SparsePolynomial":
        return cls(arity, {(0,) * arity: 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coef: int = 1) -> "SparsePolynomial":
        return cls(len(exp), {tuple(exp): coef})

    @classmethod
    def variable(cls, i: int, arity: int) -> "SparsePolynomial":
        exp = [0] * arity
        exp[i - 1] = 1
        return cls.monomial(exp)

    @classmethod
    def from_exponents(cls, arity: int, exps: Iterable[Sequence[int]]) -> "SparsePolynomial":
        """Sum of ``x^e`` over the given exponent vectors (with repetition)."""
        terms = {}
        for e in exps:
            e = tuple(e)
            terms[e] = terms.get(e, 0) + 1
        return cls(arity, terms)

    # access
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coefficient(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items(), reverse=True))

    def is_zero(self) -> bool:
        return not self._terms

    def leading_term(self) -> tuple:
        """Lex-greatest ``(exponent, coefficient)``, reading ``x_1`` first."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms)
        return e, self._terms[e]

    def trailing_term(self) -> tuple:
        if not self._terms:
            raise ValueError("zero polynomial has no trailing term")
        e = min(self._terms)
        return e, self._terms[e]

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    # arithmetic
    def _check(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        if other.arity != self.arity:
            raise DimensionError(f"arity mismatch: {self.arity} vs {other.arity}")
        return other

    def __add__(self, other):
        if isinstance(other, int):
            other = SparsePolynomial(self.arity, {(0,) * self.arity: other})
        if self._check(other) is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return SparsePolynomial(self.arity, terms)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial(self.arity, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return SparsePolynomial(self.arity, {e: c * other for e, c in self._terms.items()})
        if self._check(other) is NotImplemented:
            return NotImplemented
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return SparsePolynomial(self.arity, terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self == SparsePolynomial(self.arity, {(0,) * self.arity: other})
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.arity, frozenset(self._terms.items())))
        return self._hash

    # variable operations
    def swap(self, i: int) -> "SparsePolynomial":
        """Exchange ``x_i`` and ``x_{i+1}``."""
        if not 1 <= i < self.arity:
            raise ValueError(f"index {i} out of range for arity {self.arity}")
        terms = {}
        for e, c in self._terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            terms[tuple(e)] = c
        return SparsePolynomial(self.arity, terms)

    def is_symmetric(self, k: Optional[int] = None) -> bool:
        """Invariant under permutations of ``x_1..x_k`` (default: all variables)."""
        k = self.arity if k is None else k
        return all(self.swap(i) == self for i in range(1, k))

    def truncate(self, m: int) -> "SparsePolynomial":
        """Set ``x_{m+1}, x_{m+2}, ...`` to zero and drop them."""
        if m >= self.arity:
            return self.extend(m)
        return SparsePolynomial(m, {e[:m]: c for e, c in self._terms.items() if not any(e[m:])})

    def extend(self, arity: int) -> "SparsePolynomial":
        if arity < self.arity:
            raise DimensionError("extend cannot lower the arity")
        pad = (0,) * (arity - self.arity)
        return SparsePolynomial(arity, {e + pad: c for e, c in self._terms.items()})

    def evaluate(self, point: Sequence[int]) -> int:
        total = 0
        for e, c in self._terms.items():
            t = c
            for x, k in zip(point, e):
                t *= x ** k
            total += t
        return total

    # presentation
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self:
            mono = "*".join(
                f"x{i}" if k == 1 else f"x{i}^{k}" for i, k in enumerate(e, 1) if k
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"SparsePolynomial({self.arity}, {str(self)!r})"

    def to_json(self) -> dict:
        return {"arity": self.arity,
                "terms": [{"exp": list(e), "coef": c} for e, c in self]}

    @classmethod
    def from_json(cls, data: dict) -> "SparsePolynomial":
        return cls(int(data["arity"]), {tuple(t["exp"]): t["coef"] for t in data["terms"]})


def partition(parts: Iterable[int]) -> tuple:
    """Validate and normalise a partition (trailing zeros dropped)."""
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise InvtabError(f"not a partition: {p}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def divided_difference(f: SparsePolynomial, i: int) -> SparsePolynomial:
    """``(f - s_i f) / (x_i - x_{i+1})``, computed monomial by monomial."""
    if not 1 <= i < f.arity:
        raise ValueError(f"index {i} out of range for arity {f.arity}")
    terms = {}
    for e, c in f._terms.items():
        p, q = e[i - 1], e[i]
        if p == q:
            continue
        base = list(e)
        if p > q:
            sign, span = 1, range(p - q)
            pairs = ((p - 1 - t, q + t) for t in span)
        else:
            sign, span = -1, range(q - p)
            pairs = ((p + t, q - 1 - t) for t in span)
        for a, b in pairs:
            base[i - 1], base[i] = a, b
            key = tuple(base)
            terms[key] = terms.get(key, 0) + sign * c
    return SparsePolynomial(f.arity, terms)


def _cells(outer: Sequence[int], inner: Sequence[int]) -> list:
    inner = list(inner) + [0] * (len(outer) - len(inner))
    return [(r, c) for r in range(1, len(outer) + 1) for c in range(inner[r - 1] + 1, outer[r - 1] + 1)]


def ssyt(outer: Sequence[int], inner: Sequence[int] = (), max_entry: int = 1,
         flags: Optional[Sequence[int]] = None) -> Iterator[dict]:
    """Semistandard fillings of ``outer / inner``: rows weakly increase,
    columns strictly increase, row ``r`` bounded by ``flags[r-1]`` (or
    ``max_entry``).  Yields ``{(r, c): value}``."""
    outer, inner = partition(outer), partition(inner)
    if len(inner) > len(outer) or any(a > b for a, b in zip(inner, outer)):
        raise InvtabError(f"{inner} is not contained in {outer}")
    cells = _cells(outer, inner)
    cell_set = set(cells)
    if flags is not None and len(flags) < len(outer):
        raise InvtabError("need a flag for every row")
    bound = [flags[r] if flags is not None else max_entry for r in range(len(outer))]
    T = {}

    def rec(pos):
        if pos == len(cells):
            yield dict(T)
            return
        r, c = cells[pos]
        lo = 1
        if (r, c - 1) in cell_set:
            lo = max(lo, T[(r, c - 1)])
        if (r - 1, c) in cell_set:
            lo = max(lo, T[(r - 1, c)] + 1)
        for v in range(lo, bound[r - 1] + 1):
            T[(r, c)] = v
            yield from rec(pos + 1)
        T.pop((r, c), None)

    yield from rec(0)


def _content_sum(arity: int, tableaux: Iterable[dict]) -> SparsePolynomial:
    terms = {}
    for T in tableaux:
        e = [0] * arity
        for v in T.values():
            e[v - 1] += 1
        e = tuple(e)
        terms[e] = terms.get(e, 0) + 1
    return SparsePolynomial(arity, terms)


@lru_cache(maxsize=None)
def _schur(lam: tuple, k: int) -> SparsePolynomial:
    return _content_sum(k, ssyt(lam, (), k))


def schur(lam: Sequence[int], k: int) -> SparsePolynomial:
    """``s_lambda(x_1, ..., x_k)``."""
    return _schur(partition(lam), k)


def flagged_schur(lam: Sequence[int], flags: Sequence[int]) -> SparsePolynomial:
    """Sum over SSYT of shape ``lam`` with row ``i`` entries at most ``flags[i-1]``.

    The arity is the largest flag.
    """
    lam = partition(lam)
    flags = tuple(flags)
    if any(flags[i] > flags[i + 1] for i in range(len(flags) - 1)):
        raise InvtabError("flags must weakly increase")
    arity = max(flags, default=0)
    return _content_sum(arity, ssyt(lam, (), flags=flags))


def skew_schur(lam: Sequence[int], mu: Sequence[int], k: int) -> SparsePolynomial:
    return _content_sum(k, ssyt(lam, mu, k))


def schur_expand(f: SparsePolynomial, k: int) -> dict:
    """Coefficients ``c_lambda`` with ``f = sum c_lambda s_lambda(x_1..x_k)``."""
    if f.arity != k:
        raise ExpansionError(f"polynomial has arity {f.arity}, expected {k}")
    if not f.is_symmetric():
        raise ExpansionError("polynomial is not symmetric")
    out = {}
    rest = f
    while not rest.is_zero():
        e, c = rest.leading_term()
        if any(e[i] < e[i + 1] for i in range(k - 1)):
            raise ExpansionError(f"leading exponent {e} is not a partition")
        lam = partition(e)
        out[lam] = out.get(lam, 0) + c
        rest = rest - schur(lam, k) * c
    return dict(sorted(out.items(), reverse=True))


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Coefficient of ``s_lam`` in ``s_mu * s_nu``.

    Expanded in ``len(lam)`` variables: Schur polynomials of partitions with
    at most that many rows stay linearly independent there.
    """
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    k = max(len(lam), 1)
    if len(mu) > k or len(nu) > k:
        return 0
    return schur_expand(schur(mu, k) * schur(nu, k), k).get(lam, 0)
