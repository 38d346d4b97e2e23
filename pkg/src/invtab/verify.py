"""Property checks over all of S_n, grouped into suites for the ``verify`` command.

Each check returns ``(ok, detail)``; :func:`run_suite` yields
``(name, ok, detail)`` in a fixed order.
"""

from __future__ import annotations

import random
from itertools import islice
from typing import Callable, Iterator

from .chute import (
    apply_chute_it, apply_chute_lehmer, apply_chute_pd, build_chute_poset,
    chute_moves_it, chute_moves_pd, column_change, enumerate_RP_by_chutes,
    is_lattice, lehmer_tableau, row_bound_equivalence,
)
from .diagram import diagram_of, is_dominant_shape, is_downward_closed, staircase
from .grassmann import (
    enumerate_reverse_ssyt, flagged_to_inverse_grassmannian,
    inverse_grassmannian_to_flagged, inverse_shape, it_to_reverse_ssyt,
    lambda_of, reverse_ssyt_to_it, skew_schubert_G,
)
from .perm import (
    all_permutations, avoids_pattern, identity, is_dominant,
    is_grassmannian, lehmer_code, length, mediocre_leq, mediocre_upset, weak_leq,
)
from .pipedream import compatible_pair, enumerate_RP, phi, phi_inverse, pipe_dream_from_rows, weight
from .poly import SparsePolynomial, flagged_schur, lr_coefficient, schur, schur_expand, skew_schur
from .schubert import (
    lex_max_monomial, lex_min_monomial, schubert_dd, schubert_from_pipedreams,
    schubert_from_tableaux, stanley_truncated, stanley_via_schubert, extreme_terms,
)
from .tableau import (
    balanced_tableaux, enumerate_IT, enumerate_IT_bruteforce, enumerate_UIT,
    is_inversions_tableau, is_weakly_balanced, iter_IT, maximal_chains,
    chain_to_balanced, satisfies_rectangle_rule,
)

__all__ = ["SUITES", "run_suite"]


def _first_failure(items: Iterator, test: Callable) -> tuple:
    for x in items:
        if not test(x):
            return False, f"fails at {x}"
    return True, ""


def check_balance_rectangle(n):
    rng = random.Random(n)
    boxes = staircase(n)
    fillings = (dict(zip(boxes, (rng.randrange(n + 1) for _ in boxes))) for _ in range(2000))
    return _first_failure(fillings, lambda f: is_weakly_balanced(f, n) == satisfies_rectangle_rule(f, n))


def check_it3_forms(n):
    def agree(w):
        d = diagram_of(w)
        return all(is_inversions_tableau(d, T.entries, "IT3") == is_inversions_tableau(d, T.entries, "IT3'")
                   for T in enumerate_UIT(w, n))
    return _first_failure(all_permutations(min(n, 5)), agree)


def check_bruteforce(n):
    return _first_failure(all_permutations(min(n, 4)), lambda w: enumerate_IT(w) == enumerate_IT_bruteforce(w))


def check_chains(n):
    m = min(n, 4)
    chains = maximal_chains(m)
    labels = {tuple(sorted(chain_to_balanced(c).items())) for c in chains}
    balanced = {tuple(sorted(b.items())) for b in balanced_tableaux(m)}
    return labels == balanced, f"{len(labels)} chains, {len(balanced)} balanced"


def check_triple(n):
    return _first_failure(all_permutations(n), lambda w: schubert_dd(w) == schubert_from_tableaux(w)
                          == schubert_from_pipedreams(w))


def check_paths(n):
    return _first_failure(all_permutations(n), lambda w: schubert_dd(w) == schubert_dd(w, "last"))


def check_bijection(n):
    def ok(w):
        for P in enumerate_RP(w):
            T = phi(P)
            if weight(P) != T.weight() or phi_inverse(T) != P or pipe_dream_from_rows(T) != P:
                return False
            if not compatible_pair(T).is_compatible(w):
                return False
        return True
    return _first_failure(all_permutations(n), ok)


def check_extremal(n):
    def ok(w):
        f = schubert_dd(w)
        hi, lo = lex_max_monomial(w), lex_min_monomial(w)
        return extreme_terms(f) == ((hi, 1), (lo, 1))
    return _first_failure(all_permutations(n), ok)


def check_dominance(n):
    def ok(w):
        d = diagram_of(w)
        flags = {
            is_dominant(w), avoids_pattern(w, (1, 3, 2)), is_downward_closed(d),
            is_dominant_shape(d),
            len(list(islice(iter_IT(w), 2))) == 1
            and schubert_dd(w) == SparsePolynomial.monomial(lehmer_code(w)),
        }
        return len(flags) == 1
    return _first_failure(all_permutations(n), ok)


def check_mediocre(n):
    m = min(n, 5)
    perms = list(all_permutations(m))
    return _first_failure(perms, lambda u: all((v in mediocre_upset(u)) == mediocre_leq(u, v) for v in perms))


def check_stanley(n):
    def ok(w):
        for m in (1, 2, 3):
            F = stanley_truncated(w, m)
            if not F.is_symmetric():
                return False
            low = max(length(w), m - 1)
            if any(F != stanley_via_schubert(w, m, N) for N in (low, low + 1)):
                return False
        return True
    return _first_failure(all_permutations(min(n, 4)), ok)


def _grassmannians(n):
    return [w for w in all_permutations(n) if is_grassmannian(w)]


def check_grassmann_schur(n):
    def ok(w):
        k = is_grassmannian(w)
        lam = lambda_of(w, k)
        if schubert_dd(w) != schur(lam, k).extend(n):
            return False
        tabs = enumerate_IT(w)
        rs = [it_to_reverse_ssyt(T) for T in tabs]
        return (sorted(rs) == enumerate_reverse_ssyt(lam, k)
                and all(reverse_ssyt_to_it(R, w, k) == T for R, T in zip(rs, tabs)))
    return _first_failure(_grassmannians(n), ok)


def check_inverse_grassmann(n):
    def ok(w):
        k = is_grassmannian(w)
        lam, flags = inverse_shape(w, k)
        winv = w.inverse()
        target = flagged_schur(lam, flags).extend(n) if flags else SparsePolynomial.one(n)
        if schubert_dd(winv) != target:
            return False
        for T in enumerate_IT(winv):
            F = inverse_grassmannian_to_flagged(T, w, k)
            if not F.is_valid() or flagged_to_inverse_grassmannian(F, w, k) != T:
                return False
        return True
    return _first_failure(_grassmannians(n), ok)


def check_skew(n):
    m = min(n, 6)
    grass = _grassmannians(m)
    e = identity(m)

    def ok(pair):
        w, u = pair
        k = is_grassmannian(w)
        lw = lambda_of(w, k)
        lu = lambda_of(u, k) if u != e else ()
        G = skew_schubert_G(w, u, k)
        if G != skew_schur(lw, lu, k):
            return False
        total = SparsePolynomial.zero(k)
        for nu, c in schur_expand(G, k).items():
            if lr_coefficient(lw, lu, nu) != c:
                return False
            total = total + schur(nu, k) * c
        return total == G

    pairs = [(w, u) for w in grass for u in grass + [e]
             if (u == e or is_grassmannian(u) == is_grassmannian(w)) and weak_leq(u, w)]
    return _first_failure(pairs, ok)


def check_chute_square(n):
    m = min(n, 5)

    def ok(w):
        for P in enumerate_RP(w):
            T = phi(P)
            if chute_moves_pd(P) != chute_moves_it(T):
                return False
            for i, j in chute_moves_pd(P):
                Q, T2 = apply_chute_pd(P, i, j), apply_chute_it(T, i, j)
                if phi(Q) != T2 or phi_inverse(T2) != Q:
                    return False
                L, L2 = lehmer_tableau(T), lehmer_tableau(T2)
                if apply_chute_lehmer(L, i, j) != L2 or any(L[b] > L2[b] for b in T.diagram):
                    return False
                kinds = [column_change(T.column_word(c), T2.column_word(c)) for c in range(2, w.n + 1)]
                changed = [k for k in kinds if k != "same"]
                if None in kinds or not changed or changed[0][0] != "raise" or \
                        any(k[0] != "trade" for k in changed[1:]):
                    return False
        return True
    return _first_failure(all_permutations(m), ok)


def check_chute_closure(n):
    return _first_failure(all_permutations(min(n, 5)), lambda w: enumerate_RP_by_chutes(w) == enumerate_RP(w))


def check_lattice(n):
    return _first_failure(all_permutations(min(n, 5)), lambda w: is_lattice(build_chute_poset(w)))


def check_row_bound(n):
    def ok(w):
        for T in enumerate_IT(w):
            L = lehmer_tableau(T)
            if not all(row_bound_equivalence(L, c) for c in range(2, w.n + 1)):
                return False
        return True
    return _first_failure(all_permutations(min(n, 5)), ok)


SUITES = {
    "core": [
        ("weakly balanced equals rectangle rule", check_balance_rectangle),
        ("two forms of the third tableau rule agree", check_it3_forms),
        ("backtracking enumeration matches brute force", check_bruteforce),
        ("maximal chains match balanced tableaux", check_chains),
        ("three Schubert routes agree", check_triple),
        ("divided difference paths agree", check_paths),
        ("pipe dream bijection round trips", check_bijection),
        ("extremal monomials", check_extremal),
        ("dominance conditions coincide", check_dominance),
        ("mediocre order equals code comparison", check_mediocre),
        ("Stanley truncations stabilise", check_stanley),
    ],
    "grassmann": [
        ("Grassmannian Schubert equals Schur", check_grassmann_schur),
        ("inverse Grassmannian equals flagged Schur", check_inverse_grassmann),
        ("skew identity and LR expansion", check_skew),
    ],
    "chute": [
        ("chute moves commute with the bijection", check_chute_square),
        ("chute closure generates all pipe dreams", check_chute_closure),
        ("chute posets are lattices", check_lattice),
        ("Lehmer row bound", check_row_bound),
    ],
}


def run_suite(n: int, suite: str = "all") -> Iterator[tuple]:
    if n < 1:
        raise ValueError("n must be positive")
    names = list(SUITES) if suite == "all" else [suite]
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {suite!r}")
        for label, check in SUITES[name]:
            ok, detail = check(n)
            yield f"{name}: {label}", ok, detail
