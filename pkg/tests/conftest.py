from hypothesis import strategies as st

from invtab.perm import Permutation


def perms(min_n=1, max_n=6):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(Permutation)
    )
