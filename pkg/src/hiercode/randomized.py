"""Random defining sets for cross-checking the deciders."""

from __future__ import annotations

import random

from hiercode.code import DefiningSet
from hiercode.minimality import Method, code_is_minimal, codeword_verdicts


def random_full_rank_set(rng: random.Random, k: int, extra: int | None = None) -> DefiningSet:
    """A random set of nonzero vectors of F_2^k spanning the whole space."""
    nonzero = range(1, 1 << k)
    while True:
        size = k + (rng.randint(0, min(2 * k, (1 << k) - 1 - k)) if extra is None else extra)
        D = DefiningSet.of(rng.sample(nonzero, min(size, len(nonzero))), k)
        if D.full_rank:
            return D


def random_nested_pair(rng: random.Random, k: int) -> tuple[DefiningSet, DefiningSet]:
    """M ⊆ N, both of rank k."""
    N = random_full_rank_set(rng, k)
    while True:
        size = rng.randint(k, len(N))
        M = DefiningSet.of(rng.sample(N.columns, size), k)
        if M.full_rank:
            return M, N


def verdicts_agree(D: DefiningSet) -> bool:
    """Per-codeword agreement of the geometric and definitional deciders."""
    geo = codeword_verdicts(D, Method.GEOMETRIC)
    dfn = codeword_verdicts(D, Method.DEFINITIONAL)
    return [(v.result, v.witness) for v in geo] == [(v.result, v.witness) for v in dfn]


def monotone(M: DefiningSet, N: DefiningSet) -> bool:
    """C(M) minimal implies C(N) minimal."""
    if code_is_minimal(M, Method.DEFINITIONAL).minimal:
        return bool(code_is_minimal(N, Method.DEFINITIONAL).minimal)
    return True
