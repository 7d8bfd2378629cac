"""Minimality of codewords and codes, decided three independent ways.

* ``definitional``: scan every codeword for one strictly covered by c(y).
* ``geometric``: c(y) is minimal iff the columns orthogonal to y span a
  (k-1)-dimensional space (full-rank defining sets only).
* ``ashikhmin-barg``: w_min / w_max > 1/2 suffices; otherwise inconclusive.

Witnesses are pairs (u, v) of coset representatives with
0 != c(v) ⪯ c(u) and c(v) != c(u).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from hiercode.code import (
    DEFAULT_MAX_K,
    DefiningSet,
    check_budget,
    codeword,
    codeword_table,
    covers,
    weight_distribution,
)
from hiercode.gf2 import BitVec, Projection, Vector, as_bits, kernel, parity, rank_at_least, reduce_to_full_rank

GEOMETRIC_MAX_K = 24


class Method(str, Enum):
    DEFINITIONAL = "definitional"
    GEOMETRIC = "geometric"
    ASHIKHMIN_BARG = "ashikhmin-barg"


class Result(str, Enum):
    MINIMAL = "minimal"
    NOT_MINIMAL = "not-minimal"
    INCONCLUSIVE = "inconclusive"


class RankDeficientError(ValueError):
    pass


class ZeroCodewordError(ValueError):
    pass


@dataclass(frozen=True)
class MinimalityVerdict:
    subject: str  # "code" or "codeword"
    method: Method
    result: Result
    witness: tuple[BitVec, BitVec] | None = None
    checked: int = 0

    @property
    def minimal(self) -> bool | None:
        if self.result is Result.INCONCLUSIVE:
            return None
        return self.result is Result.MINIMAL


def h_set(y: Vector, D: DefiningSet) -> list[BitVec]:
    """Columns of D orthogonal to y, in canonical order."""
    bits = as_bits(y, D.k)
    return [BitVec(D.k, d) for d in D.columns if not parity(bits & d)]


def _h_bits(y: int, columns) -> list[int]:
    return [d for d in columns if not parity(y & d)]


def _partner(u: int, D: DefiningSet, h: list[int] | None = None) -> int | None:
    """Least coset representative v with H(u, D) ⊆ H(v, D), c(v) not in {0, c(u)}.

    The v with H(u, D) ⊆ H(v, D) are exactly the vectors orthogonal to
    V(u, D), so only that orthogonal complement is searched.
    """
    if h is None:
        h = _h_bits(u, D.columns)
    perp = kernel(h, D.k)
    skip = {0, D.canonical(u)}
    best = None
    for v in perp.span():
        v = D.canonical(v)
        if v not in skip and (best is None or v < best):
            best = v
    return best


def _require_nonzero(y: int, D: DefiningSet) -> None:
    if D.dual.reduce(y) == 0:
        raise ZeroCodewordError(f"c({BitVec(D.k, y)}) is the zero codeword")


def _witness(D: DefiningSet, u: int, v: int) -> tuple[BitVec, BitVec]:
    return BitVec(D.k, u), BitVec(D.k, v)


def is_minimal_definitional(y: Vector, D: DefiningSet,
                            max_k: int | None = DEFAULT_MAX_K) -> MinimalityVerdict:
    """Scan all x in F_2^k for a nonzero c(x) ⪯ c(y) other than c(y)."""
    bits = as_bits(y, D.k)
    _require_nonzero(bits, D)
    check_budget("definitional check", D.k, max_k)
    cy = D.value(bits)
    wy = cy.bit_count()
    notcy = ~cy
    checked = 0
    # the first x reaching a codeword is the least element of its coset
    for x, cx in enumerate(codeword_table(D, max_k)):
        checked += 1
        if cx and cx & notcy == 0 and cx.bit_count() < wy:
            return MinimalityVerdict("codeword", Method.DEFINITIONAL, Result.NOT_MINIMAL,
                                     _witness(D, bits, x), checked)
    return MinimalityVerdict("codeword", Method.DEFINITIONAL, Result.MINIMAL, None, checked)


def is_minimal_geometric(y: Vector, D: DefiningSet) -> MinimalityVerdict:
    """Minimal iff dim Span(H(y, D)) = k - 1; needs rank(D) = k."""
    if not D.full_rank:
        raise RankDeficientError(
            f"rank {D.rank} < k = {D.k}; apply reduce_to_full_rank first")
    bits = as_bits(y, D.k)
    if bits == 0:
        raise ZeroCodewordError("y = 0 gives the zero codeword")
    h = _h_bits(bits, D.columns)
    if rank_at_least(h, D.k, D.k - 1):
        return MinimalityVerdict("codeword", Method.GEOMETRIC, Result.MINIMAL, None, 1)
    v = _partner(bits, D, h)
    return MinimalityVerdict("codeword", Method.GEOMETRIC, Result.NOT_MINIMAL,
                             _witness(D, bits, v), 1)


def _reduced(D: DefiningSet) -> tuple[DefiningSet, Projection]:
    vecs, proj = reduce_to_full_rank(D.columns, D.k)
    return DefiningSet.of(vecs, proj.r), proj


def _scan_definitional(D: DefiningSet, max_k: int | None) -> Iterator[tuple[int, int | None]]:
    check_budget("definitional check", D.k, max_k)
    reps = D.coset_representatives()
    vals = [D.value(x) for x in reps]
    weights = [v.bit_count() for v in vals]
    for i in range(1, len(reps)):
        cu, wu = vals[i], weights[i]
        notcu = ~cu
        partner = None
        for j in range(1, len(reps)):
            if weights[j] < wu and vals[j] & notcu == 0:
                partner = reps[j]
                break
        yield reps[i], partner


def _scan_geometric(D: DefiningSet, max_k: int | None) -> Iterator[tuple[int, int | None]]:
    check_budget("geometric check", D.k, max_k)
    if D.full_rank:
        red, proj = D, None
    else:
        red, proj = _reduced(D)
    target = red.k - 1
    cols = red.columns
    full = (1 << len(cols)) - 1
    for u in D.coset_representatives()[1:]:
        z = u if proj is None else proj.project(u)
        if rank_at_least(_zero_positions(~red.value(z) & full, cols), red.k, target):
            yield u, None
        else:
            # search in the original coordinates so v is a canonical representative
            yield u, _partner(u, D)


def _zero_positions(mask: int, cols: tuple[int, ...]) -> Iterator[int]:
    """Columns at the set bits of ``mask``, lazily, in canonical order."""
    while mask:
        low = mask & -mask
        yield cols[low.bit_length() - 1]
        mask ^= low


def _scan(D: DefiningSet, method: Method, max_k: int | None) -> Iterator[tuple[int, int | None]]:
    method = Method(method)
    if method is Method.DEFINITIONAL:
        return _scan_definitional(D, DEFAULT_MAX_K if max_k is None else max_k)
    if method is Method.GEOMETRIC:
        return _scan_geometric(D, GEOMETRIC_MAX_K if max_k is None else max_k)
    raise ValueError(f"{method.value} does not decide single codewords")


def codeword_verdicts(D: DefiningSet, method: Method | str,
                      max_k: int | None = None) -> list[MinimalityVerdict]:
    """One verdict per distinct nonzero codeword, in coset-representative order."""
    method = Method(method)
    out = []
    for u, v in _scan(D, method, max_k):
        if v is None:
            out.append(MinimalityVerdict("codeword", method, Result.MINIMAL, None, 1))
        else:
            out.append(MinimalityVerdict("codeword", method, Result.NOT_MINIMAL,
                                         _witness(D, u, v), 1))
    return out


def code_is_minimal(D: DefiningSet, method: Method | str = Method.GEOMETRIC,
                    max_k: int | None = None) -> MinimalityVerdict:
    """Minimal iff every distinct nonzero codeword is; stops at the first witness."""
    method = Method(method)
    if method is Method.ASHIKHMIN_BARG:
        return ashikhmin_barg_check(D, 20 if max_k is None else max_k)
    checked = 0
    for u, v in _scan(D, method, max_k):
        checked += 1
        if v is not None:
            return MinimalityVerdict("code", method, Result.NOT_MINIMAL, _witness(D, u, v), checked)
    return MinimalityVerdict("code", method, Result.MINIMAL, None, checked)


def ashikhmin_barg_check(D: DefiningSet, max_k: int | None = 20) -> MinimalityVerdict:
    """Sufficient condition only: never answers not-minimal."""
    wd = weight_distribution(D, max_k)
    checked = sum(wd.counts.values())
    if wd.counts and 2 * wd.w_min > wd.w_max:
        return MinimalityVerdict("code", Method.ASHIKHMIN_BARG, Result.MINIMAL, None, checked)
    return MinimalityVerdict("code", Method.ASHIKHMIN_BARG, Result.INCONCLUSIVE, None, checked)


def find_witness(D: DefiningSet, max_k: int | None = GEOMETRIC_MAX_K) -> tuple[BitVec, BitVec] | None:
    """First (u, v) in canonical order with H(u, D) ⊆ H(v, D), c(v) not in {0, c(u)}."""
    check_budget("witness search", D.k, max_k)
    for u in D.coset_representatives()[1:]:
        v = _partner(u, D)
        if v is not None:
            return _witness(D, u, v)
    return None


def validate_witness(D: DefiningSet, u: Vector, v: Vector) -> bool:
    """c(u) != 0, 0 != c(v) ⪯ c(u) and c(v) != c(u)."""
    cu, cv = codeword(u, D), codeword(v, D)
    return (not cu.is_zero() and not cv.is_zero()
            and cv.value != cu.value and covers(cu, cv))
