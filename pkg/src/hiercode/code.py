"""Binary linear codes C(D) = {(x.d_1, ..., x.d_N) : x in F_2^k}."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from hiercode.gf2 import BitVec, DimensionError, EchelonBasis, Vector, as_bits, kernel, parity

DEFAULT_MAX_K = 16


class BudgetExceeded(RuntimeError):
    """An exhaustive scan would exceed the configured dimension budget."""

    def __init__(self, what: str, k: int, limit: int, scanned: int = 0):
        super().__init__(f"{what}: k={k} exceeds budget {limit} (scanned {scanned})")
        self.k = k
        self.limit = limit
        self.scanned = scanned


def check_budget(what: str, k: int, limit: int | None) -> None:
    if limit is not None and k > limit:
        raise BudgetExceeded(what, k, limit)


@dataclass(frozen=True, eq=False)
class DefiningSet:
    """Distinct column vectors of F_2^k, sorted ascending.

    Duplicate columns only repeat coordinates of every codeword, which never
    changes supports up to relabelling, so they are dropped on construction.
    """

    k: int
    columns: tuple[int, ...]

    def __post_init__(self):
        if list(self.columns) != sorted(set(self.columns)):
            raise ValueError("columns must be distinct and ascending; use DefiningSet.of")
        for c in self.columns:
            as_bits(c, self.k)

    @classmethod
    def of(cls, vectors: Iterable[Vector], k: int) -> DefiningSet:
        return cls(k, tuple(sorted({as_bits(v, k) for v in vectors})))

    @classmethod
    def from_strings(cls, lines: Iterable[str]) -> DefiningSet:
        vecs = [BitVec.from_str(s) for s in lines if s.strip()]
        if not vecs:
            raise ValueError("empty defining set")
        widths = {v.width for v in vecs}
        if len(widths) != 1:
            raise DimensionError(f"mixed vector lengths {sorted(widths)}")
        return cls.of(vecs, widths.pop())

    def __eq__(self, other):
        if not isinstance(other, DefiningSet):
            return NotImplemented
        return self.k == other.k and self.columns == other.columns

    def __hash__(self):
        return hash((self.k, self.columns))

    def __len__(self) -> int:
        return len(self.columns)

    @property
    def vectors(self) -> list[BitVec]:
        return [BitVec(self.k, c) for c in self.columns]

    @cached_property
    def span(self) -> EchelonBasis:
        return EchelonBasis(self.k, self.columns)

    @property
    def rank(self) -> int:
        return self.span.dim

    @property
    def full_rank(self) -> bool:
        return self.rank == self.k

    @cached_property
    def dual(self) -> EchelonBasis:
        """{x : c(x) = 0}; coefficient vectors giving the zero codeword."""
        return kernel(self.columns, self.k)

    @cached_property
    def generator_rows(self) -> tuple[int, ...]:
        """Row i is c(e_{i+1}) as a mask over the N column positions."""
        rows = [0] * self.k
        for j, d in enumerate(self.columns):
            for i in range(self.k):
                if d >> i & 1:
                    rows[i] |= 1 << j
        return tuple(rows)

    def value(self, x: int) -> int:
        """c(x) as a mask over column positions (bit j = column j + 1)."""
        out = 0
        for i, row in enumerate(self.generator_rows):
            if x >> i & 1:
                out ^= row
        return out

    def coset_representatives(self) -> list[int]:
        """The least x of each coset of the dual, ascending; 2^rank of them."""
        pivmask = self.dual.pivot_mask
        free = [i for i in range(self.k) if not pivmask >> i & 1]
        reps = [0]
        # free positions ascending, so each doubling step stays sorted
        for pos in free:
            reps += [x | 1 << pos for x in reps]
        return reps

    def canonical(self, x: int) -> int:
        """The coset representative of x (same codeword, least integer)."""
        return self.dual.reduce(x)


def codeword_table(D: DefiningSet, max_k: int | None = DEFAULT_MAX_K) -> list[int]:
    """c(x) for every x in F_2^k, indexed by x."""
    check_budget("codeword table", D.k, max_k)
    table = [0]
    for row in D.generator_rows:
        table += [v ^ row for v in table]
    return table


@dataclass(frozen=True)
class Codeword:
    x: BitVec
    value: int
    code: DefiningSet = field(repr=False, compare=False)

    @property
    def length(self) -> int:
        return len(self.code)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(j + 1 for j in range(self.length) if self.value >> j & 1)

    @property
    def weight(self) -> int:
        return self.value.bit_count()

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return "".join("1" if self.value >> j & 1 else "0" for j in range(self.length))


def codeword(x: Vector, D: DefiningSet) -> Codeword:
    bits = as_bits(x, D.k)
    value = 0
    for j, d in enumerate(D.columns):
        if parity(bits & d):
            value |= 1 << j
    return Codeword(BitVec(D.k, bits), value, D)


def covers(c: Codeword, b: Codeword) -> bool:
    """True iff Suppt(b) ⊆ Suppt(c)."""
    if c.code is not b.code and c.code != b.code:
        raise ValueError("codewords come from different defining sets")
    return b.value & ~c.value == 0


@dataclass(frozen=True)
class WeightDistribution:
    counts: dict[int, int]

    @property
    def w_min(self) -> int | None:
        return min(self.counts) if self.counts else None

    @property
    def w_max(self) -> int | None:
        return max(self.counts) if self.counts else None


def weight_distribution(D: DefiningSet, max_k: int | None = 20) -> WeightDistribution:
    """Weights of the distinct nonzero codewords."""
    check_budget("weight distribution", D.rank, max_k)
    counts: dict[int, int] = {}
    for x in D.coset_representatives()[1:]:
        w = D.value(x).bit_count()
        counts[w] = counts.get(w, 0) + 1
    return WeightDistribution(dict(sorted(counts.items())))


def generator_matrix(D: DefiningSet) -> list[int]:
    """k rows; row i is c(e_i) as a column-position mask."""
    return list(D.generator_rows)


def format_generator_matrix(D: DefiningSet) -> str:
    """One '0'/'1' line per row, columns in canonical order."""
    n = len(D)
    lines = ["".join("1" if row >> j & 1 else "0" for j in range(n)) for row in D.generator_rows]
    return "\n".join(lines) + ("\n" if lines else "")
