"""Two-level hierarchical posets H(m, n), their order ideals and defining sets.

Elements 1..m form the lower level U and m+1..n the upper level V. A subset
of [n] is stored as ``(beta, gamma)`` with ``beta`` over U and ``gamma`` over
V in local coordinates, so global label ``m + j`` is bit ``j - 1`` of gamma.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from hiercode.gf2 import BitVec


class FamilyError(ValueError):
    """An ideal family that is not a legal construction input."""


@dataclass(frozen=True)
class HierarchicalPoset:
    m: int
    l: int  # noqa: E741

    def __post_init__(self):
        if self.m < 1 or self.l < 1:
            raise ValueError(f"need m >= 1 and l >= 1, got m={self.m}, l={self.l}")

    @property
    def n(self) -> int:
        return self.m + self.l

    @property
    def lower_mask(self) -> int:
        return (1 << self.m) - 1

    @property
    def upper_mask(self) -> int:
        return (1 << self.l) - 1

    def split(self, v: int) -> tuple[int, int]:
        return v & self.lower_mask, v >> self.m

    def join(self, beta: int, gamma: int) -> int:
        return beta | gamma << self.m

    def leq(self, i: int, j: int) -> bool:
        """The order relation on global labels."""
        if i == j:
            return True
        return i <= self.m < j


@dataclass(frozen=True)
class OrderIdeal:
    """The ideal A ∪ B, with ``beta`` = A and ``gamma`` = B (local labels)."""

    poset: HierarchicalPoset
    beta: BitVec
    gamma: BitVec

    def __post_init__(self):
        if self.beta.width != self.poset.m or self.gamma.width != self.poset.l:
            raise ValueError("beta/gamma widths do not match the poset")
        if not self.gamma.is_zero() and self.beta.bits != self.poset.lower_mask:
            raise ValueError(f"({self.beta}, {self.gamma}) is not an order ideal")

    @property
    def full_top(self) -> bool:
        """True for ideals [m] ∪ B with B nonempty, the construction inputs."""
        return not self.gamma.is_zero()

    @property
    def vector(self) -> BitVec:
        return self.beta.concat(self.gamma)

    def labels(self) -> list[int]:
        return list(self.vector.support)


@dataclass(frozen=True)
class IdealFamily:
    """Ideals I_i = [m] ∪ B_i, stored as the sorted distinct B_i masks."""

    poset: HierarchicalPoset
    b_sets: tuple[BitVec, ...] = field(default=())

    def __post_init__(self):
        if not self.b_sets:
            raise FamilyError("a family needs at least one ideal")
        for b in self.b_sets:
            if b.width != self.poset.l:
                raise FamilyError(f"B set {b} has width {b.width}, expected {self.poset.l}")
            if b.is_zero():
                raise FamilyError("B sets must be nonempty")
        if list(self.b_sets) != sorted(set(self.b_sets)):
            raise FamilyError("B sets must be distinct and sorted; use IdealFamily.create")

    @classmethod
    def create(cls, poset: HierarchicalPoset, b_sets: Iterable[BitVec | int],
               drop_redundant: bool = False) -> IdealFamily:
        vecs = {b if isinstance(b, BitVec) else BitVec(poset.l, b) for b in b_sets}
        if drop_redundant:
            vecs = {b for b in vecs
                    if not any(b != c and b.bits & ~c.bits == 0 for c in vecs)}
        return cls(poset, tuple(sorted(vecs)))

    @classmethod
    def from_labels(cls, poset: HierarchicalPoset, ideals: Iterable[Iterable[int]],
                    drop_redundant: bool = False) -> IdealFamily:
        """Build from global upper-level labels, e.g. ``[[3], [3, 4]]``."""
        b_sets = []
        for labels in ideals:
            labels = list(labels)
            if not labels:
                raise FamilyError("empty ideal in family")
            bad = [x for x in labels if not poset.m < x <= poset.n]
            if bad:
                raise FamilyError(
                    f"labels {bad} outside upper level [{poset.m + 1}, {poset.n}]")
            b_sets.append(BitVec.from_support([x - poset.m for x in labels], poset.l))
        return cls.create(poset, b_sets, drop_redundant)

    @property
    def t(self) -> int:
        return len(self.b_sets)

    @property
    def ideals(self) -> list[OrderIdeal]:
        top = BitVec.ones(self.poset.m)
        return [OrderIdeal(self.poset, top, b) for b in self.b_sets]

    def labels(self) -> list[list[int]]:
        """B_i as lists of global labels."""
        return [[self.poset.m + j for j in b.support] for b in self.b_sets]

    def max_size(self) -> int:
        return max(b.weight for b in self.b_sets)


def parse_family(poset: HierarchicalPoset, text: str, drop_redundant: bool = False) -> IdealFamily:
    """Parse ``"3;3,4"`` into B_1 = {3}, B_2 = {3, 4} (global labels)."""
    ideals = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise FamilyError(f"empty ideal in {text!r}")
        try:
            ideals.append([int(tok) for tok in chunk.split(",")])
        except ValueError:
            raise FamilyError(f"bad label list {chunk!r}") from None
    return IdealFamily.from_labels(poset, ideals, drop_redundant)


def is_order_ideal(poset: HierarchicalPoset, subset: BitVec) -> bool:
    """Either no upper element, or all of U below some upper element."""
    if subset.width != poset.n:
        raise ValueError(f"subset width {subset.width} != n = {poset.n}")
    beta, gamma = poset.split(subset.bits)
    return gamma == 0 or beta == poset.lower_mask


def generated_ideal(poset: HierarchicalPoset, subset: BitVec) -> OrderIdeal:
    """The smallest order ideal containing ``subset``."""
    if subset.width != poset.n:
        raise ValueError(f"subset width {subset.width} != n = {poset.n}")
    if subset.is_zero():
        raise ValueError("the generated ideal of the empty set is undefined")
    beta, gamma = subset.split(poset.m)
    if gamma.is_zero():
        return OrderIdeal(poset, beta, gamma)
    return OrderIdeal(poset, BitVec.ones(poset.m), gamma)


def _downset_bits(poset: HierarchicalPoset, beta: int, gamma: int) -> set[int]:
    out = set()
    sub = beta
    while True:
        out.add(sub)
        if sub == 0:
            break
        sub = (sub - 1) & beta
    if gamma:
        top = poset.lower_mask
        sub = gamma
        while sub:
            out.add(poset.join(top, sub))
            sub = (sub - 1) & gamma
    return out


def downset(poset: HierarchicalPoset, ideal: OrderIdeal) -> list[BitVec]:
    """All order ideals contained in ``ideal``, the empty set included.

    For a full-top ideal [m] ∪ B this is {(1, g) : g ⊆ B} ∪ {(b, 0)}, of size
    2^m + 2^|B| - 1. For an ideal A ⊆ U it is just the subsets of A.
    """
    bits = _downset_bits(poset, ideal.beta.bits, ideal.gamma.bits)
    return [BitVec(poset.n, v) for v in sorted(bits)]


@dataclass(frozen=True)
class DefiningSetBundle:
    """D = D0 ⊔ D1 for one ideal family, each sorted ascending."""

    family: IdealFamily
    D: tuple[int, ...]
    D0: tuple[int, ...]
    D1: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.family.poset.n

    def vectors(self, kind: str = "D") -> list[BitVec]:
        return [BitVec(self.n, v) for v in getattr(self, kind)]


def d0_bits(poset: HierarchicalPoset) -> list[int]:
    """Vectors (beta, gamma) with beta != 1 and gamma != 0, ascending."""
    top = poset.lower_mask
    return sorted(poset.join(b, g)
                  for g in range(1, 1 << poset.l) for b in range(1 << poset.m) if b != top)


def d1_bits(family: IdealFamily) -> list[int]:
    """Vectors (1, gamma) whose gamma escapes every B_i, ascending."""
    poset = family.poset
    top = poset.lower_mask
    return [poset.join(top, g) for g in range(1 << poset.l)
            if all(g & ~b.bits for b in family.b_sets)]


def defining_sets(family: IdealFamily) -> DefiningSetBundle:
    d0 = d0_bits(family.poset)
    d1 = d1_bits(family)
    return DefiningSetBundle(family, tuple(sorted(d0 + d1)), tuple(d0), tuple(d1))


def complement_defining_set(family: IdealFamily) -> list[int]:
    """D computed as 2^[n] minus the union of the families' down-sets."""
    poset = family.poset
    covered = set()
    for ideal in family.ideals:
        covered |= _downset_bits(poset, ideal.beta.bits, ideal.gamma.bits)
    return [v for v in range(1 << poset.n) if v not in covered]
