"""Linear algebra over GF(2) on machine-word bitsets.

A vector of F_2^k is an int whose bit ``i - 1`` holds coordinate ``i``.
:class:`BitVec` pairs that int with its width for the public API; the hot
paths below work on bare ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

MAX_WIDTH = 64


class DimensionError(ValueError):
    """Raised when vectors of different widths are combined."""


@dataclass(frozen=True, order=True)
class BitVec:
    """A vector in F_2^width, identified with its support in [width]."""

    width: int
    bits: int

    def __post_init__(self):
        if not 0 <= self.width <= MAX_WIDTH:
            raise DimensionError(f"width {self.width} outside [0, {MAX_WIDTH}]")
        if self.bits < 0 or self.bits >> self.width:
            raise DimensionError(f"bits {self.bits:#x} do not fit width {self.width}")

    @classmethod
    def zero(cls, width: int) -> BitVec:
        return cls(width, 0)

    @classmethod
    def ones(cls, width: int) -> BitVec:
        return cls(width, (1 << width) - 1)

    @classmethod
    def unit(cls, i: int, width: int) -> BitVec:
        """The standard basis vector e_i (1-based)."""
        if not 1 <= i <= width:
            raise DimensionError(f"e_{i} does not exist in width {width}")
        return cls(width, 1 << (i - 1))

    @classmethod
    def from_support(cls, support: Iterable[int], width: int) -> BitVec:
        bits = 0
        for i in support:
            if not 1 <= i <= width:
                raise DimensionError(f"coordinate {i} outside [1, {width}]")
            bits |= 1 << (i - 1)
        return cls(width, bits)

    @classmethod
    def from_str(cls, text: str) -> BitVec:
        """Parse ``"0110"``; the leftmost character is coordinate 1."""
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise ValueError(f"not a binary string: {text!r}")
        return cls(len(text), int(text[::-1], 2) if text else 0)

    def __str__(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.width))

    def __xor__(self, other: BitVec) -> BitVec:
        _check_width(self, other)
        return BitVec(self.width, self.bits ^ other.bits)

    def __and__(self, other: BitVec) -> BitVec:
        _check_width(self, other)
        return BitVec(self.width, self.bits & other.bits)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.width) if self.bits >> i & 1)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def concat(self, other: BitVec) -> BitVec:
        """(self, other) as one vector of width self.width + other.width."""
        return BitVec(self.width + other.width, self.bits | other.bits << self.width)

    def split(self, m: int) -> tuple[BitVec, BitVec]:
        """Inverse of :meth:`concat`: first ``m`` coordinates, then the rest."""
        if not 0 <= m <= self.width:
            raise DimensionError(f"cannot split width {self.width} at {m}")
        low = self.bits & ((1 << m) - 1)
        return BitVec(m, low), BitVec(self.width - m, self.bits >> m)


Vector = Union[BitVec, int]


def _check_width(u: BitVec, v: BitVec) -> None:
    if u.width != v.width:
        raise DimensionError(f"width mismatch: {u.width} != {v.width}")


def as_bits(v: Vector, width: int) -> int:
    """Int mask of ``v``, checking the width when ``v`` is a BitVec."""
    if isinstance(v, BitVec):
        if v.width != width:
            raise DimensionError(f"width mismatch: {v.width} != {width}")
        return v.bits
    if v < 0 or v >> width:
        raise DimensionError(f"{v:#x} does not fit width {width}")
    return v


def parity(x: int) -> int:
    return x.bit_count() & 1


def dot(u: BitVec, v: BitVec) -> int:
    """Standard inner product u . v^T over F_2."""
    _check_width(u, v)
    return parity(u.bits & v.bits)


class EchelonBasis:
    """Incrementally grown basis kept in fully reduced row-echelon form.

    Each row is keyed by its leading (highest) set bit, and no other row has
    that bit set, so reducing a vector is a single pass over the rows.
    """

    def __init__(self, width: int, vectors: Iterable[Vector] = ()):
        if not 0 <= width <= MAX_WIDTH:
            raise DimensionError(f"width {width} outside [0, {MAX_WIDTH}]")
        self.width = width
        self._rows: dict[int, int] = {}
        for v in vectors:
            self.insert(v)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        """Pivot bit positions (0-based), descending."""
        return sorted(self._rows, reverse=True)

    @property
    def pivot_mask(self) -> int:
        mask = 0
        for p in self._rows:
            mask |= 1 << p
        return mask

    @property
    def row_bits(self) -> list[int]:
        return [self._rows[p] for p in self.pivots]

    @property
    def rows(self) -> list[BitVec]:
        return [BitVec(self.width, r) for r in self.row_bits]

    def reduce(self, v: Vector) -> int:
        """Reduce ``v`` modulo the span.

        The result is the smallest integer in the coset ``v + span``.
        """
        x = as_bits(v, self.width)
        for p, row in self._rows.items():
            if x >> p & 1:
                x ^= row
        return x

    def insert(self, v: Vector) -> bool:
        """Add ``v``; return True iff it enlarged the span."""
        r = self.reduce(v)
        if not r:
            return False
        p = r.bit_length() - 1
        for q, row in self._rows.items():
            if row >> p & 1:
                self._rows[q] = row ^ r
        self._rows[p] = r
        return True

    def __contains__(self, v: Vector) -> bool:
        return self.reduce(v) == 0

    def span(self) -> Iterator[int]:
        """All 2^dim elements of the span (as ints), in Gray-code order."""
        rows = self.row_bits
        x = 0
        yield x
        for i in range(1, 1 << len(rows)):
            x ^= rows[(i & -i).bit_length() - 1]
            yield x

    def copy(self) -> EchelonBasis:
        other = EchelonBasis(self.width)
        other._rows = dict(self._rows)
        return other

    def __repr__(self) -> str:
        return f"EchelonBasis(width={self.width}, rows={[str(r) for r in self.rows]})"


def _common_width(vectors: list[Vector], width: int | None) -> int:
    if width is not None:
        return width
    widths = {v.width for v in vectors if isinstance(v, BitVec)}
    if len(widths) > 1:
        raise DimensionError(f"mixed widths {sorted(widths)}")
    if widths:
        return widths.pop()
    if vectors:
        raise DimensionError("width required for int vectors")
    return 0


def rank(vectors: Iterable[Vector], width: int | None = None) -> int:
    vectors = list(vectors)
    return EchelonBasis(_common_width(vectors, width), vectors).dim


def rank_at_least(vectors: Iterable[int], width: int, target: int) -> bool:
    """True as soon as ``target`` independent vectors have been seen."""
    if target <= 0:
        return True
    # plain (not reduced) echelon form: rows with distinct leading bits
    leads: list[int] = []
    rows: list[int] = []
    for v in vectors:
        for lead, row in zip(leads, rows):
            if v & lead:
                v ^= row
        if v:
            lead = 1 << (v.bit_length() - 1)
            i = 0
            while i < len(leads) and leads[i] > lead:
                i += 1
            leads.insert(i, lead)
            rows.insert(i, v)
            if len(rows) >= target:
                return True
    return False


def kernel(vectors: Iterable[Vector], k: int) -> EchelonBasis:
    """Basis of {y in F_2^k : y . d = 0 for every d in ``vectors``}."""
    rows = EchelonBasis(k, vectors)
    pivmask = rows.pivot_mask
    out = EchelonBasis(k)
    for f in range(k):
        if pivmask >> f & 1:
            continue
        y = 1 << f
        for p, row in rows._rows.items():
            if row >> f & 1:
                y |= 1 << p
        out.insert(y)
    return out


def enumerate_vectors(k: int) -> Iterator[BitVec]:
    """All of F_2^k in ascending integer order of the bit mask."""
    if not 1 <= k <= MAX_WIDTH:
        raise DimensionError(f"k={k} outside [1, {MAX_WIDTH}]")
    for bits in range(1 << k):
        yield BitVec(k, bits)


@dataclass(frozen=True)
class Projection:
    """Coordinates with respect to a basis of a subspace W of F_2^k.

    ``basis[i]`` is the RREF row with the i-th smallest pivot ``pivots[i]``.
    A column d in W is written as ``coords(d)``; a coefficient vector x maps
    to ``project(x)`` with ``project(x) . coords(d) = x . d`` for every d in W.
    """

    k: int
    basis: tuple[int, ...]
    pivots: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.basis)

    def coords(self, d: int) -> int:
        z = 0
        for i, p in enumerate(self.pivots):
            if d >> p & 1:
                z |= 1 << i
        return z

    def project(self, x: int) -> int:
        z = 0
        for i, b in enumerate(self.basis):
            if parity(x & b):
                z |= 1 << i
        return z

    def lift(self, z: int) -> int:
        """A preimage of ``z`` under :meth:`project`."""
        x = 0
        for i, p in enumerate(self.pivots):
            if z >> i & 1:
                x |= 1 << p
        return x


def reduce_to_full_rank(vectors: Iterable[Vector], k: int) -> tuple[list[BitVec], Projection]:
    """Rewrite ``vectors`` in coordinates of a basis of their span.

    The code generated by the rewritten vectors (width = rank) has exactly
    the same codewords as the original one.
    """
    vectors = list(vectors)
    span = EchelonBasis(k, vectors)
    pivots = tuple(sorted(span._rows))
    proj = Projection(k, tuple(span._rows[p] for p in pivots), pivots)
    return [BitVec(proj.r, proj.coords(as_bits(v, k))) for v in vectors], proj
