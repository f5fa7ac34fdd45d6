"""Integer partitions, Young-diagram cells, and hook-length multisets.

A partition is a weakly decreasing tuple of positive parts.  Cells are
addressed in matrix convention: row i from the top (1-based), column j
from the left (1-based).  For the cell (i, j) of the diagram of p:

    arm(i, j)  = p[i] - j           (cells strictly to the right)
    leg(i, j)  = conj(p)[j] - i     (cells strictly below)
    hook(i, j) = arm + leg + 1

Besides the full hook multiset, two sub-multisets are exposed: hooks of
cells with leg 0 (first kind) and hooks of cells with arm 0 (second
kind).  They are exchanged by conjugation.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence


class HookSelector(Enum):
    """Which cells of the diagram contribute their hook lengths."""

    FULL = "full"
    TRIVIAL_LEG = "trivial_leg"
    TRIVIAL_ARM = "trivial_arm"


@dataclass(frozen=True)
class Cell:
    """A diagram cell with its arm, leg, and hook data (1-based row/col)."""

    row: int
    col: int
    arm: int
    leg: int

    @property
    def hook(self) -> int:
        return self.arm + self.leg + 1


@dataclass(frozen=True)
class HookMultiset:
    """Multiset of hook lengths, stored as sorted (value, multiplicity) pairs."""

    selector: HookSelector
    counts: tuple[tuple[int, int], ...]

    def elements(self) -> tuple[int, ...]:
        """All hook values, repeated by multiplicity, in increasing order."""
        out: list[int] = []
        for value, mult in self.counts:
            out.extend([value] * mult)
        return tuple(out)

    @property
    def size(self) -> int:
        return sum(mult for _, mult in self.counts)

    def product(self) -> int:
        prod = 1
        for value, mult in self.counts:
            prod *= value**mult
        return prod


class Partition:
    """An integer partition with hook-length and tableau-counting queries."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {p}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        self._parts = parts

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def weight(self) -> int:
        """The number being partitioned (sum of parts)."""
        return sum(self._parts)

    @property
    def length(self) -> int:
        """Number of parts."""
        return len(self._parts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self._parts == other._parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """Comma-separated parts, e.g. "7,3,2"; empty partition is ""."""
        return ",".join(str(p) for p in self._parts)

    @classmethod
    def from_text(cls, text: str) -> Partition:
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError as exc:
            raise ValueError(f"invalid partition text: {text!r}") from exc
        return cls(parts)

    def conjugate(self) -> Partition:
        """Transpose of the diagram (columns become rows)."""
        if not self._parts:
            return Partition(())
        cols = self._parts[0]
        conj = [0] * cols
        for p in self._parts:
            for j in range(p):
                conj[j] += 1
        return Partition(conj)

    def cells(self) -> Iterator[Cell]:
        """All cells in reading order (row by row, left to right)."""
        conj = self.conjugate()._parts
        for i, part in enumerate(self._parts, start=1):
            for j in range(1, part + 1):
                yield Cell(row=i, col=j, arm=part - j, leg=conj[j - 1] - i)

    def hooks(self, selector: HookSelector = HookSelector.FULL) -> HookMultiset:
        """Hook-length multiset over the cells chosen by the selector.

        FULL takes every cell.  TRIVIAL_LEG keeps only cells with leg 0,
        which contribute, in row i, exactly the hooks 1..(p[i] - p[i+1]).
        TRIVIAL_ARM keeps only cells with arm 0 and equals the TRIVIAL_LEG
        multiset of the conjugate partition.
        """
        counter: Counter[int] = Counter()
        for cell in self.cells():
            if selector is HookSelector.TRIVIAL_LEG and cell.leg:
                continue
            if selector is HookSelector.TRIVIAL_ARM and cell.arm:
                continue
            counter[cell.hook] += 1
        return HookMultiset(selector, tuple(sorted(counter.items())))

    def multiplicity_vector(self) -> tuple[int, ...]:
        """Length-n vector whose j-th entry counts parts equal to j.

        This is the bijective encoding of the partition by part
        multiplicities; sum(j * k_j) recovers the weight.
        """
        n = self.weight
        vec = [0] * n
        for p in self._parts:
            vec[p - 1] += 1
        return tuple(vec)

    def count_syt(self) -> int:
        """Number of standard Young tableaux, n! / (product of all hooks).

        Raises HookConsistencyError if the division is not exact, which
        would indicate corrupted hook data (it never happens for genuine
        partitions).
        """
        n = self.weight
        denom = self.hooks(HookSelector.FULL).product()
        count, rem = divmod(math.factorial(n), denom)
        if rem:
            raise HookConsistencyError(
                f"hook product {denom} does not divide {n}! for {self!r}"
            )
        return count


class HookConsistencyError(ArithmeticError):
    """The hook-length formula produced a non-integer tableau count."""


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n in decreasing lexicographic order.

    Starts at (n) and ends at (1, 1, ..., 1); yields the empty partition
    exactly once for n = 0.
    """
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    if n == 0:
        yield Partition(())
        return
    a = [n]
    while True:
        yield Partition(a)
        j = len(a) - 1
        while j >= 0 and a[j] == 1:
            j -= 1
        if j < 0:
            return
        spare = len(a) - j  # the ones we removed, plus one from a[j]
        value = a[j] - 1
        a = a[: j + 1]
        a[j] = value
        while spare > 0:
            take = min(value, spare)
            a.append(take)
            spare -= take


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence (independent of
    enumeration, handy as a cross-check)."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    table = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = -1 if k % 2 == 0 else 1
            if g1 <= m:
                total += sign * table[m - g1]
            if g2 <= m:
                total += sign * table[m - g2]
            k += 1
        table[m] = total
    return table[n]
