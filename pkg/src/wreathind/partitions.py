"""Integer partitions, multiplicity vectors and partition patterns.

Partitions are plain tuples of positive integers in weakly decreasing order;
``()`` is the unique partition of 0.  The same tuples label irreducible
representations of S_N and conjugacy classes (cycle types).
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import cache
from math import factorial

from .errors import PatternTooLarge

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a tuple; zeros are not allowed."""
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return parts


def _partitions_bounded(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@cache
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(_partitions_bounded(n, n))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions_cached(n))


@cache
def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence, without listing partitions."""
    counts = [1]
    for k in range(1, n + 1):
        total, j = 0, 1
        while True:
            g1, g2 = j * (3 * j - 1) // 2, j * (3 * j + 1) // 2
            if g1 > k:
                break
            sign = 1 if j % 2 else -1
            total += sign * counts[k - g1]
            if g2 <= k:
                total += sign * counts[k - g2]
            j += 1
        counts.append(total)
    return counts[n]


@cache
def dim_specht(shape: Partition) -> int:
    """Number of standard Young tableaux of ``shape`` (hook length formula)."""
    conj = conjugate(shape)
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(sum(shape)) // hooks


def is_even(shape: Partition) -> bool:
    return all(p % 2 == 0 for p in shape)


def conjugate(shape: Partition) -> Partition:
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p > j) for j in range(shape[0]))


def part_counts(shape: Partition) -> dict[int, int]:
    counts: dict[int, int] = {}
    for p in shape:
        counts[p] = counts.get(p, 0) + 1
    return counts


def format_partition(shape: Partition, sep: str = ",") -> str:
    return sep.join(str(p) for p in shape)


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("[]()")
    if not text:
        return ()
    return as_partition(int(tok) for tok in text.replace(" ", "").split(","))


class MultiplicityVector(Mapping):
    """A finite formal sum of irreducibles of S_N, stored as partition -> multiplicity.

    Zero entries are dropped on construction; iteration is in descending
    lexicographic order of the partitions.
    """

    __slots__ = ("level_size", "_entries")

    def __init__(self, level_size: int, entries: Mapping[Partition, int] | Iterable = ()):
        self.level_size = int(level_size)
        items = entries.items() if isinstance(entries, Mapping) else entries
        stored: dict[Partition, int] = {}
        for shape, mult in items:
            shape = as_partition(shape)
            mult = int(mult)
            if sum(shape) != self.level_size:
                raise ValueError(f"{shape} is not a partition of {self.level_size}")
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {shape}")
            if mult:
                stored[shape] = stored.get(shape, 0) + mult
        self._entries = dict(sorted(stored.items(), reverse=True))

    def __getitem__(self, shape):
        return self._entries[tuple(shape)]

    def get(self, shape, default=0):
        return self._entries.get(tuple(shape), default)

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if isinstance(other, MultiplicityVector):
            return self.level_size == other.level_size and self._entries == other._entries
        if isinstance(other, Mapping):
            return self._entries == {tuple(k): v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash((self.level_size, tuple(self._entries.items())))

    def __repr__(self):
        body = ", ".join(f"{format_partition(k)}:{v}" for k, v in self._entries.items())
        return f"MultiplicityVector(N={self.level_size}, {{{body}}})"

    def __add__(self, other: MultiplicityVector) -> MultiplicityVector:
        if other.level_size != self.level_size:
            raise ValueError("level sizes differ")
        merged = dict(self._entries)
        for k, v in other.items():
            merged[k] = merged.get(k, 0) + v
        return MultiplicityVector(self.level_size, merged)

    def total_dimension(self) -> int:
        return sum(mult * dim_specht(shape) for shape, mult in self._entries.items())

    def total_multiplicity(self) -> int:
        return sum(self._entries.values())

    def max_multiplicity(self) -> int:
        return max(self._entries.values(), default=0)

    def is_multiplicity_free(self) -> bool:
        return self.max_multiplicity() <= 1

    def expanded(self) -> list[Partition]:
        """Each partition repeated by its multiplicity, descending order."""
        return [shape for shape, mult in self._entries.items() for _ in range(mult)]

    def to_json(self) -> list[dict]:
        return [{"partition": list(k), "mult": v} for k, v in self._entries.items()]

    @classmethod
    def from_json(cls, level_size: int, data: list[dict]) -> MultiplicityVector:
        return cls(level_size, [(tuple(d["partition"]), d["mult"]) for d in data])


@dataclass(frozen=True)
class PartitionPattern:
    """A partition with its first part left free: ``(*, tail...)``.

    Written as concatenated digits, so ``PartitionPattern.parse("42")`` stands
    for ``(N - 6, 4, 2)``; the string ``"0"`` is the empty tail.
    """

    tail: Partition = ()

    def __post_init__(self):
        object.__setattr__(self, "tail", as_partition(self.tail))

    @classmethod
    def parse(cls, text: str) -> PartitionPattern:
        text = text.strip()
        if text == "0":
            return cls(())
        if "," in text:
            return cls(parse_partition(text))
        return cls(tuple(int(ch) for ch in text))

    def __str__(self):
        if not self.tail:
            return "0"
        if all(p <= 9 for p in self.tail):
            return "".join(str(p) for p in self.tail)
        return format_partition(self.tail)

    def instantiate(self, n: int) -> Partition:
        return instantiate_pattern(self, n)


def instantiate_pattern(pattern: PartitionPattern | str, n: int) -> Partition:
    """The partition ``(n - |tail|, tail...)``; raises PatternTooLarge if that is not a partition."""
    if isinstance(pattern, str):
        pattern = PartitionPattern.parse(pattern)
    tail = pattern.tail
    first = n - sum(tail)
    if first < 1 or (tail and first < tail[0]):
        raise PatternTooLarge(f"pattern {pattern} has no instance of size {n}")
    return (first,) + tail
