"""Irreducible characters of S_N by the Murnaghan-Nakayama rule, and class-function algebra.

Characters are evaluated on cycle types.  All arithmetic is exact: integer
character values, integer class sizes, and ``Fraction`` inner products.
"""
from __future__ import annotations

from collections.abc import Callable, Mapping
from fractions import Fraction
from functools import cache
from math import factorial

from .errors import NotACharacter, SizeMismatch
from .partitions import MultiplicityVector, Partition, as_partition, part_counts, partitions_of


def _beta_set(shape: Partition) -> tuple[int, ...]:
    length = len(shape)
    return tuple(p + length - 1 - i for i, p in enumerate(shape))


def _from_beta(beta: tuple[int, ...]) -> Partition:
    length = len(beta)
    parts = tuple(b - (length - 1 - i) for i, b in enumerate(sorted(beta, reverse=True)))
    return tuple(p for p in parts if p)


@cache
def _mn(shape: Partition, ctype: Partition) -> int:
    if not ctype:
        return 1
    r, rest = ctype[0], ctype[1:]
    beta = _beta_set(shape)
    occupied = set(beta)
    total = 0
    # A border strip of length r is a bead sliding from b down to b - r onto an
    # empty position; its height is the number of beads jumped over.
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        moved = tuple(target if c == b else c for c in beta)
        value = _mn(_from_beta(moved), rest)
        total += -value if height % 2 else value
    return total


def mn_char(shape: Partition, ctype: Partition) -> int:
    """The irreducible character chi^shape evaluated on permutations of cycle type ``ctype``."""
    shape, ctype = tuple(shape), tuple(sorted(ctype, reverse=True))
    if sum(shape) != sum(ctype):
        raise SizeMismatch(f"|{shape}| != |{ctype}|")
    return _mn(shape, ctype)


@cache
def class_size(ctype: Partition) -> int:
    """Number of permutations in S_N with cycle type ``ctype``."""
    denom = 1
    for part, count in part_counts(ctype).items():
        denom *= part**count * factorial(count)
    return factorial(sum(ctype)) // denom


def centralizer_order(ctype: Partition) -> int:
    return factorial(sum(ctype)) // class_size(ctype)


def cycle_type_sign(ctype: Partition) -> int:
    return -1 if (sum(ctype) - len(ctype)) % 2 else 1


class ClassFunction:
    """An integer-valued class function on S_N, keyed by cycle type."""

    __slots__ = ("level_size", "values")

    def __init__(self, level_size: int, values: Mapping[Partition, int]):
        self.level_size = level_size
        keys = {tuple(k) for k in values}
        expected = set(partitions_of(level_size))
        if keys != expected:
            raise ValueError(f"class function on S_{level_size} must cover every cycle type")
        self.values = {k: values[k] for k in partitions_of(level_size)}

    @classmethod
    def from_callable(cls, level_size: int, func: Callable[[Partition], int]) -> ClassFunction:
        return cls(level_size, {rho: func(rho) for rho in partitions_of(level_size)})

    def __getitem__(self, ctype):
        return self.values[tuple(ctype)]

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.level_size == other.level_size and self.values == other.values

    def __repr__(self):
        return f"ClassFunction(N={self.level_size}, {self.values})"

    def degree(self) -> int:
        return self.values[(1,) * self.level_size]

    def to_json(self) -> dict:
        return {
            "N": self.level_size,
            "values": [{"type": list(k), "value": v} for k, v in self.values.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> ClassFunction:
        return cls(data["N"], {tuple(d["type"]): d["value"] for d in data["values"]})


def irreducible_character(shape: Partition) -> ClassFunction:
    shape = as_partition(shape)
    return ClassFunction.from_callable(sum(shape), lambda rho: _mn(shape, rho))


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    if f.level_size != g.level_size:
        raise SizeMismatch("class functions live on different symmetric groups")
    total = sum(class_size(rho) * f.values[rho] * g.values[rho] for rho in f.values)
    return Fraction(total, factorial(f.level_size))


def decompose_class_function(f: ClassFunction) -> MultiplicityVector:
    """Multiplicity of every irreducible in the character ``f``."""
    n = f.level_size
    weighted = {rho: class_size(rho) * v for rho, v in f.values.items() if v}
    order = factorial(n)
    mults = {}
    for lam in partitions_of(n):
        total = sum(w * _mn(lam, rho) for rho, w in weighted.items())
        mult, rem = divmod(total, order)
        if rem or mult < 0:
            raise NotACharacter(f"<f, chi^{lam}> = {Fraction(total, order)}")
        mults[lam] = mult
    return MultiplicityVector(n, mults)


def character_of(vec: MultiplicityVector) -> ClassFunction:
    """The class function sum of mult * chi^lambda over ``vec``."""
    return ClassFunction.from_callable(
        vec.level_size, lambda rho: sum(m * _mn(lam, rho) for lam, m in vec.items())
    )
