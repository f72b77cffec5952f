"""Coset-space models for the wreath-product families and their permutation characters.

``Family("C", m, n)`` is the stabilizer in S_{mn} of a perfect m-block
partition of {1..mn}; it has order (m!)^n n! and coincides with the
hyperoctahedral group B_n at m = 2.  ``Family("D", m, n)`` is the stabilizer
of a decomposition of {1..mn} into n directed m-cycles (order m^n n!).  Both
are built as base group (S_m resp. C_m)^n permuted by a top copy of S_n.

The permutation character of S_{mn} on the cosets is produced two ways:
Burnside fixed-point counts on explicitly enumerated objects, and Frobenius
reciprocity over the subgroup's cycle-type distribution.
"""
from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial, gcd

from .characters import ClassFunction, _mn, class_size, centralizer_order
from .errors import NotACharacter, SizeMismatch, TooLarge
from .partitions import MultiplicityVector, Partition, partition_count, partitions_of

DEFAULT_ENUM_CAP = 5_000_000
# The oracle evaluates one character per partition of mn.
DEFAULT_ORACLE_CAP = 5_000


@dataclass(frozen=True)
class Family:
    kind: str
    m: int
    n: int

    def __post_init__(self):
        if self.kind not in ("C", "D"):
            raise ValueError(f"family kind must be 'C' or 'D', got {self.kind!r}")
        if self.m < 2 or self.n < 1:
            raise ValueError("need m >= 2 and n >= 1")

    @property
    def size(self) -> int:
        return self.m * self.n

    def at(self, n: int) -> Family:
        return Family(self.kind, self.m, n)

    def __str__(self):
        return f"{self.kind}_{{{self.m},{self.n}}}"


def subgroup_order(f: Family) -> int:
    base = factorial(f.m) if f.kind == "C" else f.m
    return base**f.n * factorial(f.n)


def coset_count(f: Family) -> int:
    return factorial(f.size) // subgroup_order(f)


class Permutation:
    """A bijection of {1..N}; ``images[i - 1]`` is the image of ``i``.

    Products compose right to left: ``(g * h)(i) == g(h(i))``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> Permutation:
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return cls(images)

    @classmethod
    def of_cycle_type(cls, ctype: Partition) -> Permutation:
        """Canonical representative: cycles on consecutive integers, longest first."""
        cycles, start = [], 1
        for length in sorted(ctype, reverse=True):
            cycles.append(list(range(start, start + length)))
            start += length
        return cls.from_cycles(sum(ctype), cycles)

    def __len__(self):
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if len(self) != len(other):
            raise SizeMismatch("permutations of different degree")
        return Permutation(self.images[j - 1] for j in other.images)

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc, i = [], start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self.images[i - 1]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))


@dataclass(frozen=True, slots=True)
class HyperMatching:
    """A partition of {1..mn} into m-element blocks, blocks sorted and ordered by minimum."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def canonical(cls, blocks) -> HyperMatching:
        return cls(tuple(sorted(tuple(sorted(b)) for b in blocks)))

    def to_json(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]

    def __str__(self):
        sep = "" if len(self) < 10 else ","
        return "|".join(sep.join(map(str, b)) for b in self.blocks)

    def __len__(self):
        return sum(len(b) for b in self.blocks)


def _rotate_to_min(cyc: Sequence[int]) -> tuple[int, ...]:
    k = cyc.index(min(cyc))
    return tuple(cyc[k:]) + tuple(cyc[:k])


@dataclass(frozen=True, slots=True)
class CycleDecomposition:
    """Disjoint directed m-cycles covering {1..mn}, each rotated to start at its minimum."""

    cycles: tuple[tuple[int, ...], ...]

    @classmethod
    def canonical(cls, cycles) -> CycleDecomposition:
        return cls(tuple(sorted(_rotate_to_min(tuple(c)) for c in cycles)))

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.cycles]

    def __len__(self):
        return sum(len(c) for c in self.cycles)


def act(g: Permutation, x):
    """Relabel every point of ``x`` by ``g`` and re-canonicalize."""
    if len(g) != len(x):
        raise SizeMismatch(f"permutation of degree {len(g)} acting on {len(x)} points")
    img = g.images
    if isinstance(x, HyperMatching):
        return HyperMatching(tuple(sorted(tuple(sorted(img[i - 1] for i in b)) for b in x.blocks)))
    if isinstance(x, CycleDecomposition):
        return CycleDecomposition(
            tuple(sorted(_rotate_to_min(tuple(img[i - 1] for i in c)) for c in x.cycles))
        )
    raise TypeError(f"cannot act on {type(x).__name__}")


def _set_partitions(points: tuple[int, ...], m: int) -> Iterator[list[tuple[int, ...]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for others in itertools.combinations(rest, m - 1):
        block = (first,) + others
        remaining = tuple(p for p in rest if p not in others)
        for tail in _set_partitions(remaining, m):
            yield [block] + tail


def iter_objects(f: Family) -> Iterator[HyperMatching | CycleDecomposition]:
    points = tuple(range(1, f.size + 1))
    for blocks in _set_partitions(points, f.m):
        if f.kind == "C":
            yield HyperMatching(tuple(blocks))
            continue
        # blocks arrive sorted by minimum; fixing the minimum first leaves (m-1)! directions
        choices = [[(b[0],) + p for p in itertools.permutations(b[1:])] for b in blocks]
        for cycles in itertools.product(*choices):
            yield CycleDecomposition(tuple(cycles))


def enumerate_objects(f: Family, cap: int = DEFAULT_ENUM_CAP) -> list:
    """Every coset-space object of the family, in canonical order of generation."""
    count = coset_count(f)
    if count > cap:
        raise TooLarge(f"enumerating {f}", count, cap)
    return list(iter_objects(f))


def base_object(f: Family):
    """The object whose stabilizer is the family's subgroup: blocks/cycles on consecutive integers."""
    runs = [tuple(range(i * f.m + 1, (i + 1) * f.m + 1)) for i in range(f.n)]
    return HyperMatching(tuple(runs)) if f.kind == "C" else CycleDecomposition(tuple(runs))


def _count_fixed(args) -> list[int]:
    kind, m, n, ctypes = args
    objs = list(iter_objects(Family(kind, m, n)))
    out = []
    for rho in ctypes:
        g = Permutation.of_cycle_type(rho)
        out.append(sum(1 for x in objs if act(g, x) == x))
    return out


def permutation_character_enum(f: Family, cap: int = DEFAULT_ENUM_CAP, jobs: int = 1) -> ClassFunction:
    """Permutation character by counting objects fixed by one representative per class."""
    count = coset_count(f)
    if count > cap:
        raise TooLarge(f"enumerating {f}", count, cap)
    ctypes = partitions_of(f.size)
    if jobs <= 1:
        values = _count_fixed((f.kind, f.m, f.n, ctypes))
    else:
        chunks = [ctypes[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_count_fixed, [(f.kind, f.m, f.n, c) for c in chunks]))
        by_type = {rho: v for chunk, vals in zip(chunks, parts) for rho, v in zip(chunk, vals)}
        values = [by_type[rho] for rho in ctypes]
    return ClassFunction(f.size, dict(zip(ctypes, values)))


def _merge(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


@cache
def _base_product_types(kind: str, m: int, length: int) -> tuple[tuple[Partition, int], ...]:
    """Cycle types on the ``length * m`` points of one top cycle of that length, with counts.

    The product of the base elements around the top cycle is uniformly
    distributed over the base group, each value hit |base|^(length-1) times; a
    k-cycle of that product becomes a (k * length)-cycle of S_{mn}.
    """
    if kind == "C":
        base_types = [(tau, class_size(tau)) for tau in partitions_of(m)]
        fibre = factorial(m) ** (length - 1)
    else:
        acc: dict[Partition, int] = {}
        for r in range(m):
            d = gcd(r, m)
            tau = (m // d,) * d
            acc[tau] = acc.get(tau, 0) + 1
        base_types = list(acc.items())
        fibre = m ** (length - 1)
    return tuple(
        (tuple(k * length for k in tau), count * fibre) for tau, count in base_types
    )


def wreath_class_distribution(f: Family) -> dict[Partition, int]:
    """Number of subgroup elements of each S_{mn} cycle type, built combinatorially."""
    total: dict[Partition, int] = {}
    for top in partitions_of(f.n):
        dist: dict[Partition, int] = {(): class_size(top)}
        for length in top:
            nxt: dict[Partition, int] = {}
            for ctype, c in dist.items():
                for piece, w in _base_product_types(f.kind, f.m, length):
                    key = _merge(ctype, piece)
                    nxt[key] = nxt.get(key, 0) + c * w
            dist = nxt
        for ctype, c in dist.items():
            total[ctype] = total.get(ctype, 0) + c
    return dict(sorted(total.items(), reverse=True))


def iter_subgroup_elements(f: Family) -> Iterator[Permutation]:
    """Every element of the family's subgroup as an explicit permutation of {1..mn}."""
    m, n = f.m, f.n
    if f.kind == "C":
        base = list(itertools.permutations(range(m)))
    else:
        base = [tuple((i + r) % m for i in range(m)) for r in range(m)]
    for top in itertools.permutations(range(n)):
        for local in itertools.product(base, repeat=n):
            images = [0] * (m * n)
            for blk in range(n):
                for i in range(m):
                    images[blk * m + i] = top[blk] * m + local[blk][i] + 1
            yield Permutation(images)


def wreath_class_distribution_bruteforce(f: Family, cap: int = 10**7) -> dict[Partition, int]:
    order = subgroup_order(f)
    if order > cap:
        raise TooLarge(f"listing elements of {f}", order, cap)
    total: dict[Partition, int] = {}
    for g in iter_subgroup_elements(f):
        t = g.cycle_type()
        total[t] = total.get(t, 0) + 1
    return dict(sorted(total.items(), reverse=True))


def permutation_character_wreath(f: Family, cap: int = DEFAULT_ORACLE_CAP) -> MultiplicityVector:
    """Multiplicity of each irreducible: the average of its character over the subgroup."""
    irreducibles = partition_count(f.size)
    if irreducibles > cap:
        raise TooLarge(f"character oracle for {f} (irreducibles of S_{f.size})", irreducibles, cap)
    dist = wreath_class_distribution(f)
    order = subgroup_order(f)
    mults = {}
    for lam in partitions_of(f.size):
        total = sum(c * _mn(lam, rho) for rho, c in dist.items())
        mult, rem = divmod(total, order)
        if rem or mult < 0:
            raise NotACharacter(f"multiplicity of {lam} in {f} is {Fraction(total, order)}")
        mults[lam] = mult
    return MultiplicityVector(f.size, mults)


def induced_class_function(f: Family) -> ClassFunction:
    """Permutation character values from the class distribution, |C(g)| |g^G n H| / |H|."""
    dist = wreath_class_distribution(f)
    order = subgroup_order(f)
    values = {}
    for rho in partitions_of(f.size):
        num = centralizer_order(rho) * dist.get(rho, 0)
        if num % order:
            raise NotACharacter(f"fixed-point count at {rho} is not an integer")
        values[rho] = num // order
    return ClassFunction(f.size, values)
