"""Branching, Pieri and iterated induction rules on partitions and multiplicity vectors."""
from __future__ import annotations

from functools import cache

from .errors import EmptyPartition
from .partitions import MultiplicityVector, Partition


def remove_one_box(shape: Partition) -> set[Partition]:
    """Partitions obtained from ``shape`` by deleting one removable corner."""
    if not shape:
        raise EmptyPartition("cannot remove a box from the empty partition")
    return set(_removals(shape))


@cache
def _removals(shape: Partition) -> tuple[Partition, ...]:
    out = []
    for i, p in enumerate(shape):
        below = shape[i + 1] if i + 1 < len(shape) else 0
        if p > below:
            child = shape[:i] + (p - 1,) + shape[i + 1:]
            out.append(child[:-1] if child[-1] == 0 else child)
    return tuple(out)


@cache
def _additions(shape: Partition) -> tuple[Partition, ...]:
    out = []
    for i, p in enumerate(shape):
        if i == 0 or shape[i - 1] > p:
            out.append(shape[:i] + (p + 1,) + shape[i + 1:])
    out.append(shape + (1,))
    return tuple(out)


def add_one_box(shape: Partition) -> set[Partition]:
    """Partitions obtained from ``shape`` by adding one addable corner."""
    return set(_additions(shape))


@cache
def _horizontal_strips(shape: Partition, k: int) -> tuple[Partition, ...]:
    # Row i may grow by at most shape[i-1] - shape[i]; the first row is unbounded
    # and a new row may take at most shape[-1] boxes.
    rows = shape + (0,)
    caps = [k] + [rows[i - 1] - rows[i] for i in range(1, len(rows))]
    out = []

    def place(i, left, grown):
        if i == len(rows):
            if left == 0:
                out.append(tuple(p for p in grown if p))
            return
        for x in range(min(caps[i], left), -1, -1):
            place(i + 1, left - x, grown + (rows[i] + x,))

    place(0, k, ())
    return tuple(out)


def add_horizontal_strip(shape: Partition, k: int) -> set[Partition]:
    """All lambda containing ``shape`` with lambda/shape a horizontal strip of ``k`` boxes."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return set(_horizontal_strips(shape, k))


@cache
def _iterated(shape: Partition, k: int) -> tuple[tuple[Partition, int], ...]:
    layer = {shape: 1}
    for _ in range(k):
        nxt: dict[Partition, int] = {}
        for mu, c in layer.items():
            for lam in _additions(mu):
                nxt[lam] = nxt.get(lam, 0) + c
        layer = nxt
    return tuple(layer.items())


def iterated_add(shape: Partition, k: int) -> MultiplicityVector:
    """Ind from S_|shape| to S_{|shape|+k} of one irreducible, as counts of box-addition paths."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return MultiplicityVector(sum(shape) + k, _iterated(shape, k))


def restrict_vector(vec: MultiplicityVector) -> MultiplicityVector:
    """Restriction from S_N to S_{N-1} of every component, accumulated."""
    if vec.level_size < 1:
        raise EmptyPartition("cannot restrict a module of S_0")
    acc: dict[Partition, int] = {}
    for lam, mult in vec.items():
        for mu in _removals(lam):
            acc[mu] = acc.get(mu, 0) + mult
    return MultiplicityVector(vec.level_size - 1, acc)


def pieri_vector(vec: MultiplicityVector, k: int) -> MultiplicityVector:
    """Ind from S_N x S_k to S_{N+k} of ``vec`` tensored with the trivial module of S_k."""
    acc: dict[Partition, int] = {}
    for mu, mult in vec.items():
        for lam in _horizontal_strips(mu, k):
            acc[lam] = acc.get(lam, 0) + mult
    return MultiplicityVector(vec.level_size + k, acc)


def iterated_vector(vec: MultiplicityVector, k: int) -> MultiplicityVector:
    """Ind from S_N to S_{N+k} of ``vec``."""
    acc: dict[Partition, int] = {}
    for mu, mult in vec.items():
        for lam, c in _iterated(mu, k):
            acc[lam] = acc.get(lam, 0) + mult * c
    return MultiplicityVector(vec.level_size + k, acc)
