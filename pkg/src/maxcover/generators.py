"""Instance builders: adversarial families for the greedy picker and the pool
search, seeded random instances with capped frequencies, and the graph adapter.

Combination bijections are realized by colexicographic ranking/unranking, so
every construction is reproducible across platforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .core import Instance

DEFAULT_SIZE_CEILING = 5_000_000


def rank_colex(subset: Sequence[int]) -> int:
    """Colexicographic rank of a strictly increasing tuple of nonnegative ints."""
    return sum(math.comb(c, j + 1) for j, c in enumerate(subset))


def unrank_colex(rank: int, size: int) -> tuple[int, ...]:
    """The ``size``-subset of the nonnegative integers with colex rank ``rank``."""
    out = []
    r = rank
    for j in range(size, 0, -1):
        c = j - 1
        while math.comb(c + 1, j) <= r:
            c += 1
        out.append(c)
        r -= math.comb(c, j)
    out.reverse()
    return tuple(out)


@dataclass(frozen=True)
class TightGreedySpec:
    """Parameters of the family on which greedy attains its lower-bound ratio.

    Requires p*k > m, which makes the spread sets strictly more attractive
    to greedy than the disjoint blocks, and p-1 <= m-k so the per-block
    bijection onto (p-1)-subsets exists.
    """

    p: int
    k: int
    m: int

    def __post_init__(self):
        if self.p < 1 or self.k < 1:
            raise ValueError(f"p and k must be positive, got p={self.p}, k={self.k}")
        if self.m <= self.k:
            raise ValueError(f"m={self.m} must exceed k={self.k}")
        if self.p * self.k <= self.m:
            raise ValueError(f"need p*k > m, got {self.p}*{self.k} <= {self.m}")
        if self.p - 1 > self.m - self.k:
            raise ValueError(
                f"need p-1 <= m-k, got p-1={self.p - 1} and m-k={self.m - self.k}"
            )

    @property
    def alpha(self) -> float:
        """Frequency pressure p*k/m realized by the construction (above 1)."""
        return self.p * self.k / self.m


@dataclass(frozen=True)
class TightFptSpec:
    """Parameters of the family on which the pool search overlaps itself.

    1/(1-beta) must be an integer (checked on the nearest small rational of
    the given float) and p must divide k; the derived pool value
    x = 2pk/(1-beta) + k is then an integer multiple of p. Betas that are
    exact binary fractions (0.5, 0.75, ...) keep x aligned with the pool
    formula evaluated on the same float.
    """

    p: int
    k: int
    beta: float

    def __post_init__(self):
        if self.p < 1 or self.k < 1:
            raise ValueError(f"p and k must be positive, got p={self.p}, k={self.k}")
        if not 0.0 < self.beta < 1.0:
            raise ValueError(f"beta must lie in (0, 1), got {self.beta}")
        if (1 / self._gap).denominator != 1:
            raise ValueError(f"1/(1-beta) must be an integer, got beta={self.beta}")
        if self.k % self.p:
            raise ValueError(f"p={self.p} must divide k={self.k}")

    @property
    def _gap(self) -> Fraction:
        return 1 - Fraction(self.beta).limit_denominator(10**6)

    @property
    def x(self) -> int:
        """Pool value 2pk/(1-beta) + k, integral and divisible by p."""
        return int(Fraction(2 * self.p * self.k) / self._gap + self.k)


def gen_tight_greedy(
    spec: TightGreedySpec, size_ceiling: int = DEFAULT_SIZE_CEILING
) -> Instance:
    """Blocks of identically spread elements baiting greedy away from the
    disjoint optimal blocks.

    The universe is k blocks of comb(m-k, p-1) elements. The first m-k sets
    (the spread family) receive, per block, the elements whose colex-unranked
    (p-1)-subset contains the set's index; the last k sets are the blocks
    themselves. Every element then lies in exactly p sets, the blocks form an
    optimal full cover, and greedy, preferring lower indices on ties, picks
    spread sets only, leaving comb(m-2k, p-1) elements per block uncovered.
    """
    q = spec.m - spec.k
    block = math.comb(q, spec.p - 1)
    n = spec.k * block
    if n * spec.p > size_ceiling:
        raise ValueError(
            f"construction needs {n * spec.p} incidences, above the ceiling {size_ceiling}"
        )
    spread: list[list[int]] = [[] for _ in range(q)]
    blocks: list[tuple[int, ...]] = []
    for b in range(spec.k):
        base = b * block
        blocks.append(tuple(range(base + 1, base + block + 1)))
        for r in range(block):
            eid = base + r + 1
            for j in unrank_colex(r, spec.p - 1):
                spread[j].append(eid)
    # The bijection fixes each spread set's size at k * comb(m-k-1, p-2).
    expected = spec.k * math.comb(q - 1, spec.p - 2)
    for s in spread:
        assert len(s) == expected
    return Instance(n, tuple(tuple(s) for s in spread) + tuple(blocks), spec.k)


def gen_tight_fpt(spec: TightFptSpec, size_ceiling: int = DEFAULT_SIZE_CEILING) -> Instance:
    """A pool-sized overlapping family next to k disjoint decoys.

    The first x sets cover a block of comb(x, p) elements, one element per
    p-subset of their indices, so any k of them overlap; the last k sets are
    pairwise disjoint with the same cardinality comb(x-1, p-1) and realize
    the optimal coverage k * comb(x, p) * p / x. All x + k sets tie on
    cardinality, so a pool of x sets preferring low indices is exactly the
    overlapping family.
    """
    x = spec.x
    n1 = math.comb(x, spec.p)
    per_set = math.comb(x - 1, spec.p - 1)
    n2 = spec.k * per_set
    n = n1 + n2
    if n1 * spec.p + n2 > size_ceiling:
        raise ValueError(
            f"construction needs {n1 * spec.p + n2} incidences, above the ceiling {size_ceiling}"
        )
    overlapping: list[list[int]] = [[] for _ in range(x)]
    for r in range(n1):
        for j in unrank_colex(r, spec.p):
            overlapping[j].append(r + 1)
    decoys: list[tuple[int, ...]] = []
    for b in range(spec.k):
        base = n1 + b * per_set
        decoys.append(tuple(range(base + 1, base + per_set + 1)))
    for s in overlapping:
        assert len(s) == per_set
    return Instance(n, tuple(tuple(s) for s in overlapping) + tuple(decoys), spec.k)


def gen_random(n: int, m: int, k: int, p_max: int, seed: int) -> Instance:
    """Random instance where each element joins a uniform nonempty selection
    of sets, its size drawn uniformly from [1, p_max]. Deterministic per seed."""
    if n < 1 or m < 1:
        raise ValueError(f"n and m must be positive, got n={n}, m={m}")
    if not 1 <= p_max <= m:
        raise ValueError(f"p_max must lie in [1, {m}], got {p_max}")
    if k < 0:
        raise ValueError(f"budget must be nonnegative, got {k}")
    rng = np.random.default_rng(seed)
    sets: list[list[int]] = [[] for _ in range(m)]
    for e in range(1, n + 1):
        size = int(rng.integers(1, p_max + 1))
        for i in rng.choice(m, size=size, replace=False):
            sets[int(i)].append(e)
    return Instance.of(n, sets, k)


def graph_to_maxvertexcover(
    num_vertices: int, edges: Iterable[tuple[int, int]], k: int
) -> Instance:
    """Edges become elements and vertices become their incident edge sets,
    so every element has frequency exactly 2.

    Edge ids follow the input order, 1-based. Self-loops and duplicate edges
    are rejected.
    """
    if num_vertices < 0:
        raise ValueError(f"vertex count must be nonnegative, got {num_vertices}")
    if k < 0:
        raise ValueError(f"budget must be nonnegative, got {k}")
    incident: list[list[int]] = [[] for _ in range(num_vertices)]
    seen: set[tuple[int, int]] = set()
    eid = 0
    for u, v in edges:
        eid += 1
        for w in (u, v):
            if not 1 <= w <= num_vertices:
                raise ValueError(f"edge {eid} endpoint {w} out of range [1, {num_vertices}]")
        if u == v:
            raise ValueError(f"edge {eid} is a self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"duplicate edge {key} at position {eid}")
        seen.add(key)
        incident[u - 1].append(eid)
        incident[v - 1].append(eid)
    return Instance.of(eid, incident, k)
