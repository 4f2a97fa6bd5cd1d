"""Shared builders and independent oracles for the test suite."""

import random

from maxcover import Instance


def random_instance(rand: random.Random, n: int, m: int, k: int, p_max: int,
                    min_freq: int = 1) -> Instance:
    """Instance where each element joins between min_freq and p_max random sets."""
    sets = [[] for _ in range(m)]
    cap = min(p_max, m)
    for e in range(1, n + 1):
        f = rand.randint(min(min_freq, cap), cap)
        for i in rand.sample(range(m), f):
            sets[i].append(e)
    return Instance.of(n, sets, k)


def union_coverage(inst: Instance, chosen) -> int:
    """Independent recount via plain set union, no bitmask kernel."""
    union = set()
    for i in chosen:
        union.update(inst.sets[i])
    return len(union)
