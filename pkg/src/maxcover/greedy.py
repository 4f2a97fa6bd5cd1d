"""Iterative best-marginal-gain selection with a full per-step trace."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .core import Instance, Solution, set_masks


@dataclass(frozen=True)
class GreedyTrace:
    """Pick order, per-step marginal gains, and uncovered counts after each step."""

    picks: tuple[int, ...]
    marginal_gains: tuple[int, ...]
    uncovered_after: tuple[int, ...]


def extend_greedily(
    masks: Sequence[int], taken: list[bool], covered: int, steps: int
) -> tuple[list[int], list[int], int]:
    """Append ``steps`` picks, each maximizing newly covered elements.

    Ties go to the lowest set index, and zero-gain picks are still made so
    exactly ``steps`` sets are added while any remain. ``taken`` is updated
    in place. Returns (picks, gains, covered mask).
    """
    picks: list[int] = []
    gains: list[int] = []
    for _ in range(steps):
        best_idx = -1
        best_gain = -1
        for i, mask in enumerate(masks):
            if taken[i]:
                continue
            gain = (mask & ~covered).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_idx = i
        if best_idx < 0:
            break
        taken[best_idx] = True
        covered |= masks[best_idx]
        picks.append(best_idx)
        gains.append(best_gain)
    return picks, gains, covered


def greedy_cover(inst: Instance) -> tuple[Solution, GreedyTrace]:
    """Run min(k, m) greedy steps and report the per-step trace alongside."""
    masks = set_masks(inst)
    taken = [False] * inst.m
    picks, gains, covered_mask = extend_greedily(masks, taken, 0, inst.effective_budget)
    uncovered_after = []
    uncovered = inst.n
    for g in gains:
        uncovered -= g
        uncovered_after.append(uncovered)
    covered = covered_mask.bit_count()
    solution = Solution(tuple(sorted(picks)), covered, inst.n - covered)
    return solution, GreedyTrace(tuple(picks), tuple(gains), tuple(uncovered_after))


def greedy_guarantee(p: int, k: int, m: int) -> float:
    """Worst-case coverage ratio 1 - exp(-max(p*k/m, 1)) of the greedy picker
    when every element appears in at least p of the m sets."""
    if p < 1 or k < 1 or m < 1:
        raise ValueError(f"p, k, and m must all be positive, got p={p}, k={k}, m={m}")
    return 1.0 - math.exp(-max(p * k / m, 1.0))
