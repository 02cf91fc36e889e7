"""Exact minimum set cover by branch and bound, for small instances."""
from __future__ import annotations

from typing import Hashable, Mapping, Optional


def reduce_dominated(masks: Mapping[Hashable, int], order=None) -> dict:
    """Drop keys whose mask is empty, duplicated, or a subset of another mask.

    Among equal masks the key that comes first in ``order`` survives.
    """
    keys = list(order) if order is not None else sorted(masks)
    position = {k: i for i, k in enumerate(keys)}
    kept = {}
    for k in keys:
        mk = masks[k]
        if not mk:
            continue
        dominated = False
        for j in keys:
            if j == k:
                continue
            mj = masks[j]
            if mk & ~mj == 0 and (mj != mk or position[j] < position[k]):
                dominated = True
                break
        if not dominated:
            kept[k] = mk
    return kept


def min_set_cover(masks: Mapping[Hashable, int], universe: int, cap: Optional[int] = 24):
    """Smallest list of keys whose masks OR to ``universe``.

    Returns None if the reduced instance has more than ``cap`` sets.  Raises
    ValueError if no cover exists.  Ties are broken by the order of the keys
    after sorting, so the answer is deterministic.
    """
    if universe == 0:
        return []
    reduced = reduce_dominated(masks, order=sorted(masks))
    total = 0
    for mk in reduced.values():
        total |= mk
    if total & universe != universe:
        raise ValueError("sets do not cover the universe")
    if cap is not None and len(reduced) > cap:
        return None
    keys = list(reduced)
    best = [keys[:]]

    # greedy upper bound first
    covered, greedy = 0, []
    while covered != universe:
        k = max(keys, key=lambda key: bin(reduced[key] & ~covered).count("1"))
        greedy.append(k)
        covered |= reduced[k]
    best[0] = greedy

    # element -> keys covering it, used to branch on the rarest uncovered element
    elements = [e for e in range(universe.bit_length()) if universe >> e & 1]
    covering = {e: [k for k in keys if reduced[k] >> e & 1] for e in elements}
    largest = max(bin(m).count("1") for m in reduced.values())

    def search(chosen, covered):
        if covered == universe:
            if len(chosen) < len(best[0]):
                best[0] = chosen[:]
            return
        remaining = bin(universe & ~covered).count("1")
        if len(chosen) + -(-remaining // largest) >= len(best[0]):
            return
        e = min((e for e in elements if not covered >> e & 1), key=lambda e: len(covering[e]))
        for k in covering[e]:
            chosen.append(k)
            search(chosen, covered | reduced[k])
            chosen.pop()

    search([], 0)
    return best[0]
