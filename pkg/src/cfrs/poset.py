"""Chains, antichains, and minimum-price chain partitions of a DAG.

A chain is a vertex sequence linked by the transitive closure; its price is
its maximum vertex weight.  A chain partition's price sums the chain prices.
A tower of antichains has one antichain of each size 1..width, and its value
sums the per-level minimum weights.  For monotone weights the minimum
partition price equals the maximum tower value, and
:func:`min_price_chain_partition` returns a partition together with a tower
of matching value as a machine-checkable optimality certificate.
"""

from __future__ import annotations

from typing import Sequence

from .containment import Dag, width
from .errors import BudgetError
from .matching import maximum_bipartite_matching
from .matrix import bits_of, mask_of

Chain = tuple[int, ...]
ChainPartition = tuple[Chain, ...]
Antichain = frozenset[int]
Tower = tuple[Antichain, ...]

BRUTE_FORCE_CAP = 10


def _validated_weights(dag: Dag, weights: Sequence[int]) -> tuple[int, ...]:
    w = tuple(weights)
    if len(w) != dag.n:
        raise ValueError(f"expected {dag.n} weights, got {len(w)}")
    if any(not isinstance(x, int) or x < 0 for x in w):
        raise ValueError("weights must be non-negative integers")
    return w


def is_monotone(dag: Dag, weights: Sequence[int]) -> bool:
    """True iff weight(u) <= weight(v) for every arc (u, v)."""
    w = _validated_weights(dag, weights)
    return all(w[u] <= w[v] for u, v in dag.arcs)


def is_chain(dag: Dag, seq: Sequence[int]) -> bool:
    return all((dag.reach[a] >> b) & 1 for a, b in zip(seq, seq[1:]))


def is_chain_partition(dag: Dag, partition: Sequence[Sequence[int]]) -> bool:
    flat = [v for chain in partition for v in chain]
    return sorted(flat) == list(range(dag.n)) and all(
        is_chain(dag, chain) for chain in partition
    )


def is_antichain(dag: Dag, vertices) -> bool:
    vs = list(vertices)
    return all(
        not (dag.reach[a] >> b) & 1 and not (dag.reach[b] >> a) & 1
        for i, a in enumerate(vs)
        for b in vs[i + 1:]
    )


def is_tower(dag: Dag, tower: Sequence[Antichain]) -> bool:
    return len(tower) == width(dag) and all(
        len(level) == i + 1 and is_antichain(dag, level)
        for i, level in enumerate(tower)
    )


def chain_price(chain: Sequence[int], weights: Sequence[int]) -> int:
    return max(weights[v] for v in chain)


def partition_price(partition: Sequence[Sequence[int]], weights: Sequence[int]) -> int:
    return sum(chain_price(chain, weights) for chain in partition)


def antichain_value(antichain, weights: Sequence[int]) -> int:
    return min(weights[v] for v in antichain)


def tower_value(tower: Sequence[Antichain], weights: Sequence[int]) -> int:
    return sum(antichain_value(level, weights) for level in tower)


def evaluate(partition, tower, weights) -> tuple[int, int]:
    """Price of a chain partition and value of a tower, as a pair."""
    return partition_price(partition, weights), tower_value(tower, weights)


# ---------------------------------------------------------------------------
# Matching-based machinery, shared by the public operations and the
# min-price recursion.  All helpers take an explicit sorted vertex subset and
# the host DAG's global reachability masks; the subsets used by the
# recursion are closed under intermediate vertices, so restricting the
# global closure is exact.


def _matching(members: list[int], reach: tuple[int, ...]):
    index = {v: i for i, v in enumerate(members)}
    adj = [
        [index[w] for w in members if (reach[v] >> w) & 1]
        for v in members
    ]
    match_left, match_right = maximum_bipartite_matching(adj, len(members))
    return adj, match_left, match_right


def _width_of(members: list[int], reach: tuple[int, ...]) -> int:
    _, match_left, _ = _matching(members, reach)
    return len(members) - sum(1 for v in match_left if v is not None)


def _dilworth_chains(members: list[int], reach: tuple[int, ...]) -> list[list[int]]:
    _, match_left, match_right = _matching(members, reach)
    chains = []
    for i, v in enumerate(members):
        if match_right[i] is not None:
            continue
        chain = [v]
        j = i
        while match_left[j] is not None:
            j = match_left[j]
            chain.append(members[j])
        chains.append(chain)
    return chains


def _max_antichain(members: list[int], reach: tuple[int, ...]) -> Antichain:
    adj, match_left, match_right = _matching(members, reach)
    # Koenig: alternate from unmatched left copies; uncovered-both vertices
    # form a maximum antichain.
    in_z_left = [match_left[i] is None for i in range(len(members))]
    in_z_right = [False] * len(members)
    stack = [i for i in range(len(members)) if in_z_left[i]]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v == match_left[u] or in_z_right[v]:
                continue
            in_z_right[v] = True
            w = match_right[v]
            if w is not None and not in_z_left[w]:
                in_z_left[w] = True
                stack.append(w)
    antichain = frozenset(
        members[i] for i in range(len(members)) if in_z_left[i] and not in_z_right[i]
    )
    assert len(antichain) == len(members) - sum(
        1 for v in match_left if v is not None
    )
    return antichain


def dilworth_partition(dag: Dag) -> ChainPartition:
    """A chain partition of minimum size, i.e. of exactly width(D) chains.

    Uses Fulkerson's reduction: a maximum matching on the bipartite split of
    the transitive closure, chains assembled from matched pairs.
    """
    chains = _dilworth_chains(list(range(dag.n)), dag.reach)
    return tuple(tuple(c) for c in sorted(chains))


def maximum_antichain(dag: Dag) -> Antichain:
    """An antichain of maximum cardinality, from a Koenig vertex cover."""
    return _max_antichain(list(range(dag.n)), dag.reach)


def min_price_chain_partition(
    dag: Dag, weights: Sequence[int]
) -> tuple[ChainPartition, Tower]:
    """Minimum-price chain partition with a tower certifying optimality.

    Requires a monotone weight function.  The returned partition has exactly
    width(D) chains and its price equals the returned tower's value, which
    certifies optimality since every partition's price is at least every
    tower's value.

    Works by removing a minimum-weight source, solving the rest, and either
    appending a singleton chain plus a new maximum-antichain level (when the
    width grew) or re-stitching the chains across the ancestor set of a
    maximum antichain (when it did not).
    """
    w = _validated_weights(dag, weights)
    if not is_monotone(dag, w):
        raise ValueError("weight function is not monotone on the digraph arcs")
    reach = dag.reach

    removal: list[int] = []
    remaining = set(range(dag.n))
    while remaining:
        low = min(w[v] for v in remaining)
        pick = None
        for v in sorted(remaining):
            if w[v] != low:
                continue
            if any(u != v and (reach[u] >> v) & 1 for u in remaining):
                continue
            pick = v
            break
        # monotone weights guarantee a minimum-weight source exists
        assert pick is not None, "no minimum-weight source"
        removal.append(pick)
        remaining.remove(pick)

    chains: list[list[int]] = []
    tower: list[Antichain] = []
    members: list[int] = []
    width_now = 0
    for v in reversed(removal):
        new_members = sorted(members + [v])
        new_width = _width_of(new_members, reach)
        if new_width == width_now + 1:
            chains.append([v])
            level = _max_antichain(new_members, reach)
            tower.append(level)
        elif new_width == width_now:
            base = _max_antichain(members, reach)
            assert len(base) == new_width
            base_mask = mask_of(base)
            ancestors = {u for u in new_members if reach[u] & base_mask}
            assert v in ancestors
            trimmed = [[x for x in c if x not in ancestors] for c in chains]
            upper = sorted(set(base) | ancestors)
            upper_chains = _dilworth_chains(upper, reach)
            assert len(upper_chains) == new_width and all(trimmed), \
                "chain partition misaligned with antichain"
            tails: dict[int, list[int]] = {}
            for c in trimmed:
                hits = [x for x in c if x in base]
                assert len(hits) == 1 and c[0] == hits[0], \
                    "trimmed chain does not start at its antichain vertex"
                tails[hits[0]] = c
            chains = []
            for c in upper_chains:
                hits = [x for x in c if x in base]
                assert len(hits) == 1 and c[-1] == hits[0], \
                    "upper chain does not end at its antichain vertex"
                chains.append(c + tails[hits[0]][1:])
        else:
            raise AssertionError("width changed by more than one")
        members = new_members
        width_now = new_width

    partition = tuple(tuple(c) for c in sorted(chains))
    certificate = tuple(tower)
    price, value = evaluate(partition, certificate, w)
    assert price == value, "certificate value does not match partition price"
    return partition, certificate


def brute_force_min_price(dag: Dag, weights: Sequence[int],
                          cap: int = BRUTE_FORCE_CAP) -> int:
    """Exact minimum price over all chain partitions, by exhaustion.

    Test oracle: no monotonicity required.  Enumerates set partitions whose
    blocks are pairwise comparable (every such block is a chain).
    """
    w = _validated_weights(dag, weights)
    if dag.n > cap:
        raise BudgetError(f"{dag.n} vertices exceed the brute-force cap of {cap}")
    reach = dag.reach
    comparable = [
        reach[v] | mask_of(u for u in range(dag.n) if (reach[u] >> v) & 1)
        for v in range(dag.n)
    ]
    best = sum(w)  # all-singleton partition
    block_masks: list[int] = []
    block_price: list[int] = []

    def extend(v: int, total: int) -> None:
        nonlocal best
        if total >= best:
            return
        if v == dag.n:
            best = total
            return
        for b in range(len(block_masks)):
            if block_masks[b] & ~comparable[v]:
                continue
            old = block_price[b]
            new = max(old, w[v])
            block_masks[b] |= 1 << v
            block_price[b] = new
            extend(v + 1, total + new - old)
            block_masks[b] ^= 1 << v
            block_price[b] = old
        block_masks.append(1 << v)
        block_price.append(w[v])
        extend(v + 1, total + w[v])
        block_masks.pop()
        block_price.pop()

    extend(0, 0)
    return best


def brute_force_max_tower(dag: Dag, weights: Sequence[int],
                          cap: int = BRUTE_FORCE_CAP) -> int:
    """Exact maximum tower value, by enumerating every antichain.

    Level choices are independent, so the answer is the sum over sizes
    1..width of the best value among antichains of that exact size.
    """
    w = _validated_weights(dag, weights)
    if dag.n > cap:
        raise BudgetError(f"{dag.n} vertices exceed the brute-force cap of {cap}")
    reach = dag.reach
    comparable = [
        reach[v] | mask_of(u for u in range(dag.n) if (reach[u] >> v) & 1)
        for v in range(dag.n)
    ]
    best_by_size: dict[int, int] = {}
    for subset in range(1, 1 << dag.n):
        if any(subset & comparable[v] for v in bits_of(subset)):
            continue
        size = subset.bit_count()
        value = min(w[v] for v in bits_of(subset))
        if best_by_size.get(size, -1) < value:
            best_by_size[size] = value
    wdt = max(best_by_size)
    return sum(best_by_size[i] for i in range(1, wdt + 1))
