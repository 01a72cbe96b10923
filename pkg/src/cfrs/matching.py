"""Maximum bipartite matching via Hopcroft-Karp."""

from __future__ import annotations

from collections import deque
from typing import Optional, Sequence

_UNSEEN = -1


def maximum_bipartite_matching(
    adj: Sequence[Sequence[int]], n_right: int
) -> tuple[list[Optional[int]], list[Optional[int]]]:
    """Compute a maximum matching of a bipartite graph.

    ``adj[u]`` lists the right-side neighbors of left vertex u.  The
    adjacency order fixes the returned matching, so callers should pass
    sorted lists when they need deterministic output.  Returns
    ``(match_left, match_right)`` with None marking unmatched vertices.
    """
    n_left = len(adj)
    match_left: list[Optional[int]] = [None] * n_left
    match_right: list[Optional[int]] = [None] * n_right
    dist = [0] * n_left

    def bfs() -> bool:
        queue: deque[int] = deque()
        for u in range(n_left):
            if match_left[u] is None:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _UNSEEN
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_right[v]
                if w is None:
                    found = True
                elif dist[w] == _UNSEEN:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        for v in adj[u]:
            w = match_right[v]
            if w is None or (dist[w] == dist[u] + 1 and dfs(w)):
                match_left[u] = v
                match_right[v] = u
                return True
        dist[u] = _UNSEEN
        return False

    while bfs():
        for u in range(n_left):
            if match_left[u] is None:
                dfs(u)
    return match_left, match_right
