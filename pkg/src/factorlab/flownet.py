"""Small integer max-flow network (Dinic) shared by connectivity and the LP oracle.

Capacities are plain Python ints, so every verdict derived from a flow value
is exact; there is no floating point anywhere in this module.
"""

from __future__ import annotations

from collections import deque

_INF = 1 << 60


class FlowNetwork:
    """Directed flow network over nodes 0..n-1 with integer capacities."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]  # arc ids per node
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, capacity: int) -> int:
        """Add arc u->v; returns the arc id (its residual reverse is id^1)."""
        aid = len(self.to)
        self.head[u].append(aid)
        self.to.append(v)
        self.cap.append(capacity)
        self.head[v].append(aid + 1)
        self.to.append(u)
        self.cap.append(0)
        return aid

    def flow_on(self, aid: int) -> int:
        """Flow currently routed through arc aid (capacity moved to reverse)."""
        return self.cap[aid ^ 1]

    def max_flow(self, s: int, t: int, limit: int = _INF) -> int:
        """Dinic's algorithm; stops early once `limit` units have been pushed."""
        to, cap, head = self.to, self.cap, self.head
        level = [0] * self.n
        iters = [0] * self.n

        def bfs() -> bool:
            for i in range(self.n):
                level[i] = -1
            level[s] = 0
            q = deque([s])
            while q:
                u = q.popleft()
                for aid in head[u]:
                    v = to[aid]
                    if cap[aid] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        q.append(v)
            return level[t] >= 0

        def dfs(u: int, up: int) -> int:
            if u == t:
                return up
            while iters[u] < len(head[u]):
                aid = head[u][iters[u]]
                v = to[aid]
                if cap[aid] > 0 and level[v] == level[u] + 1:
                    pushed = dfs(v, min(up, cap[aid]))
                    if pushed > 0:
                        cap[aid] -= pushed
                        cap[aid ^ 1] += pushed
                        return pushed
                iters[u] += 1
            level[u] = -1
            return 0

        total = 0
        while total < limit and bfs():
            for i in range(self.n):
                iters[i] = 0
            while total < limit:
                pushed = dfs(s, limit - total)
                if pushed == 0:
                    break
                total += pushed
        return total
