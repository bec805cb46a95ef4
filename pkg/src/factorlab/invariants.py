"""Exact graph invariants: minimum degree, vertex connectivity, independence number.

Connectivity follows Menger's theorem: the minimum over non-adjacent pairs of
the maximum number of internally vertex-disjoint paths, computed with
unit-capacity node-split max-flow.  Conventions: a disconnected graph has
connectivity 0, K_n has n-1, K_1 has 0.

The independence number uses branch-and-bound on bitsets (branch on a vertex
of maximum degree, greedy clique cover as the upper bound).  Both invariants
come with brute-force companions used as test oracles and as threshold
predicates at small orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .flownet import FlowNetwork
from .graphs import Graph


@dataclass(frozen=True)
class InvariantReport:
    """delta/kappa/alpha of one graph, with the standard sanity relations."""

    delta: int
    kappa: int
    alpha: int

    def __post_init__(self):
        if self.kappa > self.delta:
            raise ValueError(f"kappa {self.kappa} exceeds delta {self.delta}")


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("minimum degree undefined for the empty graph")
    return min(m.bit_count() for m in g.adj)


def is_connected_masked(g: Graph, alive: int) -> bool:
    """Connectivity of the subgraph induced by the `alive` bitmask.

    Graphs on one (or zero) surviving vertices count as connected.
    """
    if alive == 0:
        return True
    adj = g.adj
    start = alive & -alive
    reach = start
    frontier = start
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & alive & ~reach
        reach |= frontier
    return reach == alive


def is_connected(g: Graph) -> bool:
    return is_connected_masked(g, g.full_mask())


def local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    """Max number of internally vertex-disjoint s-t paths (s,t non-adjacent).

    Node splitting: every vertex except s and t becomes in/out with a
    unit-capacity internal arc; each edge contributes unit arcs both ways.
    """
    if g.has_edge(s, t):
        raise ValueError("local connectivity is defined for non-adjacent pairs")
    n = g.n
    # node ids: v_in = 2v, v_out = 2v+1; source = s_out, sink = t_in
    net = FlowNetwork(2 * n)
    for v in range(n):
        if v != s and v != t:
            net.add_edge(2 * v, 2 * v + 1, 1)
    for u in range(n):
        m = g.adj[u] >> (u + 1) << (u + 1)
        while m:
            low = m & -m
            v = low.bit_length() - 1
            net.add_edge(2 * u + 1, 2 * v, 1)
            net.add_edge(2 * v + 1, 2 * u, 1)
            m ^= low
    return net.max_flow(2 * s + 1, 2 * t)


def vertex_connectivity(g: Graph) -> int:
    """Exact connectivity via max-flow over all non-adjacent vertex pairs."""
    n = g.n
    if n == 0:
        raise ValueError("connectivity undefined for the empty graph")
    if n == 1:
        return 0
    if not is_connected(g):
        return 0
    best = n - 1  # attained iff complete
    for s in range(n):
        for t in range(s + 1, n):
            if not g.has_edge(s, t):
                best = min(best, local_vertex_connectivity(g, s, t))
                if best == 0:
                    return 0
    return best


def connectivity_at_least(g: Graph, t: int) -> bool:
    """Exact threshold test kappa(g) >= t, cheaper than computing kappa.

    For small separator budgets this scans all vertex subsets of size < t
    (removal must leave a connected graph); otherwise it falls back to
    early-exiting max-flow.
    """
    n = g.n
    if n == 0:
        raise ValueError("connectivity undefined for the empty graph")
    if t <= 0:
        return True
    if t > n - 1:
        return False
    full = g.full_mask()
    # subset scan when the number of candidate separators is modest
    count = sum(_binom(n, i) for i in range(t))
    if count <= 4096:
        if not is_connected(g):
            return False
        for size in range(1, t):
            for sub in combinations(range(n), size):
                rm = 0
                for v in sub:
                    rm |= 1 << v
                if not is_connected_masked(g, full ^ rm):
                    return False
        return True
    if not is_connected(g):
        return False
    for s in range(n):
        for u in range(s + 1, n):
            if not g.has_edge(s, u):
                if local_vertex_connectivity(g, s, u) < t:
                    return False
    return True


def vertex_connectivity_bruteforce(g: Graph) -> int:
    """Reference connectivity: minimum subset whose removal disconnects.

    Exponential subset scan; meant for cross-validation at small orders.
    """
    n = g.n
    if n == 0:
        raise ValueError("connectivity undefined for the empty graph")
    if n == 1:
        return 0
    if not is_connected(g):
        return 0
    full = g.full_mask()
    for size in range(1, n - 1):
        for sub in combinations(range(n), size):
            rm = 0
            for v in sub:
                rm |= 1 << v
            if not is_connected_masked(g, full ^ rm):
                return size
    return n - 1


def independence_number(g: Graph) -> int:
    """Exact maximum independent set size (branch-and-bound on bitsets)."""
    adj = g.adj
    best = 0

    def clique_cover_bound(pool: int) -> int:
        # Greedily partition `pool` into cliques; the count bounds alpha(pool).
        cliques = 0
        rest = pool
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            common = rest & adj[v]
            while common:
                w_low = common & -common
                w = w_low.bit_length() - 1
                rest ^= w_low
                common = common & adj[w] & rest
            cliques += 1
        return cliques

    def expand(pool: int, size: int):
        nonlocal best
        if pool == 0:
            if size > best:
                best = size
            return
        if size + clique_cover_bound(pool) <= best:
            return
        # branch on a vertex of maximum degree within the pool
        v = -1
        vdeg = -1
        m = pool
        while m:
            low = m & -m
            u = low.bit_length() - 1
            d = (adj[u] & pool).bit_count()
            if d > vdeg:
                vdeg = d
                v = u
            m ^= low
        expand(pool & ~(adj[v] | (1 << v)), size + 1)  # take v
        if size + (pool.bit_count() - 1) > best:
            expand(pool ^ (1 << v), size)  # skip v


    expand(g.full_mask(), 0)
    return best


def independence_number_bruteforce(g: Graph) -> int:
    """Reference alpha via full subset enumeration (small orders only)."""
    adj = g.adj
    best = 0
    for mask in range(1 << g.n):
        size = mask.bit_count()
        if size <= best:
            continue
        ok = True
        m = mask
        while m:
            low = m & -m
            if adj[low.bit_length() - 1] & mask:
                ok = False
                break
            m ^= low
        if ok:
            best = size
    return best


def compute_invariants(g: Graph) -> InvariantReport:
    """delta, kappa, alpha in one report (kappa <= delta is re-asserted)."""
    return InvariantReport(
        delta=min_degree(g),
        kappa=vertex_connectivity(g),
        alpha=independence_number(g),
    )


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out
