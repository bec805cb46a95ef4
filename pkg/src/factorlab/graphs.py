"""Immutable simple graphs on dense integer ids, graph6 codec, constructions.

Vertices are 0..n-1 and adjacency is stored as one bitmask per vertex, so
unions/intersections against vertex subsets are single integer operations.
All functions are pure; Graph values are safe to share across workers.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator


class Graph6Error(ValueError):
    """Raised for malformed graph6 input; carries the offending byte offset."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class Graph:
    """A finite simple graph: no loops, no multi-edges, undirected."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        masks = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.adj = tuple(masks)

    @classmethod
    def _from_masks(cls, n: int, masks: tuple[int, ...]) -> "Graph":
        # Trusted fast path for enumerators; callers guarantee symmetry.
        g = object.__new__(cls)
        g.n = n
        g.adj = masks
        return g

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return bits(self.adj[v])

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            while m:
                low = m & -m
                yield (u, low.bit_length() - 1)
                m ^= low

    def vertices(self) -> range:
        return range(self.n)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def mask_of(vertices: Iterable[int], n: int) -> int:
    """Pack a vertex subset into a bitmask, validating membership in 0..n-1."""
    m = 0
    for v in vertices:
        if not (0 <= v < n):
            raise ValueError(f"vertex {v} outside 0..{n - 1}")
        m |= 1 << v
    return m


def bits(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into a sorted tuple of vertex ids."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


# ---------------------------------------------------------------------------
# graph6 codec
#
# Layout per the standard format: one order byte chr(n+63) for n <= 62,
# then the upper triangle of the adjacency matrix in column-major order
# (pairs (0,1), (0,2), (1,2), (0,3), ...) packed 6 bits per byte, each byte
# offset by 63 into printable ASCII, zero-padded to a byte boundary.
# ---------------------------------------------------------------------------

_G6_MAX_N = 62


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    if not line:
        raise Graph6Error("empty graph6 string")
    codes = []
    for off, ch in enumerate(line):
        c = ord(ch)
        if not (63 <= c <= 126):
            raise Graph6Error(f"non-printable graph6 byte {c!r}", off)
        codes.append(c - 63)
    n = codes[0]
    if n == 63:  # '~' starts the multi-byte order header for n > 62
        raise Graph6Error("orders above 62 are not supported", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(codes) - 1 < nbytes:
        raise Graph6Error(
            f"truncated graph6 body: need {nbytes} bytes, got {len(codes) - 1}",
            len(line),
        )
    if len(codes) - 1 > nbytes:
        raise Graph6Error("trailing garbage after graph6 body", 1 + nbytes)
    masks = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            code = codes[1 + pos // 6]
            if code >> (5 - pos % 6) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            pos += 1
    # Padding bits must be zero or the line is not canonical.
    while pos < 6 * nbytes:
        if codes[1 + pos // 6] >> (5 - pos % 6) & 1:
            raise Graph6Error("nonzero padding bit", 1 + pos // 6)
        pos += 1
    return Graph._from_masks(n, tuple(masks))


def write_graph6(g: Graph) -> str:
    """Encode a Graph as its canonical graph6 line (orders 0..62 only)."""
    if g.n > _G6_MAX_N:
        raise ValueError(f"graph6 order header supports n <= {_G6_MAX_N}, got {g.n}")
    out = [chr(g.n + 63)]
    buf = 0
    filled = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            buf = buf << 1 | (col >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(buf + 63))
                buf = 0
                filled = 0
    if filled:
        out.append(chr((buf << (6 - filled)) + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a stream of graph6 lines, tagging errors with 1-based line numbers."""
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            yield parse_graph6(text)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from exc


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def complete(n: int) -> Graph:
    """K_n: all n(n-1)/2 edges."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    full = (1 << n) - 1
    return Graph._from_masks(n, tuple(full ^ (1 << v) for v in range(n)))


def disjoint_clique_union(m: int, t: int) -> Graph:
    """mK_t: m disjoint copies of the complete graph on t vertices."""
    if m < 0:
        raise ValueError("copy count must be non-negative")
    if t < 1:
        raise ValueError("clique size must be at least 1")
    masks = []
    for c in range(m):
        block = ((1 << t) - 1) << (c * t)
        for v in range(c * t, (c + 1) * t):
            masks.append(block ^ (1 << v))
    return Graph._from_masks(m * t, tuple(masks))


def join(g1: Graph, g2: Graph) -> Graph:
    """Join g1 and g2: disjoint union plus every edge between the two parts.

    g1 keeps ids 0..n1-1; g2 is shifted to n1..n1+n2-1.
    """
    n1, n2 = g1.n, g2.n
    low = (1 << n1) - 1
    high = ((1 << n2) - 1) << n1
    masks = [g1.adj[v] | high for v in range(n1)]
    masks += [(g2.adj[v] << n1) | low for v in range(n2)]
    return Graph._from_masks(n1 + n2, tuple(masks))


def delete_vertices(g: Graph, removed: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the surviving vertices.

    Survivors are relabeled 0..n-|removed|-1 preserving relative order;
    returns (subgraph, kept) where kept[new_id] = old_id, so witnesses found
    in the subgraph can be reported in the original labeling.
    """
    rm = mask_of(removed, g.n)
    kept = bits(g.full_mask() ^ rm)
    masks = []
    for old in kept:
        row = g.adj[old] & ~rm
        new_row = 0
        for new_id, old_id in enumerate(kept):
            if row >> old_id & 1:
                new_row |= 1 << new_id
        masks.append(new_row)
    return Graph._from_masks(len(kept), tuple(masks)), kept


def deg_avoiding(g: Graph, v: int, avoid: Iterable[int]) -> int:
    """Number of neighbors of v outside the given vertex set."""
    m = mask_of(avoid, g.n)
    if m >> v & 1:
        raise ValueError(f"vertex {v} lies in the avoided set")
    return (g.adj[v] & ~m).bit_count()


def edges_between(g: Graph, xs: Iterable[int], ys: Iterable[int]) -> int:
    """Count edges with one endpoint in xs and the other in ys (disjoint sets)."""
    mx = mask_of(xs, g.n)
    my = mask_of(ys, g.n)
    if mx & my:
        raise ValueError("vertex sets overlap")
    return sum((g.adj[v] & my).bit_count() for v in bits(mx))


def is_independent(g: Graph, xs: Iterable[int]) -> bool:
    """True iff the induced subgraph on xs has no edge."""
    m = mask_of(xs, g.n)
    rest = m
    while rest:
        low = rest & -rest
        if g.adj[low.bit_length() - 1] & m:
            return False
        rest ^= low
    return True


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

ENUMERATION_CAP = 7

_PAIRS = {n: list(combinations(range(n), 2)) for n in range(ENUMERATION_CAP + 1)}


def enumerate_graphs(n: int, cap: int = ENUMERATION_CAP) -> Iterator[Graph]:
    """Yield all 2^(n(n-1)/2) labeled graphs on n vertices, each exactly once.

    Edge subsets are walked as a binary counter over the pairs
    (0,1), (0,2), ..., (n-2,n-1), which makes the order deterministic.
    No isomorphism reduction is attempted.
    """
    if n > cap:
        raise ValueError(f"enumeration capped at n <= {cap} (asked for {n})")
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    pairs = _PAIRS.get(n) or list(combinations(range(n), 2))
    npairs = len(pairs)
    for code in range(1 << npairs):
        masks = [0] * n
        m = code
        while m:
            low = m & -m
            u, v = pairs[low.bit_length() - 1]
            masks[u] |= 1 << v
            masks[v] |= 1 << u
            m ^= low
        yield Graph._from_masks(n, tuple(masks))


def enumerate_graphs_min_degree(n: int, dmin: int) -> Iterator[Graph]:
    """Yield exactly the labeled graphs on n vertices with minimum degree >= dmin.

    Backtracks over adjacency rows (vertex r's neighbors among 0..r-1): at
    each row the vertices that can no longer reach degree dmin without this
    row are forced in, and dead prefixes are cut, so the cost scales with the
    number of survivors rather than with 2^(n(n-1)/2).  Yields the same graph
    set as filtering enumerate_graphs(n) by min degree, in a deterministic
    (but different) order.  Intended as stream fuel for hypothesis-prefiltered
    verification runs.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if dmin <= 0:
        yield from enumerate_graphs(n, cap=max(n, ENUMERATION_CAP))
        return
    if n == 0:
        yield Graph._from_masks(0, ())
        return
    if dmin > n - 1:
        return

    rows = [0] * n  # rows[r] = neighbors of r among 0..r-1
    degs = [0] * n

    def rec(r: int) -> Iterator[Graph]:
        if r == n:
            masks = [0] * n
            for v in range(n):
                row = rows[v]
                masks[v] |= row
                while row:
                    low = row & -row
                    masks[low.bit_length() - 1] |= 1 << v
                    row ^= low
            yield Graph._from_masks(n, tuple(masks))
            return
        left = n - 1 - r  # rows after this one can add at most 1 to each deg
        required = 0
        for v in range(r):
            need = dmin - degs[v]
            if need > left + 1:
                return  # v cannot reach dmin even if all remaining rows hit it
            if need > left:
                required |= 1 << v
        minsize = max(dmin - left, required.bit_count())
        optional = ((1 << r) - 1) ^ required
        base = required.bit_count()
        sub = 0
        while True:
            if base + sub.bit_count() >= minsize:
                row = required | sub
                rows[r] = row
                degs[r] = row.bit_count()
                m = row
                while m:
                    low = m & -m
                    degs[low.bit_length() - 1] += 1
                    m ^= low
                yield from rec(r + 1)
                m = row
                while m:
                    low = m & -m
                    degs[low.bit_length() - 1] -= 1
                    m ^= low
                degs[r] = 0
                rows[r] = 0
            sub = (sub - optional) & optional
            if not sub:
                break

    yield from rec(1)
