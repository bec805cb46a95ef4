"""Bound evaluators, sharpness constructions, and stream-scale verification.

The central sufficient condition verified here: a graph G is fractional
(a,b,k)-critical covered whenever

    kappa(G) >= max{ (2b(a+1)(b+1)+4bk+5)/(4b), ((a+1)^2 alpha(G)+4bk+5)/(4b) }.

Bounds are exact rationals and every comparison against kappa is exact; no
rounding enters any verdict.  The two construction families show the bound
cannot be relaxed by 1/(4b): K_{3+k} v 2K_1 sits a quarter below the first
branch, K_{p+k} v mK_{(a+1)/2} a quarter below the second.

verify_theorem3_on_stream scans graph streams for counterexamples.  Graphs
whose connectivity provably misses the bound are discarded by cheap
prefilters (min degree, then a threshold connectivity test); survivors get
the full criticality check through a vectorized whole-subset scan, and any
reported failure is re-derived with the scalar checker before it is believed.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

from . import covered as cov
from .covered import (
    CriticalVerdict,
    FactorParams,
    LemmaWitness,
    covered_batch,
    is_fractional_abk_critical_covered,
)
from .graphs import Graph, complete, delete_vertices, disjoint_clique_union, join, write_graph6
from .invariants import independence_number, min_degree, vertex_connectivity


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------


def theorem3_bound(a: int, b: int, k: int, alpha: int) -> Fraction:
    """max{(2b(a+1)(b+1)+4bk+5)/(4b), ((a+1)^2*alpha+4bk+5)/(4b)}, exactly."""
    if not (1 <= a <= b):
        raise ValueError(f"need 1 <= a <= b, got a={a}, b={b}")
    if k < 0:
        raise ValueError(f"need k >= 0, got k={k}")
    if alpha < 1:
        raise ValueError(f"need alpha >= 1, got alpha={alpha}")
    first = Fraction(2 * b * (a + 1) * (b + 1) + 4 * b * k + 5, 4 * b)
    second = Fraction((a + 1) ** 2 * alpha + 4 * b * k + 5, 4 * b)
    return max(first, second)


def corollary1_bound(a: int, b: int, alpha: int) -> Fraction:
    """The k-free covered bound max{(2b(a+1)(b+1)+5)/(4b), ((a+1)^2*alpha+5)/(4b)}."""
    if not (1 <= a <= b):
        raise ValueError(f"need 1 <= a <= b, got a={a}, b={b}")
    if alpha < 1:
        raise ValueError(f"need alpha >= 1, got alpha={alpha}")
    first = Fraction(2 * b * (a + 1) * (b + 1) + 5, 4 * b)
    second = Fraction((a + 1) ** 2 * alpha + 5, 4 * b)
    return max(first, second)


def theorem1_bound(r: int, alpha: int) -> Fraction:
    """Fractional r-factor existence bound max{(r+1)^2/2, (r+1)^2*alpha/(4r)}."""
    if r < 1:
        raise ValueError(f"need r >= 1, got r={r}")
    if alpha < 1:
        raise ValueError(f"need alpha >= 1, got alpha={alpha}")
    return max(Fraction((r + 1) ** 2, 2), Fraction((r + 1) ** 2 * alpha, 4 * r))


@dataclass(frozen=True)
class BoundReport:
    params: FactorParams
    kappa: int
    alpha: int
    bound: Fraction
    hypothesis_met: bool


def check_theorem3_hypothesis(g: Graph, params: FactorParams) -> BoundReport:
    """Exact kappa/alpha of g compared against the rational bound."""
    if g.n < 1:
        raise ValueError("hypothesis check needs at least one vertex")
    kappa = vertex_connectivity(g)
    alpha = independence_number(g)
    bound = theorem3_bound(params.a, params.b, params.k, alpha)
    return BoundReport(
        params=params,
        kappa=kappa,
        alpha=alpha,
        bound=bound,
        hypothesis_met=Fraction(kappa) >= bound,
    )


def check_theorem2_condition(g: Graph, params: FactorParams) -> bool:
    """Degree-based sufficient condition for (a,b,k)-critical covered graphs.

    Requires order n >= ((a+b)(a+b-1)+bk+3)/b, min degree >= a+k+1, and
    max{d(x), d(y)} >= (an+bk+2)/(a+b) for every non-adjacent pair x, y.
    """
    a, b, k = params.a, params.b, params.k
    if a < 1 or b < max(2, a):
        raise ValueError(f"need a >= 1 and b >= max(2, a), got a={a}, b={b}")
    n = g.n
    if Fraction(n) < Fraction((a + b) * (a + b - 1) + b * k + 3, b):
        return False
    if min_degree(g) < a + k + 1:
        return False
    pair_bound = Fraction(a * n + b * k + 2, a + b)
    for x in range(n):
        for y in range(x + 1, n):
            if not g.has_edge(x, y):
                if Fraction(max(g.degree(x), g.degree(y))) < pair_bound:
                    return False
    return True


# ---------------------------------------------------------------------------
# sharpness constructions
# ---------------------------------------------------------------------------


class CertificateError(ValueError):
    """A sharpness certificate failed one of its end-to-end assertions."""


@dataclass(frozen=True)
class SharpnessCertificate:
    """A boundary construction plus everything a validator needs to re-check it.

    `removed` and the witness ids refer to the constructed graph's labeling;
    the witness describes the failing subset after deleting `removed`.
    """

    graph: Graph
    params: FactorParams
    expected_kappa: int
    expected_alpha: int
    removed: tuple[int, ...]
    witness: LemmaWitness


def build_remark1(k: int) -> SharpnessCertificate:
    """K_{3+k} v 2K_1 with (a,b)=(1,1): connectivity lands exactly 1/(4b) short.

    Removing k clique vertices and taking X = the remaining 3 gives
    theta = 3 - 2 = 1 < 2 = epsilon, so the graph is not fractional
    (1,1,k)-critical covered even though kappa = 3 + k.
    """
    if k < 0:
        raise ValueError(f"need k >= 0, got k={k}")
    g = join(complete(3 + k), disjoint_clique_union(2, 1))
    return SharpnessCertificate(
        graph=g,
        params=FactorParams(1, 1, k),
        expected_kappa=3 + k,
        expected_alpha=2,
        removed=tuple(range(k)),
        witness=LemmaWitness(
            X=tuple(range(k, k + 3)),
            Y=(k + 3, k + 4),
            theta=1,
            epsilon=2,
        ),
    )


def build_remark2(a: int, b: int, m: int, k: int) -> SharpnessCertificate:
    """K_{p+k} v mK_{(a+1)/2} with p = ((a+1)^2 m + 4)/(4b): sharp for the alpha branch.

    Parameter constraints are validated with explicit messages: a odd,
    b >= a >= 1, m >= 2 (m = 1 would collapse the construction into a complete
    graph whose connectivity is n-1, not p+k), 4b must divide (a+1)^2 m + 4,
    and p >= 2 so the witness X spans an edge and epsilon = 2.
    """
    if not (1 <= a <= b):
        raise ValueError(f"need b >= a >= 1, got a={a}, b={b}")
    if a % 2 == 0:
        raise ValueError(f"a must be odd, got a={a}")
    if m < 2:
        raise ValueError(f"m must be at least 2, got m={m} (m=1 degenerates to a complete graph)")
    if k < 0:
        raise ValueError(f"need k >= 0, got k={k}")
    numerator = (a + 1) ** 2 * m + 4
    if numerator % (4 * b) != 0:
        raise ValueError(
            f"(a+1)^2*m+4 = {numerator} is not divisible by 4b = {4 * b}"
        )
    p = numerator // (4 * b)
    if p < 2:
        raise ValueError(f"need p >= 2 so X spans an edge, got p={p}")
    t = (a + 1) // 2
    g = join(complete(p + k), disjoint_clique_union(m, t))
    clique_union = tuple(range(p + k, p + k + m * t))
    return SharpnessCertificate(
        graph=g,
        params=FactorParams(a, b, k),
        expected_kappa=p + k,
        expected_alpha=m,
        removed=tuple(range(k)),
        witness=LemmaWitness(
            X=tuple(range(k, p + k)),
            Y=clique_union,
            theta=1,
            epsilon=2,
        ),
    )


def validate_certificate(cert: SharpnessCertificate) -> None:
    """Re-derive every claim in the certificate; raise CertificateError on any gap.

    Checks kappa and alpha against the stated values, re-evaluates theta and
    epsilon on the stated (U, X), confirms Y is exactly the derived set, and
    runs the full criticality checker to confirm the graph fails.
    """
    g, params = cert.graph, cert.params
    kappa = vertex_connectivity(g)
    if kappa != cert.expected_kappa:
        raise CertificateError(f"kappa is {kappa}, expected {cert.expected_kappa}")
    alpha = independence_number(g)
    if alpha != cert.expected_alpha:
        raise CertificateError(f"alpha is {alpha}, expected {cert.expected_alpha}")
    if len(cert.removed) != params.k:
        raise CertificateError(f"|U| = {len(cert.removed)} but k = {params.k}")

    sub, kept = delete_vertices(g, cert.removed)
    to_local = {old: new for new, old in enumerate(kept)}
    try:
        x_local = tuple(to_local[v] for v in cert.witness.X)
        y_local = tuple(to_local[v] for v in cert.witness.Y)
    except KeyError as exc:
        raise CertificateError(f"witness id {exc} was deleted by U") from exc

    y_derived = cov.determine_y(sub, x_local, params.a)
    if tuple(sorted(y_local)) != y_derived:
        raise CertificateError(f"stated Y {cert.witness.Y} is not the derived set")
    th = cov.theta(sub, x_local, params)
    ep = cov.epsilon(sub, x_local, params.a)
    if th != cert.witness.theta or ep != cert.witness.epsilon:
        raise CertificateError(
            f"witness evaluates to theta={th}, epsilon={ep}, "
            f"expected theta={cert.witness.theta}, epsilon={cert.witness.epsilon}"
        )
    if th > ep - 1:
        raise CertificateError("stated witness does not violate the subset condition")

    verdict = is_fractional_abk_critical_covered(g, params)
    if verdict.critical_covered:
        raise CertificateError("graph unexpectedly is fractional (a,b,k)-critical covered")


# ---------------------------------------------------------------------------
# stream verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConclusionFailure:
    """A hypothesis holder that the checker rejected (would falsify the bound)."""

    index: int  # 1-based position in the stream
    graph6: str
    verdict: CriticalVerdict


@dataclass
class VerificationReport:
    graphs_scanned: int = 0
    hypothesis_holders: int = 0
    conclusion_failures: list[ConclusionFailure] = field(default_factory=list)
    elapsed: float = 0.0


def _first_branch_threshold(params: FactorParams) -> int:
    """Smallest integer kappa compatible with the alpha-independent bound branch."""
    a, b, k = params.a, params.b, params.k
    return math.ceil(Fraction(2 * b * (a + 1) * (b + 1) + 4 * b * k + 5, 4 * b))


def _batch_kappa_at_least(adj: np.ndarray, n: int, t: int, skip_below: int = 0) -> np.ndarray:
    """Vectorized kappa >= t over same-order graphs (bitmask adjacency rows).

    With skip_below = s the caller asserts kappa >= s is already known, so
    only separators of size s..t-1 are scanned.
    """
    B = adj.shape[0]
    if t <= 0:
        return np.ones(B, dtype=bool)
    if t > n - 1:
        return np.zeros(B, dtype=bool)
    full = (1 << n) - 1
    ok = np.ones(B, dtype=bool)
    for size in range(skip_below, t):
        for sub in combinations(range(n), size):
            rm = 0
            for v in sub:
                rm |= 1 << v
            alive = full ^ rm
            start = alive & -alive
            reach = np.full(B, start, dtype=np.int64)
            while True:
                nxt = reach.copy()
                for v in range(n):
                    if alive >> v & 1:
                        sel = -(reach >> v & 1)
                        nxt |= sel & adj[:, v]
                nxt &= alive
                if np.array_equal(nxt, reach):
                    break
                reach = nxt
            ok &= reach == alive
    return ok


def _batch_alpha(adj: np.ndarray, n: int) -> np.ndarray:
    """Vectorized independence numbers via subset DP (intended for n <= ~14).

    A subset is independent iff dropping its lowest vertex leaves an
    independent set with no edge back to that vertex; processing subsets by
    population count makes the recurrence purely vectorized.
    """
    B = adj.shape[0]
    pop = cov._poptable(n)
    xs = np.arange(1 << n, dtype=np.int64)
    indep = np.ones((B, 1 << n), dtype=bool)
    order = np.argsort(pop, kind="stable")
    sizes = np.bincount(pop, minlength=n + 2)
    offset = int(sizes[0])  # skip the empty set, independent by definition
    for level in range(1, n + 1):
        cnt = int(sizes[level])
        if cnt == 0:
            continue
        masks = xs[order[offset : offset + cnt]]
        offset += cnt
        lows = masks & -masks
        lowidx = pop[lows - 1]
        rest = masks ^ lows
        indep[:, masks] = indep[:, rest] & ((adj[:, lowidx] & rest) == 0)
    return (indep * pop[xs][None, :]).max(axis=1)


def verify_theorem3_on_stream(
    graphs: Iterable[Graph],
    params: FactorParams,
    chunk_size: int = 4096,
) -> VerificationReport:
    """Check every streamed graph that meets the connectivity bound.

    Prefiltering is sound, never heuristic: a graph is skipped only when its
    minimum degree or an exact threshold connectivity test already proves
    kappa below the bound.  Hypothesis holders run the full criticality scan
    (vectorized); any failure is re-derived with the scalar checker and
    recorded with its witness.  Failures are reported in stream order.
    """
    if params.a < 1:
        raise ValueError("the bound needs a >= 1")
    report = VerificationReport()
    t0 = time.perf_counter()
    buffers: dict[int, list[tuple[int, Graph]]] = {}
    for idx, g in enumerate(_iter_graphs(graphs), start=1):
        if g.n <= params.k:
            raise ValueError(f"stream graph {idx} has n={g.n} <= k={params.k}")
        buffers.setdefault(g.n, []).append((idx, g))
        if len(buffers[g.n]) >= chunk_size:
            _flush_chunk(buffers.pop(g.n), params, report)
    for chunk in buffers.values():
        _flush_chunk(chunk, params, report)
    report.conclusion_failures.sort(key=lambda f: f.index)
    report.elapsed = time.perf_counter() - t0
    return report


def _iter_graphs(graphs: Iterable[Graph]) -> Iterator[Graph]:
    for g in graphs:
        if not isinstance(g, Graph):
            raise TypeError(f"stream must yield Graph values, got {type(g)!r}")
        yield g


def _flush_chunk(chunk: list[tuple[int, Graph]], params: FactorParams, report: VerificationReport) -> None:
    report.graphs_scanned += len(chunk)
    n = chunk[0][1].n
    a, b, k = params.a, params.b, params.k
    r1 = _first_branch_threshold(params)
    if r1 > n - 1:
        return  # kappa <= n-1 < bound: no graph of this order can qualify
    adj = np.array([g.adj for _, g in chunk], dtype=np.int64)
    pop = cov._poptable(n)
    candidates = np.flatnonzero(pop[adj].min(axis=1) >= r1)  # kappa <= delta
    if candidates.size == 0:
        return
    cadj = adj[candidates]
    candidates = candidates[_batch_kappa_at_least(cadj, n, r1)]
    if candidates.size == 0:
        return

    # ceil(bound) as pure integer arithmetic: the alpha branch may raise the
    # connectivity requirement above r1, in which case a wider exact
    # separator scan settles it.
    cadj = adj[candidates]
    alphas = _batch_alpha(cadj, n).astype(np.int64)
    denom = 4 * b
    need = ((a + 1) ** 2 * alphas + 4 * b * k + 5 + denom - 1) // denom
    need = np.maximum(need, r1)
    holder_mask = need <= r1
    for t in np.unique(need[need > r1]):
        grp = np.flatnonzero(need == t)
        if t > n - 1:
            continue  # kappa can never reach t
        holder_mask[grp] = _batch_kappa_at_least(cadj[grp], n, int(t), skip_below=r1)
    holders = candidates[holder_mask]
    report.hypothesis_holders += holders.size
    if holders.size == 0:
        return

    hadj = adj[holders]
    still_ok = np.ones(holders.size, dtype=bool)
    full = (1 << n) - 1
    for u in combinations(range(n), k):
        rm = 0
        for v in u:
            rm |= 1 << v
        still_ok &= covered_batch(hadj, n, a, b, full ^ rm)
        if not still_ok.any():
            break
    for j in np.flatnonzero(~still_ok):
        idx, g = chunk[int(holders[j])]
        verdict = is_fractional_abk_critical_covered(g, params)
        if verdict.critical_covered:
            raise RuntimeError(
                f"internal disagreement between batch and scalar checker on stream item {idx}"
            )
        report.conclusion_failures.append(
            ConclusionFailure(index=idx, graph6=write_graph6(g), verdict=verdict)
        )
