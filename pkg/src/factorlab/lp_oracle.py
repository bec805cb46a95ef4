"""Ground-truth oracle for fractional [a,b]-factor feasibility, exact arithmetic only.

A fractional [a,b]-factor is an edge weighting h: E -> [0,1] whose weighted
degree lies in [a,b] at every vertex; "containing edge e" is formalized as
h(e) = 1.  Feasibility is decided two independent ways:

* method="flow" (default): the weighting is relaxed onto the bipartite double
  cover, where the constraint matrix is totally unimodular, so feasibility is
  equivalent to an integral degree-constrained subgraph and decides by one
  max-flow with lower bounds.  Solutions pull back half-integral.

* method="simplex": phase-I simplex over Fraction entries with Bland's
  anti-cycling pivot rule.

Both return exact rational assignments and are cross-checked in the tests.
Verdicts never involve floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .flownet import FlowNetwork
from .graphs import Graph

_INF = 1 << 40


@dataclass(frozen=True)
class FractionalAssignment:
    """Edge weights of a fractional factor; keys are (u, v) with u < v."""

    values: dict[tuple[int, int], Fraction]

    def weighted_degree(self, v: int) -> Fraction:
        total = Fraction(0)
        for (x, y), h in self.values.items():
            if v == x or v == y:
                total += h
        return total


def _norm_edge(e: tuple[int, int]) -> tuple[int, int]:
    u, v = e
    return (u, v) if u < v else (v, u)


def assignment_satisfies(
    g: Graph,
    a: int,
    b: int,
    assignment: FractionalAssignment,
    fixed: Optional[tuple[int, int]] = None,
) -> bool:
    """Constraint replay: independently re-check an assignment's feasibility."""
    for (u, v), h in assignment.values.items():
        if not g.has_edge(u, v):
            return False
        if not (0 <= h <= 1):
            return False
    for v in range(g.n):
        if not (a <= assignment.weighted_degree(v) <= b):
            return False
    if fixed is not None and assignment.values.get(_norm_edge(fixed), Fraction(0)) != 1:
        return False
    return True


# ---------------------------------------------------------------------------
# flow route
# ---------------------------------------------------------------------------


def _flow_feasible(
    g: Graph, a: int, b: int, fixed: Optional[tuple[int, int]]
) -> Optional[FractionalAssignment]:
    n = g.n
    edges = list(g.edges())
    copies = []  # ordered pairs (x, y), both directions of every edge
    for u, v in edges:
        copies.append((u, v))
        copies.append((v, u))

    pre_left = [0] * n  # forced selections from the fixed edge
    pre_right = [0] * n
    if fixed is not None:
        fx, fy = _norm_edge(fixed)
        pre_left[fx] += 1
        pre_right[fy] += 1
        pre_left[fy] += 1
        pre_right[fx] += 1

    # node ids: left x -> x, right y -> n+y, s=2n, t=2n+1, super source/sink
    s, t = 2 * n, 2 * n + 1
    ss, tt = 2 * n + 2, 2 * n + 3
    net = FlowNetwork(2 * n + 4)
    excess = [0] * (2 * n + 4)

    def add_bounded(u: int, v: int, lo: int, hi: int) -> Optional[int]:
        if hi < lo:
            return None
        aid = net.add_edge(u, v, hi - lo)
        excess[v] += lo
        excess[u] -= lo
        return aid

    for x in range(n):
        lo = max(a - pre_left[x], 0)
        hi = b - pre_left[x]
        if hi < 0 or add_bounded(s, x, lo, hi) is None:
            return None
        lo = max(a - pre_right[x], 0)
        hi = b - pre_right[x]
        if hi < 0 or add_bounded(n + x, t, lo, hi) is None:
            return None

    copy_arcs: dict[tuple[int, int], int] = {}
    fixed_pair = _norm_edge(fixed) if fixed is not None else None
    for x, y in copies:
        if fixed_pair is not None and _norm_edge((x, y)) == fixed_pair:
            continue  # pre-selected
        copy_arcs[(x, y)] = net.add_edge(x, n + y, 1)

    net.add_edge(t, s, _INF)

    need = 0
    for v in range(2 * n + 4):
        if excess[v] > 0:
            net.add_edge(ss, v, excess[v])
            need += excess[v]
        elif excess[v] < 0:
            net.add_edge(v, tt, -excess[v])
    if net.max_flow(ss, tt) < need:
        return None

    values: dict[tuple[int, int], Fraction] = {}
    for u, v in edges:
        if fixed_pair is not None and (u, v) == fixed_pair:
            chosen = 2
        else:
            chosen = net.flow_on(copy_arcs[(u, v)]) + net.flow_on(copy_arcs[(v, u)])
        if chosen:
            values[(u, v)] = Fraction(chosen, 2)
    return FractionalAssignment(values=values)


# ---------------------------------------------------------------------------
# simplex route
# ---------------------------------------------------------------------------


def _phase1(
    nvars: int,
    le_rows: list[tuple[list[Fraction], Fraction]],
    ge_rows: list[tuple[list[Fraction], Fraction]],
) -> Optional[list[Fraction]]:
    """Feasibility of {Ax <= u, Bx >= l, x >= 0} via phase-I with Bland's rule.

    All right-hand sides must be non-negative.  Returns a feasible point or
    None.  Everything is Fraction arithmetic; no tolerances anywhere.
    """
    nle, nge = len(le_rows), len(ge_rows)
    ncols = nvars + nle + nge + nge  # vars, slacks, surpluses, artificials
    zero, one = Fraction(0), Fraction(1)

    tableau: list[list[Fraction]] = []
    basis: list[int] = []
    for i, (coeffs, rhs) in enumerate(le_rows):
        row = list(coeffs) + [zero] * (nle + 2 * nge)
        row[nvars + i] = one
        row.append(rhs)
        tableau.append(row)
        basis.append(nvars + i)
    for j, (coeffs, rhs) in enumerate(ge_rows):
        row = list(coeffs) + [zero] * (nle + 2 * nge)
        row[nvars + nle + j] = -one
        row[nvars + nle + nge + j] = one
        row.append(rhs)
        tableau.append(row)
        basis.append(nvars + nle + nge + j)

    # reduced costs for minimizing the artificial sum
    cost = [zero] * (ncols + 1)
    for j in range(nge):
        row = tableau[nle + j]
        for c in range(ncols + 1):
            cost[c] -= row[c]
    for j in range(nge):
        cost[nvars + nle + nge + j] = zero

    while True:
        enter = -1
        for c in range(ncols):
            if cost[c] < 0:
                enter = c
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i, row in enumerate(tableau):
            coef = row[enter]
            if coef > 0:
                ratio = row[-1] / coef
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return None  # unbounded phase-I cannot happen, defensive
        piv = tableau[leave][enter]
        prow = tableau[leave]
        inv = 1 / piv
        for c in range(ncols + 1):
            prow[c] *= inv
        for i, row in enumerate(tableau):
            if i != leave and row[enter] != 0:
                f = row[enter]
                for c in range(ncols + 1):
                    row[c] -= f * prow[c]
        if cost[enter] != 0:
            f = cost[enter]
            for c in range(ncols + 1):
                cost[c] -= f * prow[c]
        basis[leave] = enter

    if -cost[-1] != 0:
        return None  # artificial sum stays positive: infeasible
    point = [zero] * nvars
    for i, bv in enumerate(basis):
        if bv < nvars:
            point[bv] = tableau[i][-1]
    return point


def _simplex_feasible(
    g: Graph, a: int, b: int, fixed: Optional[tuple[int, int]]
) -> Optional[FractionalAssignment]:
    fixed_pair = _norm_edge(fixed) if fixed is not None else None
    free_edges = [e for e in g.edges() if e != fixed_pair]
    nvars = len(free_edges)

    lo = [a] * g.n
    hi = [b] * g.n
    if fixed_pair is not None:
        for v in fixed_pair:
            lo[v] -= 1
            hi[v] -= 1
            if hi[v] < 0:
                return None

    zero, one = Fraction(0), Fraction(1)
    le_rows: list[tuple[list[Fraction], Fraction]] = []
    ge_rows: list[tuple[list[Fraction], Fraction]] = []
    for v in range(g.n):
        coeffs = [one if v in e else zero for e in free_edges]
        le_rows.append((coeffs, Fraction(hi[v])))
        if lo[v] > 0:
            ge_rows.append((list(coeffs), Fraction(lo[v])))
    for idx in range(nvars):
        coeffs = [zero] * nvars
        coeffs[idx] = one
        le_rows.append((coeffs, one))

    point = _phase1(nvars, le_rows, ge_rows)
    if point is None:
        return None
    values = {e: h for e, h in zip(free_edges, point) if h}
    if fixed_pair is not None:
        values[fixed_pair] = one
    return FractionalAssignment(values=values)


# ---------------------------------------------------------------------------
# public oracle surface
# ---------------------------------------------------------------------------


def feasible_fractional_factor(
    g: Graph,
    a: int,
    b: int,
    fixed: Optional[tuple[int, int]] = None,
    method: str = "flow",
) -> Optional[FractionalAssignment]:
    """A fractional [a,b]-factor of g (with h(fixed)=1 if given), or None."""
    if not (0 <= a <= b):
        raise ValueError(f"need 0 <= a <= b, got a={a}, b={b}")
    if fixed is not None:
        u, v = fixed
        if not g.has_edge(u, v):
            raise ValueError(f"fixed edge ({u},{v}) not in graph")
    if method == "flow":
        return _flow_feasible(g, a, b, fixed)
    if method == "simplex":
        return _simplex_feasible(g, a, b, fixed)
    raise ValueError(f"unknown method {method!r}")


def oracle_is_covered(g: Graph, a: int, b: int, method: str = "flow") -> bool:
    """True iff g has a fractional [a,b]-factor through every single edge.

    An unconstrained fractional [a,b]-factor is required as well, which is
    what makes edgeless graphs come out consistent with the subset test:
    with no edges the per-edge quantifier is vacuous, but a >= 1 still has
    no factor at all.
    """
    if feasible_fractional_factor(g, a, b, method=method) is None:
        return False
    for e in g.edges():
        if feasible_fractional_factor(g, a, b, fixed=e, method=method) is None:
            return False
    return True


def oracle_is_critical_covered(g: Graph, a: int, b: int, k: int, method: str = "flow") -> bool:
    """True iff g - U is fractional [a,b]-covered for every U with |U| = k."""
    from itertools import combinations

    from .graphs import delete_vertices

    if g.n <= k:
        raise ValueError(f"need n > k, got n={g.n}, k={k}")
    for u in combinations(range(g.n), k):
        sub, _ = delete_vertices(g, u)
        if not oracle_is_covered(sub, a, b, method=method):
            return False
    return True
