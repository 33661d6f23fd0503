"""Exact membership machinery for the edge semigroup of a graph.

Everything here is integer arithmetic on exponent vectors indexed by the
vertex labels 1..d.  The semigroup S is the set of nonnegative integer
sums of edge vectors rho(e); its saturation Sbar is the intersection of
the rational edge cone with the edge lattice.  Membership in S is decided
by exhaustive backtracking, so a negative answer is definitive.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .cycles import exceptional_pairs, is_cycle_of
from .facets import facets
from .graph import Edge, Graph, UnsupportedGraphError, bipartition, contains_odd_cycle, is_connected
from .linalg import IntegerLattice, in_rational_cone, rho_vector

Vector = tuple[int, ...]


@dataclass(frozen=True)
class MembershipWitness:
    """Multiset of edges summing to a target vector."""

    multiplicities: tuple[tuple[Edge, int], ...]

    def total_edges(self) -> int:
        return sum(k for _, k in self.multiplicities)

    def vector_sum(self, d: int) -> Vector:
        acc = [0] * d
        for (i, j), k in self.multiplicities:
            acc[i - 1] += k
            acc[j - 1] += k
        return tuple(acc)


def _require_full(g: Graph) -> int:
    if not g.is_contiguous:
        raise ValueError("semigroup operations need labels exactly 1..d")
    return g.n_vertices


def _check_vector(g: Graph, x) -> Vector:
    d = _require_full(g)
    vec = tuple(int(v) for v in x)
    if len(vec) != d:
        raise ValueError(f"vector length {len(vec)} does not match d={d}")
    return vec


def rho(g: Graph, e: Edge) -> Vector:
    """Exponent vector of an edge of G."""
    d = _require_full(g)
    edge = (e[0], e[1]) if e[0] < e[1] else (e[1], e[0])
    if edge not in g.edges:
        raise ValueError(f"{e} is not an edge of the graph")
    return rho_vector(d, edge)


def cycle_indicator(g: Graph, cycle: tuple[int, ...]) -> Vector:
    """0/1 vector supported on the vertices of an odd cycle of G."""
    d = _require_full(g)
    if len(cycle) % 2 == 0 or not is_cycle_of(g, cycle):
        raise ValueError(f"{cycle} is not an odd cycle of the graph")
    mem = set(cycle)
    return tuple(1 if v in mem else 0 for v in range(1, d + 1))


class _EdgeSumSearch:
    """Memoized exhaustive decision procedure for membership in the
    monoid generated by a fixed edge set.

    Branches on the lowest-labeled vertex with positive remaining demand,
    over its incident edges whose other endpoint also has demand.  Before
    branching, the positive-support subgraph is split into components;
    any component with odd total demand, or an isolated vertex with
    demand, kills the node.  Only negative decisions are memoized: the
    positive ones are cheap to rediscover and the negative subtrees are
    where exhaustive search pays.
    """

    __slots__ = ("d", "edges", "incident", "failed")

    def __init__(self, d: int, edges: tuple[Edge, ...]):
        self.d = d
        self.edges = edges
        incident: dict[int, list[tuple[int, Edge]]] = {v: [] for v in range(1, d + 1)}
        for e in edges:
            i, j = e
            incident[i].append((j, e))
            incident[j].append((i, e))
        self.incident = {v: tuple(sorted(lst)) for v, lst in incident.items()}
        self.failed: set[Vector] = set()

    def _prune(self, x: Vector) -> bool:
        """False when a parity or isolation obstruction rules x out."""
        pos = [v for v in range(1, self.d + 1) if x[v - 1] > 0]
        if not pos:
            return True
        pos_set = set(pos)
        seen: set[int] = set()
        for start in pos:
            if start in seen:
                continue
            comp_sum = 0
            comp_size = 0
            comp_edges = False
            stack = [start]
            seen.add(start)
            while stack:
                u = stack.pop()
                comp_sum += x[u - 1]
                comp_size += 1
                for w, _ in self.incident[u]:
                    if w in pos_set:
                        comp_edges = True
                        if w not in seen:
                            seen.add(w)
                            stack.append(w)
            if comp_sum % 2 == 1:
                return False
            if comp_size == 1 and not comp_edges:
                return False
        return True

    def decide(self, x: Vector) -> bool:
        if any(v < 0 for v in x):
            return False
        if not any(x):
            return True
        if x in self.failed:
            return False
        if not self._prune(x):
            self.failed.add(x)
            return False
        v = next(u for u in range(1, self.d + 1) if x[u - 1] > 0)
        for w, e in self.incident[v]:
            if x[w - 1] <= 0:
                continue
            child = list(x)
            child[e[0] - 1] -= 1
            child[e[1] - 1] -= 1
            if self.decide(tuple(child)):
                return True
        self.failed.add(x)
        return False

    def witness_edges(self, x: Vector) -> list[Edge] | None:
        """Edge list (with repeats) summing to x, or None."""
        if not self.decide(x):
            return None
        out: list[Edge] = []
        cur = list(x)
        while any(cur):
            v = next(u for u in range(1, self.d + 1) if cur[u - 1] > 0)
            for w, e in self.incident[v]:
                if cur[w - 1] <= 0:
                    continue
                cur[e[0] - 1] -= 1
                cur[e[1] - 1] -= 1
                if self.decide(tuple(cur)):
                    out.append(e)
                    break
                cur[e[0] - 1] += 1
                cur[e[1] - 1] += 1
            else:  # pragma: no cover - decide() promised a branch
                raise AssertionError("witness reconstruction lost the trail")
        return out


@lru_cache(maxsize=64)
def _search_engine(g: Graph) -> _EdgeSumSearch:
    return _EdgeSumSearch(_require_full(g), g.edges)


def _search_engine_for_edges(g: Graph, edges: tuple[Edge, ...]) -> _EdgeSumSearch:
    return _EdgeSumSearch(_require_full(g), edges)


@lru_cache(maxsize=128)
def _edge_lattice(g: Graph) -> IntegerLattice:
    d = _require_full(g)
    lat = IntegerLattice(d)
    for e in g.edges:
        lat.add(rho_vector(d, e))
    return lat


def in_lattice(g: Graph, x) -> bool:
    """Membership of an integer vector (signs allowed) in the lattice
    generated by the edge vectors.

    Primary route reduces x against the triangular basis; the closed
    form (even coordinate sum for connected non-bipartite G, balanced
    sides for connected bipartite G) is asserted to agree.
    """
    vec = _check_vector(g, x)
    if not is_connected(g):
        raise UnsupportedGraphError("lattice membership implemented for connected graphs")
    result = _edge_lattice(g).contains(vec)
    parts = bipartition(g)
    if parts is None:
        closed = sum(vec) % 2 == 0
    else:
        first, second = parts
        closed = sum(vec[v - 1] for v in first) == sum(vec[v - 1] for v in second)
    assert result == closed, f"lattice routes disagree on {vec}"
    return result


def in_cone(g: Graph, x) -> bool:
    """Membership of x in the rational cone spanned by the edge vectors.

    Non-bipartite connected graphs use the validated facet inequalities;
    bipartite ones fall back to exact rational feasibility.
    """
    vec = _check_vector(g, x)
    if not is_connected(g):
        raise UnsupportedGraphError("cone membership implemented for connected graphs")
    if contains_odd_cycle(g):
        return all(
            sum(n * v for n, v in zip(f.normal, vec)) >= 0
            for f in facets(g)
            if f.validated
        )
    d = g.n_vertices
    return in_rational_cone([rho_vector(d, e) for e in g.edges], vec)


def in_sbar(g: Graph, x) -> bool:
    """Membership in the saturation: rational cone intersected with the
    edge lattice."""
    return in_cone(g, x) and in_lattice(g, x)


def in_S(g: Graph, x) -> MembershipWitness | None:
    """Exact membership of x in the edge semigroup, with a witness.

    x must be nonnegative.  An odd coordinate sum is immediately
    rejected; otherwise the exhaustive search settles the question, so a
    None answer is a proof of non-membership.
    """
    vec = _check_vector(g, x)
    if any(v < 0 for v in vec):
        raise ValueError("semigroup members are nonnegative; got a negative coordinate")
    if sum(vec) % 2 == 1:
        return None
    edges = _search_engine(g).witness_edges(vec)
    if edges is None:
        return None
    counts: dict[Edge, int] = {}
    for e in edges:
        counts[e] = counts.get(e, 0) + 1
    return MembershipWitness(tuple(sorted(counts.items())))


def _in_S_decide(g: Graph, vec: Vector) -> bool:
    """Boolean core of in_S; tolerates negative entries (returns False)."""
    if any(v < 0 for v in vec) or sum(vec) % 2 == 1:
        return False
    return _search_engine(g).decide(vec)


def normalization_generators(g: Graph) -> list[Vector]:
    """The vectors E_C + E_C' over exceptional pairs (C, C'), deduplicated
    and sorted; empty iff the odd cycle condition holds."""
    d = _require_full(g)
    out: set[Vector] = set()
    for c1, c2 in exceptional_pairs(g):
        mem = set(c1) | set(c2)
        out.add(tuple(1 if v in mem else 0 for v in range(1, d + 1)))
    return sorted(out)


def _vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def _edge_sum_levels(d: int, edges: tuple[Edge, ...], max_degree: int) -> list[set[Vector]]:
    """levels[k] = distinct sums of exactly k edge vectors, k <= max_degree // 2."""
    zero = tuple([0] * d)
    levels: list[set[Vector]] = [{zero}]
    rhos = [rho_vector(d, e) for e in edges]
    for _ in range(max_degree // 2):
        nxt: set[Vector] = set()
        for base in levels[-1]:
            for rv in rhos:
                nxt.add(_vec_add(base, rv))
        levels.append(nxt)
    return levels


def _gap_formula(g: Graph, degree_bound: int) -> list[Vector]:
    d = g.n_vertices
    gens = normalization_generators(g)
    if not gens:
        return []
    engine = _search_engine(g)
    # all nonzero nonnegative-integer combinations of the generators
    gammas: set[Vector] = set()
    frontier: set[Vector] = {tuple([0] * d)}
    while frontier:
        nxt: set[Vector] = set()
        for base in frontier:
            for gen in gens:
                s = _vec_add(base, gen)
                if sum(s) <= degree_bound and s not in gammas:
                    gammas.add(s)
                    nxt.add(s)
        frontier = nxt
    if not gammas:
        return []
    min_gamma = min(sum(s) for s in gammas)
    levels = _edge_sum_levels(d, g.edges, degree_bound - min_gamma)
    candidates: set[Vector] = set()
    for gamma in gammas:
        room = (degree_bound - sum(gamma)) // 2
        for k in range(room + 1):
            for beta in levels[k]:
                candidates.add(_vec_add(beta, gamma))
    gap = [alpha for alpha in candidates if not engine.decide(alpha)]
    return sorted(gap, key=lambda v: (sum(v), v))


def _nonnegative_vectors(d: int, bound: int) -> list[Vector]:
    out: list[Vector] = []
    cur = [0] * d

    def rec(idx: int, left: int) -> None:
        if idx == d:
            out.append(tuple(cur))
            return
        for val in range(left + 1):
            cur[idx] = val
            rec(idx + 1, left - val)
        cur[idx] = 0

    rec(0, bound)
    return out


def _gap_direct(g: Graph, degree_bound: int) -> list[Vector]:
    d = g.n_vertices
    engine = _search_engine(g)
    vecs = np.array(_nonnegative_vectors(d, degree_bound), dtype=np.int64)
    normals = np.array(
        [f.normal for f in facets(g) if f.validated], dtype=np.int64
    )
    in_cone_mask = (vecs @ normals.T >= 0).all(axis=1)
    in_lattice_mask = vecs.sum(axis=1) % 2 == 0
    sbar = vecs[in_cone_mask & in_lattice_mask]
    gap = []
    for row in sbar:
        alpha = tuple(int(v) for v in row)
        if not engine.decide(alpha):
            gap.append(alpha)
    return sorted(gap, key=lambda v: (sum(v), v))


def gap_elements(g: Graph, degree_bound: int = 16, method: str = "formula") -> list[Vector]:
    """All members of Sbar minus S with coordinate sum <= degree_bound.

    Two independent routes are available: "formula" builds beta + gamma
    from the semigroup plus normalization generators, "direct" filters
    every bounded nonnegative vector through in_sbar and in_S.  "both"
    runs the two and insists they agree.

    Args:
        g: connected graph with an odd cycle, labels 1..d.
        degree_bound: positive even bound on the coordinate sum.
        method: "formula" (default), "direct", or "both".

    Returns:
        Sorted list of gap vectors (by coordinate sum, then lex).
    """
    _require_full(g)
    if not is_connected(g):
        raise UnsupportedGraphError("gap enumeration needs a connected graph")
    if not contains_odd_cycle(g):
        raise UnsupportedGraphError("gap enumeration needs at least one odd cycle")
    if degree_bound <= 0 or degree_bound % 2 == 1:
        raise ValueError(f"degree bound must be a positive even integer, got {degree_bound}")
    if method == "formula":
        return _gap_formula(g, degree_bound)
    if method == "direct":
        return _gap_direct(g, degree_bound)
    if method == "both":
        formula = _gap_formula(g, degree_bound)
        direct = _gap_direct(g, degree_bound)
        if formula != direct:
            raise AssertionError(
                f"gap routes disagree: formula found {len(formula)} vectors, direct {len(direct)}"
            )
        return formula
    raise ValueError(f"unknown method {method!r}")
