"""Supporting hyperplanes and facets of the edge cone.

For a connected graph with at least one odd cycle the supporting
hyperplanes come in two shapes: coordinate hyperplanes x_v = 0 at
regular vertices, and hyperplanes sum_{T} x = sum_{N(T)} x attached to
fundamental independent sets T.  A candidate is a genuine facet exactly
when its on-hyperplane edge vectors span a rank d-1 sublattice; we keep
every candidate but flag the validated ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import (
    Edge,
    Graph,
    UnsupportedGraphError,
    VertexSet,
    connected_components,
    contains_odd_cycle,
    delete_vertex,
    induced_bipartite_graph,
    induced_subgraph,
    is_connected,
    neighborhood,
)
from .linalg import integer_rank, rho_vector

VERTEX_KIND = "vertex"
FUNDAMENTAL_KIND = "fundamental"


@dataclass(frozen=True)
class Facet:
    """One supporting hyperplane of the edge cone.

    ``vertices`` is (v,) for the vertex kind and sorted T for the
    fundamental kind.  ``normal`` is the integer normal functional with
    normal . rho(e) >= 0 for every edge; ``on_facet_edges`` are the edges
    with equality; ``validated`` records the rank d-1 check.
    """

    kind: str
    vertices: tuple[int, ...]
    normal: tuple[int, ...]
    on_facet_edges: tuple[Edge, ...]
    validated: bool


def is_regular_vertex(g: Graph, v: int) -> bool:
    """True when every connected component of G minus v has an odd cycle,
    i.e. x_v = 0 supports a facet candidate."""
    if v not in g.vertex_set:
        raise ValueError(f"vertex {v} not in graph")
    rest = delete_vertex(g, v)
    return all(contains_odd_cycle(rest, comp) for comp in connected_components(rest))


def _independent_sets(g: Graph) -> list[tuple[int, ...]]:
    adj = g.adjacency
    verts = g.vertices
    out: list[tuple[int, ...]] = []

    def grow(start: int, chosen: list[int]) -> None:
        for idx in range(start, len(verts)):
            v = verts[idx]
            if any(v in adj[c] for c in chosen):
                continue
            chosen.append(v)
            out.append(tuple(chosen))
            grow(idx + 1, chosen)
            chosen.pop()

    grow(0, [])
    return out


def fundamental_sets(g: Graph, limit: int = 16) -> list[VertexSet]:
    """All fundamental independent sets T, sorted by (size, sorted tuple).

    T qualifies when (a) T is independent, (b) the bipartite graph
    induced by T is connected, and (c) T together with N(G; T) covers V,
    or every component left over contains an odd cycle.  Exhaustive over
    independent sets, so guarded by a vertex-count limit.
    """
    if g.n_vertices > limit:
        raise ValueError(
            f"fundamental set enumeration limited to {limit} vertices, graph has {g.n_vertices}"
        )
    vset = g.vertex_set
    out: list[VertexSet] = []
    for cand in _independent_sets(g):
        t = frozenset(cand)
        if not is_connected(induced_bipartite_graph(g, t)):
            continue
        rest = vset - t - neighborhood(g, t)
        if rest:
            rest_graph = induced_subgraph(g, rest)
            if not all(
                contains_odd_cycle(rest_graph, comp)
                for comp in connected_components(rest_graph)
            ):
                continue
        out.append(t)
    return sorted(out, key=lambda t: (len(t), sorted(t)))


def _facet_from_normal(g: Graph, kind: str, verts: tuple[int, ...], normal: tuple[int, ...]) -> Facet:
    d = g.n_vertices
    on_facet: list[Edge] = []
    for e in g.edges:
        val = normal[e[0] - 1] + normal[e[1] - 1]
        if val < 0:
            raise AssertionError(f"candidate normal {normal} fails to support edge {e}")
        if val == 0:
            on_facet.append(e)
    rows = [rho_vector(d, e) for e in on_facet]
    validated = bool(rows) and integer_rank(rows, d) == d - 1
    return Facet(kind, verts, normal, tuple(on_facet), validated)


@lru_cache(maxsize=128)
def facets(g: Graph) -> tuple[Facet, ...]:
    """All supporting-hyperplane candidates of the edge cone, vertex kind
    first (ascending vertex) then fundamental kind (by size, then T).

    Needs a connected graph with an odd cycle and labels 1..d; raises
    UnsupportedGraphError otherwise.  Duplicate normals are merged.
    """
    if not g.is_contiguous:
        raise ValueError("facet computation needs labels exactly 1..d")
    if not is_connected(g):
        raise UnsupportedGraphError("edge cone facet structure needs a connected graph")
    if not contains_odd_cycle(g):
        raise UnsupportedGraphError("edge cone facet structure needs at least one odd cycle")
    d = g.n_vertices
    out: list[Facet] = []
    seen: set[tuple[int, ...]] = set()
    for v in g.vertices:
        if not is_regular_vertex(g, v):
            continue
        normal = tuple(1 if u == v else 0 for u in range(1, d + 1))
        if normal in seen:
            continue
        seen.add(normal)
        out.append(_facet_from_normal(g, VERTEX_KIND, (v,), normal))
    for t in fundamental_sets(g):
        nset = neighborhood(g, t)
        normal = tuple(1 if u in nset else (-1 if u in t else 0) for u in range(1, d + 1))
        if normal in seen:
            continue
        seen.add(normal)
        out.append(_facet_from_normal(g, FUNDAMENTAL_KIND, tuple(sorted(t)), normal))
    return tuple(out)


def generators_on_facet(g: Graph, f: Facet) -> list[Edge]:
    """Edges whose exponent vector lies on the facet hyperplane.

    Rejects facets that do not belong to this graph's cone (wrong
    dimension or an edge on the negative side).
    """
    if len(f.normal) != g.n_vertices or not g.is_contiguous:
        raise ValueError("facet dimension does not match the graph")
    out: list[Edge] = []
    for e in g.edges:
        val = f.normal[e[0] - 1] + f.normal[e[1] - 1]
        if val < 0:
            raise ValueError(f"foreign facet: edge {e} on the negative side")
        if val == 0:
            out.append(e)
    return out


def cone_dimension(g: Graph) -> int:
    """Rank of the edge vectors: d when connected non-bipartite, d-1 when
    connected bipartite."""
    if not g.is_contiguous:
        raise ValueError("cone dimension needs labels exactly 1..d")
    if not is_connected(g):
        raise UnsupportedGraphError("cone dimension needs a connected graph")
    rows = [rho_vector(g.n_vertices, e) for e in g.edges]
    if not rows:
        return 0
    return integer_rank(rows, g.n_vertices)
