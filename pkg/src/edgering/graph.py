"""Labeled simple graphs with a canonical edge order.

Vertices are positive integer labels.  A graph built by
``Graph.from_edge_list`` carries labels exactly 1..d; vertex deletion and
induced subgraphs keep the original labels, so derived graphs may have
gaps in their label set.  All operations are pure and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

Edge = tuple[int, int]
VertexSet = frozenset[int]


class GraphFormatError(ValueError):
    """Raised when parsing a graph text file fails."""


class UnsupportedGraphError(ValueError):
    """Raised when an operation needs a graph class we do not handle,
    e.g. the facet machinery on a bipartite or disconnected graph."""


def _as_edge(pair) -> Edge:
    seq = tuple(pair)
    if len(seq) == 1:
        # a set literal like {1, 1} collapses to one element
        i = j = seq[0]
    elif len(seq) == 2:
        i, j = seq
    else:
        raise ValueError(f"edge {pair!r} is not a vertex pair")
    if i == j:
        raise ValueError(f"self-loop at vertex {i}")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``vertices`` is strictly increasing; ``edges`` is strictly increasing
    lexicographically with every pair stored as (min, max).  Structural
    equality is equality of both tuples.
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        verts = self.vertices
        if not verts:
            raise ValueError("graph needs at least one vertex")
        if any(v < 1 for v in verts) or list(verts) != sorted(set(verts)):
            raise ValueError("vertex labels must be distinct positive integers in increasing order")
        vset = set(verts)
        prev = None
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if i > j:
                raise ValueError(f"edge {e} not stored as (min, max)")
            if i not in vset or j not in vset:
                raise ValueError(f"edge {e} uses a label outside the vertex set")
            if prev is not None and e <= prev:
                raise ValueError(f"edges not strictly sorted at {e}")
            prev = e

    @classmethod
    def from_edge_list(cls, d: int, pairs: Iterable) -> "Graph":
        """Build a graph on vertex labels 1..d from unordered vertex pairs.

        Rejects labels outside 1..d, self-loops and duplicate edges.
        Connectivity is not required here; operations that need it check
        for themselves.
        """
        if d < 1:
            raise ValueError(f"vertex count must be positive, got {d}")
        edges = []
        seen: set[Edge] = set()
        for pair in pairs:
            e = _as_edge(pair)
            if e[0] < 1 or e[1] > d:
                raise ValueError(f"edge {e} outside label range 1..{d}")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            edges.append(e)
        return cls(tuple(range(1, d + 1)), tuple(sorted(edges)))

    # -- basic accessors ----------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def vertex_set(self) -> VertexSet:
        return frozenset(self.vertices)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adjacency.get(i, frozenset())

    @property
    def is_contiguous(self) -> bool:
        """True when the labels are exactly 1..n with no gaps."""
        return self.vertices == tuple(range(1, len(self.vertices) + 1))


# -- elementary operations --------------------------------------------


def delete_vertex(g: Graph, v: int) -> Graph:
    """Induced subgraph on V(G) minus v; remaining labels are unchanged."""
    if v not in g.vertex_set:
        raise ValueError(f"vertex {v} not in graph")
    verts = tuple(u for u in g.vertices if u != v)
    if not verts:
        raise ValueError("cannot delete the only vertex")
    edges = tuple(e for e in g.edges if v not in e)
    return Graph(verts, edges)


def induced_subgraph(g: Graph, subset: Iterable[int]) -> Graph:
    """Induced subgraph on the given nonempty vertex subset, labels kept."""
    sub = frozenset(subset)
    if not sub:
        raise ValueError("vertex subset is empty")
    if not sub <= g.vertex_set:
        raise ValueError(f"subset {sorted(sub)} not contained in the vertex set")
    verts = tuple(v for v in g.vertices if v in sub)
    edges = tuple(e for e in g.edges if e[0] in sub and e[1] in sub)
    return Graph(verts, edges)


def neighborhood(g: Graph, t: Iterable[int]) -> VertexSet:
    """N(G; T): all vertices adjacent to some member of T.

    The result may intersect T when T is not independent.
    """
    tset = frozenset(t)
    if not tset <= g.vertex_set:
        raise ValueError(f"subset {sorted(tset)} not contained in the vertex set")
    out: set[int] = set()
    for v in tset:
        out |= g.adjacency[v]
    return frozenset(out)


def connected_components(g: Graph) -> list[VertexSet]:
    """Vertex sets of the connected components, sorted by smallest member."""
    seen: set[int] = set()
    comps: list[VertexSet] = []
    adj = g.adjacency
    for start in g.vertices:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return sorted(comps, key=min)


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def _two_color(g: Graph, comp: Iterable[int]) -> dict[int, int] | None:
    """2-color one connected vertex set; None when an odd cycle obstructs."""
    adj = g.adjacency
    comp = sorted(comp)
    color = {comp[0]: 0}
    stack = [comp[0]]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in color:
                color[w] = 1 - color[u]
                stack.append(w)
            elif color[w] == color[u]:
                return None
    return color


def bipartition(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """The two color classes of a connected graph, or None if an odd
    cycle exists.  The class containing the smallest vertex comes first.
    """
    if not is_connected(g):
        raise ValueError("bipartition needs a connected graph")
    color = _two_color(g, g.vertices)
    if color is None:
        return None
    first = frozenset(v for v in g.vertices if color[v] == color[min(g.vertices)])
    second = g.vertex_set - first
    return (first, second)


def contains_odd_cycle(g: Graph, subset: Iterable[int] | None = None) -> bool:
    """True when the induced subgraph on ``subset`` (default: all of G)
    is not 2-colorable, i.e. contains an odd cycle."""
    h = g if subset is None else induced_subgraph(g, subset)
    for comp in connected_components(h):
        if _two_color(h, comp) is None:
            return True
    return False


def induced_bipartite_graph(g: Graph, t: Iterable[int]) -> Graph:
    """Graph on T and N(G; T) keeping only the edges between T and N(G; T).

    T must be independent; edges internal to N(G; T) are dropped, so the
    result is bipartite by construction.
    """
    tset = frozenset(t)
    if not tset:
        raise ValueError("T is empty")
    if not tset <= g.vertex_set:
        raise ValueError(f"subset {sorted(tset)} not contained in the vertex set")
    for i, j in g.edges:
        if i in tset and j in tset:
            raise ValueError(f"T is not independent: edge ({i}, {j}) inside T")
    nset = neighborhood(g, tset)
    verts = tuple(sorted(tset | nset))
    edges = tuple(e for e in g.edges if (e[0] in tset) != (e[1] in tset))
    return Graph(verts, edges)


# -- text format -------------------------------------------------------
#
#   c <free text>          comment, ignored
#   p <d> <m>              exactly one header: d vertices, m edges
#   e <i> <j>              1-based endpoints, m lines


def parse_graph(text: str) -> Graph:
    """Parse the line-oriented graph format; raises GraphFormatError."""
    d = m = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if d is not None:
                raise GraphFormatError(f"line {lineno}: second 'p' header")
            if len(fields) != 3:
                raise GraphFormatError(f"line {lineno}: malformed header {line!r}")
            try:
                d, m = int(fields[1]), int(fields[2])
            except ValueError as exc:
                raise GraphFormatError(f"line {lineno}: non-integer header field") from exc
        elif fields[0] == "e":
            if d is None:
                raise GraphFormatError(f"line {lineno}: edge before 'p' header")
            if len(fields) != 3:
                raise GraphFormatError(f"line {lineno}: malformed edge line {line!r}")
            try:
                pairs.append((int(fields[1]), int(fields[2])))
            except ValueError as exc:
                raise GraphFormatError(f"line {lineno}: non-integer endpoint") from exc
        else:
            raise GraphFormatError(f"line {lineno}: unknown record {fields[0]!r}")
    if d is None:
        raise GraphFormatError("missing 'p' header")
    if len(pairs) != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(pairs)}")
    try:
        return Graph.from_edge_list(d, pairs)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def write_graph(g: Graph, comment: str | None = None) -> str:
    """Serialize in canonical sorted order.  Labels must be exactly 1..d
    (the format cannot express label gaps)."""
    if not g.is_contiguous:
        raise ValueError("writer needs contiguous labels 1..d")
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"c {part}")
    lines.append(f"p {g.n_vertices} {g.n_edges}")
    for i, j in g.edges:
        lines.append(f"e {i} {j}")
    return "\n".join(lines) + "\n"
