"""Two-clique families glued at a hub vertex, and the edge removal
schedules that thin them down while keeping one exceptional pair alive.

The base graph for parameters 3 <= a <= b has d = a + b + 1 vertices:
a complete graph on the u-side vertices plus the hub, and a complete
graph on the hub plus the v-side vertices.  Labels are fixed as
u_i -> i, hub w -> a + 1, v_j -> a + 1 + j.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Edge, Graph

# sanity bound matching the rest of the package; schedules stay small
_MAX_SIDE = 32


@dataclass(frozen=True, eq=False)
class FamilyGraph:
    """A family member together with its role labeling."""

    graph: Graph
    labels: dict[str, int]
    a: int
    b: int

    def label(self, name: str) -> int:
        return self.labels[name]

    @property
    def w(self) -> int:
        return self.labels["w"]

    def u(self, i: int) -> int:
        return self.labels[f"u{i}"]

    def v(self, j: int) -> int:
        return self.labels[f"v{j}"]

    @property
    def u_side(self) -> tuple[int, ...]:
        return tuple(self.u(i) for i in range(1, self.a + 1))

    @property
    def v_side(self) -> tuple[int, ...]:
        return tuple(self.v(j) for j in range(1, self.b + 1))


@dataclass(frozen=True)
class RemovalSchedule:
    """Ordered edge removals, u-phase then v-phase."""

    a: int
    b: int
    u_phase: tuple[Edge, ...]
    v_phase: tuple[Edge, ...]

    @property
    def steps(self) -> tuple[Edge, ...]:
        return self.u_phase + self.v_phase

    def __len__(self) -> int:
        return len(self.u_phase) + len(self.v_phase)


def _check_ab(a: int, b: int) -> None:
    if not (3 <= a <= b):
        raise ValueError(f"family needs 3 <= a <= b, got a={a}, b={b}")
    if b > _MAX_SIDE:
        raise ValueError(f"side size {b} beyond supported range")


def max_family_edges(a: int, b: int) -> int:
    return (a + 1) * a // 2 + (b + 1) * b // 2


def build_gab(a: int, b: int) -> FamilyGraph:
    """The full two-clique family member for 3 <= a <= b."""
    _check_ab(a, b)
    d = a + b + 1
    labels = {f"u{i}": i for i in range(1, a + 1)}
    labels["w"] = a + 1
    labels.update({f"v{j}": a + 1 + j for j in range(1, b + 1)})
    u_clique = list(range(1, a + 1)) + [a + 1]
    v_clique = [a + 1] + list(range(a + 2, d + 1))
    pairs = []
    for clique in (u_clique, v_clique):
        for idx in range(len(clique)):
            for jdx in range(idx + 1, len(clique)):
                pairs.append((clique[idx], clique[jdx]))
    return FamilyGraph(Graph.from_edge_list(d, pairs), labels, a, b)


def _phase(hub: int, side: list[int]) -> list[Edge]:
    # side[k] is the label of the k-th side vertex (1-based role index k+1)
    n = len(side)
    out: list[Edge] = []
    for i in range(1, n - 2):
        out.append(_edge(hub, side[i - 1]))
        for j in range(i + 1, n):
            out.append(_edge(side[i - 1], side[j - 1]))
    out.append(_edge(hub, side[n - 3]))
    out.append(_edge(hub, side[n - 2]))
    return out


def _edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


def removal_schedule(a: int, b: int) -> RemovalSchedule:
    """The canonical thinning order: for i = 1..a-3 drop the hub edge to
    u_i and then the edges u_i u_j for j = i+1..a-1, finishing with the
    hub edges to u_{a-2} and u_{a-1}; then the same pattern on the
    v-side.  Edges u_i u_a are never removed, so each side stays
    connected through its last vertex.
    """
    _check_ab(a, b)
    fam = build_gab(a, b)
    u_phase = _phase(fam.w, list(fam.u_side))
    v_phase = _phase(fam.w, list(fam.v_side))
    sched = RemovalSchedule(a, b, tuple(u_phase), tuple(v_phase))
    expected = max_family_edges(a, b) - (a + b + 2)
    if len(sched) != expected:  # pragma: no cover - structural self-check
        raise AssertionError(f"schedule length {len(sched)} != {expected}")
    return sched


def family_graph(a: int, b: int, n: int) -> FamilyGraph:
    """The family member with exactly n edges: the full graph minus the
    first (max - n) scheduled removals.  Valid for d+1 <= n <= max."""
    _check_ab(a, b)
    d = a + b + 1
    full = max_family_edges(a, b)
    if not (d + 1 <= n <= full):
        raise ValueError(
            f"edge count n={n} outside the valid interval [{d + 1}, {full}] for (a, b)=({a}, {b})"
        )
    fam = build_gab(a, b)
    removed = set(removal_schedule(a, b).steps[: full - n])
    pairs = [e for e in fam.graph.edges if e not in removed]
    return FamilyGraph(Graph.from_edge_list(d, pairs), dict(fam.labels), a, b)


def max_theorem_edges(d: int) -> int:
    return (d * d - 7 * d + 24) // 2


def theorem_edge_range(d: int) -> range:
    """Valid edge counts for the main construction at dimension d."""
    if d < 7:
        raise ValueError(f"main construction needs d >= 7, got {d}")
    return range(d + 1, max_theorem_edges(d) + 1)


def graph_for_theorem(d: int, n: int) -> FamilyGraph:
    """The (a, b) = (3, d-4) family member with n edges; this realizes
    every edge count in [d+1, (d^2-7d+24)/2]."""
    valid = theorem_edge_range(d)
    if n not in valid:
        raise ValueError(
            f"edge count n={n} outside the valid interval [{valid.start}, {valid.stop - 1}] for d={d}"
        )
    return family_graph(3, d - 4, n)


def add_cross_edges(fam: FamilyGraph, extra) -> Graph:
    """The full family graph plus the given u-side/v-side cross edges.

    ``fam`` must be the unmodified full member; each extra pair must
    join a u-side vertex to a v-side vertex, without repetition.
    """
    if fam.graph.n_edges != max_family_edges(fam.a, fam.b):
        raise ValueError("cross edges are only added to the full family graph")
    u_set = set(fam.u_side)
    v_set = set(fam.v_side)
    new_edges = list(fam.graph.edges)
    seen: set[Edge] = set()
    for pair in extra:
        i, j = pair
        e = _edge(i, j)
        if not (
            (i in u_set and j in v_set) or (i in v_set and j in u_set)
        ):
            raise ValueError(f"{pair} is not a u-side/v-side cross pair")
        if e in seen:
            raise ValueError(f"duplicate cross edge {e}")
        seen.add(e)
        new_edges.append(e)
    return Graph.from_edge_list(fam.graph.n_vertices, new_edges)


def cross_pairs(fam: FamilyGraph) -> list[Edge]:
    """All a*b possible cross edges, sorted."""
    return sorted(_edge(i, j) for i in fam.u_side for j in fam.v_side)


def in_set_A(fam: FamilyGraph, x) -> bool:
    """Membership in the exclusion set A: zero at the hub and odd
    coordinate sums on both sides."""
    vec = tuple(int(v) for v in x)
    if len(vec) != fam.graph.n_vertices:
        raise ValueError("vector length does not match the family dimension")
    if vec[fam.w - 1] != 0:
        return False
    u_sum = sum(vec[v - 1] for v in fam.u_side)
    v_sum = sum(vec[v - 1] for v in fam.v_side)
    return u_sum % 2 == 1 and v_sum % 2 == 1
