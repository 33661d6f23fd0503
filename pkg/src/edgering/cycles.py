"""Chordless odd cycles, bridges between cycles, and the odd cycle
condition that characterizes normality of the edge ring.

A minimal (chordless) odd cycle is stored as a canonical vertex tuple:
smallest vertex first, then its smaller cycle-neighbor, so each cycle
appears exactly once regardless of rotation or direction.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .graph import Graph

OddCycle = tuple[int, ...]


class ExceptionalPair(NamedTuple):
    """Two vertex-disjoint minimal odd cycles with no connecting edge."""

    first: OddCycle
    second: OddCycle


def is_cycle_of(g: Graph, cycle: tuple[int, ...]) -> bool:
    """True when the tuple walks a simple cycle of G (length >= 3)."""
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    if not set(cycle) <= g.vertex_set:
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k))


def is_chordless(g: Graph, cycle: tuple[int, ...]) -> bool:
    """True when no edge of G joins two non-consecutive cycle vertices."""
    k = len(cycle)
    for a in range(k):
        for b in range(a + 2, k):
            if a == 0 and b == k - 1:
                continue
            if g.has_edge(cycle[a], cycle[b]):
                return False
    return True


def _extend(adj, s, path, path_set, out) -> None:
    # Invariants: path[0] == s is the smallest vertex, interior vertices
    # are pairwise non-adjacent except consecutively, and no interior
    # vertex other than path[1] is adjacent to s.
    last = path[-1]
    s_adj = adj[s]
    middle = path[1:-1]
    for x in sorted(adj[last]):
        if x <= s or x in path_set:
            continue
        if any(x in adj[m] for m in middle):
            continue  # would be a chord
        if x in s_adj:
            # closing edge; a longer cycle through x would have chord {x, s}
            length = len(path) + 1
            if length % 2 == 1 and path[1] < x:
                out.append(tuple(path) + (x,))
            continue
        path.append(x)
        path_set.add(x)
        _extend(adj, s, path, path_set, out)
        path.pop()
        path_set.remove(x)


@lru_cache(maxsize=256)
def minimal_odd_cycles(g: Graph) -> tuple[OddCycle, ...]:
    """All chordless odd cycles, canonical tuples sorted by (length, tuple).

    DFS path extension from each smallest-vertex anchor with chordless
    pruning.  Returns the empty tuple iff G has no odd cycle.
    """
    adj = g.adjacency
    out: list[OddCycle] = []
    for s in g.vertices:
        for u in sorted(adj[s]):
            if u > s:
                _extend(adj, s, [s, u], {s, u}, out)
    return tuple(sorted(out, key=lambda c: (len(c), c)))


def has_bridge(g: Graph, c1: tuple[int, ...], c2: tuple[int, ...]) -> bool:
    """True when some edge of G joins a vertex of c1 to a vertex of c2.

    The cycles must be vertex-disjoint.
    """
    s1, s2 = set(c1), set(c2)
    if s1 & s2:
        raise ValueError("cycles share a vertex; bridge is undefined")
    adj = g.adjacency
    return any(v in adj[u] for u in s1 for v in s2)


def exceptional_pairs(g: Graph) -> list[ExceptionalPair]:
    """All unordered pairs of vertex-disjoint minimal odd cycles with no
    bridge, each pair ordered (smaller cycle first), list sorted."""
    cycles = minimal_odd_cycles(g)
    pairs: list[ExceptionalPair] = []
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            c1, c2 = cycles[i], cycles[j]
            if set(c1) & set(c2):
                continue
            if not has_bridge(g, c1, c2):
                pairs.append(ExceptionalPair(c1, c2))
    return pairs


def satisfies_odd_cycle_condition(g: Graph) -> bool:
    """Normality test for the edge ring: no exceptional pair exists.

    Vacuously true for graphs without odd cycles.
    """
    return not exceptional_pairs(g)
