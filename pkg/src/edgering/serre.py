"""Verification and refutation of the Serre depth condition for edge
rings of non-normal graphs.

The classifier compares the semigroup S with the intersection S' of its
facet localizations.  A bounded gap element alpha is *excluded* at a
vertex facet by an exact parity certificate: if alpha vanishes at the
vertex and some component of the vertex-deleted graph carries odd total
weight, no y in S on that facet can pull alpha into S, regardless of any
search bound.  In the other direction, a sufficient combinatorial
criterion on an exceptional pair refutes the condition outright.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .cycles import ExceptionalPair, exceptional_pairs
from .facets import (
    VERTEX_KIND,
    Facet,
    facets,
    fundamental_sets,
    generators_on_facet,
    is_regular_vertex,
)
from .graph import (
    Graph,
    UnsupportedGraphError,
    connected_components,
    contains_odd_cycle,
    delete_vertex,
    induced_subgraph,
    is_connected,
    neighborhood,
)
from .semigroup import (
    MembershipWitness,
    Vector,
    _check_vector,
    _in_S_decide,
    _search_engine_for_edges,
    gap_elements,
    in_lattice,
    in_S,
)

VERDICT_NORMAL = "Normal"
VERDICT_S2_VERIFIED = "NonNormalS2Verified"
VERDICT_NOT_S2 = "NonNormalNotS2"
VERDICT_UNKNOWN = "Unknown"

YES = "yes"
NO_CERTIFIED = "no_certified"
NO_UP_TO_BOUND = "no_up_to_bound"


@dataclass(frozen=True)
class ExclusionCertificate:
    """Exact, bound-independent proof that a candidate is missing from
    the localization at the vertex facet of ``vertex``: the candidate
    vanishes there while ``component`` (a component of G minus vertex)
    has odd total weight."""

    vertex: int
    component: tuple[int, ...]
    candidate: Vector


@dataclass(frozen=True)
class HkWitness:
    """An exceptional pair passing both sufficiency conditions for
    refuting the depth condition, with the checks that were performed."""

    pair: ExceptionalPair
    same_component_vertices: tuple[int, ...]
    same_component_sets: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class BoundedMembership:
    """Outcome of the bounded localization test at one facet."""

    status: str
    y: Vector | None = None
    witness: MembershipWitness | None = None
    certificate: ExclusionCertificate | None = None


@dataclass(frozen=True)
class ClassificationReport:
    verdict: str
    degree_bound: int
    search_bound: int
    gap: tuple[Vector, ...]
    certificates: tuple[ExclusionCertificate, ...]
    hk_witness: HkWitness | None
    exhaustive: bool
    gap_computed: bool
    s_prime_candidate: Vector | None
    timings_ms: dict[str, float] = field(default_factory=dict)

    @property
    def gap_count(self) -> int:
        return len(self.gap)

    def to_json_dict(self) -> dict:
        hk = None
        if self.hk_witness is not None:
            hk = {
                "first": list(self.hk_witness.pair.first),
                "second": list(self.hk_witness.pair.second),
                "same_component_vertices": list(self.hk_witness.same_component_vertices),
                "same_component_sets": [list(t) for t in self.hk_witness.same_component_sets],
            }
        return {
            "verdict": self.verdict,
            "degree_bound": self.degree_bound,
            "search_bound": self.search_bound,
            "gap": [list(v) for v in self.gap],
            "gap_count": self.gap_count,
            "gap_computed": self.gap_computed,
            "certificates": [
                {
                    "vertex": c.vertex,
                    "component": list(c.component),
                    "candidate": list(c.candidate),
                }
                for c in self.certificates
            ],
            "hk_witness": hk,
            "exhaustive": self.exhaustive,
            "s_prime_candidate": None
            if self.s_prime_candidate is None
            else list(self.s_prime_candidate),
        }


def in_S_cap_F(g: Graph, f: Facet, y) -> MembershipWitness | None:
    """Membership of y in the semigroup generated by the on-facet edges,
    by the same exhaustive search as in_S restricted to those edges."""
    vec = _check_vector(g, y)
    if any(v < 0 for v in vec):
        raise ValueError("semigroup members are nonnegative; got a negative coordinate")
    on_facet = tuple(generators_on_facet(g, f))
    if sum(vec) % 2 == 1:
        return None
    engine = _search_engine_for_edges(g, on_facet)
    edges = engine.witness_edges(vec)
    if edges is None:
        return None
    counts: dict[tuple[int, int], int] = {}
    for e in edges:
        counts[e] = counts.get(e, 0) + 1
    return MembershipWitness(tuple(sorted(counts.items())))


def _facet_semigroup_bounded(g: Graph, f: Facet, bound: int) -> list[Vector]:
    """All members of S on the facet with coordinate sum <= bound,
    ordered by (degree, lex); starts with the zero vector."""
    d = g.n_vertices
    on_facet = generators_on_facet(g, f)
    from .linalg import rho_vector

    rhos = [rho_vector(d, e) for e in on_facet]
    level: set[Vector] = {tuple([0] * d)}
    out: list[Vector] = []
    for _ in range(bound // 2 + 1):
        out.extend(sorted(level))
        nxt: set[Vector] = set()
        for base in level:
            for rv in rhos:
                nxt.add(tuple(x + y for x, y in zip(base, rv)))
        level = nxt
        if not level:
            break
    return [y for y in out if sum(y) <= bound]


def vertex_parity_certificate(g: Graph, v: int, alpha) -> ExclusionCertificate | None:
    """The exact exclusion certificate at regular vertex v, if one exists:
    alpha_v = 0 and some component of G minus v has odd alpha-weight.

    Soundness: every y in S supported on the facet avoids v entirely, so
    each component keeps even weight under y; an odd component therefore
    survives in alpha + y for every candidate y, and alpha + y cannot be
    an edge sum.
    """
    vec = _check_vector(g, alpha)
    if not is_regular_vertex(g, v):
        raise ValueError(f"vertex {v} is not regular; its hyperplane is not a facet candidate")
    if vec[v - 1] != 0:
        return None
    rest = delete_vertex(g, v)
    for comp in connected_components(rest):
        if sum(vec[u - 1] for u in comp) % 2 == 1:
            return ExclusionCertificate(v, tuple(sorted(comp)), vec)
    return None


def in_SF_bounded(g: Graph, f: Facet, alpha, search_bound: int = 12) -> BoundedMembership:
    """Bounded test of alpha's membership in the localization at facet f.

    Tries the exact parity certificate first (vertex facets only); then
    searches for y in S on the facet with degree <= search_bound such
    that alpha + y lands in S.  Outcomes: "yes" with the witness y,
    "no_certified" with an exact certificate, or "no_up_to_bound".
    """
    vec = _check_vector(g, alpha)
    if search_bound < 0:
        raise ValueError("search bound must be nonnegative")
    if not in_lattice(g, vec):
        raise ValueError("candidate must lie in the edge lattice")
    if f.kind == VERTEX_KIND:
        cert = vertex_parity_certificate(g, f.vertices[0], vec)
        if cert is not None:
            return BoundedMembership(NO_CERTIFIED, certificate=cert)
    for y in _facet_semigroup_bounded(g, f, search_bound):
        shifted = tuple(a + b for a, b in zip(vec, y))
        if _in_S_decide(g, shifted):
            return BoundedMembership(YES, y=y, witness=in_S(g, shifted))
    return BoundedMembership(NO_UP_TO_BOUND)


def hk_not_s2(g: Graph) -> HkWitness | None:
    """Search for an exceptional pair satisfying the sufficient criterion
    for refuting the depth condition:

    (1) for every regular vertex off the pair, both cycles stay in one
        component of the vertex-deleted graph; and
    (2) for every fundamental set T whose closed neighborhood misses the
        pair, both cycles stay in one component after removing it.

    Returns the first passing pair in canonical order, or None.
    """
    pairs = exceptional_pairs(g)
    if not pairs:
        return None
    fsets = fundamental_sets(g)
    vset = g.vertex_set
    for pair in pairs:
        pv = set(pair.first) | set(pair.second)
        checked_vertices: list[int] = []
        ok = True
        for v in g.vertices:
            if v in pv or not is_regular_vertex(g, v):
                continue
            rest = delete_vertex(g, v)
            comps = connected_components(rest)
            c1 = next(c for c in comps if pair.first[0] in c)
            if pair.second[0] not in c1:
                ok = False
                break
            checked_vertices.append(v)
        if not ok:
            continue
        checked_sets: list[tuple[int, ...]] = []
        for t in fsets:
            closed = t | neighborhood(g, t)
            if closed & pv:
                continue
            rest = induced_subgraph(g, vset - closed)
            comps = connected_components(rest)
            c1 = next(c for c in comps if pair.first[0] in c)
            if pair.second[0] not in c1:
                ok = False
                break
            checked_sets.append(tuple(sorted(t)))
        if ok:
            return HkWitness(pair, tuple(checked_vertices), tuple(checked_sets))
    return None


def classify(g: Graph, degree_bound: int = 16, search_bound: int = 12) -> ClassificationReport:
    """Full normality / depth classification of the edge ring of g.

    Verdicts: Normal when no exceptional pair exists; NonNormalNotS2 on a
    sufficiency witness or a bounded gap element present in every facet
    localization; NonNormalS2Verified when every bounded gap element is
    excluded somewhere (exhaustive when every exclusion is certificate
    backed); Unknown when non-normality is established but no gap element
    falls under the degree bound.

    Args:
        g: connected graph with an odd cycle, labels 1..d.
        degree_bound: bound on gap enumeration (positive even).
        search_bound: degree bound for localization searches.

    Returns:
        A ClassificationReport; serialize with ``to_json_dict``.
    """
    t_start = time.perf_counter()
    timings: dict[str, float] = {}
    if not is_connected(g):
        raise UnsupportedGraphError("classification needs a connected graph")
    if not contains_odd_cycle(g):
        raise UnsupportedGraphError("classification needs at least one odd cycle")

    def _report(**kw) -> ClassificationReport:
        timings["total"] = (time.perf_counter() - t_start) * 1000.0
        return ClassificationReport(
            degree_bound=degree_bound,
            search_bound=search_bound,
            timings_ms={k: round(v, 3) for k, v in timings.items()},
            **kw,
        )

    t0 = time.perf_counter()
    pairs = exceptional_pairs(g)
    timings["cycles"] = (time.perf_counter() - t0) * 1000.0
    if not pairs:
        return _report(
            verdict=VERDICT_NORMAL,
            gap=(),
            certificates=(),
            hk_witness=None,
            exhaustive=True,
            gap_computed=True,
            s_prime_candidate=None,
        )

    t0 = time.perf_counter()
    hk = hk_not_s2(g)
    timings["hk"] = (time.perf_counter() - t0) * 1000.0
    if hk is not None:
        return _report(
            verdict=VERDICT_NOT_S2,
            gap=(),
            certificates=(),
            hk_witness=hk,
            exhaustive=False,
            gap_computed=False,
            s_prime_candidate=None,
        )

    t0 = time.perf_counter()
    gap = tuple(gap_elements(g, degree_bound, method="formula"))
    timings["gap"] = (time.perf_counter() - t0) * 1000.0
    if not gap:
        # non-normal for sure, but the degree bound shows no gap element
        return _report(
            verdict=VERDICT_UNKNOWN,
            gap=(),
            certificates=(),
            hk_witness=None,
            exhaustive=False,
            gap_computed=True,
            s_prime_candidate=None,
        )

    t0 = time.perf_counter()
    validated = [f for f in facets(g) if f.validated]
    vertex_facets = [f for f in validated if f.kind == VERTEX_KIND]
    certificates: list[ExclusionCertificate] = []
    exhaustive = True
    for alpha in gap:
        cert = None
        for f in vertex_facets:
            cert = vertex_parity_certificate(g, f.vertices[0], alpha)
            if cert is not None:
                break
        if cert is not None:
            certificates.append(cert)
            continue
        results = [in_SF_bounded(g, f, alpha, search_bound) for f in validated]
        if all(r.status == YES for r in results):
            timings["exclusion"] = (time.perf_counter() - t0) * 1000.0
            return _report(
                verdict=VERDICT_NOT_S2,
                gap=gap,
                certificates=tuple(certificates),
                hk_witness=None,
                exhaustive=False,
                gap_computed=True,
                s_prime_candidate=alpha,
            )
        exhaustive = False
    timings["exclusion"] = (time.perf_counter() - t0) * 1000.0
    return _report(
        verdict=VERDICT_S2_VERIFIED,
        gap=gap,
        certificates=tuple(certificates),
        hk_witness=None,
        exhaustive=exhaustive,
        gap_computed=True,
        s_prime_candidate=None,
    )
