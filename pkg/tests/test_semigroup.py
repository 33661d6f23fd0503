import random

import pytest

import helpers
from conftest import family_intermediates
from edgering.graph import Graph, UnsupportedGraphError
from edgering.linalg import in_rational_cone, rho_vector
from edgering.semigroup import (
    cycle_indicator,
    gap_elements,
    in_S,
    in_cone,
    in_lattice,
    in_sbar,
    normalization_generators,
    rho,
)

ALPHA = (1, 1, 1, 0, 1, 1, 1)


def test_rho(g33):
    assert rho(g33.graph, (1, 2)) == (1, 1, 0, 0, 0, 0, 0)
    assert rho(g33.graph, (7, 4)) == (0, 0, 0, 1, 0, 0, 1)
    with pytest.raises(ValueError):
        rho(g33.graph, (1, 5))  # cross pair, not an edge


def test_cycle_indicator(g33):
    assert cycle_indicator(g33.graph, (1, 2, 3)) == (1, 1, 1, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        cycle_indicator(g33.graph, (1, 2, 5))
    with pytest.raises(ValueError):
        cycle_indicator(helpers.complete_graph(4), (1, 2, 3, 4))  # even


def test_in_lattice(g33):
    g = g33.graph
    assert in_lattice(g, ALPHA)
    assert not in_lattice(g, (1, 0, 0, 0, 0, 0, 0))
    # signs are allowed for lattice membership
    assert in_lattice(g, (1, -1, 0, 0, 0, 0, 0))
    assert not in_lattice(g, (1, 1, 1, 0, 0, 0, 0))


def test_in_lattice_bipartite():
    c6 = helpers.cycle_graph(6)
    assert in_lattice(c6, (1, 1, 0, 0, 0, 0))
    assert not in_lattice(c6, (1, 0, 1, 0, 0, 0))  # both odd-side
    assert in_lattice(c6, (1, 0, 1, 0, 0, 2))  # sides balance 2 = 2
    rng = random.Random(17)
    for _ in range(50):
        vec = tuple(rng.randint(-3, 3) for _ in range(6))
        in_lattice(c6, vec)  # internal closed-form assertion must hold


def test_in_cone(g33):
    g = g33.graph
    assert in_cone(g, ALPHA)
    assert in_cone(g, rho(g, (1, 2)))
    assert not in_cone(g, (1, 1, 1, -1, 1, 1, 1))
    assert not in_cone(g, (1, 0, 0, 0, 1, 0, 0))


def test_in_cone_bipartite_fallback():
    c6 = helpers.cycle_graph(6)
    assert in_cone(c6, (1, 1, 0, 0, 0, 0))
    assert not in_cone(c6, (1, 0, 0, 0, 0, 0))


def test_in_cone_matches_rational_oracle(g33):
    rng = random.Random(23)
    g = g33.graph
    gens = [rho_vector(7, e) for e in g.edges]
    for _ in range(120):
        x = tuple(rng.randint(0, 6) for _ in range(7))
        assert in_cone(g, x) == in_rational_cone(gens, x)


def test_in_sbar(g33):
    g = g33.graph
    assert in_sbar(g, ALPHA)
    assert in_sbar(g, rho(g, (1, 2)))
    assert not in_sbar(g, (1, 0, 0, 0, 1, 0, 0))  # fails the cone side
    assert not in_sbar(g, (1, 1, 1, 0, 0, 0, 0))  # fails the lattice side


def test_in_S_witnesses(g33):
    g = g33.graph
    w = in_S(g, (1, 1, 0, 1, 1, 0, 0))
    assert w is not None
    assert w.multiplicities == (((1, 2), 1), ((4, 5), 1))

    assert in_S(g, ALPHA) is None

    doubled = tuple(2 * v for v in ALPHA)
    w2 = in_S(g, doubled)
    assert w2 is not None
    assert w2.total_edges() == 6
    assert w2.vector_sum(7) == doubled
    # the only 6-edge witness: both triangles, each edge once
    assert w2.multiplicities == (
        ((1, 2), 1), ((1, 3), 1), ((2, 3), 1),
        ((5, 6), 1), ((5, 7), 1), ((6, 7), 1),
    )


def test_in_S_validation(g33):
    g = g33.graph
    with pytest.raises(ValueError):
        in_S(g, (1, -1, 0, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        in_S(g, (1, 1, 0))
    assert in_S(g, (1, 0, 0, 0, 0, 0, 0)) is None  # odd sum, immediate


def test_in_S_zero_vector(g33):
    w = in_S(g33.graph, (0,) * 7)
    assert w is not None and w.multiplicities == ()


def test_witness_resums():
    rng = random.Random(31)
    for _ in range(10):
        g = helpers.random_connected_nonbipartite(rng)
        d = g.n_vertices
        # random edge sums are members and the witness must re-sum
        target = [0] * d
        for _ in range(rng.randint(1, 6)):
            e = rng.choice(g.edges)
            target[e[0] - 1] += 1
            target[e[1] - 1] += 1
        w = in_S(g, tuple(target))
        assert w is not None
        assert w.vector_sum(d) == tuple(target)


def test_normalization_generators(g33, g34):
    assert normalization_generators(g33.graph) == [ALPHA]
    assert normalization_generators(helpers.complete_graph(5)) == []
    gens = normalization_generators(g34.graph)
    assert len(gens) == 4
    for vec in gens:
        assert in_sbar(g34.graph, vec)
        assert in_S(g34.graph, vec) is None


def test_gap_elements_small_bound(g33):
    assert gap_elements(g33.graph, 6, method="both") == [ALPHA]
    assert gap_elements(helpers.complete_graph(5), 10, method="both") == []


def test_gap_routes_agree(g33):
    import edgering

    gt = edgering.graph_for_theorem(7, 8).graph
    for g in [g33.graph, gt]:
        assert gap_elements(g, 12, method="formula") == gap_elements(g, 12, method="direct")


def test_gap_validation(g33):
    with pytest.raises(ValueError):
        gap_elements(g33.graph, 7)
    with pytest.raises(ValueError):
        gap_elements(g33.graph, 0)
    with pytest.raises(ValueError):
        gap_elements(g33.graph, 12, method="sideways")
    with pytest.raises(UnsupportedGraphError):
        gap_elements(helpers.cycle_graph(6), 12)
    with pytest.raises(UnsupportedGraphError):
        gap_elements(Graph.from_edge_list(6, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)]), 12)


def test_gap_members_are_gap(g33):
    g = g33.graph
    for alpha in gap_elements(g, 12):
        assert in_sbar(g, alpha)
        assert in_S(g, alpha) is None


def test_family_gap_lands_in_exclusion_set():
    import edgering

    for a, b in [(3, 3), (3, 4)]:
        for fam in family_intermediates(a, b):
            for alpha in gap_elements(fam.graph, 12):
                assert edgering.in_set_A(fam, alpha)


def test_pair_plus_hub_edge_in_S():
    """Adding one hub-incident edge to an exceptional pair sum always
    gives a semigroup member, on the full graphs and all intermediates."""
    import edgering

    for a, b in [(3, 3), (3, 4)]:
        for fam in family_intermediates(a, b):
            g = fam.graph
            w = fam.w
            for pair in edgering.exceptional_pairs(g):
                base = [
                    x + y
                    for x, y in zip(cycle_indicator(g, pair.first), cycle_indicator(g, pair.second))
                ]
                for v in g.adjacency[w]:
                    vec = list(base)
                    vec[w - 1] += 1
                    vec[v - 1] += 1
                    assert in_S(g, tuple(vec)) is not None, (a, b, g.n_edges, pair, v)
