from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import helpers  # noqa: E402

from edgering.families import build_gab, family_graph, max_family_edges  # noqa: E402


@pytest.fixture(scope="session")
def g33():
    return build_gab(3, 3)


@pytest.fixture(scope="session")
def g34():
    return build_gab(3, 4)


@pytest.fixture(scope="session")
def golden_corpus():
    """Name -> Graph for the frozen normality ground truth."""
    import edgering

    return {
        "K3": helpers.complete_graph(3),
        "K4": helpers.complete_graph(4),
        "K5": helpers.complete_graph(5),
        "K6": helpers.complete_graph(6),
        "bowtie": helpers.bowtie_graph(),
        "C5": helpers.cycle_graph(5),
        "C6_chords": helpers.c6_with_chords(),
        "Gtilde33": edgering.graph_for_theorem(7, 8).graph,
        "petersen_minus_vertex": helpers.petersen_minus_vertex(),
    }


def family_intermediates(a: int, b: int):
    """Every prefix of the removal schedule, full graph first."""
    full = max_family_edges(a, b)
    d = a + b + 1
    return [family_graph(a, b, n) for n in range(full, d, -1)]
