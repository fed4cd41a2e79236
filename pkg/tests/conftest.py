import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # makes oracles importable

from cutbench.enumeration import GenFilter, generation_forms, graph6_decode


@pytest.fixture(scope="session")
def all_graphs_by_n():
    """One representative per isomorphism class, orders 1..7."""
    return {n: [graph6_decode(f.decode()) for f in generation_forms(n)]
            for n in range(1, 8)}


@pytest.fixture(scope="session")
def connected_graphs_by_n():
    """Connected representatives, orders 1..7."""
    gf = GenFilter(connected_only=True)
    return {n: [graph6_decode(f.decode()) for f in generation_forms(n, gf)]
            for n in range(1, 8)}
