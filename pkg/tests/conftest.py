import itertools

import pytest

from sopcm.field import PrimeField
from sopcm.graphs import Graph, graph
from sopcm.posets import TwoChainPoset, build_poset
from sopcm.exceptions import InvalidPosetError


@pytest.fixture(scope="session")
def field():
    return PrimeField()


def atlas_graphs(max_nodes=7, connected_only=False, min_edges=1):
    """All isomorphism classes up to max_nodes from the networkx atlas."""
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for g in graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or n > max_nodes or g.number_of_edges() < min_edges:
            continue
        if connected_only and not nx.is_connected(g):
            continue
        out.append(graph(n, [(a + 1, b + 1) for a, b in g.edges()]))
    return out


def graphs_without_isolated(max_nodes=7):
    return [g for g in atlas_graphs(max_nodes=max_nodes) if not g.isolated_vertices]


def random_graph(rng, n, p=0.35, require_no_isolated=True) -> Graph:
    while True:
        edges = [
            (a, b)
            for a, b in itertools.combinations(range(1, n + 1), 2)
            if rng.random() < p
        ]
        g = graph(n, edges)
        if not require_no_isolated or (edges and not g.isolated_vertices):
            return g


def enumerate_two_chain_posets(n):
    """All valid two-chain posets with chains of length n.

    A candidate is a pair of monotone staircases: u[j] = largest i with
    x_i < y_j (0 if none) and d[j] = largest i with y_i < x_j.  The derived
    relation is closed and validated here, the cover relations are extracted,
    and build_poset re-validates from scratch.
    """
    levels = list(range(n + 1))
    monotone = [
        seq
        for seq in itertools.product(levels, repeat=n)
        if all(seq[k] <= seq[k + 1] for k in range(n - 1))
    ]
    posets = []
    for u in monotone:
        for d in monotone:
            poset = _poset_from_staircases(n, u, d)
            if poset is not None:
                posets.append(poset)
    return posets


def _poset_from_staircases(n, u, d) -> TwoChainPoset | None:
    m = 2 * n
    rel = [[False] * m for _ in range(m)]
    for i in range(n):
        for k in range(i + 1, n):
            rel[i][k] = True
            rel[n + i][n + k] = True
    for j in range(n):
        for i in range(u[j]):
            rel[i][n + j] = True  # x_{i+1} < y_{j+1}
        for i in range(d[j]):
            rel[n + i][j] = True  # y_{i+1} < x_{j+1}
    # close transitively; reject if closure adds pairs (the staircase pair
    # does not describe itself) or creates a cycle
    closed = [row[:] for row in rel]
    changed = True
    while changed:
        changed = False
        for a in range(m):
            for b in range(m):
                if closed[a][b]:
                    for c in range(m):
                        if closed[b][c] and not closed[a][c]:
                            closed[a][c] = True
                            changed = True
    if closed != rel:
        return None
    if any(closed[a][a] for a in range(m)):
        return None
    covers_xy, covers_yx = [], []
    for a in range(m):
        for b in range(m):
            if not closed[a][b]:
                continue
            if any(closed[a][z] and closed[z][b] for z in range(m)):
                continue
            if a < n and b >= n:
                covers_xy.append((a + 1, b - n + 1))
            elif a >= n and b < n:
                covers_yx.append((a - n + 1, b + 1))
    try:
        return build_poset(n, covers_xy, covers_yx)
    except InvalidPosetError:
        return None
