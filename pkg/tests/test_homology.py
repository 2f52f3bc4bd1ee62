import itertools
import random

import pytest

from sopcm.complexes import (
    chessboard_complex,
    depth_via_skeletons,
    from_facets,
    independence_complex,
    stanley_reisner_ideal,
)
from sopcm.exceptions import InputFormatError, SubsetScanBoundError
from sopcm.homology import (
    hochster_betti_table,
    reduced_homology_dims,
    reg_of_squarefree_quotient,
)
from sopcm.ideal import edge_ideal, minimalize, polarize
from sopcm.monomial import parse_monomial

C6_EDGES = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)]


def m(text, n):
    return parse_monomial(text, n)


# ------------------------------------------------------------- homology


def test_homology_full_simplex_is_acyclic(field):
    dims = reduced_homology_dims(from_facets(3, [[1, 2, 3]]), field)
    assert dims == (0, 0, 0, 0)


def test_homology_triangle_boundary(field):
    dims = reduced_homology_dims(from_facets(3, [[1, 2], [2, 3], [1, 3]]), field)
    assert dims == (0, 0, 1)  # one loop


def test_homology_two_points(field):
    dims = reduced_homology_dims(from_facets(2, [[1], [2]]), field)
    assert dims == (0, 1)


def test_homology_empty_face_complex(field):
    dims = reduced_homology_dims(from_facets(1, [[]]), field)
    assert dims == (1,)


def test_homology_sphere(field):
    # boundary of the tetrahedron: a 2-sphere
    facets = [list(f) for f in itertools.combinations(range(1, 5), 3)]
    dims = reduced_homology_dims(from_facets(4, facets), field)
    assert dims == (0, 0, 0, 1)


# ---------------------------------------------------------------- hochster


def test_hochster_full_simplex(field):
    table = hochster_betti_table(from_facets(3, [[1, 2, 3]]), field)
    assert table.entries == {(0, 0): 1}
    assert table.pd == 0 and table.reg == 0 and table.depth == 3


def test_hochster_c6_regularity(field):
    table = hochster_betti_table(independence_complex(6, C6_EDGES), field)
    assert table.reg == 2


def test_hochster_two_disjoint_edges_depth(field):
    complex_ = from_facets(4, [[1, 2], [3, 4]])
    table = hochster_betti_table(complex_, field)
    assert table.depth == 1
    assert table.depth == depth_via_skeletons(complex_, field)


def test_hochster_respects_bound(field):
    with pytest.raises(SubsetScanBoundError):
        hochster_betti_table(chessboard_complex(3), field, bound=8)


def test_hochster_knows_isolated_vertices(field):
    # x3 appears in no face: the quotient is K[x1,x2] presented over three
    # variables, so beta picks up the variable's Koszul strand
    complex_ = from_facets(3, [[1, 2]])
    table = hochster_betti_table(complex_, field)
    assert table.beta(1, 1) == 1
    assert table.depth == 2
    assert depth_via_skeletons(complex_, field) == 2


def test_betti_is_relabeling_invariant(field):
    rng = random.Random(11)
    edges = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 5)]
    base = hochster_betti_table(independence_complex(5, edges), field)
    for _ in range(3):
        perm = list(range(1, 6))
        rng.shuffle(perm)
        relabeled = [(perm[a - 1], perm[b - 1]) for a, b in edges]
        table = hochster_betti_table(independence_complex(5, relabeled), field)
        assert table.entries == base.entries


def test_cm_complex_has_pd_equal_codimension(field):
    # whiskered edge: Cohen-Macaulay, so pd = n - d
    complex_ = independence_complex(4, [(1, 2), (2, 3), (3, 4)])
    table = hochster_betti_table(complex_, field)
    assert table.pd == complex_.n - complex_.d
    assert table.depth == complex_.d


# -------------------------------------------------------------- regularity


def test_reg_c6(field):
    assert reg_of_squarefree_quotient(edge_ideal(6, C6_EDGES), field) == 2


def test_reg_single_edge(field):
    assert reg_of_squarefree_quotient(edge_ideal(2, [(1, 2)]), field) == 1


def test_reg_polarized_c6_reduction(field):
    reduced = minimalize(
        [m(t, 3) for t in ("x1^2", "x2^2", "x3^2", "x1 x2", "x2 x3", "x1 x3")], 3
    )
    polarized, _ = polarize(reduced)
    assert reg_of_squarefree_quotient(polarized, field) == 1


def test_reg_rejects_non_squarefree(field):
    with pytest.raises(InputFormatError):
        reg_of_squarefree_quotient(minimalize([m("x1^2", 2)], 2), field)


def test_reg_zero_ideal(field):
    from sopcm.ideal import zero_ideal

    assert reg_of_squarefree_quotient(zero_ideal(3), field) == 0


# ------------------------------------------------- depth oracle agreement


def test_depth_oracles_agree_on_small_family(field):
    complexes = [
        independence_complex(6, C6_EDGES),
        from_facets(4, [[1, 2], [3, 4]]),
        chessboard_complex(2),
        independence_complex(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]),
        from_facets(5, [[1, 2, 3], [3, 4], [4, 5]]),
    ]
    for complex_ in complexes:
        table = hochster_betti_table(complex_, field)
        assert depth_via_skeletons(complex_, field) == table.depth


def test_reg_one_iff_chordal_complement(field):
    """For quadratic squarefree ideals: linear resolution iff the complement
    graph is chordal; checked on bipartite-style instances."""
    import networkx as nx

    instances = [
        [(1, 2)],
        [(1, 3), (1, 4), (2, 3), (2, 4)],
        C6_EDGES,
        [(1, 2), (3, 4)],
        [(1, 4), (2, 4), (3, 4)],
    ]
    for edges in instances:
        n = max(max(e) for e in edges)
        reg = reg_of_squarefree_quotient(edge_ideal(n, edges), field)
        complement = nx.complement(nx.Graph([(a - 1, b - 1) for a, b in edges]))
        complement.add_nodes_from(range(n))
        assert (reg == 1) == nx.is_chordal(complement)
