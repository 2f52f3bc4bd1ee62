"""Acceptance suite: one test per criterion, one PASS line per criterion.

Each criterion pins its tolerances (all are exact equalities or budgeted
runtimes) and prints `[PASS] criterion N: ...` when it holds.
"""

import itertools
import math
import random
import time

from sopcm.complexes import (
    chessboard_complex,
    cm_test_universal,
    depth_via_skeletons,
    from_facets,
    skeleton,
    stanley_reisner_ideal,
    top_facet_count,
    universal_sop,
)
from sopcm.diagnostics import defect_profile
from sopcm.field import PrimeField
from sopcm.graphs import (
    cycle_graph,
    graph,
    graph_invariants,
    im_bound_test,
    koenig_sop,
    mu_compare,
    reduced_edge_ring,
    reg_reduction_check,
    whisker,
)
from sopcm.groebner import (
    FieldPolynomial,
    buchberger,
    hilbert_consistency,
    initial_ideal,
    quotient_length,
    parse_polynomial,
)
from sopcm.hilbert import hilbert_series
from sopcm.homology import hochster_betti_table
from sopcm.ideal import (
    identify_variables,
    minimalize,
    quotient_length_of,
    verify_identification_sop,
)
from sopcm.monomial import Monomial, parse_monomial
from sopcm.posets import (
    linear_resolution_test,
    order_complex,
    poset_cm_verdict,
    shelling_order,
)

from conftest import (
    atlas_graphs,
    enumerate_two_chain_posets,
    graphs_without_isolated,
    random_graph,
)

FIELD = PrimeField(32003)


def announce(number, message):
    print(f"[PASS] criterion {number}: {message}")


def simplex_face_sums(n):
    out = []
    for i in range(1, n + 1):
        terms = {}
        for combo in itertools.combinations(range(n), i):
            exps = [0] * n
            for v in combo:
                exps[v] = 1
            terms[Monomial(exps)] = 1
        out.append(FieldPolynomial(n, FIELD, terms))
    return out


def difference_forms(n, pairs):
    return [parse_polynomial(f"x{i} - x{j}", n, FIELD) for i, j in pairs]


def monomial_polys(ideal):
    return [FieldPolynomial.from_monomial(g, FIELD) for g in ideal.gens]


def test_criterion_1_universal_sop_initial_ideal():
    """Reduced basis of the simplex face sums has staircase x1, x2^2, ..,
    x_n^n and quotient length n!, within 10 seconds per size."""
    for n in (2, 3, 4, 5):
        started = time.monotonic()
        basis = buchberger(simplex_face_sums(n))
        expected = minimalize(
            [Monomial(tuple(i if k == i - 1 else 0 for k in range(n))) for i in range(1, n + 1)],
            n,
        )
        assert initial_ideal(basis).gens == expected.gens
        assert quotient_length(basis) == math.factorial(n)
        elapsed = time.monotonic() - started
        assert elapsed < 10.0, f"n={n} took {elapsed:.1f}s"
    announce(1, "simplex face-sum staircases and lengths n! for n = 2..5")


def test_criterion_2_c6_pipeline():
    g = cycle_graph(6)
    sop = koenig_sop(g)
    assert sop.pairs == ((1, 2), (3, 4), (5, 6))
    identified = identify_variables(g.edge_ideal(), sop)
    expected = {
        parse_monomial(t, 6)
        for t in ("x1^2", "x3^2", "x5^2", "x1 x3", "x3 x5", "x1 x5")
    }
    assert set(identified.ideal.gens) == expected
    assert set(reduced_edge_ring(g, sop).gens) == expected
    comparison = mu_compare(g, sop)
    assert comparison.mu_ideal == comparison.mu_identified == 6
    started = time.monotonic()
    report = cm_test_universal(g.independence_complex(), FIELD)
    assert report.top_facet_count == 2
    assert not report.verdict
    assert time.monotonic() - started < 5.0
    announce(2, "C6 sop, identified ideal, mu = 6 = 6, universal test says not CM with e = 2")


def test_criterion_3_chessboard_depth():
    started = time.monotonic()
    assert depth_via_skeletons(chessboard_complex(2), FIELD) == 1
    board = chessboard_complex(4)
    sk3 = skeleton(board, 3)
    e = top_facet_count(sk3)
    assert e == 96 == math.comb(4, 3) ** 2 * math.factorial(3)
    report = cm_test_universal(sk3, FIELD)
    assert report.length == 576 == math.factorial(3) * e
    assert report.verdict
    assert depth_via_skeletons(board, FIELD) == 3
    elapsed = time.monotonic() - started
    assert elapsed < 600.0, f"chessboard pipeline took {elapsed:.1f}s"
    announce(3, f"depth P2 = 1, P4 3-skeleton length 576 = 6*96, depth P4 = 3 ({elapsed:.1f}s)")


def test_criterion_4_koenig_equivalence():
    connected = atlas_graphs(max_nodes=6, connected_only=True)
    assert len(connected) == 142
    checked = 0
    for g in connected:
        inv = graph_invariants(g)
        sop = koenig_sop(g)
        assert (sop is not None) == (inv.nu == inv.tau), g
        if sop is not None:
            assert verify_identification_sop(g.edge_ideal(), sop), g
            checked += 1
    rng = random.Random(74207281)
    sampled = 0
    while sampled < 200:
        g = random_graph(rng, rng.choice((7, 8)), 0.3)
        inv = graph_invariants(g)
        sop = koenig_sop(g)
        assert (sop is not None) == (inv.nu == inv.tau), g
        if sop is not None:
            assert verify_identification_sop(g.edge_ideal(), sop), g
        sampled += 1
    announce(
        4,
        f"Koenig iff nu = tau on {len(connected)} connected graphs <= 6 "
        f"({checked} sops verified) and 200 random 7-8 vertex graphs",
    )


def test_criterion_5_poset_theorems():
    total = 0
    cm_count = 0
    for n in (1, 2, 3, 4):
        posets = enumerate_two_chain_posets(n)
        for poset in posets:
            verdict = poset_cm_verdict(poset, FIELD)
            assert verdict.agree, (n, poset.covers_xy, poset.covers_yx)
            linear = linear_resolution_test(poset, FIELD)
            assert linear.agree, (n, poset.covers_xy, poset.covers_yx)
            if verdict.by_conditions:
                assert shelling_order(poset) is not None
                cm_count += 1
            total += 1
    assert total == 1 + 4 + 29 + 266
    announce(
        5,
        f"CM conditions, universal test, shellings and linear-resolution "
        f"verdicts agree on all {total} two-chain posets with n <= 4 ({cm_count} CM)",
    )


def test_criterion_6_induced_matching_bound():
    c4 = im_bound_test(cycle_graph(4), FIELD)
    assert (c4.mi, c4.k) == (2, 2) and c4.mi < c4.k + 1
    assert not c4.cm_verdict and not c4.cm_crosscheck
    path = im_bound_test(graph(4, [(1, 2), (2, 3), (3, 4)]), FIELD)
    assert (path.mi, path.k) == (3, 2) and path.mi == path.k + 1
    assert path.cm_verdict and path.cm_crosscheck
    scanned = 0
    for g in graphs_without_isolated(max_nodes=7):
        inv = graph_invariants(g)
        if not (inv.unmixed and inv.nu == inv.tau):
            continue
        result = im_bound_test(g, FIELD)
        assert result.applicable and result.bound_holds, g
        assert result.cm_verdict == result.cm_crosscheck, g
        scanned += 1
    assert scanned >= 12
    announce(
        6,
        f"mi <= k+1 with CM iff equality on C4, the whiskered edge and "
        f"all {scanned} unmixed Koenig graphs <= 7 vertices",
    )


def test_criterion_7_regularity_reduction():
    violations = 0
    checked = 0
    for g in graphs_without_isolated(max_nodes=7):
        sop = koenig_sop(g)
        if sop is None:
            continue
        result = reg_reduction_check(g, sop, FIELD)
        if not result.inequality_holds:
            violations += 1
        checked += 1
    rng = random.Random(30402457)
    sampled = 0
    while sampled < 40:
        g = random_graph(rng, 8, 0.3)
        sop = koenig_sop(g)
        if sop is None:
            continue
        result = reg_reduction_check(g, sop, FIELD)
        if not result.inequality_holds:
            violations += 1
        checked += 1
        sampled += 1
    assert violations == 0
    c6 = reg_reduction_check(cycle_graph(6), koenig_sop(cycle_graph(6)), FIELD)
    assert (c6.reg_reduced, c6.reg_quotient) == (1, 2)
    announce(
        7,
        f"reg(reduced) <= reg(R) on {checked} constructed Koenig sops "
        f"(0 violations); C6 is strict with 1 < 2",
    )


def _defect_instances():
    """(gens, sop, expected_cm) triples: >= 50 verified sop instances."""
    instances = []
    # universal sops over independence complexes of small graphs
    shortlist = [g for g in graphs_without_isolated(max_nodes=6) if 3 <= g.n][::4][:30]
    for g in shortlist:
        complex_ = g.independence_complex()
        gens = monomial_polys(stanley_reisner_ideal(complex_))
        instances.append((gens, universal_sop(complex_, FIELD), None, complex_))
    # universal sops over order complexes
    for poset in enumerate_two_chain_posets(2) + enumerate_two_chain_posets(3)[:6]:
        complex_ = order_complex(poset)
        gens = monomial_polys(stanley_reisner_ideal(complex_))
        instances.append((gens, universal_sop(complex_, FIELD), None, complex_))
    # chessboard P2 and the P3 2-skeleton
    for complex_ in (chessboard_complex(2), skeleton(chessboard_complex(3), 2)):
        gens = monomial_polys(stanley_reisner_ideal(complex_))
        instances.append((gens, universal_sop(complex_, FIELD), None, complex_))
    # difference sops on Koenig graphs
    for g in (
        cycle_graph(4),
        cycle_graph(6),
        cycle_graph(8),
        graph(4, [(1, 2), (2, 3), (3, 4)]),
        graph(3, [(1, 2), (2, 3)]),
        whisker(graph(3, [(1, 2), (2, 3), (1, 3)])),
        whisker(cycle_graph(4)),
        graph(5, [(1, 2), (3, 4), (2, 5), (4, 5)]),
    ):
        sop = koenig_sop(g)
        gens = monomial_polys(g.edge_ideal())
        instances.append(
            (gens, difference_forms(g.n, sop.pairs), None, g.independence_complex())
        )
    # plain regular sequences
    instances.append(([], simplex_face_sums(3), True, None))
    instances.append(
        (
            monomial_polys(minimalize([parse_monomial("x1 x2", 3)], 3)),
            difference_forms(3, [(1, 2)]) + [parse_polynomial("x3", 3, FIELD)],
            None,
            None,
        )
    )
    instances.append(([], [parse_polynomial("x1", 2, FIELD), parse_polynomial("x2", 2, FIELD)], True, None))
    return instances


def test_criterion_8_defect_decomposition():
    instances = _defect_instances()
    assert len(instances) >= 50
    zero_defect = 0
    for gens, sop, expected_cm, complex_ in instances:
        profile = defect_profile(gens, sop, FIELD)  # identity and bounds checked inside
        if complex_ is not None:
            report = cm_test_universal(complex_, FIELD)
            assert (profile.total_defect == 0) == report.verdict
        if expected_cm is not None:
            assert (profile.total_defect == 0) == expected_cm
        if profile.total_defect == 0:
            zero_defect += 1
            assert profile.is_regular_sequence
        else:
            assert not profile.is_regular_sequence
    announce(
        8,
        f"defect decomposition exact on {len(instances)} sop instances "
        f"({zero_defect} regular / CM, the rest obstructed)",
    )


def test_criterion_9_oracle_agreement():
    complexes = []
    for g in [h for h in graphs_without_isolated(max_nodes=6) if h.n >= 4][::6][:15]:
        complexes.append(g.independence_complex())
    for poset in enumerate_two_chain_posets(3)[::3][:8]:
        complexes.append(order_complex(poset))
    complexes.append(chessboard_complex(2))
    complexes.append(chessboard_complex(3))
    rng = random.Random(13466917)
    for _ in range(5):
        n = rng.choice((10, 11, 12))
        facets = [
            rng.sample(range(1, n + 1), rng.randint(2, 4)) for _ in range(rng.randint(4, 7))
        ]
        complexes.append(from_facets(n, facets))
    for complex_ in complexes:
        assert complex_.n <= 12
        via_skeletons = depth_via_skeletons(complex_, FIELD)
        via_betti = hochster_betti_table(complex_, FIELD).depth
        assert via_skeletons == via_betti, complex_
    # Hilbert data: monomial recursion vs Groebner + graded linear algebra
    consistency_instances = [
        simplex_face_sums(3),
        simplex_face_sums(4),
        monomial_polys(cycle_graph(6).edge_ideal()),
        monomial_polys(cycle_graph(6).edge_ideal()) + difference_forms(6, [(1, 2), (3, 4), (5, 6)]),
        monomial_polys(minimalize([parse_monomial("x1^2 x2", 3), parse_monomial("x2 x3^2", 3)], 3)),
        [parse_polynomial("x1 x2 - x3^2", 3, FIELD), parse_polynomial("x2^2 + x1 x3", 3, FIELD)],
    ]
    for complex_ in complexes[:6]:
        gens = monomial_polys(stanley_reisner_ideal(complex_))
        if gens:
            consistency_instances.append(gens + universal_sop(complex_, FIELD))
    for gens in consistency_instances:
        assert hilbert_consistency(gens, bound=6)
    # and the two length oracles coincide whenever finite
    for gens in consistency_instances[:8]:
        basis = buchberger(gens)
        length = quotient_length(basis)
        staircase = initial_ideal(basis)
        if length is not math.inf:
            assert length == quotient_length_of(staircase)
            assert length == hilbert_series(staircase).multiplicity
    announce(
        9,
        f"depth oracles agree on {len(complexes)} complexes (n <= 12); Hilbert "
        f"recursion matches Groebner graded counts on {len(consistency_instances)} systems",
    )
