"""Graphs: exact invariants, the constructive difference sop for Koenig
graphs, the reduced edge ring, the induced-matching bound test and the
regularity reduction check.

The sop construction follows the inductive identification procedure: at each
step the candidate (generator, edge) pairs are scanned in canonical order and
a candidate is accepted only if it keeps the height and the Koenig property,
which is exactly what makes the pick a parameter element that the next step
can extend.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import bitsets
from .complexes import cm_test_universal, independence_complex
from .exceptions import (
    InputFormatError,
    IsolatedVertexError,
    PipelineInvariantError,
    UnverifiedSopError,
)
from .field import PrimeField
from .homology import reg_of_squarefree_quotient
from .ideal import (
    IdentificationSop,
    MonomialIdeal,
    edge_ideal,
    height,
    identify_variables,
    mgrade,
    minimalize,
    polarize,
    verify_identification_sop,
)
from .monomial import Monomial


@dataclass(frozen=True)
class Graph:
    """Simple graph on 1..n; edges stored as sorted index pairs."""

    n: int
    edges: tuple

    @property
    def isolated_vertices(self) -> tuple:
        seen = set()
        for a, b in self.edges:
            seen.update((a, b))
        return tuple(v for v in range(1, self.n + 1) if v not in seen)

    def neighbor_masks(self) -> list:
        masks = [0] * self.n
        for a, b in self.edges:
            masks[a - 1] |= 1 << (b - 1)
            masks[b - 1] |= 1 << (a - 1)
        return masks

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in set(self.edges)

    def edge_ideal(self) -> MonomialIdeal:
        return edge_ideal(self.n, self.edges)

    def independence_complex(self):
        return independence_complex(self.n, self.edges)


def graph(n: int, edges: Sequence) -> Graph:
    cleaned = set()
    for a, b in edges:
        a, b = int(a), int(b)
        if a == b:
            raise InputFormatError(f"loop at vertex {a}")
        if not (1 <= a <= n and 1 <= b <= n):
            raise InputFormatError(f"edge ({a},{b}) outside vertex range 1..{n}")
        cleaned.add((min(a, b), max(a, b)))
    return Graph(n, tuple(sorted(cleaned)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputFormatError("a cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return graph(n, edges)


def whisker(g: Graph) -> Graph:
    """Attach one pendant vertex n+i to each vertex i."""
    edges = list(g.edges) + [(i, g.n + i) for i in range(1, g.n + 1)]
    return graph(2 * g.n, edges)


@dataclass(frozen=True)
class GraphInvariants:
    nu: int
    tau: int
    alpha: int
    induced_matching_number: int
    mi: int
    big_m: int
    unmixed: bool

    def to_json(self) -> dict:
        return {
            "nu": self.nu,
            "tau": self.tau,
            "alpha": self.alpha,
            "induced_matching_number": self.induced_matching_number,
            "mi": self.mi,
            "big_m": self.big_m,
            "unmixed": self.unmixed,
            "koenig": self.nu == self.tau,
        }


def _max_matching_size(g: Graph) -> int:
    masks = g.neighbor_masks()
    memo: dict = {}

    def best(avail: int) -> int:
        if avail == 0:
            return 0
        got = memo.get(avail)
        if got is not None:
            return got
        v = None
        for cand in bitsets.iter_bits(avail):
            if masks[cand] & avail:
                v = cand
                break
        if v is None:
            memo[avail] = 0
            return 0
        out = best(avail & ~(1 << v))
        for u in bitsets.iter_bits(masks[v] & avail):
            out = max(out, 1 + best(avail & ~((1 << v) | (1 << u))))
        memo[avail] = out
        return out

    return best((1 << g.n) - 1)


def _edge_conflict_masks(g: Graph) -> list:
    """Edges conflict when they share a vertex or their endpoints are adjacent."""
    edges = g.edges
    conflict = [0] * len(edges)
    for i, (a, b) in enumerate(edges):
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if len({a, b, c, d}) < 4 or any(
                g.has_edge(x, y) for x in (a, b) for y in (c, d)
            ):
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i
    return conflict


def maximal_independent_sets(g: Graph) -> list:
    masks = bitsets.maximal_independent_sets(g.neighbor_masks())
    return [frozenset(v + 1 for v in bitsets.iter_bits(m)) for m in masks]


def graph_invariants(g: Graph) -> GraphInvariants:
    """All invariants computed exactly by exhaustive or branch-and-bound search."""
    mis = maximal_independent_sets(g)
    sizes = {len(s) for s in mis}
    alpha = max(sizes)
    tau = g.n - alpha
    nu = _max_matching_size(g)
    if g.edges:
        conflict = _edge_conflict_masks(g)
        a_g = bitsets.max_independent_set_size(conflict)
        big_m = bitsets.count_independent_sets(conflict) - 1
    else:
        a_g = 0
        big_m = 0
    return GraphInvariants(
        nu=nu,
        tau=tau,
        alpha=alpha,
        induced_matching_number=a_g,
        mi=len(mis),
        big_m=big_m,
        unmixed=len(sizes) == 1,
    )


def koenig_sop(g: Graph) -> Optional[IdentificationSop]:
    """Difference sop x_i - x_j supported on edges of g, or None when the
    graph is not Koenig.

    Candidates are scanned as: first non-pure-power generator of the current
    identified ideal in canonical order, then the lexicographically least
    original edge joining two of its classes; a candidate is kept only when
    the identification preserves height and the Koenig property.
    """
    if g.isolated_vertices:
        raise IsolatedVertexError(f"isolated vertices {g.isolated_vertices}")
    ideal = g.edge_ideal()
    h = height(ideal)
    if mgrade(ideal) != h:
        return None
    d = g.n - h
    pairs: list = []
    current = ideal
    rep = list(range(g.n + 1))

    def find(v: int) -> int:
        while rep[v] != v:
            rep[v] = rep[rep[v]]
            v = rep[v]
        return v

    def merged(ideal_now: MonomialIdeal, ra: int, rb: int) -> MonomialIdeal:
        lo, hi = min(ra, rb), max(ra, rb)
        gens = []
        for mono in ideal_now.gens:
            exps = list(mono.exps)
            if exps[hi - 1]:
                exps[lo - 1] += exps[hi - 1]
                exps[hi - 1] = 0
            gens.append(Monomial(exps))
        return minimalize(gens, ideal_now.n)

    while len(pairs) < d:
        chosen = None
        for gen in current.gens:
            if gen.is_pure_power:
                continue
            support = set(gen.support)
            for a, b in g.edges:
                ra, rb = find(a), find(b)
                if ra == rb or ra not in support or rb not in support:
                    continue
                candidate = merged(current, ra, rb)
                if height(candidate) == h and mgrade(candidate) == h:
                    chosen = ((a, b), candidate, ra, rb)
                    break
            if chosen:
                break
        if chosen is None:
            raise PipelineInvariantError("Koenig sop construction ran out of candidates")
        (a, b), current, ra, rb = chosen
        rep[max(ra, rb)] = min(ra, rb)
        pairs.append((a, b))
    sop = IdentificationSop(tuple(pairs))
    if not verify_identification_sop(ideal, sop):
        raise PipelineInvariantError("constructed Koenig sop failed verification")
    return sop


def reduced_edge_ring(g: Graph, sop: IdentificationSop) -> MonomialIdeal:
    """The identified ideal in the class representatives: squares of every
    representative plus the products of classes joined by adjacent sop edges.
    The combinatorial description is checked against direct substitution."""
    ideal = g.edge_ideal()
    if not verify_identification_sop(ideal, sop):
        raise UnverifiedSopError("sop does not verify against the edge ideal")
    identified = identify_variables(ideal, sop)
    rep_of = identified.rep_map
    n = g.n
    gens = []
    for r in identified.representatives:
        gens.append(Monomial(tuple(2 if i + 1 == r else 0 for i in range(n))))
    sop_pairs = list(sop.pairs)
    for k, (a, b) in enumerate(sop_pairs):
        for c, dd in sop_pairs[k + 1 :]:
            r1 = rep_of[a - 1]
            r2 = rep_of[c - 1]
            if r1 == r2:
                continue
            adjacent = any(g.has_edge(x, y) for x in (a, b) for y in (c, dd))
            if adjacent:
                exps = [0] * n
                exps[r1 - 1] = 1
                exps[r2 - 1] = 1
                gens.append(Monomial(exps))
    described = minimalize(gens, n)
    if described.gens != identified.ideal.gens:
        raise PipelineInvariantError(
            "adjacency description of the reduced ring disagrees with substitution"
        )
    return identified.ideal


@dataclass(frozen=True)
class MuComparison:
    mu_ideal: int
    mu_identified: int

    @property
    def cm_possible(self) -> bool:
        """Necessary condition only: equality does not imply Cohen-Macaulay."""
        return self.mu_ideal == self.mu_identified

    def to_json(self) -> dict:
        return {
            "mu_ideal": self.mu_ideal,
            "mu_identified": self.mu_identified,
            "cm_possible": self.cm_possible,
        }


def mu_compare(g: Graph, sop: IdentificationSop) -> MuComparison:
    ideal = g.edge_ideal()
    if not verify_identification_sop(ideal, sop):
        raise UnverifiedSopError("sop does not verify against the edge ideal")
    identified = identify_variables(ideal, sop)
    return MuComparison(ideal.mu, identified.ideal.mu)


@dataclass(frozen=True)
class ImBoundResult:
    applicable: bool
    reason: str
    k: int = 0
    mi: int = 0
    bound_holds: bool = False
    cm_verdict: bool = False
    cm_crosscheck: bool = False
    matching: tuple = ()
    field_char: int = 0

    def to_json(self) -> dict:
        out = {"applicable": self.applicable}
        if not self.applicable:
            out["reason"] = self.reason
            return out
        out.update(
            {
                "k": self.k,
                "mi": self.mi,
                "bound_holds": self.bound_holds,
                "cm": self.cm_verdict,
                "cm_crosscheck": self.cm_crosscheck,
                "matching": [list(e) for e in self.matching],
                "p": self.field_char,
            }
        )
        return out


def im_bound_test(g: Graph, field: PrimeField = PrimeField()) -> ImBoundResult:
    """mi(G) against k+1, where k counts the nonempty induced matchings inside
    the maximum matching fixed by the sop construction; Cohen-Macaulayness is
    cross-checked with the universal-sop length test."""
    if g.isolated_vertices:
        return ImBoundResult(False, "isolated vertices present")
    inv = graph_invariants(g)
    if inv.nu != inv.tau:
        return ImBoundResult(False, "graph is not Koenig")
    if not inv.unmixed:
        return ImBoundResult(False, "graph is not unmixed")
    sop = koenig_sop(g)
    matching = sop.matching_pairs()
    if len(matching) != inv.nu:
        raise PipelineInvariantError("sop matching pairs are not a maximum matching")
    k = 0
    m = len(matching)
    for mask in range(1, 1 << m):
        chosen = [matching[i] for i in bitsets.iter_bits(mask)]
        ok = True
        for idx, (a, b) in enumerate(chosen):
            for c, dd in chosen[idx + 1 :]:
                if any(g.has_edge(x, y) for x in (a, b) for y in (c, dd)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            k += 1
    if inv.mi > k + 1:
        raise PipelineInvariantError(f"mi={inv.mi} exceeded k+1={k + 1}")
    crosscheck = cm_test_universal(g.independence_complex(), field).verdict
    return ImBoundResult(
        True,
        "",
        k=k,
        mi=inv.mi,
        bound_holds=inv.mi <= k + 1,
        cm_verdict=inv.mi == k + 1,
        cm_crosscheck=crosscheck,
        matching=matching,
        field_char=field.p,
    )


@dataclass(frozen=True)
class RegReductionResult:
    reg_quotient: int
    reg_reduced: int
    alpha_matched_graph: int
    field_char: int

    @property
    def inequality_holds(self) -> bool:
        return self.reg_reduced <= self.reg_quotient

    def to_json(self) -> dict:
        return {
            "reg_R": self.reg_quotient,
            "reg_Rbar": self.reg_reduced,
            "alpha_H": self.alpha_matched_graph,
            "inequality_holds": self.inequality_holds,
            "p": self.field_char,
        }


def reg_reduction_check(
    g: Graph, sop: IdentificationSop, field: PrimeField = PrimeField()
) -> RegReductionResult:
    """reg of the reduced ring (via polarization, which whiskers the class
    adjacency graph) against reg of the edge ring, plus the independent-set
    count of the class adjacency graph as a combinatorial cross-value."""
    ideal = g.edge_ideal()
    if not verify_identification_sop(ideal, sop):
        raise UnverifiedSopError("sop does not verify against the edge ideal")
    reg_r = reg_of_squarefree_quotient(ideal, field)
    reduced = reduced_edge_ring(g, sop)
    identified = identify_variables(ideal, sop)
    polarized, _names = polarize(identified.compact)
    reg_rbar = reg_of_squarefree_quotient(polarized, field)
    reps = identified.representatives
    index_of = {r: i for i, r in enumerate(reps)}
    adjacency = [0] * len(reps)
    for mono in reduced.gens:
        support = mono.support
        if len(support) == 2:
            i, j = index_of[support[0]], index_of[support[1]]
            adjacency[i] |= 1 << j
            adjacency[j] |= 1 << i
    alpha_h = bitsets.max_independent_set_size(adjacency)
    return RegReductionResult(reg_r, reg_rbar, alpha_h, field.p)


def parse_edge_lines(lines: Sequence[str], n: int | None = None) -> Graph:
    """One edge per line: two 1-based vertex indices; `#` comments allowed."""
    edges = []
    for line in lines:
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 2:
            raise InputFormatError(f"edge line needs two indices: {body!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise InputFormatError(f"bad edge line {body!r}") from exc
    if not edges:
        raise InputFormatError("no edges in input")
    size = max(max(a, b) for a, b in edges)
    if n is None:
        n = size
    elif size > n:
        raise InputFormatError(f"edge uses vertex {size} but n={n}")
    return graph(n, edges)


def format_edge_lines(g: Graph) -> str:
    return "\n".join(f"{a} {b}" for a, b in g.edges) + "\n"
