"""Perfect matching enumeration and alternating-cycle classification.

Enumeration is oracle-grade: deterministic branch-and-prune over
vertices, complete and duplicate-free, gated by the size caps.  Counting
shortcuts (transfer matrices, Pfaffians) are deliberately out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NoPerfectMatching, NotAMatching, SizeCapExceeded
from .plane_graph import (
    WHITE,
    PlaneBipartiteGraph,
    cycle_clockwise_steps,
    faces_inside_cycle,
)

PROPER = "proper"
IMPROPER = "improper"


@dataclass(frozen=True, order=True)
class Matching:
    """A perfect matching as a canonical sorted tuple of edge ids."""

    edge_ids: tuple[int, ...]

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edge_ids)

    def __contains__(self, edge_id: int) -> bool:
        return edge_id in self.edge_set

    def flip(self, cycle_edges: Iterable[int]) -> "Matching":
        return Matching(tuple(sorted(self.edge_set ^ frozenset(cycle_edges))))


@dataclass(frozen=True)
class AlternatingCycleReport:
    """One alternating cycle: its edges, orientation class, and interior."""

    cycle: tuple[int, ...]  # edge ids in cyclic order
    orientation_class: str  # PROPER or IMPROPER, w.r.t. the reference matching
    enclosed_faces: frozenset[int]

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.cycle)


def _enumerate_on_edges(
    n_vertices: int, edges: Sequence[tuple[int, int]], cap: int
) -> list[tuple[int, ...]]:
    """All perfect matchings of an abstract graph, as sorted edge-index tuples.

    Branches on an uncovered vertex with the fewest available edges and
    prunes dead vertices; complete and deterministic.
    """
    if n_vertices % 2 == 1:
        return []
    incident: list[list[tuple[int, int]]] = [[] for _ in range(n_vertices)]
    for eid, (u, v) in enumerate(edges):
        incident[u].append((eid, v))
        incident[v].append((eid, u))

    full = (1 << n_vertices) - 1
    results: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def rec(covered: int) -> None:
        if covered == full:
            if len(results) >= cap:
                raise SizeCapExceeded(f"more than {cap} matchings")
            results.append(tuple(sorted(chosen)))
            return
        best_v = -1
        best: list[tuple[int, int]] | None = None
        for v in range(n_vertices):
            if covered >> v & 1:
                continue
            avail = [(eid, u) for eid, u in incident[v] if not covered >> u & 1]
            if not avail:
                return
            if best is None or len(avail) < len(best):
                best_v, best = v, avail
                if len(avail) == 1:
                    break
        assert best is not None
        for eid, u in best:
            chosen.append(eid)
            rec(covered | 1 << best_v | 1 << u)
            chosen.pop()

    rec(0)
    results.sort()
    return results


@lru_cache(maxsize=None)
def enumerate_perfect_matchings(G: PlaneBipartiteGraph) -> tuple[Matching, ...]:
    """Complete, canonically ordered tuple of perfect matchings of G."""
    G.caps.check_vertices(G.n_vertices)
    if sum(G.colors) * 2 != G.n_vertices:
        return ()
    raw = _enumerate_on_edges(G.n_vertices, G.edges, G.caps.max_matchings)
    return tuple(Matching(t) for t in raw)


@lru_cache(maxsize=None)
def matching_index(G: PlaneBipartiteGraph) -> dict[Matching, int]:
    return {M: i for i, M in enumerate(enumerate_perfect_matchings(G))}


def check_matching(G: PlaneBipartiteGraph, M: Matching) -> None:
    covered: set[int] = set()
    for eid in M.edge_ids:
        if not (0 <= eid < G.n_edges):
            raise NotAMatching(f"unknown edge id {eid}")
        u, v = G.edges[eid]
        if u in covered or v in covered:
            raise NotAMatching(f"edges share vertex at edge {eid}")
        covered.update((u, v))
    if len(covered) != G.n_vertices:
        raise NotAMatching("not all vertices are covered")


def classify_alternating_faces(
    G: PlaneBipartiteGraph, M: Matching
) -> list[tuple[int, str]]:
    """Inner faces whose boundary is M-alternating, tagged proper/improper.

    An alternating face is proper when its matching edges run from white
    to black along the clockwise inner-face walk.  Faces whose boundary is
    not a simple cycle can never alternate and are skipped.
    """
    check_matching(G, M)
    out: list[tuple[int, str]] = []
    mset = M.edge_set
    for fid in G.inner_face_ids:
        walk = G.faces[fid]
        if not walk.is_simple_cycle:
            continue
        pattern = [eid in mset for eid, _, _ in walk.steps]
        if not any(pattern):
            continue
        L = len(pattern)
        if any(pattern[i] == pattern[(i + 1) % L] for i in range(L)):
            continue
        classes = {
            PROPER if G.colors[tail] == WHITE else IMPROPER
            for (eid, tail, _), inm in zip(walk.steps, pattern)
            if inm
        }
        assert len(classes) == 1, "matched edges disagree on orientation class"
        out.append((fid, classes.pop()))
    return out


def _cycles_of_edge_set(
    G: PlaneBipartiteGraph, edge_set: frozenset[int]
) -> list[tuple[int, ...]]:
    """Decompose a 2-regular edge set into vertex-disjoint simple cycles.

    Each cycle is returned as a canonical edge-id sequence: starting at
    its smallest edge, continuing toward the smaller-id neighbor edge.
    """
    if not edge_set:
        return []
    adj: dict[int, list[tuple[int, int]]] = {}
    for eid in edge_set:
        u, v = G.edges[eid]
        adj.setdefault(u, []).append((v, eid))
        adj.setdefault(v, []).append((u, eid))
    if any(len(lst) != 2 for lst in adj.values()):
        raise NotAMatching("symmetric difference is not a disjoint union of cycles")

    cycles: list[tuple[int, ...]] = []
    used: set[int] = set()
    for start_eid in sorted(edge_set):
        if start_eid in used:
            continue
        u, v = G.edges[start_eid]
        # walk both ways from the start edge; pick the direction whose
        # second edge id is smaller, for a canonical representative
        def walk(frm: int, to: int) -> list[int]:
            seq = [start_eid]
            here = to
            while here != frm:
                nxt = [(w, eid) for w, eid in adj[here] if eid != seq[-1]]
                assert len(nxt) == 1
                here = nxt[0][0]
                seq.append(nxt[0][1])
            return seq

        fwd = walk(u, v)
        bwd = walk(v, u)
        seq = fwd if fwd[1] <= bwd[1] else bwd
        used.update(seq)
        cycles.append(tuple(seq))
    cycles.sort(key=lambda c: c[0])
    return cycles


def classify_cycle(
    G: PlaneBipartiteGraph, M: Matching, cycle_edges: Iterable[int]
) -> AlternatingCycleReport:
    """Classify one M-alternating cycle as proper/improper w.r.t. M."""
    cyc = frozenset(cycle_edges)
    steps = cycle_clockwise_steps(G, cyc)
    matched = sorted(cyc & M.edge_set)
    assert matched, "cycle has no matching edge"
    classes = {
        PROPER if G.colors[steps[eid][0]] == WHITE else IMPROPER for eid in matched
    }
    assert len(classes) == 1, "matched edges disagree on orientation class"
    order = _cycles_of_edge_set(G, cyc)
    assert len(order) == 1
    return AlternatingCycleReport(
        cycle=order[0],
        orientation_class=classes.pop(),
        enclosed_faces=faces_inside_cycle(G, cyc),
    )


def symmetric_difference_cycles(
    G: PlaneBipartiteGraph, M1: Matching, M2: Matching
) -> list[AlternatingCycleReport]:
    """Decompose M1 xor M2 into disjoint cycles, classified w.r.t. M1."""
    check_matching(G, M1)
    check_matching(G, M2)
    diff = M1.edge_set ^ M2.edge_set
    return [classify_cycle(G, M1, cyc) for cyc in _cycles_of_edge_set(G, diff)]


def forcing_edges(G: PlaneBipartiteGraph) -> frozenset[int]:
    """Edges contained in exactly one perfect matching."""
    matchings = enumerate_perfect_matchings(G)
    if not matchings:
        raise NoPerfectMatching("graph has no perfect matching")
    count = [0] * G.n_edges
    for M in matchings:
        for eid in M.edge_ids:
            count[eid] += 1
    return frozenset(eid for eid, c in enumerate(count) if c == 1)


def all_alternating_cycles(
    G: PlaneBipartiteGraph, M: Matching
) -> list[AlternatingCycleReport]:
    """Every M-alternating cycle of G.

    Flipping an alternating cycle of M yields another perfect matching,
    and conversely every single-cycle symmetric difference with M is an
    M-alternating cycle, so the cycles are exactly the single-cycle
    differences M xor M'.
    """
    check_matching(G, M)
    reports: list[AlternatingCycleReport] = []
    for M2 in enumerate_perfect_matchings(G):
        if M2 == M:
            continue
        diff = M.edge_set ^ M2.edge_set
        cycles = _cycles_of_edge_set(G, diff)
        if len(cycles) == 1:
            reports.append(classify_cycle(G, M, cycles[0]))
    reports.sort(key=lambda r: r.cycle)
    return reports
