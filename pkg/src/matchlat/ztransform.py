"""The face-flip digraph on perfect matchings and its order structure.

Two matchings are adjacent when they differ exactly on the boundary of a
single inner face; the arc points away from the matching for which that
boundary is proper-alternating.  Reachability in this digraph orders the
matchings; for weakly elementary graphs the result is a distributive
lattice whose Hasse diagram is the digraph itself, and for 2-connected
outerplane graphs the lattice is isomorphic to the ideal lattice of the
face poset carried by the oriented inner dual.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

from .errors import (
    CycleDetected,
    DirectedCycleInInnerDual,
    HasseMismatch,
    IsoFailure,
    MultipleSinks,
    MultipleSources,
    NoPerfectMatching,
    NotAPath,
    NotComparable,
    NotOuterplane,
)
from .lattice import (
    FiniteLattice,
    FinitePoset,
    lattice_from_poset,
    order_ideal_lattice,
    poset_from_relation,
)
from .matching import (
    IMPROPER,
    PROPER,
    Matching,
    all_alternating_cycles,
    classify_alternating_faces,
    enumerate_perfect_matchings,
    matching_index,
    symmetric_difference_cycles,
)
from .plane_graph import PlaneBipartiteGraph, is_outerplane_2connected, oriented_dual


@dataclass(frozen=True, eq=False)
class ZDigraph:
    """Acyclic flip digraph: nodes are matchings, arcs are labeled by faces."""

    matchings: tuple[Matching, ...]
    arcs: tuple[tuple[int, int, int], ...]  # (from, to, inner face id)

    @property
    def n(self) -> int:
        return len(self.matchings)

    def out_arcs(self, i: int) -> tuple[tuple[int, int, int], ...]:
        return self._out[i]

    @cached_property
    def _out(self) -> tuple[tuple[tuple[int, int, int], ...], ...]:
        adj: list[list[tuple[int, int, int]]] = [[] for _ in range(self.n)]
        for a in self.arcs:
            adj[a[0]].append(a)
        return tuple(tuple(lst) for lst in adj)


@lru_cache(maxsize=None)
def build_z_digraph(G: PlaneBipartiteGraph) -> ZDigraph:
    """Build the flip digraph and certify it acyclic."""
    matchings = enumerate_perfect_matchings(G)
    if not matchings:
        raise NoPerfectMatching("graph has no perfect matching")
    index = matching_index(G)
    arcs: list[tuple[int, int, int]] = []
    for i, M in enumerate(matchings):
        for fid, cls in classify_alternating_faces(G, M):
            if cls != PROPER:
                continue
            M2 = M.flip(G.faces[fid].edge_set)
            arcs.append((i, index[M2], fid))
    dig = ZDigraph(matchings=matchings, arcs=tuple(sorted(arcs)))
    _topological_order(dig)  # raises CycleDetected
    return dig


def _topological_order(Z: ZDigraph) -> list[int]:
    indeg = [0] * Z.n
    for _, b, _ in Z.arcs:
        indeg[b] += 1
    stack = sorted((i for i in range(Z.n) if indeg[i] == 0), reverse=True)
    order: list[int] = []
    while stack:
        x = stack.pop()
        order.append(x)
        for _, b, _ in Z.out_arcs(x):
            indeg[b] -= 1
            if indeg[b] == 0:
                stack.append(b)
    if len(order) != Z.n:
        raise CycleDetected("flip digraph has a directed cycle (orientation bug)")
    return order


@dataclass(frozen=True, eq=False)
class MatchingPoset:
    """Reachability order on matchings, with certified cover relation.

    ``poset`` orders all matchings (M' below M when the digraph walks
    from M down to M'); ``components`` lists the weakly connected pieces,
    each of which carries its own lattice for weakly elementary hosts.
    """

    digraph: ZDigraph
    poset: FinitePoset
    components: tuple[tuple[int, ...], ...]

    @property
    def matchings(self) -> tuple[Matching, ...]:
        return self.digraph.matchings

    def leq(self, i: int, j: int) -> bool:
        """True when matching i is below matching j."""
        return self.poset.leq(i, j)

    def component_lattices(self) -> tuple[FiniteLattice, ...]:
        out = []
        for comp in self.components:
            out.append(lattice_from_poset(self.poset.subposet(comp)))
        return tuple(out)


@lru_cache(maxsize=None)
def matching_poset(G: PlaneBipartiteGraph) -> MatchingPoset:
    """Order matchings by reachability; certify covers equal the arc set."""
    Z = build_z_digraph(G)
    order = _topological_order(Z)
    # reach[i] = bitmask of nodes reachable from i (including itself)
    reach = [1 << i for i in range(Z.n)]
    for x in reversed(order):
        for _, b, _ in Z.out_arcs(x):
            reach[x] |= reach[b]

    # covers: arc target is covered by arc source; certify irredundancy
    for a, b, _ in Z.arcs:
        for a2, mid, _ in Z.out_arcs(a):
            if mid != b and reach[mid] >> b & 1:
                raise HasseMismatch(
                    f"arc {a}->{b} is implied through {mid} (bug or anomaly)"
                )

    covers = tuple(sorted({(b, a) for a, b, _ in Z.arcs}))
    poset = FinitePoset(tuple(Z.matchings), covers)
    return MatchingPoset(digraph=Z, poset=poset, components=poset.components)


def matching_lattice(G: PlaneBipartiteGraph) -> FiniteLattice:
    """The full matching lattice; fails if the host is not weakly elementary."""
    return lattice_from_poset(matching_poset(G).poset)


@dataclass(frozen=True)
class ExtremalMatchings:
    source: Matching  # greatest element: no improper alternating cycle
    root: Matching  # least element: no proper alternating cycle
    source_index: int
    root_index: int


@lru_cache(maxsize=None)
def extremal_matchings(G: PlaneBipartiteGraph) -> ExtremalMatchings:
    """Unique source and sink of the flip digraph, exhaustively verified.

    Verification enumerates every alternating cycle of the source (none
    may be improper) and of the root (none may be proper).  For a
    non-weakly-elementary host with several components the error carries
    the per-component breakdown.
    """
    mp = matching_poset(G)
    Z = mp.digraph
    indeg = [0] * Z.n
    outdeg = [0] * Z.n
    for a, b, _ in Z.arcs:
        outdeg[a] += 1
        indeg[b] += 1
    sources = [i for i in range(Z.n) if indeg[i] == 0]
    sinks = [i for i in range(Z.n) if outdeg[i] == 0]
    if len(sources) > 1:
        raise MultipleSources(
            f"{len(sources)} sources across components {mp.components}"
        )
    if len(sinks) > 1:
        raise MultipleSinks(f"{len(sinks)} sinks across components {mp.components}")
    src, snk = sources[0], sinks[0]
    for rep in all_alternating_cycles(G, Z.matchings[src]):
        if rep.orientation_class == IMPROPER:
            raise AssertionError("source matching has an improper alternating cycle")
    for rep in all_alternating_cycles(G, Z.matchings[snk]):
        if rep.orientation_class == PROPER:
            raise AssertionError("root matching has a proper alternating cycle")
    return ExtremalMatchings(
        source=Z.matchings[src],
        root=Z.matchings[snk],
        source_index=src,
        root_index=snk,
    )


# --- signed cycle counts and face multiplicities -----------------------------


def delta_cycle_count(
    G: PlaneBipartiteGraph, M: Matching, M2: Matching, face_id: int
) -> int:
    """Signed count of alternating cycles of M xor M2 enclosing a face.

    Cycles proper with respect to M count +1, improper ones -1; requires
    M2 below M in the matching order, which forces the count to be >= 0.
    """
    mp = matching_poset(G)
    idx = matching_index(G)
    i, j = idx[M], idx[M2]
    if not mp.leq(j, i):
        raise NotComparable("second matching is not below the first")
    total = 0
    for rep in symmetric_difference_cycles(G, M, M2):
        if face_id in rep.enclosed_faces:
            total += 1 if rep.orientation_class == PROPER else -1
    assert total >= 0, "signed enclosure count went negative under the order"
    return total


def path_face_multiplicity(
    G: PlaneBipartiteGraph, path: Sequence[Matching], face_id: int
) -> int:
    """Multiplicity of a face among the arc labels of a directed flip path."""
    Z = build_z_digraph(G)
    idx = matching_index(G)
    try:
        nodes = [idx[M] for M in path]
    except KeyError as exc:
        raise NotAPath(f"unknown matching {exc}") from exc
    label_of: dict[tuple[int, int], int] = {(a, b): f for a, b, f in Z.arcs}
    count = 0
    for a, b in zip(nodes, nodes[1:]):
        if (a, b) not in label_of:
            raise NotAPath(f"no arc between consecutive matchings {a} -> {b}")
        if label_of[(a, b)] == face_id:
            count += 1
    return count


def directed_paths(
    G: PlaneBipartiteGraph, start: int, end: int, cap: int = 10_000
) -> list[tuple[int, ...]]:
    """All directed paths (as node index sequences) from start to end."""
    Z = build_z_digraph(G)
    out: list[tuple[int, ...]] = []
    stack = [start]

    def rec(here: int) -> None:
        if here == end:
            if len(out) < cap:
                out.append(tuple(stack))
            return
        if len(out) >= cap:
            return
        for _, b, _ in Z.out_arcs(here):
            stack.append(b)
            rec(b)
            stack.pop()

    rec(start)
    return out


# --- face poset and the ideal isomorphism for outerplane graphs -------------


@lru_cache(maxsize=None)
def face_poset_outerplane(G: PlaneBipartiteGraph) -> FinitePoset:
    """Order the inner faces by reachability in the oriented inner dual.

    A face is below another when the inner dual walks from the latter
    down to the former.  Requires a 2-connected outerplane host; a
    directed cycle in the inner dual is reported, never repaired.
    """
    if not is_outerplane_2connected(G):
        raise NotOuterplane("graph is not 2-connected outerplane")
    dual = oriented_dual(G, include_outer=False)
    faces = list(dual.nodes)
    pos = {f: i for i, f in enumerate(faces)}
    # detect directed cycles before closing the relation
    adj = {f: [a.dst for a in dual.out_adj[f]] for f in faces}
    state = {f: 0 for f in faces}

    def dfs(f: int) -> None:
        state[f] = 1
        for g in adj[f]:
            if state[g] == 1:
                raise DirectedCycleInInnerDual(
                    "oriented inner dual has a directed cycle"
                )
            if state[g] == 0:
                dfs(g)
        state[f] = 2

    for f in faces:
        if state[f] == 0:
            dfs(f)

    pairs: set[tuple[int, int]] = set()
    for f in faces:
        seen = {f}
        stack = [f]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        for g in seen:
            if g != f:
                pairs.add((pos[g], pos[f]))  # g reachable from f: g below f
    return poset_from_relation(tuple(faces), sorted(pairs))


def sigma(G: PlaneBipartiteGraph, M: Matching) -> frozenset[int]:
    """Faces enclosed by the cycles of M xor root: an ideal of the face poset."""
    F = face_poset_outerplane(G)
    ext = extremal_matchings(G)
    enclosed: set[int] = set()
    for rep in symmetric_difference_cycles(G, M, ext.root):
        enclosed.update(rep.enclosed_faces)
    pos = {f: i for i, f in enumerate(F.labels)}
    for f in enclosed:
        for g in F.labels:
            if F.leq(pos[g], pos[f]) and g not in enclosed:
                raise IsoFailure(
                    f"sigma image is not an ideal: face {g} below enclosed {f}"
                )
    return frozenset(enclosed)


@dataclass(frozen=True, eq=False)
class MatchingIdealIso:
    """Certified isomorphism between the matching lattice and J(face poset)."""

    face_poset: FinitePoset
    ideal_of: tuple[frozenset[int], ...]  # matching index -> face ideal


def verify_iso_matchings_ideals(G: PlaneBipartiteGraph) -> MatchingIdealIso:
    """Check that sigma is an order isomorphism onto the ideals of F(G)."""
    F = face_poset_outerplane(G)
    mp = matching_poset(G)
    matchings = mp.matchings
    images = [sigma(G, M) for M in matchings]
    if len(set(images)) != len(images):
        raise IsoFailure("sigma is not injective")

    pos = {f: i for i, f in enumerate(F.labels)}
    ideals: set[frozenset[int]] = set()
    _, masks = order_ideal_lattice(F, caps=G.caps)
    for mask in masks:
        ideals.add(
            frozenset(F.labels[i] for i in range(F.n) if mask >> i & 1)
        )
    if set(images) != ideals:
        raise IsoFailure(
            f"sigma image has {len(set(images))} ideals, face poset has {len(ideals)}"
        )
    for i in range(len(matchings)):
        for j in range(len(matchings)):
            if mp.leq(i, j) != (images[i] <= images[j]):
                raise IsoFailure(
                    f"sigma does not preserve order between matchings {i} and {j}"
                )
    return MatchingIdealIso(face_poset=F, ideal_of=tuple(images))
