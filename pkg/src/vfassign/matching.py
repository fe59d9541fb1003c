"""Vertex-facet graphs and the matching-based assignment decision.

An assignment is a matching of NON-incident vertex-facet pairs covering
all vertices or all facets. A side can only be covered if it is the
smaller-or-equal side, so the decision reduces to: maximum matching size
equals min(vertex count, facet count). The incident variant instead asks
for an injective map from vertices to incident facets, i.e. a matching
covering the vertex side of the complement graph.

Failures are certified, not just reported: a Hall-violating set is
extracted by alternating reachability from the unmatched nodes and then
greedily shrunk, and every certificate is recounted against the graph
before it is returned, so the matching algorithm itself needs no trust.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .bitsets import from_indices, full_mask, iter_indices, to_indices
from .errors import InconsistencyError, InvalidInputError
from .incidence import IncidenceMatrix

NONINCIDENT = "NONINCIDENT"
INCIDENT = "INCIDENT"

ASSIGNED = "ASSIGNED"
NO_ASSIGNMENT = "NO_ASSIGNMENT"

VERTICES = "VERTICES"
FACETS = "FACETS"
BOTH = "BOTH"
NONE = "NONE"

_UNMATCHED = -1
_INFINITY = -1


@dataclass(frozen=True)
class VertexFacetGraph:
    """Bipartite graph on vertices and facets of one polytope.

    In NONINCIDENT mode an edge means the vertex avoids the facet; in
    INCIDENT mode it means the vertex lies on it. The two modes on the
    same matrix are exact edge complements.
    """

    mode: str
    n_vertices: int
    n_facets: int
    adjacency: tuple[int, ...]  # per vertex: bitset of adjacent facets
    vertex_labels: tuple[str, ...]
    facet_labels: tuple[str, ...]

    def is_edge(self, vertex: int, facet: int) -> bool:
        return bool(self.adjacency[vertex] >> facet & 1)

    def facet_adjacency(self) -> tuple[int, ...]:
        """Per facet: bitset of adjacent vertices (the transposed view)."""
        out = [0] * self.n_facets
        for v, mask in enumerate(self.adjacency):
            for f in iter_indices(mask):
                out[f] |= 1 << v
        return tuple(out)


@dataclass(frozen=True)
class MatchingCertificate:
    """Outcome of an assignment decision, carrying its own evidence.

    On ASSIGNED, matching covers every node of covered_side. On
    NO_ASSIGNMENT, hall_witness is a set on witness_side whose
    neighborhood is strictly smaller, which bounds every matching away
    from the required size.
    """

    mode: str
    outcome: str
    matching: tuple[tuple[int, int], ...]
    covered_side: str
    witness_side: str | None = None
    hall_witness: tuple[int, ...] | None = None
    witness_neighborhood: tuple[int, ...] | None = None
    warnings: tuple[str, ...] = ()


def build_graph(m: IncidenceMatrix, mode: str) -> VertexFacetGraph:
    """The vertex-facet graph of a matrix, in either mode."""
    if mode not in (NONINCIDENT, INCIDENT):
        raise InvalidInputError(f"unknown graph mode {mode!r}")
    if mode == INCIDENT:
        adjacency = m.vertex_masks
    else:
        all_facets = full_mask(m.n_facets)
        adjacency = tuple(mask ^ all_facets for mask in m.vertex_masks)
    return VertexFacetGraph(
        mode=mode,
        n_vertices=m.n_vertices,
        n_facets=m.n_facets,
        adjacency=adjacency,
        vertex_labels=m.vertex_labels,
        facet_labels=m.facet_labels,
    )


def maximum_matching(g: VertexFacetGraph) -> tuple[tuple[int, int], ...]:
    """Maximum matching via Hopcroft-Karp, deterministic in index order."""
    match_v, _ = _hopcroft_karp(g.adjacency, g.n_vertices, g.n_facets)
    return tuple((v, match_v[v]) for v in range(g.n_vertices)
                 if match_v[v] != _UNMATCHED)


def _hopcroft_karp(adjacency, n_left: int, n_right: int):
    """Hopcroft-Karp on bitset adjacency; returns both matching arrays.

    Nodes are explored in increasing index order everywhere, so the
    returned matching is a pure function of the graph.
    """
    match_left = [_UNMATCHED] * n_left
    match_right = [_UNMATCHED] * n_right
    dist = [0] * n_left

    def bfs() -> bool:
        queue: deque[int] = deque()
        for u in range(n_left):
            if match_left[u] == _UNMATCHED:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INFINITY
        shortest = _INFINITY
        while queue:
            u = queue.popleft()
            if shortest != _INFINITY and dist[u] >= shortest:
                continue
            for f in iter_indices(adjacency[u]):
                w = match_right[f]
                if w == _UNMATCHED:
                    if shortest == _INFINITY:
                        shortest = dist[u] + 1
                elif dist[w] == _INFINITY:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return shortest != _INFINITY

    def dfs(u: int) -> bool:
        for f in iter_indices(adjacency[u]):
            w = match_right[f]
            if w == _UNMATCHED or (dist[w] == dist[u] + 1 and dfs(w)):
                match_left[u] = f
                match_right[f] = u
                return True
        dist[u] = _INFINITY
        return False

    while bfs():
        for u in range(n_left):
            if match_left[u] == _UNMATCHED:
                dfs(u)
    return match_left, match_right


def _alternating_reachable(adjacency, match_left, match_right, n_left):
    """Left and right nodes reachable by alternating paths from unmatched
    left nodes. With a maximum matching this yields a Hall witness: the
    reachable left set S has neighborhood exactly the reachable right set,
    and |S| - |N(S)| equals the number of unmatched left nodes."""
    left_seen = [match_left[u] == _UNMATCHED for u in range(n_left)]
    right_seen_mask = 0
    queue = deque(u for u in range(n_left) if left_seen[u])
    while queue:
        u = queue.popleft()
        fresh = adjacency[u] & ~right_seen_mask
        right_seen_mask |= fresh
        for f in iter_indices(fresh):
            w = match_right[f]
            if w != _UNMATCHED and not left_seen[w]:
                left_seen[w] = True
                queue.append(w)
    left_set = [u for u in range(n_left) if left_seen[u]]
    return left_set, right_seen_mask


def _shrink_witness(adjacency, members: list[int], required_deficiency: int) -> list[int]:
    """Greedily drop members while the deficiency stays sufficient.

    Deterministic: repeatedly scan in increasing index order, keeping a
    removal whenever |S| - |N(S)| >= required_deficiency still holds.
    """

    def deficiency(sel: list[int]) -> int:
        neighborhood = 0
        for u in sel:
            neighborhood |= adjacency[u]
        return len(sel) - neighborhood.bit_count()

    current = list(members)
    changed = True
    while changed:
        changed = False
        for u in list(current):
            trial = [x for x in current if x != u]
            if trial and deficiency(trial) >= required_deficiency:
                current = trial
                changed = True
    return current


def _witness_certificate(g, adjacency, match_left, match_right, n_left,
                         side: str, required_deficiency: int,
                         matching, warnings) -> MatchingCertificate:
    members, neighborhood_mask = _alternating_reachable(
        adjacency, match_left, match_right, n_left)
    members = _shrink_witness(adjacency, members, required_deficiency)
    neighborhood = 0
    for u in members:
        neighborhood |= adjacency[u]
    if len(matching) == g.n_vertices:
        covered = VERTICES
    elif len(matching) == g.n_facets:
        covered = FACETS
    else:
        covered = NONE
    return MatchingCertificate(
        mode=g.mode,
        outcome=NO_ASSIGNMENT,
        matching=matching,
        covered_side=covered,
        witness_side=side,
        hall_witness=tuple(members),
        witness_neighborhood=to_indices(neighborhood),
        warnings=warnings,
    )


def decide_assignment(m: IncidenceMatrix) -> MatchingCertificate:
    """Decide whether the polytope has a vertex-facet assignment.

    ASSIGNED exactly when the maximum matching of the non-incidence graph
    saturates the smaller side. On failure the Hall witness is drawn from
    the larger side (ties: vertex side) and shrunk until minimal.
    """
    g = build_graph(m, NONINCIDENT)
    matching = maximum_matching(g)
    smaller = min(g.n_vertices, g.n_facets)
    if len(matching) == smaller:
        if g.n_vertices == g.n_facets:
            side = BOTH
        elif g.n_vertices < g.n_facets:
            side = VERTICES
        else:
            side = FACETS
        cert = MatchingCertificate(mode=NONINCIDENT, outcome=ASSIGNED,
                                   matching=matching, covered_side=side)
        verify_certificate(g, cert)
        return cert
    # witness proves max matching <= |larger side| - deficiency < smaller
    if g.n_vertices >= g.n_facets:
        larger = g.n_vertices
        required = larger - smaller + 1
        match_left, match_right = _hopcroft_karp(g.adjacency, g.n_vertices, g.n_facets)
        cert = _witness_certificate(g, g.adjacency, match_left, match_right,
                                    g.n_vertices, VERTICES, required, matching, ())
    else:
        larger = g.n_facets
        required = larger - smaller + 1
        transposed = g.facet_adjacency()
        match_left, match_right = _hopcroft_karp(transposed, g.n_facets, g.n_vertices)
        cert = _witness_certificate(g, transposed, match_left, match_right,
                                    g.n_facets, FACETS, required, matching, ())
    verify_certificate(g, cert)
    return cert


def decide_incident_assignment(m: IncidenceMatrix) -> MatchingCertificate:
    """Decide whether vertices map injectively to incident facets.

    ASSIGNED exactly when the incidence-mode matching covers every vertex.
    The question is posed for polytopes with at most as many vertices as
    facets; other inputs are processed anyway, with a warning recorded.
    """
    g = build_graph(m, INCIDENT)
    warnings = ()
    if g.n_vertices > g.n_facets:
        warnings = (
            f"hypothesis f0 <= f_(d-1) fails: {g.n_vertices} vertices, "
            f"{g.n_facets} facets",
        )
    match_left, match_right = _hopcroft_karp(g.adjacency, g.n_vertices, g.n_facets)
    matching = tuple((v, match_left[v]) for v in range(g.n_vertices)
                     if match_left[v] != _UNMATCHED)
    if len(matching) == g.n_vertices:
        side = BOTH if g.n_vertices == g.n_facets else VERTICES
        cert = MatchingCertificate(mode=INCIDENT, outcome=ASSIGNED,
                                   matching=matching, covered_side=side,
                                   warnings=warnings)
        verify_certificate(g, cert)
        return cert
    cert = _witness_certificate(g, g.adjacency, match_left, match_right,
                                g.n_vertices, VERTICES, 1, matching, warnings)
    verify_certificate(g, cert)
    return cert


def non_neighborhood(g: VertexFacetGraph, facets) -> tuple[int, ...]:
    """Vertices adjacent to none of the given facets.

    Only meaningful in NONINCIDENT mode, where the non-neighborhood of a
    facet set is exactly the vertex set of the intersection face.
    """
    if g.mode != NONINCIDENT:
        raise InvalidInputError("non_neighborhood is defined for NONINCIDENT graphs")
    facet_list = tuple(facets)
    if not facet_list:
        raise InvalidInputError("non_neighborhood needs at least one facet")
    for f in facet_list:
        if not 0 <= f < g.n_facets:
            raise InvalidInputError(f"facet index {f} outside 0..{g.n_facets - 1}")
    fmask = from_indices(facet_list)
    return tuple(v for v in range(g.n_vertices) if g.adjacency[v] & fmask == 0)


def verify_certificate(g: VertexFacetGraph, cert: MatchingCertificate) -> None:
    """Recount a certificate against the graph; raise on any mismatch.

    This runs on every decision, so a bug in the matching search cannot
    produce a quietly wrong verdict: matchings are checked edge by edge
    and witnesses have their neighborhood recounted from adjacency.
    """
    seen_v: set[int] = set()
    seen_f: set[int] = set()
    for v, f in cert.matching:
        if not g.is_edge(v, f):
            raise InconsistencyError(f"matched pair ({v},{f}) is not an edge")
        if v in seen_v or f in seen_f:
            raise InconsistencyError(f"matched pair ({v},{f}) reuses a node")
        seen_v.add(v)
        seen_f.add(f)
    if cert.covered_side in (VERTICES, BOTH) and len(seen_v) != g.n_vertices:
        raise InconsistencyError("claimed vertex cover leaves vertices unmatched")
    if cert.covered_side in (FACETS, BOTH) and len(seen_f) != g.n_facets:
        raise InconsistencyError("claimed facet cover leaves facets unmatched")
    if cert.outcome == ASSIGNED:
        if cert.mode == INCIDENT:
            must_cover = (VERTICES, BOTH)
        elif g.n_vertices <= g.n_facets:
            must_cover = (VERTICES, BOTH)
        else:
            must_cover = (FACETS, BOTH)
        if cert.covered_side not in must_cover:
            raise InconsistencyError(
                f"ASSIGNED certificate covers {cert.covered_side}, which does "
                "not include the side the decision requires")
        return
    if cert.hall_witness is None or cert.witness_side is None:
        raise InconsistencyError("NO_ASSIGNMENT certificate without a Hall witness")
    members = cert.hall_witness
    if len(set(members)) != len(members) or not members:
        raise InconsistencyError("Hall witness must be a nonempty set")
    if cert.mode == INCIDENT:
        if cert.witness_side != VERTICES:
            raise InconsistencyError("incident-mode witnesses live on the vertex side")
        side_size = g.n_vertices
        required = 1
    else:
        expected_side = VERTICES if g.n_vertices >= g.n_facets else FACETS
        if cert.witness_side != expected_side:
            raise InconsistencyError(
                f"witness drawn from {cert.witness_side}, expected the larger "
                f"side {expected_side}")
        side_size = g.n_vertices if cert.witness_side == VERTICES else g.n_facets
        required = side_size - min(g.n_vertices, g.n_facets) + 1
    if cert.witness_side == VERTICES:
        neighborhood = 0
        for v in members:
            neighborhood |= g.adjacency[v]
    else:
        transposed = g.facet_adjacency()
        neighborhood = 0
        for f in members:
            neighborhood |= transposed[f]
    if to_indices(neighborhood) != cert.witness_neighborhood:
        raise InconsistencyError("stored witness neighborhood does not match the graph")
    # a witness bounds every matching: max <= side_size - deficiency, so a
    # deficiency of `required` refutes the coverage the outcome denies
    deficiency = len(members) - neighborhood.bit_count()
    if deficiency < max(required, 1):
        raise InconsistencyError("Hall witness deficiency too small to refute coverage")
