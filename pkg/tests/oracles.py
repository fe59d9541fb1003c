"""Independent brute-force oracles used to cross-check the library.

Everything here recomputes results from the incidence matrix alone,
with different algorithms than the library uses: faces come from
explicit subset enumeration rather than BFS closure, matchings from
exhaustive backtracking rather than augmenting paths. Keep these slow
and obvious.
"""

from __future__ import annotations

from itertools import combinations

from vfassign.bitsets import full_mask, to_indices
from vfassign.incidence import IncidenceMatrix


def brute_face_masks(m: IncidenceMatrix) -> frozenset[int]:
    """All face vertex-masks, as intersections over every facet subset.

    The empty intersection (k = 0) contributes the full vertex set, i.e.
    the polytope itself. Exponential in the facet count: small inputs only.
    """
    faces = {full_mask(m.n_vertices)}
    for k in range(1, m.n_facets + 1):
        for subset in combinations(range(m.n_facets), k):
            mask = full_mask(m.n_vertices)
            for j in subset:
                mask &= m.facet_masks[j]
            faces.add(mask)
    return frozenset(faces)


def brute_max_matching_size(adjacency, n_left: int) -> int:
    """Exact maximum matching size by backtracking over the left side."""
    best = 0

    def extend(i: int, used: int, size: int) -> None:
        nonlocal best
        if size + (n_left - i) <= best:
            return
        if i == n_left:
            best = max(best, size)
            return
        free = adjacency[i] & ~used
        while free:
            low = free & -free
            extend(i + 1, used | low, size + 1)
            free ^= low
        extend(i + 1, used, size)

    extend(0, 0, 0)
    return best


def brute_hall_violation(adjacency, n_left: int, deficiency: int = 1):
    """Smallest-first search for S with |N(S)| <= |S| - deficiency.

    Returns the member tuple or None. Exhaustive over all subsets of the
    left side, so use on small graphs only.
    """
    for k in range(1, n_left + 1):
        for subset in combinations(range(n_left), k):
            neighborhood = 0
            for u in subset:
                neighborhood |= adjacency[u]
            if neighborhood.bit_count() <= k - deficiency:
                return subset
    return None


def brute_theorem_a(m: IncidenceMatrix) -> bool:
    """Face-count inequality over the brute-force face set.

    For a face with vertex mask S, the facets containing it are exactly
    the facets whose vertex set includes S.
    """
    bound = max(m.n_vertices, m.n_facets)
    for mask in brute_face_masks(m):
        containing = sum(1 for fm in m.facet_masks if mask & ~fm == 0)
        if mask.bit_count() + containing > bound:
            return False
    return True


def intersection_vertices(m: IncidenceMatrix, facets) -> tuple[int, ...]:
    mask = full_mask(m.n_vertices)
    for j in facets:
        mask &= m.facet_masks[j]
    return to_indices(mask)
