"""Face lattices built by closing facet vertex-sets under intersection.

Every face of a polytope is the intersection of the facets containing it,
so the face set is exactly: the full vertex set, plus the closure of the
facet vertex-sets under pairwise intersection. Each face is stored as its
Galois pair (vertex set, set of facets containing it). Ranks come from
longest chains, not geometry; the builder then insists on the three
structural properties a polytope lattice must have (graded, diamond
property, Euler relation) and rejects anything else.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .bitsets import full_mask, is_subset, iter_indices, to_indices
from .errors import InvalidInputError
from .incidence import IncidenceMatrix, validate_matrix


@dataclass(frozen=True)
class Face:
    """A face as its Galois pair plus its rank in the lattice.

    vertex_mask holds the vertices of the face, facet_mask the facets
    containing it. Rank 0 is the empty face; dimension = rank - 1.
    """

    vertex_mask: int
    facet_mask: int
    rank: int

    @property
    def vertex_set(self) -> tuple[int, ...]:
        return to_indices(self.vertex_mask)

    @property
    def facet_set(self) -> tuple[int, ...]:
        return to_indices(self.facet_mask)


@dataclass(frozen=True, eq=False)
class FaceLattice:
    """The full face lattice of one polytope.

    faces are indexed in a fixed order (increasing vertex count, then
    vertex bitset value), so face indices are reproducible across runs.
    upper[i] / lower[i] list the faces covering / covered by face i.
    """

    matrix: IncidenceMatrix
    faces: tuple[Face, ...]
    upper: tuple[tuple[int, ...], ...]
    lower: tuple[tuple[int, ...], ...]
    dim: int
    f_vector: tuple[int, ...]
    empty_index: int
    top_index: int
    index_by_vertex_mask: dict[int, int] = field(repr=False)
    index_by_facet_mask: dict[int, int] = field(repr=False)

    @property
    def n_vertices(self) -> int:
        return self.matrix.n_vertices

    @property
    def n_facets(self) -> int:
        return self.matrix.n_facets

    def face_of_vertex_set(self, vertex_mask: int) -> int:
        """Index of the face with exactly this vertex set, if it is a face."""
        try:
            return self.index_by_vertex_mask[vertex_mask]
        except KeyError:
            raise InvalidInputError(
                f"vertex set {to_indices(vertex_mask)} is not a face"
            ) from None

    def check_index(self, face: int) -> None:
        if not 0 <= face < len(self.faces):
            raise InvalidInputError(
                f"face index {face} outside 0..{len(self.faces) - 1}"
            )


def _closure_masks(m: IncidenceMatrix) -> list[int]:
    """All intersections of facet vertex-sets, plus the full vertex set."""
    seen = {full_mask(m.n_vertices)}
    seen.update(m.facet_masks)
    frontier = list(m.facet_masks)
    while frontier:
        fresh = []
        for s in frontier:
            for fm in m.facet_masks:
                t = s & fm
                if t not in seen:
                    seen.add(t)
                    fresh.append(t)
        frontier = fresh
    return sorted(seen, key=lambda s: (s.bit_count(), s))


def _reject(reason: str) -> "InvalidInputError":
    return InvalidInputError(f"not a polytope lattice: {reason}")


@lru_cache(maxsize=128)
def build_lattice(m: IncidenceMatrix) -> FaceLattice:
    """Build and validate the face lattice of an incidence matrix.

    Raises InvalidInputError for matrices that fail the basic incidence
    checks, and for matrices whose intersection closure is not a graded
    Eulerian lattice with the diamond property, i.e. not a polytope.
    Results are cached; matrices are immutable, so sharing is safe.
    """
    validate_matrix(m)
    masks = _closure_masks(m)
    if masks[0] != 0:
        raise _reject("the intersection of all facets is nonempty")

    all_facets = full_mask(m.n_facets)
    facet_mask_of = []
    for s in masks:
        fm = all_facets
        for v in iter_indices(s):
            fm &= m.vertex_masks[v]
        facet_mask_of.append(fm)
    index_by_vmask = {s: i for i, s in enumerate(masks)}
    index_by_fmask: dict[int, int] = {}
    for i, fm in enumerate(facet_mask_of):
        if fm in index_by_fmask:
            raise _reject("two distinct faces lie in the same facets")
        index_by_fmask[fm] = i

    n_faces = len(masks)
    top = n_faces - 1
    upper: list[list[int]] = [[] for _ in range(n_faces)]
    lower: list[list[int]] = [[] for _ in range(n_faces)]
    all_vertices = full_mask(m.n_vertices)
    for i, s in enumerate(masks):
        if i == top:
            continue
        fm = facet_mask_of[i]
        # cl(s + {v}) has facet set fm & vertex_masks[v]; the minimal
        # candidates over all v outside s are exactly the covers of s
        candidates = {index_by_fmask[fm & m.vertex_masks[v]]
                      for v in iter_indices(all_vertices & ~s)}
        ordered = sorted(candidates, key=lambda j: (masks[j].bit_count(), masks[j]))
        covers = []
        for j in ordered:
            if not any(is_subset(masks[k], masks[j]) for k in covers):
                covers.append(j)
        for j in covers:
            upper[i].append(j)
            lower[j].append(i)

    rank = [0] * n_faces
    for i in range(n_faces):
        for j in upper[i]:
            if rank[i] + 1 > rank[j]:
                rank[j] = rank[i] + 1
    dim = rank[top] - 1
    if dim < 1:
        raise _reject(f"lattice height {rank[top]} means dimension {dim}, below 1")

    for i in range(n_faces):
        for j in upper[i]:
            if rank[j] != rank[i] + 1:
                raise _reject(
                    f"not graded: a rank-{rank[i]} face is covered by a rank-{rank[j]} face"
                )

    atoms = [i for i in range(n_faces) if rank[i] == 1]
    for i in atoms:
        if masks[i].bit_count() != 1:
            raise _reject(
                f"vertex set {to_indices(masks[i])} is a minimal face but not a single vertex"
            )
    if len(atoms) != m.n_vertices:
        raise _reject(
            f"{len(atoms)} atoms for {m.n_vertices} vertices"
        )
    coatoms = set(lower[top])
    for j, fmask in enumerate(m.facet_masks):
        if index_by_vmask[fmask] not in coatoms:
            raise _reject(f"facet {j} is not a maximal proper face")
    if len(coatoms) != m.n_facets:
        raise _reject(f"{len(coatoms)} coatoms for {m.n_facets} facets")

    # diamond property: every comparable pair two ranks apart must have
    # exactly two faces strictly between
    interval_width: dict[tuple[int, int], int] = {}
    for mid in range(n_faces):
        for a in lower[mid]:
            for b in upper[mid]:
                key = (a, b)
                interval_width[key] = interval_width.get(key, 0) + 1
    for (a, b), width in interval_width.items():
        if width != 2:
            raise _reject(
                f"diamond property fails: {width} faces strictly between "
                f"ranks {rank[a]} and {rank[b]}"
            )

    f_vector = [0] * dim
    for i in range(n_faces):
        if 1 <= rank[i] <= dim:
            f_vector[rank[i] - 1] += 1
    euler = sum(f_vector[i] if i % 2 == 0 else -f_vector[i] for i in range(dim))
    if euler != 1 - (-1) ** dim:
        raise _reject(
            f"Euler relation fails: alternating f-vector sum {euler} "
            f"for dimension {dim}"
        )

    faces = tuple(
        Face(vertex_mask=masks[i], facet_mask=facet_mask_of[i], rank=rank[i])
        for i in range(n_faces)
    )
    return FaceLattice(
        matrix=m,
        faces=faces,
        upper=tuple(tuple(sorted(u)) for u in upper),
        lower=tuple(tuple(sorted(lo)) for lo in lower),
        dim=dim,
        f_vector=tuple(f_vector),
        empty_index=0,
        top_index=top,
        index_by_vertex_mask=index_by_vmask,
        index_by_facet_mask=index_by_fmask,
    )


def dual(l: FaceLattice) -> FaceLattice:
    """The face lattice with inverted order: rebuilt from the transpose.

    Atoms of the result are the facets of the input (same indices), and
    dual(dual(l)) is index-identical to l because transposition is an
    involution on matrices.
    """
    return build_lattice(l.matrix.transpose())


def face_vertex_count(l: FaceLattice, face: int) -> int:
    """Number of vertices of the face."""
    l.check_index(face)
    return l.faces[face].vertex_mask.bit_count()


def dual_face_vertex_count(l: FaceLattice, face: int) -> int:
    """Number of facets containing the face: the vertex count of its dual face."""
    l.check_index(face)
    return l.faces[face].facet_mask.bit_count()


def face_facet_count(l: FaceLattice, face: int) -> int:
    """Number of facets of the face itself: the faces it covers.

    Undefined for the empty face, which has no facets.
    """
    l.check_index(face)
    if face == l.empty_index:
        raise InvalidInputError("the empty face has no facets")
    return len(l.lower[face])


def dual_face_facet_count(l: FaceLattice, face: int) -> int:
    """Number of facets of the dual face: the faces covering this one.

    Undefined for the full polytope, whose dual face is empty.
    """
    l.check_index(face)
    if face == l.top_index:
        raise InvalidInputError("the full polytope has no dual facets")
    return len(l.upper[face])
