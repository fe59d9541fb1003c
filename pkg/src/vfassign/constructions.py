"""Incidence matrices for the polytope families used throughout the package.

Standard families (simplex, cube, cross-polytope) plus the composite
operations: free join, pyramid, simple-vertex truncation, simplex-facet
connected sum, and stacked polytopes. Every constructor builds the face
lattice of its output, so an invalid composition fails loudly at
construction time instead of poisoning later checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import full_mask, iter_indices, to_indices
from .errors import InconsistencyError, InvalidInputError
from .incidence import IncidenceMatrix, make_matrix
from .lattice import FaceLattice, build_lattice

# Practical size guards. Exponential families stop well before the bitset
# representation would; the limits keep lattice validation at desk scale.
MAX_SIMPLEX_DIM = 12
MAX_POWER_DIM = 8


@dataclass(frozen=True)
class PolytopeSpec:
    """A named polytope: its incidence matrix plus how it was made.

    provenance is a construction expression in the CLI grammar, e.g.
    "join(cube(3),cross(3))"; for composites built with a non-default
    vertex gluing it is descriptive rather than re-parseable.
    """

    name: str
    dim: int
    matrix: IncidenceMatrix
    provenance: str

    def lattice(self) -> FaceLattice:
        return build_lattice(self.matrix)


def _spec(name: str, matrix: IncidenceMatrix, provenance: str | None = None) -> PolytopeSpec:
    lat = build_lattice(matrix)
    return PolytopeSpec(name=name, dim=lat.dim, matrix=matrix,
                        provenance=provenance if provenance is not None else name)


def simplex(d: int) -> PolytopeSpec:
    """The d-simplex: d+1 vertices, d+1 facets, vertex i on facet j iff i != j."""
    if d < 1:
        raise InvalidInputError(f"simplex dimension must be >= 1, got {d}")
    if d > MAX_SIMPLEX_DIM:
        raise InvalidInputError(f"simplex dimension {d} above the practical limit {MAX_SIMPLEX_DIM}")
    n = d + 1
    facets = [[i for i in range(n) if i != j] for j in range(n)]
    return _spec(f"simplex({d})", make_matrix(n, facets))


def cube(d: int) -> PolytopeSpec:
    """The d-cube: 2^d sign-vector vertices, 2d coordinate facets."""
    if d < 1:
        raise InvalidInputError(f"cube dimension must be >= 1, got {d}")
    if d > MAX_POWER_DIM:
        raise InvalidInputError(f"cube dimension {d} above the practical limit {MAX_POWER_DIM}")
    n = 1 << d
    vertex_labels = ["".join("+" if v >> i & 1 else "-" for i in range(d)) for v in range(n)]
    facets = []
    facet_labels = []
    for i in range(d):
        for s in (0, 1):
            facets.append([v for v in range(n) if (v >> i & 1) == s])
            facet_labels.append(f"x{i}={'-+'[s]}")
    return _spec(f"cube({d})", make_matrix(n, facets, vertex_labels, facet_labels))


def cross_polytope(d: int) -> PolytopeSpec:
    """The d-cross-polytope: 2d vertices +-e_i, 2^d sign-vector facets.

    Exactly the transpose of the cube's incidence, so dual(cube(d)) and
    cross_polytope(d) agree up to relabeling.
    """
    if d < 1:
        raise InvalidInputError(f"cross-polytope dimension must be >= 1, got {d}")
    if d > MAX_POWER_DIM:
        raise InvalidInputError(
            f"cross-polytope dimension {d} above the practical limit {MAX_POWER_DIM}")
    n = 2 * d
    vertex_labels = [f"{'-+'[s]}e{i}" for i in range(d) for s in (0, 1)]
    nf = 1 << d
    facets = [[2 * i + (sigma >> i & 1) for i in range(d)] for sigma in range(nf)]
    facet_labels = ["".join("+" if sigma >> i & 1 else "-" for i in range(d))
                    for sigma in range(nf)]
    return _spec(f"cross({d})", make_matrix(n, facets, vertex_labels, facet_labels))


def dual_polytope(p: PolytopeSpec) -> PolytopeSpec:
    """The combinatorial dual: vertices and facets swap roles (transpose)."""
    return _spec(f"dual({p.name})", p.matrix.transpose())


def free_join(p1: PolytopeSpec, p2: PolytopeSpec) -> PolytopeSpec:
    """The free join: hulls of the operands placed in skew subspaces.

    Vertices are the disjoint union; every facet is either all of p1 plus
    a facet of p2, or a facet of p1 plus all of p2. The result has
    dimension dim(p1) + dim(p2) + 1, and both the vertex count and the
    facet count are the sums of the operands'.
    """
    m1, m2 = p1.matrix, p2.matrix
    n1, n2 = m1.n_vertices, m2.n_vertices
    vertex_labels = [f"{p1.name}.{lbl}" for lbl in m1.vertex_labels]
    vertex_labels += [f"{p2.name}.{lbl}" for lbl in m2.vertex_labels]
    full1 = full_mask(n1)
    full2_shifted = full_mask(n2) << n1
    facets = []
    facet_labels = []
    for j in range(m2.n_facets):
        facets.append(to_indices(full1 | (m2.facet_masks[j] << n1)))
        facet_labels.append(f"{p2.name}.{m2.facet_labels[j]}")
    for j in range(m1.n_facets):
        facets.append(to_indices(m1.facet_masks[j] | full2_shifted))
        facet_labels.append(f"{p1.name}.{m1.facet_labels[j]}")
    spec = _spec(f"join({p1.name},{p2.name})",
                 make_matrix(n1 + n2, facets, vertex_labels, facet_labels))
    if spec.dim != p1.dim + p2.dim + 1:
        raise InconsistencyError(
            f"free join of dimensions {p1.dim} and {p2.dim} built a "
            f"{spec.dim}-dimensional lattice")
    return spec


def pyramid(p: PolytopeSpec) -> PolytopeSpec:
    """The pyramid over p: one apex vertex, the old polytope as base facet."""
    m = p.matrix
    apex = m.n_vertices
    vertex_labels = list(m.vertex_labels) + ["apex"]
    facets = [list(range(m.n_vertices))]
    facet_labels = ["base"]
    for j in range(m.n_facets):
        facets.append(list(m.facet_vertices(j)) + [apex])
        facet_labels.append(m.facet_labels[j])
    spec = _spec(f"pyramid({p.name})",
                 make_matrix(apex + 1, facets, vertex_labels, facet_labels))
    if spec.dim != p.dim + 1:
        raise InconsistencyError(
            f"pyramid over dimension {p.dim} built a {spec.dim}-dimensional lattice")
    return spec


def truncate_simple_vertex(p: PolytopeSpec, v: int) -> PolytopeSpec:
    """Cut off a simple vertex, creating one new facet with d new vertices.

    The vertex must lie in exactly d facets, and each d-1 of those facets
    must intersect in an edge at the vertex. Each new vertex sits on one
    of those edges and inherits the edge's d-1 facets; the cut facet holds
    exactly the d new vertices.
    """
    m = p.matrix
    d = p.dim
    if not 0 <= v < m.n_vertices:
        raise InvalidInputError(f"vertex index {v} outside 0..{m.n_vertices - 1}")
    at_v = to_indices(m.vertex_masks[v])
    if len(at_v) != d:
        raise InvalidInputError(
            f"vertex {v} of {p.name} lies in {len(at_v)} facets, not {d}: not simple")
    # one new vertex per omitted facet; the remaining d-1 facets must cut
    # out an edge {v, w} lying in exactly those facets
    new_vertex_facets = []
    new_vertex_labels = []
    for omitted in at_v:
        edge = full_mask(m.n_vertices)
        for g in at_v:
            if g != omitted:
                edge &= m.facet_masks[g]
        if edge.bit_count() != 2 or not edge >> v & 1:
            raise InvalidInputError(
                f"facets at vertex {v} of {p.name} do not meet in an edge "
                f"when facet {omitted} is dropped")
        w = (edge & ~(1 << v)).bit_length() - 1
        expected = m.vertex_masks[v] & ~(1 << omitted)
        if m.vertex_masks[v] & m.vertex_masks[w] != expected:
            raise InvalidInputError(
                f"edge {{{v},{w}}} of {p.name} does not lie in exactly the "
                f"{d - 1} facets at vertex {v} other than facet {omitted}")
        new_vertex_facets.append(expected)
        new_vertex_labels.append(f"{m.vertex_labels[v]}/{m.facet_labels[omitted]}")

    def renumber(old: int) -> int:
        return old if old < v else old - 1

    survivors = [u for u in range(m.n_vertices) if u != v]
    n_new = m.n_vertices - 1 + d
    vertex_labels = [m.vertex_labels[u] for u in survivors] + new_vertex_labels
    facets = []
    for j in range(m.n_facets):
        verts = [renumber(u) for u in m.facet_vertices(j) if u != v]
        for k, fm in enumerate(new_vertex_facets):
            if fm >> j & 1:
                verts.append(m.n_vertices - 1 + k)
        facets.append(sorted(verts))
    facets.append(list(range(m.n_vertices - 1, n_new)))
    facet_labels = list(m.facet_labels) + [f"cut({m.vertex_labels[v]})"]
    spec = _spec(f"truncate({p.name},{v})",
                 make_matrix(n_new, facets, vertex_labels, facet_labels))
    if spec.dim != d:
        raise InvalidInputError(
            f"truncating vertex {v} of {p.name} did not preserve dimension")
    return spec


def connected_sum(
    p: PolytopeSpec,
    q: PolytopeSpec,
    f_p: int,
    f_q: int,
    phi: dict[int, int] | None = None,
    name: str | None = None,
) -> PolytopeSpec:
    """Glue q onto p along a shared simplex facet, removing that facet.

    Both designated facets must have exactly d vertices (d-simplices); phi
    maps the vertices of p's facet onto the vertices of q's facet and
    defaults to sorted order. Gluing along non-simplex facets is rejected:
    combinatorial validity is only guaranteed for simplices, and the built
    lattice is re-validated regardless.
    """
    d = p.dim
    if q.dim != d:
        raise InvalidInputError(
            f"connected sum needs equal dimensions, got {p.dim} and {q.dim}")
    if d < 2:
        raise InvalidInputError("connected sums need dimension >= 2")
    mp, mq = p.matrix, q.matrix
    if not 0 <= f_p < mp.n_facets:
        raise InvalidInputError(f"facet index {f_p} outside 0..{mp.n_facets - 1}")
    if not 0 <= f_q < mq.n_facets:
        raise InvalidInputError(f"facet index {f_q} outside 0..{mq.n_facets - 1}")
    p_verts = mp.facet_vertices(f_p)
    q_verts = mq.facet_vertices(f_q)
    if len(p_verts) != d:
        raise InvalidInputError(
            f"facet {f_p} of {p.name} has {len(p_verts)} vertices; "
            f"gluing needs a simplex facet with exactly {d}")
    if len(q_verts) != d:
        raise InvalidInputError(
            f"facet {f_q} of {q.name} has {len(q_verts)} vertices; "
            f"gluing needs a simplex facet with exactly {d}")
    if phi is None:
        phi = dict(zip(p_verts, q_verts))
    if sorted(phi) != list(p_verts) or sorted(phi.values()) != list(q_verts):
        raise InvalidInputError(
            f"gluing map must be a bijection from facet {f_p} of {p.name} "
            f"onto facet {f_q} of {q.name}")
    into_p = {w: u for u, w in phi.items()}
    next_id = mp.n_vertices
    for w in range(mq.n_vertices):
        if w not in into_p:
            into_p[w] = next_id
            next_id += 1
    vertex_labels = list(mp.vertex_labels)
    vertex_labels += [f"{q.name}.{mq.vertex_labels[w]}"
                      for w in range(mq.n_vertices) if w not in set(q_verts)]
    facets = []
    facet_labels = []
    for j in range(mp.n_facets):
        if j != f_p:
            facets.append(list(mp.facet_vertices(j)))
            facet_labels.append(mp.facet_labels[j])
    for j in range(mq.n_facets):
        if j != f_q:
            facets.append(sorted(into_p[w] for w in mq.facet_vertices(j)))
            facet_labels.append(f"{q.name}.{mq.facet_labels[j]}")
    if name is None:
        name = f"sum({p.name},{q.name},{f_p},{f_q})"
    spec = _spec(name, make_matrix(next_id, facets, vertex_labels, facet_labels))
    if spec.dim != d:
        raise InvalidInputError(
            f"gluing {q.name} onto {p.name} did not produce a {d}-dimensional polytope")
    return spec


def stacked(d: int, k: int) -> PolytopeSpec:
    """A d-simplex with k further simplices glued on, one per step.

    Each step glues onto the lexicographically smallest facet created in
    the previous step (first step: the lexicographically smallest facet
    of the simplex), so the result is deterministic.
    """
    if d < 1:
        raise InvalidInputError(f"stacked dimension must be >= 1, got {d}")
    if k < 0:
        raise InvalidInputError(f"stacking count must be >= 0, got {k}")
    if k > 0 and d < 2:
        raise InvalidInputError("stacking needs dimension >= 2")
    current = simplex(d)
    if k == 0:
        return current
    newest = range(current.matrix.n_facets)
    for step in range(1, k + 1):
        target = min(newest, key=lambda j: current.matrix.facet_vertices(j))
        block = simplex(d)
        # glue the fresh simplex by its lexicographically smallest facet,
        # which is the one omitting the last vertex
        current = connected_sum(current, block, target, d,
                                name=f"stacked({d},{step})")
        newest = range(current.matrix.n_facets - d, current.matrix.n_facets)
    return current
