"""The characterization and sufficient conditions, each checked directly.

Three independent decision paths are kept deliberately separate and are
cross-checked on every full report:

  1. the matching decision (maximum matching saturates the smaller side),
  2. the per-face inequality scan: an assignment exists if and only if
     every face satisfies f0(face) + f0(dual face) <= max(f0, f_(d-1)),
  3. the exhaustive facet-subset condition: every intersection of k
     facets has at most f0 - k vertices (requires f0 >= f_(d-1)).

The sufficient condition ("theorem B" here): if every proper face, or its
dual face, has at least as many facets as vertices, an assignment exists.
It holds automatically in dimension <= 6 and for simple or simplicial
polytopes, and those implications are enforced as tripwires too.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import full_mask, iter_indices, to_indices
from .errors import InconsistencyError, InvalidInputError
from .incidence import IncidenceMatrix
from .lattice import FaceLattice, build_lattice, dual
from .matching import ASSIGNED, decide_assignment

FOUND = "FOUND"
NONE = "NONE"
INCONCLUSIVE = "INCONCLUSIVE"

# backtracking limits for the self-duality search; beyond them the result
# is reported as inconclusive, never as absence
FACE_LIMIT = 10_000
DEFAULT_STEP_BUDGET = 2_000_000


@dataclass(frozen=True)
class TheoremAViolation:
    """A face breaking the assignment inequality, with its two counts."""

    face: int
    rank: int
    vertex_count: int          # f0 of the face
    containing_facets: int     # f0 of the dual face
    bound: int                 # max(f0, f_(d-1)) of the polytope


@dataclass(frozen=True)
class TheoremReport:
    """Per-polytope ledger of all checks plus the matching verdict."""

    theorem_a_holds: bool
    violating_face: TheoremAViolation | None
    theorem_b_applies: bool
    theorem_b_failures: tuple[int, ...]
    is_simple: bool
    is_simplicial: bool
    dim: int
    matching_verdict: str


def check_theorem_a(l: FaceLattice) -> tuple[bool, TheoremAViolation | None]:
    """Scan every face for f0(face) + f0(dual face) <= max(f0, f_(d-1)).

    Returns the minimal-rank violating face (ties broken by face index)
    so reports are stable across runs. The empty face and the polytope
    itself are included; neither can violate on its own.
    """
    bound = max(l.n_vertices, l.n_facets)
    worst: TheoremAViolation | None = None
    for i, face in enumerate(l.faces):
        vc = face.vertex_mask.bit_count()
        cf = face.facet_mask.bit_count()
        if vc + cf > bound:
            if worst is None or face.rank < worst.rank:
                worst = TheoremAViolation(face=i, rank=face.rank, vertex_count=vc,
                                          containing_facets=cf, bound=bound)
    return worst is None, worst


def check_theorem_b(l: FaceLattice) -> tuple[bool, tuple[int, ...]]:
    """Check that each face or its dual face has >= as many facets as vertices.

    Facet counts are lattice degrees: faces covered by sigma are its
    facets, faces covering sigma are the facets of its dual face. The
    empty face and the full polytope pass by convention: the empty
    polytope has 0 vertices and 0 facets, so its side of the disjunction
    holds vacuously.
    """
    failures = []
    for i, face in enumerate(l.faces):
        if i == l.empty_index or i == l.top_index:
            continue
        own_ok = len(l.lower[i]) >= face.vertex_mask.bit_count()
        dual_ok = len(l.upper[i]) >= face.facet_mask.bit_count()
        if not (own_ok or dual_ok):
            failures.append(i)
    return not failures, tuple(failures)


def check_corollary_4_2(m: IncidenceMatrix) -> bool:
    """Exhaustive facet-subset oracle: f0(intersection of k facets) <= f0 - k.

    Works on the incidence matrix alone so it is independent of the
    lattice builder. Requires f0 >= f_(d-1); apply it to the transpose
    otherwise. Every nonempty facet subset is visited, with no pruning
    beyond stopping at the first violation, so the facet count is capped.
    """
    f0 = m.n_vertices
    nf = m.n_facets
    if f0 < nf:
        raise InvalidInputError(
            f"facet-subset check needs f0 >= f_(d-1), got {f0} < {nf}; "
            "apply it to the transpose")
    if nf > 20:
        raise InvalidInputError(
            f"{nf} facets exceed the exhaustive subset limit of 20")
    fmasks = m.facet_masks

    def extend(start: int, intersection: int, size: int) -> bool:
        for j in range(start, nf):
            tightened = intersection & fmasks[j]
            if tightened.bit_count() > f0 - (size + 1):
                return False
            if not extend(j + 1, tightened, size + 1):
                return False
        return True

    return extend(0, full_mask(f0), 0)


def classify(l: FaceLattice) -> tuple[bool, bool, int]:
    """(is_simple, is_simplicial, dim).

    Simplicial: every facet has exactly d vertices. Simple: every vertex
    lies in exactly d facets, i.e. the dual is simplicial.
    """
    d = l.dim
    is_simplicial = all(mask.bit_count() == d for mask in l.matrix.facet_masks)
    is_simple = all(mask.bit_count() == d for mask in l.matrix.vertex_masks)
    return is_simple, is_simplicial, d


def full_report(m: IncidenceMatrix) -> TheoremReport:
    """Run every check and enforce the implication chain between them.

    Any violation of the chain aborts with InconsistencyError: the scan,
    the matching decision, and the classification corollaries are
    independent code paths that must agree on every input. This is the
    primary correctness tripwire of the whole package.
    """
    l = build_lattice(m)
    a_holds, violation = check_theorem_a(l)
    b_applies, b_failures = check_theorem_b(l)
    is_simple, is_simplicial, dim = classify(l)
    verdict = decide_assignment(m).outcome

    if a_holds != (verdict == ASSIGNED):
        raise InconsistencyError(
            f"face scan says {'holds' if a_holds else 'violated'} but the "
            f"matching verdict is {verdict}")
    if b_applies and not a_holds:
        raise InconsistencyError(
            "the sufficient condition applies but the face scan found a violation")
    if dim <= 6 and not b_applies:
        raise InconsistencyError(
            f"dimension {dim} <= 6 but the sufficient condition failed")
    if (is_simple or is_simplicial) and not a_holds:
        raise InconsistencyError(
            "a simple or simplicial polytope failed the face scan")

    return TheoremReport(
        theorem_a_holds=a_holds,
        violating_face=violation,
        theorem_b_applies=b_applies,
        theorem_b_failures=b_failures,
        is_simple=is_simple,
        is_simplicial=is_simplicial,
        dim=dim,
        matching_verdict=verdict,
    )


@dataclass(frozen=True)
class IsomorphismResult:
    """Outcome of a lattice isomorphism search.

    FOUND carries the witness maps; NONE is a conclusive absence after an
    exhausted search (or a failed invariant precheck); INCONCLUSIVE means
    the step budget ran out first.
    """

    status: str
    atom_map: tuple[int, ...] | None
    face_map: tuple[int, ...] | None
    steps: int


class _BudgetExceeded(Exception):
    pass


def search_lattice_isomorphism(
    l1: FaceLattice, l2: FaceLattice, max_steps: int = DEFAULT_STEP_BUDGET
) -> IsomorphismResult:
    """Backtracking search for an order-preserving face bijection.

    Candidates are vertex-to-vertex maps, pruned by facet-degree and
    pairwise common-facet counts; a completed vertex map is accepted only
    if it extends to a rank-preserving bijection of all faces that maps
    cover edges to cover edges, which is verified directly.
    """
    if (l1.n_vertices != l2.n_vertices or l1.n_facets != l2.n_facets
            or l1.f_vector != l2.f_vector or len(l1.faces) != len(l2.faces)):
        return IsomorphismResult(status=NONE, atom_map=None, face_map=None, steps=0)
    # with equal cover-edge counts, a bijection preserving covers forward
    # is automatically an order isomorphism
    if (sum(len(u) for u in l1.upper) != sum(len(u) for u in l2.upper)):
        return IsomorphismResult(status=NONE, atom_map=None, face_map=None, steps=0)
    h1 = l1.matrix.vertex_masks
    h2 = l2.matrix.vertex_masks
    degrees1 = sorted(mask.bit_count() for mask in h1)
    degrees2 = sorted(mask.bit_count() for mask in h2)
    if degrees1 != degrees2:
        return IsomorphismResult(status=NONE, atom_map=None, face_map=None, steps=0)

    n = l1.n_vertices
    image = [-1] * n
    used = [False] * n
    steps = 0

    def face_map_of(vertex_map: list[int]) -> tuple[int, ...] | None:
        mapping = []
        seen = set()
        for face in l1.faces:
            target_mask = 0
            for v in iter_indices(face.vertex_mask):
                target_mask |= 1 << vertex_map[v]
            j = l2.index_by_vertex_mask.get(target_mask)
            if j is None or j in seen:
                return None
            if l2.faces[j].rank != face.rank:
                return None
            seen.add(j)
            mapping.append(j)
        for i in range(len(l1.faces)):
            uppers = l2.upper[mapping[i]]
            for k in l1.upper[i]:
                if mapping[k] not in uppers:
                    return None
        return tuple(mapping)

    def assign(v: int) -> tuple[int, ...] | None:
        nonlocal steps
        if v == n:
            return face_map_of(image)
        deg = h1[v].bit_count()
        for w in range(n):
            if used[w] or h2[w].bit_count() != deg:
                continue
            ok = True
            for u in range(v):
                if (h1[u] & h1[v]).bit_count() != (h2[image[u]] & h2[w]).bit_count():
                    ok = False
                    break
            if not ok:
                continue
            steps += 1
            if steps > max_steps:
                raise _BudgetExceeded
            image[v] = w
            used[w] = True
            found = assign(v + 1)
            if found is not None:
                return found
            used[w] = False
            image[v] = -1
        return None

    try:
        face_map = assign(0)
    except _BudgetExceeded:
        return IsomorphismResult(status=INCONCLUSIVE, atom_map=None,
                                 face_map=None, steps=steps)
    if face_map is None:
        return IsomorphismResult(status=NONE, atom_map=None, face_map=None, steps=steps)
    return IsomorphismResult(status=FOUND, atom_map=tuple(image),
                             face_map=face_map, steps=steps)


@dataclass(frozen=True)
class AntiAutomorphismResult:
    """Outcome of the self-duality search on one lattice.

    vertex_to_facet pairs each vertex with the facet its atom maps to;
    face_map sends each face index to the index of its image, reversing
    order and rank. Both are verified before being returned.
    """

    status: str
    vertex_to_facet: tuple[tuple[int, int], ...] | None
    face_map: tuple[int, ...] | None
    steps: int
    reason: str = ""


def search_self_dual_antiautomorphism(
    l: FaceLattice, max_steps: int = DEFAULT_STEP_BUDGET
) -> AntiAutomorphismResult:
    """Search for an order- and rank-reversing bijection of the face set.

    Equivalent to an isomorphism onto the dual lattice, which is how the
    search runs. Polytopes with f0 != f_(d-1) or a non-palindromic
    f-vector cannot have one and are conclusively rejected; oversized or
    budget-exhausted searches come back INCONCLUSIVE.
    """
    if l.n_vertices != l.n_facets:
        return AntiAutomorphismResult(
            status=NONE, vertex_to_facet=None, face_map=None, steps=0,
            reason=f"f0 = {l.n_vertices} differs from f_(d-1) = {l.n_facets}")
    if l.f_vector != tuple(reversed(l.f_vector)):
        return AntiAutomorphismResult(
            status=NONE, vertex_to_facet=None, face_map=None, steps=0,
            reason="f-vector is not palindromic")
    if len(l.faces) > FACE_LIMIT:
        return AntiAutomorphismResult(
            status=INCONCLUSIVE, vertex_to_facet=None, face_map=None, steps=0,
            reason=f"{len(l.faces)} faces exceed the search limit {FACE_LIMIT}")

    iso = search_lattice_isomorphism(l, dual(l), max_steps)
    if iso.status != FOUND:
        reason = "" if iso.status == NONE else "step budget exhausted"
        return AntiAutomorphismResult(status=iso.status, vertex_to_facet=None,
                                      face_map=None, steps=iso.steps, reason=reason)

    # a dual-lattice face with vertex set S (facets of l) is the l-face
    # whose facet set is S; translate the isomorphism back through that
    dual_faces = dual(l).faces
    face_map = tuple(
        l.index_by_vertex_mask[dual_faces[j].facet_mask] for j in iso.face_map
    )
    top_rank = l.dim + 1
    for i, face in enumerate(l.faces):
        if l.faces[face_map[i]].rank != top_rank - face.rank:
            raise InconsistencyError("self-duality search returned a non-reversing map")
    for i in range(len(l.faces)):
        for k in l.upper[i]:
            if face_map[k] not in l.lower[face_map[i]]:
                raise InconsistencyError("self-duality search returned a non-reversing map")
    vertex_to_facet = tuple((v, iso.atom_map[v]) for v in range(l.n_vertices))
    return AntiAutomorphismResult(status=FOUND, vertex_to_facet=vertex_to_facet,
                                  face_map=face_map, steps=iso.steps)
