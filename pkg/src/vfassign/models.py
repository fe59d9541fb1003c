"""Wire models: the polytope document format and report payloads.

A polytope document is the JSON interchange form: vertex labels plus
facets as lists of vertex indices. Reports mirror what the checker
computed so the CLI can render identical text locally or from a server
response.
"""

from __future__ import annotations

from pydantic import BaseModel

from .bitsets import to_indices
from .constructions import PolytopeSpec
from .errors import InvalidInputError
from .incidence import IncidenceMatrix, make_matrix


class PolytopeDocument(BaseModel):
    name: str
    dim: int
    vertices: list[str]
    facets: list[list[int]]
    provenance: str | None = None


def document_to_matrix(doc: PolytopeDocument) -> IncidenceMatrix:
    if not doc.vertices:
        raise InvalidInputError("document has no vertices")
    return make_matrix(len(doc.vertices), doc.facets, vertex_labels=doc.vertices)


def document_to_spec(doc: PolytopeDocument) -> PolytopeSpec:
    """Validate a document against its declared dimension."""
    from .lattice import build_lattice

    matrix = document_to_matrix(doc)
    lattice = build_lattice(matrix)
    if lattice.dim != doc.dim:
        raise InvalidInputError(
            f"document declares dimension {doc.dim} "
            f"but the face structure has dimension {lattice.dim}")
    return PolytopeSpec(name=doc.name, dim=doc.dim, matrix=matrix,
                        provenance=doc.provenance or doc.name)


def spec_to_document(spec: PolytopeSpec) -> PolytopeDocument:
    matrix = spec.matrix
    facets = [list(to_indices(matrix.facet_masks[j]))
              for j in range(matrix.n_facets)]
    return PolytopeDocument(name=spec.name, dim=spec.dim,
                            vertices=list(matrix.vertex_labels),
                            facets=facets, provenance=spec.provenance)


class WitnessModel(BaseModel):
    side: str
    members: list[int]
    neighborhood: list[int]


class CertificateModel(BaseModel):
    mode: str
    outcome: str
    covered_side: str
    matching: list[tuple[int, int]]
    witness: WitnessModel | None = None
    warnings: list[str] = []


class ViolationModel(BaseModel):
    rank: int
    vertex_count: int
    containing_facets: int
    bound: int
    vertices: list[int]


class TheoremsModel(BaseModel):
    face_inequality_holds: bool
    violation: ViolationModel | None = None
    cover_condition_applies: bool
    cover_condition_failures: int
    is_simple: bool
    is_simplicial: bool


class OracleModel(BaseModel):
    status: str  # HOLDS | VIOLATED | UNAVAILABLE
    applied_to: str | None = None  # "polytope" | "transpose"
    detail: str = ""


class SelfDualModel(BaseModel):
    status: str  # FOUND | NONE | INCONCLUSIVE
    vertex_to_facet: list[tuple[int, int]] | None = None
    reason: str = ""


class CheckReport(BaseModel):
    name: str
    provenance: str
    dim: int
    f_vector: list[int]
    n_vertices: int
    n_facets: int
    vertex_labels: list[str]
    facet_labels: list[str]
    mode: str
    certificate: CertificateModel
    theorems: TheoremsModel
    oracle: OracleModel | None = None
    self_dual: SelfDualModel | None = None
    exit_code: int


class CorpusRowModel(BaseModel):
    name: str
    dim: int
    n_vertices: int
    n_facets: int
    matching: str
    face_scan: str
    oracle: str
    cover_condition: str
    simple: str
    simplicial: str
    agree: str


class CorpusReport(BaseModel):
    rows: list[CorpusRowModel]
    all_agree: bool
    exit_code: int
