"""Orchestration: one entry point that checks a polytope and renders the
result as a deterministic text report.

Both the CLI and the HTTP service call run_check, so a remote check and
a local one produce byte-identical reports for the same input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import PolytopeSpec
from .dotexport import export_dot
from .errors import InconsistencyError
from .expressions import parse_construction
from .incidence import IncidenceMatrix
from .lattice import build_lattice
from .matching import (ASSIGNED, INCIDENT, NONINCIDENT, FACETS,
                       build_graph, decide_assignment,
                       decide_incident_assignment)
from .models import (CertificateModel, CheckReport, OracleModel,
                     PolytopeDocument, SelfDualModel, TheoremsModel,
                     ViolationModel, WitnessModel, document_to_spec)
from .theorems import check_corollary_4_2, full_report, search_self_dual_antiautomorphism

_ORACLE_FACET_LIMIT = 20


@dataclass(frozen=True)
class CheckResult:
    report: CheckReport
    text: str
    exit_code: int
    dot: str | None


def _run_oracle(matrix: IncidenceMatrix, scan_holds: bool) -> OracleModel:
    f0, nf = matrix.n_vertices, matrix.n_facets
    if f0 >= nf and nf <= _ORACLE_FACET_LIMIT:
        holds = check_corollary_4_2(matrix)
        applied = "polytope"
        detail = f"all nonempty subsets of the {nf} facets"
    elif nf >= f0 and f0 <= _ORACLE_FACET_LIMIT:
        holds = check_corollary_4_2(matrix.transpose())
        applied = "transpose"
        detail = f"all nonempty subsets of the {f0} vertices, on the transpose"
    else:
        return OracleModel(
            status="UNAVAILABLE", applied_to=None,
            detail=f"smaller side has {min(f0, nf)} elements, "
                   f"above the exhaustive limit of {_ORACLE_FACET_LIMIT}")
    if holds != scan_holds:
        raise InconsistencyError(
            f"facet-subset oracle says {'holds' if holds else 'violated'} "
            f"but the face-count scan says {'holds' if scan_holds else 'violated'}")
    return OracleModel(status="HOLDS" if holds else "VIOLATED",
                       applied_to=applied, detail=detail)


def run_check(source: str | PolytopeDocument, *, incident: bool = False,
              oracle: bool = False, selfdual: bool = False,
              with_dot: bool = False) -> CheckResult:
    """Check one polytope, given as a construction expression or document."""
    if isinstance(source, PolytopeDocument):
        spec = document_to_spec(source)
    else:
        spec = parse_construction(source)
    return run_check_spec(spec, incident=incident, oracle=oracle,
                          selfdual=selfdual, with_dot=with_dot)


def run_check_spec(spec: PolytopeSpec, *, incident: bool = False,
                   oracle: bool = False, selfdual: bool = False,
                   with_dot: bool = False) -> CheckResult:
    matrix = spec.matrix
    lattice = build_lattice(matrix)
    theorems = full_report(matrix)

    mode = INCIDENT if incident else NONINCIDENT
    cert = decide_incident_assignment(matrix) if incident else decide_assignment(matrix)

    witness = None
    if cert.hall_witness is not None:
        witness = WitnessModel(side=cert.witness_side,
                               members=list(cert.hall_witness),
                               neighborhood=list(cert.witness_neighborhood))

    violation = None
    if theorems.violating_face is not None:
        v = theorems.violating_face
        violation = ViolationModel(
            rank=v.rank, vertex_count=v.vertex_count,
            containing_facets=v.containing_facets, bound=v.bound,
            vertices=list(lattice.faces[v.face].vertex_set))

    oracle_model = _run_oracle(matrix, theorems.theorem_a_holds) if oracle else None

    selfdual_model = None
    if selfdual:
        result = search_self_dual_antiautomorphism(lattice)
        pairs = None if result.vertex_to_facet is None else list(result.vertex_to_facet)
        selfdual_model = SelfDualModel(status=result.status,
                                       vertex_to_facet=pairs,
                                       reason=result.reason)

    report = CheckReport(
        name=spec.name,
        provenance=spec.provenance,
        dim=lattice.dim,
        f_vector=list(lattice.f_vector),
        n_vertices=matrix.n_vertices,
        n_facets=matrix.n_facets,
        vertex_labels=list(matrix.vertex_labels),
        facet_labels=list(matrix.facet_labels),
        mode=mode,
        certificate=CertificateModel(
            mode=cert.mode, outcome=cert.outcome,
            covered_side=cert.covered_side,
            matching=list(cert.matching), witness=witness,
            warnings=list(cert.warnings)),
        theorems=TheoremsModel(
            face_inequality_holds=theorems.theorem_a_holds,
            violation=violation,
            cover_condition_applies=theorems.theorem_b_applies,
            cover_condition_failures=len(theorems.theorem_b_failures),
            is_simple=theorems.is_simple,
            is_simplicial=theorems.is_simplicial),
        oracle=oracle_model,
        self_dual=selfdual_model,
        exit_code=0 if cert.outcome == ASSIGNED else 1,
    )

    dot = None
    if with_dot:
        dot = export_dot(build_graph(matrix, mode), cert.matching,
                         cert.hall_witness, cert.witness_side)
    return CheckResult(report=report, text=render_report(report),
                       exit_code=report.exit_code, dot=dot)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def render_report(r: CheckReport) -> str:
    """Deterministic plain-text rendering of a check report."""

    def vname(i: int) -> str:
        return f"v{i}({r.vertex_labels[i]})"

    def fname(j: int) -> str:
        return f"F{j}({r.facet_labels[j]})"

    lines = [f"name: {r.name}"]
    if r.provenance != r.name:
        lines.append(f"provenance: {r.provenance}")
    lines.append(f"dimension: {r.dim}")
    lines.append("f-vector: (" + ", ".join(str(x) for x in r.f_vector) + ")")
    lines.append(f"vertices: {r.n_vertices}")
    lines.append(f"facets: {r.n_facets}")
    lines.append(f"simple: {_yes(r.theorems.is_simple)}")
    lines.append(f"simplicial: {_yes(r.theorems.is_simplicial)}")
    lines.append(f"mode: {r.mode}")
    for warning in r.certificate.warnings:
        lines.append(f"warning: {warning}")
    lines.append(f"verdict: {r.certificate.outcome}")

    cert = r.certificate
    lines.append(f"matching ({len(cert.matching)} pairs, covers {cert.covered_side}):")
    for v, f in cert.matching:
        lines.append(f"  {vname(v)} -> {fname(f)}")
    if cert.witness is not None:
        w = cert.witness
        member_name, nbr_name = (vname, fname) if w.side != FACETS else (fname, vname)
        deficiency = len(w.members) - len(w.neighborhood)
        lines.append(f"witness ({w.side} side, {len(w.members)} members, "
                     f"{len(w.neighborhood)} joint neighbors, deficiency {deficiency}):")
        lines.append("  members: " + " ".join(member_name(i) for i in w.members))
        lines.append("  neighborhood: " + " ".join(nbr_name(i) for i in w.neighborhood))

    t = r.theorems
    if t.face_inequality_holds:
        lines.append("face-count scan: every face satisfies "
                     f"f0(F) + facets(F) <= {max(r.n_vertices, r.n_facets)}")
    else:
        v = t.violation
        lines.append("face-count scan: VIOLATED")
        lines.append(f"  violating face: rank {v.rank}, {v.vertex_count} vertices, "
                     f"{v.containing_facets} containing facets; "
                     f"{v.vertex_count} + {v.containing_facets} = "
                     f"{v.vertex_count + v.containing_facets} > {v.bound}")
        lines.append("  face vertices: " + " ".join(vname(i) for i in v.vertices))
    if t.cover_condition_applies:
        lines.append("cover condition: holds for every proper face "
                     "(sufficient for an assignment)")
    else:
        lines.append(f"cover condition: not conclusive "
                     f"(fails on {t.cover_condition_failures} face(s))")

    if r.oracle is not None:
        o = r.oracle
        if o.status == "UNAVAILABLE":
            lines.append(f"subset oracle: UNAVAILABLE ({o.detail})")
        else:
            lines.append(f"subset oracle: {o.status} ({o.detail})")
    if r.self_dual is not None:
        s = r.self_dual
        if s.status == "FOUND":
            lines.append("self-duality: FOUND")
            for v, f in s.vertex_to_facet:
                lines.append(f"  {vname(v)} -> {fname(f)}")
        else:
            suffix = f" ({s.reason})" if s.reason else ""
            lines.append(f"self-duality: {s.status}{suffix}")

    lines.append(f"exit code: {r.exit_code}")
    return "\n".join(lines) + "\n"
