"""Built-in regression corpus: family constructions and the cross-check run.

Every member is checked three independent ways where feasible (matching
decision, face-count scan, exhaustive facet-subset oracle) and the row
records whether all paths agree.
"""

from __future__ import annotations

import csv
import io
from functools import lru_cache

from .expressions import parse_construction
from .lattice import build_lattice
from .matching import ASSIGNED, decide_assignment
from .models import CorpusReport, CorpusRowModel
from .theorems import check_corollary_4_2, check_theorem_a, check_theorem_b, classify

_BASES_3D = ("simplex(3)", "cube(3)", "cross(3)")

_ORACLE_FACET_LIMIT = 20


def corpus_expressions() -> tuple[str, ...]:
    exprs = []
    for family in ("simplex", "cube", "cross"):
        exprs.extend(f"{family}({d})" for d in range(1, 8))
    for family in ("simplex", "cube", "cross"):
        exprs.extend(f"pyramid({family}({d}))" for d in range(1, 8))
    for a in _BASES_3D:
        for b in _BASES_3D:
            exprs.append(f"join({a},{b})")
    exprs.extend(f"sum(truncate(cube(3),0),stacked(3,{k}),6,0)"
                 for k in range(1, 11))
    return tuple(exprs)


def _oracle_verdict(matrix) -> tuple[str, bool | None]:
    """Run the subset oracle on whichever orientation satisfies its
    hypothesis within the facet cap; skip when neither does."""
    f0, nf = matrix.n_vertices, matrix.n_facets
    if f0 >= nf and nf <= _ORACLE_FACET_LIMIT:
        holds = check_corollary_4_2(matrix)
    elif nf >= f0 and f0 <= _ORACLE_FACET_LIMIT:
        holds = check_corollary_4_2(matrix.transpose())
    else:
        return "-", None
    return ("ASSIGNED" if holds else "NO_ASSIGNMENT"), holds


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


@lru_cache(maxsize=1)
def corpus_rows() -> tuple[CorpusRowModel, ...]:
    rows = []
    for expr in corpus_expressions():
        spec = parse_construction(expr)
        matrix = spec.matrix
        lattice = build_lattice(matrix)
        cert = decide_assignment(matrix)
        a_holds, _ = check_theorem_a(lattice)
        b_applies, _ = check_theorem_b(lattice)
        is_simple, is_simplicial, dim = classify(lattice)
        oracle_text, oracle_holds = _oracle_verdict(matrix)

        assigned = cert.outcome == ASSIGNED
        agree = (a_holds == assigned
                 and (oracle_holds is None or oracle_holds == a_holds)
                 and (not b_applies or a_holds)
                 and (dim > 6 or b_applies)
                 and (not (is_simple or is_simplicial) or a_holds))
        rows.append(CorpusRowModel(
            name=spec.name,
            dim=dim,
            n_vertices=matrix.n_vertices,
            n_facets=matrix.n_facets,
            matching=cert.outcome,
            face_scan="ASSIGNED" if a_holds else "NO_ASSIGNMENT",
            oracle=oracle_text,
            cover_condition=_yes(b_applies),
            simple=_yes(is_simple),
            simplicial=_yes(is_simplicial),
            agree=_yes(agree),
        ))
    return tuple(rows)


_COLUMNS = ("name", "dim", "vertices", "facets", "matching", "face_scan",
            "oracle", "cover_cond", "simple", "simplicial", "agree")


def _row_fields(row: CorpusRowModel) -> tuple[str, ...]:
    return (row.name, str(row.dim), str(row.n_vertices), str(row.n_facets),
            row.matching, row.face_scan, row.oracle, row.cover_condition,
            row.simple, row.simplicial, row.agree)


def render_corpus(rows, as_csv: bool = False) -> str:
    if as_csv:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(_COLUMNS)
        for row in rows:
            writer.writerow(_row_fields(row))
        return buffer.getvalue()
    table = [_COLUMNS] + [_row_fields(r) for r in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(_COLUMNS))]
    out = []
    for line in table:
        out.append("  ".join(field.ljust(w) for field, w in zip(line, widths)).rstrip())
    return "\n".join(out) + "\n"


def run_corpus() -> CorpusReport:
    rows = list(corpus_rows())
    all_agree = all(row.agree == "yes" for row in rows)
    return CorpusReport(rows=rows, all_agree=all_agree,
                        exit_code=0 if all_agree else 3)
