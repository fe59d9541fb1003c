"""Parser for construction expressions.

Grammar, with E a nested expression and integers in decimal:

    E := simplex(d) | cube(d) | cross(d) | dual(E) | pyramid(E)
       | join(E,E) | truncate(E,v) | sum(E,E,fp,fq) | stacked(d,k)

Whitespace is allowed anywhere between tokens. The returned spec carries
the normalized expression (lowercase, no spaces) as its provenance.
Connected sums glue by the sorted-order vertex bijection; pass an
explicit mapping through the library API for anything else.
"""

from __future__ import annotations

import dataclasses

from . import constructions as cons
from .constructions import PolytopeSpec
from .errors import InvalidInputError

# argument layout per grammar call: "e" a sub-expression, "d" an integer
_SIGNATURES = {
    "simplex": "d",
    "cube": "d",
    "cross": "d",
    "dual": "e",
    "pyramid": "e",
    "join": "ee",
    "truncate": "ed",
    "sum": "eedd",
    "stacked": "dd",
}


class _WrappedError(InvalidInputError):
    """An evaluation error already tagged with its sub-expression."""


def _stacked(d: int, k: int) -> PolytopeSpec:
    spec = cons.stacked(d, k)
    if k == 0:
        # keep the provenance the user wrote rather than "simplex(d)"
        name = f"stacked({d},0)"
        spec = dataclasses.replace(spec, name=name, provenance=name)
    return spec


_BUILDERS = {
    "simplex": cons.simplex,
    "cube": cons.cube,
    "cross": cons.cross_polytope,
    "dual": cons.dual_polytope,
    "pyramid": cons.pyramid,
    "join": cons.free_join,
    "truncate": cons.truncate_simple_vertex,
    "sum": cons.connected_sum,
    "stacked": _stacked,
}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str):
        raise InvalidInputError(f"parse error at position {self.pos}: {message}")

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, char: str) -> None:
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != char:
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            self.fail(f"expected {char!r}, found {found!r}")
        self.pos += 1

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail("expected an integer")
        return int(self.text[start:self.pos])

    def parse_name(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalpha()
                                             or self.text[self.pos] == "_"):
            self.pos += 1
        if self.pos == start:
            self.fail("expected a construction name")
        return self.text[start:self.pos]

    def parse_expr(self) -> tuple[PolytopeSpec, str]:
        name = self.parse_name()
        signature = _SIGNATURES.get(name)
        if signature is None:
            known = ", ".join(sorted(_SIGNATURES))
            self.fail(f"unknown construction {name!r} (one of: {known})")
        self.expect("(")
        args = []
        parts = []
        for i, kind in enumerate(signature):
            if i:
                self.expect(",")
            if kind == "d":
                value = self.parse_int()
                args.append(value)
                parts.append(str(value))
            else:
                spec, text = self.parse_expr()
                args.append(spec)
                parts.append(text)
        self.expect(")")
        normalized = f"{name}({','.join(parts)})"
        try:
            spec = _BUILDERS[name](*args)
        except _WrappedError:
            raise
        except InvalidInputError as exc:
            raise _WrappedError(f"in {normalized}: {exc}") from exc
        return spec, normalized


def parse_construction(expr: str) -> PolytopeSpec:
    """Evaluate a construction expression to a validated PolytopeSpec.

    Parse errors report the offending position; construction failures
    name the innermost sub-expression that raised them.
    """
    parser = _Parser(expr)
    spec, _ = parser.parse_expr()
    parser.skip_ws()
    if parser.pos != len(parser.text):
        parser.fail(f"unexpected trailing input {parser.text[parser.pos:]!r}")
    return spec
