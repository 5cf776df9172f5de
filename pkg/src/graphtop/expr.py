"""The small graph expression language used by the CLI.

Grammar (whitespace-insensitive; offsets in errors are byte positions):

    expr := NAME INT
          | "union(" expr "," expr ")"
          | "box(" expr "," expr ")"
          | "amalgam(" expr "@" INT "," expr "@" INT ")"
    NAME := K | C | W | P | N
"""

from dataclasses import dataclass

from .errors import ExprError
from .graphs import (
    amalgamate,
    build_named,
    cartesian_product,
    disjoint_union,
    load_edge_list,
)

_FAMILY_MINIMUM = {"K": 1, "N": 1, "P": 1, "C": 3, "W": 4}


@dataclass(frozen=True)
class Named:
    family: str
    size: int


@dataclass(frozen=True)
class FileRef:
    path: str


@dataclass(frozen=True)
class Union:
    left: object
    right: object


@dataclass(frozen=True)
class Box:
    left: object
    right: object


@dataclass(frozen=True)
class Amalgam:
    left: object
    left_vertex: int
    right: object
    right_vertex: int


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message, code="syntax-error", offset=None):
        raise ExprError(code, message, self.pos if offset is None else offset)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def read_int(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start : self.pos]), start

    def read_word(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if self.pos == start:
            self.error("expected a graph expression")
        return self.text[start : self.pos], start

    def parse_expr(self):
        word, start = self.read_word()
        if word in ("union", "box"):
            self.expect("(")
            left = self.parse_expr()
            self.expect(",")
            right = self.parse_expr()
            self.expect(")")
            return Union(left, right) if word == "union" else Box(left, right)
        if word == "amalgam":
            self.expect("(")
            left = self.parse_expr()
            self.expect("@")
            lv, _ = self.read_int()
            self.expect(",")
            right = self.parse_expr()
            self.expect("@")
            rv, _ = self.read_int()
            self.expect(")")
            return Amalgam(left, lv, right, rv)
        if word in _FAMILY_MINIMUM:
            size, _ = self.read_int()
            if size < _FAMILY_MINIMUM[word]:
                self.error(
                    f"{word} needs size >= {_FAMILY_MINIMUM[word]}, got {size}",
                    code="invalid-family-size",
                    offset=start,
                )
            return Named(word, size)
        self.error(f"unknown name {word!r}", offset=start)


def parse_graph_expr(text):
    parser = _Parser(text)
    expr = parser.parse_expr()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error("trailing input after expression")
    return expr


def expr_to_text(expr):
    """Render back to the grammar; parse(expr_to_text(e)) == e."""
    if isinstance(expr, Named):
        return f"{expr.family}{expr.size}"
    if isinstance(expr, FileRef):
        # file references come from --file, not from the grammar
        return f"<file:{expr.path}>"
    if isinstance(expr, Union):
        return f"union({expr_to_text(expr.left)},{expr_to_text(expr.right)})"
    if isinstance(expr, Box):
        return f"box({expr_to_text(expr.left)},{expr_to_text(expr.right)})"
    if isinstance(expr, Amalgam):
        return (
            f"amalgam({expr_to_text(expr.left)}@{expr.left_vertex},"
            f"{expr_to_text(expr.right)}@{expr.right_vertex})"
        )
    raise TypeError(f"not a graph expression: {expr!r}")


def build_graph(expr):
    """Elaborate an expression tree to a Graph; anchors are range-checked."""
    if isinstance(expr, Named):
        return build_named(expr.family, expr.size)
    if isinstance(expr, FileRef):
        return load_edge_list(expr.path)
    if isinstance(expr, Union):
        return disjoint_union(build_graph(expr.left), build_graph(expr.right))
    if isinstance(expr, Box):
        return cartesian_product(build_graph(expr.left), build_graph(expr.right))
    if isinstance(expr, Amalgam):
        left = build_graph(expr.left)
        right = build_graph(expr.right)
        for g, v in ((left, expr.left_vertex), (right, expr.right_vertex)):
            if not (0 <= v < g.n):
                raise ExprError(
                    "vertex-out-of-range",
                    f"anchor {v} outside 0..{g.n - 1} in {expr_to_text(expr)}",
                )
        return amalgamate(left, expr.left_vertex, right, expr.right_vertex)
    raise TypeError(f"not a graph expression: {expr!r}")
