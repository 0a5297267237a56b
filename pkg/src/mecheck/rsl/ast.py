"""AST node classes for the RSL rule language.

Every node carries a Span (1-based line/column, end exclusive on the
column).  Nodes are frozen dataclasses; structural comparison that ignores
spans is provided by structurally_equal, which the printer round-trip
tests rely on.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass


@dataclass(frozen=True)
class Span:
    line: int
    column: int
    end_line: int
    end_column: int


# Type tags name what a declaration binds: an XML element shape like
# <bean>, or one of the scalar/model kinds.
ELEMENT = "element"
FILE = "file"
CLASS = "class"
METHOD = "method"
FIELD = "field"
TEXT = "String"


@dataclass(frozen=True)
class TypeTag:
    kind: str
    element_name: str | None = None

    def label(self) -> str:
        if self.kind == ELEMENT:
            return f"<{self.element_name}>"
        return self.kind


class Exp:
    pass


class Stmt:
    pass


@dataclass(frozen=True)
class Identifier(Exp):
    name: str
    span: Span


@dataclass(frozen=True)
class Literal(Exp):
    value: str | int | float
    kind: str  # "string" | "char" | "int" | "float"
    span: Span


@dataclass(frozen=True)
class FunctionCall(Exp):
    name: str
    args: tuple[Exp, ...]
    span: Span


@dataclass(frozen=True)
class Paren(Exp):
    inner: Exp
    span: Span


@dataclass(frozen=True)
class Eq(Exp):
    lhs: FunctionCall
    rhs: Exp
    span: Span


@dataclass(frozen=True)
class Exists(Exp):
    decl_type: TypeTag
    var: str
    container: Exp
    predicate: Exp
    span: Span


@dataclass(frozen=True)
class And(Exp):
    left: Exp
    right: Exp
    span: Span


@dataclass(frozen=True)
class Or(Exp):
    left: Exp
    right: Exp
    span: Span


@dataclass(frozen=True)
class Not(Exp):
    operand: Exp
    span: Span


@dataclass(frozen=True)
class MsgStmt:
    template: str
    args: tuple[Exp, ...]
    span: Span


@dataclass(frozen=True)
class ForStmt(Stmt):
    decl_type: TypeTag
    var: str
    container: Exp
    body: tuple[Stmt, ...]
    span: Span


@dataclass(frozen=True)
class IfStmt(Stmt):
    cond: Exp
    body: tuple[Stmt, ...]
    span: Span


@dataclass(frozen=True)
class AssertStmt(Stmt):
    cond: Exp
    message: MsgStmt
    span: Span


@dataclass(frozen=True)
class DeclStmt(Stmt):
    decl_type: TypeTag
    var: str
    init: Exp
    span: Span


@dataclass(frozen=True)
class Rule:
    name: str
    body: tuple[Stmt, ...]
    span: Span


def structurally_equal(a: object, b: object) -> bool:
    """Compare two AST fragments, ignoring Span fields."""
    if type(a) is not type(b):
        return False
    if dataclasses.is_dataclass(a):
        for f in dataclasses.fields(a):
            if f.type == "Span" or isinstance(getattr(a, f.name), Span):
                continue
            if not structurally_equal(getattr(a, f.name), getattr(b, f.name)):
                return False
        return True
    if isinstance(a, tuple):
        return len(a) == len(b) and all(
            structurally_equal(x, y) for x, y in zip(a, b)
        )
    return a == b
