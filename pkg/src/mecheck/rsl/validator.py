"""Static validation of rule ASTs.

Checks three things a parse alone cannot: every identifier read is bound
by an enclosing for/exists/declaration, every called function is a known
built-in, and every call passes an acceptable number of arguments.
Returns diagnostics instead of raising so callers can report them all.
"""

from __future__ import annotations

from dataclasses import dataclass

from mecheck import builtins as registry_mod
from mecheck.rsl import ast

UNDECLARED_VARIABLE = "undeclared-variable"
UNKNOWN_BUILTIN = "unknown-builtin"
BUILTIN_ARITY = "builtin-arity"


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str
    line: int
    column: int


def validate_rule(rule: ast.Rule, signatures: dict | None = None) -> list[Diagnostic]:
    """Validate one rule; an empty result means the rule is runnable."""
    sigs = signatures if signatures is not None else registry_mod.builtin_signatures()
    out: list[Diagnostic] = []
    _check_stmts(rule.body, [set()], sigs, out)
    return out


def _check_stmts(
    stmts: tuple[ast.Stmt, ...],
    scopes: list[set[str]],
    sigs: dict,
    out: list[Diagnostic],
) -> None:
    # Each body list gets its own scope set; declarations extend it for
    # the statements that follow.
    for stmt in stmts:
        if isinstance(stmt, ast.ForStmt):
            _check_exp(stmt.container, scopes, sigs, out)
            _check_stmts(stmt.body, scopes + [{stmt.var}], sigs, out)
        elif isinstance(stmt, ast.IfStmt):
            _check_exp(stmt.cond, scopes, sigs, out)
            _check_stmts(stmt.body, scopes + [set()], sigs, out)
        elif isinstance(stmt, ast.AssertStmt):
            _check_exp(stmt.cond, scopes, sigs, out)
            for arg in stmt.message.args:
                _check_exp(arg, scopes, sigs, out)
        elif isinstance(stmt, ast.DeclStmt):
            _check_exp(stmt.init, scopes, sigs, out)
            scopes[-1].add(stmt.var)
        else:
            raise TypeError(f"unknown statement node: {stmt!r}")


def _check_exp(
    exp: ast.Exp, scopes: list[set[str]], sigs: dict, out: list[Diagnostic]
) -> None:
    if isinstance(exp, ast.Identifier):
        if not any(exp.name in scope for scope in scopes):
            out.append(
                Diagnostic(
                    UNDECLARED_VARIABLE,
                    f"variable '{exp.name}' is not declared in any enclosing scope",
                    exp.span.line,
                    exp.span.column,
                )
            )
    elif isinstance(exp, ast.Literal):
        pass
    elif isinstance(exp, ast.FunctionCall):
        sig = sigs.get(exp.name)
        if sig is None:
            out.append(
                Diagnostic(
                    UNKNOWN_BUILTIN,
                    f"'{exp.name}' is not a known built-in function",
                    exp.span.line,
                    exp.span.column,
                )
            )
        else:
            low, high = sig
            n = len(exp.args)
            if n < low or (high is not None and n > high):
                if high is None:
                    accepted = f"at least {low}"
                elif low == high:
                    accepted = str(low)
                else:
                    accepted = f"{low} to {high}"
                out.append(
                    Diagnostic(
                        BUILTIN_ARITY,
                        f"'{exp.name}' takes {accepted} argument(s), got {n}",
                        exp.span.line,
                        exp.span.column,
                    )
                )
        for arg in exp.args:
            _check_exp(arg, scopes, sigs, out)
    elif isinstance(exp, ast.Paren):
        _check_exp(exp.inner, scopes, sigs, out)
    elif isinstance(exp, ast.Eq):
        _check_exp(exp.lhs, scopes, sigs, out)
        _check_exp(exp.rhs, scopes, sigs, out)
    elif isinstance(exp, ast.Exists):
        _check_exp(exp.container, scopes, sigs, out)
        _check_exp(exp.predicate, scopes + [{exp.var}], sigs, out)
    elif isinstance(exp, ast.And) or isinstance(exp, ast.Or):
        _check_exp(exp.left, scopes, sigs, out)
        _check_exp(exp.right, scopes, sigs, out)
    elif isinstance(exp, ast.Not):
        _check_exp(exp.operand, scopes, sigs, out)
    else:
        raise TypeError(f"unknown expression node: {exp!r}")
