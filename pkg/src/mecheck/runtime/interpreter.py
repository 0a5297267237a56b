"""Tree-walking interpreter for rules.

Scoping model: run_rule pushes one frame around the rule body.  A for
loop pushes one frame before evaluating its container, rebinds the loop
variable per element, clears the frame's bindings between iterations
(iteration-local declarations must not leak into the next pass), and
pops after the loop.  An if statement evaluates its condition in the
current environment and pushes a frame around the body.  A declaration
binds in the innermost frame.  exists pushes a frame for its bound
variable, returns true at the first element whose predicate holds, and
pops even on that early exit.  AND and OR do not evaluate their right
side when the left side decides.

A failed assert renders the message template and emits a BugReport; the
report's position comes from the first message argument that carries a
source location.  Any runtime failure (unbound name, a built-in type or
precondition error) aborts only the current rule via RuntimeRuleError.
"""

from __future__ import annotations

from dataclasses import dataclass

from mecheck import builtins as builtins_mod
from mecheck.model.project import ProjectModel
from mecheck.rsl import ast
from mecheck.runtime import values as V
from mecheck.runtime.cache import QueryCache, canonical_key
from mecheck.runtime.env import (
    EXISTS_CLAUSE,
    FOR_LOOP,
    IF_BODY,
    RULE_BODY,
    EnvStack,
    UnboundVariable,
)


@dataclass(frozen=True)
class BugReport:
    rule_name: str
    message: str
    file_path: str
    line: int
    ordinal: int


class RuntimeRuleError(Exception):
    def __init__(self, rule_name: str, cause: str, line: int, column: int):
        super().__init__(
            f"rule {rule_name} failed at line {line}, column {column}: {cause}"
        )
        self.rule_name = rule_name
        self.cause = cause
        self.line = line
        self.column = column


@dataclass
class EvalStats:
    builtin_calls: int = 0
    exists_predicate_evals: int = 0


class Interpreter:
    """Evaluates rules against one project model.

    One instance runs one rule at a time.  Passing a shared QueryCache
    makes repeated model queries free across rules; passing None turns
    caching off without changing any result.
    """

    def __init__(
        self,
        model: ProjectModel,
        registry: builtins_mod.Registry | None = None,
        cache: QueryCache | None = None,
    ):
        self.model = model
        self.registry = registry or builtins_mod.Registry()
        self.cache = cache
        self.stats = EvalStats()
        self._rule_name = "<none>"

    # -- entry point ----------------------------------------------------------

    def run_rule(self, rule: ast.Rule, sink: list[BugReport] | None = None) -> list[BugReport]:
        """Execute one rule; reports are appended to sink (shared sinks
        keep emission ordinals global across rules)."""
        if sink is None:
            sink = []
        self._rule_name = rule.name
        env = EnvStack()
        env.push(RULE_BODY)
        try:
            for stmt in rule.body:
                self.process_stmt(stmt, env, sink)
        finally:
            env.pop()
        return sink

    # -- statements -------------------------------------------------------------

    def process_stmt(self, stmt: ast.Stmt, env: EnvStack, sink: list[BugReport]) -> None:
        if isinstance(stmt, ast.ForStmt):
            self._process_for(stmt, env, sink)
        elif isinstance(stmt, ast.IfStmt):
            self._process_if(stmt, env, sink)
        elif isinstance(stmt, ast.AssertStmt):
            self._process_assert(stmt, env, sink)
        elif isinstance(stmt, ast.DeclStmt):
            value = self.evaluate(stmt.init, env)
            env.top().bind(stmt.var, stmt.decl_type, value)
        else:
            raise RuntimeRuleError(
                self._rule_name,
                f"unknown statement node {type(stmt).__name__}",
                stmt.span.line,
                stmt.span.column,
            )

    def _process_for(self, stmt: ast.ForStmt, env: EnvStack, sink: list[BugReport]) -> None:
        frame = env.push(FOR_LOOP)
        try:
            container = self.evaluate(stmt.container, env)
            for element in self._iteration_items(container):
                frame.bind(stmt.var, stmt.decl_type, element)
                for child in stmt.body:
                    self.process_stmt(child, env, sink)
                frame.clear()
        finally:
            env.pop()

    def _process_if(self, stmt: ast.IfStmt, env: EnvStack, sink: list[BugReport]) -> None:
        cond = self._truth(self.evaluate(stmt.cond, env), stmt.cond)
        if not cond:
            return
        env.push(IF_BODY)
        try:
            for child in stmt.body:
                self.process_stmt(child, env, sink)
        finally:
            env.pop()

    def _process_assert(self, stmt: ast.AssertStmt, env: EnvStack, sink: list[BugReport]) -> None:
        cond = self._truth(self.evaluate(stmt.cond, env), stmt.cond)
        if cond:
            return
        arg_values = [self.evaluate(arg, env) for arg in stmt.message.args]
        message = self._render_message(stmt.message.template, arg_values)
        file_path, line = "", 0
        for value in arg_values:
            loc = V.location_of(value)
            if loc is not None:
                file_path, line = loc
                break
        sink.append(
            BugReport(
                rule_name=self._rule_name,
                message=message,
                file_path=file_path,
                line=line,
                ordinal=len(sink),
            )
        )

    @staticmethod
    def _render_message(template: str, arg_values: list) -> str:
        parts = template.split("%s")
        out = [parts[0]]
        for value, tail in zip(arg_values, parts[1:]):
            out.append(V.display(value))
            out.append(tail)
        return "".join(out)

    @staticmethod
    def _iteration_items(container: object) -> list:
        """for/exists containers: a list iterates as is, MISSING is
        empty, any single value is a one-element list."""
        if container is V.MISSING:
            return []
        if isinstance(container, list):
            return container
        return [container]

    # -- expressions -----------------------------------------------------------------

    def evaluate(self, exp: ast.Exp, env: EnvStack):
        if isinstance(exp, ast.Identifier):
            try:
                _, value = env.lookup(exp.name)
            except UnboundVariable:
                raise RuntimeRuleError(
                    self._rule_name,
                    f"variable '{exp.name}' is not bound",
                    exp.span.line,
                    exp.span.column,
                ) from None
            return value
        if isinstance(exp, ast.Literal):
            return exp.value
        if isinstance(exp, ast.FunctionCall):
            args = [self.evaluate(arg, env) for arg in exp.args]
            return self._call_builtin(exp, args)
        if isinstance(exp, ast.Paren):
            return self.evaluate(exp.inner, env)
        if isinstance(exp, ast.Eq):
            lhs = self.evaluate(exp.lhs, env)
            rhs = self.evaluate(exp.rhs, env)
            return V.value_eq(lhs, rhs)
        if isinstance(exp, ast.Exists):
            return self._eval_exists(exp, env)
        if isinstance(exp, ast.And):
            left = self._truth(self.evaluate(exp.left, env), exp.left)
            if not left:
                return False
            return self._truth(self.evaluate(exp.right, env), exp.right)
        if isinstance(exp, ast.Or):
            left = self._truth(self.evaluate(exp.left, env), exp.left)
            if left:
                return True
            return self._truth(self.evaluate(exp.right, env), exp.right)
        if isinstance(exp, ast.Not):
            return not self._truth(self.evaluate(exp.operand, env), exp.operand)
        raise RuntimeRuleError(
            self._rule_name,
            f"unknown expression node {type(exp).__name__}",
            exp.span.line,
            exp.span.column,
        )

    def _eval_exists(self, exp: ast.Exists, env: EnvStack) -> bool:
        frame = env.push(EXISTS_CLAUSE)
        try:
            container = self.evaluate(exp.container, env)
            for element in self._iteration_items(container):
                frame.bind(exp.var, exp.decl_type, element)
                self.stats.exists_predicate_evals += 1
                if self._truth(self.evaluate(exp.predicate, env), exp.predicate):
                    return True
                frame.clear()
            return False
        finally:
            env.pop()

    def _truth(self, value: object, exp: ast.Exp) -> bool:
        try:
            return V.is_truthy(value)
        except V.ValueTypeError as exc:
            raise RuntimeRuleError(
                self._rule_name, str(exc), exp.span.line, exp.span.column
            ) from None

    def _call_builtin(self, exp: ast.FunctionCall, args: list):
        self.stats.builtin_calls += 1
        try:
            if self.cache is not None and self.registry.is_cacheable(exp.name):
                key = canonical_key(exp.name, args)
                return self.cache.get_or_compute(
                    key, lambda: self.registry.call(exp.name, args, self.model)
                )
            return self.registry.call(exp.name, args, self.model)
        except (
            builtins_mod.UnknownBuiltinError,
            builtins_mod.BuiltinArityError,
            builtins_mod.BuiltinTypeError,
            builtins_mod.PreconditionError,
        ) as exc:
            raise RuntimeRuleError(
                self._rule_name, str(exc), exp.span.line, exp.span.column
            ) from None
