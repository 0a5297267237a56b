"""One full check: load rules, build the model, run every rule.

Reports keep their emission order (the ordinal is global across rules);
renderers sort by (rule name, file, line, ordinal).  A rule that fails at
runtime contributes a diagnostic instead of aborting the run.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path

from mecheck import builtins as builtins_mod
from mecheck import rulepack
from mecheck.model.project import (
    DEFAULT_IGNORE_GLOBS,
    ModelConfig,
    ProjectModel,
    build_model,
)
from mecheck.runtime.cache import QueryCache
from mecheck.runtime.interpreter import BugReport, Interpreter, RuntimeRuleError

TEXT = "text"
JSON = "json"


@dataclass(frozen=True)
class CheckerConfig:
    project_root: str
    rules_dir: str | None = None
    lib_patterns_file: str | None = None
    resource_roots: tuple[str, ...] = builtins_mod.DEFAULT_RESOURCE_ROOTS
    ignore_globs: tuple[str, ...] = DEFAULT_IGNORE_GLOBS
    output_format: str = TEXT
    fail_on_findings: bool = True
    use_cache: bool = True


@dataclass
class RunSummary:
    reports: list[BugReport] = field(default_factory=list)
    rules_executed: int = 0
    diagnostics: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    timings_ms: dict[str, float] = field(default_factory=dict)
    cache_stats: dict[str, int] = field(default_factory=dict)
    parse_counts: dict[str, int] = field(default_factory=dict)
    elapsed_ms: float = 0.0


def run_checker(config: CheckerConfig, model: ProjectModel | None = None) -> RunSummary:
    """Run the whole pack against the project and collect everything."""
    started = time.perf_counter()
    rules_dir = config.rules_dir or rulepack.default_rules_dir()
    rules = rulepack.load_rulepack(rules_dir)

    if model is None:
        model = build_model(
            Path(config.project_root),
            ModelConfig(ignore_globs=tuple(config.ignore_globs)),
        )

    if config.lib_patterns_file:
        patterns = builtins_mod.LibraryPatternSet.from_file(config.lib_patterns_file)
    else:
        patterns = builtins_mod.LibraryPatternSet.default()
    registry = builtins_mod.Registry(
        lib_patterns=patterns, resource_roots=tuple(config.resource_roots)
    )

    summary = RunSummary()
    cache = QueryCache() if config.use_cache else None
    sink: list[BugReport] = []
    for rule in rules:
        interp = Interpreter(model, registry, cache)
        rule_started = time.perf_counter()
        try:
            interp.run_rule(rule, sink)
        except RuntimeRuleError as exc:
            summary.diagnostics.append(str(exc))
        summary.timings_ms[rule.name] = (time.perf_counter() - rule_started) * 1000.0
        summary.rules_executed += 1

    summary.reports = sink
    summary.warnings = [f"{w.path}: {w.message}" for w in model.warnings]
    summary.cache_stats = cache.stats() if cache is not None else {}
    summary.parse_counts = {
        "xml_files": len(model.xml_parse_counts),
        "java_files": model.java_file_count,
        "member_parses": model.member_parse_events,
    }
    summary.elapsed_ms = (time.perf_counter() - started) * 1000.0
    return summary


def sorted_reports(reports: list[BugReport]) -> list[BugReport]:
    return sorted(reports, key=lambda r: (r.rule_name, r.file_path, r.line, r.ordinal))


def render_text(summary: RunSummary) -> str:
    lines = [
        f"RULE {r.rule_name} {r.file_path}:{r.line}: {r.message}"
        for r in sorted_reports(summary.reports)
    ]
    lines.append(
        f"{len(summary.reports)} findings across {summary.rules_executed} rules"
    )
    return "\n".join(lines) + "\n"


def render_json(summary: RunSummary) -> str:
    payload = {
        "reports": [
            {
                "rule": r.rule_name,
                "file": r.file_path,
                "line": r.line,
                "message": r.message,
            }
            for r in sorted_reports(summary.reports)
        ],
        "summary": {
            "reports": len(summary.reports),
            "rulesExecuted": summary.rules_executed,
            "elapsedMs": int(summary.elapsed_ms),
        },
    }
    return json.dumps(payload, indent=2) + "\n"


def render_reports(summary: RunSummary, output_format: str) -> str:
    if output_format == JSON:
        return render_json(summary)
    return render_text(summary)
