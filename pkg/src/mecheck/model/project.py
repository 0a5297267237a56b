"""Project model assembly.

build_model walks a project directory once, eagerly parses every XML
file, and scans every Java file at declaration level.  Class members are
parsed lazily: the first query that needs a class's members triggers a
single member-level parse of that class (see ClassItem.members).

File discovery is deterministic: relative paths, sorted lexicographically
with '/' separators.  Directories whose name matches an ignore glob
(default: target, build, out, .git) are pruned.  Unreadable or malformed
files are skipped with a warning; a duplicate fully-qualified class name
keeps the first occurrence in path order and warns about the rest.
"""

from __future__ import annotations

import fnmatch
import os
import threading
from dataclasses import dataclass
from pathlib import Path

from mecheck.model import javasrc
from mecheck.model.items import (
    CallSite,
    ClassItem,
    ConstructorItem,
    FieldItem,
    Members,
    MethodItem,
    XmlFile,
)
from mecheck.model.xmldoc import MalformedXmlError, parse_xml

DEFAULT_WATCH_CALLEES = ("ClassPathXmlApplicationContext", "getBean")
DEFAULT_IGNORE_GLOBS = ("target", "build", "out", ".git")


class RootNotFound(Exception):
    pass


@dataclass(frozen=True)
class ModelConfig:
    watch_callees: tuple[str, ...] = DEFAULT_WATCH_CALLEES
    ignore_globs: tuple[str, ...] = DEFAULT_IGNORE_GLOBS


@dataclass(frozen=True)
class ModelWarning:
    path: str
    message: str


@dataclass
class _JavaFileRef:
    rel_path: str
    abs_path: Path
    package: str | None
    imports: tuple[str, ...]
    types: list[javasrc.RawType]


class ProjectModel:
    """Everything the built-in query functions read."""

    def __init__(self, root: Path, config: ModelConfig):
        self.root = root
        self.config = config
        self.xml_files: list[XmlFile] = []
        self.classes: list[ClassItem] = []
        self.class_by_fqn: dict[str, ClassItem] = {}
        self.classes_by_sn: dict[str, list[ClassItem]] = {}
        self.warnings: list[ModelWarning] = []
        self.java_file_count = 0
        self.xml_parse_counts: dict[str, int] = {}
        self.member_parse_events = 0
        self._token_cache: dict[str, list[javasrc.JTok] | None] = {}
        self._token_lock = threading.Lock()
        self._counter_lock = threading.Lock()

    def warn(self, path: str, message: str) -> None:
        self.warnings.append(ModelWarning(path, message))

    def call_sites(self, callee_name: str) -> list[CallSite]:
        """All captured call sites of one watched callee, model order."""
        out: list[CallSite] = []
        for cls in self.classes:
            for site in cls.members().call_sites:
                if site.callee_name == callee_name:
                    out.append(site)
        return out

    # -- member materialization -------------------------------------------

    def _file_tokens(self, ref: _JavaFileRef) -> list[javasrc.JTok] | None:
        with self._token_lock:
            if ref.rel_path in self._token_cache:
                return self._token_cache[ref.rel_path]
        try:
            text = ref.abs_path.read_text(encoding="utf-8", errors="replace")
            toks = javasrc.tokenize_java(text)
        except OSError as exc:
            self.warn(ref.rel_path, f"cannot reread source for member parse: {exc}")
            toks = None
        with self._token_lock:
            self._token_cache[ref.rel_path] = toks
        return toks

    def _make_loader(self, ref: _JavaFileRef, raw: javasrc.RawType):
        def load(cls: ClassItem) -> Members:
            with self._counter_lock:
                self.member_parse_events += 1
            toks = self._file_tokens(ref)
            if toks is None or raw.body_start < 0 or raw.body_start > len(toks):
                return Members((), (), (), ())
            extracted = javasrc.extract_members(toks, raw, self.config.watch_callees)
            fields = tuple(
                FieldItem(f.name, f.type_name, f.annotations, cls, f.line)
                for f in extracted.fields
            )
            methods = tuple(
                MethodItem(m.name, m.return_type, m.params, m.annotations, cls, m.line)
                for m in extracted.methods
            )
            ctors = tuple(
                ConstructorItem(c.params, c.annotations, cls, c.line)
                for c in extracted.constructors
            )
            calls = tuple(
                CallSite(c.callee, c.args, cls, cls.file_path, c.line, ordinal=idx)
                for idx, c in enumerate(extracted.calls)
            )
            return Members(fields, methods, ctors, calls)

        return load


def _is_ignored(rel_parts: tuple[str, ...], globs: tuple[str, ...]) -> bool:
    return any(fnmatch.fnmatch(part, glob) for part in rel_parts for glob in globs)


def build_model(root: str | Path, config: ModelConfig | None = None) -> ProjectModel:
    """Walk the project root and build the queryable model."""
    root_path = Path(root)
    if not root_path.is_dir():
        raise RootNotFound(f"project root is not a directory: {root}")
    cfg = config or ModelConfig()
    model = ProjectModel(root_path, cfg)

    xml_paths: list[str] = []
    java_paths: list[str] = []
    for dirpath, dirnames, filenames in os.walk(root_path):
        rel_dir = Path(dirpath).relative_to(root_path)
        dirnames[:] = sorted(
            d for d in dirnames if not _is_ignored((d,), cfg.ignore_globs)
        )
        for fname in filenames:
            rel = (rel_dir / fname).as_posix() if rel_dir.parts else fname
            if _is_ignored(Path(rel).parts, cfg.ignore_globs):
                continue
            lower = fname.lower()
            if lower.endswith(".xml"):
                xml_paths.append(rel)
            elif lower.endswith(".java"):
                java_paths.append(rel)
    xml_paths.sort()
    java_paths.sort()

    for rel in xml_paths:
        model.xml_parse_counts[rel] = model.xml_parse_counts.get(rel, 0) + 1
        try:
            model.xml_files.append(parse_xml(root_path / rel, rel))
        except MalformedXmlError as exc:
            model.warn(rel, f"skipped malformed XML: {exc.reason} (line {exc.line})")

    for rel in java_paths:
        abs_path = root_path / rel
        try:
            text = abs_path.read_text(encoding="utf-8", errors="replace")
        except OSError as exc:
            model.warn(rel, f"skipped unreadable Java source: {exc}")
            continue
        model.java_file_count += 1
        toks = javasrc.tokenize_java(text)
        decls = javasrc.scan_declarations(toks)
        ref = _JavaFileRef(
            rel_path=rel,
            abs_path=abs_path,
            package=decls.package,
            imports=tuple(decls.imports),
            types=decls.types,
        )
        for raw in decls.types:
            chain = ".".join(raw.chain)
            fqn = f"{decls.package}.{chain}" if decls.package else chain
            if fqn in model.class_by_fqn:
                model.warn(
                    rel,
                    f"duplicate class {fqn}; keeping the one from "
                    f"{model.class_by_fqn[fqn].file_path}",
                )
                continue
            cls = ClassItem(
                simple_name=raw.simple_name,
                fqn=fqn,
                kind=raw.kind,
                supertype_names=raw.supertype_names,
                annotations=raw.annotations,
                file_path=rel,
                line=raw.line,
            )
            cls._loader = model._make_loader(ref, raw)
            model.classes.append(cls)
            model.class_by_fqn[fqn] = cls
            model.classes_by_sn.setdefault(raw.simple_name, []).append(cls)

    return model
