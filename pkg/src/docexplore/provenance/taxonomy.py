"""Tool and process taxonomies, loaded from a YAML config file.

The taxonomy is data, not code: which tool kinds exist, their abstraction
rank (matrix row order), which are instantiated per chapter, the process
vocabulary with its column order, and which kind-to-kind transitions are
technically impossible in the UI. The packaged default enumerates 11 kinds
and 30 process slots; its documented tool count is checked at load time
against its own enumeration rule.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

import yaml

from importlib import resources

PROCESS_CATEGORIES = ("basal", "navigational", "cognitive")

SCOPE_GLOBAL = "global"
SCOPE_CHAPTER = "chapter"


class TaxonomyError(Exception):
    """The taxonomy file is malformed or internally inconsistent."""


@dataclass(frozen=True)
class ToolId:
    """A concrete tool instance: a kind, optionally bound to a chapter."""
    kind: str
    chapter: int | None = None

    @property
    def label(self) -> str:
        return self.kind if self.chapter is None else f"{self.kind}@{self.chapter}"

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.chapter is not None:
            out["chapter"] = self.chapter
        return out


@dataclass(frozen=True)
class ToolKind:
    name: str
    rank: int  # abstraction rank, 1 = most overview-like
    chapter_scoped: bool


@dataclass(frozen=True)
class ProcessId:
    name: str
    category: str
    column_rank: int


@dataclass(frozen=True)
class Taxonomy:
    kinds: tuple[ToolKind, ...]
    processes: tuple[ProcessId, ...]
    infeasible: frozenset[tuple[str, str]]  # (src kind, tar kind)
    documented_chapter_count: int
    documented_tool_count: int

    def kind(self, name: str) -> ToolKind:
        try:
            return self._kind_index[name]
        except KeyError:
            raise TaxonomyError(f"unknown tool kind {name!r}") from None

    def has_kind(self, name: str) -> bool:
        return name in self._kind_index

    def process(self, name: str) -> ProcessId:
        try:
            return self._process_index[name]
        except KeyError:
            raise TaxonomyError(f"unknown process {name!r}") from None

    def has_process(self, name: str) -> bool:
        return name in self._process_index

    @property
    def _kind_index(self) -> dict[str, ToolKind]:
        return {k.name: k for k in self.kinds}

    @property
    def _process_index(self) -> dict[str, ProcessId]:
        return {p.name: p for p in self.processes}

    def kind_order(self) -> list[str]:
        """Kind names sorted for matrix axes: rank first, then file order."""
        decl = {k.name: i for i, k in enumerate(self.kinds)}
        return [k.name for k in sorted(self.kinds, key=lambda k: (k.rank, decl[k.name]))]

    def rank_of(self, tool: ToolId | str) -> int:
        name = tool.kind if isinstance(tool, ToolId) else tool
        return self.kind(name).rank

    def column_rank(self, process: str) -> int:
        return self.process(process).column_rank

    def tool(self, kind: str, chapter: int | None = None) -> ToolId:
        """Construct a validated tool instance."""
        k = self.kind(kind)
        if k.chapter_scoped and chapter is None:
            raise TaxonomyError(f"kind {kind!r} is chapter-scoped, chapter required")
        if not k.chapter_scoped and chapter is not None:
            raise TaxonomyError(f"kind {kind!r} is global, chapter not allowed")
        if chapter is not None and chapter < 1:
            raise TaxonomyError(f"chapter number must be >= 1, got {chapter}")
        return ToolId(kind=kind, chapter=chapter)

    def enumerate_tools(self, chapter_count: int | None = None) -> list[ToolId]:
        """All tool instances for a document with the given chapter count."""
        n = self.documented_chapter_count if chapter_count is None else chapter_count
        if n < 0:
            raise ValueError("chapter count must be >= 0")
        tools: list[ToolId] = []
        for k in self.kinds:
            if k.chapter_scoped:
                tools.extend(ToolId(kind=k.name, chapter=c) for c in range(1, n + 1))
            else:
                tools.append(ToolId(kind=k.name))
        return tools

    def is_feasible(self, src_kind: str, tar_kind: str) -> bool:
        return (src_kind, tar_kind) not in self.infeasible


def _require(mapping: Mapping, key: str, context: str):
    if key not in mapping:
        raise TaxonomyError(f"{context}: missing key {key!r}")
    return mapping[key]


def _parse_kinds(raw: object) -> tuple[ToolKind, ...]:
    if not isinstance(raw, list) or not raw:
        raise TaxonomyError("'kinds' must be a non-empty list")
    kinds = []
    seen = set()
    for item in raw:
        if not isinstance(item, Mapping):
            raise TaxonomyError(f"kind entry must be a mapping, got {item!r}")
        name = _require(item, "name", "kind entry")
        rank = _require(item, "rank", f"kind {name!r}")
        scope = _require(item, "scope", f"kind {name!r}")
        if not isinstance(name, str) or not name:
            raise TaxonomyError(f"kind name must be a non-empty string, got {name!r}")
        if name in seen:
            raise TaxonomyError(f"duplicate kind {name!r}")
        if not isinstance(rank, int) or not 1 <= rank <= 5:
            raise TaxonomyError(f"kind {name!r}: rank must be an integer in 1..5")
        if scope not in (SCOPE_GLOBAL, SCOPE_CHAPTER):
            raise TaxonomyError(f"kind {name!r}: scope must be 'global' or 'chapter'")
        seen.add(name)
        kinds.append(ToolKind(name=name, rank=rank, chapter_scoped=(scope == SCOPE_CHAPTER)))
    return tuple(kinds)


def _parse_processes(raw: object) -> tuple[ProcessId, ...]:
    if not isinstance(raw, list) or not raw:
        raise TaxonomyError("'processes' must be a non-empty list")
    processes = []
    seen_names = set()
    seen_ranks = set()
    for item in raw:
        if not isinstance(item, Mapping):
            raise TaxonomyError(f"process entry must be a mapping, got {item!r}")
        name = _require(item, "name", "process entry")
        category = _require(item, "category", f"process {name!r}")
        rank = _require(item, "rank", f"process {name!r}")
        if not isinstance(name, str) or not name:
            raise TaxonomyError(f"process name must be a non-empty string, got {name!r}")
        if name in seen_names:
            raise TaxonomyError(f"duplicate process {name!r}")
        if category not in PROCESS_CATEGORIES:
            raise TaxonomyError(
                f"process {name!r}: category must be one of {PROCESS_CATEGORIES}"
            )
        if not isinstance(rank, int) or rank < 1:
            raise TaxonomyError(f"process {name!r}: rank must be a positive integer")
        if rank in seen_ranks:
            raise TaxonomyError(f"process {name!r}: duplicate column rank {rank}")
        seen_names.add(name)
        seen_ranks.add(rank)
        processes.append(ProcessId(name=name, category=category, column_rank=rank))
    if seen_ranks != set(range(1, len(processes) + 1)):
        raise TaxonomyError("process column ranks must be contiguous from 1")
    return tuple(processes)


def _parse_infeasible(raw: object, kinds: Iterable[ToolKind]) -> frozenset[tuple[str, str]]:
    if raw is None:
        return frozenset()
    if not isinstance(raw, list):
        raise TaxonomyError("'infeasible' must be a list of [src, tar] pairs")
    known = {k.name for k in kinds}
    pairs = set()
    for item in raw:
        if not isinstance(item, list) or len(item) != 2:
            raise TaxonomyError(f"infeasible entry must be a [src, tar] pair, got {item!r}")
        src, tar = item
        for name in (src, tar):
            if name not in known:
                raise TaxonomyError(f"infeasible pair references unknown kind {name!r}")
        pairs.add((src, tar))
    return frozenset(pairs)


def taxonomy_from_dict(data: Mapping) -> Taxonomy:
    if not isinstance(data, Mapping):
        raise TaxonomyError("taxonomy root must be a mapping")
    kinds = _parse_kinds(data.get("kinds"))
    processes = _parse_processes(data.get("processes"))
    infeasible = _parse_infeasible(data.get("infeasible"), kinds)
    documented = data.get("documented")
    if not isinstance(documented, Mapping):
        raise TaxonomyError("'documented' section with 'chapters' and 'tools' is required")
    chapters = _require(documented, "chapters", "'documented'")
    tools = _require(documented, "tools", "'documented'")
    if not isinstance(chapters, int) or chapters < 1:
        raise TaxonomyError("'documented.chapters' must be a positive integer")
    if not isinstance(tools, int) or tools < 1:
        raise TaxonomyError("'documented.tools' must be a positive integer")
    taxonomy = Taxonomy(
        kinds=kinds,
        processes=processes,
        infeasible=infeasible,
        documented_chapter_count=chapters,
        documented_tool_count=tools,
    )
    actual = len(taxonomy.enumerate_tools())
    if actual != tools:
        raise TaxonomyError(
            f"'documented.tools' is {tools} but enumerating over "
            f"{chapters} chapters yields {actual} tools"
        )
    return taxonomy


def load_taxonomy(path: str | Path) -> Taxonomy:
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise TaxonomyError(f"cannot parse taxonomy file: {exc}") from exc
    return taxonomy_from_dict(data)


def default_taxonomy() -> Taxonomy:
    ref = resources.files("docexplore").joinpath("data/taxonomy.yaml")
    data = yaml.safe_load(ref.read_text(encoding="utf-8"))
    return taxonomy_from_dict(data)
