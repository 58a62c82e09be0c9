"""Batch search over the semigroup tree.

Rows are buffered and sorted by (genus, generators) before they are written,
so the output does not depend on how many worker processes walked the tree.
"""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .degrees import TSV_COLUMNS, bideg, cdeg, classify
from .semigroup import NumericalSemigroup, iter_tree

PREDICATES = ("violations-only", "all", "n-agl(N)", "goto", "far-flung")

# subtrees rooted at this genus are handed to workers
SPLIT_GENUS = 6


@dataclass(frozen=True)
class Predicate:
    name: str
    n: Optional[int] = None

    @classmethod
    def parse(cls, text: str) -> Predicate:
        text = text.strip().lower()
        if text in ("violations-only", "violations", "all", "goto", "far-flung"):
            return cls("violations-only" if text == "violations" else text)
        m = re.fullmatch(r"n-agl[(:=]?(\d+)\)?|(\d+)-agl", text)
        if m:
            return cls("n-agl", int(m.group(1) or m.group(2)))
        raise ValueError(f"unknown predicate {text!r}; choose from {', '.join(PREDICATES)}")

    def __str__(self) -> str:
        return f"n-agl({self.n})" if self.name == "n-agl" else self.name


@dataclass(frozen=True)
class SearchSpec:
    max_genus: int
    predicate: Predicate = field(default_factory=lambda: Predicate("violations-only"))
    type_min: Optional[int] = None
    type_max: Optional[int] = None
    fmt: str = "tsv"
    threads: int = 1

    def __post_init__(self):
        if self.max_genus < 0:
            raise ValueError("max_genus must be >= 0")
        if self.fmt not in ("tsv", "jsonl"):
            raise ValueError(f"format must be tsv or jsonl, not {self.fmt!r}")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


@dataclass
class SearchResult:
    rows: list[str]
    visited: int
    emitted: int
    violations: list[list[int]]

    def summary(self) -> str:
        lines = [f"visited={self.visited} emitted={self.emitted} violations={len(self.violations)}"]
        for gens in self.violations:
            lines.append("VIOLATION bideg > cdeg: <" + ",".join(map(str, gens)) + ">")
        return "\n".join(lines)


def header(fmt: str) -> Optional[str]:
    return "\t".join(TSV_COLUMNS) if fmt == "tsv" else None


def _visit(h: NumericalSemigroup, spec: SearchSpec):
    """Return (in_scope, violated, row) for one semigroup."""
    t = h.profile().type
    if (spec.type_min is not None and t < spec.type_min) or (
        spec.type_max is not None and t > spec.type_max
    ):
        return False, False, None
    c, b = cdeg(h), bideg(h)
    violated = b > c
    p = spec.predicate
    if p.name == "all":
        emit = True
    elif p.name == "violations-only":
        emit = violated
    elif p.name == "goto":
        emit = b == 1
    elif p.name == "far-flung":
        emit = not h.is_full and b == h.profile().n_of
    else:
        emit = None  # needs s0
    row = None
    if emit is not False:
        report = classify(h)
        if emit is None and report.s0 != p.n:
            return True, violated, None
        row = report.tsv_row() if spec.fmt == "tsv" else report.to_json()
    return True, violated, row


def _walk(root_gens: tuple[int, ...], spec: SearchSpec, min_genus: int):
    visited = 0
    out = []
    viol = []
    for h in iter_tree(spec.max_genus, NumericalSemigroup(root_gens)):
        if h.genus < min_genus:
            continue
        visited += 1
        _, violated, row = _visit(h, spec)
        key = (h.genus, h.generators)
        if violated:
            viol.append(key)
        if row is not None:
            out.append((key, row))
    return visited, out, viol


def run_search(spec: SearchSpec) -> SearchResult:
    split = min(SPLIT_GENUS, spec.max_genus)
    visited = 0
    rows = []
    viol = []

    # shallow part of the tree in-process
    frontier = []
    for h in iter_tree(split):
        if h.genus == split:
            frontier.append(h.generators)
            continue
        visited += 1
        _, violated, row = _visit(h, spec)
        key = (h.genus, h.generators)
        if violated:
            viol.append(key)
        if row is not None:
            rows.append((key, row))

    if spec.threads == 1 or len(frontier) < 2:
        parts = [_walk(g, spec, split) for g in frontier]
    else:
        with ProcessPoolExecutor(max_workers=spec.threads) as pool:
            parts = list(pool.map(_walk, frontier, [spec] * len(frontier), [split] * len(frontier)))
    for v, r, x in parts:
        visited += v
        rows.extend(r)
        viol.extend(x)

    rows.sort(key=lambda kr: kr[0])
    viol.sort()
    return SearchResult(
        rows=[r for _, r in rows],
        visited=visited,
        emitted=len(rows),
        violations=[list(g) for _, g in viol],
    )
