"""Cells of Hom(T, G): validity, dimension, faces, and enumeration.

A cell is a tuple of color bitmasks indexed by the vertices of T; bit ``i``
of an entry is color ``i`` (shown to users as ``i + 1``). The canonical order
on cells compares entries vertex by vertex, each entry as its ascending
color list.
"""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from . import kernels
from .errors import InvalidArgumentError
from .graphs import Graph, parse_graph_spec

Cell = tuple[int, ...]

MAX_COLORS = 20


@lru_cache(maxsize=None)
def mask_colors(mask: int) -> tuple[int, ...]:
    """Ascending 0-based colors of a bitmask."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def colors_mask(colors: Iterable[int]) -> int:
    m = 0
    for c in colors:
        m |= 1 << c
    return m


def make_cell(entries: Iterable[Iterable[int]]) -> Cell:
    """Build a cell from per-vertex collections of 0-based colors."""
    return tuple(colors_mask(e) for e in entries)


def cell_sets(c: Cell) -> tuple[tuple[int, ...], ...]:
    return tuple(mask_colors(m) for m in c)


def cell_key(c: Cell) -> tuple[tuple[int, ...], ...]:
    """Canonical sort key of a cell."""
    return tuple(mask_colors(m) for m in c)


def cell_dim(c: Cell) -> int:
    return sum(m.bit_count() for m in c) - len(c)


def facets(c: Cell) -> list[Cell]:
    """Cells obtained by deleting one color from an entry with at least two colors."""
    out = []
    for x, m in enumerate(c):
        if m & (m - 1):
            rest = m
            while rest:
                low = rest & -rest
                rest ^= low
                out.append(c[:x] + (m ^ low,) + c[x + 1:])
    return out


def format_cell(c: Cell) -> str:
    return ";".join("{" + ",".join(str(i + 1) for i in mask_colors(m)) + "}" for m in c)


_ENTRY = re.compile(r"\{([^{}]*)\}")


def parse_cell(text: str) -> Cell:
    """Inverse of :func:`format_cell` (1-based colors in the text)."""
    parts = text.strip().split(";")
    out = []
    for part in parts:
        m = _ENTRY.fullmatch(part.strip())
        if m is None:
            raise InvalidArgumentError(f"bad cell entry {part!r} in {text!r}")
        body = m.group(1).strip()
        colors = [int(tok) - 1 for tok in body.split(",")] if body else []
        if any(c < 0 for c in colors):
            raise InvalidArgumentError(f"colors are 1-based, got {text!r}")
        out.append(colors_mask(colors))
    return tuple(out)


def _compositions(total: int, parts: Sequence[tuple[int, int]]) -> Iterator[tuple[int, ...]]:
    """Tuples (s_0, ..) with lo_i <= s_i <= hi_i summing to ``total``."""
    if not parts:
        if total == 0:
            yield ()
        return
    lo, hi = parts[0]
    rest_lo = sum(p[0] for p in parts[1:])
    rest_hi = sum(p[1] for p in parts[1:])
    for s in range(max(lo, total - rest_hi), min(hi, total - rest_lo) + 1):
        for tail in _compositions(total - s, parts[1:]):
            yield (s,) + tail


_worker_tables: tuple = ()


def _init_worker(earlier, common, by_size) -> None:
    global _worker_tables
    _worker_tables = (earlier, common, by_size)


def _profile_worker(args) -> list[Cell]:
    allowed0, sizes = args
    earlier, common, by_size = _worker_tables
    return kernels.enumerate_profile(earlier, common, by_size, allowed0, sizes)


@dataclass(frozen=True)
class HomComplex:
    """The cell complex Hom(T, G) with its lookup tables."""

    T: Graph
    G: Graph

    def __post_init__(self) -> None:
        if self.G.vertex_count > MAX_COLORS:
            raise InvalidArgumentError(f"target graphs above {MAX_COLORS} vertices are not supported")

    @property
    def n_vertices(self) -> int:
        return self.T.vertex_count

    @property
    def n_colors(self) -> int:
        return self.G.vertex_count

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.G.vertex_count) - 1

    @cached_property
    def common(self) -> list[int]:
        """``common[S]`` = colors adjacent in G to every color of S."""
        adj = self.G.adjacency_masks
        table = [self.full_mask] * (1 << self.n_colors)
        for s in range(1, len(table)):
            low = s & -s
            table[s] = table[s ^ low] & adj[low.bit_length() - 1]
        return table

    @cached_property
    def by_size(self) -> list[list[int]]:
        groups: list[list[int]] = [[] for _ in range(self.n_colors + 1)]
        for s in range(1, 1 << self.n_colors):
            groups[s.bit_count()].append(s)
        return groups

    @cached_property
    def earlier(self) -> list[list[int]]:
        return [[y for y in nb if y < x] for x, nb in enumerate(self.T.neighbors)]

    @cached_property
    def lex_rank(self) -> list[int]:
        """Position of each color mask in the canonical entry order."""
        masks = sorted(range(1, 1 << self.n_colors), key=mask_colors)
        rank = [0] * (1 << self.n_colors)
        for i, m in enumerate(masks, 1):
            rank[m] = i
        return rank

    def key(self, c: Cell) -> tuple[int, ...]:
        """Integer sort key equivalent to :func:`cell_key` for cells of this complex."""
        return tuple(map(self.lex_rank.__getitem__, c))

    def sort_cells(self, cells: Iterable[Cell]) -> list[Cell]:
        return sorted(cells, key=self.key)

    @property
    def max_dim_bound(self) -> int:
        return self.n_vertices * max(self.n_colors - 1, 0)

    def is_valid(self, c: Cell) -> bool:
        if len(c) != self.n_vertices:
            return False
        full = self.full_mask
        if any(m == 0 or m & ~full for m in c):
            return False
        common = self.common
        return all(not c[v] & ~common[c[u]] for u, v in self.T.edges)

    def cofacets(self, c: Cell) -> list[Cell]:
        common = self.common
        out = []
        for x, m in enumerate(c):
            allowed = self.full_mask
            for y in self.T.neighbors[x]:
                allowed &= common[c[y]]
            free = allowed & ~m
            while free:
                low = free & -free
                free ^= low
                out.append(c[:x] + (m | low,) + c[x + 1:])
        return out

    def profiles(self, d: int, fixed: Mapping[int, int] | None = None) -> Iterator[tuple[int, ...]]:
        """Per-vertex set-size profiles of d-cells; fixed entries pin their sizes."""
        fixed = fixed or {}
        bounds = []
        for x in range(self.n_vertices):
            if x in fixed:
                k = fixed[x].bit_count()
                bounds.append((k, k))
            else:
                bounds.append((1, self.n_colors))
        if self.n_colors == 0:
            return iter(())
        return _compositions(d + self.n_vertices, bounds)

    def enumerate(self, d: int, fixed: Mapping[int, int] | None = None, jobs: int = 1) -> list[Cell]:
        """All d-cells, sorted canonically; ``fixed`` pins entries ``{vertex: mask}``."""
        if d < 0:
            return []
        fixed = dict(fixed or {})
        for x, m in fixed.items():
            if not 0 <= x < self.n_vertices or m == 0 or m & ~self.full_mask:
                raise InvalidArgumentError(f"bad fixed entry {x}: {m:#x}")
        allowed0 = [fixed.get(x, self.full_mask) for x in range(self.n_vertices)]
        tasks = [(allowed0, sizes) for sizes in self.profiles(d, fixed)]
        if self.n_vertices == 0:
            return [()] if d == 0 else []
        cells: list[Cell] = []
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(
                max_workers=jobs,
                initializer=_init_worker,
                initargs=(self.earlier, self.common, self.by_size),
            ) as pool:
                for chunk in pool.map(_profile_worker, tasks):
                    cells.extend(chunk)
        else:
            for allowed, sizes in tasks:
                cells.extend(kernels.enumerate_profile(self.earlier, self.common, self.by_size, allowed, sizes))
        return self.sort_cells(cells)

    def slice(self, d: int, jobs: int = 1) -> ComplexSlice:
        return ComplexSlice(self.T, self.G, d, tuple(self.enumerate(d, jobs=jobs)))

    def f_vector(self, jobs: int = 1) -> list[int]:
        counts = [len(self.enumerate(d, jobs=jobs)) for d in range(self.max_dim_bound + 1)]
        while counts and counts[-1] == 0:
            counts.pop()
        return counts


@dataclass(frozen=True)
class ComplexSlice:
    """The sorted d-cells of Hom(T, G)."""

    T: Graph
    G: Graph
    dimension: int
    cells: tuple[Cell, ...]

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def __contains__(self, c: object) -> bool:
        return c in self.index

    @cached_property
    def index(self) -> dict[Cell, int]:
        return {c: i for i, c in enumerate(self.cells)}

    @property
    def space(self) -> HomComplex:
        return HomComplex(self.T, self.G)

    def check(self) -> None:
        """Raise if any invariant of a slice fails."""
        hom = self.space
        for c in self.cells:
            if not hom.is_valid(c) or cell_dim(c) != self.dimension:
                raise InvalidArgumentError(f"cell {format_cell(c)} does not belong in this slice")
        keys = [hom.key(c) for c in self.cells]
        if any(a >= b for a, b in zip(keys, keys[1:])):
            raise InvalidArgumentError("slice is not strictly sorted")

    def to_text(self) -> str:
        header = f"hom-slice T={self.T} G={self.G} dim={self.dimension} count={len(self.cells)}"
        return "\n".join([header, *map(format_cell, self.cells)]) + "\n"

    @classmethod
    def from_text(cls, text: str) -> ComplexSlice:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise InvalidArgumentError("empty slice text")
        fields = _parse_header(lines[0], "hom-slice")
        T = parse_graph_spec(fields["T"])
        G = parse_graph_spec(fields["G"])
        cells = tuple(parse_cell(ln) for ln in lines[1:])
        if len(cells) != int(fields["count"]):
            raise InvalidArgumentError("count in header does not match body")
        out = cls(T, G, int(fields["dim"]), cells)
        out.check()
        return out


def _parse_header(line: str, tag: str) -> dict[str, str]:
    parts = line.split()
    if not parts or parts[0] != tag:
        raise InvalidArgumentError(f"expected a {tag!r} header, got {line!r}")
    try:
        return dict(p.split("=", 1) for p in parts[1:])
    except ValueError:
        raise InvalidArgumentError(f"malformed header {line!r}") from None


def is_valid_cell(T: Graph, G: Graph, candidate: Sequence[Iterable[int]]) -> bool:
    """Check a candidate given as per-vertex collections of 0-based colors."""
    entries = [tuple(e) for e in candidate]
    if len(entries) != T.vertex_count:
        raise InvalidArgumentError(f"candidate has {len(entries)} entries, T has {T.vertex_count} vertices")
    for e in entries:
        for color in e:
            if not 0 <= color < G.vertex_count:
                raise InvalidArgumentError(f"color {color} out of range 0..{G.vertex_count - 1}")
    return HomComplex(T, G).is_valid(make_cell(entries))


def enumerate_cells(T: Graph, G: Graph, d: int, jobs: int = 1) -> ComplexSlice:
    return HomComplex(T, G).slice(d, jobs=jobs)


def cofacets(T: Graph, G: Graph, c: Cell) -> list[Cell]:
    return HomComplex(T, G).cofacets(c)


def f_vector(T: Graph, G: Graph, jobs: int = 1) -> list[int]:
    return HomComplex(T, G).f_vector(jobs=jobs)
