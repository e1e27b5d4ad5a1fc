"""Finite simple graphs and graph involutions."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import InvalidArgumentError


@dataclass(frozen=True)
class Graph:
    """Immutable finite simple undirected graph on vertices ``0..vertex_count-1``.

    Edges are stored as ``(u, v)`` pairs with ``u < v``.
    """

    vertex_count: int
    edges: frozenset[tuple[int, int]]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise InvalidArgumentError(f"negative vertex count {self.vertex_count}")
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise InvalidArgumentError(f"bad edge ({u}, {v}) for {self.vertex_count} vertices")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]], name: str = "") -> Graph:
        normalized = set()
        for u, v in edges:
            if u == v:
                raise InvalidArgumentError(f"loop at vertex {u}")
            normalized.add((min(u, v), max(u, v)))
        return cls(vertex_count, frozenset(normalized), name)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Bitmask of the neighborhood of each vertex."""
        return tuple(sum(1 << w for w in nb) for nb in self.neighbors)

    @cached_property
    def is_complete(self) -> bool:
        k = self.vertex_count
        return len(self.edges) == k * (k - 1) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __str__(self) -> str:
        return self.name or f"graph:{self.vertex_count}"


@dataclass(frozen=True)
class Involution:
    """A vertex permutation of order at most two, meant to act on the source graph T."""

    permutation: tuple[int, ...]

    def __post_init__(self) -> None:
        p = self.permutation
        if sorted(p) != list(range(len(p))):
            raise InvalidArgumentError(f"not a permutation: {p}")
        if any(p[p[v]] != v for v in range(len(p))):
            raise InvalidArgumentError(f"permutation {p} is not an involution")

    def __call__(self, v: int) -> int:
        return self.permutation[v]

    def __len__(self) -> int:
        return len(self.permutation)

    def fixed_points(self) -> list[int]:
        return [v for v, w in enumerate(self.permutation) if v == w]

    def is_automorphism_of(self, graph: Graph) -> bool:
        if len(self.permutation) != graph.vertex_count:
            return False
        p = self.permutation
        return all(graph.has_edge(p[u], p[v]) for u, v in graph.edges)


def compose(p: Involution, q: Involution) -> tuple[int, ...]:
    """Permutation ``v -> p(q(v))``; generally not an involution, so returned raw."""
    if len(p) != len(q):
        raise InvalidArgumentError("permutation lengths differ")
    return tuple(p(q(v)) for v in range(len(q)))


def cycle_graph(m: int) -> Graph:
    """The cycle on ``0..m-1`` with edges ``{v, v+1 mod m}``."""
    if m < 3:
        raise InvalidArgumentError(f"cycle needs at least 3 vertices, got {m}")
    return Graph.from_edges(m, ((v, (v + 1) % m) for v in range(m)), name=f"cycle:{m}")


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidArgumentError(f"complete graph needs at least 1 vertex, got {n}")
    edges = ((u, v) for u in range(n) for v in range(u + 1, n))
    return Graph.from_edges(n, edges, name=f"complete:{n}")


def edge_graph() -> Graph:
    """K_2, named ``edge`` as in the CLI graph-spec language."""
    return Graph.from_edges(2, [(0, 1)], name="edge")


def reflection_involution(m: int) -> Involution:
    """``v -> -v mod m`` on the m-cycle; free on cells only for odd m."""
    if m < 3:
        raise InvalidArgumentError(f"cycle needs at least 3 vertices, got {m}")
    return Involution(tuple((m - v) % m for v in range(m)))


def cycle_involution(r: int) -> Involution:
    """Negation on C_{2r+1}: fixes 0 and flips the edge (r, r+1)."""
    if r < 1:
        raise InvalidArgumentError(f"r must be >= 1, got {r}")
    return reflection_involution(2 * r + 1)


def edge_swap_involution() -> Involution:
    return Involution((1, 0))


def parse_edge_list(text: str, name: str = "") -> Graph:
    """Parse an edge list: one ``u v`` pair per line, 0-based.

    An optional ``vertices <k>`` line fixes the vertex count (needed for
    isolated vertices); ``#`` starts a comment.
    """
    edges = []
    count = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "vertices" and len(parts) == 2:
                count = int(parts[1])
                continue
            if len(parts) != 2:
                raise ValueError
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InvalidArgumentError(f"line {lineno}: expected 'u v', got {raw!r}") from None
    top = max((max(e) for e in edges), default=-1) + 1
    if count is None:
        count = top
    elif count < top:
        raise InvalidArgumentError(f"edge endpoint {top - 1} exceeds declared vertex count {count}")
    if any(min(e) < 0 for e in edges):
        raise InvalidArgumentError("negative vertex index")
    return Graph.from_edges(count, edges, name=name)


def format_edge_list(graph: Graph) -> str:
    lines = [f"vertices {graph.vertex_count}"]
    lines += [f"{u} {v}" for u, v in graph.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_graph_spec(spec: str) -> Graph:
    """Resolve ``edge``, ``cycle:<m>``, ``complete:<n>`` or ``file:<path>``."""
    kind, _, arg = spec.partition(":")
    try:
        if kind == "edge" and not arg:
            return edge_graph()
        if kind == "cycle":
            return cycle_graph(int(arg))
        if kind == "complete":
            return complete_graph(int(arg))
    except ValueError as exc:
        if isinstance(exc, InvalidArgumentError):
            raise
        raise InvalidArgumentError(f"bad graph spec {spec!r}") from None
    if kind == "file" and arg:
        try:
            with open(arg, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InvalidArgumentError(f"cannot read graph file {arg!r}: {exc}") from None
        return parse_edge_list(text, name=spec)
    raise InvalidArgumentError(f"bad graph spec {spec!r}")
