"""Finite quivers, paths and rational combinations of parallel paths.

Composition follows the left-to-right convention: ``p * q`` means "first
follow p, then q", defined when ``p.end == q.start``.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Iterator, Mapping

from .errors import EndpointMismatch, NotAcyclic, PreconditionError

Vertex = Hashable


@dataclass(frozen=True)
class Arrow:
    id: str
    source: Vertex
    target: Vertex
    label: str | None = None


class Quiver:
    """A finite quiver with ordered vertices and arrows.

    Vertex order and arrow order are part of the data: they fix every basis
    built downstream.
    """

    def __init__(self, vertices: Iterable[Vertex], arrows: Iterable[Arrow | tuple], labels: Mapping | None = None):
        self.vertices: tuple = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise PreconditionError("vertex ids must be unique")
        self.labels = dict(labels or {})
        arrs = []
        for a in arrows:
            if not isinstance(a, Arrow):
                a = Arrow(*a)
            arrs.append(a)
        self.arrows: tuple[Arrow, ...] = tuple(arrs)
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise PreconditionError("arrow ids must be unique")
        vset = set(self.vertices)
        for a in self.arrows:
            if a.source not in vset or a.target not in vset:
                raise PreconditionError(f"arrow {a.id!r} has an endpoint outside the vertex set")
        self._arrow = {a.id: a for a in self.arrows}
        self._arrow_index = {a.id: i for i, a in enumerate(self.arrows)}
        self._vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self._acyclic: bool | None = None

    def arrow(self, arrow_id: str) -> Arrow:
        return self._arrow[arrow_id]

    def arrow_index(self, arrow_id: str) -> int:
        return self._arrow_index[arrow_id]

    def vertex_index(self, v: Vertex) -> int:
        return self._vertex_index[v]

    def arrows_from(self, v: Vertex) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_into(self, v: Vertex) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def sources(self) -> list[Vertex]:
        return [v for v in self.vertices if not self.arrows_into(v)]

    def sinks(self) -> list[Vertex]:
        return [v for v in self.vertices if not self.arrows_from(v)]

    @property
    def acyclic(self) -> bool:
        if self._acyclic is None:
            self._acyclic = is_acyclic(self)
        return self._acyclic

    def trivial(self, v: Vertex) -> "Path":
        return Path(v, ())

    def path(self, arrow_ids: Iterable[str], start: Vertex | None = None) -> "Path":
        """Build a path from arrow ids, checking composability."""
        ids = tuple(arrow_ids)
        if not ids:
            if start is None:
                raise PreconditionError("a trivial path needs its vertex")
            return Path(start, ())
        first = self.arrow(ids[0])
        cur = first.target
        for aid in ids[1:]:
            a = self.arrow(aid)
            if a.source != cur:
                raise EndpointMismatch(f"arrow {aid!r} does not start where the previous one ends")
            cur = a.target
        return Path(first.source, ids, cur)

    def __repr__(self) -> str:
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"


@dataclass(frozen=True)
class Path:
    """A path: start vertex plus an arrow sequence (empty for e_v).

    ``end`` is stored alongside so paths can be compared and composed without
    the quiver at hand; build non-trivial paths via ``Quiver.path``.
    """

    start: Vertex
    arrows: tuple[str, ...] = ()
    end_vertex: Vertex = field(default=None)

    def __post_init__(self):
        if not self.arrows:
            object.__setattr__(self, "end_vertex", self.start)
        elif self.end_vertex is None:
            raise PreconditionError("non-trivial paths must record their end vertex")

    @property
    def end(self) -> Vertex:
        return self.end_vertex

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def __mul__(self, other: "Path") -> "Path":
        return compose(self, other)

    def __str__(self) -> str:
        if not self.arrows:
            return f"e_{self.start}"
        return "*".join(self.arrows)


def compose(p: Path, q: Path) -> Path:
    """Concatenate ``p`` then ``q``; raise EndpointMismatch if ``p.end != q.start``."""
    if p.end != q.start:
        raise EndpointMismatch(f"{p} ends at {p.end!r} but {q} starts at {q.start!r}")
    if not p.arrows:
        return q
    if not q.arrows:
        return p
    return Path(p.start, p.arrows + q.arrows, q.end)


class PathVector:
    """Finite rational combination of paths; zero coefficients are dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Path, object] | Iterable[tuple[Path, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Path, Fraction] = {}
        for p, c in items:
            c = Fraction(c)
            if c:
                acc[p] = acc.get(p, Fraction(0)) + c
        self.terms = {p: c for p, c in acc.items() if c}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, PathVector) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "PathVector") -> "PathVector":
        return PathVector(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "PathVector") -> "PathVector":
        return self + other.scale(-1)

    def scale(self, c) -> "PathVector":
        c = Fraction(c)
        return PathVector({p: c * x for p, x in self.terms.items()})

    def endpoints(self) -> set[tuple[Vertex, Vertex]]:
        return {(p.start, p.end) for p in self.terms}

    def is_parallel(self) -> bool:
        return len(self.endpoints()) <= 1

    def lmul(self, p: Path) -> "PathVector":
        """``p * self``, dropping non-composable terms."""
        return PathVector({compose(p, q): c for q, c in self.terms.items() if p.end == q.start})

    def rmul(self, p: Path) -> "PathVector":
        """``self * p``, dropping non-composable terms."""
        return PathVector({compose(q, p): c for q, c in self.terms.items() if q.end == p.start})

    def __repr__(self) -> str:
        if not self.terms:
            return "PathVector(0)"
        return "PathVector(" + " + ".join(f"{c}*{p}" for p, c in self.terms.items()) + ")"


def is_acyclic(q: Quiver) -> bool:
    """True iff Kahn's topological sort consumes every vertex."""
    return topological_order(q) is not None


def topological_order(q: Quiver) -> list[Vertex] | None:
    indeg = {v: 0 for v in q.vertices}
    out = defaultdict(list)
    for a in q.arrows:
        indeg[a.target] += 1
        out[a.source].append(a.target)
    ready = deque(v for v in q.vertices if indeg[v] == 0)
    order = []
    while ready:
        v = ready.popleft()
        order.append(v)
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return order if len(order) == len(q.vertices) else None


def path_sort_key(q: Quiver, p: Path) -> tuple:
    """Length first, then arrow positions lexicographically, then start vertex."""
    return (len(p), tuple(q.arrow_index(a) for a in p.arrows), q.vertex_index(p.start))


def enumerate_paths(q: Quiver) -> list[Path]:
    """All paths of an acyclic quiver, trivial ones included, in canonical order."""
    if not q.acyclic:
        raise NotAcyclic("path enumeration needs an acyclic quiver")
    paths = [q.trivial(v) for v in q.vertices]
    frontier = list(paths)
    while frontier:
        nxt = []
        for p in frontier:
            for a in q.arrows_from(p.end):
                nxt.append(Path(p.start, p.arrows + (a.id,), a.target))
        paths.extend(nxt)
        frontier = nxt
    paths.sort(key=lambda p: path_sort_key(q, p))
    return paths


def iter_paths_between(q: Quiver, paths: list[Path]) -> dict[tuple[Vertex, Vertex], list[Path]]:
    blocks: dict[tuple[Vertex, Vertex], list[Path]] = defaultdict(list)
    for p in paths:
        blocks[(p.start, p.end)].append(p)
    return blocks


def connected_components(q: Quiver) -> int:
    """Connected components of the underlying undirected graph."""
    parent = {v: v for v in q.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a in q.arrows:
        ra, rb = find(a.source), find(a.target)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in q.vertices})


def arrow_positions(p: Path, arrow_id: str) -> Iterator[int]:
    return (i for i, a in enumerate(p.arrows) if a == arrow_id)
