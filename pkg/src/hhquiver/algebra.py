"""Bound quiver algebras kQ/I for acyclic quivers.

The ideal is materialized as a vector space: for an acyclic quiver the path
set is finite, so I is the span of all products ``a * r * b`` with ``a``, ``b``
paths and ``r`` a generator. Each endpoint block e_i (kQ) e_j is row reduced
with the *largest* path (in canonical path order) as pivot, so every pivot
path rewrites to a combination of strictly smaller non-pivot paths. The
non-pivot paths form the normal-form basis of A.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import linalg
from .errors import NonParallelRelation, NotAcyclic, PreconditionError, RelationTooShort
from .quiver import Path, PathVector, Quiver, Vertex, compose, enumerate_paths, path_sort_key


@dataclass(frozen=True)
class Relation:
    """A parallel combination of paths of length >= 2 lying in the ideal."""

    body: PathVector

    def __post_init__(self):
        if not self.body:
            raise PreconditionError("a relation must be a nonzero combination of paths")
        ends = self.body.endpoints()
        if len(ends) > 1:
            raise NonParallelRelation(f"relation mixes endpoint pairs {sorted(map(str, ends))}")
        for p in self.body.terms:
            if len(p) < 2:
                raise RelationTooShort(f"relation contains the path {p} of length {len(p)} < 2")

    @property
    def start(self) -> Vertex:
        return next(iter(self.body.terms)).start

    @property
    def end(self) -> Vertex:
        return next(iter(self.body.terms)).end

    @classmethod
    def from_terms(cls, quiver: Quiver, terms: Iterable[tuple[object, Sequence[str]]]) -> "Relation":
        """Build from ``(coefficient, arrow ids)`` pairs."""
        return cls(PathVector([(quiver.path(ids), c) for c, ids in terms]))


class BoundQuiverAlgebra:
    """The algebra A = kQ/I with a normal-form path basis."""

    def __init__(self, quiver: Quiver, generators: Sequence[Relation] = ()):
        if not quiver.acyclic:
            raise NotAcyclic("bound quiver algebras here require an acyclic quiver")
        self.quiver = quiver
        self.generators: tuple[Relation, ...] = tuple(generators)
        for r in self.generators:
            for p in r.body.terms:
                for a in p.arrows:
                    quiver.arrow(a)
        self.paths: list[Path] = enumerate_paths(quiver)
        self._key = {p: path_sort_key(quiver, p) for p in self.paths}
        blocks: dict[tuple, list[Path]] = {}
        for p in self.paths:
            blocks.setdefault((p.start, p.end), []).append(p)
        self.path_blocks = blocks
        self._paths_into = {v: [p for p in self.paths if p.end == v] for v in quiver.vertices}
        self._paths_from = {v: [p for p in self.paths if p.start == v] for v in quiver.vertices}

        spans = self._ideal_spans(self.generators, include_trivial=True)
        self._rewrite: dict[Path, PathVector] = {}
        self.ideal_dim = 0
        for key, plist in blocks.items():
            vecs = spans.get(key, [])
            if not vecs:
                continue
            rev = list(reversed(plist))
            red, pivots = linalg.rref([list(reversed(v)) for v in vecs], len(plist))
            self.ideal_dim += len(pivots)
            for row, pc in zip(red, pivots):
                pivot_path = rev[pc]
                self._rewrite[pivot_path] = PathVector(
                    {rev[j]: -x for j, x in enumerate(row) if x and j != pc}
                )
        self.basis_blocks: dict[tuple, list[Path]] = {
            key: [p for p in plist if p not in self._rewrite] for key, plist in blocks.items()
        }
        self.basis: list[Path] = [p for p in self.paths if p not in self._rewrite]
        self.basis_index = {p: i for i, p in enumerate(self.basis)}
        self.total_dim = len(self.basis)
        self._products: dict[tuple[Path, Path], PathVector] = {}

    # ideal bookkeeping -------------------------------------------------

    def _ideal_spans(self, gens: Sequence[Relation], include_trivial: bool) -> dict[tuple, list[list[Fraction]]]:
        """Vectors a*r*b per endpoint block, in block path coordinates.

        With ``include_trivial=False`` at least one of a, b must be a
        non-trivial path, which spans J*I + I*J.
        """
        index = {key: {p: i for i, p in enumerate(pl)} for key, pl in self.path_blocks.items()}
        out: dict[tuple, list[list[Fraction]]] = {}
        for r in gens:
            for a in self._paths_into[r.start]:
                for b in self._paths_from[r.end]:
                    if not include_trivial and a.is_trivial and b.is_trivial:
                        continue
                    key = (a.start, b.end)
                    idx = index[key]
                    v = [Fraction(0)] * len(idx)
                    for p, c in r.body.terms.items():
                        v[idx[compose(compose(a, p), b)]] += c
                    out.setdefault(key, []).append(v)
        return out

    def in_ideal(self, v: PathVector) -> bool:
        return not self.reduce(v)

    # normal forms ------------------------------------------------------

    def reduce(self, v: PathVector) -> PathVector:
        """Normal form of a path combination (one rewrite step suffices)."""
        out: dict[Path, Fraction] = {}
        for p, c in v.terms.items():
            rw = self._rewrite.get(p)
            if rw is None:
                out[p] = out.get(p, Fraction(0)) + c
            else:
                for q, d in rw.terms.items():
                    out[q] = out.get(q, Fraction(0)) + c * d
        return PathVector(out)

    def element(self, terms) -> PathVector:
        return self.reduce(PathVector(terms))

    def path_element(self, arrow_ids: Sequence[str], start: Vertex | None = None) -> PathVector:
        return self.reduce(PathVector({self.quiver.path(arrow_ids, start): 1}))

    @cached_property
    def one(self) -> PathVector:
        return PathVector({self.quiver.trivial(v): 1 for v in self.quiver.vertices})

    def basis_product(self, p: Path, q: Path) -> PathVector:
        key = (p, q)
        res = self._products.get(key)
        if res is None:
            if p.end != q.start:
                res = PathVector()
            else:
                res = self.reduce(PathVector({compose(p, q): 1}))
            self._products[key] = res
        return res

    def multiply(self, x: PathVector, y: PathVector) -> PathVector:
        """Bilinear product of normal-form elements, reduced to normal form."""
        acc: dict[Path, Fraction] = {}
        for p, c in x.terms.items():
            for q, d in y.terms.items():
                if p.end != q.start:
                    continue
                for r, e in self.basis_product(p, q).terms.items():
                    acc[r] = acc.get(r, Fraction(0)) + c * d * e
        return PathVector(acc)

    def coordinates(self, x: PathVector, start: Vertex, end: Vertex) -> list[Fraction]:
        """Coordinates of a normal-form element in the basis block start->end."""
        block = self.basis_blocks.get((start, end), [])
        idx = {p: i for i, p in enumerate(block)}
        v = [Fraction(0)] * len(block)
        for p, c in x.terms.items():
            v[idx[p]] += c
        return v

    def hom_dim(self, i: Vertex, j: Vertex) -> int:
        """dim e_i A e_j: the number of normal-form paths from i to j."""
        return len(self.basis_blocks.get((i, j), []))

    def nu(self, arrow_id: str) -> int:
        a = self.quiver.arrow(arrow_id)
        return self.hom_dim(a.source, a.target)

    # relations ---------------------------------------------------------

    def minimal_relations(self) -> list[Relation]:
        """Generators whose classes form a basis of I / (J*I + I*J).

        Picks greedily in the given order, so the result is a sub-list of
        ``generators``.
        """
        rad = self._ideal_spans(self.generators, include_trivial=False)
        index = {key: {p: i for i, p in enumerate(pl)} for key, pl in self.path_blocks.items()}
        kept: list[Relation] = []
        current: dict[tuple, list[list[Fraction]]] = {}
        for r in self.generators:
            key = (r.start, r.end)
            idx = index[key]
            v = [Fraction(0)] * len(idx)
            for p, c in r.body.terms.items():
                v[idx[p]] += c
            base = current.get(key)
            if base is None:
                base = rad.get(key, [])
            before = linalg.rank(base) if base else 0
            trial = base + [v]
            if linalg.rank(trial) > before:
                kept.append(r)
                current[key] = trial
            else:
                current[key] = base
        return kept

    def __repr__(self) -> str:
        return f"BoundQuiverAlgebra(dim={self.total_dim}, {self.quiver!r}, {len(self.generators)} relations)"


def build_algebra(q: Quiver, gens: Sequence[Relation] = ()) -> BoundQuiverAlgebra:
    return BoundQuiverAlgebra(q, gens)


def hom_dim(a: BoundQuiverAlgebra, i: Vertex, j: Vertex) -> int:
    return a.hom_dim(i, j)


def minimal_relations(a: BoundQuiverAlgebra) -> list[Relation]:
    return a.minimal_relations()


def multiply(a: BoundQuiverAlgebra, x: PathVector, y: PathVector) -> PathVector:
    return a.multiply(x, y)

