"""Constructors for named families of bound quiver algebras.

Naming scheme (stable, so outputs and goldens do not drift):

* canonical algebra: source ``"0"``, sink ``"c"``, interior vertex
  ``"i.k"`` = k-th vertex on arm i, arrows ``"x{i}_{k}"`` (k = 1..a_i) with
  the arms in index order, so arm 1 carries the smallest arrow ids;
* squid algebra: head ``"h0" --a,b--> "h1"``, then arm i is
  ``"h1" -> "i.1" -> ... -> "i.(a_i-1)"`` with arrows ``"x{i}_{k}"``.
  It has 2 + sum(a_i - 1) vertices; arms of weight 1 are empty and
  contribute no relation;
* Beilinson algebra: vertices ``0..n``, arrows ``"X{i}_{k}"`` from k to k+1;
* linear A_n: vertices ``1..n``, arrows ``"a{k}"`` from k to k+1.

Points are rationals standing for x_3, ..., x_n; x_1 = infinity and x_2 = 0
are implicit. When no points are given, x_i = i - 2 (i.e. 1, 2, 3, ...).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .algebra import BoundQuiverAlgebra, Relation
from .errors import DuplicatePoints, InvalidWeights, PreconditionError, ZeroPoint
from .quiver import Arrow, Quiver


def _exact(x) -> Fraction:
    if isinstance(x, float):
        raise PreconditionError(f"point {x!r} must be an exact rational, not a float")
    return Fraction(x)


@dataclass(frozen=True)
class CanonicalSpec:
    weights: tuple
    points: tuple

    def __init__(self, weights: Sequence[int], points: Sequence | None = None):
        ws = tuple(weights)
        for a in ws:
            if not isinstance(a, int) or isinstance(a, bool) or a < 1:
                raise InvalidWeights(f"weights must be positive integers, got {a!r}")
        if len(ws) > 2 and min(ws) < 2:
            raise InvalidWeights("with more than two weights every weight must be at least 2")
        need = max(len(ws) - 2, 0)
        if points is None:
            pts = tuple(Fraction(k) for k in range(1, need + 1))
        else:
            pts = tuple(_exact(p) for p in points)
        if len(pts) != need:
            raise PreconditionError(f"expected {need} points for {len(ws)} weights, got {len(pts)}")
        if any(p == 0 for p in pts):
            raise ZeroPoint("points must differ from 0 (0 is the implicit second point)")
        if len(set(pts)) != len(pts):
            raise DuplicatePoints("points must be pairwise distinct")
        object.__setattr__(self, "weights", ws)
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return len(self.weights)


def canonical_algebra(spec: CanonicalSpec) -> BoundQuiverAlgebra:
    ws = spec.weights
    if len(ws) < 2:
        raise InvalidWeights("a canonical algebra needs at least two weights")
    vertices = ["0"]
    arrows = []
    arms = []
    for i, a in enumerate(ws, start=1):
        inner = [f"{i}.{k}" for k in range(1, a)]
        vertices.extend(inner)
        chain = ["0"] + inner + ["c"]
        ids = []
        for k in range(a):
            aid = f"x{i}_{k + 1}"
            arrows.append(Arrow(aid, chain[k], chain[k + 1], f"X{i}"))
            ids.append(aid)
        arms.append(ids)
    vertices.append("c")
    q = Quiver(vertices, arrows)
    rels = []
    for i in range(3, len(ws) + 1):
        lam = spec.points[i - 3]
        rels.append(Relation.from_terms(q, [(1, arms[i - 1]), (-1, arms[1]), (lam, arms[0])]))
    return BoundQuiverAlgebra(q, rels)


def squid_algebra(spec: CanonicalSpec) -> BoundQuiverAlgebra:
    ws = spec.weights
    vertices = ["h0", "h1"]
    arrows = [Arrow("a", "h0", "h1"), Arrow("b", "h0", "h1")]
    first = {}
    for i, a in enumerate(ws, start=1):
        prev = "h1"
        for k in range(1, a):
            v = f"{i}.{k}"
            vertices.append(v)
            arrows.append(Arrow(f"x{i}_{k}", prev, v))
            prev = v
        if a > 1:
            first[i] = f"x{i}_1"
    q = Quiver(vertices, arrows)
    rels = []
    for i in range(1, len(ws) + 1):
        if i not in first:
            continue
        x = first[i]
        if i == 1:
            terms = [(1, ["a", x])]
        elif i == 2:
            terms = [(1, ["b", x])]
        else:
            terms = [(spec.points[i - 3], ["a", x]), (-1, ["b", x])]
        rels.append(Relation.from_terms(q, terms))
    return BoundQuiverAlgebra(q, rels)


def beilinson_algebra(n: int) -> BoundQuiverAlgebra:
    if n < 1:
        raise PreconditionError("the Beilinson algebra needs n >= 1")
    vertices = list(range(n + 1))
    arrows = [Arrow(f"X{i}_{k}", k, k + 1, f"X{i}") for k in range(n) for i in range(n + 1)]
    q = Quiver(vertices, arrows)
    rels = []
    for k in range(n - 1):
        for i, j in combinations(range(n + 1), 2):
            rels.append(Relation.from_terms(q, [(1, [f"X{i}_{k}", f"X{j}_{k + 1}"]),
                                                (-1, [f"X{j}_{k}", f"X{i}_{k + 1}"])]))
    return BoundQuiverAlgebra(q, rels)


def linear_quiver_algebra(n: int, zero_relations: Sequence[int] = ()) -> BoundQuiverAlgebra:
    """A_n: 1 -> 2 -> ... -> n; ``k`` in ``zero_relations`` kills a_k a_{k+1}."""
    if n < 1:
        raise PreconditionError("the linear quiver needs n >= 1")
    q = Quiver(range(1, n + 1), [Arrow(f"a{k}", k, k + 1) for k in range(1, n)])
    rels = []
    for k in zero_relations:
        if not 1 <= k <= n - 2:
            raise PreconditionError(f"no composable arrow pair starts at a{k}")
        rels.append(Relation.from_terms(q, [(1, [f"a{k}", f"a{k + 1}"])]))
    return BoundQuiverAlgebra(q, rels)
