"""Shared builders for the test suite: small algebras, random admissible
relation sets and an independent rank oracle."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from hhquiver.algebra import BoundQuiverAlgebra, Relation
from hhquiver.quiver import Arrow, PathVector, Quiver, enumerate_paths


def kronecker(k: int = 2) -> BoundQuiverAlgebra:
    return BoundQuiverAlgebra(Quiver([0, 1], [Arrow(f"a{i}", 0, 1) for i in range(k)]))


def a3_with_zero() -> BoundQuiverAlgebra:
    q = Quiver([1, 2, 3], [("al", 1, 2), ("be", 2, 3)])
    return BoundQuiverAlgebra(q, [Relation.from_terms(q, [(1, ["al", "be"])])])


def commutative_square() -> BoundQuiverAlgebra:
    q = Quiver([1, 2, 3, 4], [("a", 1, 2), ("b", 2, 4), ("c", 1, 3), ("d", 3, 4)])
    return BoundQuiverAlgebra(q, [Relation.from_terms(q, [(1, ["a", "b"]), (-1, ["c", "d"])])])


def disjoint_kroneckers() -> BoundQuiverAlgebra:
    q = Quiver([0, 1, 2, 3], [("a", 0, 1), ("b", 0, 1), ("c", 2, 3), ("d", 2, 3)])
    return BoundQuiverAlgebra(q)


def random_quiver(rng: random.Random, nv: int, density: float = 0.45, max_mult: int = 2) -> Quiver:
    arrows = []
    for i in range(nv):
        for j in range(i + 1, nv):
            if rng.random() < density:
                for _ in range(rng.randint(1, max_mult)):
                    arrows.append(Arrow(f"y{len(arrows)}", i, j))
    return Quiver(range(nv), arrows)


def random_tree(rng: random.Random, nv: int) -> Quiver:
    arrows = []
    for v in range(1, nv):
        u = rng.randrange(v)
        s, t = (u, v) if rng.random() < 0.5 else (v, u)
        arrows.append(Arrow(f"t{v}", s, t))
    return Quiver(range(nv), arrows)


def random_admissible(rng: random.Random, max_vertices: int = 8, max_relations: int = 4) -> BoundQuiverAlgebra:
    """Random acyclic quiver plus random parallel combinations of paths of length >= 2."""
    nv = rng.randint(2, max_vertices)
    q = random_quiver(rng, nv)
    long_blocks: dict = {}
    for p in enumerate_paths(q):
        if len(p) >= 2:
            long_blocks.setdefault((p.start, p.end), []).append(p)
    rels = []
    keys = sorted(long_blocks, key=repr)
    for _ in range(rng.randint(0, max_relations) if keys else 0):
        paths = long_blocks[rng.choice(keys)]
        chosen = rng.sample(paths, rng.randint(1, min(3, len(paths))))
        body = PathVector([(p, rng.choice([-2, -1, 1, 2, 3])) for p in chosen])
        if body:
            rels.append(Relation(body))
    return BoundQuiverAlgebra(q, rels)


def det_by_subsets(m: list[list[Fraction]]) -> Fraction:
    """Determinant by Laplace expansion along rows, memoized on column subsets."""
    n = len(m)
    memo: dict = {}

    def rec(row: int, cols: frozenset) -> Fraction:
        if row == n:
            return Fraction(1)
        key = cols
        if key in memo:
            return memo[key]
        total = Fraction(0)
        free = sorted(set(range(n)) - cols)
        for sign_pos, c in enumerate(free):
            x = m[row][c]
            if x:
                total += (-1) ** sign_pos * x * rec(row + 1, cols | {c})
        memo[key] = total
        return total

    return rec(0, frozenset())


def rank_by_minors(m: list[list[Fraction]]) -> int:
    """Largest k with a nonzero k x k minor."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    for k in range(min(rows, cols), 0, -1):
        for rs in itertools.combinations(range(rows), k):
            for cs in itertools.combinations(range(cols), k):
                if det_by_subsets([[m[r][c] for c in cs] for r in rs]):
                    return k
    return 0
