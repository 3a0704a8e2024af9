"""The enveloping algebra A^e = A (x) A^op as a bound quiver algebra view.

A^e is presented on the quiver Q x Q^op: vertices are pairs (i, j), and an
A-bimodule M becomes the representation with fiber e_i M e_j at (i, j).
There are two families of arrows:

* ``("L", a, j)`` for an arrow ``a: s -> t`` of Q acts e_t M e_j -> e_s M e_j
  by ``m -> a m``;
* ``("R", b, i)`` for ``b: s -> t`` acts e_i M e_s -> e_i M e_t by ``m -> m b``.

The projective A^e (e_i (x) e_j) = A e_i (x) e_j A has fiber at (w, w') with
basis the pairs (p, q) of normal-form paths ``p: w -> i``, ``q: j -> w'``,
and (p, q) is the word ``L(p) R(reversed q)`` applied to the generator. This
is all the resolution engine in ``reps`` needs.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import BoundQuiverAlgebra
from .quiver import Path
from .reps import Projective, Representation, _zeros


class EnvelopingAlgebra:
    """Algebra view of A (x) A^op for the generic resolution engine."""

    def __init__(self, algebra: BoundQuiverAlgebra):
        self.algebra = algebra
        q = algebra.quiver
        qv = list(q.vertices)
        self.vertices = [(i, j) for i in qv for j in qv]
        arrows = []
        for a in q.arrows:
            for j in qv:
                arrows.append((("L", a.id, j), (a.source, j), (a.target, j)))
        for b in q.arrows:
            for i in qv:
                arrows.append((("R", b.id, i), (i, b.target), (i, b.source)))
        # stored as (id, source, target) with the source being the codomain
        # fiber, matching the left-module convention of ``reps``
        self.arrows = arrows
        self._triples = {a[0]: a for a in arrows}
        self._proj: dict = {}
        self.total_dim = algebra.total_dim ** 2

    def arrow_triple(self, aid):
        return self._triples[aid]

    # A^e as an abstract algebra ------------------------------------------

    def basis(self) -> list[tuple[Path, Path]]:
        return [(x, y) for x in self.algebra.basis for y in self.algebra.basis]

    def multiply(self, u: dict, v: dict) -> dict:
        """(a (x) b)(c (x) d) = ac (x) db on dicts {(x, y): coefficient}."""
        A = self.algebra
        out: dict = {}
        for (a, b), c1 in u.items():
            for (c, d), c2 in v.items():
                left = A.basis_product(a, c)
                if not left:
                    continue
                right = A.basis_product(d, b)
                for p, x in left.terms.items():
                    for r, y in right.terms.items():
                        key = (p, r)
                        out[key] = out.get(key, Fraction(0)) + c1 * c2 * x * y
        return {k: c for k, c in out.items() if c}

    # modules ---------------------------------------------------------------

    def _left(self, a_id: str, x: Path, block_end):
        A = self.algebra
        arr = A.quiver.arrow(a_id)
        return A.coordinates(A.basis_product(A.quiver.path([a_id]), x), arr.source, block_end)

    def _right(self, x: Path, b_id: str, block_start):
        A = self.algebra
        arr = A.quiver.arrow(b_id)
        return A.coordinates(A.basis_product(x, A.quiver.path([b_id])), block_start, arr.target)

    def projective(self, v) -> Projective:
        if v in self._proj:
            return self._proj[v]
        A = self.algebra
        i, j = v
        blocks = A.basis_blocks
        fibers = {}
        for (w, w2) in self.vertices:
            ps = blocks.get((w, i), [])
            qs = blocks.get((j, w2), [])
            fibers[(w, w2)] = [(p, q) for p in ps for q in qs]
        dims = {u: len(f) for u, f in fibers.items()}
        maps = {}
        for aid, src, tgt in self.arrows:
            mat = _zeros(dims[src], dims[tgt])
            kind, arrow_id, fixed = aid
            if kind == "L":
                s = src[0]
                w2 = fixed
                qs = blocks.get((j, w2), [])
                nq = len(qs)
                for col, (p, q) in enumerate(fibers[tgt]):
                    coords = self._left(arrow_id, p, i)
                    qi = col % nq
                    for pi, c in enumerate(coords):
                        if c:
                            mat[pi * nq + qi][col] = c
            else:
                t = src[1]
                w = fixed
                qs_out = blocks.get((j, t), [])
                nq_out = len(qs_out)
                nq_in = len(blocks.get((j, tgt[1]), []))
                for col, (p, q) in enumerate(fibers[tgt]):
                    coords = self._right(q, arrow_id, j)
                    pi = col // nq_in
                    for qi, c in enumerate(coords):
                        if c:
                            mat[pi * nq_out + qi][col] = c
            maps[aid] = mat
        words = {}
        for u, fib in fibers.items():
            w2 = u[1]
            words[u] = [
                tuple(("L", a, w2) for a in p.arrows) + tuple(("R", b, i) for b in reversed(q.arrows))
                for p, q in fib
            ]
        proj = Projective(v, Representation(self, dims, maps), words)
        self._proj[v] = proj
        return proj

    def diagonal(self) -> Representation:
        """A as an A-bimodule."""
        A = self.algebra
        blocks = A.basis_blocks
        dims = {u: len(blocks.get(u, [])) for u in self.vertices}
        maps = {}
        for aid, src, tgt in self.arrows:
            mat = _zeros(dims[src], dims[tgt])
            kind, arrow_id, fixed = aid
            for col, x in enumerate(blocks.get(tgt, [])):
                if kind == "L":
                    coords = self._left(arrow_id, x, fixed)
                else:
                    coords = self._right(x, arrow_id, fixed)
                for row, c in enumerate(coords):
                    if c:
                        mat[row][col] = c
            maps[aid] = mat
        return Representation(self, dims, maps)

    def dual_diagonal(self) -> Representation:
        """DA = Hom_k(A, k) with (a f b)(x) = f(b x a); fiber at (i, j) is D(e_j A e_i)."""
        A = self.algebra
        blocks = A.basis_blocks
        dims = {(i, j): len(blocks.get((j, i), [])) for (i, j) in self.vertices}
        maps = {}
        for aid, src, tgt in self.arrows:
            mat = _zeros(dims[src], dims[tgt])
            kind, arrow_id, fixed = aid
            # transpose of the dual map: for each basis x of the codomain
            # block, expand x*a (left action) or b*x (right action)
            for row, x in enumerate(blocks.get((src[1], src[0]), [])):
                if kind == "L":
                    coords = self._right(x, arrow_id, fixed)
                else:
                    coords = self._left(arrow_id, x, fixed)
                for col, c in enumerate(coords):
                    if c:
                        mat[row][col] = c
            maps[aid] = mat
        return Representation(self, dims, maps)
