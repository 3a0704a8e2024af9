"""Representations, projective covers and minimal projective resolutions.

Action convention (left modules, paths composed left to right): an arrow
``a: s -> t`` acts as a linear map ``M[t] -> M[s]``, stored as a
``dims[s] x dims[t]`` matrix. A path ``a1 a2 ... ak`` then acts by the
matrix product ``M[a1] @ M[a2] @ ... @ M[ak]``, and the indecomposable
projective ``P(v) = A e_v`` has the paths ending at ``v`` as basis, with the
fiber at ``w`` spanned by the paths ``w -> v``. This is the encoding under
which ``dim Ext^1(S(i), S(j))`` counts the arrows ``j -> i``.

The resolution machinery only needs an *algebra view*: vertices, arrows as
``(id, source, target)`` triples and the indecomposable projectives with a
monomial basis (every basis vector is a word in the arrows applied to the
generator). ``PathAlgebraView`` provides this for a bound quiver algebra;
the enveloping algebra in ``hhquiver.envelope`` provides its own.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Protocol, Sequence

from . import linalg
from .algebra import BoundQuiverAlgebra
from .errors import HHError, PreconditionError, ZeroModule
from .linalg import RationalMatrix

Matrix = list[list[Fraction]]
Word = tuple


def _zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def _identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _apply(mat: Matrix, v: Sequence[Fraction]) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in mat]


class AlgebraView(Protocol):
    vertices: Sequence[Hashable]
    arrows: Sequence[tuple]

    def projective(self, v) -> "Projective": ...


@dataclass
class Representation:
    """Vertex-graded vector spaces with one matrix per arrow.

    ``maps[a]`` has shape ``dims[source(a)] x dims[target(a)]``.
    """

    view: AlgebraView
    dims: dict
    maps: dict

    def __post_init__(self):
        for aid, s, t in self.view.arrows:
            m = self.maps.setdefault(aid, _zeros(self.dims[s], self.dims[t]))
            if len(m) != self.dims[s] or any(len(r) != self.dims[t] for r in m):
                raise PreconditionError(f"map for arrow {aid!r} has the wrong shape")

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def matrix(self, arrow_id) -> RationalMatrix:
        aid, s, t = self.view.arrow_triple(arrow_id)
        return RationalMatrix(self.dims[s], self.dims[t], self.maps[aid])

    def word_matrix(self, word: Word, at) -> Matrix:
        """Action of a word; ``at`` is its start vertex (needed for the empty word)."""
        if not word:
            return _identity(self.dims[at])
        out = None
        for aid in word:
            _, _, t = self.view.arrow_triple(aid)
            m = self.maps[aid]
            out = m if out is None else linalg.matmul(out, m, self.dims[t])
        return [list(r) for r in out]

    def satisfies_relations(self) -> bool:
        for rel in getattr(self.view, "relation_words", lambda: [])():
            start = rel[0][1]
            words = rel[1:]
            acc = None
            for c, w in words:
                m = self.word_matrix(w, start)
                m = [[c * x for x in r] for r in m]
                acc = m if acc is None else [[x + y for x, y in zip(r, s)] for r, s in zip(acc, m)]
            if acc is not None and any(x for r in acc for x in r):
                return False
        return True


@dataclass
class Projective:
    """An indecomposable projective with its monomial basis."""

    vertex: Hashable
    rep: Representation
    words: dict  # vertex -> list of words, one per basis vector of the fiber


class PathAlgebraView:
    """Algebra view of a bound quiver algebra for the resolution engine."""

    def __init__(self, algebra: BoundQuiverAlgebra):
        self.algebra = algebra
        q = algebra.quiver
        self.vertices = list(q.vertices)
        self.arrows = [(a.id, a.source, a.target) for a in q.arrows]
        self._triples = {a[0]: a for a in self.arrows}
        self._proj: dict = {}

    def arrow_triple(self, aid):
        return self._triples[aid]

    def relation_words(self):
        out = []
        for r in self.algebra.generators:
            out.append([("start", r.start)] + [(c, p.arrows) for p, c in r.body.terms.items()])
        return out

    def projective(self, v) -> Projective:
        if v in self._proj:
            return self._proj[v]
        a = self.algebra
        q = a.quiver
        fibers = {w: a.basis_blocks.get((w, v), []) for w in self.vertices}
        dims = {w: len(b) for w, b in fibers.items()}
        maps = {}
        for arr in q.arrows:
            mat = _zeros(dims[arr.source], dims[arr.target])
            alpha = q.path([arr.id])
            for j, x in enumerate(fibers[arr.target]):
                prod = a.basis_product(alpha, x)
                coords = a.coordinates(prod, arr.source, v)
                for i, c in enumerate(coords):
                    if c:
                        mat[i][j] = c
            maps[arr.id] = mat
        words = {w: [p.arrows for p in fibers[w]] for w in self.vertices}
        proj = Projective(v, Representation(self, dims, maps), words)
        self._proj[v] = proj
        return proj


def view_of(a) -> AlgebraView:
    if isinstance(a, BoundQuiverAlgebra):
        cached = getattr(a, "_view", None)
        if cached is None:
            cached = PathAlgebraView(a)
            a._view = cached
        return cached
    return a


# constructors -----------------------------------------------------------


def representation(a, dims: dict, maps: dict | None = None) -> Representation:
    """Build and validate a representation from plain matrices."""
    view = view_of(a)
    conv = {k: [[Fraction(x) for x in r] for r in (m.to_lists() if isinstance(m, RationalMatrix) else m)]
            for k, m in (maps or {}).items()}
    full = {v: dims.get(v, 0) for v in view.vertices}
    rep = Representation(view, full, conv)
    if not rep.satisfies_relations():
        raise PreconditionError("representation violates a relation of the algebra")
    return rep


def simple(a, v) -> Representation:
    view = view_of(a)
    return Representation(view, {w: int(w == v) for w in view.vertices}, {})


def projective(a, v) -> Representation:
    return view_of(a).projective(v).rep


def direct_sum(a, parts: Sequence[Representation]) -> Representation:
    view = view_of(a)
    dims = {v: sum(p.dims[v] for p in parts) for v in view.vertices}
    maps = {}
    for aid, s, t in view.arrows:
        mat = _zeros(dims[s], dims[t])
        ro = co = 0
        for p in parts:
            block = p.maps[aid]
            for i, r in enumerate(block):
                for j, x in enumerate(r):
                    if x:
                        mat[ro + i][co + j] = x
            ro += p.dims[s]
            co += p.dims[t]
        maps[aid] = mat
    return Representation(view, dims, maps)


def hom_space_dim(a, m: Representation, n: Representation) -> int:
    """dim Hom(M, N): vertexwise maps f with f_s M_a = N_a f_t for all arrows."""
    view = view_of(a)
    offsets = {}
    total = 0
    for v in view.vertices:
        offsets[v] = total
        total += n.dims[v] * m.dims[v]

    def var(v, i, j):  # entry (i, j) of f_v : M_v -> N_v
        return offsets[v] + i * m.dims[v] + j

    eqs = []
    for aid, s, t in view.arrows:
        ma, na = m.maps[aid], n.maps[aid]
        for i in range(n.dims[s]):
            for j in range(m.dims[t]):
                row = [Fraction(0)] * total
                for k in range(m.dims[s]):
                    if ma[k][j]:
                        row[var(s, i, k)] += ma[k][j]
                for k in range(n.dims[t]):
                    if na[i][k]:
                        row[var(t, k, j)] -= na[i][k]
                if any(row):
                    eqs.append(row)
    return total - (linalg.rank(eqs) if eqs else 0)


# covers and resolutions -------------------------------------------------


@dataclass
class FreeModule:
    """A direct sum of indecomposable projectives P(g_0) + P(g_1) + ..."""

    view: AlgebraView
    generators: list
    rep: Representation = field(init=False)
    offsets: dict = field(init=False)

    def __post_init__(self):
        parts = [self.view.projective(g) for g in self.generators]
        self.rep = direct_sum(self.view, [p.rep for p in parts]) if parts else Representation(
            self.view, {v: 0 for v in self.view.vertices}, {})
        self.offsets = {}
        for v in self.view.vertices:
            off, acc = [], 0
            for p in parts:
                off.append(acc)
                acc += p.rep.dims[v]
            self.offsets[v] = off
        self._parts = parts

    def images_of_generator_map(self, target: Representation, images: list) -> dict:
        """Matrix at each vertex of the map self -> target sending g_k to images[k]."""
        out = {}
        for w in self.view.vertices:
            cols = []
            for k, part in enumerate(self._parts):
                memo = {(): images[k]}
                for word in part.words[w]:
                    cols.append(_word_image(target, word, memo))
            out[w] = [[c[i] for c in cols] for i in range(target.dims[w])]
        return out


def _word_image(target: Representation, word: Word, memo: dict) -> list[Fraction]:
    if word in memo:
        return memo[word]
    tail = _word_image(target, word[1:], memo)
    res = _apply(target.maps[word[0]], tail)
    memo[word] = res
    return res


def _top_vectors(rep: Representation, sub: dict) -> dict:
    """For a subrepresentation given by row bases ``sub[v]`` (vectors in
    ``rep``), pick vectors spanning a complement of its radical at each vertex."""
    view = rep.view
    rad = {v: [] for v in view.vertices}
    for aid, s, t in view.arrows:
        mat = rep.maps[aid]
        for vec in sub[t]:
            img = _apply(mat, vec)
            if any(img):
                rad[s].append(img)
    chosen = {}
    for v in view.vertices:
        idx = linalg.column_space_complement(rad[v], sub[v], rep.dims[v])
        chosen[v] = [sub[v][i] for i in idx]
    return chosen


@dataclass
class ResolutionTerm:
    free: FreeModule
    images: list  # image of generator k in the previous term (or the module)


@dataclass
class Resolution:
    module: Representation
    terms: list  # ResolutionTerm per degree, up to the computed length
    complete: bool  # True when the last kernel was zero

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def multiplicities(self, degree: int) -> dict:
        out = {}
        if degree < len(self.terms):
            for g in self.terms[degree].free.generators:
                out[g] = out.get(g, 0) + 1
        return out


def _cover_step(view, target: Representation, sub: dict) -> tuple[ResolutionTerm, dict]:
    """Cover the subrepresentation ``sub`` of ``target``; return the term and
    its kernel as a subrepresentation of the new free module."""
    tops = _top_vectors(target, sub)
    gens, images = [], []
    for v in view.vertices:
        for vec in tops[v]:
            gens.append(v)
            images.append(vec)
    free = FreeModule(view, gens)
    maps = free.images_of_generator_map(target, images)
    kernel = {}
    for w in view.vertices:
        ncols = free.rep.dims[w]
        kernel[w] = linalg.nullspace(maps[w], ncols) if ncols else []
    return ResolutionTerm(free, images), kernel


def resolve(a, m: Representation, max_degree: int | None = None, cap: int | None = None) -> Resolution:
    """Minimal projective resolution of ``m``.

    Stops when the syzygy vanishes or after ``max_degree``. Without
    ``max_degree`` the resolution must terminate before ``cap`` steps
    (default: number of vertices); exceeding the cap is an internal error.
    """
    view = view_of(a)
    if cap is None:
        cap = len(view.vertices)
    sub = {v: _identity(m.dims[v]) for v in view.vertices}
    target = m
    terms = []
    degree = 0
    while True:
        if all(not sub[v] for v in view.vertices):
            return Resolution(m, terms, True)
        if max_degree is not None and degree > max_degree:
            return Resolution(m, terms, False)
        if max_degree is None and degree > cap:
            raise HHError("resolution exceeded the degree cap; the algebra view is inconsistent")
        term, sub = _cover_step(view, target, sub)
        terms.append(term)
        target = term.free.rep
        degree += 1


def projective_cover(a, m: Representation):
    """Return ``(P, epi)`` with ``epi[w]`` the matrix P_w -> M_w."""
    if m.total_dim == 0:
        raise ZeroModule("the zero module has no projective cover")
    view = view_of(a)
    sub = {v: _identity(m.dims[v]) for v in view.vertices}
    tops = _top_vectors(m, sub)
    gens, images = [], []
    for v in view.vertices:
        for vec in tops[v]:
            gens.append(v)
            images.append(vec)
    free = FreeModule(view, gens)
    epi = free.images_of_generator_map(m, images)
    return free.rep, {w: RationalMatrix(m.dims[w], free.rep.dims[w], epi[w]) for w in view.vertices}


def top_dims(a, m: Representation) -> dict:
    view = view_of(a)
    sub = {v: _identity(m.dims[v]) for v in view.vertices}
    return {v: len(vs) for v, vs in _top_vectors(m, sub).items()}


# profiles of simples ----------------------------------------------------


@dataclass
class ResolutionProfile:
    """mult[m][i][j]: multiplicity of P(j) in the m-th term resolving S(i)."""

    mult: list
    projective_dims: dict
    global_dim: int


def minimal_resolution(a, v) -> Resolution:
    return resolve(a, simple(a, v))


def resolution_profile(a) -> ResolutionProfile:
    cache = getattr(a, "_profile", None)
    if cache is not None:
        return cache
    view = view_of(a)
    rows = {}
    pdims = {}
    for v in view.vertices:
        res = minimal_resolution(a, v)
        pdims[v] = res.length
        rows[v] = [res.multiplicities(d) for d in range(len(res.terms))]
    g = max(pdims.values(), default=0)
    mult = []
    for d in range(g + 1):
        mult.append({i: {j: (rows[i][d].get(j, 0) if d < len(rows[i]) else 0) for j in view.vertices}
                     for i in view.vertices})
    prof = ResolutionProfile(mult, pdims, g)
    try:
        a._profile = prof
    except AttributeError:
        pass
    return prof


def ext_dim(a, m: int, i, j) -> int:
    """dim Ext^m(S(i), S(j)) read off the minimal resolution of S(i)."""
    prof = resolution_profile(a)
    if m < 0 or m > prof.global_dim:
        return 0
    return prof.mult[m][i][j]


def global_dimension(a) -> int:
    return resolution_profile(a).global_dim


# Ext with arbitrary coefficients -------------------------------------------


def hom_complex(res: Resolution, n: Representation, top_degree: int) -> list[list[list[Fraction]]]:
    """Matrices of d_m^*: Hom(P_{m-1}, N) -> Hom(P_m, N) for m = 1..top_degree."""
    out = []
    for m in range(1, top_degree + 1):
        if m >= len(res.terms):
            out.append(None)
            continue
        prev = res.terms[m - 1].free
        cur = res.terms[m]
        word_cache: dict = {}
        rows_total = sum(n.dims[g] for g in cur.free.generators)
        cols_total = sum(n.dims[g] for g in prev.generators)
        mat = _zeros(rows_total, cols_total)
        ro = 0
        for l, gl in enumerate(cur.free.generators):
            img = cur.images[l]
            offs = prev.offsets[gl]
            co = 0
            for k, gk in enumerate(prev.generators):
                words = prev._parts[k].words[gl]
                start = offs[k]
                for b, word in enumerate(words):
                    c = img[start + b]
                    if not c:
                        continue
                    key = (word, gl)
                    wm = word_cache.get(key)
                    if wm is None:
                        wm = n.word_matrix(word, gl)
                        word_cache[key] = wm
                    for i in range(n.dims[gl]):
                        row = mat[ro + i]
                        for j in range(n.dims[gk]):
                            x = wm[i][j]
                            if x:
                                row[co + j] += c * x
                co += n.dims[gk]
            ro += n.dims[gl]
        out.append(mat)
    return out


def ext_from_resolution(res: Resolution, n: Representation, max_degree: int) -> dict:
    """dim Ext^d(M, N) for d <= max_degree; ``res`` must reach degree max_degree + 1."""
    dstar = hom_complex(res, n, max_degree + 1)
    ranks = [0] + [linalg.rank(d) if d else 0 for d in dstar]
    out = {}
    for d in range(max_degree + 1):
        if d >= len(res.terms):
            out[d] = 0
            continue
        hom_dim = sum(n.dims[g] for g in res.terms[d].free.generators)
        out[d] = hom_dim - ranks[d + 1] - ranks[d]
    return out


def ext_dims(a, m: Representation, n: Representation, max_degree: int) -> dict:
    """dim Ext^d(M, N) for d = 0..max_degree via a minimal resolution of M."""
    return ext_from_resolution(resolve(a, m, max_degree=max_degree + 1), n, max_degree)
