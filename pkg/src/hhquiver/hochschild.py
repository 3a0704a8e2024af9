"""Hochschild cohomology and homology dimensions of bound quiver algebras.

Three routes:

* ``hh_cohomology``: for global dimension <= 2, the cohomology of the small
  complex  k[Q0] --f--> (+)_a s(a)Ae(a) --g--> (+)_l s(r_l)Ae(r_l)  built
  from a minimal relation set.
* ``hh1_hereditary`` and ``hh_homology_acyclic``: closed formulas.
* ``hh_envelope_oracle``: Ext and Tor over A^e from a minimal projective
  bimodule resolution of A. Independent of the other two and used to check
  them on small algebras.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg, reps
from .algebra import BoundQuiverAlgebra, Relation
from .envelope import EnvelopingAlgebra
from .errors import DimensionCapExceeded, GlobalDimensionTooHigh, NotHereditary, PreconditionError
from .linalg import RationalMatrix
from .quiver import Path, PathVector, compose, connected_components

DEFAULT_ORACLE_CAP = 14


@dataclass
class HochschildReport:
    hh0: int
    hh1: int
    hh2: int
    higher_vanish: bool
    homology: dict
    method: str
    cohomology: dict = field(default_factory=dict)

    def triple(self) -> tuple[int, int, int]:
        return (self.hh0, self.hh1, self.hh2)

    def as_dict(self) -> dict:
        return {
            "hh0": self.hh0,
            "hh1": self.hh1,
            "hh2": self.hh2,
            "higher_vanish": self.higher_vanish,
            "homology": {str(k): v for k, v in sorted(self.homology.items())},
            "cohomology": {str(k): v for k, v in sorted(self.cohomology.items())},
            "method": self.method,
        }


@dataclass
class HHComplex:
    """The two maps f and g with the bases of their three terms."""

    f: RationalMatrix
    g: RationalMatrix
    c0_basis: list  # vertices
    c1_basis: list  # (arrow id, basis path of s(a)Ae(a))
    c2_basis: list  # (relation index, basis path of s(r)Ae(r))
    relations: list

    @property
    def rank_f(self) -> int:
        return linalg.rank(self.f)

    @property
    def rank_g(self) -> int:
        return linalg.rank(self.g)


def _split(p: Path, arrow_id: str):
    """Split p = q a q' at the (unique, by acyclicity) occurrence of a."""
    try:
        k = p.arrows.index(arrow_id)
    except ValueError:
        return None
    return p.arrows[:k], p.arrows[k + 1:]


def build_hh_complex(a: BoundQuiverAlgebra, check_global_dim: bool = True) -> HHComplex:
    if check_global_dim:
        gd = reps.global_dimension(a)
        if gd > 2:
            raise GlobalDimensionTooHigh(f"global dimension {gd} > 2; use the envelope oracle")
    q = a.quiver
    rels: list[Relation] = a.minimal_relations()
    c0 = list(q.vertices)
    c1 = []
    for arr in q.arrows:
        for x in a.basis_blocks.get((arr.source, arr.target), []):
            c1.append((arr.id, x))
    c2 = []
    for l, r in enumerate(rels):
        for x in a.basis_blocks.get((r.start, r.end), []):
            c2.append((l, x))
    c1_index = {key: n for n, key in enumerate(c1)}
    c2_index = {key: n for n, key in enumerate(c2)}

    fm = [[Fraction(0)] * len(c0) for _ in c1]
    for col, v in enumerate(c0):
        for arr in q.arrows:
            row = c1_index[(arr.id, q.path([arr.id]))]
            if arr.source == v:
                fm[row][col] += 1
            if arr.target == v:
                fm[row][col] -= 1

    gm = [[Fraction(0)] * len(c1) for _ in c2]
    for col, (aid, x) in enumerate(c1):
        for l, r in enumerate(rels):
            acc: dict = {}
            for p, lam in r.body.terms.items():
                sp = _split(p, aid)
                if sp is None:
                    continue
                left, right = sp
                qa = q.path(left, start=r.start)
                qb = q.path(right, start=x.end)
                path = compose(compose(qa, x), qb)
                acc[path] = acc.get(path, Fraction(0)) + lam
            if not acc:
                continue
            red = a.reduce(PathVector(acc))
            for y, c in red.terms.items():
                gm[c2_index[(l, y)]][col] += c

    return HHComplex(
        RationalMatrix(len(c1), len(c0), fm),
        RationalMatrix(len(c2), len(c1), gm),
        c0, c1, c2, rels,
    )


def hh_homology_acyclic(a: BoundQuiverAlgebra) -> dict:
    return {0: len(a.quiver.vertices)}


def hh_cohomology(a: BoundQuiverAlgebra) -> HochschildReport:
    cx = build_hh_complex(a)
    rf, rg = cx.rank_f, cx.rank_g
    hh0 = len(cx.c0_basis) - rf
    hh1 = (len(cx.c1_basis) - rg) - rf
    hh2 = len(cx.c2_basis) - rg
    return HochschildReport(hh0, hh1, hh2, True, hh_homology_acyclic(a), "complex",
                            {0: hh0, 1: hh1, 2: hh2})


def hh1_hereditary(a: BoundQuiverAlgebra) -> int:
    gd = reps.global_dimension(a)
    if gd > 1:
        raise NotHereditary(f"global dimension {gd} > 1")
    hh0 = connected_components(a.quiver)
    return hh0 - len(a.quiver.vertices) + sum(a.nu(arr.id) for arr in a.quiver.arrows)


def hh0_center_dim(a: BoundQuiverAlgebra) -> int:
    """dim Z(A): solve z x = x z for every basis element x."""
    basis = a.basis
    idx = a.basis_index
    eqs = []
    for x in basis:
        xv = PathVector({x: 1})
        rows: dict = {}
        for k, b in enumerate(basis):
            bv = PathVector({b: 1})
            diff = a.multiply(bv, xv) - a.multiply(xv, bv)
            for y, c in diff.terms.items():
                rows.setdefault(idx[y], [Fraction(0)] * len(basis))[k] += c
        eqs.extend(rows.values())
    return len(basis) - (linalg.rank(eqs) if eqs else 0)


def oracle_cap() -> int:
    raw = os.environ.get("HH_ORACLE_CAP")
    if not raw:
        return DEFAULT_ORACLE_CAP
    try:
        return int(raw)
    except ValueError:
        raise PreconditionError(f"HH_ORACLE_CAP must be an integer, got {raw!r}") from None


def hh_envelope_oracle(a: BoundQuiverAlgebra, max_degree: int = 4, cap: int | None = None) -> HochschildReport:
    """HH^n and HH_n for n <= max_degree from a minimal resolution over A^e.

    Homology uses dim Tor_n(A, A) = dim Ext^n(A, DA).
    """
    if cap is None:
        cap = oracle_cap()
    if a.total_dim > cap:
        raise DimensionCapExceeded(f"total_dim {a.total_dim} exceeds the oracle cap {cap}")
    env = EnvelopingAlgebra(a)
    diag = env.diagonal()
    res = reps.resolve(env, diag, max_degree=max_degree + 1)
    coh = reps.ext_from_resolution(res, diag, max_degree)
    hom = reps.ext_from_resolution(res, env.dual_diagonal(), max_degree)
    return HochschildReport(
        coh[0], coh.get(1, 0), coh.get(2, 0),
        all(coh[d] == 0 for d in coh if d > 2),
        hom, "envelope-oracle", coh,
    )

