"""Closed forms for weighted smooth projective curves.

Hochschild dimensions of a genus-g curve with m stacky points of weights
e_1..e_m, the weight condition, invariants of the projective companion
C -> P^1 (a curve with an action of a finite abelian group G whose quotient
stack is the weighted projective line), and the Euler characteristic
classification of weighted projective lines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm, prod
from typing import Sequence

from .errors import InvalidWeights, NonIntegerGenus


def _check_weights(weights: Sequence[int], minimum: int) -> tuple[int, ...]:
    ws = tuple(weights)
    for a in ws:
        if not isinstance(a, int) or isinstance(a, bool) or a < minimum:
            raise InvalidWeights(f"weights must be integers >= {minimum}, got {a!r}")
    return ws


@dataclass(frozen=True)
class WeightedCurveSpec:
    genus: int
    weights: tuple = ()
    points: tuple | None = None

    def __post_init__(self):
        if not isinstance(self.genus, int) or isinstance(self.genus, bool) or self.genus < 0:
            raise InvalidWeights(f"genus must be a nonnegative integer, got {self.genus!r}")
        object.__setattr__(self, "weights", _check_weights(self.weights, 2))

    @property
    def m(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class CurveHHDims:
    hh_homology: dict
    hh0: int
    hh1: int
    hh2: int
    e: int
    a: int
    r: int
    d: int

    def as_dict(self) -> dict:
        return {
            "homology": {str(k): v for k, v in sorted(self.hh_homology.items())},
            "hh0": self.hh0,
            "hh1": self.hh1,
            "hh2": self.hh2,
            "constants": {"a": self.a, "d": self.d, "e": self.e, "r": self.r},
        }


def curve_hh_dims(spec: WeightedCurveSpec) -> CurveHHDims:
    g, m = spec.genus, spec.m
    e = sum(spec.weights)
    if g == 0:
        a, d = 3, 0
    elif g == 1:
        a, d = 1, 1
    else:
        a, d = 0, 3 * g - 3
    r = min(a, m)
    homology = {-1: g, 0: 2 + e - m, 1: g}
    return CurveHHDims(homology, 1, g + a - r, d + m - r, e, a, r, d)


def weight_condition(weights: Sequence[int]) -> bool:
    """Each weight divides the lcm of the others (lcm of nothing is 1)."""
    ws = _check_weights(weights, 1)
    for i, a in enumerate(ws):
        if lcm(1, *(ws[:i] + ws[i + 1:])) % a:
            return False
    return True


@dataclass(frozen=True)
class CompanionInvariants:
    weights: tuple
    lcm: int
    degrees: tuple  # delta_i = lcm / a_i
    omega: int
    group_order: int
    genus: int | None  # None when the weight condition fails
    euler: Fraction
    fiber_sizes: tuple | None
    weight_condition: bool
    euler_class: str

    def as_dict(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "euler": str(self.euler),
            "euler_class": self.euler_class,
            "fiber_sizes": None if self.fiber_sizes is None else list(self.fiber_sizes),
            "genus": self.genus,
            "group_order": self.group_order,
            "lcm": self.lcm,
            "omega": self.omega,
            "weight_condition": self.weight_condition,
            "weights": list(self.weights),
        }


def euler_characteristic(weights: Sequence[int]) -> Fraction:
    ws = _check_weights(weights, 1)
    return 2 - len(ws) + sum((Fraction(1, a) for a in ws), Fraction(0))


def _class_of(chi: Fraction) -> str:
    if chi > 0:
        return "spherical"
    if chi == 0:
        return "parabolic"
    return "hyperbolic"


def companion_invariants(weights: Sequence[int]) -> CompanionInvariants:
    ws = _check_weights(weights, 1)
    if len(ws) < 2:
        raise InvalidWeights("the projective companion needs at least two weights")
    abar = lcm(*ws)
    degrees = tuple(abar // a for a in ws)
    omega = (len(ws) - 2) * abar - sum(degrees)
    order = prod(ws) // abar
    wc = weight_condition(ws)
    chi = euler_characteristic(ws)
    genus = fibers = None
    if wc:
        g = 1 + Fraction(prod(ws) * omega, 2 * abar * abar)
        if g.denominator != 1 or g < 0:
            raise NonIntegerGenus(f"companion genus {g} is not a nonnegative integer")
        genus = int(g)
        fibers = tuple(order // a for a in ws)
    return CompanionInvariants(ws, abar, degrees, omega, order, genus, chi, fibers, wc, _class_of(chi))


def hurwitz_check(weights: Sequence[int]) -> bool:
    """2 g_C - 2 = |G| (0 - 2) + sum (|G| / a_i)(a_i - 1) = |G| omega / lcm."""
    inv = companion_invariants(weights)
    if inv.genus is None:
        return False
    lhs = 2 * inv.genus - 2
    ramified = -2 * inv.group_order + sum(f * (a - 1) for f, a in zip(inv.fiber_sizes, inv.weights))
    return lhs == ramified and Fraction(inv.group_order * inv.omega, inv.lcm) == lhs


# classification -------------------------------------------------------------

_PLATONIC = {(2, 3, 3): "A4", (2, 3, 4): "S4", (2, 3, 5): "A5"}

_PARABOLIC = {
    (2, 2, 2, 2): {"j_invariant": "any", "group": "N x| <sigma>", "rotation_order": 2},
    (3, 3, 3): {"j_invariant": "0", "group": "N x| <phi^2>", "rotation_order": 3},
    (2, 3, 6): {"j_invariant": "0", "group": "N x| <phi>", "rotation_order": 6},
    (2, 4, 4): {"j_invariant": "1728", "group": "N x| <psi>", "rotation_order": 4},
}


@dataclass(frozen=True)
class Classification:
    weights: tuple
    euler: Fraction
    euler_class: str
    realization: dict | None = field(default=None)

    def as_dict(self) -> dict:
        return {
            "chi": str(self.euler),
            "class": self.euler_class,
            "realization": self.realization,
            "weights": list(self.weights),
        }


def euler_classify(weights: Sequence[int]) -> Classification:
    """Sign of chi = 2 - n + sum 1/a_i and, for chi >= 0, how P^1 or an
    elliptic curve realizes the weighted projective line as a quotient.

    Weights equal to 1 are ordinary points and are ignored.
    """
    ws = tuple(sorted(a for a in _check_weights(weights, 1) if a > 1))
    chi = euler_characteristic(ws)
    cls = _class_of(chi)
    real = None
    if cls == "spherical":
        if len(ws) == 0:
            real = {"curve": "P1", "group": "C1", "order": 1}
        elif len(ws) == 2 and ws[0] == ws[1]:
            real = {"curve": "P1", "group": f"C{ws[0]}", "order": ws[0]}
        elif len(ws) == 3 and ws[:2] == (2, 2):
            real = {"curve": "P1", "group": f"D{2 * ws[2]}", "order": 2 * ws[2]}
        elif ws in _PLATONIC:
            order = {"A4": 12, "S4": 24, "A5": 60}[_PLATONIC[ws]]
            real = {"curve": "P1", "group": _PLATONIC[ws], "order": order}
        # one weight, or two unequal weights: no quotient realization
    elif cls == "parabolic":
        real = {"curve": "elliptic", **_PARABOLIC[ws]}
    return Classification(ws, chi, cls, real)


def realizable_as_quotient(spec: WeightedCurveSpec) -> bool:
    """False only for P^1<y1, y2; a1, a2> with a1 != a2.

    A single stacky point of weight a is that case with weights (a, 1).
    """
    if spec.genus != 0 or spec.m > 2:
        return True
    padded = spec.weights + (1,) * (2 - spec.m)
    return padded[0] == padded[1]
