"""Generalized brackets applied termwise to homogeneous integer polynomials,
and the multiplier scan that turns one exact solution into many bracket
solutions."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import DomainError
from .membership import FLOOR as _FLOOR_BRACKET, verify_values

FLOOR = "floor"
CEILING = "ceiling"
NEAREST = "nearest"
KINDS = (FLOOR, CEILING, NEAREST)


def bracket(kind: str, x: Fraction) -> int:
    x = Fraction(x)
    if kind == FLOOR:
        return math.floor(x)
    if kind == CEILING:
        return math.ceil(x)
    if kind == NEAREST:
        return math.floor(x + Fraction(1, 2))  # ties go up
    raise DomainError(f"unknown bracket kind {kind!r}")


def eta(kind: str, x: Fraction) -> Fraction:
    x = Fraction(x)
    return abs(x - bracket(kind, x))


@dataclass(frozen=True)
class HomPoly:
    terms: tuple  # ((coef, (e1, ..., er)), ...)

    def __post_init__(self):
        terms = tuple((int(c), tuple(int(e) for e in ex)) for c, ex in self.terms if c != 0)
        if not terms:
            raise DomainError("polynomial needs a nonzero coefficient")
        r = len(terms[0][1])
        d = sum(terms[0][1])
        for _, ex in terms:
            if len(ex) != r or sum(ex) != d or min(ex) < 0:
                raise DomainError("terms must share arity and total degree")
        object.__setattr__(self, "terms", terms)

    @property
    def arity(self) -> int:
        return len(self.terms[0][1])

    @property
    def degree(self) -> int:
        return sum(self.terms[0][1])

    @classmethod
    def diagonal(cls, coefs: Sequence[int], degree: int) -> "HomPoly":
        """sum_i coefs[i] * x_i**degree."""
        r = len(coefs)
        return cls(tuple((c, tuple(degree if j == i else 0 for j in range(r))) for i, c in enumerate(coefs)))

    def __call__(self, point) -> int:
        return sum(c * math.prod(x**e for x, e in zip(point, ex)) for c, ex in self.terms)


def _check_point(f: HomPoly, point) -> None:
    if len(point) != f.arity:
        raise DomainError(f"point has {len(point)} coordinates, polynomial has arity {f.arity}")


def bracket_poly_eval(f: HomPoly, alpha: Fraction, point, kind: str = FLOOR) -> int:
    """sum a_nu [[alpha x^nu]] over the monomials of f."""
    _check_point(f, point)
    alpha = Fraction(alpha)
    return sum(c * bracket(kind, alpha * math.prod(x**e for x, e in zip(point, ex))) for c, ex in f.terms)


def bracket_poly_error(f: HomPoly, alpha: Fraction, point, kind: str = FLOOR) -> tuple[Fraction, Fraction]:
    """(|alpha f(x) - [[alpha f]](x)|, sum |a_nu| eta(alpha x^nu)); the first never exceeds the second."""
    _check_point(f, point)
    alpha = Fraction(alpha)
    diff = abs(alpha * f(point) - bracket_poly_eval(f, alpha, point, kind))
    bound = sum(abs(c) * eta(kind, alpha * math.prod(x**e for x, e in zip(point, ex))) for c, ex in f.terms)
    return diff, bound


@dataclass
class ScanResult:
    multipliers: list
    N: int

    @property
    def count(self) -> int:
        return len(self.multipliers)

    @property
    def density(self) -> Fraction:
        return Fraction(self.count, self.N)


def check_witness(F: Sequence[HomPoly], witness) -> None:
    for j, f in enumerate(F):
        _check_point(f, witness)
        if f(witness) != 0:
            raise DomainError(f"witness is not a zero of polynomial #{j}")


def scan_multipliers(F: Sequence[HomPoly], witness, alpha: Fraction, N: int, kind: str = FLOOR) -> ScanResult:
    """All n <= N with [[alpha f_j]](n * witness) == 0 for every j."""
    if not F:
        raise DomainError("need at least one polynomial")
    witness = tuple(int(v) for v in witness)
    check_witness(F, witness)
    alpha = Fraction(alpha)
    hits = []
    for n in range(1, N + 1):
        pt = tuple(n * v for v in witness)
        if all(bracket_poly_eval(f, alpha, pt, kind) == 0 for f in F):
            hits.append(n)
    return ScanResult(hits, N)


def euler_brick_system() -> list[HomPoly]:
    """Arity 6 (k, l, m, a, b, c): k^2+l^2=a^2, k^2+m^2=b^2, l^2+m^2=c^2."""
    return [
        HomPoly.diagonal((1, 1, 0, -1, 0, 0), 2),
        HomPoly.diagonal((1, 0, 1, 0, -1, 0), 2),
        HomPoly.diagonal((0, 1, 1, 0, 0, -1), 2),
    ]


def perfect_brick_system() -> list[HomPoly]:
    """Arity 7 (k, l, m, a, b, c, d): the three face equations plus k^2+l^2+m^2=d^2."""
    return [
        HomPoly.diagonal((1, 1, 0, -1, 0, 0, 0), 2),
        HomPoly.diagonal((1, 0, 1, 0, -1, 0, 0), 2),
        HomPoly.diagonal((0, 1, 1, 0, 0, -1, 0), 2),
        HomPoly.diagonal((1, 1, 1, 0, 0, 0, -1), 2),
    ]


BRICK_IDENTITIES = ("k^2+l^2=a^2", "k^2+m^2=b^2", "l^2+m^2=c^2", "k^2+l^2+m^2=d^2")


def T_alpha_bridge(witness, alpha: Fraction, N: int) -> list[dict]:
    """Floor triples (floor(alpha (nk)^2), floor(alpha (nl)^2), floor(alpha (nm)^2))
    for the multipliers n <= N at which every bracket equation holds.

    A 7-tuple (k, l, m, a, b, c, d) must be a perfect-brick certificate; a
    6-tuple runs the three face-diagonal equations only ("pairs only").
    """
    witness = tuple(int(v) for v in witness)
    if len(witness) == 7:
        system = perfect_brick_system()
    elif len(witness) == 6:
        system = euler_brick_system()
    else:
        raise DomainError("witness must have 6 or 7 components")
    for name, f in zip(BRICK_IDENTITIES, system):
        if f(witness) != 0:
            raise DomainError(f"certificate fails {name}")
    scan = scan_multipliers(system, witness, alpha, N, FLOOR)
    out = []
    k, l, m = witness[:3]
    for n in scan.multipliers:
        vals = tuple(bracket(FLOOR, Fraction(alpha) * (n * v) ** 2) for v in (k, l, m))
        rec = verify_values(Fraction(alpha), vals, _FLOOR_BRACKET, (n * k, n * l, n * m))
        pairs_ok = all(rec.checks[lab].member for lab in ("k", "l", "m", "k+l", "l+m", "m+k"))
        out.append({"n": n, "values": vals, "record": rec, "pairs_ok": pairs_ok})
    return out
