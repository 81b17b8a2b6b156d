"""Ramification passports of tricolored dessins and the degree-6
barycentric rational map.

A tricolored dessin of degree d (d = number of white triangles)
ramifies over the three labels: the local degree at a vertex is half
the number of triangles around it, and the three multisets of local
degrees form the passport.  Barycentric subdivision of a triangulation
corresponds on the sphere to composition with the fixed degree-6 map

    beta = (4/27) (x^2 - x + 1)^3 / (x^2 (1 - x)^2)

which sends vertices of the triangulation to infinity, edge midpoints
to 1 and triangle centers to 0.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from . import permutations as perms
from .cartography import CellKind, Dessin
from .metric import FaceDegreeMismatch
from .tiling import Shade, TricoloredDessin, VertexLabel, tricolored_from_labels


class InconsistentPassportError(ValueError):
    """Passport data whose multisets or genus cannot belong to a map."""


@dataclass(frozen=True)
class Passport:
    """Cycle-type triple of a degree-``degree`` cover ramified over the
    three labels; each multiset is stored sorted decreasingly."""

    degree: int
    over_zero: tuple[int, ...]
    over_one: tuple[int, ...]
    over_infinity: tuple[int, ...]

    def __init__(self, degree, over_zero, over_one, over_infinity):
        object.__setattr__(self, "degree", int(degree))
        for name, val in (("over_zero", over_zero),
                          ("over_one", over_one),
                          ("over_infinity", over_infinity)):
            val = tuple(sorted((int(x) for x in val), reverse=True))
            if any(x <= 0 for x in val):
                raise ValueError(f"{name} contains a non-positive part")
            object.__setattr__(self, name, val)


def passport(t: TricoloredDessin) -> Passport:
    """Passport of a tricolored dessin: degree = number of white faces,
    local degree at a vertex = (incident face count) / 2."""
    d = t.base
    n_white = sum(1 for s in t.face_shade if s == Shade.WHITE)
    n_black = len(t.face_shade) - n_white
    if n_white != n_black:
        raise ValueError(
            f"{n_white} white and {n_black} black faces; "
            "shades do not checkerboard")
    parts: dict[VertexLabel, list[int]] = {lab: [] for lab in VertexLabel}
    for i, orbit in enumerate(d.cells(CellKind.VERTEX)):
        if len(orbit) % 2:
            raise ValueError(f"vertex {i} has odd incident face count")
        parts[t.vertex_label[i]].append(len(orbit) // 2)
    return Passport(n_white,
                    parts[VertexLabel.ZERO],
                    parts[VertexLabel.ONE],
                    parts[VertexLabel.INFINITY])


def riemann_hurwitz_genus(p: Passport) -> int:
    """Genus from the Riemann-Hurwitz formula
    2 - 2g = 2*degree - sum over all parts of (part - 1)."""
    for name in ("over_zero", "over_one", "over_infinity"):
        val = getattr(p, name)
        if sum(val) != p.degree:
            raise InconsistentPassportError(
                f"{name} sums to {sum(val)}, expected degree {p.degree}")
    excess = sum(x - 1 for val in (p.over_zero, p.over_one, p.over_infinity)
                 for x in val)
    two_g = 2 - 2 * p.degree + excess
    if two_g % 2 or two_g < 0:
        raise InconsistentPassportError(
            f"2g = {two_g} is not an even non-negative integer")
    return two_g // 2


class _SphereInfinity:
    """The point at infinity on the sphere, as a tagged singleton."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _SphereInfinity()


def barycentric_rational(b0):
    """Evaluate beta = (4/27)(b0^2 - b0 + 1)^3 / (b0^2 (1 - b0)^2).

    Rational inputs (int, Fraction) are evaluated exactly; float and
    complex inputs in floating point; any other numeric object (e.g. a
    symbolic expression) is pushed through the same formula unchanged.
    The poles 0, 1 and the input INFINITY map to INFINITY.
    """
    if b0 is INFINITY:
        return INFINITY
    if isinstance(b0, bool):
        raise TypeError("b0 must be a number")
    if isinstance(b0, (int, Fraction)):
        b0 = Fraction(b0)
        exact = True
    elif isinstance(b0, (float, complex)):
        b0 = complex(b0)
        exact = False
    else:
        exact = True  # symbolic path: rely on the object's arithmetic
    if exact:
        num = 4 * (b0 * b0 - b0 + 1) ** 3
        den = 27 * b0 * b0 * (1 - b0) ** 2
        is_zero = getattr(den, "is_zero", None)
        if is_zero is None:
            is_zero = (den == 0)
        if is_zero:
            return INFINITY
        return num / den
    try:
        num = 4 * (b0 * b0 - b0 + 1) ** 3
        den = 27 * b0 * b0 * (1 - b0) ** 2
    except OverflowError:
        return INFINITY
    if den == 0:
        return INFINITY
    val = num / den
    if not cmath.isfinite(val):
        return INFINITY
    return val


def barycentric_subdivide(t) -> TricoloredDessin:
    """Barycentric subdivision of a triangulated dessin.

    Accepts a :class:`TricoloredDessin` or a plain triangulated
    :class:`Dessin`.  Each triangle splits into six around its center;
    per old dart e the new darts are: 6e origin->mid and 6e+1 mid->end
    (the two halves of e), 6e+2 / 6e+3 the spoke mid <-> center, and
    6e+4 / 6e+5 the spoke origin <-> center.  Output labels are those of
    the composed cover: old vertices -> infinity, edge midpoints -> one,
    centers -> zero; face count and passport degree both grow sixfold
    and the genus is unchanged.
    """
    base = t.base if isinstance(t, TricoloredDessin) else t
    base.require_valid()
    for i, face in enumerate(base.cells(CellKind.FACE)):
        if len(face) != 3:
            raise FaceDegreeMismatch(
                f"face {i} has {len(face)} sides, expected 3")
    n = base.n_darts
    rho2 = base.rho2
    rho2_inv = perms.inverse(rho2)
    r1 = [0] * (6 * n)
    r2 = [0] * (6 * n)
    for e in range(n):
        # triangle (origin, mid, center) then (mid, end, center)
        r2[6 * e] = 6 * e + 2
        r2[6 * e + 2] = 6 * e + 5
        r2[6 * e + 5] = 6 * e
        r2[6 * e + 1] = 6 * rho2[e] + 4
        r2[6 * e + 4] = 6 * rho2_inv[e] + 3
        r2[6 * e + 3] = 6 * e + 1
        r1[6 * e] = 6 * base.rho1[e] + 1
        r1[6 * e + 1] = 6 * base.rho1[e]
        r1[6 * e + 2] = 6 * e + 3
        r1[6 * e + 3] = 6 * e + 2
        r1[6 * e + 4] = 6 * e + 5
        r1[6 * e + 5] = 6 * e + 4
    r0 = perms.compose(r1, perms.inverse(r2))
    out = Dessin(6 * n, r0, r1)
    _LABEL_OF_REMAINDER = {
        0: VertexLabel.INFINITY, 4: VertexLabel.INFINITY,
        1: VertexLabel.ONE, 2: VertexLabel.ONE,
        3: VertexLabel.ZERO, 5: VertexLabel.ZERO,
    }
    labels = [
        _LABEL_OF_REMAINDER[orbit[0] % 6]
        for orbit in out.cells(CellKind.VERTEX)
    ]
    return tricolored_from_labels(out, labels)
