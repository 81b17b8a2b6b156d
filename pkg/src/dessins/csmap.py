"""Normalized incomplete-beta-type coordinate maps.

The basic object is

    I(a, b; t) = integral of w^(a-1) (1 - w)^(b-1) dw
                 over the straight segment from 0 to t,

with the branches of w^(a-1) and (1-w)^(b-1) continued along the path
from the real-positive determination at the start.  Real t in (1, inf)
is rejected: the path would run along the branch cut of the second
factor.  On the negative real axis the argument of w is taken to be
-pi, i.e. the integral is the continuous limit from the lower
half-plane, which is where the coordinate maps live.

A map spec normalizes by the complete integral and a unimodular
prefactor:  cs_map(spec, t) = prefactor * I(a, b; t) / B(a, b).  The
closed lower half-plane then maps onto a euclidean triangle with
interior angles a*pi at the image of 0, b*pi at the image of 1 and
(1-a-b)*pi at the image of infinity.

Quadrature: the substitution w = t*s turns I into
t^a * integral_0^1 s^(a-1) (1-t*s)^(b-1) ds.  The endpoint weight
s^(a-1) is absorbed by Gauss-Jacobi nodes; when the path passes near
w = 1 the reflection I(a,b;t) = B(a,b) - I(b,a;1-t) moves the
singularity out of the way, and for |t| > 1 the s-interval is covered
by a short geometric ladder of Gauss-Legendre panels away from the
scaled branch point.  Every panel is evaluated at n and 2n nodes; the
difference drives panel bisection within a configured split budget.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi


class CutCrossingError(ValueError):
    """The integration path would cross the branch cut on (1, inf)."""


class NonConvergenceError(RuntimeError):
    """The requested tolerance was not reached within the split budget
    or the Newton iteration failed to settle."""


class OutsideImageError(ValueError):
    """The point to invert lies outside the closed image triangle."""


@dataclass(frozen=True)
class QuadratureConfig:
    node_count: int = 48
    target_rel_error: float = 1e-12
    max_path_splits: int = 40

    def __post_init__(self):
        if not isinstance(self.node_count, int) or self.node_count < 2:
            raise ValueError("node_count must be an integer >= 2")
        if not self.target_rel_error >= 1e-13:
            raise ValueError("target_rel_error must be >= 1e-13")
        if not isinstance(self.max_path_splits, int) or self.max_path_splits < 1:
            raise ValueError("max_path_splits must be a positive integer")


DEFAULT_CONFIG = QuadratureConfig()


@dataclass(frozen=True)
class CsMapSpec:
    """Exponent pair and unimodular prefactor of a coordinate map."""

    a: float
    b: float
    prefactor: complex
    name: str = "custom"

    def __post_init__(self):
        if not 0.0 < self.a < 1.0:
            raise ValueError("exponent a must lie in (0, 1)")
        if not 0.0 < self.b <= 1.0:
            raise ValueError("exponent b must lie in (0, 1]")
        if abs(abs(complex(self.prefactor)) - 1.0) > 1e-12:
            raise ValueError("prefactor must have modulus 1")


#: unit square cell coordinate: angles pi/4, pi/4, pi/2
SQUARE_CELL = CsMapSpec(0.25, 0.25, 1j, "square_cell")
#: coordinate of a tricolored triangle pair: angles pi/6, pi/2, pi/3
TRIANGLE_COORD = CsMapSpec(1.0 / 6.0, 0.5, 1.0 + 0j, "triangle_coord")
#: square-target coordinate: angles pi/4, pi/2, pi/4
SQUARE_COORD = CsMapSpec(0.25, 0.5, 1.0 + 0j, "square_coord")

NAMED_SPECS = {
    s.name: s for s in (SQUARE_CELL, TRIANGLE_COORD, SQUARE_COORD)
}


def named_spec(name: str) -> CsMapSpec:
    try:
        return NAMED_SPECS[name]
    except KeyError:
        raise ValueError(
            f"unknown map spec {name!r}; available: "
            f"{', '.join(sorted(NAMED_SPECS))}") from None


def _arg_lower(t: complex) -> float:
    """Argument in [-pi, pi) continued from the lower half-plane: the
    negative real axis gets -pi."""
    if t.imag == 0.0 and t.real < 0.0:
        return -math.pi
    return cmath.phase(t)


def _pow_lower(t: complex, p: float) -> complex:
    """t**p with the lower-half-plane branch of the argument."""
    if t == 0:
        return complex(0.0) if p > 0 else complex("inf")
    return cmath.exp(p * complex(math.log(abs(t)), _arg_lower(t)))


@lru_cache(maxsize=None)
def _jacobi01(n: int, a: float):
    """Nodes s and weights w with sum(w * f(s)) = integral_0^1
    s^(a-1) f(s) ds for polynomial f."""
    x, w = roots_jacobi(n, 0.0, a - 1.0)
    s = 0.5 * (x + 1.0)
    w = w * 0.5 ** a
    s.setflags(write=False)
    w.setflags(write=False)
    return s, w


@lru_cache(maxsize=None)
def _legendre01(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    s = 0.5 * (x + 1.0)
    w = 0.5 * w
    s.setflags(write=False)
    w.setflags(write=False)
    return s, w


def _check_exponents(a: float, b: float) -> None:
    if not (isinstance(a, (int, float)) and 0.0 < a <= 1.0):
        raise ValueError("exponent a must lie in (0, 1]")
    if not (isinstance(b, (int, float)) and 0.0 < b <= 1.0):
        raise ValueError("exponent b must lie in (0, 1]")


def _segment_distance_to_one(t: complex) -> float:
    """Distance from the point 1 to the segment [0, t]."""
    tt = (t * t.conjugate()).real
    u = min(1.0, max(0.0, t.real / tt)) if tt > 0 else 0.0
    return abs(1.0 - u * t)


def _panel_value(kind: str, s0: float, s1: float,
                 a: float, b: float, t: complex, n: int) -> complex:
    """One panel of integral_{s0}^{s1} s^(a-1) (1 - t*s)^(b-1) ds.
    Panels of kind "gj" start at s0 = 0 and absorb the weight."""
    if kind == "gj":
        s, w = _jacobi01(n, a)
        vals = (1.0 - t * (s1 * s)) ** (b - 1.0)
        return s1 ** a * complex(w @ vals)
    s, w = _legendre01(n)
    nodes = s0 + (s1 - s0) * s
    vals = nodes ** (a - 1.0) * (1.0 - t * nodes) ** (b - 1.0)
    return (s1 - s0) * complex(w @ vals)


def _scaled_integral(a: float, b: float, t: complex,
                     cfg: QuadratureConfig) -> complex:
    """integral_0^1 s^(a-1) (1 - t*s)^(b-1) ds with adaptive panels."""
    r = abs(t)
    panels: list[tuple[str, float, float]] = []
    if r <= 1.0:
        panels.append(("gj", 0.0, 1.0))
    else:
        s_edge = 0.5 / r
        panels.append(("gj", 0.0, s_edge))
        lo = s_edge
        while lo < 1.0:
            hi = min(2.0 * lo, 1.0)
            panels.append(("gl", lo, hi))
            lo = hi
    n = cfg.node_count
    values = []
    errors = []
    for kind, s0, s1 in panels:
        coarse = _panel_value(kind, s0, s1, a, b, t, n)
        fine = _panel_value(kind, s0, s1, a, b, t, 2 * n)
        values.append(fine)
        errors.append(abs(fine - coarse))
    splits = 0
    while True:
        total = sum(values)
        err = sum(errors)
        if err <= cfg.target_rel_error * max(abs(total), 1e-300):
            return total
        if splits >= cfg.max_path_splits:
            raise NonConvergenceError(
                f"panel split budget ({cfg.max_path_splits}) exhausted; "
                f"estimated relative error {err / max(abs(total), 1e-300):.2e}")
        worst = max(range(len(panels)), key=lambda i: errors[i])
        kind, s0, s1 = panels[worst]
        mid = 0.5 * (s0 + s1)
        halves = [(kind, s0, mid), ("gl", mid, s1)]
        del panels[worst], values[worst], errors[worst]
        for kind2, a0, a1 in halves:
            coarse = _panel_value(kind2, a0, a1, a, b, t, n)
            fine = _panel_value(kind2, a0, a1, a, b, t, 2 * n)
            panels.append((kind2, a0, a1))
            values.append(fine)
            errors.append(abs(fine - coarse))
        splits += 1


_NEAR_ONE = 0.1


def incomplete_cs_integral(a: float, b: float, t,
                           cfg: QuadratureConfig | None = None) -> complex:
    """I(a, b; t) along the straight segment from 0 to t.

    The endpoint t = 1 is allowed (the integral converges to the
    complete value); real t > 1 raises CutCrossingError.
    """
    cfg = cfg or DEFAULT_CONFIG
    _check_exponents(a, b)
    t = complex(t)
    if t == 0:
        return 0j
    if t.imag == 0.0 and t.real > 1.0:
        raise CutCrossingError(
            f"t = {t.real} lies on the branch cut (1, inf)")
    if _segment_distance_to_one(t) < _NEAR_ONE:
        # reflect the troublesome end across w -> 1 - w
        return complete_beta(a, b, cfg) - incomplete_cs_integral(
            b, a, 1.0 - t, cfg)
    return _pow_lower(t, a) * _scaled_integral(a, b, t, cfg)


@lru_cache(maxsize=None)
def _beta_cached(a: float, b: float, node_count: int) -> float:
    def half(x: float, y: float) -> float:
        # integral_0^(1/2) w^(x-1) (1-w)^(y-1) dw, scaled to [0, 1]
        s, w = _jacobi01(node_count, x)
        vals = (1.0 - 0.5 * s) ** (y - 1.0)
        return 0.5 ** x * float(w @ vals)

    return half(a, b) + half(b, a)


def complete_beta(a: float, b: float,
                  cfg: QuadratureConfig | None = None) -> float:
    """B(a, b) = I(a, b; 1), split symmetrically at 1/2 so the result is
    exactly symmetric in (a, b)."""
    cfg = cfg or DEFAULT_CONFIG
    _check_exponents(a, b)
    return _beta_cached(float(a), float(b), cfg.node_count)


def cs_map(spec: CsMapSpec, t, cfg: QuadratureConfig | None = None) -> complex:
    """prefactor * I(a, b; t) / B(a, b): the normalized coordinate."""
    cfg = cfg or DEFAULT_CONFIG
    return spec.prefactor * incomplete_cs_integral(spec.a, spec.b, t, cfg) \
        / complete_beta(spec.a, spec.b, cfg)


def cs_map_derivative(spec: CsMapSpec, t,
                      cfg: QuadratureConfig | None = None) -> complex:
    """Closed-form derivative prefactor * t^(a-1) (1-t)^(b-1) / B(a, b),
    with the same branch convention as the map itself."""
    cfg = cfg or DEFAULT_CONFIG
    t = complex(t)
    if t == 0 or t == 1:
        raise ValueError(f"derivative is singular at t = {t}")
    if t.imag == 0.0 and t.real > 1.0:
        raise CutCrossingError(
            f"t = {t.real} lies on the branch cut (1, inf)")
    return spec.prefactor * _pow_lower(t, spec.a - 1.0) \
        * (1.0 - t) ** (spec.b - 1.0) / complete_beta(spec.a, spec.b, cfg)


def image_triangle(spec: CsMapSpec,
                   cfg: QuadratureConfig | None = None
                   ) -> tuple[complex, complex, complex]:
    """Vertices of the image triangle: cs_map at 0, at 1, and the limit
    along the negative real axis (the image of infinity)."""
    cfg = cfg or DEFAULT_CONFIG
    a, b = spec.a, spec.b
    if not a + b < 1.0:
        raise ValueError("image is a triangle only for a + b < 1")
    v_inf = spec.prefactor * cmath.exp(-1j * math.pi * a) \
        * complete_beta(a, 1.0 - a - b, cfg) / complete_beta(a, b, cfg)
    return 0j, complex(spec.prefactor), v_inf


def _inside_triangle(z: complex, tri, tol: float) -> bool:
    p0, p1, p2 = tri
    orient = ((p1 - p0).conjugate() * (p2 - p0)).imag
    sign = 1.0 if orient >= 0 else -1.0
    for q0, q1 in ((p0, p1), (p1, p2), (p2, p0)):
        cross = ((q1 - q0).conjugate() * (z - q0)).imag
        if sign * cross < -tol:
            return False
    return True


_GRID_SIZE = 32


@lru_cache(maxsize=None)
def _seed_grid(spec: CsMapSpec, node_count: int):
    """Forward values on a 32 x 32 grid over the lower half-plane, used
    to seed Newton inversion.  Computed once per spec and then frozen."""
    cfg = QuadratureConfig(node_count=node_count)
    xs = np.linspace(-4.0, 5.0, _GRID_SIZE)
    ys = -np.geomspace(0.015, 8.0, _GRID_SIZE)
    ts = []
    zs = []
    for y in ys:
        for x in xs:
            t = complex(x, y)
            ts.append(t)
            zs.append(cs_map(spec, t, cfg))
    ts = np.array(ts)
    zs = np.array(zs)
    ts.setflags(write=False)
    zs.setflags(write=False)
    return ts, zs


_CORNER_SNAP = 1e-12
_NEWTON_TARGET = 1e-13
_NEWTON_PROMISE = 1e-10
_MAX_ITERATIONS = 100
_MAX_RESEEDS = 5


def _newton_step(spec: CsMapSpec, t: complex, residual: complex,
                 beta_ab: float) -> complex:
    """One Newton update for cs_map(t) = z.  Near each of the three
    corners the iteration runs in a local uniformizing variable (t^a,
    (1-t)^b, or t^(a+b-1) at infinity), in which the map has a simple
    zero, so corner targets stay well conditioned."""
    a, b, pf = spec.a, spec.b, spec.prefactor
    if abs(t) < 0.2:
        u = _pow_lower(t, a)
        du = pf * (1.0 - t) ** (b - 1.0) / (a * beta_ab)
        u_new = u - residual / du
        return u_new ** (1.0 / a)
    if abs(1.0 - t) < 0.2:
        v = (1.0 - t) ** b
        dv = -pf * _pow_lower(t, a - 1.0) / (b * beta_ab)
        v_new = v - residual / dv
        return 1.0 - v_new ** (1.0 / b)
    c = a + b - 1.0
    if abs(t) > 3.0 and c < 0.0:
        q = _pow_lower(t, c)
        dq = pf * _pow_lower(t, 1.0 - b) * (1.0 - t) ** (b - 1.0) \
            / (c * beta_ab)
        q_new = q - residual / dq
        if q_new == 0:
            return complex("inf")
        # q lives in the sector arg in [0, -c*pi]; invert with the
        # principal log so t lands back in the lower half-plane
        return cmath.exp(cmath.log(q_new) / c)
    deriv = pf * _pow_lower(t, a - 1.0) * (1.0 - t) ** (b - 1.0) / beta_ab
    step = residual / deriv
    if abs(step) > 2.0:
        step *= 2.0 / abs(step)
    return t - step


def invert_cs_map(spec: CsMapSpec, z,
                  cfg: QuadratureConfig | None = None) -> complex:
    """Solve cs_map(spec, t) = z for t in the closed lower half-plane.

    The returned t satisfies |cs_map(t) - z| <= 1e-10 * max(1, |z|).
    Points outside the closed image triangle raise OutsideImageError.
    """
    cfg = cfg or DEFAULT_CONFIG
    z = complex(z)
    tri = image_triangle(spec, cfg)
    diam = max(abs(p - q) for p in tri for q in tri)
    if not _inside_triangle(z, tri, 1e-9 * diam):
        raise OutsideImageError(f"{z} is outside the image triangle")
    if abs(z - tri[0]) <= _CORNER_SNAP * diam:
        return 0j
    if abs(z - tri[1]) <= _CORNER_SNAP * diam:
        return 1.0 + 0j
    beta_ab = complete_beta(spec.a, spec.b, cfg)
    ts, zs = _seed_grid(spec, cfg.node_count)
    order = np.argsort(np.abs(zs - z))
    best_t = None
    best_r = math.inf
    for idx in order[:1 + _MAX_RESEEDS]:
        t = complex(ts[idx])
        for _ in range(_MAX_ITERATIONS):
            try:
                value = cs_map(spec, t, cfg)
            except (CutCrossingError, ValueError):
                break
            residual = value - z
            if abs(residual) < best_r:
                best_r = abs(residual)
                best_t = t
            if abs(residual) <= _NEWTON_TARGET:
                return t
            t_new = _newton_step(spec, t, residual, beta_ab)
            if not cmath.isfinite(t_new):
                break
            # keep iterates on the sheet: solutions live in the closed
            # lower half-plane, and crossing (-inf,0] or [1,inf) from
            # below changes the branch
            if t_new.imag == 0.0 and t_new.real > 1.0:
                t_new = complex(t_new.real, -1e-12)
            elif t_new.imag > 0.0 and not 0.0 < t_new.real < 1.0:
                t_new = t_new.conjugate()
            if t_new == t:
                break
            t = t_new
        if best_r <= _NEWTON_PROMISE:
            return best_t
    if best_t is not None and best_r <= _NEWTON_PROMISE:
        return best_t
    raise NonConvergenceError(
        f"Newton iteration for {z} stalled at residual {best_r:.2e}")


def triangle_to_square(z, cfg: QuadratureConfig | None = None) -> complex:
    """Conformal change of coordinate from the triangle-shaped image of
    TRIANGLE_COORD to the half-square image of SQUARE_COORD, fixing 0
    and 1 and matching the maps' shared parameter t."""
    cfg = cfg or DEFAULT_CONFIG
    t = invert_cs_map(TRIANGLE_COORD, z, cfg)
    return cs_map(SQUARE_COORD, t, cfg)
