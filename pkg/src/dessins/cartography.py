"""Oriented combinatorial maps ("dessins") as permutation pairs on darts.

A dessin on n darts is a pair of permutations (rho0, rho1) of
{0, ..., n-1}.  rho0 rotates a dart counterclockwise about its origin
vertex, rho1 reverses it, and the face walk rho2 is derived from the
relation rho2 rho1 rho0 = id (rightmost factor first), i.e.
rho2 = rho0^{-1} o rho1^{-1}.  Vertices, edges and faces are the orbits
of rho0, rho1 and rho2; rho2 moves a dart forward along the boundary of
the face lying to its left.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from . import permutations as perms


class CellKind(str, Enum):
    VERTEX = "vertex"
    EDGE = "edge"
    FACE = "face"


@dataclass(frozen=True)
class CellIndex:
    """A cell of a dessin: its kind plus a dense id in 0..count-1."""

    kind: CellKind
    id: int


@dataclass(frozen=True)
class Violation:
    """One violated structural invariant, with an offending dart when
    one exists."""

    code: str
    dart: int | None
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


class InvalidDessinError(ValueError):
    """Raised by operations that require a valid dessin."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


def _check_images(name: str, images, n: int) -> None:
    if len(images) != n:
        raise ValueError(f"{name} has {len(images)} entries, expected {n}")
    for i, y in enumerate(images):
        if not isinstance(y, int) or isinstance(y, bool):
            raise ValueError(f"{name}[{i}] is not an integer")
        if not 0 <= y < n:
            raise ValueError(f"{name}[{i}] = {y} out of range 0..{n - 1}")


@dataclass(frozen=True)
class Dessin:
    """Immutable dessin; construction rejects malformed arrays, while
    group-theoretic defects (non-bijective entries, rho1 fixed points,
    intransitivity) are reported by :meth:`violations`."""

    n_darts: int
    rho0: tuple[int, ...]
    rho1: tuple[int, ...]

    def __init__(self, n_darts: int, rho0, rho1):
        if not isinstance(n_darts, int) or n_darts <= 0:
            raise ValueError("n_darts must be a positive integer")
        rho0 = tuple(rho0)
        rho1 = tuple(rho1)
        _check_images("rho0", rho0, n_darts)
        _check_images("rho1", rho1, n_darts)
        object.__setattr__(self, "n_darts", n_darts)
        object.__setattr__(self, "rho0", rho0)
        object.__setattr__(self, "rho1", rho1)

    @cached_property
    def rho2(self) -> tuple[int, ...]:
        """The derived face permutation rho0^{-1} o rho1^{-1}."""
        bad = [v for v in self.violations() if v.code.endswith("not-bijection")]
        if bad:
            raise InvalidDessinError(bad)
        return perms.compose(perms.inverse(self.rho0), perms.inverse(self.rho1))

    def violations(self) -> list[Violation]:
        """All violated dessin invariants, empty for a valid dessin."""
        out = []
        for name, p in (("rho0", self.rho0), ("rho1", self.rho1)):
            if not perms.is_permutation(p):
                seen: dict[int, int] = {}
                dart = None
                for x, y in enumerate(p):
                    if y in seen:
                        dart = x
                        break
                    seen[y] = x
                out.append(Violation(
                    f"{name}-not-bijection", dart,
                    f"{name} is not a bijection"))
        rho1_bijective = not any(v.code == "rho1-not-bijection" for v in out)
        if rho1_bijective:
            for x in range(self.n_darts):
                if self.rho1[x] == x:
                    out.append(Violation(
                        "rho1-fixed-point", x,
                        f"rho1 has fixed point at dart {x}"))
            for x in range(self.n_darts):
                if self.rho1[self.rho1[x]] != x:
                    out.append(Violation(
                        "rho1-not-involution", x,
                        f"rho1 squared moves dart {x}"))
                    break
        if not perms.are_transitive((self.rho0, self.rho1), self.n_darts):
            reached = {0}
            stack = [0]
            while stack:
                x = stack.pop()
                for p in (self.rho0, self.rho1):
                    if p[x] not in reached:
                        reached.add(p[x])
                        stack.append(p[x])
            dart = min(set(range(self.n_darts)) - reached)
            out.append(Violation(
                "not-transitive", dart,
                f"dart {dart} is not reachable from dart 0"))
        return out

    def is_valid(self) -> bool:
        return not self.violations()

    def require_valid(self) -> None:
        bad = self.violations()
        if bad:
            raise InvalidDessinError(bad)

    def _generator(self, kind: CellKind) -> tuple[int, ...]:
        if kind == CellKind.VERTEX:
            return self.rho0
        if kind == CellKind.EDGE:
            return self.rho1
        if kind == CellKind.FACE:
            return self.rho2
        raise ValueError(f"unknown cell kind {kind!r}")

    @cached_property
    def _cells(self) -> dict[CellKind, tuple[tuple[int, ...], ...]]:
        self.require_valid()
        return {k: perms.orbits(self._generator(k)) for k in CellKind}

    @cached_property
    def _cell_ids(self) -> dict[CellKind, tuple[int, ...]]:
        out = {}
        for kind, orbs in self._cells.items():
            ids = [0] * self.n_darts
            for i, orb in enumerate(orbs):
                for x in orb:
                    ids[x] = i
            out[kind] = tuple(ids)
        return out

    def cells(self, kind: CellKind) -> tuple[tuple[int, ...], ...]:
        """Orbit partition of the darts under the generator of ``kind``.

        Orbits are in generator-cycle order starting from their smallest
        dart and are indexed by position, so ids are dense and stable.
        """
        return self._cells[CellKind(kind)]

    def dart_cell(self, dart: int, kind: CellKind) -> CellIndex:
        """The cell of ``kind`` containing ``dart``."""
        kind = CellKind(kind)
        if not 0 <= dart < self.n_darts:
            raise ValueError(f"dart {dart} out of range")
        return CellIndex(kind, self._cell_ids[kind][dart])

    def genus(self) -> int:
        """Genus of the underlying closed oriented surface, from the
        Euler formula 2 - 2g = V - E + F."""
        v = len(self.cells(CellKind.VERTEX))
        e = len(self.cells(CellKind.EDGE))
        f = len(self.cells(CellKind.FACE))
        chi = v - e + f
        if chi % 2:
            raise InvalidDessinError([Violation(
                "odd-euler-characteristic", None,
                f"V - E + F = {chi} is odd")])
        return (2 - chi) // 2

    def relabeled(self, sigma) -> "Dessin":
        """Conjugate by the dart relabeling ``sigma`` (old dart x becomes
        sigma[x])."""
        sigma = tuple(sigma)
        if not perms.is_permutation(sigma) or len(sigma) != self.n_darts:
            raise ValueError("sigma must be a permutation of the darts")
        r0 = [0] * self.n_darts
        r1 = [0] * self.n_darts
        for x in range(self.n_darts):
            r0[sigma[x]] = sigma[self.rho0[x]]
            r1[sigma[x]] = sigma[self.rho1[x]]
        return Dessin(self.n_darts, r0, r1)

    def _code_from(self, start: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        label = {start: 0}
        order = [start]
        i = 0
        while i < len(order):
            x = order[i]
            i += 1
            for y in (self.rho0[x], self.rho1[x]):
                if y not in label:
                    label[y] = len(order)
                    order.append(y)
        n = self.n_darts
        r0 = [0] * n
        r1 = [0] * n
        for x in range(n):
            r0[label[x]] = label[self.rho0[x]]
            r1[label[x]] = label[self.rho1[x]]
        return tuple(r0), tuple(r1)

    @cached_property
    def canonical_code(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Lexicographically smallest breadth-first relabeling of
        (rho0, rho1) over all starting darts.  Equal codes characterize
        isomorphic dessins."""
        self.require_valid()
        return min(self._code_from(s) for s in range(self.n_darts))


def is_isomorphic(d1: Dessin, d2: Dessin) -> bool:
    """Whether two valid dessins differ only by a relabeling of darts."""
    if d1.n_darts != d2.n_darts:
        d1.require_valid()
        d2.require_valid()
        return False
    return d1.canonical_code == d2.canonical_code
