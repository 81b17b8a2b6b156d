"""Square tilings and their subdivision into tricolored triangulations.

A square tiling is a dessin all of whose faces have four sides.  When
the corner graph is bipartite the two diagonals of every square can be
drawn, cutting each square into four triangles around a new center
vertex.  The result carries the tricolored structure: vertex labels
zero / one / infinity, edge colors blue / red / green matching the
label pair at the edge's ends, and a black/white checkerboard of faces
in which exactly the white triangles read zero -> one -> infinity
counterclockwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import permutations as perms
from .cartography import CellKind, Dessin, Violation


class Color(str, Enum):
    BLUE = "blue"
    GREEN = "green"
    RED = "red"


class Shade(str, Enum):
    BLACK = "black"
    WHITE = "white"


class VertexLabel(str, Enum):
    ZERO = "zero"
    ONE = "one"
    INFINITY = "infinity"


# canonical color for each unordered pair of end labels
_PAIR_COLOR = {
    frozenset((VertexLabel.ZERO, VertexLabel.ONE)): Color.BLUE,
    frozenset((VertexLabel.INFINITY, VertexLabel.ZERO)): Color.RED,
    frozenset((VertexLabel.ONE, VertexLabel.INFINITY)): Color.GREEN,
}

_LABEL_CYCLE = (VertexLabel.ZERO, VertexLabel.ONE, VertexLabel.INFINITY)


class NotSquareTilingError(ValueError):
    """The dessin is not a tiling by combinatorial squares."""


class NonBipartiteError(ValueError):
    """The corner graph admits no 2-coloring; ``witness`` is an odd
    closed walk (vertex ids, first equal to last)."""

    def __init__(self, witness):
        self.witness = list(witness)
        super().__init__(
            f"corner graph has an odd closed walk through {self.witness}")


class InconsistentLabelsError(ValueError):
    """Adjacent corners carry equal labels."""


@dataclass(frozen=True)
class TricoloredDessin:
    """A triangulated dessin with per-edge colors, per-face shades and
    per-vertex labels, each indexed by the dense cell ids of ``base``."""

    base: Dessin
    edge_color: tuple[Color, ...]
    face_shade: tuple[Shade, ...]
    vertex_label: tuple[VertexLabel, ...]

    def __init__(self, base, edge_color, face_shade, vertex_label):
        base.require_valid()
        edge_color = tuple(Color(c) for c in edge_color)
        face_shade = tuple(Shade(s) for s in face_shade)
        vertex_label = tuple(VertexLabel(v) for v in vertex_label)
        for kind, arr, name in (
                (CellKind.EDGE, edge_color, "edge_color"),
                (CellKind.FACE, face_shade, "face_shade"),
                (CellKind.VERTEX, vertex_label, "vertex_label")):
            want = len(base.cells(kind))
            if len(arr) != want:
                raise ValueError(
                    f"{name} has {len(arr)} entries, expected {want}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "edge_color", edge_color)
        object.__setattr__(self, "face_shade", face_shade)
        object.__setattr__(self, "vertex_label", vertex_label)


def is_square_tiling(d: Dessin) -> bool:
    """Whether every face of the (valid) dessin has exactly four sides."""
    d.require_valid()
    return all(len(f) == 4 for f in d.cells(CellKind.FACE))


def _require_square_tiling(d: Dessin) -> None:
    if not is_square_tiling(d):
        raise NotSquareTilingError("every face must have exactly 4 sides")


def corner_bipartition(d: Dessin) -> tuple[VertexLabel, ...]:
    """2-coloring of the corner graph of a square tiling.

    Deterministic: vertex 0 receives ``zero`` and colors propagate
    breadth-first, so the only other valid coloring is the global swap.
    Raises :class:`NonBipartiteError` with an odd closed walk otherwise.
    """
    _require_square_tiling(d)
    vert_id = d._cell_ids[CellKind.VERTEX]
    n_vertices = len(d.cells(CellKind.VERTEX))
    adj: list[list[int]] = [[] for _ in range(n_vertices)]
    for edge in d.cells(CellKind.EDGE):
        u = vert_id[edge[0]]
        v = vert_id[d.rho1[edge[0]]]
        adj[u].append(v)
        adj[v].append(u)
    color = [-1] * n_vertices
    parent = [-1] * n_vertices
    color[0] = 0
    queue = [0]
    i = 0
    while i < len(queue):
        u = queue[i]
        i += 1
        for v in adj[u]:
            if color[v] == -1:
                color[v] = 1 - color[u]
                parent[v] = u
                queue.append(v)
            elif color[v] == color[u]:
                raise NonBipartiteError(_odd_walk(parent, u, v))
    # the corner graph of a connected dessin is connected
    return tuple(
        VertexLabel.ZERO if c == 0 else VertexLabel.ONE for c in color)


def _odd_walk(parent, u, v):
    def chain(x):
        out = [x]
        while parent[out[-1]] != -1:
            out.append(parent[out[-1]])
        return out

    cu, cv = chain(u), chain(v)
    common = set(cu) & set(cv)
    iu = next(i for i, x in enumerate(cu) if x in common)
    iv = next(i for i, x in enumerate(cv) if x in common)
    # walk u -> lca -> v plus the closing edge (v, u); odd total length
    return cu[:iu + 1] + cv[:iv][::-1] + [u]


def refine_2x2(d: Dessin) -> Dessin:
    """Subdivide every square into a 2x2 block of squares.

    New darts per old dart e: 4e and 4e+1 are the first and second half
    of e, 4e+2 runs from the midpoint of e to the face center, 4e+3 from
    the center to the midpoint of the previous side.  The output is
    always corner-bipartite (corners and centers versus midpoints).
    """
    _require_square_tiling(d)
    n = d.n_darts
    rho2 = d.rho2
    rho2_inv = perms.inverse(rho2)
    r1 = [0] * (4 * n)
    r2 = [0] * (4 * n)
    for e in range(n):
        r2[4 * e] = 4 * e + 2
        r2[4 * e + 2] = 4 * e + 3
        r2[4 * e + 3] = 4 * rho2_inv[e] + 1
        r2[4 * e + 1] = 4 * rho2[e]
        r1[4 * e] = 4 * d.rho1[e] + 1
        r1[4 * e + 1] = 4 * d.rho1[e]
        r1[4 * e + 2] = 4 * rho2[e] + 3
        r1[4 * e + 3] = 4 * rho2_inv[e] + 2
    r0 = perms.compose(r1, perms.inverse(r2))
    return Dessin(4 * n, r0, r1)


def diagonal_subdivision(d: Dessin, labels) -> TricoloredDessin:
    """Cut every square along both diagonals.

    ``labels`` is a corner 2-coloring by {zero, one} as produced by
    :func:`corner_bipartition`.  Old sides keep their darts (3e), the
    half-diagonal from the endpoint of e to the face center is 3e+1, and
    the center back to the origin of e is 3e+2.  Face centers are
    labeled infinity, and colors and shades follow the canonical rule.
    """
    _require_square_tiling(d)
    labels = tuple(VertexLabel(x) for x in labels)
    n_vertices = len(d.cells(CellKind.VERTEX))
    if len(labels) != n_vertices:
        raise ValueError(
            f"labels has {len(labels)} entries, expected {n_vertices}")
    if any(lab == VertexLabel.INFINITY for lab in labels):
        raise InconsistentLabelsError("corner labels must be zero or one")
    vert_id = d._cell_ids[CellKind.VERTEX]
    for edge in d.cells(CellKind.EDGE):
        u, v = vert_id[edge[0]], vert_id[d.rho1[edge[0]]]
        if labels[u] == labels[v]:
            raise InconsistentLabelsError(
                f"corners {u} and {v} of edge {edge} share label "
                f"{labels[u].value}")
    n = d.n_darts
    rho2 = d.rho2
    rho2_inv = perms.inverse(rho2)
    r1 = [0] * (3 * n)
    r2 = [0] * (3 * n)
    for e in range(n):
        r2[3 * e] = 3 * e + 1
        r2[3 * e + 1] = 3 * e + 2
        r2[3 * e + 2] = 3 * e
        r1[3 * e] = 3 * d.rho1[e]
        r1[3 * e + 1] = 3 * rho2[e] + 2
        r1[3 * e + 2] = 3 * rho2_inv[e] + 1
    r0 = perms.compose(r1, perms.inverse(r2))
    out = Dessin(3 * n, r0, r1)

    out_labels = []
    for orbit in out.cells(CellKind.VERTEX):
        dart = orbit[0]
        e, r = divmod(dart, 3)
        if r == 0:
            out_labels.append(labels[vert_id[e]])
        elif r == 1:
            out_labels.append(labels[vert_id[rho2[e]]])
        else:
            out_labels.append(VertexLabel.INFINITY)
    return tricolored_from_labels(out, out_labels)


def tricolored_from_labels(base: Dessin, vertex_label) -> TricoloredDessin:
    """Assemble the canonical tricolored structure over a triangulated
    dessin whose vertices already carry one label each.

    Every edge must join two distinct labels (its color is then forced)
    and every face must see all three labels; the face is white exactly
    when its counterclockwise boundary reads zero -> one -> infinity.
    """
    base.require_valid()
    vertex_label = tuple(VertexLabel(x) for x in vertex_label)
    vert_id = base._cell_ids[CellKind.VERTEX]
    colors = []
    for edge in base.cells(CellKind.EDGE):
        u = vertex_label[vert_id[edge[0]]]
        v = vertex_label[vert_id[base.rho1[edge[0]]]]
        if u == v:
            raise InconsistentLabelsError(
                f"edge {edge} joins two vertices labeled {u.value}")
        colors.append(_PAIR_COLOR[frozenset((u, v))])
    shades = []
    for i, face in enumerate(base.cells(CellKind.FACE)):
        if len(face) != 3:
            raise ValueError(f"face {i} has {len(face)} sides, expected 3")
        seq = tuple(vertex_label[vert_id[x]] for x in face)
        if set(seq) != set(_LABEL_CYCLE):
            raise InconsistentLabelsError(
                f"face {i} does not see all three labels")
        k = seq.index(VertexLabel.ZERO)
        rotated = seq[k:] + seq[:k]
        shades.append(Shade.WHITE if rotated == _LABEL_CYCLE else Shade.BLACK)
    return TricoloredDessin(base, colors, shades, vertex_label)


def validate_tricoloring(t: TricoloredDessin) -> list[Violation]:
    """Check the tricolored invariants directly on the stored data.

    Reported: non-triangular faces, edges with a single endpoint
    (condition 1), vertices not seeing exactly two edge colors
    (condition 0), faces whose three edges are not pairwise differently
    colored (condition 2), checkerboard failures across an edge, and a
    color/label-pair correspondence that is not a bijection.  Any of the
    six color-to-label-pair bijections is accepted.
    """
    d = t.base
    out = []
    vert_id = d._cell_ids[CellKind.VERTEX]
    edge_id = d._cell_ids[CellKind.EDGE]
    face_id = d._cell_ids[CellKind.FACE]
    faces = d.cells(CellKind.FACE)
    for i, face in enumerate(faces):
        if len(face) != 3:
            out.append(Violation(
                "face-not-triangle", face[0],
                f"face {i} has {len(face)} sides"))
    if any(v.code == "face-not-triangle" for v in out):
        return out

    for i, edge in enumerate(d.cells(CellKind.EDGE)):
        u = vert_id[edge[0]]
        v = vert_id[d.rho1[edge[0]]]
        if u == v:
            out.append(Violation(
                "edge-loop", edge[0],
                f"edge {i} has both ends at vertex {u}"))

    for i, vert in enumerate(d.cells(CellKind.VERTEX)):
        seen = {t.edge_color[edge_id[x]] for x in vert}
        if len(seen) != 2:
            out.append(Violation(
                "vertex-color-count", vert[0],
                f"vertex {i} meets {len(seen)} edge colors, expected 2"))

    for i, face in enumerate(faces):
        cols = [t.edge_color[edge_id[x]] for x in face]
        if len(set(cols)) != 3:
            out.append(Violation(
                "face-colors-repeat", face[0],
                f"face {i} has edge colors "
                f"{[c.value for c in cols]}, expected all three"))

    for i, edge in enumerate(d.cells(CellKind.EDGE)):
        f1 = t.face_shade[face_id[edge[0]]]
        f2 = t.face_shade[face_id[d.rho1[edge[0]]]]
        if f1 == f2:
            out.append(Violation(
                "checkerboard", edge[0],
                f"edge {i} separates two {f1.value} faces"))

    pair_of_color: dict[Color, frozenset] = {}
    for i, edge in enumerate(d.cells(CellKind.EDGE)):
        u = t.vertex_label[vert_id[edge[0]]]
        v = t.vertex_label[vert_id[d.rho1[edge[0]]]]
        if u == v:
            continue  # already reported as edge-loop or fails below
        c = t.edge_color[edge_id[edge[0]]]
        pair = frozenset((u, v))
        if c not in pair_of_color:
            pair_of_color[c] = pair
        elif pair_of_color[c] != pair:
            out.append(Violation(
                "color-label-mismatch", edge[0],
                f"edge {i} is {c.value} but joins "
                f"{u.value}-{v.value} unlike other {c.value} edges"))
    pairs = list(pair_of_color.values())
    if len(set(pairs)) != len(pairs):
        out.append(Violation(
            "color-label-mismatch", None,
            "two colors join the same label pair"))
    return out
